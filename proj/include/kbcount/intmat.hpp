#pragma once

#include <cstdlib>
#include <vector>

#include "kbcount/rational.hpp"

namespace kb {

using IntVec = std::vector<Integer>;
using IntMat = std::vector<IntVec>;  // row-major

inline std::size_t row_count(const IntMat& A) { return A.size(); }
inline std::size_t col_count(const IntMat& A) { return A.empty() ? 0 : A[0].size(); }

inline IntVec mat_apply(const IntMat& A, const IntVec& v) {
    IntVec out(row_count(A), 0);
    for (std::size_t i = 0; i < row_count(A); ++i)
        for (std::size_t j = 0; j < col_count(A); ++j) out[i] += A[i][j] * v[j];
    return out;
}

inline std::size_t mat_rank(IntMat A) {
    std::size_t rows = row_count(A), cols = col_count(A);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && A[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(A[rank], A[pivot]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            if (A[r][c] == 0) continue;
            // fraction-free elimination
            Integer a = A[rank][c], b = A[r][c];
            for (std::size_t j = c; j < cols; ++j) A[r][j] = A[r][j] * a - A[rank][j] * b;
        }
        ++rank;
    }
    return rank;
}

/// Z-basis of ker(A) for A: Z^cols -> Z^rows, via unimodular column reduction
/// (column-style Hermite elimination with a tracked transform).
inline std::vector<IntVec> lattice_kernel(const IntMat& A) {
    std::size_t rows = row_count(A), cols = col_count(A);
    IntMat M = A;
    // V: cols x cols identity, updated by the same column operations
    IntMat V(cols, IntVec(cols, 0));
    for (std::size_t i = 0; i < cols; ++i) V[i][i] = 1;

    auto col_swap = [&](std::size_t a, std::size_t b) {
        for (std::size_t r = 0; r < rows; ++r) std::swap(M[r][a], M[r][b]);
        for (std::size_t r = 0; r < cols; ++r) std::swap(V[r][a], V[r][b]);
    };
    auto col_addmul = [&](std::size_t dst, std::size_t src, const Integer& f) {
        for (std::size_t r = 0; r < rows; ++r) M[r][dst] += f * M[r][src];
        for (std::size_t r = 0; r < cols; ++r) V[r][dst] += f * V[r][src];
    };
    auto col_neg = [&](std::size_t c) {
        for (std::size_t r = 0; r < rows; ++r) M[r][c] = -M[r][c];
        for (std::size_t r = 0; r < cols; ++r) V[r][c] = -V[r][c];
    };

    std::size_t lead = 0;
    for (std::size_t r = 0; r < rows && lead < cols; ++r) {
        // gcd-reduce row r across columns lead..cols-1
        while (true) {
            std::size_t nonzero = cols;
            for (std::size_t c = lead; c < cols; ++c)
                if (M[r][c] != 0 && (nonzero == cols || abs(M[r][c]) < abs(M[r][nonzero])))
                    nonzero = c;
            if (nonzero == cols) break;  // row is zero on this block
            col_swap(lead, nonzero);
            if (M[r][lead] < 0) col_neg(lead);
            bool cleared = true;
            for (std::size_t c = lead + 1; c < cols; ++c) {
                if (M[r][c] == 0) continue;
                Integer q = M[r][c] / M[r][lead];  // truncated division
                col_addmul(c, lead, -q);
                if (M[r][c] != 0) cleared = false;
            }
            if (cleared) {
                ++lead;
                break;
            }
        }
    }
    std::vector<IntVec> basis;
    for (std::size_t c = lead; c < cols; ++c) {
        IntVec v(cols);
        for (std::size_t r = 0; r < cols; ++r) v[r] = V[r][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Diagonal of the Smith normal form (nonzero entries only, in division order).
inline std::vector<Integer> smith_diagonal(IntMat A) {
    std::size_t rows = row_count(A), cols = col_count(A);
    std::vector<Integer> diag;
    std::size_t t = 0;
    while (t < rows && t < cols) {
        // find smallest nonzero entry in the trailing block
        std::size_t pi = rows, pj = cols;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (A[i][j] != 0 && (pi == rows || abs(A[i][j]) < abs(A[pi][pj]))) {
                    pi = i;
                    pj = j;
                }
        if (pi == rows) break;
        std::swap(A[t], A[pi]);
        for (std::size_t i = 0; i < rows; ++i) std::swap(A[i][t], A[i][pj]);
        if (A[t][t] < 0)
            for (std::size_t j = t; j < cols; ++j) A[t][j] = -A[t][j];

        bool dirty = false;
        for (std::size_t i = t + 1; i < rows; ++i) {
            if (A[i][t] == 0) continue;
            Integer q = A[i][t] / A[t][t];
            for (std::size_t j = t; j < cols; ++j) A[i][j] -= q * A[t][j];
            if (A[i][t] != 0) dirty = true;
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
            if (A[t][j] == 0) continue;
            Integer q = A[t][j] / A[t][t];
            for (std::size_t i = t; i < rows; ++i) A[i][j] -= q * A[i][t];
            if (A[t][j] != 0) dirty = true;
        }
        if (dirty) continue;  // re-pivot on the smaller remainders

        // divisibility condition: pivot must divide every trailing entry
        bool fixed = false;
        for (std::size_t i = t + 1; i < rows && !fixed; ++i)
            for (std::size_t j = t + 1; j < cols && !fixed; ++j)
                if (A[i][j] % A[t][t] != 0) {
                    for (std::size_t jj = t; jj < cols; ++jj) A[t][jj] += A[i][jj];
                    fixed = true;
                }
        if (fixed) continue;

        diag.push_back(A[t][t]);
        ++t;
    }
    return diag;
}

}  // namespace kb
