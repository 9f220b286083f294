#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "kbcount/khovanskii.hpp"
#include "kbcount/polytope.hpp"

namespace kb {

namespace detail {

/// Rank over Q of the span of the given polynomials (coefficient matrix rank).
inline std::size_t rational_rank(const std::vector<Polynomial>& polys) {
    std::set<Monomial> monos;
    for (const auto& p : polys)
        for (const auto& [m, c] : p.terms()) monos.insert(m);
    std::vector<Monomial> cols(monos.begin(), monos.end());
    std::map<Monomial, std::size_t> col_of;
    for (std::size_t j = 0; j < cols.size(); ++j) col_of[cols[j]] = j;

    IntMat M;
    for (const auto& p : polys) {
        Integer den = 1;
        for (const auto& [m, c] : p.terms()) den = lcm(den, Integer(c.get_den()));
        IntVec row(cols.size(), 0);
        for (const auto& [m, c] : p.terms()) {
            Rational scaled = c * Rational(den);
            scaled.canonicalize();
            row[col_of[m]] = scaled.get_num();
        }
        M.push_back(std::move(row));
    }
    return mat_rank(M);
}

/// All multisets of `count` indices from 0..size-1, as multiplicity vectors.
inline void multisets(int size, int count, std::vector<int>& cur, std::size_t from,
                      std::vector<std::vector<int>>& out) {
    if (count == 0) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = from; i < static_cast<std::size_t>(size); ++i) {
        ++cur[i];
        multisets(size, count - 1, cur, i, out);
        --cur[i];
    }
}

}  // namespace detail

/// Newton polytopes of the equations, as a list ready for mixed_volume.
inline std::vector<LatticePolytope> newton_polytopes(const PolySystem& sys) {
    std::vector<LatticePolytope> ps;
    for (const auto& f : sys.equations) ps.push_back(newton_polytope(f));
    return ps;
}

/// Mixed volume of the equations' Newton polytopes (root bound with
/// multiplicity for torus zeros).
inline Integer bkk_bound(const PolySystem& sys) {
    if (sys.equations.size() != sys.ring->size())
        throw DimensionMismatch("square system required");
    return mixed_volume(newton_polytopes(sys));
}

/// Seeded general linear combinations: k_j equations from block j.
inline PolySystem family_system(const BlockFamily& fam, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Polynomial> eqs;
    for (std::size_t j = 0; j < fam.block_count(); ++j)
        for (int e = 0; e < fam.block_sizes[j]; ++e) {
            Polynomial f = Polynomial::zero(fam.ring);
            for (const auto& h : fam.blocks[j]) f += random_coefficient(rng) * h;
            eqs.push_back(std::move(f));
        }
    return PolySystem(fam.ring, std::move(eqs));
}

/// Solution count (with multiplicity) of one seeded general system of the
/// family, recomputed with a second seed; disagreement is surfaced, not hidden.
inline std::uint64_t generic_count(const BlockFamily& fam, std::uint64_t seed,
                                   Budget* budget = nullptr,
                                   OrderKind kind = OrderKind::DegRevLex) {
    std::size_t total = 0;
    for (int k : fam.block_sizes) total += k;
    if (total != fam.ring->size())
        throw DimensionMismatch("block sizes must sum to the variable count");

    auto run = [&](std::uint64_t s) -> std::uint64_t {
        PolySystem sys = family_system(fam, s);
        GroebnerBasis G = buchberger(Ideal{fam.ring, sys.equations},
                                     MonomialOrder::simple(*fam.ring, kind), budget);
        auto dim = quotient_dimension(G);
        if (!dim)
            throw GenericityFailure("seed " + std::to_string(s) + " gave an infinite count");
        return *dim;
    };
    std::uint64_t first = run(seed), second = run(seed + 1);
    if (first != second)
        throw GenericityFailure("seeds disagree: " + std::to_string(first) + " vs " +
                                std::to_string(second));
    return first;
}

/// Count of solutions with all coordinates nonzero: saturate at the product
/// of the variables, then count standard monomials.
inline std::optional<std::uint64_t> torus_count(const PolySystem& sys, Budget* budget = nullptr,
                                                OrderKind kind = OrderKind::DegRevLex) {
    if (sys.equations.size() != sys.ring->size())
        throw DimensionMismatch("square system required");
    std::vector<std::int32_t> all(sys.ring->size(), 1);
    Ideal sat = saturate(Ideal{sys.ring, sys.equations}, Monomial(std::move(all)), budget);
    if (sat.generators.empty()) return std::nullopt;  // whole torus
    GroebnerBasis G = buchberger(sat, MonomialOrder::simple(*sys.ring, kind), budget);
    return quotient_dimension(G);
}

/// The Newton-polytope-of-leading-terms data of a certified family: Q_j is the
/// hull of the x-part of the block's leading-term exponents.
inline std::vector<LatticePolytope> block_polytopes(const BlockFamily& fam,
                                                    const MonomialOrder& xord) {
    ScaledGeneratorSet G = scaled_generators(fam, xord);
    std::size_t nx = fam.ring->size();
    std::vector<LatticePolytope> qs;
    for (std::size_t j = 0, i0 = 0; j < fam.block_count(); i0 += fam.blocks[j].size(), ++j) {
        std::vector<IntVec> pts;
        for (std::size_t t = 0; t < fam.blocks[j].size(); ++t) {
            IntVec e(nx);
            for (std::size_t v = 0; v < nx; ++v) e[v] = G.leading[i0 + t].mono[G.num_scaling + v];
            pts.push_back(std::move(e));
        }
        qs.push_back(LatticePolytope(static_cast<int>(nx), std::move(pts)));
    }
    return qs;
}

struct KhovanskiiBound {
    KhovanskiiCertificate certificate;
    std::optional<Integer> bound;         // only when CERTIFIED
    std::optional<Integer> index;         // lattice index of the leading-term map
    bool index_flagged = false;           // Remark-2.8 divisor applies when true
};

/// Certify, then bound the count by MV(Q_1[k_1], ..., Q_r[k_r]). With a
/// decoupling partition the certificate is blockwise and the bound is the
/// product of the parts' normalized volumes.
inline KhovanskiiBound khovanskii_bound(
    const BlockFamily& fam, const MonomialOrder& xord,
    const std::optional<std::vector<std::vector<int>>>& partition = std::nullopt,
    Budget* budget = nullptr) {
    std::size_t total = 0;
    for (int k : fam.block_sizes) total += k;
    if (total != fam.ring->size())
        throw DimensionMismatch("block sizes must sum to the variable count");

    KhovanskiiBound out;
    if (partition) {
        out.certificate = decoupled_check(fam, *partition, xord, budget);
        if (out.certificate.verdict == Verdict::CERTIFIED) {
            Integer prod = 1, idx = 1;
            for (const auto& part : *partition) {
                BlockFamily sub = restrict_family(fam, part);
                if (sub.ring->size() == 0) continue;
                MonomialOrder sord = detail::restrict_order(xord, *fam.ring, *sub.ring);
                BlockFamily scoped(sub.ring, sub.blocks, sub.labels,
                                   {static_cast<int>(sub.ring->size())});
                prod *= block_polytopes(scoped, sord)[0].normalized_volume();
                ScaledGeneratorSet G = scaled_generators(scoped, sord);
                auto sub_idx = lattice_index(leading_term_map(scoped, G));
                if (!sub_idx) {
                    out.index.reset();
                    out.index_flagged = true;
                    out.bound = prod;  // partial; flagged below
                    idx = 0;
                } else if (idx != 0) {
                    idx *= *sub_idx;
                }
            }
            out.bound = prod;
            if (idx != 0) {
                out.index = idx;
                out.index_flagged = idx != 1;
            }
        }
        return out;
    }

    out.certificate = is_khovanskii(fam, xord, budget);
    ScaledGeneratorSet G = scaled_generators(fam, xord);
    auto idx = lattice_index(leading_term_map(fam, G));
    if (idx) {
        out.index = *idx;
        out.index_flagged = (*idx != 1);
    } else {
        out.index_flagged = true;
    }
    if (out.certificate.verdict == Verdict::CERTIFIED) {
        std::vector<int> ks = fam.block_sizes;
        out.bound = mv_with_multiplicity(block_polytopes(fam, xord), ks);
    }
    return out;
}

/// dim of the multigraded piece V_1^{a_1} ... V_r^{a_r} (rank of all a-fold
/// block products over Q).
inline std::size_t hilbert_function(const BlockFamily& fam, const std::vector<int>& alpha,
                                    std::size_t product_budget = 200000) {
    if (alpha.size() != fam.block_count())
        throw DimensionMismatch("one multidegree entry per block required");
    std::vector<std::vector<std::vector<int>>> choices(fam.block_count());
    std::size_t total = 1;
    for (std::size_t j = 0; j < fam.block_count(); ++j) {
        if (alpha[j] < 0) throw InvalidParameter("negative multidegree");
        std::vector<int> cur(fam.blocks[j].size(), 0);
        detail::multisets(static_cast<int>(fam.blocks[j].size()), alpha[j], cur, 0, choices[j]);
        total *= choices[j].size();
        if (total > product_budget) throw ResourceLimit("multidegree too large");
    }
    std::vector<Polynomial> products;
    std::vector<std::size_t> pick(fam.block_count(), 0);
    while (true) {
        Polynomial p = Polynomial::constant(fam.ring, 1);
        for (std::size_t j = 0; j < fam.block_count(); ++j)
            for (std::size_t i = 0; i < fam.blocks[j].size(); ++i)
                if (choices[j][pick[j]][i] > 0) p *= fam.blocks[j][i].pow(choices[j][pick[j]][i]);
        products.push_back(std::move(p));
        std::size_t j = 0;
        while (j < fam.block_count() && ++pick[j] >= choices[j].size()) pick[j++] = 0;
        if (j == fam.block_count()) break;
    }
    return detail::rational_rank(products);
}

/// Same dimension for the initial family: distinct products of the leading
/// monomials (the initial algebra's multigraded piece).
inline std::size_t hilbert_function_initial(const BlockFamily& fam, const std::vector<int>& alpha,
                                            const MonomialOrder& xord,
                                            std::size_t product_budget = 200000) {
    if (alpha.size() != fam.block_count())
        throw DimensionMismatch("one multidegree entry per block required");
    std::vector<std::vector<Monomial>> lts(fam.block_count());
    for (std::size_t j = 0; j < fam.block_count(); ++j)
        for (const auto& h : fam.blocks[j]) lts[j].push_back(h.leading_monomial(xord));

    std::vector<std::vector<std::vector<int>>> choices(fam.block_count());
    std::size_t total = 1;
    for (std::size_t j = 0; j < fam.block_count(); ++j) {
        std::vector<int> cur(lts[j].size(), 0);
        detail::multisets(static_cast<int>(lts[j].size()), alpha[j], cur, 0, choices[j]);
        total *= choices[j].size();
        if (total > product_budget) throw ResourceLimit("multidegree too large");
    }
    std::set<Monomial> seen;
    std::vector<std::size_t> pick(fam.block_count(), 0);
    while (true) {
        Monomial m(fam.ring->size());
        for (std::size_t j = 0; j < fam.block_count(); ++j)
            for (std::size_t i = 0; i < lts[j].size(); ++i)
                if (choices[j][pick[j]][i] > 0) m = m * lts[j][i].pow(choices[j][pick[j]][i]);
        seen.insert(m);
        std::size_t j = 0;
        while (j < fam.block_count() && ++pick[j] >= choices[j].size()) pick[j++] = 0;
        if (j == fam.block_count()) break;
    }
    return seen.size();
}

/// Evidence probe for generic injectivity of the parametrization: fiber
/// cardinality of the map over random rational base points. Requires each
/// block's base element h_{j,0} to be a constant (true for all families in
/// scope); the fiber ideal is then { h(x) = h(x0) }.
inline std::vector<std::uint64_t> injectivity_probe(const BlockFamily& fam, std::uint64_t seed,
                                                    int trials, Budget* budget = nullptr) {
    if (trials < 1) throw InvalidParameter("need at least one trial");
    for (const auto& blk : fam.blocks)
        if (!blk[0].is_constant())
            throw InvalidParameter("probe requires a constant base element per block");
    std::mt19937_64 rng(seed);
    std::vector<std::uint64_t> sizes;
    for (int t = 0; t < trials; ++t) {
        std::map<std::string, Polynomial> point;
        for (const auto& v : fam.ring->vars())
            point[v] = Polynomial::constant(fam.ring, random_coefficient(rng));
        std::vector<Polynomial> gens;
        for (const auto& blk : fam.blocks)
            for (const auto& h : blk) {
                if (h.is_constant()) continue;
                gens.push_back(h - h.substitute(point));
            }
        GroebnerBasis G = buchberger(Ideal{fam.ring, gens},
                                     MonomialOrder::simple(*fam.ring, OrderKind::DegRevLex), budget);
        auto dim = quotient_dimension(G);
        if (!dim) throw GenericityFailure("fiber is positive-dimensional");
        sizes.push_back(*dim);
    }
    return sizes;
}

}  // namespace kb
