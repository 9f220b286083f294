#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "kbcount/groebner.hpp"
#include "kbcount/intmat.hpp"
#include "kbcount/polynomial.hpp"

namespace kb {

/// Monomial parametrization z_j -> x^{A e_j}. Rows of the exponent matrix are
/// indexed by source variables, columns by target coordinates (the same layout
/// as a per-variable/per-monomial table).
struct MonomialMap {
    RingPtr source;
    std::vector<std::string> target_names;
    IntMat exponents;                       // rows = source vars, cols = targets
    std::vector<std::string> scaling_vars;  // homogenizing labels among the source vars
    std::vector<std::vector<int>> blocks;   // column groups; empty means one block

    MonomialMap(RingPtr src, std::vector<std::string> targets, IntMat A,
                std::vector<std::string> scaling = {}, std::vector<std::vector<int>> blks = {})
        : source(std::move(src)),
          target_names(std::move(targets)),
          exponents(std::move(A)),
          scaling_vars(std::move(scaling)),
          blocks(std::move(blks)) {
        if (row_count(exponents) != source->size())
            throw DimensionMismatch("exponent matrix needs one row per source variable");
        if (col_count(exponents) != target_names.size())
            throw DimensionMismatch("exponent matrix needs one column per target coordinate");
        for (const auto& row : exponents)
            for (const auto& x : row)
                if (x < 0) throw InvalidParameter("negative exponent in monomial map");
        std::set<IntVec> cols;
        for (std::size_t j = 0; j < target_names.size(); ++j)
            if (!cols.insert(column(j)).second)
                throw InvalidParameter("duplicate column in monomial map");
        for (const auto& s : scaling_vars)
            if (source->index_of(s) < 0) throw UnboundVariable(s);
        if (blocks.empty()) {
            blocks.resize(1);
            for (std::size_t j = 0; j < target_names.size(); ++j)
                blocks[0].push_back(static_cast<int>(j));
        }
    }

    std::size_t target_count() const { return target_names.size(); }

    IntVec column(std::size_t j) const {
        IntVec c(row_count(exponents));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = exponents[i][j];
        return c;
    }

    RingPtr target_ring() const { return Ring::make(target_names); }

    /// The parametrizing monomial of target j, as a polynomial over the source ring.
    Polynomial column_polynomial(std::size_t j) const {
        std::vector<std::int32_t> e(source->size());
        for (std::size_t i = 0; i < e.size(); ++i)
            e[i] = static_cast<std::int32_t>(exponents[i][j].get_si());
        return Polynomial::monomial(source, 1, Monomial(std::move(e)));
    }

    /// Assignment z_j -> x^{A e_j}, for substitution into target-ring polynomials.
    std::map<std::string, Polynomial> substitution() const {
        std::map<std::string, Polynomial> sub;
        for (std::size_t j = 0; j < target_count(); ++j)
            sub[target_names[j]] = column_polynomial(j);
        return sub;
    }
};

/// z^{m+} - z^{m-} pairs with disjoint supports.
struct BinomialIdeal {
    RingPtr ring;
    std::vector<std::pair<Monomial, Monomial>> binomials;

    Ideal to_ideal() const {
        std::vector<Polynomial> gens;
        for (const auto& [plus, minus] : binomials) {
            Polynomial g = Polynomial::monomial(ring, 1, plus);
            g -= Polynomial::monomial(ring, 1, minus);
            gens.push_back(std::move(g));
        }
        return Ideal{ring, std::move(gens)};
    }
};

namespace detail {

/// f divided by the largest power of variable v dividing every term.
inline Polynomial strip_variable(const Polynomial& f, std::size_t v) {
    std::int32_t low = 0;
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        low = first ? m[v] : std::min(low, m[v]);
        first = false;
    }
    if (low == 0) return f;
    Polynomial out = Polynomial::zero(f.ring());
    for (const auto& [m, c] : f.terms()) {
        std::vector<std::int32_t> e;
        for (std::size_t i = 0; i < m.nvars(); ++i) e.push_back(m[i]);
        e[v] -= low;
        out.add_term(c, Monomial(std::move(e)));
    }
    return out;
}

}  // namespace detail

/// Reduced GB of the toric ideal I(Y) of the map: kernel binomials saturated
/// at the product of all target variables.
///
/// When every kernel vector is degree-balanced (the all-ones vector lies in the
/// row space, as it does whenever the columns share one scaling degree) the
/// ideal is standard-graded, and each variable is saturated by stripping it
/// from a graded-revlex basis that makes it cheapest. Otherwise an auxiliary
/// variable saturates the product directly.
inline GroebnerBasis toric_ideal(const MonomialMap& m, OrderKind kind = OrderKind::DegLex,
                                 Budget* budget = nullptr) {
    RingPtr ring = m.target_ring();
    std::vector<Polynomial> gens;
    bool balanced = true;
    for (const auto& v : lattice_kernel(m.exponents)) {
        Integer sum = 0;
        std::vector<std::int32_t> plus(v.size(), 0), minus(v.size(), 0);
        for (std::size_t i = 0; i < v.size(); ++i) {
            sum += v[i];
            long x = v[i].get_si();
            if (x > 0) plus[i] = static_cast<std::int32_t>(x);
            if (x < 0) minus[i] = static_cast<std::int32_t>(-x);
        }
        if (sum != 0) balanced = false;
        Polynomial g = Polynomial::monomial(ring, 1, Monomial(std::move(plus)));
        g -= Polynomial::monomial(ring, 1, Monomial(std::move(minus)));
        gens.push_back(std::move(g));
    }
    MonomialOrder ord = MonomialOrder::simple(*ring, kind);
    if (gens.empty()) return GroebnerBasis{ring, ord, {}, true};

    if (balanced) {
        for (std::size_t i = 0; i < ring->size(); ++i) {
            std::vector<std::string> prio;
            for (std::size_t j = 0; j < ring->size(); ++j)
                if (j != i) prio.push_back(ring->name(j));
            prio.push_back(ring->name(i));
            MonomialOrder oi = MonomialOrder::with_priority(*ring, OrderKind::DegRevLex, prio);
            GroebnerBasis G = buchberger(Ideal{ring, std::move(gens)}, oi, budget);
            gens.clear();
            for (const auto& g : G.generators) gens.push_back(detail::strip_variable(g, i));
        }
        return buchberger(Ideal{ring, std::move(gens)}, ord, budget);
    }

    std::vector<std::int32_t> all(ring->size(), 1);
    Ideal sat = saturate(Ideal{ring, std::move(gens)}, Monomial(std::move(all)), budget);
    return buchberger(sat, ord, budget);
}

/// The leading-term parametrization of the 2-variable resonator family:
/// s, su, sv, su^3, svu^2, ..., su^{2n-1}, svu^{2n-2} over (s, u, v).
inline MonomialMap trapezoid_map(int n) {
    if (n < 2) throw InvalidParameter("family needs n >= 2");
    RingPtr src = Ring::make({"s", "u", "v"});
    std::vector<std::string> targets;
    IntMat A(3);
    auto col = [&](long s, long u, long v) {
        A[0].push_back(s);
        A[1].push_back(u);
        A[2].push_back(v);
        targets.push_back("z" + std::to_string(targets.size()));
    };
    col(1, 0, 0);
    for (int k = 1; k <= n; ++k) {
        col(1, 2 * k - 1, 0);
        col(1, 2 * k - 2, 1);
    }
    return MonomialMap(src, std::move(targets), std::move(A), {"s"});
}

/// The explicit binomial family generating the trapezoid toric ideal:
/// g_m = z0^2 z_m - z1^2 z_{m-2} for 3 <= m <= 2n, and
/// f_{l,m} = z_l z_m - z_{l+1} z_{m-1} (l+m odd) or z_l z_m - z_{l+2} z_{m-2}
/// (l+m even) for 2n >= m >= l+3 >= 4.
inline BinomialIdeal lemma53_generators(int n) {
    if (n < 2) throw InvalidParameter("family needs n >= 2");
    std::vector<std::string> vars;
    for (int i = 0; i <= 2 * n; ++i) vars.push_back("z" + std::to_string(i));
    RingPtr ring = Ring::make(vars);
    std::size_t nv = ring->size();

    BinomialIdeal out;
    out.ring = ring;
    auto mono = [&](std::initializer_list<std::pair<int, std::int32_t>> powers) {
        std::vector<std::int32_t> e(nv, 0);
        for (auto [i, p] : powers) e[i] += p;
        return Monomial(std::move(e));
    };
    for (int m = 3; m <= 2 * n; ++m)
        out.binomials.push_back({mono({{0, 2}, {m, 1}}), mono({{1, 2}, {m - 2, 1}})});
    for (int l = 1; l + 3 <= 2 * n; ++l)
        for (int m = l + 3; m <= 2 * n; ++m) {
            if ((l + m) % 2 == 1)
                out.binomials.push_back({mono({{l, 1}, {m, 1}}), mono({{l + 1, 1}, {m - 1, 1}})});
            else
                out.binomials.push_back({mono({{l, 1}, {m, 1}}), mono({{l + 2, 1}, {m - 2, 1}})});
        }
    return out;
}

/// Index in Z^{x-vars} of the sublattice spanned by exponent differences
/// (column minus the first column of its block, scaling rows excluded).
/// nullopt means INFINITE: the sublattice has lower rank.
inline std::optional<Integer> lattice_index(const MonomialMap& m) {
    std::set<int> scaling;
    for (const auto& s : m.scaling_vars) scaling.insert(m.source->index_of(s));
    std::vector<std::size_t> rows;
    for (std::size_t i = 0; i < m.source->size(); ++i)
        if (!scaling.count(static_cast<int>(i))) rows.push_back(i);

    IntMat diffs;
    for (const auto& blk : m.blocks) {
        if (blk.empty()) continue;
        IntVec base = m.column(blk[0]);
        for (std::size_t t = 1; t < blk.size(); ++t) {
            IntVec c = m.column(blk[t]);
            IntVec d(rows.size());
            for (std::size_t k = 0; k < rows.size(); ++k) d[k] = c[rows[k]] - base[rows[k]];
            diffs.push_back(std::move(d));
        }
    }
    if (rows.empty()) return Integer(1);
    if (diffs.empty() || mat_rank(diffs) < rows.size()) return std::nullopt;
    std::vector<Integer> sd = smith_diagonal(diffs);
    Integer idx = 1;
    for (const auto& d : sd) idx *= d;
    return abs(idx);
}

/// Generators of the fiber-product ideal: union of the factors' generators
/// over the merged ring, with each factor's homogenizing variable renamed to
/// one shared label.
inline Ideal fiber_product_generators(const std::vector<Ideal>& ideals,
                                      const std::vector<std::string>& homog_vars,
                                      const std::string& shared_name = "z0") {
    if (ideals.empty()) throw InvalidParameter("empty fiber product");
    if (ideals.size() != homog_vars.size())
        throw DimensionMismatch("one homogenizing variable per ideal required");
    if (ideals.size() == 1) return ideals[0];

    std::set<std::string> seen = {shared_name};
    std::vector<std::string> merged = {shared_name};
    for (std::size_t i = 0; i < ideals.size(); ++i) {
        if (ideals[i].ring->index_of(homog_vars[i]) < 0) throw UnboundVariable(homog_vars[i]);
        for (const auto& v : ideals[i].ring->vars()) {
            if (v == homog_vars[i]) continue;
            if (!seen.insert(v).second)
                throw VariableCollision("variable '" + v + "' appears in two factors");
            merged.push_back(v);
        }
    }
    RingPtr ring = Ring::make(merged);
    std::vector<Polynomial> gens;
    for (std::size_t i = 0; i < ideals.size(); ++i)
        for (const auto& g : ideals[i].generators)
            gens.push_back(g.relabel(ring, {{homog_vars[i], shared_name}}));
    return Ideal{ring, std::move(gens)};
}

/// Joint map of variable-disjoint factors with all scaling labels identified,
/// the direct-parametrization oracle for fiber products.
inline MonomialMap joint_map(const std::vector<MonomialMap>& maps,
                             const std::string& shared_scaling = "s") {
    if (maps.empty()) throw InvalidParameter("empty joint map");
    std::set<std::string> seen = {shared_scaling};
    std::vector<std::string> src_vars = {shared_scaling};
    for (const auto& m : maps) {
        if (m.scaling_vars.size() != 1)
            throw InvalidParameter("joint map factors need exactly one scaling variable");
        for (const auto& v : m.source->vars()) {
            if (v == m.scaling_vars[0]) continue;
            if (!seen.insert(v).second)
                throw VariableCollision("variable '" + v + "' appears in two factors");
            src_vars.push_back(v);
        }
    }
    RingPtr src = Ring::make(src_vars);
    std::vector<std::string> targets;
    IntMat A(src->size());
    std::vector<std::vector<int>> blocks;
    std::map<IntVec, int> column_index;  // equal columns are identified (shared coordinates)
    for (const auto& m : maps) {
        std::vector<int> blk;
        for (std::size_t j = 0; j < m.target_count(); ++j) {
            IntVec lifted(src->size(), 0);
            IntVec c = m.column(j);
            for (std::size_t i = 0; i < m.source->size(); ++i) {
                std::string name = m.source->name(i);
                if (name == m.scaling_vars[0]) name = shared_scaling;
                lifted[src->index_of(name)] = c[i];
            }
            auto [it, inserted] = column_index.emplace(lifted, static_cast<int>(targets.size()));
            if (inserted) {
                targets.push_back("z" + std::to_string(targets.size()));
                for (std::size_t i = 0; i < src->size(); ++i) A[i].push_back(lifted[i]);
            }
            blk.push_back(it->second);
        }
        blocks.push_back(std::move(blk));
    }
    return MonomialMap(src, std::move(targets), std::move(A), {shared_scaling}, std::move(blocks));
}

}  // namespace kb
