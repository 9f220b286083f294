#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "kbcount/polynomial.hpp"

namespace kb {

/// Reduction-step budget shared across one computation. Desk-scale guard.
struct Budget {
    std::uint64_t max_steps = 1'000'000;
    std::uint64_t used = 0;

    void tick(std::uint64_t n = 1) {
        used += n;
        if (used > max_steps)
            throw ResourceLimit("reduction budget exceeded (" + std::to_string(max_steps) + " steps)");
    }
};

struct Ideal {
    RingPtr ring;
    std::vector<Polynomial> generators;

    Ideal() = default;
    Ideal(RingPtr r, std::vector<Polynomial> gens)
        : ring(std::move(r)), generators(std::move(gens)) {
        for (const auto& g : generators) require_same_ring(*ring, *g.ring());
    }
};

struct GroebnerBasis {
    RingPtr ring;
    MonomialOrder order;
    std::vector<Polynomial> generators;  // monic, sorted by leading monomial ascending
    bool reduced = false;
};

/// Remainder of the division algorithm: no term of the result is divisible by
/// any leading monomial of G. Zero iff p lies in the ideal (for a GB).
inline Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& basis,
                              const MonomialOrder& ord, Budget* budget = nullptr) {
    struct Reducer {
        const Polynomial* poly;
        Monomial lm;
        Rational lc;
    };
    std::vector<Reducer> reducers;
    reducers.reserve(basis.size());
    for (const auto& g : basis)
        if (!g.is_zero()) {
            Term lt = g.leading_term(ord);
            reducers.push_back({&g, lt.mono, lt.coeff});
        }

    Polynomial work = p;
    Polynomial remainder = Polynomial::zero(p.ring());
    Budget local;
    Budget& bud = budget ? *budget : local;
    while (!work.is_zero()) {
        Term lt = work.leading_term(ord);
        const Reducer* hit = nullptr;
        for (const auto& r : reducers)
            if (r.lm.divides(lt.mono)) {
                hit = &r;
                break;
            }
        if (hit) {
            bud.tick();
            work -= hit->poly->scaled_shift(lt.coeff / hit->lc, hit->lm.divide_into(lt.mono));
        } else {
            remainder.add_term(lt.coeff, lt.mono);
            Polynomial t = Polynomial::monomial(work.ring(), lt.coeff, lt.mono);
            work -= t;
        }
    }
    return remainder;
}

inline Polynomial normal_form(const Polynomial& p, const GroebnerBasis& G,
                              Budget* budget = nullptr) {
    return normal_form(p, G.generators, G.order, budget);
}

namespace detail {

struct SPair {
    std::int64_t degree;  // lcm degree: normal selection strategy
    int i, j;
    bool operator<(const SPair& o) const {
        if (degree != o.degree) return degree < o.degree;
        if (i != o.i) return i < o.i;
        return j < o.j;
    }
};

}  // namespace detail

/// Buchberger's algorithm with the coprime and chain criteria, normal pair
/// selection, deterministic tie-breaks, and final inter-reduction.
inline GroebnerBasis buchberger(const Ideal& I, const MonomialOrder& ord,
                                Budget* budget = nullptr) {
    Budget local;
    Budget& bud = budget ? *budget : local;

    std::vector<Polynomial> G;
    std::vector<Monomial> lm;
    for (const auto& g : I.generators)
        if (!g.is_zero()) {
            G.push_back(g.monic(ord));
            lm.push_back(G.back().leading_monomial(ord));
        }

    std::set<detail::SPair> pending;
    std::set<std::pair<int, int>> done;
    auto push_pairs = [&](int j) {
        for (int i = 0; i < j; ++i)
            pending.insert({lm[i].lcm(lm[j]).degree(), i, j});
    };
    for (int j = 0; j < static_cast<int>(G.size()); ++j) push_pairs(j);

    while (!pending.empty()) {
        auto [deg, i, j] = *pending.begin();
        pending.erase(pending.begin());
        done.insert({i, j});

        if (lm[i].coprime(lm[j])) continue;  // Buchberger's first criterion
        Monomial l = lm[i].lcm(lm[j]);
        bool chained = false;  // second (chain) criterion
        for (int k = 0; k < static_cast<int>(G.size()) && !chained; ++k) {
            if (k == i || k == j || !lm[k].divides(l)) continue;
            auto key = [](int a, int b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
            if (done.count(key(i, k)) && done.count(key(j, k))) chained = true;
        }
        if (chained) continue;

        Polynomial spoly = G[i].scaled_shift(1, lm[i].divide_into(l)) -
                           G[j].scaled_shift(1, lm[j].divide_into(l));
        Polynomial r = normal_form(spoly, G, ord, &bud);
        if (!r.is_zero()) {
            G.push_back(r.monic(ord));
            lm.push_back(G.back().leading_monomial(ord));
            push_pairs(static_cast<int>(G.size()) - 1);
        }
    }

    // minimalize: drop generators whose LM is divisible by another's
    std::vector<int> keep;
    for (int i = 0; i < static_cast<int>(G.size()); ++i) {
        bool redundant = false;
        for (int j = 0; j < static_cast<int>(G.size()); ++j) {
            if (i == j || !lm[j].divides(lm[i])) continue;
            if (lm[i] == lm[j] && j > i) continue;  // equal LMs: keep the earliest
            redundant = true;
            break;
        }
        if (!redundant) keep.push_back(i);
    }
    std::vector<Polynomial> minimal;
    for (int i : keep) minimal.push_back(G[i]);

    // tail-reduce each element against the others
    std::vector<Polynomial> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Polynomial> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        reduced.push_back(normal_form(minimal[i], others, ord, &bud).monic(ord));
    }
    std::erase_if(reduced, [](const Polynomial& p) { return p.is_zero(); });
    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
        return ord.less(a.leading_monomial(ord), b.leading_monomial(ord));
    });
    return GroebnerBasis{I.ring, ord, std::move(reduced), true};
}

/// Number of standard monomials (staircase count). nullopt means INFINITE.
/// For a zero-dimensional ideal this is the solution count with multiplicity.
inline std::optional<std::uint64_t> quotient_dimension(const GroebnerBasis& G) {
    const std::size_t n = G.ring->size();
    std::vector<Monomial> lms;
    for (const auto& g : G.generators) lms.push_back(g.leading_monomial(G.order));
    for (const auto& m : lms)
        if (m.is_one()) return 0;  // unit ideal

    // finite iff each variable has a pure-power leading monomial
    std::vector<std::int32_t> bound(n, -1);
    for (const auto& m : lms) {
        int support = -1;
        bool pure = true;
        for (std::size_t v = 0; v < n; ++v)
            if (m[v] > 0) {
                if (support >= 0) pure = false;
                support = static_cast<int>(v);
            }
        if (pure && support >= 0)
            if (bound[support] < 0 || m[support] < bound[support]) bound[support] = m[support];
    }
    if (n == 0) return G.generators.empty() ? 1 : 0;
    for (std::size_t v = 0; v < n; ++v)
        if (bound[v] < 0) return std::nullopt;

    std::uint64_t box = 1;
    for (std::size_t v = 0; v < n; ++v) {
        box *= static_cast<std::uint64_t>(bound[v]);
        if (box > 50'000'000ULL) throw ResourceLimit("staircase box too large");
    }

    std::uint64_t count = 0;
    std::vector<std::int32_t> e(n, 0);
    while (true) {
        Monomial m{std::vector<std::int32_t>(e)};
        bool standard = true;
        for (const auto& l : lms)
            if (l.divides(m)) {
                standard = false;
                break;
            }
        if (standard) ++count;
        std::size_t v = 0;
        while (v < n && ++e[v] >= bound[v]) e[v++] = 0;
        if (v == n) break;
    }
    return count;
}

/// Generators of I intersected with the subring omitting drop_vars.
inline Ideal eliminate(const Ideal& I, const std::vector<std::string>& drop_vars,
                       Budget* budget = nullptr) {
    std::vector<int> drop;
    for (const auto& name : drop_vars) {
        int i = I.ring->index_of(name);
        if (i < 0) throw UnboundVariable(name);
        drop.push_back(i);
    }
    if (drop.empty()) return I;
    GroebnerBasis G = buchberger(I, MonomialOrder::elimination(*I.ring, drop), budget);
    std::vector<Polynomial> kept;
    for (const auto& g : G.generators) {
        bool touches = false;
        for (const auto& [m, c] : g.terms())
            for (int v : drop)
                if (m[v] > 0) touches = true;
        if (!touches) kept.push_back(g);
    }
    return Ideal{I.ring, std::move(kept)};
}

/// I : m^infinity via one auxiliary variable t, the ideal I + (t*m - 1), and
/// elimination of t.
inline Ideal saturate(const Ideal& I, const Monomial& m, Budget* budget = nullptr) {
    if (m.is_one()) throw InvalidParameter("saturation by the unit monomial");
    std::string t = "_t";
    while (I.ring->index_of(t) >= 0) t += "_";
    std::vector<std::string> vars = I.ring->vars();
    vars.push_back(t);
    RingPtr ext = Ring::make(vars);

    std::vector<Polynomial> gens;
    for (const auto& g : I.generators) gens.push_back(g.relabel(ext));
    Polynomial tm = Polynomial::var(ext, t);
    for (std::size_t i = 0; i < I.ring->size(); ++i)
        if (m[i] > 0) tm *= Polynomial::var(ext, I.ring->name(i)).pow(m[i]);
    gens.push_back(tm - Polynomial::constant(ext, 1));

    Ideal elim = eliminate(Ideal{ext, std::move(gens)}, {t}, budget);
    std::vector<Polynomial> back;
    for (const auto& g : elim.generators) back.push_back(g.relabel(I.ring));
    return Ideal{I.ring, std::move(back)};
}

/// Ideal membership via a (re)computed Groebner basis.
inline bool ideal_contains(const GroebnerBasis& G, const Polynomial& p, Budget* budget = nullptr) {
    return normal_form(p, G, budget).is_zero();
}

/// Equality of ideals by mutual membership of generators.
inline bool ideals_equal(const Ideal& A, const Ideal& B, Budget* budget = nullptr) {
    require_same_ring(*A.ring, *B.ring);
    MonomialOrder ord = MonomialOrder::deglex(*A.ring);
    GroebnerBasis GA = buchberger(A, ord, budget);
    GroebnerBasis GB = buchberger(B, ord, budget);
    for (const auto& g : B.generators)
        if (!ideal_contains(GA, g, budget)) return false;
    for (const auto& g : A.generators)
        if (!ideal_contains(GB, g, budget)) return false;
    return true;
}

}  // namespace kb
