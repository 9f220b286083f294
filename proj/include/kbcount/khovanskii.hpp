#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "kbcount/toric.hpp"

namespace kb {

/// Semimixed input data: r blocks A_j of polynomials over a shared x-ring,
/// homogenizing labels s_j, and per-block equation counts k_j.
struct BlockFamily {
    RingPtr ring;  // the x variables
    std::vector<std::vector<Polynomial>> blocks;
    std::vector<std::string> labels;
    std::vector<int> block_sizes;

    BlockFamily(RingPtr r, std::vector<std::vector<Polynomial>> bs, std::vector<std::string> ls,
                std::vector<int> ks)
        : ring(std::move(r)), blocks(std::move(bs)), labels(std::move(ls)), block_sizes(std::move(ks)) {
        if (blocks.empty() || blocks.size() != labels.size() || blocks.size() != block_sizes.size())
            throw InvalidParameter("block, label, and size counts must agree");
        std::set<std::string> seen;
        for (const auto& l : labels) {
            if (ring->index_of(l) >= 0 || !seen.insert(l).second)
                throw VariableCollision("label '" + l + "' collides");
        }
        for (std::size_t j = 0; j < blocks.size(); ++j) {
            if (blocks[j].empty()) throw InvalidParameter("empty block");
            if (block_sizes[j] < 1) throw InvalidParameter("block size must be >= 1");
            for (const auto& h : blocks[j]) {
                if (h.is_zero()) throw ZeroPolynomial();
                require_same_ring(*ring, *h.ring());
            }
        }
    }

    /// Unmixed convenience constructor: one block, one label.
    static BlockFamily unmixed(RingPtr r, std::vector<Polynomial> gens, int k,
                               std::string label = "s") {
        return BlockFamily(std::move(r), {std::move(gens)}, {std::move(label)}, {k});
    }

    std::size_t block_count() const { return blocks.size(); }

    std::size_t generator_count() const {
        std::size_t t = 0;
        for (const auto& b : blocks) t += b.size();
        return t;
    }
};

/// The polynomials s_j * h for h in A_j, over C[s, x] with the order that
/// compares s-multidegree (DegLex) first and the x-part by the user's order.
struct ScaledGeneratorSet {
    RingPtr ext;  // labels first, then the x variables
    std::size_t num_scaling = 0;
    std::vector<Polynomial> gens;
    std::vector<int> block_of;
    MonomialOrder order;
    std::vector<Term> leading;  // cached leading terms under `order`
};

namespace detail {

/// Shift an x-ring order into the extended ring, s-block (DegLex) first.
inline MonomialOrder extend_order(const MonomialOrder& xord, std::size_t num_scaling) {
    std::vector<MonomialOrder::Block> bs;
    MonomialOrder::Block sblk;
    for (std::size_t i = 0; i < num_scaling; ++i) sblk.vars.push_back(static_cast<int>(i));
    sblk.kind = OrderKind::DegLex;
    bs.push_back(std::move(sblk));
    for (const auto& blk : xord.block_list()) {
        MonomialOrder::Block shifted;
        shifted.kind = blk.kind;
        for (int v : blk.vars) shifted.vars.push_back(v + static_cast<int>(num_scaling));
        bs.push_back(std::move(shifted));
    }
    return MonomialOrder::blocks(std::move(bs));
}

/// Remap an order on `full` to the subring `sub` (dropping absent variables).
inline MonomialOrder restrict_order(const MonomialOrder& ord, const Ring& full, const Ring& sub) {
    std::vector<MonomialOrder::Block> bs;
    for (const auto& blk : ord.block_list()) {
        MonomialOrder::Block r;
        r.kind = blk.kind;
        for (int v : blk.vars) {
            int j = sub.index_of(full.name(v));
            if (j >= 0) r.vars.push_back(j);
        }
        if (!r.vars.empty()) bs.push_back(std::move(r));
    }
    return MonomialOrder::blocks(std::move(bs));
}

}  // namespace detail

inline ScaledGeneratorSet scaled_generators(const BlockFamily& fam, const MonomialOrder& xord) {
    std::vector<std::string> vars = fam.labels;
    for (const auto& v : fam.ring->vars()) vars.push_back(v);
    RingPtr ext = Ring::make(vars);

    ScaledGeneratorSet G{ext, fam.labels.size(), {}, {},
                         detail::extend_order(xord, fam.labels.size()), {}};
    for (std::size_t j = 0; j < fam.block_count(); ++j) {
        Polynomial sj = Polynomial::var(ext, fam.labels[j]);
        for (const auto& h : fam.blocks[j]) {
            G.gens.push_back(sj * h.relabel(ext));
            G.block_of.push_back(static_cast<int>(j));
        }
    }
    for (const auto& g : G.gens) G.leading.push_back(g.leading_term(G.order));
    return G;
}

/// Non-negative solution of sum(alpha_i * exp(lt_i)) = exp(target), or nullopt.
/// The s-multidegree is a hard budget: exactly target[j] factors from block j.
/// Returns the lexicographically smallest alpha.
inline std::optional<std::vector<int>> monomial_decompose(const Monomial& target,
                                                          const std::vector<Monomial>& lts,
                                                          std::size_t num_scaling) {
    std::size_t n = target.nvars(), t = lts.size();
    std::vector<std::int64_t> rem(n);
    for (std::size_t i = 0; i < n; ++i) rem[i] = target[i];
    std::vector<int> alpha(t, 0);

    // DFS choosing alpha_i ascending: the first full solution is lex-smallest.
    auto rec = [&](auto&& self, std::size_t i) -> bool {
        if (i == t) {
            for (auto r : rem)
                if (r != 0) return false;
            return true;
        }
        std::int64_t cap = std::numeric_limits<std::int64_t>::max();
        for (std::size_t v = 0; v < n; ++v)
            if (lts[i][v] > 0) cap = std::min(cap, rem[v] / lts[i][v]);
        if (cap < 0) cap = 0;
        for (std::int64_t a = 0; a <= cap; ++a) {
            if (a > 0)
                for (std::size_t v = 0; v < n; ++v) rem[v] -= lts[i][v];
            alpha[i] = static_cast<int>(a);
            // the s-budget must stay exactly satisfiable by the remaining gens
            bool feasible = true;
            for (std::size_t v = 0; v < num_scaling; ++v)
                if (rem[v] < 0) feasible = false;
            if (feasible && self(self, i + 1)) return true;
        }
        for (std::int64_t a = cap; a > 0; --a)
            for (std::size_t v = 0; v < n; ++v) rem[v] += lts[i][v];
        alpha[i] = 0;
        return false;
    };
    if (rec(rec, 0)) return alpha;
    return std::nullopt;
}

struct SubductionStep {
    Monomial lt;               // the leading monomial that was rewritten
    Rational coeff;            // scalar on the generator product
    std::vector<int> alpha;    // generator exponents
};

struct SubductionTrace {
    Polynomial input;
    std::vector<SubductionStep> steps;
    Polynomial remainder;
    bool zero = false;
};

/// Algorithm: while f is non-constant and LT(f) factors over the generators'
/// leading terms, subtract the matching scalar product. Each step strictly
/// lowers LT(f); a violation would be an internal error and is asserted.
inline SubductionTrace subduct(const Polynomial& f, const ScaledGeneratorSet& G,
                               Budget* budget = nullptr) {
    Budget local;
    Budget& bud = budget ? *budget : local;
    std::vector<Monomial> lts;
    for (const auto& lt : G.leading) lts.push_back(lt.mono);

    SubductionTrace trace;
    trace.input = f;
    Polynomial work = f;
    while (!work.is_constant()) {
        Term lt = work.leading_term(G.order);
        auto alpha = monomial_decompose(lt.mono, lts, G.num_scaling);
        if (!alpha) break;
        bud.tick();
        Polynomial prod = Polynomial::constant(G.ext, 1);
        Rational lc = 1;
        for (std::size_t i = 0; i < G.gens.size(); ++i)
            if ((*alpha)[i] > 0) {
                prod *= G.gens[i].pow((*alpha)[i]);
                for (int k = 0; k < (*alpha)[i]; ++k) lc *= G.leading[i].coeff;
            }
        Rational c = lt.coeff / lc;
        work -= c * prod;
        trace.steps.push_back({lt.mono, c, *alpha});
        if (!work.is_zero() && !G.order.less(work.leading_monomial(G.order), lt.mono))
            throw Error("subduction step failed to lower the leading term");
    }
    trace.remainder = work;
    trace.zero = work.is_zero();
    return trace;
}

enum class Verdict { CERTIFIED, REFUTED, INCONCLUSIVE };

inline std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::CERTIFIED: return "CERTIFIED";
        case Verdict::REFUTED: return "REFUTED";
        default: return "INCONCLUSIVE";
    }
}

struct KhovanskiiCertificate {
    Verdict verdict = Verdict::INCONCLUSIVE;
    std::vector<Polynomial> toric_generators;  // relations of the leading-term map
    std::vector<SubductionTrace> traces;
    std::optional<Polynomial> witness;  // failing relation when REFUTED
    std::string reason;
};

/// The leading-term monomial map of the scaled family (columns = LT exponents).
inline MonomialMap leading_term_map(const BlockFamily& fam, const ScaledGeneratorSet& G) {
    std::vector<std::string> targets;
    IntMat A(G.ext->size());
    std::vector<std::vector<int>> blocks(fam.block_count());
    for (std::size_t i = 0; i < G.gens.size(); ++i) {
        blocks[G.block_of[i]].push_back(static_cast<int>(i));
        targets.push_back("z" + std::to_string(i));
        for (std::size_t v = 0; v < G.ext->size(); ++v) A[v].push_back(G.leading[i].mono[v]);
    }
    return MonomialMap(G.ext, std::move(targets), std::move(A), fam.labels, std::move(blocks));
}

/// Certification that the scaled generators are a Khovanskii basis: every
/// relation of the leading-term map must subduct to zero after substituting
/// the scaled generators.
inline KhovanskiiCertificate is_khovanskii(const BlockFamily& fam, const MonomialOrder& xord,
                                           Budget* budget = nullptr, bool full_diagnostics = false) {
    KhovanskiiCertificate cert;
    ScaledGeneratorSet G = scaled_generators(fam, xord);

    for (std::size_t j = 0, i0 = 0; j < fam.block_count(); i0 += fam.blocks[j].size(), ++j) {
        std::set<Monomial> lts;
        for (std::size_t t = 0; t < fam.blocks[j].size(); ++t)
            if (!lts.insert(G.leading[i0 + t].mono).second) {
                cert.verdict = Verdict::REFUTED;
                cert.reason = "duplicate leading terms inside one block";
                return cert;
            }
    }

    MonomialMap lt_map = leading_term_map(fam, G);
    GroebnerBasis toric = toric_ideal(lt_map, OrderKind::DegLex, budget);
    cert.toric_generators = toric.generators;

    std::map<std::string, Polynomial> sub;
    for (std::size_t i = 0; i < G.gens.size(); ++i) sub["z" + std::to_string(i)] = G.gens[i];

    cert.verdict = Verdict::CERTIFIED;
    for (const auto& p : toric.generators) {
        Polynomial q = p.substitute(sub);
        SubductionTrace tr = subduct(q, G, budget);
        bool ok = tr.zero;
        cert.traces.push_back(std::move(tr));
        if (!ok) {
            cert.verdict = Verdict::REFUTED;
            if (!cert.witness) {
                cert.witness = p;
                cert.reason = "relation does not subduct to zero";
            }
            if (!full_diagnostics) break;
        }
    }
    return cert;
}

inline KhovanskiiCertificate is_khovanskii(const BlockFamily& fam, OrderKind kind,
                                           Budget* budget = nullptr) {
    return is_khovanskii(fam, MonomialOrder::simple(*fam.ring, kind), budget);
}

/// Unmixed sub-family given by element indices of the single block, over the
/// subring of the x variables those elements actually use.
inline BlockFamily restrict_family(const BlockFamily& fam, const std::vector<int>& part) {
    std::set<std::size_t> used;
    for (int i : part)
        for (const auto& [m, c] : fam.blocks[0][i].terms())
            for (std::size_t v = 0; v < fam.ring->size(); ++v)
                if (m[v] > 0) used.insert(v);
    std::vector<std::string> vars;
    for (std::size_t v = 0; v < fam.ring->size(); ++v)
        if (used.count(v)) vars.push_back(fam.ring->name(v));
    RingPtr sub = Ring::make(vars);
    std::vector<Polynomial> gens;
    for (int i : part) gens.push_back(fam.blocks[0][i].relabel(sub));
    return BlockFamily::unmixed(sub, std::move(gens), fam.block_sizes[0], fam.labels[0]);
}

/// Certification of an unmixed family split into sub-families that pairwise
/// share no x variables and each contain a constant (constants may be shared
/// between parts); CERTIFIED iff every part certifies on its own variables.
inline KhovanskiiCertificate decoupled_check(const BlockFamily& fam,
                                             const std::vector<std::vector<int>>& partition,
                                             const MonomialOrder& xord, Budget* budget = nullptr) {
    if (fam.block_count() != 1)
        throw InvalidParameter("decoupled check applies to unmixed families only");
    const auto& gens = fam.blocks[0];
    std::vector<int> owner(gens.size(), -1);
    for (std::size_t p = 0; p < partition.size(); ++p)
        for (int i : partition[p]) {
            if (i < 0 || i >= static_cast<int>(gens.size()))
                throw PartitionInvalid("element index out of range");
            if (owner[i] >= 0 && !gens[i].is_constant())
                throw PartitionInvalid("non-constant element listed in two sub-families");
            owner[i] = static_cast<int>(p);
        }
    for (std::size_t i = 0; i < gens.size(); ++i)
        if (owner[i] < 0) throw PartitionInvalid("element missing from the partition");

    std::vector<std::set<std::size_t>> support(partition.size());
    for (std::size_t p = 0; p < partition.size(); ++p)
        for (int i : partition[p])
            for (const auto& [m, c] : gens[i].terms())
                for (std::size_t v = 0; v < fam.ring->size(); ++v)
                    if (m[v] > 0) support[p].insert(v);
    for (std::size_t a = 0; a < partition.size(); ++a)
        for (std::size_t b = a + 1; b < partition.size(); ++b)
            for (std::size_t v : support[a])
                if (support[b].count(v))
                    throw PartitionInvalid("sub-families share variable '" + fam.ring->name(v) + "'");
    for (const auto& part : partition) {
        bool has_constant = false;
        for (int i : part)
            if (gens[i].is_constant()) has_constant = true;
        if (!has_constant) throw PartitionInvalid("each sub-family needs a constant element");
    }

    KhovanskiiCertificate merged;
    merged.verdict = Verdict::CERTIFIED;
    for (const auto& part : partition) {
        BlockFamily sub = restrict_family(fam, part);
        MonomialOrder sord = detail::restrict_order(xord, *fam.ring, *sub.ring);
        KhovanskiiCertificate c = is_khovanskii(sub, sord, budget);
        for (auto& t : c.traces) merged.traces.push_back(std::move(t));
        for (auto& g : c.toric_generators) merged.toric_generators.push_back(std::move(g));
        if (c.verdict != Verdict::CERTIFIED) {
            merged.verdict = c.verdict;
            merged.witness = c.witness;
            merged.reason = c.reason;
            break;
        }
    }
    return merged;
}

}  // namespace kb
