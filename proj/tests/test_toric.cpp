#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "kbcount/toric.hpp"

using namespace kb;

namespace {

Polynomial parse(const RingPtr& r, const std::string& s) { return Polynomial::parse(r, s); }

/// Small random one-scaling-label map over (s?, x) with a constant column.
MonomialMap random_factor(std::mt19937_64& rng, const std::string& s, const std::string& x,
                          int extra_cols) {
    RingPtr src = Ring::make({s, x});
    IntMat A(2);
    std::vector<std::string> targets;
    std::set<long> used;
    A[0].push_back(1);
    A[1].push_back(0);
    targets.push_back(x + "c0");
    used.insert(0);
    std::uniform_int_distribution<long> expd(1, 5);
    while (static_cast<int>(targets.size()) < extra_cols + 1) {
        long e = expd(rng);
        if (!used.insert(e).second) continue;
        A[0].push_back(1);
        A[1].push_back(e);
        targets.push_back(x + "c" + std::to_string(targets.size()));
    }
    return MonomialMap(src, std::move(targets), std::move(A), {s});
}

}  // namespace

TEST_CASE("trapezoid map layout") {
    MonomialMap m = trapezoid_map(2);
    CHECK(m.target_count() == 5);
    CHECK(m.column(3) == IntVec{1, 3, 0});  // s u^3
    CHECK(m.column(4) == IntVec{1, 2, 1});  // s u^2 v
    CHECK(m.column_polynomial(1) == parse(m.source, "s*u"));
    CHECK_THROWS_AS(trapezoid_map(1), InvalidParameter);
}

TEST_CASE("map validation") {
    RingPtr src = Ring::make({"s", "x"});
    CHECK_THROWS_AS(MonomialMap(src, {"z0", "z1"}, {{1, 1}, {0, 0}}, {"s"}), InvalidParameter);
    CHECK_THROWS_AS(MonomialMap(src, {"z0"}, {{1}, {0}}, {"t"}), UnboundVariable);
    CHECK_THROWS_AS(MonomialMap(src, {"z0", "z1"}, {{1}, {0}}, {"s"}), DimensionMismatch);
}

TEST_CASE("explicit binomial family counts") {
    CHECK(lemma53_generators(2).binomials.size() == 3);
    CHECK(lemma53_generators(3).binomials.size() == 10);
    CHECK(lemma53_generators(4).binomials.size() == 21);
}

TEST_CASE("binomial family vanishes on the parametrization") {
    for (int n = 2; n <= 4; ++n) {
        MonomialMap m = trapezoid_map(n);
        auto sub = m.substitution();
        for (const auto& g : lemma53_generators(n).to_ideal().generators)
            CHECK(g.substitute(sub).is_zero());
    }
}

TEST_CASE("toric ideal equals the explicit binomial family") {
    for (int n = 2; n <= 3; ++n) {
        GroebnerBasis G = toric_ideal(trapezoid_map(n));
        Ideal L = lemma53_generators(n).to_ideal();
        CHECK(ideals_equal(Ideal{G.ring, G.generators}, L));
    }
}

TEST_CASE("toric ideal agrees with graph-ideal elimination") {
    MonomialMap m = trapezoid_map(2);
    std::vector<std::string> vars = m.source->vars();
    for (const auto& t : m.target_names) vars.push_back(t);
    RingPtr big = Ring::make(vars);
    std::vector<Polynomial> gens;
    for (std::size_t j = 0; j < m.target_count(); ++j)
        gens.push_back(Polynomial::var(big, m.target_names[j]) -
                       m.column_polynomial(j).relabel(big));
    Ideal graph = eliminate(Ideal{big, std::move(gens)}, m.source->vars());
    RingPtr tgt = m.target_ring();
    std::vector<Polynomial> back;
    for (const auto& g : graph.generators) back.push_back(g.relabel(tgt));
    GroebnerBasis G = toric_ideal(m);
    CHECK(ideals_equal(Ideal{tgt, back}, Ideal{G.ring, G.generators}));
}

TEST_CASE("lattice index of small maps") {
    // (s, s x, s y): differences span Z^2
    RingPtr sxy = Ring::make({"s", "x", "y"});
    MonomialMap full(sxy, {"z0", "z1", "z2"}, {{1, 1, 1}, {0, 1, 0}, {0, 0, 1}}, {"s"});
    CHECK(lattice_index(full) == Integer(1));

    // (s, s x^2): even sublattice, index 2
    RingPtr sx = Ring::make({"s", "x"});
    MonomialMap even(sx, {"z0", "z1"}, {{1, 1}, {0, 2}}, {"s"});
    CHECK(lattice_index(even) == Integer(2));

    // (s, s x): rank-deficient in (x, y), infinite index
    MonomialMap thin(sxy, {"z0", "z1"}, {{1, 1}, {0, 1}, {0, 0}}, {"s"});
    CHECK_FALSE(lattice_index(thin).has_value());

    CHECK(lattice_index(trapezoid_map(2)) == Integer(1));
    CHECK(lattice_index(trapezoid_map(3)) == Integer(1));
}

TEST_CASE("fiber product merges factors over one shared label") {
    GroebnerBasis G = toric_ideal(trapezoid_map(2));
    Ideal I1{G.ring, G.generators};
    RingPtr w = Ring::make({"w0", "w1", "w2", "w3", "w4"});
    std::vector<Polynomial> wg;
    for (const auto& g : I1.generators)
        wg.push_back(g.relabel(w, {{"z0", "w0"}, {"z1", "w1"}, {"z2", "w2"},
                                   {"z3", "w3"}, {"z4", "w4"}}));
    Ideal I2{w, wg};

    Ideal F = fiber_product_generators({I1, I2}, {"z0", "w0"});
    CHECK(F.ring->size() == 9);  // 5 + 5 minus the identified label
    CHECK(F.generators.size() == I1.generators.size() + I2.generators.size());
    CHECK(F.ring->index_of("z0") >= 0);
    CHECK(F.ring->index_of("w0") < 0);

    CHECK_THROWS_AS(fiber_product_generators({I1, I1}, {"z0", "z0"}), VariableCollision);
    CHECK(fiber_product_generators({I1}, {"z0"}).generators.size() == I1.generators.size());
}

TEST_CASE("joint parametrization matches the fiber product", "[property]") {
    std::mt19937_64 rng(59);
    std::uniform_int_distribution<int> cols(2, 3);
    for (int iter = 0; iter < 200; ++iter) {
        MonomialMap f1 = random_factor(rng, "s1", "x", cols(rng));
        MonomialMap f2 = random_factor(rng, "s2", "y", cols(rng));
        MonomialMap joint = joint_map({f1, f2});

        GroebnerBasis G1 = toric_ideal(f1), G2 = toric_ideal(f2);
        // rename both factors into the joint target coordinates; the constant
        // columns land on one identified coordinate
        std::map<std::string, std::string> r1, r2;
        for (std::size_t j = 0; j < f1.target_count(); ++j)
            r1[f1.target_names[j]] = joint.target_names[joint.blocks[0][j]];
        for (std::size_t j = 0; j < f2.target_count(); ++j)
            r2[f2.target_names[j]] = joint.target_names[joint.blocks[1][j]];
        RingPtr R1 = Ring::make([&] {
            std::vector<std::string> v;
            for (const auto& n : f1.target_names) v.push_back(r1[n]);
            return v;
        }());
        RingPtr R2 = Ring::make([&] {
            std::vector<std::string> v;
            for (const auto& n : f2.target_names) v.push_back(r2[n]);
            return v;
        }());
        std::vector<Polynomial> g1, g2;
        for (const auto& g : G1.generators) g1.push_back(g.relabel(R1, r1));
        for (const auto& g : G2.generators) g2.push_back(g.relabel(R2, r2));

        const std::string& shared = joint.target_names[joint.blocks[0][0]];
        Ideal F = fiber_product_generators({Ideal{R1, g1}, Ideal{R2, g2}}, {shared, shared},
                                           shared);
        GroebnerBasis GJ = toric_ideal(joint);
        RingPtr tgt = GJ.ring;
        std::vector<Polynomial> fg;
        for (const auto& g : F.generators) fg.push_back(g.relabel(tgt));
        CHECK(ideals_equal(Ideal{tgt, fg}, Ideal{tgt, GJ.generators}));
    }
}

TEST_CASE("factor bases remain a basis of the merged ideal", "[property]") {
    // with the shared label smallest under degrevlex, the union of the factor
    // bases is itself a Groebner basis of the merged ideal
    std::mt19937_64 rng(61);
    std::uniform_int_distribution<int> cols(2, 3);
    for (int iter = 0; iter < 60; ++iter) {
        MonomialMap f1 = random_factor(rng, "s1", "x", cols(rng));
        MonomialMap f2 = random_factor(rng, "s2", "y", cols(rng));
        MonomialMap joint = joint_map({f1, f2});
        RingPtr tgt = joint.target_ring();

        const std::string& shared = joint.target_names[joint.blocks[0][0]];
        std::vector<std::string> prio;
        for (auto it = tgt->vars().rbegin(); it != tgt->vars().rend(); ++it) prio.push_back(*it);
        // the shared coordinate must come last (smallest)
        std::erase(prio, shared);
        prio.push_back(shared);
        MonomialOrder ord = MonomialOrder::with_priority(*tgt, OrderKind::DegRevLex, prio);

        auto factor_basis = [&](const MonomialMap& f, std::size_t block) {
            std::vector<std::string> sub;
            std::map<std::string, std::string> ren;
            for (std::size_t j = 0; j < f.target_count(); ++j) {
                std::string name = joint.target_names[joint.blocks[block][j]];
                ren[f.target_names[j]] = name;
                sub.push_back(name);
            }
            RingPtr R(Ring::make(sub));
            MonomialOrder sord = MonomialOrder::with_priority(
                *R, OrderKind::DegRevLex, [&] {
                    std::vector<std::string> p;
                    for (const auto& v : prio)
                        if (R->index_of(v) >= 0) p.push_back(v);
                    return p;
                }());
            GroebnerBasis G = toric_ideal(f);
            std::vector<Polynomial> out;
            GroebnerBasis GR = buchberger(
                Ideal{R, [&] {
                          std::vector<Polynomial> gs;
                          for (const auto& g : G.generators) gs.push_back(g.relabel(R, ren));
                          return gs;
                      }()},
                sord);
            for (const auto& g : GR.generators) out.push_back(g.relabel(tgt));
            return out;
        };

        std::vector<Polynomial> join = factor_basis(f1, 0);
        for (auto& g : factor_basis(f2, 1)) join.push_back(g);

        // GB test: every S-polynomial of the union reduces to zero
        bool ok = true;
        for (std::size_t i = 0; i < join.size() && ok; ++i)
            for (std::size_t j = i + 1; j < join.size() && ok; ++j) {
                Monomial li = join[i].leading_monomial(ord);
                Monomial lj = join[j].leading_monomial(ord);
                Monomial l = li.lcm(lj);
                Polynomial s = join[i].scaled_shift(1, li.divide_into(l)) -
                               join[j].scaled_shift(1, lj.divide_into(l));
                if (!normal_form(s, join, ord).is_zero()) ok = false;
            }
        CHECK(ok);
    }
}
