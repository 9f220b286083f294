#include <catch2/catch_amalgamated.hpp>

#include "kbcount/counting.hpp"
#include "kbcount/fixtures.hpp"

using namespace kb;

TEST_CASE("registry carries the expected names") {
    const FixtureRegistry& reg = FixtureRegistry::instance();
    for (const char* name :
         {"ex2.11", "ex2.11-lt", "ex2.13-semimixed", "ex2.13-unmixed", "ex3.3", "ex3.6",
          "trapezoid-n2", "trapezoid-n3", "trapezoid-n4", "family-n2", "family-n5",
          "coupled-N2-n2", "coupled-N3-n2", "coupled-N2-n3", "lower-single-n2", "lower-single-n4",
          "lower-multi-m1", "lower-multi-m3", "sec6.2", "rem6.2", "hb-n2"})
        CHECK(reg.contains(name));
    CHECK_THROWS_AS(reg.get("nonsense"), InvalidParameter);
    for (const auto& name : reg.names()) {
        const Fixture& f = reg.get(name);
        CHECK(f.name == name);
        CHECK(!f.note.empty());
        CHECK(!f.expected.empty());
    }
}

TEST_CASE("quartet fixture: refuted with six solutions, two torus roots of the initial system") {
    const FixtureRegistry& reg = FixtureRegistry::instance();
    const Fixture& fx = reg.get("ex2.11");
    CHECK(is_khovanskii(*fx.family, OrderKind::DegLex).verdict == Verdict::REFUTED);
    CHECK(generic_count(*fx.family, 0) == fx.expected["generic_count"].get<std::uint64_t>());
    const Fixture& lt = reg.get("ex2.11-lt");
    CHECK(torus_count(family_system(*lt.family, 0)) ==
          lt.expected["torus_count"].get<std::uint64_t>());
}

TEST_CASE("merged-parametrization fixture matches its three relations") {
    const Fixture& fx = FixtureRegistry::instance().get("ex3.3");
    GroebnerBasis G = toric_ideal(*fx.map);
    std::vector<Polynomial> want;
    for (const auto& s : fx.expected["generators"])
        want.push_back(Polynomial::parse(G.ring, s.get<std::string>()));
    CHECK(ideals_equal(Ideal{G.ring, G.generators}, Ideal{G.ring, want}));
}

TEST_CASE("union-basis fixture: membership without a reduced union basis") {
    const Fixture& fx = FixtureRegistry::instance().get("ex3.6");
    RingPtr r = fx.ideal_a->ring;
    MonomialOrder lex = MonomialOrder::lex(*r);
    // each factor basis is closed under S-pairs on its own
    for (const Ideal* I : {&*fx.ideal_a, &*fx.ideal_b}) {
        GroebnerBasis G = buchberger(*I, lex);
        for (const auto& g : I->generators) CHECK(normal_form(g, G.generators, lex).is_zero());
        CHECK(ideals_equal(Ideal{G.ring, G.generators}, *I));
    }
    std::vector<Polynomial> uni = fx.ideal_a->generators;
    for (const auto& g : fx.ideal_b->generators) uni.push_back(g);
    CHECK_FALSE(normal_form(*fx.witness, uni, lex).is_zero());
    GroebnerBasis G = buchberger(Ideal{r, uni}, lex);
    CHECK(ideal_contains(G, *fx.witness));
}

TEST_CASE("trapezoid fixtures: volume, binomial count, lattice index") {
    const FixtureRegistry& reg = FixtureRegistry::instance();
    for (int n = 2; n <= 4; ++n) {
        const Fixture& fx = reg.get("trapezoid-n" + std::to_string(n));
        REQUIRE(fx.map.has_value());
        std::vector<std::size_t> keep = {1, 2};  // u and v rows
        IntMat xpart;
        for (std::size_t i : keep) xpart.push_back(fx.map->exponents[i]);
        CHECK(LatticePolytope::from_exponent_columns(xpart).normalized_volume() ==
              fx.expected["normalized_volume"].get<int>());
        CHECK(static_cast<int>(lemma53_generators(n).binomials.size()) ==
              fx.expected["binomial_count"].get<int>());
        CHECK(lattice_index(*fx.map) == Integer(fx.expected["lattice_index"].get<int>()));
    }
}

TEST_CASE("lower-bound system fixtures attain their counts") {
    const FixtureRegistry& reg = FixtureRegistry::instance();
    for (const char* name : {"lower-single-n2", "lower-single-n3", "lower-multi-m1",
                             "lower-multi-m2"}) {
        const Fixture& fx = reg.get(name);
        GroebnerBasis G = buchberger(Ideal{fx.system->ring, fx.system->equations},
                                     MonomialOrder::degrevlex(*fx.system->ring));
        CHECK(quotient_dimension(G) == fx.expected["count"].get<std::uint64_t>());
    }
    const Fixture& fx = reg.get("lower-single-n2");
    CHECK(torus_count(*fx.system) == fx.expected["torus_count"].get<std::uint64_t>());
}

TEST_CASE("two-frequency fixtures: count and pooled volume") {
    const FixtureRegistry& reg = FixtureRegistry::instance();
    const Fixture& semi = reg.get("sec6.2");
    CHECK(generic_count(*semi.family, 0) == semi.expected["generic_count"].get<std::uint64_t>());
    // the leading-term exponents match the frozen matrix table
    MonomialOrder ord = MonomialOrder::deglex(*semi.family->ring);
    std::vector<LatticePolytope> qs = block_polytopes(*semi.family, ord);
    REQUIRE(qs.size() == 4);
    CHECK(mv_with_multiplicity(qs, semi.family->block_sizes) ==
          Integer(semi.expected["bound"].get<int>()));

    const Fixture& pooled = reg.get("rem6.2");
    CHECK(block_polytopes(*pooled.family, ord)[0].normalized_volume() ==
          pooled.expected["normalized_volume"].get<int>());
}

TEST_CASE("generic-system fixture separates the support bound from the count") {
    const Fixture& fx = FixtureRegistry::instance().get("hb-n2");
    CHECK(bkk_bound(*fx.system) == Integer(fx.expected["bkk_bound"].get<int>()));
    GroebnerBasis G = buchberger(Ideal{fx.system->ring, fx.system->equations},
                                 MonomialOrder::degrevlex(*fx.system->ring));
    CHECK(quotient_dimension(G) == fx.expected["count"].get<std::uint64_t>());
}

TEST_CASE("pipeline consistency holds on the certified family fixtures") {
    // generic count = certified bound <= support bound, on every family that
    // expects certification and carries a generic count
    const FixtureRegistry& reg = FixtureRegistry::instance();
    for (const char* name : {"family-n2", "family-n3", "family-n4"}) {
        const Fixture& fx = reg.get(name);
        KhovanskiiBound b = khovanskii_bound(*fx.family, MonomialOrder::deglex(*fx.family->ring));
        REQUIRE(b.bound.has_value());
        std::uint64_t count = generic_count(*fx.family, 0);
        CHECK(Integer(count) == *b.bound);
        CHECK(*b.bound == fx.expected["bound"].get<int>());
        CHECK(bkk_bound(family_system(*fx.family, 0)) >= *b.bound);
    }
}
