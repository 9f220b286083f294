#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "kbcount/fixtures.hpp"
#include "kbcount/json_io.hpp"

using namespace kb;

namespace {

Polynomial parse(const RingPtr& r, const std::string& s) { return Polynomial::parse(r, s); }

}  // namespace

TEST_CASE("system round trip") {
    RingPtr r = Ring::make({"x", "y"});
    PolySystem sys(r, {parse(r, "x^2 - 3/7*y"), parse(r, "y^3 + 1")});
    Json j = system_to_json(sys);
    CHECK(j["schema"] == kSchemaVersion);
    PolySystem back = system_from_json(j);
    REQUIRE(back.equations.size() == 2);
    CHECK(back.equations[0] == sys.equations[0].relabel(back.ring));
    CHECK(back.equations[1] == sys.equations[1].relabel(back.ring));
    // serialization is stable: dumping twice is byte-identical
    CHECK(j.dump() == system_to_json(back).dump());
}

TEST_CASE("family round trip keeps blocks, labels, and sizes") {
    const Fixture& fx = FixtureRegistry::instance().get("sec6.2");
    Json j = family_to_json(*fx.family);
    BlockFamily back = family_from_json(j);
    CHECK(back.labels == fx.family->labels);
    CHECK(back.block_sizes == fx.family->block_sizes);
    REQUIRE(back.blocks.size() == fx.family->blocks.size());
    for (std::size_t b = 0; b < back.blocks.size(); ++b)
        for (std::size_t i = 0; i < back.blocks[b].size(); ++i)
            CHECK(back.blocks[b][i] == fx.family->blocks[b][i].relabel(back.ring));
    CHECK(family_to_json(back).dump() == j.dump());
}

TEST_CASE("polytope round trip and the matrix layout") {
    LatticePolytope p(2, {{Integer(0), Integer(0)}, {Integer(3), Integer(0)},
                          {Integer(0), Integer(2)}});
    Json j = polytope_to_json(p);
    LatticePolytope back = polytope_from_json(j);
    CHECK(back.normalized_volume() == p.normalized_volume());

    // columns of a variable-by-monomial table
    Json rows = Json::parse("[[0, 3, 0], [0, 0, 2]]");
    LatticePolytope q = polytope_from_matrix_json(rows);
    CHECK(q.normalized_volume() == p.normalized_volume());
}

TEST_CASE("ideal and basis serialization") {
    RingPtr r = Ring::make({"z0", "z1", "z2"});
    Ideal I{r, {parse(r, "z0*z2 - z1^2")}};
    Json j = ideal_to_json(I);
    Ideal back = ideal_from_json(j);
    REQUIRE(back.generators.size() == 1);
    CHECK(back.generators[0] == I.generators[0].relabel(back.ring));

    GroebnerBasis G = buchberger(I, MonomialOrder::deglex(*r));
    Json bj = basis_to_json(G, OrderKind::DegLex);
    CHECK(bj["order"] == "deglex");
    CHECK(bj["reduced"] == true);
    CHECK(bj["generators"].size() == G.generators.size());
}

TEST_CASE("trace and certificate serialization") {
    BlockFamily fam = resonator_family(2);
    ScaledGeneratorSet G = scaled_generators(fam, MonomialOrder::deglex(*fam.ring));
    SubductionTrace tr = subduct(parse(G.ext, "s^3*v^3"), G);
    Json tj = trace_to_json(tr);
    CHECK(tj["zero"] == true);
    CHECK(tj["steps"].size() == tr.steps.size());
    CHECK(tj["remainder"] == "0");

    KhovanskiiCertificate cert = is_khovanskii(fam, OrderKind::DegLex);
    Json cj = certificate_to_json(cert);
    CHECK(cj["verdict"] == "CERTIFIED");
    CHECK(cj["relations"].size() == cert.toric_generators.size());
    CHECK(cj["traces"].size() == cert.traces.size());
    CHECK_FALSE(cj.contains("witness"));

    RingPtr r = Ring::make({"x", "y"});
    BlockFamily bad = BlockFamily::unmixed(
        r, {parse(r, "x^2 + x"), parse(r, "x*y + y"), parse(r, "y^2 + 1"), parse(r, "y^3 + 2")},
        2);
    Json rj = certificate_to_json(is_khovanskii(bad, OrderKind::DegLex), false);
    CHECK(rj["verdict"] == "REFUTED");
    CHECK(rj.contains("witness"));
    CHECK_FALSE(rj.contains("traces"));
}

TEST_CASE("polynomial JSON round trip is exact", "[property]") {
    std::mt19937_64 rng(113);
    RingPtr r = Ring::make({"x", "y", "z"});
    std::uniform_int_distribution<int> expd(0, 5), nterms(0, 6);
    for (int iter = 0; iter < 200; ++iter) {
        Polynomial p = Polynomial::zero(r);
        int t = nterms(rng);
        for (int i = 0; i < t; ++i)
            p.add_term(random_coefficient(rng),
                       Monomial({std::int32_t(expd(rng)), std::int32_t(expd(rng)),
                                 std::int32_t(expd(rng))}));
        Polynomial back = poly_from_json(poly_to_json(p));
        CHECK(back == p.relabel(back.ring()));
    }
}
