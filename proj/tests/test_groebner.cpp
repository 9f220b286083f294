#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "kbcount/groebner.hpp"

using namespace kb;

namespace {

Polynomial parse(const RingPtr& r, const std::string& s) { return Polynomial::parse(r, s); }

Polynomial random_poly(const RingPtr& ring, std::mt19937_64& rng, int max_terms = 4,
                       int max_exp = 3) {
    std::uniform_int_distribution<int> nterms(1, max_terms);
    std::uniform_int_distribution<int> expd(0, max_exp);
    std::uniform_int_distribution<long> coeff(-9, 9);
    Polynomial p = Polynomial::zero(ring);
    int t = nterms(rng);
    for (int i = 0; i < t; ++i) {
        std::vector<std::int32_t> e(ring->size());
        for (auto& x : e) x = expd(rng);
        p.add_term(Rational(coeff(rng)), Monomial(std::move(e)));
    }
    return p;
}

}  // namespace

TEST_CASE("normal form divides out leading terms") {
    RingPtr r = Ring::make({"x", "y"});
    MonomialOrder ord = MonomialOrder::deglex(*r);
    std::vector<Polynomial> basis = {parse(r, "x^2 - y"), parse(r, "y^2 - 1")};
    CHECK(normal_form(parse(r, "x^4"), basis, ord) == parse(r, "1"));
    CHECK(normal_form(parse(r, "x^2*y - y^2"), basis, ord).is_zero());
    CHECK(normal_form(parse(r, "x + 3"), basis, ord) == parse(r, "x + 3"));
}

TEST_CASE("reduced basis of a zero-dimensional ideal") {
    RingPtr r = Ring::make({"x", "y"});
    MonomialOrder ord = MonomialOrder::deglex(*r);
    GroebnerBasis G = buchberger(Ideal{r, {parse(r, "x^2 - 1"), parse(r, "y^3 - 1")}}, ord);
    REQUIRE(G.generators.size() == 2);
    CHECK(G.reduced);
    CHECK(quotient_dimension(G) == 6u);

    GroebnerBasis H = buchberger(Ideal{r, {parse(r, "x - y")}}, ord);
    CHECK_FALSE(quotient_dimension(H).has_value());  // a curve: infinitely many points

    GroebnerBasis U = buchberger(Ideal{r, {parse(r, "x"), parse(r, "x - 1")}}, ord);
    CHECK(quotient_dimension(U) == 0u);  // unit ideal
}

TEST_CASE("twisted cubic elimination") {
    RingPtr r = Ring::make({"t", "x", "y"});
    Ideal I{r, {parse(r, "x - t^2"), parse(r, "y - t^3")}};
    Ideal E = eliminate(I, {"t"});
    RingPtr xy = Ring::make({"x", "y"});
    std::vector<Polynomial> back;
    for (const auto& g : E.generators) back.push_back(g.relabel(xy));
    CHECK(ideals_equal(Ideal{xy, back}, Ideal{xy, {parse(xy, "x^3 - y^2")}}));
}

TEST_CASE("saturation strips monomial factors") {
    RingPtr r = Ring::make({"x", "y"});
    Ideal I{r, {parse(r, "x*y")}};
    Ideal S = saturate(I, Monomial::unit(2, 0));
    CHECK(ideals_equal(S, Ideal{r, {parse(r, "y")}}));

    // already saturated ideals are unchanged
    Ideal J{r, {parse(r, "x^2 + y^2 - 1")}};
    CHECK(ideals_equal(saturate(J, Monomial::unit(2, 0)), J));
}

TEST_CASE("budget aborts runaway reductions") {
    RingPtr r = Ring::make({"x", "y", "z"});
    Budget tiny{3, 0};
    Ideal I{r, {parse(r, "x^3*y - z^2"), parse(r, "x*z - y^2"), parse(r, "y^3 - x^2*z")}};
    CHECK_THROWS_AS(buchberger(I, MonomialOrder::lex(*r), &tiny), ResourceLimit);
}

TEST_CASE("groebner bases reduce members to zero", "[property]") {
    std::mt19937_64 rng(31);
    RingPtr r = Ring::make({"x", "y"});
    int done = 0;
    while (done < 200) {
        Polynomial a = random_poly(r, rng), b = random_poly(r, rng), c = random_poly(r, rng);
        if (a.is_zero() || b.is_zero()) continue;
        ++done;
        MonomialOrder ord =
            MonomialOrder::simple(*r, done % 2 ? OrderKind::DegLex : OrderKind::DegRevLex);
        GroebnerBasis G = buchberger(Ideal{r, {a, b}}, ord);
        CHECK(ideal_contains(G, a));
        CHECK(ideal_contains(G, b));
        CHECK(ideal_contains(G, a * c + b));
        // every S-polynomial of the basis reduces to zero
        for (std::size_t i = 0; i < G.generators.size(); ++i)
            for (std::size_t j = i + 1; j < G.generators.size(); ++j) {
                Monomial li = G.generators[i].leading_monomial(ord);
                Monomial lj = G.generators[j].leading_monomial(ord);
                Monomial l = li.lcm(lj);
                Polynomial s = G.generators[i].scaled_shift(1, li.divide_into(l)) -
                               G.generators[j].scaled_shift(1, lj.divide_into(l));
                CHECK(normal_form(s, G).is_zero());
            }
        // the reduced basis is canonical: recomputing from it gives it back
        GroebnerBasis H = buchberger(Ideal{r, G.generators}, ord);
        REQUIRE(H.generators.size() == G.generators.size());
        for (std::size_t i = 0; i < G.generators.size(); ++i)
            CHECK(H.generators[i] == G.generators[i]);
    }
}

TEST_CASE("normal form is idempotent and linear over remainders", "[property]") {
    std::mt19937_64 rng(37);
    RingPtr r = Ring::make({"x", "y"});
    MonomialOrder ord = MonomialOrder::degrevlex(*r);
    int done = 0;
    while (done < 200) {
        Polynomial a = random_poly(r, rng), b = random_poly(r, rng);
        if (a.is_zero() || b.is_zero()) continue;
        ++done;
        GroebnerBasis G = buchberger(Ideal{r, {a, b}}, ord);
        Polynomial p = random_poly(r, rng), q = random_poly(r, rng);
        Polynomial np = normal_form(p, G), nq = normal_form(q, G);
        CHECK(normal_form(np, G) == np);
        CHECK(normal_form(p + q, G) == np + nq);
        CHECK(normal_form(p - np, G).is_zero());
    }
}
