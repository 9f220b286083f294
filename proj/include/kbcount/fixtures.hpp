#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kbcount/json_io.hpp"
#include "kbcount/resonator.hpp"

namespace kb {

/// A named input with its frozen expected outputs. Payload fields are filled
/// only where they make sense for the fixture kind; `expected` carries the
/// golden values the acceptance checks and the CLI compare against.
struct Fixture {
    std::string name;
    std::string note;
    std::optional<BlockFamily> family;
    std::optional<std::vector<std::vector<int>>> partition;  // decoupling parts
    std::optional<MonomialMap> map;
    std::optional<PolySystem> system;
    std::optional<Ideal> ideal_a, ideal_b;  // factor bases of the merged ideal
    std::optional<Polynomial> witness;
    OrderKind order = OrderKind::DegLex;
    Json expected;
};

namespace detail {

inline Polynomial fx_parse(const RingPtr& r, const std::string& s) {
    return Polynomial::parse(r, s);
}

/// Four blocks over (u1, v1, u2, v2), one equation each: every block carries
/// one quadrature times both radial factors, plus the linear span.
inline BlockFamily two_frequency_family() {
    RingPtr r = Ring::make({"u1", "v1", "u2", "v2"});
    Polynomial A = fx_parse(r, "u1^2 + v1^2"), B = fx_parse(r, "u2^2 + v2^2");
    Polynomial u1 = fx_parse(r, "u1"), v1 = fx_parse(r, "v1");
    Polynomial u2 = fx_parse(r, "u2"), v2 = fx_parse(r, "v2");
    Polynomial one = fx_parse(r, "1");
    std::vector<std::vector<Polynomial>> blocks = {
        {one, u1, v1, u1 * A, u1 * B},
        {one, u1, v1, v1 * A, v1 * B},
        {one, u2, v2, u2 * B, u2 * A},
        {one, u2, v2, v2 * B, v2 * A},
    };
    return BlockFamily(r, std::move(blocks), {"s1", "s2", "s3", "s4"}, {1, 1, 1, 1});
}

/// The same two-frequency generators pooled into one block with a single
/// label; its leading-term polytope overestimates the count.
inline BlockFamily two_frequency_pooled_family() {
    RingPtr r = Ring::make({"u1", "v1", "u2", "v2"});
    Polynomial A = fx_parse(r, "u1^2 + v1^2"), B = fx_parse(r, "u2^2 + v2^2");
    std::vector<Polynomial> gens = {fx_parse(r, "1")};
    for (const char* w : {"u1", "v1"}) {
        gens.push_back(fx_parse(r, w));
        gens.push_back(fx_parse(r, w) * A);
        gens.push_back(fx_parse(r, w) * B);
    }
    for (const char* w : {"u2", "v2"}) {
        gens.push_back(fx_parse(r, w));
        gens.push_back(fx_parse(r, w) * B);
        gens.push_back(fx_parse(r, w) * A);
    }
    return BlockFamily::unmixed(r, std::move(gens), 4);
}

inline void add(std::map<std::string, Fixture>& reg, Fixture f) {
    reg.emplace(f.name, std::move(f));
}

inline std::map<std::string, Fixture> build_registry() {
    std::map<std::string, Fixture> reg;

    {
        Fixture f;
        f.name = "ex2.11";
        f.note = "quartet of plane curves whose general combinations meet in six points; "
                 "the leading terms fail to span the initial algebra";
        RingPtr r = Ring::make({"x", "y"});
        f.family = BlockFamily::unmixed(
            r,
            {fx_parse(r, "x^2 + x"), fx_parse(r, "x*y + y"), fx_parse(r, "y^2 + 1"),
             fx_parse(r, "y^3 + 2")},
            2);
        f.expected = {{"verdict", "REFUTED"}, {"generic_count", 6}};
        add(reg, std::move(f));
    }
    {
        Fixture f;
        f.name = "ex2.11-lt";
        f.note = "leading monomials of ex2.11 as their own family; general combinations "
                 "keep only two torus solutions";
        RingPtr r = Ring::make({"x", "y"});
        f.family = BlockFamily::unmixed(
            r, {fx_parse(r, "x^2"), fx_parse(r, "x*y"), fx_parse(r, "y^2"), fx_parse(r, "y^3")},
            2);
        f.expected = {{"torus_count", 2}};
        add(reg, std::move(f));
    }
    {
        Fixture f;
        f.name = "ex2.13-semimixed";
        f.note = "two cubic blocks that fail certification under every standard order";
        RingPtr r = Ring::make({"x", "y"});
        f.family = BlockFamily(
            r,
            {{fx_parse(r, "1"), fx_parse(r, "y"), fx_parse(r, "x^3 + x*y^2")},
             {fx_parse(r, "1"), fx_parse(r, "x"), fx_parse(r, "x^2*y + y^3")}},
            {"s1", "s2"}, {1, 1});
        f.expected = {{"verdict", "REFUTED"}};
        add(reg, std::move(f));
    }
    {
        Fixture f;
        f.name = "ex2.13-unmixed";
        f.note = "the pooled block of the same cubics certifies under every standard order";
        RingPtr r = Ring::make({"x", "y"});
        f.family = BlockFamily::unmixed(
            r,
            {fx_parse(r, "1"), fx_parse(r, "x"), fx_parse(r, "y"), fx_parse(r, "x^3 + x*y^2"),
             fx_parse(r, "x^2*y + y^3")},
            2);
        f.expected = {{"verdict", "CERTIFIED"}};
        add(reg, std::move(f));
    }
    {
        Fixture f;
        f.name = "ex3.3";
        f.note = "two monomial factors glued over identified scaling labels; the merged "
                 "relations are three explicit binomials";
        RingPtr src = Ring::make({"s", "x", "t", "y"});
        f.map = MonomialMap(src, {"z0", "z1", "z2", "w0", "w1", "w2"},
                            {{1, 1, 1, 0, 0, 0},
                             {0, 2, 0, 0, 1, 0},
                             {0, 0, 0, 1, 1, 1},
                             {0, 0, 1, 0, 0, 1}},
                            {"s", "t"});
        f.expected = {{"generators",
                       {"z2*w0 - z0*w2", "z2*w1^2 - z1*w0*w2", "z1*w0^2 - z0*w1^2"}}};
        add(reg, std::move(f));
    }
    {
        Fixture f;
        f.name = "ex3.6";
        f.note = "two lex bases whose union generates but is not a basis of the sum: "
                 "the witness lies in the sum yet its normal form against the union survives";
        RingPtr r = Ring::make({"z", "z1", "z2", "z3", "z4", "w1", "w2", "w3", "w4"});
        f.order = OrderKind::Lex;
        f.ideal_a = Ideal{r,
                          {fx_parse(r, "z1*z4 - z3*z2"), fx_parse(r, "z^2*z3 - z1^3"),
                           fx_parse(r, "z^2*z4 - z1^2*z2")}};
        f.ideal_b = Ideal{r,
                          {fx_parse(r, "w1*w4 - w3*w2"), fx_parse(r, "z^2*w3 - w1^3"),
                           fx_parse(r, "z^2*w4 - w1^2*w2")}};
        f.witness = fx_parse(r, "z2^3*z3^2*w4 - z4^3*w1^2*w2");
        f.expected = {{"normal_form_nonzero", true}, {"member_of_sum", true}};
        add(reg, std::move(f));
    }
    for (int n = 2; n <= 4; ++n) {
        Fixture f;
        f.name = "trapezoid-n" + std::to_string(n);
        f.note = "leading-term parametrization of the order-" + std::to_string(n) +
                 " family; its relations are the explicit binomial basis";
        f.map = trapezoid_map(n);
        f.expected = {{"normalized_volume", 4 * n - 3},
                      {"binomial_count", static_cast<int>(lemma53_generators(n).binomials.size())},
                      {"lattice_index", 1}};
        add(reg, std::move(f));
    }
    for (int n = 2; n <= 5; ++n) {
        Fixture f;
        f.name = "family-n" + std::to_string(n);
        f.note = "unmixed radial family of order " + std::to_string(n) +
                 " over (u, v) with two equations";
        f.family = resonator_family(n);
        f.expected = {{"verdict", "CERTIFIED"},
                      {"generic_count", 4 * n - 3},
                      {"bound", 4 * n - 3},
                      {"lattice_index", 1}};
        add(reg, std::move(f));
    }
    for (auto [N, n] : {std::pair{2, 2}, std::pair{3, 2}, std::pair{2, 3}}) {
        long bound = 1;
        for (int i = 0; i < N; ++i) bound *= 4 * n - 3;
        Fixture f;
        f.name = "coupled-N" + std::to_string(N) + "-n" + std::to_string(n);
        f.note = "variable-disjoint copies of the radial family sharing one constant; "
                 "certified blockwise, the bound multiplies";
        f.family = coupled_family(N, n);
        f.partition = coupled_partition(N, n);
        f.expected = {{"verdict", "CERTIFIED"}, {"bound", bound}};
        if (N == 2 && n == 2) f.expected["generic_count"] = 25;
        add(reg, std::move(f));
    }
    for (int n = 2; n <= 4; ++n) {
        Fixture f;
        f.name = "lower-single-n" + std::to_string(n);
        f.note = "specialized coefficients attaining the order-" + std::to_string(n) +
                 " count; the origin is the only solution off the torus";
        f.system = lower_bound_system(LowerBoundKind::SINGLE, n, 3);
        f.expected = {{"count", 4 * n - 3}, {"torus_count", 4 * n - 4}};
        add(reg, std::move(f));
    }
    for (int M = 1; M <= 3; ++M) {
        long c = 1;
        for (int i = 0; i < M; ++i) c *= 5;
        Fixture f;
        f.name = "lower-multi-m" + std::to_string(M);
        f.note = "coupled-radial specialization with " + std::to_string(M) +
                 " frequency pairs attaining the product count";
        f.system = lower_bound_system(LowerBoundKind::MULTI, M);
        f.expected = {{"count", c}};
        add(reg, std::move(f));
    }
    {
        Fixture f;
        f.name = "sec6.2";
        f.note = "semimixed two-frequency family: four blocks of five generators, "
                 "one equation each; certified, mixed volume 25";
        f.family = detail::two_frequency_family();
        f.expected = {{"verdict", "CERTIFIED"},
                      {"bound", 25},
                      {"generic_count", 25},
                      {"lattice_index", 1}};
        add(reg, std::move(f));
    }
    {
        Fixture f;
        f.name = "rem6.2";
        f.note = "the pooled two-frequency block with a single label; certified but its "
                 "polytope volume 33 overshoots the true count";
        f.family = detail::two_frequency_pooled_family();
        f.expected = {{"normalized_volume", 33}};
        add(reg, std::move(f));
    }
    {
        Fixture f;
        f.name = "hb-n2";
        f.note = "one resonator, one frequency, cubic nonlinearity, symbolic generic "
                 "coefficients; support bound 9 versus true count 5";
        std::mt19937_64 rng(1);
        f.system = generate_single(2, CoefficientMap::symbolic(2, rng));
        f.expected = {{"bkk_bound", 9}, {"count", 5}};
        add(reg, std::move(f));
    }
    return reg;
}

}  // namespace detail

class FixtureRegistry {
  public:
    static const FixtureRegistry& instance() {
        static FixtureRegistry reg;
        return reg;
    }

    std::vector<std::string> names() const {
        std::vector<std::string> out;
        for (const auto& [k, v] : fixtures_) out.push_back(k);
        return out;
    }

    const Fixture& get(const std::string& name) const {
        auto it = fixtures_.find(name);
        if (it == fixtures_.end()) throw InvalidParameter("unknown fixture '" + name + "'");
        return it->second;
    }

    bool contains(const std::string& name) const { return fixtures_.count(name) > 0; }

  private:
    FixtureRegistry() : fixtures_(detail::build_registry()) {}
    std::map<std::string, Fixture> fixtures_;
};

}  // namespace kb
