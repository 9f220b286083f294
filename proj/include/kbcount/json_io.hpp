#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "kbcount/counting.hpp"
#include "kbcount/khovanskii.hpp"
#include "kbcount/polytope.hpp"
#include "kbcount/toric.hpp"

namespace kb {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

inline Json monomial_to_json(const Monomial& m) {
    Json e = Json::array();
    for (std::size_t i = 0; i < m.nvars(); ++i) e.push_back(m[i]);
    return e;
}

inline Monomial monomial_from_json(const Json& j, std::size_t nvars) {
    if (!j.is_array() || j.size() != nvars) throw ParseError("bad exponent vector");
    std::vector<std::int32_t> e;
    for (const auto& x : j) e.push_back(x.get<std::int32_t>());
    return Monomial(std::move(e));
}

inline Json poly_to_json(const Polynomial& p) {
    Json j;
    j["vars"] = p.ring()->vars();
    Json terms = Json::array();
    for (const auto& [m, c] : p.terms())
        terms.push_back({{"c", rational_str(c)}, {"e", monomial_to_json(m)}});
    j["terms"] = std::move(terms);
    return j;
}

inline Json terms_to_json(const Polynomial& p) { return poly_to_json(p)["terms"]; }

inline Polynomial terms_from_json(const Json& terms, const RingPtr& ring) {
    if (!terms.is_array()) throw ParseError("terms must be an array");
    Polynomial p = Polynomial::zero(ring);
    for (const auto& t : terms)
        p.add_term(parse_rational(t.at("c").get<std::string>()),
                   monomial_from_json(t.at("e"), ring->size()));
    return p;
}

inline Polynomial poly_from_json(const Json& j) {
    RingPtr ring = Ring::make(j.at("vars").get<std::vector<std::string>>());
    return terms_from_json(j.at("terms"), ring);
}

inline Json system_to_json(const PolySystem& sys) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["vars"] = sys.ring->vars();
    Json eqs = Json::array();
    for (const auto& f : sys.equations) eqs.push_back(terms_to_json(f));
    j["equations"] = std::move(eqs);
    return j;
}

inline PolySystem system_from_json(const Json& j) {
    RingPtr ring = Ring::make(j.at("vars").get<std::vector<std::string>>());
    std::vector<Polynomial> eqs;
    for (const auto& e : j.at("equations")) eqs.push_back(terms_from_json(e, ring));
    return PolySystem(ring, std::move(eqs));
}

inline Json family_to_json(const BlockFamily& fam) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["vars"] = fam.ring->vars();
    j["labels"] = fam.labels;
    j["block_sizes"] = fam.block_sizes;
    Json blocks = Json::array();
    for (const auto& blk : fam.blocks) {
        Json b = Json::array();
        for (const auto& h : blk) b.push_back(terms_to_json(h));
        blocks.push_back(std::move(b));
    }
    j["blocks"] = std::move(blocks);
    return j;
}

inline BlockFamily family_from_json(const Json& j) {
    RingPtr ring = Ring::make(j.at("vars").get<std::vector<std::string>>());
    std::vector<std::vector<Polynomial>> blocks;
    for (const auto& b : j.at("blocks")) {
        std::vector<Polynomial> blk;
        for (const auto& t : b) blk.push_back(terms_from_json(t, ring));
        blocks.push_back(std::move(blk));
    }
    return BlockFamily(ring, std::move(blocks), j.at("labels").get<std::vector<std::string>>(),
                       j.at("block_sizes").get<std::vector<int>>());
}

inline Json polytope_to_json(const LatticePolytope& p) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["dim"] = p.ambient_dim();
    Json pts = Json::array();
    for (const auto& pt : p.points()) {
        Json row = Json::array();
        for (const auto& x : pt) row.push_back(static_cast<long>(x.get_si()));
        pts.push_back(std::move(row));
    }
    j["points"] = std::move(pts);
    return j;
}

inline LatticePolytope polytope_from_json(const Json& j) {
    int dim = j.at("dim").get<int>();
    std::vector<IntVec> pts;
    for (const auto& row : j.at("points")) {
        IntVec p;
        for (const auto& x : row) p.push_back(Integer(x.get<long>()));
        pts.push_back(std::move(p));
    }
    return LatticePolytope(dim, std::move(pts));
}

/// Exponent-matrix layout: one row per variable, one column per monomial,
/// exactly as polytope data is usually tabulated alongside the systems.
inline LatticePolytope polytope_from_matrix_json(const Json& rows) {
    IntMat A;
    for (const auto& r : rows) {
        IntVec row;
        for (const auto& x : r) row.push_back(Integer(x.get<long>()));
        A.push_back(std::move(row));
    }
    return LatticePolytope::from_exponent_columns(A);
}

inline Json ideal_to_json(const Ideal& I) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["vars"] = I.ring->vars();
    Json gens = Json::array();
    for (const auto& g : I.generators) gens.push_back(terms_to_json(g));
    j["generators"] = std::move(gens);
    return j;
}

inline Ideal ideal_from_json(const Json& j) {
    RingPtr ring = Ring::make(j.at("vars").get<std::vector<std::string>>());
    std::vector<Polynomial> gens;
    for (const auto& g : j.at("generators")) gens.push_back(terms_from_json(g, ring));
    return Ideal{ring, std::move(gens)};
}

inline Json order_to_json(OrderKind kind) { return Json(order_kind_name(kind)); }

inline Json basis_to_json(const GroebnerBasis& G, OrderKind kind) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["vars"] = G.ring->vars();
    j["order"] = order_to_json(kind);
    j["reduced"] = G.reduced;
    Json gens = Json::array();
    for (const auto& g : G.generators) gens.push_back(terms_to_json(g));
    j["generators"] = std::move(gens);
    return j;
}

inline Json trace_to_json(const SubductionTrace& t) {
    Json j;
    j["input"] = t.input.str();
    Json steps = Json::array();
    for (const auto& s : t.steps)
        steps.push_back({{"lt", monomial_to_json(s.lt)},
                         {"coeff", rational_str(s.coeff)},
                         {"alpha", s.alpha}});
    j["steps"] = std::move(steps);
    j["remainder"] = t.remainder.str();
    j["zero"] = t.zero;
    return j;
}

inline Json certificate_to_json(const KhovanskiiCertificate& c, bool with_traces = true) {
    Json j;
    j["schema"] = kSchemaVersion;
    j["verdict"] = verdict_name(c.verdict);
    Json gens = Json::array();
    for (const auto& g : c.toric_generators) gens.push_back(g.str());
    j["relations"] = std::move(gens);
    if (with_traces) {
        Json traces = Json::array();
        for (const auto& t : c.traces) traces.push_back(trace_to_json(t));
        j["traces"] = std::move(traces);
    }
    if (c.witness) j["witness"] = c.witness->str();
    if (!c.reason.empty()) j["reason"] = c.reason;
    return j;
}

}  // namespace kb
