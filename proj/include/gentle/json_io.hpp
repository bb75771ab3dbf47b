#pragma once

#include "derived_disk.hpp"
#include "module_dct.hpp"
#include "surface.hpp"

#include <json.hpp>

namespace gentle {

using Json = nlohmann::ordered_json;

inline Json to_json(const Algebra& A)
{
    Json j;
    j["vertices"] = A.vertices();
    j["arrows"] = Json::array();
    for (const auto& a : A.arrows())
        j["arrows"].push_back({{"name", a.name}, {"source", A.vertex_name(a.src)}, {"target", A.vertex_name(a.tgt)}});
    j["relations"] = Json::array();
    for (auto [a, b] : A.relations())
        j["relations"].push_back({A.arrow(a).name, A.arrow(b).name});
    return j;
}

inline Json to_json(const GentleReport& r)
{
    Json j;
    j["gentle"] = r.gentle;
    j["clause"] = r.gentle ? Json(nullptr) : Json(r.clause);
    j["detail"] = r.detail;
    return j;
}

inline Json to_json(const GlobalDimension& g)
{
    if (g.kind == GlDimKind::Finite)
        return g.value;
    return to_string(g);
}

inline Json to_json(const DSet& s)
{
    if (s.all)
        return "all";
    return s.values;
}

inline Json to_json(const Algebra& A, const OverlapSequence& s)
{
    return {{"vertex", A.vertex_name(s.vertex)},
            {"projective", to_string(A, s.projective)},
            {"middle", {to_string(A, s.middle_first), to_string(A, s.middle_second)}},
            {"injective", to_string(A, s.injective)}};
}

inline Json subcat_json(const IndecCatalog& C, const Subcat& U)
{
    Json j = Json::array();
    for (int x : U)
        j.push_back(to_string(C.alg, C.words[x]));
    return j;
}

inline Json to_json(const IndecCatalog& C, const ARQuiverModule& Q)
{
    Json j;
    j["nodes"] = subcat_json(C, [&] {
        Subcat all(C.size());
        std::iota(all.begin(), all.end(), 0);
        return all;
    }());
    j["arrows"] = Json::array();
    for (int x = 0; x < C.size(); ++x)
        for (int y = 0; y < C.size(); ++y)
            if (Q.irreducible[x][y])
                j["arrows"].push_back({to_string(C.alg, C.words[x]), to_string(C.alg, C.words[y]), Q.irreducible[x][y]});
    j["tau"] = Json::array();
    for (int x = 0; x < C.size(); ++x)
        if (Q.tau[x] >= 0)
            j["tau"].push_back({to_string(C.alg, C.words[x]), to_string(C.alg, C.words[Q.tau[x]])});
    return j;
}

inline Json to_json(const Dissection& D)
{
    Json j;
    j["polygons"] = Json::array();
    for (const auto& P : D.polygons) {
        Json sides = Json::array();
        for (const auto& s : P.sides)
            sides.push_back(s.token());
        j["polygons"].push_back({{"id", P.id}, {"sides", sides}, {"puncture", P.encloses_puncture()}});
    }
    j["marked_points"] = D.marked_points;
    j["edges"] = D.num_edges();
    j["euler_characteristic"] = D.euler;
    j["genus"] = D.genus;
    j["boundary_components"] = D.boundary_components;
    j["punctures"] = D.punctures;
    j["is_disk"] = is_disk(D);
    return j;
}

inline Json to_json(const DualGraph& G)
{
    Json j;
    j["punctureless"] = G.punctureless;
    j["vertices"] = Json::array();
    for (const auto& v : G.vertices)
        j["vertices"].push_back({{"polygon", v.polygon}, {"boundary", v.boundary}, {"puncture", v.puncture}});
    j["edges"] = Json::array();
    for (const auto& e : G.edges)
        j["edges"].push_back({{"name", e.name},
                              {"crosses", e.crosses},
                              {"from", G.vertices[e.from].polygon},
                              {"to", G.vertices[e.to].polygon}});
    return j;
}

inline Json to_json(const GradedArc& X) { return {{"arc", to_string(X)}, {"grading", X.grading}}; }

inline Json to_json(const DerivedSubcat& U)
{
    Json members = Json::array();
    for (const auto& c : U.classes)
        members.push_back("arc(" + std::to_string(c.a) + "," + std::to_string(c.b) + ")@" + std::to_string(c.residue));
    return {{"d", U.d}, {"members", members}};
}

inline Json to_json(const ARQuiverDerived& Q)
{
    Json j;
    j["nodes"] = Json::array();
    for (const auto& X : Q.nodes)
        j["nodes"].push_back(to_string(X));
    j["arrows"] = Json::array();
    for (auto [u, v] : Q.arrows)
        j["arrows"].push_back({to_string(Q.nodes[u]), to_string(Q.nodes[v])});
    j["tau"] = Json::array();
    for (auto [u, v] : Q.tau)
        j["tau"].push_back({to_string(Q.nodes[u]), to_string(Q.nodes[v])});
    return j;
}

} // namespace gentle
