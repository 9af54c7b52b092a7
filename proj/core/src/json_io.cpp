#include "fourstate/json_io.hpp"

#include <fstream>

namespace fourstate {

namespace {

Json vec3_json(const QVec3& v) {
    return Json::array({to_string(v[0]), to_string(v[1]), to_string(v[2])});
}

Json vec2_json(const QVec2& v) { return Json::array({to_string(v[0]), to_string(v[1])}); }

Rational rat_field(const Json& j) {
    if (!j.is_string()) throw ParseError("rational must be a string");
    return parse_rational(j.get<std::string>());
}

QVec3 vec3_field(const Json& j) {
    if (!j.is_array() || j.size() != 3) throw ParseError("expected 3-vector");
    return {rat_field(j[0]), rat_field(j[1]), rat_field(j[2])};
}

QVec2 vec2_field(const Json& j) {
    if (!j.is_array() || j.size() != 2) throw ParseError("expected 2-vector");
    return {rat_field(j[0]), rat_field(j[1])};
}

const Json& member(const Json& j, const char* name) {
    if (!j.is_object() || !j.contains(name)) throw ParseError(std::string("missing field: ") + name);
    return j.at(name);
}

} // namespace

Json dataset_to_json(const LargeT4Data& data) {
    Json j;
    j["states"] = Json::array();
    for (const auto& s : data.states) j["states"].push_back(vec3_json(s));
    j["perms"] = Json::array();
    for (const auto& p : data.perms) j["perms"].push_back(Json::array({p[0], p[1], p[2], p[3]}));
    j["p"] = Json::array();
    j["c"] = Json::array();
    j["k"] = Json::array();
    for (const auto& cfg : data.configs) {
        j["p"].push_back(vec3_json(cfg.p));
        Json legs = Json::array();
        for (const auto& leg : cfg.c) legs.push_back(vec3_json(leg));
        j["c"].push_back(std::move(legs));
        Json ks = Json::array();
        for (const auto& kv : cfg.k) ks.push_back(to_string(kv));
        j["k"].push_back(std::move(ks));
    }
    j["nodes"] = Json::array();
    for (const auto& n : data.nodes) j["nodes"].push_back(vec2_json(n));
    return j;
}

LargeT4Data dataset_from_json(const Json& j) {
    LargeT4Data d;
    const Json& states = member(j, "states");
    if (!states.is_array() || states.size() != 4) throw ParseError("states must have 4 entries");
    for (int i = 0; i < 4; ++i) d.states[static_cast<std::size_t>(i)] = vec3_field(states[static_cast<std::size_t>(i)]);

    const Json& perms = member(j, "perms");
    if (!perms.is_array() || perms.size() != 3) throw ParseError("perms must have 3 entries");
    for (int i = 0; i < 3; ++i) {
        const Json& p = perms[static_cast<std::size_t>(i)];
        if (!p.is_array() || p.size() != 4) throw ParseError("permutation must have 4 entries");
        std::array<bool, 4> seen{};
        for (int l = 0; l < 4; ++l) {
            if (!p[static_cast<std::size_t>(l)].is_number_integer()) throw ParseError("permutation entries must be integers");
            int v = p[static_cast<std::size_t>(l)].get<int>();
            if (v < 1 || v > 4 || seen[static_cast<std::size_t>(v - 1)]) throw ParseError("not a permutation of 1..4");
            seen[static_cast<std::size_t>(v - 1)] = true;
            d.perms[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)] = v;
        }
    }

    const Json& p = member(j, "p");
    const Json& c = member(j, "c");
    const Json& k = member(j, "k");
    if (!p.is_array() || p.size() != 3 || !c.is_array() || c.size() != 3 || !k.is_array() || k.size() != 3)
        throw ParseError("p, c, k must each have 3 entries");
    for (int i = 0; i < 3; ++i) {
        T4Config& cfg = d.configs[static_cast<std::size_t>(i)];
        cfg.p = vec3_field(p[static_cast<std::size_t>(i)]);
        const Json& legs = c[static_cast<std::size_t>(i)];
        const Json& ks = k[static_cast<std::size_t>(i)];
        if (!legs.is_array() || legs.size() != 4 || !ks.is_array() || ks.size() != 4)
            throw ParseError("c and k rows must have 4 entries");
        for (int l = 0; l < 4; ++l) {
            cfg.c[static_cast<std::size_t>(l)] = vec3_field(legs[static_cast<std::size_t>(l)]);
            cfg.k[static_cast<std::size_t>(l)] = rat_field(ks[static_cast<std::size_t>(l)]);
            int state = d.perms[static_cast<std::size_t>(i)][static_cast<std::size_t>(l)] - 1;
            cfg.points[static_cast<std::size_t>(l)] = d.states[static_cast<std::size_t>(state)];
        }
    }

    const Json& nodes = member(j, "nodes");
    if (!nodes.is_array() || nodes.size() != 12) throw ParseError("nodes must have 12 entries");
    for (int r = 0; r < 12; ++r) d.nodes[static_cast<std::size_t>(r)] = vec2_field(nodes[static_cast<std::size_t>(r)]);
    return d;
}

Json family_to_json(const OperatorFamily& F) {
    Json j;
    j["degree"] = F.degree();
    for (int i = 0; i < 3; ++i) {
        Json coeffs = Json::array();
        for (const auto& cc : F.q[static_cast<std::size_t>(i)].coeffs()) coeffs.push_back(to_string(cc));
        j["q" + std::to_string(i + 1)] = std::move(coeffs);
    }
    return j;
}

OperatorFamily family_from_json(const Json& j) {
    const Json& deg = member(j, "degree");
    if (!deg.is_number_integer()) throw ParseError("degree must be an integer");
    int d = deg.get<int>();
    if (d < 1) throw ParseError("degree must be positive");
    std::array<HomPoly2, 3> q{HomPoly2(d), HomPoly2(d), HomPoly2(d)};
    for (int i = 0; i < 3; ++i) {
        const Json& coeffs = member(j, ("q" + std::to_string(i + 1)).c_str());
        if (!coeffs.is_array() || static_cast<int>(coeffs.size()) != d + 1)
            throw ParseError("coefficient array has wrong length");
        std::vector<Rational> cs(static_cast<std::size_t>(d) + 1);
        for (int s = 0; s <= d; ++s) cs[static_cast<std::size_t>(s)] = rat_field(coeffs[static_cast<std::size_t>(s)]);
        q[static_cast<std::size_t>(i)] = HomPoly2(d, std::move(cs));
    }
    return OperatorFamily(q[0], q[1], q[2]);
}

Json report_to_json(const Report& rep) {
    Json j;
    j["title"] = rep.title();
    if (!rep.header().empty()) j["note"] = rep.header();
    j["overall"] = rep.overall_pass() ? "PASS" : "FAIL";
    j["checks"] = Json::array();
    for (const auto& e : rep.entries()) {
        Json c;
        c["name"] = e.name;
        c["status"] = status_string(e.status);
        c["witness"] = e.witness;
        j["checks"].push_back(std::move(c));
    }
    return j;
}

LargeT4Data load_dataset(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open input file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed document: ") + e.what());
    }
    return dataset_from_json(j);
}

} // namespace fourstate
