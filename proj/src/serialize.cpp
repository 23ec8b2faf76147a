#include "sgt/serialize.hpp"

#include <stdexcept>

#include "sgt/graph6.hpp"

namespace sgt {

json to_json(const Graph& g) { return json{{"graph6", emit_graph6(g)}}; }

Graph graph_from_json(const json& j) { return parse_graph6(j.at("graph6").get<std::string>()); }

json to_json(const MinorModel& m) {
    return json{{"type", "minor_model"}, {"branch_sets", m.branch_sets}};
}

MinorModel minor_model_from_json(const json& j) {
    MinorModel m;
    m.branch_sets = j.at("branch_sets").get<std::vector<VertexSet>>();
    return m;
}

json to_json(const SubdivisionEmbedding& e) {
    json paths = json::array();
    for (const auto& p : e.paths)
        paths.push_back(json{{"edge", {p.h_edge.first, p.h_edge.second}}, {"path", p.vertices}});
    return json{{"type", "subdivision"}, {"branch_map", e.branch_map}, {"paths", paths}};
}

SubdivisionEmbedding subdivision_from_json(const json& j) {
    SubdivisionEmbedding e;
    e.branch_map = j.at("branch_map").get<std::vector<int>>();
    for (const auto& p : j.at("paths")) {
        SubdivisionEmbedding::Path path;
        path.h_edge = {p.at("edge")[0].get<int>(), p.at("edge")[1].get<int>()};
        path.vertices = p.at("path").get<std::vector<int>>();
        e.paths.push_back(std::move(path));
    }
    return e;
}

json to_json(const GrowthStep& s) {
    json pairs = json::array();
    for (auto [u, v] : s.pairs) pairs.push_back({u, v});
    return json{{"kind", s.kind == GrowthKind::first ? "first" : "second"},
                {"pairs", pairs},
                {"degree_cap", s.degree_cap}};
}

GrowthStep growth_step_from_json(const json& j) {
    GrowthStep s;
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "first")
        s.kind = GrowthKind::first;
    else if (kind == "second")
        s.kind = GrowthKind::second;
    else
        throw std::invalid_argument("growth step: unknown kind " + kind);
    for (const auto& p : j.at("pairs")) s.pairs.emplace_back(p[0].get<int>(), p[1].get<int>());
    s.degree_cap = j.value("degree_cap", 0);
    return s;
}

json to_json(const GadgetBlueprint& bp) {
    json j{{"d", bp.d},
           {"parity", bp.parity == Parity::odd ? "odd" : "even"},
           {"block", to_json(bp.block)},
           {"ports", bp.ports}};
    if (bp.parity == Parity::odd) {
        j["x"] = bp.side_x;
        j["y"] = bp.side_y;
        json pairing = json::array();
        for (auto [a, b] : bp.y_pairing) pairing.push_back({a, b});
        j["y_pairing"] = pairing;
    } else {
        j["a"] = bp.a;
        j["b"] = bp.b;
        j["c"] = bp.c;
        j["c_prime"] = bp.cp;
        j["b_prime"] = bp.bp;
        j["a_prime"] = bp.ap;
        j["s"] = bp.s;
        j["t"] = bp.t;
        j["u"] = bp.u;
        j["s_prime"] = bp.sp;
        j["t_prime"] = bp.tp;
        j["u_prime"] = bp.up;
    }
    return j;
}

json to_json(const NoSubdivisionCertificate& c) {
    json blocks = json::array();
    for (const auto& b : c.blocks) {
        json halves = json::array();
        for (const auto& h : b.halves)
            halves.push_back(json{{"bag", h.bag}, {"cut", h.cut}, {"outside_degrees", h.outside_degrees}});
        blocks.push_back(json{{"vertices", b.vertices}, {"bags", halves}});
    }
    return json{{"type", "no_subdivision_certificate"},
                {"d", c.d},
                {"parity", c.parity == Parity::odd ? "odd" : "even"},
                {"forbidden", "K_" + std::to_string(c.d + 1) + " subdivision"},
                {"blocks", blocks}};
}

json to_json(const Graph& g, const Tangle& t) {
    json members = json::array();
    for (const auto& s : t.members)
        members.push_back(json{{"left", s.left_set()}, {"right", s.right_set()}});
    return json{{"graph6", emit_graph6(g)}, {"theta", t.theta}, {"separations", members}};
}

Tangle tangle_from_json(const json& j) {
    Tangle t;
    t.graph = parse_graph6(j.at("graph6").get<std::string>());
    t.theta = j.at("theta").get<int>();
    for (const auto& s : j.at("separations")) {
        std::uint64_t left = 0, right = 0;
        for (int v : s.at("left").get<std::vector<int>>()) left |= std::uint64_t{1} << v;
        for (int v : s.at("right").get<std::vector<int>>()) right |= std::uint64_t{1} << v;
        t.members.push_back({left, right});
    }
    std::sort(t.members.begin(), t.members.end());
    return t;
}

}  // namespace sgt
