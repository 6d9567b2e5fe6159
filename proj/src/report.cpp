#include "hamdual/report.hpp"

#include <string>

#include "hamdual/error.hpp"

namespace hamdual {

Json certificate_to_json(const Certificate& cert, const DualGraph& dual) {
    Json edges = Json::array();
    for (DualEdgeId e : cert.tree_edges) edges.push_back({dual.edge(e).a, dual.edge(e).b});
    Json cycle = Json::array();
    for (VertexId v : cert.cycle) cycle.push_back(v + 1);
    return Json{{"root", cert.root},
                {"tree_vertices", cert.tree_vertices},
                {"tree_edges", std::move(edges)},
                {"cycle", std::move(cycle)}};
}

Certificate certificate_from_json(const Json& j, const DualGraph& dual) {
    Certificate cert;
    try {
        cert.root = j.at("root").get<FaceId>();
        cert.tree_vertices = j.at("tree_vertices").get<std::vector<FaceId>>();
        for (const auto& pair : j.at("tree_edges")) {
            const auto ends = pair.get<std::vector<FaceId>>();
            if (ends.size() != 2)
                throw Error(ErrorCode::ParseError, "tree edge must be a face pair");
            DualEdgeId found = -1;
            if (ends[0] >= 0 && ends[0] < dual.face_count())
                for (const auto& nb : dual.neighbors(ends[0]))
                    if (nb.face == ends[1] && (found < 0 || nb.edge < found)) found = nb.edge;
            if (found < 0)
                throw Error(ErrorCode::IndexOutOfRange,
                            "faces " + std::to_string(ends[0]) + " and " +
                                std::to_string(ends[1]) + " are not adjacent");
            cert.tree_edges.push_back(found);
        }
        if (j.contains("cycle"))
            for (const auto& v : j.at("cycle")) cert.cycle.push_back(v.get<VertexId>() - 1);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("certificate: ") + e.what());
    }
    return cert;
}

Json stats_to_json(const RotationEmbedding& g, const SolveOutcome& outcome, bool timing) {
    const auto& s = outcome.stats;
    return Json{{"n", g.vertex_count()},
                {"e", g.edge_count()},
                {"f", g.face_count()},
                {"result", std::string(to_string(outcome.result))},
                {"nodes", s.nodes},
                {"propagations", s.propagations},
                {"backtracks", s.backtracks},
                {"repairs", s.repairs},
                {"wall_time_ms", timing ? Json(s.wall_time_ms) : Json(nullptr)},
                {"budget_hit", s.budget_hit}};
}

Json step_to_json(const ExpansionStep& step, const RotationEmbedding& g) {
    const auto& ed = g.edge(step.path.edge);
    Json path = Json::array();
    for (VertexId v : step.path.vertices) path.push_back(v + 1);
    return Json{{"step", step.index},
                {"edge_id", step.path.edge},
                {"edge", {ed.u + 1, ed.v + 1}},
                {"path", std::move(path)},
                {"removed_face", step.path.face},
                {"dual_edge", step.dual_edge}};
}

}  // namespace hamdual
