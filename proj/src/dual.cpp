#include "hamdual/dual.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "hamdual/error.hpp"

namespace hamdual {

DualGraph::DualGraph(const RotationEmbedding& g, FaceId outer)
    : adjacency_(g.face_count()), outer_(outer) {
    if (outer < 0 || outer >= g.face_count())
        throw Error(ErrorCode::IndexOutOfRange, "outer face " + std::to_string(outer) +
                                                    " not in [0, " +
                                                    std::to_string(g.face_count()) + ")");
    edges_.reserve(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const auto [fa, fb] = g.edge_faces(e);
        edges_.push_back({fa, fb, e});
    }
    for (const Face& f : g.faces()) {
        for (const auto& c : f.boundary) {
            const EdgeId e = g.dart(c.dart).edge;
            adjacency_[f.id].push_back({edges_[e].other(f.id), e});
        }
    }

    std::map<std::pair<FaceId, FaceId>, std::vector<DualEdgeId>> by_pair;
    for (const auto& de : edges_)
        by_pair[{std::min(de.a, de.b), std::max(de.a, de.b)}].push_back(de.primal);
    for (auto& [key, ids] : by_pair)
        if (ids.size() > 1) parallel_.push_back({key.first, key.second, std::move(ids)});
}

DualEdgeId DualGraph::dual_edge_of(EdgeId primal) const {
    if (primal < 0 || primal >= edge_count())
        throw Error(ErrorCode::IndexOutOfRange, "primal edge " + std::to_string(primal));
    return primal;
}

EdgeId DualGraph::primal_edge_of(DualEdgeId dual) const {
    if (dual < 0 || dual >= edge_count())
        throw Error(ErrorCode::IndexOutOfRange, "dual edge " + std::to_string(dual));
    return edges_[dual].primal;
}

TriangleMap::TriangleMap(const RotationEmbedding& g)
    : triples_(g.vertex_count()), by_face_(g.face_count()) {
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        for (int k = 0; k < 3; ++k) {
            triples_[v][k] = g.dart(3 * v + k).face;
            by_face_[triples_[v][k]].push_back(v);
        }
    }
}

DualBuild build_dual(const RotationEmbedding& g, std::optional<FaceId> outer) {
    return {DualGraph(g, outer.value_or(0)), TriangleMap(g)};
}

std::string dual_to_dot(const DualGraph& dual, const std::vector<FaceId>& highlighted) {
    std::ostringstream out;
    out << "graph Dual {\n";
    for (FaceId f = 0; f < dual.face_count(); ++f) {
        out << "  f" << f;
        const bool hi = std::find(highlighted.begin(), highlighted.end(), f) != highlighted.end();
        if (f == dual.outer_vertex())
            out << " [shape=doublecircle" << (hi ? ", style=filled" : "") << "]";
        else if (hi)
            out << " [style=filled]";
        out << ";\n";
    }
    for (const auto& e : dual.edges())
        out << "  f" << e.a << " -- f" << e.b << " [label=" << e.primal << "];\n";
    out << "}\n";
    return out.str();
}

}  // namespace hamdual
