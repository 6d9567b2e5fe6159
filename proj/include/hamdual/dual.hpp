#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hamdual/embedding.hpp"

namespace hamdual {

using DualEdgeId = int;

struct DualEdge {
    FaceId a = -1;  // face of the primal dart u -> v
    FaceId b = -1;  // face of the primal dart v -> u
    EdgeId primal = -1;

    FaceId other(FaceId f) const { return f == a ? b : a; }
};

struct DualNeighbor {
    FaceId face;
    DualEdgeId edge;
};

/// Two faces that share more than one primal edge (a 2-edge-cut). Kept as
/// distinct dual edges; surfaced so callers can report it.
struct ParallelDualEdges {
    FaceId a;
    FaceId b;
    std::vector<DualEdgeId> edges;
};

/// Dual of a cubic plane graph. Dual edge k is the dual of primal edge k,
/// so the bijection is the identity on ids; the accessors still range-check.
class DualGraph {
public:
    DualGraph(const RotationEmbedding& g, FaceId outer);

    int face_count() const { return static_cast<int>(adjacency_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    FaceId outer_vertex() const { return outer_; }

    const DualEdge& edge(DualEdgeId e) const { return edges_[e]; }
    const std::vector<DualEdge>& edges() const { return edges_; }
    /// Neighbours of f in the boundary order of the face.
    const std::vector<DualNeighbor>& neighbors(FaceId f) const { return adjacency_[f]; }
    int degree(FaceId f) const { return static_cast<int>(adjacency_[f].size()); }

    DualEdgeId dual_edge_of(EdgeId primal) const;
    EdgeId primal_edge_of(DualEdgeId dual) const;

    const std::vector<ParallelDualEdges>& parallel_edges() const { return parallel_; }

private:
    std::vector<DualEdge> edges_;
    std::vector<std::vector<DualNeighbor>> adjacency_;
    FaceId outer_;
    std::vector<ParallelDualEdges> parallel_;
};

/// The three faces around each primal vertex, in its clockwise rotation order
/// (entry k is the face of dart 3v+k).
class TriangleMap {
public:
    explicit TriangleMap(const RotationEmbedding& g);

    const std::array<FaceId, 3>& operator[](VertexId v) const { return triples_[v]; }
    int size() const { return static_cast<int>(triples_.size()); }
    const std::vector<std::array<FaceId, 3>>& triples() const { return triples_; }
    /// Primal vertices whose triple contains f.
    const std::vector<VertexId>& vertices_of_face(FaceId f) const { return by_face_[f]; }

private:
    std::vector<std::array<FaceId, 3>> triples_;
    std::vector<std::vector<VertexId>> by_face_;
};

struct DualBuild {
    DualGraph dual;
    TriangleMap triangles;
};

/// `outer` defaults to face 0. Throws IndexOutOfRange for a bad face id.
DualBuild build_dual(const RotationEmbedding& g, std::optional<FaceId> outer = std::nullopt);

/// DOT rendering of the dual with the outer vertex highlighted and optional
/// tree vertices filled.
std::string dual_to_dot(const DualGraph& dual, const std::vector<FaceId>& highlighted = {});

}  // namespace hamdual
