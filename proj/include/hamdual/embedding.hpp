#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace hamdual {

using VertexId = int;
using DartId = int;
using EdgeId = int;
using FaceId = int;

/// Half-edge of the rotation system. Darts of vertex v are 3v, 3v+1, 3v+2 in
/// clockwise order, so the rotation successor is implicit in the id.
struct Dart {
    VertexId origin = -1;
    DartId twin = -1;
    EdgeId edge = -1;
    FaceId face = -1;
};

struct Face {
    FaceId id = -1;
    struct Corner {
        VertexId vertex;
        DartId dart;  // dart leaving `vertex` along this face
    };
    std::vector<Corner> boundary;

    std::size_t size() const { return boundary.size(); }
};

struct Edge {
    VertexId u = -1;
    VertexId v = -1;
    DartId dart = -1;  // the dart u -> v; its twin is v -> u
};

/// A cubic plane graph given by a clockwise rotation system. Construction
/// validates simplicity, cubicity, planarity (Euler count) and that every
/// face walk is a simple cycle; once built the object is immutable.
///
/// Vertex ids are 0-based here; the text and planar_code formats use 1-based
/// ids and the parsers translate.
class RotationEmbedding {
public:
    /// `rotations[v]` lists the three neighbours of v in clockwise order.
    /// Throws Error on any structural violation.
    explicit RotationEmbedding(std::vector<std::array<VertexId, 3>> rotations);

    int vertex_count() const { return static_cast<int>(rotations_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int face_count() const { return static_cast<int>(faces_.size()); }
    int dart_count() const { return static_cast<int>(darts_.size()); }

    const std::array<VertexId, 3>& rotation(VertexId v) const { return rotations_[v]; }
    const std::vector<std::array<VertexId, 3>>& rotations() const { return rotations_; }

    const Dart& dart(DartId d) const { return darts_[d]; }
    DartId twin(DartId d) const { return darts_[d].twin; }
    static DartId next_around_origin(DartId d) { return d - d % 3 + (d % 3 + 1) % 3; }
    /// Successor of d along its face: d -> next_around_origin(twin(d)).
    DartId next_in_face(DartId d) const { return next_around_origin(darts_[d].twin); }
    VertexId head(DartId d) const { return darts_[darts_[d].twin].origin; }

    const Edge& edge(EdgeId e) const { return edges_[e]; }
    std::span<const Edge> edges() const { return edges_; }
    /// Edge id joining u and v, or -1.
    EdgeId find_edge(VertexId u, VertexId v) const;
    std::array<EdgeId, 3> incident_edges(VertexId v) const;

    const Face& face(FaceId f) const { return faces_[f]; }
    std::span<const Face> faces() const { return faces_; }
    /// The two faces flanking e: [face of u->v, face of v->u].
    std::array<FaceId, 2> edge_faces(EdgeId e) const;

private:
    std::vector<std::array<VertexId, 3>> rotations_;
    std::vector<Dart> darts_;
    std::vector<Edge> edges_;
    std::vector<Face> faces_;
};

/// Face orbits of d -> next_around_origin(twin(d)), ids ordered by the
/// smallest dart in each orbit. Works on any embedding value.
std::vector<Face> enumerate_faces(const RotationEmbedding& g);

}  // namespace hamdual
