#include "hamdual/embedding.hpp"

#include <algorithm>
#include <string>

#include "hamdual/error.hpp"

namespace hamdual {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::MalformedHeader: return "MalformedHeader";
        case ErrorCode::TruncatedRecord: return "TruncatedRecord";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::NotCubic: return "NotCubic";
        case ErrorCode::NotSimple: return "NotSimple";
        case ErrorCode::InconsistentAdjacency: return "InconsistentAdjacency";
        case ErrorCode::FaceNotCycle: return "FaceNotCycle";
        case ErrorCode::OddVertexCount: return "OddVertexCount";
        case ErrorCode::NotPlanar: return "NotPlanar";
        case ErrorCode::CycleNotInGraph: return "CycleNotInGraph";
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::EdgeNotOnCycle: return "EdgeNotOnCycle";
        case ErrorCode::NoComplementaryPath: return "NoComplementaryPath";
        case ErrorCode::ScriptEdgeInvalid: return "ScriptEdgeInvalid";
        case ErrorCode::ReconstructionFailed: return "ReconstructionFailed";
        case ErrorCode::ReplayMismatch: return "ReplayMismatch";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::Io: return "Io";
    }
    return "Unknown";
}

RotationEmbedding::RotationEmbedding(std::vector<std::array<VertexId, 3>> rotations)
    : rotations_(std::move(rotations)) {
    const int n = vertex_count();
    if (n == 0) throw Error(ErrorCode::ParseError, "graph has no vertices");
    if (n % 2 != 0) throw Error(ErrorCode::OddVertexCount, "n = " + std::to_string(n));

    for (VertexId v = 0; v < n; ++v) {
        const auto& r = rotations_[v];
        for (int k = 0; k < 3; ++k) {
            if (r[k] < 0 || r[k] >= n)
                throw Error(ErrorCode::InconsistentAdjacency,
                            "vertex " + std::to_string(v + 1) + " names unknown neighbour");
            if (r[k] == v)
                throw Error(ErrorCode::NotSimple, "loop at vertex " + std::to_string(v + 1));
        }
        if (r[0] == r[1] || r[1] == r[2] || r[0] == r[2])
            throw Error(ErrorCode::NotSimple, "parallel edges at vertex " + std::to_string(v + 1));
    }

    darts_.resize(3 * static_cast<std::size_t>(n));
    for (VertexId v = 0; v < n; ++v) {
        for (int k = 0; k < 3; ++k) {
            const DartId d = 3 * v + k;
            darts_[d].origin = v;
            const VertexId w = rotations_[v][k];
            const auto& rw = rotations_[w];
            const auto it = std::find(rw.begin(), rw.end(), v);
            if (it == rw.end())
                throw Error(ErrorCode::InconsistentAdjacency,
                            "vertex " + std::to_string(v + 1) + " lists " + std::to_string(w + 1) +
                                " but not conversely");
            darts_[d].twin = 3 * w + static_cast<int>(it - rw.begin());
        }
    }
    for (DartId d = 0; d < dart_count(); ++d) {
        if (d < darts_[d].twin) {
            darts_[d].edge = darts_[darts_[d].twin].edge = edge_count();
            edges_.push_back({darts_[d].origin, head(d), d});
        }
    }

    faces_ = enumerate_faces(*this);
    for (const Face& f : faces_) {
        for (const auto& c : f.boundary) darts_[c.dart].face = f.id;
        std::vector<VertexId> vs;
        vs.reserve(f.size());
        for (const auto& c : f.boundary) vs.push_back(c.vertex);
        std::sort(vs.begin(), vs.end());
        if (std::adjacent_find(vs.begin(), vs.end()) != vs.end())
            throw Error(ErrorCode::FaceNotCycle,
                        "face " + std::to_string(f.id) + " revisits a vertex");
    }
    if (face_count() != 2 + n / 2)
        throw Error(ErrorCode::NotPlanar, "rotation system has " + std::to_string(face_count()) +
                                              " faces, expected " + std::to_string(2 + n / 2));
}

EdgeId RotationEmbedding::find_edge(VertexId u, VertexId v) const {
    if (u < 0 || u >= vertex_count() || v < 0 || v >= vertex_count()) return -1;
    for (int k = 0; k < 3; ++k)
        if (rotations_[u][k] == v) return darts_[3 * u + k].edge;
    return -1;
}

std::array<EdgeId, 3> RotationEmbedding::incident_edges(VertexId v) const {
    return {darts_[3 * v].edge, darts_[3 * v + 1].edge, darts_[3 * v + 2].edge};
}

std::array<FaceId, 2> RotationEmbedding::edge_faces(EdgeId e) const {
    const DartId d = edges_[e].dart;
    return {darts_[d].face, darts_[darts_[d].twin].face};
}

std::vector<Face> enumerate_faces(const RotationEmbedding& g) {
    std::vector<Face> faces;
    std::vector<char> seen(g.dart_count(), 0);
    for (DartId start = 0; start < g.dart_count(); ++start) {
        if (seen[start]) continue;
        Face f;
        f.id = static_cast<FaceId>(faces.size());
        DartId d = start;
        do {
            seen[d] = 1;
            f.boundary.push_back({g.dart(d).origin, d});
            d = g.next_in_face(d);
        } while (d != start);
        faces.push_back(std::move(f));
    }
    return faces;
}

}  // namespace hamdual
