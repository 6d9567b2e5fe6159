#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "hamdual/dual.hpp"
#include "hamdual/embedding.hpp"

namespace hamdual {

/// The current cycle together with the face bookkeeping of the expansion.
/// Faces outside the cycle are exactly the outer face plus every face that
/// has been expanded through, and those are the vertices of the dual tree
/// spanned by `chosen_dual_edges`.
struct CycleState {
    FaceId outer = -1;
    std::vector<VertexId> sigma;       // cycle in traversal order
    std::vector<char> vertex_on_cycle;  // by vertex
    std::vector<char> edge_on_cycle;    // by primal edge
    std::vector<char> interior;         // by face
    int interior_count = 0;
    std::vector<DualEdgeId> chosen_dual_edges;
    std::vector<FaceId> removed_faces;  // parallel to chosen_dual_edges
    int step = 0;

    bool on_cycle(EdgeId e) const { return edge_on_cycle[e] != 0; }
    bool is_interior(FaceId f) const { return interior[f] != 0; }
};

/// P_e: the boundary of e's interior-side face with e removed, listed from
/// the endpoint of e that precedes the other in `sigma`.
struct ComplementaryPath {
    EdgeId edge = -1;
    FaceId face = -1;
    std::vector<VertexId> vertices;  // endpoints included
};

/// Instrumentation for the uniqueness check: which face boundaries a path
/// query read, and how many candidate paths it assembled.
struct PathProbe {
    std::vector<FaceId> inspected_faces;
    int candidates = 0;
};

CycleState initial_cycle(const RotationEmbedding& g, const DualGraph& dual);

/// Absent when e's interior-side face is gone or the path would touch the
/// cycle internally. Throws EdgeNotOnCycle.
std::optional<ComplementaryPath> complementary_path(const CycleState& state,
                                                    const RotationEmbedding& g,
                                                    const DualGraph& dual, EdgeId e,
                                                    PathProbe* probe = nullptr);

/// One step of the expansion. Throws NoComplementaryPath (or EdgeNotOnCycle).
CycleState expand(const CycleState& state, const RotationEmbedding& g, const DualGraph& dual,
                  EdgeId e);

/// Cycle edges that currently admit a complementary path, ascending by id.
std::vector<EdgeId> expandable_edges(const CycleState& state, const RotationEmbedding& g,
                                     const DualGraph& dual);

struct ExpansionPolicy {
    enum class Kind { Fifo, Random, Scripted };
    Kind kind = Kind::Fifo;
    std::uint64_t seed = 0;
    std::vector<EdgeId> script;

    static ExpansionPolicy fifo() { return {}; }
    static ExpansionPolicy random(std::uint64_t seed) { return {Kind::Random, seed, {}}; }
    static ExpansionPolicy scripted(std::vector<EdgeId> edges) {
        return {Kind::Scripted, 0, std::move(edges)};
    }
};

struct ExpansionStep {
    int index = 0;
    ComplementaryPath path;
    DualEdgeId dual_edge = -1;
};

using StepObserver =
    std::function<void(const ExpansionStep&, const CycleState& before, const CycleState& after)>;

/// Expands until no cycle edge admits a complementary path. A scripted
/// policy runs exactly its script and throws ScriptEdgeInvalid on the first
/// edge that cannot be expanded.
CycleState run_expansion(const RotationEmbedding& g, const DualGraph& dual,
                         const ExpansionPolicy& policy, const StepObserver& observer = {});

struct DualTree {
    FaceId root = -1;
    std::vector<FaceId> vertices;  // ascending
    std::vector<DualEdgeId> edges;  // ascending
};

/// The chosen dual edges plus the outer vertex. Throws std::logic_error if
/// they do not form a tree.
DualTree tree_of(const CycleState& state, const DualGraph& dual);

// Invariant checks used by the test suites; each returns an empty string on
// success or a description of the first violation.
std::string check_simple_cycle(const CycleState& state, const RotationEmbedding& g);
std::string check_interior_partition(const CycleState& state, const TriangleMap& triangles);
std::string check_tree_faces_on_cycle(const CycleState& state, const RotationEmbedding& g);

}  // namespace hamdual
