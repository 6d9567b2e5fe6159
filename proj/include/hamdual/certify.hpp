#pragma once

#include <span>
#include <string>
#include <vector>

#include "hamdual/dual.hpp"
#include "hamdual/embedding.hpp"
#include "hamdual/expansion.hpp"

namespace hamdual {

/// A rooted dual tree claimed to be induced and dominating, plus the cycle it
/// encodes. Vertex ids in `cycle` are 0-based.
struct Certificate {
    FaceId root = -1;
    std::vector<FaceId> tree_vertices;
    std::vector<DualEdgeId> tree_edges;
    std::vector<VertexId> cycle;
};

enum class ViolationKind {
    Duplicate,        // repeated vertex or edge id
    WrongRoot,        // root is not the outer vertex or not in the tree
    EdgeOutsideTree,  // a tree edge has an endpoint that is not a tree vertex
    HasCycle,
    Disconnected,
    Domination,  // a primal vertex has no incident tree face
    Chord,       // a dual edge joins two tree vertices but is not a tree edge
};

std::string_view to_string(ViolationKind kind);

struct Violation {
    ViolationKind kind;
    std::string detail;
};

/// Reports every violation, not just the first. Throws IndexOutOfRange for
/// ids outside the dual.
std::vector<Violation> check_theorem1(const Certificate& cert, const DualGraph& dual,
                                      const TriangleMap& triangles);

/// Cycle made of the primal edges whose dual has exactly one endpoint in the
/// tree, in canonical form. Throws ReconstructionFailed if those edges are
/// not a single spanning cycle.
std::vector<VertexId> reconstruct_cycle(const Certificate& cert, const DualGraph& dual,
                                        const RotationEmbedding& g);

bool verify_hamiltonian(std::span<const VertexId> cycle, const RotationEmbedding& g);

/// Smallest vertex first, then the direction whose second vertex is smaller.
std::vector<VertexId> canonical_cycle(std::vector<VertexId> cycle);

/// Tree edges in breadth-first discovery order from the root; children are
/// visited by ascending dual edge id.
std::vector<DualEdgeId> bfs_edge_order(const Certificate& cert, const DualGraph& dual);

/// Replays the expansion with the tree edges as a script (breadth-first
/// order unless `order` is given) and checks that the final cycle equals
/// reconstruct_cycle. Throws ReplayMismatch naming the failing step.
CycleState replay_expansion(const Certificate& cert, const RotationEmbedding& g,
                            const DualGraph& dual);
CycleState replay_expansion(const Certificate& cert, const RotationEmbedding& g,
                            const DualGraph& dual, std::span<const DualEdgeId> order);

}  // namespace hamdual
