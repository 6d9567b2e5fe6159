#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <string_view>
#include <vector>

#include "hamdual/certify.hpp"
#include "hamdual/dual.hpp"
#include "hamdual/embedding.hpp"

namespace hamdual {

enum class Label : std::uint8_t { Unassigned, Tree, Excluded };

struct SolveStats {
    std::uint64_t nodes = 0;         // branch decisions
    std::uint64_t propagations = 0;  // labels forced by propagation
    std::uint64_t backtracks = 0;    // negated guesses
    std::uint64_t repairs = 0;       // branch decisions made to reconnect a fragment
    double wall_time_ms = 0;
    bool budget_hit = false;
};

/// Labels of the dual vertices during the search, the tree edges implied by
/// them, and a union-find over tree vertices whose classes are the fragments
/// of the partial tree. Every change is recorded on a trail so that
/// undo_to(mark()) restores the exact prior state.
///
/// A vertex labelled Tree is joined to every Tree neighbour at once: in the
/// final tree all dual edges between tree vertices are tree edges, so joining
/// early loses nothing and makes a doubled attachment to one fragment an
/// immediate contradiction.
class SearchState {
public:
    SearchState(const DualGraph& dual, const TriangleMap& triangles);

    Label label(FaceId f) const { return labels_[f]; }
    int unassigned_count() const { return unassigned_; }
    int tree_count() const { return tree_count_; }
    int fragment_count() const { return tree_count_ - static_cast<int>(tree_edges_.size()); }
    FaceId fragment_of(FaceId f) const;
    const std::vector<DualEdgeId>& tree_edges() const { return tree_edges_; }

    /// Labels f and queues it for propagation. False on a conflicting label
    /// or when joining f would close a cycle in its fragment.
    bool assign(FaceId f, Label l);

    /// Runs the chord and domination rules to a fixpoint. False on a
    /// contradiction; the state is then left for the caller to undo.
    bool propagate();

    /// False if some fragment can no longer reach the root through
    /// non-excluded vertices.
    bool fragments_can_connect() const;

    std::size_t mark() const { return trail_.size(); }
    void undo_to(std::size_t mark);

    std::uint64_t hash() const;
    std::uint64_t forced() const { return forced_; }

private:
    struct TrailEntry {
        enum class Kind : std::uint8_t { Label, Union, TreeEdge } kind;
        int a;  // face, or absorbed root
        int b;  // previous size of the surviving root
    };

    int find(int f) const;
    bool join(FaceId f, FaceId g, DualEdgeId e);
    bool set_label(FaceId f, Label l, bool forced);

    const DualGraph& dual_;
    const TriangleMap& triangles_;
    std::vector<Label> labels_;
    std::vector<int> parent_;
    std::vector<int> size_;
    std::vector<DualEdgeId> tree_edges_;
    std::vector<TrailEntry> trail_;
    int unassigned_ = 0;
    int tree_count_ = 0;
    std::uint64_t forced_ = 0;
};

struct SolverConfig {
    std::optional<std::uint64_t> max_nodes;
    std::optional<double> max_seconds;
};

enum class SolveResult { Hamiltonian, NonHamiltonian, Aborted };
std::string_view to_string(SolveResult r);

struct SolveOutcome {
    SolveResult result = SolveResult::Aborted;
    std::optional<Certificate> certificate;  // set iff Hamiltonian
    SolveStats stats;
};

/// Searches for an induced dominating subtree of the dual rooted at the outer
/// vertex. A Hamiltonian outcome carries the tree and the cycle it bounds,
/// both re-checked by the certificate checker before returning.
SolveOutcome solve(const RotationEmbedding& g, const DualGraph& dual,
                   const TriangleMap& triangles, const SolverConfig& config = {});

/// solve() with some labels fixed before the search starts. A
/// NonHamiltonian result then only says no valid tree agrees with them.
SolveOutcome solve_with_assumptions(const RotationEmbedding& g, const DualGraph& dual,
                                    const TriangleMap& triangles,
                                    std::span<const std::pair<FaceId, Label>> assumptions,
                                    const SolverConfig& config = {});

}  // namespace hamdual
