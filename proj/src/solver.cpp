#include "hamdual/solver.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <stdexcept>

#include "hamdual/error.hpp"

namespace hamdual {

std::string_view to_string(SolveResult r) {
    switch (r) {
        case SolveResult::Hamiltonian: return "hamiltonian";
        case SolveResult::NonHamiltonian: return "non_hamiltonian";
        case SolveResult::Aborted: return "aborted";
    }
    return "unknown";
}

SearchState::SearchState(const DualGraph& dual, const TriangleMap& triangles)
    : dual_(dual),
      triangles_(triangles),
      labels_(dual.face_count(), Label::Unassigned),
      parent_(dual.face_count()),
      size_(dual.face_count(), 1),
      unassigned_(dual.face_count()) {
    for (int f = 0; f < dual.face_count(); ++f) parent_[f] = f;
    set_label(dual.outer_vertex(), Label::Tree, false);
    trail_.clear();  // the root is part of level 0 and never undone
}

int SearchState::find(int f) const {
    while (parent_[f] != f) f = parent_[f];
    return f;
}

FaceId SearchState::fragment_of(FaceId f) const {
    return labels_[f] == Label::Tree ? find(f) : -1;
}

bool SearchState::join(FaceId f, FaceId g, DualEdgeId e) {
    int a = find(f), b = find(g);
    if (a == b) return false;
    if (size_[a] > size_[b]) std::swap(a, b);
    trail_.push_back({TrailEntry::Kind::Union, a, size_[b]});
    parent_[a] = b;
    size_[b] += size_[a];
    tree_edges_.push_back(e);
    trail_.push_back({TrailEntry::Kind::TreeEdge, e, 0});
    return true;
}

bool SearchState::set_label(FaceId f, Label l, bool forced) {
    if (labels_[f] != Label::Unassigned) return labels_[f] == l;
    labels_[f] = l;
    --unassigned_;
    trail_.push_back({TrailEntry::Kind::Label, f, 0});
    if (forced) ++forced_;
    if (l == Label::Tree) {
        ++tree_count_;
        for (const auto& nb : dual_.neighbors(f))
            if (labels_[nb.face] == Label::Tree && !join(f, nb.face, nb.edge)) return false;
    }
    return true;
}

bool SearchState::assign(FaceId f, Label l) { return set_label(f, l, false); }

bool SearchState::propagate() {
    bool changed = true;
    std::vector<int> seen_roots;
    while (changed) {
        changed = false;
        // A vertex touching one fragment twice would close a cycle there.
        for (FaceId u = 0; u < dual_.face_count(); ++u) {
            if (labels_[u] != Label::Unassigned) continue;
            seen_roots.clear();
            bool doubled = false;
            for (const auto& nb : dual_.neighbors(u)) {
                if (labels_[nb.face] != Label::Tree) continue;
                const int r = find(nb.face);
                if (std::find(seen_roots.begin(), seen_roots.end(), r) != seen_roots.end()) {
                    doubled = true;
                    break;
                }
                seen_roots.push_back(r);
            }
            if (doubled) {
                set_label(u, Label::Excluded, true);
                changed = true;
            }
        }
        // Every primal vertex needs a tree face among its three.
        for (const auto& t : triangles_.triples()) {
            int excluded = 0;
            FaceId open = -1;
            bool has_tree = false;
            for (FaceId f : t) {
                if (labels_[f] == Label::Excluded) ++excluded;
                else if (labels_[f] == Label::Tree) has_tree = true;
                else open = f;
            }
            if (has_tree) continue;
            if (excluded == 3) return false;
            if (excluded == 2) {
                if (!set_label(open, Label::Tree, true)) return false;
                changed = true;
            }
        }
    }
    return true;
}

bool SearchState::fragments_can_connect() const {
    if (fragment_count() <= 1) return true;
    std::vector<char> seen(dual_.face_count(), 0);
    std::deque<FaceId> queue{dual_.outer_vertex()};
    seen[dual_.outer_vertex()] = 1;
    int reached_tree = 0;
    while (!queue.empty()) {
        const FaceId f = queue.front();
        queue.pop_front();
        if (labels_[f] == Label::Tree) ++reached_tree;
        for (const auto& nb : dual_.neighbors(f)) {
            if (seen[nb.face] || labels_[nb.face] == Label::Excluded) continue;
            seen[nb.face] = 1;
            queue.push_back(nb.face);
        }
    }
    return reached_tree == tree_count_;
}

void SearchState::undo_to(std::size_t mark) {
    while (trail_.size() > mark) {
        const TrailEntry t = trail_.back();
        trail_.pop_back();
        switch (t.kind) {
            case TrailEntry::Kind::Label:
                if (labels_[t.a] == Label::Tree) --tree_count_;
                labels_[t.a] = Label::Unassigned;
                ++unassigned_;
                break;
            case TrailEntry::Kind::Union: {
                const int b = parent_[t.a];
                size_[b] = t.b;
                parent_[t.a] = t.a;
                break;
            }
            case TrailEntry::Kind::TreeEdge:
                tree_edges_.pop_back();
                break;
        }
    }
}

std::uint64_t SearchState::hash() const {
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&](std::uint64_t x) {
        h ^= x;
        h *= 1099511628211ULL;
    };
    for (auto l : labels_) mix(static_cast<std::uint64_t>(l));
    for (int p : parent_) mix(static_cast<std::uint64_t>(p));
    for (int s : size_) mix(static_cast<std::uint64_t>(s));
    for (int e : tree_edges_) mix(static_cast<std::uint64_t>(e) + 0x9e37);
    mix(static_cast<std::uint64_t>(unassigned_));
    mix(static_cast<std::uint64_t>(tree_count_));
    return h;
}

namespace {

class Search {
public:
    Search(const DualGraph& dual, const TriangleMap& triangles, const SolverConfig& config)
        : dual_(dual), triangles_(triangles), config_(config), state_(dual, triangles) {}

    SolveResult run(std::span<const std::pair<FaceId, Label>> assumptions) {
        start_ = std::chrono::steady_clock::now();
        bool ok = true;
        for (const auto& [f, l] : assumptions) ok = ok && state_.assign(f, l);
        ok = ok && state_.propagate() && state_.fragments_can_connect() && search();
        stats_.propagations = state_.forced();
        if (aborted_) return SolveResult::Aborted;
        return ok ? SolveResult::Hamiltonian : SolveResult::NonHamiltonian;
    }

    const SearchState& state() const { return state_; }
    SolveStats& stats() { return stats_; }

private:
    bool out_of_budget() {
        if (aborted_) return true;
        if (config_.max_nodes && stats_.nodes >= *config_.max_nodes) aborted_ = true;
        if (config_.max_seconds && (stats_.nodes & 255) == 0) {
            const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start_;
            if (dt.count() > *config_.max_seconds) aborted_ = true;
        }
        stats_.budget_hit = aborted_;
        return aborted_;
    }

    // Branch on f: Tree first, then the negation. The state is restored on
    // failure, so a false return leaves it as it was on entry.
    bool branch(FaceId f) {
        if (out_of_budget()) return false;
        ++stats_.nodes;
        const auto m = state_.mark();
        if (state_.assign(f, Label::Tree) && settle() && search()) return true;
        state_.undo_to(m);
        if (aborted_) return false;
        ++stats_.backtracks;
        if (state_.assign(f, Label::Excluded) && settle() && search()) return true;
        state_.undo_to(m);
        return false;
    }

    bool settle() { return state_.propagate() && state_.fragments_can_connect(); }

    // Number of already-labelled dual neighbours, counting parallel edges.
    int constraint_degree(FaceId f) const {
        int k = 0;
        for (const auto& nb : dual_.neighbors(f)) k += state_.label(nb.face) != Label::Unassigned;
        return k;
    }

    FaceId most_constrained(const std::vector<char>& candidate) const {
        FaceId best = -1;
        int best_deg = -1;
        for (FaceId f = 0; f < dual_.face_count(); ++f) {
            if (!candidate[f]) continue;
            const int d = constraint_degree(f);
            if (d > best_deg) best = f, best_deg = d;
        }
        return best;
    }

    bool search() {
        if (state_.fragment_count() > 1) {
            const FaceId root_fragment = state_.fragment_of(dual_.outer_vertex());
            for (FaceId f = 0; f < dual_.face_count(); ++f)
                if (state_.label(f) == Label::Tree && state_.fragment_of(f) != root_fragment)
                    return repair_disjoint(f);
        }
        if (state_.unassigned_count() == 0) return final_check();

        const FaceId root_fragment = state_.fragment_of(dual_.outer_vertex());
        std::vector<char> frontier(dual_.face_count(), 0);
        bool any = false;
        for (FaceId f = 0; f < dual_.face_count(); ++f) {
            if (state_.label(f) != Label::Tree || state_.fragment_of(f) != root_fragment) continue;
            for (const auto& nb : dual_.neighbors(f))
                if (state_.label(nb.face) == Label::Unassigned) frontier[nb.face] = any = true;
        }
        if (!any) {
            // Nothing left can join the tree, so the rest is excluded.
            const auto m = state_.mark();
            for (FaceId f = 0; f < dual_.face_count(); ++f)
                if (state_.label(f) == Label::Unassigned) state_.assign(f, Label::Excluded);
            if (state_.propagate() && search()) return true;
            state_.undo_to(m);
            return false;
        }
        return branch(most_constrained(frontier));
    }

    // Grow the stranded fragment containing `member` toward the root: branch
    // on unassigned neighbours of the fragment that still have a
    // non-excluded route to the root fragment avoiding the fragment itself.
    bool repair_disjoint(FaceId member) {
        const FaceId fragment = state_.fragment_of(member);
        const FaceId root_fragment = state_.fragment_of(dual_.outer_vertex());
        std::vector<char> reach(dual_.face_count(), 0);
        std::deque<FaceId> queue;
        for (FaceId f = 0; f < dual_.face_count(); ++f)
            if (state_.label(f) == Label::Tree && state_.fragment_of(f) == root_fragment) {
                reach[f] = 1;
                queue.push_back(f);
            }
        while (!queue.empty()) {
            const FaceId f = queue.front();
            queue.pop_front();
            for (const auto& nb : dual_.neighbors(f)) {
                const FaceId w = nb.face;
                if (reach[w] || state_.label(w) == Label::Excluded) continue;
                if (state_.label(w) == Label::Tree && state_.fragment_of(w) == fragment) continue;
                reach[w] = 1;
                queue.push_back(w);
            }
        }
        std::vector<char> candidate(dual_.face_count(), 0);
        bool any = false;
        for (FaceId f = 0; f < dual_.face_count(); ++f) {
            if (state_.label(f) != Label::Tree || state_.fragment_of(f) != fragment) continue;
            for (const auto& nb : dual_.neighbors(f))
                if (state_.label(nb.face) == Label::Unassigned && reach[nb.face])
                    candidate[nb.face] = any = true;
        }
        if (!any) return false;
        ++stats_.repairs;
        return branch(most_constrained(candidate));
    }

    // Independent of propagation: one fragment holding the root, acyclic,
    // induced, dominating.
    bool final_check() const {
        const int faces = dual_.face_count();
        const FaceId root = dual_.outer_vertex();
        if (state_.label(root) != Label::Tree) return false;
        int tree = 0;
        for (FaceId f = 0; f < faces; ++f) {
            if (state_.label(f) == Label::Unassigned) return false;
            if (state_.label(f) == Label::Tree) ++tree;
        }
        std::vector<char> is_edge(dual_.edge_count(), 0);
        for (DualEdgeId e : state_.tree_edges()) is_edge[e] = 1;
        for (DualEdgeId e = 0; e < dual_.edge_count(); ++e) {
            const auto& de = dual_.edge(e);
            const bool both = state_.label(de.a) == Label::Tree && state_.label(de.b) == Label::Tree;
            if (both != static_cast<bool>(is_edge[e])) return false;
        }
        if (static_cast<int>(state_.tree_edges().size()) != tree - 1) return false;
        std::vector<char> seen(faces, 0);
        std::deque<FaceId> queue{root};
        seen[root] = 1;
        int reached = 1;
        while (!queue.empty()) {
            const FaceId f = queue.front();
            queue.pop_front();
            for (const auto& nb : dual_.neighbors(f))
                if (is_edge[nb.edge] && !seen[nb.face]) {
                    seen[nb.face] = 1;
                    ++reached;
                    queue.push_back(nb.face);
                }
        }
        if (reached != tree) return false;
        for (const auto& t : triangles_.triples())
            if (state_.label(t[0]) != Label::Tree && state_.label(t[1]) != Label::Tree &&
                state_.label(t[2]) != Label::Tree)
                return false;
        return true;
    }

    const DualGraph& dual_;
    const TriangleMap& triangles_;
    const SolverConfig& config_;
    SearchState state_;
    SolveStats stats_;
    bool aborted_ = false;
    std::chrono::steady_clock::time_point start_;
};

}  // namespace

SolveOutcome solve(const RotationEmbedding& g, const DualGraph& dual,
                   const TriangleMap& triangles, const SolverConfig& config) {
    return solve_with_assumptions(g, dual, triangles, {}, config);
}

SolveOutcome solve_with_assumptions(const RotationEmbedding& g, const DualGraph& dual,
                                    const TriangleMap& triangles,
                                    std::span<const std::pair<FaceId, Label>> assumptions,
                                    const SolverConfig& config) {
    for (const auto& a : assumptions)
        if (a.first < 0 || a.first >= dual.face_count())
            throw Error(ErrorCode::IndexOutOfRange, "face " + std::to_string(a.first));
    const auto t0 = std::chrono::steady_clock::now();
    Search search(dual, triangles, config);
    SolveOutcome out;
    out.result = search.run(assumptions);
    out.stats = search.stats();
    if (out.result == SolveResult::Hamiltonian) {
        Certificate cert;
        cert.root = dual.outer_vertex();
        for (FaceId f = 0; f < dual.face_count(); ++f)
            if (search.state().label(f) == Label::Tree) cert.tree_vertices.push_back(f);
        cert.tree_edges = search.state().tree_edges();
        std::sort(cert.tree_edges.begin(), cert.tree_edges.end());
        if (!check_theorem1(cert, dual, triangles).empty())
            throw std::logic_error("solver produced a tree that fails the certificate check");
        cert.cycle = reconstruct_cycle(cert, dual, g);
        if (!verify_hamiltonian(cert.cycle, g))
            throw std::logic_error("solver certificate does not yield a Hamiltonian cycle");
        out.certificate = std::move(cert);
    }
    const std::chrono::duration<double, std::milli> dt = std::chrono::steady_clock::now() - t0;
    out.stats.wall_time_ms = dt.count();
    return out;
}

}  // namespace hamdual
