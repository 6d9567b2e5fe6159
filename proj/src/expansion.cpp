#include "hamdual/expansion.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

#include "hamdual/error.hpp"

namespace hamdual {

CycleState initial_cycle(const RotationEmbedding& g, const DualGraph& dual) {
    CycleState s;
    s.outer = dual.outer_vertex();
    s.vertex_on_cycle.assign(g.vertex_count(), 0);
    s.edge_on_cycle.assign(g.edge_count(), 0);
    s.interior.assign(g.face_count(), 1);
    s.interior[s.outer] = 0;
    s.interior_count = g.face_count() - 1;
    for (const auto& c : g.face(s.outer).boundary) {
        s.sigma.push_back(c.vertex);
        s.vertex_on_cycle[c.vertex] = 1;
        s.edge_on_cycle[g.dart(c.dart).edge] = 1;
    }
    return s;
}

namespace {

// Position i such that e joins sigma[i] and sigma[i+1] (cyclically).
std::size_t cycle_position(const CycleState& s, const RotationEmbedding& g, EdgeId e) {
    const auto& ed = g.edge(e);
    const std::size_t len = s.sigma.size();
    for (std::size_t i = 0; i < len; ++i) {
        const VertexId a = s.sigma[i], b = s.sigma[(i + 1) % len];
        if ((a == ed.u && b == ed.v) || (a == ed.v && b == ed.u)) return i;
    }
    throw std::logic_error("edge flagged on cycle but not consecutive in sigma");
}

}  // namespace

std::optional<ComplementaryPath> complementary_path(const CycleState& state,
                                                    const RotationEmbedding& g,
                                                    const DualGraph& dual, EdgeId e,
                                                    PathProbe* probe) {
    if (e < 0 || e >= g.edge_count() || !state.on_cycle(e))
        throw Error(ErrorCode::EdgeNotOnCycle, "edge " + std::to_string(e));

    // Only membership of the two flanking faces is consulted to pick a side;
    // the exterior face's boundary is never read.
    const DualEdge& de = dual.edge(dual.dual_edge_of(e));
    FaceId face = -1;
    DartId dart = -1;
    const DartId d0 = g.edge(e).dart;
    if (state.is_interior(de.a)) {
        face = de.a;
        dart = d0;
    } else if (state.is_interior(de.b)) {
        face = de.b;
        dart = g.twin(d0);
    } else {
        return std::nullopt;
    }

    if (probe) probe->inspected_faces.push_back(face);
    // Walk the face from the head of `dart` back around to its origin.
    std::vector<VertexId> walk;
    for (DartId d = g.next_in_face(dart); d != dart; d = g.next_in_face(d)) {
        const VertexId v = g.dart(d).origin;
        walk.push_back(v);
        if (v != g.dart(dart).origin && v != g.head(dart) && state.vertex_on_cycle[v])
            return std::nullopt;
    }
    walk.push_back(g.dart(dart).origin);
    if (probe) ++probe->candidates;

    ComplementaryPath path{e, face, std::move(walk)};
    const std::size_t i = cycle_position(state, g, e);
    if (path.vertices.front() != state.sigma[i])
        std::reverse(path.vertices.begin(), path.vertices.end());
    return path;
}

namespace {

CycleState apply_path(const CycleState& state, const RotationEmbedding& g,
                      const ComplementaryPath& path) {
    CycleState next = state;
    const std::size_t i = cycle_position(state, g, path.edge);
    next.sigma.insert(next.sigma.begin() + static_cast<std::ptrdiff_t>(i + 1),
                      path.vertices.begin() + 1, path.vertices.end() - 1);
    for (std::size_t k = 1; k + 1 < path.vertices.size(); ++k)
        next.vertex_on_cycle[path.vertices[k]] = 1;
    for (std::size_t k = 0; k + 1 < path.vertices.size(); ++k)
        next.edge_on_cycle[g.find_edge(path.vertices[k], path.vertices[k + 1])] = 1;
    next.edge_on_cycle[path.edge] = 0;
    next.interior[path.face] = 0;
    --next.interior_count;
    next.chosen_dual_edges.push_back(path.edge);
    next.removed_faces.push_back(path.face);
    ++next.step;
    return next;
}

}  // namespace

CycleState expand(const CycleState& state, const RotationEmbedding& g, const DualGraph& dual,
                  EdgeId e) {
    auto path = complementary_path(state, g, dual, e);
    if (!path) throw Error(ErrorCode::NoComplementaryPath, "edge " + std::to_string(e));
    return apply_path(state, g, *path);
}

std::vector<EdgeId> expandable_edges(const CycleState& state, const RotationEmbedding& g,
                                     const DualGraph& dual) {
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (state.on_cycle(e) && complementary_path(state, g, dual, e)) out.push_back(e);
    return out;
}

CycleState run_expansion(const RotationEmbedding& g, const DualGraph& dual,
                         const ExpansionPolicy& policy, const StepObserver& observer) {
    CycleState state = initial_cycle(g, dual);
    auto advance = [&](const ComplementaryPath& path) {
        CycleState next = apply_path(state, g, path);
        if (observer) observer({state.step, path, path.edge}, state, next);
        state = std::move(next);
    };

    switch (policy.kind) {
        case ExpansionPolicy::Kind::Fifo: {
            // Once a cycle edge has no complementary path it never regains
            // one: cycle vertices only accumulate and its interior face stays
            // put, so a single pass over the queue suffices.
            std::deque<EdgeId> queue;
            for (std::size_t i = 0; i < state.sigma.size(); ++i)
                queue.push_back(g.find_edge(state.sigma[i],
                                            state.sigma[(i + 1) % state.sigma.size()]));
            while (!queue.empty()) {
                const EdgeId e = queue.front();
                queue.pop_front();
                if (!state.on_cycle(e)) continue;
                auto path = complementary_path(state, g, dual, e);
                if (!path) continue;
                advance(*path);
                for (std::size_t k = 0; k + 1 < path->vertices.size(); ++k)
                    queue.push_back(g.find_edge(path->vertices[k], path->vertices[k + 1]));
            }
            break;
        }
        case ExpansionPolicy::Kind::Random: {
            std::mt19937_64 rng(policy.seed);
            for (;;) {
                const auto options = expandable_edges(state, g, dual);
                if (options.empty()) break;
                const EdgeId e = options[rng() % options.size()];
                advance(*complementary_path(state, g, dual, e));
            }
            break;
        }
        case ExpansionPolicy::Kind::Scripted: {
            for (std::size_t i = 0; i < policy.script.size(); ++i) {
                const EdgeId e = policy.script[i];
                std::optional<ComplementaryPath> path;
                if (e >= 0 && e < g.edge_count() && state.on_cycle(e))
                    path = complementary_path(state, g, dual, e);
                if (!path)
                    throw Error(ErrorCode::ScriptEdgeInvalid,
                                "script step " + std::to_string(i) + ": edge " +
                                    std::to_string(e) + " cannot be expanded");
                advance(*path);
            }
            break;
        }
    }
    return state;
}

DualTree tree_of(const CycleState& state, const DualGraph& dual) {
    DualTree t;
    t.root = state.outer;
    t.vertices.push_back(state.outer);
    for (DualEdgeId e : state.chosen_dual_edges) {
        t.vertices.push_back(dual.edge(e).a);
        t.vertices.push_back(dual.edge(e).b);
    }
    std::sort(t.vertices.begin(), t.vertices.end());
    t.vertices.erase(std::unique(t.vertices.begin(), t.vertices.end()), t.vertices.end());
    t.edges = state.chosen_dual_edges;
    std::sort(t.edges.begin(), t.edges.end());

    std::vector<int> parent(dual.face_count());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (DualEdgeId e : t.edges) {
        const int ra = find(dual.edge(e).a), rb = find(dual.edge(e).b);
        if (ra == rb) throw std::logic_error("chosen dual edges contain a cycle");
        parent[ra] = rb;
    }
    if (t.edges.size() + 1 != t.vertices.size())
        throw std::logic_error("chosen dual edges are not connected to the root");
    return t;
}

std::string check_simple_cycle(const CycleState& state, const RotationEmbedding& g) {
    const auto& s = state.sigma;
    if (s.size() < 3) return "cycle shorter than 3";
    std::vector<char> seen(g.vertex_count(), 0);
    int on = 0;
    for (VertexId v : s) {
        if (seen[v]) return "vertex " + std::to_string(v) + " repeated";
        seen[v] = 1;
        if (!state.vertex_on_cycle[v]) return "vertex flag missing";
    }
    for (char c : state.vertex_on_cycle) on += c;
    if (on != static_cast<int>(s.size())) return "vertex flags disagree with sigma";
    int edges = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const EdgeId e = g.find_edge(s[i], s[(i + 1) % s.size()]);
        if (e < 0) return "consecutive vertices not adjacent";
        if (!state.on_cycle(e)) return "edge flag missing";
    }
    for (char c : state.edge_on_cycle) edges += c;
    if (edges != static_cast<int>(s.size())) return "edge flags disagree with sigma";
    return {};
}

std::string check_interior_partition(const CycleState& state, const TriangleMap& triangles) {
    const int faces = static_cast<int>(state.interior.size());
    std::vector<char> outside(faces, 0);
    outside[state.outer] = 1;
    for (FaceId f : state.removed_faces) outside[f] = 1;
    int interior = 0;
    for (FaceId f = 0; f < faces; ++f) {
        if (state.is_interior(f) == static_cast<bool>(outside[f]))
            return "face " + std::to_string(f) + " is both or neither inside and outside";
        interior += state.interior[f];
    }
    if (interior != state.interior_count) return "interior count out of sync";
    if (state.interior_count != faces - 1 - state.step) return "interior count != f - 1 - step";
    for (VertexId v = 0; v < triangles.size(); ++v) {
        if (state.vertex_on_cycle[v]) continue;
        for (FaceId f : triangles[v])
            if (!state.is_interior(f))
                return "off-cycle vertex " + std::to_string(v) + " touches outside face " +
                       std::to_string(f);
    }
    return {};
}

std::string check_tree_faces_on_cycle(const CycleState& state, const RotationEmbedding& g) {
    for (FaceId f = 0; f < g.face_count(); ++f) {
        if (state.is_interior(f)) continue;
        for (const auto& c : g.face(f).boundary)
            if (!state.vertex_on_cycle[c.vertex])
                return "vertex " + std::to_string(c.vertex) + " of outside face " +
                       std::to_string(f) + " is off the cycle";
    }
    return {};
}

}  // namespace hamdual
