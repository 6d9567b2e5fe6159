#include "hamdual/certify.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "hamdual/error.hpp"

namespace hamdual {

std::string_view to_string(ViolationKind kind) {
    switch (kind) {
        case ViolationKind::Duplicate: return "Duplicate";
        case ViolationKind::WrongRoot: return "WrongRoot";
        case ViolationKind::EdgeOutsideTree: return "EdgeOutsideTree";
        case ViolationKind::HasCycle: return "HasCycle";
        case ViolationKind::Disconnected: return "Disconnected";
        case ViolationKind::Domination: return "Domination";
        case ViolationKind::Chord: return "Chord";
    }
    return "Unknown";
}

std::vector<Violation> check_theorem1(const Certificate& cert, const DualGraph& dual,
                                      const TriangleMap& triangles) {
    const int faces = dual.face_count();
    auto face_ok = [&](FaceId f) { return f >= 0 && f < faces; };
    if (!face_ok(cert.root))
        throw Error(ErrorCode::IndexOutOfRange, "root face " + std::to_string(cert.root));
    for (FaceId f : cert.tree_vertices)
        if (!face_ok(f)) throw Error(ErrorCode::IndexOutOfRange, "face " + std::to_string(f));
    for (DualEdgeId e : cert.tree_edges)
        if (e < 0 || e >= dual.edge_count())
            throw Error(ErrorCode::IndexOutOfRange, "dual edge " + std::to_string(e));

    std::vector<Violation> out;
    std::vector<char> in_tree(faces, 0), edge_in_tree(dual.edge_count(), 0);
    for (FaceId f : cert.tree_vertices) {
        if (in_tree[f]) out.push_back({ViolationKind::Duplicate, "face " + std::to_string(f)});
        in_tree[f] = 1;
    }
    for (DualEdgeId e : cert.tree_edges) {
        if (edge_in_tree[e])
            out.push_back({ViolationKind::Duplicate, "dual edge " + std::to_string(e)});
        edge_in_tree[e] = 1;
    }
    if (cert.root != dual.outer_vertex() || !in_tree[cert.root])
        out.push_back({ViolationKind::WrongRoot,
                       "root " + std::to_string(cert.root) + ", outer vertex " +
                           std::to_string(dual.outer_vertex())});

    // (a) tree: acyclic over its own edges and every vertex reachable from the root
    std::vector<int> parent(faces);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (DualEdgeId e : cert.tree_edges) {
        if (!edge_in_tree[e]) continue;
        edge_in_tree[e] = 2;  // visit each distinct edge once
        const auto& de = dual.edge(e);
        if (!in_tree[de.a] || !in_tree[de.b]) {
            out.push_back({ViolationKind::EdgeOutsideTree, "dual edge " + std::to_string(e)});
            continue;
        }
        const int ra = find(de.a), rb = find(de.b);
        if (ra == rb)
            out.push_back({ViolationKind::HasCycle, "dual edge " + std::to_string(e)});
        else
            parent[ra] = rb;
    }
    if (in_tree[cert.root]) {
        const int root_set = find(cert.root);
        for (FaceId f = 0; f < faces; ++f)
            if (in_tree[f] && find(f) != root_set)
                out.push_back({ViolationKind::Disconnected,
                               "face " + std::to_string(f) + " not joined to the root"});
    }

    // (b) every primal vertex touches a tree face
    for (VertexId v = 0; v < triangles.size(); ++v) {
        const auto& t = triangles[v];
        if (!in_tree[t[0]] && !in_tree[t[1]] && !in_tree[t[2]])
            out.push_back({ViolationKind::Domination,
                           "vertex " + std::to_string(v + 1) + " has no tree face"});
    }

    // (c) induced: no dual edge between tree vertices is left out
    for (DualEdgeId e = 0; e < dual.edge_count(); ++e) {
        const auto& de = dual.edge(e);
        if (in_tree[de.a] && in_tree[de.b] && !edge_in_tree[e])
            out.push_back({ViolationKind::Chord, "dual edge " + std::to_string(e) + " (faces " +
                                                     std::to_string(de.a) + "," +
                                                     std::to_string(de.b) + ")"});
    }
    return out;
}

std::vector<VertexId> canonical_cycle(std::vector<VertexId> cycle) {
    if (cycle.size() < 3) return cycle;
    const auto first = std::min_element(cycle.begin(), cycle.end());
    std::rotate(cycle.begin(), first, cycle.end());
    if (cycle.back() < cycle[1]) std::reverse(cycle.begin() + 1, cycle.end());
    return cycle;
}

std::vector<VertexId> reconstruct_cycle(const Certificate& cert, const DualGraph& dual,
                                        const RotationEmbedding& g) {
    std::vector<char> in_tree(dual.face_count(), 0);
    for (FaceId f : cert.tree_vertices) {
        if (f < 0 || f >= dual.face_count())
            throw Error(ErrorCode::IndexOutOfRange, "face " + std::to_string(f));
        in_tree[f] = 1;
    }
    const int n = g.vertex_count();
    std::vector<std::vector<VertexId>> adj(n);
    for (DualEdgeId e = 0; e < dual.edge_count(); ++e) {
        const auto& de = dual.edge(e);
        if (in_tree[de.a] != in_tree[de.b]) {
            const auto& pe = g.edge(dual.primal_edge_of(e));
            adj[pe.u].push_back(pe.v);
            adj[pe.v].push_back(pe.u);
        }
    }
    for (VertexId v = 0; v < n; ++v)
        if (adj[v].size() != 2)
            throw Error(ErrorCode::ReconstructionFailed,
                        "vertex " + std::to_string(v + 1) + " has " +
                            std::to_string(adj[v].size()) + " boundary edges");
    std::vector<VertexId> cycle{0};
    VertexId prev = 0, cur = adj[0][0];
    while (cur != 0) {
        cycle.push_back(cur);
        const VertexId next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
        prev = cur;
        cur = next;
    }
    if (static_cast<int>(cycle.size()) != n)
        throw Error(ErrorCode::ReconstructionFailed,
                    "boundary splits into several cycles (first has " +
                        std::to_string(cycle.size()) + " of " + std::to_string(n) +
                        " vertices)");
    return canonical_cycle(std::move(cycle));
}

bool verify_hamiltonian(std::span<const VertexId> cycle, const RotationEmbedding& g) {
    const int n = g.vertex_count();
    if (static_cast<int>(cycle.size()) != n || n < 3) return false;
    std::vector<char> seen(n, 0);
    for (VertexId v : cycle) {
        if (v < 0 || v >= n || seen[v]) return false;
        seen[v] = 1;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
        if (g.find_edge(cycle[i], cycle[(i + 1) % cycle.size()]) < 0) return false;
    return true;
}

std::vector<DualEdgeId> bfs_edge_order(const Certificate& cert, const DualGraph& dual) {
    std::vector<std::vector<std::pair<DualEdgeId, FaceId>>> adj(dual.face_count());
    auto sorted = cert.tree_edges;
    std::sort(sorted.begin(), sorted.end());
    for (DualEdgeId e : sorted) {
        const auto& de = dual.edge(e);
        adj[de.a].push_back({e, de.b});
        adj[de.b].push_back({e, de.a});
    }
    std::vector<char> seen(dual.face_count(), 0);
    std::vector<DualEdgeId> order;
    std::deque<FaceId> queue{cert.root};
    seen[cert.root] = 1;
    while (!queue.empty()) {
        const FaceId f = queue.front();
        queue.pop_front();
        for (const auto& [e, w] : adj[f]) {
            if (seen[w]) continue;
            seen[w] = 1;
            order.push_back(e);
            queue.push_back(w);
        }
    }
    return order;
}

CycleState replay_expansion(const Certificate& cert, const RotationEmbedding& g,
                            const DualGraph& dual) {
    const auto order = bfs_edge_order(cert, dual);
    return replay_expansion(cert, g, dual, order);
}

CycleState replay_expansion(const Certificate& cert, const RotationEmbedding& g,
                            const DualGraph& dual, std::span<const DualEdgeId> order) {
    std::vector<EdgeId> script;
    for (DualEdgeId e : order) script.push_back(dual.primal_edge_of(e));
    CycleState state;
    try {
        state = run_expansion(g, dual, ExpansionPolicy::scripted(std::move(script)));
    } catch (const Error& e) {
        if (e.code() != ErrorCode::ScriptEdgeInvalid) throw;
        throw Error(ErrorCode::ReplayMismatch, e.detail());
    }
    if (canonical_cycle(state.sigma) != reconstruct_cycle(cert, dual, g))
        throw Error(ErrorCode::ReplayMismatch, "final cycle differs from the reconstructed cycle");
    return state;
}

}  // namespace hamdual
