#pragma once

// Test-only helpers. The brute-force routines here deliberately avoid the
// library's own face walk and checker so they can serve as oracles.

#include <algorithm>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hamdual/dual.hpp"
#include "hamdual/embedding.hpp"
#include "hamdual/io.hpp"

namespace hamdual::testing {

inline std::filesystem::path fixture_path(const std::string& name) {
    return std::filesystem::path(HAMDUAL_FIXTURE_DIR) / (name + ".rot");
}

inline RotationEmbedding fixture(const std::string& name) { return load_graph(fixture_path(name)); }

inline std::vector<std::string> fixture_names() {
    return {"k4", "prism", "cube", "pentagonal_prism", "theta14", "dodecahedron", "nonham38",
            "tutte46"};
}

/// Face walks computed from 1-based neighbour lists with a dart map; each
/// walk rotated so its smallest vertex comes first.
inline std::vector<std::vector<int>> brute_faces(const std::vector<std::vector<int>>& rot) {
    std::set<std::pair<int, int>> seen;
    std::vector<std::vector<int>> faces;
    for (int v = 0; v < static_cast<int>(rot.size()); ++v) {
        for (int w : rot[v]) {
            std::pair<int, int> d{v, w};
            if (seen.count(d)) continue;
            std::vector<int> walk;
            while (!seen.count(d)) {
                seen.insert(d);
                walk.push_back(d.first);
                const auto& r = rot[d.second];
                const auto i = std::find(r.begin(), r.end(), d.first) - r.begin();
                d = {d.second, r[(i + 1) % r.size()]};
            }
            std::rotate(walk.begin(), std::min_element(walk.begin(), walk.end()), walk.end());
            faces.push_back(walk);
        }
    }
    std::sort(faces.begin(), faces.end());
    return faces;
}

inline std::vector<std::vector<int>> library_faces(const RotationEmbedding& g) {
    std::vector<std::vector<int>> faces;
    for (const auto& f : g.faces()) {
        std::vector<int> walk;
        for (const auto& c : f.boundary) walk.push_back(c.vertex);
        std::rotate(walk.begin(), std::min_element(walk.begin(), walk.end()), walk.end());
        faces.push_back(walk);
    }
    std::sort(faces.begin(), faces.end());
    return faces;
}

inline std::vector<std::vector<int>> rotation_lists(const RotationEmbedding& g) {
    std::vector<std::vector<int>> rot;
    for (const auto& r : g.rotations()) rot.emplace_back(r.begin(), r.end());
    return rot;
}

/// Face id whose boundary vertex set is exactly `vertices` (1-based).
inline FaceId face_with_vertices(const RotationEmbedding& g, std::set<int> vertices) {
    for (const auto& f : g.faces()) {
        std::set<int> vs;
        for (const auto& c : f.boundary) vs.insert(c.vertex + 1);
        if (vs == vertices) return f.id;
    }
    return -1;
}

/// Face adjacency by shared primal edges, from boundary vertex pairs only.
inline std::map<std::pair<int, int>, int> brute_face_adjacency(const RotationEmbedding& g) {
    std::map<std::pair<int, int>, std::vector<int>> edge_faces;
    for (const auto& f : g.faces()) {
        for (std::size_t i = 0; i < f.size(); ++i) {
            int a = f.boundary[i].vertex, b = f.boundary[(i + 1) % f.size()].vertex;
            edge_faces[{std::min(a, b), std::max(a, b)}].push_back(f.id);
        }
    }
    std::map<std::pair<int, int>, int> adj;
    for (const auto& [e, fs] : edge_faces) ++adj[{std::min(fs[0], fs[1]), std::max(fs[0], fs[1])}];
    return adj;
}

/// Every face set containing `root` whose induced dual multigraph is a tree
/// and which meets every primal vertex's three faces. Brute force over
/// subsets; only for small duals.
inline std::vector<std::vector<FaceId>> brute_valid_trees(const RotationEmbedding& g,
                                                          const DualGraph& dual, FaceId root) {
    const int f = dual.face_count();
    std::vector<std::vector<FaceId>> out;
    for (unsigned mask = 0; mask < (1u << f); ++mask) {
        if (!(mask >> root & 1u)) continue;
        auto in = [&](int x) { return (mask >> x & 1u) != 0; };
        bool dominating = true;
        for (VertexId v = 0; v < g.vertex_count() && dominating; ++v) {
            bool hit = false;
            for (int k = 0; k < 3; ++k) hit |= in(g.dart(3 * v + k).face);
            dominating = hit;
        }
        if (!dominating) continue;
        const int size = __builtin_popcount(mask);
        int edges = 0;
        std::vector<int> comp(f);
        for (int x = 0; x < f; ++x) comp[x] = x;
        auto find = [&](int x) {
            while (comp[x] != x) x = comp[x];
            return x;
        };
        bool cyclic = false;
        for (const auto& e : dual.edges()) {
            if (!in(e.a) || !in(e.b)) continue;
            ++edges;
            const int ra = find(e.a), rb = find(e.b);
            if (ra == rb) cyclic = true;
            comp[ra] = rb;
        }
        if (cyclic || edges != size - 1) continue;
        std::vector<FaceId> s;
        for (int x = 0; x < f; ++x)
            if (in(x)) s.push_back(x);
        out.push_back(s);
    }
    return out;
}

}  // namespace hamdual::testing
