#include <algorithm>
#include <set>

#include "doctest.h"
#include "hamdual/certify.hpp"
#include "hamdual/corpus.hpp"
#include "hamdual/error.hpp"
#include "hamdual/expansion.hpp"
#include "hamdual/oracle.hpp"
#include "support.hpp"

using namespace hamdual;
using namespace hamdual::testing;

namespace {

std::vector<DualEdgeId> induced_edges(const DualGraph& dual, const std::vector<FaceId>& vs) {
    std::set<FaceId> in(vs.begin(), vs.end());
    std::vector<DualEdgeId> out;
    for (DualEdgeId e = 0; e < dual.edge_count(); ++e)
        if (in.count(dual.edge(e).a) && in.count(dual.edge(e).b)) out.push_back(e);
    return out;
}

Certificate induced_cert(const DualGraph& dual, std::vector<FaceId> vs) {
    std::sort(vs.begin(), vs.end());
    return {dual.outer_vertex(), vs, induced_edges(dual, vs), {}};
}

std::set<ViolationKind> kinds(const std::vector<Violation>& vs) {
    std::set<ViolationKind> out;
    for (const auto& v : vs) out.insert(v.kind);
    return out;
}

}  // namespace

TEST_CASE("K4: a single edge of the dual is a valid tree") {
    const auto g = fixture("k4");
    const auto [dual, tri] = build_dual(g);
    const FaceId other = dual.neighbors(0).front().face;
    const auto cert = induced_cert(dual, {0, other});
    CHECK(check_theorem1(cert, dual, tri).empty());
    const auto cycle = reconstruct_cycle(cert, dual, g);
    CHECK(cycle.size() == 4);
    CHECK(verify_hamiltonian(cycle, g));
    CHECK(cycle == canonical_cycle(cycle));
}

TEST_CASE("K4: the root alone misses a vertex") {
    const auto g = fixture("k4");
    const auto [dual, tri] = build_dual(g);
    const auto v = check_theorem1(induced_cert(dual, {0}), dual, tri);
    CHECK(kinds(v) == std::set{ViolationKind::Domination});
}

TEST_CASE("K4: three faces with two tree edges leave a chord") {
    const auto g = fixture("k4");
    const auto [dual, tri] = build_dual(g);
    auto cert = induced_cert(dual, {0, 1, 2});
    REQUIRE(cert.tree_edges.size() == 3);
    cert.tree_edges.pop_back();
    CHECK(kinds(check_theorem1(cert, dual, tri)) == std::set{ViolationKind::Chord});
    // with all three edges it is a cycle instead
    CHECK(kinds(check_theorem1(induced_cert(dual, {0, 1, 2}), dual, tri)) ==
          std::set{ViolationKind::HasCycle});
}

TEST_CASE("cube: two opposite faces are disconnected") {
    const auto g = fixture("cube");
    const auto [dual, tri] = build_dual(g);
    FaceId opposite = -1;
    for (FaceId f = 1; f < 6; ++f) {
        const auto& nb = dual.neighbors(0);
        if (std::none_of(nb.begin(), nb.end(), [&](const DualNeighbor& x) { return x.face == f; }))
            opposite = f;
    }
    REQUIRE(opposite > 0);
    const auto v = check_theorem1(induced_cert(dual, {0, opposite}), dual, tri);
    CHECK(kinds(v) == std::set{ViolationKind::Disconnected});
}

TEST_CASE("structural violations") {
    const auto g = fixture("cube");
    const auto [dual, tri] = build_dual(g);
    auto base = induced_cert(dual, {0, dual.neighbors(0).front().face});

    auto dup = base;
    dup.tree_vertices.push_back(dup.tree_vertices.front());
    CHECK(kinds(check_theorem1(dup, dual, tri)).count(ViolationKind::Duplicate));

    auto wrong_root = base;
    wrong_root.root = wrong_root.tree_vertices.back();
    CHECK(kinds(check_theorem1(wrong_root, dual, tri)).count(ViolationKind::WrongRoot));

    auto outside = base;
    const std::set<FaceId> in(base.tree_vertices.begin(), base.tree_vertices.end());
    const auto far = std::find_if(dual.edges().begin(), dual.edges().end(), [&](const DualEdge& e) {
        return !in.count(e.a) && !in.count(e.b);
    });
    REQUIRE(far != dual.edges().end());
    outside.tree_edges.push_back(static_cast<DualEdgeId>(far - dual.edges().begin()));
    CHECK(kinds(check_theorem1(outside, dual, tri)).count(ViolationKind::EdgeOutsideTree));

    auto bad_id = base;
    bad_id.tree_vertices.push_back(99);
    CHECK_THROWS_AS(check_theorem1(bad_id, dual, tri), Error);
}

TEST_CASE("reconstruction fails when the boundary is not one spanning cycle") {
    const auto g = fixture("cube");
    const auto [dual, tri] = build_dual(g);
    std::vector<FaceId> all(6);
    for (int i = 0; i < 6; ++i) all[i] = i;
    try {
        reconstruct_cycle(induced_cert(dual, all), dual, g);
        FAIL("empty boundary accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ReconstructionFailed);
    }
    // root alone: a 4-cycle, not spanning
    CHECK_THROWS_AS(reconstruct_cycle(induced_cert(dual, {0}), dual, g), Error);
}

TEST_CASE("canonical cycle form") {
    CHECK(canonical_cycle({2, 3, 0, 1}) == std::vector<VertexId>{0, 1, 2, 3});
    CHECK(canonical_cycle({0, 3, 1, 2}) == std::vector<VertexId>{0, 2, 1, 3});
    CHECK(canonical_cycle({3, 1, 0, 2}) == std::vector<VertexId>{0, 1, 3, 2});
    const auto g = fixture("k4");
    CHECK(verify_hamiltonian(std::vector<VertexId>{0, 3, 1, 2}, g));
    CHECK(!verify_hamiltonian(std::vector<VertexId>{0, 3, 1}, g));
    CHECK(!verify_hamiltonian(std::vector<VertexId>{0, 3, 1, 1}, g));
    CHECK(!verify_hamiltonian(std::vector<VertexId>{0, 3, 1, 7}, g));
}

TEST_CASE("valid trees correspond to Hamiltonian cycles for every root") {
    for (const auto& inst : generate_corpus(16, 2, 150)) {
        const auto& g = inst.graph;
        const bool hamiltonian = oracle_dp(plain_adjacency(g)).hamiltonian;
        for (FaceId root = 0; root < g.face_count(); ++root) {
            CAPTURE(inst.name);
            CAPTURE(root);
            const auto [dual, tri] = build_dual(g, root);
            const auto trees = brute_valid_trees(g, dual, root);
            CHECK(trees.empty() == !hamiltonian);
            std::set<std::vector<VertexId>> cycles;
            for (const auto& t : trees) {
                auto cert = induced_cert(dual, t);
                CHECK(check_theorem1(cert, dual, tri).empty());
                cert.cycle = reconstruct_cycle(cert, dual, g);
                CHECK(verify_hamiltonian(cert.cycle, g));
                cycles.insert(cert.cycle);
                CHECK(replay_expansion(cert, g, dual).sigma.size() == cert.cycle.size());
            }
            // different trees bound different cycles
            CHECK(cycles.size() == trees.size());
        }
    }
}

TEST_CASE("replay in a non-breadth-first order can fail") {
    const auto g = fixture("cube");
    const auto [dual, tri] = build_dual(g);
    // a path of three faces: root, a side, and the face opposite the root
    const FaceId side = dual.neighbors(0).front().face;
    FaceId bottom = -1;
    for (const auto& x : dual.neighbors(side)) {
        const auto& nb0 = dual.neighbors(0);
        if (x.face != 0 && std::none_of(nb0.begin(), nb0.end(),
                                        [&](const DualNeighbor& y) { return y.face == x.face; }))
            bottom = x.face;
    }
    REQUIRE(bottom >= 0);
    auto cert = induced_cert(dual, {0, side, bottom});
    REQUIRE(check_theorem1(cert, dual, tri).empty());
    cert.cycle = reconstruct_cycle(cert, dual, g);
    const auto order = bfs_edge_order(cert, dual);
    REQUIRE(order.size() == 2);
    CHECK(canonical_cycle(replay_expansion(cert, g, dual, order).sigma) == cert.cycle);
    const std::vector<DualEdgeId> reversed{order[1], order[0]};
    try {
        replay_expansion(cert, g, dual, reversed);
        FAIL("replay out of order accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ReplayMismatch);
    }
}
