#include <algorithm>
#include <set>

#include "doctest.h"
#include "hamdual/certify.hpp"
#include "hamdual/corpus.hpp"
#include "hamdual/error.hpp"
#include "hamdual/oracle.hpp"
#include "support.hpp"

using namespace hamdual;
using namespace hamdual::testing;

namespace {

bool is_cycle_in(const Adjacency& adj, const std::vector<VertexId>& c) {
    if (c.size() != adj.size()) return false;
    if (std::set<VertexId>(c.begin(), c.end()).size() != c.size()) return false;
    for (std::size_t i = 0; i < c.size(); ++i) {
        const auto& nb = adj[c[i]];
        if (std::find(nb.begin(), nb.end(), c[(i + 1) % c.size()]) == nb.end()) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("oracles on small fixtures") {
    for (const auto& name : {"k4", "prism", "cube", "pentagonal_prism", "dodecahedron"}) {
        CAPTURE(name);
        const auto adj = plain_adjacency(fixture(name));
        const auto dfs = oracle_dfs(adj);
        CHECK(dfs.hamiltonian);
        REQUIRE(dfs.witness.has_value());
        CHECK(is_cycle_in(adj, *dfs.witness));
        if (static_cast<int>(adj.size()) <= kOracleDpMaxVertices) {
            const auto dp = oracle_dp(adj);
            CHECK(dp.hamiltonian);
            REQUIRE(dp.witness.has_value());
            CHECK(is_cycle_in(adj, *dp.witness));
        }
    }
    const auto theta = plain_adjacency(fixture("theta14"));
    CHECK(!oracle_dfs(theta).hamiltonian);
    CHECK(!oracle_dp(theta).hamiltonian);
    CHECK(!oracle_dp(theta).witness.has_value());
}

TEST_CASE("oracles on non-cubic inputs") {
    // 4-cycle and a path
    const Adjacency square{{1, 3}, {0, 2}, {1, 3}, {2, 0}};
    CHECK(oracle_dfs(square).hamiltonian);
    CHECK(oracle_dp(square).hamiltonian);
    const Adjacency path{{1}, {0, 2}, {1}};
    CHECK(!oracle_dfs(path).hamiltonian);
    CHECK(!oracle_dp(path).hamiltonian);
}

TEST_CASE("subset DP refuses large graphs") {
    try {
        oracle_dp(plain_adjacency(fixture("nonham38")));
        FAIL("38 vertices accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::TooLarge);
    }
    CHECK_THROWS_AS(oracle_dp(Adjacency(30)), Error);
}

TEST_CASE("the two oracles agree on generated graphs") {
    int non_hamiltonian = 0;
    for (const auto& inst : generate_corpus(16, 21, 200)) {
        CAPTURE(inst.name);
        const auto adj = plain_adjacency(inst.graph);
        const auto a = oracle_dfs(adj), b = oracle_dp(adj);
        CHECK(a.hamiltonian == b.hamiltonian);
        if (a.hamiltonian) {
            CHECK(is_cycle_in(adj, *a.witness));
            CHECK(is_cycle_in(adj, *b.witness));
            CHECK(verify_hamiltonian(*a.witness, inst.graph));
        } else {
            ++non_hamiltonian;
        }
    }
    CHECK(non_hamiltonian > 0);
}

TEST_CASE("corpus contents") {
    const auto tiny = generate_corpus(4, 1, 10);
    CHECK(tiny.size() == 1);
    CHECK(tiny.front().name == "k4");

    const auto small = generate_corpus(8, 1, 10);
    std::set<std::string> names;
    for (const auto& c : small) names.insert(c.name);
    CHECK(names.count("k4"));
    CHECK(names.count("prism"));
    CHECK(names.count("cube"));
    CHECK(small.size() == 3 + 10);

    for (const auto& c : generate_corpus(16, 4, 100)) {
        CAPTURE(c.name);
        const int n = c.graph.vertex_count();
        CHECK(n >= 4);
        CHECK(n <= 16);
        CHECK(n % 2 == 0);
        CHECK(2 * c.graph.edge_count() == 3 * n);
        CHECK(c.graph.face_count() == 2 + n / 2);
    }
    CHECK_THROWS_AS(generate_corpus(18, 1, 1), Error);
}

TEST_CASE("corpus generation is deterministic per seed") {
    const auto a = generate_corpus(16, 77, 50), b = generate_corpus(16, 77, 50);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].name == b[i].name);
        CHECK(a[i].graph.rotations() == b[i].graph.rotations());
    }
    const auto c = generate_corpus(16, 78, 50);
    bool differs = false;
    for (std::size_t i = 0; i < a.size(); ++i) differs |= a[i].graph.rotations() != c[i].graph.rotations();
    CHECK(differs);
}

TEST_CASE("builtin fixtures match the files") {
    for (const auto& f : builtin_fixtures()) {
        CAPTURE(f.name);
        CHECK(f.graph.rotations() == fixture(f.name).rotations());
    }
}

TEST_CASE("face split adds two vertices") {
    const auto g = fixture("cube");
    const auto h = split_face(g, 0, 0, 2);
    CHECK(h.vertex_count() == 10);
    CHECK(h.face_count() == 7);
    std::mt19937_64 rng(3);
    auto k = fixture("k4");
    for (int i = 0; i < 6; ++i) k = random_split(k, rng);
    CHECK(k.vertex_count() == 16);
}
