#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hamdual/embedding.hpp"

namespace hamdual {

using Adjacency = std::vector<std::vector<VertexId>>;

struct OracleResult {
    bool hamiltonian = false;
    std::optional<std::vector<VertexId>> witness;  // 0-based
    std::uint64_t nodes_explored = 0;
};

Adjacency plain_adjacency(const RotationEmbedding& g);

/// Exhaustive path extension from vertex 0. A branch is cut as soon as an
/// unvisited vertex has fewer than two usable neighbours, or the unvisited
/// vertices can no longer be threaded back to the start.
OracleResult oracle_dfs(const Adjacency& adj);
inline OracleResult oracle_dfs(const RotationEmbedding& g) { return oracle_dfs(plain_adjacency(g)); }

inline constexpr int kOracleDpMaxVertices = 24;

/// Held-Karp style subset DP over paths from vertex 0. Throws TooLarge above
/// kOracleDpMaxVertices.
OracleResult oracle_dp(const Adjacency& adj);

}  // namespace hamdual
