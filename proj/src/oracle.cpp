#include "hamdual/oracle.hpp"

#include <bit>
#include <string>

#include "hamdual/error.hpp"

namespace hamdual {

Adjacency plain_adjacency(const RotationEmbedding& g) {
    Adjacency adj(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        adj[v].assign(g.rotation(v).begin(), g.rotation(v).end());
    return adj;
}

namespace {

class PathSearch {
public:
    explicit PathSearch(const Adjacency& adj)
        : adj_(adj), n_(static_cast<int>(adj.size())), visited_(n_, 0), mark_(n_, 0) {}

    OracleResult run() {
        OracleResult r;
        if (n_ < 3) return r;
        path_.push_back(0);
        visited_[0] = 1;
        r.hamiltonian = extend();
        r.nodes_explored = nodes_;
        if (r.hamiltonian) r.witness = path_;
        return r;
    }

private:
    bool usable(VertexId w, VertexId end) const { return !visited_[w] || w == end || w == 0; }

    bool feasible(VertexId end) {
        const int remaining = n_ - static_cast<int>(path_.size());
        if (remaining == 0) return true;
        // the start still needs a free neighbour to close the cycle
        bool start_open = false;
        for (VertexId w : adj_[0]) start_open |= !visited_[w];
        if (!start_open) return false;
        for (VertexId v = 0; v < n_; ++v) {
            if (visited_[v]) continue;
            int free = 0;
            for (VertexId w : adj_[v]) free += usable(w, end);
            if (free < 2) return false;
        }
        // unvisited vertices must all be reachable from the path end
        ++epoch_;
        stack_.assign(1, end);
        int reached = 0;
        while (!stack_.empty()) {
            const VertexId v = stack_.back();
            stack_.pop_back();
            for (VertexId w : adj_[v]) {
                if (visited_[w] || mark_[w] == epoch_) continue;
                mark_[w] = epoch_;
                ++reached;
                stack_.push_back(w);
            }
        }
        return reached == remaining;
    }

    bool extend() {
        ++nodes_;
        const VertexId end = path_.back();
        if (static_cast<int>(path_.size()) == n_) {
            for (VertexId w : adj_[end])
                if (w == 0) return true;
            return false;
        }
        for (VertexId w : adj_[end]) {
            if (visited_[w]) continue;
            visited_[w] = 1;
            path_.push_back(w);
            if (feasible(w) && extend()) return true;
            path_.pop_back();
            visited_[w] = 0;
        }
        return false;
    }

    const Adjacency& adj_;
    int n_;
    std::vector<char> visited_;
    std::vector<unsigned> mark_;
    unsigned epoch_ = 0;
    std::vector<VertexId> path_;
    std::vector<VertexId> stack_;
    std::uint64_t nodes_ = 0;
};

}  // namespace

OracleResult oracle_dfs(const Adjacency& adj) { return PathSearch(adj).run(); }

OracleResult oracle_dp(const Adjacency& adj) {
    const int n = static_cast<int>(adj.size());
    if (n > kOracleDpMaxVertices)
        throw Error(ErrorCode::TooLarge, "subset DP limited to " +
                                             std::to_string(kOracleDpMaxVertices) +
                                             " vertices, got " + std::to_string(n));
    OracleResult r;
    if (n < 3) return r;
    std::vector<std::uint32_t> nbr(n, 0);
    for (VertexId v = 0; v < n; ++v)
        for (VertexId w : adj[v]) nbr[v] |= 1u << w;

    // ends[S >> 1] = set of v such that some path 0 -> v visits exactly S (S contains 0)
    const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
    std::vector<std::uint32_t> ends(std::size_t{1} << (n - 1), 0);
    ends[0] = 1u;  // the trivial path at 0
    for (std::uint32_t s = 1; s <= full; s += 2) {
        const std::uint32_t e = ends[s >> 1];
        if (!e) continue;
        for (std::uint32_t rest = e; rest; rest &= rest - 1) {
            const int v = std::countr_zero(rest);
            for (std::uint32_t out = nbr[v] & ~s; out; out &= out - 1) {
                const int w = std::countr_zero(out);
                ends[(s | (1u << w)) >> 1] |= 1u << w;
                ++r.nodes_explored;
            }
        }
    }
    const std::uint32_t closing = ends[full >> 1] & nbr[0] & ~1u;
    if (!closing) return r;

    r.hamiltonian = true;
    std::vector<VertexId> rev;
    std::uint32_t s = full;
    int v = std::countr_zero(closing);
    while (v != 0) {
        rev.push_back(v);
        const std::uint32_t prev_set = s & ~(1u << v);
        const std::uint32_t prev = ends[prev_set >> 1] & nbr[v];
        s = prev_set;
        v = std::countr_zero(prev);
    }
    rev.push_back(0);
    r.witness = std::vector<VertexId>(rev.rbegin(), rev.rend());
    return r;
}

}  // namespace hamdual
