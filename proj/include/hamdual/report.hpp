#pragma once

#include "json.hpp"

#include "hamdual/certify.hpp"
#include "hamdual/dual.hpp"
#include "hamdual/embedding.hpp"
#include "hamdual/expansion.hpp"
#include "hamdual/solver.hpp"

namespace hamdual {

using Json = nlohmann::ordered_json;

/// {root, tree_vertices, tree_edges: [[f, f], ...], cycle}. Faces are 0-based
/// face ids; cycle vertices are 1-based like the input formats.
Json certificate_to_json(const Certificate& cert, const DualGraph& dual);

/// Inverse of certificate_to_json. A face pair names the lowest-id dual edge
/// joining the two faces; pairs that are not adjacent raise IndexOutOfRange.
Certificate certificate_from_json(const Json& j, const DualGraph& dual);

/// {n, e, f, result, nodes, propagations, backtracks, repairs, wall_time_ms,
/// budget_hit}. wall_time_ms is null unless `timing` is set, so that the
/// record is reproducible byte for byte.
Json stats_to_json(const RotationEmbedding& g, const SolveOutcome& outcome, bool timing);

Json step_to_json(const ExpansionStep& step, const RotationEmbedding& g);

}  // namespace hamdual
