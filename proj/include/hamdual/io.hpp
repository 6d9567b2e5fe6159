#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hamdual/embedding.hpp"

namespace hamdual {

inline constexpr std::string_view kPlanarCodeHeader = ">>planar_code<<";

enum class InputFormat { Auto, PlanarCode, RotationText };

/// Builds an embedding from 0-based clockwise neighbour lists, raising
/// NotCubic before any other structural check.
RotationEmbedding embedding_from_adjacency(const std::vector<std::vector<VertexId>>& adjacency);

/// First graph of a plantri planar_code stream (8-bit variant, n <= 255).
RotationEmbedding parse_planar_code(std::span<const std::uint8_t> bytes);
std::vector<RotationEmbedding> parse_planar_code_all(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> serialize_planar_code(std::span<const RotationEmbedding> graphs);

/// Line `i: a b c` per vertex, 1-based, clockwise; `#` starts a comment.
RotationEmbedding parse_rotation_text(std::string_view text);
std::string serialize_rotation_text(const RotationEmbedding& g);

/// Undirected DOT graph. Edges of `cycle` (1-based vertex ids, closed
/// implicitly) are drawn bold red. Throws CycleNotInGraph.
std::string serialize_dot(const RotationEmbedding& g,
                          const std::optional<std::vector<VertexId>>& cycle = std::nullopt);

InputFormat sniff_format(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> read_file_bytes(const std::filesystem::path& path);
/// All graphs in a file; rotation text always holds exactly one.
std::vector<RotationEmbedding> load_graphs(const std::filesystem::path& path,
                                           InputFormat format = InputFormat::Auto);
RotationEmbedding load_graph(const std::filesystem::path& path,
                             InputFormat format = InputFormat::Auto);

}  // namespace hamdual
