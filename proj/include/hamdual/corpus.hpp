#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hamdual/embedding.hpp"

namespace hamdual {

struct NamedEmbedding {
    std::string name;
    RotationEmbedding graph;
};

/// Small fixtures compiled into the library (k4, prism, cube,
/// pentagonal_prism, theta14). They match the files in fixtures/.
std::vector<NamedEmbedding> builtin_fixtures();

/// Splits face `face` by subdividing the boundary edges leaving positions
/// `i` and `j` of its walk and joining the two new vertices across the face.
RotationEmbedding split_face(const RotationEmbedding& g, FaceId face, int i, int j);

/// One random face split.
RotationEmbedding random_split(const RotationEmbedding& g, std::mt19937_64& rng);

inline constexpr int kCorpusMaxVertices = 16;
inline constexpr int kDefaultRandomInstances = 600;

/// Every builtin fixture with n <= max_n, followed by `random_count` graphs
/// grown from K4 (or, for every fourth instance, from a random fixture) by
/// repeated face splits to a random even size in [6, max_n].
std::vector<NamedEmbedding> generate_corpus(int max_n, std::uint64_t seed,
                                            int random_count = kDefaultRandomInstances);

}  // namespace hamdual
