#include "hamdual/corpus.hpp"

#include <string_view>

#include "hamdual/error.hpp"
#include "hamdual/io.hpp"

namespace hamdual {

namespace {

struct FixtureText {
    std::string_view name;
    std::string_view text;
};

constexpr FixtureText kFixtures[] = {
    {"k4", "1: 2 3 4\n2: 1 4 3\n3: 1 2 4\n4: 1 3 2\n"},
    {"prism", "1: 2 4 3\n2: 1 3 5\n3: 2 1 6\n4: 6 1 5\n5: 4 2 6\n6: 3 4 5\n"},
    {"cube",
     "1: 5 2 3\n2: 4 1 6\n3: 7 1 4\n4: 3 2 8\n5: 1 7 6\n6: 2 5 8\n7: 5 3 8\n8: 6 7 4\n"},
    {"pentagonal_prism",
     "1: 2 6 5\n2: 1 3 7\n3: 2 4 8\n4: 3 5 9\n5: 4 1 10\n"
     "6: 10 1 7\n7: 6 2 8\n8: 7 3 9\n9: 8 4 10\n10: 5 6 9\n"},
    // three K4-minus-an-edge blocks hung between hubs 13 and 14; not Hamiltonian
    {"theta14",
     "1: 3 13 4\n2: 4 14 3\n3: 1 4 2\n4: 3 1 2\n5: 7 13 8\n6: 14 7 8\n7: 6 5 8\n"
     "8: 5 6 7\n9: 13 11 12\n10: 12 11 14\n11: 9 10 12\n12: 11 10 9\n13: 5 1 9\n"
     "14: 2 6 10\n"},
};

}  // namespace

std::vector<NamedEmbedding> builtin_fixtures() {
    std::vector<NamedEmbedding> out;
    for (const auto& f : kFixtures) out.push_back({std::string(f.name), parse_rotation_text(f.text)});
    return out;
}

RotationEmbedding split_face(const RotationEmbedding& g, FaceId face, int i, int j) {
    const auto& walk = g.face(face).boundary;
    const int len = static_cast<int>(walk.size());
    if (i < 0 || j < 0 || i >= len || j >= len || i == j)
        throw Error(ErrorCode::IndexOutOfRange, "face split positions");
    const DartId di = walk[i].dart, dj = walk[j].dart;
    const VertexId p = g.dart(di).origin, q = g.head(di);
    const VertexId r = g.dart(dj).origin, s = g.head(dj);
    const VertexId a = g.vertex_count(), b = a + 1;

    auto rot = g.rotations();
    auto replace = [&](VertexId v, VertexId from, VertexId to) {
        for (auto& w : rot[v])
            if (w == from) {
                w = to;
                return;
            }
    };
    replace(p, q, a);
    replace(q, p, a);
    replace(r, s, b);
    replace(s, r, b);
    // The new edge a-b runs through `face`: arriving p->a the walk turns
    // to b, and arriving a->b it turns to s.
    rot.push_back({p, b, q});
    rot.push_back({a, s, r});
    return RotationEmbedding(std::move(rot));
}

RotationEmbedding random_split(const RotationEmbedding& g, std::mt19937_64& rng) {
    const FaceId f = static_cast<FaceId>(rng() % g.face_count());
    const int len = static_cast<int>(g.face(f).size());
    const int i = static_cast<int>(rng() % len);
    const int j = (i + 1 + static_cast<int>(rng() % (len - 1))) % len;
    return split_face(g, f, i, j);
}

std::vector<NamedEmbedding> generate_corpus(int max_n, std::uint64_t seed, int random_count) {
    if (max_n > kCorpusMaxVertices)
        throw Error(ErrorCode::TooLarge, "corpus generation is limited to n <= " +
                                             std::to_string(kCorpusMaxVertices));
    const auto fixtures = builtin_fixtures();
    std::vector<NamedEmbedding> out;
    for (const auto& f : fixtures)
        if (f.graph.vertex_count() <= max_n) out.push_back(f);
    if (max_n < 6) return out;

    std::mt19937_64 rng(seed);
    const int sizes = (max_n - 6) / 2 + 1;
    for (int k = 0; k < random_count; ++k) {
        const int target = 6 + 2 * static_cast<int>(rng() % sizes);
        const NamedEmbedding* base = &fixtures.front();
        if (k % 4 == 3) {
            std::vector<const NamedEmbedding*> smaller;
            for (const auto& f : fixtures)
                if (f.graph.vertex_count() < target) smaller.push_back(&f);
            base = smaller[rng() % smaller.size()];
        }
        RotationEmbedding g = base->graph;
        while (g.vertex_count() < target) g = random_split(g, rng);
        out.push_back({"gen" + std::to_string(k) + "-" + base->name + "-n" +
                           std::to_string(g.vertex_count()),
                       std::move(g)});
    }
    return out;
}

}  // namespace hamdual
