#include <algorithm>
#include <string>

#include "doctest.h"
#include "hamdual/corpus.hpp"
#include "hamdual/embedding.hpp"
#include "hamdual/error.hpp"
#include "hamdual/io.hpp"
#include "support.hpp"

using namespace hamdual;
using namespace hamdual::testing;

namespace {

constexpr const char* kK4Text = "1: 2 3 4\n2: 1 4 3\n3: 1 2 4\n4: 1 3 2\n";

std::vector<std::uint8_t> planar_code(std::initializer_list<int> body) {
    std::vector<std::uint8_t> bytes(kPlanarCodeHeader.begin(), kPlanarCodeHeader.end());
    for (int b : body) bytes.push_back(static_cast<std::uint8_t>(b));
    return bytes;
}

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return ErrorCode::Io;
}

std::vector<std::size_t> face_sizes(const RotationEmbedding& g) {
    std::vector<std::size_t> s;
    for (const auto& f : g.faces()) s.push_back(f.size());
    std::sort(s.begin(), s.end());
    return s;
}

}  // namespace

TEST_CASE("K4 from rotation text matches the hand-built face walk") {
    const auto g = parse_rotation_text(kK4Text);
    CHECK(g.vertex_count() == 4);
    CHECK(g.dart_count() == 12);
    CHECK(g.edge_count() == 6);
    CHECK(face_sizes(g) == std::vector<std::size_t>{3, 3, 3, 3});
    const std::vector<std::vector<int>> rot{{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}};
    CHECK(library_faces(g) == brute_faces(rot));
}

TEST_CASE("planar_code and rotation text give identical embeddings") {
    const auto bytes = planar_code({4, 2, 3, 4, 0, 1, 4, 3, 0, 1, 2, 4, 0, 1, 3, 2, 0});
    const auto a = parse_planar_code(bytes);
    const auto b = parse_rotation_text(kK4Text);
    CHECK(a.rotations() == b.rotations());
    CHECK(library_faces(a) == library_faces(b));
    CHECK(serialize_planar_code(std::vector<RotationEmbedding>{a}) == bytes);
}

TEST_CASE("planar_code errors") {
    CHECK(code_of([] { parse_planar_code(planar_code({})); }) == ErrorCode::TruncatedRecord);
    CHECK(code_of([] { parse_planar_code(planar_code({4, 2, 3})); }) ==
          ErrorCode::TruncatedRecord);
    const std::string bad = ">>planar_cod<<";
    CHECK(code_of([&] {
              parse_planar_code(std::vector<std::uint8_t>(bad.begin(), bad.end()));
          }) == ErrorCode::MalformedHeader);
    // vertex 4 has only two neighbours listed
    CHECK(code_of([] {
              parse_planar_code(planar_code({4, 2, 3, 4, 0, 1, 4, 3, 0, 1, 2, 4, 0, 1, 3, 0}));
          }) == ErrorCode::NotCubic);
    CHECK(code_of([] { parse_planar_code(planar_code({3, 2, 3, 0, 1, 3, 0, 1, 2, 0})); }) ==
          ErrorCode::OddVertexCount);
}

TEST_CASE("planar_code stream with several graphs") {
    const auto corpus = generate_corpus(8, 3, 5);
    std::vector<RotationEmbedding> graphs;
    for (const auto& c : corpus) graphs.push_back(c.graph);
    const auto back = parse_planar_code_all(serialize_planar_code(graphs));
    REQUIRE(back.size() == graphs.size());
    for (std::size_t i = 0; i < graphs.size(); ++i) CHECK(back[i].rotations() == graphs[i].rotations());
    CHECK(parse_planar_code(serialize_planar_code(graphs)).rotations() == graphs[0].rotations());
}

TEST_CASE("rotation text errors") {
    CHECK(code_of([] { parse_rotation_text("1: 2 3 4\n2: 1 4 3\n3: 1 2 4\n4: 1 3\n"); }) ==
          ErrorCode::NotCubic);
    try {
        parse_rotation_text("1: 2 3 4\n1: 1 4 3\n3: 1 2 4\n4: 1 3 2\n");
        FAIL("duplicate vertex line accepted");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ParseError);
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
    CHECK(code_of([] { parse_rotation_text("1 2 3 4\n"); }) == ErrorCode::ParseError);
    CHECK(code_of([] { parse_rotation_text("1: 2 x 4\n"); }) == ErrorCode::ParseError);
    CHECK(code_of([] { parse_rotation_text("# nothing\n"); }) == ErrorCode::ParseError);
    CHECK(code_of([] { parse_rotation_text("1: 2 3 9\n2: 1 4 3\n3: 1 2 4\n4: 1 3 2\n"); }) ==
          ErrorCode::ParseError);
}

TEST_CASE("structural validation") {
    SUBCASE("loop") {
        CHECK(code_of([] { parse_rotation_text("1: 1 3 4\n2: 3 4 3\n3: 1 2 4\n4: 1 3 2\n"); }) ==
              ErrorCode::NotSimple);
    }
    SUBCASE("parallel edge") {
        CHECK(code_of([] { parse_rotation_text("1: 2 2 4\n2: 1 4 3\n3: 1 2 4\n4: 1 3 2\n"); }) ==
              ErrorCode::NotSimple);
    }
    SUBCASE("one-sided adjacency") {
        CHECK(code_of([] { parse_rotation_text("1: 2 3 4\n2: 3 4 3\n3: 1 2 4\n4: 1 3 2\n"); }) !=
              ErrorCode::Io);
        CHECK(code_of([] {
                  parse_rotation_text("1: 2 3 4\n2: 5 4 3\n3: 1 2 4\n4: 1 3 2\n5: 2 6 3\n6: 5 1 4\n");
              }) == ErrorCode::InconsistentAdjacency);
    }
    SUBCASE("bridge makes a face revisit a vertex") {
        const char* text =
            "1: 3 4 5\n2: 3 5 4\n3: 1 2 4\n4: 2 1 3\n5: 2 1 10\n"
            "6: 10 8 9\n7: 8 10 9\n8: 6 7 9\n9: 7 6 8\n10: 5 6 7\n";
        CHECK(code_of([&] { parse_rotation_text(text); }) == ErrorCode::FaceNotCycle);
    }
    SUBCASE("toroidal rotation of K3,3") {
        const char* text = "1: 4 5 6\n2: 4 5 6\n3: 4 5 6\n4: 1 2 3\n5: 1 2 3\n6: 1 2 3\n";
        CHECK(code_of([&] { parse_rotation_text(text); }) == ErrorCode::NotPlanar);
    }
}

TEST_CASE("face enumeration on the small fixtures") {
    const auto cube = fixture("cube");
    CHECK(cube.face_count() == 6);
    CHECK(face_sizes(cube) == std::vector<std::size_t>(6, 4));
    const auto prism = fixture("prism");
    CHECK(prism.face_count() == 5);
    CHECK(face_sizes(prism) == std::vector<std::size_t>{3, 3, 4, 4, 4});
    for (const auto& name : fixture_names()) {
        const auto g = fixture(name);
        CHECK(library_faces(g) == brute_faces(rotation_lists(g)));
        // deterministic ids: ordered by smallest dart in the orbit
        int last = -1;
        for (const auto& f : g.faces()) {
            int smallest = g.dart_count();
            for (const auto& c : f.boundary) smallest = std::min(smallest, c.dart);
            CHECK(smallest > last);
            last = smallest;
        }
    }
}

TEST_CASE("Euler accounting and dart partition on every fixture") {
    for (const auto& name : fixture_names()) {
        CAPTURE(name);
        const auto g = fixture(name);
        const int n = g.vertex_count(), e = g.edge_count(), f = g.face_count();
        CHECK(3 * n == 2 * e);
        CHECK(f == 2 + n / 2);
        CHECK(n - e + f == 2);
        std::vector<int> hits(g.dart_count(), 0);
        std::size_t total = 0;
        for (const auto& face : g.faces()) {
            total += face.size();
            CHECK(face.size() >= 3);
            for (const auto& c : face.boundary) ++hits[c.dart];
        }
        CHECK(total == static_cast<std::size_t>(3 * n));
        CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
        for (DartId d = 0; d < g.dart_count(); ++d) {
            CHECK(g.twin(g.twin(d)) == d);
            CHECK(g.twin(d) != d);
        }
    }
}

TEST_CASE("rotation text round trip keeps the face structure") {
    for (const auto& c : generate_corpus(16, 11, 40)) {
        const auto back = parse_rotation_text(serialize_rotation_text(c.graph));
        CHECK(back.rotations() == c.graph.rotations());
        CHECK(library_faces(back) == library_faces(c.graph));
    }
}

TEST_CASE("DOT output") {
    const auto g = parse_rotation_text(kK4Text);
    const auto plain = serialize_dot(g);
    CHECK(std::count(plain.begin(), plain.end(), ';') == 10);
    CHECK(plain.find("color=red") == std::string::npos);
    const auto marked = serialize_dot(g, std::vector<VertexId>{1, 2, 3, 4});
    std::size_t count = 0;
    for (auto pos = marked.find("color=red"); pos != std::string::npos;
         pos = marked.find("color=red", pos + 1))
        ++count;
    CHECK(count == 4);
    CHECK(marked == serialize_dot(g, std::vector<VertexId>{1, 2, 3, 4}));
    CHECK(code_of([&] { serialize_dot(g, std::vector<VertexId>{1, 5, 3}); }) ==
          ErrorCode::CycleNotInGraph);
}
