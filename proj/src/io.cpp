#include "hamdual/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iterator>
#include <sstream>

#include "hamdual/error.hpp"

namespace hamdual {

RotationEmbedding embedding_from_adjacency(const std::vector<std::vector<VertexId>>& adjacency) {
    const auto n = adjacency.size();
    if (n % 2 != 0) throw Error(ErrorCode::OddVertexCount, "n = " + std::to_string(n));
    std::vector<std::array<VertexId, 3>> rotations(n);
    for (std::size_t v = 0; v < n; ++v) {
        if (adjacency[v].size() != 3)
            throw Error(ErrorCode::NotCubic, "vertex " + std::to_string(v + 1) + " has degree " +
                                                 std::to_string(adjacency[v].size()));
        std::copy(adjacency[v].begin(), adjacency[v].end(), rotations[v].begin());
    }
    return RotationEmbedding(std::move(rotations));
}

namespace {

struct PlanarCodeReader {
    std::span<const std::uint8_t> bytes;
    std::size_t pos = 0;

    bool at_end() const { return pos >= bytes.size(); }

    std::uint8_t take(const char* what) {
        if (at_end())
            throw Error(ErrorCode::TruncatedRecord,
                        std::string("unexpected end of input reading ") + what + " at byte " +
                            std::to_string(pos));
        return bytes[pos++];
    }

    RotationEmbedding next_graph() {
        const std::size_t record_start = pos;
        const int n = take("vertex count");
        if (n == 0)
            throw Error(ErrorCode::ParseError,
                        "16-bit planar_code records are not supported (byte " +
                            std::to_string(record_start) + ")");
        std::vector<std::vector<VertexId>> adjacency(n);
        for (int v = 0; v < n; ++v) {
            for (;;) {
                const int w = take("neighbour list");
                if (w == 0) break;
                if (w > n)
                    throw Error(ErrorCode::ParseError, "neighbour " + std::to_string(w) +
                                                           " out of range at byte " +
                                                           std::to_string(pos - 1));
                adjacency[v].push_back(w - 1);
            }
        }
        return embedding_from_adjacency(adjacency);
    }
};

PlanarCodeReader open_planar_code(std::span<const std::uint8_t> bytes) {
    const std::string_view head(reinterpret_cast<const char*>(bytes.data()),
                                std::min(bytes.size(), kPlanarCodeHeader.size()));
    if (head != kPlanarCodeHeader)
        throw Error(ErrorCode::MalformedHeader, "missing >>planar_code<< header");
    return {bytes, kPlanarCodeHeader.size()};
}

}  // namespace

RotationEmbedding parse_planar_code(std::span<const std::uint8_t> bytes) {
    auto reader = open_planar_code(bytes);
    if (reader.at_end()) throw Error(ErrorCode::TruncatedRecord, "no graph after header");
    return reader.next_graph();
}

std::vector<RotationEmbedding> parse_planar_code_all(std::span<const std::uint8_t> bytes) {
    auto reader = open_planar_code(bytes);
    std::vector<RotationEmbedding> graphs;
    while (!reader.at_end()) graphs.push_back(reader.next_graph());
    return graphs;
}

std::vector<std::uint8_t> serialize_planar_code(std::span<const RotationEmbedding> graphs) {
    std::vector<std::uint8_t> out(kPlanarCodeHeader.begin(), kPlanarCodeHeader.end());
    for (const auto& g : graphs) {
        if (g.vertex_count() > 255)
            throw Error(ErrorCode::TooLarge, "planar_code supports at most 255 vertices");
        out.push_back(static_cast<std::uint8_t>(g.vertex_count()));
        for (const auto& r : g.rotations()) {
            for (VertexId w : r) out.push_back(static_cast<std::uint8_t>(w + 1));
            out.push_back(0);
        }
    }
    return out;
}

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

[[noreturn]] void parse_fail(int line, const std::string& msg) {
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + msg);
}

int parse_int(std::string_view tok, int line) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        parse_fail(line, "expected an integer, got '" + std::string(tok) + "'");
    return value;
}

}  // namespace

RotationEmbedding parse_rotation_text(std::string_view text) {
    std::vector<std::pair<int, std::vector<int>>> records;  // (vertex, neighbours), 1-based
    std::vector<int> record_lines;
    int line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto end = std::min(text.find('\n', start), text.size());
        std::string_view line = text.substr(start, end - start);
        start = end + 1;
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        const auto colon = line.find(':');
        if (colon == std::string_view::npos) parse_fail(line_no, "missing ':'");
        const int v = parse_int(trim(line.substr(0, colon)), line_no);
        std::vector<int> nbrs;
        std::string_view rest = line.substr(colon + 1);
        while (!(rest = trim(rest)).empty()) {
            const auto sp = rest.find_first_of(" \t");
            nbrs.push_back(parse_int(rest.substr(0, sp), line_no));
            rest = sp == std::string_view::npos ? std::string_view{} : rest.substr(sp);
        }
        records.emplace_back(v, std::move(nbrs));
        record_lines.push_back(line_no);
    }
    if (records.empty()) throw Error(ErrorCode::ParseError, "no vertex lines");

    const int n = static_cast<int>(records.size());
    std::vector<std::vector<VertexId>> adjacency(n);
    std::vector<char> seen(n, 0);
    for (std::size_t i = 0; i < records.size(); ++i) {
        const auto& [v, nbrs] = records[i];
        const int line = record_lines[i];
        if (v < 1 || v > n) parse_fail(line, "vertex id " + std::to_string(v) + " out of range");
        if (seen[v - 1]) parse_fail(line, "duplicate line for vertex " + std::to_string(v));
        seen[v - 1] = 1;
        for (int w : nbrs) {
            if (w < 1 || w > n)
                parse_fail(line, "neighbour " + std::to_string(w) + " out of range");
            adjacency[v - 1].push_back(w - 1);
        }
    }
    return embedding_from_adjacency(adjacency);
}

std::string serialize_rotation_text(const RotationEmbedding& g) {
    std::ostringstream out;
    out << "# n=" << g.vertex_count() << "\n";
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const auto& r = g.rotation(v);
        out << v + 1 << ": " << r[0] + 1 << ' ' << r[1] + 1 << ' ' << r[2] + 1 << '\n';
    }
    return out.str();
}

std::string serialize_dot(const RotationEmbedding& g,
                          const std::optional<std::vector<VertexId>>& cycle) {
    std::vector<char> marked(g.edge_count(), 0);
    if (cycle) {
        const auto& c = *cycle;
        for (std::size_t i = 0; i < c.size(); ++i) {
            const VertexId a = c[i], b = c[(i + 1) % c.size()];
            const EdgeId e = g.find_edge(a - 1, b - 1);
            if (e < 0)
                throw Error(ErrorCode::CycleNotInGraph,
                            "(" + std::to_string(a) + "," + std::to_string(b) + ")");
            marked[e] = 1;
        }
    }
    std::ostringstream out;
    out << "graph G {\n";
    for (VertexId v = 0; v < g.vertex_count(); ++v) out << "  " << v + 1 << ";\n";
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const auto& ed = g.edge(e);
        out << "  " << ed.u + 1 << " -- " << ed.v + 1;
        if (marked[e]) out << " [color=red, penwidth=3]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

InputFormat sniff_format(std::span<const std::uint8_t> bytes) {
    const std::string_view head(reinterpret_cast<const char*>(bytes.data()),
                                std::min(bytes.size(), kPlanarCodeHeader.size()));
    return head == kPlanarCodeHeader ? InputFormat::PlanarCode : InputFormat::RotationText;
}

std::vector<std::uint8_t> read_file_bytes(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::Io, "cannot open " + path.string());
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::vector<RotationEmbedding> load_graphs(const std::filesystem::path& path, InputFormat format) {
    const auto bytes = read_file_bytes(path);
    if (format == InputFormat::Auto) format = sniff_format(bytes);
    try {
        if (format == InputFormat::PlanarCode) return parse_planar_code_all(bytes);
        std::vector<RotationEmbedding> one;
        one.push_back(parse_rotation_text(
            std::string_view(reinterpret_cast<const char*>(bytes.data()), bytes.size())));
        return one;
    } catch (const Error& e) {
        throw Error(e.code(), path.string() + ": " + e.detail());
    }
}

RotationEmbedding load_graph(const std::filesystem::path& path, InputFormat format) {
    auto graphs = load_graphs(path, format);
    if (graphs.empty()) throw Error(ErrorCode::TruncatedRecord, path.string() + ": no graph");
    return std::move(graphs.front());
}

}  // namespace hamdual
