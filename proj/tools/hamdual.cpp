// hamdual: Hamiltonian cycles in cubic plane graphs via induced dual trees.
//
// Exit codes: solve 0 = Hamiltonian, 1 = not Hamiltonian, 2 = error/abort;
// verify 0 = certificate valid, 1 = rejected, 2 = unreadable input.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "hamdual/certify.hpp"
#include "hamdual/corpus.hpp"
#include "hamdual/dual.hpp"
#include "hamdual/error.hpp"
#include "hamdual/expansion.hpp"
#include "hamdual/io.hpp"
#include "hamdual/oracle.hpp"
#include "hamdual/report.hpp"
#include "hamdual/solver.hpp"

namespace fs = std::filesystem;
using namespace hamdual;

namespace {

constexpr int kExitError = 2;

struct RunConfig {
    std::string input;
    std::string format = "auto";
    std::optional<int> root_face;
    std::optional<std::uint64_t> max_nodes;
    std::optional<double> max_seconds;
    bool json = false;
    bool timing = false;
    std::string dot_path;
};

InputFormat parse_format(const std::string& s) {
    if (s == "planar_code") return InputFormat::PlanarCode;
    if (s == "rotation" || s == "rotation-text") return InputFormat::RotationText;
    return InputFormat::Auto;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::Io, "cannot write " + path);
    out << text;
}

std::string join_cycle(const std::vector<VertexId>& cycle) {
    std::ostringstream out;
    for (std::size_t i = 0; i < cycle.size(); ++i) out << (i ? " " : "") << cycle[i] + 1;
    return out.str();
}

void add_common(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--format", cfg.format, "auto | planar_code | rotation")
        ->check(CLI::IsMember({"auto", "planar_code", "rotation", "rotation-text"}));
    cmd->add_option("--root-face", cfg.root_face, "face id used as the outer face (default 0)");
    cmd->add_flag("--json", cfg.json, "machine-readable output");
}

SolverConfig solver_config(const RunConfig& cfg) {
    return {cfg.max_nodes, cfg.max_seconds};
}

int cmd_solve(const RunConfig& cfg, const std::string& certificate_path,
              const std::string& dual_dot_path) {
    const auto g = load_graph(cfg.input, parse_format(cfg.format));
    const auto [dual, triangles] = build_dual(g, cfg.root_face);
    const auto outcome = solve(g, dual, triangles, solver_config(cfg));

    Json cert_json = nullptr;
    if (outcome.certificate) cert_json = certificate_to_json(*outcome.certificate, dual);
    if (!certificate_path.empty() && outcome.certificate)
        write_text(certificate_path, cert_json.dump(2) + "\n");
    if (!cfg.dot_path.empty()) {
        std::optional<std::vector<VertexId>> cycle;
        if (outcome.certificate) {
            cycle.emplace();
            for (VertexId v : outcome.certificate->cycle) cycle->push_back(v + 1);
        }
        write_text(cfg.dot_path, serialize_dot(g, cycle));
    }
    if (!dual_dot_path.empty())
        write_text(dual_dot_path,
                   dual_to_dot(dual, outcome.certificate ? outcome.certificate->tree_vertices
                                                         : std::vector<FaceId>{}));

    if (cfg.json) {
        Json parallel = Json::array();
        for (const auto& p : dual.parallel_edges()) parallel.push_back({p.a, p.b});
        Json out{{"input", cfg.input},
                 {"root", dual.outer_vertex()},
                 {"stats", stats_to_json(g, outcome, cfg.timing)},
                 {"certificate", cert_json},
                 {"parallel_dual_edges", parallel}};
        std::cout << out.dump(2) << "\n";
    } else {
        const auto& s = outcome.stats;
        std::cout << "graph: n=" << g.vertex_count() << " e=" << g.edge_count()
                  << " f=" << g.face_count() << " root face=" << dual.outer_vertex() << "\n"
                  << "result: " << to_string(outcome.result) << "\n";
        if (outcome.certificate)
            std::cout << "cycle: " << join_cycle(outcome.certificate->cycle) << "\n"
                      << "tree faces: " << outcome.certificate->tree_vertices.size() << "\n";
        std::cout << "nodes=" << s.nodes << " propagations=" << s.propagations
                  << " backtracks=" << s.backtracks << " repairs=" << s.repairs;
        if (cfg.timing) std::cout << " time=" << s.wall_time_ms << "ms";
        std::cout << "\n";
        for (const auto& p : dual.parallel_edges())
            std::cout << "warning: faces " << p.a << " and " << p.b << " share "
                      << p.edges.size() << " edges\n";
    }
    switch (outcome.result) {
        case SolveResult::Hamiltonian: return 0;
        case SolveResult::NonHamiltonian: return 1;
        case SolveResult::Aborted: return kExitError;
    }
    return kExitError;
}

int cmd_verify(const RunConfig& cfg, const std::string& certificate_path) {
    const auto g = load_graph(cfg.input, parse_format(cfg.format));
    Json j;
    try {
        j = Json::parse(std::ifstream(certificate_path));
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, certificate_path + ": " + e.what());
    }
    const FaceId root = cfg.root_face.value_or(j.value("root", 0));
    if (root < 0 || root >= g.face_count())
        throw Error(ErrorCode::IndexOutOfRange, "root face " + std::to_string(root));
    const auto [dual, triangles] = build_dual(g, root);
    const auto cert = certificate_from_json(j, dual);

    std::vector<std::string> problems;
    for (const auto& v : check_theorem1(cert, dual, triangles))
        problems.push_back(std::string(to_string(v.kind)) + ": " + v.detail);
    std::vector<VertexId> cycle;
    if (problems.empty()) {
        try {
            cycle = reconstruct_cycle(cert, dual, g);
            if (!verify_hamiltonian(cycle, g))
                problems.push_back("reconstructed cycle is not Hamiltonian");
            if (!cert.cycle.empty() && canonical_cycle(cert.cycle) != cycle)
                problems.push_back("certificate cycle differs from the reconstructed cycle");
        } catch (const Error& e) {
            problems.push_back(e.what());
        }
    }
    if (cfg.json) {
        Json out{{"valid", problems.empty()}, {"violations", problems}};
        Json c = Json::array();
        for (VertexId v : cycle) c.push_back(v + 1);
        out["cycle"] = c;
        std::cout << out.dump(2) << "\n";
    } else if (problems.empty()) {
        std::cout << "valid: cycle " << join_cycle(cycle) << "\n";
    } else {
        for (const auto& p : problems) std::cout << "violation: " << p << "\n";
    }
    return problems.empty() ? 0 : 1;
}

int cmd_expand(const RunConfig& cfg, const std::string& policy_name, std::uint64_t seed,
               const std::vector<int>& script, const std::string& frames_dir) {
    const auto g = load_graph(cfg.input, parse_format(cfg.format));
    const auto [dual, triangles] = build_dual(g, cfg.root_face);
    ExpansionPolicy policy = policy_name == "random"   ? ExpansionPolicy::random(seed)
                             : policy_name == "script" ? ExpansionPolicy::scripted(script)
                                                       : ExpansionPolicy::fifo();
    Json steps = Json::array();
    auto frame = [&](const CycleState& s, int index) {
        if (frames_dir.empty()) return;
        fs::create_directories(frames_dir);
        std::vector<VertexId> c;
        for (VertexId v : s.sigma) c.push_back(v + 1);
        write_text((fs::path(frames_dir) / ("step" + std::to_string(index) + ".dot")).string(),
                   serialize_dot(g, c));
    };
    frame(initial_cycle(g, dual), 0);
    const auto final_state =
        run_expansion(g, dual, policy, [&](const ExpansionStep& step, const CycleState&,
                                           const CycleState& after) {
            steps.push_back(step_to_json(step, g));
            frame(after, after.step);
        });
    const bool hamiltonian = verify_hamiltonian(final_state.sigma, g);
    if (!cfg.dot_path.empty()) {
        std::vector<VertexId> c;
        for (VertexId v : final_state.sigma) c.push_back(v + 1);
        write_text(cfg.dot_path, serialize_dot(g, c));
    }
    if (cfg.json) {
        Json cycle = Json::array();
        for (VertexId v : final_state.sigma) cycle.push_back(v + 1);
        Json out{{"n", g.vertex_count()},
                 {"e", g.edge_count()},
                 {"f", g.face_count()},
                 {"root", dual.outer_vertex()},
                 {"policy", policy_name},
                 {"seed", seed},
                 {"steps", steps},
                 {"final_cycle", cycle},
                 {"cycle_length", final_state.sigma.size()},
                 {"hamiltonian", hamiltonian}};
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& s : steps)
            std::cout << "step " << s["step"] << ": edge " << s["edge"] << " path " << s["path"]
                      << " face " << s["removed_face"] << "\n";
        std::cout << "final cycle (" << final_state.sigma.size() << "/" << g.vertex_count()
                  << "): " << join_cycle(final_state.sigma) << "\n"
                  << "hamiltonian: " << (hamiltonian ? "yes" : "no") << "\n";
    }
    return 0;
}

struct BenchItem {
    std::string name;
    std::string file;
    int index = 0;
    std::optional<bool> oracle;
};

struct BenchRow {
    Json json;
    bool error = false;
};

std::vector<BenchItem> collect_bench_items(const fs::path& path) {
    std::vector<BenchItem> items;
    if (fs::is_directory(path)) {
        std::vector<fs::path> files;
        for (const auto& entry : fs::directory_iterator(path))
            if (entry.is_regular_file() && entry.path().extension() != ".json")
                files.push_back(entry.path());
        std::sort(files.begin(), files.end());
        for (const auto& f : files) {
            // multi-graph planar_code files expand to one item per graph
            int count = 1;
            try {
                const auto bytes = read_file_bytes(f);
                if (sniff_format(bytes) == InputFormat::PlanarCode)
                    count = static_cast<int>(parse_planar_code_all(bytes).size());
            } catch (const Error&) {
            }
            for (int k = 0; k < count; ++k)
                items.push_back({f.filename().string() + (count > 1 ? "#" + std::to_string(k) : ""),
                                 f.string(), k, std::nullopt});
        }
        return items;
    }
    Json manifest;
    try {
        manifest = Json::parse(std::ifstream(path));
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::ParseError, path.string() + ": " + e.what());
    }
    for (const auto& inst : manifest.at("instances")) {
        BenchItem item;
        item.file = (path.parent_path() / inst.at("file").get<std::string>()).string();
        item.index = inst.value("index", 0);
        item.name = inst.value("name", item.file + "#" + std::to_string(item.index));
        if (inst.contains("oracle_hamiltonian")) item.oracle = inst["oracle_hamiltonian"].get<bool>();
        items.push_back(std::move(item));
    }
    return items;
}

BenchRow bench_one(const BenchItem& item, const RunConfig& cfg) {
    BenchRow row;
    row.json = Json{{"name", item.name}};
    try {
        auto graphs = load_graphs(item.file, parse_format(cfg.format));
        if (item.index >= static_cast<int>(graphs.size()))
            throw Error(ErrorCode::IndexOutOfRange, "graph index " + std::to_string(item.index));
        const auto& g = graphs[item.index];
        const auto [dual, triangles] = build_dual(g, cfg.root_face);
        const auto outcome = solve(g, dual, triangles, solver_config(cfg));
        const double reference = std::pow(2.0, 1.0 + g.vertex_count() / 4.0);
        row.json["n"] = g.vertex_count();
        row.json["f"] = g.face_count();
        row.json["result"] = std::string(to_string(outcome.result));
        row.json["nodes"] = outcome.stats.nodes;
        row.json["reference_nodes"] = reference;
        row.json["nodes_over_reference"] = static_cast<double>(outcome.stats.nodes) / reference;
        row.json["time_ms"] = cfg.timing ? Json(outcome.stats.wall_time_ms) : Json(nullptr);
        if (item.oracle) {
            row.json["oracle_hamiltonian"] = *item.oracle;
            if (outcome.result == SolveResult::Aborted)
                row.json["agree"] = nullptr;
            else
                row.json["agree"] = (outcome.result == SolveResult::Hamiltonian) == *item.oracle;
        }
    } catch (const std::exception& e) {
        row.error = true;
        row.json["error"] = e.what();
    }
    return row;
}

int bench_threads() {
    int threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    if (const char* env = std::getenv("HAMDUAL_THREADS")) {
        const int cap = std::atoi(env);
        if (cap > 0) threads = std::min(threads, cap);
    }
    return threads;
}

int cmd_bench(const RunConfig& cfg) {
    const auto items = collect_bench_items(cfg.input);
    std::vector<BenchRow> rows(items.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < items.size();) rows[i] = bench_one(items[i], cfg);
    };
    std::vector<std::thread> pool;
    const int threads = std::min<int>(bench_threads(), static_cast<int>(items.size()));
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    int errors = 0, compared = 0, agreed = 0;
    double log_ratio_sum = 0;
    int solved = 0;
    for (const auto& r : rows) {
        if (r.error) {
            ++errors;
            continue;
        }
        if (r.json.contains("agree") && !r.json["agree"].is_null()) {
            ++compared;
            agreed += r.json["agree"].get<bool>();
        }
        const auto nodes = r.json["nodes"].get<double>();
        log_ratio_sum += std::log2(std::max(nodes, 1.0) / r.json["reference_nodes"].get<double>());
        ++solved;
    }
    Json summary{{"instances", rows.size()},
                 {"errors", errors},
                 {"oracle_compared", compared},
                 {"oracle_agreed", agreed},
                 {"mean_log2_nodes_over_reference", solved ? log_ratio_sum / solved : 0.0}};
    if (cfg.json) {
        Json table = Json::array();
        for (const auto& r : rows) table.push_back(r.json);
        std::cout << Json{{"rows", table}, {"summary", summary}}.dump(2) << "\n";
    } else {
        std::cout << "name\tn\tf\tresult\tnodes\t2^(1+n/4)\ttime_ms\tagree\n";
        for (const auto& r : rows) {
            const auto& j = r.json;
            if (r.error) {
                std::cout << j["name"].get<std::string>() << "\terror: "
                          << j["error"].get<std::string>() << "\n";
                continue;
            }
            std::cout << j["name"].get<std::string>() << "\t" << j["n"] << "\t" << j["f"] << "\t"
                      << j["result"].get<std::string>() << "\t" << j["nodes"] << "\t"
                      << j["reference_nodes"] << "\t" << j["time_ms"] << "\t"
                      << (j.contains("agree") ? j["agree"].dump() : "-") << "\n";
        }
        std::cout << "instances=" << rows.size() << " errors=" << errors << " agreement="
                  << agreed << "/" << compared << "\n";
    }
    return 0;
}

int cmd_corpus(int max_n, std::uint64_t seed, int count, const std::string& out_dir) {
    const auto corpus = generate_corpus(max_n, seed, count);
    fs::create_directories(out_dir);
    std::vector<RotationEmbedding> graphs;
    Json instances = Json::array();
    for (std::size_t k = 0; k < corpus.size(); ++k) {
        const auto& g = corpus[k].graph;
        const auto dfs = oracle_dfs(g);
        Json inst{{"file", "corpus.pc"},
                  {"index", k},
                  {"name", corpus[k].name},
                  {"n", g.vertex_count()},
                  {"e", g.edge_count()},
                  {"f", g.face_count()},
                  {"oracle_hamiltonian", dfs.hamiltonian}};
        if (g.vertex_count() <= kOracleDpMaxVertices)
            inst["oracle_dp_hamiltonian"] = oracle_dp(plain_adjacency(g)).hamiltonian;
        instances.push_back(std::move(inst));
        graphs.push_back(g);
    }
    const auto bytes = serialize_planar_code(graphs);
    std::ofstream pc(fs::path(out_dir) / "corpus.pc", std::ios::binary);
    pc.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    write_text((fs::path(out_dir) / "manifest.json").string(),
               Json{{"max_n", max_n}, {"seed", seed}, {"instances", instances}}.dump(2) + "\n");
    std::cout << "wrote " << corpus.size() << " instances to " << out_dir << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hamiltonian cycles in cubic plane graphs via induced dual trees"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string certificate_out, dual_dot;
    auto* solve_cmd = app.add_subcommand("solve", "decide Hamiltonicity and emit a certificate");
    solve_cmd->add_option("input", cfg.input, "graph file")->required();
    add_common(solve_cmd, cfg);
    solve_cmd->add_option("--max-nodes", cfg.max_nodes, "branch budget");
    solve_cmd->add_option("--max-seconds", cfg.max_seconds, "time budget")->check(CLI::NonNegativeNumber);
    solve_cmd->add_flag("--timing", cfg.timing, "report wall time");
    solve_cmd->add_option("--dot", cfg.dot_path, "write the graph with the cycle as DOT");
    solve_cmd->add_option("--dual-dot", dual_dot, "write the dual graph as DOT");
    solve_cmd->add_option("--certificate", certificate_out, "write the certificate JSON");

    std::string certificate_in;
    auto* verify_cmd = app.add_subcommand("verify", "check a certificate against a graph");
    verify_cmd->add_option("graph", cfg.input, "graph file")->required();
    verify_cmd->add_option("certificate", certificate_in, "certificate JSON")->required();
    add_common(verify_cmd, cfg);

    std::string policy = "fifo", frames_dir;
    std::uint64_t seed = 0;
    std::vector<int> script;
    auto* expand_cmd = app.add_subcommand("expand", "run the cycle expansion and trace it");
    expand_cmd->add_option("input", cfg.input, "graph file")->required();
    add_common(expand_cmd, cfg);
    expand_cmd->add_option("--policy", policy, "fifo | random | script")
        ->check(CLI::IsMember({"fifo", "random", "script"}));
    expand_cmd->add_option("--seed", seed, "seed for the random policy");
    expand_cmd->add_option("--script", script, "primal edge ids for the script policy")
        ->delimiter(',');
    expand_cmd->add_option("--dot", cfg.dot_path, "write the final cycle as DOT");
    expand_cmd->add_option("--dot-frames", frames_dir, "write one DOT file per step here");

    auto* bench_cmd = app.add_subcommand("bench", "solve every graph in a directory or manifest");
    bench_cmd->add_option("corpus", cfg.input, "directory or manifest JSON")->required();
    add_common(bench_cmd, cfg);
    bench_cmd->add_option("--max-nodes", cfg.max_nodes, "branch budget per instance");
    bench_cmd->add_option("--max-seconds", cfg.max_seconds, "time budget per instance")
        ->check(CLI::NonNegativeNumber);
    bench_cmd->add_flag("--timing", cfg.timing, "include wall time in JSON rows");

    int max_n = kCorpusMaxVertices, count = kDefaultRandomInstances;
    std::string out_dir;
    std::uint64_t corpus_seed = 1;
    auto* corpus_cmd = app.add_subcommand("corpus", "generate a random corpus with oracle verdicts");
    corpus_cmd->add_option("--max-n", max_n, "largest vertex count")->check(CLI::Range(4, kCorpusMaxVertices));
    corpus_cmd->add_option("--seed", corpus_seed, "generator seed");
    corpus_cmd->add_option("--count", count, "random instances")->check(CLI::NonNegativeNumber);
    corpus_cmd->add_option("--out", out_dir, "output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitError;
    }

    try {
        if (*solve_cmd) return cmd_solve(cfg, certificate_out, dual_dot);
        if (*verify_cmd) return cmd_verify(cfg, certificate_in);
        if (*expand_cmd) return cmd_expand(cfg, policy, seed, script, frames_dir);
        if (*bench_cmd) return cmd_bench(cfg);
        if (*corpus_cmd) return cmd_corpus(max_n, corpus_seed, count, out_dir);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
