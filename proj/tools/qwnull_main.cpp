// Command-line surface for the exact quantum-walk null-space toolkit.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qwnull/distinguishability.hpp"
#include "qwnull/graph.hpp"
#include "qwnull/lattice.hpp"
#include "qwnull/oracle.hpp"
#include "qwnull/subspace.hpp"
#include "qwnull/verify.hpp"

namespace {

using nlohmann::ordered_json;

int env_int(const char* name, int fallback) {
    const char* value = std::getenv(name);
    if (value == nullptr || *value == '\0') return fallback;
    return std::stoi(value);
}

int single_graph_limit() { return env_int("QWNULL_MAX_ORDER", qwnull::kDefaultEnumerationLimit); }
int classify_limit() { return env_int("QWNULL_MAX_ORDER", qwnull::kDefaultClassifyLimit); }
int thread_count() { return env_int("QWNULL_THREADS", 0); }

std::string fmt_g15(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return buf;
}

double round_g15(double x) { return std::strtod(fmt_g15(x).c_str(), nullptr); }

// Accepts 0b..., 0x... and decimal bitmask literals.
std::uint64_t parse_mask(const std::string& text) {
    if (text.rfind("0b", 0) == 0 || text.rfind("0B", 0) == 0) {
        if (text.size() == 2) throw std::invalid_argument("empty binary literal");
        std::uint64_t mask = 0;
        for (std::size_t i = 2; i < text.size(); ++i) {
            if (text[i] != '0' && text[i] != '1')
                throw std::invalid_argument("invalid binary literal: " + text);
            mask = mask << 1 | static_cast<std::uint64_t>(text[i] - '0');
        }
        return mask;
    }
    std::size_t used = 0;
    const int base = text.rfind("0x", 0) == 0 || text.rfind("0X", 0) == 0 ? 16 : 10;
    const std::uint64_t mask = std::stoull(text, &used, base);
    if (used != text.size()) throw std::invalid_argument("invalid bitmask literal: " + text);
    return mask;
}

// Graphs are addressable as "K" (complete graph), an enumeration index, or an
// edge bitmask (the stable identity).
qwnull::LabeledGraph resolve_graph(int order, const std::string& selector,
                                   const std::string& mask_text) {
    const int limit = single_graph_limit();
    if (order < 1 || order > limit) {
        throw std::out_of_range("graph order " + std::to_string(order) +
                                " is outside the supported range [1, " +
                                std::to_string(limit) + "]");
    }
    if (!mask_text.empty())
        return qwnull::LabeledGraph::from_edge_mask(order, parse_mask(mask_text));
    if (selector == "K" || selector == "k") return qwnull::complete_graph(order);
    std::size_t used = 0;
    const int index = std::stoi(selector, &used);
    if (used != selector.size() || index < 0)
        throw std::invalid_argument("graph selector must be K, an index, or use --edges");
    const auto graphs = qwnull::enumerate_labeled_connected(order, single_graph_limit());
    if (index >= static_cast<int>(graphs.size()))
        throw std::invalid_argument("graph index " + std::to_string(index) +
                                    " out of range: order " + std::to_string(order) + " has " +
                                    std::to_string(graphs.size()) + " graphs");
    return graphs[index];
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
    out << text;
}

ordered_json graph_json(const qwnull::LabeledGraph& g) {
    ordered_json j;
    j["order"] = g.order();
    auto& edges = j["edges"] = ordered_json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    return j;
}

int run_enumerate(int order, const std::string& format, const std::string& out_path) {
    const auto graphs = qwnull::enumerate_labeled_connected(order, single_graph_limit());
    if (format == "json") {
        ordered_json j = ordered_json::array();
        for (const auto& g : graphs) j.push_back(graph_json(g));
        write_output(j.dump(2) + "\n", out_path);
    } else if (format == "csv") {
        std::ostringstream out;
        out << "index,mask,order,edges\n";
        for (std::size_t i = 0; i < graphs.size(); ++i) {
            out << i << ',' << graphs[i].edge_mask() << ',' << graphs[i].order() << ',';
            for (std::size_t e = 0; e < graphs[i].edges().size(); ++e) {
                if (e > 0) out << ';';
                out << graphs[i].edges()[e].first << '-' << graphs[i].edges()[e].second;
            }
            out << '\n';
        }
        write_output(out.str(), out_path);
    } else {
        throw std::invalid_argument("unknown format: " + format);
    }
    return 0;
}

int run_nullspace(int order, const std::string& sel_i, const std::string& mask_i,
                  const std::string& sel_j, const std::string& mask_j, bool uniform_sum,
                  const std::string& format, const std::string& out_path) {
    const auto gi = resolve_graph(order, sel_i, mask_i);
    const auto gj = resolve_graph(order, sel_j, mask_j);
    const auto result = qwnull::pair_null(qwnull::laplacian(gi), qwnull::laplacian(gj));
    const qwnull::Subspace& space = result.space;
    const auto basis = uniform_sum ? qwnull::to_uniform_sum_basis(space) : space.basis();

    if (format == "json") {
        ordered_json j;
        j["ambient_dim"] = space.ambient_dim();
        j["dim"] = space.dim();
        auto& rows = j["basis"] = ordered_json::array();
        for (const auto& row : basis) {
            ordered_json jr = ordered_json::array();
            for (const auto& x : row) jr.push_back(qwnull::to_int64(x));
            rows.push_back(std::move(jr));
        }
        write_output(j.dump(2) + "\n", out_path);
    } else if (format == "csv") {
        std::ostringstream out;
        for (const auto& row : basis) {
            for (std::size_t c = 0; c < row.size(); ++c) {
                if (c > 0) out << ',';
                out << row[c];
            }
            out << '\n';
        }
        write_output(out.str(), out_path);
    } else {
        throw std::invalid_argument("unknown format: " + format);
    }
    return 0;
}

int run_classify(int order, std::string prefix) {
    qwnull::ClassifyOptions options;
    options.limit = classify_limit();
    options.threads = thread_count();
    const auto report = qwnull::classify(order, options);
    if (prefix.empty()) prefix = "lattice_order" + std::to_string(order);
    write_output(qwnull::export_report(report, qwnull::ExportFormat::kJson), prefix + ".json");
    write_output(qwnull::export_report(report, qwnull::ExportFormat::kCsv), prefix + ".csv");
    write_output(qwnull::export_report(report, qwnull::ExportFormat::kDot), prefix + ".dot");
    std::cout << "graphs=" << report.graphs.size() << " pairs=" << report.pair_count()
              << " zones=" << report.zone_count() << "\n";
    return 0;
}

int run_verify(int order, std::uint64_t seed, int samples, const std::string& check_file,
               const std::string& format, const std::string& out_path) {
    qwnull::ClassifyOptions coptions;
    coptions.limit = classify_limit();
    coptions.threads = thread_count();
    const auto report = qwnull::classify(order, coptions);

    qwnull::VerifyOptions voptions;
    voptions.seed = seed;
    voptions.samples = samples;
    auto verification = qwnull::run_verification(report, voptions);

    int checkfile_violations = -1;
    if (!check_file.empty()) {
        std::ifstream in(check_file, std::ios::binary);
        if (!in) throw std::invalid_argument("cannot open check file: " + check_file);
        std::stringstream buffer;
        buffer << in.rdbuf();
        const auto file_violations = qwnull::compare_report_with_json(report, buffer.str());
        checkfile_violations = static_cast<int>(file_violations.size());
        for (const auto& v : file_violations)
            verification.violations.push_back("check-file: " + v);
    }

    if (format == "json") {
        ordered_json j;
        j["order"] = verification.order;
        j["graphs"] = verification.graph_count;
        j["pairs"] = verification.pair_count;
        j["zones"] = verification.zone_count;
        j["relation_checks"] = verification.relation_checks;
        j["null_vectors_checked"] = verification.null_vectors_checked;
        j["gap_zones"] = verification.gap_zones;
        j["gap_vectors_checked"] = verification.gap_vectors_checked;
        if (checkfile_violations >= 0) j["check_file_violations"] = checkfile_violations;
        j["violations"] = verification.violations;
        j["passed"] = verification.passed();
        write_output(j.dump(2) + "\n", out_path);
    } else {
        std::ostringstream out;
        out << "order=" << verification.order << " graphs=" << verification.graph_count
            << " pairs=" << verification.pair_count << " zones=" << verification.zone_count
            << "\n";
        out << "relations: pairs-checked=" << verification.relation_checks << "\n";
        out << "oracle-null: vectors=" << verification.null_vectors_checked
            << " samples-per-vector=" << samples << "\n";
        out << "oracle-gap: zones-with-gap=" << verification.gap_zones
            << " vectors=" << verification.gap_vectors_checked << "\n";
        if (checkfile_violations >= 0)
            out << "check-file: violations=" << checkfile_violations << "\n";
        for (const auto& v : verification.violations) out << "violation: " << v << "\n";
        out << "result: " << (verification.passed() ? "PASS" : "FAIL") << " ("
            << verification.violations.size() << " violations)\n";
        write_output(out.str(), out_path);
    }
    return verification.passed() ? 0 : 1;
}

std::vector<std::complex<double>> read_state_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open state file: " + path);
    const auto j = nlohmann::json::parse(in);
    std::vector<std::complex<double>> amplitudes;
    for (const auto& entry : j) {
        if (entry.is_array()) {
            amplitudes.emplace_back(entry.at(0).get<double>(), entry.at(1).get<double>());
        } else {
            amplitudes.emplace_back(entry.get<double>(), 0.0);
        }
    }
    return amplitudes;
}

int run_walk(int order, const std::string& selector, const std::string& mask_text,
             int start_vertex, const std::string& state_file, double t,
             const std::string& format, const std::string& out_path) {
    const auto g = resolve_graph(order, selector, mask_text);
    qwnull::WalkState psi0;
    if (!state_file.empty()) {
        psi0.amplitudes = read_state_file(state_file);
    } else {
        psi0 = qwnull::basis_state(order, start_vertex);
    }
    const auto psi = qwnull::evolve(g, psi0, t);
    const auto probs = qwnull::probabilities(psi);

    if (format == "json") {
        ordered_json j;
        j["order"] = order;
        j["mask"] = g.edge_mask();
        j["t"] = round_g15(t);
        auto& p = j["probabilities"] = ordered_json::array();
        for (double x : probs) p.push_back(round_g15(x));
        write_output(j.dump(2) + "\n", out_path);
    } else if (format == "csv") {
        std::ostringstream out;
        out << "vertex,probability\n";
        for (std::size_t v = 0; v < probs.size(); ++v)
            out << v << ',' << fmt_g15(probs[v]) << '\n';
        write_output(out.str(), out_path);
    } else {
        throw std::invalid_argument("unknown format: " + format);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact null-space classification for bipartite quantum-walk "
                 "distinguishability operators"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "qwnull 0.1.0");

    int rc = 0;

    // enumerate
    auto* enumerate = app.add_subcommand(
        "enumerate", "List all labeled connected graphs of a given order");
    int enum_order = 0;
    std::string enum_format = "json", enum_out;
    enumerate->add_option("--order", enum_order, "Graph order (vertex count)")->required();
    enumerate->add_option("--format", enum_format, "Output format: json or csv");
    enumerate->add_option("--out", enum_out, "Write output to a file instead of stdout");
    enumerate->callback([&] { rc = run_enumerate(enum_order, enum_format, enum_out); });

    // nullspace
    auto* nullspace = app.add_subcommand(
        "nullspace", "Exact null space of the distinguishability operator for a graph pair");
    int ns_order = 0;
    std::string ns_i, ns_j, ns_edges_i, ns_edges_j, ns_format = "json", ns_out;
    bool ns_uniform = false;
    nullspace->add_option("--order", ns_order, "Graph order")->required();
    nullspace->add_option("--i", ns_i, "First graph: K or enumeration index");
    nullspace->add_option("--j", ns_j, "Second graph: K or enumeration index");
    nullspace->add_option("--edges-i", ns_edges_i, "First graph as an edge bitmask");
    nullspace->add_option("--edges-j", ns_edges_j, "Second graph as an edge bitmask");
    nullspace->add_flag("--uniform-sum-basis", ns_uniform,
                        "Display a basis whose vector sum is the all-ones vector");
    nullspace->add_option("--format", ns_format, "Output format: json or csv");
    nullspace->add_option("--out", ns_out, "Write output to a file instead of stdout");
    nullspace->callback([&] {
        if (ns_i.empty() == ns_edges_i.empty() || ns_j.empty() == ns_edges_j.empty())
            throw std::invalid_argument(
                "select each graph exactly once, via --i/--j or --edges-i/--edges-j");
        rc = run_nullspace(ns_order, ns_i, ns_edges_i, ns_j, ns_edges_j, ns_uniform,
                           ns_format, ns_out);
    });

    // classify
    auto* classify = app.add_subcommand(
        "classify", "Classify all pair null spaces of one order and export the lattice");
    int cl_order = 0;
    std::string cl_out;
    classify->add_option("--order", cl_order, "Graph order")->required();
    classify->add_option("--out", cl_out,
                         "Output path prefix for the .json/.csv/.dot files "
                         "(default lattice_order<N>)");
    classify->callback([&] { rc = run_classify(cl_order, cl_out); });

    // verify
    auto* verify = app.add_subcommand(
        "verify", "Recompute a classification and cross-check it exactly and numerically");
    int vf_order = 0, vf_samples = 20;
    std::uint64_t vf_seed = 7;
    std::string vf_check_file, vf_format = "text", vf_out;
    verify->add_option("--order", vf_order, "Graph order")->required();
    verify->add_option("--seed", vf_seed, "Seed for the (t, t') sampler");
    verify->add_option("--samples", vf_samples, "Number of (t, t') draws per vector")
        ->check(CLI::Range(1, 1000000));
    verify->add_option("--check-file", vf_check_file,
                       "Classification JSON to validate against the recomputation");
    verify->add_option("--format", vf_format, "Output format: text or json");
    verify->add_option("--out", vf_out, "Write the report to a file instead of stdout");
    verify->callback([&] {
        rc = run_verify(vf_order, vf_seed, vf_samples, vf_check_file, vf_format, vf_out);
    });

    // walk
    auto* walk = app.add_subcommand("walk", "Evolve a walker and print vertex probabilities");
    int wk_order = 0, wk_start = 0;
    double wk_t = 0.0;
    std::string wk_graph, wk_edges, wk_state, wk_format = "json", wk_out;
    walk->add_option("--order", wk_order, "Graph order")->required();
    walk->add_option("--graph", wk_graph, "Graph: K or enumeration index");
    walk->add_option("--edges", wk_edges, "Graph as an edge bitmask");
    walk->add_option("--start", wk_start, "Start vertex (basis state)");
    walk->add_option("--state", wk_state,
                     "JSON file with initial amplitudes (numbers or [re,im] pairs)");
    walk->add_option("--t", wk_t, "Walk duration")->required();
    walk->add_option("--format", wk_format, "Output format: json or csv");
    walk->add_option("--out", wk_out, "Write output to a file instead of stdout");
    walk->callback([&] {
        if (wk_graph.empty() == wk_edges.empty())
            throw std::invalid_argument("select the graph exactly once, via --graph or --edges");
        rc = run_walk(wk_order, wk_graph, wk_edges, wk_start, wk_state, wk_t, wk_format,
                      wk_out);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
