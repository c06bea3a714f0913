#include "qwnull/lattice.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <utility>

#include <nlohmann/json.hpp>

namespace qwnull {

namespace {

int resolve_threads(int requested, std::size_t work_items) {
    int t = requested > 0 ? requested
                          : static_cast<int>(std::thread::hardware_concurrency());
    if (t < 1) t = 1;
    if (static_cast<std::size_t>(t) > work_items) t = static_cast<int>(work_items);
    return t;
}

// Runs fn(index) for index in [0, count) across a small worker pool. Each
// index writes only its own output slot, so results are deterministic
// regardless of scheduling.
template <typename Fn>
void parallel_for(std::size_t count, int threads, Fn&& fn) {
    if (count == 0) return;
    const int t = resolve_threads(threads, count);
    if (t <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(t);
    for (int w = 0; w < t; ++w) {
        pool.emplace_back([&]() {
            for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

bool lex_less(const Subspace& a, const Subspace& b) { return a.basis() < b.basis(); }

nlohmann::ordered_json report_to_json(const LatticeReport& report) {
    nlohmann::ordered_json j;
    j["order"] = report.order;
    j["graph_count"] = static_cast<int>(report.graphs.size());
    j["pair_count"] = report.pair_count();
    j["zone_count"] = report.zone_count();

    auto& graphs = j["graphs"] = nlohmann::json::array();
    for (std::size_t i = 0; i < report.graphs.size(); ++i) {
        const auto& g = report.graphs[i];
        nlohmann::ordered_json jg;
        jg["index"] = static_cast<int>(i);
        jg["mask"] = g.edge_mask();
        jg["order"] = g.order();
        auto& edges = jg["edges"] = nlohmann::json::array();
        for (auto [u, v] : g.edges()) edges.push_back({u, v});
        graphs.push_back(std::move(jg));
    }

    auto& zones = j["zones"] = nlohmann::json::array();
    for (const auto& z : report.zones) {
        nlohmann::ordered_json jz;
        jz["zone"] = z.zone_id;
        jz["subspace_id"] = z.subspace_id;
        jz["cardinality"] = z.cardinality;
        jz["degeneracy"] = z.degeneracy;
        zones.push_back(std::move(jz));
    }

    auto& pairs = j["pairs"] = nlohmann::json::array();
    for (const auto& p : report.pairs) {
        nlohmann::ordered_json jp;
        jp["i"] = p.graph_i;
        jp["j"] = p.graph_j;
        jp["dim"] = p.dim;
        jp["subspace_id"] = p.subspace_id;
        pairs.push_back(std::move(jp));
    }

    auto& hasse = j["hasse_edges"] = nlohmann::json::array();
    for (auto [sub, super] : report.hasse_edges) hasse.push_back({sub, super});

    auto& closure = j["intersection_closure"] = nlohmann::json::array();
    for (const auto& e : report.intersection_closure) {
        nlohmann::ordered_json je;
        je["zones"] = {e.zone_ids[0], e.zone_ids[1]};
        if (e.is_new) {
            je["result"] = "new";
        } else {
            je["result"] = e.subspace_id;
        }
        je["dim"] = e.dim;
        closure.push_back(std::move(je));
    }

    auto& subspaces = j["subspaces"] = nlohmann::ordered_json::object();
    for (std::size_t k = 0; k < report.subspaces.size(); ++k) {
        const Subspace& s = report.subspaces[k];
        nlohmann::ordered_json js;
        js["ambient_dim"] = s.ambient_dim();
        js["dim"] = s.dim();
        auto& basis = js["basis"] = nlohmann::json::array();
        for (const auto& row : s.basis()) {
            nlohmann::ordered_json jr = nlohmann::json::array();
            for (const auto& x : row) jr.push_back(to_int64(x));
            basis.push_back(std::move(jr));
        }
        subspaces[std::to_string(k + 1)] = std::move(js);
    }
    return j;
}

}  // namespace

LatticeReport classify(int order, const ClassifyOptions& options) {
    LatticeReport report;
    report.order = order;
    report.graphs = enumerate_labeled_connected(order, options.limit);
    const int g = static_cast<int>(report.graphs.size());

    std::vector<IntMatrix> laplacians;
    laplacians.reserve(g);
    for (const auto& graph : report.graphs) laplacians.push_back(laplacian(graph));

    std::vector<Subspace> diag(g, Subspace::zero(0));
    parallel_for(g, options.threads,
                 [&](std::size_t i) { diag[i] = diag_null(laplacians[i]); });

    // Unordered pairs (i, j), i <= j, in sorted order.
    std::vector<std::pair<int, int>> index_pairs;
    index_pairs.reserve(static_cast<std::size_t>(g) * (g + 1) / 2);
    for (int i = 0; i < g; ++i)
        for (int j = i; j < g; ++j) index_pairs.emplace_back(i, j);

    std::vector<Subspace> spaces(index_pairs.size(), Subspace::zero(0));
    parallel_for(index_pairs.size(), options.threads, [&](std::size_t k) {
        const auto [i, j] = index_pairs[k];
        spaces[k] = i == j ? diag[i]
                           : pair_null(laplacians[i], laplacians[j], diag[i], diag[j]).space;
    });

    // Canonical dedup: identical bases mean identical subspaces.
    std::map<Subspace, std::vector<std::size_t>> groups;
    for (std::size_t k = 0; k < index_pairs.size(); ++k) groups[spaces[k]].push_back(k);

    std::vector<std::pair<const Subspace*, const std::vector<std::size_t>*>> ordered;
    ordered.reserve(groups.size());
    for (const auto& [space, members] : groups) ordered.emplace_back(&space, &members);
    std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
        if (a.first->dim() != b.first->dim()) return a.first->dim() > b.first->dim();
        if (a.second->size() != b.second->size()) return a.second->size() > b.second->size();
        return lex_less(*a.first, *b.first);
    });

    std::vector<int> pair_zone(index_pairs.size(), 0);
    for (std::size_t z = 0; z < ordered.size(); ++z) {
        const int zone_id = static_cast<int>(z) + 1;
        report.subspaces.push_back(*ordered[z].first);
        report.zones.push_back({zone_id, zone_id, ordered[z].first->dim(),
                                static_cast<int>(ordered[z].second->size())});
        for (std::size_t k : *ordered[z].second) pair_zone[k] = zone_id;
    }
    for (std::size_t k = 0; k < index_pairs.size(); ++k) {
        report.pairs.push_back({index_pairs[k].first, index_pairs[k].second,
                                spaces[k].dim(), pair_zone[k]});
    }

    // Strict inclusions among zones, then their transitive reduction.
    const int z = report.zone_count();
    std::vector<std::vector<bool>> below(z, std::vector<bool>(z, false));
    for (int a = 0; a < z; ++a) {
        for (int b = 0; b < z; ++b) {
            if (a == b) continue;
            if (report.subspaces[a].dim() < report.subspaces[b].dim() &&
                contains(report.subspaces[b], report.subspaces[a])) {
                below[a][b] = true;
            }
        }
    }
    for (int a = 0; a < z; ++a) {
        for (int b = 0; b < z; ++b) {
            if (!below[a][b]) continue;
            bool covering = true;
            for (int c = 0; c < z && covering; ++c) {
                if (below[a][c] && below[c][b]) covering = false;
            }
            if (covering) report.hasse_edges.emplace_back(a + 1, b + 1);
        }
    }

    // Pairwise intersections of incomparable zones.
    std::map<Subspace, int> zone_of;
    for (int k = 0; k < z; ++k) zone_of[report.subspaces[k]] = k + 1;
    for (int a = 0; a < z; ++a) {
        for (int b = a + 1; b < z; ++b) {
            if (below[a][b] || below[b][a]) continue;
            const Subspace s = intersect(report.subspaces[a], report.subspaces[b]);
            IntersectionEntry entry;
            entry.zone_ids = {a + 1, b + 1};
            entry.dim = s.dim();
            const auto it = zone_of.find(s);
            if (it == zone_of.end()) {
                entry.is_new = true;
            } else {
                entry.subspace_id = it->second;
            }
            report.intersection_closure.push_back(entry);
        }
    }
    return report;
}

std::vector<std::array<int, 3>> degeneracy_table(const LatticeReport& report) {
    std::vector<std::array<int, 3>> rows;
    rows.reserve(report.zones.size());
    for (const auto& zres : report.zones)
        rows.push_back({zres.zone_id, zres.degeneracy, zres.cardinality});
    return rows;
}

std::map<int, std::vector<int>> diagonal_degeneracy(const LatticeReport& report) {
    std::map<int, std::vector<int>> groups;
    for (const auto& p : report.pairs) {
        if (p.graph_i == p.graph_j) groups[p.subspace_id].push_back(p.graph_i);
    }
    return groups;
}

std::map<int, std::vector<int>> diagonal_degeneracy(int order, const ClassifyOptions& options) {
    return diagonal_degeneracy(classify(order, options));
}

ExportFormat parse_export_format(const std::string& name) {
    if (name == "json") return ExportFormat::kJson;
    if (name == "csv") return ExportFormat::kCsv;
    if (name == "dot") return ExportFormat::kDot;
    throw std::invalid_argument("unknown export format: " + name);
}

std::string export_report(const LatticeReport& report, ExportFormat format) {
    switch (format) {
        case ExportFormat::kJson:
            return report_to_json(report).dump(2) + "\n";
        case ExportFormat::kCsv: {
            std::ostringstream out;
            out << "zone,degeneracy,cardinality\n";
            for (const auto& row : degeneracy_table(report))
                out << row[0] << ',' << row[1] << ',' << row[2] << '\n';
            return out.str();
        }
        case ExportFormat::kDot: {
            std::ostringstream out;
            out << "digraph nullspace_lattice {\n  rankdir=BT;\n";
            for (const auto& zres : report.zones) {
                out << "  z" << zres.zone_id << " [label=\"" << zres.zone_id << " ("
                    << zres.cardinality << ")\"];\n";
            }
            for (auto [sub, super] : report.hasse_edges)
                out << "  z" << sub << " -> z" << super << ";\n";
            out << "}\n";
            return out.str();
        }
    }
    throw std::invalid_argument("unknown export format");
}

}  // namespace qwnull
