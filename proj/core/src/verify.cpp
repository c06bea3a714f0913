#include "qwnull/verify.hpp"

#include <cmath>
#include <map>
#include <optional>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "qwnull/oracle.hpp"

namespace qwnull {

namespace {

std::vector<double> to_double(const std::vector<Int>& row) {
    std::vector<double> out;
    out.reserve(row.size());
    for (const auto& x : row) out.push_back(static_cast<double>(to_int64(x)));
    return out;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
    return s;
}

std::vector<std::vector<double>> orthonormal_rows(const std::vector<std::vector<Int>>& basis) {
    std::vector<std::vector<double>> q;
    for (const auto& row : basis) {
        auto v = to_double(row);
        for (const auto& u : q) {
            const double c = dot(u, v);
            for (std::size_t k = 0; k < v.size(); ++k) v[k] -= c * u[k];
        }
        const double len = std::sqrt(dot(v, v));
        if (len < 1e-12) continue;
        for (auto& x : v) x /= len;
        q.push_back(std::move(v));
    }
    return q;
}

std::vector<std::complex<double>> to_complex(const std::vector<double>& v) {
    std::vector<std::complex<double>> out;
    out.reserve(v.size());
    for (double x : v) out.emplace_back(x, 0.0);
    return out;
}

std::string format_double(double x) {
    std::ostringstream out;
    out.precision(3);
    out << std::scientific << x;
    return out.str();
}

// Rebuilds the diagonal map and per-pair results a relation check needs from
// a finished report.
struct ReportView {
    int complete_index = -1;
    std::map<int, Subspace> diag;
    std::vector<PairNullResult> results;
};

ReportView view_of(const LatticeReport& report) {
    ReportView view;
    const int n = report.order;
    for (std::size_t i = 0; i < report.graphs.size(); ++i) {
        if (static_cast<int>(report.graphs[i].edges().size()) == n * (n - 1) / 2)
            view.complete_index = static_cast<int>(i);
    }
    view.results.reserve(report.pairs.size());
    for (const auto& p : report.pairs) {
        const Subspace& space = report.subspaces[p.subspace_id - 1];
        if (p.graph_i == p.graph_j) view.diag.emplace(p.graph_i, space);
        PairNullResult r;
        r.graph_i = p.graph_i;
        r.graph_j = p.graph_j;
        r.space = space;
        view.results.push_back(std::move(r));
    }
    return view;
}

}  // namespace

std::vector<std::string> check_subset_relations(const LatticeReport& report) {
    const ReportView view = view_of(report);
    std::vector<std::string> out;
    for (const auto& v : verify_subset_relations(view.results, view.diag, view.complete_index)) {
        out.push_back("relation " + v.relation + " failed for pair (" +
                      std::to_string(v.graph_i) + "," + std::to_string(v.graph_j) +
                      "): " + v.detail);
    }
    return out;
}

VerificationReport run_verification(const LatticeReport& report, const VerifyOptions& options) {
    VerificationReport out;
    out.order = report.order;
    out.graph_count = static_cast<int>(report.graphs.size());
    out.pair_count = report.pair_count();
    out.zone_count = report.zone_count();

    const ReportView view = view_of(report);
    const std::map<int, Subspace>& diag = view.diag;

    out.relation_checks = static_cast<int>(view.results.size());
    for (auto& v : check_subset_relations(report)) out.violations.push_back(std::move(v));

    // Representative pair per zone: the first in (i, j) order.
    std::vector<std::optional<std::pair<int, int>>> zone_rep(report.zone_count());
    std::vector<std::vector<std::pair<int, int>>> zone_pairs(report.zone_count());
    for (const auto& p : report.pairs) {
        if (!zone_rep[p.subspace_id - 1])
            zone_rep[p.subspace_id - 1] = std::make_pair(p.graph_i, p.graph_j);
        zone_pairs[p.subspace_id - 1].emplace_back(p.graph_i, p.graph_j);
    }

    std::map<int, UnitaryCache> caches;
    auto cache_for = [&](int idx) -> const UnitaryCache& {
        auto it = caches.find(idx);
        if (it == caches.end())
            it = caches.emplace(idx, UnitaryCache(laplacian(report.graphs[idx]))).first;
        return it->second;
    };

    // Residual sweep over every zone basis vector.
    TimeSampler sampler(options.seed);
    for (const auto& zone : report.zones) {
        const auto [gi, gj] = *zone_rep[zone.zone_id - 1];
        const UnitaryCache& ui = cache_for(gi);
        const UnitaryCache& uj = cache_for(gj);
        const Subspace& space = report.subspaces[zone.subspace_id - 1];
        for (int b = 0; b < space.dim(); ++b) {
            auto v = to_double(space.basis()[b]);
            const double len = std::sqrt(dot(v, v));
            for (auto& x : v) x /= len;
            const auto psi = to_complex(v);
            ++out.null_vectors_checked;
            for (int s = 0; s < options.samples; ++s) {
                const auto [t, tp] = sampler.next();
                const double r = w_residual(ui, uj, psi, t, tp);
                if (r >= options.accept_tol) {
                    out.violations.push_back(
                        "zone " + std::to_string(zone.zone_id) + " basis vector " +
                        std::to_string(b) + " has residual " + format_double(r) +
                        " at (t,t')=(" + format_double(t) + "," + format_double(tp) + ")");
                }
            }
        }
    }

    // Rejection sweep: vectors inside the diagonal intersection but outside
    // the zone must show a large residual for some sampled (t, t').
    std::mt19937_64 gap_rng(options.seed ^ 0x9e3779b97f4a7c15ULL);
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (const auto& zone : report.zones) {
        const Subspace& space = report.subspaces[zone.subspace_id - 1];
        std::optional<std::pair<int, int>> gap_pair;
        Subspace enclosing = Subspace::zero(space.ambient_dim());
        for (const auto& [gi, gj] : zone_pairs[zone.zone_id - 1]) {
            const Subspace inter = intersect(diag.at(gi), diag.at(gj));
            if (inter.dim() > space.dim()) {
                gap_pair = std::make_pair(gi, gj);
                enclosing = inter;
                break;
            }
        }
        if (!gap_pair) continue;
        ++out.gap_zones;
        const UnitaryCache& ui = cache_for(gap_pair->first);
        const UnitaryCache& uj = cache_for(gap_pair->second);
        const auto zone_onb = orthonormal_rows(space.basis());
        std::vector<std::vector<double>> enclosing_basis;
        for (const auto& row : enclosing.basis()) enclosing_basis.push_back(to_double(row));

        for (int v = 0; v < options.gap_vectors; ++v) {
            std::vector<double> vec(space.ambient_dim(), 0.0);
            double len = 0.0;
            for (int attempt = 0; attempt < 100; ++attempt) {
                std::fill(vec.begin(), vec.end(), 0.0);
                for (const auto& row : enclosing_basis) {
                    const double c = gauss(gap_rng);
                    for (std::size_t k = 0; k < vec.size(); ++k) vec[k] += c * row[k];
                }
                for (const auto& u : zone_onb) {
                    const double c = dot(u, vec);
                    for (std::size_t k = 0; k < vec.size(); ++k) vec[k] -= c * u[k];
                }
                len = std::sqrt(dot(vec, vec));
                if (len > 1e-6) break;
            }
            for (auto& x : vec) x /= len;
            const auto psi = to_complex(vec);
            ++out.gap_vectors_checked;
            double max_residual = 0.0;
            for (int s = 0; s < options.samples; ++s) {
                const auto [t, tp] = sampler.next();
                max_residual = std::max(max_residual, w_residual(ui, uj, psi, t, tp));
            }
            if (max_residual <= options.reject_tol) {
                out.violations.push_back(
                    "zone " + std::to_string(zone.zone_id) + ": sampled vector " +
                    std::to_string(v) + " outside the zone was not rejected (max residual " +
                    format_double(max_residual) + ")");
            }
        }
    }
    return out;
}

std::vector<std::string> compare_report_with_json(const LatticeReport& report,
                                                  const std::string& json_text) {
    std::vector<std::string> violations;
    const auto j = nlohmann::json::parse(json_text);

    if (j.value("order", -1) != report.order)
        violations.push_back("check-file order differs from computed order");
    if (j.value("zone_count", -1) != report.zone_count())
        violations.push_back("check-file zone count " +
                             std::to_string(j.value("zone_count", -1)) + " != computed " +
                             std::to_string(report.zone_count()));
    if (j.value("pair_count", -1) != report.pair_count())
        violations.push_back("check-file pair count differs from computed");

    if (j.contains("zones")) {
        for (const auto& jz : j.at("zones")) {
            const int zone_id = jz.value("zone", -1);
            if (zone_id < 1 || zone_id > report.zone_count()) {
                violations.push_back("check-file zone id " + std::to_string(zone_id) +
                                     " is out of range");
                continue;
            }
            const ZoneRecord& z = report.zones[zone_id - 1];
            if (jz.value("cardinality", -1) != z.cardinality)
                violations.push_back("zone " + std::to_string(zone_id) +
                                     " cardinality differs from computed");
            if (jz.value("degeneracy", -1) != z.degeneracy)
                violations.push_back("zone " + std::to_string(zone_id) +
                                     " degeneracy differs from computed");
        }
    }

    if (j.contains("subspaces")) {
        for (const auto& [key, js] : j.at("subspaces").items()) {
            const int id = std::stoi(key);
            if (id < 1 || id > static_cast<int>(report.subspaces.size())) {
                violations.push_back("check-file subspace id " + key + " is out of range");
                continue;
            }
            const Subspace claimed = subspace_from_json(js.dump());
            if (claimed != report.subspaces[id - 1]) {
                violations.push_back("subspace " + key +
                                     " does not match the recomputed null space");
            }
        }
    }
    return violations;
}

}  // namespace qwnull
