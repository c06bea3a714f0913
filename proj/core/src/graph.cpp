#include "qwnull/graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace qwnull {

namespace {

void check_order_limit(int order, int limit) {
    if (order < 1 || order > limit) {
        throw std::out_of_range("graph order " + std::to_string(order) +
                                " is outside the supported range [1, " +
                                std::to_string(limit) + "]");
    }
}

}  // namespace

LabeledGraph::LabeledGraph(int order, std::vector<std::pair<int, int>> edges)
    : order_(order) {
    if (order < 1) throw std::invalid_argument("graph order must be positive");
    std::set<std::pair<int, int>> seen;
    edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u == v) throw std::invalid_argument("self-loops are not allowed");
        if (u > v) std::swap(u, v);
        if (u < 0 || v >= order) throw std::invalid_argument("edge endpoint out of range");
        if (!seen.insert({u, v}).second) throw std::invalid_argument("duplicate edge");
    }
    edges_.assign(seen.begin(), seen.end());
    if (!is_connected(order_, edges_)) {
        throw std::domain_error("graph is not connected");
    }
}

LabeledGraph LabeledGraph::from_edge_mask(int order, std::uint64_t mask) {
    const auto all = complete_edge_list(order);
    if (all.size() < 64 && mask >> all.size() != 0) {
        throw std::invalid_argument("edge bitmask has bits beyond the " +
                                    std::to_string(all.size()) + " edges of K_" +
                                    std::to_string(order));
    }
    std::vector<std::pair<int, int>> edges;
    for (std::size_t b = 0; b < all.size(); ++b) {
        if (mask >> b & 1) edges.push_back(all[b]);
    }
    return LabeledGraph(order, std::move(edges));
}

std::uint64_t LabeledGraph::edge_mask() const {
    std::uint64_t mask = 0;
    for (auto [u, v] : edges_) mask |= std::uint64_t{1} << edge_bit(u, v);
    return mask;
}

std::vector<int> LabeledGraph::degrees() const {
    std::vector<int> deg(order_, 0);
    for (auto [u, v] : edges_) {
        ++deg[u];
        ++deg[v];
    }
    return deg;
}

int edge_bit(int u, int v) {
    if (u > v) std::swap(u, v);
    return v * (v - 1) / 2 + u;
}

std::vector<std::pair<int, int>> complete_edge_list(int order) {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(order) * (order - 1) / 2);
    for (int v = 1; v < order; ++v)
        for (int u = 0; u < v; ++u) edges.emplace_back(u, v);
    return edges;
}

bool is_connected(int order, const std::vector<std::pair<int, int>>& edges) {
    if (order == 1) return true;
    std::vector<std::vector<int>> adj(order);
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<bool> seen(order, false);
    std::vector<int> stack{0};
    seen[0] = true;
    int reached = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int w : adj[v]) {
            if (!seen[w]) {
                seen[w] = true;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == order;
}

std::vector<LabeledGraph> enumerate_labeled_connected(int order, int limit) {
    check_order_limit(order, limit);
    const auto all = complete_edge_list(order);
    const std::uint64_t total = std::uint64_t{1} << all.size();
    std::vector<LabeledGraph> out;
    std::vector<std::pair<int, int>> edges;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        edges.clear();
        for (std::size_t b = 0; b < all.size(); ++b) {
            if (mask >> b & 1) edges.push_back(all[b]);
        }
        if (is_connected(order, edges)) out.emplace_back(order, edges);
    }
    return out;
}

IntMatrix adjacency_matrix(const LabeledGraph& g) {
    IntMatrix a(g.order(), g.order());
    for (auto [u, v] : g.edges()) {
        a.at(u, v) = 1;
        a.at(v, u) = 1;
    }
    return a;
}

IntMatrix degree_matrix(const LabeledGraph& g) {
    IntMatrix d(g.order(), g.order());
    const auto deg = g.degrees();
    for (int i = 0; i < g.order(); ++i) d.at(i, i) = deg[i];
    return d;
}

IntMatrix laplacian(const LabeledGraph& g) {
    IntMatrix l = degree_matrix(g);
    for (auto [u, v] : g.edges()) {
        l.at(u, v) -= 1;
        l.at(v, u) -= 1;
    }
    return l;
}

LabeledGraph complete_graph(int order) {
    return LabeledGraph(order, complete_edge_list(order));
}

bool is_path_graph(const LabeledGraph& g) {
    const int n = g.order();
    if (static_cast<int>(g.edges().size()) != n - 1) return false;
    if (n <= 2) return true;  // connected with n-1 edges
    const auto deg = g.degrees();
    int ones = 0;
    for (int d : deg) {
        if (d == 1)
            ++ones;
        else if (d != 2)
            return false;
    }
    return ones == 2;
}

std::vector<int> path_vertex_sequence(const LabeledGraph& g) {
    if (!is_path_graph(g)) throw std::domain_error("graph is not a path");
    const int n = g.order();
    if (n == 1) return {0};
    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : g.edges()) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    int start = 0;
    for (int v = 0; v < n; ++v) {
        if (adj[v].size() == 1) {
            start = v;
            break;
        }
    }
    std::vector<int> seq{start};
    int prev = -1;
    while (static_cast<int>(seq.size()) < n) {
        for (int w : adj[seq.back()]) {
            if (w != prev) {
                prev = seq.back();
                seq.push_back(w);
                break;
            }
        }
    }
    return seq;
}

std::string to_json_string(const LabeledGraph& g) {
    nlohmann::ordered_json j;
    j["order"] = g.order();
    auto& edges = j["edges"] = nlohmann::json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    return j.dump();
}

LabeledGraph graph_from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) {
        edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    }
    return LabeledGraph(j.at("order").get<int>(), std::move(edges));
}

}  // namespace qwnull
