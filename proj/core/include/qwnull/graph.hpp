#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qwnull/int_matrix.hpp"

namespace qwnull {

// Largest order accepted by single-graph operations (enumeration, Laplacians,
// walks). The all-pairs classification applies its own, tighter limit.
inline constexpr int kDefaultEnumerationLimit = 6;

// Labeled simple undirected graph on vertices 0..order-1. Labels are
// significant: relabelings of isomorphic graphs are distinct values.
// Construction validates edges and requires connectivity.
class LabeledGraph {
public:
    LabeledGraph(int order, std::vector<std::pair<int, int>> edges);

    // Decodes an edge bitmask. Bit b corresponds to the b-th edge of the
    // complete graph in the order (0,1),(0,2),(1,2),(0,3),(1,3),(2,3),...
    static LabeledGraph from_edge_mask(int order, std::uint64_t mask);

    int order() const { return order_; }
    // Edges as (u,v) with u < v, sorted lexicographically.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    std::uint64_t edge_mask() const;
    std::vector<int> degrees() const;

    bool operator==(const LabeledGraph& o) const {
        return order_ == o.order_ && edges_ == o.edges_;
    }

private:
    int order_;
    std::vector<std::pair<int, int>> edges_;
};

// Bit position of edge (u,v), u < v, in the canonical edge order above.
int edge_bit(int u, int v);

// Edges of K_n in canonical bit order.
std::vector<std::pair<int, int>> complete_edge_list(int order);

bool is_connected(int order, const std::vector<std::pair<int, int>>& edges);

// All labeled connected graphs of the given order, in increasing edge-bitmask
// order. Throws std::out_of_range when order is outside [1, limit].
std::vector<LabeledGraph> enumerate_labeled_connected(int order,
                                                      int limit = kDefaultEnumerationLimit);

IntMatrix adjacency_matrix(const LabeledGraph& g);
IntMatrix degree_matrix(const LabeledGraph& g);
// L = D - A. Symmetric, zero row sums, diagonal = vertex degrees.
IntMatrix laplacian(const LabeledGraph& g);

LabeledGraph complete_graph(int order);

// True iff g is a simple path: n-1 edges, connected, and (for n >= 3) exactly
// two endpoints of degree 1 with all other degrees 2.
bool is_path_graph(const LabeledGraph& g);

// Vertex labels along a path, starting from the smaller endpoint.
// Requires is_path_graph(g).
std::vector<int> path_vertex_sequence(const LabeledGraph& g);

// {"order": n, "edges": [[u,v],...]} with edges sorted.
std::string to_json_string(const LabeledGraph& g);
LabeledGraph graph_from_json(const std::string& text);

}  // namespace qwnull
