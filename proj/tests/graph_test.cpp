#include <doctest.h>

#include <cstdint>
#include <set>
#include <stdexcept>

#include "qwnull/graph.hpp"

using namespace qwnull;

namespace {

// Independent oracle: count of connected labeled graphs on n vertices via
// the standard subtraction over the component containing vertex 0:
//   C_n = 2^C(n,2) - sum_{k=1}^{n-1} C(n-1, k-1) * C_k * 2^C(n-k, 2).
std::uint64_t connected_count_oracle(int n) {
    auto choose = [](int a, int b) {
        std::uint64_t r = 1;
        for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
        return r;
    };
    std::vector<std::uint64_t> c(n + 1, 0);
    c[1] = 1;
    for (int m = 2; m <= n; ++m) {
        std::uint64_t total = std::uint64_t{1} << (m * (m - 1) / 2);
        for (int k = 1; k < m; ++k) {
            total -= choose(m - 1, k - 1) * c[k] *
                     (std::uint64_t{1} << ((m - k) * (m - k - 1) / 2));
        }
        c[m] = total;
    }
    return c[n];
}

}  // namespace

TEST_SUITE("graph_enum") {

TEST_CASE("enumeration counts match the known sequence and the oracle") {
    CHECK(enumerate_labeled_connected(1).size() == 1);
    CHECK(enumerate_labeled_connected(2).size() == 1);
    CHECK(enumerate_labeled_connected(3).size() == 4);
    CHECK(enumerate_labeled_connected(4).size() == 38);
    CHECK(enumerate_labeled_connected(5).size() == 728);
    for (int n = 1; n <= 6; ++n) {
        CAPTURE(n);
        CHECK(enumerate_labeled_connected(n).size() == connected_count_oracle(n));
    }
}

TEST_CASE("enumeration is ordered by edge bitmask and emits connected graphs") {
    const auto graphs = enumerate_labeled_connected(4);
    std::uint64_t last = 0;
    bool first = true;
    for (const auto& g : graphs) {
        CHECK(is_connected(g.order(), g.edges()));
        if (!first) CHECK(g.edge_mask() > last);
        last = g.edge_mask();
        first = false;
    }
}

TEST_CASE("order bounds raise errors naming the limit") {
    CHECK_THROWS_AS(enumerate_labeled_connected(0), std::out_of_range);
    CHECK_THROWS_AS(enumerate_labeled_connected(7), std::out_of_range);
    CHECK_THROWS_WITH_AS(enumerate_labeled_connected(9, 4),
                         doctest::Contains("[1, 4]"), std::out_of_range);
}

TEST_CASE("edge bits follow the canonical order") {
    CHECK(edge_bit(0, 1) == 0);
    CHECK(edge_bit(0, 2) == 1);
    CHECK(edge_bit(1, 2) == 2);
    CHECK(edge_bit(0, 3) == 3);
    CHECK(edge_bit(2, 3) == 5);
    const auto edges = complete_edge_list(4);
    REQUIRE(edges.size() == 6);
    CHECK(edges[3] == std::pair<int, int>{0, 3});
}

TEST_CASE("laplacian is D - A") {
    const auto k3 = complete_graph(3);
    const auto l = laplacian(k3);
    CHECK(l.at(0, 0) == 2);
    CHECK(l.at(1, 1) == 2);
    CHECK(l.at(2, 2) == 2);
    CHECK(l.at(0, 1) == -1);
    CHECK(l.at(1, 2) == -1);
    CHECK(l.is_symmetric());

    const LabeledGraph star0(3, {{0, 1}, {0, 2}});
    const auto ls = laplacian(star0);
    CHECK(ls.at(0, 0) == 2);
    CHECK(ls.at(1, 1) == 1);
    CHECK(ls.at(2, 2) == 1);
    CHECK(ls.at(1, 2) == 0);
    CHECK(ls.at(0, 1) == -1);

    const LabeledGraph single(1, {});
    CHECK(laplacian(single).at(0, 0) == 0);
}

TEST_CASE("laplacian rows sum to zero and the diagonal holds degrees") {
    for (const auto& g : enumerate_labeled_connected(4)) {
        const auto l = laplacian(g);
        const auto deg = g.degrees();
        for (int i = 0; i < 4; ++i) {
            std::int64_t row = 0;
            for (int j = 0; j < 4; ++j) row += l.at(i, j);
            CHECK(row == 0);
            CHECK(l.at(i, i) == deg[i]);
        }
    }
}

TEST_CASE("complete graphs") {
    CHECK(complete_graph(3).edges().size() == 3);
    CHECK(complete_graph(4).edges().size() == 6);
    CHECK(complete_graph(2).edges().size() == 1);
    CHECK(complete_graph(3).edge_mask() == 0b111);
}

TEST_CASE("path detection") {
    CHECK(is_path_graph(LabeledGraph(4, {{0, 1}, {1, 2}, {2, 3}})));
    CHECK_FALSE(is_path_graph(complete_graph(4)));
    CHECK_FALSE(is_path_graph(LabeledGraph(4, {{0, 1}, {0, 2}, {0, 3}})));
    CHECK(is_path_graph(LabeledGraph(1, {})));
    CHECK(is_path_graph(complete_graph(2)));

    int paths = 0;
    for (const auto& g : enumerate_labeled_connected(4)) {
        if (is_path_graph(g)) ++paths;
    }
    CHECK(paths == 12);  // 4!/2 labeled paths

    const auto seq = path_vertex_sequence(LabeledGraph(4, {{0, 2}, {1, 2}, {1, 3}}));
    CHECK(seq == std::vector<int>{0, 2, 1, 3});
}

TEST_CASE("construction rejects malformed graphs") {
    CHECK_THROWS_AS(LabeledGraph(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(LabeledGraph(3, {{0, 1}, {1, 0}, {0, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(LabeledGraph(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(LabeledGraph(3, {{0, 1}}), std::domain_error);  // disconnected
    CHECK_THROWS_AS(LabeledGraph::from_edge_mask(3, 0b1000), std::invalid_argument);
    CHECK_THROWS_AS(LabeledGraph::from_edge_mask(4, 0b1), std::domain_error);
}

TEST_CASE("edge mask round-trips through construction") {
    for (const auto& g : enumerate_labeled_connected(4)) {
        const auto rebuilt = LabeledGraph::from_edge_mask(4, g.edge_mask());
        CHECK(rebuilt == g);
    }
}

TEST_CASE("json serialization round-trips") {
    for (const auto& g : enumerate_labeled_connected(3)) {
        CHECK(graph_from_json(to_json_string(g)) == g);
    }
    const auto text = to_json_string(complete_graph(2));
    CHECK(text == R"({"order":2,"edges":[[0,1]]})");
}

}  // TEST_SUITE
