#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <stdexcept>

#include "order3_fixtures.hpp"
#include "qwnull/distinguishability.hpp"
#include "qwnull/graph.hpp"
#include "qwnull/oracle.hpp"

using namespace qwnull;

namespace {

Subspace diag_for_mask(std::uint64_t mask) {
    return diag_null(laplacian(LabeledGraph::from_edge_mask(3, mask)));
}

std::vector<Rational> vec_of(const IntMatrix& m) {
    std::vector<Rational> v;
    v.reserve(static_cast<std::size_t>(m.rows()) * m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) v.emplace_back(m.at(i, j));
    return v;
}

// Sum of squared eigenvalue multiplicities, clustered numerically.
int multiplicity_square_sum(const IntMatrix& l) {
    const UnitaryCache cache(l);
    const auto& ev = cache.eigenvalues();
    int sum = 0;
    std::size_t k = 0;
    while (k < ev.size()) {
        std::size_t m = 1;
        while (k + m < ev.size() && std::abs(ev[k + m] - ev[k]) < 1e-6) ++m;
        sum += static_cast<int>(m * m);
        k += m;
    }
    return sum;
}

}  // namespace

TEST_SUITE("distinguishability") {

TEST_CASE("order-3 diagonal null spaces match the frozen bases") {
    CHECK(diag_for_mask(fixtures::kTriangleMask) == fixtures::span(fixtures::kTriangleBasis));
    CHECK(diag_for_mask(fixtures::kPathCenter0Mask) ==
          fixtures::span(fixtures::kPathCenter0Basis));
    CHECK(diag_for_mask(fixtures::kPathCenter1Mask) ==
          fixtures::span(fixtures::kPathCenter1Basis));
    CHECK(diag_for_mask(fixtures::kPathCenter2Mask) ==
          fixtures::span(fixtures::kPathCenter2Basis));
}

TEST_CASE("diagonal dimensions: K4 commutant has dimension 10, 1x1 is full") {
    CHECK(diag_null(laplacian(complete_graph(4))).dim() == 10);
    CHECK(diag_null(IntMatrix(1, 1)) == Subspace::full(1));
}

TEST_CASE("non-symmetric input is rejected") {
    IntMatrix m(2, 2);
    m.at(0, 1) = 1;
    CHECK_THROWS_AS(diag_null(m), std::domain_error);
    CHECK_THROWS_AS(pair_null(m, IntMatrix::identity(2)), std::domain_error);
}

TEST_CASE("size mismatch is a usage error") {
    CHECK_THROWS_AS(pair_null(IntMatrix::identity(2), IntMatrix::identity(3)),
                    std::invalid_argument);
}

TEST_CASE("pair null spaces for the order-3 paths collapse to the uniform line") {
    const auto uniform = fixtures::span(fixtures::kUniformBasis);
    const std::uint64_t paths[] = {fixtures::kPathCenter0Mask, fixtures::kPathCenter1Mask,
                                   fixtures::kPathCenter2Mask};
    for (int a = 0; a < 3; ++a) {
        for (int b = a + 1; b < 3; ++b) {
            const auto li = laplacian(LabeledGraph::from_edge_mask(3, paths[a]));
            const auto lj = laplacian(LabeledGraph::from_edge_mask(3, paths[b]));
            CHECK(pair_null(li, lj).space == uniform);
        }
    }
}

TEST_CASE("pairing a graph with itself reproduces the diagonal null space") {
    for (const auto& g : enumerate_labeled_connected(3)) {
        const auto l = laplacian(g);
        CHECK(pair_null(l, l).space == diag_null(l));
    }
}

TEST_CASE("pairing with the complete graph reproduces the diagonal null space") {
    const auto lk = laplacian(complete_graph(3));
    const auto l2 = laplacian(LabeledGraph::from_edge_mask(3, fixtures::kPathCenter0Mask));
    const auto result = pair_null(l2, lk);
    CHECK(result.space == diag_null(l2));
    CHECK(result.space.dim() == 3);
}

TEST_CASE("seeded and full-stack strategies agree") {
    const auto g3 = enumerate_labeled_connected(3);
    for (std::size_t i = 0; i < g3.size(); ++i) {
        for (std::size_t j = i; j < g3.size(); ++j) {
            const auto li = laplacian(g3[i]);
            const auto lj = laplacian(g3[j]);
            CHECK(pair_null(li, lj, PairNullStrategy::kSeeded).space ==
                  pair_null(li, lj, PairNullStrategy::kFullStack).space);
        }
    }
    const auto g4 = enumerate_labeled_connected(4);
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 12; ++trial) {
        const auto& gi = g4[rng() % g4.size()];
        const auto& gj = g4[rng() % g4.size()];
        const auto li = laplacian(gi);
        const auto lj = laplacian(gj);
        CHECK(pair_null(li, lj, PairNullStrategy::kSeeded).space ==
              pair_null(li, lj, PairNullStrategy::kFullStack).space);
    }
}

TEST_CASE("full power-pair stack adds nothing on the diagonal") {
    for (const auto& g : enumerate_labeled_connected(3)) {
        const auto l = laplacian(g);
        CHECK(pair_null(l, l, PairNullStrategy::kFullStack).space == diag_null(l));
    }
}

TEST_CASE("diagonal null contains the uniform vector, vec(I), vec(L) and vec(L^2)") {
    for (const auto& g : enumerate_labeled_connected(4)) {
        const auto l = laplacian(g);
        const auto space = diag_null(l);
        const int n = l.rows();
        CHECK(space.contains_vector(std::vector<Rational>(n * n, 1)));
        CHECK(space.contains_vector(vec_of(IntMatrix::identity(n))));
        CHECK(space.contains_vector(vec_of(l)));
        CHECK(space.contains_vector(vec_of(multiply(l, l))));
    }
}

TEST_CASE("diagonal dimension equals the sum of squared eigenvalue multiplicities") {
    for (int order : {3, 4}) {
        for (const auto& g : enumerate_labeled_connected(order)) {
            const auto l = laplacian(g);
            CHECK(diag_null(l).dim() == multiplicity_square_sum(l));
        }
    }
}

TEST_CASE("swapping the pair swaps the subsystems") {
    const auto g4 = enumerate_labeled_connected(4);
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 8; ++trial) {
        const auto li = laplacian(g4[rng() % g4.size()]);
        const auto lj = laplacian(g4[rng() % g4.size()]);
        const int n = li.rows();
        const auto forward = pair_null(li, lj).space;
        const auto backward = pair_null(lj, li).space;
        CHECK(forward.dim() == backward.dim());
        std::vector<std::vector<Rational>> swapped;
        for (const auto& row : forward.basis()) {
            std::vector<Rational> v(n * n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) v[j * n + i] = row[i * n + j];
            swapped.push_back(std::move(v));
        }
        CHECK(Subspace::span_of(n * n, swapped) == backward);
    }
}

TEST_CASE("constraint rank diagnostics are recorded") {
    const auto l = laplacian(complete_graph(3));
    const auto seeded = pair_null(l, l, PairNullStrategy::kSeeded);
    REQUIRE(seeded.constraint_ranks.size() == 6);  // (1,0),(0,1) + 2x2 mixed
    CHECK(seeded.constraint_ranks[0].left_power == 1);
    CHECK(seeded.constraint_ranks[0].rank == 4);  // 9 - dim 5
    const auto full = pair_null(l, l, PairNullStrategy::kFullStack);
    CHECK(full.constraint_ranks.size() == 8);  // all (p,q) != (0,0)
}

TEST_CASE("subset relations hold for all order-3 pairs") {
    const auto graphs = enumerate_labeled_connected(3);
    std::map<int, Subspace> diag;
    std::vector<PairNullResult> results;
    for (std::size_t i = 0; i < graphs.size(); ++i)
        diag.emplace(static_cast<int>(i), diag_null(laplacian(graphs[i])));
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        for (std::size_t j = i; j < graphs.size(); ++j) {
            auto r = pair_null(laplacian(graphs[i]), laplacian(graphs[j]));
            r.graph_i = static_cast<int>(i);
            r.graph_j = static_cast<int>(j);
            results.push_back(std::move(r));
        }
    }
    CHECK(verify_subset_relations(results, diag, 3).empty());  // K3 is index 3

    SUBCASE("a corrupted result is reported") {
        results[1].space = Subspace::full(9);
        const auto violations = verify_subset_relations(results, diag, 3);
        CHECK_FALSE(violations.empty());
    }
}

TEST_CASE("subset relations on a complete-graph-only input are trivially empty") {
    const auto l = laplacian(complete_graph(3));
    std::map<int, Subspace> diag;
    diag.emplace(0, diag_null(l));
    auto r = pair_null(l, l);
    r.graph_i = 0;
    r.graph_j = 0;
    CHECK(verify_subset_relations({r}, diag, 0).empty());
}

}  // TEST_SUITE
