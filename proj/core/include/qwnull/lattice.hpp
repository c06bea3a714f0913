#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "qwnull/distinguishability.hpp"
#include "qwnull/graph.hpp"
#include "qwnull/subspace.hpp"

namespace qwnull {

// All-pairs classification grows as C(#graphs, 2); order 5 already means
// 264,628 exact pair computations, the practical ceiling at desk scale.
inline constexpr int kDefaultClassifyLimit = 5;

// One distinct null space. Degeneracy counts unordered pairs (i,j), i <= j,
// whose pair null space equals this zone's subspace; cardinality is the
// subspace dimension.
struct ZoneRecord {
    int zone_id = 0;      // 1-based, in report order
    int subspace_id = 0;  // index into LatticeReport::subspaces (== zone_id)
    int cardinality = 0;
    int degeneracy = 0;
};

struct PairRecord {
    int graph_i = 0;
    int graph_j = 0;
    int dim = 0;
    int subspace_id = 0;
};

// Pairwise intersection of incomparable zones; "new" flags a subspace that
// is not itself a zone (an empty region in Euler-diagram terms).
struct IntersectionEntry {
    std::array<int, 2> zone_ids{};
    bool is_new = false;
    int subspace_id = 0;  // valid when !is_new
    int dim = 0;
};

struct LatticeReport {
    int order = 0;
    std::vector<LabeledGraph> graphs;
    // Zones sorted by cardinality desc, degeneracy desc, canonical basis lex.
    std::vector<ZoneRecord> zones;
    // subspaces[k] is the subspace of zone_id k+1.
    std::vector<Subspace> subspaces;
    // One record per unordered pair (i <= j), sorted by (i, j).
    std::vector<PairRecord> pairs;
    // Covering relations (contained zone_id, containing zone_id) of the
    // inclusion partial order. The complete graph's diagonal zone is the
    // unique maximum.
    std::vector<std::pair<int, int>> hasse_edges;
    std::vector<IntersectionEntry> intersection_closure;

    int pair_count() const { return static_cast<int>(pairs.size()); }
    int zone_count() const { return static_cast<int>(zones.size()); }
};

struct ClassifyOptions {
    int limit = kDefaultClassifyLimit;
    int threads = 0;  // 0 = hardware concurrency
};

// Full pipeline: enumerate -> diag_null for every graph -> pair_null for
// every unordered pair -> canonical dedup -> zone table, inclusion Hasse
// diagram and pairwise intersection closure.
LatticeReport classify(int order, const ClassifyOptions& options = {});

// Rows (zone_id, degeneracy, cardinality) in report order.
std::vector<std::array<int, 3>> degeneracy_table(const LatticeReport& report);

// Groups graph indices by identical diagonal null space, keyed by
// subspace_id. Groups of size > 1 mark degenerate diagonal zones.
std::map<int, std::vector<int>> diagonal_degeneracy(const LatticeReport& report);
std::map<int, std::vector<int>> diagonal_degeneracy(int order,
                                                    const ClassifyOptions& options = {});

enum class ExportFormat { kJson, kCsv, kDot };
ExportFormat parse_export_format(const std::string& name);

// json: the full report; csv: the degeneracy table (zone,degeneracy,
// cardinality); dot: the Hasse diagram with edges from contained to
// containing zone and node labels "zone_id (dim)".
std::string export_report(const LatticeReport& report, ExportFormat format);

}  // namespace qwnull
