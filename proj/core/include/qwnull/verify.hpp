#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qwnull/lattice.hpp"

namespace qwnull {

struct VerifyOptions {
    std::uint64_t seed = 7;
    int samples = 20;       // (t, t') draws per checked vector
    int gap_vectors = 20;   // sampled vectors outside each zone with a gap
    double accept_tol = 1e-9;
    double reject_tol = 1e-6;
};

struct VerificationReport {
    int order = 0;
    int graph_count = 0;
    int pair_count = 0;
    int zone_count = 0;
    int relation_checks = 0;
    int null_vectors_checked = 0;
    int gap_zones = 0;
    int gap_vectors_checked = 0;
    std::vector<std::string> violations;

    bool passed() const { return violations.empty(); }
};

// Exact subset relations over a finished classification: every pair null
// space sits inside both diagonal null spaces and inside the complete
// graph's, and pairing with the complete graph reproduces the diagonal.
// Returns human-readable violation strings; empty means all relations hold.
std::vector<std::string> check_subset_relations(const LatticeReport& report);

// Cross-checks a classification three ways: the exact subset relations
// between pair and diagonal null spaces, a residual sweep confirming every
// zone basis vector is annihilated by the sampled walk operators, and a
// rejection sweep confirming vectors in the diagonal intersection but outside
// the zone produce large residuals for some sampled times.
VerificationReport run_verification(const LatticeReport& report,
                                    const VerifyOptions& options = {});

// Compares an externally supplied classification (JSON produced by the json
// export, possibly tampered with) against a freshly computed report.
// Mismatches come back as violation strings.
std::vector<std::string> compare_report_with_json(const LatticeReport& report,
                                                  const std::string& json_text);

}  // namespace qwnull
