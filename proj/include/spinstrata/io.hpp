#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spinstrata/classification.hpp"

namespace spinstrata {

struct AnalysisOptions {
    long long closure_cap = 1000000;
    std::string format = "text"; // "text" or "json"
};

// Which sections of the report to produce (driven by CLI flags).
struct AnalysisActions {
    bool enumerate_supports = false; // analyze every even subset, not just the listed ones
    bool classify = false;
    bool audit_degree = false;
    bool oracle = false; // brute-force cross-checks next to the criteria
};

struct AnalysisRequest {
    DualGraph graph;
    bool all_supports = false;                    // "supports": "all"
    std::vector<std::vector<int>> support_lists;  // explicit exceptional edge id lists
    SpinStructureLabel thetas;
    std::vector<LiftingGenerator> automorphisms;
    AnalysisOptions options;
};

struct SupportReport {
    std::vector<int> exceptional_ids;
    int sigma_vertices = 0;
    int sigma_edges = 0;
    bool sigma_tree_like = false;
    long long gluing_count = 0;
    int tail_nodes = 0;
    int disconnecting_nodes = 0;
    std::vector<std::pair<std::string, long long>> lifting_counts; // per automorphism
    std::optional<StratumClassification> classification;
    std::optional<bool> oracle_smooth;
    std::optional<bool> oracle_canonical;
    std::optional<bool> oracle_agrees;
    std::optional<std::string> error; // first failure while analyzing this support
    std::optional<ErrorCode> error_code;
};

struct AnalysisReport {
    int genus = 0;
    std::vector<SupportReport> supports;
    std::optional<Rational> audit_value;
    std::optional<bool> audit_pass;
};

// Parses the documented JSON request format.  Malformed JSON raises
// Syntax("line L, column C: ..."); dangling references raise UnknownId.
AnalysisRequest parse_request(const std::string& bytes);

// Canonical serialization; parse(serialize(r)) reproduces r.
std::string serialize_request(const AnalysisRequest& request);

// Runs the requested sections over every support.  Failures of a single
// support are recorded in its report entry instead of aborting the run.
// Independent supports are processed in parallel; the report order is the
// request order.
AnalysisReport run_analysis(const AnalysisRequest& request, const AnalysisActions& actions);

std::string report_to_json(const AnalysisReport& report);
std::string report_to_text(const AnalysisReport& report);

} // namespace spinstrata
