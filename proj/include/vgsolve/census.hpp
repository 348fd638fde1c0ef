#ifndef VGSOLVE_CENSUS_HPP
#define VGSOLVE_CENSUS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vgsolve/graph.hpp"
#include "vgsolve/necessary.hpp"

namespace vg {

struct GraphRecord {
    std::string graph6;
    bool candidate = false;
    std::optional<Rule> violated_rule;
    bool moves_solvable = false;
    bool finite_solvable = false;
    int kernel_dim = 0;
};

struct CensusRow {
    int n = 0, e = 0;
    int connected = 0, candidates = 0, moves_solvable = 0, finite_solvable = 0;
    // Sorted by graph6 key, so reports are byte-identical across worker counts.
    std::vector<GraphRecord> records;
    // Candidates that are finite solvable but not moves-solvable.
    std::vector<std::string> undecided;
};

struct CensusOptions {
    int trials = 3;
    long bound = 1000;
    uint64_t seed = 42;
    int jobs = 1;
    std::string records_path; // line-delimited JSON, one record per graph
    bool resume = false;
};

// Pipes every connected (n, e_min(n)) graph through the necessary conditions,
// the moves closure, and the finite-solvability test. 3 <= n <= 9.
CensusRow run_census(int n, const CensusOptions& opts = {});

// Evaluate the three verdicts for a single graph.
GraphRecord evaluate_graph(const ViewingGraph& g, int trials, long bound, uint64_t seed);

std::string census_report_json(const std::vector<CensusRow>& rows);
// Aligned text table, one column per (n, e).
std::string census_table(const std::vector<CensusRow>& rows);

GraphRecord record_from_json_line(const std::string& line);
std::string record_to_json_line(const GraphRecord& rec);

} // namespace vg

#endif
