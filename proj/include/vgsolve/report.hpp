#ifndef VGSOLVE_REPORT_HPP
#define VGSOLVE_REPORT_HPP

#include <cstdint>
#include <string>

#include "vgsolve/graph.hpp"
#include "vgsolve/moves.hpp"
#include "vgsolve/necessary.hpp"
#include "vgsolve/tangent.hpp"

namespace vg {

// Exactly one of these holds for every analyzed graph.
enum class Overall {
    NotSolvable,              // a necessary condition failed
    SolvableByMoves,          // the moves closure is complete
    FiniteSolvableUndecided,  // candidate, finite solvable, but moves stall
    FailsFiniteSolvable,      // candidate, but kernel dimension exceeds 15 + e
};

std::string overall_name(Overall o);

struct AnalysisOptions {
    int trials = 3;
    long bound = 1000;
    uint64_t seed = 42;
};

struct SolvabilityReport {
    ViewingGraph graph;
    NecessaryVerdict necessary;
    bool moves_solvable = false;
    MoveTrace trace;
    MixedGraph closure_state;
    FiniteSolvability finite;
    Overall overall = Overall::NotSolvable;
    double necessary_ms = 0, moves_ms = 0, finite_ms = 0;
};

SolvabilityReport analyze(const ViewingGraph& g, const AnalysisOptions& opts = {});

// JSON with 1-based vertex labels by default (report convention); timings are
// included for single-graph reports only.
std::string report_to_json(const SolvabilityReport& report, int label_base = 1);

int exit_code_for(Overall o);

} // namespace vg

#endif
