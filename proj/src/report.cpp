#include "vgsolve/report.hpp"

#include <chrono>

#include "json.hpp"

namespace vg {

using nlohmann::json;

std::string overall_name(Overall o) {
    switch (o) {
    case Overall::NotSolvable: return "NotSolvable";
    case Overall::SolvableByMoves: return "SolvableByMoves";
    case Overall::FiniteSolvableUndecided: return "FiniteSolvableUndecided";
    case Overall::FailsFiniteSolvable: return "FailsFiniteSolvable";
    }
    return "?";
}

int exit_code_for(Overall o) {
    switch (o) {
    case Overall::SolvableByMoves: return 0;
    case Overall::FiniteSolvableUndecided: return 10;
    case Overall::FailsFiniteSolvable: return 20;
    case Overall::NotSolvable: return 30;
    }
    return 1;
}

SolvabilityReport analyze(const ViewingGraph& g, const AnalysisOptions& opts) {
    using clock = std::chrono::steady_clock;
    SolvabilityReport rep;
    rep.graph = g;

    auto t0 = clock::now();
    rep.necessary = check_all_necessary(g);
    auto t1 = clock::now();
    auto [state, trace] = closure(g);
    rep.closure_state = state;
    rep.trace = std::move(trace);
    rep.moves_solvable = state.complete();
    auto t2 = clock::now();
    if (is_connected(g)) rep.finite = finite_solvable(g, opts.trials, opts.bound, opts.seed);
    auto t3 = clock::now();

    rep.necessary_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    rep.moves_ms = std::chrono::duration<double, std::milli>(t2 - t1).count();
    rep.finite_ms = std::chrono::duration<double, std::milli>(t3 - t2).count();

    if (!rep.necessary.passed)
        rep.overall = Overall::NotSolvable;
    else if (rep.moves_solvable)
        rep.overall = Overall::SolvableByMoves;
    else if (rep.finite.finite_solvable)
        rep.overall = Overall::FiniteSolvableUndecided;
    else
        rep.overall = Overall::FailsFiniteSolvable;
    return rep;
}

namespace {

json witness_to_json(const Witness& w, int base) {
    return std::visit(
        [&](const auto& value) -> json {
            using T = std::decay_t<decltype(value)>;
            if constexpr (std::is_same_v<T, std::monostate>) {
                return nullptr;
            } else if constexpr (std::is_same_v<T, int>) {
                return json{{"vertex", value + base}};
            } else if constexpr (std::is_same_v<T, std::pair<int, int>>) {
                return json{{"edge", {value.first + base, value.second + base}}};
            } else if constexpr (std::is_same_v<T, std::vector<int>>) {
                json arr = json::array();
                for (int v : value) arr.push_back(v + base);
                return json{{"vertices", arr}};
            } else {
                json fam = json::array();
                for (const auto& member : value) {
                    json edges = json::array();
                    for (const auto& [a, b] : member)
                        edges.push_back({a + base, b + base});
                    fam.push_back(edges);
                }
                return json{{"subgraphs", fam}};
            }
        },
        w);
}

} // namespace

std::string report_to_json(const SolvabilityReport& report, int base) {
    json j;
    const ViewingGraph& g = report.graph;
    json edges = json::array();
    for (const auto& [a, b] : g.edges()) edges.push_back({a + base, b + base});
    j["graph"] = {{"n", g.n()}, {"graph6", to_graph6(g)}, {"edges", edges}};

    json nec;
    nec["passed"] = report.necessary.passed;
    if (report.necessary.violated_rule) {
        nec["violated_rule"] = rule_name(*report.necessary.violated_rule);
        nec["witness"] = witness_to_json(report.necessary.witness, base);
    }
    j["necessary"] = nec;

    json solid = json::array();
    for (const auto& [a, b] : report.closure_state.solid_edges()) solid.push_back({a + base, b + base});
    json dashed = json::array();
    for (const auto& [a, b] : report.closure_state.dashed_arrows()) dashed.push_back({a + base, b + base});
    j["moves"] = {{"solvable", report.moves_solvable},
                  {"trace_steps", report.trace.steps.size()},
                  {"closure_solid", solid},
                  {"closure_dashed", dashed}};

    j["finite"] = {{"finite_solvable", report.finite.finite_solvable},
                   {"kernel_dim", report.finite.kernel_dim},
                   {"expected_dim", 15 + g.edge_count()},
                   {"trials", report.finite.trials},
                   {"bound", report.finite.bound},
                   {"seed", report.finite.seed}};

    j["overall"] = overall_name(report.overall);
    j["timings_ms"] = {{"necessary", report.necessary_ms},
                       {"moves", report.moves_ms},
                       {"finite", report.finite_ms}};
    return j.dump(2) + "\n";
}

} // namespace vg
