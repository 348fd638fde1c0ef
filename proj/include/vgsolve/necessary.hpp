#ifndef VGSOLVE_NECESSARY_HPP
#define VGSOLVE_NECESSARY_HPP

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "vgsolve/graph.hpp"

namespace vg {

enum class Rule {
    MinDegree,
    AdjacentDegree2,
    NotBiconnected,
    TooFewEdges,
    SubgraphDeficiency,
    DisjointFamilyDeficiency,
};

std::string rule_name(Rule r);

using EdgeList = std::vector<std::pair<int, int>>;

// Witness exhibiting a violation: a vertex, a vertex pair, a vertex subset,
// or a family of edge-disjoint subgraphs (as edge lists).
using Witness = std::variant<std::monostate, int, std::pair<int, int>, std::vector<int>,
                             std::vector<EdgeList>>;

struct NecessaryVerdict {
    bool passed = true;
    std::optional<Rule> violated_rule;
    Witness witness;
};

// Degree rules: for n > 3, every vertex needs degree >= 2 and no two adjacent
// vertices may both have degree 2. For n <= 3 only completeness is required.
NecessaryVerdict check_degree_rules(const ViewingGraph& g);

// Single-subgraph deficiency test: every vertex subset S (|S| >= 2, induced
// edges) must satisfy d(|S|, e(S)) <= d(n, e). Exhaustive; refuses n > 16.
NecessaryVerdict check_subgraph_deficiency(const ViewingGraph& g);

// Edge-disjoint family test: no family of up to k_max edge-disjoint connected
// subgraphs, each with deficiency >= 1, may have deficiency sum > d(n, e).
// Members with d <= 0 can never help the sum and disconnected members split
// into components without lowering it, so the restricted search is exhaustive
// (cross-checked against an unrestricted search in tests).
NecessaryVerdict check_disjoint_family(const ViewingGraph& g, int k_max);

// Connectivity, biconnectivity, degree rules, edge count, then the two
// deficiency tests; first failure wins. Graphs passing everything are the
// census "candidates". Default k_max for the family test is e/3 (the smallest
// useful member is a triangle).
NecessaryVerdict check_all_necessary(const ViewingGraph& g);

} // namespace vg

#endif
