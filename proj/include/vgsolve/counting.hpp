#ifndef VGSOLVE_COUNTING_HPP
#define VGSOLVE_COUNTING_HPP

#include <utility>

#include "vgsolve/graph.hpp"

namespace vg {

// Minimal edge count of a solvable viewing graph: ceil((11n - 15) / 7).
int e_min(int n);

// Constraint count d(n, e) = 7e - 11n + 15 (may be negative).
int deficiency(int n, int e);

// Disjoint union of g1 and g2 with pair2 identified onto pair1
// (pair2.first -> pair1.first, pair2.second -> pair1.second).
// Duplicate edges merge, so gluing along two edges gives
// n1 + n2 - 2 vertices and e1 + e2 - 1 edges.
ViewingGraph glue(const ViewingGraph& g1, const ViewingGraph& g2,
                  std::pair<int, int> pair1, std::pair<int, int> pair2);

// A graph with n vertices and e_min(n) edges whose moves closure is complete.
// n in [2, 9] comes from a fixed catalog (single edge, triangle, and the
// canonically smallest moves-solvable census graph for 4..9); larger n glues
// copies of the 9-vertex base along their smallest edges.
ViewingGraph minimal_solvable(int n);

} // namespace vg

#endif
