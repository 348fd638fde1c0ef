#ifndef VGSOLVE_ENUMERATE_HPP
#define VGSOLVE_ENUMERATE_HPP

#include <functional>
#include <iosfwd>
#include <vector>

#include "vgsolve/graph.hpp"

namespace vg {

// All non-isomorphic connected graphs with n vertices and e edges, one
// representative per isomorphism class, via canonical augmentation: graphs
// grow one edge at a time and a child is kept only when the added edge lies
// in the same orbit as the child's canonical edge. Connectivity is filtered
// at the target edge count. 2 <= n <= 10.
std::vector<ViewingGraph> enumerate_connected(int n, int e);

// Streaming variant.
void enumerate_connected(int n, int e, const std::function<void(const ViewingGraph&)>& emit);

// Alternative ingestion: graph6 lines from an external generator, deduplicated
// by canonical form (first occurrence wins).
std::vector<ViewingGraph> ingest_graph6_stream(std::istream& in);

} // namespace vg

#endif
