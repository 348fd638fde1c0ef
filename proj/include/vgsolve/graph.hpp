#ifndef VGSOLVE_GRAPH_HPP
#define VGSOLVE_GRAPH_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace vg {

// Simple undirected graph on n labeled vertices 0..n-1.
// Immutable after construction; edges are kept as sorted unique pairs (a < b)
// so iteration order, serialization, and everything downstream is reproducible.
class ViewingGraph {
public:
    ViewingGraph() = default;
    ViewingGraph(int n, std::vector<std::pair<int, int>> edges);

    int n() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    bool has_edge(int u, int v) const;
    int degree(int v) const;

    // Per-vertex adjacency bitmasks; requires n <= 32.
    std::vector<uint32_t> adjacency_masks() const;
    std::vector<std::vector<int>> adjacency_lists() const;

    bool operator==(const ViewingGraph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
};

enum class GraphFormat { EdgeList, Graph6, Auto };

struct ParseError : std::runtime_error {
    int line, column;
    ParseError(const std::string& msg, int line_, int col_)
        : std::runtime_error(msg + " (line " + std::to_string(line_) + ", column " +
                             std::to_string(col_) + ")"),
          line(line_), column(col_) {}
};

// Edge-list grammar: `n=K; a-b, c-d, ...` with 0-based vertices; `,` and
// newlines both separate edges, whitespace is free. Graph6 per the standard
// ASCII encoding (n < 63). Auto: text starting with "n=" is an edge list.
// label_base 1 accepts 1..n labels (edge lists only).
ViewingGraph parse_graph(const std::string& text, GraphFormat format = GraphFormat::Auto,
                         int label_base = 0);

std::string to_edge_list(const ViewingGraph& g);
std::string to_graph6(const ViewingGraph& g);
ViewingGraph from_graph6(const std::string& s);

bool is_connected(const ViewingGraph& g);
// Articulation-point search; for n <= 2 falls back to connectivity.
bool is_biconnected(const ViewingGraph& g);
int degree(const ViewingGraph& g, int v);

// Number of connected components.
int component_count(const ViewingGraph& g);
// Vertices of the component containing v.
std::vector<int> component_of(const ViewingGraph& g, int v);

} // namespace vg

#endif
