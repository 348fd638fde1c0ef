#ifndef VGSOLVE_TEST_FIXTURES_HPP
#define VGSOLVE_TEST_FIXTURES_HPP

#include "vgsolve/graph.hpp"

namespace fixtures {

inline vg::ViewingGraph triangle() { return vg::ViewingGraph(3, {{0, 1}, {1, 2}, {0, 2}}); }

inline vg::ViewingGraph path(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; i++) edges.emplace_back(i, i + 1);
    return vg::ViewingGraph(n, std::move(edges));
}

inline vg::ViewingGraph cycle(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; i++) edges.emplace_back(i, (i + 1) % n);
    return vg::ViewingGraph(n, std::move(edges));
}

inline vg::ViewingGraph complete(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; i++)
        for (int j = i + 1; j < n; j++) edges.emplace_back(i, j);
    return vg::ViewingGraph(n, std::move(edges));
}

// Two triangles sharing one vertex.
inline vg::ViewingGraph bowtie() {
    return vg::ViewingGraph(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
}

// 3x3 grid, row by row: vertices 0..8 (reports label them 1..9).
inline vg::ViewingGraph grid3x3() {
    return vg::ViewingGraph(
        9, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {6, 7}, {7, 8}, {0, 3}, {3, 6}, {1, 4}, {4, 7}, {2, 5}, {5, 8}});
}

// An 8-vertex, 11-edge graph whose closure derives four double arrows
// but stalls before completing.
inline vg::ViewingGraph eight_vertex_stalled() {
    return vg::ViewingGraph(8, {{0, 1},
                                {1, 2},
                                {2, 3},
                                {3, 0},
                                {3, 4},
                                {4, 5},
                                {5, 2},
                                {4, 6},
                                {6, 5},
                                {6, 7},
                                {7, 0}});
}

// Four triangles in a ring, consecutive ones sharing a hinge vertex:
// hinges 0..3, private vertices 4..7. n=8, e=12.
inline vg::ViewingGraph four_triangle_ring() {
    return vg::ViewingGraph(8, {{0, 4}, {1, 4}, {0, 1}, {1, 5}, {2, 5}, {1, 2},
                                {2, 6}, {3, 6}, {2, 3}, {3, 7}, {0, 7}, {0, 3}});
}

} // namespace fixtures

#endif
