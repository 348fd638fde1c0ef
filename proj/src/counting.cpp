#include "vgsolve/counting.hpp"

#include <stdexcept>

namespace vg {

int e_min(int n) {
    if (n < 2) throw std::domain_error("e_min requires n >= 2");
    return (11 * n - 15 + 6) / 7;
}

int deficiency(int n, int e) {
    if (n < 2 || e < 0) throw std::domain_error("deficiency requires n >= 2, e >= 0");
    return 7 * e - 11 * n + 15;
}

ViewingGraph glue(const ViewingGraph& g1, const ViewingGraph& g2,
                  std::pair<int, int> pair1, std::pair<int, int> pair2) {
    auto check = [](const ViewingGraph& g, std::pair<int, int> p, const char* which) {
        if (p.first == p.second)
            throw std::invalid_argument(std::string("glue: identical vertices in ") + which);
        if (p.first < 0 || p.first >= g.n() || p.second < 0 || p.second >= g.n())
            throw std::invalid_argument(std::string("glue: vertex out of range in ") + which);
    };
    check(g1, pair1, "pair1");
    check(g2, pair2, "pair2");

    // Map g2's vertices: the identified pair onto pair1, the rest appended.
    std::vector<int> map2(g2.n(), -1);
    map2[pair2.first] = pair1.first;
    map2[pair2.second] = pair1.second;
    int next = g1.n();
    for (int v = 0; v < g2.n(); v++)
        if (map2[v] < 0) map2[v] = next++;

    std::vector<std::pair<int, int>> edges = g1.edges();
    for (const auto& [a, b] : g2.edges()) edges.emplace_back(map2[a], map2[b]);
    return ViewingGraph(g1.n() + g2.n() - 2, std::move(edges));
}

namespace {

// Moves-solvable minimal graphs with 2..9 vertices. The 4..9 entries are the
// canonically smallest moves-solvable (n, e_min(n)) census graphs; regenerated
// and asserted by the enumeration tests.
const std::vector<std::vector<std::pair<int, int>>>& base_catalog() {
    static const std::vector<std::vector<std::pair<int, int>>> catalog = {
        /* n=2 */ {{0, 1}},
        /* n=3 */ {{0, 1}, {0, 2}, {1, 2}},
        /* n=4 */ {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}},
        /* n=5 */ {{0, 3}, {0, 4}, {1, 3}, {1, 4}, {2, 3}, {2, 4}},
        /* n=6 */ {{0, 4}, {0, 5}, {1, 4}, {1, 5}, {2, 4}, {2, 5}, {3, 4}, {3, 5}},
        /* n=7 */ {{0, 4}, {0, 6}, {1, 4}, {1, 6}, {2, 5}, {2, 6}, {3, 5}, {3, 6}, {4, 5}},
        /* n=8 */ {{0, 5}, {0, 7}, {1, 5}, {1, 7}, {2, 6}, {2, 7}, {3, 6}, {3, 7}, {4, 6}, {4, 7}, {5, 6}},
        /* n=9 */ {{0, 6}, {0, 7}, {1, 6}, {1, 7}, {2, 6}, {2, 8}, {3, 6}, {3, 8}, {4, 7}, {4, 8}, {5, 7}, {5, 8}},
    };
    return catalog;
}

std::pair<int, int> smallest_edge(const ViewingGraph& g) {
    if (g.edges().empty()) throw std::logic_error("graph has no edges");
    return g.edges().front();
}

} // namespace

ViewingGraph minimal_solvable(int n) {
    if (n < 2) throw std::domain_error("minimal_solvable requires n >= 2");
    if (n <= 9) return ViewingGraph(n, base_catalog()[n - 2]);
    // n = 7q + r with 2 <= r <= 8; glue q copies of the 9-vertex base onto the
    // r-vertex base, always along the lexicographically smallest edges.
    int r = n % 7;
    if (r < 2) r += 7;
    int q = (n - r) / 7;
    ViewingGraph g(r, base_catalog()[r - 2]);
    ViewingGraph base9(9, base_catalog()[7]);
    for (int i = 0; i < q; i++) g = glue(g, base9, smallest_edge(g), smallest_edge(base9));
    return g;
}

} // namespace vg
