#include "vgsolve/enumerate.hpp"

#include <istream>
#include <map>
#include <set>
#include <stdexcept>

#include "vgsolve/canonical.hpp"

namespace vg {

namespace {

struct Generator {
    int n, target_e;
    const std::function<void(const ViewingGraph&)>& emit;

    void grow(const ViewingGraph& g, int m) {
        if (m == target_e) {
            if (is_connected(g)) emit(g);
            return;
        }
        // Each added edge reduces the component count by at most one.
        if (component_count(g) - 1 > target_e - m) return;

        // One representative non-edge per automorphism orbit, via marked forms.
        std::map<CanonicalForm, std::pair<int, int>> orbit_reps;
        for (int u = 0; u < n; u++)
            for (int v = u + 1; v < n; v++) {
                if (g.has_edge(u, v)) continue;
                orbit_reps.try_emplace(marked_pair_form(g, u, v), std::make_pair(u, v));
            }

        for (const auto& [form, uv] : orbit_reps) {
            auto edges = g.edges();
            edges.push_back(uv);
            ViewingGraph child(n, std::move(edges));
            if (is_canonical_augmentation(child, uv)) grow(child, m + 1);
        }
    }

    // The child survives iff the added edge is in the same orbit as the
    // canonical edge (the preimage of the last edge of the canonical form).
    bool is_canonical_augmentation(const ViewingGraph& child, std::pair<int, int> added) const {
        CanonicalLabeling lab = canonical_labeling(child);
        ViewingGraph canon = apply_labeling(child, lab.to_canon);
        std::pair<int, int> last = canon.edges().back();
        // Pull the canonical edge back to the child's labels.
        std::vector<int> from_canon(n);
        for (int v = 0; v < n; v++) from_canon[lab.to_canon[v]] = v;
        std::pair<int, int> canon_edge = {from_canon[last.first], from_canon[last.second]};
        if (canon_edge.first > canon_edge.second) std::swap(canon_edge.first, canon_edge.second);
        if (canon_edge == added) return true;
        return marked_pair_form(child, added.first, added.second) ==
               marked_pair_form(child, canon_edge.first, canon_edge.second);
    }
};

} // namespace

void enumerate_connected(int n, int e, const std::function<void(const ViewingGraph&)>& emit) {
    if (n < 2 || n > 10) throw std::domain_error("enumeration limited to 2 <= n <= 10");
    if (e < 0 || e > n * (n - 1) / 2) throw std::domain_error("edge count out of range");
    Generator gen{n, e, emit};
    gen.grow(ViewingGraph(n, {}), 0);
}

std::vector<ViewingGraph> enumerate_connected(int n, int e) {
    std::vector<ViewingGraph> out;
    enumerate_connected(n, e, [&](const ViewingGraph& g) { out.push_back(g); });
    return out;
}

std::vector<ViewingGraph> ingest_graph6_stream(std::istream& in) {
    std::vector<ViewingGraph> out;
    std::set<CanonicalForm> seen;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        ViewingGraph g = from_graph6(line);
        if (seen.insert(canonical_form(g)).second) out.push_back(std::move(g));
    }
    return out;
}

} // namespace vg
