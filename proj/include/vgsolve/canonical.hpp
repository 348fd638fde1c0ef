#ifndef VGSOLVE_CANONICAL_HPP
#define VGSOLVE_CANONICAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "vgsolve/graph.hpp"

namespace vg {

// Isomorphism-invariant label: two graphs (with matching vertex colorings)
// have equal forms iff they are isomorphic by a color-preserving map.
struct CanonicalForm {
    std::vector<uint8_t> bytes;

    bool operator==(const CanonicalForm&) const = default;
    auto operator<=>(const CanonicalForm&) const = default;
    std::string hex() const;
};

struct CanonicalLabeling {
    CanonicalForm form;
    // to_canon[v] = position of vertex v in the canonical ordering.
    std::vector<int> to_canon;
};

// Iterative degree/neighborhood refinement plus backtracking over cells,
// with union-find pruning on discovered automorphisms. n <= 16.
CanonicalForm canonical_form(const ViewingGraph& g);
CanonicalForm canonical_form_colored(const ViewingGraph& g, const std::vector<int>& colors);
CanonicalLabeling canonical_labeling(const ViewingGraph& g);

// Form of g with the (unordered) pair {u, v} distinguished. Two pairs are in
// the same automorphism orbit iff their marked forms are equal.
CanonicalForm marked_pair_form(const ViewingGraph& g, int u, int v);

// Relabel: vertex v of the input becomes to_canon[v].
ViewingGraph apply_labeling(const ViewingGraph& g, const std::vector<int>& to_canon);

} // namespace vg

#endif
