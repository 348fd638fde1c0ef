#ifndef VGSOLVE_MOVES_HPP
#define VGSOLVE_MOVES_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "vgsolve/graph.hpp"

namespace vg {

// Closure state: solid (undirected) edges mean the fundamental matrix between
// the two views is fixed; a dashed arrow i->j means the image of pinhole i in
// view j is fixed. A solid edge counts as a dashed double-arrow; that
// containment is maintained automatically. n <= 32.
class MixedGraph {
public:
    MixedGraph() = default;
    explicit MixedGraph(const ViewingGraph& g);

    int n() const { return n_; }
    bool solid(int i, int j) const { return (solid_[i] >> j) & 1; }
    bool dashed(int i, int j) const { return (out_[i] >> j) & 1; }

    void add_solid(int i, int j);
    void add_dashed(int i, int j);

    uint32_t solid_mask(int i) const { return solid_[i]; }
    uint32_t out_mask(int i) const { return out_[i]; }   // arrows i -> *
    uint32_t in_mask(int j) const { return in_[j]; }     // arrows * -> j

    int solid_count() const;
    bool complete() const;
    std::vector<std::pair<int, int>> solid_edges() const;
    std::vector<std::pair<int, int>> dashed_arrows() const; // excludes solid-implied

    bool operator==(const MixedGraph&) const = default;

private:
    int n_ = 0;
    std::array<uint32_t, 32> solid_{};
    std::array<uint32_t, 32> out_{};
    std::array<uint32_t, 32> in_{};
};

enum class MoveId { I, II, III };

struct MoveStep {
    MoveId move;
    std::vector<int> matched; // pattern vertices, see trace formatting
    std::pair<int, int> added; // solid {a,b} for I/III, arrow a->b for II
};

struct MoveTrace {
    std::vector<MoveStep> steps;
};

// Single passes over the current state; additions are applied to g and
// returned. Scan order is fixed (ascending indices), so results are
// deterministic.
std::vector<MoveStep> apply_move_I(MixedGraph& g);
std::vector<MoveStep> apply_move_II(MixedGraph& g);
std::vector<MoveStep> apply_move_III(MixedGraph& g);

// Seeds the mixed graph from the solid edges and applies the three moves
// cyclically to fixpoint. The fixpoint is order-independent (property-tested).
std::pair<MixedGraph, MoveTrace> closure(const ViewingGraph& g);
// Same, but with extra dashed arrows seeded before iterating.
std::pair<MixedGraph, MoveTrace> closure_seeded(const ViewingGraph& g,
                                                const std::vector<std::pair<int, int>>& arrows);

bool solvable_with_moves(const ViewingGraph& g);

// Re-applies the steps from the initial state; throws if a step's pattern is
// not present when replayed.
MixedGraph replay(const ViewingGraph& g, const MoveTrace& trace);

std::string trace_to_text(const MoveTrace& trace, int label_base = 1);
std::string to_dot(const MixedGraph& g, int label_base = 1);

} // namespace vg

#endif
