#include "vgsolve/moves.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace vg {

MixedGraph::MixedGraph(const ViewingGraph& g) : n_(g.n()) {
    if (g.n() > 32) throw std::domain_error("moves closure limited to n <= 32");
    for (const auto& [a, b] : g.edges()) add_solid(a, b);
}

void MixedGraph::add_solid(int i, int j) {
    solid_[i] |= 1u << j;
    solid_[j] |= 1u << i;
    add_dashed(i, j);
    add_dashed(j, i);
}

void MixedGraph::add_dashed(int i, int j) {
    out_[i] |= 1u << j;
    in_[j] |= 1u << i;
}

int MixedGraph::solid_count() const {
    int c = 0;
    for (int i = 0; i < n_; i++) c += std::popcount(solid_[i]);
    return c / 2;
}

bool MixedGraph::complete() const {
    uint32_t all = n_ >= 32 ? ~0u : (1u << n_) - 1;
    for (int i = 0; i < n_; i++)
        if ((solid_[i] | (1u << i)) != all) return false;
    return true;
}

std::vector<std::pair<int, int>> MixedGraph::solid_edges() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n_; i++)
        for (int j = i + 1; j < n_; j++)
            if (solid(i, j)) out.emplace_back(i, j);
    return out;
}

std::vector<std::pair<int, int>> MixedGraph::dashed_arrows() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n_; i++)
        for (int j = 0; j < n_; j++)
            if (i != j && dashed(i, j) && !solid(i, j)) out.emplace_back(i, j);
    return out;
}

namespace {

int lowest_two(uint32_t mask, int* second) {
    int first = std::countr_zero(mask);
    *second = std::countr_zero(mask & (mask - 1));
    return first;
}

} // namespace

// Move I: solid four-cycle a-b-c-d with solid diagonal a-c; draw b-d.
// Equivalently: for a solid edge {a,c}, any two common solid neighbors b,d
// get a solid edge.
std::vector<MoveStep> apply_move_I(MixedGraph& g) {
    std::vector<MoveStep> out;
    int n = g.n();
    for (int a = 0; a < n; a++) {
        for (int c = a + 1; c < n; c++) {
            if (!g.solid(a, c)) continue;
            uint32_t common = g.solid_mask(a) & g.solid_mask(c);
            for (int b = 0; b < n; b++) {
                if (!((common >> b) & 1)) continue;
                for (int d = b + 1; d < n; d++) {
                    if (!((common >> d) & 1) || g.solid(b, d)) continue;
                    g.add_solid(b, d);
                    out.push_back({MoveId::I, {a, b, c, d}, {b, d}});
                }
            }
        }
    }
    return out;
}

// Move II: dashed arrows i->a, i->b and solid edges a-c, b-c give i->c.
// All four pattern vertices must be distinct.
std::vector<MoveStep> apply_move_II(MixedGraph& g) {
    std::vector<MoveStep> out;
    int n = g.n();
    for (int i = 0; i < n; i++) {
        for (int c = 0; c < n; c++) {
            if (c == i || g.dashed(i, c)) continue;
            uint32_t mediators = g.solid_mask(c) & g.out_mask(i) & ~(1u << i);
            if (std::popcount(mediators) < 2) continue;
            int b, a = lowest_two(mediators, &b);
            g.add_dashed(i, c);
            out.push_back({MoveId::II, {i, a, b, c}, {i, c}});
        }
    }
    return out;
}

// Move III: double dashed arrows a<->b plus three witnesses i with i->a and
// i->b promote {a,b} to solid.
std::vector<MoveStep> apply_move_III(MixedGraph& g) {
    std::vector<MoveStep> out;
    int n = g.n();
    for (int a = 0; a < n; a++) {
        for (int b = a + 1; b < n; b++) {
            if (g.solid(a, b) || !g.dashed(a, b) || !g.dashed(b, a)) continue;
            uint32_t wit = g.in_mask(a) & g.in_mask(b) & ~(1u << a) & ~(1u << b);
            if (std::popcount(wit) < 3) continue;
            int w1 = std::countr_zero(wit);
            wit &= wit - 1;
            int w2 = std::countr_zero(wit);
            wit &= wit - 1;
            int w3 = std::countr_zero(wit);
            g.add_solid(a, b);
            out.push_back({MoveId::III, {a, b, w1, w2, w3}, {a, b}});
        }
    }
    return out;
}

namespace {

std::pair<MixedGraph, MoveTrace> run_closure(MixedGraph state) {
    MoveTrace trace;
    for (;;) {
        auto s1 = apply_move_I(state);
        auto s2 = apply_move_II(state);
        auto s3 = apply_move_III(state);
        trace.steps.insert(trace.steps.end(), s1.begin(), s1.end());
        trace.steps.insert(trace.steps.end(), s2.begin(), s2.end());
        trace.steps.insert(trace.steps.end(), s3.begin(), s3.end());
        if (s1.empty() && s2.empty() && s3.empty()) break;
    }
    return {state, trace};
}

} // namespace

std::pair<MixedGraph, MoveTrace> closure(const ViewingGraph& g) {
    return run_closure(MixedGraph(g));
}

std::pair<MixedGraph, MoveTrace> closure_seeded(const ViewingGraph& g,
                                                const std::vector<std::pair<int, int>>& arrows) {
    MixedGraph state(g);
    for (const auto& [i, j] : arrows) state.add_dashed(i, j);
    return run_closure(state);
}

bool solvable_with_moves(const ViewingGraph& g) { return closure(g).first.complete(); }

MixedGraph replay(const ViewingGraph& g, const MoveTrace& trace) {
    MixedGraph state(g);
    for (const auto& step : trace.steps) {
        const auto& m = step.matched;
        switch (step.move) {
        case MoveId::I: {
            int a = m[0], b = m[1], c = m[2], d = m[3];
            if (!(state.solid(a, b) && state.solid(b, c) && state.solid(c, d) &&
                  state.solid(d, a) && state.solid(a, c)))
                throw std::logic_error("replay: move I pattern missing");
            state.add_solid(step.added.first, step.added.second);
            break;
        }
        case MoveId::II: {
            int i = m[0], a = m[1], b = m[2], c = m[3];
            if (!(state.dashed(i, a) && state.dashed(i, b) && state.solid(a, c) &&
                  state.solid(b, c)))
                throw std::logic_error("replay: move II pattern missing");
            state.add_dashed(step.added.first, step.added.second);
            break;
        }
        case MoveId::III: {
            int a = m[0], b = m[1];
            for (int k = 2; k < 5; k++)
                if (!(state.dashed(m[k], a) && state.dashed(m[k], b)))
                    throw std::logic_error("replay: move III witness missing");
            if (!(state.dashed(a, b) && state.dashed(b, a)))
                throw std::logic_error("replay: move III double arrow missing");
            state.add_solid(step.added.first, step.added.second);
            break;
        }
        }
    }
    return state;
}

std::string trace_to_text(const MoveTrace& trace, int label_base) {
    std::ostringstream out;
    int b = label_base;
    for (const auto& s : trace.steps) {
        const auto& m = s.matched;
        switch (s.move) {
        case MoveId::I:
            out << "I   cycle " << m[0] + b << "-" << m[1] + b << "-" << m[2] + b << "-"
                << m[3] + b << " diagonal " << m[0] + b << "-" << m[2] + b << "  + solid "
                << s.added.first + b << "-" << s.added.second + b << "\n";
            break;
        case MoveId::II:
            out << "II  " << m[0] + b << "->" << m[1] + b << ", " << m[0] + b << "->"
                << m[2] + b << " via solid " << m[1] + b << "-" << m[3] + b << ", " << m[2] + b
                << "-" << m[3] + b << "  + dashed " << s.added.first + b << "->"
                << s.added.second + b << "\n";
            break;
        case MoveId::III:
            out << "III " << m[0] + b << "<->" << m[1] + b << " witnesses " << m[2] + b << ","
                << m[3] + b << "," << m[4] + b << "  + solid " << s.added.first + b << "-"
                << s.added.second + b << "\n";
            break;
        }
    }
    return out.str();
}

std::string to_dot(const MixedGraph& g, int label_base) {
    std::ostringstream out;
    out << "digraph closure {\n";
    for (int i = 0; i < g.n(); i++)
        out << "  " << i + label_base << " [shape=circle]\n";
    for (const auto& [i, j] : g.solid_edges())
        out << "  " << i + label_base << " -> " << j + label_base << " [dir=none]\n";
    for (const auto& [i, j] : g.dashed_arrows())
        out << "  " << i + label_base << " -> " << j + label_base << " [style=dashed]\n";
    out << "}\n";
    return out.str();
}

} // namespace vg
