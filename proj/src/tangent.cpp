#include "vgsolve/tangent.hpp"

#include <stdexcept>

#include "vgsolve/rng.hpp"

namespace vg {

namespace {

// One term of a form: sign * m[mr][mc] * c[ci].
struct Term {
    int sign, mr, mc, ci;
};

// The twenty forms vanishing exactly on {alpha*I + c*v^T}, transcribed as
// data. The kernel property is asserted by tests, guarding the transcription.
const std::vector<std::vector<Term>>& forms() {
    static const std::vector<std::vector<Term>> f = {
        {{+1, 3, 1, 2}, {-1, 2, 1, 3}},
        {{+1, 3, 0, 2}, {-1, 2, 0, 3}},
        {{+1, 3, 2, 1}, {-1, 1, 2, 3}},
        {{+1, 3, 0, 1}, {-1, 1, 0, 3}},
        {{+1, 2, 3, 1}, {-1, 1, 3, 2}},
        {{+1, 2, 0, 1}, {-1, 1, 0, 2}},
        {{+1, 3, 2, 0}, {-1, 0, 2, 3}},
        {{+1, 3, 1, 0}, {-1, 0, 1, 3}},
        {{+1, 2, 3, 0}, {-1, 0, 3, 2}},
        {{+1, 2, 1, 0}, {-1, 0, 1, 2}},
        {{+1, 1, 3, 0}, {-1, 0, 3, 1}},
        {{+1, 1, 2, 0}, {-1, 0, 2, 1}},
        {{+1, 2, 2, 1}, {-1, 3, 3, 1}, {-1, 1, 2, 2}, {+1, 1, 3, 3}},
        {{+1, 2, 1, 1}, {-1, 1, 1, 2}, {+1, 3, 3, 2}, {-1, 2, 3, 3}},
        {{+1, 3, 0, 0}, {-1, 3, 2, 2}, {-1, 0, 0, 3}, {+1, 2, 2, 3}},
        {{+1, 2, 2, 0}, {-1, 3, 3, 0}, {-1, 0, 2, 2}, {+1, 0, 3, 3}},
        {{+1, 2, 0, 0}, {-1, 0, 0, 2}, {+1, 3, 3, 2}, {-1, 2, 3, 3}},
        {{+1, 3, 1, 1}, {-1, 3, 2, 2}, {-1, 1, 1, 3}, {+1, 2, 2, 3}},
        {{+1, 1, 1, 0}, {-1, 3, 3, 0}, {-1, 0, 1, 1}, {+1, 0, 3, 3}},
        {{+1, 1, 0, 0}, {-1, 0, 0, 1}, {+1, 3, 3, 1}, {-1, 1, 3, 3}},
    };
    return f;
}

BigInt det4(const std::array<const std::array<BigInt, 4>*, 4>& rows) {
    IntMatrix m(4, 4);
    for (int i = 0; i < 4; i++)
        for (int j = 0; j < 4; j++) m.at(i, j) = (*rows[i])[j];
    return det(m);
}

} // namespace

PinholeSet sample_pinholes(int n, long bound, uint64_t seed) {
    if (n < 2) throw std::domain_error("sample_pinholes requires n >= 2");
    if (bound < 10) throw std::domain_error("sample_pinholes requires bound >= 10");
    Rng rng(seed);
    PinholeSet out;
    out.n = n;
    out.bound = bound;
    out.seed = seed;
    out.points.reserve(n);
    int failures = 0;
    while (static_cast<int>(out.points.size()) < n) {
        std::array<BigInt, 4> p;
        for (auto& x : p) x = rng.uniform(-bound, bound);
        bool ok = p[0] != 0 || p[1] != 0 || p[2] != 0 || p[3] != 0;
        // Genericity screen: every 4-subset including the new point must be
        // linearly independent.
        size_t k = out.points.size();
        if (ok && k >= 3) {
            for (size_t i = 0; i + 2 < k && ok; i++)
                for (size_t j = i + 1; j + 1 < k && ok; j++)
                    for (size_t l = j + 1; l < k && ok; l++)
                        ok = det4({&out.points[i], &out.points[j], &out.points[l], &p}) != 0;
        }
        if (!ok) {
            if (++failures >= 100)
                throw std::runtime_error("pinhole sampling failed 100 times; bound too small");
            continue;
        }
        failures = 0;
        out.points.push_back(std::move(p));
    }
    return out;
}

IntMatrix lc_rows(const std::array<BigInt, 4>& c) {
    if (c[0] == 0 && c[1] == 0 && c[2] == 0 && c[3] == 0)
        throw std::domain_error("lc_rows requires a nonzero vector");
    IntMatrix m(20, 16);
    const auto& fs = forms();
    for (int r = 0; r < 20; r++)
        for (const auto& t : fs[r]) m.at(r, 4 * t.mr + t.mc) += t.sign * c[t.ci];
    return m;
}

namespace {

TangentSystem assemble(const ViewingGraph& g, const PinholeSet& pinholes, bool pairwise) {
    if (pinholes.n != g.n()) throw std::invalid_argument("pinhole count must match vertex count");
    int e = g.edge_count();
    std::vector<std::vector<int>> incident(g.n());
    for (int k = 0; k < e; k++) {
        incident[g.edges()[k].first].push_back(k);
        incident[g.edges()[k].second].push_back(k);
    }
    std::vector<std::pair<int, int>> diffs; // (edge lambda, edge lambda') sharing a vertex
    std::vector<int> diff_vertex;
    for (int i = 0; i < g.n(); i++) {
        const auto& inc = incident[i];
        if (inc.size() < 2) continue;
        if (pairwise) {
            for (size_t a = 0; a < inc.size(); a++)
                for (size_t b = a + 1; b < inc.size(); b++) {
                    diffs.emplace_back(inc[b], inc[a]);
                    diff_vertex.push_back(i);
                }
        } else {
            for (size_t b = 1; b < inc.size(); b++) {
                diffs.emplace_back(inc[b], inc[0]);
                diff_vertex.push_back(i);
            }
        }
    }
    TangentSystem sys;
    sys.graph = g;
    sys.pinholes = pinholes;
    sys.unknowns = 16 * e;
    sys.matrix = IntMatrix(20 * static_cast<int>(diffs.size()), 16 * e);
    const auto& fs = forms();
    for (size_t d = 0; d < diffs.size(); d++) {
        auto [lam, ref] = diffs[d];
        const auto& c = pinholes.points[diff_vertex[d]];
        for (int r = 0; r < 20; r++) {
            int row = 20 * static_cast<int>(d) + r;
            for (const auto& t : fs[r]) {
                BigInt coef = t.sign * c[t.ci];
                int mi = 4 * t.mr + t.mc;
                sys.matrix.at(row, 16 * lam + mi) += coef;
                sys.matrix.at(row, 16 * ref + mi) -= coef;
            }
        }
    }
    return sys;
}

} // namespace

TangentSystem assemble_system(const ViewingGraph& g, const PinholeSet& pinholes) {
    return assemble(g, pinholes, false);
}

TangentSystem assemble_system_pairwise(const ViewingGraph& g, const PinholeSet& pinholes) {
    return assemble(g, pinholes, true);
}

int kernel_dimension(const TangentSystem& sys) {
    int e = sys.graph.edge_count();
    int cap = 15 * e - 15; // kernel always contains the (15 + e)-dim structural space
    RowEchelon ech(sys.matrix.cols);
    for (int r = 0; r < sys.matrix.rows && ech.rank() < cap; r++) {
        std::vector<BigInt> row(sys.matrix.a.begin() + static_cast<size_t>(r) * sys.matrix.cols,
                                sys.matrix.a.begin() + static_cast<size_t>(r + 1) * sys.matrix.cols);
        ech.add_row(std::move(row));
    }
    return sys.matrix.cols - ech.rank();
}

IntMatrix structural_kernel_basis(const ViewingGraph& g) {
    int e = g.edge_count();
    IntMatrix basis(16 + e, 16 * e);
    // Constant assignments: h_lambda = E_{ab} for every edge.
    for (int ab = 0; ab < 16; ab++)
        for (int k = 0; k < e; k++) basis.at(ab, 16 * k + ab) = 1;
    // Per-edge identity scalings.
    for (int k = 0; k < e; k++)
        for (int d = 0; d < 4; d++) basis.at(16 + k, 16 * k + 5 * d) = 1;
    return basis;
}

FiniteSolvability finite_solvable(const ViewingGraph& g, int trials, long bound, uint64_t seed) {
    if (!is_connected(g)) throw std::invalid_argument("finite_solvable requires a connected graph");
    if (trials < 1) throw std::invalid_argument("finite_solvable requires trials >= 1");
    int e = g.edge_count();
    int floor_dim = 15 + e;
    FiniteSolvability out;
    out.trials = trials;
    out.bound = bound;
    out.seed = seed;
    int min_dim = -1;
    for (int t = 0; t < trials; t++) {
        PinholeSet p = sample_pinholes(g.n(), bound, Rng::derive(seed, t));
        int dim = kernel_dimension(assemble_system(g, p));
        if (min_dim < 0 || dim < min_dim) min_dim = dim;
        if (min_dim == floor_dim) break; // cannot go lower
    }
    out.kernel_dim = min_dim;
    out.finite_solvable = min_dim == floor_dim;
    return out;
}

} // namespace vg
