#ifndef VGSOLVE_TANGENT_HPP
#define VGSOLVE_TANGENT_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "vgsolve/exact.hpp"
#include "vgsolve/graph.hpp"

namespace vg {

// Random integer pinholes in P^3, screened so that no point is zero and every
// 4-subset is linearly independent.
struct PinholeSet {
    int n = 0;
    long bound = 0;
    uint64_t seed = 0;
    std::vector<std::array<BigInt, 4>> points;
};

PinholeSet sample_pinholes(int n, long bound, uint64_t seed);

// The 20 linear forms, as rows over the 16 entries m00..m33 (row-major), whose
// common kernel is exactly the 5-dimensional space {alpha*I + c*v^T} for c != 0.
IntMatrix lc_rows(const std::array<BigInt, 4>& c);

// Linear system at the identity for the per-edge actions: one 4x4 unknown
// h per edge (row-major, 16e columns); for each vertex of degree k >= 2 a
// star of k-1 difference constraints against a reference incident edge,
// 20 rows each. Kernel dimension >= 15 + e always.
struct TangentSystem {
    ViewingGraph graph;
    PinholeSet pinholes;
    int unknowns = 0;
    IntMatrix matrix;
};

TangentSystem assemble_system(const ViewingGraph& g, const PinholeSet& pinholes);
// All-adjacent-pairs variant; same kernel as the star form (tested).
TangentSystem assemble_system_pairwise(const ViewingGraph& g, const PinholeSet& pinholes);

// Exact kernel dimension via fraction-free elimination over big integers.
// Stops early once the rank reaches its structural ceiling 15e - 15.
int kernel_dimension(const TangentSystem& sys);

// Basis of the structural kernel: 16 constant assignments plus e per-edge
// identity scalings (rank 15 + e). Rows are vectors of length 16e.
IntMatrix structural_kernel_basis(const ViewingGraph& g);

struct FiniteSolvability {
    bool finite_solvable = false;
    int kernel_dim = 0; // minimum over trials
    int trials = 0;
    long bound = 0;
    uint64_t seed = 0;
};

// Minimum kernel dimension over `trials` independent pinhole samples; special
// positions can only enlarge the kernel, so the minimum is the generic value.
// Verdict: minimum equals 15 + e.
FiniteSolvability finite_solvable(const ViewingGraph& g, int trials = 3, long bound = 1000,
                                  uint64_t seed = 42);

} // namespace vg

#endif
