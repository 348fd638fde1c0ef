#ifndef VGSOLVE_EXACT_HPP
#define VGSOLVE_EXACT_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <vector>

namespace vg {

using BigInt = mpz_class;

// Dense matrix over exact big integers. No floating point anywhere: ranks and
// kernel dimensions computed from these are exact.
struct IntMatrix {
    int rows = 0, cols = 0;
    std::vector<BigInt> a; // row-major

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

    BigInt& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    const BigInt& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
};

// Incremental fraction-free row echelon over Z. Rows are eliminated by
// cross-multiplication (gcd-scaled to keep entries small); only integer
// arithmetic is used, so rank over Q is exact.
class RowEchelon {
public:
    explicit RowEchelon(int cols) : cols_(cols), pivot_row_of_col_(cols, -1) {}

    // Reduces the row against the current basis; keeps it if independent.
    // Returns true if the row increased the rank.
    bool add_row(std::vector<BigInt> row);

    int rank() const { return static_cast<int>(rows_.size()); }
    int cols() const { return cols_; }

private:
    int cols_;
    std::vector<std::vector<BigInt>> rows_;
    std::vector<int> pivot_col_;
    std::vector<int> pivot_row_of_col_;
};

int rank(const IntMatrix& m);
int kernel_dimension(const IntMatrix& m);

// m * v for a vector of big integers.
std::vector<BigInt> matvec(const IntMatrix& m, const std::vector<BigInt>& v);

// `row col value` triplets of the nonzero entries, for external verification.
void write_triplets(const IntMatrix& m, std::ostream& out);

// Determinant of a small square matrix (fraction-free expansion).
BigInt det(const IntMatrix& m);

} // namespace vg

#endif
