#include "vgsolve/exact.hpp"

#include <ostream>
#include <stdexcept>

namespace vg {

namespace {

// Divide the row by the gcd of its entries.
void strip_content(std::vector<BigInt>& row) {
    BigInt g = 0;
    for (const auto& x : row) {
        if (x != 0) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
            if (g == 1) return;
        }
    }
    if (g > 1)
        for (auto& x : row)
            if (x != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

} // namespace

bool RowEchelon::add_row(std::vector<BigInt> row) {
    if (static_cast<int>(row.size()) != cols_) throw std::invalid_argument("row size mismatch");
    for (int c = 0; c < cols_; c++) {
        if (row[c] == 0) continue;
        int k = pivot_row_of_col_[c];
        if (k < 0) {
            strip_content(row);
            pivot_row_of_col_[c] = static_cast<int>(rows_.size());
            pivot_col_.push_back(c);
            rows_.push_back(std::move(row));
            return true;
        }
        const auto& basis = rows_[k];
        BigInt p = basis[c], f = row[c], g;
        mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), f.get_mpz_t());
        BigInt pp = p / g, ff = f / g;
        row[c] = 0;
        for (int j = c + 1; j < cols_; j++) row[j] = row[j] * pp - ff * basis[j];
        strip_content(row);
    }
    return false;
}

int rank(const IntMatrix& m) {
    RowEchelon ech(m.cols);
    for (int r = 0; r < m.rows; r++) {
        std::vector<BigInt> row(m.a.begin() + static_cast<size_t>(r) * m.cols,
                                m.a.begin() + static_cast<size_t>(r + 1) * m.cols);
        ech.add_row(std::move(row));
    }
    return ech.rank();
}

int kernel_dimension(const IntMatrix& m) { return m.cols - rank(m); }

std::vector<BigInt> matvec(const IntMatrix& m, const std::vector<BigInt>& v) {
    if (static_cast<int>(v.size()) != m.cols) throw std::invalid_argument("matvec size mismatch");
    std::vector<BigInt> out(m.rows, 0);
    for (int r = 0; r < m.rows; r++) {
        BigInt acc = 0;
        for (int c = 0; c < m.cols; c++) {
            const BigInt& x = m.at(r, c);
            if (x != 0) acc += x * v[c];
        }
        out[r] = acc;
    }
    return out;
}

void write_triplets(const IntMatrix& m, std::ostream& out) {
    for (int r = 0; r < m.rows; r++)
        for (int c = 0; c < m.cols; c++)
            if (m.at(r, c) != 0) out << r << " " << c << " " << m.at(r, c).get_str() << "\n";
}

BigInt det(const IntMatrix& m) {
    if (m.rows != m.cols) throw std::invalid_argument("det requires a square matrix");
    int n = m.rows;
    IntMatrix w = m;
    // Bareiss with exact division; row swaps tracked by sign.
    BigInt prev = 1;
    int sign = 1;
    for (int k = 0; k < n; k++) {
        int piv = -1;
        for (int i = k; i < n; i++)
            if (w.at(i, k) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) return 0;
        if (piv != k) {
            for (int j = 0; j < n; j++) std::swap(w.at(piv, j), w.at(k, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; i++) {
            for (int j = k + 1; j < n; j++) {
                w.at(i, j) = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
                mpz_divexact(w.at(i, j).get_mpz_t(), w.at(i, j).get_mpz_t(), prev.get_mpz_t());
            }
            w.at(i, k) = 0;
        }
        prev = w.at(k, k);
    }
    return sign > 0 ? w.at(n - 1, n - 1) : -w.at(n - 1, n - 1);
}

} // namespace vg
