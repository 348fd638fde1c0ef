#include "doctest.h"

#include <sstream>

#include "vgsolve/exact.hpp"
#include "vgsolve/rng.hpp"

using namespace vg;

TEST_CASE("rank and kernel of small matrices") {
    IntMatrix m(3, 3);
    // Rank-2 matrix: third row = first + second.
    int vals[3][3] = {{1, 2, 3}, {4, 5, 6}, {5, 7, 9}};
    for (int i = 0; i < 3; i++)
        for (int j = 0; j < 3; j++) m.at(i, j) = vals[i][j];
    CHECK(rank(m) == 2);
    CHECK(kernel_dimension(m) == 1);

    IntMatrix id(4, 4);
    for (int i = 0; i < 4; i++) id.at(i, i) = 1;
    CHECK(rank(id) == 4);
    CHECK(det(id) == 1);

    IntMatrix zero(2, 5);
    CHECK(rank(zero) == 0);
    CHECK(kernel_dimension(zero) == 5);
}

TEST_CASE("rank is invariant under row scaling and permutation") {
    Rng rng(5);
    for (int iter = 0; iter < 50; iter++) {
        int r = static_cast<int>(rng.uniform(1, 8)), c = static_cast<int>(rng.uniform(1, 8));
        IntMatrix m(r, c);
        for (auto& x : m.a) x = rng.uniform(-4, 4);
        int base = rank(m);
        IntMatrix scaled = m;
        for (int i = 0; i < r; i++) {
            BigInt s = rng.uniform(1, 9);
            for (int j = 0; j < c; j++) scaled.at(i, j) *= s;
        }
        CHECK(rank(scaled) == base);
        IntMatrix rev(r, c);
        for (int i = 0; i < r; i++)
            for (int j = 0; j < c; j++) rev.at(i, j) = m.at(r - 1 - i, j);
        CHECK(rank(rev) == base);
    }
}

TEST_CASE("determinant cross-checked against cofactor expansion") {
    Rng rng(9);
    auto cofactor_det = [](auto&& self, const IntMatrix& m) -> BigInt {
        int n = m.rows;
        if (n == 1) return m.at(0, 0);
        BigInt acc = 0;
        for (int j = 0; j < n; j++) {
            if (m.at(0, j) == 0) continue;
            IntMatrix sub(n - 1, n - 1);
            for (int i = 1; i < n; i++) {
                int cc = 0;
                for (int c = 0; c < n; c++)
                    if (c != j) sub.at(i - 1, cc++) = m.at(i, c);
            }
            BigInt term = m.at(0, j) * self(self, sub);
            acc += (j % 2 == 0) ? term : -term;
        }
        return acc;
    };
    for (int iter = 0; iter < 100; iter++) {
        int n = static_cast<int>(rng.uniform(1, 5));
        IntMatrix m(n, n);
        for (auto& x : m.a) x = rng.uniform(-6, 6);
        CHECK(det(m) == cofactor_det(cofactor_det, m));
    }
}

TEST_CASE("singular determinant detected exactly") {
    IntMatrix m(3, 3);
    int vals[3][3] = {{2, 4, 6}, {1, 2, 3}, {7, 8, 9}};
    for (int i = 0; i < 3; i++)
        for (int j = 0; j < 3; j++) m.at(i, j) = vals[i][j];
    CHECK(det(m) == 0);
}

TEST_CASE("matvec and triplet dump") {
    IntMatrix m(2, 3);
    m.at(0, 0) = 1;
    m.at(0, 2) = -2;
    m.at(1, 1) = 3;
    auto out = matvec(m, {BigInt(5), BigInt(7), BigInt(1)});
    CHECK(out[0] == 3);
    CHECK(out[1] == 21);

    std::ostringstream ss;
    write_triplets(m, ss);
    CHECK(ss.str() == "0 0 1\n0 2 -2\n1 1 3\n");
}
