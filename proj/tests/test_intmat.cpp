#include <random>

#include "doctest.h"
#include "qtoric/error.hpp"
#include "qtoric/intmat.hpp"

using namespace qtoric;

namespace {

IntMat random_matrix(std::mt19937_64& rng, int r, int c, int bound) {
    std::uniform_int_distribution<int> entry(-bound, bound);
    IntMat m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j)
            m.at(i, j) = entry(rng);
    return m;
}

// Permanent-style cofactor expansion: an independent determinant oracle.
Integer det_cofactor(const IntMat& m) {
    const int n = m.rows();
    if (n == 0)
        return 1;
    if (n == 1)
        return m.at(0, 0);
    Integer det = 0;
    for (int j = 0; j < n; ++j) {
        if (m.at(0, j) == 0)
            continue;
        IntMat minor(n - 1, n - 1);
        for (int i = 1; i < n; ++i)
            for (int k = 0, col = 0; k < n; ++k)
                if (k != j)
                    minor.at(i - 1, col++) = m.at(i, k);
        const Integer term = m.at(0, j) * det_cofactor(minor);
        det += (j % 2 == 0) ? term : -term;
    }
    return det;
}

bool is_diagonal(const IntMat& m) {
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (i != j && m.at(i, j) != 0)
                return false;
    return true;
}

}  // namespace

TEST_CASE("determinant matches cofactor expansion") {
    std::mt19937_64 rng(11);
    for (int n = 1; n <= 5; ++n)
        for (int trial = 0; trial < 20; ++trial) {
            const IntMat m = random_matrix(rng, n, n, 6);
            CHECK(determinant(m) == det_cofactor(m));
        }
    CHECK_THROWS_AS(determinant(IntMat(2, 3)), ArgumentError);
}

TEST_CASE("smith normal form certificate: U A V = D with unimodular transforms") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 120; ++trial) {
        const int r = 1 + static_cast<int>(rng() % 7);
        const int c = 1 + static_cast<int>(rng() % 7);
        const IntMat a = random_matrix(rng, r, c, 25);
        const SmithResult s = smith_normal_form(a);
        CHECK(s.u * a * s.v == s.d);
        CHECK(is_diagonal(s.d));
        Integer du = determinant(s.u), dv = determinant(s.v);
        CHECK((du == 1 || du == -1));
        CHECK((dv == 1 || dv == -1));
        for (std::size_t i = 0; i + 1 < s.invariants.size(); ++i) {
            CHECK(s.invariants[i] > 0);
            CHECK(s.invariants[i + 1] % s.invariants[i] == 0);
        }
        for (int i = s.rank; i < std::min(r, c); ++i)
            CHECK(s.d.at(i, i) == 0);
    }
}

TEST_CASE("smith normal form on known matrices") {
    // diag(2,6) has invariants 2,6; [[2,4],[4,8]] has invariants 2 (rank 1)
    const SmithResult a = smith_normal_form(IntMat{{2, 0}, {0, 6}});
    CHECK(a.invariants == std::vector<Integer>{2, 6});
    const SmithResult b = smith_normal_form(IntMat{{2, 4}, {4, 8}});
    CHECK(b.rank == 1);
    CHECK(b.invariants == std::vector<Integer>{2});
    // the classic torsion example [[2,1],[1,2]] ~ diag(1,3)
    const SmithResult c = smith_normal_form(IntMat{{2, 1}, {1, 2}});
    CHECK(c.invariants == std::vector<Integer>{1, 3});
}

TEST_CASE("hermite row basis is canonical for the row lattice") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        const int r = 1 + static_cast<int>(rng() % 4);
        const int c = 1 + static_cast<int>(rng() % 5);
        const IntMat a = random_matrix(rng, r, c, 7);
        const IntMat h = hermite_row_basis(a);
        // applying a random small unimodular row operation leaves the HNF fixed
        IntMat b = a;
        if (r >= 2) {
            b.add_row_multiple(0, r - 1, Integer(1 + rng() % 3));
            b.swap_rows(0, r - 1);
        }
        b.scale_row(0, -1);
        CHECK(hermite_row_basis(b) == h);
        // pivots positive, entries above pivots reduced
        int prev_col = -1;
        for (int i = 0; i < h.rows(); ++i) {
            int piv = 0;
            while (piv < h.cols() && h.at(i, piv) == 0)
                ++piv;
            REQUIRE(piv < h.cols());
            CHECK(piv > prev_col);
            prev_col = piv;
            CHECK(h.at(i, piv) > 0);
            for (int k = 0; k < i; ++k) {
                CHECK(h.at(k, piv) >= 0);
                CHECK(h.at(k, piv) < h.at(i, piv));
            }
        }
    }
}

TEST_CASE("integer kernel basis spans the kernel") {
    const IntMat lam{{-1, 1, 0}, {-1, 0, 1}};
    const IntMat k = integer_kernel_basis(lam);
    REQUIRE(k.rows() == 1);
    CHECK(k == IntMat{{1, 1, 1}});

    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 40; ++trial) {
        const int r = 1 + static_cast<int>(rng() % 3);
        const int c = r + static_cast<int>(rng() % 4);
        const IntMat a = random_matrix(rng, r, c, 5);
        const IntMat basis = integer_kernel_basis(a);
        const SmithResult s = smith_normal_form(a);
        CHECK(basis.rows() == c - s.rank);
        if (basis.rows() > 0) {
            const IntMat prod = a * basis.transposed();
            for (int i = 0; i < prod.rows(); ++i)
                for (int j = 0; j < prod.cols(); ++j)
                    CHECK(prod.at(i, j) == 0);
        }
    }
}
