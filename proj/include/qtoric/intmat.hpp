#pragma once
#include <initializer_list>
#include <vector>

#include "qtoric/integer.hpp"

namespace qtoric {

// Dense matrix over arbitrary-precision integers, row-major.
class IntMat {
  public:
    IntMat() = default;
    IntMat(int rows, int cols) : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols) {}
    IntMat(std::initializer_list<std::initializer_list<Integer>> rows);

    static IntMat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Integer& at(int i, int j) { return a_[std::size_t(i) * cols_ + j]; }
    const Integer& at(int i, int j) const { return a_[std::size_t(i) * cols_ + j]; }

    IntMat transposed() const;
    void swap_rows(int i, int j);
    void swap_cols(int i, int j);
    void scale_row(int i, const Integer& s);
    // row_i += s * row_j
    void add_row_multiple(int i, int j, const Integer& s);
    void add_col_multiple(int i, int j, const Integer& s);

    bool operator==(const IntMat& other) const = default;

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<Integer> a_;
};

IntMat operator*(const IntMat& a, const IntMat& b);

// Exact determinant (Bareiss fraction-free elimination). Square input.
Integer determinant(const IntMat& a);

// Smith normal form: unimodular U (rows x rows) and V (cols x cols) with
// U * A * V = D diagonal, d_1 | d_2 | ..., all d_i >= 0.
struct SmithResult {
    IntMat d, u, v;
    int rank = 0;
    std::vector<Integer> invariants;  // the nonzero d_i, in divisibility order
};
SmithResult smith_normal_form(IntMat a);

// Row-style Hermite normal form of the row lattice of A: zero rows dropped,
// pivots positive, entries above each pivot reduced into [0, pivot).
// Canonical: two matrices have equal row lattices iff equal HNF.
IntMat hermite_row_basis(IntMat a);

// Rows form a Z-basis of { x : A x = 0 }, Hermite-reduced.
IntMat integer_kernel_basis(const IntMat& a);

}  // namespace qtoric
