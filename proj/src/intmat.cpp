#include "qtoric/intmat.hpp"

#include <algorithm>
#include <utility>

#include "qtoric/error.hpp"

namespace qtoric {

IntMat::IntMat(std::initializer_list<std::initializer_list<Integer>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ ? static_cast<int>(rows.begin()->size()) : 0;
    a_.reserve(std::size_t(rows_) * cols_);
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != cols_)
            throw ArgumentError("ragged matrix initializer");
        a_.insert(a_.end(), row.begin(), row.end());
    }
}

IntMat IntMat::identity(int n) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

IntMat IntMat::transposed() const {
    IntMat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            t.at(j, i) = at(i, j);
    return t;
}

void IntMat::swap_rows(int i, int j) {
    if (i == j)
        return;
    for (int k = 0; k < cols_; ++k)
        std::swap(at(i, k), at(j, k));
}

void IntMat::swap_cols(int i, int j) {
    if (i == j)
        return;
    for (int k = 0; k < rows_; ++k)
        std::swap(at(k, i), at(k, j));
}

void IntMat::scale_row(int i, const Integer& s) {
    for (int k = 0; k < cols_; ++k)
        at(i, k) *= s;
}

void IntMat::add_row_multiple(int i, int j, const Integer& s) {
    if (s == 0)
        return;
    for (int k = 0; k < cols_; ++k)
        at(i, k) += s * at(j, k);
}

void IntMat::add_col_multiple(int i, int j, const Integer& s) {
    if (s == 0)
        return;
    for (int k = 0; k < rows_; ++k)
        at(k, i) += s * at(k, j);
}

IntMat operator*(const IntMat& a, const IntMat& b) {
    if (a.cols() != b.rows())
        throw ArgumentError("matrix dimension mismatch");
    IntMat out(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const Integer& aik = a.at(i, k);
            if (aik == 0)
                continue;
            for (int j = 0; j < b.cols(); ++j)
                out.at(i, j) += aik * b.at(k, j);
        }
    return out;
}

Integer determinant(const IntMat& a) {
    if (a.rows() != a.cols())
        throw ArgumentError("determinant of non-square matrix");
    const int n = a.rows();
    if (n == 0)
        return 1;
    IntMat m = a;
    Integer prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m.at(k, k) == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (m.at(i, k) != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0)
                return 0;
            m.swap_rows(k, piv);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
        prev = m.at(k, k);
    }
    return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

namespace {

Integer abs_val(const Integer& x) {
    return x < 0 ? Integer(-x) : x;
}

// Position of the nonzero entry of smallest magnitude in the submatrix
// starting at (t, t); {-1, -1} if the submatrix is zero.
std::pair<int, int> smallest_pivot(const IntMat& m, int t) {
    std::pair<int, int> best{-1, -1};
    Integer best_abs = 0;
    for (int i = t; i < m.rows(); ++i)
        for (int j = t; j < m.cols(); ++j) {
            if (m.at(i, j) == 0)
                continue;
            Integer a = abs_val(m.at(i, j));
            if (best.first < 0 || a < best_abs) {
                best = {i, j};
                best_abs = a;
            }
        }
    return best;
}

// Floor division (round toward negative infinity), so remainders are
// always in [0, |b|).
Integer floor_div(const Integer& a, const Integer& b) {
    Integer q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0)))
        --q;
    return q;
}

// Balanced division: remainder magnitude at most |b|/2. Keeps entry growth
// under control during the gcd phases.
Integer balanced_div(const Integer& a, const Integer& b) {
    Integer q = a / b, r = a % b;
    const Integer babs = abs_val(b);
    if (2 * abs_val(r) > babs)
        q += (r < 0) == (b < 0) ? 1 : -1;
    return q;
}

}  // namespace

SmithResult smith_normal_form(IntMat a) {
    const int r = a.rows(), c = a.cols();
    SmithResult res;
    res.u = IntMat::identity(r);
    res.v = IntMat::identity(c);

    const int steps = std::min(r, c);
    int t = 0;
    for (; t < steps; ++t) {
        bool submatrix_zero = false;
        for (;;) {
            // re-select the globally smallest pivot every round; with the
            // balanced remainders below this keeps entries from exploding
            auto [pi, pj] = smallest_pivot(a, t);
            if (pi < 0) {
                submatrix_zero = true;
                break;
            }
            a.swap_rows(t, pi);
            res.u.swap_rows(t, pi);
            a.swap_cols(t, pj);
            res.v.swap_cols(t, pj);

            bool clean = true;
            for (int i = t + 1; i < r; ++i) {
                if (a.at(i, t) == 0)
                    continue;
                Integer q = balanced_div(a.at(i, t), a.at(t, t));
                a.add_row_multiple(i, t, -q);
                res.u.add_row_multiple(i, t, -q);
                if (a.at(i, t) != 0)
                    clean = false;
            }
            if (!clean)
                continue;
            for (int j = t + 1; j < c; ++j) {
                if (a.at(t, j) == 0)
                    continue;
                Integer q = balanced_div(a.at(t, j), a.at(t, t));
                a.add_col_multiple(j, t, -q);
                res.v.add_col_multiple(j, t, -q);
                if (a.at(t, j) != 0)
                    clean = false;
            }
            if (!clean)
                continue;
            // enforce the divisibility chain: d_t must divide everything
            // in the remaining submatrix
            bool divisible = true;
            for (int i = t + 1; i < r && divisible; ++i)
                for (int j = t + 1; j < c && divisible; ++j)
                    if (a.at(i, j) % a.at(t, t) != 0) {
                        a.add_row_multiple(t, i, 1);
                        res.u.add_row_multiple(t, i, 1);
                        divisible = false;
                    }
            if (divisible)
                break;
        }
        if (submatrix_zero)
            break;
        if (a.at(t, t) < 0) {
            a.scale_row(t, -1);
            res.u.scale_row(t, -1);
        }
    }

    res.rank = t;
    res.d = std::move(a);
    for (int i = 0; i < t; ++i)
        res.invariants.push_back(res.d.at(i, i));
    return res;
}

IntMat hermite_row_basis(IntMat a) {
    const int r = a.rows(), c = a.cols();
    int row = 0;
    for (int col = 0; col < c && row < r; ++col) {
        // gcd elimination within the column
        for (;;) {
            int piv = -1;
            Integer best;
            for (int i = row; i < r; ++i)
                if (a.at(i, col) != 0 && (piv < 0 || abs_val(a.at(i, col)) < best)) {
                    piv = i;
                    best = abs_val(a.at(i, col));
                }
            if (piv < 0)
                break;
            a.swap_rows(row, piv);
            bool clean = true;
            for (int i = row + 1; i < r; ++i) {
                if (a.at(i, col) == 0)
                    continue;
                Integer q = floor_div(a.at(i, col), a.at(row, col));
                a.add_row_multiple(i, row, -q);
                if (a.at(i, col) != 0)
                    clean = false;
            }
            if (clean)
                break;
        }
        if (row < r && a.at(row, col) != 0) {
            if (a.at(row, col) < 0)
                a.scale_row(row, -1);
            // reduce entries above the pivot into [0, pivot)
            for (int i = 0; i < row; ++i) {
                Integer q = floor_div(a.at(i, col), a.at(row, col));
                a.add_row_multiple(i, row, -q);
            }
            ++row;
        }
    }
    IntMat out(row, c);
    for (int i = 0; i < row; ++i)
        for (int j = 0; j < c; ++j)
            out.at(i, j) = a.at(i, j);
    return out;
}

IntMat integer_kernel_basis(const IntMat& a) {
    SmithResult snf = smith_normal_form(a);
    const int n = a.cols();
    const int k = n - snf.rank;
    IntMat basis(k, n);
    for (int idx = 0; idx < k; ++idx)
        for (int i = 0; i < n; ++i)
            basis.at(idx, i) = snf.v.at(i, snf.rank + idx);
    return hermite_row_basis(std::move(basis));
}

}  // namespace qtoric
