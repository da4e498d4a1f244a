#pragma once
#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <vector>

#include "qtoric/quasitoric.hpp"

// Brute-force face-ring reduction oracle, independent of the Smith normal
// form pipeline: dense exponent vectors, its own face tests and relation
// assembly, and rational Gaussian elimination for the one-dimensional space
// of functionals vanishing on the relations.
namespace qtoric::testoracle {

using Rational = boost::multiprecision::cpp_rational;

class FaceRingOracle {
  public:
    explicit FaceRingOracle(const QuasitoricData& d) : d_(d) {
        const int v = d.vertex_count();
        std::vector<std::vector<int>> top, lower;
        enumerate(v, d.m, top);
        enumerate(v, d.m - 1, lower);
        std::map<std::vector<int>, int> index;
        for (std::size_t i = 0; i < top.size(); ++i)
            index.emplace(top[i], static_cast<int>(i));

        std::vector<std::vector<Rational>> rows;
        for (const auto& mu : lower)
            for (int j = 0; j < d.m; ++j) {
                std::vector<Rational> row(top.size(), 0);
                bool nonzero = false;
                for (int vert = 0; vert < v; ++vert) {
                    if (d.lambda[vert][j] == 0)
                        continue;
                    std::vector<int> prod = mu;
                    ++prod[vert];
                    if (!face(prod))
                        continue;
                    row[index.at(prod)] += Rational(d.lambda[vert][j]);
                    nonzero = true;
                }
                if (nonzero)
                    rows.push_back(std::move(row));
            }

        // null space of the relation rows, acting as functionals
        std::vector<std::vector<Rational>> mat = rows;
        const int cols = static_cast<int>(top.size());
        int rank = 0;
        std::vector<int> pivot_col;
        for (int col = 0; col < cols && rank < static_cast<int>(mat.size()); ++col) {
            int piv = -1;
            for (int i = rank; i < static_cast<int>(mat.size()); ++i)
                if (mat[i][col] != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0)
                continue;
            std::swap(mat[rank], mat[piv]);
            const Rational inv = Rational(1) / mat[rank][col];
            for (auto& x : mat[rank])
                x *= inv;
            for (int i = 0; i < static_cast<int>(mat.size()); ++i)
                if (i != rank && mat[i][col] != 0) {
                    const Rational f = mat[i][col];
                    for (int k = 0; k < cols; ++k)
                        mat[i][k] -= f * mat[rank][k];
                }
            pivot_col.push_back(col);
            ++rank;
        }
        if (cols - rank != 1)
            throw std::runtime_error("oracle: functional space is not one-dimensional");

        // back-substitute the unique free column
        std::vector<Rational> phi(cols, 0);
        std::vector<char> is_pivot(cols, 0);
        for (int c : pivot_col)
            is_pivot[c] = 1;
        int free_col = 0;
        while (is_pivot[free_col])
            ++free_col;
        phi[free_col] = 1;
        for (int i = 0; i < rank; ++i)
            phi[pivot_col[i]] = -mat[i][free_col];

        // normalize at the base facet's square-free monomial
        std::vector<int> base(v, 0);
        for (int vert : d.facets[d.base_facet_index()])
            base[vert] = 1;
        const Rational anchor = phi[index.at(base)];
        if (anchor == 0)
            throw std::runtime_error("oracle: base monomial evaluates to zero");
        const Rational scale = Rational(base_determinant()) / anchor;
        for (std::size_t i = 0; i < top.size(); ++i)
            eval_.emplace(top[i], phi[i] * scale);
    }

    Rational top_eval(const std::vector<int>& dense_exps) const {
        auto it = eval_.find(dense_exps);
        return it == eval_.end() ? Rational(0) : it->second;
    }

    Integer char_number(const Composition& alpha) const {
        const auto& parts = alpha.parts();
        const int r = alpha.length();
        const int v = d_.vertex_count();
        Rational total = 0;
        std::vector<int> tuple(r);
        auto rec = [&](auto&& self, int pos, int next) -> void {
            if (pos == r) {
                std::vector<int> exps(v, 0);
                for (int i = 0; i < r; ++i)
                    exps[tuple[i]] = parts[i];
                total += top_eval(exps);
                return;
            }
            for (int vert = next; vert < v; ++vert) {
                tuple[pos] = vert;
                self(self, pos + 1, vert + 1);
            }
        };
        rec(rec, 0, 0);
        if (denominator(total) != 1)
            throw std::runtime_error("oracle: non-integral characteristic number");
        return Integer(numerator(total));
    }

  private:
    // dense exponent vectors of total degree k with face support, ascending
    void enumerate(int v, int k, std::vector<std::vector<int>>& out) const {
        std::vector<int> cur(v, 0);
        auto rec = [&](auto&& self, int vert, int remaining) -> void {
            if (vert == v) {
                if (remaining == 0 && face(cur))
                    out.push_back(cur);
                return;
            }
            for (int e = 0; e <= remaining; ++e) {
                cur[vert] = e;
                self(self, vert + 1, remaining - e);
            }
            cur[vert] = 0;
        };
        rec(rec, 0, k);
    }

    bool face(const std::vector<int>& dense_exps) const {
        std::vector<int> support;
        for (int vert = 0; vert < static_cast<int>(dense_exps.size()); ++vert)
            if (dense_exps[vert] > 0)
                support.push_back(vert);
        if (support.empty())
            return true;
        for (const auto& facet : d_.facets) {
            std::vector<int> s = facet;
            std::sort(s.begin(), s.end());
            if (std::includes(s.begin(), s.end(), support.begin(), support.end()))
                return true;
        }
        return false;
    }

    Integer base_determinant() const {
        std::vector<int> facet = d_.facets[d_.base_facet_index()];
        std::sort(facet.begin(), facet.end());
        return det_cofactor_lambda(facet);
    }

    Integer det_cofactor_lambda(const std::vector<int>& cols) const {
        std::vector<std::vector<Integer>> m(d_.m, std::vector<Integer>(d_.m));
        for (int col = 0; col < d_.m; ++col)
            for (int row = 0; row < d_.m; ++row)
                m[row][col] = d_.lambda[cols[col]][row];
        auto det = [&](auto&& self, std::vector<std::vector<Integer>> a) -> Integer {
            const int n = static_cast<int>(a.size());
            if (n == 1)
                return a[0][0];
            Integer out = 0;
            for (int j = 0; j < n; ++j) {
                if (a[0][j] == 0)
                    continue;
                std::vector<std::vector<Integer>> minor(n - 1, std::vector<Integer>(n - 1));
                for (int i = 1; i < n; ++i)
                    for (int k = 0, col = 0; k < n; ++k)
                        if (k != j)
                            minor[i - 1][col++] = a[i][k];
                const Integer term = a[0][j] * self(self, std::move(minor));
                out += (j % 2 == 0) ? term : -term;
            }
            return out;
        };
        return det(det, std::move(m));
    }

    QuasitoricData d_;
    std::map<std::vector<int>, Rational> eval_;
};

}  // namespace qtoric::testoracle
