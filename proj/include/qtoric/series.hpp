#pragma once
#include <algorithm>
#include <map>

#include "qtoric/error.hpp"
#include "qtoric/ring.hpp"

namespace qtoric {

// Truncated power series in one central variable over a (possibly
// noncommutative) coefficient ring R. Exponents 0..order() are known;
// anything beyond is semantically unknown and silently dropped.
// Arithmetic results carry the minimum of the operands' orders.
template <class R>
class Series {
  public:
    explicit Series(int order) : order_(order) {
        if (order < 0)
            throw ArgumentError("series truncation order must be >= 0");
    }

    static Series one(int order) {
        Series s(order);
        s.set_coeff(0, RingTraits<R>::one());
        return s;
    }
    static Series monomial(int exponent, R c, int order) {
        Series s(order);
        s.set_coeff(exponent, std::move(c));
        return s;
    }

    int order() const { return order_; }
    const std::map<int, R>& coeffs() const& { return coeffs_; }
    std::map<int, R> coeffs() && { return std::move(coeffs_); }
    bool is_zero_series() const { return coeffs_.empty(); }

    R coeff(int exponent) const {
        auto it = coeffs_.find(exponent);
        return it == coeffs_.end() ? RingTraits<R>::zero() : it->second;
    }

    void set_coeff(int exponent, R c) {
        if (exponent < 0)
            throw ArgumentError("power series exponents must be >= 0");
        if (exponent > order_ || is_zero(c)) {
            coeffs_.erase(exponent);
            return;
        }
        coeffs_.insert_or_assign(exponent, std::move(c));
    }

    void add_coeff(int exponent, const R& c) {
        if (exponent < 0)
            throw ArgumentError("power series exponents must be >= 0");
        if (exponent > order_ || is_zero(c))
            return;
        auto it = coeffs_.find(exponent);
        if (it == coeffs_.end()) {
            coeffs_.emplace(exponent, c);
            return;
        }
        it->second = it->second + c;
        if (is_zero(it->second))
            coeffs_.erase(it);
    }

    friend Series operator+(const Series& a, const Series& b) {
        Series out(std::min(a.order_, b.order_));
        for (const auto& [e, c] : a.coeffs_)
            out.add_coeff_trunc(e, c);
        for (const auto& [e, c] : b.coeffs_)
            out.add_coeff_trunc(e, c);
        return out;
    }

    friend Series operator-(const Series& a, const Series& b) {
        Series out(std::min(a.order_, b.order_));
        for (const auto& [e, c] : a.coeffs_)
            out.add_coeff_trunc(e, c);
        for (const auto& [e, c] : b.coeffs_)
            out.add_coeff_trunc(e, -c);
        return out;
    }

    // Cauchy product; coefficients multiply in the written order a*b.
    friend Series operator*(const Series& a, const Series& b) {
        Series out(std::min(a.order_, b.order_));
        for (const auto& [ea, ca] : a.coeffs_) {
            if (ea > out.order_)
                break;
            for (const auto& [eb, cb] : b.coeffs_) {
                if (ea + eb > out.order_)
                    break;
                out.add_coeff_trunc(ea + eb, ca * cb);
            }
        }
        return out;
    }

    Series pow(int k) const {
        if (k < 0)
            throw ArgumentError("series power must be >= 0");
        Series out = one(order_);
        for (int i = 0; i < k; ++i)
            out = out * *this;
        return out;
    }

    bool operator==(const Series& other) const = default;

  private:
    void add_coeff_trunc(int exponent, const R& c) {
        if (exponent > order_ || is_zero(c))
            return;
        auto it = coeffs_.find(exponent);
        if (it == coeffs_.end()) {
            coeffs_.emplace(exponent, c);
            return;
        }
        it->second = it->second + c;
        if (is_zero(it->second))
            coeffs_.erase(it);
    }

    int order_;
    std::map<int, R> coeffs_;
};

template <class R>
bool is_zero(const Series<R>& s) {
    return s.is_zero_series();
}

// f composed with g, i.e. sum_k f_k g^k with the coefficients of f on the
// left. g must have zero constant term.
template <class R>
Series<R> substitute(const Series<R>& f, const Series<R>& g) {
    if (!is_zero(g.coeff(0)))
        throw ArgumentError("substitution requires zero constant term");
    const int order = std::min(f.order(), g.order());
    Series<R> acc(order);
    for (int e = order; e >= 0; --e) {
        acc = acc * g;
        acc.add_coeff(0, f.coeff(e));
    }
    return acc;
}

// Finite Laurent series over R in a central variable; pole depth is bounded
// by construction and attempting to write below it is an argument error.
template <class R>
class LaurentSeries {
  public:
    explicit LaurentSeries(int pole_bound) : pole_bound_(pole_bound) {
        if (pole_bound < 0)
            throw ArgumentError("pole bound must be >= 0");
    }

    int pole_bound() const { return pole_bound_; }
    const std::map<int, R>& coeffs() const& { return coeffs_; }
    std::map<int, R> coeffs() && { return std::move(coeffs_); }

    void set_coeff(int exponent, R c) {
        if (exponent < -pole_bound_)
            throw ArgumentError("pole deeper than the stated bound");
        if (is_zero(c)) {
            coeffs_.erase(exponent);
            return;
        }
        coeffs_.insert_or_assign(exponent, std::move(c));
    }

    const R* find(int exponent) const {
        auto it = coeffs_.find(exponent);
        return it == coeffs_.end() ? nullptr : &it->second;
    }

    friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
        LaurentSeries out(std::max(a.pole_bound_, b.pole_bound_));
        out.coeffs_ = a.coeffs_;
        for (const auto& [e, c] : b.coeffs_)
            out.accumulate(e, c);
        return out;
    }

    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
        LaurentSeries out(a.pole_bound_ + b.pole_bound_);
        for (const auto& [ea, ca] : a.coeffs_)
            for (const auto& [eb, cb] : b.coeffs_)
                out.accumulate(ea + eb, ca * cb);
        return out;
    }

    bool operator==(const LaurentSeries& other) const = default;

  private:
    void accumulate(int exponent, const R& c) {
        if (is_zero(c))
            return;
        auto it = coeffs_.find(exponent);
        if (it == coeffs_.end()) {
            coeffs_.emplace(exponent, c);
            return;
        }
        it->second = it->second + c;
        if (is_zero(it->second))
            coeffs_.erase(it);
    }

    int pole_bound_;
    std::map<int, R> coeffs_;
};

// Coefficient of exponent -1.
template <class R>
R residue(const LaurentSeries<R>& f) {
    const R* p = f.find(-1);
    return p ? *p : RingTraits<R>::zero();
}

}  // namespace qtoric
