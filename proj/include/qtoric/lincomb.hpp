#pragma once
#include <map>
#include <utility>

#include "qtoric/integer.hpp"

namespace qtoric {

// A finitely supported Z-linear combination of basis keys. Zero coefficients
// are pruned on every mutation, so term-map equality is canonical equality.
// The Tag parameter keeps elements of different bases distinct types.
template <class Key, class Tag>
class LinComb {
  public:
    using TermMap = std::map<Key, Integer>;

    LinComb() = default;

    static LinComb term(Key k, Integer c = 1) {
        LinComb e;
        e.add_term(std::move(k), std::move(c));
        return e;
    }

    const TermMap& terms() const& { return terms_; }
    TermMap terms() && { return std::move(terms_); }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    Integer coeff(const Key& k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? Integer(0) : it->second;
    }

    void add_term(Key k, Integer c) {
        if (c == 0)
            return;
        auto [it, inserted] = terms_.try_emplace(std::move(k), std::move(c));
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    LinComb& operator+=(const LinComb& other) {
        for (const auto& [k, c] : other.terms_)
            add_term(k, c);
        return *this;
    }
    LinComb& operator-=(const LinComb& other) {
        for (const auto& [k, c] : other.terms_)
            add_term(k, -c);
        return *this;
    }
    LinComb& operator*=(const Integer& s) {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [k, c] : terms_)
            c *= s;
        return *this;
    }

    friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
    friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
    friend LinComb operator*(LinComb a, const Integer& s) { return a *= s; }
    friend LinComb operator*(const Integer& s, LinComb a) { return a *= s; }
    friend LinComb operator-(LinComb a) { return a *= Integer(-1); }

    bool operator==(const LinComb& other) const = default;

    // Bilinear product over a key-level multiplication.
    template <class KeyMul>
    static LinComb product(const LinComb& a, const LinComb& b, KeyMul&& mul) {
        LinComb out;
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_)
                out.add_term(mul(ka, kb), ca * cb);
        return out;
    }

  private:
    TermMap terms_;
};

template <class Key, class Tag>
bool is_zero(const LinComb<Key, Tag>& e) {
    return e.is_zero();
}

inline bool is_zero(const Integer& n) {
    return n == 0;
}

}  // namespace qtoric
