#pragma once
#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace qtoric {

// A composition (ordered partition): a finite sequence of positive integers.
// The empty composition is the unique composition of 0.
//
// Compositions of n are in bijection with subsets of the n-1 possible split
// positions: bit j of the mask is set iff there is a cut after position j+1.
// The canonical order is (weight, mask) ascending; this is the order used for
// enumeration, term maps and all printed output.
class Composition {
  public:
    Composition() = default;
    explicit Composition(std::vector<int> parts);

    static Composition from_split_mask(int n, std::uint64_t mask);

    const std::vector<int>& parts() const { return parts_; }
    int weight() const { return weight_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    std::uint64_t split_mask() const;

    Composition concat(const Composition& other) const;
    // Splits into the first i parts and the rest, 0 <= i <= length().
    std::pair<Composition, Composition> split_at(int i) const;

    bool operator==(const Composition& other) const { return parts_ == other.parts_; }
    std::strong_ordering operator<=>(const Composition& other) const;

    // Comma-joined parts, e.g. "2,1"; the empty composition prints as "()".
    std::string str() const;

  private:
    std::vector<int> parts_;
    int weight_ = 0;
};

// All 2^{n-1} compositions of n (n >= 1) in canonical order; for n = 0 the
// single empty composition. Throws ArgumentError for n < 0.
std::vector<Composition> compositions_of(int n);

}  // namespace qtoric
