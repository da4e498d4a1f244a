#include "qtoric/composition.hpp"

#include <numeric>
#include <sstream>

#include "qtoric/error.hpp"

namespace qtoric {

namespace {
// The split-mask encoding needs one bit per interior position.
constexpr int kMaxWeight = 64;
}  // namespace

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_) {
        if (p < 1)
            throw ArgumentError("composition parts must be >= 1");
    }
    weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
    if (weight_ > kMaxWeight)
        throw ArgumentError("composition weight exceeds supported bound (64)");
}

Composition Composition::from_split_mask(int n, std::uint64_t mask) {
    if (n < 0)
        throw ArgumentError("composition weight must be >= 0");
    if (n == 0)
        return Composition();
    std::vector<int> parts;
    int prev = 0;
    for (int cut = 1; cut < n; ++cut) {
        if (mask & (std::uint64_t{1} << (cut - 1))) {
            parts.push_back(cut - prev);
            prev = cut;
        }
    }
    parts.push_back(n - prev);
    return Composition(std::move(parts));
}

std::uint64_t Composition::split_mask() const {
    std::uint64_t mask = 0;
    int cum = 0;
    for (std::size_t i = 0; i + 1 < parts_.size(); ++i) {
        cum += parts_[i];
        mask |= std::uint64_t{1} << (cum - 1);
    }
    return mask;
}

Composition Composition::concat(const Composition& other) const {
    std::vector<int> parts = parts_;
    parts.insert(parts.end(), other.parts_.begin(), other.parts_.end());
    return Composition(std::move(parts));
}

std::pair<Composition, Composition> Composition::split_at(int i) const {
    if (i < 0 || i > length())
        throw ArgumentError("split position out of range");
    std::vector<int> head(parts_.begin(), parts_.begin() + i);
    std::vector<int> tail(parts_.begin() + i, parts_.end());
    return {Composition(std::move(head)), Composition(std::move(tail))};
}

std::strong_ordering Composition::operator<=>(const Composition& other) const {
    if (auto c = weight_ <=> other.weight_; c != 0)
        return c;
    return split_mask() <=> other.split_mask();
}

std::string Composition::str() const {
    if (parts_.empty())
        return "()";
    std::ostringstream os;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            os << ',';
        os << parts_[i];
    }
    return os.str();
}

std::vector<Composition> compositions_of(int n) {
    if (n < 0)
        throw ArgumentError("compositions_of: n must be >= 0");
    if (n == 0)
        return {Composition()};
    if (n > 30)
        throw ArgumentError("compositions_of: enumeration limited to n <= 30");
    std::vector<Composition> out;
    const std::uint64_t count = std::uint64_t{1} << (n - 1);
    out.reserve(count);
    for (std::uint64_t mask = 0; mask < count; ++mask)
        out.push_back(Composition::from_split_mask(n, mask));
    return out;
}

}  // namespace qtoric
