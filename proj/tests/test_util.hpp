#pragma once
#include <random>

#include "qtoric/bfk.hpp"
#include "qtoric/nsymm.hpp"

namespace qtoric::testutil {

inline Composition random_composition(std::mt19937_64& rng, int max_weight) {
    const int n = std::uniform_int_distribution<int>(0, max_weight)(rng);
    if (n == 0)
        return Composition();
    const std::uint64_t mask =
        std::uniform_int_distribution<std::uint64_t>(0, (std::uint64_t{1} << (n - 1)) - 1)(rng);
    return Composition::from_split_mask(n, mask);
}

inline NSymmElement random_nsymm(std::mt19937_64& rng, int max_weight, int terms) {
    NSymmElement out;
    std::uniform_int_distribution<int> coeff(-9, 9);
    for (int i = 0; i < terms; ++i)
        out.add_term(random_composition(rng, max_weight), coeff(rng));
    return out;
}

// Independent combinatorial oracle for the generator coproduct:
// Delta(Z_n) = sum_{i=0}^{n} sum_{beta |= n-i} C(i+1, len(beta)) Z_i (x) Z_beta,
// built from nothing but composition enumeration and binomials.
inline TensorElement delta_generator_oracle(int n) {
    TensorElement out;
    for (int i = 0; i <= n; ++i) {
        const Composition left = i == 0 ? Composition() : Composition({i});
        for (const Composition& beta : compositions_of(n - i))
            out.add_term({left, beta}, binomial(i + 1, beta.length()));
    }
    return out;
}

// m(S (x) id) Delta applied to a, which must equal counit(a) * 1.
inline NSymmElement antipode_convolution(const NSymmElement& a, int order) {
    NSymmElement out;
    for (const auto& [key, c] : delta_bfk(a, order).terms())
        out += (antipode(nsymm_word(key.first), order) * nsymm_word(key.second)) * c;
    return out;
}

}  // namespace qtoric::testutil
