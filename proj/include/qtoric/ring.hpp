#pragma once
#include "qtoric/integer.hpp"

namespace qtoric {

// Additive and multiplicative units of a coefficient ring, for the series
// templates. Specialized per ring next to the ring's definition.
template <class R>
struct RingTraits;

template <>
struct RingTraits<Integer> {
    static Integer zero() { return 0; }
    static Integer one() { return 1; }
};

}  // namespace qtoric
