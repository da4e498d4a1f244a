#pragma once
#include <boost/multiprecision/cpp_int.hpp>

namespace qtoric {

// All coefficients in this library are exact arbitrary-precision integers.
using Integer = boost::multiprecision::cpp_int;

Integer binomial(int n, int k);

}  // namespace qtoric
