#include "qtoric/integer.hpp"

#include "qtoric/error.hpp"

namespace qtoric {

Integer binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    Integer num = 1, den = 1;
    for (int i = 1; i <= k; ++i) {
        num *= n - k + i;
        den *= i;
    }
    return num / den;
}

}  // namespace qtoric
