#include "mac/integers.hpp"

#include <stdexcept>

namespace mac {

Int binomial(const Int& n, long k) {
    if (k < 0 || n < 0 || n < k) return 0;
    // C(n, k) = C(n, n-k); pick the short side when n fits a long.
    if (n <= static_cast<long>(1 << 30)) {
        const long nn = static_cast<long>(n);
        if (nn - k < k) k = nn - k;
    }
    Int num = 1;
    for (long i = 1; i <= k; ++i) {
        num *= n - (k - i);
        num /= i;  // exact: C(n-k+i, i) is an integer
    }
    return num;
}

Int multinomial(long n, const std::vector<long>& parts) {
    long used = 0;
    for (long p : parts) {
        if (p < 0) return 0;
        used += p;
    }
    if (used > n) return 0;
    Int result = 1;
    long remaining = n;
    for (long p : parts) {
        result *= binomial(remaining, p);
        remaining -= p;
    }
    return result;
}

Int pow2(long e) {
    if (e < 0) throw std::invalid_argument("pow2: negative exponent");
    return Int(1) << e;
}

}  // namespace mac
