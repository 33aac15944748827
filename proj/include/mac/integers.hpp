#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <vector>

namespace mac {

// All bound arithmetic is exact; no floating point anywhere in the core.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Binomial coefficient with the balls-in-boxes convention:
/// C(n, k) = 0 whenever k < 0, n < 0, or n < k.
Int binomial(const Int& n, long k);

/// Multinomial n! / (parts[0]! ... parts[m-1]! (n - sum)!).
/// Zero when the parts do not fit into n.
Int multinomial(long n, const std::vector<long>& parts);

Int pow2(long e);

}  // namespace mac
