#pragma once

#include "mac/integers.hpp"

#include <stdexcept>

namespace mac {

/// Element a + b*sqrt(v) of the quadratic extension Q[x]/(x^2 - v),
/// with rational a, b and a fixed nonnegative integer v.  Arithmetic is
/// purely symbolic, so perfect-square v (where the ring is not a field)
/// is handled exactly as well.
struct QuadExt {
    Rat a;
    Rat b;
    Int v;

    QuadExt() : a(0), b(0), v(0) {}
    QuadExt(Rat a_, Rat b_, Int v_) : a(std::move(a_)), b(std::move(b_)), v(std::move(v_)) {}

    bool is_rational() const { return b == 0; }
    bool is_zero() const { return a == 0 && b == 0; }
};

inline void check_same_field(const QuadExt& x, const QuadExt& y) {
    if (x.v != y.v) throw std::invalid_argument("QuadExt: mismatched radicands");
}

inline QuadExt operator+(const QuadExt& x, const QuadExt& y) {
    check_same_field(x, y);
    return {x.a + y.a, x.b + y.b, x.v};
}

inline QuadExt operator-(const QuadExt& x, const QuadExt& y) {
    check_same_field(x, y);
    return {x.a - y.a, x.b - y.b, x.v};
}

inline QuadExt operator*(const QuadExt& x, const QuadExt& y) {
    check_same_field(x, y);
    return {x.a * y.a + x.b * y.b * Rat(x.v), x.a * y.b + x.b * y.a, x.v};
}

inline QuadExt operator*(const Rat& c, const QuadExt& x) { return {c * x.a, c * x.b, x.v}; }

inline bool operator==(const QuadExt& x, const QuadExt& y) {
    return x.v == y.v && x.a == y.a && x.b == y.b;
}

/// Sum of powers x^0 + x^1 + ... + x^e (geometric series without division).
inline QuadExt power_sum(const QuadExt& x, long e) {
    QuadExt acc(1, 0, x.v);
    QuadExt pw(1, 0, x.v);
    for (long i = 1; i <= e; ++i) {
        pw = pw * x;
        acc = acc + pw;
    }
    return acc;
}

}  // namespace mac
