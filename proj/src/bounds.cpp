#include "mac/bounds.hpp"

#include <functional>
#include <map>
#include <stdexcept>
#include <unordered_set>
#include <utility>
#include <vector>

namespace mac {

MooreParams MooreParams::from_degrees(long r, long z) {
    if (r < 0 || z < 0 || r + z < 1)
        throw std::invalid_argument("MooreParams: need r, z >= 0 and r + z >= 1");
    MooreParams p;
    p.d = r + z;
    p.v = Int(p.d - 1) * (p.d - 1) + 4 * Int(z);
    const Rat half(1, 2);
    p.u1 = QuadExt(Rat(p.d - 1) * half, -half, p.v);
    p.u2 = QuadExt(Rat(p.d - 1) * half, half, p.v);
    if (p.v != 0) {
        // A = (sqrt(v) - (d+1)) / (2 sqrt(v)) = 1/2 - (d+1)/(2v) sqrt(v)
        const Rat c = Rat(p.d + 1) / Rat(2 * p.v);
        p.A = QuadExt(half, -c, p.v);
        p.B = QuadExt(half, c, p.v);
    }
    return p;
}

Int moore_mixed_general_recurrence(long r, long z, long k) {
    if (r < 0 || z < 0 || r + z < 1)
        throw std::invalid_argument("moore_mixed_general: need r + z >= 1");
    if (k < 1) throw std::invalid_argument("moore_mixed_general: k must be positive");
    const long d = r + z;
    Int prev2 = 1;       // N_0
    Int prev1 = d;       // N_1
    Int total = prev2 + prev1;
    for (long i = 2; i <= k; ++i) {
        Int next = Int(d - 1) * prev1 + Int(z) * prev2;
        total += next;
        prev2 = std::move(prev1);
        prev1 = std::move(next);
    }
    return total;
}

Int moore_mixed_general_closed_form(long r, long z, long k) {
    const MooreParams p = MooreParams::from_degrees(r, z);
    const QuadExt s1 = power_sum(p.u1, k);
    const QuadExt s2 = power_sum(p.u2, k);
    QuadExt value(0, 0, p.v);
    if (p.v != 0) {
        value = p.A * s1 + p.B * s2;
    } else {
        // v = 0 only for (r, z) = (1, 0).  A and B are singular there; the
        // limit of A s1 + B s2 as sqrt(v) -> 0 is
        //   (s1 + s2)/2 + (d+1)/2 * (s2 - s1)/sqrt(v),
        // and (s2 - s1)/sqrt(v) is exactly the b-coordinate difference.
        value = QuadExt((s1.a + s2.a) / 2 + Rat(p.d + 1) / 2 * (s2.b - s1.b), 0, p.v);
    }
    if (!value.is_rational())
        throw std::logic_error("moore closed form: irrational part did not cancel");
    const Rat q = value.a;
    if (boost::multiprecision::denominator(q) != 1)
        throw std::logic_error("moore closed form: non-integral value");
    return boost::multiprecision::numerator(q);
}

Int moore_mixed_general(long r, long z, long k) {
    const Int by_recurrence = moore_mixed_general_recurrence(r, z, k);
    const Int by_closed_form = moore_mixed_general_closed_form(r, z, k);
    if (by_recurrence != by_closed_form)
        throw std::logic_error("moore_mixed_general: recurrence and closed form disagree");
    return by_recurrence;
}

Int mac_bound_generating_form(long r_alpha, long r_omega, long z_omega, long k) {
    Int total = 0;
    for (long i = 0; i <= k; ++i)
        total += binomial(r_omega + z_omega + i, i) * binomial(r_alpha + r_omega, k - i);
    return total;
}

Int mac_bound_combinatorial_form(long r_alpha, long r_omega, long z_omega, long k) {
    Int total = 0;
    for (long i = 0; i <= r_omega; ++i) {
        Int inner = 0;
        for (long j = 0; j <= r_alpha; ++j)
            inner += binomial(r_alpha, j) * binomial(k + z_omega - j, i + z_omega);
        total += binomial(r_omega, i) * pow2(i) * inner;
    }
    return total;
}

Int mac_bound(long r_alpha, long r_omega, long z_omega, long k) {
    if (r_alpha < 0 || r_omega < 0 || z_omega < 0 || k < 1)
        throw std::invalid_argument("mac_bound: bad arguments");
    const Int a = mac_bound_generating_form(r_alpha, r_omega, z_omega, k);
    const Int b = mac_bound_combinatorial_form(r_alpha, r_omega, z_omega, k);
    if (a != b) throw std::logic_error("mac_bound: the two closed forms disagree");
    return a;
}

namespace {

// Weight-indexed coefficient table of one finite-order generator class:
// weights[w] accumulates the multinomial terms whose boxes hold w balls
// in total.  Enumerated literally over compositions sigma_1 + ... +
// sigma_h = i_h <= count.
std::vector<Int> class_weight_table(long count, long max_balls, bool two_colors, long k) {
    std::vector<Int> weights(k + 1);
    std::vector<long> sigma(max_balls, 0);
    // Per-call binomial cache for the multinomial factors.
    std::map<std::pair<long, long>, Int> choose_cache;
    auto choose = [&](long n, long m) -> const Int& {
        auto [it, inserted] = choose_cache.try_emplace({n, m});
        if (inserted) it->second = binomial(n, m);
        return it->second;
    };
    std::function<void(long, long, long, Int)> rec = [&](long level, long used_boxes,
                                                         long weight, Int coeff) {
        if (level == max_balls) {
            if (two_colors) coeff *= pow2(used_boxes);
            weights[weight] += coeff;
            return;
        }
        const long balls_per_box = level + 1;
        for (long s = 0; used_boxes + s <= count; ++s) {
            const long w = weight + s * balls_per_box;
            if (w > k) break;
            rec(level + 1, used_boxes + s, w, coeff * choose(count - used_boxes, s));
        }
    };
    rec(0, 0, 0, 1);
    return weights;
}

void convolve_bounded(std::vector<Int>& acc, const std::vector<Int>& term, long k) {
    std::vector<Int> next(k + 1);
    for (long i = 0; i <= k; ++i) {
        if (acc[i] == 0) continue;
        for (long j = 0; i + j <= k; ++j) {
            if (term[j] == 0) continue;
            next[i + j] += acc[i] * term[j];
        }
    }
    acc = std::move(next);
}

// Fold the involution part and every finite-order class into a single
// weight table: acc[w] = number of box fillings using w of the k steps.
std::vector<Int> folded_weight_table(const DegreeSpec& spec) {
    const long k = spec.k;
    std::vector<Int> acc(k + 1);
    acc[0] = 1;
    if (spec.r_alpha > 0)
        convolve_bounded(acc, class_weight_table(spec.r_alpha, 1, false, k), k);
    for (const auto& [s, count] : spec.r_odd)
        if (count > 0) convolve_bounded(acc, class_weight_table(count, s, true, k), k);
    for (const auto& [t, count] : spec.z_ord)
        if (count > 0) convolve_bounded(acc, class_weight_table(count, t, false, k), k);
    return acc;
}

}  // namespace

Int mac_bound_improved(const DegreeSpec& spec) {
    spec.validate();
    const long k = spec.k;
    const std::vector<Int> acc = folded_weight_table(spec);

    Int total = 0;
    for (long i_omega = 0; i_omega <= spec.r_omega; ++i_omega) {
        const Int outer = binomial(spec.r_omega, i_omega) * pow2(i_omega);
        Int inner = 0;
        for (long w = 0; w <= k; ++w) {
            if (acc[w] == 0) continue;
            inner += acc[w] * binomial(spec.z_omega + k - w, i_omega + spec.z_omega);
        }
        total += outer * inner;
    }
    return total;
}

std::vector<BoundTerm> mac_bound_improved_terms(const DegreeSpec& spec) {
    spec.validate();
    const long k = spec.k;
    const std::vector<Int> acc = folded_weight_table(spec);

    std::vector<BoundTerm> terms;
    for (long w = 0; w <= k; ++w)
        if (acc[w] != 0)
            terms.push_back({"fillings of finite-order boxes with weight " + std::to_string(w),
                             acc[w]});
    for (long i_omega = 0; i_omega <= spec.r_omega; ++i_omega) {
        const Int outer = binomial(spec.r_omega, i_omega) * pow2(i_omega);
        Int inner = 0;
        for (long w = 0; w <= k; ++w)
            inner += acc[w] * binomial(spec.z_omega + k - w, i_omega + spec.z_omega);
        terms.push_back({"term for " + std::to_string(i_omega) + " active undetermined pairs",
                         outer * inner});
    }
    return terms;
}

Int mac_bound_order5(long r_alpha, long r_2, long r_omega, long z_omega, long k) {
    if (r_alpha < 0 || r_2 < 0 || r_omega < 0 || z_omega < 0 || k < 1)
        throw std::invalid_argument("mac_bound_order5: bad arguments");
    if (k < 2 && r_2 > 0)
        throw std::invalid_argument("mac_bound_order5: order-5 pairs need k >= 2");
    Int total = 0;
    for (long i_alpha = 0; i_alpha <= r_alpha; ++i_alpha) {
        for (long i_omega = 0; i_omega <= r_omega; ++i_omega) {
            const Int outer =
                binomial(r_alpha, i_alpha) * binomial(r_omega, i_omega) * pow2(i_omega);
            Int inner = 0;
            for (long s1 = 0; s1 <= r_2; ++s1) {
                for (long s2 = 0; s1 + s2 <= r_2; ++s2) {
                    inner += multinomial(r_2, {s1, s2}) * pow2(s1 + s2) *
                             binomial(z_omega + k - i_alpha - s1 - 2 * s2, i_omega + z_omega);
                }
            }
            total += outer * inner;
        }
    }
    return total;
}

namespace {

struct OracleCoordinate {
    std::uint64_t range;  // number of representable values
    bool wraps;           // finite cyclic order vs truncated copy of Z
    bool backward;        // +/- pair vs forward-only
    std::uint64_t origin;  // encoded value of 0 (offset for signed ranges)
};

}  // namespace

Int moore_count_oracle(const DegreeSpec& spec, const OracleOptions& opts) {
    spec.validate();
    const long k = spec.k;

    std::vector<OracleCoordinate> coords;
    for (long i = 0; i < spec.r_alpha; ++i)
        coords.push_back({2, true, false, 0});
    for (const auto& [s, count] : spec.r_odd)
        for (long i = 0; i < count; ++i)
            coords.push_back({static_cast<std::uint64_t>(2 * s + 1), true, true, 0});
    for (long i = 0; i < spec.r_omega; ++i)
        coords.push_back({static_cast<std::uint64_t>(2 * k + 1), false, true,
                          static_cast<std::uint64_t>(k)});
    for (const auto& [t, count] : spec.z_ord)
        for (long i = 0; i < count; ++i)
            coords.push_back({static_cast<std::uint64_t>(t + 1), true, false, 0});
    for (long i = 0; i < spec.z_omega; ++i)
        coords.push_back({static_cast<std::uint64_t>(k + 1), false, false, 0});

    // The mixed-radix encoding must fit 64 bits.
    long double product = 1;
    for (const auto& c : coords) product *= static_cast<long double>(c.range);
    if (product > 9.2e18) throw std::length_error("moore_count_oracle: state space too large");

    const std::size_t dim = coords.size();
    std::vector<std::uint64_t> strides(dim, 1);
    for (std::size_t i = 1; i < dim; ++i) strides[i] = strides[i - 1] * coords[i - 1].range;

    std::uint64_t start = 0;
    for (std::size_t i = 0; i < dim; ++i) start += coords[i].origin * strides[i];

    std::unordered_set<std::uint64_t> visited;
    visited.reserve(1024);
    visited.insert(start);
    std::vector<std::uint64_t> frontier{start}, next;
    std::vector<std::uint64_t> value(dim);

    for (long depth = 0; depth < k && !frontier.empty(); ++depth) {
        next.clear();
        for (std::uint64_t key : frontier) {
            std::uint64_t rem = key;
            for (std::size_t i = 0; i < dim; ++i) {
                value[i] = rem % coords[i].range;
                rem /= coords[i].range;
            }
            for (std::size_t i = 0; i < dim; ++i) {
                const auto& c = coords[i];
                for (int dir = 0; dir < (c.backward ? 2 : 1); ++dir) {
                    std::uint64_t nv;
                    if (dir == 0) {
                        if (value[i] + 1 == c.range) {
                            if (!c.wraps) continue;
                            nv = 0;
                        } else {
                            nv = value[i] + 1;
                        }
                    } else {
                        if (value[i] == 0) {
                            if (!c.wraps) continue;
                            nv = c.range - 1;
                        } else {
                            nv = value[i] - 1;
                        }
                    }
                    const std::uint64_t nkey = key + (nv - value[i]) * strides[i];
                    if (visited.insert(nkey).second) {
                        if (visited.size() > opts.max_states)
                            throw std::length_error("moore_count_oracle: state cap exceeded");
                        next.push_back(nkey);
                    }
                }
            }
        }
        frontier.swap(next);
    }
    return Int(visited.size());
}

}  // namespace mac
