#pragma once

#include "mac/degree_spec.hpp"
#include "mac/integers.hpp"
#include "mac/quad_field.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace mac {

/// Characteristic data of the general mixed Moore bound, held exactly in
/// the quadratic extension Q(sqrt(v)) with v = (d-1)^2 + 4z.
struct MooreParams {
    long d = 0;   // total degree r + z
    Int v = 0;    // discriminant (d-1)^2 + 4z
    QuadExt u1, u2;  // roots (d-1 -/+ sqrt(v)) / 2
    QuadExt A, B;    // series coefficients; A + B = 1

    static MooreParams from_degrees(long r, long z);
};

/// General mixed Moore bound M(z, r, k), evaluated by the integer layer
/// recurrence N_0 = 1, N_1 = r + z, N_i = (d-1) N_{i-1} + z N_{i-2} and
/// cross-checked against the closed form.  Rejects r + z = 0.
Int moore_mixed_general(long r, long z, long k);

/// Recurrence path only (no closed-form check).
Int moore_mixed_general_recurrence(long r, long z, long k);

/// Closed form A (u1^{k+1}-1)/(u1-1) + B (u2^{k+1}-1)/(u2-1), evaluated
/// without division as A * sum u1^i + B * sum u2^i in Q(sqrt(v)).  The
/// value is computed as the limit expression when v = 0 (r = 1, z = 0),
/// where the coefficients A and B individually blow up.
Int moore_mixed_general_closed_form(long r, long z, long k);

/// Moore bound for mixed Abelian Cayley graphs with undetermined
/// generator orders.  Evaluates both closed forms and asserts equality.
Int mac_bound(long r_alpha, long r_omega, long z_omega, long k);

/// sum_{i=0}^{k} C(r_w + z_w + i, i) C(r_a + r_w, k - i)
Int mac_bound_generating_form(long r_alpha, long r_omega, long z_omega, long k);

/// sum_{i<=r_w} C(r_w, i) 2^i sum_{j<=r_a} C(r_a, j) C(k + z_w - j, i + z_w)
Int mac_bound_combinatorial_form(long r_alpha, long r_omega, long z_omega, long k);

/// Order-aware improved bound: the nested sum over involution usage,
/// finite-odd-order pair boxes (multinomials over compositions, two ball
/// colors), finite-order directed boxes, and the final stars-and-bars
/// binomial distributing the leftover steps.
Int mac_bound_improved(const DegreeSpec& spec);

/// Labeled summands of the improved bound, for --explain style reports:
/// the folded weight table of the finite-order classes, then one term per
/// number of active undetermined pairs.
struct BoundTerm {
    std::string label;
    Int value;
};
std::vector<BoundTerm> mac_bound_improved_terms(const DegreeSpec& spec);

/// Specialization of the improved bound when the only finite-order pairs
/// have order 5 (trinomial form).
Int mac_bound_order5(long r_alpha, long r_2, long r_omega, long z_omega, long k);

struct OracleOptions {
    std::uint64_t max_states = 20'000'000;  // visited-state cap
};

/// Independent verifier of the improved bound: BFS ball count in the
/// freest group consistent with the degree spec,
///   Z_2^{r_a} x prod_s Z_{2s+1}^{r_s} x Z^{r_w} x prod_t Z_{t+1}^{z_t} x Z^{z_w},
/// where pair coordinates move both ways and directed coordinates only
/// forward.  Throws std::length_error when the cap is exceeded.
Int moore_count_oracle(const DegreeSpec& spec, const OracleOptions& opts = {});

}  // namespace mac
