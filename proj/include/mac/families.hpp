#pragma once

#include "mac/cayley.hpp"

namespace mac {

/// A family graph together with the closed-form order and diameter it is
/// claimed to realize (certified by BFS in the tests, not assumed).
struct FamilyGraph {
    MixedCayleyGraph graph;
    long claimed_diameter = 0;
    std::int64_t claimed_order = 0;
};

/// Circ(2k^2+2k+1; +-k, +-(k+1)), the degree-4 circulant attaining the
/// Moore bound for (r_a, r_w, z_w) = (0, 2, 0).  k >= 1.
FamilyGraph base_degree4_family(long k);

/// Circ(4k^2; +-1, +-(2k-1), 2k^2), the extremal family for
/// (r_a, r_w, z_w) = (1, 2, 0).  k >= 2.
FamilyGraph diamond_family(long k);

/// The (r_a, r_w, z_w) = (0, 1, 1) base family of order
/// floor((2k+3)^2 / 6), split by k mod 3.  k >= 1.
FamilyGraph t_tile_base_family(long k);

/// The (r_a, r_w, z_w) = (1, 1, 1) extremal family: N = 10 at k = 2, then
/// 12x^2 / 12x^2+8x / 12x^2+16x+4 by residue of k mod 3.  k >= 2.
FamilyGraph t_family(long k);

FamilyGraph family_by_name(const std::string& name, long k);

}  // namespace mac
