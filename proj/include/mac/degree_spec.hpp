#pragma once

#include <map>
#include <string>

namespace mac {

/// Full degree profile of a mixed Abelian Cayley graph together with the
/// diameter k.  Undirected generators split into involutions (r_alpha),
/// +/- pairs of known odd order 2s+1 (r_odd[s]), and pairs of undetermined
/// order > 2k+1 (r_omega).  Directed generators split into elements of
/// known order t+1 (z_ord[t], t >= 2) and undetermined order > k+1 (z_omega).
struct DegreeSpec {
    long r_alpha = 0;
    std::map<long, long> r_odd;   // s -> r_s, s in [1, k]
    long r_omega = 0;
    std::map<long, long> z_ord;   // t -> z_t, t in [2, k]
    long z_omega = 0;
    long k = 1;

    /// r = r_alpha + 2*sum r_s + 2*r_omega
    long undirected_degree() const;
    /// z = sum z_t + z_omega
    long directed_degree() const;

    /// Throws std::invalid_argument on any violated invariant
    /// (negative counts, s or t out of range, t = 1, k < 1).
    void validate() const;
};

bool operator==(const DegreeSpec& a, const DegreeSpec& b);

/// Canonical textual form, e.g. "r_a=1 r[2]=1 r_w=2 z[3]=2 z_w=0 k=7".
/// Keys are optional and order-insensitive; unknown keys are rejected.
DegreeSpec parse_degree_spec(const std::string& text);
std::string format_degree_spec(const DegreeSpec& spec);

}  // namespace mac
