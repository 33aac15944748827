#pragma once

#include "mac/degree_spec.hpp"
#include "mac/lattice.hpp"

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace mac {

enum class GenKind { involution, pair, directed };

/// Generating set of a mixed Cayley graph: involutions give one
/// undirected edge per vertex, pairs are stored as one representative per
/// {g, -g} class and give two, directed generators give one arc.
struct MixedGenSet {
    std::vector<GroupElement> involutions;
    std::vector<GroupElement> pairs;
    std::vector<GroupElement> directed;
};

struct MixedCayleyGraph {
    AbelianGroup group;
    MixedGenSet gens;
    std::int64_t order = 1;
    long undirected_degree = 0;  // r = |involutions| + 2 |pairs|
    long directed_degree = 0;    // z = |directed|

    std::int64_t index_of(const GroupElement& g) const;
    GroupElement element_at(std::int64_t index) const;

private:
    std::vector<std::int64_t> strides_;
    friend MixedCayleyGraph build(const AbelianGroup&, const MixedGenSet&);
};

/// Validates every MixedGenSet invariant, normalizes pair representatives
/// to min(g, -g), and certifies by BFS that the set generates the group.
/// Throws std::invalid_argument on violations, including non-generation.
MixedCayleyGraph build(const AbelianGroup& group, const MixedGenSet& gens);

/// Classify a raw generating set: undirected entries contribute {g, -g},
/// directed entries contribute g alone.  Zeros are dropped, order-2
/// elements become involutions, directed elements whose inverse is also
/// present merge into a pair, and duplicates collapse.
MixedGenSet make_gen_set(const AbelianGroup& group,
                         const std::vector<GroupElement>& undirected,
                         const std::vector<GroupElement>& directed);

struct BfsResult {
    std::vector<std::int64_t> layer_sizes;  // layer_sizes[i] = #vertices at distance i
    long eccentricity = 0;
    std::int64_t reached = 0;
};

/// Single-source BFS following edges both ways and arcs forward.
BfsResult bfs_layers(const MixedCayleyGraph& G, std::int64_t source = 0);

/// Max distance from vertex 0; equals the diameter by vertex-transitivity.
long diameter(const MixedCayleyGraph& G);

/// Layer sizes from vertex 0; sizes sum to the order.
std::vector<std::int64_t> distance_profile(const MixedCayleyGraph& G);

/// Cayley graph of the product group with generators (S1, 0) u (0, S2);
/// the group is re-canonicalized through its invariant factors.
MixedCayleyGraph cartesian_product(const MixedCayleyGraph& G1, const MixedCayleyGraph& G2);

/// Quotient by the order-2 subgroup {0, b} for an involution b of the
/// generating set; halves the order, remaining generators projected.
MixedCayleyGraph contract_involution(const MixedCayleyGraph& G, const GroupElement& b);

/// Cayley graph of Z^n / Z^n M on the unit-vector generators; roles[i]
/// says whether e_i enters as an undirected pair or a directed generator
/// (all pairs when roles is empty).
MixedCayleyGraph graph_from_matrix(const IntMatrix& M, const std::vector<GenKind>& roles = {});

struct StretchResult {
    MixedCayleyGraph base;
    MixedCayleyGraph stretched;
    long base_diameter = 0;
    long stretched_diameter = 0;
    bool diameter_plus_one = false;  // reported, not asserted
};

/// Row-stretching construction: multiplies row `row` of M by alpha and
/// adds the nonzero multiples of that row as extra (undirected)
/// generators.  Reports whether the stretched diameter equals D + 1.
StretchResult stretch_row(const IntMatrix& M, Eigen::Index row, long alpha,
                          const std::vector<GenKind>& roles = {});

/// Degree profile induced by the exact orders of the generators: order-q
/// pairs map to r_{(q-1)/2} (odd q) or the dominating class r_{q/2}
/// (even q) when q <= 2k+1, else to r_omega; directed generators of order
/// q <= k+1 map to z_{q-1}, else to z_omega.
DegreeSpec induced_degree_spec(const MixedCayleyGraph& G, long k);

/// Line-oriented description: `group Z4xZ12`, then one `inv`/`pair`/`dir`
/// line per generator with comma-separated coordinates.
void write_graph(std::ostream& out, const MixedCayleyGraph& G);
MixedCayleyGraph read_graph(std::istream& in);

/// DOT export, restricted to order <= 200.
void write_dot(std::ostream& out, const MixedCayleyGraph& G);

}  // namespace mac
