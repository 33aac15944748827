#pragma once

#include "mac/bounds.hpp"
#include "mac/cayley.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace mac {

struct SearchSpec {
    long r_alpha = 0;
    long r_omega = 0;
    long z_omega = 0;
    long k = 1;
    std::optional<std::int64_t> n_max;  // defaults to mac_bound of the profile
    std::int64_t n_min = 1;
    bool prune = true;
    bool all_witnesses = true;
    int jobs = 1;
    std::int64_t order_cap = 5000;  // desk-scale guard on the starting order

    void validate() const;
    std::int64_t starting_order() const;
};

struct Witness {
    AbelianGroup group;
    MixedGenSet gens;
};

struct SearchResult {
    std::int64_t best_n = 0;  // 0 = no graph found in [n_min, n_max]
    std::vector<Witness> witnesses;
    std::int64_t pruned_groups = 0;
    std::int64_t examined_sets = 0;
};

/// Largest improved bound over all admissible assignments of the spec's
/// generator slots to the order classes realizable in G; 0 when no
/// assignment exists.  The group is rejected when the value is below its
/// order.
Int prune_group(const AbelianGroup& G, const SearchSpec& spec);

/// Streams every admissible generating set with the spec's profile,
/// once up to slot-sorting (and unit-multiplication orbits for cyclic
/// groups).  The consumer returns false to stop early.
void enumerate_gen_sets(const AbelianGroup& G, const SearchSpec& spec,
                        const std::function<bool(const MixedGenSet&)>& consumer);

/// Bound-pruned exhaustive search, N descending from n_max; the first N
/// with a BFS-certified witness is optimal.  Deterministic output.
SearchResult search_optimal(const SearchSpec& spec,
                            const std::function<void(const std::string&)>& progress = {});

}  // namespace mac
