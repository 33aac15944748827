#include "mac/search.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace mac {

namespace {

constexpr long kOmegaClass = -1;

struct ClassOption {
    long cls = kOmegaClass;       // s for pairs / t for directed, or kOmegaClass
    std::int64_t capacity = 0;    // number of +/- classes realizing it
};

// Order classes realizable by the group for pair slots (keyed s) and
// directed slots (keyed t), with capacities in +/- classes.
std::vector<ClassOption> pair_class_options(const AbelianGroup& G, long k) {
    std::map<long, std::int64_t> caps;
    const std::int64_t e = G.exponent();
    for (std::int64_t q = 3; q <= e; ++q) {
        if (e % q != 0) continue;
        const std::int64_t count = G.count_elements_of_order(q);
        if (count == 0) continue;
        // Odd order 2s+1 maps to s; even order q is dominated by the
        // class s = q/2; orders above 2k+1 are undetermined.
        const long cls = q > 2 * k + 1 ? kOmegaClass
                                       : static_cast<long>(q % 2 == 1 ? (q - 1) / 2 : q / 2);
        caps[cls] += count / 2;
    }
    std::vector<ClassOption> out;
    for (const auto& [cls, cap] : caps) out.push_back({cls, cap});
    return out;
}

std::vector<ClassOption> directed_class_options(const AbelianGroup& G, long k) {
    std::map<long, std::int64_t> caps;
    const std::int64_t e = G.exponent();
    for (std::int64_t q = 3; q <= e; ++q) {
        if (e % q != 0) continue;
        const std::int64_t count = G.count_elements_of_order(q);
        if (count == 0) continue;
        const long cls = q > k + 1 ? kOmegaClass : static_cast<long>(q - 1);
        caps[cls] += count / 2;  // at most one of {b, -b} may enter directed
    }
    std::vector<ClassOption> out;
    for (const auto& [cls, cap] : caps) out.push_back({cls, cap});
    return out;
}

// Multisets of `slots` picks over the options, capacity-limited.
void for_each_assignment(const std::vector<ClassOption>& options, long slots,
                         std::vector<long>& picks,
                         const std::function<void(const std::vector<long>&)>& fn,
                         std::size_t from = 0) {
    if (slots == 0) {
        fn(picks);
        return;
    }
    for (std::size_t i = from; i < options.size(); ++i) {
        const long take_max = static_cast<long>(
            std::min<std::int64_t>(slots, options[i].capacity));
        for (long take = 1; take <= take_max; ++take) {
            for (long j = 0; j < take; ++j) picks.push_back(options[i].cls);
            for_each_assignment(options, slots - take, picks, fn, i + 1);
            for (long j = 0; j < take; ++j) picks.pop_back();
        }
    }
}

}  // namespace

void SearchSpec::validate() const {
    if (r_alpha < 0 || r_omega < 0 || z_omega < 0)
        throw std::invalid_argument("SearchSpec: negative profile count");
    if (k < 1) throw std::invalid_argument("SearchSpec: k must be positive");
    if (n_min < 1) throw std::invalid_argument("SearchSpec: n_min must be positive");
    if (jobs < 1) throw std::invalid_argument("SearchSpec: jobs must be positive");
}

std::int64_t SearchSpec::starting_order() const {
    if (n_max) return *n_max;
    const Int bound = mac_bound(r_alpha, r_omega, z_omega, k);
    if (bound > order_cap) throw std::length_error("search: starting order exceeds the cap");
    return static_cast<std::int64_t>(bound);
}

Int prune_group(const AbelianGroup& G, const SearchSpec& spec) {
    spec.validate();
    if (G.order() == 1) return 1;  // trivial group, never rejected
    if (spec.r_alpha > G.count_elements_of_order(2)) return 0;

    const auto pair_options = pair_class_options(G, spec.k);
    const auto dir_options = directed_class_options(G, spec.k);

    Int best = -1;
    std::vector<long> pair_picks, dir_picks;
    for_each_assignment(pair_options, spec.r_omega, pair_picks, [&](const std::vector<long>& ps) {
        for_each_assignment(dir_options, spec.z_omega, dir_picks,
                            [&](const std::vector<long>& ds) {
                                DegreeSpec d;
                                d.k = spec.k;
                                d.r_alpha = spec.r_alpha;
                                for (long s : ps)
                                    s == kOmegaClass ? void(++d.r_omega) : void(++d.r_odd[s]);
                                for (long t : ds)
                                    t == kOmegaClass ? void(++d.z_omega) : void(++d.z_ord[t]);
                                Int bound = mac_bound_improved(d);
                                if (bound > best) best = std::move(bound);
                            });
    });
    return best < 0 ? Int(0) : best;
}

namespace {

std::vector<GroupElement> all_elements(const AbelianGroup& G) {
    const std::int64_t n = G.order();
    std::vector<GroupElement> out;
    out.reserve(n);
    GroupElement g = zero_element(G);
    for (std::int64_t idx = 0; idx < n; ++idx) {
        out.push_back(g);
        for (std::size_t i = 0; i < G.factors.size(); ++i) {
            if (++g.coords[i] < G.factors[i]) break;
            g.coords[i] = 0;
        }
    }
    return out;
}

using SetKey = std::vector<std::vector<std::int64_t>>;

SetKey encode_set(const MixedGenSet& s) {
    SetKey key;
    auto push = [&](const std::vector<GroupElement>& v) {
        std::vector<std::int64_t> flat;
        for (const auto& g : v)
            flat.insert(flat.end(), g.coords.begin(), g.coords.end());
        key.push_back(std::move(flat));
    };
    push(s.involutions);
    push(s.pairs);
    push(s.directed);
    return key;
}

// For cyclic groups, sets related by multiplication with a unit give
// isomorphic graphs; keep only the orbit's lexicographic minimum.
bool is_unit_orbit_canonical(const AbelianGroup& G, const MixedGenSet& s) {
    if (G.factors.size() != 1) return true;
    const std::int64_t n = G.factors[0];
    const SetKey original = encode_set(s);
    for (std::int64_t u = 2; u < n; ++u) {
        if (std::gcd(u, n) != 1) continue;
        MixedGenSet mapped;
        auto mul = [&](const GroupElement& g) {
            return GroupElement{{static_cast<std::int64_t>(
                (static_cast<__int128>(u) * g.coords[0]) % n)}};
        };
        for (const auto& g : s.involutions) mapped.involutions.push_back(mul(g));
        for (const auto& g : s.pairs) {
            const GroupElement m = mul(g);
            mapped.pairs.push_back(std::min(m, negate(G, m)));
        }
        for (const auto& g : s.directed) mapped.directed.push_back(mul(g));
        std::sort(mapped.involutions.begin(), mapped.involutions.end());
        std::sort(mapped.pairs.begin(), mapped.pairs.end());
        std::sort(mapped.directed.begin(), mapped.directed.end());
        if (encode_set(mapped) < original) return false;
    }
    return true;
}

void combinations(std::size_t n, long take,
                  const std::function<bool(const std::vector<std::size_t>&)>& fn) {
    std::vector<std::size_t> idx(take);
    std::iota(idx.begin(), idx.end(), 0);
    if (take == 0) {
        fn(idx);
        return;
    }
    if (static_cast<std::size_t>(take) > n) return;
    while (true) {
        if (!fn(idx)) return;
        long i = take - 1;
        while (i >= 0 && idx[i] == n - take + i) --i;
        if (i < 0) return;
        ++idx[i];
        for (long j = i + 1; j < take; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

void enumerate_gen_sets(const AbelianGroup& G, const SearchSpec& spec,
                        const std::function<bool(const MixedGenSet&)>& consumer) {
    spec.validate();
    const auto elements = all_elements(G);
    std::vector<GroupElement> involutions, pair_reps, directed_candidates;
    for (const auto& g : elements) {
        const std::int64_t q = element_order(g, G);
        if (q == 2) involutions.push_back(g);
        if (q >= 3) {
            directed_candidates.push_back(g);
            if (g < negate(G, g)) pair_reps.push_back(g);
        }
    }

    bool stop = false;
    combinations(involutions.size(), spec.r_alpha, [&](const std::vector<std::size_t>& iv) {
        combinations(pair_reps.size(), spec.r_omega, [&](const std::vector<std::size_t>& pv) {
            std::set<GroupElement> chosen_pair_classes;
            for (std::size_t i : pv) chosen_pair_classes.insert(pair_reps[i]);
            combinations(
                directed_candidates.size(), spec.z_omega,
                [&](const std::vector<std::size_t>& dv) {
                    // Directed picks may not collide with pair classes or
                    // contain an inverse pair.
                    std::set<GroupElement> picked;
                    for (std::size_t i : dv) {
                        const GroupElement& b = directed_candidates[i];
                        const GroupElement nb = negate(G, b);
                        if (chosen_pair_classes.count(std::min(b, nb))) return !stop;
                        if (picked.count(nb)) return !stop;
                        picked.insert(b);
                    }
                    MixedGenSet s;
                    for (std::size_t i : iv) s.involutions.push_back(involutions[i]);
                    for (std::size_t i : pv) s.pairs.push_back(pair_reps[i]);
                    for (std::size_t i : dv) s.directed.push_back(directed_candidates[i]);
                    if (!is_unit_orbit_canonical(G, s)) return !stop;
                    if (!consumer(s)) stop = true;
                    return !stop;
                });
            return !stop;
        });
        return !stop;
    });
}

namespace {

struct GroupTask {
    bool pruned = false;
    std::int64_t examined = 0;
    std::vector<Witness> witnesses;
};

GroupTask search_group(const AbelianGroup& G, const SearchSpec& spec, std::int64_t N) {
    GroupTask out;
    if (spec.prune && prune_group(G, spec) < N) {
        out.pruned = true;
        return out;
    }
    enumerate_gen_sets(G, spec, [&](const MixedGenSet& s) {
        ++out.examined;
        try {
            const MixedCayleyGraph graph = build(G, s);
            if (bfs_layers(graph, 0).eccentricity <= spec.k)
                out.witnesses.push_back({G, graph.gens});
        } catch (const std::invalid_argument&) {
            // non-generating set
        }
        return spec.all_witnesses || out.witnesses.empty();
    });
    return out;
}

}  // namespace

SearchResult search_optimal(const SearchSpec& spec,
                            const std::function<void(const std::string&)>& progress) {
    spec.validate();
    const std::int64_t n_max = spec.starting_order();
    if (n_max > spec.order_cap) throw std::length_error("search: starting order exceeds the cap");
    if (spec.n_min > n_max) throw std::invalid_argument("search: empty order range");

    SearchResult result;
    for (std::int64_t N = n_max; N >= spec.n_min; --N) {
        const auto groups = enumerate_abelian_groups(N);
        std::vector<GroupTask> tasks(groups.size());
        if (spec.jobs > 1) {
            std::vector<std::future<GroupTask>> futures;
            for (const auto& G : groups)
                futures.push_back(std::async(std::launch::async,
                                             [&, N] { return search_group(G, spec, N); }));
            for (std::size_t i = 0; i < futures.size(); ++i) tasks[i] = futures[i].get();
        } else {
            for (std::size_t i = 0; i < groups.size(); ++i)
                tasks[i] = search_group(groups[i], spec, N);
        }
        bool found = false;
        for (const auto& t : tasks) {
            result.pruned_groups += t.pruned ? 1 : 0;
            result.examined_sets += t.examined;
            for (const auto& w : t.witnesses) {
                result.witnesses.push_back(w);
                found = true;
            }
        }
        if (progress)
            progress("N=" + std::to_string(N) + " groups=" + std::to_string(groups.size()) +
                     (found ? " -> witness found" : ""));
        if (found) {
            result.best_n = N;
            return result;
        }
    }
    return result;
}

}  // namespace mac
