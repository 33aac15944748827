#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mac/search.hpp"

#include <set>

using namespace mac;

namespace {

SearchSpec profile(long ra, long rw, long zw, long k) {
    SearchSpec s;
    s.r_alpha = ra;
    s.r_omega = rw;
    s.z_omega = zw;
    s.k = k;
    return s;
}

}  // namespace

TEST_CASE("group pruning") {
    const SearchSpec spec = profile(1, 0, 2, 7);

    // Z2^4 x Z4 has order 64 = the order-blind bound, but its directed
    // generators have order at most 4, so the order-aware bound caps the
    // reachable ball at 32 and the group is rejected.
    AbelianGroup G{{2, 2, 2, 4}};
    REQUIRE(G.order() == 32);
    AbelianGroup H{{2, 2, 2, 2, 4}};
    REQUIRE(H.order() == 64);
    const Int bound = prune_group(H, spec);
    CHECK(bound == 32);
    CHECK(bound < 64);

    // trivial group is never rejected
    CHECK(prune_group(AbelianGroup{}, spec) == 1);

    // no involution available for the involution slot
    CHECK(prune_group(AbelianGroup{{9}}, profile(1, 1, 0, 2)) == 0);

    // no admissible directed class
    CHECK(prune_group(AbelianGroup{{2, 2}}, profile(0, 0, 1, 3)) == 0);
}

TEST_CASE("generating set enumeration") {
    AbelianGroup z13{{13}};
    const SearchSpec spec = profile(0, 2, 0, 2);
    std::set<std::vector<std::int64_t>> seen;
    enumerate_gen_sets(z13, spec, [&](const MixedGenSet& s) {
        REQUIRE(s.pairs.size() == 2);
        REQUIRE(s.involutions.empty());
        REQUIRE(s.directed.empty());
        std::vector<std::int64_t> key{s.pairs[0].coords[0], s.pairs[1].coords[0]};
        CHECK(seen.insert(key).second);  // no duplicates
        return true;
    });
    // 6 +/- classes in Z13 give C(6,2) = 15 unordered pairs; unit
    // multiplication cuts them down to the orbit representatives.
    CHECK(!seen.empty());
    CHECK(seen.size() < 15);

    // early stop is honored
    int count = 0;
    enumerate_gen_sets(z13, spec, [&](const MixedGenSet&) { return ++count < 2; });
    CHECK(count == 2);
}

TEST_CASE("directed slots avoid chosen pair classes and inverse collisions") {
    AbelianGroup z9{{9}};
    enumerate_gen_sets(z9, profile(0, 1, 2, 3), [&](const MixedGenSet& s) {
        const GroupElement p = s.pairs[0];
        for (const auto& d : s.directed) {
            CHECK(std::min(d, negate(z9, d)) != p);
            for (const auto& e : s.directed) CHECK(d != negate(z9, e));
        }
        return true;
    });
}

TEST_CASE("optimal orders at diameter two") {
    CHECK(search_optimal(profile(0, 2, 0, 2)).best_n == 13);
    CHECK(search_optimal(profile(1, 1, 1, 2)).best_n == 10);
    CHECK(search_optimal(profile(1, 2, 0, 2)).best_n == 16);
}

TEST_CASE("pruning changes no result") {
    SearchSpec spec = profile(0, 2, 0, 2);
    const SearchResult pruned = search_optimal(spec);
    spec.prune = false;
    const SearchResult plain = search_optimal(spec);
    CHECK(pruned.best_n == plain.best_n);
    CHECK(pruned.witnesses.size() == plain.witnesses.size());
    CHECK(plain.pruned_groups == 0);
    CHECK(pruned.examined_sets <= plain.examined_sets);
}

TEST_CASE("parallel search is deterministic") {
    SearchSpec spec = profile(1, 1, 1, 2);
    const SearchResult seq = search_optimal(spec);
    spec.jobs = 4;
    const SearchResult par = search_optimal(spec);
    CHECK(seq.best_n == par.best_n);
    REQUIRE(seq.witnesses.size() == par.witnesses.size());
    for (std::size_t i = 0; i < seq.witnesses.size(); ++i) {
        CHECK(seq.witnesses[i].group == par.witnesses[i].group);
        CHECK(seq.witnesses[i].gens.pairs == par.witnesses[i].gens.pairs);
        CHECK(seq.witnesses[i].gens.directed == par.witnesses[i].gens.directed);
    }
}

TEST_CASE("every witness re-certifies") {
    const SearchResult result = search_optimal(profile(1, 1, 1, 2));
    REQUIRE(!result.witnesses.empty());
    for (const auto& w : result.witnesses) {
        const MixedCayleyGraph G = build(w.group, w.gens);  // re-validates everything
        CHECK(G.order == result.best_n);
        CHECK(diameter(G) <= 2);
        CHECK(G.undirected_degree == 3);
        CHECK(G.directed_degree == 1);
    }
}

TEST_CASE("removing a slot never increases the optimum") {
    const std::int64_t full = search_optimal(profile(1, 1, 1, 2)).best_n;
    CHECK(search_optimal(profile(0, 1, 1, 2)).best_n <= full);
    CHECK(search_optimal(profile(1, 0, 1, 2)).best_n <= full);
    CHECK(search_optimal(profile(1, 1, 0, 2)).best_n <= full);
}

TEST_CASE("range and cap errors") {
    SearchSpec spec = profile(1, 2, 0, 2);
    spec.n_min = 100;
    CHECK_THROWS_AS(search_optimal(spec), std::invalid_argument);

    SearchSpec big = profile(2, 3, 3, 9);
    CHECK_THROWS_AS(big.starting_order(), std::length_error);

    SearchSpec bad = profile(1, 0, 0, 0);
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("empty profile finds the one-vertex graph") {
    const SearchResult r = search_optimal(profile(0, 0, 0, 1));
    CHECK(r.best_n == 1);
    REQUIRE(r.witnesses.size() == 1);
    CHECK(r.witnesses[0].group.factors.empty());
}
