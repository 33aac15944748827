#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mac/bounds.hpp"
#include "mac/degree_spec.hpp"

using namespace mac;

TEST_CASE("binomials with out-of-range arguments vanish") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(-1, 0) == 0);
    CHECK(binomial(4, -2) == 0);
    CHECK(multinomial(4, {2, 1}) == 12);  // 4!/(2!1!1!)
    CHECK(pow2(6) == 64);
}

TEST_CASE("general mixed Moore bound, small closed values") {
    // r = 2, z = 0 is the cycle: every layer past the root has 2 vertices.
    CHECK(moore_mixed_general(2, 0, 5) == 11);
    // pure directed degree 1 is the directed path
    CHECK(moore_mixed_general(0, 1, 7) == 8);
    // r = 1, z = 0: one edge, then stuck (v = 0 limit case of the closed form)
    CHECK(moore_mixed_general(1, 0, 4) == 2);
    CHECK(moore_mixed_general(3, 0, 2) == 1 + 3 + 6);
    CHECK_THROWS_AS(moore_mixed_general(0, 0, 3), std::invalid_argument);
    CHECK_THROWS_AS(moore_mixed_general(2, 1, 0), std::invalid_argument);
}

TEST_CASE("recurrence and closed form agree, including the singular parameters") {
    // (2,0) and (0,1) make one root of the characteristic equation 1;
    // (1,0) collapses both roots.  All three need care in the closed form.
    for (long r = 0; r <= 3; ++r)
        for (long z = 0; z <= 3; ++z) {
            if (r + z == 0) continue;
            for (long k = 1; k <= 12; ++k)
                CHECK(moore_mixed_general_recurrence(r, z, k) ==
                      moore_mixed_general_closed_form(r, z, k));
        }
}

TEST_CASE("Abelian Cayley bound, pinned values") {
    CHECK(mac_bound(1, 0, 2, 7) == 64);   // 2^6
    CHECK(mac_bound(0, 0, 2, 7) == 36);   // C(9,2)
    CHECK(mac_bound(1, 1, 1, 2) == 13);
    CHECK(mac_bound(1, 2, 0, 2) == 18);
    CHECK(mac_bound(0, 2, 0, 2) == 13);   // 2k^2+2k+1 at k=2
    CHECK(mac_bound(0, 0, 0, 3) == 1);
}

TEST_CASE("the two closed forms of the Abelian Cayley bound agree") {
    for (long ra = 0; ra <= 3; ++ra)
        for (long rw = 0; rw <= 3; ++rw)
            for (long zw = 0; zw <= 3; ++zw)
                for (long k = 1; k <= 6; ++k)
                    CHECK(mac_bound_generating_form(ra, rw, zw, k) ==
                          mac_bound_combinatorial_form(ra, rw, zw, k));
}

TEST_CASE("trade symmetry: one involution plus one directed for one pair") {
    for (long r1 = 0; r1 <= 2; ++r1)
        for (long r2 = 0; r2 <= 2; ++r2)
            for (long z = 1; z <= 2; ++z)
                for (long k = 1; k <= 5; ++k) {
                    if (r1 < 1) continue;
                    CHECK(mac_bound(r1, r2, z, k) == mac_bound(r1 - 1, r2 + 1, z - 1, k));
                }
}

TEST_CASE("improved bound specializes to the plain bound without finite classes") {
    for (long ra = 0; ra <= 2; ++ra)
        for (long rw = 0; rw <= 2; ++rw)
            for (long zw = 0; zw <= 2; ++zw)
                for (long k = 1; k <= 5; ++k) {
                    DegreeSpec spec;
                    spec.r_alpha = ra;
                    spec.r_omega = rw;
                    spec.z_omega = zw;
                    spec.k = k;
                    CHECK(mac_bound_improved(spec) == mac_bound(ra, rw, zw, k));
                }
}

TEST_CASE("improved bound, pinned values") {
    // Two directed generators of order 4 plus an involution at k = 7: the
    // freest carrier group is Z2 x Z4 x Z4 with 32 elements, and the
    // count is exactly 32 = 2 * 4 * 4.
    DegreeSpec spec;
    spec.r_alpha = 1;
    spec.z_ord[3] = 2;
    spec.k = 7;
    CHECK(mac_bound_improved(spec) == 32);
    CHECK(moore_count_oracle(spec) == 32);

    // frozen against the BFS oracle
    DegreeSpec x;
    x.r_alpha = 1;
    x.r_odd[2] = 1;
    x.r_omega = 1;
    x.z_omega = 1;
    x.k = 4;
    CHECK(mac_bound_improved(x) == 117);
}

TEST_CASE("improved bound never exceeds the order-blind bound") {
    for (long ra = 0; ra <= 2; ++ra)
        for (long r2 = 0; r2 <= 2; ++r2)
            for (long z3 = 0; z3 <= 2; ++z3)
                for (long k = 3; k <= 6; ++k) {
                    DegreeSpec spec;
                    spec.r_alpha = ra;
                    if (r2 > 0) spec.r_odd[2] = r2;
                    if (z3 > 0) spec.z_ord[3] = z3;
                    spec.r_omega = 1;
                    spec.z_omega = 1;
                    spec.k = k;
                    CHECK(mac_bound_improved(spec) <=
                          mac_bound(ra, 1 + r2, 1 + z3, k));
                }
}

TEST_CASE("order-5 specialization matches the general improved bound") {
    CHECK(mac_bound_order5(1, 1, 0, 0, 3) == 10);   // frozen against the oracle
    CHECK(mac_bound_order5(0, 1, 1, 1, 2) == 19);   // frozen against the oracle
    for (long ra = 0; ra <= 2; ++ra)
        for (long r2 = 0; r2 <= 2; ++r2)
            for (long rw = 0; rw <= 2; ++rw)
                for (long zw = 0; zw <= 2; ++zw)
                    for (long k = 2; k <= 5; ++k) {
                        DegreeSpec spec;
                        spec.r_alpha = ra;
                        if (r2 > 0) spec.r_odd[2] = r2;
                        spec.r_omega = rw;
                        spec.z_omega = zw;
                        spec.k = k;
                        CHECK(mac_bound_order5(ra, r2, rw, zw, k) == mac_bound_improved(spec));
                    }
}

TEST_CASE("improved bound equals the free-group ball oracle on a small grid") {
    for (long ra = 0; ra <= 1; ++ra)
        for (long r2 = 0; r2 <= 1; ++r2)
            for (long rw = 0; rw <= 1; ++rw)
                for (long z2 = 0; z2 <= 1; ++z2)
                    for (long zw = 0; zw <= 1; ++zw)
                        for (long k = 2; k <= 4; ++k) {
                            DegreeSpec spec;
                            spec.r_alpha = ra;
                            if (r2 > 0) spec.r_odd[2] = r2;
                            spec.r_omega = rw;
                            if (z2 > 0) spec.z_ord[2] = z2;
                            spec.z_omega = zw;
                            spec.k = k;
                            CHECK(mac_bound_improved(spec) == moore_count_oracle(spec));
                        }
}

TEST_CASE("the explain terms sum to the improved bound") {
    DegreeSpec spec = parse_degree_spec("r_a=1 r[2]=1 r_w=1 z_w=1 k=4");
    Int total = 0;
    for (const auto& term : mac_bound_improved_terms(spec))
        if (term.label.rfind("term", 0) == 0) total += term.value;
    CHECK(total == mac_bound_improved(spec));
}

TEST_CASE("degree spec parsing") {
    const DegreeSpec spec = parse_degree_spec("r_a=1 r[2]=1 r_w=2 z[3]=2 z_w=0 k=7");
    CHECK(spec.r_alpha == 1);
    CHECK(spec.r_odd.at(2) == 1);
    CHECK(spec.r_omega == 2);
    CHECK(spec.z_ord.at(3) == 2);
    CHECK(spec.z_omega == 0);
    CHECK(spec.k == 7);
    CHECK(spec.undirected_degree() == 7);
    CHECK(spec.directed_degree() == 2);
    CHECK(parse_degree_spec(format_degree_spec(spec)) == spec);

    CHECK_THROWS_AS(parse_degree_spec("z[1]=1 k=3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_degree_spec("r[5]=1 k=3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_degree_spec("r_a=-1 k=3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_degree_spec("bogus=1 k=3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_degree_spec("r_a=1 k=0"), std::invalid_argument);
}

TEST_CASE("oracle state cap") {
    DegreeSpec spec;
    spec.r_omega = 6;
    spec.k = 12;
    OracleOptions opts;
    opts.max_states = 1000;
    CHECK_THROWS_AS(moore_count_oracle(spec, opts), std::length_error);
}
