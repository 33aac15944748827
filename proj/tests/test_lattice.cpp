#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mac/lattice.hpp"

#include <numeric>
#include <random>
#include <sstream>

using namespace mac;

namespace {

bool equal(const IntMatrix& A, const IntMatrix& B) {
    if (A.rows() != B.rows() || A.cols() != B.cols()) return false;
    for (Eigen::Index i = 0; i < A.rows(); ++i)
        for (Eigen::Index j = 0; j < A.cols(); ++j)
            if (A(i, j) != B(i, j)) return false;
    return true;
}

void check_decomposition(const IntMatrix& M) {
    const SmithDecomposition snf = smith_normal_form(M);
    CHECK(equal(snf.S, multiply(multiply(snf.U, M), snf.V)));
    CHECK(abs(determinant(snf.U)) == 1);
    CHECK(abs(determinant(snf.V)) == 1);
    const auto d = snf.diagonal();
    for (std::size_t i = 0; i < d.size(); ++i) {
        CHECK(d[i] >= 0);
        if (i + 1 < d.size() && d[i] != 0) CHECK(d[i + 1] % d[i] == 0);
    }
    for (Eigen::Index i = 0; i < snf.S.rows(); ++i)
        for (Eigen::Index j = 0; j < snf.S.cols(); ++j)
            if (i != j) CHECK(snf.S(i, j) == 0);
}

// k-th determinantal divisor: gcd of all k x k minors.  The product
// d_1 ... d_k of the diagonal must equal it.
Int determinantal_divisor(const IntMatrix& M, int k) {
    const int n = static_cast<int>(M.rows());
    Int g = 0;
    std::vector<int> rows(k), cols(k);
    auto minors = [&](auto&& self, std::vector<int>& idx, int level, int from, auto&& then) -> void {
        if (level == k) {
            then();
            return;
        }
        for (int v = from; v < n; ++v) {
            idx[level] = v;
            self(self, idx, level + 1, v + 1, then);
        }
    };
    minors(minors, rows, 0, 0, [&] {
        minors(minors, cols, 0, 0, [&] {
            IntMatrix sub(k, k);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) sub(i, j) = M(rows[i], cols[j]);
            g = boost::multiprecision::gcd(g, abs(determinant(sub)));
        });
    });
    return g;
}

}  // namespace

TEST_CASE("worked 3x3 example") {
    IntMatrix M(3, 3);
    M << 3, -2, 0, 0, 4, 1, 0, 0, 2;
    const SmithDecomposition snf = smith_normal_form(M);
    const auto d = snf.diagonal();
    REQUIRE(d.size() == 3);
    CHECK(d[0] == 1);
    CHECK(d[1] == 1);
    CHECK(d[2] == 24);
    check_decomposition(M);

    const GroupPresentation pres = group_from_matrix(M);
    CHECK(pres.group.factors == std::vector<std::int64_t>{24});
    const std::int64_t want[] = {2, 3, 12};
    for (int i = 0; i < 3; ++i) {
        const std::int64_t img = pres.generator_images[i].coords[0];
        CHECK((img == want[i] || img == 24 - want[i]));
    }
}

TEST_CASE("identity and diagonal inputs") {
    IntMatrix I = IntMatrix::Identity(4, 4);
    const SmithDecomposition snf = smith_normal_form(I);
    CHECK(equal(snf.S, I));

    IntMatrix D(2, 2);
    D << 6, 0, 0, 2;  // not in divisibility order
    const GroupPresentation pres = group_from_matrix(D);
    CHECK(pres.group.factors == std::vector<std::int64_t>{2, 6});
}

TEST_CASE("random matrices, seed-fixed sweep") {
    std::mt19937 rng(20240917);
    std::uniform_int_distribution<int> entry(-9, 9);
    std::uniform_int_distribution<int> size(1, 5);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = size(rng);
        IntMatrix M(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) M(i, j) = entry(rng);
        check_decomposition(M);
    }
}

TEST_CASE("determinantal divisors of small random matrices") {
    std::mt19937 rng(97);
    std::uniform_int_distribution<int> entry(-6, 6);
    for (int trial = 0; trial < 20; ++trial) {
        IntMatrix M(3, 3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) M(i, j) = entry(rng);
        const auto d = smith_normal_form(M).diagonal();
        Int prod = 1;
        for (int k = 1; k <= 3; ++k) {
            prod *= d[k - 1];
            CHECK(prod == determinantal_divisor(M, k));
        }
    }
}

TEST_CASE("exact determinants") {
    IntMatrix M(3, 3);
    M << 2, 0, 1, 1, 3, -1, 0, 4, 1;
    CHECK(determinant(M) == 2 * (3 + 4) + 1 * 4);
    IntMatrix S(2, 2);
    S << 0, 1, 1, 0;
    CHECK(determinant(S) == -1);
    IntMatrix Z = IntMatrix::Zero(3, 3);
    CHECK(determinant(Z) == 0);
}

TEST_CASE("group_from_matrix rejects singular input") {
    IntMatrix M(2, 2);
    M << 2, 4, 1, 2;
    CHECK_THROWS_AS(group_from_matrix(M), std::invalid_argument);
}

TEST_CASE("group enumeration by invariant factors") {
    CHECK(enumerate_abelian_groups(1).size() == 1);
    CHECK(enumerate_abelian_groups(1)[0].factors.empty());
    CHECK(enumerate_abelian_groups(7).size() == 1);
    // p(6) = 11 partitions of the exponent of 2^6
    CHECK(enumerate_abelian_groups(64).size() == 11);
    // 36 = 2^2 3^2: p(2) * p(2) = 4
    const auto g36 = enumerate_abelian_groups(36);
    REQUIRE(g36.size() == 4);
    for (const auto& G : g36) {
        G.validate();
        CHECK(G.order() == 36);
    }
    // divisibility chains of order 36: (2,18), (3,12), (6,6), (36)
    CHECK(g36[0].factors == std::vector<std::int64_t>{2, 18});
    CHECK(g36[1].factors == std::vector<std::int64_t>{3, 12});
    CHECK(g36[2].factors == std::vector<std::int64_t>{6, 6});
    CHECK(g36[3].factors == std::vector<std::int64_t>{36});
}

TEST_CASE("element order counting") {
    AbelianGroup z12{{12}};
    CHECK(z12.count_elements_of_order(1) == 1);
    CHECK(z12.count_elements_of_order(2) == 1);
    CHECK(z12.count_elements_of_order(4) == 2);
    CHECK(z12.count_elements_of_order(6) == 2);
    CHECK(z12.count_elements_of_order(12) == 4);
    CHECK(z12.count_elements_of_order(5) == 0);

    AbelianGroup G{{2, 4}};
    std::int64_t total = 0;
    for (std::int64_t q = 1; q <= G.exponent(); ++q) total += G.count_elements_of_order(q);
    CHECK(total == G.order());
}

TEST_CASE("element arithmetic") {
    AbelianGroup G{{2, 6}};
    GroupElement a{{1, 4}};
    CHECK(element_order(a, G) == 6);
    CHECK(is_zero(scalar_mul(G, 6, a)));
    CHECK(add(G, a, negate(G, a)) == zero_element(G));
    CHECK(element_order(GroupElement{{1, 3}}, G) == 2);
}

TEST_CASE("group text form") {
    AbelianGroup G{{4, 12}};
    CHECK(format_group(G) == "Z4xZ12");
    CHECK(parse_group("Z4xZ12") == G);
    CHECK(parse_group("Z1").factors.empty());
    CHECK(format_group(AbelianGroup{}) == "Z1");
    CHECK_THROWS_AS(parse_group("Z4xW3"), std::invalid_argument);
}

TEST_CASE("matrix file round trip") {
    IntMatrix M(2, 2);
    M << 3, -2, 0, 7;
    std::stringstream buf;
    write_matrix(buf, M);
    CHECK(equal(read_matrix(buf), M));
}
