#pragma once

#include "mac/integers.hpp"

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace mac {

using IntMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<Int, 1, Eigen::Dynamic>;  // row vector

/// S = U M V with U, V unimodular, S diagonal, diagonal entries
/// nonnegative and in divisibility order d_1 | d_2 | ... | d_n.
struct SmithDecomposition {
    IntMatrix U, S, V;

    std::vector<Int> diagonal() const;
};

/// Total on square integer matrices (nonsingularity not required).
SmithDecomposition smith_normal_form(const IntMatrix& M);

/// Plain matrix product.  Eigen's operator* is unusable with this scalar
/// type: overload resolution asks whether a whole matrix expression
/// converts to the scalar, which trips a hard error inside the big-integer
/// library's byte-container detection.
IntMatrix multiply(const IntMatrix& A, const IntMatrix& B);

/// Exact determinant (fraction-free Bareiss elimination).
Int determinant(const IntMatrix& M);

/// Finite Abelian group in invariant-factor form d_1 | d_2 | ... | d_r,
/// every d_i >= 2 (trivial factors dropped; the empty list is the
/// trivial group).
struct AbelianGroup {
    std::vector<std::int64_t> factors;

    std::int64_t order() const;
    std::int64_t exponent() const { return factors.empty() ? 1 : factors.back(); }
    std::size_t rank() const { return factors.size(); }

    /// Number of elements of order exactly q (Moebius over divisors of q).
    std::int64_t count_elements_of_order(std::int64_t q) const;

    void validate() const;
};

bool operator==(const AbelianGroup& a, const AbelianGroup& b);
bool operator<(const AbelianGroup& a, const AbelianGroup& b);

/// Residue vector, coords[i] in [0, d_i).
struct GroupElement {
    std::vector<std::int64_t> coords;
};

bool operator==(const GroupElement& a, const GroupElement& b);
bool operator<(const GroupElement& a, const GroupElement& b);

GroupElement zero_element(const AbelianGroup& G);
bool is_zero(const GroupElement& g);
GroupElement add(const AbelianGroup& G, const GroupElement& a, const GroupElement& b);
GroupElement negate(const AbelianGroup& G, const GroupElement& g);
GroupElement scalar_mul(const AbelianGroup& G, std::int64_t n, const GroupElement& g);

/// Least q >= 1 with q g = 0; computed as lcm_i d_i / gcd(g_i, d_i).
std::int64_t element_order(const GroupElement& g, const AbelianGroup& G);

struct GroupPresentation {
    AbelianGroup group;
    /// Image of the unit vector e_i in the invariant-factor coordinates.
    std::vector<GroupElement> generator_images;
};

/// The group of integral vectors modulo M, i.e. Z^n / Z^n M, presented by
/// its invariant factors.  Throws on singular M.
GroupPresentation group_from_matrix(const IntMatrix& M);

/// One representative per isomorphism class of Abelian groups of order N,
/// ordered lexicographically on the invariant-factor chain.
std::vector<AbelianGroup> enumerate_abelian_groups(std::int64_t N);

/// Textual form "Z4xZ12"; the trivial group prints as "Z1".
std::string format_group(const AbelianGroup& G);
AbelianGroup parse_group(const std::string& text);

/// Matrix file format: first line n, then n lines of n integers.
IntMatrix read_matrix(std::istream& in);
void write_matrix(std::ostream& out, const IntMatrix& M);

}  // namespace mac
