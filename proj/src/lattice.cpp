#include "mac/lattice.hpp"

#include <algorithm>
#include <istream>
#include <limits>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace mac {

std::vector<Int> SmithDecomposition::diagonal() const {
    std::vector<Int> d(S.rows());
    for (Eigen::Index i = 0; i < S.rows(); ++i) d[i] = S(i, i);
    return d;
}

namespace {

// Position of the entry with minimal nonzero absolute value in the
// trailing submatrix starting at (t, t); {-1, -1} if it is all zero.
std::pair<Eigen::Index, Eigen::Index> min_nonzero_pivot(const IntMatrix& A, Eigen::Index t) {
    std::pair<Eigen::Index, Eigen::Index> best{-1, -1};
    Int best_abs = 0;
    for (Eigen::Index i = t; i < A.rows(); ++i) {
        for (Eigen::Index j = t; j < A.cols(); ++j) {
            if (A(i, j) == 0) continue;
            Int a = abs(A(i, j));
            if (best.first < 0 || a < best_abs) {
                best = {i, j};
                best_abs = std::move(a);
            }
        }
    }
    return best;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& M) {
    if (M.rows() != M.cols()) throw std::invalid_argument("smith_normal_form: matrix not square");
    const Eigen::Index n = M.rows();
    SmithDecomposition out;
    out.S = M;
    out.U = IntMatrix::Identity(n, n);
    out.V = IntMatrix::Identity(n, n);
    IntMatrix& A = out.S;

    for (Eigen::Index t = 0; t < n; ++t) {
    restart:
        auto [pi, pj] = min_nonzero_pivot(A, t);
        if (pi < 0) break;  // trailing block is zero
        if (pi != t) {
            A.row(t).swap(A.row(pi));
            out.U.row(t).swap(out.U.row(pi));
        }
        if (pj != t) {
            A.col(t).swap(A.col(pj));
            out.V.col(t).swap(out.V.col(pj));
        }
        bool changed = true;
        while (changed) {
            changed = false;
            for (Eigen::Index i = t + 1; i < n; ++i) {
                if (A(i, t) == 0) continue;
                const Int q = A(i, t) / A(t, t);
                if (q != 0) {
                    A.row(i) -= q * A.row(t);
                    out.U.row(i) -= q * out.U.row(t);
                }
                if (A(i, t) != 0) {  // remainder became the smaller pivot
                    A.row(t).swap(A.row(i));
                    out.U.row(t).swap(out.U.row(i));
                    changed = true;
                }
            }
            for (Eigen::Index j = t + 1; j < n; ++j) {
                if (A(t, j) == 0) continue;
                const Int q = A(t, j) / A(t, t);
                if (q != 0) {
                    A.col(j) -= q * A.col(t);
                    out.V.col(j) -= q * out.V.col(t);
                }
                if (A(t, j) != 0) {
                    A.col(t).swap(A.col(j));
                    out.V.col(t).swap(out.V.col(j));
                    changed = true;
                }
            }
        }
        // Pivot must divide the whole trailing block, so that the final
        // diagonal forms a divisibility chain.
        for (Eigen::Index i = t + 1; i < n; ++i) {
            for (Eigen::Index j = t + 1; j < n; ++j) {
                if (A(i, j) % A(t, t) != 0) {
                    A.row(t) += A.row(i);
                    out.U.row(t) += out.U.row(i);
                    goto restart;
                }
            }
        }
        if (A(t, t) < 0) {
            A.row(t) = -A.row(t);
            out.U.row(t) = -out.U.row(t);
        }
    }
    return out;
}

IntMatrix multiply(const IntMatrix& A, const IntMatrix& B) {
    if (A.cols() != B.rows()) throw std::invalid_argument("multiply: shape mismatch");
    IntMatrix C = IntMatrix::Zero(A.rows(), B.cols());
    for (Eigen::Index i = 0; i < A.rows(); ++i)
        for (Eigen::Index k = 0; k < A.cols(); ++k) {
            if (A(i, k) == 0) continue;
            for (Eigen::Index j = 0; j < B.cols(); ++j) C(i, j) += A(i, k) * B(k, j);
        }
    return C;
}

Int determinant(const IntMatrix& M) {
    if (M.rows() != M.cols()) throw std::invalid_argument("determinant: matrix not square");
    const Eigen::Index n = M.rows();
    if (n == 0) return 1;
    IntMatrix A = M;
    Int sign = 1;
    Int prev = 1;
    for (Eigen::Index t = 0; t < n - 1; ++t) {
        if (A(t, t) == 0) {
            Eigen::Index p = -1;
            for (Eigen::Index i = t + 1; i < n; ++i)
                if (A(i, t) != 0) {
                    p = i;
                    break;
                }
            if (p < 0) return 0;
            A.row(t).swap(A.row(p));
            sign = -sign;
        }
        for (Eigen::Index i = t + 1; i < n; ++i)
            for (Eigen::Index j = t + 1; j < n; ++j)
                A(i, j) = (A(i, j) * A(t, t) - A(i, t) * A(t, j)) / prev;  // exact (Bareiss)
        prev = A(t, t);
    }
    return sign * A(n - 1, n - 1);
}

std::int64_t AbelianGroup::order() const {
    std::int64_t n = 1;
    for (std::int64_t d : factors) {
        if (n > std::numeric_limits<std::int64_t>::max() / d)
            throw std::overflow_error("AbelianGroup: order exceeds 64 bits");
        n *= d;
    }
    return n;
}

void AbelianGroup::validate() const {
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (factors[i] < 2) throw std::invalid_argument("AbelianGroup: factor < 2");
        if (i > 0 && factors[i] % factors[i - 1] != 0)
            throw std::invalid_argument("AbelianGroup: divisibility chain violated");
    }
}

std::int64_t AbelianGroup::count_elements_of_order(std::int64_t q) const {
    if (q < 1) return 0;
    if (exponent() % q != 0) return 0;
    // #{x : order(x) | m} = prod_i gcd(d_i, m); Moebius inversion over the
    // divisors of q.
    auto count_dividing = [&](std::int64_t m) {
        std::int64_t c = 1;
        for (std::int64_t d : factors) c *= std::gcd(d, m);
        return c;
    };
    // Factorize q and apply inclusion-exclusion over squarefree divisors.
    std::vector<std::int64_t> primes;
    std::int64_t rest = q;
    for (std::int64_t p = 2; p * p <= rest; ++p)
        if (rest % p == 0) {
            primes.push_back(p);
            while (rest % p == 0) rest /= p;
        }
    if (rest > 1) primes.push_back(rest);
    std::int64_t total = 0;
    for (std::size_t mask = 0; mask < (std::size_t(1) << primes.size()); ++mask) {
        std::int64_t m = q;
        int bits = 0;
        for (std::size_t b = 0; b < primes.size(); ++b)
            if (mask & (std::size_t(1) << b)) {
                m /= primes[b];
                ++bits;
            }
        total += (bits % 2 == 0 ? 1 : -1) * count_dividing(m);
    }
    return total;
}

bool operator==(const AbelianGroup& a, const AbelianGroup& b) { return a.factors == b.factors; }
bool operator<(const AbelianGroup& a, const AbelianGroup& b) { return a.factors < b.factors; }

bool operator==(const GroupElement& a, const GroupElement& b) { return a.coords == b.coords; }
bool operator<(const GroupElement& a, const GroupElement& b) { return a.coords < b.coords; }

GroupElement zero_element(const AbelianGroup& G) {
    return GroupElement{std::vector<std::int64_t>(G.factors.size(), 0)};
}

bool is_zero(const GroupElement& g) {
    return std::all_of(g.coords.begin(), g.coords.end(), [](std::int64_t c) { return c == 0; });
}

namespace {

void check_element(const AbelianGroup& G, const GroupElement& g) {
    if (g.coords.size() != G.factors.size())
        throw std::invalid_argument("GroupElement: rank mismatch");
}

std::int64_t mod_reduce(std::int64_t x, std::int64_t m) {
    std::int64_t r = x % m;
    return r < 0 ? r + m : r;
}

}  // namespace

GroupElement add(const AbelianGroup& G, const GroupElement& a, const GroupElement& b) {
    check_element(G, a);
    check_element(G, b);
    GroupElement out = zero_element(G);
    for (std::size_t i = 0; i < G.factors.size(); ++i)
        out.coords[i] = mod_reduce(a.coords[i] + b.coords[i], G.factors[i]);
    return out;
}

GroupElement negate(const AbelianGroup& G, const GroupElement& g) {
    check_element(G, g);
    GroupElement out = zero_element(G);
    for (std::size_t i = 0; i < G.factors.size(); ++i)
        out.coords[i] = mod_reduce(-g.coords[i], G.factors[i]);
    return out;
}

GroupElement scalar_mul(const AbelianGroup& G, std::int64_t n, const GroupElement& g) {
    check_element(G, g);
    GroupElement out = zero_element(G);
    for (std::size_t i = 0; i < G.factors.size(); ++i) {
        const std::int64_t m = G.factors[i];
        out.coords[i] = mod_reduce(static_cast<std::int64_t>(
                                       (static_cast<__int128>(n) * g.coords[i]) % m),
                                   m);
    }
    return out;
}

std::int64_t element_order(const GroupElement& g, const AbelianGroup& G) {
    check_element(G, g);
    std::int64_t q = 1;
    for (std::size_t i = 0; i < G.factors.size(); ++i) {
        const std::int64_t d = G.factors[i];
        q = std::lcm(q, d / std::gcd(g.coords[i], d));
    }
    return q;
}

GroupPresentation group_from_matrix(const IntMatrix& M) {
    const SmithDecomposition snf = smith_normal_form(M);
    const Eigen::Index n = M.rows();
    GroupPresentation out;
    std::vector<Eigen::Index> nontrivial;
    for (Eigen::Index i = 0; i < n; ++i) {
        const Int& d = snf.S(i, i);
        if (d == 0) throw std::invalid_argument("group_from_matrix: singular matrix");
        if (d > 1) {
            if (d > std::numeric_limits<std::int64_t>::max())
                throw std::overflow_error("group_from_matrix: invariant factor exceeds 64 bits");
            out.group.factors.push_back(static_cast<std::int64_t>(d));
            nontrivial.push_back(i);
        }
    }
    out.group.validate();
    // x mod M  <->  x V mod S; the image of e_i is row i of V restricted
    // to the nontrivial coordinates.
    for (Eigen::Index i = 0; i < n; ++i) {
        GroupElement img = zero_element(out.group);
        for (std::size_t j = 0; j < nontrivial.size(); ++j) {
            const std::int64_t d = out.group.factors[j];
            Int r = snf.V(i, nontrivial[j]) % d;
            if (r < 0) r += d;
            img.coords[j] = static_cast<std::int64_t>(r);
        }
        out.generator_images.push_back(std::move(img));
    }
    return out;
}

namespace {

void partitions_desc(std::int64_t a, std::int64_t max_part,
                     std::vector<std::int64_t>& current,
                     std::vector<std::vector<std::int64_t>>& out) {
    if (a == 0) {
        out.push_back(current);
        return;
    }
    for (std::int64_t p = std::min(a, max_part); p >= 1; --p) {
        current.push_back(p);
        partitions_desc(a - p, p, current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<AbelianGroup> enumerate_abelian_groups(std::int64_t N) {
    if (N < 1) throw std::invalid_argument("enumerate_abelian_groups: N must be positive");
    // Factorize and collect the exponent partitions per prime.
    std::vector<std::pair<std::int64_t, std::int64_t>> factorization;
    std::int64_t rest = N;
    for (std::int64_t p = 2; p * p <= rest; ++p)
        if (rest % p == 0) {
            std::int64_t a = 0;
            while (rest % p == 0) {
                rest /= p;
                ++a;
            }
            factorization.emplace_back(p, a);
        }
    if (rest > 1) factorization.emplace_back(rest, 1);

    std::vector<std::vector<std::vector<std::int64_t>>> per_prime;
    for (const auto& [p, a] : factorization) {
        std::vector<std::vector<std::int64_t>> parts;
        std::vector<std::int64_t> current;
        partitions_desc(a, a, current, parts);
        per_prime.push_back(std::move(parts));
    }

    std::vector<AbelianGroup> groups;
    std::vector<std::size_t> choice(per_prime.size(), 0);
    while (true) {
        // Componentwise product of the chosen prime-power chains
        // (descending), then reversed into ascending divisibility order.
        std::size_t rank = 0;
        for (std::size_t i = 0; i < per_prime.size(); ++i)
            rank = std::max(rank, per_prime[i][choice[i]].size());
        AbelianGroup G;
        G.factors.assign(rank, 1);
        for (std::size_t i = 0; i < per_prime.size(); ++i) {
            const auto& lambda = per_prime[i][choice[i]];
            for (std::size_t j = 0; j < lambda.size(); ++j) {
                std::int64_t pw = 1;
                for (std::int64_t e = 0; e < lambda[j]; ++e) pw *= factorization[i].first;
                G.factors[rank - 1 - j] *= pw;
            }
        }
        G.validate();
        groups.push_back(std::move(G));

        std::size_t pos = 0;
        while (pos < choice.size() && ++choice[pos] == per_prime[pos].size()) {
            choice[pos] = 0;
            ++pos;
        }
        if (pos == choice.size()) break;
    }
    std::sort(groups.begin(), groups.end());
    return groups;
}

std::string format_group(const AbelianGroup& G) {
    if (G.factors.empty()) return "Z1";
    std::ostringstream out;
    for (std::size_t i = 0; i < G.factors.size(); ++i) {
        if (i > 0) out << 'x';
        out << 'Z' << G.factors[i];
    }
    return out.str();
}

AbelianGroup parse_group(const std::string& text) {
    AbelianGroup G;
    std::size_t pos = 0;
    while (pos < text.size()) {
        if (text[pos] != 'Z') throw std::invalid_argument("parse_group: expected 'Z'");
        ++pos;
        std::size_t end = pos;
        while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
        if (end == pos) throw std::invalid_argument("parse_group: missing factor");
        const std::int64_t d = std::stoll(text.substr(pos, end - pos));
        if (d >= 2) G.factors.push_back(d);
        else if (d != 1) throw std::invalid_argument("parse_group: factor < 1");
        pos = end;
        if (pos < text.size()) {
            if (text[pos] != 'x') throw std::invalid_argument("parse_group: expected 'x'");
            ++pos;
        }
    }
    G.validate();
    return G;
}

IntMatrix read_matrix(std::istream& in) {
    long n = 0;
    if (!(in >> n) || n < 1) throw std::invalid_argument("matrix file: bad dimension line");
    IntMatrix M(n, n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            std::string tok;
            if (!(in >> tok)) throw std::invalid_argument("matrix file: not enough entries");
            M(i, j) = Int(tok);
        }
    return M;
}

void write_matrix(std::ostream& out, const IntMatrix& M) {
    out << M.rows() << '\n';
    for (Eigen::Index i = 0; i < M.rows(); ++i) {
        for (Eigen::Index j = 0; j < M.cols(); ++j) {
            if (j > 0) out << ' ';
            out << M(i, j);
        }
        out << '\n';
    }
}

}  // namespace mac
