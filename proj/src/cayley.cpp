#include "mac/cayley.hpp"

#include <algorithm>
#include <istream>
#include <limits>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

namespace mac {

std::int64_t MixedCayleyGraph::index_of(const GroupElement& g) const {
    std::int64_t idx = 0;
    for (std::size_t i = 0; i < strides_.size(); ++i) idx += g.coords[i] * strides_[i];
    return idx;
}

GroupElement MixedCayleyGraph::element_at(std::int64_t index) const {
    GroupElement g = zero_element(group);
    for (std::size_t i = 0; i < group.factors.size(); ++i) {
        g.coords[i] = index % group.factors[i];
        index /= group.factors[i];
    }
    return g;
}

namespace {

GroupElement pair_representative(const AbelianGroup& G, const GroupElement& g) {
    GroupElement n = negate(G, g);
    return std::min(g, n);
}

void check_residues(const AbelianGroup& G, const GroupElement& g) {
    if (g.coords.size() != G.factors.size())
        throw std::invalid_argument("generator rank does not match the group");
    for (std::size_t i = 0; i < g.coords.size(); ++i)
        if (g.coords[i] < 0 || g.coords[i] >= G.factors[i])
            throw std::invalid_argument("generator coordinate out of range");
}

}  // namespace

MixedCayleyGraph build(const AbelianGroup& group, const MixedGenSet& gens) {
    group.validate();
    MixedCayleyGraph G;
    G.group = group;
    G.order = group.order();
    G.strides_.assign(group.factors.size(), 1);
    for (std::size_t i = 1; i < group.factors.size(); ++i)
        G.strides_[i] = G.strides_[i - 1] * group.factors[i - 1];

    MixedGenSet normalized = gens;
    for (auto& g : normalized.pairs) {
        check_residues(group, g);
        g = pair_representative(group, g);
    }
    std::sort(normalized.pairs.begin(), normalized.pairs.end());
    std::sort(normalized.involutions.begin(), normalized.involutions.end());
    std::sort(normalized.directed.begin(), normalized.directed.end());

    std::set<GroupElement> pair_classes;
    for (const auto& g : normalized.involutions) {
        check_residues(group, g);
        if (is_zero(g) || element_order(g, group) != 2)
            throw std::invalid_argument("involution entry does not have order 2");
    }
    if (std::adjacent_find(normalized.involutions.begin(), normalized.involutions.end()) !=
        normalized.involutions.end())
        throw std::invalid_argument("duplicate involution");
    for (const auto& g : normalized.pairs) {
        if (element_order(g, group) < 3)
            throw std::invalid_argument("pair entry must have order >= 3");
        if (!pair_classes.insert(g).second) throw std::invalid_argument("duplicate pair class");
    }
    std::set<GroupElement> directed_set;
    for (const auto& b : normalized.directed) {
        check_residues(group, b);
        if (element_order(b, group) < 3)
            throw std::invalid_argument("directed entry must have order >= 3 (an order-2 "
                                        "element is an involution)");
        if (!directed_set.insert(b).second) throw std::invalid_argument("duplicate directed");
        if (pair_classes.count(pair_representative(group, b)))
            throw std::invalid_argument("directed generator duplicates a pair class");
    }
    for (const auto& b : normalized.directed)
        if (directed_set.count(negate(group, b)))
            throw std::invalid_argument("directed generator with its inverse present");

    G.gens = std::move(normalized);
    G.undirected_degree =
        static_cast<long>(G.gens.involutions.size() + 2 * G.gens.pairs.size());
    G.directed_degree = static_cast<long>(G.gens.directed.size());

    const BfsResult reach = bfs_layers(G, 0);
    if (reach.reached != G.order)
        throw std::invalid_argument("generating set does not generate the group");
    return G;
}

MixedGenSet make_gen_set(const AbelianGroup& group,
                         const std::vector<GroupElement>& undirected,
                         const std::vector<GroupElement>& directed) {
    std::set<GroupElement> sigma;
    for (const auto& g : undirected) {
        check_residues(group, g);
        if (is_zero(g)) continue;
        sigma.insert(g);
        sigma.insert(negate(group, g));
    }
    for (const auto& b : directed) {
        check_residues(group, b);
        if (is_zero(b)) continue;
        sigma.insert(b);
    }
    MixedGenSet out;
    std::set<GroupElement> seen_pairs;
    for (const auto& g : sigma) {
        if (element_order(g, group) == 2) {
            out.involutions.push_back(g);
        } else if (sigma.count(negate(group, g))) {
            const GroupElement rep = pair_representative(group, g);
            if (seen_pairs.insert(rep).second) out.pairs.push_back(rep);
        } else {
            out.directed.push_back(g);
        }
    }
    return out;
}

BfsResult bfs_layers(const MixedCayleyGraph& G, std::int64_t source) {
    // Out-steps: +g for involutions, +/-g for pairs, +b for directed.
    std::vector<GroupElement> steps;
    for (const auto& g : G.gens.involutions) steps.push_back(g);
    for (const auto& g : G.gens.pairs) {
        steps.push_back(g);
        steps.push_back(negate(G.group, g));
    }
    for (const auto& b : G.gens.directed) steps.push_back(b);

    std::vector<std::int32_t> dist(G.order, -1);
    std::vector<std::int64_t> frontier{source}, next;
    dist[source] = 0;
    BfsResult out;
    out.reached = 1;
    out.layer_sizes.push_back(1);
    while (!frontier.empty()) {
        next.clear();
        for (std::int64_t u : frontier) {
            const GroupElement eu = G.element_at(u);
            for (const auto& s : steps) {
                const std::int64_t v = G.index_of(add(G.group, eu, s));
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    next.push_back(v);
                }
            }
        }
        if (!next.empty()) {
            out.layer_sizes.push_back(static_cast<std::int64_t>(next.size()));
            out.reached += static_cast<std::int64_t>(next.size());
        }
        frontier.swap(next);
    }
    out.eccentricity = static_cast<long>(out.layer_sizes.size()) - 1;
    return out;
}

long diameter(const MixedCayleyGraph& G) { return bfs_layers(G, 0).eccentricity; }

std::vector<std::int64_t> distance_profile(const MixedCayleyGraph& G) {
    return bfs_layers(G, 0).layer_sizes;
}

namespace {

// Map an element given by coordinates in a source presentation through
// the images of that presentation's unit vectors.
GroupElement map_through(const AbelianGroup& target,
                         const std::vector<GroupElement>& images,
                         const std::vector<std::int64_t>& coords) {
    GroupElement out = zero_element(target);
    for (std::size_t i = 0; i < coords.size(); ++i)
        out = add(target, out, scalar_mul(target, coords[i], images[i]));
    return out;
}

// Square basis of the lattice spanned by the rows of a (possibly
// rectangular) full-column-rank matrix, by integer row elimination.
IntMatrix row_lattice_basis(IntMatrix A) {
    const Eigen::Index m = A.rows(), n = A.cols();
    for (Eigen::Index col = 0; col < n; ++col) {
        while (true) {
            Eigen::Index pivot = -1;
            Int best;
            for (Eigen::Index i = col; i < m; ++i) {
                if (A(i, col) == 0) continue;
                Int a = abs(A(i, col));
                if (pivot < 0 || a < best) {
                    pivot = i;
                    best = std::move(a);
                }
            }
            if (pivot < 0) throw std::invalid_argument("row_lattice_basis: rank deficient");
            if (pivot != col) A.row(col).swap(A.row(pivot));
            bool clean = true;
            for (Eigen::Index i = col + 1; i < m; ++i) {
                if (A(i, col) == 0) continue;
                const Int q = A(i, col) / A(col, col);
                if (q != 0) A.row(i) -= q * A.row(col);
                if (A(i, col) != 0) clean = false;
            }
            if (clean) break;
        }
    }
    return A.topRows(n);
}

}  // namespace

MixedCayleyGraph cartesian_product(const MixedCayleyGraph& G1, const MixedCayleyGraph& G2) {
    const std::size_t n1 = G1.group.factors.size(), n2 = G2.group.factors.size();
    IntMatrix D = IntMatrix::Zero(n1 + n2, n1 + n2);
    for (std::size_t i = 0; i < n1; ++i) D(i, i) = G1.group.factors[i];
    for (std::size_t i = 0; i < n2; ++i) D(n1 + i, n1 + i) = G2.group.factors[i];
    const GroupPresentation pres =
        n1 + n2 == 0 ? GroupPresentation{} : group_from_matrix(D);

    std::vector<GroupElement> undirected, directed;
    auto map_block = [&](const MixedCayleyGraph& G, std::size_t offset) {
        auto mapped = [&](const GroupElement& g) {
            std::vector<std::int64_t> coords(n1 + n2, 0);
            for (std::size_t i = 0; i < g.coords.size(); ++i) coords[offset + i] = g.coords[i];
            return map_through(pres.group, pres.generator_images, coords);
        };
        for (const auto& g : G.gens.involutions) undirected.push_back(mapped(g));
        for (const auto& g : G.gens.pairs) undirected.push_back(mapped(g));
        for (const auto& b : G.gens.directed) directed.push_back(mapped(b));
    };
    map_block(G1, 0);
    map_block(G2, n1);
    return build(pres.group, make_gen_set(pres.group, undirected, directed));
}

MixedCayleyGraph contract_involution(const MixedCayleyGraph& G, const GroupElement& b) {
    if (std::find(G.gens.involutions.begin(), G.gens.involutions.end(), b) ==
        G.gens.involutions.end())
        throw std::invalid_argument("contract_involution: b is not an involution of the set");

    const std::size_t n = G.group.factors.size();
    IntMatrix A = IntMatrix::Zero(n + 1, n);
    for (std::size_t i = 0; i < n; ++i) A(i, i) = G.group.factors[i];
    for (std::size_t j = 0; j < n; ++j) A(n, j) = b.coords[j];
    const GroupPresentation pres = group_from_matrix(row_lattice_basis(A));

    std::vector<GroupElement> undirected, directed;
    auto mapped = [&](const GroupElement& g) {
        std::vector<std::int64_t> coords(g.coords.begin(), g.coords.end());
        return map_through(pres.group, pres.generator_images, coords);
    };
    for (const auto& g : G.gens.involutions)
        if (!(g == b)) undirected.push_back(mapped(g));
    for (const auto& g : G.gens.pairs) undirected.push_back(mapped(g));
    for (const auto& d : G.gens.directed) directed.push_back(mapped(d));

    MixedCayleyGraph quotient =
        build(pres.group, make_gen_set(pres.group, undirected, directed));
    if (quotient.order * 2 != G.order)
        throw std::logic_error("contract_involution: quotient order is not N/2");
    return quotient;
}

MixedCayleyGraph graph_from_matrix(const IntMatrix& M, const std::vector<GenKind>& roles) {
    const GroupPresentation pres = group_from_matrix(M);
    if (!roles.empty() && static_cast<Eigen::Index>(roles.size()) != M.rows())
        throw std::invalid_argument("graph_from_matrix: one role per unit vector expected");
    std::vector<GroupElement> undirected, directed;
    for (Eigen::Index i = 0; i < M.rows(); ++i) {
        const GenKind kind = roles.empty() ? GenKind::pair : roles[i];
        if (kind == GenKind::directed)
            directed.push_back(pres.generator_images[i]);
        else
            undirected.push_back(pres.generator_images[i]);
    }
    return build(pres.group, make_gen_set(pres.group, undirected, directed));
}

StretchResult stretch_row(const IntMatrix& M, Eigen::Index row, long alpha,
                          const std::vector<GenKind>& roles) {
    if (alpha <= 1) throw std::invalid_argument("stretch_row: alpha must exceed 1");
    if (row < 0 || row >= M.rows()) throw std::invalid_argument("stretch_row: bad row index");
    StretchResult out;
    out.base = graph_from_matrix(M, roles);
    out.base_diameter = diameter(out.base);

    IntMatrix Mp = M;
    Mp.row(row) *= Int(alpha);
    const GroupPresentation pres = group_from_matrix(Mp);

    std::vector<GroupElement> undirected, directed;
    for (Eigen::Index i = 0; i < M.rows(); ++i) {
        const GenKind kind = roles.empty() ? GenKind::pair : roles[i];
        if (kind == GenKind::directed)
            directed.push_back(pres.generator_images[i]);
        else
            undirected.push_back(pres.generator_images[i]);
    }
    // The multiples j*u of the original row u tie the alpha sheets
    // together; the set {j*u : 1 <= j <= alpha} is inverse-closed because
    // alpha*u = 0 in the stretched group, so they enter undirected.
    std::vector<std::int64_t> coords(M.cols());
    for (Eigen::Index j = 0; j < M.cols(); ++j) {
        if (M(row, j) > std::numeric_limits<std::int64_t>::max() ||
            M(row, j) < std::numeric_limits<std::int64_t>::min())
            throw std::overflow_error("stretch_row: row entry exceeds 64 bits");
        coords[j] = static_cast<std::int64_t>(M(row, j));
    }
    const GroupElement u = map_through(pres.group, pres.generator_images, coords);
    for (long j = 1; j <= alpha; ++j) undirected.push_back(scalar_mul(pres.group, j, u));

    out.stretched = build(pres.group, make_gen_set(pres.group, undirected, directed));
    out.stretched_diameter = diameter(out.stretched);
    out.diameter_plus_one = (out.stretched_diameter == out.base_diameter + 1);
    return out;
}

DegreeSpec induced_degree_spec(const MixedCayleyGraph& G, long k) {
    DegreeSpec spec;
    spec.k = k;
    spec.r_alpha = static_cast<long>(G.gens.involutions.size());
    for (const auto& g : G.gens.pairs) {
        const std::int64_t q = element_order(g, G.group);
        if (q > 2 * k + 1)
            ++spec.r_omega;
        else
            ++spec.r_odd[q % 2 == 1 ? (q - 1) / 2 : q / 2];
    }
    for (const auto& b : G.gens.directed) {
        const std::int64_t q = element_order(b, G.group);
        if (q > k + 1)
            ++spec.z_omega;
        else
            ++spec.z_ord[q - 1];
    }
    spec.validate();
    return spec;
}

namespace {

std::string format_coords(const GroupElement& g) {
    std::ostringstream out;
    for (std::size_t i = 0; i < g.coords.size(); ++i) {
        if (i > 0) out << ',';
        out << g.coords[i];
    }
    return out.str();
}

GroupElement parse_coords(const AbelianGroup& G, const std::string& text) {
    GroupElement g = zero_element(G);
    std::size_t pos = 0, idx = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        if (idx >= g.coords.size())
            throw std::invalid_argument("graph file: too many coordinates");
        g.coords[idx++] = std::stoll(text.substr(pos, comma - pos));
        pos = comma + 1;
        if (comma == text.size()) break;
    }
    if (idx != g.coords.size())
        throw std::invalid_argument("graph file: wrong number of coordinates");
    return g;
}

}  // namespace

void write_graph(std::ostream& out, const MixedCayleyGraph& G) {
    out << "group " << format_group(G.group) << '\n';
    for (const auto& g : G.gens.involutions) out << "inv " << format_coords(g) << '\n';
    for (const auto& g : G.gens.pairs) out << "pair " << format_coords(g) << '\n';
    for (const auto& b : G.gens.directed) out << "dir " << format_coords(b) << '\n';
}

MixedCayleyGraph read_graph(std::istream& in) {
    std::string line;
    bool have_group = false;
    AbelianGroup group;
    MixedGenSet gens;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "group") {
            std::string name;
            if (!(ls >> name)) throw std::invalid_argument("graph file: missing group name");
            group = parse_group(name);
            have_group = true;
        } else if (tag == "inv" || tag == "pair" || tag == "dir") {
            if (!have_group)
                throw std::invalid_argument("graph file: generator before group line");
            std::string coords;
            if (!(ls >> coords)) throw std::invalid_argument("graph file: missing coordinates");
            const GroupElement g = parse_coords(group, coords);
            if (tag == "inv")
                gens.involutions.push_back(g);
            else if (tag == "pair")
                gens.pairs.push_back(g);
            else
                gens.directed.push_back(g);
        } else {
            throw std::invalid_argument("graph file: unknown line tag '" + tag + "'");
        }
    }
    if (!have_group) throw std::invalid_argument("graph file: no group line");
    return build(group, gens);
}

void write_dot(std::ostream& out, const MixedCayleyGraph& G) {
    if (G.order > 200) throw std::invalid_argument("write_dot: order above 200");
    out << "digraph cayley {\n";
    for (std::int64_t u = 0; u < G.order; ++u) {
        const GroupElement eu = G.element_at(u);
        for (const auto& g : G.gens.involutions) {
            const std::int64_t v = G.index_of(add(G.group, eu, g));
            if (u < v) out << "  " << u << " -> " << v << " [dir=none];\n";
        }
        for (const auto& g : G.gens.pairs) {
            const std::int64_t v = G.index_of(add(G.group, eu, g));
            if (u != v) out << "  " << u << " -> " << v << " [dir=none];\n";
        }
        for (const auto& b : G.gens.directed) {
            const std::int64_t v = G.index_of(add(G.group, eu, b));
            out << "  " << u << " -> " << v << ";\n";
        }
    }
    out << "}\n";
}

}  // namespace mac
