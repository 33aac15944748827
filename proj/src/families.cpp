#include "mac/families.hpp"

#include <stdexcept>

namespace mac {

namespace {

GroupElement elem(std::initializer_list<std::int64_t> coords) {
    return GroupElement{std::vector<std::int64_t>(coords)};
}

FamilyGraph circulant(std::int64_t N, std::vector<std::int64_t> undirected,
                      std::vector<std::int64_t> directed, long claimed_k) {
    AbelianGroup G{{N}};
    std::vector<GroupElement> und, dir;
    for (std::int64_t s : undirected) und.push_back(elem({((s % N) + N) % N}));
    for (std::int64_t s : directed) dir.push_back(elem({((s % N) + N) % N}));
    FamilyGraph out;
    out.graph = build(G, make_gen_set(G, und, dir));
    out.claimed_diameter = claimed_k;
    out.claimed_order = N;
    return out;
}

void require_involution(const MixedCayleyGraph& G, std::int64_t value) {
    const GroupElement g = elem({value});
    if (element_order(g, G.group) != 2)
        throw std::logic_error("family constructor: claimed involution has wrong order");
}

}  // namespace

FamilyGraph base_degree4_family(long k) {
    if (k < 1) throw std::invalid_argument("base_degree4_family: k >= 1 required");
    const std::int64_t N = 2LL * k * k + 2 * k + 1;
    return circulant(N, {k, k + 1}, {}, k);
}

FamilyGraph diamond_family(long k) {
    if (k < 2) throw std::invalid_argument("diamond_family: k >= 2 required");
    const std::int64_t N = 4LL * k * k;
    FamilyGraph out = circulant(N, {1, 2 * k - 1, 2LL * k * k}, {}, k);
    require_involution(out.graph, 2LL * k * k);
    return out;
}

FamilyGraph t_tile_base_family(long k) {
    if (k < 1) throw std::invalid_argument("t_tile_base_family: k >= 1 required");
    // N = floor((2k+3)^2 / 6) in all three branches.
    if (k % 3 == 0) {
        const long x = k / 3;
        return circulant(6LL * x * x + 6 * x + 1, {1}, {6L * x + 3}, k);
    }
    if (k % 3 == 2) {  // k = 3x - 1
        const long x = (k + 1) / 3;
        return circulant(6LL * x * x + 2 * x, {x}, {3L * x + 1}, k);
    }
    const long x = (k + 2) / 3;  // k = 3x - 2
    return circulant(6LL * x * x - 2 * x, {x}, {3L * x - 1}, k);
}

FamilyGraph t_family(long k) {
    if (k < 2) throw std::invalid_argument("t_family: k >= 2 required");
    if (k == 2) return circulant(10, {1, 5}, {2}, 2);
    if (k % 3 == 2) {  // k = 3x - 1, x >= 2
        const long x = (k + 1) / 3;
        if (x < 2)
            throw std::logic_error("t_family: x = 1 is excluded; (0,1) and (3,1) would both "
                                   "be involutions");
        // Cay(Z_6x x Z_2x, {(+-1,0), (0,1), (3x,x)}) in invariant-factor
        // coordinates (Z_2x, Z_6x).
        AbelianGroup G{{2L * x, 6L * x}};
        FamilyGraph out;
        out.graph = build(G, make_gen_set(G, {elem({0, 1}), elem({x, 3L * x})},
                                          {elem({1, 0})}));
        out.claimed_diameter = k;
        out.claimed_order = 12LL * x * x;
        if (element_order(elem({x, 3L * x}), G) != 2)
            throw std::logic_error("t_family: claimed involution has wrong order");
        return out;
    }
    if (k % 3 == 0) {
        const long x = k / 3;
        const std::int64_t N = 12LL * x * x + 8 * x;
        FamilyGraph out = circulant(N, {1, 6LL * x * x + 4 * x}, {12LL * x * x + 2 * x - 1}, k);
        require_involution(out.graph, 6LL * x * x + 4 * x);
        return out;
    }
    const long x = (k - 1) / 3;  // k = 3x + 1
    const std::int64_t N = 12LL * x * x + 16 * x + 4;
    FamilyGraph out = circulant(N, {1, 6LL * x * x + 8 * x + 2}, {6L * x + 5}, k);
    require_involution(out.graph, 6LL * x * x + 8 * x + 2);
    return out;
}

FamilyGraph family_by_name(const std::string& name, long k) {
    if (name == "base4") return base_degree4_family(k);
    if (name == "diamond") return diamond_family(k);
    if (name == "ttile") return t_tile_base_family(k);
    if (name == "t") return t_family(k);
    throw std::invalid_argument("unknown family '" + name +
                                "' (expected base4, diamond, ttile, or t)");
}

}  // namespace mac
