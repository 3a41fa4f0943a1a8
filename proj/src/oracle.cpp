#include "oracle.hpp"

#include <cstdint>
#include <stdexcept>

namespace bdcut {

namespace {

// Crossing-edge set of a side as index-order bit blocks.
std::vector<std::uint64_t> boundary_mask(const MultiGraph& g, const std::vector<char>& in_side) {
    std::vector<std::uint64_t> mask((g.edge_count() + 63) / 64, 0);
    for (int i = 0; i < g.edge_count(); ++i) {
        auto [u, v] = g.edges()[i];
        if (in_side[u] != in_side[v]) mask[i / 64] |= std::uint64_t{1} << (i % 64);
    }
    return mask;
}

bool mask_subset(const std::vector<std::uint64_t>& inner, const std::vector<std::uint64_t>& outer) {
    for (std::size_t i = 0; i < inner.size(); ++i)
        if (inner[i] & ~outer[i]) return false;
    return true;
}

// Does some proper shrink of side (keeping anchor inside) have its crossing
// edges contained in the full side's crossing edges?
bool shrink_dominates(const MultiGraph& g, const VertexSet& side, const VertexSet& anchor,
                      const std::vector<std::uint64_t>& side_mask) {
    VertexSet movable = set_difference(side, anchor);
    const auto free_count = static_cast<std::uint32_t>(movable.size());
    std::vector<char> in_shrunk(g.vertex_count(), 0);
    for (std::uint32_t drop = 1; drop < (std::uint32_t{1} << free_count); ++drop) {
        std::fill(in_shrunk.begin(), in_shrunk.end(), 0);
        for (VertexId v : anchor) in_shrunk[v] = 1;
        for (std::uint32_t j = 0; j < free_count; ++j)
            if (!(drop & (std::uint32_t{1} << j))) in_shrunk[movable.values()[j]] = 1;
        if (mask_subset(boundary_mask(g, in_shrunk), side_mask)) return true;
    }
    return false;
}

// Component characterization, written against the graph primitives only.
bool minimal_by_components(const MultiGraph& g, const Cut& c, const VertexSet& a,
                           const VertexSet& b) {
    for (const VertexSet& comp : g.components(c.v1))
        if (!intersects(comp, a)) return false;
    for (const VertexSet& comp : g.components(c.v2))
        if (!intersects(comp, b)) return false;
    return true;
}

}  // namespace

bool minimality_definitional(const Instance& inst, const Cut& c) {
    if (inst.g.vertex_count() > 12)
        throw std::invalid_argument("definitional minimality check is guarded to n <= 12");
    if (c.v1.size() + c.v2.size() != inst.g.vertex_count() || intersects(c.v1, c.v2) ||
        !is_subset(inst.a, c.v1) || !is_subset(inst.b, c.v2))
        throw std::invalid_argument("not an (a,b)-cut");

    std::vector<char> in_v1(inst.g.vertex_count(), 0);
    for (VertexId v : c.v1) in_v1[v] = 1;
    std::vector<std::uint64_t> cut_mask = boundary_mask(inst.g, in_v1);

    if (shrink_dominates(inst.g, c.v1, inst.a, cut_mask)) return false;
    if (shrink_dominates(inst.g, c.v2, inst.b, cut_mask)) return false;
    return true;
}

Verdict brute_force_solve(const Instance& inst) {
    const MultiGraph& g = inst.g;
    const int n = g.vertex_count();
    VertexSet free_set = set_difference(set_difference(g.all_vertices(), inst.a), inst.b);
    const auto free_count = static_cast<std::uint32_t>(free_set.size());
    if (free_count > 25) throw std::invalid_argument("instance too large for the exhaustive oracle");
    const bool definitional = n <= 12;

    std::vector<char> in_v1(n, 0);
    for (std::uint64_t assign = 0; assign < (std::uint64_t{1} << free_count); ++assign) {
        std::fill(in_v1.begin(), in_v1.end(), 0);
        for (VertexId v : inst.a) in_v1[v] = 1;
        for (std::uint32_t j = 0; j < free_count; ++j)
            if (!(assign & (std::uint64_t{1} << j))) in_v1[free_set.values()[j]] = 1;

        int crossing = 0;
        for (auto [u, v] : g.edges())
            if (in_v1[u] != in_v1[v]) ++crossing;
        if (crossing > inst.k) continue;

        bool degree_ok = true;
        for (int v = 0; v < n && degree_ok; ++v) {
            int same_side = 0;
            for (auto [u, e] : g.incident(v)) {
                (void)e;
                if (in_v1[u] == in_v1[v]) ++same_side;
            }
            degree_ok = in_v1[v] ? same_side <= inst.cap_a[v] : same_side <= inst.cap_b[v];
        }
        if (!degree_ok) continue;

        std::vector<VertexId> v1b;
        for (int v = 0; v < n; ++v)
            if (in_v1[v]) v1b.push_back(v);
        Cut cut = make_cut(g, VertexSet(std::move(v1b)));
        bool minimal = definitional ? minimality_definitional(inst, cut)
                                    : minimal_by_components(g, cut, inst.a, inst.b);
        if (minimal) return Verdict{true, std::move(cut)};
    }
    return Verdict{};
}

}  // namespace bdcut
