#include "instance.hpp"

#include <stdexcept>

namespace bdcut {

Instance::Instance(MultiGraph graph, VertexSet a_in, VertexSet b_in,
                   std::vector<int> cap_a_in, std::vector<int> cap_b_in, int k_in)
    : g(std::move(graph)),
      a(std::move(a_in)),
      b(std::move(b_in)),
      cap_a(std::move(cap_a_in)),
      cap_b(std::move(cap_b_in)),
      k(k_in) {
    if (a.empty() || b.empty()) throw std::invalid_argument("terminal sets must be nonempty");
    if (intersects(a, b)) throw std::invalid_argument("terminal sets must be disjoint");
    for (VertexId v : a) g.degree(v);
    for (VertexId v : b) g.degree(v);
    const auto n = static_cast<std::size_t>(g.vertex_count());
    if (cap_a.size() != n || cap_b.size() != n)
        throw std::invalid_argument("degree caps must be total on the vertex set");
    for (int cap : cap_a)
        if (cap < 0 || cap > g.edge_count())
            throw std::invalid_argument("cap_a value out of range");
    for (int cap : cap_b)
        if (cap < 0 || cap > g.edge_count())
            throw std::invalid_argument("cap_b value out of range");
    if (k < 0) throw std::invalid_argument("budget must be nonnegative");
}

Instance Instance::with_default_caps(MultiGraph graph, VertexSet a_in, VertexSet b_in, int k_in) {
    std::vector<int> caps(graph.vertex_count(), graph.edge_count());
    return Instance(std::move(graph), std::move(a_in), std::move(b_in), caps, caps, k_in);
}

UnsatProfile unsat_profile(const Instance& inst) {
    std::vector<VertexId> za, zb;
    for (VertexId v = 0; v < inst.g.vertex_count(); ++v) {
        int d = inst.g.degree(v);
        if (d > inst.cap_a[v]) za.push_back(v);
        if (d > inst.cap_b[v]) zb.push_back(v);
    }
    return UnsatProfile{VertexSet(std::move(za)), VertexSet(std::move(zb))};
}

bool is_minimal_cut(const Instance& inst, const Cut& c) {
    return is_minimal_st_cut(inst.g, c, inst.a, inst.b);
}

bool verify_solution(const Instance& inst, const Cut& c) {
    if (!is_st_cut(inst.g, c, inst.a, inst.b)) return false;
    if (!is_minimal_st_cut(inst.g, c, inst.a, inst.b)) return false;
    if (cut_size(inst.g, c.v1) > inst.k) return false;
    for (VertexId v : c.v1)
        if (inst.g.degree_in(v, c.v1) > inst.cap_a[v]) return false;
    for (VertexId v : c.v2)
        if (inst.g.degree_in(v, c.v2) > inst.cap_b[v]) return false;
    return true;
}

bool is_easy(const Instance& inst) {
    UnsatProfile z = unsat_profile(inst);
    VertexSet terminals = set_union(inst.a, inst.b);
    if (!is_subset(set_union(z.z_a, z.z_b), terminals)) return false;
    if (!is_subset(inst.g.neighbors_of_set(set_intersection(z.z_a, inst.a)), terminals))
        return false;
    if (!is_subset(inst.g.neighbors_of_set(set_intersection(z.z_b, inst.b)), terminals))
        return false;
    return true;
}

}  // namespace bdcut
