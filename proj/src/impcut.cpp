#include "impcut.hpp"

#include <set>
#include <stdexcept>

namespace bdcut {

bool is_important_cut(const MultiGraph& g, const Cut& c, const VertexSet& s, const VertexSet& t) {
    if (!is_st_cut(g, c, s, t)) throw std::invalid_argument("not an (s,t)-cut");
    if (!is_minimal_st_cut(g, c, s, t)) return false;
    return mm_cut(g, c.v1, t).v1 == c.v1;
}

namespace {

struct EnumState {
    const MultiGraph& g;
    const VertexSet& s0;
    const VertexSet& t;
    int k0;
    std::set<VertexSet> found;
    std::vector<char> alive;
};

void enumerate(EnumState& st, const VertexSet& s_cur, int k_rem) {
    MaxFlowResult flow = max_flow(st.g, s_cur, st.t, &st.alive, k_rem);
    if (flow.exceeded) return;

    const VertexSet& x = flow.v1_max;
    if (!st.found.contains(x)) {
        Cut candidate = make_cut(st.g, x);
        if (cut_size(st.g, candidate.v1) <= st.k0 &&
            is_important_cut(st.g, candidate, st.s0, st.t))
            st.found.insert(x);
    }
    if (flow.value == 0) return;

    // Lowest-indexed surviving cut edge, oriented with u on the source side.
    int branch_edge = -1;
    VertexId absorbed = -1;
    for (int i = 0; i < st.g.edge_count(); ++i) {
        if (!st.alive[i]) continue;
        auto [u, v] = st.g.edges()[i];
        if (x.contains(u) == x.contains(v)) continue;
        branch_edge = i;
        absorbed = x.contains(u) ? v : u;
        break;
    }
    if (branch_edge < 0) return;

    if (!st.t.contains(absorbed)) {
        VertexSet grown = x;
        grown.insert(absorbed);
        enumerate(st, grown, k_rem);
    }
    if (k_rem >= 1) {
        st.alive[branch_edge] = 0;
        enumerate(st, x, k_rem - 1);
        st.alive[branch_edge] = 1;
    }
}

}  // namespace

std::vector<Cut> enumerate_important_cuts(const MultiGraph& g, const VertexSet& s,
                                          const VertexSet& t, int k) {
    if (k < 0) throw std::invalid_argument("budget must be nonnegative");
    if (s.empty() || t.empty()) throw std::invalid_argument("terminal sets must be nonempty");
    if (intersects(s, t)) throw std::invalid_argument("terminal sets must be disjoint");

    EnumState st{g, s, t, k, {}, std::vector<char>(g.edge_count(), 1)};
    enumerate(st, s, k);

    std::vector<Cut> out;
    out.reserve(st.found.size());
    for (const VertexSet& v1 : st.found) out.push_back(make_cut(g, v1));
    return out;
}

}  // namespace bdcut
