#include "candidates.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace bdcut {

namespace {

std::uint64_t pow2_saturated(std::uint64_t e) {
    return e >= 63 ? UINT64_MAX : (std::uint64_t{1} << e);
}

void validate_terminals(const VertexSet& a, const VertexSet& b) {
    if (a.empty() || b.empty()) throw std::invalid_argument("terminal sets must be nonempty");
    if (intersects(a, b)) throw std::invalid_argument("terminal sets must be disjoint");
}

// Inserts every subset of base with at most max_size elements.
void add_subsets(const std::vector<VertexId>& base, int max_size, std::set<VertexSet>& out) {
    std::vector<VertexId> cur;
    auto rec = [&](auto&& self, std::size_t i) -> void {
        out.insert(VertexSet(cur));
        if (static_cast<int>(cur.size()) == max_size) return;
        for (std::size_t j = i; j < base.size(); ++j) {
            cur.push_back(base[j]);
            self(self, j + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
}

}  // namespace

MultiGraph AugmentedGraph::combine(const MultiGraph& base, VertexId anchor,
                                   const VertexSet& attach) {
    std::vector<MultiGraph::Edge> edges = base.edges();
    for (VertexId u : attach) edges.emplace_back(anchor, u);
    return MultiGraph(base.vertex_count(), std::move(edges));
}

AugmentedGraph::AugmentedGraph(const MultiGraph& base, VertexId anchor, const VertexSet& attach)
    : combined_(combine(base, anchor, attach)),
      anchor_(anchor),
      base_m_(base.edge_count()) {
    if (attach.contains(anchor))
        throw std::invalid_argument("attachment set must not contain the anchor");
    for (VertexId u : attach) added_.emplace_back(anchor, u);
}

bool CandidateFamily::contains(const VertexSet& x) const {
    return std::binary_search(members_.begin(), members_.end(), x);
}

CandidateFamily candidate_family_bounded_trace(const MultiGraph& g, const VertexSet& a,
                                               const VertexSet& b, const VertexSet& c,
                                               int k, int ell) {
    validate_terminals(a, b);
    if (k < 0 || ell < 0) throw std::invalid_argument("budgets must be nonnegative");
    for (VertexId v : c) g.degree(v);

    // All of b lands on the sink side, so vertices of c inside b contribute
    // nothing to any trace; attaching them would also create a self-loop at
    // the anchor.
    VertexId anchor = b.values().front();
    AugmentedGraph h(g, anchor, set_difference(c, b));
    VertexSet anchor_nbrs = h.graph().neighbors_of_set(VertexSet{anchor});

    std::set<VertexSet> fam;
    for (const Cut& cut : enumerate_important_cuts(h.graph(), a, b, k + ell)) {
        VertexSet base = set_intersection(set_intersection(anchor_nbrs, cut.v1), c);
        add_subsets(base.values(), ell, fam);
    }

    CandidateFamily family(fam);
    if (static_cast<std::uint64_t>(family.size()) >
        pow2_saturated(3 * (static_cast<std::uint64_t>(k) + ell)))
        throw std::logic_error("bounded-trace family exceeds its size bound");
    return family;
}

CandidateFamily candidate_family_neighbor_trace(const MultiGraph& g, const VertexSet& a,
                                                const VertexSet& b, const VertexSet& b_prime,
                                                int k) {
    validate_terminals(a, b);
    if (k < 0) throw std::invalid_argument("budget must be nonnegative");
    if (!is_subset(b_prime, b))
        throw std::invalid_argument("b_prime must be a subset of b");

    VertexSet nbrs = g.neighbors_of_set(b_prime);

    std::set<VertexSet> fam;
    for (const Cut& cut : enumerate_important_cuts(g, a, b, k)) {
        VertexSet base = set_intersection(nbrs, cut.v1);
        // Every neighbor of b_prime inside the source side forces a cut edge,
        // so base has at most k elements.
        add_subsets(base.values(), base.size(), fam);
    }

    CandidateFamily family(fam);
    if (static_cast<std::uint64_t>(family.size()) > pow2_saturated(3 * static_cast<std::uint64_t>(k)))
        throw std::logic_error("neighbor-trace family exceeds its size bound");
    return family;
}

CandidatePairFamily disjoint_pairs(const CandidateFamily& f1, const CandidateFamily& f2) {
    std::vector<CandidatePairFamily::Pair> out;
    for (const VertexSet& x1 : f1.members())
        for (const VertexSet& x2 : f2.members())
            if (!intersects(x1, x2)) out.emplace_back(x1, x2);
    return CandidatePairFamily(std::move(out));
}

}  // namespace bdcut
