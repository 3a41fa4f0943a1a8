#pragma once

#include <set>
#include <utility>
#include <vector>

#include "impcut.hpp"

namespace bdcut {

// A graph extended by edges from a designated anchor vertex to an attachment
// set. The base graph is never modified; the combined view presents the base
// edges followed by the added edges, with stable indices.
class AugmentedGraph {
public:
    AugmentedGraph(const MultiGraph& base, VertexId anchor, const VertexSet& attach);

    const MultiGraph& graph() const { return combined_; }
    VertexId anchor() const { return anchor_; }
    const std::vector<MultiGraph::Edge>& added_edges() const { return added_; }
    int base_edge_count() const { return base_m_; }

private:
    static MultiGraph combine(const MultiGraph& base, VertexId anchor, const VertexSet& attach);

    MultiGraph combined_;
    VertexId anchor_;
    std::vector<MultiGraph::Edge> added_;
    int base_m_;
};

// Deduplicated family of vertex sets, canonically sorted.
class CandidateFamily {
public:
    CandidateFamily() = default;
    explicit CandidateFamily(const std::set<VertexSet>& members)
        : members_(members.begin(), members.end()) {}

    const std::vector<VertexSet>& members() const { return members_; }
    int size() const { return static_cast<int>(members_.size()); }
    bool contains(const VertexSet& x) const;

private:
    std::vector<VertexSet> members_;
};

// Deduplicated family of ordered pairs of disjoint vertex sets.
class CandidatePairFamily {
public:
    using Pair = std::pair<VertexSet, VertexSet>;

    CandidatePairFamily() = default;
    explicit CandidatePairFamily(std::vector<Pair> members) : members_(std::move(members)) {}

    const std::vector<Pair>& members() const { return members_; }
    int size() const { return static_cast<int>(members_.size()); }

private:
    std::vector<Pair> members_;
};

// Family of subsets of c, each of size at most ell, containing the trace
// c /\ v1 of every minimal (a,b)-cut (v1,v2) of size at most k with
// |c /\ v1| <= ell. Built by attaching c \ b to the lowest-indexed vertex of
// b and collecting small subsets of that anchor's neighborhood inside the
// source side of each important (a,b)-cut of size at most k+ell in the
// augmented graph. At most 2^(3(k+ell)) members.
CandidateFamily candidate_family_bounded_trace(const MultiGraph& g, const VertexSet& a,
                                               const VertexSet& b, const VertexSet& c,
                                               int k, int ell);

// Family of subsets of N(b_prime) containing N(b_prime) /\ v1 for every
// minimal (a,b)-cut (v1,v2) of size at most k, where b_prime is a subset of
// b. At most 2^(3k) members.
CandidateFamily candidate_family_neighbor_trace(const MultiGraph& g, const VertexSet& a,
                                                const VertexSet& b, const VertexSet& b_prime,
                                                int k);

// All ordered pairs (x1 from f1, x2 from f2) with x1 /\ x2 empty, f1-major
// order.
CandidatePairFamily disjoint_pairs(const CandidateFamily& f1, const CandidateFamily& f2);

}  // namespace bdcut
