#pragma once

#include <vector>

#include "multigraph.hpp"

namespace bdcut {

// Ordered bipartition of the vertex set; v1 is the source side.
struct Cut {
    VertexSet v1;
    VertexSet v2;

    friend bool operator==(const Cut&, const Cut&) = default;
};

// Builds the cut (v1, V \ v1).
Cut make_cut(const MultiGraph& g, VertexSet v1);

bool is_st_cut(const MultiGraph& g, const Cut& c, const VertexSet& s, const VertexSet& t);

// Component characterization of minimality: every component of G[v1] meets s
// and every component of G[v2] meets t. Throws if c is not an (s,t)-cut.
bool is_minimal_st_cut(const MultiGraph& g, const Cut& c, const VertexSet& s, const VertexSet& t);

struct MaxFlowResult {
    int value = 0;
    // Set when a limit was given and the flow value exceeded it; the cut
    // sides below are then unset.
    bool exceeded = false;
    // Source side of the minimum cut with the largest v1 (complement of the
    // vertices that reach t in the residual graph).
    VertexSet v1_max;
    // Source side of the minimum cut with the smallest v1 (vertices reachable
    // from s in the residual graph).
    VertexSet v1_min;
};

// Unit-capacity max flow between vertex sets, each parallel edge carrying one
// unit in either direction. The super-source/super-sink contraction is
// virtual: the search starts from all of s and stops at any vertex of t.
// Edges with alive[i] == 0 are ignored. With limit >= 0 the computation
// aborts once the flow value exceeds the limit.
MaxFlowResult max_flow(const MultiGraph& g, const VertexSet& s, const VertexSet& t,
                       const std::vector<char>* alive = nullptr, int limit = -1);

// Minimum cut-size over all (s,t)-cuts.
int min_cut_value(const MultiGraph& g, const VertexSet& s, const VertexSet& t);

// The unique minimum (s,t)-cut whose source side is largest.
Cut mm_cut(const MultiGraph& g, const VertexSet& s, const VertexSet& t);

}  // namespace bdcut
