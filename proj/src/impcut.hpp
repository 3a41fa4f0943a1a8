#pragma once

#include <vector>

#include "flow.hpp"

namespace bdcut {

// An important (s,t)-cut is a minimal (s,t)-cut whose source side cannot be
// grown without increasing the cut size: no (s,t)-cut (X', V\X') has
// X' strictly containing v1 and cut-size at most |E(v1)|. At most 4^k
// important cuts of size at most k exist.

// True iff c is a minimal (s,t)-cut and the largest-source-side minimum
// (v1,t)-cut is c itself. Throws if c is not an (s,t)-cut.
bool is_important_cut(const MultiGraph& g, const Cut& c, const VertexSet& s, const VertexSet& t);

// All important (s,t)-cuts of size at most k, deduplicated and ordered by
// source side. Branching: take the largest-source-side minimum cut (X, V\X);
// pick the lowest-indexed cut edge (u,v) with u in X; either v is absorbed
// into the source side, or the edge copy is committed to the final cut and
// deleted with the budget reduced by one. Every node's cut is emitted as a
// candidate and filtered by is_important_cut against the original graph.
std::vector<Cut> enumerate_important_cuts(const MultiGraph& g, const VertexSet& s,
                                          const VertexSet& t, int k);

}  // namespace bdcut
