#pragma once

#include <utility>
#include <vector>

#include "vertex_set.hpp"

namespace bdcut {

// Undirected multigraph over dense vertex indices [0, n). Parallel edges are
// distinct entries with stable indices in [0, m); self-loops are rejected.
// A constructed graph is immutable.
class MultiGraph {
public:
    using Edge = std::pair<VertexId, VertexId>;

    MultiGraph(int n, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    // Incident entries of v as (neighbor, edge index), in edge-index order.
    const std::vector<std::pair<VertexId, int>>& incident(VertexId v) const;

    // Number of edge entries at v, parallel edges counted with multiplicity.
    int degree(VertexId v) const;

    // Edges from v into x \ {v}, counted with multiplicity.
    int degree_in(VertexId v, const VertexSet& x) const;

    // Vertices outside x adjacent to some vertex of x.
    VertexSet neighbors_of_set(const VertexSet& x) const;

    // Edges with one endpoint in x and the other in y; x and y must be
    // disjoint.
    int edges_between(const VertexSet& x, const VertexSet& y) const;

    // Connected components of the induced graph G[x], ordered by smallest
    // member.
    std::vector<VertexSet> components(const VertexSet& x) const;

    VertexSet all_vertices() const;

private:
    void check_vertex(VertexId v) const;

    int n_;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::pair<VertexId, int>>> inc_;
};

// Edges with exactly one endpoint in v1, counted with multiplicity.
int cut_size(const MultiGraph& g, const VertexSet& v1);

}  // namespace bdcut
