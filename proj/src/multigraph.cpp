#include "multigraph.hpp"

#include <stdexcept>
#include <string>

namespace bdcut {

MultiGraph::MultiGraph(int n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)), inc_(std::max(n, 0)) {
    if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        auto [u, v] = edges_[i];
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            throw std::invalid_argument("edge " + std::to_string(i) + " has endpoint out of range");
        if (u == v)
            throw std::invalid_argument("edge " + std::to_string(i) + " is a self-loop");
        inc_[u].emplace_back(v, static_cast<int>(i));
        inc_[v].emplace_back(u, static_cast<int>(i));
    }
}

void MultiGraph::check_vertex(VertexId v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("vertex out of range");
}

const std::vector<std::pair<VertexId, int>>& MultiGraph::incident(VertexId v) const {
    check_vertex(v);
    return inc_[v];
}

int MultiGraph::degree(VertexId v) const {
    check_vertex(v);
    return static_cast<int>(inc_[v].size());
}

int MultiGraph::degree_in(VertexId v, const VertexSet& x) const {
    check_vertex(v);
    int d = 0;
    for (auto [u, e] : inc_[v]) {
        (void)e;
        if (u != v && x.contains(u)) ++d;
    }
    return d;
}

VertexSet MultiGraph::neighbors_of_set(const VertexSet& x) const {
    std::vector<VertexId> out;
    for (VertexId v : x) {
        check_vertex(v);
        for (auto [u, e] : inc_[v]) {
            (void)e;
            if (!x.contains(u)) out.push_back(u);
        }
    }
    return VertexSet(std::move(out));
}

int MultiGraph::edges_between(const VertexSet& x, const VertexSet& y) const {
    if (intersects(x, y)) throw std::invalid_argument("edges_between requires disjoint sets");
    int count = 0;
    for (auto [u, v] : edges_) {
        if ((x.contains(u) && y.contains(v)) || (x.contains(v) && y.contains(u))) ++count;
    }
    return count;
}

std::vector<VertexSet> MultiGraph::components(const VertexSet& x) const {
    std::vector<char> in_x(n_, 0);
    for (VertexId v : x) {
        check_vertex(v);
        in_x[v] = 1;
    }
    std::vector<char> seen(n_, 0);
    std::vector<VertexSet> comps;
    for (VertexId seed : x) {
        if (seen[seed]) continue;
        std::vector<VertexId> comp;
        std::vector<VertexId> stack{seed};
        seen[seed] = 1;
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (auto [u, e] : inc_[v]) {
                (void)e;
                if (in_x[u] && !seen[u]) {
                    seen[u] = 1;
                    stack.push_back(u);
                }
            }
        }
        comps.emplace_back(std::move(comp));
    }
    return comps;
}

VertexSet MultiGraph::all_vertices() const {
    std::vector<VertexId> vs(n_);
    for (int i = 0; i < n_; ++i) vs[i] = i;
    return VertexSet(std::move(vs));
}

int cut_size(const MultiGraph& g, const VertexSet& v1) {
    int count = 0;
    for (auto [u, v] : g.edges()) {
        if (v1.contains(u) != v1.contains(v)) ++count;
    }
    return count;
}

}  // namespace bdcut
