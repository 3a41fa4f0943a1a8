#include "flow.hpp"

#include <deque>
#include <stdexcept>

namespace bdcut {

namespace {

void validate_terminals(const MultiGraph& g, const VertexSet& s, const VertexSet& t) {
    if (s.empty() || t.empty()) throw std::invalid_argument("terminal sets must be nonempty");
    if (intersects(s, t)) throw std::invalid_argument("terminal sets must be disjoint");
    for (VertexId v : s) g.degree(v);
    for (VertexId v : t) g.degree(v);
}

}  // namespace

Cut make_cut(const MultiGraph& g, VertexSet v1) {
    VertexSet v2 = set_difference(g.all_vertices(), v1);
    return Cut{std::move(v1), std::move(v2)};
}

bool is_st_cut(const MultiGraph& g, const Cut& c, const VertexSet& s, const VertexSet& t) {
    if (c.v1.size() + c.v2.size() != g.vertex_count()) return false;
    if (intersects(c.v1, c.v2)) return false;
    return is_subset(s, c.v1) && is_subset(t, c.v2);
}

bool is_minimal_st_cut(const MultiGraph& g, const Cut& c, const VertexSet& s, const VertexSet& t) {
    if (!is_st_cut(g, c, s, t)) throw std::invalid_argument("not an (s,t)-cut");
    for (const VertexSet& comp : g.components(c.v1))
        if (!intersects(comp, s)) return false;
    for (const VertexSet& comp : g.components(c.v2))
        if (!intersects(comp, t)) return false;
    return true;
}

// Edge i yields the arc pair 2i (first -> second) and 2i+1 (second -> first).
MaxFlowResult max_flow(const MultiGraph& g, const VertexSet& s, const VertexSet& t,
                       const std::vector<char>* alive, int limit) {
    validate_terminals(g, s, t);

    const int n = g.vertex_count();
    const int m = g.edge_count();
    std::vector<int> residual(2 * m, 0);
    for (int i = 0; i < m; ++i) {
        if (alive && !(*alive)[i]) continue;
        residual[2 * i] = residual[2 * i + 1] = 1;
    }

    std::vector<char> in_s(n, 0), in_t(n, 0);
    for (VertexId v : s) in_s[v] = 1;
    for (VertexId v : t) in_t[v] = 1;

    auto arc_from = [&](VertexId v, int edge) {
        return g.edges()[edge].first == v ? 2 * edge : 2 * edge + 1;
    };

    MaxFlowResult result;
    std::vector<int> parent_arc(n);
    std::vector<char> visited(n);
    std::deque<VertexId> queue;

    for (;;) {
        std::fill(visited.begin(), visited.end(), 0);
        queue.clear();
        for (VertexId v : s) {
            visited[v] = 1;
            queue.push_back(v);
        }
        VertexId reached = -1;
        while (!queue.empty() && reached < 0) {
            VertexId v = queue.front();
            queue.pop_front();
            for (auto [u, e] : g.incident(v)) {
                if (visited[u]) continue;
                int arc = arc_from(v, e);
                if (residual[arc] <= 0) continue;
                visited[u] = 1;
                parent_arc[u] = arc;
                if (in_t[u]) {
                    reached = u;
                    break;
                }
                queue.push_back(u);
            }
        }
        if (reached < 0) break;

        // Augment one unit along the path.
        VertexId v = reached;
        while (!in_s[v]) {
            int arc = parent_arc[v];
            residual[arc] -= 1;
            residual[arc ^ 1] += 1;
            const auto& edge = g.edges()[arc / 2];
            v = (arc % 2 == 0) ? edge.first : edge.second;
        }
        ++result.value;
        if (limit >= 0 && result.value > limit) {
            result.exceeded = true;
            return result;
        }
    }

    // Vertices reachable from s in the residual graph: the smallest source
    // side among minimum cuts.
    {
        std::vector<char> reach(n, 0);
        queue.clear();
        for (VertexId v : s) {
            reach[v] = 1;
            queue.push_back(v);
        }
        while (!queue.empty()) {
            VertexId v = queue.front();
            queue.pop_front();
            for (auto [u, e] : g.incident(v)) {
                if (!reach[u] && residual[arc_from(v, e)] > 0) {
                    reach[u] = 1;
                    queue.push_back(u);
                }
            }
        }
        std::vector<VertexId> v1;
        for (int v = 0; v < n; ++v)
            if (reach[v]) v1.push_back(v);
        result.v1_min = VertexSet(std::move(v1));
    }

    // Vertices from which t is reachable in the residual graph form the sink
    // side of the largest-source-side minimum cut.
    {
        std::vector<char> reach(n, 0);
        queue.clear();
        for (VertexId v : t) {
            reach[v] = 1;
            queue.push_back(v);
        }
        while (!queue.empty()) {
            VertexId v = queue.front();
            queue.pop_front();
            for (auto [u, e] : g.incident(v)) {
                // u joins when the arc u -> v has residual capacity.
                if (!reach[u] && residual[arc_from(u, e)] > 0) {
                    reach[u] = 1;
                    queue.push_back(u);
                }
            }
        }
        std::vector<VertexId> v1;
        for (int v = 0; v < n; ++v)
            if (!reach[v]) v1.push_back(v);
        result.v1_max = VertexSet(std::move(v1));
    }

    return result;
}

int min_cut_value(const MultiGraph& g, const VertexSet& s, const VertexSet& t) {
    return max_flow(g, s, t).value;
}

Cut mm_cut(const MultiGraph& g, const VertexSet& s, const VertexSet& t) {
    MaxFlowResult r = max_flow(g, s, t);
    return make_cut(g, std::move(r.v1_max));
}

}  // namespace bdcut
