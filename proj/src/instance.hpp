#pragma once

#include <optional>
#include <vector>

#include "flow.hpp"

namespace bdcut {

// A bounded-degree cut instance: graph, disjoint nonempty terminal sets a and
// b, per-vertex degree caps for each side (values in [0, m]), and a cut-size
// budget k. A solution is a minimal (a,b)-cut (v1,v2) of size at most k with
// deg(v; v1) <= cap_a[v] for v in v1 and deg(v; v2) <= cap_b[v] for v in v2.
struct Instance {
    MultiGraph g;
    VertexSet a;
    VertexSet b;
    std::vector<int> cap_a;
    std::vector<int> cap_b;
    int k;

    Instance(MultiGraph graph, VertexSet a_in, VertexSet b_in,
             std::vector<int> cap_a_in, std::vector<int> cap_b_in, int k_in);

    // All caps set to m, which never constrains anything.
    static Instance with_default_caps(MultiGraph graph, VertexSet a_in, VertexSet b_in, int k_in);
};

// The vertices whose total degree exceeds their cap on either side. Such a
// vertex can satisfy its cap only through incident cut edges or by sitting on
// the other side.
struct UnsatProfile {
    VertexSet z_a;
    VertexSet z_b;
};

struct Verdict {
    bool feasible = false;
    std::optional<Cut> witness;
};

UnsatProfile unsat_profile(const Instance& inst);

// Component characterization: every component of G[v1] contains a vertex of
// a and every component of G[v2] contains a vertex of b. Throws if c is not
// an (a,b)-cut.
bool is_minimal_cut(const Instance& inst, const Cut& c);

// Full solution check: (a,b)-cut, minimal, cut-size within budget, and both
// degree constraints. Never throws; malformed cuts yield false.
bool verify_solution(const Instance& inst, const Cut& c);

// An instance is easy when all unsatisfied vertices lie in a u b and the
// neighborhoods of z_a /\ a and z_b /\ b stay inside a u b. Degree
// feasibility is then independent of the chosen cut.
bool is_easy(const Instance& inst);

}  // namespace bdcut
