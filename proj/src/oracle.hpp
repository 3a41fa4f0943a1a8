#pragma once

#include "instance.hpp"

namespace bdcut {

// Definition-literal exhaustive solver, used as ground truth. Shares only the
// multigraph primitives with the solver.

// Enumerates all assignments of the free vertices (binary counting over the
// free vertices sorted by index, a set bit sending the vertex to v2) and
// accepts the first bipartition that is a minimal (a,b)-cut of size at most k
// and satisfies both degree constraints. Minimality is checked straight from
// the definition for n <= 12 and via the component characterization above
// that. Throws when more than 25 free vertices would have to be enumerated.
Verdict brute_force_solve(const Instance& inst);

// Raw definition of minimality: no a-side or b-side shrink of the cut keeps
// the crossing edge set inside the original one. Enumerates all proper
// shrinks; guarded to n <= 12. Throws if c is not an (a,b)-cut.
bool minimality_definitional(const Instance& inst, const Cut& c);

}  // namespace bdcut
