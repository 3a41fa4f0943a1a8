#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "candidates.hpp"
#include "instance.hpp"

namespace bdcut {

inline std::uint64_t pow2_saturated(std::uint64_t e) {
    return e >= 63 ? UINT64_MAX : (std::uint64_t{1} << e);
}

struct SolveStats {
    std::uint64_t stage1_guesses = 0;
    std::uint64_t max_stage2_guesses = 0;
    std::uint64_t easy_emitted = 0;
    std::uint64_t easy_tested = 0;
    std::uint64_t stage1_bound = 0;   // 2^(12k)
    std::uint64_t stage2_bound = 0;   // 2^(6k)
    std::uint64_t total_bound = 0;    // 2^(18k)
};

// Polynomial feasibility test for easy instances. Infeasible when a
// component of the graph misses a u b (no minimal cut exists then), when an
// unsatisfied terminal vertex already violates its cap inside its own
// terminal set, or when the minimum (a,b)-cut exceeds the budget. Otherwise
// feasible; the witness is the largest-source-side minimum cut after moving
// every a-free source component across. Throws on non-easy instances.
Verdict solve_easy(const Instance& inst);

struct Stage1Guess {
    Instance restricted;  // terminals grown to a', b'
    VertexSet z_a1;       // guessed a-side trace of z_a
    VertexSet z_b2;       // guessed b-side trace of z_b
};

// First guessing stage: candidate traces x1 of z_a on the source side and x2
// of z_b on the sink side, leading to terminals a' = a u x1 u (z_b \ x2) and
// b' = b u (z_a \ x1) u x2. Pairs whose derived terminals collide are
// dropped. At most 2^(12k) entries; for every solution cut the entry with
// x1 = z_a /\ v1 and x2 = z_b /\ v2 is present.
std::vector<Stage1Guess> stage1_guesses(const Instance& inst);

// Second guessing stage for one stage-1 entry: candidate traces of the
// neighborhoods of z_b2 (on the source side) and of z_a1 (on the sink side).
// Emits only consistent easy instances; at most 2^(6k) of them.
std::vector<Instance> stage2_guesses(const Instance& inst1, const VertexSet& z_a1,
                                     const VertexSet& z_b2);

// Searches for a cut of size at most k whose source side contains a_pin and
// whose sink side contains b_pin, and that is minimal with respect to the
// smaller terminal sets a and b. Exact: returns a cut iff one exists.
std::optional<Cut> pinned_minimal_cut(const MultiGraph& g, const VertexSet& a, const VertexSet& b,
                                      const VertexSet& a_pin, const VertexSet& b_pin, int k);

// Full solver: enumerates the two guessing stages in canonical order, tests
// each easy instance, and returns the first witness that verifies against
// the original instance. Exact and deterministic.
Verdict solve(const Instance& inst);
Verdict solve(const Instance& inst, SolveStats& stats);

}  // namespace bdcut
