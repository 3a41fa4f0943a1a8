#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "instance.hpp"

namespace bdcut {

struct ParseError : std::runtime_error {
    int line;

    ParseError(int line_no, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + what), line(line_no) {}
};

// Line-oriented instance text:
//   c <comment>
//   p bdc <n> <m>        header, first non-comment line
//   e <u> <v>            1-indexed endpoints, repeatable for multiplicity
//   a <v> [<v>...]       terminal lines, repeatable, unioned
//   b <v> [<v>...]
//   ua <v> <cap>         per-vertex caps in [0, m]; unspecified caps are m
//   ub <v> <cap>
//   k <k>                required
Instance parse_instance(std::string_view text);

// Canonical text for an instance; parse(render(inst)) reproduces inst.
std::string render_instance(const Instance& inst);

// Seeded deterministic instance generator: repeat-sampled multigraph edges,
// terminals drawn first, caps from {0, 1, 2, m}.
class InstanceGen {
public:
    explicit InstanceGen(std::uint64_t seed) : state_(seed) {}

    Instance next(int max_n, int max_m, int max_k, int max_terminals = 3);

    std::uint64_t next_u64();
    std::uint64_t next_below(std::uint64_t bound);  // uniform-ish in [0, bound)

private:
    std::uint64_t state_;
};

}  // namespace bdcut
