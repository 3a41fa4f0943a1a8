// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one pass/fail line per criterion. Exits nonzero if any fails.
//
// Usage: acceptance_test --cli <path-to-bdcut-binary>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "instance_io.hpp"
#include "oracle.hpp"
#include "solver.hpp"
#include "test_util.hpp"

using namespace bdcut;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

VertexSet from_mask(int n, unsigned mask) {
    std::vector<VertexId> vs;
    for (int v = 0; v < n; ++v)
        if ((mask >> v) & 1u) vs.push_back(v);
    return VertexSet(std::move(vs));
}

unsigned to_mask(const VertexSet& s) {
    unsigned mask = 0;
    for (VertexId v : s) mask |= 1u << v;
    return mask;
}

// ---- shared state fed by criterion 1 and consumed by 5 and 6 ----

struct PipelineEvidence {
    std::uint64_t instances = 0;
    std::uint64_t feasible = 0;
    std::uint64_t witness_failures = 0;
    std::uint64_t bound_violations = 0;
};

PipelineEvidence evidence;

// ---- criterion 1: solver vs exhaustive oracle ----

Outcome criterion_oracle_equivalence() {
    auto start = std::chrono::steady_clock::now();
    InstanceGen gen(20260810);
    const int trials = 2000;
    int disagreements = 0;

    for (int trial = 0; trial < trials; ++trial) {
        Instance inst = gen.next(10, 20, 4);
        SolveStats stats;
        Verdict got = solve(inst, stats);
        Verdict want = brute_force_solve(inst);

        ++evidence.instances;
        if (stats.stage1_guesses > stats.stage1_bound ||
            stats.max_stage2_guesses > stats.stage2_bound ||
            stats.easy_emitted > stats.total_bound)
            ++evidence.bound_violations;
        if (got.feasible) {
            ++evidence.feasible;
            if (!verify_solution(inst, *got.witness)) ++evidence.witness_failures;
        }
        if (want.feasible && !verify_solution(inst, *want.witness)) ++evidence.witness_failures;

        if (got.feasible != want.feasible) ++disagreements;
    }

    double elapsed = seconds_since(start);
    std::ostringstream detail;
    detail << trials << " instances, " << disagreements << " disagreements, "
           << evidence.feasible << " feasible, " << std::fixed << elapsed << " s";
    return Outcome{disagreements == 0 && elapsed < 300.0, detail.str()};
}

// ---- criterion 2: important-cut exactness ----

Outcome criterion_important_cut_exactness() {
    testutil::Rng rng(26081);
    const int graphs = 320;
    int mismatches = 0;
    std::size_t max_count = 0;

    for (int trial = 0; trial < graphs; ++trial) {
        int n = 2 + static_cast<int>(rng.below(7));
        int k = 1 + static_cast<int>(rng.below(3));
        // sparse connected graphs (plus a few loose ones) keep several
        // incomparable important cuts within budget
        auto raw = rng.below(4) == 0
                       ? testutil::random_edges(rng, n, static_cast<int>(rng.below(15)))
                       : testutil::random_connected_edges(
                             rng, n, n - 1 + static_cast<int>(rng.below(5)));
        if (static_cast<int>(raw.size()) > 14) raw.resize(14);
        MultiGraph g(n, raw);

        std::vector<int> order(n);
        for (int i = 0; i < n; ++i) order[i] = i;
        for (int i = n - 1; i > 0; --i) std::swap(order[i], order[rng.below(i + 1)]);
        int ns = 1 + static_cast<int>(rng.below(std::min(n - 1, 2)));
        int nt = 1 + static_cast<int>(rng.below(std::min(n - ns, 2)));
        VertexSet s(std::vector<VertexId>(order.begin(), order.begin() + ns));
        VertexSet t(std::vector<VertexId>(order.begin() + ns, order.begin() + ns + nt));

        auto got = enumerate_important_cuts(g, s, t, k);
        std::set<unsigned> got_masks;
        for (const Cut& c : got) got_masks.insert(to_mask(c.v1));

        auto want = testutil::important_cuts_bf(n, raw, to_mask(s), to_mask(t), k);
        std::set<unsigned> want_masks(want.begin(), want.end());

        if (got_masks != want_masks) ++mismatches;
        if (got.size() > (std::size_t{1} << (2 * k))) ++mismatches;  // 4^k
        max_count = std::max(max_count, got.size());
    }

    std::ostringstream detail;
    detail << graphs << " graphs, " << mismatches << " mismatches, largest family " << max_count;
    return Outcome{mismatches == 0, detail.str()};
}

// ---- criterion 3: largest-source-side minimum cuts ----

Outcome criterion_mm_cut() {
    testutil::Rng rng(33033);
    const int graphs = 320;
    int mismatches = 0;

    for (int trial = 0; trial < graphs; ++trial) {
        int n = 2 + static_cast<int>(rng.below(7));
        int m = static_cast<int>(rng.below(15));
        auto raw = testutil::random_edges(rng, n, m);
        MultiGraph g(n, raw);

        int s = static_cast<int>(rng.below(n));
        int t = static_cast<int>(rng.below(n - 1));
        if (t >= s) ++t;

        auto bf = testutil::mm_cut_bf(n, raw, 1u << s, 1u << t);
        Cut mm = mm_cut(g, VertexSet{s}, VertexSet{t});
        if (min_cut_value(g, VertexSet{s}, VertexSet{t}) != bf.value) ++mismatches;
        if (to_mask(mm.v1) != bf.v1) ++mismatches;
        if (bf.max_side_count != 1) ++mismatches;  // uniqueness
    }

    std::ostringstream detail;
    detail << graphs << " graphs, " << mismatches << " mismatches";
    return Outcome{mismatches == 0, detail.str()};
}

// ---- criterion 4: candidate-family completeness ----

Outcome criterion_candidate_completeness() {
    testutil::Rng rng(44044);
    const int tuples = 1400;
    int misses = 0;
    int size_violations = 0;
    std::uint64_t bounded_checks = 0, neighbor_checks = 0;

    for (int tuple = 0; tuple < tuples; ++tuple) {
        int n = 3 + static_cast<int>(rng.below(7));
        int k = 1 + static_cast<int>(rng.below(3));
        int ell = static_cast<int>(rng.below(4));
        auto raw = rng.below(4) == 0
                       ? testutil::random_edges(rng, n, static_cast<int>(rng.below(14)))
                       : testutil::random_connected_edges(
                             rng, n, n - 1 + static_cast<int>(rng.below(5)));
        MultiGraph g(n, raw);

        std::vector<int> order(n);
        for (int i = 0; i < n; ++i) order[i] = i;
        for (int i = n - 1; i > 0; --i) std::swap(order[i], order[rng.below(i + 1)]);
        int na = 1 + static_cast<int>(rng.below(std::min(n - 1, 2)));
        int nb = 1 + static_cast<int>(rng.below(std::min(n - na, 3)));
        VertexSet a(std::vector<VertexId>(order.begin(), order.begin() + na));
        VertexSet b(std::vector<VertexId>(order.begin() + na, order.begin() + na + nb));
        unsigned amask = to_mask(a), bmask = to_mask(b);

        unsigned cmask = static_cast<unsigned>(rng.below(1u << n));
        VertexSet c = from_mask(n, cmask);

        std::vector<VertexId> bp;
        for (VertexId v : b)
            if (rng.below(2)) bp.push_back(v);
        VertexSet b_prime(bp);
        VertexSet nbrs = g.neighbors_of_set(b_prime);
        unsigned nmask = to_mask(nbrs);

        auto xfam = candidate_family_bounded_trace(g, a, b, c, k, ell);
        auto yfam = candidate_family_neighbor_trace(g, a, b, b_prime, k);
        if (static_cast<std::uint64_t>(xfam.size()) > (std::uint64_t{1} << (3 * (k + ell))))
            ++size_violations;
        if (static_cast<std::uint64_t>(yfam.size()) > (std::uint64_t{1} << (3 * k)))
            ++size_violations;

        const unsigned full = (1u << n) - 1u;
        for (unsigned v1 = 0; v1 <= full; ++v1) {
            if ((v1 & amask) != amask || (v1 & bmask)) continue;
            if (testutil::cut_size_mask(raw, v1) > k) continue;
            if (!testutil::every_comp_meets(n, raw, v1, amask)) continue;
            if (!testutil::every_comp_meets(n, raw, full & ~v1, bmask)) continue;

            if (testutil::popcount(v1 & cmask) <= ell) {
                ++bounded_checks;
                if (!xfam.contains(from_mask(n, v1 & cmask))) ++misses;
            }
            ++neighbor_checks;
            if (!yfam.contains(from_mask(n, v1 & nmask))) ++misses;
        }
    }

    std::ostringstream detail;
    detail << tuples << " tuples, " << bounded_checks << "+" << neighbor_checks
           << " trace checks, " << misses << " missing, " << size_violations
           << " size violations";
    return Outcome{misses == 0 && size_violations == 0 && bounded_checks > 500 &&
                       neighbor_checks > 500,
                   detail.str()};
}

// ---- criterion 5: pipeline guess bounds ----

Outcome criterion_pipeline_bounds() {
    testutil::Rng rng(55055);
    InstanceGen gen(55056);
    int violations = static_cast<int>(evidence.bound_violations);
    int non_easy = 0;
    std::uint64_t total_checked = 0;

    for (int trial = 0; trial < 150; ++trial) {
        Instance inst = gen.next(8, 14, 3);
        const auto k = static_cast<std::uint64_t>(inst.k);

        auto s1 = stage1_guesses(inst);
        if (s1.size() > pow2_saturated(12 * k)) ++violations;

        std::uint64_t total = 0;
        for (const auto& guess : s1) {
            auto s2 = stage2_guesses(guess.restricted, guess.z_a1, guess.z_b2);
            if (s2.size() > pow2_saturated(6 * k)) ++violations;
            total += s2.size();
            for (const Instance& easy_inst : s2)
                if (!is_easy(easy_inst)) ++non_easy;
        }
        if (total > pow2_saturated(18 * k)) ++violations;
        total_checked += total;
    }

    std::ostringstream detail;
    detail << evidence.instances << " fuzz + 150 sampled instances, " << total_checked
           << " easy instances checked, " << violations << " bound violations, " << non_easy
           << " non-easy emissions";
    return Outcome{violations == 0 && non_easy == 0, detail.str()};
}

// ---- criterion 6: witness soundness + minimality cross-validation ----

Outcome criterion_witness_soundness() {
    testutil::Rng rng(66066);
    std::uint64_t cuts_checked = 0;
    int disagreements = 0;

    for (int trial = 0; trial < 400; ++trial) {
        int n = 2 + static_cast<int>(rng.below(5));  // n <= 6, all cuts exhaustively
        int m = static_cast<int>(rng.below(12));
        auto raw = testutil::random_edges(rng, n, m);
        MultiGraph g(n, raw);

        int a = static_cast<int>(rng.below(n));
        int b = static_cast<int>(rng.below(n - 1));
        if (b >= a) ++b;
        Instance inst = Instance::with_default_caps(MultiGraph(g), VertexSet{a}, VertexSet{b}, 1);

        const unsigned full = (1u << n) - 1u;
        for (unsigned v1 = 0; v1 <= full; ++v1) {
            if (!((v1 >> a) & 1u) || ((v1 >> b) & 1u)) continue;
            Cut cut = make_cut(g, from_mask(n, v1));
            if (minimality_definitional(inst, cut) != is_minimal_cut(inst, cut)) ++disagreements;
            ++cuts_checked;
        }
    }

    std::ostringstream detail;
    detail << evidence.feasible << " witnesses verified with " << evidence.witness_failures
           << " failures; " << cuts_checked << " cuts cross-validated with " << disagreements
           << " minimality disagreements";
    return Outcome{evidence.witness_failures == 0 && disagreements == 0 && cuts_checked > 2000 &&
                       evidence.feasible > 50,
                   detail.str()};
}

// ---- criterion 7: desk-scale performance ----

// Two connected halves joined by a controlled number of bridge edges, so the
// terminal min-cut is comparable to the budget and the guessing stages
// actually run. constrained > 0 sprinkles tight degree caps near the bridges.
Instance bench_instance(std::uint64_t seed, int n, int m, int k, int bridges, int constrained) {
    testutil::Rng rng(seed);
    const int half = n / 2;

    std::vector<MultiGraph::Edge> edges;
    for (int v = 1; v < half; ++v)
        edges.emplace_back(v, static_cast<int>(rng.below(v)));
    for (int v = half + 1; v < n; ++v)
        edges.emplace_back(v, half + static_cast<int>(rng.below(v - half)));

    std::vector<VertexId> left_ends;
    for (int i = 0; i < bridges; ++i) {
        auto u = static_cast<VertexId>(rng.below(half));
        auto v = static_cast<VertexId>(half + rng.below(n - half));
        edges.emplace_back(u, v);
        left_ends.push_back(u);
    }

    // remaining edges stay inside their half
    while (static_cast<int>(edges.size()) < m) {
        bool left = rng.below(2) == 0;
        int base = left ? 0 : half;
        int span = left ? half : n - half;
        int u = base + static_cast<int>(rng.below(span));
        int v = base + static_cast<int>(rng.below(span - 1));
        if (v >= u) ++v;
        edges.emplace_back(u, v);
    }

    VertexSet a{0, 1, 2};
    VertexSet b{n - 1, n - 2, n - 3};

    std::vector<int> cap_a(n, m), cap_b(n, m);
    for (int i = 0; i < constrained; ++i) {
        VertexId v = !left_ends.empty() && rng.below(2)
                         ? left_ends[rng.below(left_ends.size())]
                         : static_cast<VertexId>(3 + rng.below(n - 6));
        int cap = static_cast<int>(rng.below(3));
        if (rng.below(2))
            cap_a[v] = cap;
        else
            cap_b[v] = cap;
    }
    return Instance(MultiGraph(n, std::move(edges)), std::move(a), std::move(b),
                    std::move(cap_a), std::move(cap_b), k);
}

// Worst-case-flavored instance: k parallel waist paths u_i - m_i = v_i (the
// right hop doubled) meet the budget exactly and give incomparable important
// cuts at every left/right combination, while the middles are unsatisfied on
// both sides, so the solver has to grind through the guess space before
// concluding that no placement of the middles survives the degree caps.
Instance gadget_instance(std::uint64_t seed, int n, int m, int k) {
    testutil::Rng rng(seed);
    const int left = 25, mid = 35;  // [0,25) left blob, [25,35) middles, [35,n) right blob

    std::vector<MultiGraph::Edge> edges;
    for (int v = 1; v < left; ++v)
        edges.emplace_back(v, static_cast<int>(rng.below(v)));
    for (int v = mid + 1; v < n; ++v)
        edges.emplace_back(v, mid + static_cast<int>(rng.below(v - mid)));

    std::vector<int> cap_a(n, m), cap_b(n, m);
    for (int i = 0; i < k; ++i) {
        int u = static_cast<int>(rng.below(left));
        int w = left + i;
        int v = mid + static_cast<int>(rng.below(n - mid));
        edges.emplace_back(u, w);
        edges.emplace_back(w, v);
        edges.emplace_back(w, v);
        cap_a[w] = 0;
        cap_b[w] = 0;
        // nearly-satisfied left endpoints widen the a-side unsatisfied set
        cap_a[u] = 1;
    }
    // unused middles hang off the left blob
    for (int w = left + std::max(k, 1); w < mid; ++w)
        edges.emplace_back(w, static_cast<int>(rng.below(left)));
    while (static_cast<int>(edges.size()) < m) {
        bool on_left = rng.below(2) == 0;
        int base = on_left ? 0 : mid;
        int span = on_left ? left : n - mid;
        int u = base + static_cast<int>(rng.below(span));
        int v = base + static_cast<int>(rng.below(span - 1));
        if (v >= u) ++v;
        edges.emplace_back(u, v);
    }

    return Instance(MultiGraph(n, std::move(edges)), VertexSet{0, 1, 2},
                    VertexSet{n - 1, n - 2, n - 3}, std::move(cap_a), std::move(cap_b), k);
}

Outcome criterion_performance(const std::filesystem::path& corpus_dir) {
    std::filesystem::create_directories(corpus_dir);
    double worst_small = 0.0, worst_any = 0.0;
    int over_budget = 0;
    int feasible = 0;

    int index = 0;
    for (int k = 0; k <= 4; ++k) {
        // loose cut / tight cut just over budget / cut under budget with caps
        const int bridge_plan[3] = {k, k + 1, std::max(0, k - 1)};
        const int caps_plan[3] = {0, 12, 20};
        for (int rep = 0; rep < 3; ++rep) {
            Instance inst =
                bench_instance(7000 + 13 * index, 60, 120, k, bridge_plan[rep], caps_plan[rep]);
            char name[32];
            std::snprintf(name, sizeof name, "bench_%02d_k%d.bdc", index, k);
            std::ofstream(corpus_dir / name) << render_instance(inst);
            ++index;

            auto start = std::chrono::steady_clock::now();
            Verdict v = solve(inst);
            double elapsed = seconds_since(start);

            if (v.feasible) ++feasible;
            worst_any = std::max(worst_any, elapsed);
            if (k <= 2) worst_small = std::max(worst_small, elapsed);
            if (elapsed >= 10.0 || (k <= 2 && elapsed >= 1.0)) ++over_budget;
        }
    }
    for (int k = 1; k <= 4; ++k) {
        Instance inst = gadget_instance(9100 + k, 60, 120, k);
        char name[32];
        std::snprintf(name, sizeof name, "waist_%02d_k%d.bdc", index, k);
        std::ofstream(corpus_dir / name) << render_instance(inst);
        ++index;

        auto start = std::chrono::steady_clock::now();
        Verdict v = solve(inst);
        double elapsed = seconds_since(start);

        if (v.feasible) ++feasible;
        worst_any = std::max(worst_any, elapsed);
        if (k <= 2) worst_small = std::max(worst_small, elapsed);
        if (elapsed >= 10.0 || (k <= 2 && elapsed >= 1.0)) ++over_budget;
    }

    std::ostringstream detail;
    detail << index << " instances (n=60 m=120), " << feasible << " feasible, worst "
           << std::fixed << worst_any << " s, worst k<=2 " << worst_small << " s";
    return Outcome{over_budget == 0, detail.str()};
}

// ---- criterion 8: CLI determinism ----

struct CliResult {
    int exit_code = -1;
    std::string out;
};

CliResult run_cli(const std::string& cli, const std::string& args) {
    CliResult result;
    std::string cmd = cli + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return result;
    char buffer[4096];
    std::size_t got;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) result.out.append(buffer, got);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string strip_last_column(const std::string& table) {
    std::istringstream in(table);
    std::ostringstream out;
    std::string line;
    while (std::getline(in, line)) {
        auto pos = line.find_last_not_of(" \t");
        auto cut = line.find_last_of(" \t", pos);
        out << line.substr(0, cut == std::string::npos ? line.size() : cut) << '\n';
    }
    return out.str();
}

Outcome criterion_cli_determinism(const std::string& cli,
                                  const std::filesystem::path& corpus_dir,
                                  const std::filesystem::path& scratch) {
    std::filesystem::create_directories(scratch);
    auto fixture = scratch / "det.bdc";
    {
        InstanceGen gen(88088);
        std::ofstream(fixture) << render_instance(gen.next(10, 20, 4));
    }

    std::vector<std::string> mismatches;
    auto expect_same = [&](const std::string& label, const std::string& args, bool strip_ms) {
        CliResult first = run_cli(cli, args);
        CliResult second = run_cli(cli, args);
        std::string a = strip_ms ? strip_last_column(first.out) : first.out;
        std::string b = strip_ms ? strip_last_column(second.out) : second.out;
        if (a != b || first.exit_code != second.exit_code || first.exit_code == -1)
            mismatches.push_back(label);
    };

    expect_same("solve", "solve " + fixture.string() + " --stats --verify", false);
    expect_same("oracle", "oracle " + fixture.string(), false);
    expect_same("fuzz", "fuzz --trials 40 --seed 7", false);
    expect_same("gen", "gen --seed 9 --index 3", false);
    expect_same("important-cuts", "important-cuts " + fixture.string() + " -k 3", false);
    expect_same("bench", "bench " + corpus_dir.string(), true);

    std::ostringstream detail;
    if (mismatches.empty()) {
        detail << "6 command forms byte-identical across reruns";
    } else {
        detail << mismatches.size() << " diverging commands:";
        for (const auto& label : mismatches) detail << ' ' << label;
    }
    return Outcome{mismatches.empty(), detail.str()};
}

}  // namespace

int main(int argc, char** argv) {
    std::string cli;
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--cli") cli = argv[i + 1];

    auto scratch = std::filesystem::temp_directory_path() / "bdcut_acceptance";
    auto corpus_dir = scratch / "bench_corpus";
    std::error_code ec;
    std::filesystem::remove_all(scratch, ec);

    struct Row {
        const char* name;
        Outcome outcome;
    };
    std::vector<Row> rows;
    rows.push_back({"oracle equivalence", criterion_oracle_equivalence()});
    rows.push_back({"important-cut exactness", criterion_important_cut_exactness()});
    rows.push_back({"mm-cut correctness", criterion_mm_cut()});
    rows.push_back({"candidate-family completeness", criterion_candidate_completeness()});
    rows.push_back({"pipeline bounds", criterion_pipeline_bounds()});
    rows.push_back({"witness soundness", criterion_witness_soundness()});
    rows.push_back({"desk-scale performance", criterion_performance(corpus_dir)});
    if (!cli.empty()) {
        rows.push_back({"cli determinism", criterion_cli_determinism(cli, corpus_dir, scratch)});
    } else {
        rows.push_back({"cli determinism", Outcome{false, "no --cli path given"}});
    }

    int passed = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        bool ok = rows[i].outcome.pass;
        passed += ok ? 1 : 0;
        std::cout << '[' << (ok ? "PASS" : "FAIL") << "] criterion " << i + 1 << " ("
                  << rows[i].name << "): " << rows[i].outcome.detail << '\n';
    }
    std::cout << "ACCEPTANCE: " << passed << '/' << rows.size() << " criteria passed\n";
    return passed == static_cast<int>(rows.size()) ? 0 : 1;
}
