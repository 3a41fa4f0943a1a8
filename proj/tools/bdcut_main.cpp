// bdcut — command-line front end for the bounded-degree cut solver.
//
// Exit codes: 0 feasible / success, 1 infeasible / mismatch, 2 error.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bdcut.h"

namespace {

constexpr int kExitFeasible = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitError = 2;

struct CliError {
    std::string message;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CliError{"cannot read file: " + path};
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

bdcut_instance* parse_or_throw(const std::string& text) {
    bdcut_instance* inst = nullptr;
    char errbuf[512] = {0};
    bdcut_status st = bdcut_instance_parse(text.c_str(), &inst, errbuf, sizeof errbuf);
    if (st == BDCUT_ERR_PARSE) throw CliError{std::string("parse error: ") + errbuf};
    if (st != BDCUT_OK) throw CliError{bdcut_status_str(st)};
    return inst;
}

bdcut_instance* load_instance(const std::string& path) {
    return parse_or_throw(read_file(path));
}

std::vector<uint32_t> parse_vertex_list(const std::string& list, uint32_t n) {
    std::vector<uint32_t> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        long long v = 0;
        try {
            v = std::stoll(item);
        } catch (...) {
            throw CliError{"bad vertex in list: " + item};
        }
        if (v < 1 || v > static_cast<long long>(n))
            throw CliError{"vertex out of range: " + item};
        out.push_back(static_cast<uint32_t>(v - 1));
    }
    return out;
}

void print_vertex_line(const char* label, const uint32_t* vs, size_t len) {
    std::cout << label << ':';
    for (size_t i = 0; i < len; ++i) std::cout << ' ' << vs[i] + 1;
    std::cout << '\n';
}

void print_stats(const bdcut_solve_stats& stats) {
    std::cout << "stage1_guesses: " << stats.stage1_guesses << " (bound " << stats.stage1_bound
              << ")\n";
    std::cout << "max_stage2_guesses: " << stats.max_stage2_guesses << " (bound "
              << stats.stage2_bound << ")\n";
    std::cout << "easy_emitted: " << stats.easy_emitted << " (bound " << stats.total_bound
              << ")\n";
    std::cout << "easy_tested: " << stats.easy_tested << '\n';
}

// Shared report shape for `solve` and `oracle`.
int report_verdict(bdcut_instance* inst, bdcut_verdict* verdict, bool do_verify,
                   const bdcut_solve_stats* stats) {
    if (!bdcut_verdict_feasible(verdict)) {
        std::cout << "NO\n";
        if (stats) print_stats(*stats);
        return kExitInfeasible;
    }
    const uint32_t *v1 = nullptr, *v2 = nullptr;
    size_t n1 = 0, n2 = 0;
    uint32_t cut = 0;
    if (bdcut_verdict_witness(verdict, &v1, &n1, &v2, &n2, &cut) != BDCUT_OK)
        throw CliError{"feasible verdict without witness"};
    std::cout << "YES\n";
    print_vertex_line("V1", v1, n1);
    print_vertex_line("V2", v2, n2);
    std::cout << "cutsize: " << cut << '\n';
    if (do_verify) {
        int ok = 0;
        if (bdcut_verify(inst, v1, n1, &ok) != BDCUT_OK || !ok)
            throw CliError{"witness failed verification"};
        std::cout << "verify: ok\n";
    }
    if (stats) print_stats(*stats);
    return kExitFeasible;
}

int run_solve(const std::string& path, bool do_verify, bool with_stats) {
    bdcut_instance* inst = load_instance(path);
    bdcut_verdict* verdict = nullptr;
    bdcut_solve_stats stats{};
    bdcut_status st = bdcut_solve_with_stats(inst, &verdict, &stats);
    if (st != BDCUT_OK) {
        bdcut_instance_destroy(inst);
        throw CliError{bdcut_status_str(st)};
    }
    int code = report_verdict(inst, verdict, do_verify, with_stats ? &stats : nullptr);
    bdcut_verdict_destroy(verdict);
    bdcut_instance_destroy(inst);
    return code;
}

int run_oracle(const std::string& path, bool do_verify) {
    bdcut_instance* inst = load_instance(path);
    bdcut_verdict* verdict = nullptr;
    bdcut_status st = bdcut_oracle_solve(inst, &verdict);
    if (st != BDCUT_OK) {
        bdcut_instance_destroy(inst);
        throw CliError{bdcut_status_str(st)};
    }
    int code = report_verdict(inst, verdict, do_verify, nullptr);
    bdcut_verdict_destroy(verdict);
    bdcut_instance_destroy(inst);
    return code;
}

int run_fuzz(uint64_t seed, uint64_t trials, uint32_t max_n, uint32_t max_m, uint32_t max_k) {
    bdcut_rng* rng = nullptr;
    bdcut_rng_create(seed, &rng);
    std::cout << "fuzz: seed=" << seed << " trials=" << trials << " max-n=" << max_n
              << " max-m=" << max_m << " max-k=" << max_k << '\n';

    uint64_t agreements = 0;
    for (uint64_t trial = 0; trial < trials; ++trial) {
        bdcut_instance* inst = nullptr;
        if (bdcut_instance_random(rng, max_n, max_m, max_k, 3, &inst) != BDCUT_OK) {
            bdcut_rng_destroy(rng);
            throw CliError{"instance generation failed"};
        }

        bdcut_verdict* got = nullptr;
        bdcut_verdict* want = nullptr;
        bdcut_solve_stats stats{};
        bdcut_status st_solve = bdcut_solve_with_stats(inst, &got, &stats);
        bdcut_status st_oracle = bdcut_oracle_solve(inst, &want);
        if (st_solve != BDCUT_OK || st_oracle != BDCUT_OK) {
            bdcut_rng_destroy(rng);
            throw CliError{st_solve != BDCUT_OK ? bdcut_status_str(st_solve)
                                                : bdcut_status_str(st_oracle)};
        }

        std::string failure;
        if (bdcut_verdict_feasible(got) != bdcut_verdict_feasible(want))
            failure = std::string("solve=") + (bdcut_verdict_feasible(got) ? "YES" : "NO") +
                      " oracle=" + (bdcut_verdict_feasible(want) ? "YES" : "NO");
        if (failure.empty() && stats.stage1_guesses > stats.stage1_bound)
            failure = "stage-1 guess count exceeds its bound";
        if (failure.empty() && stats.max_stage2_guesses > stats.stage2_bound)
            failure = "stage-2 guess count exceeds its bound";
        if (failure.empty() && stats.easy_emitted > stats.total_bound)
            failure = "easy-instance count exceeds its bound";
        for (bdcut_verdict* v : {got, want}) {
            if (!failure.empty() || !bdcut_verdict_feasible(v)) continue;
            const uint32_t *v1 = nullptr, *v2 = nullptr;
            size_t n1 = 0, n2 = 0;
            uint32_t cut = 0;
            bdcut_verdict_witness(v, &v1, &n1, &v2, &n2, &cut);
            int ok = 0;
            if (bdcut_verify(inst, v1, n1, &ok) != BDCUT_OK || !ok)
                failure = v == got ? "solve witness failed verification"
                                   : "oracle witness failed verification";
        }

        if (!failure.empty()) {
            std::cout << "disagreement at trial " << trial << ": " << failure << '\n';
            char* text = nullptr;
            if (bdcut_instance_render(inst, &text) == BDCUT_OK) {
                std::cout << text;
                bdcut_string_free(text);
            }
            bdcut_verdict_destroy(got);
            bdcut_verdict_destroy(want);
            bdcut_instance_destroy(inst);
            bdcut_rng_destroy(rng);
            return kExitInfeasible;
        }

        ++agreements;
        bdcut_verdict_destroy(got);
        bdcut_verdict_destroy(want);
        bdcut_instance_destroy(inst);
    }
    bdcut_rng_destroy(rng);
    std::cout << "agreements: " << agreements << '\n';
    std::cout << "disagreements: 0\n";
    return kExitFeasible;
}

int run_important_cuts(const std::string& path, const std::string& source_list,
                       const std::string& sink_list, int64_t k_override) {
    bdcut_instance* inst = load_instance(path);
    const uint32_t *ta = nullptr, *tb = nullptr;
    size_t na = 0, nb = 0;
    bdcut_instance_terminals(inst, &ta, &na, &tb, &nb);

    std::vector<uint32_t> s(ta, ta + na), t(tb, tb + nb);
    uint32_t n = bdcut_instance_n(inst);
    try {
        if (!source_list.empty()) s = parse_vertex_list(source_list, n);
        if (!sink_list.empty()) t = parse_vertex_list(sink_list, n);
    } catch (...) {
        bdcut_instance_destroy(inst);
        throw;
    }
    uint32_t k = k_override >= 0 ? static_cast<uint32_t>(k_override) : bdcut_instance_k(inst);

    bdcut_cut_list* cuts = nullptr;
    bdcut_status st =
        bdcut_important_cuts(inst, s.data(), s.size(), t.data(), t.size(), k, &cuts);
    if (st != BDCUT_OK) {
        bdcut_instance_destroy(inst);
        throw CliError{bdcut_status_str(st)};
    }
    for (size_t i = 0; i < bdcut_cut_list_count(cuts); ++i) {
        const uint32_t* v1 = nullptr;
        size_t len = 0;
        uint32_t size = 0;
        bdcut_cut_list_get(cuts, i, &v1, &len, &size);
        std::cout << "cut " << i + 1 << ": size=" << size;
        print_vertex_line(" V1", v1, len);
    }
    std::cout << "total: " << bdcut_cut_list_count(cuts) << '\n';
    bdcut_cut_list_destroy(cuts);
    bdcut_instance_destroy(inst);
    return kExitFeasible;
}

int run_bench(const std::string& dir) {
    std::filesystem::path root(dir);
    std::error_code ec;
    if (!std::filesystem::is_directory(root, ec)) throw CliError{"unreadable directory: " + dir};

    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(root, ec)) {
        if (entry.is_regular_file()) files.push_back(entry.path());
    }
    if (ec) throw CliError{"unreadable directory: " + dir};
    std::sort(files.begin(), files.end());

    std::printf("%-24s %-7s %8s %8s %8s %10s\n", "instance", "verdict", "cutsize", "stage1",
                "easy", "ms");
    for (const auto& file : files) {
        bdcut_instance* inst = load_instance(file.string());
        bdcut_verdict* verdict = nullptr;
        bdcut_solve_stats stats{};
        auto start = std::chrono::steady_clock::now();
        bdcut_status st = bdcut_solve_with_stats(inst, &verdict, &stats);
        auto elapsed = std::chrono::duration<double, std::milli>(
                           std::chrono::steady_clock::now() - start)
                           .count();
        if (st != BDCUT_OK) {
            bdcut_instance_destroy(inst);
            throw CliError{bdcut_status_str(st)};
        }
        std::string cut = "-";
        if (bdcut_verdict_feasible(verdict)) {
            const uint32_t *v1 = nullptr, *v2 = nullptr;
            size_t n1 = 0, n2 = 0;
            uint32_t c = 0;
            bdcut_verdict_witness(verdict, &v1, &n1, &v2, &n2, &c);
            cut = std::to_string(c);
        }
        std::printf("%-24s %-7s %8s %8llu %8llu %10.3f\n", file.filename().string().c_str(),
                    bdcut_verdict_feasible(verdict) ? "YES" : "NO", cut.c_str(),
                    static_cast<unsigned long long>(stats.stage1_guesses),
                    static_cast<unsigned long long>(stats.easy_emitted), elapsed);
        bdcut_verdict_destroy(verdict);
        bdcut_instance_destroy(inst);
    }
    return kExitFeasible;
}

int run_gen(uint64_t seed, uint64_t index, uint32_t max_n, uint32_t max_m, uint32_t max_k) {
    bdcut_rng* rng = nullptr;
    bdcut_rng_create(seed, &rng);
    bdcut_instance* inst = nullptr;
    for (uint64_t i = 0; i <= index; ++i) {
        bdcut_instance_destroy(inst);
        inst = nullptr;
        if (bdcut_instance_random(rng, max_n, max_m, max_k, 3, &inst) != BDCUT_OK) {
            bdcut_rng_destroy(rng);
            throw CliError{"instance generation failed"};
        }
    }
    char* text = nullptr;
    bdcut_status st = bdcut_instance_render(inst, &text);
    if (st == BDCUT_OK) {
        std::cout << text;
        bdcut_string_free(text);
    }
    bdcut_instance_destroy(inst);
    bdcut_rng_destroy(rng);
    if (st != BDCUT_OK) throw CliError{bdcut_status_str(st)};
    return kExitFeasible;
}

int run_verify(const std::string& path, const std::string& v1_list) {
    bdcut_instance* inst = load_instance(path);
    int code = kExitError;
    try {
        std::vector<uint32_t> v1 = parse_vertex_list(v1_list, bdcut_instance_n(inst));
        int ok = 0;
        bdcut_status st = bdcut_verify(inst, v1.data(), v1.size(), &ok);
        if (st != BDCUT_OK) throw CliError{bdcut_status_str(st)};
        std::cout << (ok ? "verify: ok\n" : "verify: fail\n");
        code = ok ? kExitFeasible : kExitInfeasible;
    } catch (...) {
        bdcut_instance_destroy(inst);
        throw;
    }
    bdcut_instance_destroy(inst);
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bounded-degree cut solver"};
    app.require_subcommand(1);

    std::string file, dir, source_list, sink_list, v1_list;
    bool flag_verify = false, flag_stats = false;
    uint64_t seed = 42, trials = 2000, index = 0;
    uint32_t max_n = 10, max_m = 20, max_k = 4;
    int64_t k_override = -1;

    auto* solve = app.add_subcommand("solve", "solve an instance file");
    solve->add_option("file", file)->required();
    solve->add_flag("--verify", flag_verify, "re-check the witness");
    solve->add_flag("--stats", flag_stats, "print guess counts against their bounds");

    auto* oracle = app.add_subcommand("oracle", "solve by exhaustive enumeration");
    oracle->add_option("file", file)->required();
    oracle->add_flag("--verify", flag_verify);

    auto* fuzz = app.add_subcommand("fuzz", "compare solve against the oracle on random instances");
    fuzz->add_option("--seed", seed);
    fuzz->add_option("--trials", trials);
    fuzz->add_option("--max-n", max_n);
    fuzz->add_option("--max-m", max_m);
    fuzz->add_option("--max-k", max_k);

    auto* imp = app.add_subcommand("important-cuts", "list important (s,t)-cuts of bounded size");
    imp->add_option("file", file)->required();
    imp->add_option("--source", source_list, "comma-separated 1-indexed source vertices");
    imp->add_option("--sink", sink_list, "comma-separated 1-indexed sink vertices");
    imp->add_option("-k", k_override, "size bound (default: instance budget)");

    auto* bench = app.add_subcommand("bench", "solve every instance in a directory");
    bench->add_option("dir", dir)->required();

    auto* gen = app.add_subcommand("gen", "print a random instance");
    gen->add_option("--seed", seed);
    gen->add_option("--index", index, "position in the seeded stream");
    gen->add_option("--max-n", max_n);
    gen->add_option("--max-m", max_m);
    gen->add_option("--max-k", max_k);

    auto* verify = app.add_subcommand("verify", "check a cut against an instance");
    verify->add_option("file", file)->required();
    verify->add_option("--v1", v1_list, "comma-separated 1-indexed source side")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitError;
    }

    try {
        if (app.got_subcommand(solve)) return run_solve(file, flag_verify, flag_stats);
        if (app.got_subcommand(oracle)) return run_oracle(file, flag_verify);
        if (app.got_subcommand(fuzz)) return run_fuzz(seed, trials, max_n, max_m, max_k);
        if (app.got_subcommand(imp))
            return run_important_cuts(file, source_list, sink_list, k_override);
        if (app.got_subcommand(bench)) return run_bench(dir);
        if (app.got_subcommand(gen)) return run_gen(seed, index, max_n, max_m, max_k);
        if (app.got_subcommand(verify)) return run_verify(file, v1_list);
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << '\n';
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}
