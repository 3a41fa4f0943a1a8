#include "bdcut.h"

#include <cstring>
#include <new>
#include <string>

#include "instance_io.hpp"
#include "oracle.hpp"
#include "solver.hpp"

struct bdcut_instance {
    bdcut::Instance inst;
    std::vector<uint32_t> a_view;
    std::vector<uint32_t> b_view;
};

struct bdcut_verdict {
    bool feasible = false;
    std::vector<uint32_t> v1;
    std::vector<uint32_t> v2;
    uint32_t cut_size = 0;
};

struct bdcut_cut_list {
    std::vector<std::vector<uint32_t>> v1s;
    std::vector<uint32_t> sizes;
};

struct bdcut_rng {
    bdcut::InstanceGen gen;
};

namespace {

std::vector<uint32_t> to_u32(const bdcut::VertexSet& s) {
    std::vector<uint32_t> out;
    out.reserve(s.size());
    for (bdcut::VertexId v : s) out.push_back(static_cast<uint32_t>(v));
    return out;
}

bdcut::VertexSet to_set(const uint32_t* data, size_t len) {
    std::vector<bdcut::VertexId> vs;
    vs.reserve(len);
    for (size_t i = 0; i < len; ++i) vs.push_back(static_cast<bdcut::VertexId>(data[i]));
    return bdcut::VertexSet(std::move(vs));
}

bdcut_instance* wrap_instance(bdcut::Instance inst) {
    auto* h = new bdcut_instance{std::move(inst), {}, {}};
    h->a_view = to_u32(h->inst.a);
    h->b_view = to_u32(h->inst.b);
    return h;
}

bdcut_verdict* wrap_verdict(const bdcut::Instance& inst, const bdcut::Verdict& v) {
    auto* h = new bdcut_verdict;
    h->feasible = v.feasible;
    if (v.witness) {
        h->v1 = to_u32(v.witness->v1);
        h->v2 = to_u32(v.witness->v2);
        h->cut_size = static_cast<uint32_t>(bdcut::cut_size(inst.g, v.witness->v1));
    }
    return h;
}

// Maps C++ failures onto status codes at the boundary.
template <typename Fn>
bdcut_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const bdcut::ParseError&) {
        return BDCUT_ERR_PARSE;
    } catch (const std::invalid_argument&) {
        return BDCUT_ERR_INVALID_ARGUMENT;
    } catch (const std::bad_alloc&) {
        return BDCUT_ERR_INTERNAL;
    } catch (...) {
        return BDCUT_ERR_INTERNAL;
    }
}

}  // namespace

extern "C" {

const char* bdcut_version(void) { return "0.1.0"; }

const char* bdcut_status_str(bdcut_status status) {
    switch (status) {
        case BDCUT_OK: return "ok";
        case BDCUT_ERR_INVALID_ARGUMENT: return "invalid argument";
        case BDCUT_ERR_PARSE: return "parse error";
        case BDCUT_ERR_TOO_LARGE: return "instance too large";
        case BDCUT_ERR_NO_WITNESS: return "no witness";
        case BDCUT_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

bdcut_status bdcut_instance_create(uint32_t n, const uint32_t* edge_endpoints, size_t m,
                                   const uint32_t* a, size_t a_len,
                                   const uint32_t* b, size_t b_len,
                                   const uint32_t* cap_a, const uint32_t* cap_b,
                                   uint32_t k, bdcut_instance** out) {
    if (!out || (m > 0 && !edge_endpoints)) return BDCUT_ERR_INVALID_ARGUMENT;
    return guarded([&]() {
        std::vector<bdcut::MultiGraph::Edge> edges;
        edges.reserve(m);
        for (size_t i = 0; i < m; ++i)
            edges.emplace_back(static_cast<bdcut::VertexId>(edge_endpoints[2 * i]),
                               static_cast<bdcut::VertexId>(edge_endpoints[2 * i + 1]));
        std::vector<int> ca(n, static_cast<int>(m)), cb(n, static_cast<int>(m));
        for (uint32_t v = 0; v < n; ++v) {
            if (cap_a) ca[v] = static_cast<int>(cap_a[v]);
            if (cap_b) cb[v] = static_cast<int>(cap_b[v]);
        }
        bdcut::Instance inst(bdcut::MultiGraph(static_cast<int>(n), std::move(edges)),
                             to_set(a, a_len), to_set(b, b_len), std::move(ca), std::move(cb),
                             static_cast<int>(k));
        *out = wrap_instance(std::move(inst));
        return BDCUT_OK;
    });
}

bdcut_status bdcut_instance_parse(const char* text, bdcut_instance** out,
                                  char* errbuf, size_t errbuf_len) {
    if (!text || !out) return BDCUT_ERR_INVALID_ARGUMENT;
    try {
        *out = wrap_instance(bdcut::parse_instance(text));
        return BDCUT_OK;
    } catch (const bdcut::ParseError& e) {
        if (errbuf && errbuf_len > 0) {
            std::strncpy(errbuf, e.what(), errbuf_len - 1);
            errbuf[errbuf_len - 1] = '\0';
        }
        return BDCUT_ERR_PARSE;
    } catch (...) {
        return BDCUT_ERR_INTERNAL;
    }
}

bdcut_status bdcut_instance_render(const bdcut_instance* inst, char** out) {
    if (!inst || !out) return BDCUT_ERR_INVALID_ARGUMENT;
    return guarded([&]() {
        std::string text = bdcut::render_instance(inst->inst);
        char* buffer = new char[text.size() + 1];
        std::memcpy(buffer, text.c_str(), text.size() + 1);
        *out = buffer;
        return BDCUT_OK;
    });
}

void bdcut_instance_destroy(bdcut_instance* inst) { delete inst; }
void bdcut_string_free(char* s) { delete[] s; }

uint32_t bdcut_instance_n(const bdcut_instance* inst) {
    return inst ? static_cast<uint32_t>(inst->inst.g.vertex_count()) : 0;
}
uint32_t bdcut_instance_m(const bdcut_instance* inst) {
    return inst ? static_cast<uint32_t>(inst->inst.g.edge_count()) : 0;
}
uint32_t bdcut_instance_k(const bdcut_instance* inst) {
    return inst ? static_cast<uint32_t>(inst->inst.k) : 0;
}

bdcut_status bdcut_instance_terminals(const bdcut_instance* inst,
                                      const uint32_t** a, size_t* a_len,
                                      const uint32_t** b, size_t* b_len) {
    if (!inst || !a || !a_len || !b || !b_len) return BDCUT_ERR_INVALID_ARGUMENT;
    *a = inst->a_view.data();
    *a_len = inst->a_view.size();
    *b = inst->b_view.data();
    *b_len = inst->b_view.size();
    return BDCUT_OK;
}

bdcut_status bdcut_rng_create(uint64_t seed, bdcut_rng** out) {
    if (!out) return BDCUT_ERR_INVALID_ARGUMENT;
    *out = new bdcut_rng{bdcut::InstanceGen(seed)};
    return BDCUT_OK;
}

void bdcut_rng_destroy(bdcut_rng* rng) { delete rng; }

bdcut_status bdcut_instance_random(bdcut_rng* rng, uint32_t max_n, uint32_t max_m,
                                   uint32_t max_k, uint32_t max_terminals,
                                   bdcut_instance** out) {
    if (!rng || !out) return BDCUT_ERR_INVALID_ARGUMENT;
    return guarded([&]() {
        *out = wrap_instance(rng->gen.next(static_cast<int>(max_n), static_cast<int>(max_m),
                                           static_cast<int>(max_k),
                                           static_cast<int>(max_terminals)));
        return BDCUT_OK;
    });
}

bdcut_status bdcut_solve(const bdcut_instance* inst, bdcut_verdict** out) {
    return bdcut_solve_with_stats(inst, out, nullptr);
}

bdcut_status bdcut_solve_with_stats(const bdcut_instance* inst, bdcut_verdict** out,
                                    bdcut_solve_stats* stats) {
    if (!inst || !out) return BDCUT_ERR_INVALID_ARGUMENT;
    return guarded([&]() {
        bdcut::SolveStats s;
        bdcut::Verdict v = bdcut::solve(inst->inst, s);
        if (stats) {
            stats->stage1_guesses = s.stage1_guesses;
            stats->max_stage2_guesses = s.max_stage2_guesses;
            stats->easy_emitted = s.easy_emitted;
            stats->easy_tested = s.easy_tested;
            stats->stage1_bound = s.stage1_bound;
            stats->stage2_bound = s.stage2_bound;
            stats->total_bound = s.total_bound;
        }
        *out = wrap_verdict(inst->inst, v);
        return BDCUT_OK;
    });
}

bdcut_status bdcut_oracle_solve(const bdcut_instance* inst, bdcut_verdict** out) {
    if (!inst || !out) return BDCUT_ERR_INVALID_ARGUMENT;
    int free_vertices = inst->inst.g.vertex_count() - inst->inst.a.size() - inst->inst.b.size();
    if (free_vertices > 25) return BDCUT_ERR_TOO_LARGE;
    return guarded([&]() {
        *out = wrap_verdict(inst->inst, bdcut::brute_force_solve(inst->inst));
        return BDCUT_OK;
    });
}

void bdcut_verdict_destroy(bdcut_verdict* verdict) { delete verdict; }

int bdcut_verdict_feasible(const bdcut_verdict* verdict) {
    return verdict && verdict->feasible ? 1 : 0;
}

bdcut_status bdcut_verdict_witness(const bdcut_verdict* verdict,
                                   const uint32_t** v1, size_t* v1_len,
                                   const uint32_t** v2, size_t* v2_len,
                                   uint32_t* cut_size) {
    if (!verdict || !v1 || !v1_len || !v2 || !v2_len || !cut_size)
        return BDCUT_ERR_INVALID_ARGUMENT;
    if (!verdict->feasible) return BDCUT_ERR_NO_WITNESS;
    *v1 = verdict->v1.data();
    *v1_len = verdict->v1.size();
    *v2 = verdict->v2.data();
    *v2_len = verdict->v2.size();
    *cut_size = verdict->cut_size;
    return BDCUT_OK;
}

bdcut_status bdcut_verify(const bdcut_instance* inst, const uint32_t* v1, size_t v1_len,
                          int* ok) {
    if (!inst || !ok || (v1_len > 0 && !v1)) return BDCUT_ERR_INVALID_ARGUMENT;
    return guarded([&]() {
        bdcut::Cut cut = bdcut::make_cut(inst->inst.g, to_set(v1, v1_len));
        *ok = bdcut::verify_solution(inst->inst, cut) ? 1 : 0;
        return BDCUT_OK;
    });
}

bdcut_status bdcut_important_cuts(const bdcut_instance* inst,
                                  const uint32_t* s, size_t s_len,
                                  const uint32_t* t, size_t t_len,
                                  uint32_t k, bdcut_cut_list** out) {
    if (!inst || !out || (s_len > 0 && !s) || (t_len > 0 && !t))
        return BDCUT_ERR_INVALID_ARGUMENT;
    return guarded([&]() {
        auto cuts = bdcut::enumerate_important_cuts(inst->inst.g, to_set(s, s_len),
                                                    to_set(t, t_len), static_cast<int>(k));
        auto* list = new bdcut_cut_list;
        for (const bdcut::Cut& c : cuts) {
            list->v1s.push_back(to_u32(c.v1));
            list->sizes.push_back(static_cast<uint32_t>(bdcut::cut_size(inst->inst.g, c.v1)));
        }
        *out = list;
        return BDCUT_OK;
    });
}

size_t bdcut_cut_list_count(const bdcut_cut_list* list) { return list ? list->v1s.size() : 0; }

bdcut_status bdcut_cut_list_get(const bdcut_cut_list* list, size_t index,
                                const uint32_t** v1, size_t* v1_len, uint32_t* cut_size) {
    if (!list || !v1 || !v1_len || !cut_size || index >= list->v1s.size())
        return BDCUT_ERR_INVALID_ARGUMENT;
    *v1 = list->v1s[index].data();
    *v1_len = list->v1s[index].size();
    *cut_size = list->sizes[index];
    return BDCUT_OK;
}

void bdcut_cut_list_destroy(bdcut_cut_list* list) { delete list; }

}  // extern "C"
