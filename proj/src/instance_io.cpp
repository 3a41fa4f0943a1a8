#include "instance_io.hpp"

#include <charconv>
#include <optional>
#include <sstream>
#include <vector>

namespace bdcut {

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
        if (i > start) tokens.push_back(line.substr(start, i - start));
    }
    return tokens;
}

long long parse_int(std::string_view tok, int line_no) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError(line_no, "expected an integer, got '" + std::string(tok) + "'");
    return value;
}

}  // namespace

Instance parse_instance(std::string_view text) {
    std::optional<int> n, m, k;
    std::vector<MultiGraph::Edge> edges;
    VertexSet a, b;
    std::vector<int> cap_a, cap_b;
    std::vector<char> cap_a_set, cap_b_set;
    int line_no = 0;
    int last_line = 0;

    auto require_header = [&](int line) {
        if (!n) throw ParseError(line, "missing 'p bdc <n> <m>' header");
    };
    auto parse_vertex = [&](std::string_view tok, int line) -> VertexId {
        long long v = parse_int(tok, line);
        if (v < 1 || v > *n) throw ParseError(line, "vertex out of range: " + std::string(tok));
        return static_cast<VertexId>(v - 1);
    };

    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
        pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
        ++line_no;
        last_line = line_no;

        auto tokens = split_tokens(line);
        if (tokens.empty() || tokens[0] == "c") continue;
        std::string_view kind = tokens[0];

        if (kind == "p") {
            if (n) throw ParseError(line_no, "duplicate header");
            if (tokens.size() != 4 || tokens[1] != "bdc")
                throw ParseError(line_no, "header must be 'p bdc <n> <m>'");
            long long nn = parse_int(tokens[2], line_no);
            long long mm = parse_int(tokens[3], line_no);
            if (nn < 0 || mm < 0) throw ParseError(line_no, "negative size in header");
            n = static_cast<int>(nn);
            m = static_cast<int>(mm);
            cap_a.assign(*n, *m);
            cap_b.assign(*n, *m);
            cap_a_set.assign(*n, 0);
            cap_b_set.assign(*n, 0);
            continue;
        }
        require_header(line_no);

        if (kind == "e") {
            if (tokens.size() != 3) throw ParseError(line_no, "edge line must be 'e <u> <v>'");
            VertexId u = parse_vertex(tokens[1], line_no);
            VertexId v = parse_vertex(tokens[2], line_no);
            if (u == v) throw ParseError(line_no, "self-loop edge");
            if (static_cast<int>(edges.size()) >= *m)
                throw ParseError(line_no, "more edges than declared in the header");
            edges.emplace_back(u, v);
        } else if (kind == "a" || kind == "b") {
            if (tokens.size() < 2) throw ParseError(line_no, "terminal line needs vertices");
            for (std::size_t i = 1; i < tokens.size(); ++i) {
                VertexId v = parse_vertex(tokens[i], line_no);
                if (kind == "a") {
                    if (b.contains(v))
                        throw ParseError(line_no, "vertex in both terminal sets");
                    a.insert(v);
                } else {
                    if (a.contains(v))
                        throw ParseError(line_no, "vertex in both terminal sets");
                    b.insert(v);
                }
            }
        } else if (kind == "ua" || kind == "ub") {
            if (tokens.size() != 3)
                throw ParseError(line_no, "cap line must be '" + std::string(kind) + " <v> <cap>'");
            VertexId v = parse_vertex(tokens[1], line_no);
            long long cap = parse_int(tokens[2], line_no);
            if (cap < 0 || cap > *m) throw ParseError(line_no, "cap out of range");
            auto& caps = (kind == "ua") ? cap_a : cap_b;
            auto& set_flags = (kind == "ua") ? cap_a_set : cap_b_set;
            if (set_flags[v]) throw ParseError(line_no, "duplicate cap for vertex");
            caps[v] = static_cast<int>(cap);
            set_flags[v] = 1;
        } else if (kind == "k") {
            if (tokens.size() != 2) throw ParseError(line_no, "budget line must be 'k <k>'");
            if (k) throw ParseError(line_no, "duplicate budget line");
            long long kk = parse_int(tokens[1], line_no);
            if (kk < 0) throw ParseError(line_no, "budget must be nonnegative");
            k = static_cast<int>(kk);
        } else {
            throw ParseError(line_no, "unknown line type '" + std::string(kind) + "'");
        }
    }

    require_header(last_line);
    if (static_cast<int>(edges.size()) != *m)
        throw ParseError(last_line, "header declares " + std::to_string(*m) + " edges, got " +
                                        std::to_string(edges.size()));
    if (!k) throw ParseError(last_line, "missing 'k <k>' line");
    if (a.empty()) throw ParseError(last_line, "missing nonempty 'a' line");
    if (b.empty()) throw ParseError(last_line, "missing nonempty 'b' line");

    try {
        return Instance(MultiGraph(*n, std::move(edges)), std::move(a), std::move(b),
                        std::move(cap_a), std::move(cap_b), *k);
    } catch (const std::invalid_argument& e) {
        throw ParseError(last_line, e.what());
    }
}

std::string render_instance(const Instance& inst) {
    std::ostringstream out;
    out << "p bdc " << inst.g.vertex_count() << ' ' << inst.g.edge_count() << '\n';
    for (auto [u, v] : inst.g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
    out << "a";
    for (VertexId v : inst.a) out << ' ' << v + 1;
    out << "\nb";
    for (VertexId v : inst.b) out << ' ' << v + 1;
    out << '\n';
    for (int v = 0; v < inst.g.vertex_count(); ++v)
        if (inst.cap_a[v] != inst.g.edge_count()) out << "ua " << v + 1 << ' ' << inst.cap_a[v] << '\n';
    for (int v = 0; v < inst.g.vertex_count(); ++v)
        if (inst.cap_b[v] != inst.g.edge_count()) out << "ub " << v + 1 << ' ' << inst.cap_b[v] << '\n';
    out << "k " << inst.k << '\n';
    return out.str();
}

std::uint64_t InstanceGen::next_u64() {
    // splitmix64; self-contained so streams are identical on every platform
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t InstanceGen::next_below(std::uint64_t bound) {
    return bound == 0 ? 0 : next_u64() % bound;
}

Instance InstanceGen::next(int max_n, int max_m, int max_k, int max_terminals) {
    if (max_n < 2) throw std::invalid_argument("generator needs max_n >= 2");
    if (max_m < 0 || max_k < 0 || max_terminals < 1)
        throw std::invalid_argument("generator bounds must be nonnegative");

    const int n = 2 + static_cast<int>(next_below(max_n - 1));

    std::vector<VertexId> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    for (int i = n - 1; i > 0; --i)
        std::swap(order[i], order[next_below(i + 1)]);

    // terminal sets lean small; large ones push the minimum cut far past
    // any reachable budget
    auto terminal_count = [&](int cap) {
        int size = 1;
        while (size < cap && next_below(3) == 0) ++size;
        return size;
    };
    const int na = terminal_count(std::min(max_terminals, n - 1));
    const int nb = terminal_count(std::min(max_terminals, n - na));
    VertexSet a(std::vector<VertexId>(order.begin(), order.begin() + na));
    VertexSet b(std::vector<VertexId>(order.begin() + na, order.begin() + na + nb));

    // bias the edge count toward n-1 and up, so most draws are connected
    // enough to get past the stray-component check
    const int lo = std::min(n - 1, max_m);
    const int m = lo + static_cast<int>(next_below(max_m - lo + 1));
    std::vector<MultiGraph::Edge> edges;
    edges.reserve(m);
    for (int i = 0; i < m; ++i) {
        auto u = static_cast<VertexId>(next_below(n));
        auto v = static_cast<VertexId>(next_below(n - 1));
        if (v >= u) ++v;
        edges.emplace_back(u, v);
    }

    // caps from {0, 1, 2, m}, biased toward the unconstrained value so that a
    // healthy share of instances stays feasible
    std::vector<int> cap_a(n), cap_b(n);
    const int choices[12] = {0, 1, 1, 2, 2, m, m, m, m, m, m, m};
    for (int v = 0; v < n; ++v) {
        cap_a[v] = std::min(choices[next_below(12)], m);
        cap_b[v] = std::min(choices[next_below(12)], m);
    }

    // better of two draws: tiny budgets rarely leave anything feasible
    const int k = static_cast<int>(
        std::max(next_below(max_k + 1), next_below(max_k + 1)));
    return Instance(MultiGraph(n, std::move(edges)), std::move(a), std::move(b),
                    std::move(cap_a), std::move(cap_b), k);
}

}  // namespace bdcut
