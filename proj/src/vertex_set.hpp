#pragma once

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <vector>

namespace bdcut {

// Dense vertex index, stable for the life of a graph.
using VertexId = int;

// Canonical vertex set: sorted and duplicate-free. Content equality is
// sequence equality, so sets can key ordered containers and families can
// deduplicate structurally.
class VertexSet {
public:
    VertexSet() = default;
    VertexSet(std::initializer_list<VertexId> vs) : vs_(vs) { normalize(); }
    explicit VertexSet(std::vector<VertexId> vs) : vs_(std::move(vs)) { normalize(); }

    bool empty() const { return vs_.empty(); }
    int size() const { return static_cast<int>(vs_.size()); }

    bool contains(VertexId v) const {
        return std::binary_search(vs_.begin(), vs_.end(), v);
    }

    void insert(VertexId v) {
        auto it = std::lower_bound(vs_.begin(), vs_.end(), v);
        if (it == vs_.end() || *it != v) vs_.insert(it, v);
    }

    const std::vector<VertexId>& values() const { return vs_; }
    auto begin() const { return vs_.begin(); }
    auto end() const { return vs_.end(); }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;
    friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

private:
    void normalize() {
        std::sort(vs_.begin(), vs_.end());
        vs_.erase(std::unique(vs_.begin(), vs_.end()), vs_.end());
    }

    std::vector<VertexId> vs_;
};

inline VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    std::vector<VertexId> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
}

inline VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
    std::vector<VertexId> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
}

inline VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
    std::vector<VertexId> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
}

inline bool intersects(const VertexSet& a, const VertexSet& b) {
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia < *ib) ++ia;
        else if (*ib < *ia) ++ib;
        else return true;
    }
    return false;
}

inline bool is_subset(const VertexSet& a, const VertexSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace bdcut
