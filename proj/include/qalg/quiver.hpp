#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qalg/field.hpp"

namespace qalg {

struct Quiver {
    struct Arrow {
        std::string label;
        size_t src = 0, tgt = 0;
    };

    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;

    size_t vertex_index(const std::string& label) const {
        for (size_t v = 0; v < vertices.size(); ++v)
            if (vertices[v] == label) return v;
        throw error("unknown vertex label '" + label + "'");
    }

    size_t arrow_index(const std::string& label) const {
        for (size_t a = 0; a < arrows.size(); ++a)
            if (arrows[a].label == label) return a;
        throw error("unknown arrow label '" + label + "'");
    }

    void validate() const {
        std::set<std::string> vs(vertices.begin(), vertices.end());
        require(vs.size() == vertices.size(), "duplicate vertex labels");
        std::set<std::string> as;
        for (const auto& a : arrows) {
            require(as.insert(a.label).second, "duplicate arrow label '" + a.label + "'");
            require(vs.count(a.label) == 0, "arrow label '" + a.label + "' collides with a vertex");
            require(a.src < vertices.size() && a.tgt < vertices.size(),
                    "arrow '" + a.label + "' has out-of-range endpoints");
        }
    }
};

// A path in the quiver, written first-arrow-leftmost: arrows[0] is traversed
// first, so target(arrows[i]) = source(arrows[i+1]). Length 0 paths are the
// vertex idempotents, carried by start_vertex alone.
struct PathWord {
    size_t start_vertex = 0;
    std::vector<size_t> arrows;

    size_t length() const { return arrows.size(); }
    bool operator==(const PathWord& o) const {
        return start_vertex == o.start_vertex && arrows == o.arrows;
    }
    bool operator<(const PathWord& o) const {
        if (arrows.size() != o.arrows.size()) return arrows.size() < o.arrows.size();
        if (arrows != o.arrows) return arrows < o.arrows;
        return start_vertex < o.start_vertex;
    }
};

inline size_t path_source(const Quiver& q, const PathWord& p) {
    return p.arrows.empty() ? p.start_vertex : q.arrows[p.arrows.front()].src;
}

inline size_t path_target(const Quiver& q, const PathWord& p) {
    return p.arrows.empty() ? p.start_vertex : q.arrows[p.arrows.back()].tgt;
}

inline bool path_composable(const Quiver& q, const PathWord& p) {
    for (size_t i = 0; i + 1 < p.arrows.size(); ++i)
        if (q.arrows[p.arrows[i]].tgt != q.arrows[p.arrows[i + 1]].src) return false;
    if (!p.arrows.empty() && p.start_vertex != q.arrows[p.arrows.front()].src) return false;
    return true;
}

inline std::string path_label(const Quiver& q, const PathWord& p) {
    if (p.arrows.empty()) return "e" + q.vertices[p.start_vertex];
    std::string s;
    for (size_t i = 0; i < p.arrows.size(); ++i) {
        if (i) s += "*";
        s += q.arrows[p.arrows[i]].label;
    }
    return s;
}

// Quiver with monomial relations. Relations are composable paths of length
// >= 2, none a contiguous subword of another.
struct MonomialPresentation {
    Quiver quiver;
    std::vector<PathWord> relations;

    void validate() const {
        quiver.validate();
        for (const auto& r : relations) {
            require(r.length() >= 2, "relation of length < 2");
            require(path_composable(quiver, r), "non-composable relation word");
        }
        for (size_t i = 0; i < relations.size(); ++i)
            for (size_t j = 0; j < relations.size(); ++j) {
                if (i == j) continue;
                // relations[i] must not contain relations[j] as a subword
                const auto& big = relations[i].arrows;
                const auto& small = relations[j].arrows;
                if (small.size() > big.size()) continue;
                for (size_t k = 0; k + small.size() <= big.size(); ++k)
                    if (std::equal(small.begin(), small.end(), big.begin() + k))
                        throw error("relation set not reduced: '" +
                                    path_label(quiver, relations[j]) + "' is a subword of '" +
                                    path_label(quiver, relations[i]) + "'");
            }
    }
};

struct PathBudget {
    size_t max_paths = 4096;
};

namespace detail {

// State of the subword automaton: current end vertex plus the trailing
// window of arrows (up to max relation length - 1) that matters for
// future relation matches.
struct PathState {
    size_t vertex;
    std::vector<size_t> suffix;
    bool operator<(const PathState& o) const {
        if (vertex != o.vertex) return vertex < o.vertex;
        return suffix < o.suffix;
    }
};

// True iff appending `arrow` to a word with trailing window `suffix`
// completes an occurrence of some relation.
inline bool completes_relation(const MonomialPresentation& p, const std::vector<size_t>& suffix,
                               size_t arrow) {
    for (const auto& r : p.relations) {
        size_t len = r.arrows.size();
        if (len > suffix.size() + 1) continue;
        if (r.arrows.back() != arrow) continue;
        bool match = true;
        for (size_t i = 0; i + 1 < len; ++i)
            if (r.arrows[len - 2 - i] != suffix[suffix.size() - 1 - i]) {
                match = false;
                break;
            }
        if (match) return true;
    }
    return false;
}

}  // namespace detail

// Detects non-admissibility exactly: the relation-free words form a regular
// language, infinite iff the live state graph of the subword automaton has a
// reachable cycle. Returns the arrow word along such a cycle, if any.
inline std::optional<PathWord> find_relation_free_cycle(const MonomialPresentation& p) {
    using detail::PathState;
    size_t window = 0;
    for (const auto& r : p.relations) window = std::max(window, r.arrows.size());
    if (window > 0) --window;

    std::map<PathState, std::vector<std::pair<size_t, PathState>>> graph;  // state -> (arrow, next)
    std::vector<PathState> stack;
    for (size_t v = 0; v < p.quiver.vertices.size(); ++v) stack.push_back({v, {}});
    while (!stack.empty()) {
        PathState s = stack.back();
        stack.pop_back();
        if (graph.count(s)) continue;
        auto& out = graph[s];
        for (size_t a = 0; a < p.quiver.arrows.size(); ++a) {
            if (p.quiver.arrows[a].src != s.vertex) continue;
            if (detail::completes_relation(p, s.suffix, a)) continue;
            PathState next{p.quiver.arrows[a].tgt, s.suffix};
            next.suffix.push_back(a);
            if (next.suffix.size() > window)
                next.suffix.erase(next.suffix.begin(), next.suffix.end() - window);
            out.emplace_back(a, next);
            stack.push_back(next);
        }
    }

    // DFS cycle detection; reconstruct the arrow word along the cycle.
    std::map<PathState, int> color;  // 0 white, 1 gray, 2 black
    std::vector<std::pair<PathState, size_t>> path;  // (state, arrow taken out of it)

    struct Frame {
        PathState s;
        size_t next_edge = 0;
    };
    for (const auto& [start, _] : graph) {
        if (color[start] != 0) continue;
        std::vector<Frame> dfs{{start, 0}};
        color[start] = 1;
        path.clear();
        while (!dfs.empty()) {
            auto& fr = dfs.back();
            const auto& edges = graph.at(fr.s);
            if (fr.next_edge >= edges.size()) {
                color[fr.s] = 2;
                dfs.pop_back();
                if (!path.empty()) path.pop_back();
                continue;
            }
            auto [arrow, next] = edges[fr.next_edge++];
            if (color[next] == 1) {
                // found a cycle: arrows from the first occurrence of `next` on the path
                PathWord cyc;
                cyc.start_vertex = next.vertex;
                bool collecting = false;
                for (const auto& [st, ar] : path) {
                    if (!collecting && st.vertex == next.vertex && st.suffix == next.suffix)
                        collecting = true;
                    if (collecting) cyc.arrows.push_back(ar);
                }
                cyc.arrows.push_back(arrow);
                cyc.start_vertex = p.quiver.arrows[cyc.arrows.front()].src;
                return cyc;
            }
            if (color[next] == 0) {
                color[next] = 1;
                path.emplace_back(fr.s, arrow);
                dfs.push_back({next, 0});
            }
        }
    }
    return std::nullopt;
}

// All paths containing no relation as a contiguous subword, ordered by length
// then lexicographically by arrow indices. Throws on non-admissible input.
inline std::vector<PathWord> path_basis(const MonomialPresentation& p,
                                        const PathBudget& budget = {}) {
    p.validate();
    if (auto cyc = find_relation_free_cycle(p))
        throw error("presentation not admissible: relation-free cycle '" +
                    path_label(p.quiver, *cyc) + "' at vertex " +
                    p.quiver.vertices[path_source(p.quiver, *cyc)]);

    std::vector<PathWord> all;
    std::vector<PathWord> level;
    for (size_t v = 0; v < p.quiver.vertices.size(); ++v) level.push_back({v, {}});
    size_t window = 0;
    for (const auto& r : p.relations) window = std::max(window, r.arrows.size());

    while (!level.empty()) {
        all.insert(all.end(), level.begin(), level.end());
        require(all.size() <= budget.max_paths,
                "path budget exceeded (" + std::to_string(budget.max_paths) + ")");
        std::vector<PathWord> next;
        for (const auto& w : level) {
            size_t end = path_target(p.quiver, w);
            for (size_t a = 0; a < p.quiver.arrows.size(); ++a) {
                if (p.quiver.arrows[a].src != end) continue;
                std::vector<size_t> tail = w.arrows;
                if (window > 1 && tail.size() > window - 1)
                    tail.erase(tail.begin(), tail.end() - (window - 1));
                if (detail::completes_relation(p, tail, a)) continue;
                PathWord ext = w;
                ext.arrows.push_back(a);
                next.push_back(std::move(ext));
            }
        }
        std::sort(next.begin(), next.end());
        level = std::move(next);
    }
    std::sort(all.begin(), all.end());
    return all;
}

}  // namespace qalg
