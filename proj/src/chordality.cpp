#include "tchordal/chordality.hpp"

#include <algorithm>
#include <unordered_set>

namespace tchordal {

namespace {

struct NodeBudget {
    std::optional<long long> cap;
    long long used = 0;

    void spend() {
        if (cap && ++used > *cap)
            throw BudgetExceededError("search exceeded node budget of " + std::to_string(*cap));
    }
};

std::string render_vertices(const char* kind, const std::vector<Vertex>& vs) {
    std::string out = std::string(kind) + " " + std::to_string(vs.size()) + ":";
    for (Vertex v : vs) out += " " + std::to_string(v);
    return out;
}

bool vertices_distinct_in_range(const std::vector<Vertex>& vs, const Digraph& d) {
    std::unordered_set<Vertex> seen;
    for (Vertex v : vs)
        if (v < 1 || v > d.vertex_count() || !seen.insert(v).second) return false;
    return true;
}

}  // namespace

bool InducedCycleCertificate::valid_in(const Digraph& d) const {
    const int k = length();
    if (k < 3) return false;
    if (!vertices_distinct_in_range(vertices, d)) return false;
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) {
            if (a == b) continue;
            const bool expected = b == (a + 1) % k;
            if (d.has_arc(vertices[a], vertices[b]) != expected) return false;
        }
    return true;
}

std::string InducedCycleCertificate::render() const {
    return render_vertices("cycle", vertices);
}

bool InducedPathCertificate::valid_in(const Digraph& d) const {
    const int k = length();
    if (k < 1) return false;
    if (!vertices_distinct_in_range(vertices, d)) return false;
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) {
            if (a == b) continue;
            const bool expected = b == a + 1;
            if (d.has_arc(vertices[a], vertices[b]) != expected) return false;
        }
    return true;
}

std::string InducedPathCertificate::render() const {
    return render_vertices("path", vertices);
}

// Backtracking extension of induced directed paths. A cycle with smallest
// vertex s is grown as a path s, v1, ..., vj over vertices > s; adj_count[w]
// tracks how many path vertices other than s are adjacent to w, so a
// candidate is eligible only when its sole path contact is the path's tail.
long long scan_induced_dicycles(const Digraph& d, std::optional<int> max_length,
                                const std::function<bool(const InducedCycleCertificate&)>& visit,
                                std::optional<long long> node_budget) {
    if (max_length && *max_length < 3) return 0;
    const int n = d.vertex_count();
    NodeBudget budget{node_budget};
    long long found = 0;

    std::vector<int> adj_count(n + 1, 0);
    std::vector<char> on_path(n + 1, 0);
    std::vector<Vertex> path;

    struct Frame {
        Vertex v;
        int next;
    };
    std::vector<Frame> stack;

    auto add_counts = [&](Vertex w) {
        for (Vertex y : d.out_neighbors(w)) ++adj_count[y];
        for (Vertex y : d.in_neighbors(w)) ++adj_count[y];
    };
    auto sub_counts = [&](Vertex w) {
        for (Vertex y : d.out_neighbors(w)) --adj_count[y];
        for (Vertex y : d.in_neighbors(w)) --adj_count[y];
    };

    for (Vertex s = 1; s <= n; ++s) {
        path.assign(1, s);
        on_path[s] = 1;
        stack.assign(1, {s, 0});
        while (!stack.empty()) {
            const auto& outs = d.out_neighbors(stack.back().v);
            if (stack.back().next >= static_cast<int>(outs.size())) {
                Vertex v = stack.back().v;
                stack.pop_back();
                on_path[v] = 0;
                path.pop_back();
                if (v != s) sub_counts(v);
                continue;
            }
            Vertex w = outs[stack.back().next++];
            budget.spend();
            if (w <= s || on_path[w]) continue;
            const int depth = static_cast<int>(path.size());
            if (depth >= 2) {
                if (adj_count[w] != 1) continue;  // touches an inner path vertex
                if (d.has_arc(w, s)) {
                    const int len = depth + 1;
                    if (!max_length || len <= *max_length) {
                        std::vector<Vertex> cycle = path;
                        cycle.push_back(w);
                        ++found;
                        if (!visit(InducedCycleCertificate{std::move(cycle)})) return found;
                    }
                    continue;  // a closing vertex never extends the path
                }
                if (d.has_arc(s, w)) continue;  // would chord back to the start
                if (max_length && depth + 1 >= *max_length) continue;
            }
            path.push_back(w);
            on_path[w] = 1;
            add_counts(w);
            stack.push_back({w, 0});
        }
    }
    return found;
}

std::vector<InducedCycleCertificate> enumerate_induced_dicycles(const Digraph& d,
                                                                std::optional<int> max_length,
                                                                std::optional<long long> limit,
                                                                std::optional<long long> node_budget) {
    std::vector<InducedCycleCertificate> cycles;
    if (limit && *limit <= 0) return cycles;
    scan_induced_dicycles(
        d, max_length,
        [&](const InducedCycleCertificate& c) {
            cycles.push_back(c);
            return !(limit && static_cast<long long>(cycles.size()) >= *limit);
        },
        node_budget);
    return cycles;
}

ChordalityResult is_t_chordal(const Digraph& d, int t, std::optional<long long> node_budget) {
    if (t < 2) throw InvalidParameterError("t must be at least 2");
    if (t == 2) {
        // every induced directed cycle of a simple digraph has length >= 3
        if (is_acyclic(d)) return {true, std::nullopt};
        auto witness = enumerate_induced_dicycles(d, std::nullopt, 1, node_budget);
        return {false, witness.at(0)};
    }
    std::optional<InducedCycleCertificate> witness;
    scan_induced_dicycles(
        d, t - 1,
        [&](const InducedCycleCertificate& c) {
            witness = c;
            return false;
        },
        node_budget);
    if (witness) return {false, witness};
    scan_induced_dicycles(
        d, std::nullopt,
        [&](const InducedCycleCertificate& c) {
            if (c.length() != t) {
                witness = c;
                return false;
            }
            return true;
        },
        node_budget);
    if (witness) return {false, witness};
    return {true, std::nullopt};
}

std::optional<InducedPathCertificate> find_induced_dipath(const Digraph& d, int l,
                                                          std::optional<long long> node_budget) {
    if (l < 1) throw InvalidParameterError("path vertex count must be at least 1");
    const int n = d.vertex_count();
    if (l == 1) {
        if (n == 0) return std::nullopt;
        return InducedPathCertificate{{1}};
    }
    NodeBudget budget{node_budget};
    std::vector<int> adj_count(n + 1, 0);
    std::vector<char> on_path(n + 1, 0);
    std::vector<Vertex> path;

    struct Frame {
        Vertex v;
        int next;
    };
    std::vector<Frame> stack;

    auto add_counts = [&](Vertex w) {
        for (Vertex y : d.out_neighbors(w)) ++adj_count[y];
        for (Vertex y : d.in_neighbors(w)) ++adj_count[y];
    };
    auto sub_counts = [&](Vertex w) {
        for (Vertex y : d.out_neighbors(w)) --adj_count[y];
        for (Vertex y : d.in_neighbors(w)) --adj_count[y];
    };

    for (Vertex s = 1; s <= n; ++s) {
        path.assign(1, s);
        on_path[s] = 1;
        add_counts(s);
        stack.assign(1, {s, 0});
        while (!stack.empty()) {
            const auto& outs = d.out_neighbors(stack.back().v);
            if (stack.back().next >= static_cast<int>(outs.size())) {
                Vertex v = stack.back().v;
                stack.pop_back();
                on_path[v] = 0;
                path.pop_back();
                sub_counts(v);
                continue;
            }
            Vertex w = outs[stack.back().next++];
            budget.spend();
            if (on_path[w] || adj_count[w] != 1) continue;
            if (static_cast<int>(path.size()) + 1 == l) {
                std::vector<Vertex> result = path;
                result.push_back(w);
                return InducedPathCertificate{std::move(result)};
            }
            path.push_back(w);
            on_path[w] = 1;
            add_counts(w);
            stack.push_back({w, 0});
        }
    }
    return std::nullopt;
}

ClassMembership in_class_c_l(const Digraph& d, int l, std::optional<long long> node_budget) {
    if (l < 2) throw InvalidParameterError("l must be at least 2");
    std::optional<InducedCycleCertificate> cycle;
    if (l - 1 >= 3)
        scan_induced_dicycles(
            d, l - 1,
            [&](const InducedCycleCertificate& c) {
                cycle = c;
                return false;
            },
            node_budget);
    if (cycle) return {false, cycle, std::nullopt};
    auto path = find_induced_dipath(d, l, node_budget);
    if (path) return {false, std::nullopt, path};
    return {true, std::nullopt, std::nullopt};
}

}  // namespace tchordal
