#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tchordal/digraph.hpp"

namespace tchordal {

// Induced directed cycle: the only arcs among its vertices, in either
// direction, are the consecutive ones plus the closing arc. Stored in
// canonical rotation (smallest vertex first, following arc direction).
struct InducedCycleCertificate {
    std::vector<Vertex> vertices;

    int length() const { return static_cast<int>(vertices.size()); }
    bool valid_in(const Digraph& d) const;
    std::string render() const;  // "cycle <k>: v1 v2 ... vk"
};

// Induced directed path: the only arcs among its vertices are the consecutive
// forward arcs.
struct InducedPathCertificate {
    std::vector<Vertex> vertices;

    int length() const { return static_cast<int>(vertices.size()); }
    bool valid_in(const Digraph& d) const;
    std::string render() const;  // "path <l>: v1 ... vl"
};

// Streams every induced directed cycle of length <= max_length (all lengths
// when absent) to `visit`, each exactly once in canonical rotation; stops
// early when the visitor returns false. Returns the number visited.
// Throws BudgetExceededError when the search spends more than node_budget
// extension steps.
long long scan_induced_dicycles(const Digraph& d, std::optional<int> max_length,
                                const std::function<bool(const InducedCycleCertificate&)>& visit,
                                std::optional<long long> node_budget = {});

std::vector<InducedCycleCertificate> enumerate_induced_dicycles(
    const Digraph& d, std::optional<int> max_length = {}, std::optional<long long> limit = {},
    std::optional<long long> node_budget = {});

struct ChordalityResult {
    bool chordal = false;
    std::optional<InducedCycleCertificate> witness;  // induced cycle of length != t
};

// Chordal iff every induced directed cycle has length exactly t. For t = 2 a
// simple digraph qualifies iff it is acyclic, which is decided by topological
// sort; otherwise the search looks for lengths < t first, then > t.
ChordalityResult is_t_chordal(const Digraph& d, int t, std::optional<long long> node_budget = {});

std::optional<InducedPathCertificate> find_induced_dipath(const Digraph& d, int l,
                                                          std::optional<long long> node_budget = {});

struct ClassMembership {
    bool member = false;
    std::optional<InducedCycleCertificate> cycle;  // induced cycle shorter than l
    std::optional<InducedPathCertificate> path;    // induced path on exactly l vertices
};

// Class C_l: no induced directed cycle of length less than l and no induced
// directed path on exactly l vertices.
ClassMembership in_class_c_l(const Digraph& d, int l, std::optional<long long> node_budget = {});

}  // namespace tchordal
