#pragma once

// Re-checkers for the structural invariants, written directly against the
// definitions rather than through the library's own validation paths.

#include <algorithm>
#include <set>
#include <unordered_set>
#include <vector>

#include "tchordal/amplifier.hpp"
#include "tchordal/digraph.hpp"
#include "tchordal/reduction.hpp"

namespace validators {

using tchordal::Digraph;
using tchordal::Vertex;

// No self-loops, no digons, endpoints in range.
inline bool simple(const Digraph& d) {
    std::set<std::pair<Vertex, Vertex>> seen;
    for (const auto& [u, v] : d.arcs()) {
        if (u < 1 || u > d.vertex_count() || v < 1 || v > d.vertex_count()) return false;
        if (u == v) return false;
        if (seen.count({v, u})) return false;
        seen.insert({u, v});
    }
    return true;
}

inline bool embedding_arc_exact(const Digraph& source, const std::vector<Vertex>& image,
                                const Digraph& host) {
    if (image.size() != static_cast<std::size_t>(source.vertex_count())) return false;
    std::unordered_set<Vertex> used;
    for (Vertex v : image)
        if (v < 1 || v > host.vertex_count() || !used.insert(v).second) return false;
    for (int a = 1; a <= source.vertex_count(); ++a)
        for (int b = 1; b <= source.vertex_count(); ++b) {
            if (a == b) continue;
            if (source.has_arc(a, b) != host.has_arc(image[a - 1], image[b - 1])) return false;
        }
    return true;
}

inline bool pairwise_disjoint(const std::vector<tchordal::Embedding>& copies) {
    std::unordered_set<Vertex> used;
    for (const auto& copy : copies)
        for (Vertex v : copy.image)
            if (!used.insert(v).second) return false;
    return true;
}

inline bool independent_in(const Digraph& d, const std::vector<Vertex>& set) {
    for (std::size_t i = 0; i < set.size(); ++i)
        for (std::size_t j = i + 1; j < set.size(); ++j)
            if (d.adjacent(set[i], set[j])) return false;
    return true;
}

inline bool cycle_certificate(const Digraph& d, const std::vector<Vertex>& vs) {
    if (vs.size() < 3) return false;
    std::unordered_set<Vertex> distinct(vs.begin(), vs.end());
    if (distinct.size() != vs.size()) return false;
    const int k = static_cast<int>(vs.size());
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) {
            if (a == b) continue;
            if (d.has_arc(vs[a], vs[b]) != (b == (a + 1) % k)) return false;
        }
    return true;
}

inline bool path_certificate(const Digraph& d, const std::vector<Vertex>& vs) {
    if (vs.empty()) return false;
    std::unordered_set<Vertex> distinct(vs.begin(), vs.end());
    if (distinct.size() != vs.size()) return false;
    const int k = static_cast<int>(vs.size());
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) {
            if (a == b) continue;
            if (d.has_arc(vs[a], vs[b]) != (b == a + 1)) return false;
        }
    return true;
}

// Copies are disjoint arc-exact embeddings; each set image equals the
// embedding's image of the matching family set and stays independent.
inline bool amplifier_output(const tchordal::AmplifierOutput& out,
                             const tchordal::IndependentSetFamily& family) {
    if (!simple(out.result)) return false;
    if (!pairwise_disjoint(out.copies)) return false;
    if (out.set_images.size() != out.copies.size()) return false;
    for (std::size_t c = 0; c < out.copies.size(); ++c) {
        if (!embedding_arc_exact(out.copies[c].source, out.copies[c].image, out.result))
            return false;
        if (out.set_images[c].size() != family.sets.size()) return false;
        for (std::size_t j = 0; j < family.sets.size(); ++j) {
            std::vector<Vertex> expected;
            for (Vertex v : family.sets[j]) expected.push_back(out.copies[c].image[v - 1]);
            std::sort(expected.begin(), expected.end());
            if (expected != out.set_images[c][j]) return false;
            if (!independent_in(out.result, expected)) return false;
        }
    }
    return true;
}

// Vertex count: 2t per variable, 2 + |C_i| per clause.
inline bool reduction_vertex_count(const tchordal::ReductionArtifact& art) {
    long long expected = static_cast<long long>(art.formula.variable_count) * 2 * art.t;
    for (const auto& clause : art.formula.clauses) expected += 2 + clause.size();
    return art.digraph.vertex_count() == expected;
}

}  // namespace validators
