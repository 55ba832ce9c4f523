#pragma once

#include <vector>

#include "tchordal/dicoloring.hpp"
#include "tchordal/digraph.hpp"

namespace tchordal {

// A collection of independent sets of a host digraph. Sets are normalized to
// ascending order; independence is validated on construction.
struct IndependentSetFamily {
    Digraph host;
    std::vector<std::vector<Vertex>> sets;

    IndependentSetFamily(Digraph host_graph, std::vector<std::vector<Vertex>> set_list);
};

// One vertex per set; sets are adjacent iff they intersect.
UndirectedGraph intersection_graph(const IndependentSetFamily& family);

// Proper coloring by greedy on a smallest-last (degeneracy) order. Returns
// colors indexed by vertex, entry 0 unused. Color count is best effort;
// properness is what matters.
std::vector<int> proper_coloring(const UndirectedGraph& g);

struct AmplifierOutput {
    Digraph result;
    std::vector<Embedding> copies;  // pairwise disjoint induced copies of the input
    // set_images[c][j]: image of the family's j-th set under copy c, ascending
    std::vector<std::vector<std::vector<Vertex>>> set_images;
};

// Blow-up construction: repeatedly takes t copies of the current digraph and
// wires the tracked images of one independent set cyclically between
// consecutive copies, one pairwise-disjoint batch of sets (a color class of
// the intersection graph) per level. Preserves t-chordality and keeps the
// clique number at most 3 (at most 2 when the input has clique number at most
// 2 and t > 3). Fails with SizeCapExceededError before materializing a level
// with more than size_cap vertices.
AmplifierOutput amplify(const Digraph& d, const IndependentSetFamily& family, int t, int size_cap);

// Exhaustively checks, over every valid k-dicoloring of out.result, that some
// tracked copy has every set image colored with at most k-1 distinct colors.
// Vacuously true when no k-dicoloring exists. The budget bounds k^|V|.
bool verify_amplifier_postcondition(const AmplifierOutput& out, int k, long long budget);

// D_1 is the single vertex; D_{k+1} amplifies the disjoint union of
// dichromatic_number(D_k) copies of D_k against all transversal sets (one
// vertex per copy). Every member is t-chordal with clique number at most 3
// and dichromatic number at least its index.
Digraph build_hard_sequence(int t, int n, int size_cap, long long family_cap = 1'000'000);

}  // namespace tchordal
