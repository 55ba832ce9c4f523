#pragma once

#include <cstdint>
#include <unordered_set>
#include <utility>
#include <vector>

#include "tchordal/errors.hpp"

namespace tchordal {

using Vertex = int;  // 1-based throughout
using Arc = std::pair<Vertex, Vertex>;

// Simple digraph: no self-loops, and never both arcs uv and vu.
// Immutable after construction.
class Digraph {
public:
    Digraph() = default;
    Digraph(int vertex_count, const std::vector<Arc>& arcs);

    int vertex_count() const { return n_; }
    int arc_count() const { return arc_count_; }

    bool has_arc(Vertex u, Vertex v) const;
    bool adjacent(Vertex u, Vertex v) const { return has_arc(u, v) || has_arc(v, u); }

    const std::vector<Vertex>& out_neighbors(Vertex v) const;
    const std::vector<Vertex>& in_neighbors(Vertex v) const;
    int underlying_degree(Vertex v) const;

    // All arcs in ascending (from, to) order.
    std::vector<Arc> arcs() const;

    bool operator==(const Digraph& other) const;

private:
    void check_vertex(Vertex v) const;

    int n_ = 0;
    int arc_count_ = 0;
    std::vector<std::vector<Vertex>> out_, in_;  // sorted; index 0 unused
    std::unordered_set<std::int64_t> arc_keys_;
};

// Loopless undirected graph, used for underlying graphs and intersection graphs.
class UndirectedGraph {
public:
    UndirectedGraph() = default;
    UndirectedGraph(int vertex_count, const std::vector<Arc>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return edge_count_; }
    bool adjacent(Vertex u, Vertex v) const;
    const std::vector<Vertex>& neighbors(Vertex v) const;
    int degree(Vertex v) const;

private:
    void check_vertex(Vertex v) const;

    int n_ = 0;
    int edge_count_ = 0;
    std::vector<std::vector<Vertex>> adj_;
    std::unordered_set<std::int64_t> edge_keys_;
};

// An induced copy of `source` inside some host digraph.
// image[i] is the host vertex carrying source vertex i+1.
struct Embedding {
    Digraph source;
    std::vector<Vertex> image;

    // Injective, in range, and arc-exact: source has arc (a, b) iff the host
    // has arc (image(a), image(b)).
    bool valid_in(const Digraph& host) const;
};

UndirectedGraph underlying_graph(const Digraph& d);

// Exact maximum clique size, by branch and bound. 0 for the empty graph.
int clique_number(const UndirectedGraph& g);
int underlying_clique_number(const Digraph& d);

// Tarjan, iterative. Members of each component ascend; components are ordered
// by their smallest member.
std::vector<std::vector<Vertex>> strongly_connected_components(const Digraph& d);

bool is_acyclic(const Digraph& d);

struct InducedSubdigraph {
    Digraph graph;
    std::vector<Vertex> new_to_old;  // new_to_old[i] = original label of new vertex i+1
    std::vector<Vertex> old_to_new;  // 0 when the vertex was not kept; index 0 unused
};
InducedSubdigraph induced_subdigraph(const Digraph& d, const std::vector<Vertex>& vertices);

struct DisjointUnion {
    Digraph graph;
    std::vector<int> offsets;  // offsets[i] is added to part i's vertex labels
};
DisjointUnion disjoint_union(const std::vector<Digraph>& parts);

}  // namespace tchordal
