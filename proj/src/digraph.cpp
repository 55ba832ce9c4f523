#include "tchordal/digraph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace tchordal {

namespace {

std::int64_t pair_key(Vertex u, Vertex v) {
    return (static_cast<std::int64_t>(u) << 32) | static_cast<std::uint32_t>(v);
}

std::string arc_text(Vertex u, Vertex v) {
    return "(" + std::to_string(u) + ", " + std::to_string(v) + ")";
}

}  // namespace

Digraph::Digraph(int vertex_count, const std::vector<Arc>& arcs) : n_(vertex_count) {
    if (vertex_count < 0)
        throw InvalidParameterError("vertex count must be non-negative");
    out_.assign(n_ + 1, {});
    in_.assign(n_ + 1, {});
    arc_keys_.reserve(arcs.size() * 2);
    for (const auto& [u, v] : arcs) {
        if (u < 1 || u > n_ || v < 1 || v > n_)
            throw VertexOutOfRangeError("arc " + arc_text(u, v) + " leaves vertex range 1.." +
                                        std::to_string(n_));
        if (u == v)
            throw SelfLoopError("self-loop at vertex " + std::to_string(u));
        if (arc_keys_.count(pair_key(v, u)))
            throw DigonError("digon between " + std::to_string(u) + " and " + std::to_string(v));
        if (arc_keys_.insert(pair_key(u, v)).second) {
            out_[u].push_back(v);
            in_[v].push_back(u);
            ++arc_count_;
        }
    }
    for (auto& list : out_) std::sort(list.begin(), list.end());
    for (auto& list : in_) std::sort(list.begin(), list.end());
}

void Digraph::check_vertex(Vertex v) const {
    if (v < 1 || v > n_)
        throw VertexOutOfRangeError("vertex " + std::to_string(v) + " outside 1.." +
                                    std::to_string(n_));
}

bool Digraph::has_arc(Vertex u, Vertex v) const {
    if (u < 1 || u > n_ || v < 1 || v > n_) return false;
    return arc_keys_.count(pair_key(u, v)) > 0;
}

const std::vector<Vertex>& Digraph::out_neighbors(Vertex v) const {
    check_vertex(v);
    return out_[v];
}

const std::vector<Vertex>& Digraph::in_neighbors(Vertex v) const {
    check_vertex(v);
    return in_[v];
}

int Digraph::underlying_degree(Vertex v) const {
    check_vertex(v);
    return static_cast<int>(out_[v].size() + in_[v].size());
}

std::vector<Arc> Digraph::arcs() const {
    std::vector<Arc> result;
    result.reserve(arc_count_);
    for (Vertex u = 1; u <= n_; ++u)
        for (Vertex v : out_[u]) result.push_back({u, v});
    return result;
}

bool Digraph::operator==(const Digraph& other) const {
    return n_ == other.n_ && arc_keys_ == other.arc_keys_;
}

UndirectedGraph::UndirectedGraph(int vertex_count, const std::vector<Arc>& edges)
    : n_(vertex_count) {
    if (vertex_count < 0)
        throw InvalidParameterError("vertex count must be non-negative");
    adj_.assign(n_ + 1, {});
    for (const auto& [a, b] : edges) {
        if (a < 1 || a > n_ || b < 1 || b > n_)
            throw VertexOutOfRangeError("edge " + arc_text(a, b) + " leaves vertex range 1.." +
                                        std::to_string(n_));
        if (a == b)
            throw SelfLoopError("self-loop at vertex " + std::to_string(a));
        Vertex u = std::min(a, b), v = std::max(a, b);
        if (edge_keys_.insert(pair_key(u, v)).second) {
            adj_[u].push_back(v);
            adj_[v].push_back(u);
            ++edge_count_;
        }
    }
    for (auto& list : adj_) std::sort(list.begin(), list.end());
}

void UndirectedGraph::check_vertex(Vertex v) const {
    if (v < 1 || v > n_)
        throw VertexOutOfRangeError("vertex " + std::to_string(v) + " outside 1.." +
                                    std::to_string(n_));
}

bool UndirectedGraph::adjacent(Vertex u, Vertex v) const {
    if (u < 1 || u > n_ || v < 1 || v > n_) return false;
    return edge_keys_.count(pair_key(std::min(u, v), std::max(u, v))) > 0;
}

const std::vector<Vertex>& UndirectedGraph::neighbors(Vertex v) const {
    check_vertex(v);
    return adj_[v];
}

int UndirectedGraph::degree(Vertex v) const {
    check_vertex(v);
    return static_cast<int>(adj_[v].size());
}

bool Embedding::valid_in(const Digraph& host) const {
    const int k = source.vertex_count();
    if (static_cast<int>(image.size()) != k) return false;
    std::unordered_set<Vertex> seen;
    for (Vertex w : image)
        if (w < 1 || w > host.vertex_count() || !seen.insert(w).second) return false;
    for (int a = 1; a <= k; ++a)
        for (int b = 1; b <= k; ++b) {
            if (a == b) continue;
            if (source.has_arc(a, b) != host.has_arc(image[a - 1], image[b - 1])) return false;
        }
    return true;
}

UndirectedGraph underlying_graph(const Digraph& d) {
    std::vector<Arc> edges;
    edges.reserve(d.arc_count());
    for (const auto& [u, v] : d.arcs()) edges.push_back({u, v});
    return UndirectedGraph(d.vertex_count(), edges);
}

namespace {

void clique_expand(const UndirectedGraph& g, std::vector<Vertex>& current,
                   std::vector<Vertex>& candidates, int& best) {
    while (!candidates.empty()) {
        if (static_cast<int>(current.size() + candidates.size()) <= best) return;
        Vertex v = candidates.back();
        candidates.pop_back();
        current.push_back(v);
        std::vector<Vertex> narrowed;
        narrowed.reserve(candidates.size());
        for (Vertex u : candidates)
            if (g.adjacent(u, v)) narrowed.push_back(u);
        if (static_cast<int>(current.size()) > best) best = static_cast<int>(current.size());
        clique_expand(g, current, narrowed, best);
        current.pop_back();
    }
}

}  // namespace

int clique_number(const UndirectedGraph& g) {
    const int n = g.vertex_count();
    if (n == 0) return 0;
    std::vector<Vertex> candidates(n);
    std::iota(candidates.begin(), candidates.end(), 1);
    // pop_back picks highest degree first, ties to the smallest vertex
    std::sort(candidates.begin(), candidates.end(), [&](Vertex a, Vertex b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) < g.degree(b);
        return a > b;
    });
    std::vector<Vertex> current;
    int best = 0;
    clique_expand(g, current, candidates, best);
    return best;
}

int underlying_clique_number(const Digraph& d) {
    return clique_number(underlying_graph(d));
}

std::vector<std::vector<Vertex>> strongly_connected_components(const Digraph& d) {
    const int n = d.vertex_count();
    std::vector<int> index(n + 1, -1), low(n + 1, 0);
    std::vector<char> on_stack(n + 1, 0);
    std::vector<Vertex> stack;
    std::vector<std::vector<Vertex>> components;
    int counter = 0;

    struct Frame {
        Vertex v;
        int next;
    };
    std::vector<Frame> frames;

    for (Vertex s = 1; s <= n; ++s) {
        if (index[s] != -1) continue;
        frames.push_back({s, 0});
        while (!frames.empty()) {
            Vertex v = frames.back().v;
            if (frames.back().next == 0) {
                index[v] = low[v] = counter++;
                stack.push_back(v);
                on_stack[v] = 1;
            }
            const auto& outs = d.out_neighbors(v);
            if (frames.back().next < static_cast<int>(outs.size())) {
                Vertex w = outs[frames.back().next++];
                if (index[w] == -1)
                    frames.push_back({w, 0});
                else if (on_stack[w])
                    low[v] = std::min(low[v], index[w]);
            } else {
                if (low[v] == index[v]) {
                    std::vector<Vertex> comp;
                    Vertex w;
                    do {
                        w = stack.back();
                        stack.pop_back();
                        on_stack[w] = 0;
                        comp.push_back(w);
                    } while (w != v);
                    std::sort(comp.begin(), comp.end());
                    components.push_back(std::move(comp));
                }
                frames.pop_back();
                if (!frames.empty()) {
                    Vertex parent = frames.back().v;
                    low[parent] = std::min(low[parent], low[v]);
                }
            }
        }
    }
    std::sort(components.begin(), components.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return components;
}

bool is_acyclic(const Digraph& d) {
    const int n = d.vertex_count();
    std::vector<int> indeg(n + 1, 0);
    for (Vertex v = 1; v <= n; ++v) indeg[v] = static_cast<int>(d.in_neighbors(v).size());
    std::vector<Vertex> queue;
    for (Vertex v = 1; v <= n; ++v)
        if (indeg[v] == 0) queue.push_back(v);
    std::size_t head = 0;
    int removed = 0;
    while (head < queue.size()) {
        Vertex v = queue[head++];
        ++removed;
        for (Vertex w : d.out_neighbors(v))
            if (--indeg[w] == 0) queue.push_back(w);
    }
    return removed == n;
}

InducedSubdigraph induced_subdigraph(const Digraph& d, const std::vector<Vertex>& vertices) {
    std::vector<Vertex> kept = vertices;
    for (Vertex v : kept)
        if (v < 1 || v > d.vertex_count())
            throw VertexOutOfRangeError("vertex " + std::to_string(v) + " outside 1.." +
                                        std::to_string(d.vertex_count()));
    std::sort(kept.begin(), kept.end());
    kept.erase(std::unique(kept.begin(), kept.end()), kept.end());

    std::vector<Vertex> old_to_new(d.vertex_count() + 1, 0);
    for (int i = 0; i < static_cast<int>(kept.size()); ++i) old_to_new[kept[i]] = i + 1;

    std::vector<Arc> arcs;
    for (Vertex u : kept)
        for (Vertex v : d.out_neighbors(u))
            if (old_to_new[v] != 0) arcs.push_back({old_to_new[u], old_to_new[v]});

    InducedSubdigraph result;
    result.graph = Digraph(static_cast<int>(kept.size()), arcs);
    result.new_to_old = std::move(kept);
    result.old_to_new = std::move(old_to_new);
    return result;
}

DisjointUnion disjoint_union(const std::vector<Digraph>& parts) {
    std::vector<int> offsets;
    offsets.reserve(parts.size());
    long long total = 0;
    for (const auto& part : parts) {
        offsets.push_back(static_cast<int>(total));
        total += part.vertex_count();
    }
    std::vector<Arc> arcs;
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (const auto& [u, v] : parts[i].arcs())
            arcs.push_back({u + offsets[i], v + offsets[i]});
    DisjointUnion result;
    result.graph = Digraph(static_cast<int>(total), arcs);
    result.offsets = std::move(offsets);
    return result;
}

}  // namespace tchordal
