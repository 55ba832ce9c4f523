#include "tchordal/dicoloring.hpp"

#include <algorithm>
#include <numeric>

namespace tchordal {

std::string Dicoloring::render() const {
    std::string out = "k=" + std::to_string(k) + ";";
    for (std::size_t v = 1; v < color.size(); ++v)
        out += " " + std::to_string(v) + ":" + std::to_string(color[v]);
    return out;
}

namespace {

// Per-class topological orders, updated on insertion. Inserting v into a
// class succeeds iff the class stays acyclic, i.e. no out-neighbor of v
// reaches an in-neighbor of v inside the class.
class ColorClasses {
public:
    ColorClasses(const Digraph& d, int k)
        : d_(d), order_(k + 1), class_of_(d.vertex_count() + 1, 0), pos_(d.vertex_count() + 1, -1) {}

    int class_of(Vertex v) const { return class_of_[v]; }

    bool try_insert(Vertex v, int c) {
        auto& ord = order_[c];
        int max_in = -1;
        int min_out = static_cast<int>(ord.size());
        for (Vertex u : d_.in_neighbors(v))
            if (class_of_[u] == c) max_in = std::max(max_in, pos_[u]);
        for (Vertex u : d_.out_neighbors(v))
            if (class_of_[u] == c) min_out = std::min(min_out, pos_[u]);

        if (max_in < min_out) {
            // all in-neighbors precede all out-neighbors; slot v between them
            ord.insert(ord.begin() + (max_in + 1), v);
            for (int i = max_in + 1; i < static_cast<int>(ord.size()); ++i) pos_[ord[i]] = i;
            class_of_[v] = c;
            return true;
        }

        // Positions rise along arcs, so a path from an out-neighbor back to an
        // in-neighbor stays at positions <= max_in.
        std::vector<char> seen(ord.size(), 0);
        std::vector<Vertex> queue;
        for (Vertex u : d_.out_neighbors(v))
            if (class_of_[u] == c && pos_[u] <= max_in) {
                seen[pos_[u]] = 1;
                queue.push_back(u);
            }
        for (std::size_t head = 0; head < queue.size(); ++head) {
            Vertex x = queue[head];
            if (d_.has_arc(x, v)) return false;  // cycle through v
            for (Vertex y : d_.out_neighbors(x))
                if (class_of_[y] == c && pos_[y] <= max_in && !seen[pos_[y]]) {
                    seen[pos_[y]] = 1;
                    queue.push_back(y);
                }
        }
        ord.push_back(v);
        class_of_[v] = c;
        rebuild(c);
        return true;
    }

    void remove(Vertex v) {
        const int c = class_of_[v];
        auto& ord = order_[c];
        ord.erase(ord.begin() + pos_[v]);
        for (int i = pos_[v]; i < static_cast<int>(ord.size()); ++i) pos_[ord[i]] = i;
        class_of_[v] = 0;
        pos_[v] = -1;
    }

private:
    void rebuild(int c) {
        auto& ord = order_[c];
        std::vector<Vertex> members = ord;
        std::sort(members.begin(), members.end());
        std::vector<int> indeg(members.size(), 0);
        auto rank = [&](Vertex v) {
            return static_cast<int>(std::lower_bound(members.begin(), members.end(), v) -
                                    members.begin());
        };
        for (Vertex v : members)
            for (Vertex u : d_.out_neighbors(v))
                if (class_of_[u] == c) ++indeg[rank(u)];
        std::vector<Vertex> ready;
        for (std::size_t i = 0; i < members.size(); ++i)
            if (indeg[i] == 0) ready.push_back(members[i]);
        ord.clear();
        while (!ready.empty()) {
            // smallest-first for a deterministic order
            auto it = std::min_element(ready.begin(), ready.end());
            Vertex v = *it;
            ready.erase(it);
            pos_[v] = static_cast<int>(ord.size());
            ord.push_back(v);
            for (Vertex u : d_.out_neighbors(v))
                if (class_of_[u] == c && --indeg[rank(u)] == 0) ready.push_back(u);
        }
    }

    const Digraph& d_;
    std::vector<std::vector<Vertex>> order_;
    std::vector<int> class_of_, pos_;
};

std::vector<Vertex> branching_order(const Digraph& d) {
    std::vector<Vertex> order(d.vertex_count());
    std::iota(order.begin(), order.end(), 1);
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
        const int da = d.underlying_degree(a), db = d.underlying_degree(b);
        if (da != db) return da > db;
        return a < b;
    });
    return order;
}

Dicoloring coloring_from_classes(const Digraph& d, int k, const ColorClasses& classes) {
    Dicoloring result;
    result.k = k;
    result.color.assign(d.vertex_count() + 1, 0);
    for (Vertex v = 1; v <= d.vertex_count(); ++v) result.color[v] = classes.class_of(v);
    return result;
}

// Directed cycle inside `members`, or empty when the induced subdigraph is
// acyclic. Walks in-neighbors through the residual left by peeling.
std::vector<Vertex> monochromatic_cycle(const Digraph& d, const std::vector<Vertex>& members) {
    std::vector<char> in_set(d.vertex_count() + 1, 0);
    for (Vertex v : members) in_set[v] = 1;
    std::vector<int> indeg(d.vertex_count() + 1, 0);
    for (Vertex v : members)
        for (Vertex u : d.in_neighbors(v))
            if (in_set[u]) ++indeg[v];
    std::vector<Vertex> queue;
    for (Vertex v : members)
        if (indeg[v] == 0) queue.push_back(v);
    std::vector<char> removed(d.vertex_count() + 1, 0);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        Vertex v = queue[head];
        removed[v] = 1;
        for (Vertex w : d.out_neighbors(v))
            if (in_set[w] && !removed[w] && --indeg[w] == 0) queue.push_back(w);
    }
    Vertex start = 0;
    for (Vertex v : members)
        if (!removed[v]) {
            start = v;
            break;
        }
    if (start == 0) return {};

    std::vector<int> seen_at(d.vertex_count() + 1, -1);
    std::vector<Vertex> walk;
    Vertex cur = start;
    while (seen_at[cur] == -1) {
        seen_at[cur] = static_cast<int>(walk.size());
        walk.push_back(cur);
        for (Vertex u : d.in_neighbors(cur))
            if (in_set[u] && !removed[u]) {
                cur = u;
                break;
            }
    }
    // walk[i+1] -> walk[i]; the forward cycle reverses the tail of the walk
    std::vector<Vertex> cycle(walk.begin() + seen_at[cur], walk.end());
    std::reverse(cycle.begin() + 1, cycle.end());
    auto min_it = std::min_element(cycle.begin(), cycle.end());
    std::rotate(cycle.begin(), min_it, cycle.end());
    return cycle;
}

}  // namespace

DicoloringCheck verify_dicoloring(const Digraph& d, const Dicoloring& coloring) {
    const int n = d.vertex_count();
    if (static_cast<int>(coloring.color.size()) < n + 1)
        throw UncoloredVertexError("coloring covers " +
                                   std::to_string(static_cast<int>(coloring.color.size()) - 1) +
                                   " of " + std::to_string(n) + " vertices");
    for (Vertex v = 1; v <= n; ++v)
        if (coloring.color[v] < 1 || coloring.color[v] > coloring.k)
            throw UncoloredVertexError("vertex " + std::to_string(v) +
                                       " has no color in 1.." + std::to_string(coloring.k));
    std::vector<std::vector<Vertex>> classes(coloring.k + 1);
    for (Vertex v = 1; v <= n; ++v) classes[coloring.color[v]].push_back(v);
    for (int c = 1; c <= coloring.k; ++c) {
        auto cycle = monochromatic_cycle(d, classes[c]);
        if (!cycle.empty()) return {false, std::move(cycle)};
    }
    return {true, {}};
}

std::optional<Dicoloring> is_k_dicolorable(const Digraph& d, int k) {
    if (k < 0) throw InvalidParameterError("k must be non-negative");
    const int n = d.vertex_count();
    if (n == 0) return Dicoloring{k, std::vector<int>(1, 0)};
    if (k == 0) return std::nullopt;

    const std::vector<Vertex> by_degree = branching_order(d);
    std::vector<Vertex> order;
    order.reserve(n);
    order.push_back(1);
    for (Vertex v : by_degree)
        if (v != 1) order.push_back(v);

    ColorClasses classes(d, k);
    classes.try_insert(1, 1);
    std::vector<int> chosen(n, 0), used_before(n, 0);
    chosen[0] = 1;
    int used = 1;
    int i = 1;
    while (true) {
        if (i == n) return coloring_from_classes(d, k, classes);
        Vertex v = order[i];
        const int cmax = std::min(k, used + 1);
        bool advanced = false;
        for (int c = chosen[i] + 1; c <= cmax; ++c) {
            if (classes.try_insert(v, c)) {
                chosen[i] = c;
                used_before[i] = used;
                used = std::max(used, c);
                ++i;
                advanced = true;
                break;
            }
        }
        if (advanced) continue;
        chosen[i] = 0;
        --i;
        if (i == 0) return std::nullopt;
        classes.remove(order[i]);
        used = used_before[i];
    }
}

DichromaticResult dichromatic_number(const Digraph& d) {
    const int n = d.vertex_count();
    if (n == 0) return {0, Dicoloring{0, std::vector<int>(1, 0)}};
    std::vector<int> color(n + 1, 0);
    int best = 0;
    // a directed cycle lives inside one strongly connected component, so
    // components are solved independently and colors are reused across them
    for (const auto& comp : strongly_connected_components(d)) {
        auto sub = induced_subdigraph(d, comp);
        int k = 1;
        std::optional<Dicoloring> found;
        while (!(found = is_k_dicolorable(sub.graph, k))) ++k;
        for (int i = 1; i <= sub.graph.vertex_count(); ++i)
            color[sub.new_to_old[i - 1]] = found->color[i];
        best = std::max(best, k);
    }
    return {best, Dicoloring{best, std::move(color)}};
}

long long enumerate_k_dicolorings(const Digraph& d, int k,
                                  const std::function<void(const Dicoloring&)>& visit,
                                  long long budget) {
    if (k < 0) throw InvalidParameterError("k must be non-negative");
    if (budget < 0) throw InvalidParameterError("budget must be non-negative");
    const int n = d.vertex_count();
    long long space = 1;
    for (int i = 0; i < n; ++i) {
        if (k == 0) {
            space = 0;
            break;
        }
        if (space > budget / k)
            throw BudgetExceededError("k^n = " + std::to_string(k) + "^" + std::to_string(n) +
                                      " labeled colorings exceed budget " + std::to_string(budget));
        space *= k;
    }
    if (space > budget)
        throw BudgetExceededError("coloring space exceeds budget " + std::to_string(budget));

    if (n == 0) {
        visit(Dicoloring{k, std::vector<int>(1, 0)});
        return 1;
    }
    if (k == 0) return 0;

    ColorClasses classes(d, k);
    long long count = 0;
    std::function<void(Vertex)> walk = [&](Vertex v) {
        if (v > n) {
            ++count;
            visit(coloring_from_classes(d, k, classes));
            return;
        }
        for (int c = 1; c <= k; ++c)
            if (classes.try_insert(v, c)) {
                walk(v + 1);
                classes.remove(v);
            }
    };
    walk(1);
    return count;
}

}  // namespace tchordal
