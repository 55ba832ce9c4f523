#include "tchordal/amplifier.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace tchordal {

namespace {

std::string set_text(const std::vector<Vertex>& set) {
    std::string out = "{";
    for (std::size_t i = 0; i < set.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(set[i]);
    }
    return out + "}";
}

void check_independent(const Digraph& d, const std::vector<Vertex>& set, const std::string& what) {
    for (std::size_t i = 0; i < set.size(); ++i)
        for (std::size_t j = i + 1; j < set.size(); ++j) {
            Vertex a = set[i], b = set[j];
            if (d.has_arc(a, b))
                throw NotIndependentError(what + " " + set_text(set) + " has arc (" +
                                          std::to_string(a) + ", " + std::to_string(b) + ")");
            if (d.has_arc(b, a))
                throw NotIndependentError(what + " " + set_text(set) + " has arc (" +
                                          std::to_string(b) + ", " + std::to_string(a) + ")");
        }
}

bool sorted_intersect(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return true;
        if (a[i] < b[j])
            ++i;
        else
            ++j;
    }
    return false;
}

std::vector<Vertex> identity_image(int n) {
    std::vector<Vertex> image(n);
    std::iota(image.begin(), image.end(), 1);
    return image;
}

std::vector<Vertex> image_of(const std::vector<Vertex>& set, const std::vector<Vertex>& copy) {
    std::vector<Vertex> img;
    img.reserve(set.size());
    for (Vertex v : set) img.push_back(copy[v - 1]);
    std::sort(img.begin(), img.end());
    return img;
}

}  // namespace

IndependentSetFamily::IndependentSetFamily(Digraph host_graph,
                                           std::vector<std::vector<Vertex>> set_list)
    : host(std::move(host_graph)), sets(std::move(set_list)) {
    for (std::size_t i = 0; i < sets.size(); ++i) {
        auto& set = sets[i];
        for (Vertex v : set)
            if (v < 1 || v > host.vertex_count())
                throw VertexOutOfRangeError("set " + std::to_string(i + 1) + " contains vertex " +
                                            std::to_string(v) + " outside 1.." +
                                            std::to_string(host.vertex_count()));
        std::sort(set.begin(), set.end());
        set.erase(std::unique(set.begin(), set.end()), set.end());
        check_independent(host, set, "set " + std::to_string(i + 1));
    }
}

UndirectedGraph intersection_graph(const IndependentSetFamily& family) {
    const int p = static_cast<int>(family.sets.size());
    std::vector<Arc> edges;
    for (int i = 0; i < p; ++i)
        for (int j = i + 1; j < p; ++j)
            if (sorted_intersect(family.sets[i], family.sets[j])) edges.push_back({i + 1, j + 1});
    return UndirectedGraph(p, edges);
}

std::vector<int> proper_coloring(const UndirectedGraph& g) {
    const int n = g.vertex_count();
    std::vector<int> deg(n + 1, 0);
    std::vector<char> removed(n + 1, 0);
    for (Vertex v = 1; v <= n; ++v) deg[v] = g.degree(v);
    std::vector<Vertex> order;
    order.reserve(n);
    for (int step = 0; step < n; ++step) {
        Vertex pick = 0;
        for (Vertex v = 1; v <= n; ++v)
            if (!removed[v] && (pick == 0 || deg[v] < deg[pick])) pick = v;
        removed[pick] = 1;
        order.push_back(pick);
        for (Vertex u : g.neighbors(pick))
            if (!removed[u]) --deg[u];
    }
    std::vector<int> color(n + 1, 0);
    for (int i = n - 1; i >= 0; --i) {
        Vertex v = order[i];
        std::vector<char> taken(n + 2, 0);
        for (Vertex u : g.neighbors(v))
            if (color[u]) taken[color[u]] = 1;
        int c = 1;
        while (taken[c]) ++c;
        color[v] = c;
    }
    return color;
}

AmplifierOutput amplify(const Digraph& d, const IndependentSetFamily& family, int t, int size_cap) {
    if (t < 3) throw InvalidParameterError("t must be at least 3");
    if (size_cap < 0) throw InvalidParameterError("size cap must be non-negative");
    if (!(family.host == d))
        throw InvalidParameterError("family host differs from the digraph being amplified");

    Digraph cur = d;
    std::vector<std::vector<Vertex>> tracked = {identity_image(d.vertex_count())};

    // Sets live over the level-base digraph; colors come from one greedy
    // coloring of the intersection graph and are inherited by the copied
    // sets, so each level retires one color class and the level count is
    // bounded by the color count.
    std::vector<std::vector<Vertex>> sets = family.sets;
    std::vector<int> set_color;
    {
        const auto coloring = proper_coloring(intersection_graph(family));
        set_color.assign(sets.size(), 0);
        for (std::size_t i = 0; i < sets.size(); ++i) set_color[i] = coloring[i + 1];
    }

    while (!sets.empty()) {
        // color class to wire: largest, ties to the lowest color index
        std::set<int> colors(set_color.begin(), set_color.end());
        int pick = *colors.begin();
        std::size_t pick_size = 0;
        for (int c : colors) {
            const std::size_t size = std::count(set_color.begin(), set_color.end(), c);
            if (size > pick_size) {
                pick = c;
                pick_size = size;
            }
        }
        std::vector<int> chosen;
        for (std::size_t i = 0; i < sets.size(); ++i)
            if (set_color[i] == pick) chosen.push_back(static_cast<int>(i));

        const int base_n = cur.vertex_count();
        std::vector<std::vector<Vertex>> base_copies = {identity_image(base_n)};

        for (int set_idx : chosen) {
            std::vector<Vertex> wired;
            wired.reserve(base_copies.size() * sets[set_idx].size());
            for (const auto& copy : base_copies)
                for (Vertex v : sets[set_idx]) wired.push_back(copy[v - 1]);
            std::sort(wired.begin(), wired.end());
            check_independent(cur, wired, "wiring union");

            const int prev_n = cur.vertex_count();
            const long long next_n = static_cast<long long>(prev_n) * t;
            if (next_n > size_cap)
                throw SizeCapExceededError("amplification needs " + std::to_string(next_n) +
                                           " vertices, cap is " + std::to_string(size_cap));

            std::vector<Arc> arcs;
            arcs.reserve(static_cast<std::size_t>(cur.arc_count()) * t +
                         wired.size() * wired.size() * t);
            const auto cur_arcs = cur.arcs();
            for (int c = 0; c < t; ++c) {
                const int off = c * prev_n;
                for (const auto& [u, v] : cur_arcs) arcs.push_back({u + off, v + off});
            }
            for (int c = 0; c < t; ++c) {
                const int from_off = c * prev_n;
                const int to_off = ((c + 1) % t) * prev_n;
                for (Vertex v : wired)
                    for (Vertex u : wired) arcs.push_back({v + from_off, u + to_off});
            }
            cur = Digraph(static_cast<int>(next_n), arcs);

            auto spread = [&](std::vector<std::vector<Vertex>>& copies) {
                std::vector<std::vector<Vertex>> next;
                next.reserve(copies.size() * t);
                for (const auto& img : copies)
                    for (int c = 0; c < t; ++c) {
                        std::vector<Vertex> shifted(img);
                        for (Vertex& x : shifted) x += c * prev_n;
                        next.push_back(std::move(shifted));
                    }
                copies = std::move(next);
            };
            spread(base_copies);
            spread(tracked);
        }

        std::vector<char> retired(sets.size(), 0);
        for (int i : chosen) retired[i] = 1;
        std::vector<std::vector<Vertex>> next_sets;
        std::vector<int> next_colors;
        for (std::size_t i = 0; i < sets.size(); ++i) {
            if (retired[i]) continue;
            for (const auto& copy : base_copies) {
                next_sets.push_back(image_of(sets[i], copy));
                next_colors.push_back(set_color[i]);
            }
        }
        sets = std::move(next_sets);
        set_color = std::move(next_colors);
    }

    AmplifierOutput out;
    out.result = std::move(cur);
    out.copies.reserve(tracked.size());
    for (auto& img : tracked) out.copies.push_back(Embedding{d, std::move(img)});
    out.set_images.resize(out.copies.size());
    for (std::size_t c = 0; c < out.copies.size(); ++c) {
        out.set_images[c].reserve(family.sets.size());
        for (const auto& set : family.sets)
            out.set_images[c].push_back(image_of(set, out.copies[c].image));
    }
    return out;
}

bool verify_amplifier_postcondition(const AmplifierOutput& out, int k, long long budget) {
    if (k < 1) throw InvalidParameterError("k must be at least 1");
    bool holds = true;
    std::vector<char> seen(k + 1, 0);
    enumerate_k_dicolorings(out.result, k, [&](const Dicoloring& coloring) {
        if (!holds) return;
        for (std::size_t c = 0; c < out.copies.size(); ++c) {
            bool copy_ok = true;
            for (const auto& img : out.set_images[c]) {
                std::fill(seen.begin(), seen.end(), 0);
                int distinct = 0;
                for (Vertex v : img)
                    if (!seen[coloring.color[v]]) {
                        seen[coloring.color[v]] = 1;
                        ++distinct;
                    }
                if (distinct > k - 1) {
                    copy_ok = false;
                    break;
                }
            }
            if (copy_ok) return;
        }
        holds = false;  // this coloring floods every copy
    }, budget);
    return holds;
}

Digraph build_hard_sequence(int t, int n, int size_cap, long long family_cap) {
    if (t < 3) throw InvalidParameterError("t must be at least 3");
    if (n < 1) throw InvalidParameterError("sequence index must be at least 1");
    if (family_cap < 1) throw InvalidParameterError("family cap must be positive");

    Digraph d(1, {});
    for (int step = 1; step < n; ++step) {
        const int chi = dichromatic_number(d).number;
        const auto joined = disjoint_union(std::vector<Digraph>(chi, d));
        if (joined.graph.vertex_count() > size_cap)
            throw SizeCapExceededError("disjoint union needs " +
                                       std::to_string(joined.graph.vertex_count()) +
                                       " vertices, cap is " + std::to_string(size_cap));

        const int part = d.vertex_count();
        long long family_size = 1;
        for (int i = 0; i < chi; ++i) {
            if (family_size > family_cap / part)
                throw SizeCapExceededError("transversal family of size " + std::to_string(part) +
                                           "^" + std::to_string(chi) + " exceeds cap " +
                                           std::to_string(family_cap));
            family_size *= part;
        }

        // every set with exactly one vertex from each copy, lexicographic
        std::vector<std::vector<Vertex>> sets;
        sets.reserve(static_cast<std::size_t>(family_size));
        std::vector<int> odometer(chi, 1);
        while (true) {
            std::vector<Vertex> set(chi);
            for (int i = 0; i < chi; ++i) set[i] = odometer[i] + joined.offsets[i];
            sets.push_back(std::move(set));
            int i = chi - 1;
            while (i >= 0 && odometer[i] == part) {
                odometer[i] = 1;
                --i;
            }
            if (i < 0) break;
            ++odometer[i];
        }

        IndependentSetFamily family(joined.graph, std::move(sets));
        d = amplify(joined.graph, family, t, size_cap).result;
    }
    return d;
}

}  // namespace tchordal
