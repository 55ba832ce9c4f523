#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tchordal/digraph.hpp"

namespace tchordal {

// Vertex coloring whose classes each induce an acyclic subdigraph.
struct Dicoloring {
    int k = 0;
    std::vector<int> color;  // 1-indexed; color[0] unused

    std::string render() const;  // "k=<k>; <v>:<color> ..." ascending vertex order
};

struct DicoloringCheck {
    bool ok = false;
    std::vector<Vertex> bad_cycle;  // monochromatic directed cycle, empty when ok
};

DicoloringCheck verify_dicoloring(const Digraph& d, const Dicoloring& coloring);

// Backtracking over vertices in descending underlying-degree order with
// per-class incremental acyclicity. Vertex 1 is pinned to color 1 and a new
// color may only be opened as the lowest unused index. Deterministic.
std::optional<Dicoloring> is_k_dicolorable(const Digraph& d, int k);

struct DichromaticResult {
    int number = 0;
    Dicoloring witness;
};

// Least k admitting a k-dicoloring; solved per strongly connected component
// and combined by maximum.
DichromaticResult dichromatic_number(const Digraph& d);

// Visits every valid labeled k-dicoloring exactly once (no symmetry
// breaking). Requires k^|V| <= budget, else throws BudgetExceededError.
// Returns the number of colorings visited.
long long enumerate_k_dicolorings(const Digraph& d, int k,
                                  const std::function<void(const Dicoloring&)>& visit,
                                  long long budget);

}  // namespace tchordal
