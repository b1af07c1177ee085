#pragma once

#include "chigap/graph.hpp"

#include <optional>
#include <vector>

namespace chigap {

/// Proper vertex coloring witness: color[v] in 0..num_colors-1 for every
/// vertex, and every color class nonempty.
struct Coloring {
    std::vector<int> color;
    int num_colors = 0;
};

/// True iff c is proper on g (no monochromatic edge). A coloring that does
/// not assign every vertex a color throws std::invalid_argument rather than
/// returning false.
bool verify_coloring(const Graph& g, const Coloring& c);

/// Searches for a proper coloring with at most k colors (k >= 1) by
/// DSATUR-ordered branch and bound; ties break toward higher degree, then
/// lower id, and new colors enter in increasing order. The witness, when
/// found, uses colors 0..j-1 for some j <= k.
std::optional<Coloring> is_k_colorable(const Graph& g, int k);

struct ChromaticResult {
    int chi = 0;
    Coloring witness;
};

/// Exact chromatic number with a verifiable witness. Fast paths: chi = 1 for
/// edgeless graphs, chi = 2 for bipartite ones (BFS 2-coloring); otherwise
/// branch and bound between a greedy clique lower bound and a greedy
/// coloring upper bound. Works on disconnected graphs too.
ChromaticResult chromatic_number(const Graph& g);

}  // namespace chigap
