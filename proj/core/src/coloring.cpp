#include "chigap/coloring.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace chigap {

namespace {

// BFS 2-coloring over every component; empty when an odd cycle shows up.
std::optional<std::vector<int>> bipartition(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> side(n, -1);
    std::vector<VertexId> queue;
    queue.reserve(n);
    for (VertexId start = 0; start < n; ++start) {
        if (side[start] >= 0) continue;
        side[start] = 0;
        queue.clear();
        queue.push_back(start);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            VertexId v = queue[head];
            bool odd = false;
            g.for_each_neighbor(v, [&](VertexId u) {
                if (side[u] < 0) {
                    side[u] = 1 - side[v];
                    queue.push_back(u);
                } else if (side[u] == side[v]) {
                    odd = true;
                }
            });
            if (odd) return std::nullopt;
        }
    }
    return side;
}

// Greedy clique grown from the max-degree vertex, candidates restricted to
// common neighbors, ties toward higher degree then lower id.
int greedy_clique_size(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return 0;
    auto pick = [&](const std::vector<std::uint64_t>& mask) -> VertexId {
        VertexId best = -1;
        int best_deg = -1;
        for (int w = 0; w < static_cast<int>(mask.size()); ++w) {
            std::uint64_t bits = mask[w];
            while (bits != 0) {
                VertexId v = w * 64 + std::countr_zero(bits);
                bits &= bits - 1;
                int d = g.degree(v);
                if (d > best_deg) {
                    best_deg = d;
                    best = v;
                }
            }
        }
        return best;
    };

    const int words = g.words_per_row();
    std::vector<std::uint64_t> candidates(words, 0);
    for (int w = 0; w < words; ++w) candidates[w] = ~std::uint64_t{0};
    if (n % 64 != 0) candidates[words - 1] = (std::uint64_t{1} << (n % 64)) - 1;

    int size = 0;
    while (true) {
        VertexId v = pick(candidates);
        if (v < 0) break;
        ++size;
        auto row = g.row(v);
        bool any = false;
        for (int w = 0; w < words; ++w) {
            candidates[w] &= row[w];
            any = any || candidates[w] != 0;
        }
        if (!any) break;
    }
    return size;
}

// Shared DSATUR state. counts[v*k + c] is the number of colored neighbors of
// v wearing c; sat[v] counts the distinct colors seen.
struct DsaturState {
    const Graph& g;
    int k;
    std::vector<int> colors;
    std::vector<int> counts;
    std::vector<int> sat;
    std::vector<int> degree;
    int colored = 0;
    int max_used = -1;

    DsaturState(const Graph& graph, int limit)
        : g(graph),
          k(limit),
          colors(graph.vertex_count(), -1),
          counts(static_cast<std::size_t>(graph.vertex_count()) * limit, 0),
          sat(graph.vertex_count(), 0),
          degree(graph.vertex_count(), 0) {
        for (VertexId v = 0; v < graph.vertex_count(); ++v) degree[v] = graph.degree(v);
    }

    VertexId select() const {
        VertexId best = -1;
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            if (colors[v] >= 0) continue;
            if (best < 0 || sat[v] > sat[best] ||
                (sat[v] == sat[best] && degree[v] > degree[best]))
                best = v;
        }
        return best;
    }

    bool feasible(VertexId v, int c) const {
        return counts[static_cast<std::size_t>(v) * k + c] == 0;
    }

    void assign(VertexId v, int c) {
        colors[v] = c;
        ++colored;
        g.for_each_neighbor(v, [&](VertexId u) {
            if (colors[u] >= 0) return;
            if (counts[static_cast<std::size_t>(u) * k + c]++ == 0) ++sat[u];
        });
    }

    void unassign(VertexId v, int c) {
        colors[v] = -1;
        --colored;
        g.for_each_neighbor(v, [&](VertexId u) {
            if (colors[u] >= 0) return;
            if (--counts[static_cast<std::size_t>(u) * k + c] == 0) --sat[u];
        });
    }
};

bool dsatur_search(DsaturState& s) {
    if (s.colored == s.g.vertex_count()) return true;
    VertexId v = s.select();
    // New colors enter in increasing order, killing color-permutation copies.
    int limit = std::min(s.max_used + 1, s.k - 1);
    for (int c = 0; c <= limit; ++c) {
        if (!s.feasible(v, c)) continue;
        int prev_max = s.max_used;
        s.max_used = std::max(s.max_used, c);
        s.assign(v, c);
        if (dsatur_search(s)) return true;
        s.unassign(v, c);
        s.max_used = prev_max;
    }
    return false;
}

// First-fit needs at most max-degree + 1 colors, which bounds the state.
int color_budget(const Graph& g) {
    int max_degree = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        max_degree = std::max(max_degree, g.degree(v));
    return max_degree + 1;
}

Coloring greedy_coloring(const Graph& g) {
    const int n = g.vertex_count();
    DsaturState s(g, color_budget(g));
    for (int step = 0; step < n; ++step) {
        VertexId v = s.select();
        int c = 0;
        while (!s.feasible(v, c)) ++c;
        s.max_used = std::max(s.max_used, c);
        s.assign(v, c);
    }
    return Coloring{std::move(s.colors), s.max_used + 1};
}

}  // namespace

bool verify_coloring(const Graph& g, const Coloring& c) {
    const int n = g.vertex_count();
    if (static_cast<int>(c.color.size()) != n)
        throw std::invalid_argument("verify_coloring: coloring covers " +
                                    std::to_string(c.color.size()) + " of " + std::to_string(n) +
                                    " vertices");
    for (VertexId v = 0; v < n; ++v)
        if (c.color[v] < 0)
            throw std::invalid_argument("verify_coloring: vertex " + std::to_string(v) +
                                        " has no color");
    for (VertexId v = 0; v < n; ++v) {
        bool clash = false;
        g.for_each_neighbor(v, [&](VertexId u) {
            if (u > v && c.color[u] == c.color[v]) clash = true;
        });
        if (clash) return false;
    }
    return true;
}

std::optional<Coloring> is_k_colorable(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("is_k_colorable requires k >= 1");
    if (g.vertex_count() == 0) return Coloring{{}, 0};
    // Anything beyond the first-fit budget always succeeds, so larger k
    // values only waste state.
    DsaturState s(g, std::min(k, color_budget(g)));
    if (!dsatur_search(s)) return std::nullopt;
    return Coloring{std::move(s.colors), s.max_used + 1};
}

ChromaticResult chromatic_number(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 1) throw std::invalid_argument("chromatic_number requires at least one vertex");
    if (g.edge_count() == 0) return {1, Coloring{std::vector<int>(n, 0), 1}};
    if (auto sides = bipartition(g)) return {2, Coloring{std::move(*sides), 2}};

    // Not bipartite, so chi >= 3; any clique is a lower bound as well.
    int lower = std::max(3, greedy_clique_size(g));
    Coloring upper = greedy_coloring(g);
    for (int k = lower; k < upper.num_colors; ++k) {
        if (auto witness = is_k_colorable(g, k)) return {k, std::move(*witness)};
    }
    return {upper.num_colors, std::move(upper)};
}

}  // namespace chigap
