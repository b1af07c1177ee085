#include "chigap/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace chigap {

namespace {

std::string pair_str(VertexId u, VertexId v) {
    return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

Graph::Graph(int n)
    : n_(n), words_((n + 63) / 64), bits_(static_cast<std::size_t>(n) * words_, 0) {}

void Graph::check_vertex(VertexId v) const {
    if (v < 0 || v >= n_)
        throw std::invalid_argument("vertex id " + std::to_string(v) +
                                    " out of range for n=" + std::to_string(n_));
}

void Graph::set_edge(VertexId u, VertexId v) {
    row_ptr(u)[v >> 6] |= std::uint64_t{1} << (v & 63);
    row_ptr(v)[u >> 6] |= std::uint64_t{1} << (u & 63);
}

void Graph::recount_edges() {
    long long total = 0;
    for (std::uint64_t w : bits_) total += std::popcount(w);
    edge_count_ = static_cast<int>(total / 2);
}

Graph Graph::from_edges(int n, std::span<const std::pair<VertexId, VertexId>> edges) {
    if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
    Graph g(n);
    for (auto [u, v] : edges) {
        if (u == v)
            throw std::invalid_argument("self-loop " + pair_str(u, v) + " is not allowed");
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge " + pair_str(u, v) +
                                        " out of range for n=" + std::to_string(n));
        g.set_edge(u, v);
    }
    g.recount_edges();
    return g;
}

Graph Graph::from_edges(int n, std::initializer_list<std::pair<VertexId, VertexId>> edges) {
    return from_edges(n, std::span<const std::pair<VertexId, VertexId>>(edges.begin(), edges.size()));
}

Graph Graph::from_adjacency_rows(int n, std::span<const std::uint64_t> rows) {
    if (n < 0 || n > 64)
        throw std::invalid_argument("from_adjacency_rows supports 0 <= n <= 64");
    if (static_cast<int>(rows.size()) != n)
        throw std::invalid_argument("from_adjacency_rows: need one row per vertex");
    const std::uint64_t valid = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    Graph g(n);
    long long total = 0;
    for (int v = 0; v < n; ++v) {
        if ((rows[v] & ~valid) != 0)
            throw std::invalid_argument("from_adjacency_rows: row " + std::to_string(v) +
                                        " has bits beyond n");
        if ((rows[v] >> v) & 1u)
            throw std::invalid_argument("self-loop " + pair_str(v, v) + " is not allowed");
        g.row_ptr(v)[0] = rows[v];
        total += std::popcount(rows[v]);
    }
    for (int v = 0; v < n; ++v) {
        std::uint64_t bits = rows[v];
        while (bits != 0) {
            int u = std::countr_zero(bits);
            bits &= bits - 1;
            if (((rows[u] >> v) & 1u) == 0)
                throw std::invalid_argument("from_adjacency_rows: asymmetric pair " +
                                            pair_str(u, v));
        }
    }
    g.edge_count_ = static_cast<int>(total / 2);
    return g;
}

int Graph::degree(VertexId v) const {
    check_vertex(v);
    const std::uint64_t* r = row_ptr(v);
    int d = 0;
    for (int w = 0; w < words_; ++w) d += std::popcount(r[w]);
    return d;
}

std::vector<VertexId> Graph::neighbors(VertexId v) const {
    std::vector<VertexId> out;
    out.reserve(8);
    for_each_neighbor(v, [&](VertexId u) { out.push_back(u); });
    return out;
}

std::vector<std::pair<VertexId, VertexId>> Graph::edges() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    out.reserve(edge_count_);
    for (VertexId u = 0; u < n_; ++u)
        for_each_neighbor(u, [&](VertexId v) {
            if (v > u) out.emplace_back(u, v);
        });
    return out;
}

bool Graph::is_connected() const {
    if (n_ < 1) throw std::invalid_argument("is_connected requires at least one vertex");
    std::vector<std::uint64_t> reached(words_, 0), frontier(words_, 0);
    reached[0] = frontier[0] = 1;
    int seen = 1;
    while (seen < n_) {
        std::vector<std::uint64_t> next(words_, 0);
        for (int w = 0; w < words_; ++w) {
            std::uint64_t bits = frontier[w];
            while (bits != 0) {
                int v = w * 64 + std::countr_zero(bits);
                bits &= bits - 1;
                const std::uint64_t* r = row_ptr(v);
                for (int x = 0; x < words_; ++x) next[x] |= r[x];
            }
        }
        bool grew = false;
        for (int w = 0; w < words_; ++w) {
            frontier[w] = next[w] & ~reached[w];
            if (frontier[w] != 0) {
                grew = true;
                seen += std::popcount(frontier[w]);
                reached[w] |= frontier[w];
            }
        }
        if (!grew) return false;
    }
    return true;
}

std::vector<VertexId> Graph::connected_ordering() const {
    if (!is_connected())
        throw std::invalid_argument("connected_ordering requires a connected graph");
    std::vector<VertexId> order;
    order.reserve(n_);
    std::vector<char> visited(n_, 0);
    order.push_back(0);
    visited[0] = 1;
    // BFS with the queue scanned in push order; neighbors arrive ascending.
    for (std::size_t head = 0; head < order.size(); ++head) {
        for_each_neighbor(order[head], [&](VertexId u) {
            if (!visited[u]) {
                visited[u] = 1;
                order.push_back(u);
            }
        });
    }
    return order;
}

Graph Graph::remove_vertex(VertexId v) const {
    check_vertex(v);
    if (n_ < 2) throw std::invalid_argument("cannot remove a vertex from a one-vertex graph");
    std::vector<VertexId> keep;
    keep.reserve(n_ - 1);
    for (VertexId u = 0; u < n_; ++u)
        if (u != v) keep.push_back(u);
    return induced_subgraph(keep);
}

Graph Graph::add_pendant(VertexId anchor) const {
    check_vertex(anchor);
    Graph g(n_ + 1);
    for (VertexId v = 0; v < n_; ++v)
        for_each_neighbor(v, [&](VertexId u) {
            if (u > v) g.set_edge(v, u);
        });
    g.set_edge(anchor, n_);
    g.edge_count_ = edge_count_ + 1;
    return g;
}

Graph Graph::induced_subgraph(std::span<const VertexId> keep) const {
    for (std::size_t i = 0; i < keep.size(); ++i) {
        check_vertex(keep[i]);
        if (i > 0 && keep[i] <= keep[i - 1])
            throw std::invalid_argument("induced_subgraph: ids must be strictly ascending");
    }
    std::vector<int> relabel(n_, -1);
    for (std::size_t i = 0; i < keep.size(); ++i) relabel[keep[i]] = static_cast<int>(i);
    Graph g(static_cast<int>(keep.size()));
    for (VertexId v : keep)
        for_each_neighbor(v, [&](VertexId u) {
            if (u > v && relabel[u] >= 0) g.set_edge(relabel[v], relabel[u]);
        });
    g.recount_edges();
    return g;
}

Graph Graph::permuted(std::span<const VertexId> perm) const {
    if (static_cast<int>(perm.size()) != n_)
        throw std::invalid_argument("permuted: permutation size must equal vertex count");
    std::vector<char> seen(n_, 0);
    for (VertexId p : perm) {
        if (p < 0 || p >= n_ || seen[p])
            throw std::invalid_argument("permuted: not a permutation of 0..n-1");
        seen[p] = 1;
    }
    Graph g(n_);
    for (VertexId v = 0; v < n_; ++v)
        for_each_neighbor(v, [&](VertexId u) {
            if (u > v) g.set_edge(perm[v], perm[u]);
        });
    g.edge_count_ = edge_count_;
    return g;
}

}  // namespace chigap
