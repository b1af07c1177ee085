#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace chigap {

using VertexId = int;

/// Immutable simple undirected graph on vertex ids 0..n-1.
///
/// Adjacency is one bitset row per vertex: a single 64-bit word for n <= 64,
/// ceil(n/64) words above that. Construction goes through the static
/// factories; every derived graph (vertex removal, pendant addition, induced
/// subgraph) is a fresh value, so instances can be shared freely across
/// threads.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from an edge list. Duplicate edges collapse silently;
    /// self-loops and out-of-range endpoints throw std::invalid_argument
    /// naming the offending pair.
    static Graph from_edges(int n, std::span<const std::pair<VertexId, VertexId>> edges);
    static Graph from_edges(int n, std::initializer_list<std::pair<VertexId, VertexId>> edges);

    /// Builds a graph from per-vertex adjacency bitmasks (n <= 64 only,
    /// rows.size() == n, bit u of rows[v] set iff {u,v} is an edge). The
    /// rows must be symmetric with an empty diagonal.
    static Graph from_adjacency_rows(int n, std::span<const std::uint64_t> rows);

    int vertex_count() const { return n_; }
    int edge_count() const { return edge_count_; }
    int words_per_row() const { return words_; }

    bool has_edge(VertexId u, VertexId v) const {
        check_vertex(u);
        check_vertex(v);
        return (row_ptr(v)[u >> 6] >> (u & 63)) & 1u;
    }

    int degree(VertexId v) const;

    /// Neighbor ids of v in ascending order.
    std::vector<VertexId> neighbors(VertexId v) const;

    /// All edges as (u, v) pairs with u < v, lexicographically sorted.
    std::vector<std::pair<VertexId, VertexId>> edges() const;

    /// Adjacency bit row of v, words_per_row() words long.
    std::span<const std::uint64_t> row(VertexId v) const {
        check_vertex(v);
        return {row_ptr(v), static_cast<std::size_t>(words_)};
    }

    /// Calls f(u) for every neighbor u of v in ascending order.
    template <class F>
    void for_each_neighbor(VertexId v, F&& f) const {
        check_vertex(v);
        const std::uint64_t* r = row_ptr(v);
        for (int w = 0; w < words_; ++w) {
            std::uint64_t bits = r[w];
            while (bits != 0) {
                f(static_cast<VertexId>(w * 64 + std::countr_zero(bits)));
                bits &= bits - 1;
            }
        }
    }

    /// True iff every vertex is reachable from vertex 0. Requires n >= 1.
    bool is_connected() const;

    /// Vertex order v_1..v_n whose every prefix induces a connected
    /// subgraph: BFS from vertex 0, neighbors in ascending id. Requires a
    /// connected graph.
    std::vector<VertexId> connected_ordering() const;

    /// Graph on n-1 vertices with v and its incident edges removed;
    /// remaining ids compact to 0..n-2 preserving relative order. Requires
    /// n >= 2.
    Graph remove_vertex(VertexId v) const;

    /// Graph on n+1 vertices where the new vertex n is adjacent to `anchor`
    /// only.
    Graph add_pendant(VertexId anchor) const;

    /// Induced subgraph on `keep` (strictly ascending vertex ids), relabeled
    /// to 0..keep.size()-1 in that order.
    Graph induced_subgraph(std::span<const VertexId> keep) const;

    /// Relabeled copy: vertex v becomes perm[v]. perm must be a permutation
    /// of 0..n-1.
    Graph permuted(std::span<const VertexId> perm) const;

    /// Equality of labeled adjacency structure.
    bool operator==(const Graph&) const = default;

private:
    explicit Graph(int n);
    void set_edge(VertexId u, VertexId v);
    void recount_edges();
    void check_vertex(VertexId v) const;

    const std::uint64_t* row_ptr(VertexId v) const {
        return bits_.data() + static_cast<std::size_t>(v) * words_;
    }
    std::uint64_t* row_ptr(VertexId v) {
        return bits_.data() + static_cast<std::size_t>(v) * words_;
    }

    int n_ = 0;
    int words_ = 0;
    int edge_count_ = 0;
    std::vector<std::uint64_t> bits_;
};

}  // namespace chigap
