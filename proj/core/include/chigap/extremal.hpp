#pragma once

#include "chigap/coloring.hpp"
#include "chigap/graph.hpp"

#include <span>
#include <string>
#include <vector>

namespace chigap {

/// For a connected graph, gap = |E| - (chi(chi-1)/2 + |V| - chi), computed
/// in exact integer arithmetic. The gap is nonnegative on connected graphs
/// and zero exactly on the extremal ones.
struct GapReport {
    int n_vertices = 0;
    int n_edges = 0;
    int chi = 0;
    int gap = 0;
};

/// Requires a connected graph; throws std::invalid_argument otherwise.
GapReport gap(const Graph& g);

enum class ExtremalKind { type_a, type_b, neither };

/// type_a: complete core K_m (m = core_order, trees attached).
/// type_b: odd cycle core of length core_order >= 5, trees attached.
/// A triangle core counts as K_3, so core_order is 0 only for `neither`.
struct Classification {
    ExtremalKind kind = ExtremalKind::neither;
    int core_order = 0;
    std::vector<VertexId> core_vertices;
};

const char* to_string(ExtremalKind kind);

struct CoreResult {
    Graph core;
    std::vector<VertexId> vertices;  // surviving ids of the input graph, ascending
};

/// Repeatedly deletes the lowest-id degree-1 vertex until none is left. A
/// tree collapses all the way to a single vertex; anything else stops at its
/// 2-core. Requires a connected graph.
CoreResult strip_to_core(const Graph& g);

/// Structural recognizer: strips to the core, then tests completeness and
/// the odd-cycle predicate. Purely structural, no chromatic numbers
/// involved. Requires a connected graph.
Classification classify(const Graph& g);

enum class CoreKind { complete, cycle };

/// Rooted tree in parent-array form: parents[0] == -1 marks the root,
/// parents[i] < i otherwise. The root is joined to core vertex `anchor` by a
/// single edge.
struct TreeAttachment {
    VertexId anchor = 0;
    std::vector<int> parents;
};

/// Core (K_m on 0..m-1, or the cycle 0-1-..-len-1-0) with the given trees
/// attached; a tree of t vertices contributes exactly t edges. Multiple
/// trees may share an anchor.
Graph build_decorated(CoreKind kind, int core_size,
                      std::span<const TreeAttachment> attachments);

}  // namespace chigap
