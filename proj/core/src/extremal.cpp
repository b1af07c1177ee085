#include "chigap/extremal.hpp"

#include <algorithm>
#include <stdexcept>

namespace chigap {

GapReport gap(const Graph& g) {
    if (!g.is_connected())
        throw std::invalid_argument("gap is defined for connected graphs only");
    GapReport r;
    r.n_vertices = g.vertex_count();
    r.n_edges = g.edge_count();
    r.chi = chromatic_number(g).chi;
    r.gap = r.n_edges - (r.chi * (r.chi - 1) / 2 + r.n_vertices - r.chi);
    return r;
}

CoreResult strip_to_core(const Graph& g) {
    if (!g.is_connected())
        throw std::invalid_argument("strip_to_core requires a connected graph");
    const int n = g.vertex_count();
    std::vector<char> alive(n, 1);
    std::vector<int> deg(n, 0);
    for (VertexId v = 0; v < n; ++v) deg[v] = g.degree(v);
    int remaining = n;
    while (remaining > 1) {
        VertexId leaf = -1;
        for (VertexId v = 0; v < n && leaf < 0; ++v)
            if (alive[v] && deg[v] == 1) leaf = v;
        if (leaf < 0) break;
        alive[leaf] = 0;
        --remaining;
        g.for_each_neighbor(leaf, [&](VertexId u) {
            if (alive[u]) --deg[u];
        });
    }
    std::vector<VertexId> survivors;
    survivors.reserve(remaining);
    for (VertexId v = 0; v < n; ++v)
        if (alive[v]) survivors.push_back(v);
    return CoreResult{g.induced_subgraph(survivors), std::move(survivors)};
}

namespace {

bool is_complete(const Graph& g) {
    const int n = g.vertex_count();
    return g.edge_count() == n * (n - 1) / 2;
}

// Connected + 2-regular means a single cycle.
bool is_cycle(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 3 || g.edge_count() != n) return false;
    for (VertexId v = 0; v < n; ++v)
        if (g.degree(v) != 2) return false;
    return true;
}

}  // namespace

Classification classify(const Graph& g) {
    CoreResult core = strip_to_core(g);
    const int k = core.core.vertex_count();
    Classification out;
    out.core_vertices = std::move(core.vertices);
    if (k == 1) {
        out.kind = ExtremalKind::type_a;
        out.core_order = 1;
        return out;
    }
    // K_3 = C_3 lands here first and reports type A.
    if (k >= 3 && is_complete(core.core)) {
        out.kind = ExtremalKind::type_a;
        out.core_order = k;
        return out;
    }
    if (k >= 5 && k % 2 == 1 && is_cycle(core.core)) {
        out.kind = ExtremalKind::type_b;
        out.core_order = k;
        return out;
    }
    out.kind = ExtremalKind::neither;
    out.core_order = 0;
    return out;
}

const char* to_string(ExtremalKind kind) {
    switch (kind) {
        case ExtremalKind::type_a: return "TypeA";
        case ExtremalKind::type_b: return "TypeB";
        case ExtremalKind::neither: return "Neither";
    }
    return "Neither";
}

Graph build_decorated(CoreKind kind, int core_size,
                      std::span<const TreeAttachment> attachments) {
    if (kind == CoreKind::complete && core_size < 1)
        throw std::invalid_argument("complete core needs at least one vertex");
    if (kind == CoreKind::cycle && core_size < 3)
        throw std::invalid_argument("cycle core needs length at least 3");

    int total = core_size;
    for (const auto& att : attachments) {
        if (att.anchor < 0 || att.anchor >= core_size)
            throw std::invalid_argument("attachment anchor " + std::to_string(att.anchor) +
                                        " outside the core");
        if (att.parents.empty())
            throw std::invalid_argument("attachment tree must have at least one vertex");
        if (att.parents[0] != -1)
            throw std::invalid_argument("attachment tree root must have parent -1");
        for (std::size_t i = 1; i < att.parents.size(); ++i)
            if (att.parents[i] < 0 || att.parents[i] >= static_cast<int>(i))
                throw std::invalid_argument("attachment tree parent of node " + std::to_string(i) +
                                            " must lie in 0.." + std::to_string(i - 1));
        total += static_cast<int>(att.parents.size());
    }

    std::vector<std::pair<VertexId, VertexId>> edges;
    if (kind == CoreKind::complete) {
        for (VertexId u = 0; u < core_size; ++u)
            for (VertexId v = u + 1; v < core_size; ++v) edges.emplace_back(u, v);
    } else {
        for (VertexId v = 0; v < core_size; ++v) edges.emplace_back(v, (v + 1) % core_size);
    }

    int base = core_size;
    for (const auto& att : attachments) {
        edges.emplace_back(att.anchor, base);
        for (std::size_t i = 1; i < att.parents.size(); ++i)
            edges.emplace_back(base + att.parents[i], base + static_cast<int>(i));
        base += static_cast<int>(att.parents.size());
    }
    return Graph::from_edges(total, edges);
}

}  // namespace chigap
