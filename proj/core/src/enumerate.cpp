#include "chigap/enumerate.hpp"

#include "chigap/io.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

namespace chigap {

namespace {

constexpr int kMaxLabeled = 7;
constexpr int kMaxUnlabeled = 8;
constexpr int kMaxMaskVertices = 11;  // 11*10/2 = 55 slots fit one word

void decode_rows(int n, std::uint64_t mask, std::uint64_t* rows) {
    for (int v = 0; v < n; ++v) rows[v] = 0;
    while (mask != 0) {
        int slot = std::countr_zero(mask);
        mask &= mask - 1;
        // slot = v(v-1)/2 + u with u < v
        int v = 1;
        while ((v + 1) * v / 2 <= slot) ++v;
        int u = slot - v * (v - 1) / 2;
        rows[u] |= std::uint64_t{1} << v;
        rows[v] |= std::uint64_t{1} << u;
    }
}

bool connected_rows(int n, const std::uint64_t* rows) {
    std::uint64_t reached = 1, frontier = 1;
    const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    while (frontier != 0) {
        std::uint64_t next = 0;
        std::uint64_t bits = frontier;
        while (bits != 0) {
            next |= rows[std::countr_zero(bits)];
            bits &= bits - 1;
        }
        frontier = next & ~reached;
        reached |= frontier;
    }
    return reached == all;
}

// Bit string keys: slot i of the column-order adjacency string sits at key
// bit 63-i, so integer order equals lexicographic string order.
std::uint64_t key_of_mask(std::uint64_t mask) {
    std::uint64_t key = 0;
    while (mask != 0) {
        int slot = std::countr_zero(mask);
        mask &= mask - 1;
        key |= std::uint64_t{1} << (63 - slot);
    }
    return key;
}

// Branch-and-bound over vertex placements. inv[j] is the original vertex
// put at new position j; placing position j appends the j bits for slots
// (0,j)..(j-1,j). Prefix comparisons against `best` prune the search.
struct CanonicalSearch {
    int n = 0;
    const std::uint64_t* rows = nullptr;
    std::uint64_t best = ~std::uint64_t{0};
    bool early_exit = false;
    bool found_smaller = false;
    int inv[kMaxMaskVertices + 1] = {};
    int best_inv[kMaxMaskVertices + 1] = {};
    std::uint64_t used = 0;

    void dfs(int j, std::uint64_t partial, int covered) {
        if (j == n) {
            if (partial < best) {
                best = partial;
                std::copy(inv, inv + n, best_inv);
                if (early_exit) found_smaller = true;
            }
            return;
        }
        for (int w = 0; w < n; ++w) {
            if ((used >> w) & 1) continue;
            std::uint64_t add = 0;
            for (int u = 0; u < j; ++u) add = (add << 1) | ((rows[w] >> inv[u]) & 1);
            std::uint64_t next = partial;
            if (j > 0) next |= add << (64 - covered - j);
            const int covered2 = covered + j;
            const std::uint64_t prefix =
                covered2 == 0 ? 0 : ~std::uint64_t{0} << (64 - covered2);
            const std::uint64_t rhs = best & prefix;
            if (next > rhs) continue;
            if (early_exit && next < rhs) {
                found_smaller = true;
                return;
            }
            inv[j] = w;
            used |= std::uint64_t{1} << w;
            dfs(j + 1, next, covered2);
            used &= ~(std::uint64_t{1} << w);
            if (found_smaller) return;
        }
    }
};

bool is_canonical(int n, const std::uint64_t* rows, std::uint64_t key) {
    CanonicalSearch search;
    search.n = n;
    search.rows = rows;
    search.best = key;
    search.early_exit = true;
    search.dfs(0, 0, 0);
    return !search.found_smaller;
}

struct ChunkResult {
    std::uint64_t connected = 0;
    std::uint64_t extremal = 0;
    std::vector<std::string> counterexamples;
};

void sweep_range(int n, EnumMode mode, std::uint64_t begin, std::uint64_t end,
                 ChunkResult& out) {
    std::uint64_t rows[kMaxMaskVertices];
    for (std::uint64_t mask = begin; mask < end; ++mask) {
        decode_rows(n, mask, rows);
        if (!connected_rows(n, rows)) continue;
        if (mode == EnumMode::unlabeled && !is_canonical(n, rows, key_of_mask(mask)))
            continue;
        Graph g = Graph::from_adjacency_rows(n, {rows, static_cast<std::size_t>(n)});
        ++out.connected;
        GapReport r = gap(g);
        const bool extremal = r.gap == 0;
        if (extremal) ++out.extremal;
        const bool structural = classify(g).kind != ExtremalKind::neither;
        if (extremal != structural || r.gap < 0) out.counterexamples.push_back(to_graph6(g));
    }
}

EnumerationSummary sweep_one(int n, EnumMode mode, int jobs) {
    EnumerationSummary summary;
    summary.n = n;
    summary.mode = mode;
    const int slots = edge_slot_count(n);
    const std::uint64_t total = std::uint64_t{1} << slots;

    constexpr std::uint64_t kChunk = std::uint64_t{1} << 14;
    const std::uint64_t chunks = (total + kChunk - 1) / kChunk;

    std::vector<ChunkResult> results(chunks);
    if (jobs <= 1 || chunks == 1) {
        for (std::uint64_t c = 0; c < chunks; ++c)
            sweep_range(n, mode, c * kChunk, std::min(total, (c + 1) * kChunk), results[c]);
    } else {
        std::atomic<std::uint64_t> cursor{0};
        auto worker = [&] {
            for (;;) {
                std::uint64_t c = cursor.fetch_add(1);
                if (c >= chunks) return;
                sweep_range(n, mode, c * kChunk, std::min(total, (c + 1) * kChunk), results[c]);
            }
        };
        std::vector<std::thread> pool;
        const int count = static_cast<int>(std::min<std::uint64_t>(jobs, chunks));
        pool.reserve(count);
        for (int t = 0; t < count; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    for (const auto& r : results) {
        summary.connected_count += r.connected;
        summary.extremal_count += r.extremal;
        summary.counterexamples.insert(summary.counterexamples.end(),
                                       r.counterexamples.begin(), r.counterexamples.end());
    }
    return summary;
}

void check_mode_range(int n, EnumMode mode) {
    const int cap = mode == EnumMode::labeled ? kMaxLabeled : kMaxUnlabeled;
    if (n < 1 || n > cap)
        throw std::invalid_argument("vertex count " + std::to_string(n) + " outside 1.." +
                                    std::to_string(cap) + " for " + to_string(mode) +
                                    " enumeration");
}

}  // namespace

const char* to_string(EnumMode mode) {
    return mode == EnumMode::labeled ? "labeled" : "unlabeled";
}

int edge_slot_count(int n) {
    if (n < 0 || n > kMaxMaskVertices)
        throw std::invalid_argument("edge masks support 0 <= n <= " +
                                    std::to_string(kMaxMaskVertices));
    return n * (n - 1) / 2;
}

Graph graph_from_edge_mask(int n, std::uint64_t mask) {
    const int slots = edge_slot_count(n);
    if (slots < 64 && (mask >> slots) != 0)
        throw std::invalid_argument("edge mask has bits beyond slot count");
    std::uint64_t rows[kMaxMaskVertices] = {};
    decode_rows(n, mask, rows);
    return Graph::from_adjacency_rows(n, {rows, static_cast<std::size_t>(n)});
}

std::uint64_t edge_mask_of(const Graph& g) {
    edge_slot_count(g.vertex_count());  // range check
    std::uint64_t mask = 0;
    for (auto [u, v] : g.edges()) mask |= std::uint64_t{1} << (v * (v - 1) / 2 + u);
    return mask;
}

Graph canonical_form(const Graph& g) {
    const int n = g.vertex_count();
    if (n > kMaxMaskVertices)
        throw std::invalid_argument("canonical_form supports n <= " +
                                    std::to_string(kMaxMaskVertices));
    if (n <= 1) return g;
    std::uint64_t rows[kMaxMaskVertices];
    for (VertexId v = 0; v < n; ++v) rows[v] = g.row(v)[0];
    CanonicalSearch search;
    search.n = n;
    search.rows = rows;
    search.dfs(0, 0, 0);
    // best_inv maps new position -> original vertex; permuted wants old -> new.
    std::vector<VertexId> perm(n);
    for (int j = 0; j < n; ++j) perm[search.best_inv[j]] = j;
    return g.permuted(perm);
}

void enumerate_connected(int n, EnumMode mode,
                         const std::function<void(const Graph&)>& visit) {
    check_mode_range(n, mode);
    const int slots = edge_slot_count(n);
    const std::uint64_t total = std::uint64_t{1} << slots;
    std::uint64_t rows[kMaxMaskVertices];
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        decode_rows(n, mask, rows);
        if (!connected_rows(n, rows)) continue;
        if (mode == EnumMode::unlabeled && !is_canonical(n, rows, key_of_mask(mask)))
            continue;
        visit(Graph::from_adjacency_rows(n, {rows, static_cast<std::size_t>(n)}));
    }
}

std::vector<EnumerationSummary> check_theorem(int n_max, EnumMode mode, int jobs) {
    check_mode_range(n_max, mode);
    if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
    if (jobs < 1) jobs = 1;
    std::vector<EnumerationSummary> out;
    out.reserve(n_max);
    for (int n = 1; n <= n_max; ++n) out.push_back(sweep_one(n, mode, jobs));
    return out;
}

std::string format_summary_table(const std::vector<EnumerationSummary>& rows) {
    std::string out = "n\tmode\tconnected\textremal\tcounterexamples\n";
    for (const auto& row : rows) {
        out += std::to_string(row.n);
        out += '\t';
        out += to_string(row.mode);
        out += '\t';
        out += std::to_string(row.connected_count);
        out += '\t';
        out += std::to_string(row.extremal_count);
        out += '\t';
        out += std::to_string(row.counterexamples.size());
        out += '\n';
    }
    return out;
}

bool lemma_big_check(const Graph& g) {
    if (g.vertex_count() < 2)
        throw std::invalid_argument("lemma_big_check requires at least two vertices");
    if (gap(g).gap != 0)
        throw std::invalid_argument("lemma_big_check requires an extremal graph");
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        Graph rest = g.remove_vertex(v);
        if (!rest.is_connected()) continue;
        const int d = g.degree(v);
        if (d == 1) continue;
        const int chi_rest = chromatic_number(rest).chi;
        if (d != chi_rest) return false;
        if (chi_rest <= 2 && classify(g).kind == ExtremalKind::neither) return false;
    }
    return true;
}

bool pendant_closure_check(const Graph& g, int trials, std::uint64_t seed) {
    Classification base = classify(g);
    if (base.kind == ExtremalKind::neither)
        throw std::invalid_argument("pendant_closure_check requires a type A or B graph");
    SplitMix64 rng(seed);
    for (int t = 0; t < trials; ++t) {
        VertexId anchor =
            static_cast<VertexId>(rng.next_below(static_cast<std::uint64_t>(g.vertex_count())));
        Classification grown = classify(g.add_pendant(anchor));
        if (grown.kind != base.kind || grown.core_order != base.core_order) return false;
    }
    return true;
}

Graph random_decorated(CoreKind kind, int core_size, int max_vertices, SplitMix64& rng) {
    int budget = std::max(0, max_vertices - core_size);
    std::vector<TreeAttachment> attachments;
    const int tree_count = static_cast<int>(rng.next_below(6));
    for (int t = 0; t < tree_count && budget > 0; ++t) {
        const int size = 1 + static_cast<int>(rng.next_below(
                                 static_cast<std::uint64_t>(std::min(budget, 6))));
        TreeAttachment att;
        att.anchor = static_cast<VertexId>(rng.next_below(static_cast<std::uint64_t>(core_size)));
        att.parents.assign(size, -1);
        for (int i = 1; i < size; ++i)
            att.parents[i] = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(i)));
        attachments.push_back(std::move(att));
        budget -= size;
    }
    return build_decorated(kind, core_size, attachments);
}

bool decorated_chi_check(int trials, std::uint64_t seed, const DecoratedBounds& bounds) {
    SplitMix64 rng(seed);
    auto run_class = [&](CoreKind kind, int lo, int hi, int step, auto expected) {
        SplitMix64 class_rng = rng.split();
        for (int t = 0; t < trials; ++t) {
            const int span = (hi - lo) / step + 1;
            const int size = lo + step * static_cast<int>(class_rng.next_below(span));
            Graph g = random_decorated(kind, size, bounds.max_vertices, class_rng);
            if (chromatic_number(g).chi != expected(size)) return false;
        }
        return true;
    };
    return run_class(CoreKind::complete, bounds.complete_min, bounds.complete_max, 1,
                     [](int m) { return m; }) &&
           run_class(CoreKind::cycle, bounds.odd_cycle_min, bounds.odd_cycle_max, 2,
                     [](int) { return 3; }) &&
           run_class(CoreKind::cycle, bounds.even_cycle_min, bounds.even_cycle_max, 2,
                     [](int) { return 2; });
}

Graph random_graph(int n, SplitMix64& rng) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId v = 1; v < n; ++v)
        for (VertexId u = 0; u < v; ++u)
            if (rng.next() & 1) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

Graph random_connected_graph(int n, SplitMix64& rng) {
    if (n < 1) throw std::invalid_argument("random_connected_graph requires n >= 1");
    for (;;) {
        Graph g = random_graph(n, rng);
        if (g.is_connected()) return g;
    }
}

}  // namespace chigap
