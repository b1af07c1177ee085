#pragma once

#include "chigap/extremal.hpp"
#include "chigap/graph.hpp"
#include "chigap/random.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace chigap {

enum class EnumMode { labeled, unlabeled };

const char* to_string(EnumMode mode);

/// Result of sweeping the gap/classification equivalence over all connected
/// graphs on n vertices. counterexamples holds graph6 strings and stays
/// empty as long as the equivalence holds.
struct EnumerationSummary {
    int n = 0;
    EnumMode mode = EnumMode::labeled;
    std::uint64_t connected_count = 0;
    std::uint64_t extremal_count = 0;
    std::vector<std::string> counterexamples;

    bool operator==(const EnumerationSummary&) const = default;
};

/// Edge slots of K_n: slot (u,v) with u < v has index v(v-1)/2 + u, the
/// graph6 bit order. Masks fit a word for n <= 11.
int edge_slot_count(int n);
Graph graph_from_edge_mask(int n, std::uint64_t mask);
std::uint64_t edge_mask_of(const Graph& g);

/// Lexicographically smallest relabeling of the adjacency bit string,
/// found by branch-and-bound over vertex placements (n <= 11).
Graph canonical_form(const Graph& g);

/// Visits connected graphs on n vertices in mask order. Labeled mode walks
/// all 2^(n(n-1)/2) edge subsets of K_n (n <= 7); unlabeled mode keeps only
/// graphs equal to their own canonical form (n <= 8).
void enumerate_connected(int n, EnumMode mode,
                         const std::function<void(const Graph&)>& visit);

/// Sweeps every n <= n_max: records a counterexample whenever gap = 0 and
/// the type A/B classification disagree (or a gap ever goes negative).
/// `jobs` worker threads partition the mask range into contiguous chunks;
/// partial results merge in chunk order, so output is independent of
/// scheduling. jobs = 0 means hardware concurrency.
std::vector<EnumerationSummary> check_theorem(int n_max, EnumMode mode, int jobs = 1);

/// Renders summaries as the tab-separated table the CLI prints.
std::string format_summary_table(const std::vector<EnumerationSummary>& rows);

/// For an extremal graph (gap = 0, n >= 2): every vertex whose removal
/// keeps the graph connected has degree 1 or degree chi(g - v); in the
/// latter case with chi(g - v) <= 2 the graph itself classifies as type A
/// or B. Non-extremal input throws.
bool lemma_big_check(const Graph& g);

/// Attaches `trials` seeded random pendants to a type A/B graph and demands
/// the classification kind and core order survive each time. Input that
/// classifies as neither throws.
bool pendant_closure_check(const Graph& g, int trials, std::uint64_t seed);

struct DecoratedBounds {
    int complete_min = 2, complete_max = 6;
    int odd_cycle_min = 5, odd_cycle_max = 11;
    int even_cycle_min = 4, even_cycle_max = 10;
    int max_vertices = 20;
};

/// Samples `trials` random decorated graphs per core class and checks
/// chi = m for complete cores, 3 for odd cycles, 2 for even cycles.
bool decorated_chi_check(int trials, std::uint64_t seed,
                         const DecoratedBounds& bounds = {});

/// Random decorated graph: the core plus random trees up to max_vertices
/// total vertices.
Graph random_decorated(CoreKind kind, int core_size, int max_vertices, SplitMix64& rng);

/// Erdos-Renyi G(n, 1/2) by one coin per edge slot.
Graph random_graph(int n, SplitMix64& rng);

/// Rejection-sampled connected G(n, 1/2).
Graph random_connected_graph(int n, SplitMix64& rng);

}  // namespace chigap
