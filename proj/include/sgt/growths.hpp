#pragma once

#include <optional>
#include <vector>

#include "sgt/graph.hpp"

namespace sgt {

enum class GrowthKind { first, second };

/// One k-growth step. First kind: each pair is a nonadjacent twin pair
/// (u kept, v deleted). Second kind: each pair is an edge with both ends
/// of degree at most `degree_cap`, contracted as a matching.
struct GrowthStep {
    GrowthKind kind = GrowthKind::first;
    std::vector<std::pair<int, int>> pairs;  // (u_i, v_i)
    int degree_cap = 0;                      // second kind only

    int k() const { return static_cast<int>(pairs.size()); }
};

/// Greedy reduction step among vertices of degree <= d: twin pairs take
/// priority over the matching among the rest; the larger-k step wins,
/// first kind on ties. Absent when no vertex qualifies.
std::optional<GrowthStep> find_reduction(const Graph& g, int d);

/// Applies a validated step; |V(result)| = |V(g)| - k. Throws
/// std::invalid_argument naming the failed condition.
Graph apply_reduction(const Graph& g, const GrowthStep& step);

struct Expansion {
    Graph graph;
    GrowthStep step;  // indices in the expanded graph; applying it undoes the growth
};

struct GrowthLimits {
    long long node_budget = 50'000'000;
};

/// Every labelled k-growth of j (both kinds), with its generating step.
std::vector<Expansion> enumerate_expansions_detailed(const Graph& j, int k, int d,
                                                     const GrowthLimits& limits = {});

/// Unlabelled k-growths of j, deduplicated by canonical form and sorted by
/// it. k = 0 yields {j}.
std::vector<Graph> enumerate_expansions(const Graph& j, int k, int d,
                                        const GrowthLimits& limits = {});

}  // namespace sgt
