#pragma once

#include <compare>
#include <string>
#include <vector>

#include "sgt/graph.hpp"

namespace sgt {

/// Canonical form of a graph: the graph6 encoding of a canonically
/// relabelled copy. Equal byte strings <=> isomorphic graphs.
struct CanonicalForm {
    std::string g6;
    auto operator<=>(const CanonicalForm&) const = default;
};

struct CanonOptions {
    int max_vertices = 64;
    long long node_budget = 2'000'000;
};

/// Relabelling old->new that minimizes the column-order upper-triangle
/// adjacency bit string, found by individualization-refinement with
/// automorphism pruning. Throws std::invalid_argument past the size bound
/// and BudgetError if the search tree exceeds the node budget.
std::vector<int> canonical_labeling(const Graph& g, const CanonOptions& opts = {});

CanonicalForm canonical_form(const Graph& g, const CanonOptions& opts = {});
Graph canonical_graph(const Graph& g, const CanonOptions& opts = {});
bool is_isomorphic(const Graph& a, const Graph& b, const CanonOptions& opts = {});

}  // namespace sgt
