#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sgt/graph.hpp"

namespace sgt {

enum class SearchStatus { found, absent, out_of_budget };

struct SearchLimits {
    long long node_budget = 100'000'000;
};

/// Outcome of a budgeted exhaustive search; out_of_budget is distinct from
/// absent so callers can tell "no" from "unknown".
template <typename Cert>
struct SearchResult {
    SearchStatus status = SearchStatus::absent;
    std::optional<Cert> certificate;

    bool found() const { return status == SearchStatus::found; }
    bool absent() const { return status == SearchStatus::absent; }
};

/// Witness that h is a minor of g: one branch set per h-vertex, pairwise
/// disjoint, each inducing a connected subgraph, with a g-edge between the
/// branch sets of every h-edge.
struct MinorModel {
    std::vector<VertexSet> branch_sets;
};

/// Witness that a subgraph of g is a subdivision of h: an injective branch
/// map plus one g-path per h-edge, internally disjoint from each other and
/// from every branch vertex.
struct SubdivisionEmbedding {
    std::vector<int> branch_map;  // h-vertex -> g-vertex
    struct Path {
        std::pair<int, int> h_edge;
        std::vector<int> vertices;  // endpoints included
    };
    std::vector<Path> paths;
};

bool verify_minor_model(const Graph& g, const Graph& h, const MinorModel& m,
                        std::string* why = nullptr);
bool verify_subdivision(const Graph& g, const Graph& h, const SubdivisionEmbedding& e,
                        std::string* why = nullptr);

/// Exhaustive (sound and complete within budget) minor test. Certificates
/// are re-verified before being returned.
SearchResult<MinorModel> contains_minor(const Graph& g, const Graph& h,
                                        const SearchLimits& limits = {});

/// Exhaustive topological-minor test: branch injection by descending
/// degree, then backtracking path routing per h-edge.
SearchResult<SubdivisionEmbedding> contains_subdivision(const Graph& g, const Graph& h,
                                                        const SearchLimits& limits = {});

/// Disjoint connected subgraphs T_i with V(T_i) intersecting the union of
/// `parts` exactly in parts[i]. Parts must be nonempty and disjoint.
SearchResult<std::vector<VertexSet>> disjoint_connected_subgraphs(
    const Graph& g, const std::vector<VertexSet>& parts, const SearchLimits& limits = {});

}  // namespace sgt
