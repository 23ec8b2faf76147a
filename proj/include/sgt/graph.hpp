#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace sgt {

// Sorted, duplicate-free list of vertex indices.
using VertexSet = std::vector<int>;

VertexSet sorted_unique(VertexSet v);

/// Immutable simple undirected graph on vertices 0..n-1.
/// Neighbor lists are kept sorted; no loops, no parallel edges.
class Graph {
public:
    Graph() = default;

    // Throws std::invalid_argument on loops or out-of-range endpoints.
    // Duplicate edges are merged.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const;
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool has_edge(int u, int v) const;
    int min_degree() const;
    int max_degree() const;
    bool is_regular(int d) const;

    std::vector<std::pair<int, int>> edges() const;  // u < v, lexicographic

    // Neighborhood bitmasks; only valid while vertex_count() <= 64.
    std::vector<std::uint64_t> adjacency_masks() const;

    /// Subgraph induced on `keep` (need not be sorted); vertices are
    /// re-indexed densely in increasing old-index order. If `old_to_new`
    /// is given it receives the map (-1 for dropped vertices).
    Graph induced(const VertexSet& keep, std::vector<int>* old_to_new = nullptr) const;
    Graph delete_vertex(int v, std::vector<int>* old_to_new = nullptr) const;
    Graph delete_vertices(const VertexSet& drop, std::vector<int>* old_to_new = nullptr) const;

    Graph relabel(const std::vector<int>& old_to_new) const;  // bijection

    bool is_connected() const;
    int component_count() const;
    // Component labels of the subgraph induced on `allowed`; vertices
    // outside `allowed` get label -1. Returns the number of components.
    int components_within(const std::vector<char>& allowed, std::vector<int>* label) const;

    bool operator==(const Graph& other) const { return adj_ == other.adj_; }

private:
    std::vector<std::vector<int>> adj_;
};

/// Exact vertex connectivity. Complete graphs give n-1, empty and
/// single-vertex graphs give 0.
int vertex_connectivity(const Graph& g);

/// Exact edge connectivity; 0 for disconnected, empty and single-vertex graphs.
int edge_connectivity(const Graph& g);

/// All unordered pairs {u,v} of nonadjacent vertices with identical
/// neighborhoods. Pairs come out with u < v, lexicographically.
std::vector<std::pair<int, int>> nonadjacent_twins(const Graph& g);

/// Contracts a matching: each edge of `m` merges into one vertex placed at
/// the smaller index of the pair; survivors keep their relative order.
/// Parallel edges are merged and loops dropped. Throws on overlapping
/// pairs or non-edges.
Graph contract_matching(const Graph& g, const std::vector<std::pair<int, int>>& m);

// Fixed small graphs used throughout.
Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_bipartite(int a, int b);
Graph petersen_graph();
Graph cube_graph();       // Q3
Graph prism_graph();      // K3 x K2
Graph octahedron_graph(); // K_{2,2,2}
Graph circulant_graph(int n, const std::vector<int>& offsets);
Graph disjoint_union(const Graph& a, const Graph& b);
Graph add_universal_vertex(const Graph& g);

/// Builtin lookup: "k<n>", "c<n>", "petersen", "cube", "prism",
/// "octahedron". Throws std::invalid_argument for anything else.
Graph named_graph(const std::string& name);

}  // namespace sgt
