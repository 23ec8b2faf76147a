#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sgt/containment.hpp"
#include "sgt/graph.hpp"

namespace sgt {

/*
 * Separations are stored as vertex-set pairs (left, right) with
 * left | right = V(G) and no edge between the exclusive sides; the order is
 * |left & right|. The subgraph formulation differs only in where edges
 * inside the shared part live; the quotient fixes the convention that the
 * left side owns every edge with both ends in V(left). Orientation and
 * order never depend on that choice.
 */
struct Separation {
    std::uint64_t left = 0;
    std::uint64_t right = 0;

    int order() const;
    VertexSet left_set() const;
    VertexSet right_set() const;
    Separation flipped() const { return {right, left}; }
    auto operator<=>(const Separation&) const = default;
};

bool is_separation(const Graph& g, const Separation& s);

struct TangleLimits {
    long long max_separations = 2'000'000;
};

/// All ordered separations of order < theta, each exactly once, sorted.
std::vector<Separation> enumerate_separations(const Graph& g, int theta,
                                              const TangleLimits& limits = {});

/// (A1 u A2, B1 n B2); throws if the operands live on different vertex sets.
Separation separation_union(const Graph& g, const Separation& a, const Separation& b);
/// (A1 n A2, B1 u B2), the dual combination of the same pair.
Separation separation_intersection(const Graph& g, const Separation& a, const Separation& b);

/// Order theta plus an explicit orientation of every separation of order
/// below theta.
struct Tangle {
    Graph graph;
    int theta = 0;
    std::vector<Separation> members;  // sorted

    bool contains(const Separation& s) const;
};

struct TangleCheck {
    bool ok = true;
    std::string violation;                // empty when ok
    std::vector<Separation> witnesses;    // the separations involved
};

/// Checks the three tangle axioms for `oriented` at order theta:
/// every separation of order < theta appears in exactly one orientation,
/// no three left sides cover the whole graph (vertices and edges), and no
/// left side spans all vertices.
TangleCheck is_tangle(const Graph& g, int theta, const std::vector<Separation>& oriented,
                      const TangleLimits& limits = {});

/// The tangle induced by a K_t minor model: each separation of order
/// < theta points toward the side whose exclusive part contains a whole
/// branch set. Requires t >= ceil(3*theta/2); throws if the orientation is
/// ill-defined or an axiom fails.
Tangle clique_minor_tangle(const Graph& g, const MinorModel& model, int theta,
                           const TangleLimits& limits = {});

struct RestrictedTangle {
    Tangle tangle;
    std::vector<int> old_to_new;  // vertex map into the reduced graph, -1 for deleted
};

/// The tangle T \ W on G \ W of order theta - |W|: restrictions of members
/// whose shared part contains W. Requires |W| < theta; the result is
/// re-checked against the axioms.
RestrictedTangle restrict_tangle(const Tangle& t, const VertexSet& w,
                                 const TangleLimits& limits = {});

/// Minimum order of a member whose left side contains x, capped at theta.
int rank(const Tangle& t, const VertexSet& x);
bool is_free(const Tangle& t, const VertexSet& x);

/// Paths sharing the end `center`.
struct Nexus {
    int center = 0;
    std::vector<std::vector<int>> paths;  // each starts at center
};

void validate_nexus(const Graph& g, const Nexus& nexus);
VertexSet nexus_vertices(const Nexus& nexus);
int nexus_rank(const Tangle& t, const Nexus& nexus);

/// The unique maximal member of order |W| whose left side contains the
/// free set W (the union of all such members). Requires |W| < theta.
Separation max_separation(const Tangle& t, const VertexSet& w);

struct FreeFan {
    std::vector<int> centers;        // z_1..z_s
    std::vector<VertexSet> fans;     // W_i, d neighbors of z_i
};

/// Brute-force search for s distinct centers with disjoint d-sets of their
/// neighbors whose union is free relative to the tangle restricted away
/// from the centers. s <= 2.
SearchResult<FreeFan> find_free_fans(const Graph& g, const Tangle& t, int s, int d,
                                     const SearchLimits& limits = {});

}  // namespace sgt
