#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sgt/graph.hpp"

namespace sgt {

enum class Parity { odd, even };

/*
 * One block R of the gadget family, with its role labels.
 *
 * Odd d: R is the complete bipartite graph on (X, Y) with |X| = |Y| = d-1
 * plus a perfect matching on Y. X vertices have degree d-1 and are the
 * ports; Y vertices have degree d.
 *
 * Even d: six disjoint sets A, B, C, C', B', A' of sizes d/2, d-1, d/2-1,
 * d/2-1, d-1, d/2. A u C is complete to B except the single pair {s,t}
 * (s in B, t in C), mirrored on the primed side; C and C' carry a perfect
 * matching avoiding {t,t'} plus the extra edge tt'; B \ {u} is paired up by
 * a matching and the edge su is added, mirrored on the primed side. A u A'
 * vertices have degree d-1 and are the ports; everyone else has degree d.
 */
struct GadgetBlueprint {
    int d = 0;
    Parity parity = Parity::odd;
    Graph block;
    std::vector<int> ports;  // degree d-1 inside the block

    // odd roles
    std::vector<int> side_x, side_y;
    std::vector<std::pair<int, int>> y_pairing;

    // even roles
    std::vector<int> a, b, c, cp, bp, ap;
    int s = -1, t = -1, u = -1, sp = -1, tp = -1, up = -1;
};

/// Deterministic block for degree d >= 5; throws for smaller d.
GadgetBlueprint build_block(int d);

/// The gadget graph over base D: one block per base vertex, one inter-block
/// port edge per base edge, forming a matching on the ports. Odd d needs a
/// (d-1)-regular (d-1)-connected base; even d needs a d-regular d-connected
/// base. The seed only permutes per-block port order.
Graph assemble_gadget(const Graph& base, int d, std::uint64_t seed);

/// Block partition recovered from the graph alone: triangle-supported edges
/// never cross blocks, so their components (merged across the C-C' gap by
/// the >= 2 connecting edges) are exactly the blocks. Each candidate block
/// is checked against the blueprint; throws GadgetError when the structure
/// does not decompose.
std::vector<std::vector<int>> detect_blocks(const Graph& g, const GadgetBlueprint& bp);

struct HalfWitness {
    std::vector<int> bag;              // Z, one littlebag application
    std::vector<int> cut;              // X: bag vertices with outside neighbors
    std::vector<int> outside_degrees;  // per bag vertex, neighbors outside the bag
};

struct BlockWitness {
    std::vector<int> vertices;
    std::vector<HalfWitness> halves;   // one for odd blocks, two for even
};

/// Per-block facts that force every potential K_{d+1} subdivision's branch
/// vertices out of every block, hence out of the whole graph.
struct NoSubdivisionCertificate {
    int d = 0;
    Parity parity = Parity::odd;
    std::vector<BlockWitness> blocks;
};

struct CertifyOutcome {
    std::optional<NoSubdivisionCertificate> certificate;
    // set when a hypothesis fails
    std::string violation;
    int block = -1;
    int vertex = -1;

    bool ok() const { return certificate.has_value(); }
};

/// Verifies, per block, the bag/cut hypotheses (g d-regular; bag size 2d-2;
/// cut size <= d-1 with at least three single-outside-neighbor vertices and
/// no outside neighbors elsewhere; for even d additionally the d-1 cutset
/// between the two halves and |C u C'| = d-2). Succeeding certifies that g
/// has no K_{d+1} subdivision.
CertifyOutcome no_subdivision_certificate(const Graph& g, const GadgetBlueprint& bp,
                                          const std::vector<std::vector<int>>& blocks);

/// Inverts assemble_gadget: detects the blocks, contracts each to a vertex
/// and returns the base, re-verifying the regularity and connectivity the
/// assembly required. Throws GadgetError when g is not a gadget over bp.
Graph recover_base(const Graph& g, const GadgetBlueprint& bp);

}  // namespace sgt
