#include "sgt/gadgets.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>

#include "sgt/canonical.hpp"
#include "sgt/errors.hpp"

namespace sgt {

GadgetBlueprint build_block(int d) {
    if (d < 5) throw std::invalid_argument("build_block: d must be at least 5");
    GadgetBlueprint bp;
    bp.d = d;

    if (d % 2 == 1) {
        bp.parity = Parity::odd;
        // X = 0..d-2, Y = d-1..2d-3
        std::vector<std::pair<int, int>> edges;
        for (int x = 0; x < d - 1; ++x)
            for (int y = 0; y < d - 1; ++y) edges.emplace_back(x, d - 1 + y);
        for (int p = 0; p < (d - 1) / 2; ++p) {
            int y1 = d - 1 + 2 * p, y2 = d - 1 + 2 * p + 1;
            edges.emplace_back(y1, y2);
            bp.y_pairing.emplace_back(y1, y2);
        }
        bp.block = Graph::from_edges(2 * d - 2, edges);
        for (int x = 0; x < d - 1; ++x) bp.side_x.push_back(x);
        for (int y = d - 1; y < 2 * d - 2; ++y) bp.side_y.push_back(y);
        bp.ports = bp.side_x;
        return bp;
    }

    bp.parity = Parity::even;
    const int half = d / 2;
    // consecutive ranges: A, B, C, C', B', A'
    int at = 0;
    auto take = [&](std::vector<int>& role, int count) {
        for (int i = 0; i < count; ++i) role.push_back(at++);
    };
    take(bp.a, half);
    take(bp.b, d - 1);
    take(bp.c, half - 1);
    take(bp.cp, half - 1);
    take(bp.bp, d - 1);
    take(bp.ap, half);
    bp.s = bp.b[0];
    bp.u = bp.b[1];
    bp.t = bp.c[0];
    bp.tp = bp.cp[0];
    bp.sp = bp.bp[0];
    bp.up = bp.bp[1];

    std::vector<std::pair<int, int>> edges;
    auto join_sides = [&](const std::vector<int>& a, const std::vector<int>& c,
                          const std::vector<int>& b, int s, int t) {
        for (int v : a)
            for (int w : b) edges.emplace_back(v, w);
        for (int v : c)
            for (int w : b)
                if (!(v == t && w == s)) edges.emplace_back(v, w);
    };
    join_sides(bp.a, bp.c, bp.b, bp.s, bp.t);
    join_sides(bp.ap, bp.cp, bp.bp, bp.sp, bp.tp);

    auto pair_up = [&](const std::vector<int>& b, int s, int u) {
        std::vector<int> rest;
        for (int v : b)
            if (v != u) rest.push_back(v);
        for (size_t i = 0; i + 1 < rest.size(); i += 2) edges.emplace_back(rest[i], rest[i + 1]);
        edges.emplace_back(s, u);
    };
    pair_up(bp.b, bp.s, bp.u);
    pair_up(bp.bp, bp.sp, bp.up);

    // C-C' matching shifted by one so t and t' stay unmatched, plus tt'
    const int cs = half - 1;
    for (int i = 0; i < cs; ++i) edges.emplace_back(bp.c[i], bp.cp[(i + 1) % cs]);
    edges.emplace_back(bp.t, bp.tp);

    bp.block = Graph::from_edges(4 * d - 4, edges);
    bp.ports = bp.a;
    bp.ports.insert(bp.ports.end(), bp.ap.begin(), bp.ap.end());
    return bp;
}

Graph assemble_gadget(const Graph& base, int d, std::uint64_t seed) {
    GadgetBlueprint bp = build_block(d);
    const int m = base.vertex_count();
    const int want_degree = bp.parity == Parity::odd ? d - 1 : d;
    if (m < 2) throw std::invalid_argument("assemble_gadget: base needs at least 2 vertices");
    if (!base.is_regular(want_degree))
        throw std::invalid_argument("assemble_gadget: base must be " + std::to_string(want_degree) +
                                    "-regular");
    if (vertex_connectivity(base) < want_degree)
        throw std::invalid_argument("assemble_gadget: base must be " + std::to_string(want_degree) +
                                    "-connected");

    const int bsize = bp.block.vertex_count();
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < m; ++i)
        for (auto [u, v] : bp.block.edges()) edges.emplace_back(i * bsize + u, i * bsize + v);

    std::mt19937_64 rng(seed);
    std::vector<std::vector<int>> ports(m);
    for (int i = 0; i < m; ++i) {
        for (int p : bp.ports) ports[i].push_back(i * bsize + p);
        std::shuffle(ports[i].begin(), ports[i].end(), rng);
    }
    std::vector<size_t> next(m, 0);
    for (auto [i, j] : base.edges()) edges.emplace_back(ports[i][next[i]++], ports[j][next[j]++]);

    return Graph::from_edges(m * bsize, edges);
}

namespace {

// Edges whose endpoints share a common neighbor. Port edges and the edges
// crossing the C-C' gap never do; every other block edge does.
std::vector<std::pair<int, int>> triangle_supported_edges(const Graph& g) {
    std::vector<std::pair<int, int>> out;
    for (auto [u, v] : g.edges()) {
        const auto& nu = g.neighbors(u);
        const auto& nv = g.neighbors(v);
        bool common = false;
        size_t i = 0, j = 0;
        while (i < nu.size() && j < nv.size()) {
            if (nu[i] == nv[j]) {
                common = true;
                break;
            }
            nu[i] < nv[j] ? ++i : ++j;
        }
        if (common) out.emplace_back(u, v);
    }
    return out;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

std::vector<std::vector<int>> detect_blocks(const Graph& g, const GadgetBlueprint& bp) {
    const int n = g.vertex_count();
    const int bsize = bp.block.vertex_count();
    if (n == 0 || n % bsize != 0)
        throw GadgetError("detect_blocks: vertex count is not a multiple of the block size");

    UnionFind uf(n);
    for (auto [u, v] : triangle_supported_edges(g)) uf.unite(u, v);

    // merge clusters connected by two or more edges; distinct blocks share
    // at most one (the port matching has one edge per base edge)
    for (bool merged = true; merged;) {
        merged = false;
        std::map<std::pair<int, int>, int> between;
        for (auto [u, v] : g.edges()) {
            int a = uf.find(u), b = uf.find(v);
            if (a == b) continue;
            ++between[std::minmax(a, b)];
        }
        for (auto& [pair, count] : between)
            if (count >= 2) {
                uf.unite(pair.first, pair.second);
                merged = true;
            }
    }

    std::map<int, std::vector<int>> clusters;
    for (int v = 0; v < n; ++v) clusters[uf.find(v)].push_back(v);
    std::vector<std::vector<int>> blocks;
    for (auto& [root, verts] : clusters) blocks.push_back(std::move(verts));
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });

    CanonicalForm want = canonical_form(bp.block);
    for (const auto& block : blocks) {
        if (static_cast<int>(block.size()) != bsize)
            throw GadgetError("detect_blocks: cluster of size " + std::to_string(block.size()) +
                              " does not match the block");
        if (canonical_form(g.induced(block)) != want)
            throw GadgetError("detect_blocks: cluster is not isomorphic to the block");
    }

    // inter-block edges must form a matching on the ports
    std::vector<int> block_of(n);
    for (size_t i = 0; i < blocks.size(); ++i)
        for (int v : blocks[i]) block_of[v] = static_cast<int>(i);
    std::vector<int> inter_degree(n, 0);
    for (auto [u, v] : g.edges())
        if (block_of[u] != block_of[v]) {
            ++inter_degree[u];
            ++inter_degree[v];
        }
    for (int v = 0; v < n; ++v) {
        if (inter_degree[v] > 1) throw GadgetError("detect_blocks: port edges do not form a matching");
        int inside = g.degree(v) - inter_degree[v];
        if (inter_degree[v] == 1 && inside != bp.d - 1)
            throw GadgetError("detect_blocks: matched vertex is not a port");
    }
    return blocks;
}

CertifyOutcome no_subdivision_certificate(const Graph& g, const GadgetBlueprint& bp,
                                          const std::vector<std::vector<int>>& blocks) {
    const int d = bp.d;
    CertifyOutcome out;
    auto fail = [&](std::string msg, int block, int vertex) {
        out.violation = std::move(msg);
        out.block = block;
        out.vertex = vertex;
        return out;
    };

    if (!g.is_regular(d)) {
        for (int v = 0; v < g.vertex_count(); ++v)
            if (g.degree(v) != d) return fail("graph is not d-regular", -1, v);
    }
    {
        std::vector<char> seen(g.vertex_count(), 0);
        for (const auto& block : blocks)
            for (int v : block) {
                if (v < 0 || v >= g.vertex_count() || seen[v])
                    return fail("blocks do not partition the vertices", -1, v);
                seen[v] = 1;
            }
        for (int v = 0; v < g.vertex_count(); ++v)
            if (!seen[v]) return fail("blocks do not partition the vertices", -1, v);
    }

    NoSubdivisionCertificate cert;
    cert.d = d;
    cert.parity = bp.parity;

    for (size_t bi = 0; bi < blocks.size(); ++bi) {
        const auto& block = blocks[bi];
        std::vector<char> in_block(g.vertex_count(), 0);
        for (int v : block) in_block[v] = 1;

        // bags: the whole block (odd) or its two halves (even)
        std::vector<std::vector<int>> bags;
        if (bp.parity == Parity::odd) {
            bags.push_back(block);
        } else {
            Graph sub = g.induced(block);
            std::vector<std::pair<int, int>> tri = triangle_supported_edges(sub);
            UnionFind uf(sub.vertex_count());
            for (auto [u, v] : tri) uf.unite(u, v);
            std::map<int, std::vector<int>> halves;
            for (int v = 0; v < sub.vertex_count(); ++v) halves[uf.find(v)].push_back(block[v]);
            if (halves.size() != 2)
                return fail("even block does not split into two halves", static_cast<int>(bi), -1);
            for (auto& [root, verts] : halves) bags.push_back(std::move(verts));
            std::sort(bags.begin(), bags.end(),
                      [](const auto& a, const auto& b) { return a.front() < b.front(); });
        }

        BlockWitness witness;
        witness.vertices = block;

        std::vector<std::vector<int>> crossers_per_bag;  // even case: C resp. C'
        std::vector<std::vector<int>> ports_per_bag;     // even case: A resp. A'
        for (const auto& bag : bags) {
            std::vector<char> in_bag(g.vertex_count(), 0);
            for (int v : bag) in_bag[v] = 1;

            HalfWitness hw;
            hw.bag = bag;
            int singles = 0;
            std::vector<int> crossers, ports;
            for (int v : bag) {
                int outside = 0;
                bool to_block = false, to_elsewhere = false;
                for (int w : g.neighbors(v))
                    if (!in_bag[w]) {
                        ++outside;
                        (in_block[w] ? to_block : to_elsewhere) = true;
                    }
                hw.outside_degrees.push_back(outside);
                if (outside == 0) continue;
                hw.cut.push_back(v);
                if (outside == 1) ++singles;
                if (to_block && to_elsewhere)
                    return fail("cut vertex has outside neighbors both inside and outside the block",
                                static_cast<int>(bi), v);
                (to_block ? crossers : ports).push_back(v);
                if (bp.parity == Parity::odd && outside > 1)
                    return fail("cut vertex has more than one outside neighbor", static_cast<int>(bi), v);
                if (bp.parity == Parity::even && !to_block && outside != 1)
                    return fail("port vertex has more than one outside neighbor", static_cast<int>(bi), v);
            }

            if (static_cast<int>(bag.size()) != 2 * d - 2)
                return fail("bag size is not 2d-2", static_cast<int>(bi), -1);
            if (static_cast<int>(hw.cut.size()) > d - 1)
                return fail("cut is larger than d-1", static_cast<int>(bi), -1);
            if (singles < 3)
                return fail("fewer than three cut vertices with exactly one outside neighbor",
                            static_cast<int>(bi), -1);
            if (bp.parity == Parity::odd && !crossers.empty())
                return fail("odd block has an edge into itself across the bag", static_cast<int>(bi),
                            crossers.front());
            crossers_per_bag.push_back(std::move(crossers));
            ports_per_bag.push_back(std::move(ports));
            witness.halves.push_back(std::move(hw));
        }

        if (bp.parity == Parity::even) {
            // |C u C'| = d-2 rules the crossers out; the A u C' cutset of
            // size d-1 walls each half off from the rest of the graph
            if (static_cast<int>(crossers_per_bag[0].size() + crossers_per_bag[1].size()) != d - 2)
                return fail("crossing sets C u C' do not have size d-2", static_cast<int>(bi), -1);
            for (int side = 0; side < 2; ++side) {
                const auto& bag = bags[side];
                std::vector<char> in_bag(g.vertex_count(), 0);
                for (int v : bag) in_bag[v] = 1;
                std::vector<char> in_cutset(g.vertex_count(), 0);
                int cutset_size = 0;
                for (int v : ports_per_bag[side])
                    if (!in_cutset[v]) {
                        in_cutset[v] = 1;
                        ++cutset_size;
                    }
                for (int v : crossers_per_bag[1 - side])
                    if (!in_cutset[v]) {
                        in_cutset[v] = 1;
                        ++cutset_size;
                    }
                if (cutset_size != d - 1)
                    return fail("half cutset A u C' does not have size d-1", static_cast<int>(bi), -1);
                for (int v : bag) {
                    if (in_cutset[v]) continue;
                    for (int w : g.neighbors(v))
                        if (!in_bag[w] && !in_cutset[w])
                            return fail("half is not separated by the A u C' cutset",
                                        static_cast<int>(bi), v);
                }
            }
        }
        cert.blocks.push_back(std::move(witness));
    }

    out.certificate = std::move(cert);
    return out;
}

Graph recover_base(const Graph& g, const GadgetBlueprint& bp) {
    auto blocks = detect_blocks(g, bp);
    const int m = static_cast<int>(blocks.size());
    std::vector<int> block_of(g.vertex_count());
    for (int i = 0; i < m; ++i)
        for (int v : blocks[i]) block_of[v] = i;

    std::vector<std::pair<int, int>> base_edges;
    for (auto [u, v] : g.edges())
        if (block_of[u] != block_of[v]) base_edges.emplace_back(block_of[u], block_of[v]);
    Graph base = Graph::from_edges(m, base_edges);
    if (static_cast<int>(base.edge_count()) != static_cast<int>(base_edges.size()))
        throw GadgetError("recover_base: two blocks are joined by more than one port edge");

    const int want_degree = bp.parity == Parity::odd ? bp.d - 1 : bp.d;
    if (!base.is_regular(want_degree))
        throw GadgetError("recover_base: recovered base is not " + std::to_string(want_degree) +
                          "-regular");
    if (vertex_connectivity(base) < want_degree)
        throw GadgetError("recover_base: recovered base is not " + std::to_string(want_degree) +
                          "-connected");
    return base;
}

}  // namespace sgt
