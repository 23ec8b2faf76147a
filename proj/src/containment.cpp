#include "sgt/containment.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace sgt {

namespace {

using Mask = std::uint64_t;

std::vector<int> mask_to_set(Mask m) {
    std::vector<int> out;
    while (m) {
        out.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return out;
}

Mask set_to_mask(const VertexSet& s) {
    Mask m = 0;
    for (int v : s) m |= Mask{1} << v;
    return m;
}

Mask full_mask(int n) { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

// ---- minor search -------------------------------------------------------

struct MinorSearcher {
    const Graph& g;
    const Graph& h;
    int nh;
    std::vector<Mask> adj;
    std::vector<int> order;    // h-vertices, descending degree
    std::vector<Mask> branch;  // by h-vertex
    long long budget;
    bool out_of_budget = false;
    bool done = false;

    MinorSearcher(const Graph& g_, const Graph& h_, long long nodes)
        : g(g_), h(h_), nh(h_.vertex_count()), adj(g_.adjacency_masks()), branch(nh, 0), budget(nodes) {
        order.resize(nh);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            return h_.degree(a) != h_.degree(b) ? h_.degree(a) > h_.degree(b) : a < b;
        });
    }

    Mask neighborhood(Mask s) const {
        Mask nb = 0;
        for (Mask m = s; m;) {
            nb |= adj[std::countr_zero(m)];
            m &= m - 1;
        }
        return nb & ~s;
    }

    void assign(int idx, Mask free) {
        if (done || out_of_budget) return;
        if (idx == nh) {
            done = true;
            return;
        }
        const int hv = order[idx];
        const int max_size = std::popcount(free) - (nh - idx - 1);
        if (max_size <= 0) return;

        std::vector<Mask> need;  // each must intersect the new branch set
        for (int j = 0; j < idx; ++j)
            if (h.has_edge(hv, order[j])) need.push_back(neighborhood(branch[order[j]]));

        for (Mask rest = free; rest;) {
            int root = std::countr_zero(rest);
            rest &= rest - 1;
            Mask rootbit = Mask{1} << root;
            Mask allowed = free & ~(rootbit - 1);  // min(S) == root
            grow(idx, hv, rootbit, adj[root] & allowed & ~rootbit, allowed, need, free, max_size);
            if (done || out_of_budget) return;
        }
    }

    void grow(int idx, int hv, Mask s, Mask ext, Mask allowed, const std::vector<Mask>& need,
              Mask free, int max_size) {
        if (--budget < 0) {
            out_of_budget = true;
            return;
        }
        bool edges_ok = true;
        for (Mask reach : need)
            if (!(reach & s)) {
                edges_ok = false;
                break;
            }
        if (edges_ok) {
            int degsum = 0;
            for (Mask m = s; m;) {
                degsum += g.degree(std::countr_zero(m));
                m &= m - 1;
            }
            if (degsum >= h.degree(hv)) {
                branch[hv] = s;
                assign(idx + 1, free & ~s);
                if (done || out_of_budget) return;
                branch[hv] = 0;
            }
        }
        if (std::popcount(s) == max_size) return;
        Mask e = ext;
        Mask forb = 0;
        while (e) {
            int u = std::countr_zero(e);
            Mask ubit = Mask{1} << u;
            e &= ~ubit;
            Mask add = adj[u] & allowed & ~s & ~forb & ~e & ~ubit;
            grow(idx, hv, s | ubit, e | add, allowed, need, free, max_size);
            if (done || out_of_budget) return;
            forb |= ubit;
        }
    }
};

// ---- subdivision search -------------------------------------------------

struct SubdivSearcher {
    const Graph& g;
    const Graph& h;
    int ng, nh;
    std::vector<Mask> adj;
    std::vector<int> vorder;                  // h-vertices, descending degree
    std::vector<std::pair<int, int>> eorder;  // h-edges, descending degree sum
    std::vector<int> branch;
    std::vector<std::vector<int>> paths;
    long long budget;
    bool out_of_budget = false;
    bool done = false;

    SubdivSearcher(const Graph& g_, const Graph& h_, long long nodes)
        : g(g_), h(h_), ng(g_.vertex_count()), nh(h_.vertex_count()), adj(g_.adjacency_masks()),
          branch(nh, -1), budget(nodes) {
        vorder.resize(nh);
        std::iota(vorder.begin(), vorder.end(), 0);
        std::sort(vorder.begin(), vorder.end(), [&](int a, int b) {
            return h_.degree(a) != h_.degree(b) ? h_.degree(a) > h_.degree(b) : a < b;
        });
        eorder = h_.edges();
        std::sort(eorder.begin(), eorder.end(), [&](auto a, auto b) {
            int da = h_.degree(a.first) + h_.degree(a.second);
            int db = h_.degree(b.first) + h_.degree(b.second);
            return da != db ? da > db : a < b;
        });
        paths.resize(eorder.size());
    }

    void inject(int idx, Mask used) {
        if (done || out_of_budget) return;
        if (--budget < 0) {
            out_of_budget = true;
            return;
        }
        if (idx == nh) {
            route(0, full_mask(ng) & ~used);
            return;
        }
        const int hv = vorder[idx];
        for (int v = 0; v < ng; ++v) {
            if (used >> v & 1) continue;
            if (g.degree(v) < h.degree(hv)) continue;
            branch[hv] = v;
            inject(idx + 1, used | Mask{1} << v);
            if (done || out_of_budget) return;
        }
        branch[hv] = -1;
    }

    void route(size_t eidx, Mask free) {
        if (eidx == eorder.size()) {
            done = true;
            return;
        }
        const int a = branch[eorder[eidx].first];
        const int b = branch[eorder[eidx].second];
        std::vector<int> path = {a};
        extend(eidx, a, b, Mask{1} << a, free, path);
    }

    void extend(size_t eidx, int at, int goal, Mask onpath, Mask free, std::vector<int>& path) {
        if (--budget < 0) {
            out_of_budget = true;
            return;
        }
        if (g.has_edge(at, goal)) {
            path.push_back(goal);
            paths[eidx] = path;
            route(eidx + 1, free & ~onpath);
            if (done || out_of_budget) return;
            path.pop_back();
        }
        for (int v : g.neighbors(at)) {
            if (v == goal) continue;
            if (!(free >> v & 1) || (onpath >> v & 1)) continue;
            path.push_back(v);
            extend(eidx, v, goal, onpath | Mask{1} << v, free, path);
            if (done || out_of_budget) return;
            path.pop_back();
        }
    }
};

// ---- disjoint connected subgraphs ---------------------------------------

struct DcsSearcher {
    const Graph& g;
    size_t nparts;
    std::vector<Mask> adj;
    std::vector<Mask> zmask;
    std::vector<Mask> chosen;
    long long budget;
    bool out_of_budget = false;
    bool done = false;

    DcsSearcher(const Graph& g_, const std::vector<VertexSet>& parts, long long nodes)
        : g(g_), nparts(parts.size()), adj(g_.adjacency_masks()), budget(nodes) {
        for (const auto& part : parts) zmask.push_back(set_to_mask(part));
        chosen.resize(nparts);
    }

    bool connected(Mask s) const {
        if (!s) return false;
        Mask seen = Mask{1} << std::countr_zero(s);
        for (;;) {
            Mask next = seen;
            for (Mask m = seen; m;) {
                next |= adj[std::countr_zero(m)] & s;
                m &= m - 1;
            }
            if (next == seen) return seen == s;
            seen = next;
        }
    }

    Mask neighborhood(Mask s) const {
        Mask nb = 0;
        for (Mask m = s; m;) {
            nb |= adj[std::countr_zero(m)];
            m &= m - 1;
        }
        return nb & ~s;
    }

    void assign(size_t i, Mask free) {
        if (done || out_of_budget) return;
        if (i == nparts) {
            done = true;
            return;
        }
        Mask seed = zmask[i];
        if (connected(seed)) {
            chosen[i] = seed;
            assign(i + 1, free);
            if (done || out_of_budget) return;
        }
        grow(i, seed, neighborhood(seed) & free, free);
    }

    // extend with frontier vertices until the seeded union first becomes
    // connected; minimal connectors suffice for feasibility
    void grow(size_t i, Mask s, Mask ext, Mask free) {
        if (--budget < 0) {
            out_of_budget = true;
            return;
        }
        Mask e = ext;
        Mask forb = 0;
        while (e) {
            int u = std::countr_zero(e);
            Mask ubit = Mask{1} << u;
            e &= ~ubit;
            Mask s2 = s | ubit;
            if (connected(s2)) {
                chosen[i] = s2;
                assign(i + 1, free & ~s2);
                if (done || out_of_budget) return;
            } else {
                Mask add = adj[u] & free & ~s2 & ~forb & ~e;
                grow(i, s2, e | add, free);
                if (done || out_of_budget) return;
            }
            forb |= ubit;
        }
    }
};

}  // namespace

// ---- verification -------------------------------------------------------

bool verify_minor_model(const Graph& g, const Graph& h, const MinorModel& m, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (static_cast<int>(m.branch_sets.size()) != h.vertex_count())
        return fail("branch set count mismatch");
    std::vector<char> used(g.vertex_count(), 0);
    for (int i = 0; i < h.vertex_count(); ++i) {
        const auto& s = m.branch_sets[i];
        if (s.empty()) return fail("empty branch set");
        for (int v : s) {
            if (v < 0 || v >= g.vertex_count()) return fail("branch vertex out of range");
            if (used[v]) return fail("branch sets overlap");
            used[v] = 1;
        }
        if (!g.induced(s).is_connected()) return fail("branch set not connected");
    }
    for (auto [a, b] : h.edges()) {
        bool linked = false;
        for (int u : m.branch_sets[a]) {
            for (int v : m.branch_sets[b])
                if (g.has_edge(u, v)) {
                    linked = true;
                    break;
                }
            if (linked) break;
        }
        if (!linked) return fail("missing edge between branch sets");
    }
    return true;
}

bool verify_subdivision(const Graph& g, const Graph& h, const SubdivisionEmbedding& e, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (static_cast<int>(e.branch_map.size()) != h.vertex_count()) return fail("branch map size mismatch");
    std::vector<char> is_branch(g.vertex_count(), 0);
    for (int v : e.branch_map) {
        if (v < 0 || v >= g.vertex_count()) return fail("branch vertex out of range");
        if (is_branch[v]) return fail("branch map not injective");
        is_branch[v] = 1;
    }
    auto hedges = h.edges();
    if (e.paths.size() != hedges.size()) return fail("path count mismatch");
    std::vector<char> covered(hedges.size(), 0);
    std::vector<char> used_internal(g.vertex_count(), 0);
    for (const auto& p : e.paths) {
        auto it = std::find(hedges.begin(), hedges.end(), p.h_edge);
        if (it == hedges.end()) return fail("path for a non-edge");
        size_t ei = it - hedges.begin();
        if (covered[ei]) return fail("duplicate path for an edge");
        covered[ei] = 1;
        if (p.vertices.size() < 2) return fail("path too short");
        if (p.vertices.front() != e.branch_map[p.h_edge.first] ||
            p.vertices.back() != e.branch_map[p.h_edge.second])
            return fail("path endpoints disagree with branch map");
        for (size_t i = 0; i + 1 < p.vertices.size(); ++i)
            if (!g.has_edge(p.vertices[i], p.vertices[i + 1])) return fail("path step is not an edge");
        auto sorted = p.vertices;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            return fail("path repeats a vertex");
        for (size_t i = 1; i + 1 < p.vertices.size(); ++i) {
            int v = p.vertices[i];
            if (is_branch[v]) return fail("path passes through a branch vertex");
            if (used_internal[v]) return fail("paths share an internal vertex");
            used_internal[v] = 1;
        }
    }
    return true;
}

// ---- public entry points ------------------------------------------------

SearchResult<MinorModel> contains_minor(const Graph& g, const Graph& h, const SearchLimits& limits) {
    if (g.vertex_count() > 64) throw std::invalid_argument("contains_minor: host graph too large");
    if (h.vertex_count() == 0) return {SearchStatus::found, MinorModel{}};
    if (h.vertex_count() > g.vertex_count() || h.edge_count() > g.edge_count())
        return {SearchStatus::absent, std::nullopt};

    MinorSearcher s(g, h, limits.node_budget);
    s.assign(0, full_mask(g.vertex_count()));
    if (s.done) {
        MinorModel model;
        model.branch_sets.resize(h.vertex_count());
        for (int i = 0; i < h.vertex_count(); ++i) model.branch_sets[i] = mask_to_set(s.branch[i]);
        std::string why;
        if (!verify_minor_model(g, h, model, &why))
            throw std::logic_error("contains_minor produced an invalid certificate: " + why);
        return {SearchStatus::found, std::move(model)};
    }
    if (s.out_of_budget) return {SearchStatus::out_of_budget, std::nullopt};
    return {SearchStatus::absent, std::nullopt};
}

SearchResult<SubdivisionEmbedding> contains_subdivision(const Graph& g, const Graph& h,
                                                        const SearchLimits& limits) {
    if (g.vertex_count() > 64) throw std::invalid_argument("contains_subdivision: host graph too large");
    if (h.vertex_count() == 0) return {SearchStatus::found, SubdivisionEmbedding{}};
    if (h.vertex_count() > g.vertex_count() || h.edge_count() > g.edge_count())
        return {SearchStatus::absent, std::nullopt};
    {
        std::vector<int> dg, dh;
        for (int v = 0; v < g.vertex_count(); ++v) dg.push_back(g.degree(v));
        for (int v = 0; v < h.vertex_count(); ++v) dh.push_back(h.degree(v));
        std::sort(dg.rbegin(), dg.rend());
        std::sort(dh.rbegin(), dh.rend());
        for (size_t i = 0; i < dh.size(); ++i)
            if (dg[i] < dh[i]) return {SearchStatus::absent, std::nullopt};
    }

    SubdivSearcher s(g, h, limits.node_budget);
    s.inject(0, 0);
    if (s.done) {
        SubdivisionEmbedding emb;
        emb.branch_map = s.branch;
        for (size_t i = 0; i < s.eorder.size(); ++i) emb.paths.push_back({s.eorder[i], s.paths[i]});
        std::string why;
        if (!verify_subdivision(g, h, emb, &why))
            throw std::logic_error("contains_subdivision produced an invalid certificate: " + why);
        return {SearchStatus::found, std::move(emb)};
    }
    if (s.out_of_budget) return {SearchStatus::out_of_budget, std::nullopt};
    return {SearchStatus::absent, std::nullopt};
}

SearchResult<std::vector<VertexSet>> disjoint_connected_subgraphs(const Graph& g,
                                                                  const std::vector<VertexSet>& parts,
                                                                  const SearchLimits& limits) {
    if (g.vertex_count() > 64) throw std::invalid_argument("disjoint_connected_subgraphs: graph too large");
    Mask zall = 0;
    for (const auto& p : parts) {
        if (p.empty()) throw std::invalid_argument("disjoint_connected_subgraphs: empty part");
        Mask m = set_to_mask(p);
        if (static_cast<int>(p.size()) != std::popcount(m) || (zall & m))
            throw std::invalid_argument("disjoint_connected_subgraphs: parts overlap");
        for (int v : p)
            if (v < 0 || v >= g.vertex_count())
                throw std::invalid_argument("disjoint_connected_subgraphs: vertex out of range");
        zall |= m;
    }
    if (parts.empty()) return {SearchStatus::found, std::vector<VertexSet>{}};

    DcsSearcher s(g, parts, limits.node_budget);
    s.assign(0, full_mask(g.vertex_count()) & ~zall);
    if (s.done) {
        std::vector<VertexSet> out;
        for (Mask m : s.chosen) out.push_back(mask_to_set(m));
        Mask seen = 0;
        for (size_t i = 0; i < out.size(); ++i) {
            Mask m = set_to_mask(out[i]);
            if ((m & seen) || !s.connected(m) || (m & zall) != s.zmask[i])
                throw std::logic_error("disjoint_connected_subgraphs produced an invalid certificate");
            seen |= m;
        }
        return {SearchStatus::found, std::move(out)};
    }
    if (s.out_of_budget) return {SearchStatus::out_of_budget, std::nullopt};
    return {SearchStatus::absent, std::nullopt};
}

}  // namespace sgt
