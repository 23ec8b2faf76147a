#include "sgt/canonical.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <numeric>
#include <stdexcept>

#include "sgt/errors.hpp"
#include "sgt/graph6.hpp"

namespace sgt {

namespace {

using Mask = std::uint64_t;
using Cells = std::vector<std::vector<int>>;

Mask mask_of(const std::vector<int>& cell) {
    Mask m = 0;
    for (int v : cell) m |= Mask{1} << v;
    return m;
}

/*
 * Canonical labeling by individualization-refinement.
 *
 * A partition of the vertices is refined to equitability (every cell has a
 * uniform neighbor count into every other cell), then a vertex of the first
 * non-singleton cell is split off and refinement repeats. Discrete
 * partitions are leaves; each leaf induces a relabelling, and the minimum
 * upper-triangle adjacency bit string over all leaves is the canonical
 * form. The leaf set is relabelling-invariant, so equal strings decide
 * isomorphism.
 *
 * Automorphisms show up as pairs of leaves with equal bit strings; their
 * generators prune sibling branches that lie in one orbit of the subgroup
 * fixing the current individualization prefix.
 */
struct Searcher {
    int n;
    std::vector<Mask> adj;
    long long nodes = 0;
    long long node_budget;

    std::vector<std::uint8_t> best_bits;
    std::vector<int> best_perm;  // position -> old vertex
    bool have_best = false;

    std::vector<std::vector<int>> generators;  // automorphisms, old -> old
    std::vector<int> fixed;                    // individualized vertices on the current path

    Searcher(const Graph& g, long long budget) : n(g.vertex_count()), adj(g.adjacency_masks()), node_budget(budget) {}

    void refine(Cells& cells, std::deque<Mask> splitters) const {
        std::vector<std::vector<int>> buckets(n + 1);
        while (!splitters.empty()) {
            Mask sp = splitters.front();
            splitters.pop_front();
            Cells next;
            next.reserve(cells.size());
            for (auto& cell : cells) {
                if (cell.size() == 1) {
                    next.push_back(std::move(cell));
                    continue;
                }
                int lo = n + 1, hi = -1;
                for (int v : cell) {
                    int c = std::popcount(adj[v] & sp);
                    buckets[c].push_back(v);
                    lo = std::min(lo, c);
                    hi = std::max(hi, c);
                }
                if (lo == hi) {
                    buckets[lo].clear();
                    next.push_back(std::move(cell));
                    continue;
                }
                for (int c = lo; c <= hi; ++c) {
                    if (buckets[c].empty()) continue;
                    splitters.push_back(mask_of(buckets[c]));
                    next.push_back(std::move(buckets[c]));
                    buckets[c].clear();
                }
            }
            cells = std::move(next);
        }
    }

    std::vector<std::uint8_t> leaf_bits(const Cells& cells) const {
        std::vector<int> perm(n);  // position -> old vertex
        for (int i = 0; i < n; ++i) perm[i] = cells[i][0];
        std::vector<std::uint8_t> bits((static_cast<size_t>(n) * (n - 1) / 2 + 7) / 8, 0);
        size_t b = 0;
        for (int v = 1; v < n; ++v)
            for (int u = 0; u < v; ++u, ++b)
                if (adj[perm[u]] >> perm[v] & 1) bits[b / 8] |= std::uint8_t(0x80) >> (b % 8);
        return bits;
    }

    void visit_leaf(const Cells& cells) {
        auto bits = leaf_bits(cells);
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i) perm[i] = cells[i][0];
        if (!have_best || bits < best_bits) {
            best_bits = std::move(bits);
            best_perm = std::move(perm);
            have_best = true;
            return;
        }
        if (bits == best_bits && perm != best_perm) {
            // best_perm and perm present the same adjacency string, so
            // gamma(best_perm[i]) = perm[i] is an automorphism.
            std::vector<int> gamma(n);
            for (int i = 0; i < n; ++i) gamma[best_perm[i]] = perm[i];
            generators.push_back(std::move(gamma));
        }
    }

    // Orbits of the subgroup generated by the recorded automorphisms that
    // fix every vertex of `fixed` pointwise.
    std::vector<int> stabilizer_orbits() const {
        std::vector<int> parent(n);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int v) {
            while (parent[v] != v) v = parent[v] = parent[parent[v]];
            return v;
        };
        for (const auto& g : generators) {
            bool fixes = true;
            for (int f : fixed)
                if (g[f] != f) {
                    fixes = false;
                    break;
                }
            if (!fixes) continue;
            for (int v = 0; v < n; ++v) {
                int a = find(v), b = find(g[v]);
                if (a != b) parent[a] = b;
            }
        }
        std::vector<int> root(n);
        for (int v = 0; v < n; ++v) root[v] = find(v);
        return root;
    }

    void search(const Cells& cells) {
        if (++nodes > node_budget) throw BudgetError("canonical_labeling: node budget exceeded");
        int target = -1;
        for (int i = 0; i < static_cast<int>(cells.size()); ++i)
            if (cells[i].size() > 1) {
                target = i;
                break;
            }
        if (target < 0) {
            visit_leaf(cells);
            return;
        }
        std::vector<int> tried;
        for (int v : cells[target]) {
            if (!tried.empty()) {
                auto root = stabilizer_orbits();
                bool skip = false;
                for (int u : tried)
                    if (root[u] == root[v]) {
                        skip = true;
                        break;
                    }
                if (skip) continue;
            }
            tried.push_back(v);
            Cells child;
            child.reserve(cells.size() + 1);
            for (int i = 0; i < static_cast<int>(cells.size()); ++i) {
                if (i != target) {
                    child.push_back(cells[i]);
                    continue;
                }
                std::vector<int> rest;
                for (int u : cells[i])
                    if (u != v) rest.push_back(u);
                child.push_back({v});
                child.push_back(std::move(rest));
            }
            std::deque<Mask> splitters = {Mask{1} << v, mask_of(child[target + 1])};
            refine(child, std::move(splitters));
            fixed.push_back(v);
            search(child);
            fixed.pop_back();
        }
    }

    std::vector<int> run() {
        // initial partition by (degree, triangle count)
        std::vector<std::pair<long, int>> key(n);
        for (int v = 0; v < n; ++v) {
            int tri = 0;
            for (int u = 0; u < n; ++u)
                if (adj[v] >> u & 1) tri += std::popcount(adj[v] & adj[u]);
            key[v] = {static_cast<long>(std::popcount(adj[v])) * 100000 + tri / 2, v};
        }
        std::sort(key.begin(), key.end());
        Cells cells;
        std::deque<Mask> splitters;
        for (int i = 0; i < n;) {
            int j = i;
            std::vector<int> cell;
            while (j < n && key[j].first == key[i].first) cell.push_back(key[j++].second);
            std::sort(cell.begin(), cell.end());
            splitters.push_back(mask_of(cell));
            cells.push_back(std::move(cell));
            i = j;
        }
        refine(cells, std::move(splitters));
        search(cells);
        std::vector<int> old_to_new(n);
        for (int i = 0; i < n; ++i) old_to_new[best_perm[i]] = i;
        return old_to_new;
    }
};

}  // namespace

std::vector<int> canonical_labeling(const Graph& g, const CanonOptions& opts) {
    const int n = g.vertex_count();
    if (n > opts.max_vertices || n > 64)
        throw std::invalid_argument("canonical_labeling: size bound exceeded");
    if (n == 0) return {};
    if (n == 1) return {0};
    Searcher s(g, opts.node_budget);
    return s.run();
}

CanonicalForm canonical_form(const Graph& g, const CanonOptions& opts) {
    return {emit_graph6(canonical_graph(g, opts))};
}

Graph canonical_graph(const Graph& g, const CanonOptions& opts) {
    return g.relabel(canonical_labeling(g, opts));
}

bool is_isomorphic(const Graph& a, const Graph& b, const CanonOptions& opts) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    return canonical_form(a, opts) == canonical_form(b, opts);
}

}  // namespace sgt
