#include "sgt/growths.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "sgt/canonical.hpp"
#include "sgt/errors.hpp"

namespace sgt {

namespace {

// Vertices of degree <= d that qualify for some reduction: a nonadjacent
// twin (twins share degree) or a neighbor of degree <= d.
struct Classified {
    std::vector<int> twin_type;      // S1
    std::vector<int> adjacent_type;  // S2
};

Classified classify(const Graph& g, int d) {
    const int n = g.vertex_count();
    std::vector<char> low(n, 0);
    for (int v = 0; v < n; ++v) low[v] = g.degree(v) <= d;
    auto twins = nonadjacent_twins(g);
    std::vector<char> has_twin(n, 0);
    for (auto [u, v] : twins)
        if (low[u] && low[v]) has_twin[u] = has_twin[v] = 1;
    Classified out;
    for (int v = 0; v < n; ++v) {
        if (!low[v]) continue;
        if (has_twin[v]) {
            out.twin_type.push_back(v);
            continue;
        }
        for (int u : g.neighbors(v))
            if (low[u]) {
                out.adjacent_type.push_back(v);
                break;
            }
    }
    return out;
}

}  // namespace

std::optional<GrowthStep> find_reduction(const Graph& g, int d) {
    Classified cls = classify(g, d);
    if (cls.twin_type.empty() && cls.adjacent_type.empty()) return std::nullopt;

    // greedy twin pairing within S1
    std::vector<char> used(g.vertex_count(), 0);
    std::vector<std::pair<int, int>> twin_pairs;
    std::vector<char> in_s1(g.vertex_count(), 0);
    for (int v : cls.twin_type) in_s1[v] = 1;
    for (int v : cls.twin_type) {
        if (used[v]) continue;
        for (int u : cls.twin_type) {
            if (u <= v || used[u] || g.has_edge(u, v)) continue;
            if (g.neighbors(u) == g.neighbors(v)) {
                twin_pairs.emplace_back(v, u);
                used[v] = used[u] = 1;
                break;
            }
        }
    }

    // greedy matching within S2
    std::vector<char> in_s2(g.vertex_count(), 0);
    for (int v : cls.adjacent_type) in_s2[v] = 1;
    std::vector<char> matched(g.vertex_count(), 0);
    std::vector<std::pair<int, int>> matching;
    for (auto [u, v] : g.edges())
        if (in_s2[u] && in_s2[v] && !matched[u] && !matched[v]) {
            matching.emplace_back(u, v);
            matched[u] = matched[v] = 1;
        }

    if (twin_pairs.empty() && matching.empty()) return std::nullopt;
    if (twin_pairs.size() >= matching.size())
        return GrowthStep{GrowthKind::first, std::move(twin_pairs), 0};
    return GrowthStep{GrowthKind::second, std::move(matching), d};
}

Graph apply_reduction(const Graph& g, const GrowthStep& step) {
    const int n = g.vertex_count();
    std::vector<char> seen(n, 0);
    for (auto [u, v] : step.pairs) {
        if (u < 0 || v < 0 || u >= n || v >= n || u == v)
            throw std::invalid_argument("apply_reduction: pair out of range");
        if (seen[u] || seen[v]) throw std::invalid_argument("apply_reduction: pairs overlap");
        seen[u] = seen[v] = 1;
    }
    if (step.kind == GrowthKind::first) {
        VertexSet drop;
        for (auto [u, v] : step.pairs) {
            if (g.has_edge(u, v)) throw std::invalid_argument("apply_reduction: twin pair is adjacent");
            if (g.neighbors(u) != g.neighbors(v))
                throw std::invalid_argument("apply_reduction: pair is not a twin pair");
            drop.push_back(v);
        }
        return g.delete_vertices(drop);
    }
    for (auto [u, v] : step.pairs) {
        if (!g.has_edge(u, v)) throw std::invalid_argument("apply_reduction: pair is not an edge");
        if (g.degree(u) > step.degree_cap || g.degree(v) > step.degree_cap)
            throw std::invalid_argument("apply_reduction: endpoint exceeds the degree cap");
    }
    return contract_matching(g, step.pairs);
}

namespace {

struct ExpansionBuilder {
    const Graph& j;
    int k, d;
    long long budget;
    std::vector<Expansion> out;

    ExpansionBuilder(const Graph& j_, int k_, int d_, long long b) : j(j_), k(k_), d(d_), budget(b) {}

    void tick() {
        if (--budget < 0) throw BudgetError("enumerate_expansions: node budget exceeded");
    }

    // First kind: pick the duplicated set {u_1..u_k}; the growth is forced.
    void first_kind() {
        const int m = j.vertex_count();
        std::vector<int> pick;
        first_rec(0, m, pick);
    }

    void first_rec(int from, int m, std::vector<int>& pick) {
        tick();
        if (static_cast<int>(pick.size()) == k) {
            emit_first(pick, m);
            return;
        }
        for (int u = from; u < m; ++u) {
            pick.push_back(u);
            first_rec(u + 1, m, pick);
            pick.pop_back();
        }
    }

    void emit_first(const std::vector<int>& us, int m) {
        std::vector<std::pair<int, int>> edges = j.edges();
        for (int i = 0; i < k; ++i) {
            int ui = us[i], vi = m + i;
            for (int x : j.neighbors(ui)) edges.emplace_back(vi, x);
            for (int l = 0; l < i; ++l)
                if (j.has_edge(us[l], ui)) edges.emplace_back(m + l, vi);
        }
        GrowthStep step{GrowthKind::first, {}, 0};
        for (int i = 0; i < k; ++i) step.pairs.emplace_back(us[i], m + i);
        out.push_back({Graph::from_edges(m + k, edges), std::move(step)});
    }

    // Second kind: pick split vertices {w_1..w_k}, then distribute each of
    // their edges to one or both halves. Edges between two split vertices
    // take any nonempty subset of the four cross edges.
    void second_kind() {
        const int m = j.vertex_count();
        std::vector<int> pick;
        second_rec(0, m, pick);
    }

    void second_rec(int from, int m, std::vector<int>& pick) {
        tick();
        if (static_cast<int>(pick.size()) == k) {
            split(pick, m);
            return;
        }
        for (int w = from; w < m; ++w) {
            if (j.degree(w) > 2 * d - 2) continue;  // both halves would exceed d
            pick.push_back(w);
            second_rec(w + 1, m, pick);
            pick.pop_back();
        }
    }

    struct SplitEdge {
        int i;             // split index the edge belongs to
        int other;         // -1 when `partner` is another split index
        int partner;       // split index when other == -1
        int choices;       // 3 or 15
    };

    void split(const std::vector<int>& ws, int m) {
        std::vector<int> split_index(m, -1);
        for (int i = 0; i < k; ++i) split_index[ws[i]] = i;
        std::vector<SplitEdge> work;
        for (int i = 0; i < k; ++i)
            for (int x : j.neighbors(ws[i])) {
                int xi = split_index[x];
                if (xi < 0)
                    work.push_back({i, x, -1, 3});
                else if (xi > i)
                    work.push_back({i, -1, xi, 15});
            }
        std::vector<int> choice(work.size(), 0);
        enumerate_choices(ws, m, work, choice, 0);
    }

    void enumerate_choices(const std::vector<int>& ws, int m, const std::vector<SplitEdge>& work,
                           std::vector<int>& choice, size_t at) {
        tick();
        if (at == work.size()) {
            emit_second(ws, m, work, choice);
            return;
        }
        for (int c = 0; c < work[at].choices; ++c) {
            choice[at] = c;
            enumerate_choices(ws, m, work, choice, at + 1);
        }
    }

    void emit_second(const std::vector<int>& ws, int m, const std::vector<SplitEdge>& work,
                     const std::vector<int>& choice) {
        // u_i sits in w_i's slot, v_i is appended as vertex m+i
        auto u_of = [&](int i) { return ws[i]; };
        auto v_of = [&](int i) { return m + i; };
        std::vector<std::pair<int, int>> edges;
        std::vector<char> is_split(m, 0);
        for (int w : ws) is_split[w] = 1;
        for (auto [a, b] : j.edges())
            if (!is_split[a] && !is_split[b]) edges.emplace_back(a, b);
        for (int i = 0; i < k; ++i) edges.emplace_back(u_of(i), v_of(i));
        for (size_t e = 0; e < work.size(); ++e) {
            const SplitEdge& we = work[e];
            if (we.partner < 0) {
                // 0: u only, 1: v only, 2: both
                if (choice[e] != 1) edges.emplace_back(u_of(we.i), we.other);
                if (choice[e] != 0) edges.emplace_back(v_of(we.i), we.other);
            } else {
                int bits = choice[e] + 1;  // nonempty subset of the 4 cross edges
                int ends_a[2] = {u_of(we.i), v_of(we.i)};
                int ends_b[2] = {u_of(we.partner), v_of(we.partner)};
                for (int p = 0; p < 4; ++p)
                    if (bits >> p & 1) edges.emplace_back(ends_a[p / 2], ends_b[p % 2]);
            }
        }
        Graph g = Graph::from_edges(m + k, edges);
        for (int i = 0; i < k; ++i)
            if (g.degree(u_of(i)) > d || g.degree(v_of(i)) > d) return;
        GrowthStep step{GrowthKind::second, {}, d};
        for (int i = 0; i < k; ++i) step.pairs.emplace_back(u_of(i), v_of(i));
        out.push_back({std::move(g), std::move(step)});
    }
};

}  // namespace

std::vector<Expansion> enumerate_expansions_detailed(const Graph& j, int k, int d,
                                                     const GrowthLimits& limits) {
    if (k < 0) throw std::invalid_argument("enumerate_expansions: negative k");
    if (k == 0) return {{j, GrowthStep{}}};
    ExpansionBuilder builder(j, k, d, limits.node_budget);
    builder.first_kind();
    builder.second_kind();
    return std::move(builder.out);
}

std::vector<Graph> enumerate_expansions(const Graph& j, int k, int d, const GrowthLimits& limits) {
    auto detailed = enumerate_expansions_detailed(j, k, d, limits);
    std::map<std::string, Graph> by_canon;
    for (auto& exp : detailed) by_canon.emplace(canonical_form(exp.graph).g6, std::move(exp.graph));
    std::vector<Graph> out;
    for (auto& [key, g] : by_canon) out.push_back(std::move(g));
    return out;
}

}  // namespace sgt
