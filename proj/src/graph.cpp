#include "sgt/graph.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace sgt {

VertexSet sorted_unique(VertexSet v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    Graph g;
    g.adj_.assign(n, {});
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("loop edge");
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& nb : g.adj_) nb = sorted_unique(std::move(nb));
    return g;
}

int Graph::edge_count() const {
    int total = 0;
    for (const auto& nb : adj_) total += static_cast<int>(nb.size());
    return total / 2;
}

bool Graph::has_edge(int u, int v) const {
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

int Graph::min_degree() const {
    int d = vertex_count() == 0 ? 0 : static_cast<int>(adj_[0].size());
    for (const auto& nb : adj_) d = std::min(d, static_cast<int>(nb.size()));
    return d;
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& nb : adj_) d = std::max(d, static_cast<int>(nb.size()));
    return d;
}

bool Graph::is_regular(int d) const {
    for (const auto& nb : adj_)
        if (static_cast<int>(nb.size()) != d) return false;
    return true;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < vertex_count(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::vector<std::uint64_t> Graph::adjacency_masks() const {
    if (vertex_count() > 64) throw std::invalid_argument("adjacency_masks: more than 64 vertices");
    std::vector<std::uint64_t> rows(vertex_count(), 0);
    for (int u = 0; u < vertex_count(); ++u)
        for (int v : adj_[u]) rows[u] |= std::uint64_t{1} << v;
    return rows;
}

Graph Graph::induced(const VertexSet& keep, std::vector<int>* old_to_new) const {
    VertexSet ks = sorted_unique(keep);
    std::vector<int> map(vertex_count(), -1);
    for (int i = 0; i < static_cast<int>(ks.size()); ++i) {
        if (ks[i] < 0 || ks[i] >= vertex_count())
            throw std::invalid_argument("induced: vertex out of range");
        map[ks[i]] = i;
    }
    Graph g;
    g.adj_.assign(ks.size(), {});
    for (int i = 0; i < static_cast<int>(ks.size()); ++i)
        for (int v : adj_[ks[i]])
            if (map[v] >= 0) g.adj_[i].push_back(map[v]);
    // neighbor lists inherit sortedness from the increasing old order
    if (old_to_new) *old_to_new = std::move(map);
    return g;
}

Graph Graph::delete_vertex(int v, std::vector<int>* old_to_new) const {
    return delete_vertices({v}, old_to_new);
}

Graph Graph::delete_vertices(const VertexSet& drop, std::vector<int>* old_to_new) const {
    std::vector<char> dropped(vertex_count(), 0);
    for (int v : drop) {
        if (v < 0 || v >= vertex_count()) throw std::invalid_argument("delete: vertex out of range");
        dropped[v] = 1;
    }
    VertexSet keep;
    for (int v = 0; v < vertex_count(); ++v)
        if (!dropped[v]) keep.push_back(v);
    return induced(keep, old_to_new);
}

Graph Graph::relabel(const std::vector<int>& old_to_new) const {
    if (static_cast<int>(old_to_new.size()) != vertex_count())
        throw std::invalid_argument("relabel: size mismatch");
    Graph g;
    g.adj_.assign(vertex_count(), {});
    for (int u = 0; u < vertex_count(); ++u)
        for (int v : adj_[u]) g.adj_[old_to_new[u]].push_back(old_to_new[v]);
    for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
    return g;
}

bool Graph::is_connected() const {
    if (vertex_count() <= 1) return true;
    return component_count() == 1;
}

int Graph::component_count() const {
    std::vector<char> all(vertex_count(), 1);
    return components_within(all, nullptr);
}

int Graph::components_within(const std::vector<char>& allowed, std::vector<int>* label) const {
    std::vector<int> lab(vertex_count(), -1);
    int count = 0;
    std::vector<int> stack;
    for (int s = 0; s < vertex_count(); ++s) {
        if (!allowed[s] || lab[s] >= 0) continue;
        lab[s] = count;
        stack.push_back(s);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : adj_[u])
                if (allowed[v] && lab[v] < 0) {
                    lab[v] = count;
                    stack.push_back(v);
                }
        }
        ++count;
    }
    if (label) *label = std::move(lab);
    return count;
}

namespace {

// Dinic on a small residual network; capacities reset between queries.
struct FlowNet {
    struct Arc {
        int to, rev, cap;
    };
    std::vector<std::vector<Arc>> arcs;
    std::vector<int> level, iter;

    explicit FlowNet(int n) : arcs(n), level(n), iter(n) {}

    void add(int u, int v, int cap) {
        arcs[u].push_back({v, static_cast<int>(arcs[v].size()), cap});
        arcs[v].push_back({u, static_cast<int>(arcs[u].size()) - 1, 0});
    }

    bool bfs(int s, int t) {
        std::fill(level.begin(), level.end(), -1);
        std::queue<int> q;
        level[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (const Arc& a : arcs[u])
                if (a.cap > 0 && level[a.to] < 0) {
                    level[a.to] = level[u] + 1;
                    q.push(a.to);
                }
        }
        return level[t] >= 0;
    }

    int dfs(int u, int t, int f) {
        if (u == t) return f;
        for (int& i = iter[u]; i < static_cast<int>(arcs[u].size()); ++i) {
            Arc& a = arcs[u][i];
            if (a.cap > 0 && level[a.to] == level[u] + 1) {
                int got = dfs(a.to, t, std::min(f, a.cap));
                if (got > 0) {
                    a.cap -= got;
                    arcs[a.to][a.rev].cap += got;
                    return got;
                }
            }
        }
        return 0;
    }

    // Max flow, stopping early once `limit` is reached.
    int max_flow(int s, int t, int limit) {
        int flow = 0;
        while (flow < limit && bfs(s, t)) {
            std::fill(iter.begin(), iter.end(), 0);
            int f;
            while (flow < limit && (f = dfs(s, t, limit - flow)) > 0) flow += f;
        }
        return flow;
    }
};

// Internally disjoint s-t paths via the vertex-split network.
int vertex_flow(const Graph& g, int s, int t, int limit) {
    const int n = g.vertex_count();
    const int big = n + 1;
    FlowNet net(2 * n);
    for (int v = 0; v < n; ++v) net.add(2 * v, 2 * v + 1, v == s || v == t ? big : 1);
    for (auto [u, v] : g.edges()) {
        net.add(2 * u + 1, 2 * v, big);
        net.add(2 * v + 1, 2 * u, big);
    }
    return net.max_flow(2 * s + 1, 2 * t, limit);
}

int edge_flow(const Graph& g, int s, int t, int limit) {
    FlowNet net(g.vertex_count());
    for (auto [u, v] : g.edges()) {
        net.add(u, v, 1);
        net.add(v, u, 1);
    }
    return net.max_flow(s, t, limit);
}

}  // namespace

int vertex_connectivity(const Graph& g) {
    const int n = g.vertex_count();
    if (n <= 1) return 0;
    if (!g.is_connected()) return 0;

    bool complete = true;
    for (int v = 0; v < n && complete; ++v) complete = g.degree(v) == n - 1;
    if (complete) return n - 1;

    // A minimum cut misses some vertex of {v0} u N(v0) when v0 has minimum
    // degree, so those suffice as sources.
    int v0 = 0;
    for (int v = 1; v < n; ++v)
        if (g.degree(v) < g.degree(v0)) v0 = v;
    std::vector<int> sources = {v0};
    sources.insert(sources.end(), g.neighbors(v0).begin(), g.neighbors(v0).end());

    int best = n - 1;
    for (int s : sources)
        for (int t = 0; t < n; ++t) {
            if (t == s || g.has_edge(s, t)) continue;
            best = std::min(best, vertex_flow(g, s, t, best));
        }
    return best;
}

int edge_connectivity(const Graph& g) {
    const int n = g.vertex_count();
    if (n <= 1) return 0;
    if (!g.is_connected()) return 0;
    int best = g.min_degree();
    for (int t = 1; t < n && best > 0; ++t) best = std::min(best, edge_flow(g, 0, t, best));
    return best;
}

std::vector<std::pair<int, int>> nonadjacent_twins(const Graph& g) {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v) {
            if (g.has_edge(u, v)) continue;
            // nonadjacent, so twin <=> identical neighbor lists
            if (g.neighbors(u) == g.neighbors(v)) out.emplace_back(u, v);
        }
    return out;
}

Graph contract_matching(const Graph& g, const std::vector<std::pair<int, int>>& m) {
    const int n = g.vertex_count();
    std::vector<int> rep(n);
    std::iota(rep.begin(), rep.end(), 0);
    std::vector<char> touched(n, 0);
    for (auto [u, v] : m) {
        if (u < 0 || v < 0 || u >= n || v >= n || u == v)
            throw std::invalid_argument("contract_matching: bad pair");
        if (!g.has_edge(u, v)) throw std::invalid_argument("contract_matching: pair is not an edge");
        if (touched[u] || touched[v]) throw std::invalid_argument("contract_matching: pairs overlap");
        touched[u] = touched[v] = 1;
        rep[std::max(u, v)] = std::min(u, v);
    }
    std::vector<int> newid(n, -1);
    int next = 0;
    for (int v = 0; v < n; ++v)
        if (rep[v] == v) newid[v] = next++;
    std::vector<std::pair<int, int>> edges;
    for (auto [a, b] : g.edges()) {
        int ra = newid[rep[a]], rb = newid[rep[b]];
        if (ra != rb) edges.emplace_back(ra, rb);
    }
    return Graph::from_edges(next, edges);
}

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph::from_edges(n, e);
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
    return Graph::from_edges(n, e);
}

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
    return Graph::from_edges(n, e);
}

Graph complete_bipartite(int a, int b) {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) e.emplace_back(u, a + v);
    return Graph::from_edges(a + b, e);
}

Graph petersen_graph() {
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v < 5; ++v) {
        e.emplace_back(v, (v + 1) % 5);          // outer 5-cycle
        e.emplace_back(5 + v, 5 + (v + 2) % 5);  // inner pentagram
        e.emplace_back(v, 5 + v);                // spokes
    }
    return Graph::from_edges(10, e);
}

Graph cube_graph() {
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v < 8; ++v)
        for (int bit = 0; bit < 3; ++bit)
            if (int w = v ^ (1 << bit); v < w) e.emplace_back(v, w);
    return Graph::from_edges(8, e);
}

Graph prism_graph() {
    return Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
}

Graph octahedron_graph() {
    // K_{2,2,2}: all edges except the three diagonals {0,3},{1,4},{2,5}
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < 6; ++u)
        for (int v = u + 1; v < 6; ++v)
            if (v - u != 3) e.emplace_back(u, v);
    return Graph::from_edges(6, e);
}

Graph circulant_graph(int n, const std::vector<int>& offsets) {
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v < n; ++v)
        for (int off : offsets) e.emplace_back(v, (v + off) % n);
    return Graph::from_edges(n, e);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<std::pair<int, int>> e = a.edges();
    for (auto [u, v] : b.edges()) e.emplace_back(a.vertex_count() + u, a.vertex_count() + v);
    return Graph::from_edges(a.vertex_count() + b.vertex_count(), e);
}

Graph add_universal_vertex(const Graph& g) {
    std::vector<std::pair<int, int>> e = g.edges();
    for (int v = 0; v < g.vertex_count(); ++v) e.emplace_back(v, g.vertex_count());
    return Graph::from_edges(g.vertex_count() + 1, e);
}

Graph named_graph(const std::string& name) {
    std::string s;
    for (char c : name) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (s == "petersen") return petersen_graph();
    if (s == "cube") return cube_graph();
    if (s == "prism") return prism_graph();
    if (s == "octahedron") return octahedron_graph();
    auto numeric_suffix = [&](char prefix) -> int {
        if (s.size() < 2 || s[0] != prefix) return -1;
        for (size_t i = 1; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return -1;
        return std::stoi(s.substr(1));
    };
    if (int n = numeric_suffix('k'); n >= 0) return complete_graph(n);
    if (int n = numeric_suffix('c'); n >= 0) return cycle_graph(n);
    throw std::invalid_argument("unknown graph name: " + name);
}

}  // namespace sgt
