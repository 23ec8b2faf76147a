#include "sgt/tangles.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

#include "sgt/errors.hpp"

namespace sgt {

namespace {

using Mask = std::uint64_t;

Mask full_mask(int n) { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

Mask set_to_mask(const VertexSet& s) {
    Mask m = 0;
    for (int v : s) m |= Mask{1} << v;
    return m;
}

VertexSet mask_to_set(Mask m) {
    VertexSet out;
    while (m) {
        out.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return out;
}

void check_size(const Graph& g) {
    if (g.vertex_count() > 64) throw std::invalid_argument("tangles: graph too large");
}

}  // namespace

int Separation::order() const { return std::popcount(left & right); }
VertexSet Separation::left_set() const { return mask_to_set(left); }
VertexSet Separation::right_set() const { return mask_to_set(right); }

bool is_separation(const Graph& g, const Separation& s) {
    const int n = g.vertex_count();
    if ((s.left | s.right) != full_mask(n)) return false;
    Mask lx = s.left & ~s.right, rx = s.right & ~s.left;
    auto adj = g.adjacency_masks();
    for (Mask m = lx; m;) {
        int v = std::countr_zero(m);
        m &= m - 1;
        if (adj[v] & rx) return false;
    }
    return true;
}

std::vector<Separation> enumerate_separations(const Graph& g, int theta, const TangleLimits& limits) {
    check_size(g);
    const int n = g.vertex_count();
    std::vector<Separation> out;
    if (theta <= 0) return out;

    // every separation is a separator S = left & right plus a whole-component
    // assignment of G - S to the two sides
    std::vector<int> sep;
    std::vector<int> label;
    std::vector<char> allowed(n, 1);
    auto emit_for_separator = [&](Mask smask) {
        for (int v = 0; v < n; ++v) allowed[v] = !(smask >> v & 1);
        int comps = g.components_within(allowed, &label);
        if (comps > 30) throw BudgetError("enumerate_separations: too many components");
        std::vector<Mask> comp_mask(comps, 0);
        for (int v = 0; v < n; ++v)
            if (label[v] >= 0) comp_mask[label[v]] |= Mask{1} << v;
        for (unsigned assign = 0; assign < (1u << comps); ++assign) {
            Mask left = smask, right = smask;
            for (int c = 0; c < comps; ++c)
                (assign >> c & 1 ? left : right) |= comp_mask[c];
            out.push_back({left, right});
            if (static_cast<long long>(out.size()) > limits.max_separations)
                throw BudgetError("enumerate_separations: budget exceeded");
        }
    };

    // separators of size < theta, by size then lexicographically
    std::vector<int> pick;
    auto rec = [&](auto&& self, int from, int want) -> void {
        if (static_cast<int>(pick.size()) == want) {
            emit_for_separator(set_to_mask(pick));
            return;
        }
        for (int v = from; v < n; ++v) {
            pick.push_back(v);
            self(self, v + 1, want);
            pick.pop_back();
        }
    };
    for (int size = 0; size < theta && size <= n; ++size) rec(rec, 0, size);
    std::sort(out.begin(), out.end());
    return out;
}

Separation separation_union(const Graph& g, const Separation& a, const Separation& b) {
    Separation u{a.left | b.left, a.right & b.right};
    if (!is_separation(g, u)) throw std::logic_error("separation_union: result is not a separation");
    return u;
}

Separation separation_intersection(const Graph& g, const Separation& a, const Separation& b) {
    Separation u{a.left & b.left, a.right | b.right};
    if (!is_separation(g, u)) throw std::logic_error("separation_intersection: result is not a separation");
    return u;
}

bool Tangle::contains(const Separation& s) const {
    return std::binary_search(members.begin(), members.end(), s);
}

namespace {

// Edge coverage bitmap of a left side: which edges have both ends inside.
std::vector<Mask> edge_words(const Graph& g, Mask left, int words) {
    std::vector<Mask> w(words, 0);
    int idx = 0;
    for (auto [u, v] : g.edges()) {
        if ((left >> u & 1) && (left >> v & 1)) w[idx / 64] |= Mask{1} << (idx % 64);
        ++idx;
    }
    return w;
}

}  // namespace

TangleCheck is_tangle(const Graph& g, int theta, const std::vector<Separation>& oriented,
                      const TangleLimits& limits) {
    check_size(g);
    const int n = g.vertex_count();
    const Mask all = full_mask(n);

    std::vector<Separation> members = oriented;
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    auto contains = [&](const Separation& s) {
        return std::binary_search(members.begin(), members.end(), s);
    };

    for (const Separation& s : members) {
        if (!is_separation(g, s) || s.order() >= theta)
            return {false, "member is not a separation of order below theta", {s}};
    }
    // axiom three first: no member's left side spans all vertices
    for (const Separation& s : members)
        if (s.left == all) return {false, "member left side covers every vertex", {s}};

    // axiom one: each separation oriented exactly once
    for (const Separation& s : enumerate_separations(g, theta, limits)) {
        bool fwd = contains(s), bwd = contains(s.flipped());
        if (s.left == s.right) {
            if (!fwd) return {false, "separation with equal sides is unoriented", {s}};
            continue;
        }
        if (fwd && bwd) return {false, "separation oriented both ways", {s, s.flipped()}};
        if (!fwd && !bwd) return {false, "separation left unoriented", {s}};
    }

    // axiom two: no three left sides cover the graph; maximal lefts suffice
    // because coverage is monotone in the left side
    std::vector<Separation> maximal;
    for (const Separation& s : members) {
        bool dominated = false;
        for (const Separation& t : members)
            if (t.left != s.left && (s.left & t.left) == s.left) {
                dominated = true;
                break;
            }
        if (!dominated) maximal.push_back(s);
    }
    const int ewords = (g.edge_count() + 63) / 64;
    std::vector<std::vector<Mask>> cover;
    cover.reserve(maximal.size());
    for (const Separation& s : maximal) cover.push_back(edge_words(g, s.left, ewords));
    Mask full_edges_last = g.edge_count() % 64 ? (Mask{1} << (g.edge_count() % 64)) - 1 : ~Mask{0};
    for (size_t i = 0; i < maximal.size(); ++i)
        for (size_t j = i; j < maximal.size(); ++j)
            for (size_t k = j; k < maximal.size(); ++k) {
                if ((maximal[i].left | maximal[j].left | maximal[k].left) != all) continue;
                bool edges_covered = true;
                for (int w = 0; w < ewords && edges_covered; ++w) {
                    Mask u = cover[i][w] | cover[j][w] | cover[k][w];
                    Mask want = (w == ewords - 1) ? full_edges_last : ~Mask{0};
                    if (u != want) edges_covered = false;
                }
                if (edges_covered)
                    return {false, "three member left sides cover the graph",
                            {maximal[i], maximal[j], maximal[k]}};
            }

    return {};
}

Tangle clique_minor_tangle(const Graph& g, const MinorModel& model, int theta,
                           const TangleLimits& limits) {
    check_size(g);
    const int t = static_cast<int>(model.branch_sets.size());
    if (t < (3 * theta + 1) / 2)
        throw std::invalid_argument("clique_minor_tangle: needs at least ceil(3*theta/2) branch sets");
    std::string why;
    if (!verify_minor_model(g, complete_graph(t), model, &why))
        throw std::invalid_argument("clique_minor_tangle: invalid clique minor model: " + why);

    std::vector<Mask> cmask;
    for (const auto& s : model.branch_sets) cmask.push_back(set_to_mask(s));

    std::vector<Separation> members;
    for (const Separation& s : enumerate_separations(g, theta, limits)) {
        Mask right_excl = s.right & ~s.left;
        Mask left_excl = s.left & ~s.right;
        bool right_has = false, left_has = false;
        for (Mask m : cmask) {
            right_has = right_has || (m & ~right_excl) == 0;
            left_has = left_has || (m & ~left_excl) == 0;
        }
        if (right_has == left_has)
            throw std::invalid_argument(
                "clique_minor_tangle: orientation ill-defined (branch sets too small or too few)");
        if (right_has) members.push_back(s);
    }
    TangleCheck check = is_tangle(g, theta, members, limits);
    if (!check.ok)
        throw std::invalid_argument("clique_minor_tangle: axioms fail: " + check.violation);
    std::sort(members.begin(), members.end());
    return Tangle{g, theta, std::move(members)};
}

RestrictedTangle restrict_tangle(const Tangle& t, const VertexSet& w, const TangleLimits& limits) {
    const Mask wmask = set_to_mask(w);
    const int wsize = std::popcount(wmask);
    if (wsize >= t.theta) throw std::invalid_argument("restrict_tangle: |W| must be below theta");

    std::vector<int> old_to_new;
    Graph reduced = t.graph.delete_vertices(mask_to_set(wmask), &old_to_new);
    auto remap = [&](Mask m) {
        Mask out = 0;
        while (m) {
            int v = std::countr_zero(m);
            m &= m - 1;
            if (old_to_new[v] >= 0) out |= Mask{1} << old_to_new[v];
        }
        return out;
    };

    std::vector<Separation> members;
    for (const Separation& s : t.members) {
        if ((s.left & s.right & wmask) != wmask) continue;
        members.push_back({remap(s.left), remap(s.right)});
    }
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());

    TangleCheck check = is_tangle(reduced, t.theta - wsize, members, limits);
    if (!check.ok)
        throw std::logic_error("restrict_tangle: restriction is not a tangle: " + check.violation);
    return {Tangle{std::move(reduced), t.theta - wsize, std::move(members)}, std::move(old_to_new)};
}

int rank(const Tangle& t, const VertexSet& x) {
    const Mask xmask = set_to_mask(x);
    int best = t.theta;
    for (const Separation& s : t.members)
        if ((xmask & ~s.left) == 0) best = std::min(best, s.order());
    return best;
}

bool is_free(const Tangle& t, const VertexSet& x) {
    return rank(t, x) == static_cast<int>(sorted_unique(x).size());
}

void validate_nexus(const Graph& g, const Nexus& nexus) {
    if (nexus.center < 0 || nexus.center >= g.vertex_count())
        throw std::invalid_argument("nexus: center out of range");
    for (const auto& p : nexus.paths) {
        if (p.empty() || p.front() != nexus.center)
            throw std::invalid_argument("nexus: path must start at the center");
        for (size_t i = 0; i + 1 < p.size(); ++i)
            if (!g.has_edge(p[i], p[i + 1])) throw std::invalid_argument("nexus: path step is not an edge");
        auto sorted = p;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("nexus: path repeats a vertex");
    }
}

VertexSet nexus_vertices(const Nexus& nexus) {
    VertexSet all;
    for (const auto& p : nexus.paths) all.insert(all.end(), p.begin(), p.end());
    return sorted_unique(std::move(all));
}

int nexus_rank(const Tangle& t, const Nexus& nexus) {
    validate_nexus(t.graph, nexus);
    return rank(t, nexus_vertices(nexus));
}

Separation max_separation(const Tangle& t, const VertexSet& w) {
    const Mask wmask = set_to_mask(w);
    const int wsize = std::popcount(wmask);
    if (wsize >= t.theta) throw std::invalid_argument("max_separation: |W| must be below theta");
    if (!is_free(t, w)) throw std::invalid_argument("max_separation: W is not free");
    Mask left = 0, right = full_mask(t.graph.vertex_count());
    bool any = false;
    for (const Separation& s : t.members) {
        if (s.order() != wsize || (wmask & ~s.left)) continue;
        left |= s.left;
        right &= s.right;
        any = true;
    }
    if (!any) throw std::logic_error("max_separation: no member of order |W| holds W");
    Separation u{left, right};
    if (!t.contains(u) || u.order() != wsize)
        throw std::logic_error("max_separation: union of the candidates is not a member of order |W|");
    return u;
}

SearchResult<FreeFan> find_free_fans(const Graph& g, const Tangle& t, int s, int d,
                                     const SearchLimits& limits) {
    if (s < 0 || d < 0) throw std::invalid_argument("find_free_fans: negative parameters");
    if (s > 2) throw std::invalid_argument("find_free_fans: s above 2 is not supported");
    if (s == 0) return {SearchStatus::found, FreeFan{}};
    if (d > g.max_degree()) return {SearchStatus::absent, std::nullopt};
    if (s >= t.theta) return {SearchStatus::absent, std::nullopt};

    long long budget = limits.node_budget;
    const int n = g.vertex_count();

    std::vector<int> centers(s);
    std::vector<VertexSet> fans(s);

    // all d-subsets of `from`
    auto subsets = [&](const std::vector<int>& from) {
        std::vector<VertexSet> out;
        VertexSet cur;
        auto rec = [&](auto&& self, size_t at) -> void {
            if (static_cast<int>(cur.size()) == d) {
                out.push_back(cur);
                return;
            }
            if (from.size() - at < d - cur.size()) return;
            for (size_t i = at; i < from.size(); ++i) {
                cur.push_back(from[i]);
                self(self, i + 1);
                cur.pop_back();
            }
        };
        rec(rec, 0);
        return out;
    };

    auto try_centers = [&](const std::vector<int>& zs) -> std::optional<FreeFan> {
        RestrictedTangle rt = restrict_tangle(t, zs);
        std::vector<std::vector<int>> nbrs(s);
        for (int i = 0; i < s; ++i)
            for (int v : g.neighbors(zs[i]))
                if (rt.old_to_new[v] >= 0) nbrs[i].push_back(v);
        for (auto& vs : nbrs)
            if (static_cast<int>(vs.size()) < d) return std::nullopt;

        auto check = [&](const std::vector<VertexSet>& ws) -> bool {
            if (--budget < 0) throw BudgetError("find_free_fans: budget exceeded");
            VertexSet all;
            for (const auto& w : ws) all.insert(all.end(), w.begin(), w.end());
            if (sorted_unique(all).size() != all.size()) return false;  // fans overlap
            VertexSet mapped;
            for (int v : all) mapped.push_back(rt.old_to_new[v]);
            return is_free(rt.tangle, mapped);
        };

        auto w1s = subsets(nbrs[0]);
        if (s == 1) {
            for (auto& w1 : w1s)
                if (check({w1})) return FreeFan{zs, {w1}};
            return std::nullopt;
        }
        auto w2s = subsets(nbrs[1]);
        for (auto& w1 : w1s)
            for (auto& w2 : w2s)
                if (check({w1, w2})) return FreeFan{zs, {w1, w2}};
        return std::nullopt;
    };

    try {
        if (s == 1) {
            for (int z = 0; z < n; ++z)
                if (auto fan = try_centers({z})) return {SearchStatus::found, std::move(*fan)};
        } else {
            for (int z1 = 0; z1 < n; ++z1)
                for (int z2 = z1 + 1; z2 < n; ++z2)
                    if (auto fan = try_centers({z1, z2})) return {SearchStatus::found, std::move(*fan)};
        }
    } catch (const BudgetError&) {
        return {SearchStatus::out_of_budget, std::nullopt};
    }
    return {SearchStatus::absent, std::nullopt};
}

}  // namespace sgt
