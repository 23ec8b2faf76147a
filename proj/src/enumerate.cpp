#include "sgt/enumerate.hpp"

#include <atomic>
#include <map>
#include <stdexcept>
#include <thread>

#include "sgt/containment.hpp"
#include "sgt/errors.hpp"
#include "sgt/graph6.hpp"

namespace sgt {

namespace {

// Evaluate pred over items, optionally on several threads; order-stable.
std::vector<char> parallel_filter(const std::vector<Graph>& items,
                                  const std::function<bool(const Graph&)>& pred, int threads) {
    std::vector<char> keep(items.size(), 1);
    if (!pred) return keep;
    if (threads <= 1 || items.size() < 64) {
        for (size_t i = 0; i < items.size(); ++i) keep[i] = pred(items[i]) ? 1 : 0;
        return keep;
    }
    std::vector<std::thread> pool;
    std::atomic<size_t> next{0};
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (size_t i = next.fetch_add(16); i < items.size(); i = next.fetch_add(16))
                for (size_t j = i; j < std::min(i + 16, items.size()); ++j) keep[j] = pred(items[j]) ? 1 : 0;
        });
    for (auto& th : pool) th.join();
    return keep;
}

}  // namespace

std::vector<Graph> enumerate_unlabelled(int n, const std::function<bool(const Graph&)>& pred,
                                        const std::function<bool(const Graph&)>& prune,
                                        const EnumOptions& opts) {
    if (n < 0) throw std::invalid_argument("enumerate_unlabelled: negative n");
    if (n == 0) return {};

    std::vector<Graph> level = {complete_graph(1)};
    for (int k = 2; k <= n; ++k) {
        std::map<std::string, Graph> next;
        for (const Graph& base : level) {
            const int nb = base.vertex_count();
            for (unsigned s = 0; s < (1u << nb); ++s) {
                std::vector<std::pair<int, int>> edges = base.edges();
                for (int v = 0; v < nb; ++v)
                    if (s >> v & 1) edges.emplace_back(v, nb);
                Graph g = Graph::from_edges(nb + 1, edges);
                if (prune && !prune(g)) continue;
                std::string key = canonical_form(g).g6;
                if (next.size() >= static_cast<size_t>(opts.max_classes_per_level) && !next.count(key))
                    throw BudgetError("enumerate_unlabelled: class budget exceeded");
                next.emplace(std::move(key), std::move(g));
            }
        }
        level.clear();
        for (auto& [key, g] : next) level.push_back(std::move(g));
    }
    if (!pred) return level;
    auto keep = parallel_filter(level, pred, opts.threads);
    std::vector<Graph> out;
    for (size_t i = 0; i < level.size(); ++i)
        if (keep[i]) out.push_back(std::move(level[i]));
    return out;
}

std::vector<Graph> enumerate_class(int n, const ClassConstraints& c, const EnumOptions& opts) {
    std::function<bool(const Graph&)> prune;
    if (c.max_degree || c.forbidden_minor || c.forbidden_subdivision) {
        prune = [&c](const Graph& g) {
            if (c.max_degree && g.max_degree() > *c.max_degree) return false;
            // minor and subdivision containment are monotone under taking
            // supergraphs, so hits can be discarded at any level
            if (c.forbidden_minor && contains_minor(g, *c.forbidden_minor).found()) return false;
            if (c.forbidden_subdivision && contains_subdivision(g, *c.forbidden_subdivision).found())
                return false;
            return true;
        };
    }
    auto pred = [&c](const Graph& g) {
        if (c.min_degree && g.min_degree() < *c.min_degree) return false;
        if (c.max_degree && g.max_degree() > *c.max_degree) return false;
        if (c.connectivity && vertex_connectivity(g) < *c.connectivity) return false;
        if (c.forbidden_minor && !contains_minor(g, *c.forbidden_minor).absent()) return false;
        if (c.forbidden_subdivision && !contains_subdivision(g, *c.forbidden_subdivision).absent())
            return false;
        return true;
    };
    return enumerate_unlabelled(n, pred, prune, opts);
}

long count_class(int n, const ClassConstraints& c, const EnumOptions& opts) {
    return static_cast<long>(enumerate_class(n, c, opts).size());
}

}  // namespace sgt
