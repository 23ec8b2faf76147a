#include "sgt/randgen.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace sgt {

Graph random_regular(const RegularSpec& spec, int min_connectivity) {
    const auto [n, d, seed] = spec;
    if (n < 0 || d < 0) throw std::invalid_argument("random_regular: negative parameters");
    if (static_cast<long long>(n) * d % 2 != 0)
        throw std::invalid_argument("random_regular: n*d must be even");
    if (n > 0 && d >= n) throw std::invalid_argument("random_regular: d must be below n");
    if (n == 0) return Graph::from_edges(0, {});

    std::mt19937_64 rng(seed);
    std::vector<int> stubs(static_cast<size_t>(n) * d);
    for (int v = 0; v < n; ++v)
        for (int i = 0; i < d; ++i) stubs[static_cast<size_t>(v) * d + i] = v;

    constexpr long kMaxTries = 10'000'000;
    for (long tries = 0; tries < kMaxTries; ++tries) {
        std::shuffle(stubs.begin(), stubs.end(), rng);
        std::vector<std::pair<int, int>> edges;
        bool simple = true;
        for (size_t i = 0; i + 1 < stubs.size() && simple; i += 2) {
            int u = stubs[i], v = stubs[i + 1];
            if (u == v) simple = false;
            edges.emplace_back(std::min(u, v), std::max(u, v));
        }
        if (simple) {
            std::sort(edges.begin(), edges.end());
            simple = std::adjacent_find(edges.begin(), edges.end()) == edges.end();
        }
        if (!simple) continue;
        Graph g = Graph::from_edges(n, edges);
        if (min_connectivity > 0 && vertex_connectivity(g) < min_connectivity) continue;
        return g;
    }
    throw std::runtime_error("random_regular: rejection sampling did not converge");
}

double bender_canfield_log(int n, int d) {
    if (n < 0 || d < 0) throw std::invalid_argument("bender_canfield: negative parameters");
    if (static_cast<long long>(n) * d % 2 != 0)
        throw std::invalid_argument("bender_canfield: n*d must be even");
    const double m = n;
    double per_pair = 0.0;
    if (d > 0 && n > 0)
        per_pair = d * std::log(static_cast<double>(d)) + d * std::log(m) - d -
                   2.0 * std::lgamma(d + 1.0);
    return 0.5 * std::log(2.0) + (1.0 - d * d / 4.0) + (m / 2.0) * per_pair;
}

double bender_canfield_estimate(int n, int d) { return std::exp(bender_canfield_log(n, d)); }

}  // namespace sgt
