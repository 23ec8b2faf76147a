#pragma once

#include <cstdint>

#include "sgt/graph.hpp"

namespace sgt {

struct RegularSpec {
    int n = 0;
    int d = 0;
    std::uint64_t seed = 0;
};

/// Uniform random simple d-regular labelled graph via the configuration
/// model: pair up degree stubs uniformly, reject on loops or parallel
/// edges. Optionally rejects below a vertex-connectivity threshold.
/// Deterministic per seed. Throws std::invalid_argument when n*d is odd or
/// d >= n > 0.
Graph random_regular(const RegularSpec& spec, int min_connectivity = 0);

/// Natural log of the asymptotic count of labelled d-regular graphs on n
/// vertices, sqrt(2) e^{1-d^2/4} (d^d n^d / (e^d d!^2))^{n/2}.
double bender_canfield_log(int n, int d);
double bender_canfield_estimate(int n, int d);

}  // namespace sgt
