#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "sgt/canonical.hpp"
#include "sgt/graph.hpp"

namespace sgt {

struct EnumOptions {
    long long max_classes_per_level = 5'000'000;
    int threads = 1;
};

/// One representative per isomorphism class of n-vertex graphs satisfying
/// `pred` (empty pred keeps everything). Built by vertex augmentation with
/// canonical-form deduplication; `prune`, when given, must be hereditary
/// under vertex deletion and cuts levels early.
std::vector<Graph> enumerate_unlabelled(int n, const std::function<bool(const Graph&)>& pred = {},
                                        const std::function<bool(const Graph&)>& prune = {},
                                        const EnumOptions& opts = {});

struct ClassConstraints {
    std::optional<int> min_degree;
    std::optional<int> max_degree;
    std::optional<int> connectivity;  // vertex connectivity >= value
    std::optional<Graph> forbidden_subdivision;
    std::optional<Graph> forbidden_minor;
};

std::vector<Graph> enumerate_class(int n, const ClassConstraints& c, const EnumOptions& opts = {});
long count_class(int n, const ClassConstraints& c, const EnumOptions& opts = {});

}  // namespace sgt
