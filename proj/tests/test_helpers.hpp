#pragma once

#include <random>

#include "cis/graph.hpp"

namespace cis::testing {

inline Graph random_graph(std::mt19937& rng, int n, double p = 0.5) {
    std::bernoulli_distribution edge(p);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (edge(rng)) edges.emplace_back(i, j);
    return Graph::from_edges(n, edges);
}

} // namespace cis::testing
