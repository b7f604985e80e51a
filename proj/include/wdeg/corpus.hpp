#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wdeg/graph.hpp"

namespace wdeg::corpus {

struct Named {
    std::string name;
    Graph graph;
};

Graph path(std::size_t n);
Graph cycle(std::size_t n);
Graph complete(std::size_t n);
Graph complete_bipartite(std::size_t a, std::size_t b);
Graph edgeless(std::size_t n);
Graph star(std::size_t leaves);
Graph prism();      // C3 x K2
Graph cube();       // Q3
Graph petersen();
Graph complement(const Graph& g);
Graph disjoint_union(const Graph& lhs, const Graph& rhs);

/// C3..C10, K4, K5, K6, K3,3, the prism, Q3, Petersen, K4,4, complement of C6.
std::vector<Named> regular_graphs();

/// One representative per isomorphism class of connected graphs on exactly
/// n vertices (n <= 7), in order of their canonical edge bitmask.
std::vector<Graph> connected_graphs(std::size_t n);

/// G(n, 1/2) with n drawn from [min_n, max_n]; driven by std::mt19937_64
/// raw output so the sequence is the same on every platform.
std::vector<Graph> random_graphs(std::size_t count, std::size_t min_n, std::size_t max_n, std::uint64_t seed);

}  // namespace wdeg::corpus
