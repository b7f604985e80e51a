#include "wdeg/corpus.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace wdeg::corpus {

Graph path(std::size_t n) {
    std::vector<Edge> edges;
    for (std::size_t i = 1; i < n; ++i) edges.emplace_back(static_cast<Vertex>(i - 1), static_cast<Vertex>(i));
    return Graph(n, edges);
}

Graph cycle(std::size_t n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
    return Graph(n, edges);
}

Graph complete(std::size_t n) {
    std::vector<Edge> edges;
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    return Graph(n, edges);
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
    std::vector<Edge> edges;
    for (std::size_t u = 0; u < a; ++u) {
        for (std::size_t v = 0; v < b; ++v) edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(a + v));
    }
    return Graph(a + b, edges);
}

Graph edgeless(std::size_t n) { return Graph(n); }

Graph star(std::size_t leaves) {
    std::vector<Edge> edges;
    for (std::size_t i = 1; i <= leaves; ++i) edges.emplace_back(0, static_cast<Vertex>(i));
    return Graph(leaves + 1, edges);
}

Graph prism() {
    const std::vector<Edge> edges{{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}};
    return Graph(6, edges);
}

Graph cube() {
    std::vector<Edge> edges;
    for (Vertex v = 0; v < 8; ++v) {
        for (int b = 0; b < 3; ++b) {
            const Vertex w = v ^ (1 << b);
            if (v < w) edges.emplace_back(v, w);
        }
    }
    return Graph(8, edges);
}

Graph petersen() {
    std::vector<Edge> edges;
    for (Vertex i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);          // outer cycle
        edges.emplace_back(i, i + 5);                // spokes
        edges.emplace_back(i + 5, (i + 2) % 5 + 5);  // inner pentagram
    }
    return Graph(10, edges);
}

Graph complement(const Graph& g) {
    std::vector<Edge> edges;
    const auto live = g.live_vertices();
    for (std::size_t i = 0; i < live.size(); ++i) {
        for (std::size_t j = i + 1; j < live.size(); ++j) {
            if (!g.adjacent(live[i], live[j])) edges.emplace_back(live[i], live[j]);
        }
    }
    Graph out(g.order(), edges);
    for (Vertex v = 0; static_cast<std::size_t>(v) < g.order(); ++v) {
        if (!g.is_live(v)) out.erase(v);
    }
    return out;
}

Graph disjoint_union(const Graph& lhs, const Graph& rhs) {
    auto edges = lhs.edges();
    const auto shift = static_cast<Vertex>(lhs.order());
    for (const auto& [u, v] : rhs.edges()) edges.emplace_back(u + shift, v + shift);
    return Graph(lhs.order() + rhs.order(), edges);
}

std::vector<Named> regular_graphs() {
    std::vector<Named> out;
    for (std::size_t n = 3; n <= 10; ++n) out.push_back({"C" + std::to_string(n), cycle(n)});
    for (std::size_t n = 4; n <= 6; ++n) out.push_back({"K" + std::to_string(n), complete(n)});
    out.push_back({"K3,3", complete_bipartite(3, 3)});
    out.push_back({"prism", prism()});
    out.push_back({"Q3", cube()});
    out.push_back({"Petersen", petersen()});
    out.push_back({"K4,4", complete_bipartite(4, 4)});
    out.push_back({"co-C6", complement(cycle(6))});
    return out;
}

namespace {

struct PairIndex {
    std::vector<Edge> pairs;
    std::vector<std::vector<int>> index;  // index[u][v] = bit position

    explicit PairIndex(std::size_t n) : index(n, std::vector<int>(n, -1)) {
        for (std::size_t u = 0; u < n; ++u) {
            for (std::size_t v = u + 1; v < n; ++v) {
                index[u][v] = index[v][u] = static_cast<int>(pairs.size());
                pairs.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
            }
        }
    }
};

bool connected(std::uint32_t mask, std::size_t n, const PairIndex& idx) {
    std::vector<char> seen(n, 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
        const auto u = stack.back();
        stack.pop_back();
        for (std::size_t v = 0; v < n; ++v) {
            if (!seen[v] && u != v && (mask >> idx.index[u][v] & 1U)) {
                seen[v] = 1;
                ++count;
                stack.push_back(v);
            }
        }
    }
    return count == n;
}

}  // namespace

std::vector<Graph> connected_graphs(std::size_t n) {
    if (n == 0 || n > 7) throw std::invalid_argument("connected_graphs supports 1..7 vertices");
    const PairIndex idx(n);
    const std::size_t m = idx.pairs.size();

    std::vector<std::vector<std::size_t>> perms;
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));

    std::vector<char> visited(std::size_t{1} << m, 0);
    std::vector<Graph> out;
    // The canonical form is the smallest mask in the orbit; scanning masks in
    // increasing order meets every orbit at its minimum first.
    for (std::uint32_t mask = 0; mask < (1U << m); ++mask) {
        if (visited[mask]) continue;
        for (const auto& perm : perms) {
            std::uint32_t image = 0;
            for (std::size_t e = 0; e < m; ++e) {
                if (mask >> e & 1U) image |= 1U << idx.index[perm[idx.pairs[e].first]][perm[idx.pairs[e].second]];
            }
            visited[image] = 1;
        }
        if (!connected(mask, n, idx)) continue;
        std::vector<Edge> edges;
        for (std::size_t e = 0; e < m; ++e) {
            if (mask >> e & 1U) edges.push_back(idx.pairs[e]);
        }
        out.emplace_back(n, edges);
    }
    return out;
}

std::vector<Graph> random_graphs(std::size_t count, std::size_t min_n, std::size_t max_n, std::uint64_t seed) {
    if (min_n > max_n) throw std::invalid_argument("random_graphs: min_n > max_n");
    std::mt19937_64 rng(seed);
    std::vector<Graph> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t n = min_n + static_cast<std::size_t>(rng() % (max_n - min_n + 1));
        std::vector<Edge> edges;
        for (std::size_t u = 0; u < n; ++u) {
            for (std::size_t v = u + 1; v < n; ++v) {
                if (rng() >> 63) edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
            }
        }
        out.emplace_back(n, edges);
    }
    return out;
}

}  // namespace wdeg::corpus
