#include "wdeg/solver.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstring>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace wdeg {

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(int i) { return Mask{1} << i; }

/// Live vertices renumbered 0..m-1 with bitmask adjacency.
struct Compact {
    std::vector<Vertex> ids;
    std::vector<Mask> adj;

    explicit Compact(const Graph& g) : ids(g.live_vertices()), adj(ids.size(), 0) {
        std::vector<int> index(g.order(), -1);
        for (std::size_t i = 0; i < ids.size(); ++i) index[ids[i]] = static_cast<int>(i);
        for (std::size_t i = 0; i < ids.size(); ++i) {
            for (Vertex v : g.neighbors(ids[i])) {
                if (index[v] >= 0) adj[i] |= bit(index[v]);
            }
        }
    }

    int size() const { return static_cast<int>(ids.size()); }
};

struct Move {
    int u;
    int w;  // -1 for Del
};

class WeakSearch {
public:
    WeakSearch(const Compact& graph, const SearchOptions& options, SolveStats& stats)
        : graph_(graph), options_(options), stats_(stats) {}

    /// On success, path() holds the moves in deletion order.
    bool run(std::vector<Budget> f) {
        path_.clear();
        const Mask all = graph_.size() == 64 ? ~Mask{0} : bit(graph_.size()) - 1;
        if (!search(all, f)) return false;
        std::reverse(path_.begin(), path_.end());
        return true;
    }

    const std::vector<Move>& path() const { return path_; }

private:
    std::string key(Mask mask, const std::vector<Budget>& f) const {
        std::string k(sizeof(Mask), '\0');
        std::memcpy(k.data(), &mask, sizeof(Mask));
        for (Mask rest = mask; rest != 0; rest &= rest - 1) {
            const Budget value = f[std::countr_zero(rest)];
            k.append(reinterpret_cast<const char*>(&value), sizeof(Budget));
        }
        return k;
    }

    std::vector<Budget> live_values(Mask mask, const std::vector<Budget>& f) const {
        std::vector<Budget> out;
        for (Mask rest = mask; rest != 0; rest &= rest - 1) out.push_back(f[std::countr_zero(rest)]);
        return out;
    }

    bool dominated(Mask mask, const std::vector<Budget>& f) const {
        auto it = infeasible_by_mask_.find(mask);
        if (it == infeasible_by_mask_.end()) return false;
        const auto values = live_values(mask, f);
        for (const auto& bigger : it->second) {
            if (std::equal(values.begin(), values.end(), bigger.begin(), std::less_equal<>())) return true;
        }
        return false;
    }

    // A full trace takes the live budget sum to zero, each step lowering it by
    // at least the live degree of its vertex. Those degrees sum to the edge count.
    bool below_edge_count(Mask mask, const std::vector<Budget>& f) const {
        std::int64_t sum = 0;
        std::int64_t twice_edges = 0;
        for (Mask rest = mask; rest != 0; rest &= rest - 1) {
            const int v = std::countr_zero(rest);
            sum += f[v];
            twice_edges += std::popcount(graph_.adj[v] & mask);
        }
        return 2 * sum < twice_edges;
    }

    std::vector<Move> moves(Mask mask, const std::vector<Budget>& f) const {
        Mask zeros = 0;
        for (Mask rest = mask; rest != 0; rest &= rest - 1) {
            const int v = std::countr_zero(rest);
            if (f[v] == 0) zeros |= bit(v);
        }

        std::vector<std::pair<int, int>> dels;  // (residual degree, u)
        std::vector<std::tuple<Budget, int, int>> saves;  // (-(f(u)-f(w)), u, w)
        for (Mask rest = mask; rest != 0; rest &= rest - 1) {
            const int u = std::countr_zero(rest);
            const Mask nbrs = graph_.adj[u] & mask;
            const Mask blocked = nbrs & zeros;
            if (blocked == 0) dels.emplace_back(std::popcount(nbrs), u);
            // A save can unblock at most the saved neighbour itself.
            if (std::popcount(blocked) > 1) continue;
            for (Mask ws = nbrs; ws != 0; ws &= ws - 1) {
                const int w = std::countr_zero(ws);
                if (f[u] <= f[w]) continue;
                if ((blocked & ~bit(w)) != 0) continue;
                saves.emplace_back(f[w] - f[u], u, w);
            }
        }
        std::sort(dels.begin(), dels.end());
        std::sort(saves.begin(), saves.end());

        std::vector<Move> out;
        out.reserve(dels.size() + saves.size());
        for (const auto& [deg, u] : dels) out.push_back({u, -1});
        for (const auto& [gap, u, w] : saves) out.push_back({u, w});
        return out;
    }

    bool search(Mask mask, const std::vector<Budget>& f) {
        ++stats_.nodes;
        if (mask == 0) return true;

        if (options_.sum_cut && below_edge_count(mask, f)) return false;

        auto k = key(mask, f);
        if (failed_.contains(k)) {
            ++stats_.memo_hits;
            return false;
        }
        if (options_.dominance_pruning && dominated(mask, f)) {
            ++stats_.memo_hits;
            return false;
        }

        for (const Move& move : moves(mask, f)) {
            std::vector<Budget> next = f;
            Mask nbrs = graph_.adj[move.u] & mask;
            if (move.w >= 0) nbrs &= ~bit(move.w);
            for (Mask rest = nbrs; rest != 0; rest &= rest - 1) --next[std::countr_zero(rest)];
            next[move.u] = 0;
            if (search(mask & ~bit(move.u), next)) {
                path_.push_back(move);
                return true;
            }
        }

        if (options_.dominance_pruning) infeasible_by_mask_[mask].push_back(live_values(mask, f));
        failed_.insert(std::move(k));
        return false;
    }

    const Compact& graph_;
    const SearchOptions& options_;
    SolveStats& stats_;
    std::unordered_set<std::string> failed_;
    std::unordered_map<Mask, std::vector<std::vector<Budget>>> infeasible_by_mask_;
    std::vector<Move> path_;
};

void check_capacity(const Graph& g, std::size_t cap, const char* what) {
    if (g.live_count() > cap) {
        throw CapacityError(std::string(what) + " supports at most " + std::to_string(cap) + " vertices, got " +
                            std::to_string(g.live_count()));
    }
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

std::optional<Trace> is_weakly_f_degenerate(const Graph& g, const WeightMap& f, const SearchOptions& options,
                                            SolveStats* stats) {
    check_capacity(g, kMaxExactVertices, "exact weak degeneracy search");
    if (f.size() != g.order()) throw std::invalid_argument("weight map size does not match the graph");

    const auto start = std::chrono::steady_clock::now();
    SolveStats local;
    SolveStats& out = stats ? *stats : local;

    const Compact compact(g);
    std::vector<Budget> budget(compact.size());
    for (int i = 0; i < compact.size(); ++i) {
        budget[i] = f[compact.ids[i]];
        if (budget[i] < 0) throw std::invalid_argument("negative budget at vertex " + std::to_string(compact.ids[i]));
    }

    WeakSearch search(compact, options, out);
    const bool found = search.run(budget);
    out.elapsed_seconds += seconds_since(start);
    if (!found) return std::nullopt;

    Trace t;
    t.n = g.order();
    t.initial = f;
    for (const Move& m : search.path()) {
        t.steps.push_back(m.w < 0 ? Step::del(compact.ids[m.u]) : Step::del_save(compact.ids[m.u], compact.ids[m.w]));
    }
    return t;
}

SolveResult weak_degeneracy(const Graph& g, const SearchOptions& options) {
    check_capacity(g, kMaxExactVertices, "exact weak degeneracy search");
    const auto start = std::chrono::steady_clock::now();

    const auto peel = degeneracy(g);
    const auto upper = static_cast<Budget>(peel.value);
    Budget lower = 0;
    if (options.use_regular_lower_bound) {
        if (auto d = regularity(g); d && *d >= 1) lower = static_cast<Budget>(*d / 2 + 1);
    }

    SolveResult result;
    for (Budget d = lower; d < upper; ++d) {
        if (auto trace = is_weakly_f_degenerate(g, constant_weights(g.order(), d), options, &result.stats)) {
            trace->initial = d;
            result.value = d;
            result.witness = std::move(trace);
            result.stats.elapsed_seconds = seconds_since(start);
            return result;
        }
    }
    // The peeling order is a Del-only certificate at the degeneracy.
    result.value = upper;
    result.witness = del_trace(g.order(), upper, peel.order);
    result.stats.elapsed_seconds = seconds_since(start);
    return result;
}

namespace {

class BruteForce {
public:
    explicit BruteForce(const Graph& g) : ids_(g.live_vertices()), n_(ids_.size()), adjacent_(n_ * n_, 0) {
        for (std::size_t i = 0; i < n_; ++i) {
            for (std::size_t j = 0; j < n_; ++j) adjacent_[i * n_ + j] = g.adjacent(ids_[i], ids_[j]) ? 1 : 0;
        }
    }

    bool feasible(Budget d) {
        std::vector<char> alive(n_, 1);
        std::vector<Budget> f(n_, d);
        return remove_all(alive, f, n_);
    }

private:
    bool adj(std::size_t a, std::size_t b) const { return adjacent_[a * n_ + b] != 0; }

    // Remove u, decrementing every live neighbour except `saved`. Returns
    // false (and leaves nothing changed) if some neighbour would go negative.
    bool try_remove(std::vector<char>& alive, std::vector<Budget>& f, std::size_t u, std::size_t saved, std::size_t left) {
        for (std::size_t v = 0; v < n_; ++v) {
            if (alive[v] && v != saved && adj(u, v) && f[v] == 0) return false;
        }
        std::vector<Budget> next = f;
        for (std::size_t v = 0; v < n_; ++v) {
            if (alive[v] && v != saved && adj(u, v)) --next[v];
        }
        alive[u] = 0;
        const bool ok = remove_all(alive, next, left - 1);
        alive[u] = 1;
        return ok;
    }

    bool remove_all(std::vector<char>& alive, std::vector<Budget>& f, std::size_t left) {
        if (left == 0) return true;
        for (std::size_t u = 0; u < n_; ++u) {
            if (!alive[u]) continue;
            if (try_remove(alive, f, u, n_, left)) return true;
            for (std::size_t w = 0; w < n_; ++w) {
                if (alive[w] && adj(u, w) && f[u] > f[w] && try_remove(alive, f, u, w, left)) return true;
            }
        }
        return false;
    }

    std::vector<Vertex> ids_;
    std::size_t n_;
    std::vector<char> adjacent_;
};

}  // namespace

Budget brute_force_weak_degeneracy(const Graph& g) {
    check_capacity(g, kMaxBruteForceVertices, "brute-force weak degeneracy");
    BruteForce oracle(g);
    // Budget n is always enough: nobody can lose more than n-1.
    for (Budget d = 0;; ++d) {
        if (oracle.feasible(d)) return d;
    }
}

DegeneracyResult degeneracy(const Graph& g) {
    DegeneracyResult out;
    std::vector<std::size_t> deg(g.order(), 0);
    std::set<std::pair<std::size_t, Vertex>> queue;
    for (Vertex v : g.live_vertices()) {
        deg[v] = g.degree(v);
        queue.emplace(deg[v], v);
    }
    std::vector<char> removed(g.order(), 0);
    std::vector<Vertex> peel;
    peel.reserve(queue.size());
    while (!queue.empty()) {
        const auto [d, v] = *queue.begin();
        queue.erase(queue.begin());
        out.value = std::max(out.value, d);
        removed[v] = 1;
        peel.push_back(v);
        for (Vertex w : g.neighbors(v)) {
            if (!g.is_live(w) || removed[w]) continue;
            queue.erase({deg[w], w});
            queue.emplace(--deg[w], w);
        }
    }
    // Peeled vertices have at most `value` neighbours peeled after them, so
    // the reverse order deletes each vertex with at most `value` earlier
    // deleted neighbours.
    out.order.assign(peel.rbegin(), peel.rend());
    return out;
}

std::optional<std::vector<Vertex>> is_f_degenerate(const Graph& g, const WeightMap& f) {
    if (f.size() != g.order()) throw std::invalid_argument("weight map size does not match the graph");
    // A Del-only order is legal iff every vertex has at most f(v) neighbours
    // deleted before it. Build it back to front: any vertex whose live degree
    // fits its budget can go last, and removing it never hurts the others.
    Graph rest = g;
    std::vector<Vertex> reversed;
    reversed.reserve(g.live_count());
    while (!rest.empty()) {
        Vertex pick = -1;
        for (Vertex v : rest.live_vertices()) {
            if (f[v] >= 0 && rest.degree(v) <= static_cast<std::size_t>(f[v])) {
                pick = v;
                break;
            }
        }
        if (pick < 0) return std::nullopt;
        reversed.push_back(pick);
        rest.erase(pick);
    }
    return std::vector<Vertex>(reversed.rbegin(), reversed.rend());
}

namespace {

bool color_from(const std::vector<std::vector<int>>& nbrs, std::vector<int>& color, std::size_t at, int k, int used) {
    if (at == nbrs.size()) return true;
    // Colors beyond used+1 are symmetric to used+1.
    for (int c = 0; c < std::min(k, used + 1); ++c) {
        bool ok = true;
        for (int v : nbrs[at]) {
            if (color[v] == c) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        color[at] = c;
        if (color_from(nbrs, color, at + 1, k, std::max(used, c + 1))) return true;
        color[at] = -1;
    }
    return false;
}

}  // namespace

std::size_t chromatic_number(const Graph& g) {
    check_capacity(g, kMaxChromaticVertices, "chromatic number");
    auto order = g.live_vertices();
    if (order.empty()) return 0;
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });

    // Neighbours earlier in the order, as positions.
    std::vector<std::vector<int>> earlier(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (g.adjacent(order[i], order[j])) earlier[i].push_back(static_cast<int>(j));
        }
    }
    for (int k = 1;; ++k) {
        std::vector<int> color(order.size(), -1);
        if (color_from(earlier, color, 0, k, 0)) return static_cast<std::size_t>(k);
    }
}

Trace del_trace(std::size_t n, Budget initial, const std::vector<Vertex>& order) {
    Trace t;
    t.n = n;
    t.initial = initial;
    t.steps.reserve(order.size());
    for (Vertex v : order) t.steps.push_back(Step::del(v));
    return t;
}

}  // namespace wdeg
