#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "wdeg/engine.hpp"
#include "wdeg/graph.hpp"

namespace wdeg {

/// Live-vertex limits of the exhaustive routines.
inline constexpr std::size_t kMaxExactVertices = 32;
inline constexpr std::size_t kMaxBruteForceVertices = 8;
inline constexpr std::size_t kMaxChromaticVertices = 10;

class CapacityError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct SolveStats {
    std::uint64_t nodes = 0;
    std::uint64_t memo_hits = 0;
    double elapsed_seconds = 0.0;
};

struct SearchOptions {
    /// Prune a state when a pointwise larger budget on the same live set is
    /// already known to be infeasible. Relies on budget monotonicity, which
    /// the tests check against the plain search.
    bool dominance_pruning = false;
    /// Prune a state whose live budget sum is below its live edge count:
    /// each step lowers the sum by at least the deleted vertex's live degree.
    bool sum_cut = true;
    /// Start the weak degeneracy scan at floor(d/2)+1 for d-regular graphs
    /// (d >= 1). Turn off to have the search refute every smaller value.
    bool use_regular_lower_bound = true;
};

struct SolveResult {
    Budget value = 0;
    std::optional<Trace> witness;
    SolveStats stats;
};

/// Memoized depth-first search over (live set, budget vector) states. Returns
/// a complete legal trace starting from f, or nothing if none exists.
/// Throws CapacityError above kMaxExactVertices live vertices.
std::optional<Trace> is_weakly_f_degenerate(const Graph& g, const WeightMap& f, const SearchOptions& options = {},
                                            SolveStats* stats = nullptr);

/// Smallest constant budget admitting a complete trace, with that trace.
SolveResult weak_degeneracy(const Graph& g, const SearchOptions& options = {});

/// Independent oracle: plain recursion over every legal step, no memo, no
/// move ordering. Throws CapacityError above kMaxBruteForceVertices.
Budget brute_force_weak_degeneracy(const Graph& g);

struct DegeneracyResult {
    std::size_t value = 0;
    std::vector<Vertex> order;  // Del-only deletion order, legal at constant `value`
};

/// Min-degree peeling, ties to the smallest id.
DegeneracyResult degeneracy(const Graph& g);

/// Del-only feasibility for an arbitrary budget. Returns a deletion order
/// or nothing.
std::optional<std::vector<Vertex>> is_f_degenerate(const Graph& g, const WeightMap& f);

/// Throws CapacityError above kMaxChromaticVertices.
std::size_t chromatic_number(const Graph& g);

/// Wraps a Del-only order as a certificate.
Trace del_trace(std::size_t n, Budget initial, const std::vector<Vertex>& order);

}  // namespace wdeg
