#pragma once

#include <cstddef>
#include <vector>

#include "wdeg/engine.hpp"
#include "wdeg/graph.hpp"

namespace wdeg {

/// The (2k+1)-regular graph with weak degeneracy k+1.
///
/// Three index families a_i, b_i, c_i (i = 1..s) form paths of powers:
/// a_i ~ a_j when 1 <= |i-j| <= k-1, b and c likewise with k, and every a_i
/// is joined to b_i and c_i. The boundary indices i <= k and i > s-k fall
/// short of degree 2k+1 and receive fresh pendant vertices; each pendant
/// then takes 2k interior a-vertices through phi, which supplies the one
/// missing edge of every interior a_i.
///
/// Ids: a_i -> i-1, b_i -> s+i-1, c_i -> 2s+i-1, pendant j -> 3s+j-1.
struct OddConstruction {
    int k = 0;
    int s = 0;
    LabeledGraph lg;
    std::vector<Vertex> phi;  // phi[i - (k+1)] = pendant joined to interior a_i

    Vertex a(int i) const { return i - 1; }
    Vertex b(int i) const { return s + i - 1; }
    Vertex c(int i) const { return 2 * s + i - 1; }
    Vertex pendant(int j) const { return 3 * s + j - 1; }
    int pendant_count() const { return 3 * k * (k + 1); }
    bool interior(int i) const { return i >= k + 1 && i <= s - k; }
    Vertex phi_of(int i) const { return phi.at(static_cast<std::size_t>(i - (k + 1))); }
};

/// Rejects k < 1. The result is checked (2k+1)-regular before returning.
OddConstruction build_odd(int k);

/// The deletion strategy together with what was observed while producing it.
struct OddStrategy {
    Trace trace;
    std::vector<Budget> interior_a_budgets;  // f(a_i) at each interior a_i step, i ascending
    bool v1_nonnegative = true;              // no A/B/C vertex met a negative budget
    bool pendants_nonnegative = true;        // budgets on pendants after the last c_s step
    std::size_t saves = 0;
};

/// Deletes a_1, b_1, c_1, ..., a_s, b_s, c_s, then the pendants, from the
/// constant budget k+1. Interior a_i uses DelSave(a_i, phi(a_i)) whenever
/// that is legal and Del otherwise.
OddStrategy odd_strategy(const OddConstruction& oc);

/// d+1 copies of a d-regular g (layers 1..d+1) plus a layer 0 holding one
/// common neighbour per original vertex. Vertex (v, i) has id i*n + v.
/// Throws std::invalid_argument unless g is d-regular.
LabeledGraph lift(const Graph& g, std::size_t d);
LabeledGraph lift(const LabeledGraph& g, std::size_t d);

/// Lifts a verified constant-budget trace of g: Del on layer 0 in id order,
/// then the inner steps replayed on layers 1..d+1. Throws
/// std::invalid_argument if the inner trace does not verify on g or its
/// initial budget is not constant.
Trace lift_strategy(const Trace& inner, const Graph& g, std::size_t d);

struct DegreeConstruction {
    std::size_t degree = 0;
    LabeledGraph lg;
    Trace trace;
    Budget claimed_wd = 0;
};

/// Odd d = 2k+1 uses build_odd(k); even d uses the lift of the d-1 case.
/// Needs d >= 3; the certificate is verified before returning.
DegreeConstruction build_for_degree(std::size_t d);

}  // namespace wdeg
