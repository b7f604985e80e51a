#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "wdeg/graph.hpp"

namespace wdeg {

using Budget = std::int32_t;

/// Per-vertex budget f, indexed by vertex id. Entries of removed vertices
/// are kept but carry no meaning.
using WeightMap = std::vector<Budget>;

inline WeightMap constant_weights(std::size_t n, Budget value) { return WeightMap(n, value); }

enum class Op : std::uint8_t { Del, DelSave };

struct Step {
    Op op = Op::Del;
    Vertex u = 0;
    Vertex w = -1;  // saved neighbour, DelSave only

    static Step del(Vertex u) { return {Op::Del, u, -1}; }
    static Step del_save(Vertex u, Vertex w) { return {Op::DelSave, u, w}; }

    friend bool operator==(const Step&, const Step&) = default;
};

/// A deletion certificate: the starting budget plus the ordered steps.
struct Trace {
    std::size_t n = 0;
    std::variant<Budget, WeightMap> initial = Budget{0};
    std::vector<Step> steps;

    WeightMap initial_weights() const;
    std::optional<Budget> constant_initial() const;

    friend bool operator==(const Trace&, const Trace&) = default;
};

enum class FailureReason : std::uint8_t {
    IllegalDel,
    IllegalDelSaveBudget,
    IllegalDelSaveNonadjacent,
    NegativeResult,
    RepeatedVertex,
    UnknownVertex,
    Incomplete,
};

std::string_view to_string(FailureReason reason);

class IllegalStep : public std::runtime_error {
public:
    IllegalStep(FailureReason reason, const std::string& what) : std::runtime_error(what), reason_(reason) {}
    FailureReason reason() const noexcept { return reason_; }

private:
    FailureReason reason_;
};

/// A graph together with the current budget on its live vertices.
class State {
public:
    /// Throws std::invalid_argument if f has the wrong size or is negative
    /// on a live vertex.
    State(Graph g, WeightMap f);

    const Graph& graph() const noexcept { return graph_; }
    const WeightMap& weights() const noexcept { return f_; }
    Budget f(Vertex v) const { return f_.at(v); }
    bool empty() const noexcept { return graph_.empty(); }

    /// Sum of f over the live vertices.
    std::int64_t total() const;

    /// In-place step application; throw IllegalStep and leave the state
    /// untouched when the step is not legal.
    void del(Vertex u);
    void del_save(Vertex u, Vertex w);
    void apply(const Step& step);

    /// Why the step would fail, or nothing if it is legal.
    std::optional<FailureReason> check(const Step& step) const;

private:
    Graph graph_;
    WeightMap f_;
};

// Both legality tests throw std::invalid_argument when an argument is not live.
bool legal_del(const State& st, Vertex u);
bool legal_delsave(const State& st, Vertex u, Vertex w);

State apply_del(State st, Vertex u);
State apply_delsave(State st, Vertex u, Vertex w);

struct VerifyReport {
    bool ok = false;
    std::optional<std::size_t> failed_at;  // 0-based step index; steps.size() if incomplete
    std::optional<FailureReason> reason;
};

/// Replays the steps from f0 and reports the first failure, if any. The
/// trace's own initial budget is ignored by this overload.
VerifyReport verify_trace(const Graph& g, const WeightMap& f0, std::span<const Step> steps);
VerifyReport verify_trace(const Graph& g, const WeightMap& f0, const Trace& t);

/// Uses the trace's initial budget. A trace whose n differs from the graph
/// order is reported as failing at step 0 with UnknownVertex.
VerifyReport verify_trace(const Graph& g, const Trace& t);

/// Certificate text format (JSON): {"n", "initial", "steps"} with 0-based ids.
std::string emit_certificate(const Trace& t);
Trace parse_certificate(std::string_view text);

}  // namespace wdeg
