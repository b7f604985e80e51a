#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wdeg/engine.hpp"
#include "wdeg/graph.hpp"

namespace wdeg {

/// Bookkeeping for step i of a trace (1-based), taken just before v_i goes.
struct AuditStep {
    std::size_t index = 0;
    Vertex vertex = 0;
    Budget budget = 0;                   // f_i(v_i)
    std::size_t residual_degree = 0;     // deg of v_i among live vertices
    int saved = 0;                       // x_i: 1 for DelSave, 0 for Del
    int saves_received = 0;              // y_i: earlier DelSave steps that spared v_i
    std::size_t neighbors_removed = 0;   // neighbours of v_i deleted before step i
    std::int64_t sum_before = 0;         // s_i
    std::int64_t sum_after = 0;          // s_{i+1}

    bool step_sum_ok = false;
    bool budget_identity_ok = false;
    bool save_bound_ok = false;
};

/// Extra quantities when the graph is d-regular and the start budget is a
/// constant k.
struct RegularAudit {
    std::size_t degree = 0;
    Budget budget = 0;
    /// n(2k - d) == 2 * sum_i (f_i(v_i) - x_i), which is what the counting
    /// lower bound rests on.
    bool slack_identity_ok = false;
    std::int64_t slack_sum = 0;
    /// Steps (1-based) where s_i - s_{i+1} >= d/2 + x_i - y_i fails.
    std::vector<std::size_t> half_degree_violations;
};

struct AuditReport {
    std::vector<AuditStep> steps;
    std::vector<std::int64_t> sums;  // s_1 .. s_{n+1}, s_{n+1} = 0
    std::vector<int> saves_received;  // whole-process y per vertex id

    bool step_sum_ok = false;
    bool save_balance_ok = false;      // sum x == sum y
    bool budget_identity_ok = false;
    bool save_bound_ok = false;        // x_i <= f_i(v_i)
    bool y_counts_consistent = false;  // y as of step i == final y

    std::optional<RegularAudit> regular;

    bool ok() const {
        return step_sum_ok && save_balance_ok && budget_identity_ok && save_bound_ok && y_counts_consistent &&
               (!regular || regular->slack_identity_ok);
    }
};

class AuditError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Replays a verified trace and checks the sum/save identities at every
/// step. Throws AuditError if the trace does not verify.
AuditReport audit_trace(const Graph& g, const WeightMap& f0, const Trace& t);
AuditReport audit_trace(const Graph& g, const Trace& t);

struct LowerBound {
    Budget value = 0;
    bool applicable = false;  // false for d = 0, where the edgeless graph has wd 0
};

/// floor(d/2) + 1.
LowerBound regular_lower_bound(std::size_t d);

/// d - sqrt(2n) for a d-regular graph on n >= 2 vertices; may be negative.
double counting_lower_bound(std::size_t d, std::size_t n);

/// Tab-separated per-step table followed by "# name value" summary lines.
std::string emit_audit_table(const AuditReport& report);
std::string emit_audit_json(const AuditReport& report);

}  // namespace wdeg
