#include "wdeg/audit.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <json.hpp>

namespace wdeg {

AuditReport audit_trace(const Graph& g, const WeightMap& f0, const Trace& t) {
    if (const auto report = verify_trace(g, f0, t); !report.ok) {
        throw AuditError("trace does not verify: step " + std::to_string(report.failed_at.value_or(0)) + ", " +
                         std::string(to_string(*report.reason)));
    }

    AuditReport out;
    out.saves_received.assign(g.order(), 0);
    std::vector<std::size_t> removed_neighbors(g.order(), 0);

    State st(g, f0);
    out.sums.push_back(st.total());
    for (std::size_t i = 0; i < t.steps.size(); ++i) {
        const Step& step = t.steps[i];
        const Vertex v = step.u;

        AuditStep rec;
        rec.index = i + 1;
        rec.vertex = v;
        rec.budget = st.f(v);
        rec.residual_degree = st.graph().degree(v);
        rec.saved = step.op == Op::DelSave ? 1 : 0;
        rec.saves_received = out.saves_received[v];
        rec.neighbors_removed = removed_neighbors[v];
        rec.sum_before = out.sums.back();

        for (Vertex w : g.neighbors(v)) {
            if (st.graph().is_live(w)) ++removed_neighbors[w];
        }
        if (step.op == Op::DelSave) ++out.saves_received[step.w];
        st.apply(step);

        rec.sum_after = st.total();
        out.sums.push_back(rec.sum_after);

        rec.step_sum_ok = rec.sum_before - rec.sum_after ==
                          static_cast<std::int64_t>(rec.budget) + static_cast<std::int64_t>(rec.residual_degree) - rec.saved;
        rec.budget_identity_ok = static_cast<std::int64_t>(f0[v]) - rec.budget ==
                                 static_cast<std::int64_t>(rec.neighbors_removed) - rec.saves_received;
        rec.save_bound_ok = rec.saved <= rec.budget;
        out.steps.push_back(rec);
    }

    auto all = [&](bool AuditStep::*flag) {
        return std::all_of(out.steps.begin(), out.steps.end(), [&](const AuditStep& s) { return s.*flag; });
    };
    out.step_sum_ok = all(&AuditStep::step_sum_ok) && out.sums.back() == 0;
    out.budget_identity_ok = all(&AuditStep::budget_identity_ok);
    out.save_bound_ok = all(&AuditStep::save_bound_ok);

    std::int64_t x_total = 0;
    std::int64_t y_total = 0;
    out.y_counts_consistent = true;
    for (const auto& s : out.steps) {
        x_total += s.saved;
        y_total += out.saves_received[s.vertex];
        if (s.saves_received != out.saves_received[s.vertex]) out.y_counts_consistent = false;
    }
    out.save_balance_ok = x_total == y_total;

    // Constant start on a regular graph.
    const auto live = g.live_vertices();
    const auto degree = regularity(g);
    const bool constant =
        !live.empty() && std::all_of(live.begin(), live.end(), [&](Vertex v) { return f0[v] == f0[live.front()]; });
    if (degree && constant) {
        RegularAudit reg;
        reg.degree = *degree;
        reg.budget = f0[live.front()];
        for (const auto& s : out.steps) {
            reg.slack_sum += s.budget - s.saved;
            const std::int64_t drop = s.sum_before - s.sum_after;
            // drop >= d/2 + x - y, doubled to stay in integers
            if (2 * drop < static_cast<std::int64_t>(reg.degree) + 2 * s.saved - 2 * s.saves_received) {
                reg.half_degree_violations.push_back(s.index);
            }
        }
        const auto n = static_cast<std::int64_t>(live.size());
        reg.slack_identity_ok = n * (2 * static_cast<std::int64_t>(reg.budget) - static_cast<std::int64_t>(reg.degree)) ==
                                2 * reg.slack_sum;
        out.regular = std::move(reg);
    }
    return out;
}

AuditReport audit_trace(const Graph& g, const Trace& t) {
    if (t.n != g.order()) throw AuditError("certificate is for " + std::to_string(t.n) + " vertices, graph has " +
                                           std::to_string(g.order()));
    return audit_trace(g, t.initial_weights(), t);
}

LowerBound regular_lower_bound(std::size_t d) { return {static_cast<Budget>(d / 2 + 1), d >= 1}; }

double counting_lower_bound(std::size_t d, std::size_t n) {
    if (n < 2) throw std::invalid_argument("counting bound needs n >= 2, got " + std::to_string(n));
    return static_cast<double>(d) - std::sqrt(2.0 * static_cast<double>(n));
}

namespace {

const char* flag(bool ok) { return ok ? "ok" : "FAIL"; }

}  // namespace

std::string emit_audit_table(const AuditReport& report) {
    std::ostringstream out;
    out << "i\tv\tf\tdeg\tx\ty\tprior\ts_i\ts_next\tok\n";
    for (const auto& s : report.steps) {
        const bool ok = s.step_sum_ok && s.budget_identity_ok && s.save_bound_ok;
        out << s.index << '\t' << s.vertex << '\t' << s.budget << '\t' << s.residual_degree << '\t' << s.saved << '\t'
            << s.saves_received << '\t' << s.neighbors_removed << '\t' << s.sum_before << '\t' << s.sum_after << '\t'
            << flag(ok) << '\n';
    }
    out << "# step_sum_identity " << flag(report.step_sum_ok) << '\n';
    out << "# save_balance " << flag(report.save_balance_ok) << '\n';
    out << "# budget_identity " << flag(report.budget_identity_ok) << '\n';
    out << "# save_bound " << flag(report.save_bound_ok) << '\n';
    out << "# save_counts_consistent " << flag(report.y_counts_consistent) << '\n';
    if (report.regular) {
        const auto& r = *report.regular;
        out << "# regular_degree " << r.degree << '\n';
        out << "# constant_budget " << r.budget << '\n';
        out << "# slack_identity " << flag(r.slack_identity_ok) << '\n';
        out << "# half_degree_violations " << r.half_degree_violations.size() << '\n';
    }
    out << "# all " << flag(report.ok()) << '\n';
    return out.str();
}

std::string emit_audit_json(const AuditReport& report) {
    nlohmann::ordered_json doc;
    auto steps = nlohmann::ordered_json::array();
    for (const auto& s : report.steps) {
        steps.push_back({{"i", s.index},
                         {"v", s.vertex},
                         {"f", s.budget},
                         {"deg", s.residual_degree},
                         {"x", s.saved},
                         {"y", s.saves_received},
                         {"prior", s.neighbors_removed},
                         {"s_i", s.sum_before},
                         {"s_next", s.sum_after}});
    }
    doc["steps"] = std::move(steps);
    doc["sums"] = report.sums;
    doc["step_sum_identity"] = report.step_sum_ok;
    doc["save_balance"] = report.save_balance_ok;
    doc["budget_identity"] = report.budget_identity_ok;
    doc["save_bound"] = report.save_bound_ok;
    doc["save_counts_consistent"] = report.y_counts_consistent;
    if (report.regular) {
        const auto& r = *report.regular;
        doc["regular"] = {{"degree", r.degree},
                          {"budget", r.budget},
                          {"slack_sum", r.slack_sum},
                          {"slack_identity", r.slack_identity_ok},
                          {"half_degree_violations", r.half_degree_violations}};
    }
    doc["ok"] = report.ok();
    return doc.dump(2) + "\n";
}

}  // namespace wdeg
