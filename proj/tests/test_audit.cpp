#include <doctest.h>

#include <cmath>
#include <random>

#include "test_util.hpp"
#include "wdeg/audit.hpp"
#include "wdeg/constructions.hpp"
#include "wdeg/corpus.hpp"
#include "wdeg/solver.hpp"

using namespace wdeg;

namespace {

// Straight-line replay that recomputes s_i from scratch after every step.
std::vector<std::int64_t> replay_sums(const Graph& g, const WeightMap& f0, const std::vector<Step>& steps) {
    std::vector<char> alive(g.order(), 0);
    for (Vertex v : g.live_vertices()) alive[v] = 1;
    std::vector<std::int64_t> f(f0.begin(), f0.end());
    auto sum = [&] {
        std::int64_t s = 0;
        for (std::size_t v = 0; v < f.size(); ++v) s += alive[v] ? f[v] : 0;
        return s;
    };
    std::vector<std::int64_t> sums{sum()};
    for (const Step& step : steps) {
        for (Vertex w : g.neighbors(step.u)) {
            if (alive[w] && !(step.op == Op::DelSave && w == step.w)) --f[w];
        }
        alive[step.u] = 0;
        sums.push_back(sum());
    }
    return sums;
}

}  // namespace

TEST_CASE("audit of the C4 cyclic trace") {
    const Graph c4 = corpus::cycle(4);
    const Trace t{4, Budget{2}, {Step::del(0), Step::del(1), Step::del(2), Step::del(3)}};
    const auto r = audit_trace(c4, t);
    CHECK(r.sums == std::vector<std::int64_t>{8, 4, 2, 0, 0});
    CHECK(r.ok());
    for (const auto& s : r.steps) {
        CHECK(s.saved == 0);
        CHECK(s.saves_received == 0);
    }
    REQUIRE(r.regular);
    CHECK(r.regular->degree == 2);
    CHECK(r.regular->slack_identity_ok);
    // f_i(v_i) = 2, 1, 1, 0 and no saves: 4 * (2*2 - 2) == 2 * 4.
    CHECK(r.regular->slack_sum == 4);
}

TEST_CASE("audit of a save") {
    const Graph k2 = corpus::complete(2);
    const Trace t{2, WeightMap{1, 0}, {Step::del_save(0, 1), Step::del(1)}};
    const auto r = audit_trace(k2, t);
    CHECK(r.ok());
    CHECK(r.steps[0].saved == 1);
    CHECK(r.steps[1].saves_received == 1);
    CHECK(r.saves_received[1] == 1);
    CHECK_FALSE(r.regular);  // budget is not constant
}

TEST_CASE("audit rejects unverifiable traces") {
    const Trace bad{2, Budget{0}, {Step::del(0), Step::del(1)}};
    CHECK_THROWS_AS(audit_trace(corpus::complete(2), bad), AuditError);
    const Trace wrong_n{3, Budget{1}, {}};
    CHECK_THROWS_AS(audit_trace(corpus::complete(2), wrong_n), AuditError);
}

TEST_CASE("audit of the odd strategy matches an independent replay") {
    const auto oc = build_odd(1);
    const auto t = odd_strategy(oc).trace;
    const auto r = audit_trace(oc.lg.graph, t);
    CHECK(r.ok());
    CHECK(r.steps.size() == 48);
    CHECK(r.sums == replay_sums(oc.lg.graph, t.initial_weights(), t.steps));
    REQUIRE(r.regular);
    CHECK(r.regular->degree == 3);
    CHECK_FALSE(r.regular->half_degree_violations.empty());
}

TEST_CASE("audit identities hold on random legal traces (property)") {
    std::mt19937_64 rng(404);
    std::size_t complete = 0;
    for (const Graph& g : corpus::random_graphs(120, 1, 10, 17)) {
        WeightMap f(g.order());
        for (auto& x : f) x = static_cast<Budget>(rng() % 5);
        const auto steps = testing::random_legal_walk(State(g, f), rng);
        if (steps.size() != g.live_count()) continue;
        ++complete;
        const Trace t{g.order(), f, steps};
        const auto r = audit_trace(g, t);
        REQUIRE(r.ok());
        REQUIRE(r.sums == replay_sums(g, f, steps));
    }
    CHECK(complete > 20);
}

TEST_CASE("the half-degree inequality fails somewhere at the minimal budget") {
    // At budget floor(d/2)+1 the slack identity forces a step with
    // 2(f_i(v_i) - x_i) < k - d/2; on larger budgets nothing forces it.
    for (const auto& [name, g] : corpus::regular_graphs()) {
        const auto d = *regularity(g);
        const Budget k = regular_lower_bound(d).value;
        const auto t = is_weakly_f_degenerate(g, constant_weights(g.order(), k));
        if (!t) continue;
        const auto r = audit_trace(g, *t);
        REQUIRE(r.regular);
        CHECK_MESSAGE(!r.regular->half_degree_violations.empty(), name);
    }
    const Trace generous{2, Budget{5}, {Step::del(0), Step::del(1)}};
    const auto r = audit_trace(corpus::complete(2), generous);
    REQUIRE(r.regular);
    CHECK(r.regular->half_degree_violations.empty());
    CHECK(r.regular->slack_identity_ok);
}

TEST_CASE("closed-form lower bounds") {
    CHECK(regular_lower_bound(3).value == 2);
    CHECK(regular_lower_bound(4).value == 3);
    CHECK(regular_lower_bound(3).applicable);
    CHECK(regular_lower_bound(0).value == 1);
    CHECK_FALSE(regular_lower_bound(0).applicable);

    CHECK(counting_lower_bound(3, 4) == doctest::Approx(3.0 - std::sqrt(8.0)).epsilon(1e-12));
    CHECK(counting_lower_bound(3, 4) == doctest::Approx(0.171572875).epsilon(1e-9));
    CHECK(counting_lower_bound(3, 48) < 0.0);
    CHECK(counting_lower_bound(0, 2) == doctest::Approx(-2.0));
    CHECK_THROWS_AS(counting_lower_bound(1, 1), std::invalid_argument);
}

TEST_CASE("audit serializations") {
    const Trace t{4, Budget{2}, {Step::del(0), Step::del(1), Step::del(2), Step::del(3)}};
    const auto r = audit_trace(corpus::cycle(4), t);
    const auto table = emit_audit_table(r);
    CHECK(table.rfind("i\tv\tf\tdeg\tx\ty\tprior\ts_i\ts_next\tok\n1\t0\t2\t2\t0\t0\t0\t8\t4\tok\n", 0) == 0);
    CHECK(table.find("# all ok\n") != std::string::npos);
    const auto json = emit_audit_json(r);
    CHECK(json.find("\"sums\": [\n    8,") != std::string::npos);
    CHECK(json.find("\"ok\": true") != std::string::npos);
}
