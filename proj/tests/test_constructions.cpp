#include <doctest.h>

#include <cstdlib>
#include <map>
#include <set>

#include "wdeg/constructions.hpp"
#include "wdeg/corpus.hpp"
#include "wdeg/solver.hpp"

using namespace wdeg;

namespace {

// Adjacency rule for two A/B/C vertices, straight from the index conditions.
bool v1_rule(const Label& x, const Label& y) {
    const int gap = std::abs(x.index - y.index);
    if (x.role == y.role) return false;  // handled by the caller
    const bool ab = (x.role == Role::A && (y.role == Role::B || y.role == Role::C)) ||
                    (y.role == Role::A && (x.role == Role::B || x.role == Role::C));
    return ab && gap == 0;
}

bool same_family_rule(const Label& x, const Label& y, int k) {
    const int gap = std::abs(x.index - y.index);
    if (x.role == Role::A) return gap >= 1 && gap <= k - 1;
    return gap >= 1 && gap <= k;
}

}  // namespace

TEST_CASE("build_odd sizes") {
    const int expected_n[] = {0, 48, 246, 702};
    for (int k = 1; k <= 3; ++k) {
        const auto oc = build_odd(k);
        CHECK(oc.s == 6 * k * k * k + 6 * k * k + 2 * k);
        CHECK(oc.s > 2 * k);
        CHECK(oc.pendant_count() == 3 * k * (k + 1));
        CHECK(oc.lg.graph.order() == static_cast<std::size_t>(expected_n[k]));
        CHECK(regularity(oc.lg.graph) == static_cast<std::size_t>(2 * k + 1));
    }
    CHECK(build_odd(1).s == 14);
    CHECK(build_odd(2).s == 76);
    CHECK(build_odd(3).s == 222);
    CHECK_THROWS_AS(build_odd(0), std::invalid_argument);
    CHECK_THROWS_AS(build_odd(-3), std::invalid_argument);
}

TEST_CASE("build_odd follows the edge rules exactly") {
    for (int k = 1; k <= 3; ++k) {
        const auto oc = build_odd(k);
        const Graph& g = oc.lg.graph;
        const auto& labels = oc.lg.labels;
        const auto v1_size = static_cast<Vertex>(3 * oc.s);

        // Every pair inside V1.
        for (Vertex u = 0; u < v1_size; ++u) {
            for (Vertex v = u + 1; v < v1_size; ++v) {
                const Label& x = labels[u];
                const Label& y = labels[v];
                const bool expected = x.role == y.role ? same_family_rule(x, y, k) : v1_rule(x, y);
                REQUIRE_MESSAGE(g.adjacent(u, v) == expected, to_string(x) << " " << to_string(y));
            }
        }

        // Pendants: independent, one boundary neighbour, 2k interior a's.
        std::map<Vertex, int> fiber;
        for (int i = k + 1; i <= oc.s - k; ++i) ++fiber[oc.phi_of(i)];
        CHECK(fiber.size() == static_cast<std::size_t>(oc.pendant_count()));
        for (int j = 1; j <= oc.pendant_count(); ++j) {
            const Vertex p = oc.pendant(j);
            CHECK(fiber[p] == 2 * k);
            int boundary = 0;
            int interior_a = 0;
            for (Vertex w : g.neighbors(p)) {
                const Label& l = labels[w];
                REQUIRE(l.role != Role::Pendant);
                if (!oc.interior(l.index)) ++boundary;
                else if (l.role == Role::A && oc.phi_of(l.index) == p) ++interior_a;
            }
            CHECK(boundary == 1);
            CHECK(interior_a == 2 * k);
        }

        // Boundary vertices get exactly their missing degree in pendants.
        for (Vertex v = 0; v < v1_size; ++v) {
            int in_v1 = 0;
            int pendants = 0;
            for (Vertex w : g.neighbors(v)) (w < v1_size ? in_v1 : pendants) += 1;
            if (!oc.interior(labels[v].index)) {
                CHECK(pendants == 2 * k + 1 - in_v1);
            } else {
                CHECK(pendants == (labels[v].role == Role::A ? 1 : 0));
            }
        }
    }
}

TEST_CASE("build_odd labels are a bijection onto the role families") {
    const auto oc = build_odd(2);
    std::set<std::string> seen;
    for (const Label& l : oc.lg.labels) seen.insert(to_string(l));
    CHECK(seen.size() == oc.lg.graph.order());
    CHECK(seen.count("a:1") == 1);
    CHECK(seen.count("c:76") == 1);
    CHECK(seen.count("p:18") == 1);
    CHECK(seen.count("p:19") == 0);
    CHECK(oc.lg.labels[oc.b(5)] == Label{Role::B, 5, -1});
}

TEST_CASE("odd_strategy certificates") {
    for (int k = 1; k <= 3; ++k) {
        const auto oc = build_odd(k);
        const auto run = odd_strategy(oc);
        CHECK(run.trace.steps.size() == oc.lg.graph.order());
        CHECK(run.trace.constant_initial() == k + 1);
        CHECK(verify_trace(oc.lg.graph, run.trace).ok);
        CHECK(run.v1_nonnegative);
        CHECK(run.pendants_nonnegative);
        CHECK(run.interior_a_budgets.size() == static_cast<std::size_t>(oc.s - 2 * k));
        for (Budget b : run.interior_a_budgets) REQUIRE(b == 2);
        CHECK(run.saves > 0);
        // The same graph is not weakly k-degenerate: start one lower and it fails.
        Trace lower = run.trace;
        lower.initial = Budget{k};
        CHECK_FALSE(verify_trace(oc.lg.graph, lower).ok);
    }
}

TEST_CASE("odd_strategy is deterministic") {
    const auto a = odd_strategy(build_odd(2));
    const auto b = odd_strategy(build_odd(2));
    CHECK(emit_certificate(a.trace) == emit_certificate(b.trace));
    CHECK(emit_graph(build_odd(2).lg.graph) == emit_graph(build_odd(2).lg.graph));
}

TEST_CASE("lift") {
    const auto c4 = lift(corpus::cycle(4), 2);
    CHECK(c4.graph.order() == 16);
    CHECK(regularity(c4.graph) == 3u);
    CHECK(c4.labels[5] == Label{Role::Plain, 2, 1});

    const auto k2 = lift(corpus::complete(2), 1);
    CHECK(k2.graph.order() == 6);
    CHECK(regularity(k2.graph) == 2u);

    const auto odd = lift(build_odd(1).lg, 3);
    CHECK(odd.graph.order() == 240);
    CHECK(regularity(odd.graph) == 4u);
    CHECK(odd.labels[48] == Label{Role::A, 1, 1});

    CHECK_THROWS_AS(lift(corpus::path(3), 1), std::invalid_argument);
    CHECK_THROWS_AS(lift(corpus::cycle(4), 3), std::invalid_argument);

    // Layer structure: (v,i) ~ (v,0), and copies mirror the base graph.
    const Graph& g = c4.graph;
    for (Vertex v = 0; v < 4; ++v) {
        for (Vertex layer = 1; layer <= 3; ++layer) CHECK(g.adjacent(v, layer * 4 + v));
    }
    CHECK(g.adjacent(4 + 0, 4 + 1));
    CHECK_FALSE(g.adjacent(4 + 0, 4 + 2));
    CHECK_FALSE(g.adjacent(0, 1));
}

TEST_CASE("lift_strategy") {
    const Graph c4 = corpus::cycle(4);
    const Trace inner{4, Budget{2}, {Step::del(0), Step::del(1), Step::del(2), Step::del(3)}};
    const auto lifted = lift(c4, 2);
    const Trace outer = lift_strategy(inner, c4, 2);
    CHECK(outer.constant_initial() == 3);
    CHECK(outer.steps.size() == 16);
    CHECK(verify_trace(lifted.graph, outer).ok);

    const auto oc = build_odd(1);
    const auto big = lift(oc.lg, 3);
    const Trace t = lift_strategy(odd_strategy(oc).trace, oc.lg.graph, 3);
    CHECK(t.constant_initial() == 3);
    CHECK(verify_trace(big.graph, t).ok);

    Trace missing = inner;
    missing.steps.pop_back();
    CHECK_THROWS_AS(lift_strategy(missing, c4, 2), std::invalid_argument);
    const Trace uneven{4, WeightMap{2, 2, 2, 3}, inner.steps};
    CHECK_THROWS_AS(lift_strategy(uneven, c4, 2), std::invalid_argument);
}

TEST_CASE("build_for_degree") {
    const auto d3 = build_for_degree(3);
    CHECK(d3.lg.graph.order() == 48);
    CHECK(d3.claimed_wd == 2);

    const auto d4 = build_for_degree(4);
    CHECK(d4.lg.graph.order() == 240);
    CHECK(d4.claimed_wd == 3);
    CHECK(regularity(d4.lg.graph) == 4u);
    CHECK(verify_trace(d4.lg.graph, d4.trace).ok);

    const auto d5 = build_for_degree(5);
    CHECK(d5.lg.graph.order() == 246);
    CHECK(d5.claimed_wd == 3);

    const auto d6 = build_for_degree(6);
    CHECK(d6.lg.graph.order() == 246 * 7);
    CHECK(d6.claimed_wd == 4);
    CHECK(verify_trace(d6.lg.graph, d6.trace).ok);

    CHECK_THROWS_AS(build_for_degree(1), std::invalid_argument);
    CHECK_THROWS_AS(build_for_degree(2), std::invalid_argument);
    CHECK_THROWS_AS(build_for_degree(0), std::invalid_argument);
}
