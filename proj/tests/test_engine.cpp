#include <doctest.h>

#include <random>

#include "test_util.hpp"
#include "wdeg/corpus.hpp"
#include "wdeg/engine.hpp"

using namespace wdeg;

namespace {

Graph k2() { return corpus::complete(2); }

}  // namespace

TEST_CASE("legal_del") {
    CHECK(legal_del(State(k2(), {1, 1}), 0));
    CHECK_FALSE(legal_del(State(k2(), {1, 0}), 0));
    CHECK(legal_del(State(Graph(1), {0}), 0));
    CHECK_THROWS_AS(legal_del(State(remove_vertex(k2(), 0), {1, 1}), 0), std::invalid_argument);
}

TEST_CASE("apply_del decrements exactly the neighbours") {
    const State tri = apply_del(State(corpus::complete(3), {2, 1, 1}), 0);
    CHECK(tri.graph().live_count() == 2);
    CHECK(tri.f(1) == 0);
    CHECK(tri.f(2) == 0);

    const State c4 = apply_del(State(corpus::cycle(4), constant_weights(4, 2)), 0);
    CHECK(c4.f(1) == 1);
    CHECK(c4.f(2) == 2);
    CHECK(c4.f(3) == 1);

    const State single = apply_del(State(Graph(1), {5}), 0);
    CHECK(single.empty());

    CHECK_THROWS_AS(apply_del(State(k2(), {1, 0}), 0), IllegalStep);
}

TEST_CASE("Del does not constrain the deleted vertex's own budget") {
    CHECK(legal_del(State(k2(), {0, 1}), 0));
}

TEST_CASE("legal_delsave") {
    CHECK(legal_delsave(State(k2(), {1, 0}), 0, 1));
    CHECK_FALSE(legal_delsave(State(k2(), {1, 1}), 0, 1));
    const State p3(corpus::path(3), {2, 1, 1});
    CHECK_FALSE(legal_delsave(p3, 0, 2));
    CHECK(p3.check(Step::del_save(0, 2)) == FailureReason::IllegalDelSaveNonadjacent);
    CHECK(State(k2(), {1, 1}).check(Step::del_save(0, 1)) == FailureReason::IllegalDelSaveBudget);
    CHECK(State(k2(), {1, 1}).check(Step::del_save(0, 0)) == FailureReason::IllegalDelSaveNonadjacent);
    // Saving one neighbour does not rescue another at zero.
    const State star(corpus::star(2), {3, 0, 0});
    CHECK(star.check(Step::del_save(0, 1)) == FailureReason::NegativeResult);
    CHECK_THROWS_AS(legal_delsave(State(remove_vertex(k2(), 1), {1, 0}), 0, 1), std::invalid_argument);
}

TEST_CASE("apply_delsave spares exactly the saved neighbour") {
    const State tri = apply_delsave(State(corpus::complete(3), {2, 1, 1}), 0, 1);
    CHECK(tri.f(1) == 1);
    CHECK(tri.f(2) == 0);

    const State star = apply_delsave(State(corpus::star(3), {2, 1, 1, 1}), 0, 1);
    CHECK(star.f(1) == 1);
    CHECK(star.f(2) == 0);
    CHECK(star.f(3) == 0);

    const State edge = apply_delsave(State(k2(), {1, 0}), 0, 1);
    CHECK(edge.graph().live_count() == 1);
    CHECK(edge.f(1) == 0);

    CHECK_THROWS_AS(apply_delsave(State(k2(), {1, 1}), 0, 1), IllegalStep);
}

TEST_CASE("State rejects malformed budgets") {
    CHECK_THROWS_AS(State(k2(), {1}), std::invalid_argument);
    CHECK_THROWS_AS(State(k2(), {1, -1}), std::invalid_argument);
}

TEST_CASE("verify_trace on C4 at budget 2 in cyclic order") {
    // Hand simulation: f goes (2,2,2,2) -> (.,1,2,1) -> (.,.,1,1) -> (.,.,.,0) -> empty.
    const Trace t{4, Budget{2}, {Step::del(0), Step::del(1), Step::del(2), Step::del(3)}};
    const auto r = verify_trace(corpus::cycle(4), t);
    CHECK(r.ok);
    CHECK_FALSE(r.failed_at.has_value());
}

TEST_CASE("verify_trace on C5 at budget 1 fails") {
    const Graph c5 = corpus::cycle(5);
    const Trace cyclic{5, Budget{1}, {Step::del(0), Step::del(1), Step::del(2), Step::del(3), Step::del(4)}};
    // f: (1,1,1,1,1) -> (.,0,1,1,0) -> (.,.,0,1,0) -> (.,.,.,0,0), then v3 meets v4 at 0.
    auto r = verify_trace(c5, cyclic);
    CHECK_FALSE(r.ok);
    CHECK(r.failed_at == 3u);
    CHECK(r.reason == FailureReason::IllegalDel);

    // Del(0) leaves v1 and v4 at 0; any next move on them hits a zero neighbour
    // or lacks the strict budget gap.
    const Trace saves{5, Budget{1}, {Step::del(0), Step::del(2), Step::del_save(1, 2)}};
    r = verify_trace(c5, saves);
    CHECK_FALSE(r.ok);
    CHECK(r.failed_at == 1u);
}

TEST_CASE("verify_trace failure reasons") {
    const Graph g = k2();
    auto r = verify_trace(g, Trace{2, Budget{1}, {Step::del(0)}});
    CHECK(r.reason == FailureReason::Incomplete);
    CHECK(r.failed_at == 1u);

    r = verify_trace(g, Trace{2, Budget{1}, {Step::del(0), Step::del(0)}});
    CHECK(r.reason == FailureReason::RepeatedVertex);
    CHECK(r.failed_at == 1u);

    r = verify_trace(g, Trace{2, Budget{1}, {Step::del(0), Step::del(5)}});
    CHECK(r.reason == FailureReason::UnknownVertex);

    r = verify_trace(g, Trace{3, Budget{1}, {}});
    CHECK(r.reason == FailureReason::UnknownVertex);

    r = verify_trace(g, Trace{2, WeightMap{1, 0}, {Step::del_save(0, 1), Step::del(1)}});
    CHECK(r.ok);
}

TEST_CASE("random legal walks keep the sum bookkeeping exact (property)") {
    std::mt19937_64 rng(2024);
    for (const Graph& g : corpus::random_graphs(60, 2, 10, 5)) {
        WeightMap f(g.order());
        for (auto& x : f) x = static_cast<Budget>(rng() % 4);
        State st(g, f);
        const auto steps = testing::random_legal_walk(st, rng);
        for (const Step& s : steps) {
            if (s.op == Op::DelSave) REQUIRE(st.f(s.u) >= 1);
            const auto before = st.total();
            const auto deg = static_cast<std::int64_t>(st.graph().degree(s.u));
            const std::int64_t x = s.op == Op::DelSave ? 1 : 0;
            const auto fu = st.f(s.u);
            st.apply(s);
            REQUIRE(before - st.total() == fu + deg - x);
            for (Vertex v : st.graph().live_vertices()) REQUIRE(st.f(v) >= 0);
        }
    }
}

TEST_CASE("verify_trace is pure") {
    const Graph g = corpus::cycle(4);
    const std::string before = emit_graph(g);
    const Trace t{4, Budget{2}, {Step::del(0), Step::del(2), Step::del(1), Step::del(3)}};
    const auto r1 = verify_trace(g, t);
    const auto r2 = verify_trace(g, t);
    CHECK(r1.ok == r2.ok);
    CHECK(r1.failed_at == r2.failed_at);
    CHECK(emit_graph(g) == before);
    CHECK(g.live_count() == 4);
}

TEST_CASE("certificate text format") {
    const Trace t{2, Budget{1}, {Step::del_save(0, 1), Step::del(1)}};
    const std::string text = emit_certificate(t);
    CHECK(text ==
          "{\n  \"n\": 2,\n  \"initial\": 1,\n  \"steps\": [\n"
          "    {\"op\": \"dels\", \"u\": 0, \"w\": 1},\n    {\"op\": \"del\", \"u\": 1}\n  ]\n}\n");
    CHECK(parse_certificate(text) == t);

    const Trace vec{3, WeightMap{1, 0, 2}, {}};
    CHECK(parse_certificate(emit_certificate(vec)) == vec);

    const Trace compact = parse_certificate(R"({"n":2,"initial":[1,0],"steps":[{"op":"dels","u":0,"w":1},{"op":"del","u":1}]})");
    CHECK(verify_trace(k2(), compact).ok);
}

TEST_CASE("certificate parse errors") {
    CHECK_THROWS_AS(parse_certificate("{"), ParseError);
    CHECK_THROWS_AS(parse_certificate("[]"), ParseError);
    CHECK_THROWS_AS(parse_certificate(R"({"initial":1,"steps":[]})"), ParseError);
    CHECK_THROWS_AS(parse_certificate(R"({"n":2,"initial":[1],"steps":[]})"), ParseError);
    CHECK_THROWS_AS(parse_certificate(R"({"n":2,"initial":-1,"steps":[]})"), ParseError);
    CHECK_THROWS_AS(parse_certificate(R"({"n":2,"initial":1,"steps":[{"op":"del","u":2}]})"), ParseError);
    CHECK_THROWS_AS(parse_certificate(R"({"n":2,"initial":1,"steps":[{"op":"dels","u":0}]})"), ParseError);
    CHECK_THROWS_AS(parse_certificate(R"({"n":2,"initial":1,"steps":[{"op":"cut","u":0}]})"), ParseError);
    try {
        parse_certificate("{\n  \"n\": 2,\n  oops\n}");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
}
