#include "wdeg/constructions.hpp"

#include <stdexcept>
#include <string>

namespace wdeg {

namespace {

constexpr int kMaxOddParameter = 100;

void require_regular(const Graph& g, std::size_t d, const char* what) {
    auto degree = regularity(g);
    if (!degree || *degree != d) {
        throw std::logic_error(std::string(what) + " is not " + std::to_string(d) + "-regular");
    }
}

}  // namespace

OddConstruction build_odd(int k) {
    if (k < 1) throw std::invalid_argument("odd construction needs k >= 1, got " + std::to_string(k));
    if (k > kMaxOddParameter) {
        throw std::invalid_argument("odd construction supports k <= " + std::to_string(kMaxOddParameter));
    }

    OddConstruction oc;
    oc.k = k;
    oc.s = 6 * k * k * k + 6 * k * k + 2 * k;
    const int s = oc.s;
    const int degree = 2 * k + 1;
    const std::size_t n = static_cast<std::size_t>(3 * s + oc.pendant_count());

    std::vector<Edge> edges;
    std::vector<int> deg(n, 0);
    auto join = [&](Vertex u, Vertex v) {
        edges.emplace_back(u, v);
        ++deg[u];
        ++deg[v];
    };

    for (int i = 1; i <= s; ++i) {
        for (int j = i + 1; j <= std::min(s, i + k - 1); ++j) join(oc.a(i), oc.a(j));
        for (int j = i + 1; j <= std::min(s, i + k); ++j) {
            join(oc.b(i), oc.b(j));
            join(oc.c(i), oc.c(j));
        }
        join(oc.a(i), oc.b(i));
        join(oc.a(i), oc.c(i));
    }

    // Pendants for the boundary vertices, in the order A, B, C and within
    // each family left boundary then right boundary.
    int next_pendant = 1;
    for (auto family : {&OddConstruction::a, &OddConstruction::b, &OddConstruction::c}) {
        for (int i = 1; i <= s; ++i) {
            if (oc.interior(i)) continue;
            const Vertex v = (oc.*family)(i);
            for (int missing = degree - deg[v]; missing > 0; --missing) {
                if (next_pendant > oc.pendant_count()) throw std::logic_error("odd construction ran out of pendants");
                join(v, oc.pendant(next_pendant++));
            }
        }
    }
    if (next_pendant != oc.pendant_count() + 1) throw std::logic_error("odd construction left pendants unused");

    // phi: consecutive blocks of 2k interior a-vertices per pendant.
    oc.phi.reserve(static_cast<std::size_t>(s - 2 * k));
    for (int i = k + 1; i <= s - k; ++i) {
        const Vertex p = oc.pendant((i - (k + 1)) / (2 * k) + 1);
        oc.phi.push_back(p);
        join(oc.a(i), p);
    }

    oc.lg.graph = Graph(n, edges);
    oc.lg.labels.resize(n);
    for (int i = 1; i <= s; ++i) {
        oc.lg.labels[oc.a(i)] = {Role::A, i, -1};
        oc.lg.labels[oc.b(i)] = {Role::B, i, -1};
        oc.lg.labels[oc.c(i)] = {Role::C, i, -1};
    }
    for (int j = 1; j <= oc.pendant_count(); ++j) oc.lg.labels[oc.pendant(j)] = {Role::Pendant, j, -1};

    require_regular(oc.lg.graph, static_cast<std::size_t>(degree), "odd construction");
    return oc;
}

OddStrategy odd_strategy(const OddConstruction& oc) {
    const Graph& g = oc.lg.graph;
    const Budget start = oc.k + 1;

    OddStrategy out;
    out.trace.n = g.order();
    out.trace.initial = start;
    out.trace.steps.reserve(g.order());

    State st(g, constant_weights(g.order(), start));
    auto take = [&](const Step& step) {
        if (auto reason = st.check(step)) {
            throw std::logic_error("odd strategy hit an illegal step at vertex " + std::to_string(step.u) + ": " +
                                   std::string(to_string(*reason)));
        }
        st.apply(step);
        out.trace.steps.push_back(step);
    };

    for (int i = 1; i <= oc.s; ++i) {
        const Vertex a = oc.a(i);
        if (st.f(a) < 0) out.v1_nonnegative = false;
        if (oc.interior(i)) {
            out.interior_a_budgets.push_back(st.f(a));
            const Vertex p = oc.phi_of(i);
            const bool legal = legal_delsave(st, a, p);
            // With f(a_i) = 2 a save is legal exactly when phi(a_i) is down to 1 or 0.
            if (legal != (st.f(p) <= 1)) {
                throw std::logic_error("DelSave legality at a_" + std::to_string(i) +
                                       " disagrees with the f(phi(a_i)) <= 1 test");
            }
            if (legal) {
                take(Step::del_save(a, p));
                ++out.saves;
            } else {
                take(Step::del(a));
            }
        } else {
            take(Step::del(a));
        }
        for (Vertex v : {oc.b(i), oc.c(i)}) {
            if (st.f(v) < 0) out.v1_nonnegative = false;
            take(Step::del(v));
        }
    }

    for (int j = 1; j <= oc.pendant_count(); ++j) {
        if (st.f(oc.pendant(j)) < 0) out.pendants_nonnegative = false;
    }
    for (int j = 1; j <= oc.pendant_count(); ++j) take(Step::del(oc.pendant(j)));
    return out;
}

LabeledGraph lift(const LabeledGraph& base, std::size_t d) {
    const Graph& g = base.graph;
    if (g.live_count() != g.order()) throw std::invalid_argument("lift needs a graph without removed vertices");
    auto degree = regularity(g);
    if (!degree || *degree != d) throw std::invalid_argument("lift needs a " + std::to_string(d) + "-regular graph");
    if (base.labels.size() != g.order()) throw std::invalid_argument("label count does not match the graph");

    const auto n = static_cast<Vertex>(g.order());
    const auto layers = static_cast<Vertex>(d + 2);
    const auto base_edges = g.edges();

    std::vector<Edge> edges;
    edges.reserve(base_edges.size() * (d + 1) + g.order() * (d + 1));
    for (Vertex layer = 1; layer < layers; ++layer) {
        for (const auto& [u, v] : base_edges) edges.emplace_back(layer * n + u, layer * n + v);
        for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, layer * n + v);
    }

    LabeledGraph out;
    out.graph = Graph(g.order() * (d + 2), edges);
    out.labels.reserve(out.graph.order());
    for (Vertex layer = 0; layer < layers; ++layer) {
        for (const Label& label : base.labels) out.labels.push_back({label.role, label.index, layer});
    }
    require_regular(out.graph, d + 1, "lifted graph");
    return out;
}

LabeledGraph lift(const Graph& g, std::size_t d) { return lift(LabeledGraph{g, plain_labels(g.order())}, d); }

Trace lift_strategy(const Trace& inner, const Graph& g, std::size_t d) {
    const auto w = inner.constant_initial();
    if (!w) throw std::invalid_argument("lift_strategy needs a constant initial budget");
    if (auto report = verify_trace(g, inner); !report.ok) {
        throw std::invalid_argument("inner trace does not verify (step " + std::to_string(report.failed_at.value_or(0)) +
                                    ": " + std::string(to_string(*report.reason)) + ")");
    }

    const auto n = static_cast<Vertex>(g.order());
    Trace out;
    out.n = g.order() * (d + 2);
    out.initial = *w + 1;
    out.steps.reserve(out.n);
    for (Vertex v = 0; v < n; ++v) out.steps.push_back(Step::del(v));
    for (Vertex layer = 1; layer <= static_cast<Vertex>(d + 1); ++layer) {
        const Vertex shift = layer * n;
        for (const Step& s : inner.steps) {
            out.steps.push_back(s.op == Op::Del ? Step::del(s.u + shift) : Step::del_save(s.u + shift, s.w + shift));
        }
    }
    return out;
}

DegreeConstruction build_for_degree(std::size_t d) {
    if (d < 3) throw std::invalid_argument("build_for_degree needs d >= 3, got " + std::to_string(d));

    DegreeConstruction out;
    out.degree = d;
    if (d % 2 == 1) {
        const auto oc = build_odd(static_cast<int>((d - 1) / 2));
        out.trace = odd_strategy(oc).trace;
        out.claimed_wd = oc.k + 1;
        out.lg = oc.lg;
    } else {
        const auto inner = build_for_degree(d - 1);
        out.lg = lift(inner.lg, d - 1);
        out.trace = lift_strategy(inner.trace, inner.lg.graph, d - 1);
        out.claimed_wd = inner.claimed_wd + 1;
    }

    require_regular(out.lg.graph, d, "degree construction");
    if (auto report = verify_trace(out.lg.graph, out.trace); !report.ok) {
        throw std::logic_error("degree construction certificate failed at step " +
                               std::to_string(report.failed_at.value_or(0)));
    }
    return out;
}

}  // namespace wdeg
