#include "wdeg/engine.hpp"

#include <algorithm>
#include <numeric>

#include <json.hpp>

namespace wdeg {

WeightMap Trace::initial_weights() const {
    if (const auto* value = std::get_if<Budget>(&initial)) return constant_weights(n, *value);
    return std::get<WeightMap>(initial);
}

std::optional<Budget> Trace::constant_initial() const {
    if (const auto* value = std::get_if<Budget>(&initial)) return *value;
    const auto& f = std::get<WeightMap>(initial);
    if (!f.empty() && std::all_of(f.begin(), f.end(), [&](Budget b) { return b == f.front(); })) return f.front();
    return std::nullopt;
}

std::string_view to_string(FailureReason reason) {
    switch (reason) {
        case FailureReason::IllegalDel: return "illegal-del";
        case FailureReason::IllegalDelSaveBudget: return "illegal-delsave-budget";
        case FailureReason::IllegalDelSaveNonadjacent: return "illegal-delsave-nonadjacent";
        case FailureReason::NegativeResult: return "negative-result";
        case FailureReason::RepeatedVertex: return "repeated-vertex";
        case FailureReason::UnknownVertex: return "unknown-vertex";
        case FailureReason::Incomplete: return "incomplete";
    }
    return "unknown";
}

State::State(Graph g, WeightMap f) : graph_(std::move(g)), f_(std::move(f)) {
    if (f_.size() != graph_.order()) {
        throw std::invalid_argument("weight map has " + std::to_string(f_.size()) + " entries for " +
                                    std::to_string(graph_.order()) + " vertices");
    }
    for (Vertex v : graph_.live_vertices()) {
        if (f_[v] < 0) throw std::invalid_argument("negative budget at vertex " + std::to_string(v));
    }
}

std::int64_t State::total() const {
    std::int64_t sum = 0;
    for (Vertex v : graph_.live_vertices()) sum += f_[v];
    return sum;
}

std::optional<FailureReason> State::check(const Step& step) const {
    const Vertex u = step.u;
    if (!graph_.contains(u)) return FailureReason::UnknownVertex;
    if (step.op == Op::DelSave && !graph_.contains(step.w)) return FailureReason::UnknownVertex;
    if (!graph_.is_live(u)) return FailureReason::RepeatedVertex;

    if (step.op == Op::DelSave) {
        if (!graph_.adjacent(u, step.w)) return FailureReason::IllegalDelSaveNonadjacent;
        if (f_[u] <= f_[step.w]) return FailureReason::IllegalDelSaveBudget;
    }
    for (Vertex v : graph_.neighbors(u)) {
        if (!graph_.is_live(v) || (step.op == Op::DelSave && v == step.w)) continue;
        if (f_[v] < 1) return step.op == Op::Del ? FailureReason::IllegalDel : FailureReason::NegativeResult;
    }
    return std::nullopt;
}

void State::apply(const Step& step) {
    if (auto reason = check(step)) {
        std::string what = step.op == Op::Del ? "Del(" + std::to_string(step.u) + ")"
                                              : "DelSave(" + std::to_string(step.u) + ", " + std::to_string(step.w) + ")";
        throw IllegalStep(*reason, what + ": " + std::string(to_string(*reason)));
    }
    for (Vertex v : graph_.neighbors(step.u)) {
        if (!graph_.is_live(v) || (step.op == Op::DelSave && v == step.w)) continue;
        --f_[v];
    }
    graph_.erase(step.u);
}

void State::del(Vertex u) { apply(Step::del(u)); }
void State::del_save(Vertex u, Vertex w) { apply(Step::del_save(u, w)); }

bool legal_del(const State& st, Vertex u) {
    if (!st.graph().is_live(u)) throw std::invalid_argument("vertex " + std::to_string(u) + " is not live");
    return !st.check(Step::del(u));
}

bool legal_delsave(const State& st, Vertex u, Vertex w) {
    if (!st.graph().is_live(u) || !st.graph().is_live(w)) {
        throw std::invalid_argument("DelSave(" + std::to_string(u) + ", " + std::to_string(w) + ") on a removed vertex");
    }
    return !st.check(Step::del_save(u, w));
}

State apply_del(State st, Vertex u) {
    st.del(u);
    return st;
}

State apply_delsave(State st, Vertex u, Vertex w) {
    st.del_save(u, w);
    return st;
}

VerifyReport verify_trace(const Graph& g, const WeightMap& f0, std::span<const Step> steps) {
    State st(g, f0);
    for (std::size_t i = 0; i < steps.size(); ++i) {
        if (auto reason = st.check(steps[i])) return {false, i, reason};
        st.apply(steps[i]);
    }
    if (!st.empty()) return {false, steps.size(), FailureReason::Incomplete};
    return {true, std::nullopt, std::nullopt};
}

VerifyReport verify_trace(const Graph& g, const WeightMap& f0, const Trace& t) {
    return verify_trace(g, f0, std::span<const Step>(t.steps));
}

VerifyReport verify_trace(const Graph& g, const Trace& t) {
    if (t.n != g.order()) return {false, 0, FailureReason::UnknownVertex};
    return verify_trace(g, t.initial_weights(), t.steps);
}

// ---------------------------------------------------------------- certificates

namespace {

using ojson = nlohmann::ordered_json;

Budget budget_from(const ojson& value, const std::string& where) {
    if (!value.is_number_integer()) throw ParseError(where + ": expected an integer");
    const auto raw = value.get<std::int64_t>();
    if (raw < 0 || raw > INT32_MAX) throw ParseError(where + ": budget outside 0.." + std::to_string(INT32_MAX));
    return static_cast<Budget>(raw);
}

Vertex vertex_from(const ojson& step, const char* key, std::size_t n, const std::string& where) {
    if (!step.contains(key) || !step[key].is_number_integer()) {
        throw ParseError(where + ": missing integer field \"" + key + "\"");
    }
    const auto raw = step[key].get<std::int64_t>();
    if (raw < 0 || static_cast<std::uint64_t>(raw) >= n) {
        throw ParseError(where + ": vertex " + std::to_string(raw) + " outside 0.." + std::to_string(n) + "-1");
    }
    return static_cast<Vertex>(raw);
}

}  // namespace

std::string emit_certificate(const Trace& t) {
    // One step per line keeps certificates diffable.
    std::string out = "{\n  \"n\": " + std::to_string(t.n) + ",\n  \"initial\": ";
    if (const auto* value = std::get_if<Budget>(&t.initial)) {
        out += std::to_string(*value);
    } else {
        out += ojson(std::get<WeightMap>(t.initial)).dump();
    }
    out += ",\n  \"steps\": [";
    for (std::size_t i = 0; i < t.steps.size(); ++i) {
        const Step& s = t.steps[i];
        out += i == 0 ? "\n    " : ",\n    ";
        if (s.op == Op::Del) {
            out += "{\"op\": \"del\", \"u\": " + std::to_string(s.u) + "}";
        } else {
            out += "{\"op\": \"dels\", \"u\": " + std::to_string(s.u) + ", \"w\": " + std::to_string(s.w) + "}";
        }
    }
    out += t.steps.empty() ? "]\n}\n" : "\n  ]\n}\n";
    return out;
}

Trace parse_certificate(std::string_view text) {
    ojson doc;
    try {
        doc = ojson::parse(text);
    } catch (const ojson::parse_error& e) {
        const auto upto = text.substr(0, std::min<std::size_t>(e.byte, text.size()));
        const auto line = static_cast<std::size_t>(std::count(upto.begin(), upto.end(), '\n')) + 1;
        throw ParseError(line, "malformed certificate JSON");
    }
    if (!doc.is_object()) throw ParseError("certificate: expected a JSON object");

    Trace t;
    if (!doc.contains("n") || !doc["n"].is_number_unsigned()) throw ParseError("certificate: missing nonnegative \"n\"");
    t.n = doc["n"].get<std::size_t>();

    if (!doc.contains("initial")) throw ParseError("certificate: missing \"initial\"");
    const auto& initial = doc["initial"];
    if (initial.is_array()) {
        if (initial.size() != t.n) {
            throw ParseError("certificate: \"initial\" has " + std::to_string(initial.size()) + " entries, expected " +
                             std::to_string(t.n));
        }
        WeightMap f;
        f.reserve(t.n);
        for (std::size_t i = 0; i < initial.size(); ++i) f.push_back(budget_from(initial[i], "initial[" + std::to_string(i) + "]"));
        t.initial = std::move(f);
    } else {
        t.initial = budget_from(initial, "initial");
    }

    if (!doc.contains("steps") || !doc["steps"].is_array()) throw ParseError("certificate: missing \"steps\" array");
    for (std::size_t i = 0; i < doc["steps"].size(); ++i) {
        const auto& step = doc["steps"][i];
        const std::string where = "steps[" + std::to_string(i) + "]";
        if (!step.is_object() || !step.contains("op") || !step["op"].is_string()) {
            throw ParseError(where + ": expected {\"op\": ...}");
        }
        const auto op = step["op"].get<std::string>();
        if (op == "del") {
            t.steps.push_back(Step::del(vertex_from(step, "u", t.n, where)));
        } else if (op == "dels") {
            t.steps.push_back(Step::del_save(vertex_from(step, "u", t.n, where), vertex_from(step, "w", t.n, where)));
        } else {
            throw ParseError(where + ": unknown op \"" + op + "\"");
        }
    }
    return t;
}

}  // namespace wdeg
