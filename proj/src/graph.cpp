#include "wdeg/graph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace wdeg {

Graph::Graph(std::size_t n)
    : adj_(n), live_(n, 1), degree_(n, 0), live_count_(n) {}

Graph::Graph(std::size_t n, std::span<const Edge> edges) : Graph(n) {
    for (const auto& [u, v] : edges) {
        if (!contains(u) || !contains(v)) {
            throw std::invalid_argument("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                        ") has an id outside 0.." + std::to_string(n) + "-1");
        }
        if (u == v) {
            throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        }
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (std::size_t v = 0; v < n; ++v) {
        auto& list = adj_[v];
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        degree_[v] = list.size();
        edge_count_ += list.size();
    }
    edge_count_ /= 2;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    if (!is_live(u) || !is_live(v)) return false;
    const auto& list = adj_[u];
    return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; static_cast<std::size_t>(u) < adj_.size(); ++u) {
        if (!live_[u]) continue;
        for (Vertex v : adj_[u]) {
            if (v > u && live_[v]) out.emplace_back(u, v);
        }
    }
    return out;
}

std::vector<Vertex> Graph::live_vertices() const {
    std::vector<Vertex> out;
    out.reserve(live_count_);
    for (Vertex v = 0; static_cast<std::size_t>(v) < adj_.size(); ++v) {
        if (live_[v]) out.push_back(v);
    }
    return out;
}

void Graph::erase(Vertex u) {
    if (!is_live(u)) {
        throw std::invalid_argument("vertex " + std::to_string(u) + " is not live");
    }
    live_[u] = 0;
    --live_count_;
    for (Vertex v : adj_[u]) {
        if (live_[v]) {
            --degree_[v];
            --edge_count_;
        }
    }
    degree_[u] = 0;
}

bool operator==(const Graph& lhs, const Graph& rhs) {
    return lhs.order() == rhs.order() && lhs.live_ == rhs.live_ && lhs.edges() == rhs.edges();
}

Graph make_graph(std::size_t n, std::span<const Edge> edges) { return Graph(n, edges); }

std::optional<std::size_t> regularity(const Graph& g) {
    std::optional<std::size_t> degree;
    for (Vertex v = 0; static_cast<std::size_t>(v) < g.order(); ++v) {
        if (!g.is_live(v)) continue;
        if (!degree) {
            degree = g.degree(v);
        } else if (*degree != g.degree(v)) {
            return std::nullopt;
        }
    }
    return degree;
}

Graph remove_vertex(const Graph& g, Vertex u) {
    Graph out = g;
    out.erase(u);
    return out;
}

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
    std::vector<std::string_view> words;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) words.push_back(line.substr(i, j - i));
        i = j;
    }
    return words;
}

std::optional<long long> to_integer(std::string_view word) {
    long long value = 0;
    const auto* end = word.data() + word.size();
    auto [ptr, ec] = std::from_chars(word.data(), end, value);
    if (ec != std::errc{} || ptr != end) return std::nullopt;
    return value;
}

}  // namespace

Graph parse_graph(std::string_view text) {
    std::optional<std::size_t> n;
    std::size_t declared_edges = 0;
    std::size_t header_line = 0;
    std::vector<Edge> edges;
    std::vector<std::pair<Edge, std::size_t>> seen;  // normalized edge, line

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t next = text.find('\n', pos);
        if (next == std::string_view::npos) next = text.size();
        std::string_view line = text.substr(pos, next - pos);
        pos = next + 1;
        ++line_no;

        auto words = split_words(line);
        if (words.empty() || words[0] == "c") continue;

        if (words[0] == "p") {
            if (n) throw ParseError(line_no, "second header (first at line " + std::to_string(header_line) + ")");
            if (words.size() != 4 || words[1] != "edge") {
                throw ParseError(line_no, "malformed header, expected \"p edge <n> <m>\"");
            }
            auto nv = to_integer(words[2]);
            auto mv = to_integer(words[3]);
            if (!nv || !mv || *nv < 0 || *mv < 0 || *nv > INT32_MAX) {
                throw ParseError(line_no, "malformed header counts");
            }
            n = static_cast<std::size_t>(*nv);
            declared_edges = static_cast<std::size_t>(*mv);
            header_line = line_no;
        } else if (words[0] == "e") {
            if (!n) throw ParseError(line_no, "edge before header");
            if (words.size() != 3) throw ParseError(line_no, "malformed edge line, expected \"e <u> <v>\"");
            auto u = to_integer(words[1]);
            auto v = to_integer(words[2]);
            if (!u || !v) throw ParseError(line_no, "malformed vertex id");
            const auto limit = static_cast<long long>(*n);
            if (*u < 1 || *u > limit || *v < 1 || *v > limit) {
                throw ParseError(line_no, "vertex id out of range 1.." + std::to_string(*n));
            }
            if (*u == *v) throw ParseError(line_no, "self-loop");
            Edge e{static_cast<Vertex>(*u - 1), static_cast<Vertex>(*v - 1)};
            if (e.first > e.second) std::swap(e.first, e.second);
            seen.emplace_back(e, line_no);
            edges.push_back(e);
        } else {
            throw ParseError(line_no, "unknown line type '" + std::string(words[0]) + "'");
        }
    }

    if (!n) throw ParseError(line_no, "missing header");

    std::sort(seen.begin(), seen.end());
    for (std::size_t i = 1; i < seen.size(); ++i) {
        if (seen[i].first == seen[i - 1].first) {
            throw ParseError(std::max(seen[i].second, seen[i - 1].second), "repeated edge (multigraph)");
        }
    }
    if (edges.size() != declared_edges) {
        throw ParseError(header_line, "header declares " + std::to_string(declared_edges) + " edges, found " +
                                          std::to_string(edges.size()));
    }
    return Graph(*n, edges);
}

std::string emit_graph(const Graph& g) {
    const auto edges = g.edges();
    std::ostringstream out;
    out << "p edge " << g.order() << ' ' << edges.size() << '\n';
    for (const auto& [u, v] : edges) out << "e " << u + 1 << ' ' << v + 1 << '\n';
    return out.str();
}

std::string to_string(const Label& label) {
    std::string out;
    out += static_cast<char>(label.role);
    out += ':';
    out += std::to_string(label.index);
    if (label.layer >= 0) {
        out += '@';
        out += std::to_string(label.layer);
    }
    return out;
}

Label parse_label(std::string_view text) {
    if (text.size() < 3 || text[1] != ':') throw std::invalid_argument("malformed label '" + std::string(text) + "'");
    Label label;
    switch (text[0]) {
        case 'a': label.role = Role::A; break;
        case 'b': label.role = Role::B; break;
        case 'c': label.role = Role::C; break;
        case 'p': label.role = Role::Pendant; break;
        case 'v': label.role = Role::Plain; break;
        default: throw std::invalid_argument("unknown label role '" + std::string(text) + "'");
    }
    auto rest = text.substr(2);
    auto at = rest.find('@');
    auto index = to_integer(rest.substr(0, at));
    if (!index) throw std::invalid_argument("malformed label index '" + std::string(text) + "'");
    label.index = static_cast<int>(*index);
    if (at != std::string_view::npos) {
        auto layer = to_integer(rest.substr(at + 1));
        if (!layer || *layer < 0) throw std::invalid_argument("malformed label layer '" + std::string(text) + "'");
        label.layer = static_cast<int>(*layer);
    }
    return label;
}

std::string emit_labels(const LabeledGraph& lg) {
    std::ostringstream out;
    for (std::size_t v = 0; v < lg.labels.size(); ++v) out << v << ' ' << to_string(lg.labels[v]) << '\n';
    return out.str();
}

std::vector<Label> plain_labels(std::size_t n) {
    std::vector<Label> labels(n);
    for (std::size_t v = 0; v < n; ++v) labels[v] = Label{Role::Plain, static_cast<int>(v) + 1, -1};
    return labels;
}

}  // namespace wdeg
