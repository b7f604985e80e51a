#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wdeg {

using Vertex = std::int32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Raised by the text readers; carries the 1-based line that failed.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    explicit ParseError(const std::string& what) : std::runtime_error(what), line_(0) {}

    /// 0 when the error is not tied to a single line.
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Simple undirected graph on ids 0..order()-1.
///
/// Vertices are never renumbered. Removing a vertex clears its live bit and
/// adjusts the live degree of its neighbours, so deletion sequences can keep
/// referring to original ids. Adjacency lists keep every original neighbour;
/// queries such as degree() and adjacent() only count live vertices.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n);

    /// Builds a graph from an edge list. Duplicate pairs collapse into one
    /// edge; self-loops and out-of-range ids throw std::invalid_argument.
    Graph(std::size_t n, std::span<const Edge> edges);

    std::size_t order() const noexcept { return adj_.size(); }
    std::size_t live_count() const noexcept { return live_count_; }
    std::size_t edge_count() const noexcept { return edge_count_; }
    bool empty() const noexcept { return live_count_ == 0; }

    bool contains(Vertex v) const noexcept {
        return v >= 0 && static_cast<std::size_t>(v) < adj_.size();
    }
    bool is_live(Vertex v) const noexcept { return contains(v) && live_[v] != 0; }

    /// Every original neighbour of v, sorted, including removed ones.
    std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(v); }

    /// Number of live neighbours of a live vertex.
    std::size_t degree(Vertex v) const { return degree_.at(v); }

    bool adjacent(Vertex u, Vertex v) const;

    /// Live edges as (u, v) with u < v, lexicographically sorted.
    std::vector<Edge> edges() const;
    std::vector<Vertex> live_vertices() const;

    /// Removes u in place. Throws std::invalid_argument if u is not live.
    void erase(Vertex u);

    friend bool operator==(const Graph& lhs, const Graph& rhs);

private:
    std::vector<std::vector<Vertex>> adj_;
    std::vector<char> live_;
    std::vector<std::size_t> degree_;
    std::size_t live_count_ = 0;
    std::size_t edge_count_ = 0;
};

Graph make_graph(std::size_t n, std::span<const Edge> edges);

/// d if every live vertex has live degree d; empty otherwise. The empty
/// graph has no degree.
std::optional<std::size_t> regularity(const Graph& g);

/// G - u as a new value.
Graph remove_vertex(const Graph& g, Vertex u);

/// Reads the "p edge n m" / "e u v" text format (1-based ids, "c" comments).
Graph parse_graph(std::string_view text);

/// Canonical text form: header, then edges sorted with u < v.
std::string emit_graph(const Graph& g);

// Role tags used by the regular-graph constructions.
enum class Role : char { A = 'a', B = 'b', C = 'c', Pendant = 'p', Plain = 'v' };

struct Label {
    Role role = Role::Plain;
    int index = 0;   // 1-based position inside the role's family
    int layer = -1;  // lift layer, -1 when the graph is not lifted

    friend bool operator==(const Label&, const Label&) = default;
};

/// "a:5", "p:3", "v:0@2" etc.
std::string to_string(const Label& label);
Label parse_label(std::string_view text);

struct LabeledGraph {
    Graph graph;
    std::vector<Label> labels;  // indexed by vertex id
};

/// One line per vertex: "<id> <label>" with 0-based ids.
std::string emit_labels(const LabeledGraph& lg);

/// Plain labels v:1..v:n for an unlabeled graph.
std::vector<Label> plain_labels(std::size_t n);

}  // namespace wdeg
