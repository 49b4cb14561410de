#pragma once

#include "kpg/degree_sequence.hpp"

#include <compare>
#include <cstdint>
#include <istream>
#include <string>
#include <vector>

namespace kpg {

using Vertex = int;

/// Unordered vertex pair, normalized so that u < v.
struct Edge {
    Vertex u;
    Vertex v;

    Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Labeled undirected simple graph on vertices 0..n-1 backed by an adjacency
/// matrix. Loops, duplicate edges and out-of-range endpoints are rejected.
class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(int n);
    SimpleGraph(int n, const std::vector<Edge>& edges);

    static SimpleGraph complete(int n);
    static SimpleGraph cycle(int n);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    bool has_edge(Vertex a, Vertex b) const;
    int degree(Vertex v) const { return degrees_.at(static_cast<std::size_t>(v)); }
    const std::vector<int>& degrees() const { return degrees_; }

    /// Throws DomainError on a loop, an existing edge or a bad endpoint.
    void add_edge(Vertex a, Vertex b);
    /// Throws DomainError if the edge is absent.
    void remove_edge(Vertex a, Vertex b);

    /// Appends an isolated vertex and returns its index.
    Vertex add_vertex();

    /// All edges, lexicographically sorted.
    std::vector<Edge> edges() const;
    std::vector<Vertex> neighbors(Vertex v) const;

    /// Graph text format: "n m" then m sorted lines "u v".
    std::string to_text() const;

    friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

private:
    void check_vertex(Vertex v) const;
    std::size_t index(Vertex a, Vertex b) const
    {
        return static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(b);
    }

    int n_ = 0;
    int m_ = 0;
    std::vector<std::uint8_t> adj_;
    std::vector<int> degrees_;
};

/// Reads one graph in the text format. Throws ParseError on malformed input.
SimpleGraph read_graph(std::istream& in);
SimpleGraph parse_graph(const std::string& text);

/// Sorted non-increasing degree list of g. Throws DomainError on the empty graph.
DegreeSequence degree_sequence(const SimpleGraph& g);

/// Disjoint union plus every edge between the two vertex sets; h's vertices
/// are relabeled to n_g..n_g+n_h-1.
SimpleGraph join(const SimpleGraph& g, const SimpleGraph& h);

} // namespace kpg
