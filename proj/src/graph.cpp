#include "kpg/graph.hpp"

#include "kpg/error.hpp"

#include <sstream>

namespace kpg {

SimpleGraph::SimpleGraph(int n) : n_(n)
{
    if (n < 0)
        throw DomainError("vertex count must be non-negative");
    adj_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    degrees_.assign(static_cast<std::size_t>(n), 0);
}

SimpleGraph::SimpleGraph(int n, const std::vector<Edge>& edges) : SimpleGraph(n)
{
    for (const auto& e : edges)
        add_edge(e.u, e.v);
}

SimpleGraph SimpleGraph::complete(int n)
{
    SimpleGraph g(n);
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            g.add_edge(a, b);
    return g;
}

SimpleGraph SimpleGraph::cycle(int n)
{
    if (n < 3)
        throw DomainError("a cycle needs at least 3 vertices");
    SimpleGraph g(n);
    for (Vertex a = 0; a < n; ++a)
        g.add_edge(a, (a + 1) % n);
    return g;
}

void SimpleGraph::check_vertex(Vertex v) const
{
    if (v < 0 || v >= n_)
        throw DomainError("vertex " + std::to_string(v) + " out of range [0, " + std::to_string(n_) + ")");
}

bool SimpleGraph::has_edge(Vertex a, Vertex b) const
{
    check_vertex(a);
    check_vertex(b);
    return adj_[index(a, b)] != 0;
}

void SimpleGraph::add_edge(Vertex a, Vertex b)
{
    check_vertex(a);
    check_vertex(b);
    if (a == b)
        throw DomainError("loop at vertex " + std::to_string(a));
    if (adj_[index(a, b)])
        throw DomainError("duplicate edge " + std::to_string(a) + " " + std::to_string(b));
    adj_[index(a, b)] = adj_[index(b, a)] = 1;
    ++degrees_[static_cast<std::size_t>(a)];
    ++degrees_[static_cast<std::size_t>(b)];
    ++m_;
}

void SimpleGraph::remove_edge(Vertex a, Vertex b)
{
    if (!has_edge(a, b))
        throw DomainError("missing edge " + std::to_string(a) + " " + std::to_string(b));
    adj_[index(a, b)] = adj_[index(b, a)] = 0;
    --degrees_[static_cast<std::size_t>(a)];
    --degrees_[static_cast<std::size_t>(b)];
    --m_;
}

Vertex SimpleGraph::add_vertex()
{
    SimpleGraph bigger(n_ + 1);
    for (const auto& e : edges())
        bigger.add_edge(e.u, e.v);
    *this = std::move(bigger);
    return n_ - 1;
}

std::vector<Edge> SimpleGraph::edges() const
{
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (Vertex a = 0; a < n_; ++a)
        for (Vertex b = a + 1; b < n_; ++b)
            if (adj_[index(a, b)])
                out.emplace_back(a, b);
    return out;
}

std::vector<Vertex> SimpleGraph::neighbors(Vertex v) const
{
    check_vertex(v);
    std::vector<Vertex> out;
    for (Vertex w = 0; w < n_; ++w)
        if (adj_[index(v, w)])
            out.push_back(w);
    return out;
}

std::string SimpleGraph::to_text() const
{
    std::string out = std::to_string(n_) + ' ' + std::to_string(m_) + '\n';
    for (const auto& e : edges())
        out += std::to_string(e.u) + ' ' + std::to_string(e.v) + '\n';
    return out;
}

SimpleGraph read_graph(std::istream& in)
{
    long long n = -1, m = -1;
    if (!(in >> n >> m) || n < 0 || m < 0)
        throw ParseError("graph text must start with 'n m'");
    SimpleGraph g(static_cast<int>(n));
    for (long long i = 0; i < m; ++i) {
        long long u = 0, v = 0;
        if (!(in >> u >> v))
            throw ParseError("graph text ended after " + std::to_string(i) + " of " + std::to_string(m) + " edges");
        try {
            g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
        } catch (const DomainError& e) {
            throw ParseError(std::string("bad edge in graph text: ") + e.what());
        }
    }
    return g;
}

SimpleGraph parse_graph(const std::string& text)
{
    std::istringstream in(text);
    return read_graph(in);
}

DegreeSequence degree_sequence(const SimpleGraph& g)
{
    return DegreeSequence(g.degrees());
}

SimpleGraph join(const SimpleGraph& g, const SimpleGraph& h)
{
    const int ng = g.vertex_count();
    SimpleGraph out(ng + h.vertex_count());
    for (const auto& e : g.edges())
        out.add_edge(e.u, e.v);
    for (const auto& e : h.edges())
        out.add_edge(e.u + ng, e.v + ng);
    for (Vertex a = 0; a < ng; ++a)
        for (Vertex b = 0; b < h.vertex_count(); ++b)
            out.add_edge(a, b + ng);
    return out;
}

} // namespace kpg
