#include "kpg/decomp.hpp"

#include "kpg/error.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace kpg {

namespace {

std::vector<Edge> cycle_edges(const std::vector<Vertex>& order)
{
    std::vector<Edge> out;
    for (std::size_t i = 0; i < order.size(); ++i)
        out.emplace_back(order[i], order[(i + 1) % order.size()]);
    std::sort(out.begin(), out.end());
    return out;
}

// Walecki zig-zag on the circle Z_{2m} with hub 2m:
// hub, i, i+1, i-1, i+2, i-2, ..., i+m.
std::vector<std::vector<Vertex>> walecki_cycles(int m)
{
    const int circle = 2 * m;
    const Vertex hub = circle;
    std::vector<std::vector<Vertex>> cycles;
    for (int i = 0; i < m; ++i) {
        std::vector<Vertex> order{hub, i};
        for (int j = 1; j <= m; ++j) {
            order.push_back((i + j) % circle);
            if (j < m)
                order.push_back(((i - j) % circle + circle) % circle);
        }
        cycles.push_back(std::move(order));
    }
    return cycles;
}

std::vector<Vertex> order_from_edges(int n, const std::vector<Edge>& edges)
{
    std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n));
    for (const auto& e : edges) {
        adj[static_cast<std::size_t>(e.u)].push_back(e.v);
        adj[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    std::vector<Vertex> order;
    if (edges.empty())
        return order;
    Vertex prev = -1;
    Vertex cur = edges.front().u;
    const Vertex start = cur;
    do {
        order.push_back(cur);
        const auto& nb = adj[static_cast<std::size_t>(cur)];
        if (nb.size() != 2)
            return {};
        Vertex next = nb[0] != prev ? nb[0] : nb[1];
        prev = cur;
        cur = next;
    } while (cur != start && order.size() <= static_cast<std::size_t>(n));
    return order;
}

} // namespace

std::string to_string(PartRole role)
{
    return role == PartRole::OneFactor ? "one-factor" : "spanning-cycle";
}

std::string Decomposition::to_text() const
{
    std::string out = "decomposition " + std::to_string(n) + ' ' + std::to_string(parts.size()) + '\n';
    for (std::size_t i = 0; i < parts.size(); ++i) {
        out += "part " + std::to_string(i) + ' ' + to_string(parts[i].role) + '\n';
        out += SimpleGraph(n, parts[i].edges).to_text();
    }
    return out;
}

Decomposition decompose_odd(int m)
{
    if (m < 1)
        throw DomainError("decompose_odd needs m >= 1");
    Decomposition d{2 * m + 1, {}};
    for (auto& order : walecki_cycles(m))
        d.parts.push_back({PartRole::SpanningCycle, cycle_edges(order), std::move(order)});
    return d;
}

// K_{2m} = K_{2m-1} plus a new vertex b. Each Walecki cycle of K_{2m-1} gives
// up its middle edge (positions m-1, m) and routes through b instead; those
// middle edges avoid the hub and are pairwise disjoint, so together with
// {hub, b} they form the perfect matching.
Decomposition decompose_even(int m)
{
    if (m < 1)
        throw DomainError("decompose_even needs m >= 1");
    Decomposition d{2 * m, {}};
    if (m == 1) {
        d.parts.push_back({PartRole::OneFactor, {Edge(0, 1)}, {}});
        return d;
    }
    const int k = m - 1;
    const Vertex hub = 2 * k;
    const Vertex extra = 2 * m - 1;
    std::vector<Edge> matching;
    std::vector<DecompositionPart> cycles;
    for (auto order : walecki_cycles(k)) {
        const auto pos = static_cast<std::size_t>(k);
        matching.emplace_back(order[pos], order[pos + 1]);
        order.insert(order.begin() + static_cast<std::ptrdiff_t>(pos + 1), extra);
        cycles.push_back({PartRole::SpanningCycle, cycle_edges(order), std::move(order)});
    }
    matching.emplace_back(hub, extra);
    std::sort(matching.begin(), matching.end());
    d.parts.push_back({PartRole::OneFactor, std::move(matching), {}});
    for (auto& c : cycles)
        d.parts.push_back(std::move(c));
    return d;
}

std::optional<std::string> check_decomposition(const Decomposition& d)
{
    const int n = d.n;
    if (n < 1)
        return "decomposition order must be positive";
    std::set<Edge> seen;
    for (std::size_t i = 0; i < d.parts.size(); ++i) {
        const auto& part = d.parts[i];
        const std::string tag = "part " + std::to_string(i) + " (" + to_string(part.role) + "): ";
        std::vector<int> deg(static_cast<std::size_t>(n), 0);
        for (const auto& e : part.edges) {
            if (e.u < 0 || e.v >= n || e.u == e.v)
                return tag + "invalid edge";
            if (!seen.insert(e).second)
                return tag + "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " appears twice";
            ++deg[static_cast<std::size_t>(e.u)];
            ++deg[static_cast<std::size_t>(e.v)];
        }
        const int want = part.role == PartRole::OneFactor ? 1 : 2;
        for (int v = 0; v < n; ++v)
            if (deg[static_cast<std::size_t>(v)] != want)
                return tag + "vertex " + std::to_string(v) + " has degree " +
                       std::to_string(deg[static_cast<std::size_t>(v)]) + ", expected " + std::to_string(want);
        if (part.role == PartRole::SpanningCycle) {
            auto order = order_from_edges(n, part.edges);
            if (order.size() != static_cast<std::size_t>(n))
                return tag + "not a single spanning cycle";
            if (!part.cycle_order.empty() && cycle_edges(part.cycle_order) != part.edges)
                return tag + "cycle order disagrees with edge set";
        }
    }
    const auto total = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
    if (seen.size() != total)
        return "parts cover " + std::to_string(seen.size()) + " of " + std::to_string(total) + " edges";
    return std::nullopt;
}

Decomposition parse_decomposition(const std::string& text)
{
    std::istringstream in(text);
    std::string word;
    long long n = 0, count = 0;
    if (!(in >> word >> n >> count) || word != "decomposition" || n < 1 || count < 0)
        throw ParseError("decomposition text must start with 'decomposition n parts'");
    Decomposition d{static_cast<int>(n), {}};
    for (long long i = 0; i < count; ++i) {
        long long index = 0;
        std::string role;
        if (!(in >> word >> index >> role) || word != "part" || index != i)
            throw ParseError("expected 'part " + std::to_string(i) + " ROLE'");
        PartRole r;
        if (role == "one-factor")
            r = PartRole::OneFactor;
        else if (role == "spanning-cycle")
            r = PartRole::SpanningCycle;
        else
            throw ParseError("unknown part role '" + role + "'");
        SimpleGraph g = read_graph(in);
        if (g.vertex_count() != d.n)
            throw ParseError("part order disagrees with decomposition order");
        auto edges = g.edges();
        std::vector<Vertex> order;
        if (r == PartRole::SpanningCycle)
            order = order_from_edges(d.n, edges);
        d.parts.push_back({r, std::move(edges), std::move(order)});
    }
    return d;
}

SimpleGraph union_of_parts(const Decomposition& d, const std::vector<std::size_t>& part_indices)
{
    SimpleGraph g(d.n);
    for (auto i : part_indices)
        for (const auto& e : d.parts.at(i).edges)
            g.add_edge(e.u, e.v);
    return g;
}

} // namespace kpg
