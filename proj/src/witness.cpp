#include "kpg/witness.hpp"

#include "kpg/error.hpp"
#include "kpg/graphical.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace kpg {

namespace {

const DegreeSequence kException{4, 4, 4, 4, 4, 4};

std::string edge_text(const Edge& e)
{
    return std::to_string(e.u) + "-" + std::to_string(e.v);
}

std::string edges_text(std::span<const Edge> edges)
{
    std::string out;
    for (const auto& e : edges)
        out += (out.empty() ? "" : " ") + edge_text(e);
    return out;
}

WitnessResult fallback(const DegreeSequence& seq, std::vector<TraceStep> trace, int divergences, const std::string& why)
{
    const int n = static_cast<int>(seq.size());
    auto verdict = is_potentially(seq, make_kp11(3));
    if (!verdict.answer)
        throw Error("complete search found no K_{3,1,1} realization of " + seq.to_string());
    trace.push_back({StepKind::Fallback, n, why, verdict.certificate, {}, {}, {}});
    return {std::move(*verdict.certificate), std::move(verdict.embedding), std::move(trace), divergences + 1};
}

WitnessResult success(SimpleGraph g, Embedding emb, std::vector<TraceStep> trace, int n, const std::string& how)
{
    trace.push_back({StepKind::Success, n, how, std::nullopt, {}, {}, {}});
    return {std::move(g), std::move(emb), std::move(trace), 0};
}

WitnessResult solve(const DegreeSequence& seq);

WitnessResult base_case(const DegreeSequence& seq)
{
    const int n = static_cast<int>(seq.size());
    auto verdict = is_potentially(seq, make_kp11(3));
    if (!verdict.answer)
        throw Error("no realization of " + seq.to_string() + " contains K_{3,1,1}");
    std::vector<TraceStep> trace;
    trace.push_back({StepKind::Seed, n, "base case n=" + std::to_string(n) + ": seeded search", verdict.certificate, {}, {}, {}});
    return success(std::move(*verdict.certificate), std::move(verdict.embedding), std::move(trace), n,
                   "embedding from search");
}

WitnessResult reduce_low_degree(const DegreeSequence& seq)
{
    const int n = static_cast<int>(seq.size());
    const SimpleGraph g = realize(seq);
    const Vertex low = n - 1;
    const int removed_degree = g.degree(low);

    SimpleGraph rest(n - 1);
    for (const auto& e : g.edges())
        if (e.v != low)
            rest.add_edge(e.u, e.v);
    std::vector<int> neighbor_degrees;
    for (Vertex w : g.neighbors(low))
        neighbor_degrees.push_back(rest.degree(w));
    const DegreeSequence residual = degree_sequence(rest);

    std::vector<TraceStep> trace;
    trace.push_back({StepKind::Reduce, n,
                     "d_n=" + std::to_string(removed_degree) + ": delete v_n from realize(S); S'=" + residual.to_string(),
                     std::nullopt, {}, {}, {}});
    WitnessResult inner = solve(residual);
    trace.insert(trace.end(), std::make_move_iterator(inner.trace.begin()), std::make_move_iterator(inner.trace.end()));

    SimpleGraph grown = reattach(inner.graph, seq, removed_degree, neighbor_degrees);
    const Vertex added = grown.vertex_count() - 1;
    trace.push_back({StepKind::Reattach, n, "attach v_n to " + std::to_string(removed_degree) + " vertices", std::nullopt,
                     {}, {}, grown.neighbors(added)});
    return {std::move(grown), std::move(inner.embedding), std::move(trace), inner.divergences};
}

WitnessResult k4_interchange(const DegreeSequence& seq)
{
    const int n = static_cast<int>(seq.size());
    const Vertex v1 = 0, v2 = 1, v3 = 2, v4 = 3;
    std::vector<TraceStep> trace;

    auto seeded = realize_with_placement(seq, SimpleGraph::complete(4), {v1, v2, v3, v4});
    if (!seeded)
        return fallback(seq, std::move(trace), 0, "no realization with K_4 on the four largest degrees");
    SimpleGraph g = std::move(*seeded);
    trace.push_back({StepKind::Seed, n, "K_4 on v1..v4 (four largest degrees)", g, {}, {}, {}});

    if (g.degree(v2) < 4)
        throw std::logic_error("d(v2) = 3 contradicts sigma(S) >= 4n-2 for " + seq.to_string());

    auto first_neighbor = [&g](Vertex of, std::initializer_list<Vertex> excluded) -> std::optional<Vertex> {
        for (Vertex w : g.neighbors(of))
            if (std::find(excluded.begin(), excluded.end(), w) == excluded.end())
                return w;
        return std::nullopt;
    };
    auto found = [&](Vertex a1, Vertex a2, Vertex l1, Vertex l2, Vertex l3, const std::string& how) {
        return success(g, {a1, a2, l1, l2, l3}, std::move(trace), n, how);
    };

    const auto y1 = first_neighbor(v1, {v2, v3, v4});
    if (!y1)
        return fallback(seq, std::move(trace), 0, "v1 has no neighbour outside v2, v3, v4");
    if (g.has_edge(*y1, v2))
        return found(v1, v2, v3, v4, *y1, "y1 adjacent to v2");
    if (g.has_edge(*y1, v3))
        return found(v1, v3, v2, v4, *y1, "y1 adjacent to v3");
    if (g.has_edge(*y1, v4))
        return found(v1, v4, v2, v3, *y1, "y1 adjacent to v4");

    const auto y2 = first_neighbor(v2, {v1, v3, v4});
    if (!y2)
        return fallback(seq, std::move(trace), 0, "v2 has no neighbour outside v1, v3, v4");
    if (g.has_edge(*y2, v1))
        return found(v1, v2, v3, v4, *y2, "y2 adjacent to v1");
    if (g.has_edge(*y2, v3))
        return found(v2, v3, v1, v4, *y2, "y2 adjacent to v3");
    if (g.has_edge(*y2, v4))
        return found(v2, v4, v1, v3, *y2, "y2 adjacent to v4");

    const auto y3 = first_neighbor(*y1, {v1});
    if (!y3)
        return fallback(seq, std::move(trace), 0, "y1 has no neighbour besides v1");
    if (*y3 == *y2)
        trace.push_back({StepKind::Note, n, "y3 coincides with y2", std::nullopt, {}, {}, {}});

    std::vector<Edge> remove{Edge(*y1, *y3), Edge(v3, v4), Edge(v2, *y2)};
    std::vector<Edge> insert;
    std::string which;
    if (g.has_edge(*y3, v3)) {
        if (g.has_edge(*y3, v4))
            return found(v3, v4, v1, v2, *y3, "y3 adjacent to v3 and v4");
        insert = {Edge(*y1, v2), Edge(*y3, v4), Edge(*y2, v3)};
        which = "case 1 (y3v3 present)";
    } else {
        insert = {Edge(*y1, v2), Edge(*y3, v3), Edge(*y2, v4)};
        which = "case 2 (y3v3 absent)";
    }
    try {
        g = interchange(g, remove, insert);
    } catch (const InvalidInterchange& e) {
        return fallback(seq, std::move(trace), 0, which + ": " + e.what());
    }
    trace.push_back({StepKind::Interchange, n, which, std::nullopt, remove, insert, {}});
    Embedding emb{v1, v2, v3, v4, *y1};
    if (!is_valid_embedding(g, make_kp11(3).graph(), emb))
        return fallback(seq, std::move(trace), 0, which + ": interchange result lacks the expected K_{3,1,1}");
    return success(std::move(g), std::move(emb), std::move(trace), n, "apexes v1, v2 over v3, v4, y1");
}

WitnessResult solve(const DegreeSequence& seq)
{
    const int n = static_cast<int>(seq.size());
    if (n <= 7)
        return base_case(seq);
    if (seq.min() <= 2)
        return reduce_low_degree(seq);
    return k4_interchange(seq);
}

} // namespace

std::string to_string(StepKind kind)
{
    switch (kind) {
    case StepKind::Seed:
        return "seed";
    case StepKind::Reduce:
        return "reduce";
    case StepKind::Reattach:
        return "reattach";
    case StepKind::Interchange:
        return "interchange";
    case StepKind::Success:
        return "success";
    case StepKind::Note:
        return "note";
    case StepKind::Fallback:
        return "fallback";
    }
    return "unknown";
}

WitnessResult find_k311_realization(const DegreeSequence& seq)
{
    const int n = static_cast<int>(seq.size());
    if (n < 5)
        throw TooSmall("K_{3,1,1} witnesses need n >= 5, got " + std::to_string(n));
    if (!is_graphical(seq))
        throw NotGraphical(seq.to_string());
    if (sigma(seq) < 4LL * n - 2)
        throw BelowThreshold("sigma(" + seq.to_string() + ") = " + std::to_string(sigma(seq)) + " < 4n-2 = " +
                             std::to_string(4 * n - 2));
    if (seq == kException)
        throw KnownException("(4^6) is not potentially K_{3,1,1}-graphic");
    return solve(seq);
}

SimpleGraph reattach(const SimpleGraph& residual, const DegreeSequence& original, int removed_degree,
                     std::vector<int> neighbor_residual_degrees)
{
    const int n = residual.vertex_count();
    if (static_cast<int>(original.size()) != n + 1)
        throw AttachmentInfeasible("original sequence must have one more term than the residual graph");
    if (static_cast<int>(neighbor_residual_degrees.size()) != removed_degree || removed_degree > n)
        throw AttachmentInfeasible("removed degree disagrees with neighbour degree list");

    std::sort(neighbor_residual_degrees.begin(), neighbor_residual_degrees.end(), std::greater<>());
    std::vector<Vertex> picked;
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    std::optional<SimpleGraph> result;

    // Equal required degrees take increasing vertex indices, so each matched
    // set is tried once.
    std::function<bool(std::size_t)> pick = [&](std::size_t i) -> bool {
        if (i == neighbor_residual_degrees.size()) {
            SimpleGraph g = residual;
            const Vertex added = g.add_vertex();
            for (Vertex w : picked)
                g.add_edge(added, w);
            if (degree_sequence(g) != original)
                return false;
            result = std::move(g);
            return true;
        }
        const int want = neighbor_residual_degrees[i];
        Vertex from = 0;
        if (i > 0 && neighbor_residual_degrees[i - 1] == want)
            from = picked.back() + 1;
        for (Vertex w = from; w < n; ++w) {
            if (used[static_cast<std::size_t>(w)] || residual.degree(w) != want)
                continue;
            used[static_cast<std::size_t>(w)] = 1;
            picked.push_back(w);
            if (pick(i + 1))
                return true;
            picked.pop_back();
            used[static_cast<std::size_t>(w)] = 0;
        }
        return false;
    };
    if (!pick(0))
        throw AttachmentInfeasible("no degree-matched attachment realizes " + original.to_string());
    return std::move(*result);
}

SimpleGraph interchange(const SimpleGraph& g, std::span<const Edge> remove, std::span<const Edge> insert)
{
    std::map<Vertex, int> balance;
    std::vector<Edge> seen;
    auto fresh = [&seen](const Edge& e) {
        if (std::find(seen.begin(), seen.end(), e) != seen.end())
            return false;
        seen.push_back(e);
        return true;
    };
    for (const auto& e : remove) {
        if (e.u == e.v || !g.has_edge(e.u, e.v) || !fresh(e))
            throw InvalidInterchange("edge " + edge_text(e) + " cannot be removed");
        --balance[e.u];
        --balance[e.v];
    }
    for (const auto& e : insert) {
        if (e.u == e.v || g.has_edge(e.u, e.v) || !fresh(e))
            throw InvalidInterchange("edge " + edge_text(e) + " cannot be inserted");
        ++balance[e.u];
        ++balance[e.v];
    }
    for (const auto& [v, delta] : balance)
        if (delta != 0)
            throw InvalidInterchange("vertex " + std::to_string(v) + " would change degree by " + std::to_string(delta));
    SimpleGraph out = g;
    for (const auto& e : remove)
        out.remove_edge(e.u, e.v);
    for (const auto& e : insert)
        out.add_edge(e.u, e.v);
    return out;
}

SimpleGraph replay_trace(const std::vector<TraceStep>& trace)
{
    SimpleGraph g;
    for (const auto& step : trace) {
        switch (step.kind) {
        case StepKind::Seed:
        case StepKind::Fallback:
            g = *step.graph;
            break;
        case StepKind::Interchange:
            g = interchange(g, step.removed, step.inserted);
            break;
        case StepKind::Reattach: {
            const Vertex added = g.add_vertex();
            for (Vertex w : step.neighbors)
                g.add_edge(added, w);
            break;
        }
        default:
            break;
        }
    }
    return g;
}

std::string format_trace(const std::vector<TraceStep>& trace)
{
    std::string out;
    for (const auto& step : trace) {
        out += "[n=" + std::to_string(step.n) + "] " + to_string(step.kind) + ": " + step.detail;
        if (step.kind == StepKind::Interchange)
            out += "; remove " + edges_text(step.removed) + "; insert " + edges_text(step.inserted);
        if (step.kind == StepKind::Reattach) {
            out += "; neighbours";
            for (Vertex w : step.neighbors)
                out += ' ' + std::to_string(w);
        }
        out += '\n';
    }
    return out;
}

} // namespace kpg
