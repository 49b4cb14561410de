#include "kpg/potential.hpp"

#include "kpg/error.hpp"
#include "kpg/graphical.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <unordered_set>

namespace kpg {

TargetPattern::TargetPattern(SimpleGraph graph, std::string name) : graph_(std::move(graph)), name_(std::move(name))
{
    if (graph_.vertex_count() < 1)
        throw DomainError("target pattern needs at least one vertex");
    for (Vertex v = 0; v < graph_.vertex_count(); ++v)
        if (graph_.degree(v) == 0)
            throw DomainError("target pattern has isolated vertex " + std::to_string(v));
}

std::string TargetPattern::key() const
{
    std::string out = "g" + std::to_string(graph_.vertex_count()) + ':';
    bool first = true;
    for (const auto& e : graph_.edges()) {
        if (!first)
            out += '.';
        first = false;
        out += std::to_string(e.u) + '-' + std::to_string(e.v);
    }
    return out;
}

TargetPattern make_kp11(int p)
{
    if (p < 1)
        throw DomainError("K_{p,1,1} needs p >= 1");
    SimpleGraph g(p + 2);
    g.add_edge(0, 1);
    for (Vertex leaf = 2; leaf < p + 2; ++leaf) {
        g.add_edge(0, leaf);
        g.add_edge(1, leaf);
    }
    TargetPattern t(std::move(g), "K_{" + std::to_string(p) + ",1,1}");
    t.kp11_p_ = p;
    return t;
}

bool is_valid_embedding(const SimpleGraph& host, const SimpleGraph& pattern, const Embedding& embedding)
{
    if (embedding.size() != static_cast<std::size_t>(pattern.vertex_count()))
        return false;
    std::vector<char> used(static_cast<std::size_t>(host.vertex_count()), 0);
    for (Vertex v : embedding) {
        if (v < 0 || v >= host.vertex_count() || used[static_cast<std::size_t>(v)])
            return false;
        used[static_cast<std::size_t>(v)] = 1;
    }
    for (const auto& e : pattern.edges())
        if (!host.has_edge(embedding[static_cast<std::size_t>(e.u)], embedding[static_cast<std::size_t>(e.v)]))
            return false;
    return true;
}

std::optional<Embedding> find_embedding(const SimpleGraph& host, const SimpleGraph& pattern)
{
    const int k = pattern.vertex_count();
    const int n = host.vertex_count();
    if (k > n)
        return std::nullopt;

    // Pattern vertices in search order: highest degree first, then the vertex
    // with the most already-ordered neighbours.
    std::vector<Vertex> order;
    std::vector<char> placed(static_cast<std::size_t>(k), 0);
    while (static_cast<int>(order.size()) < k) {
        Vertex best = -1;
        int best_links = -1;
        for (Vertex v = 0; v < k; ++v) {
            if (placed[static_cast<std::size_t>(v)])
                continue;
            int links = 0;
            for (Vertex w : order)
                links += pattern.has_edge(v, w);
            if (links > best_links || (links == best_links && pattern.degree(v) > pattern.degree(best))) {
                best = v;
                best_links = links;
            }
        }
        placed[static_cast<std::size_t>(best)] = 1;
        order.push_back(best);
    }

    Embedding map(static_cast<std::size_t>(k), -1);
    std::vector<char> used(static_cast<std::size_t>(n), 0);
    std::function<bool(std::size_t)> extend = [&](std::size_t depth) -> bool {
        if (depth == order.size())
            return true;
        const Vertex pv = order[depth];
        for (Vertex hv = 0; hv < n; ++hv) {
            if (used[static_cast<std::size_t>(hv)] || host.degree(hv) < pattern.degree(pv))
                continue;
            bool ok = true;
            for (std::size_t i = 0; i < depth && ok; ++i) {
                const Vertex q = order[i];
                if (pattern.has_edge(pv, q) && !host.has_edge(hv, map[static_cast<std::size_t>(q)]))
                    ok = false;
            }
            if (!ok)
                continue;
            map[static_cast<std::size_t>(pv)] = hv;
            used[static_cast<std::size_t>(hv)] = 1;
            if (extend(depth + 1))
                return true;
            used[static_cast<std::size_t>(hv)] = 0;
        }
        map[static_cast<std::size_t>(pv)] = -1;
        return false;
    };
    if (extend(0))
        return map;
    return std::nullopt;
}

std::optional<Embedding> contains_subgraph(const SimpleGraph& host, const TargetPattern& target)
{
    return find_embedding(host, target.graph());
}

namespace {

// Finds a graph with the given residual demands that avoids the forbidden
// pairs. Vertices are saturated in index order; once vertex u is done, the
// remaining subproblem depends only on (u, residual[u..]), so failed states
// are memoized under that key.
class ResidualCompleter {
public:
    ResidualCompleter(int n, std::vector<std::uint8_t> forbidden, std::vector<int> residual)
        : n_(n), forbidden_(std::move(forbidden)), residual_(std::move(residual))
    {
    }

    std::optional<std::vector<Edge>> solve()
    {
        if (std::any_of(residual_.begin(), residual_.end(), [](int r) { return r < 0; }))
            return std::nullopt;
        if (!feasible_suffix(0))
            return std::nullopt;
        if (!descend(0))
            return std::nullopt;
        return chosen_;
    }

private:
    bool allowed(Vertex a, Vertex b) const
    {
        return forbidden_[static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(b)] == 0;
    }

    bool feasible_suffix(int from) const
    {
        std::vector<int> rest(residual_.begin() + from, residual_.end());
        std::sort(rest.begin(), rest.end(), std::greater<>());
        return erdos_gallai(rest);
    }

    std::string state_key(int u) const
    {
        std::string key(1, static_cast<char>(u));
        for (int v = u; v < n_; ++v)
            key += static_cast<char>(residual_[static_cast<std::size_t>(v)]);
        return key;
    }

    bool descend(int u)
    {
        while (u < n_ && residual_[static_cast<std::size_t>(u)] == 0)
            ++u;
        if (u == n_)
            return true;
        const std::string key = state_key(u);
        if (failed_.count(key))
            return false;

        std::vector<Vertex> candidates;
        for (Vertex v = u + 1; v < n_; ++v)
            if (residual_[static_cast<std::size_t>(v)] > 0 && allowed(u, v))
                candidates.push_back(v);
        std::stable_sort(candidates.begin(), candidates.end(), [this](Vertex a, Vertex b) {
            return residual_[static_cast<std::size_t>(a)] > residual_[static_cast<std::size_t>(b)];
        });
        const int need = residual_[static_cast<std::size_t>(u)];
        if (static_cast<int>(candidates.size()) >= need) {
            residual_[static_cast<std::size_t>(u)] = 0;
            if (choose(u, candidates, 0, need))
                return true;
            residual_[static_cast<std::size_t>(u)] = need;
        }
        failed_.insert(key);
        return false;
    }

    // Picks `left` more neighbours for u from candidates[start..].
    bool choose(Vertex u, const std::vector<Vertex>& candidates, std::size_t start, int left)
    {
        if (left == 0) {
            if (!feasible_suffix(u + 1))
                return false;
            return descend(u + 1);
        }
        for (std::size_t i = start; i + static_cast<std::size_t>(left) <= candidates.size(); ++i) {
            const Vertex v = candidates[i];
            --residual_[static_cast<std::size_t>(v)];
            chosen_.emplace_back(u, v);
            if (choose(u, candidates, i + 1, left - 1))
                return true;
            chosen_.pop_back();
            ++residual_[static_cast<std::size_t>(v)];
        }
        return false;
    }

    int n_;
    std::vector<std::uint8_t> forbidden_;
    std::vector<int> residual_;
    std::vector<Edge> chosen_;
    std::unordered_set<std::string> failed_;
};

// Groups pattern vertices whose neighbourhoods agree up to each other;
// permuting such a group is an automorphism of the pattern.
std::vector<int> twin_groups(const SimpleGraph& h)
{
    const int k = h.vertex_count();
    auto twins = [&h, k](Vertex a, Vertex b) {
        for (Vertex x = 0; x < k; ++x)
            if (x != a && x != b && h.has_edge(a, x) != h.has_edge(b, x))
                return false;
        return true;
    };
    std::vector<int> group(static_cast<std::size_t>(k), -1);
    int groups = 0;
    for (Vertex v = 0; v < k; ++v) {
        if (group[static_cast<std::size_t>(v)] >= 0)
            continue;
        group[static_cast<std::size_t>(v)] = groups;
        std::vector<Vertex> members{v};
        for (Vertex w = v + 1; w < k; ++w) {
            if (group[static_cast<std::size_t>(w)] >= 0)
                continue;
            if (std::all_of(members.begin(), members.end(), [&](Vertex m) { return twins(m, w); })) {
                group[static_cast<std::size_t>(w)] = groups;
                members.push_back(w);
            }
        }
        ++groups;
    }
    return group;
}

} // namespace

std::optional<SimpleGraph> realize_with_placement(const DegreeSequence& seq, const SimpleGraph& pattern,
                                                  const Embedding& placement)
{
    const int n = static_cast<int>(seq.size());
    SimpleGraph seeded(n);
    for (const auto& e : pattern.edges())
        seeded.add_edge(placement.at(static_cast<std::size_t>(e.u)), placement.at(static_cast<std::size_t>(e.v)));

    std::vector<std::uint8_t> forbidden(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    std::vector<int> residual(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) {
        residual[static_cast<std::size_t>(v)] = seq[static_cast<std::size_t>(v)] - seeded.degree(v);
        for (Vertex w = 0; w < n; ++w)
            if (seeded.has_edge(v, w))
                forbidden[static_cast<std::size_t>(v) * static_cast<std::size_t>(n) + static_cast<std::size_t>(w)] = 1;
    }
    ResidualCompleter completer(n, std::move(forbidden), std::move(residual));
    auto rest = completer.solve();
    if (!rest)
        return std::nullopt;
    for (const auto& e : *rest)
        seeded.add_edge(e.u, e.v);
    return seeded;
}

PotentialVerdict is_potentially(const DegreeSequence& seq, const TargetPattern& target)
{
    if (!is_graphical(seq))
        throw NotGraphical(seq.to_string());
    const SimpleGraph& h = target.graph();
    const int k = h.vertex_count();
    const int n = static_cast<int>(seq.size());
    if (k > n)
        return {};

    struct DegreeClass {
        int degree;
        int first;
        int size;
    };
    std::vector<DegreeClass> classes;
    for (int i = 0; i < n;) {
        int j = i;
        while (j < n && seq[static_cast<std::size_t>(j)] == seq[static_cast<std::size_t>(i)])
            ++j;
        classes.push_back({seq[static_cast<std::size_t>(i)], i, j - i});
        i = j;
    }

    std::vector<Vertex> order(static_cast<std::size_t>(k));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&h](Vertex a, Vertex b) { return h.degree(a) > h.degree(b); });
    const auto group = twin_groups(h);

    std::vector<int> used(classes.size(), 0);
    std::vector<int> class_of(static_cast<std::size_t>(k), -1);
    Embedding placement(static_cast<std::size_t>(k), -1);
    PotentialVerdict verdict;

    // Twins take non-decreasing class indices in search order; within a class
    // the next free slot is used, since equal-degree slots are interchangeable.
    std::function<bool(std::size_t)> place = [&](std::size_t depth) -> bool {
        if (depth == order.size()) {
            auto g = realize_with_placement(seq, h, placement);
            if (!g)
                return false;
            verdict.answer = true;
            verdict.certificate = std::move(*g);
            verdict.embedding = placement;
            return true;
        }
        const Vertex pv = order[depth];
        std::size_t lowest = 0;
        for (std::size_t i = 0; i < depth; ++i)
            if (group[static_cast<std::size_t>(order[i])] == group[static_cast<std::size_t>(pv)])
                lowest = std::max(lowest, static_cast<std::size_t>(class_of[static_cast<std::size_t>(order[i])]));
        for (std::size_t c = lowest; c < classes.size(); ++c) {
            if (classes[c].degree < h.degree(pv))
                break;
            if (used[c] == classes[c].size)
                continue;
            placement[static_cast<std::size_t>(pv)] = classes[c].first + used[c];
            class_of[static_cast<std::size_t>(pv)] = static_cast<int>(c);
            ++used[c];
            if (place(depth + 1))
                return true;
            --used[c];
        }
        class_of[static_cast<std::size_t>(pv)] = -1;
        placement[static_cast<std::size_t>(pv)] = -1;
        return false;
    };
    place(0);
    return verdict;
}

} // namespace kpg
