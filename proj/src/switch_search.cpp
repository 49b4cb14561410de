#include "kpg/switch_search.hpp"

#include "kpg/error.hpp"
#include "kpg/graphical.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <unordered_set>

namespace kpg {

std::uint64_t canonical_code(const SimpleGraph& g)
{
    const int n = g.vertex_count();
    if (n > kMaxCanonicalOrder)
        throw DomainError("canonical_code supports at most " + std::to_string(kMaxCanonicalOrder) + " vertices");

    std::vector<Vertex> by_degree(static_cast<std::size_t>(n));
    std::iota(by_degree.begin(), by_degree.end(), 0);
    std::stable_sort(by_degree.begin(), by_degree.end(), [&g](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    // class_end[i]: one past the last position sharing position i's degree.
    std::vector<int> class_end(static_cast<std::size_t>(n));
    for (int i = n - 1; i >= 0; --i) {
        const bool same = i + 1 < n && g.degree(by_degree[static_cast<std::size_t>(i)]) ==
                                           g.degree(by_degree[static_cast<std::size_t>(i + 1)]);
        class_end[static_cast<std::size_t>(i)] = same ? class_end[static_cast<std::size_t>(i + 1)] : i + 1;
    }

    const int total_bits = n * (n - 1) / 2;
    std::uint64_t best = ~std::uint64_t{0};
    bool have_best = false;
    std::vector<Vertex> perm(static_cast<std::size_t>(n));
    std::vector<char> taken(static_cast<std::size_t>(n), 0);

    // Position j contributes bits adj(perm[i], perm[j]) for i < j, so a prefix
    // of positions fixes a prefix of the code and lets us prune.
    std::function<void(int, std::uint64_t, int)> assign = [&](int pos, std::uint64_t code, int bits) {
        if (pos == n) {
            if (!have_best || code < best) {
                best = code;
                have_best = true;
            }
            return;
        }
        int class_start = pos;
        while (class_start > 0 && class_end[static_cast<std::size_t>(class_start - 1)] == class_end[static_cast<std::size_t>(pos)])
            --class_start;
        for (int slot = class_start; slot < class_end[static_cast<std::size_t>(pos)]; ++slot) {
            const Vertex v = by_degree[static_cast<std::size_t>(slot)];
            if (taken[static_cast<std::size_t>(v)])
                continue;
            std::uint64_t next = code;
            for (int i = 0; i < pos; ++i)
                next = (next << 1) | (g.has_edge(perm[static_cast<std::size_t>(i)], v) ? 1u : 0u);
            const int next_bits = bits + pos;
            if (have_best && (next << (total_bits - next_bits)) > best)
                continue;
            perm[static_cast<std::size_t>(pos)] = v;
            taken[static_cast<std::size_t>(v)] = 1;
            assign(pos + 1, next, next_bits);
            taken[static_cast<std::size_t>(v)] = 0;
        }
    };
    assign(0, 0, 0);
    return best;
}

std::vector<SimpleGraph> realization_classes(const DegreeSequence& seq)
{
    SimpleGraph start = realize(seq);
    std::vector<SimpleGraph> found;
    std::unordered_set<std::uint64_t> seen;
    std::deque<SimpleGraph> queue;
    seen.insert(canonical_code(start));
    queue.push_back(start);
    while (!queue.empty()) {
        SimpleGraph g = std::move(queue.front());
        queue.pop_front();
        const auto edges = g.edges();
        for (std::size_t i = 0; i < edges.size(); ++i) {
            for (std::size_t j = i + 1; j < edges.size(); ++j) {
                const auto [a, b] = edges[i];
                const auto [c, d] = edges[j];
                if (a == c || a == d || b == c || b == d)
                    continue;
                // ab, cd -> ac, bd and ab, cd -> ad, bc
                const Vertex pairs[2][4] = {{a, c, b, d}, {a, d, b, c}};
                for (const auto& q : pairs) {
                    if (g.has_edge(q[0], q[1]) || g.has_edge(q[2], q[3]))
                        continue;
                    SimpleGraph h = g;
                    h.remove_edge(a, b);
                    h.remove_edge(c, d);
                    h.add_edge(q[0], q[1]);
                    h.add_edge(q[2], q[3]);
                    if (seen.insert(canonical_code(h)).second)
                        queue.push_back(std::move(h));
                }
            }
        }
        found.push_back(std::move(g));
    }
    return found;
}

PotentialVerdict is_potentially_by_switches(const DegreeSequence& seq, const TargetPattern& target)
{
    for (auto& g : realization_classes(seq)) {
        if (auto emb = contains_subgraph(g, target)) {
            PotentialVerdict v;
            v.answer = true;
            v.embedding = std::move(*emb);
            v.certificate = std::move(g);
            return v;
        }
    }
    return {};
}

} // namespace kpg
