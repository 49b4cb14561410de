#include "oracles.hpp"

#include <algorithm>
#include <numeric>

namespace oracle {

void for_each_labeled_graph(int n, const std::function<void(const kpg::SimpleGraph&)>& visit)
{
    std::vector<kpg::Edge> pairs;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            pairs.emplace_back(a, b);
    const std::uint64_t total = std::uint64_t{1} << pairs.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        kpg::SimpleGraph g(n);
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (mask >> i & 1u)
                g.add_edge(pairs[i].u, pairs[i].v);
        visit(g);
    }
}

bool contains_by_permutation(const kpg::SimpleGraph& host, const kpg::SimpleGraph& pattern)
{
    const int n = host.vertex_count();
    const int k = pattern.vertex_count();
    if (k > n)
        return false;
    // Choose k host vertices (as a sorted subset), then permute.
    std::vector<int> pick(static_cast<std::size_t>(n), 0);
    std::fill(pick.begin(), pick.begin() + k, 1);
    const auto edges = pattern.edges();
    do {
        std::vector<int> chosen;
        for (int v = 0; v < n; ++v)
            if (pick[static_cast<std::size_t>(v)])
                chosen.push_back(v);
        do {
            bool ok = true;
            for (const auto& e : edges)
                if (!host.has_edge(chosen[static_cast<std::size_t>(e.u)], chosen[static_cast<std::size_t>(e.v)])) {
                    ok = false;
                    break;
                }
            if (ok)
                return true;
        } while (std::next_permutation(chosen.begin(), chosen.end()));
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return false;
}

std::map<kpg::DegreeSequence, std::vector<bool>> potential_table(int n, const std::vector<kpg::SimpleGraph>& patterns)
{
    std::map<kpg::DegreeSequence, std::vector<bool>> table;
    for_each_labeled_graph(n, [&](const kpg::SimpleGraph& g) {
        auto [it, fresh] = table.try_emplace(kpg::DegreeSequence(g.degrees()), patterns.size(), false);
        for (std::size_t i = 0; i < patterns.size(); ++i)
            if (!it->second[i] && contains_by_permutation(g, patterns[i]))
                it->second[i] = true;
    });
    return table;
}

std::vector<std::vector<int>> bounded_partitions(int n, int s)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int ceiling, int left) {
        if (static_cast<int>(cur.size()) == n) {
            if (left == 0)
                out.push_back(cur);
            return;
        }
        for (int d = std::min(ceiling, left); d >= 0; --d) {
            cur.push_back(d);
            rec(d, left - d);
            cur.pop_back();
        }
    };
    rec(n - 1, s);
    return out;
}

} // namespace oracle
