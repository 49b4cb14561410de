#include "kpg/graphical.hpp"

#include "kpg/error.hpp"

#include <algorithm>
#include <numeric>

namespace kpg {

bool erdos_gallai(std::span<const int> d)
{
    const auto n = static_cast<long long>(d.size());
    long long total = 0;
    for (int x : d) {
        if (x < 0)
            return false;
        total += x;
    }
    if (total % 2 != 0)
        return false;
    long long prefix = 0;
    for (long long k = 1; k <= n; ++k) {
        prefix += d[static_cast<std::size_t>(k - 1)];
        long long rhs = k * (k - 1);
        for (long long i = k; i < n; ++i)
            rhs += std::min<long long>(d[static_cast<std::size_t>(i)], k);
        if (prefix > rhs)
            return false;
    }
    return true;
}

bool is_graphical(const DegreeSequence& seq)
{
    return erdos_gallai(seq.terms());
}

SimpleGraph realize(const DegreeSequence& seq)
{
    if (!is_graphical(seq))
        throw NotGraphical(seq.to_string());
    const int n = static_cast<int>(seq.size());
    std::vector<int> residual(seq.terms().begin(), seq.terms().end());
    SimpleGraph g(n);
    std::vector<Vertex> order(static_cast<std::size_t>(n));
    while (true) {
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
            return residual[static_cast<std::size_t>(a)] > residual[static_cast<std::size_t>(b)];
        });
        const Vertex hub = order.front();
        const int need = residual[static_cast<std::size_t>(hub)];
        if (need == 0)
            break;
        for (int k = 1; k <= need; ++k) {
            if (k >= n || residual[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])] == 0)
                throw NotGraphical(seq.to_string());
            const Vertex w = order[static_cast<std::size_t>(k)];
            g.add_edge(hub, w);
            --residual[static_cast<std::size_t>(w)];
        }
        residual[static_cast<std::size_t>(hub)] = 0;
    }
    return g;
}

GraphicalSequences::GraphicalSequences(int n, long long s) : n_(n), sum_(s), cap_(n - 1)
{
    if (n < 1)
        throw DomainError("sequence length must be >= 1");
    if (s < 0)
        throw DomainError("degree sum must be >= 0");
    if (s % 2 != 0 || s > static_cast<long long>(n) * (n - 1))
        done_ = true;
}

// Steps current_ to the next non-increasing vector of length n, entries in
// [0, cap], summing to sum, in lexicographically decreasing order.
bool GraphicalSequences::advance()
{
    auto fill_from = [this](std::size_t start, int ceiling, long long remaining) {
        for (std::size_t j = start; j < current_.size(); ++j) {
            const int v = static_cast<int>(std::min<long long>(ceiling, remaining));
            current_[j] = v;
            remaining -= v;
        }
        return remaining == 0;
    };

    if (!started_) {
        started_ = true;
        current_.assign(static_cast<std::size_t>(n_), 0);
        return fill_from(0, cap_, sum_);
    }
    long long prefix = std::accumulate(current_.begin(), current_.end(), 0LL);
    for (std::size_t i = current_.size(); i-- > 0;) {
        prefix -= current_[i];
        const int lowered = current_[i] - 1;
        if (lowered < 0)
            continue;
        const long long remaining = sum_ - prefix - lowered;
        const auto slots = static_cast<long long>(current_.size() - i - 1);
        if (remaining < 0 || remaining > slots * lowered)
            continue;
        current_[i] = lowered;
        return fill_from(i + 1, lowered, remaining);
    }
    return false;
}

std::optional<DegreeSequence> GraphicalSequences::next()
{
    while (!done_) {
        if (!advance()) {
            done_ = true;
            break;
        }
        if (erdos_gallai(current_))
            return DegreeSequence(current_);
    }
    return std::nullopt;
}

std::vector<DegreeSequence> enumerate_graphical(int n, long long s)
{
    std::vector<DegreeSequence> out;
    GraphicalSequences stream(n, s);
    while (auto seq = stream.next())
        out.push_back(std::move(*seq));
    return out;
}

} // namespace kpg
