#include "kpg/extremal.hpp"

#include "kpg/decomp.hpp"
#include "kpg/error.hpp"
#include "kpg/graphical.hpp"
#include "kpg/potential.hpp"

#include <numeric>
#include <vector>

namespace kpg {

namespace {

void check_domain(int p, int n)
{
    if (p < 1)
        throw DomainError("p must be >= 1");
    if (n < p + 2)
        throw DomainError("n must be >= p+2 (p=" + std::to_string(p) + ", n=" + std::to_string(n) + ")");
}

bool odd_case(int p, int n)
{
    return (static_cast<long long>(p + 1) * (n - 1)) % 2 != 0;
}

std::vector<std::size_t> range(std::size_t from, std::size_t count)
{
    std::vector<std::size_t> out(count);
    std::iota(out.begin(), out.end(), from);
    return out;
}

} // namespace

long long sigma_lower_bound(int p, int n)
{
    check_domain(p, n);
    const long long x = static_cast<long long>(p + 1) * (n - 1) + 2;
    return 2 * (x / 2);
}

CycleBudget cycle_budget(int p, int n)
{
    check_domain(p, n);
    if (p < 3)
        throw DomainError("cycle budget applies to p >= 3");
    const int order = n - 1;
    const int needed = p % 2 == 1 ? (p - 1) / 2 : (order % 2 == 0 ? (p - 2) / 2 : p / 2);
    const int available = order % 2 == 0 ? order / 2 - 1 : (order - 1) / 2;
    return {needed, available};
}

DegreeSequence lower_bound_sequence(int p, int n)
{
    check_domain(p, n);
    std::vector<int> terms{n - 1};
    if (odd_case(p, n)) {
        terms.insert(terms.end(), static_cast<std::size_t>(n - 2), p);
        terms.push_back(p - 1);
    } else {
        terms.insert(terms.end(), static_cast<std::size_t>(n - 1), p);
    }
    return DegreeSequence(std::move(terms));
}

LowerBoundInstance build_lower_bound(int p, int n)
{
    check_domain(p, n);
    DegreeSequence seq = lower_bound_sequence(p, n);
    const long long bound = sigma_lower_bound(p, n);

    if (p <= 2) {
        return {p, n, bound, seq, realize(seq), "realize(sequence)"};
    }

    const auto budget = cycle_budget(p, n);
    if (budget.needed > budget.available)
        throw DomainError("cycle budget exceeded for p=" + std::to_string(p) + ", n=" + std::to_string(n) + ": need " +
                          std::to_string(budget.needed) + " spanning cycles, decomposition has " +
                          std::to_string(budget.available));

    const int order = n - 1;
    const SimpleGraph hub(1);
    SimpleGraph base;
    std::string construction;
    if (order % 2 == 0) {
        // n odd: K_{n-1} = one 1-factor + (n-3)/2 spanning cycles (part 0 is the 1-factor).
        const Decomposition d = decompose_even(order / 2);
        if (p % 2 == 1) {
            base = union_of_parts(d, range(1, static_cast<std::size_t>(budget.needed)));
            construction = "C_1 u ... u C_" + std::to_string(budget.needed) + " + K_1";
        } else {
            base = union_of_parts(d, range(0, static_cast<std::size_t>(budget.needed) + 1));
            construction = "M u C_1 u ... u C_" + std::to_string(budget.needed) + " + K_1";
        }
        return {p, n, bound, seq, join(base, hub), construction};
    }

    // n even: K_{n-1} = (n-2)/2 spanning cycles.
    const Decomposition d = decompose_odd((order - 1) / 2);
    base = union_of_parts(d, range(0, static_cast<std::size_t>(budget.needed)));
    SimpleGraph g = join(base, hub);
    if (p % 2 == 1)
        return {p, n, bound, seq, std::move(g), "C_1 u ... u C_" + std::to_string(budget.needed) + " + K_1"};

    // Remove x1x2, x3x4, ..., x_{2m-1}x_{2m}, x_{2m+1}x1 along C_1's traversal.
    const auto& x = d.parts.front().cycle_order;
    for (std::size_t i = 0; i + 1 < x.size(); i += 2)
        g.remove_edge(x[i], x[i + 1]);
    g.remove_edge(x.back(), x.front());
    return {p, n, bound, seq, std::move(g),
            "(C_1 u ... u C_" + std::to_string(budget.needed) + " + K_1) - {x1x2, x3x4, ..., x_{2m+1}x1}"};
}

NonPotentialCheck check_not_potential(const DegreeSequence& seq, int p, int search_cap)
{
    NonPotentialCheck out{seq.count_at_least(p + 1) < 2, std::nullopt};
    if (static_cast<int>(seq.size()) <= search_cap)
        out.by_search = !is_potentially(seq, make_kp11(p)).answer;
    return out;
}

bool verify_not_potential(const DegreeSequence& seq, int p)
{
    const auto check = check_not_potential(seq, p);
    return check.by_degree_count && check.by_search.value_or(true);
}

bool verify_not_potential(const LowerBoundInstance& inst)
{
    return verify_not_potential(inst.sequence, inst.p);
}

} // namespace kpg
