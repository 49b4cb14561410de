#pragma once

#include "kpg/degree_sequence.hpp"
#include "kpg/graph.hpp"

#include <optional>
#include <string>

namespace kpg {

/// An n-term sequence of degree sum bound - 2 that is not potentially
/// K_{p,1,1}-graphic, together with a realization of it.
struct LowerBoundInstance {
    int p;
    int n;
    long long bound;
    DegreeSequence sequence;
    SimpleGraph witness_graph;
    std::string construction;
};

/// 2 * floor(((p+1)(n-1)+2)/2). Throws DomainError unless p >= 1, n >= p+2.
long long sigma_lower_bound(int p, int n);

/// Number of spanning cycles the construction draws from its decomposition,
/// and how many that decomposition supplies. p >= 3 only.
struct CycleBudget {
    int needed;
    int available;
};
CycleBudget cycle_budget(int p, int n);

/// ((n-1)^1, p^(n-1)) when (p+1)(n-1) is even, else ((n-1)^1, p^(n-2), (p-1)^1).
DegreeSequence lower_bound_sequence(int p, int n);

/// For p >= 3 the witness is a union of decomposition parts of K_{n-1}
/// joined to K_1; for p <= 2 it is realize(sequence).
/// Throws DomainError on parameter violations or an exhausted cycle budget.
LowerBoundInstance build_lower_bound(int p, int n);

struct NonPotentialCheck {
    bool by_degree_count;          // fewer than two terms >= p+1
    std::optional<bool> by_search; // exhaustive search says "not potentially"; unset above the search cap
};

/// Default largest n for which the exhaustive cross-check runs.
inline constexpr int kExhaustiveNonPotentialCap = 10;

NonPotentialCheck check_not_potential(const DegreeSequence& seq, int p, int search_cap = kExhaustiveNonPotentialCap);

/// True iff seq is not potentially K_{p,1,1}-graphic: the degree-count
/// shortcut and (when it ran) the exhaustive search must both say so.
bool verify_not_potential(const DegreeSequence& seq, int p);
bool verify_not_potential(const LowerBoundInstance& inst);

} // namespace kpg
