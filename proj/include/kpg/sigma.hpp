#pragma once

#include "kpg/degree_sequence.hpp"
#include "kpg/potential.hpp"
#include "kpg/verdict_cache.hpp"

#include <optional>
#include <vector>

namespace kpg {

struct SigmaOptions {
    /// The sweep always covers every even sum down to this value. Defaults to
    /// sigma_lower_bound(p, n) for K_{p,1,1} targets; otherwise the sweep
    /// stops at the first (highest) sum with a failing sequence.
    std::optional<long long> floor_sum;
    /// Worker threads; 0 picks std::thread::hardware_concurrency().
    int jobs = 0;
    /// Largest n accepted; sweeps above it are refused.
    int max_n = 9;
    VerdictCache* cache = nullptr;
};

struct SigmaException {
    DegreeSequence sequence;
    long long sum;

    friend bool operator==(const SigmaException&, const SigmaException&) = default;
};

struct SigmaResult {
    TargetPattern target;
    int n;
    long long sigma_value;
    /// Failing sequences met by the sweep, highest sum first.
    std::vector<SigmaException> exceptions;
    long long max_sum_checked;
    long long min_sum_checked;
    std::size_t sequences_checked;
};

/// Least even l such that every graphical n-term sequence with even sum in
/// [l, n(n-1)] is potentially target-graphic. Every even sum from n(n-1)
/// downward is examined until a failure has been seen and the floor reached.
/// Throws DomainError if n is below the target's order or above max_n.
SigmaResult compute_sigma(const TargetPattern& target, int n, const SigmaOptions& options = {});

struct Theorem2Report {
    int n;
    bool pass;
    long long expected;
    SigmaResult result;
};

/// The K_{3,1,1} threshold is 4n-2 for n = 5 and n >= 7, and 26 at n = 6
/// where (4^6) is the only failing sequence with sum >= 22.
/// Throws DomainError unless 5 <= n <= 9.
Theorem2Report verify_theorem2(int n, const SigmaOptions& options = {});

struct ConjectureReport {
    int p;
    int n;
    long long sigma_value;
    long long bound;
    bool pass;
};

/// Compares the exact K_{p,1,1} threshold with sigma_lower_bound(p, n).
/// Throws DomainError unless 1 <= p <= 3, n >= 2p+4 and n <= options.max_n.
ConjectureReport verify_conjecture(int p, int n, const SigmaOptions& options = {});

} // namespace kpg
