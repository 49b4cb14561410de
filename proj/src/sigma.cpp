#include "kpg/sigma.hpp"

#include "kpg/error.hpp"
#include "kpg/extremal.hpp"
#include "kpg/graphical.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace kpg {

namespace {

std::vector<char> decide_all(const std::vector<DegreeSequence>& seqs, const TargetPattern& target,
                             const SigmaOptions& options)
{
    std::vector<char> verdicts(seqs.size(), 0);
    const std::string target_key = target.key();
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (std::size_t i = next++; i < seqs.size(); i = next++) {
            const std::string text = seqs[i].to_string();
            std::optional<bool> cached = options.cache ? options.cache->lookup(text, target_key) : std::nullopt;
            bool verdict = cached ? *cached : is_potentially(seqs[i], target).answer;
            if (options.cache && !cached)
                options.cache->store(text, target_key, verdict);
            verdicts[i] = verdict;
        }
    };
    unsigned jobs = options.jobs > 0 ? static_cast<unsigned>(options.jobs) : std::thread::hardware_concurrency();
    jobs = std::clamp<unsigned>(jobs, 1, static_cast<unsigned>(std::max<std::size_t>(seqs.size(), 1)));
    if (jobs == 1) {
        worker();
        return verdicts;
    }
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j)
        pool.emplace_back(worker);
    pool.clear();
    return verdicts;
}

} // namespace

SigmaResult compute_sigma(const TargetPattern& target, int n, const SigmaOptions& options)
{
    if (n < target.order())
        throw DomainError("n=" + std::to_string(n) + " is smaller than the target order " + std::to_string(target.order()));
    if (n > options.max_n)
        throw DomainError("n=" + std::to_string(n) + " exceeds the sweep cap " + std::to_string(options.max_n));

    std::optional<long long> floor = options.floor_sum;
    if (!floor && target.kp11_parameter() && n >= *target.kp11_parameter() + 2)
        floor = sigma_lower_bound(*target.kp11_parameter(), n);

    const long long top = static_cast<long long>(n) * (n - 1);
    SigmaResult result{target, n, 0, {}, top, top, 0};
    std::optional<long long> largest_failure;
    for (long long s = top; s >= 0; s -= 2) {
        const auto seqs = enumerate_graphical(n, s);
        const auto verdicts = decide_all(seqs, target, options);
        result.sequences_checked += seqs.size();
        result.min_sum_checked = s;
        for (std::size_t i = 0; i < seqs.size(); ++i) {
            if (!verdicts[i]) {
                result.exceptions.push_back({seqs[i], s});
                if (!largest_failure)
                    largest_failure = s;
            }
        }
        if (largest_failure && (!floor || s <= *floor))
            break;
    }
    // The all-zero sequence never contains a target with an edge, so some sum fails.
    result.sigma_value = largest_failure.value_or(-2) + 2;
    return result;
}

Theorem2Report verify_theorem2(int n, const SigmaOptions& options)
{
    if (n < 5 || n > 9)
        throw DomainError("verify_theorem2 covers 5 <= n <= 9");
    SigmaOptions opts = options;
    opts.max_n = std::max(opts.max_n, n);
    SigmaResult result = compute_sigma(make_kp11(3), n, opts);
    const long long expected = n == 6 ? 26 : 4LL * n - 2;
    bool pass = result.sigma_value == expected;
    if (n == 6) {
        // Every failing sequence with sum >= 22 must be (4^6), and it must fail.
        std::vector<SigmaException> high;
        for (const auto& e : result.exceptions)
            if (e.sum >= 22)
                high.push_back(e);
        pass = pass && result.min_sum_checked <= 22 && high == std::vector<SigmaException>{{DegreeSequence{4, 4, 4, 4, 4, 4}, 24}};
    }
    return {n, pass, expected, std::move(result)};
}

ConjectureReport verify_conjecture(int p, int n, const SigmaOptions& options)
{
    if (p < 1 || p > 3)
        throw DomainError("verify_conjecture covers 1 <= p <= 3");
    if (n < 2 * p + 4)
        throw DomainError("the equality check needs n >= 2p+4");
    const SigmaResult result = compute_sigma(make_kp11(p), n, options);
    const long long bound = sigma_lower_bound(p, n);
    return {p, n, result.sigma_value, bound, result.sigma_value == bound};
}

} // namespace kpg
