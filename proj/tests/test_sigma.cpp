#include "targets.hpp"

#include "kpg/error.hpp"
#include "kpg/extremal.hpp"
#include "kpg/graphical.hpp"
#include "kpg/sigma.hpp"
#include "kpg/switch_search.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>

using namespace kpg;

namespace {

// Threshold from the definition, using the 2-switch engine for every sum.
long long sigma_by_switches(const TargetPattern& t, int n)
{
    long long largest_failure = -2;
    for (long long s = static_cast<long long>(n) * (n - 1); s >= 0 && largest_failure < 0; s -= 2)
        for (const auto& seq : enumerate_graphical(n, s))
            if (!is_potentially_by_switches(seq, t).answer) {
                largest_failure = s;
                break;
            }
    return largest_failure + 2;
}

} // namespace

TEST_CASE("compute_sigma K_{3,1,1} examples")
{
    const auto k311 = make_kp11(3);
    CHECK(compute_sigma(k311, 5).sigma_value == 18);
    const auto six = compute_sigma(k311, 6);
    CHECK(six.sigma_value == 26);
    CHECK(six.exceptions == std::vector<SigmaException>{{DegreeSequence::parse("4^6"), 24}});
    CHECK(six.max_sum_checked == 30);
    CHECK(six.min_sum_checked <= 22);
    CHECK(compute_sigma(k311, 8).sigma_value == 30);
    CHECK_THROWS_AS(compute_sigma(k311, 4), DomainError);
    CHECK_THROWS_AS(compute_sigma(k311, 10), DomainError);
}

TEST_CASE("sweep result invariants")
{
    for (int p = 1; p <= 4; ++p)
        for (int n = p + 2; n <= 8; ++n) {
            CAPTURE(p);
            CAPTURE(n);
            const auto target = make_kp11(p);
            const auto r = compute_sigma(target, n);
            CHECK(r.sigma_value % 2 == 0);
            CHECK(r.max_sum_checked == static_cast<long long>(n) * (n - 1));
            CHECK(r.sigma_value >= sigma_lower_bound(p, n));
            for (const auto& e : r.exceptions) {
                CHECK(e.sum < r.sigma_value);
                CHECK(sigma(e.sequence) == e.sum);
            }
            // Sharpness: the sweep itself found a failure two below the threshold.
            REQUIRE_FALSE(r.exceptions.empty());
            CHECK(r.exceptions.front().sum == r.sigma_value - 2);
            // Soundness: a full rescan at and above the threshold finds no failure.
            for (long long s = r.sigma_value; s <= r.max_sum_checked; s += 2)
                for (const auto& seq : enumerate_graphical(n, s))
                    CHECK(is_potentially(seq, target).answer);
        }
}

TEST_CASE("thresholds agree with a sweep over the 2-switch engine for n <= 7")
{
    for (const auto& t : small_targets())
        for (int n = std::max(t.order(), 2); n <= 7; ++n) {
            CAPTURE(t.name());
            CAPTURE(n);
            CHECK(compute_sigma(t, n).sigma_value == sigma_by_switches(t, n));
        }
}

TEST_CASE("the n = 6 sweep is not monotone in the degree sum")
{
    const auto r = compute_sigma(make_kp11(3), 6);
    // Sum 22 passes entirely while sum 24 still has a failure.
    for (const auto& seq : enumerate_graphical(6, 22))
        CHECK(is_potentially(seq, make_kp11(3)).answer);
    CHECK(r.exceptions.front().sum == 24);
}

TEST_CASE("failure profile below the n = 6 threshold")
{
    // Reported rather than assumed: extend the floor to 20.
    SigmaOptions opts;
    opts.floor_sum = 20;
    const auto r = compute_sigma(make_kp11(3), 6, opts);
    CHECK(r.sigma_value == 26);
    CHECK(r.min_sum_checked == 20);
    bool any_at_20 = false;
    for (const auto& e : r.exceptions)
        any_at_20 = any_at_20 || e.sum == 20;
    CHECK(any_at_20);
}

TEST_CASE("verify_theorem2 for n = 5..9")
{
    for (int n = 5; n <= 9; ++n) {
        const auto rep = verify_theorem2(n);
        CAPTURE(n);
        CHECK(rep.pass);
        CHECK(rep.result.sigma_value == (n == 6 ? 26 : 4 * n - 2));
    }
    // Every 7-term graphical sequence with sum 26 is potentially K_{3,1,1}-graphic.
    for (const auto& seq : enumerate_graphical(7, 26))
        CHECK(is_potentially(seq, make_kp11(3)).answer);
    CHECK_THROWS_AS(verify_theorem2(4), DomainError);
    CHECK_THROWS_AS(verify_theorem2(10), DomainError);
}

TEST_CASE("verify_conjecture examples")
{
    const auto a = verify_conjecture(1, 6);
    CHECK(a.pass);
    CHECK(a.sigma_value == 12);
    const auto b = verify_conjecture(2, 8);
    CHECK(b.pass);
    CHECK(b.bound == 22);
    SigmaOptions wide;
    wide.max_n = 10;
    const auto c = verify_conjecture(3, 10, wide);
    CHECK(c.pass);
    CHECK(c.sigma_value == 38);
    CHECK_THROWS_AS(verify_conjecture(3, 9), DomainError);
    CHECK_THROWS_AS(verify_conjecture(4, 12), DomainError);
    CHECK_THROWS_AS(verify_conjecture(3, 10), DomainError);
}

TEST_CASE("parallel sweeps are deterministic")
{
    SigmaOptions one, many;
    one.jobs = 1;
    many.jobs = 4;
    const auto a = compute_sigma(make_kp11(2), 8, one);
    const auto b = compute_sigma(make_kp11(2), 8, many);
    CHECK(a.sigma_value == b.sigma_value);
    CHECK(a.exceptions == b.exceptions);
    CHECK(a.sequences_checked == b.sequences_checked);
}

TEST_CASE("verdict cache persists across instances")
{
    const auto dir = std::filesystem::temp_directory_path() / "kpg_cache_test";
    std::filesystem::remove_all(dir);
    long long first_value = 0;
    std::size_t stored = 0;
    {
        VerdictCache cache(dir);
        SigmaOptions opts;
        opts.cache = &cache;
        first_value = compute_sigma(make_kp11(3), 7, opts).sigma_value;
        stored = cache.size();
        CHECK(stored > 0);
    }
    {
        VerdictCache cache(dir);
        CHECK(cache.size() == stored);
        CHECK(cache.lookup("4^6", make_kp11(3).key()) == std::nullopt); // n = 7 sweep never saw (4^6)
        CHECK(cache.lookup("6^1,3^6", make_kp11(3).key()) == false);
        SigmaOptions opts;
        opts.cache = &cache;
        CHECK(compute_sigma(make_kp11(3), 7, opts).sigma_value == first_value);
        CHECK(cache.size() == stored);
    }
    {
        // Appended duplicates resolve last-writer-wins.
        std::ofstream(dir / "verdicts.txt", std::ios::app) << "2^3 g3:0-1.0-2.1-2 0\n2^3 g3:0-1.0-2.1-2 1\n";
        VerdictCache cache(dir);
        CHECK(cache.lookup("2^3", "g3:0-1.0-2.1-2") == true);
    }
    std::filesystem::remove_all(dir);
}
