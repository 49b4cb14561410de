#include "oracles.hpp"
#include "targets.hpp"

#include "kpg/error.hpp"
#include "kpg/graphical.hpp"
#include "kpg/potential.hpp"
#include "kpg/switch_search.hpp"

#include <doctest.h>

#include <numeric>
#include <random>

using namespace kpg;

namespace {

void check_certificate(const DegreeSequence& seq, const TargetPattern& target, const PotentialVerdict& v)
{
    REQUIRE(v.answer);
    REQUIRE(v.certificate.has_value());
    CHECK(degree_sequence(*v.certificate) == seq);
    CHECK(is_valid_embedding(*v.certificate, target.graph(), v.embedding));
}

} // namespace

TEST_CASE("make_kp11")
{
    const auto k111 = make_kp11(1);
    CHECK(k111.graph() == SimpleGraph::complete(3));

    auto k4e = SimpleGraph::complete(4);
    k4e.remove_edge(2, 3);
    CHECK(make_kp11(2).graph() == k4e);

    const auto k311 = make_kp11(3);
    CHECK(k311.order() == 5);
    CHECK(k311.graph().edge_count() == 7);
    CHECK(degree_sequence(k311.graph()) == DegreeSequence{4, 4, 2, 2, 2});
    CHECK(k311.kp11_parameter() == 3);

    for (int p = 1; p <= 8; ++p)
        CHECK(degree_sequence(make_kp11(p).graph()) ==
              DegreeSequence::parse(std::to_string(p + 1) + "^2,2^" + std::to_string(p)));
    CHECK_THROWS_AS(make_kp11(0), DomainError);
}

TEST_CASE("target patterns reject isolated vertices")
{
    CHECK_THROWS_AS(TargetPattern(SimpleGraph(3, {Edge(0, 1)}), "padded"), DomainError);
    CHECK_THROWS_AS(TargetPattern(SimpleGraph(0), "empty"), DomainError);
    CHECK_THROWS_AS(TargetPattern(SimpleGraph(1), "K_1"), DomainError);
    CHECK(make_kp11(3).key() == "g5:0-1.0-2.0-3.0-4.1-2.1-3.1-4");
}

TEST_CASE("contains_subgraph examples")
{
    const auto k311 = make_kp11(3);
    auto in_k5 = contains_subgraph(SimpleGraph::complete(5), k311);
    REQUIRE(in_k5);
    CHECK(is_valid_embedding(SimpleGraph::complete(5), k311.graph(), *in_k5));

    CHECK_FALSE(contains_subgraph(SimpleGraph::cycle(5), make_kp11(1)));

    // The 4-regular graph on 6 vertices is K_6 minus a perfect matching.
    auto octahedron = SimpleGraph::complete(6);
    octahedron.remove_edge(0, 1);
    octahedron.remove_edge(2, 3);
    octahedron.remove_edge(4, 5);
    CHECK_FALSE(contains_subgraph(octahedron, k311));
    CHECK(contains_subgraph(octahedron, make_kp11(2)));
}

TEST_CASE("contains_subgraph agrees with permutation brute force")
{
    std::mt19937 rng(11);
    const auto targets = small_targets();
    for (int trial = 0; trial < 400; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 6);
        SimpleGraph g(n);
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (rng() % 100 < 55)
                    g.add_edge(a, b);
        for (const auto& t : targets) {
            const auto emb = contains_subgraph(g, t);
            CHECK(emb.has_value() == oracle::contains_by_permutation(g, t.graph()));
            if (emb)
                CHECK(is_valid_embedding(g, t.graph(), *emb));
        }
    }
}

TEST_CASE("is_valid_embedding rejects bad maps")
{
    const auto k5 = SimpleGraph::complete(5);
    const auto k311 = make_kp11(3);
    const auto& target = k311.graph();
    CHECK(is_valid_embedding(k5, target, {0, 1, 2, 3, 4}));
    CHECK_FALSE(is_valid_embedding(k5, target, {0, 1, 2, 3, 3}));
    CHECK_FALSE(is_valid_embedding(k5, target, {0, 1, 2, 3}));
    CHECK_FALSE(is_valid_embedding(k5, target, {0, 1, 2, 3, 5}));
    auto missing = k5;
    missing.remove_edge(0, 1);
    CHECK_FALSE(is_valid_embedding(missing, target, {0, 1, 2, 3, 4}));
}

TEST_CASE("is_potentially examples")
{
    const auto k311 = make_kp11(3);
    const auto yes = DegreeSequence::parse("5^2,3^4");
    check_certificate(yes, k311, is_potentially(yes, k311));
    CHECK_FALSE(is_potentially(DegreeSequence::parse("4^6"), k311).answer);
    CHECK_FALSE(is_potentially(DegreeSequence::parse("6^1,3^6"), k311).answer);
    CHECK_THROWS_AS(is_potentially(DegreeSequence{3, 1, 1}, k311), NotGraphical);
    // Target larger than the sequence.
    CHECK_FALSE(is_potentially(DegreeSequence{1, 1}, k311).answer);
}

TEST_CASE("realize_with_placement seeds the pattern where asked")
{
    const auto seq = DegreeSequence::parse("5^4,4^4");
    auto g = realize_with_placement(seq, SimpleGraph::complete(4), {0, 1, 2, 3});
    REQUIRE(g);
    CHECK(degree_sequence(*g) == seq);
    for (Vertex a = 0; a < 4; ++a)
        for (Vertex b = a + 1; b < 4; ++b)
            CHECK(g->has_edge(a, b));
    // (3^4) is only K_4 itself; K_4 cannot sit on the low end of (3^4,1^2).
    CHECK_FALSE(realize_with_placement(DegreeSequence::parse("3^4,1^2"), SimpleGraph::complete(4), {2, 3, 4, 5}));
}

TEST_CASE("three potentiality engines agree with labeled-graph enumeration for n <= 6")
{
    const auto targets = small_targets();
    std::vector<SimpleGraph> patterns;
    for (const auto& t : targets)
        patterns.push_back(t.graph());
    for (int n = 1; n <= 6; ++n) {
        const auto table = oracle::potential_table(n, patterns);
        for (const auto& [seq, truth] : table) {
            for (std::size_t i = 0; i < targets.size(); ++i) {
                CAPTURE(seq.to_string());
                CAPTURE(targets[i].name());
                const auto seeded = is_potentially(seq, targets[i]);
                const auto switched = is_potentially_by_switches(seq, targets[i]);
                CHECK(seeded.answer == truth[i]);
                CHECK(switched.answer == truth[i]);
                if (seeded.answer)
                    check_certificate(seq, targets[i], seeded);
                if (switched.answer)
                    check_certificate(seq, targets[i], switched);
            }
        }
    }
}

TEST_CASE("seeded search agrees with the 2-switch engine at n = 7")
{
    const auto targets = small_targets();
    for (int s = 0; s <= 42; s += 2)
        for (const auto& seq : enumerate_graphical(7, s))
            for (const auto& t : targets) {
                CAPTURE(seq.to_string());
                CAPTURE(t.name());
                CHECK(is_potentially(seq, t).answer == is_potentially_by_switches(seq, t).answer);
            }
}

TEST_CASE("degree necessary condition and monotone containment")
{
    const auto k311 = make_kp11(3), k211 = make_kp11(2), k111 = make_kp11(1);
    const TargetPattern c4(SimpleGraph::cycle(4), "C_4");
    const TargetPattern claw(SimpleGraph(4, {Edge(0, 1), Edge(0, 2), Edge(0, 3)}), "K_{1,3}");
    for (int n = 5; n <= 8; ++n)
        for (int s = 0; s <= n * (n - 1); s += 2)
            for (const auto& seq : enumerate_graphical(n, s)) {
                CAPTURE(seq.to_string());
                const bool a311 = is_potentially(seq, k311).answer;
                const bool a211 = is_potentially(seq, k211).answer;
                for (int p = 1; p <= 3; ++p)
                    if (seq.count_at_least(p + 1) < 2)
                        CHECK_FALSE(is_potentially(seq, make_kp11(p)).answer);
                if (a311)
                    CHECK(a211);
                if (a211) {
                    CHECK(is_potentially(seq, k111).answer);
                    CHECK(is_potentially(seq, c4).answer);
                    CHECK(is_potentially(seq, claw).answer);
                }
            }
}

TEST_CASE("canonical_code identifies isomorphic graphs")
{
    std::mt19937 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 7);
        SimpleGraph g(n);
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (rng() % 2)
                    g.add_edge(a, b);
        std::vector<Vertex> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        SimpleGraph h(n);
        for (const auto& e : g.edges())
            h.add_edge(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]);
        CHECK(canonical_code(g) == canonical_code(h));
    }
    // C_6 and two triangles share a degree sequence but not a code.
    const SimpleGraph triangles(6, {Edge(0, 1), Edge(1, 2), Edge(0, 2), Edge(3, 4), Edge(4, 5), Edge(3, 5)});
    CHECK(canonical_code(SimpleGraph::cycle(6)) != canonical_code(triangles));
    CHECK_THROWS_AS(canonical_code(SimpleGraph(12)), DomainError);
}

TEST_CASE("realization classes match unlabeled counts")
{
    // (2^6): C_6 and 2C_3. (3^6): K_{3,3} and the prism. (4^6): the octahedron only.
    CHECK(realization_classes(DegreeSequence::parse("2^6")).size() == 2);
    CHECK(realization_classes(DegreeSequence::parse("3^6")).size() == 2);
    CHECK(realization_classes(DegreeSequence::parse("4^6")).size() == 1);
    // (2^7): C_7 and C_3 + C_4.
    CHECK(realization_classes(DegreeSequence::parse("2^7")).size() == 2);
}
