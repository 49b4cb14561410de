#pragma once

#include "kpg/degree_sequence.hpp"
#include "kpg/graph.hpp"

#include <optional>
#include <span>
#include <vector>

namespace kpg {

/// Erdős–Gallai test on a non-increasing list of non-negative integers.
bool erdos_gallai(std::span<const int> non_increasing);

bool is_graphical(const DegreeSequence& seq);

/// Havel–Hakimi construction. Vertex i of the result has degree seq[i].
/// The vertex with the largest residual demand (lowest index on ties) is
/// joined to the next-largest residual vertices (lowest index on ties).
/// Throws NotGraphical.
SimpleGraph realize(const DegreeSequence& seq);

/// Pull-style stream of the graphical non-increasing sequences of length n
/// with degree sum s, in lexicographically decreasing order.
class GraphicalSequences {
public:
    GraphicalSequences(int n, long long s);

    std::optional<DegreeSequence> next();

private:
    bool advance();

    int n_;
    long long sum_;
    int cap_;
    bool started_ = false;
    bool done_ = false;
    std::vector<int> current_;
};

/// Materializes GraphicalSequences(n, s).
std::vector<DegreeSequence> enumerate_graphical(int n, long long s);

} // namespace kpg
