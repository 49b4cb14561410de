#pragma once

#include "kpg/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace kpg {

enum class PartRole { OneFactor, SpanningCycle };

std::string to_string(PartRole role);

struct DecompositionPart {
    PartRole role;
    std::vector<Edge> edges;
    // Traversal order for a SpanningCycle (first vertex not repeated); empty for a OneFactor.
    std::vector<Vertex> cycle_order;
};

/// Edge-disjoint partition of E(K_n).
struct Decomposition {
    int n = 0;
    std::vector<DecompositionPart> parts;

    /// One labeled block per part, each in the graph text format.
    std::string to_text() const;
};

/// K_{2m} as one perfect matching followed by m-1 Hamiltonian cycles.
/// Throws DomainError for m < 1.
Decomposition decompose_even(int m);

/// K_{2m+1} as m Hamiltonian cycles. Throws DomainError for m < 1.
Decomposition decompose_odd(int m);

/// First violated invariant (disjointness, coverage, part structure), if any.
std::optional<std::string> check_decomposition(const Decomposition& d);

/// Parses the block format written by Decomposition::to_text. The cycle
/// order of a spanning-cycle part is recovered from its edges.
Decomposition parse_decomposition(const std::string& text);

/// Union of the edge sets of the chosen parts as a graph on d.n vertices.
SimpleGraph union_of_parts(const Decomposition& d, const std::vector<std::size_t>& part_indices);

} // namespace kpg
