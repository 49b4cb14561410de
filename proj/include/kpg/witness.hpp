#pragma once

#include "kpg/degree_sequence.hpp"
#include "kpg/graph.hpp"
#include "kpg/potential.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace kpg {

enum class StepKind {
    Seed,        // a realization obtained by search; replaces the working graph
    Reduce,      // a minimum-degree vertex was deleted (informational)
    Reattach,    // a vertex was appended with the listed neighbours
    Interchange, // three edges swapped for three others
    Success,     // a K_{3,1,1} was located in the working graph
    Note,        // informational, e.g. a vertex coincidence
    Fallback,    // the constructive route diverged; complete search took over
};

std::string to_string(StepKind kind);

struct TraceStep {
    StepKind kind;
    int n; // order of the sequence being processed
    std::string detail;
    std::optional<SimpleGraph> graph; // Seed, Fallback
    std::vector<Edge> removed;        // Interchange
    std::vector<Edge> inserted;       // Interchange
    std::vector<Vertex> neighbors;    // Reattach
};

struct WitnessResult {
    SimpleGraph graph;
    Embedding embedding; // apexes at 0,1; independent vertices at 2,3,4
    std::vector<TraceStep> trace;
    int divergences = 0;
};

/// Realization of seq containing K_{3,1,1}, for n >= 5 and sigma(seq) >= 4n-2.
/// n <= 7 is settled by search; larger n either deletes a vertex of degree
/// <= 2 and recurses, or puts a K_4 on the four largest degrees and applies
/// the three-edge interchange. Throws TooSmall, NotGraphical, BelowThreshold,
/// or KnownException for (4^6).
WitnessResult find_k311_realization(const DegreeSequence& seq);

/// Appends one vertex of degree removed_degree to residual, joined to
/// distinct vertices whose residual degrees form neighbor_residual_degrees,
/// such that the result realizes original. Throws AttachmentInfeasible.
SimpleGraph reattach(const SimpleGraph& residual, const DegreeSequence& original, int removed_degree,
                     std::vector<int> neighbor_residual_degrees);

/// Degree-preserving replacement of `remove` by `insert`. Throws
/// InvalidInterchange if an edge to remove is absent, an edge to insert is
/// present, or some vertex would change degree.
SimpleGraph interchange(const SimpleGraph& g, std::span<const Edge> remove, std::span<const Edge> insert);

/// Re-applies the graph-changing steps of a trace in order.
SimpleGraph replay_trace(const std::vector<TraceStep>& trace);

std::string format_trace(const std::vector<TraceStep>& trace);

} // namespace kpg
