#pragma once

#include "kpg/degree_sequence.hpp"
#include "kpg/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace kpg {

/// A small subgraph target H, given in reduced form (no isolated vertices).
class TargetPattern {
public:
    /// Throws DomainError if graph has no vertices or an isolated vertex.
    TargetPattern(SimpleGraph graph, std::string name);

    const SimpleGraph& graph() const { return graph_; }
    const std::string& name() const { return name_; }
    int order() const { return graph_.vertex_count(); }

    /// Set when the target was built by make_kp11.
    std::optional<int> kp11_parameter() const { return kp11_p_; }

    /// Whitespace-free identifier derived from the edge set, used as a cache key.
    std::string key() const;

private:
    friend TargetPattern make_kp11(int p);

    SimpleGraph graph_;
    std::string name_;
    std::optional<int> kp11_p_;
};

/// K_{p,1,1}: apexes 0 and 1 are adjacent to each other and to 2..p+1.
/// Throws DomainError for p < 1.
TargetPattern make_kp11(int p);

/// Maps vertex i of H to embedding[i] in the host graph.
using Embedding = std::vector<Vertex>;

/// Injective and edge-preserving (not necessarily induced).
bool is_valid_embedding(const SimpleGraph& host, const SimpleGraph& pattern, const Embedding& embedding);

std::optional<Embedding> find_embedding(const SimpleGraph& host, const SimpleGraph& pattern);
std::optional<Embedding> contains_subgraph(const SimpleGraph& host, const TargetPattern& target);

struct PotentialVerdict {
    bool answer = false;
    std::optional<SimpleGraph> certificate;
    Embedding embedding;
};

/// Decides whether some realization of seq contains the target. Every
/// placement of the target onto degree classes of seq is tried, highest
/// degrees first; each placement is completed by a memoized backtracking
/// search over the residual demands. Throws NotGraphical.
PotentialVerdict is_potentially(const DegreeSequence& seq, const TargetPattern& target);

/// Realization of seq (vertex i has degree seq[i]) that contains the
/// pattern's edges on the given vertex placement, if one exists.
std::optional<SimpleGraph> realize_with_placement(const DegreeSequence& seq, const SimpleGraph& pattern,
                                                  const Embedding& placement);

} // namespace kpg
