#pragma once

#include "kpg/degree_sequence.hpp"
#include "kpg/graph.hpp"
#include "kpg/potential.hpp"

#include <cstdint>
#include <vector>

namespace kpg {

/// Largest order accepted by canonical_code (the code packs n(n-1)/2 bits).
inline constexpr int kMaxCanonicalOrder = 11;

/// Lexicographically minimal lower-triangle adjacency bit string over all
/// vertex orders that list degree classes in descending degree and permute
/// freely inside each class. Isomorphic graphs get equal codes.
/// Throws DomainError above kMaxCanonicalOrder.
std::uint64_t canonical_code(const SimpleGraph& g);

/// Every isomorphism class of realizations of seq, reached by breadth-first
/// search over 2-switches starting from realize(seq). Throws NotGraphical.
std::vector<SimpleGraph> realization_classes(const DegreeSequence& seq);

/// Potentiality decided by scanning realization_classes for the target.
PotentialVerdict is_potentially_by_switches(const DegreeSequence& seq, const TargetPattern& target);

} // namespace kpg
