#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dclcs/core.hpp"

namespace dclcs {

/// Exhaustive reference solver: searches every subsequence of the shorter
/// input and returns a maximum-length feasible one (lexicographically least
/// among maxima), or nullopt when no feasible solution exists. Refuses when
/// the shorter input is longer than `cap`.
std::optional<Solution> brute_force_dclcs(const Instance& inst, int cap = 20);

/// Exact shortest common supersequence by breadth-first search over
/// per-string matched-prefix vectors; deterministic tie-break by symbol
/// order. Refuses when the state-space product exceeds `state_cap`.
Sequence brute_force_scs(const std::vector<Sequence>& strings,
                         std::uint64_t state_cap = 10'000'000);

}  // namespace dclcs
