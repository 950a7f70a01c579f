#pragma once

#include <optional>

#include "dclcs/core.hpp"

namespace dclcs {

/// Classical quadratic LCS with deterministic tie-breaking
/// (diagonal match preferred, then left, then up).
Solution lcs(const Sequence& s1, const Sequence& s2);

/// Cubic single-constraint C-LCS: a longest common subsequence of s1 and s2
/// that is a supersequence of sc, or nullopt when no common subsequence
/// contains sc.
std::optional<Solution> clcs_single(const Sequence& s1, const Sequence& s2, const Sequence& sc);

}  // namespace dclcs
