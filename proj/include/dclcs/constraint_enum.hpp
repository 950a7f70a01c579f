#pragma once

#include <optional>
#include <vector>

#include "dclcs/core.hpp"
#include "dclcs/fpt_solver.hpp"

namespace dclcs {

/// Sorted deduplicated symbols occurring in any member of cs.
std::vector<Symbol> restricted_alphabet(const StringConstraint& cs);

/// All strings q over restricted_alphabet(cs) with 1 <= |q| <= k such that
/// every member of cs is a subsequence of q; the empty string is included
/// exactly when cs is empty. Sorted by length, then lexicographically.
std::vector<Sequence> enumerate_common_supersequences(const StringConstraint& cs, int k);

/// Top-level solver entry point. Delegates to solve_single_constraint when
/// |C_s| <= 1; otherwise enumerates short common supersequences of C_s and
/// solves each single-constraint subproblem.
std::optional<Solution> solve_dclcs(const Instance& inst, const SolverConfig& cfg,
                                    SolveStats* stats = nullptr);

}  // namespace dclcs
