#pragma once

#include <vector>

#include "dclcs/core.hpp"

namespace dclcs {

constexpr Symbol kDelimiter = '#';

/// An SCS instance: delimiter-free strings plus an explicit (sorted)
/// alphabet, which may be larger than the symbols actually used.
struct ScsInstance {
    std::vector<Sequence> strings;
    std::vector<Symbol> alphabet;

    /// Deduplicates and sorts strings, merges their symbols into the
    /// alphabet, and rejects the delimiter.
    static ScsInstance make(std::vector<Sequence> strings, std::vector<Symbol> alphabet = {});
};

struct ReductionOutput {
    Sequence s1;
    Sequence s2;
    StringConstraint cs;
    int l = 0;
    Sequence w;
};

/// c(r): each symbol of r followed by the delimiter.
Sequence interleave(const Sequence& r);

/// The SCS -> C-LCS construction: s1 = (w#)^l, s2 = (rev(w)#)^l,
/// C_s = {#^l} union {c(r) : r in R}, with w the sorted alphabet.
ReductionOutput build_reduction(const ScsInstance& scs, int l);

/// The constructed C-LCS instance with default (unconstrained) occurrence
/// bounds.
Instance reduction_instance(const ReductionOutput& out);

/// Checks both sides of the reduction's equivalence independently:
/// (A) the exact SCS length is at most l, and (B) the constructed C-LCS
/// instance has a feasible solution of length 2l per the brute-force oracle.
/// Returns whether A <=> B.
bool verify_equivalence(const ScsInstance& scs, int l);

}  // namespace dclcs
