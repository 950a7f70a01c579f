#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dclcs/color_coding.hpp"
#include "dclcs/core.hpp"

namespace dclcs {

struct SolverConfig {
    FamilySpec family;
    int max_k = 16;
    std::uint64_t memory_budget = std::uint64_t{2} << 30;  // bytes
    bool parallel_trials = true;
};

struct SolveStats {
    std::uint64_t trials_used = 0;
    std::vector<int> k_tested;
};

EffectiveOcc effective_occ(const Sequence& s1, const Sequence& s2, const OccurrenceConstraint& co);

/// Length of a plain (unconstrained) LCS; used as a search upper bound.
int plain_lcs_length(const Sequence& s1, const Sequence& s2);

/// True iff sc is a common subsequence of s1 and s2 whose own occurrence
/// counts respect co. When false, no feasible solution containing sc exists.
bool constraint_embeddable(const Sequence& s1, const Sequence& s2, const Sequence& sc,
                           const OccurrenceConstraint& co);

/// Boolean table V[i, j, h, L], bit-packed as one (i, j, h) plane per label
/// subset L.
class DPTable {
public:
    DPTable(int n1, int n2, int hmax, int k);

    bool get(int i, int j, int h, std::uint32_t label_mask) const {
        const std::uint64_t bit = index(i, j, h, label_mask);
        return (bits_[bit >> 6] >> (bit & 63)) & 1;
    }
    void set(int i, int j, int h, std::uint32_t label_mask) {
        const std::uint64_t bit = index(i, j, h, label_mask);
        bits_[bit >> 6] |= std::uint64_t{1} << (bit & 63);
    }

    int n1() const { return n1_; }
    int n2() const { return n2_; }
    int hmax() const { return hmax_; }
    int k() const { return k_; }
    std::uint64_t cell_count() const;

    /// Table size in bits for the given dimensions; usable before allocation.
    static std::uint64_t bit_count(int n1, int n2, int hmax, int k);

private:
    std::uint64_t index(int i, int j, int h, std::uint32_t label_mask) const {
        return label_mask * plane_ +
               (static_cast<std::uint64_t>(h) * (n1_ + 1) + i) * (n2_ + 1) + j;
    }

    int n1_, n2_, hmax_, k_;
    std::uint64_t plane_;
    std::vector<std::uint64_t> bits_;
};

/// Fills the recurrence over all cells; subsets are processed in
/// nondecreasing popcount order. Throws SizingError when the table would
/// exceed memory_budget bytes.
DPTable dp_fill(const Sequence& s1, const Sequence& s2, const Sequence& sc,
                const LabelFunction& l, int k,
                std::uint64_t memory_budget = std::uint64_t{2} << 30);

/// Reconstructs a solution from a table cell known to hold 1.
Solution backtrack(const DPTable& table, const Sequence& s1, const Sequence& s2,
                   const Sequence& sc, const LabelFunction& l, std::uint32_t label_mask);

/// Searches for a feasible solution of length exactly k. With the exhaustive
/// family, nullopt is a proof that none exists; with the randomized family,
/// nullopt is correct with probability >= 1 - delta.
std::optional<Solution> solve_for_k(const Sequence& s1, const Sequence& s2, const Sequence& sc,
                                    const EffectiveOcc& c_eff, int k, const SolverConfig& cfg,
                                    SolveStats* stats = nullptr);

/// Driver for |C_s| <= 1: tries k descending from the upper bound and
/// returns the first success.
std::optional<Solution> solve_single_constraint(const Sequence& s1, const Sequence& s2,
                                                const Sequence& sc, const OccurrenceConstraint& co,
                                                const SolverConfig& cfg,
                                                SolveStats* stats = nullptr);

}  // namespace dclcs
