#include "dclcs/constraint_enum.hpp"

#include <algorithm>
#include <set>

namespace dclcs {

std::vector<Symbol> restricted_alphabet(const StringConstraint& cs) {
    std::set<Symbol> seen;
    for (const auto& m : cs.strings) seen.insert(m.begin(), m.end());
    return {seen.begin(), seen.end()};
}

namespace {

struct SupersequenceSearch {
    const StringConstraint& cs;
    std::vector<Symbol> alphabet;
    int k;
    Sequence built;
    std::vector<int> matched;  // greedy matched-prefix length per member
    std::vector<Sequence> out;

    void run() {
        matched.assign(cs.size(), 0);
        descend();
    }

    bool complete() const {
        for (std::size_t i = 0; i < cs.size(); ++i) {
            if (matched[i] != static_cast<int>(cs.strings[i].size())) return false;
        }
        return true;
    }

    void descend() {
        if (complete() && (cs.empty() ? built.empty() : !built.empty())) out.push_back(built);
        if (static_cast<int>(built.size()) == k) return;
        // Admissible bound: each member still needs its unmatched suffix.
        int max_remaining = 0;
        for (std::size_t i = 0; i < cs.size(); ++i)
            max_remaining = std::max(
                max_remaining, static_cast<int>(cs.strings[i].size()) - matched[i]);
        if (static_cast<int>(built.size()) + max_remaining > k) return;
        for (Symbol c : alphabet) {
            built.push_back(c);
            std::vector<int> saved = matched;
            for (std::size_t i = 0; i < cs.size(); ++i) {
                if (matched[i] < static_cast<int>(cs.strings[i].size()) &&
                    cs.strings[i][matched[i]] == c)
                    ++matched[i];
            }
            descend();
            matched = saved;
            built.pop_back();
        }
    }
};

}  // namespace

std::vector<Sequence> enumerate_common_supersequences(const StringConstraint& cs, int k) {
    if (k < 0) throw InputError("supersequence enumeration requires k >= 0");
    SupersequenceSearch search{cs, restricted_alphabet(cs), k, {}, {}, {}};
    search.run();
    std::sort(search.out.begin(), search.out.end(), [](const Sequence& a, const Sequence& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return search.out;
}

std::optional<Solution> solve_dclcs(const Instance& inst, const SolverConfig& cfg,
                                    SolveStats* stats) {
    if (inst.cs.size() <= 1) {
        const Sequence sc = inst.cs.empty() ? Sequence{} : inst.cs.strings.front();
        return solve_single_constraint(inst.s1, inst.s2, sc, inst.co, cfg, stats);
    }

    const EffectiveOcc c_eff = effective_occ(inst.s1, inst.s2, inst.co);
    const long upper = std::min<long>(
        {static_cast<long>(inst.s1.size()), static_cast<long>(inst.s2.size()), c_eff.total(),
         static_cast<long>(plain_lcs_length(inst.s1, inst.s2))});
    if (upper > cfg.max_k)
        throw SizingError("search upper bound " + std::to_string(upper) + " exceeds max_k = " +
                          std::to_string(cfg.max_k));

    for (int k = static_cast<int>(upper); k >= 1; --k) {
        if (stats) stats->k_tested.push_back(k);
        for (const Sequence& sc : enumerate_common_supersequences(inst.cs, k)) {
            if (!constraint_embeddable(inst.s1, inst.s2, sc, inst.co)) continue;
            if (auto r = solve_for_k(inst.s1, inst.s2, sc, c_eff, k, cfg, stats)) return r;
        }
    }
    return std::nullopt;
}

}  // namespace dclcs
