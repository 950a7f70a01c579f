#include "dclcs/fpt_solver.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <thread>

namespace dclcs {

EffectiveOcc effective_occ(const Sequence& s1, const Sequence& s2,
                           const OccurrenceConstraint& co) {
    std::set<Symbol> alphabet(s1.begin(), s1.end());
    alphabet.insert(s2.begin(), s2.end());
    EffectiveOcc eff;
    for (Symbol c : alphabet)
        eff.bounds[c] = std::min({co.at(c), occ(c, s1), occ(c, s2)});
    return eff;
}

std::uint64_t DPTable::bit_count(int n1, int n2, int hmax, int k) {
    return static_cast<std::uint64_t>(n1 + 1) * (n2 + 1) * (hmax + 1) << k;
}

DPTable::DPTable(int n1, int n2, int hmax, int k)
    : n1_(n1), n2_(n2), hmax_(hmax), k_(k),
      plane_(static_cast<std::uint64_t>(n1 + 1) * (n2 + 1) * (hmax + 1)),
      bits_((bit_count(n1, n2, hmax, k) + 63) / 64, 0) {}

std::uint64_t DPTable::cell_count() const {
    return bit_count(n1_, n2_, hmax_, k_);
}

DPTable dp_fill(const Sequence& s1, const Sequence& s2, const Sequence& sc,
                const LabelFunction& l, int k, std::uint64_t memory_budget) {
    const int n1 = static_cast<int>(s1.size());
    const int n2 = static_cast<int>(s2.size());
    const int hmax = static_cast<int>(sc.size());
    const std::uint64_t bits = DPTable::bit_count(n1, n2, hmax, k);
    if ((bits + 7) / 8 > memory_budget)
        throw SizingError("dp table needs " + std::to_string(bits) +
                          " bits, exceeding the memory budget of " +
                          std::to_string(memory_budget) + " bytes");

    DPTable table(n1, n2, hmax, k);

    // Subsets in nondecreasing popcount order, numeric within equal popcount.
    std::vector<std::uint32_t> masks(std::size_t{1} << k);
    for (std::uint32_t m = 0; m < masks.size(); ++m) masks[m] = m;
    std::stable_sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
        return std::popcount(a) < std::popcount(b);
    });

    for (std::uint32_t mask : masks) {
        if (mask == 0) {
            for (int i = 0; i <= n1; ++i)
                for (int j = 0; j <= n2; ++j) table.set(i, j, 0, 0);
            continue;
        }
        for (int h = 0; h <= hmax; ++h) {
            for (int i = 1; i <= n1; ++i) {
                const Symbol a = s1[i - 1];
                const std::uint32_t lab = mask & l.at(a);
                const bool matches_sc = h > 0 && sc[h - 1] == a;
                for (int j = 1; j <= n2; ++j) {
                    bool v = table.get(i - 1, j, h, mask) || table.get(i, j - 1, h, mask);
                    if (!v && a == s2[j - 1] && lab != 0) {
                        for (std::uint32_t m = lab; m != 0 && !v; m &= m - 1)
                            v = table.get(i - 1, j - 1, h, mask ^ (m & -m));
                        if (!v && matches_sc) {
                            for (std::uint32_t m = lab; m != 0 && !v; m &= m - 1)
                                v = table.get(i - 1, j - 1, h - 1, mask ^ (m & -m));
                        }
                    }
                    if (v) table.set(i, j, h, mask);
                }
            }
        }
    }
    return table;
}

Solution backtrack(const DPTable& table, const Sequence& s1, const Sequence& s2,
                   const Sequence& sc, const LabelFunction& l, std::uint32_t label_mask) {
    int i = table.n1();
    int j = table.n2();
    int h = table.hmax();
    std::uint32_t mask = label_mask;
    if (!table.get(i, j, h, mask))
        throw std::logic_error("backtrack requires a satisfied success cell");

    Solution sol;
    while (mask != 0) {
        // Cases in the fixed order 1, 2, 3, 4; labels ascending within 3/4.
        if (i > 0 && table.get(i - 1, j, h, mask)) {
            --i;
            continue;
        }
        if (j > 0 && table.get(i, j - 1, h, mask)) {
            --j;
            continue;
        }
        const Symbol a = s1[i - 1];
        const std::uint32_t lab = mask & l.at(a);
        bool moved = false;
        for (std::uint32_t m = lab; m != 0; m &= m - 1) {
            const std::uint32_t bit = m & -m;
            if (table.get(i - 1, j - 1, h, mask ^ bit)) {
                sol.seq.push_back(a);
                sol.pos1.push_back(i - 1);
                sol.pos2.push_back(j - 1);
                --i;
                --j;
                mask ^= bit;
                moved = true;
                break;
            }
        }
        if (moved) continue;
        for (std::uint32_t m = lab; m != 0; m &= m - 1) {
            const std::uint32_t bit = m & -m;
            if (h > 0 && sc[h - 1] == a && table.get(i - 1, j - 1, h - 1, mask ^ bit)) {
                sol.seq.push_back(a);
                sol.pos1.push_back(i - 1);
                sol.pos2.push_back(j - 1);
                --i;
                --j;
                --h;
                mask ^= bit;
                moved = true;
                break;
            }
        }
        if (!moved) throw std::logic_error("backtrack found no applicable recurrence case");
    }
    std::reverse(sol.seq.begin(), sol.seq.end());
    std::reverse(sol.pos1.begin(), sol.pos1.end());
    std::reverse(sol.pos2.begin(), sol.pos2.end());
    return sol;
}

namespace {

// Canonical label-set tuples for the exhaustive family: one representative
// per orbit of the induced label functions under label permutation. Only
// tuples whose union is the full label set can satisfy the success test, so
// enumeration is restricted to surjective tuples. Labels above the current
// high-water mark must form a contiguous run, which makes each orbit appear
// exactly once.
struct CanonicalEnumerator {
    std::vector<std::pair<Symbol, int>> symbols;  // (symbol, min(C'_o, k))
    int k = 0;
    std::vector<long> suffix_capacity;
    std::vector<std::uint32_t> current;
    std::vector<LabelFunction> out;
    std::uint64_t guard = 4'000'000;

    void run() {
        suffix_capacity.assign(symbols.size() + 1, 0);
        for (int idx = static_cast<int>(symbols.size()) - 1; idx >= 0; --idx)
            suffix_capacity[idx] = suffix_capacity[idx + 1] + symbols[idx].second;
        current.assign(symbols.size(), 0);
        descend(0, 0);
    }

    void descend(std::size_t idx, int used) {
        if (idx == symbols.size()) {
            if (used == k) emit();
            return;
        }
        if (used + suffix_capacity[idx] < k) return;
        const int cap = symbols[idx].second;
        const std::uint32_t used_mask = (std::uint32_t{1} << used) - 1;
        std::uint32_t old = used_mask;
        while (true) {
            const int pc = std::popcount(old);
            if (pc <= cap) {
                const int a_floor =
                    std::max<long>(pc == 0 ? 1 : 0, k - used - suffix_capacity[idx + 1]);
                const int a_cap = std::min(cap - pc, k - used);
                for (int a = a_floor; a <= a_cap; ++a) {
                    current[idx] = old | (((std::uint32_t{1} << a) - 1) << used);
                    descend(idx + 1, used + a);
                }
            }
            if (old == 0) break;
            old = (old - 1) & used_mask;
        }
    }

    void emit() {
        if (out.size() >= guard)
            throw SizingError("canonical label-function enumeration exceeds " +
                              std::to_string(guard) + " entries");
        LabelFunction l;
        for (std::size_t idx = 0; idx < symbols.size(); ++idx)
            l.sets[static_cast<unsigned char>(symbols[idx].first)] = current[idx];
        out.push_back(l);
    }
};

}  // namespace

int plain_lcs_length(const Sequence& s1, const Sequence& s2) {
    const int n1 = static_cast<int>(s1.size());
    const int n2 = static_cast<int>(s2.size());
    std::vector<int> prev(n2 + 1, 0), cur(n2 + 1, 0);
    for (int i = 1; i <= n1; ++i) {
        for (int j = 1; j <= n2; ++j) {
            cur[j] = std::max({prev[j], cur[j - 1],
                               s1[i - 1] == s2[j - 1] ? prev[j - 1] + 1 : 0});
        }
        std::swap(prev, cur);
    }
    return prev[n2];
}

bool constraint_embeddable(const Sequence& s1, const Sequence& s2, const Sequence& sc,
                           const OccurrenceConstraint& co) {
    if (!is_subsequence(sc, s1) || !is_subsequence(sc, s2)) return false;
    std::set<Symbol> seen(sc.begin(), sc.end());
    for (Symbol c : seen) {
        if (occ(c, sc) > co.at(c)) return false;
    }
    return true;
}

namespace {

template <typename MakeLabelFn>
std::optional<Solution> run_trials(std::uint64_t total, const MakeLabelFn& make_lf,
                                   const Sequence& s1, const Sequence& s2, const Sequence& sc,
                                   int k, const SolverConfig& cfg, std::uint64_t& trials_used) {
    const int n1 = static_cast<int>(s1.size());
    const int n2 = static_cast<int>(s2.size());
    const int hmax = static_cast<int>(sc.size());
    const std::uint32_t full = (std::uint32_t{1} << k) - 1;

    auto attempt = [&](std::uint64_t t) -> bool {
        const LabelFunction l = make_lf(t);
        const DPTable table = dp_fill(s1, s2, sc, l, k, cfg.memory_budget);
        return table.get(n1, n2, hmax, full);
    };
    auto accept = [&](std::uint64_t t) -> Solution {
        const LabelFunction l = make_lf(t);
        const DPTable table = dp_fill(s1, s2, sc, l, k, cfg.memory_budget);
        return backtrack(table, s1, s2, sc, l, full);
    };

    unsigned workers = cfg.parallel_trials ? std::thread::hardware_concurrency() : 1;
    workers = std::clamp(workers, 1u, 8u);

    if (workers == 1 || total <= 1) {
        for (std::uint64_t t = 0; t < total; ++t) {
            if (attempt(t)) {
                trials_used = t + 1;
                return accept(t);
            }
        }
        trials_used = total;
        return std::nullopt;
    }

    // Batched trials: the accepted trial is the smallest stream index among
    // successes, so results do not depend on scheduling.
    for (std::uint64_t base = 0; base < total; base += workers) {
        const std::size_t count =
            static_cast<std::size_t>(std::min<std::uint64_t>(workers, total - base));
        std::vector<char> hit(count, 0);
        std::vector<std::thread> threads;
        threads.reserve(count);
        for (std::size_t w = 0; w < count; ++w)
            threads.emplace_back([&, w] { hit[w] = attempt(base + w) ? 1 : 0; });
        for (auto& th : threads) th.join();
        for (std::size_t w = 0; w < count; ++w) {
            if (hit[w]) {
                trials_used = base + w + 1;
                return accept(base + w);
            }
        }
    }
    trials_used = total;
    return std::nullopt;
}

}  // namespace

std::optional<Solution> solve_for_k(const Sequence& s1, const Sequence& s2, const Sequence& sc,
                                    const EffectiveOcc& c_eff, int k, const SolverConfig& cfg,
                                    SolveStats* stats) {
    if (k < 1) throw InputError("solve_for_k requires k >= 1");
    if (k > cfg.max_k)
        throw SizingError("k = " + std::to_string(k) + " exceeds max_k = " +
                          std::to_string(cfg.max_k));
    if (static_cast<int>(sc.size()) > k) return std::nullopt;
    if (c_eff.total() < k) return std::nullopt;  // a length-k solution needs k colored slots

    const std::uint64_t bits =
        DPTable::bit_count(static_cast<int>(s1.size()), static_cast<int>(s2.size()),
                           static_cast<int>(sc.size()), k);
    if ((bits + 7) / 8 > cfg.memory_budget)
        throw SizingError("dp table needs " + std::to_string(bits) +
                          " bits, exceeding the memory budget of " +
                          std::to_string(cfg.memory_budget) + " bytes");

    std::uint64_t used = 0;
    std::optional<Solution> result;
    if (cfg.family.kind == FamilyKind::exhaustive) {
        CanonicalEnumerator en;
        en.k = k;
        for (const auto& [c, bound] : c_eff.bounds) {
            if (bound > 0) en.symbols.emplace_back(c, static_cast<int>(std::min<long>(bound, k)));
        }
        en.run();
        const auto& tuples = en.out;
        result = run_trials(tuples.size(), [&](std::uint64_t t) { return tuples[t]; }, s1, s2, sc,
                            k, cfg, used);
    } else {
        const ColoredAlphabet alpha = build_colored_alphabet(c_eff);
        const HashFamily family(alpha, k, cfg.family);
        result = run_trials(
            family.size(),
            [&](std::uint64_t t) { return label_function(family.assignment(t), alpha); }, s1, s2,
            sc, k, cfg, used);
    }
    if (stats) stats->trials_used += used;
    return result;
}

std::optional<Solution> solve_single_constraint(const Sequence& s1, const Sequence& s2,
                                                const Sequence& sc, const OccurrenceConstraint& co,
                                                const SolverConfig& cfg, SolveStats* stats) {
    if (!constraint_embeddable(s1, s2, sc, co)) return std::nullopt;

    const EffectiveOcc c_eff = effective_occ(s1, s2, co);
    const long upper = std::min<long>(
        {static_cast<long>(s1.size()), static_cast<long>(s2.size()), c_eff.total(),
         static_cast<long>(plain_lcs_length(s1, s2))});
    if (upper > cfg.max_k)
        throw SizingError("search upper bound " + std::to_string(upper) + " exceeds max_k = " +
                          std::to_string(cfg.max_k));

    const int k_min = std::max<int>(static_cast<int>(sc.size()), 1);
    for (int k = static_cast<int>(upper); k >= k_min; --k) {
        if (stats) stats->k_tested.push_back(k);
        if (auto r = solve_for_k(s1, s2, sc, c_eff, k, cfg, stats)) return r;
    }
    if (sc.empty()) return Solution{};
    return std::nullopt;
}

}  // namespace dclcs
