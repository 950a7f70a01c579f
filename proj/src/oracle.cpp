#include "dclcs/oracle.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <set>

namespace dclcs {

namespace {

// next[i][c]: smallest position >= i holding c, or -1.
std::vector<std::array<int, 128>> next_occurrence(const Sequence& s) {
    const int n = static_cast<int>(s.size());
    std::vector<std::array<int, 128>> next(n + 1);
    next[n].fill(-1);
    for (int i = n - 1; i >= 0; --i) {
        next[i] = next[i + 1];
        next[i][static_cast<unsigned char>(s[i]) & 0x7f] = i;
    }
    return next;
}

std::vector<int> greedy_embed(const Sequence& needle, const Sequence& host) {
    std::vector<int> pos;
    std::size_t j = 0;
    for (Symbol c : needle) {
        while (j < host.size() && host[j] != c) ++j;
        pos.push_back(static_cast<int>(j));
        ++j;
    }
    return pos;
}

struct SubsequenceSearch {
    const Instance& inst;
    const Sequence& base;
    const Sequence& other;
    std::vector<std::array<int, 128>> next_base;
    std::vector<std::array<int, 128>> next_other;
    std::vector<Symbol> symbols;

    Sequence cur;
    std::vector<int> matched;
    std::array<long, 128> counts{};
    std::optional<Sequence> best;

    void run() {
        next_base = next_occurrence(base);
        next_other = next_occurrence(other);
        std::set<Symbol> seen(base.begin(), base.end());
        symbols.assign(seen.begin(), seen.end());
        matched.assign(inst.cs.size(), 0);
        descend(0, 0);
    }

    bool feasible() const {
        for (std::size_t i = 0; i < inst.cs.size(); ++i) {
            if (matched[i] != static_cast<int>(inst.cs.strings[i].size())) return false;
        }
        return true;
    }

    // Distinct-subsequence DFS in lexicographic preorder: the first
    // maximum-length feasible string found is the lexicographically least.
    void descend(int pos_base, int pos_other) {
        if (feasible() && (!best || cur.size() > best->size())) best = cur;
        const int max_add = std::min(static_cast<int>(base.size()) - pos_base,
                                     static_cast<int>(other.size()) - pos_other);
        if (best && cur.size() + max_add <= best->size()) return;
        for (Symbol c : symbols) {
            const int ci = static_cast<unsigned char>(c) & 0x7f;
            const int pb = next_base[pos_base][ci];
            if (pb < 0) continue;
            if (counts[ci] + 1 > inst.co.at(c)) continue;
            const int po = next_other[pos_other][ci];
            if (po < 0) continue;

            cur.push_back(c);
            ++counts[ci];
            std::vector<int> saved = matched;
            for (std::size_t i = 0; i < inst.cs.size(); ++i) {
                if (matched[i] < static_cast<int>(inst.cs.strings[i].size()) &&
                    inst.cs.strings[i][matched[i]] == c)
                    ++matched[i];
            }
            descend(pb + 1, po + 1);
            matched = saved;
            --counts[ci];
            cur.pop_back();
        }
    }
};

}  // namespace

std::optional<Solution> brute_force_dclcs(const Instance& inst, int cap) {
    const bool s1_shorter = inst.s1.size() <= inst.s2.size();
    const Sequence& base = s1_shorter ? inst.s1 : inst.s2;
    const Sequence& other = s1_shorter ? inst.s2 : inst.s1;
    if (static_cast<int>(base.size()) > cap)
        throw SizingError("brute-force subsequence search refuses inputs longer than " +
                          std::to_string(cap) + " (got " + std::to_string(base.size()) + ")");

    SubsequenceSearch search{inst, base, other, {}, {}, {}, {}, {}, {}, {}};
    search.run();
    if (!search.best) return std::nullopt;

    Solution sol;
    sol.seq = *search.best;
    sol.pos1 = greedy_embed(sol.seq, inst.s1);
    sol.pos2 = greedy_embed(sol.seq, inst.s2);
    return sol;
}

Sequence brute_force_scs(const std::vector<Sequence>& strings, std::uint64_t state_cap) {
    std::vector<Sequence> r(strings);
    std::sort(r.begin(), r.end());
    r.erase(std::unique(r.begin(), r.end()), r.end());
    if (r.empty()) return {};

    const std::size_t n = r.size();
    std::vector<std::uint64_t> stride(n);
    std::uint64_t states = 1;
    for (std::size_t i = 0; i < n; ++i) {
        stride[i] = states;
        const std::uint64_t dim = r[i].size() + 1;
        if (states > state_cap / dim)
            throw SizingError("scs state space exceeds the cap of " + std::to_string(state_cap));
        states *= dim;
    }

    std::set<Symbol> seen;
    for (const auto& s : r) seen.insert(s.begin(), s.end());
    const std::vector<Symbol> alphabet(seen.begin(), seen.end());

    const std::uint64_t goal = states - 1;
    if (goal == 0) return {};

    std::vector<std::int64_t> parent(states, -2);  // -2 unvisited, -1 start
    std::vector<char> via(states, 0);
    parent[0] = -1;
    std::deque<std::uint64_t> queue{0};
    std::vector<std::uint64_t> pref(n);
    while (!queue.empty()) {
        const std::uint64_t state = queue.front();
        queue.pop_front();
        std::uint64_t rest = state;
        for (std::size_t i = 0; i < n; ++i) {
            pref[i] = rest % (r[i].size() + 1);
            rest /= r[i].size() + 1;
        }
        for (Symbol c : alphabet) {
            std::uint64_t ns = state;
            for (std::size_t i = 0; i < n; ++i) {
                if (pref[i] < r[i].size() && r[i][pref[i]] == c) ns += stride[i];
            }
            if (ns == state || parent[ns] != -2) continue;
            parent[ns] = static_cast<std::int64_t>(state);
            via[ns] = c;
            if (ns == goal) {
                Sequence result;
                for (std::uint64_t at = goal; parent[at] >= 0;
                     at = static_cast<std::uint64_t>(parent[at]))
                    result.push_back(via[at]);
                std::reverse(result.begin(), result.end());
                return result;
            }
            queue.push_back(ns);
        }
    }
    throw std::logic_error("scs search exhausted without reaching the goal state");
}

}  // namespace dclcs
