#include <bit>
#include <map>
#include <random>

#include "doctest.h"

#include "dclcs/baseline_dp.hpp"
#include "dclcs/fpt_solver.hpp"
#include "dclcs/oracle.hpp"

using namespace dclcs;

namespace {

// Independent memoized evaluation of the recurrence, used to cross-check
// dp_fill cell by cell.
struct RecursiveEval {
    const Sequence& s1;
    const Sequence& s2;
    const Sequence& sc;
    const LabelFunction& l;
    std::map<std::tuple<int, int, int, std::uint32_t>, bool> memo;

    bool value(int i, int j, int h, std::uint32_t mask) {
        if (mask == 0) return h == 0;
        if (i == 0 || j == 0) return false;
        const auto key = std::make_tuple(i, j, h, mask);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        bool v = value(i - 1, j, h, mask) || value(i, j - 1, h, mask);
        if (!v && s1[i - 1] == s2[j - 1]) {
            for (std::uint32_t m = mask & l.at(s1[i - 1]); m != 0 && !v; m &= m - 1)
                v = value(i - 1, j - 1, h, mask ^ (m & -m));
            if (!v && h > 0 && sc[h - 1] == s1[i - 1]) {
                for (std::uint32_t m = mask & l.at(s1[i - 1]); m != 0 && !v; m &= m - 1)
                    v = value(i - 1, j - 1, h - 1, mask ^ (m & -m));
            }
        }
        memo[key] = v;
        return v;
    }
};

Sequence random_string(std::mt19937_64& rng, int max_len, int alphabet) {
    Sequence s;
    const int len = static_cast<int>(rng() % (max_len + 1));
    for (int i = 0; i < len; ++i) s.push_back('a' + static_cast<int>(rng() % alphabet));
    return s;
}

LabelFunction random_label_function(std::mt19937_64& rng, int alphabet, int k) {
    LabelFunction l;
    for (char c = 'a'; c < 'a' + alphabet; ++c) {
        const std::uint32_t mask = static_cast<std::uint32_t>(rng() % (1u << k));
        l.sets[static_cast<unsigned char>(c)] = mask;
    }
    return l;
}

SolverConfig exhaustive_config() {
    SolverConfig cfg;
    cfg.family.kind = FamilyKind::exhaustive;
    return cfg;
}

OccurrenceConstraint co_default(const Sequence& s1, const Sequence& s2) {
    return OccurrenceConstraint::uniform(static_cast<long>(s1.size() + s2.size()));
}

}  // namespace

TEST_CASE("effective_occ") {
    const auto worked = effective_occ("aaaabbbccd", "ddcbbbbaaaa", OccurrenceConstraint::uniform(3));
    CHECK(worked.at('a') == 3);
    CHECK(worked.at('b') == 3);
    CHECK(worked.at('c') == 1);
    CHECK(worked.at('d') == 1);

    const auto zero = effective_occ("ab", "ab", OccurrenceConstraint::uniform(0));
    CHECK(zero.at('a') == 0);
    CHECK(zero.at('b') == 0);

    const auto occ_dominated = effective_occ("ab", "ba", OccurrenceConstraint::uniform(5));
    CHECK(occ_dominated.at('a') == 1);
    CHECK(occ_dominated.at('b') == 1);
}

TEST_CASE("dp_fill worked examples") {
    LabelFunction la;
    la.add('a', 1);
    const auto single = dp_fill("a", "a", "", la, 1);
    CHECK(single.get(1, 1, 0, 0b1));

    const auto mismatch = dp_fill("a", "b", "", la, 1);
    CHECK_FALSE(mismatch.get(1, 1, 0, 0b1));

    LabelFunction lab;
    lab.add('a', 1);
    lab.add('b', 2);
    const auto table = dp_fill("ab", "ab", "b", lab, 2);
    CHECK(table.get(2, 2, 1, 0b11));
    CHECK(backtrack(table, "ab", "ab", "b", lab, 0b11).seq == "ab");
}

TEST_CASE("dp_fill cell count and memory gate") {
    LabelFunction l;
    l.add('a', 1);
    const auto table = dp_fill("aa", "aaa", "a", l, 2);
    CHECK(table.cell_count() == 3ull * 4 * 2 * 4);
    CHECK_THROWS_AS(dp_fill("aa", "aaa", "a", l, 2, /*memory_budget=*/1), SizingError);
}

TEST_CASE("dp_fill equals an independent recursive evaluation") {
    std::mt19937_64 rng(17);
    for (int it = 0; it < 60; ++it) {
        const Sequence s1 = random_string(rng, 6, 3);
        const Sequence s2 = random_string(rng, 6, 3);
        const Sequence sc = random_string(rng, 2, 3);
        const int k = 1 + static_cast<int>(rng() % 4);
        const LabelFunction l = random_label_function(rng, 3, k);
        const DPTable table = dp_fill(s1, s2, sc, l, k);
        RecursiveEval eval{s1, s2, sc, l, {}};
        for (int i = 0; i <= static_cast<int>(s1.size()); ++i)
            for (int j = 0; j <= static_cast<int>(s2.size()); ++j)
                for (int h = 0; h <= static_cast<int>(sc.size()); ++h)
                    for (std::uint32_t mask = 0; mask < (1u << k); ++mask)
                        REQUIRE(table.get(i, j, h, mask) == eval.value(i, j, h, mask));
    }
}

TEST_CASE("dp boundary conditions and structural invariants") {
    std::mt19937_64 rng(23);
    for (int it = 0; it < 40; ++it) {
        const Sequence s1 = random_string(rng, 6, 3);
        const Sequence s2 = random_string(rng, 6, 3);
        const Sequence sc = random_string(rng, 2, 3);
        const int k = 1 + static_cast<int>(rng() % 4);
        const LabelFunction l = random_label_function(rng, 3, k);
        const DPTable t = dp_fill(s1, s2, sc, l, k);
        for (int i = 0; i <= static_cast<int>(s1.size()); ++i) {
            for (int j = 0; j <= static_cast<int>(s2.size()); ++j) {
                for (int h = 0; h <= static_cast<int>(sc.size()); ++h) {
                    for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
                        const bool v = t.get(i, j, h, mask);
                        if ((i == 0 || j == 0) && mask != 0) CHECK_FALSE(v);
                        if (mask == 0) CHECK(v == (h == 0));
                        if (h > std::popcount(mask)) CHECK_FALSE(v);
                        if (i > 0) CHECK(t.get(i - 1, j, h, mask) <= v);
                        if (j > 0) CHECK(t.get(i, j - 1, h, mask) <= v);
                    }
                }
            }
        }
    }
}

TEST_CASE("null label forces failure at the full label set") {
    // Label k never appears in the image: the success plane must be zero.
    std::mt19937_64 rng(29);
    for (int it = 0; it < 20; ++it) {
        const Sequence s1 = random_string(rng, 6, 3);
        const Sequence s2 = random_string(rng, 6, 3);
        const Sequence sc = random_string(rng, 2, 3);
        const int k = 2 + static_cast<int>(rng() % 3);
        LabelFunction l = random_label_function(rng, 3, k - 1);
        const DPTable t = dp_fill(s1, s2, sc, l, k);
        const std::uint32_t full = (1u << k) - 1;
        for (int i = 0; i <= static_cast<int>(s1.size()); ++i)
            for (int j = 0; j <= static_cast<int>(s2.size()); ++j)
                for (int h = 0; h <= static_cast<int>(sc.size()); ++h)
                    CHECK_FALSE(t.get(i, j, h, full));
    }
}

TEST_CASE("backtrack on simple tables") {
    LabelFunction la;
    la.add('a', 1);
    const auto t = dp_fill("a", "a", "a", la, 1);
    REQUIRE(t.get(1, 1, 1, 0b1));
    const auto sol = backtrack(t, "a", "a", "a", la, 0b1);
    CHECK(sol.seq == "a");
    CHECK(sol.pos1 == std::vector<int>{0});

    LabelFunction lab;
    lab.add('a', 1);
    lab.add('b', 2);
    const auto t2 = dp_fill("aab", "aba", "", lab, 2);
    REQUIRE(t2.get(3, 3, 0, 0b11));
    CHECK(backtrack(t2, "aab", "aba", "", lab, 0b11).seq == "ab");
}

TEST_CASE("solve_for_k examples") {
    const auto c_eff = effective_occ("aab", "aba", OccurrenceConstraint::uniform(1));
    const auto found = solve_for_k("aab", "aba", "", c_eff, 2, exhaustive_config());
    REQUIRE(found.has_value());
    CHECK(found->length() == 2);
    CHECK_FALSE(solve_for_k("aab", "aba", "", c_eff, 3, exhaustive_config()).has_value());

    const auto full = effective_occ("abc", "abc", co_default("abc", "abc"));
    const auto abc = solve_for_k("abc", "abc", "abc", full, 3, exhaustive_config());
    REQUIRE(abc.has_value());
    CHECK(abc->seq == "abc");
}

TEST_CASE("solve_for_k sizing errors") {
    const auto c_eff = effective_occ("aab", "aba", OccurrenceConstraint::uniform(1));
    SolverConfig cfg = exhaustive_config();
    cfg.max_k = 1;
    CHECK_THROWS_AS(solve_for_k("aab", "aba", "", c_eff, 2, cfg), SizingError);
    SolverConfig tiny = exhaustive_config();
    tiny.memory_budget = 1;
    CHECK_THROWS_AS(solve_for_k("aab", "aba", "", c_eff, 2, tiny), SizingError);
}

TEST_CASE("solve_single_constraint examples") {
    const auto twice = solve_single_constraint("aaaa", "aaaa", "", OccurrenceConstraint::uniform(2),
                                               exhaustive_config());
    REQUIRE(twice.has_value());
    CHECK(twice->seq == "aa");

    CHECK_FALSE(solve_single_constraint("a", "a", "b", co_default("a", "a"), exhaustive_config())
                    .has_value());

    const auto delim = solve_single_constraint("ab#ab#", "ba#ba#", "##",
                                               co_default("ab#ab#", "ba#ba#"),
                                               exhaustive_config());
    REQUIRE(delim.has_value());
    CHECK(delim->length() == 4);

    const auto empty = solve_single_constraint("", "", "", co_default("", ""),
                                               exhaustive_config());
    REQUIRE(empty.has_value());
    CHECK(empty->length() == 0);
}

TEST_CASE("solve_single_constraint agrees with clcs_single") {
    std::mt19937_64 rng(31);
    for (int it = 0; it < 80; ++it) {
        const Sequence s1 = random_string(rng, 8, 3);
        const Sequence s2 = random_string(rng, 8, 3);
        const Sequence sc = random_string(rng, 3, 3);
        const auto fpt = solve_single_constraint(s1, s2, sc, co_default(s1, s2),
                                                 exhaustive_config());
        const auto base = clcs_single(s1, s2, sc);
        REQUIRE(fpt.has_value() == base.has_value());
        if (fpt) CHECK(fpt->length() == base->length());
    }
}

TEST_CASE("solve_single_constraint agrees with the brute-force oracle") {
    std::mt19937_64 rng(37);
    for (int it = 0; it < 120; ++it) {
        Instance inst;
        inst.s1 = random_string(rng, 9, 3);
        inst.s2 = random_string(rng, 9, 3);
        const Sequence sc = random_string(rng, 3, 3);
        if (!sc.empty()) inst.cs.insert(sc);
        for (char c = 'a'; c < 'd'; ++c) inst.co.bounds[c] = 1 + static_cast<long>(rng() % 2);
        inst.co.fallback = static_cast<long>(inst.s1.size() + inst.s2.size());

        const auto oracle = brute_force_dclcs(inst);
        SolveStats stats;
        const auto fpt =
            solve_single_constraint(inst.s1, inst.s2, sc, inst.co, exhaustive_config(), &stats);
        REQUIRE(fpt.has_value() == oracle.has_value());
        if (fpt) {
            CHECK(fpt->length() == oracle->length());
            CHECK(verify_solution(inst, fpt->seq).pass());
            CHECK(check_certificates(*fpt, inst.s1, inst.s2));
        }
    }
}

TEST_CASE("special-case collapse") {
    std::mt19937_64 rng(41);
    for (int it = 0; it < 60; ++it) {
        const Sequence s1 = random_string(rng, 9, 3);
        const Sequence s2 = random_string(rng, 9, 3);
        const auto plain = solve_single_constraint(s1, s2, "", co_default(s1, s2),
                                                   exhaustive_config());
        REQUIRE(plain.has_value());
        CHECK(plain->length() == lcs(s1, s2).length());

        const auto rf = solve_single_constraint(s1, s2, "", OccurrenceConstraint::uniform(1),
                                                exhaustive_config());
        REQUIRE(rf.has_value());
        for (char c = 'a'; c < 'd'; ++c) CHECK(occ(c, rf->seq) <= 1);
    }
}

TEST_CASE("parallel and sequential trials give identical answers") {
    std::mt19937_64 rng(43);
    for (int it = 0; it < 30; ++it) {
        const Sequence s1 = random_string(rng, 8, 3);
        const Sequence s2 = random_string(rng, 8, 3);
        SolverConfig par = exhaustive_config();
        par.parallel_trials = true;
        SolverConfig seq = exhaustive_config();
        seq.parallel_trials = false;
        const auto a = solve_single_constraint(s1, s2, "", OccurrenceConstraint::uniform(1), par);
        const auto b = solve_single_constraint(s1, s2, "", OccurrenceConstraint::uniform(1), seq);
        REQUIRE(a.has_value() == b.has_value());
        if (a) CHECK(a->seq == b->seq);
    }
}
