#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "dclcs/core.hpp"

namespace dclcs {

/// Effective occurrence bound C'_o(sigma) = min(C_o, occ in s1, occ in s2).
struct EffectiveOcc {
    std::map<Symbol, long> bounds;

    long at(Symbol c) const {
        auto it = bounds.find(c);
        return it == bounds.end() ? 0 : it->second;
    }

    long total() const;

    bool operator==(const EffectiveOcc&) const = default;
};

struct ColoredSymbol {
    Symbol symbol;
    int index;  // 1-based occurrence slot

    auto operator<=>(const ColoredSymbol&) const = default;
};

/// The colored alphabet: pairs (sigma, 1..C'_o(sigma)), sorted.
struct ColoredAlphabet {
    std::vector<ColoredSymbol> members;

    std::size_t size() const { return members.size(); }

    bool operator==(const ColoredAlphabet&) const = default;
};

ColoredAlphabet build_colored_alphabet(const EffectiveOcc& c_eff);

/// One hash function: labels[i] in 1..k is the label of the i-th member of
/// the colored alphabet it was generated for.
struct HashAssignment {
    std::vector<int> labels;
    int k = 0;
};

/// Per-symbol label sets, stored as bitmasks (bit t <=> label t+1).
struct LabelFunction {
    std::array<std::uint32_t, 256> sets{};

    std::uint32_t at(Symbol c) const { return sets[static_cast<unsigned char>(c)]; }
    void add(Symbol c, int label) { sets[static_cast<unsigned char>(c)] |= 1u << (label - 1); }

    bool operator==(const LabelFunction&) const = default;
};

LabelFunction label_function(const HashAssignment& f, const ColoredAlphabet& sigma_tilde);

enum class FamilyKind { exhaustive, randomized };

struct FamilySpec {
    FamilyKind kind = FamilyKind::randomized;
    double delta = 1e-3;           // randomized failure probability
    std::uint64_t seed = 0;        // randomized only
    std::uint64_t exhaustive_cap = 1'000'000;
};

/// Indexable stream of hash assignments over a colored alphabet.
///
/// Exhaustive kind: all k^|sigma_tilde| total maps in mixed-radix order
/// (member 0 varies fastest), a trivially perfect family; refuses when the
/// count exceeds spec.exhaustive_cap.
/// Randomized kind: exactly ceil(e^k * ln(1/delta)) independent uniform
/// assignments, reproducible per (seed, k, alphabet).
class HashFamily {
public:
    HashFamily(ColoredAlphabet sigma_tilde, int k, FamilySpec spec);

    std::uint64_t size() const { return size_; }
    HashAssignment assignment(std::uint64_t t) const;

    static std::uint64_t randomized_trial_count(int k, double delta);

private:
    ColoredAlphabet alpha_;
    int k_;
    FamilySpec spec_;
    std::uint64_t size_;
};

/// Decides L-colorfulness of s by bipartite matching between per-symbol
/// occurrence slots and the labels of L.
bool is_colorful(const Sequence& s, const LabelFunction& l, std::uint32_t label_mask);

}  // namespace dclcs
