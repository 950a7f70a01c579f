#include "dclcs/color_coding.hpp"

#include <bit>
#include <cmath>
#include <map>
#include <utility>

namespace dclcs {

long EffectiveOcc::total() const {
    long sum = 0;
    for (const auto& [_, v] : bounds) sum += v;
    return sum;
}

ColoredAlphabet build_colored_alphabet(const EffectiveOcc& c_eff) {
    ColoredAlphabet alpha;
    for (const auto& [c, bound] : c_eff.bounds) {
        for (int i = 1; i <= bound; ++i) alpha.members.push_back({c, i});
    }
    return alpha;
}

LabelFunction label_function(const HashAssignment& f, const ColoredAlphabet& sigma_tilde) {
    LabelFunction l;
    for (std::size_t i = 0; i < sigma_tilde.members.size(); ++i)
        l.add(sigma_tilde.members[i].symbol, f.labels[i]);
    return l;
}

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

std::uint64_t HashFamily::randomized_trial_count(int k, double delta) {
    return static_cast<std::uint64_t>(std::ceil(std::exp(static_cast<double>(k)) *
                                                std::log(1.0 / delta)));
}

HashFamily::HashFamily(ColoredAlphabet sigma_tilde, int k, FamilySpec spec)
    : alpha_(std::move(sigma_tilde)), k_(k), spec_(spec), size_(0) {
    if (k < 1) throw InputError("hash family requires k >= 1");
    if (spec.kind == FamilyKind::exhaustive) {
        std::uint64_t total = 1;
        for (std::size_t i = 0; i < alpha_.size(); ++i) {
            total *= static_cast<std::uint64_t>(k);
            if (total > spec.exhaustive_cap)
                throw SizingError("exhaustive family of k^|sigma_tilde| = " + std::to_string(k) +
                                  "^" + std::to_string(alpha_.size()) +
                                  " functions exceeds the enumeration cap of " +
                                  std::to_string(spec.exhaustive_cap));
        }
        size_ = total;
    } else {
        if (!(spec.delta > 0.0 && spec.delta < 1.0))
            throw InputError("delta must lie in (0,1)");
        size_ = randomized_trial_count(k, spec.delta);
    }
}

HashAssignment HashFamily::assignment(std::uint64_t t) const {
    HashAssignment f;
    f.k = k_;
    f.labels.resize(alpha_.size());
    if (spec_.kind == FamilyKind::exhaustive) {
        // Mixed-radix counter over the sorted colored alphabet, member 0
        // least significant.
        std::uint64_t rest = t;
        for (std::size_t i = 0; i < alpha_.size(); ++i) {
            f.labels[i] = 1 + static_cast<int>(rest % static_cast<std::uint64_t>(k_));
            rest /= static_cast<std::uint64_t>(k_);
        }
    } else {
        std::uint64_t state = spec_.seed ^ (0xd1b54a32d192ed03ULL * (t + 1));
        state ^= static_cast<std::uint64_t>(k_) << 32;
        for (std::size_t i = 0; i < alpha_.size(); ++i)
            f.labels[i] = 1 + static_cast<int>(splitmix64(state) % static_cast<std::uint64_t>(k_));
    }
    return f;
}

bool is_colorful(const Sequence& s, const LabelFunction& l, std::uint32_t label_mask) {
    // Occurrence slots per distinct symbol.
    std::map<Symbol, int> counts;
    for (Symbol c : s) ++counts[c];

    std::vector<std::uint32_t> slot_adj;
    for (const auto& [c, cnt] : counts) {
        const std::uint32_t adj = l.at(c) & label_mask;
        if (std::popcount(adj) < cnt) return false;
        for (int t = 0; t < cnt; ++t) slot_adj.push_back(adj);
    }
    const int labels = std::popcount(label_mask);
    if (static_cast<int>(slot_adj.size()) > labels) return false;

    // Kuhn's augmenting paths; label_of[bit] = slot currently using that label.
    std::array<int, 32> label_of;
    label_of.fill(-1);
    std::vector<char> visited;
    auto augment = [&](auto&& self, int slot) -> bool {
        for (std::uint32_t m = slot_adj[slot]; m != 0; m &= m - 1) {
            const int bit = std::countr_zero(m);
            if (visited[bit]) continue;
            visited[bit] = 1;
            if (label_of[bit] < 0 || self(self, label_of[bit])) {
                label_of[bit] = slot;
                return true;
            }
        }
        return false;
    };
    for (std::size_t slot = 0; slot < slot_adj.size(); ++slot) {
        visited.assign(32, 0);
        if (!augment(augment, static_cast<int>(slot))) return false;
    }
    return true;
}

}  // namespace dclcs
