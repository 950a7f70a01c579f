#include "dclcs/baseline_dp.hpp"

#include <algorithm>
#include <vector>

namespace dclcs {

Solution lcs(const Sequence& s1, const Sequence& s2) {
    const int n1 = static_cast<int>(s1.size());
    const int n2 = static_cast<int>(s2.size());
    std::vector<std::vector<int>> dp(n1 + 1, std::vector<int>(n2 + 1, 0));
    for (int i = 1; i <= n1; ++i) {
        for (int j = 1; j <= n2; ++j) {
            dp[i][j] = std::max(dp[i - 1][j], dp[i][j - 1]);
            if (s1[i - 1] == s2[j - 1]) dp[i][j] = std::max(dp[i][j], dp[i - 1][j - 1] + 1);
        }
    }
    Solution sol;
    int i = n1, j = n2;
    while (i > 0 && j > 0) {
        // Tie order: diagonal match, left, up.
        if (s1[i - 1] == s2[j - 1] && dp[i][j] == dp[i - 1][j - 1] + 1) {
            sol.seq.push_back(s1[i - 1]);
            sol.pos1.push_back(i - 1);
            sol.pos2.push_back(j - 1);
            --i;
            --j;
        } else if (dp[i][j] == dp[i][j - 1]) {
            --j;
        } else {
            --i;
        }
    }
    std::reverse(sol.seq.begin(), sol.seq.end());
    std::reverse(sol.pos1.begin(), sol.pos1.end());
    std::reverse(sol.pos2.begin(), sol.pos2.end());
    return sol;
}

std::optional<Solution> clcs_single(const Sequence& s1, const Sequence& s2, const Sequence& sc) {
    const int n1 = static_cast<int>(s1.size());
    const int n2 = static_cast<int>(s2.size());
    const int nc = static_cast<int>(sc.size());
    constexpr int kUndef = -1;
    // dp[i][j][h]: longest common subsequence of the prefixes covering
    // sc[1..h], or kUndef when no such subsequence exists.
    std::vector<int> dp(static_cast<std::size_t>(n1 + 1) * (n2 + 1) * (nc + 1), kUndef);
    auto at = [&](int i, int j, int h) -> int& {
        return dp[(static_cast<std::size_t>(i) * (n2 + 1) + j) * (nc + 1) + h];
    };
    for (int i = 0; i <= n1; ++i)
        for (int j = 0; j <= n2; ++j) at(i, j, 0) = 0;
    for (int i = 1; i <= n1; ++i) {
        for (int j = 1; j <= n2; ++j) {
            for (int h = 0; h <= nc; ++h) {
                int best = std::max(at(i - 1, j, h), at(i, j - 1, h));
                if (s1[i - 1] == s2[j - 1]) {
                    if (at(i - 1, j - 1, h) != kUndef)
                        best = std::max(best, at(i - 1, j - 1, h) + 1);
                    if (h > 0 && s1[i - 1] == sc[h - 1] && at(i - 1, j - 1, h - 1) != kUndef)
                        best = std::max(best, at(i - 1, j - 1, h - 1) + 1);
                }
                at(i, j, h) = std::max(best, at(i, j, h));
            }
        }
    }
    if (at(n1, n2, nc) == kUndef) return std::nullopt;

    Solution sol;
    int i = n1, j = n2, h = nc;
    while (i > 0 && j > 0 && !(at(i, j, h) == 0 && h == 0)) {
        const int v = at(i, j, h);
        if (s1[i - 1] == s2[j - 1] && h > 0 && s1[i - 1] == sc[h - 1] &&
            at(i - 1, j - 1, h - 1) != kUndef && at(i - 1, j - 1, h - 1) + 1 == v) {
            sol.seq.push_back(s1[i - 1]);
            sol.pos1.push_back(i - 1);
            sol.pos2.push_back(j - 1);
            --i;
            --j;
            --h;
        } else if (s1[i - 1] == s2[j - 1] && at(i - 1, j - 1, h) != kUndef &&
                   at(i - 1, j - 1, h) + 1 == v) {
            sol.seq.push_back(s1[i - 1]);
            sol.pos1.push_back(i - 1);
            sol.pos2.push_back(j - 1);
            --i;
            --j;
        } else if (at(i, j - 1, h) == v) {
            --j;
        } else {
            --i;
        }
    }
    std::reverse(sol.seq.begin(), sol.seq.end());
    std::reverse(sol.pos1.begin(), sol.pos1.end());
    std::reverse(sol.pos2.begin(), sol.pos2.end());
    return sol;
}

}  // namespace dclcs
