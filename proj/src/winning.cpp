#include "winning.hpp"

#include <algorithm>
#include <string>

#include "tournament.hpp"

namespace cws {

std::optional<int> condorcet_winner(const Profile& profile) {
    const int m = profile.num_candidates();
    const int n = profile.num_voters();
    for (int i = 0; i < m; ++i) {
        bool wins_all = true;
        for (int j = 0; j < m && wins_all; ++j) {
            if (j == i) continue;
            int count = 0;
            for (int v = 0; v < n; ++v)
                if (profile.prefers(v, i, j)) ++count;
            if (2 * count <= n) wins_all = false;
        }
        if (wins_all) return i;
    }
    return std::nullopt;
}

namespace {

// best_rank[v] = min position over members of s in voter v's ranking; a voter
// prefers some member over challenger j iff best_rank[v] < pos[v][j].
std::vector<int> best_ranks(const Profile& profile, const std::vector<int>& s) {
    const int n = profile.num_voters();
    std::vector<int> best(n);
    for (int v = 0; v < n; ++v) {
        const auto& pos = profile.positions(v);
        int b = pos[s[0]];
        for (size_t k = 1; k < s.size(); ++k) b = std::min(b, pos[s[k]]);
        best[v] = b;
    }
    return best;
}

} // namespace

WinningSetCheck is_condorcet_winning_set(const Profile& profile, const std::vector<int>& s) {
    if (s.empty()) throw DomainError("EmptySet", "a winning set must be nonempty");
    const int m = profile.num_candidates();
    const int n = profile.num_voters();
    std::vector<bool> in_set(m, false);
    for (int i : s) {
        if (i < 0 || i >= m)
            throw DomainError("IndexOutOfRange", "candidate index " + std::to_string(i));
        in_set[i] = true;
    }

    const auto best = best_ranks(profile, s);
    WinningSetCertificate cert;
    cert.set.assign(s.begin(), s.end());
    std::sort(cert.set.begin(), cert.set.end());
    cert.set.erase(std::unique(cert.set.begin(), cert.set.end()), cert.set.end());
    cert.n = n;

    for (int j = 0; j < m; ++j) {
        if (in_set[j]) continue;
        int count = 0;
        for (int v = 0; v < n; ++v)
            if (best[v] < profile.positions(v)[j]) ++count;
        if (2 * count <= n) return {std::nullopt, j};
        cert.per_challenger[j] = count;
    }
    return {std::move(cert), -1};
}

namespace {

// Lexicographically next k-combination of {0..m-1}; false when exhausted.
bool next_combination(std::vector<int>& comb, int m) {
    const int k = static_cast<int>(comb.size());
    for (int i = k - 1; i >= 0; --i) {
        if (comb[i] < m - k + i) {
            ++comb[i];
            for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
            return true;
        }
    }
    return false;
}

} // namespace

DimensionResult condorcet_dimension(const Profile& profile, int k_max) {
    if (k_max < 1) throw DomainError("IndexOutOfRange", "k_max must be >= 1");
    const int m = profile.num_candidates();
    const int limit = std::min(k_max, m);
    for (int k = 1; k <= limit; ++k) {
        std::vector<int> comb(k);
        for (int i = 0; i < k; ++i) comb[i] = i;
        do {
            auto check = is_condorcet_winning_set(profile, comb);
            if (check.certificate)
                return {k, std::move(*check.certificate), k_max};
        } while (next_combination(comb, m));
    }
    throw DomainError("DimensionExceedsBound",
                      "no Condorcet winning set of size <= " + std::to_string(k_max));
}

int default_k_max(const Profile& profile) {
    return ceil_log2(profile.num_candidates());
}

} // namespace cws
