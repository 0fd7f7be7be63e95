#include "tournament.hpp"

#include <algorithm>
#include <sstream>

namespace cws {

bool Tournament::complete() const {
    for (int i = 0; i < m_; ++i)
        for (int j = i + 1; j < m_; ++j)
            if (beats(i, j) == beats(j, i)) return false;
    return true;
}

std::string Tournament::to_dot() const {
    std::ostringstream out;
    out << "digraph tournament {\n";
    for (int i = 0; i < m_; ++i) out << "  c" << i << ";\n";
    // Arc (j, i): the majority prefers i over j.
    for (int i = 0; i < m_; ++i)
        for (int j = 0; j < m_; ++j)
            if (beats(i, j)) out << "  c" << j << " -> c" << i << ";\n";
    out << "}\n";
    return out.str();
}

Tournament majority_digraph(const Profile& profile) {
    const int m = profile.num_candidates();
    const int n = profile.num_voters();
    Tournament t(m);
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            int prefer_i = 0;
            for (int v = 0; v < n; ++v)
                if (profile.prefers(v, i, j)) ++prefer_i;
            if (2 * prefer_i > n)
                t.set_beats(i, j);
            else if (2 * (n - prefer_i) > n)
                t.set_beats(j, i);
            // exact tie (even n): neither arc
        }
    }
    return t;
}

GreedyResult greedy_dominating_set(const Tournament& t) {
    if (!t.complete())
        throw DomainError("IncompleteTournament",
                          "greedy dominating set needs an arc on every pair");
    GreedyResult result;
    std::vector<int> remaining(t.size());
    for (int i = 0; i < t.size(); ++i) remaining[i] = i;

    while (!remaining.empty()) {
        // In-neighbours of i within the induced subtournament are the
        // remaining vertices i beats.
        int best = -1;
        int best_deg = -1;
        for (int i : remaining) {
            int deg = 0;
            for (int j : remaining)
                if (j != i && t.beats(i, j)) ++deg;
            if (deg > best_deg) {
                best_deg = deg;
                best = i;
            }
        }
        result.rounds.push_back({best, best_deg, static_cast<int>(remaining.size())});
        result.set.push_back(best);

        std::vector<int> next;
        next.reserve(remaining.size());
        for (int j : remaining)
            if (j != best && !t.beats(best, j)) next.push_back(j);
        remaining = std::move(next);
    }
    std::sort(result.set.begin(), result.set.end());
    return result;
}

bool is_dominating_set(const Tournament& t, const std::vector<int>& s) {
    std::vector<bool> in_set(t.size(), false);
    for (int i : s) in_set[i] = true;
    for (int j = 0; j < t.size(); ++j) {
        if (in_set[j]) continue;
        bool beaten = false;
        for (int i : s)
            if (t.beats(i, j)) {
                beaten = true;
                break;
            }
        if (!beaten) return false;
    }
    return true;
}

int ceil_log2(int m) {
    if (m <= 2) return 1;
    int k = 0;
    int v = m - 1;
    while (v > 0) {
        v >>= 1;
        ++k;
    }
    return k;
}

} // namespace cws
