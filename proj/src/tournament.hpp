#ifndef CWS_TOURNAMENT_HPP
#define CWS_TOURNAMENT_HPP

#include <string>
#include <vector>

#include "profile.hpp"

namespace cws {

/// Majority digraph on candidates. beats(i, j) holds when a strict majority
/// of voters prefers i over j, i.e. the arc (j, i) is present. With an odd
/// number of voters every pair carries exactly one arc (a tournament); with
/// an even count a tied pair carries none.
class Tournament {
public:
    explicit Tournament(int m) : m_(m), beats_(static_cast<size_t>(m) * m, 0) {}

    int size() const { return m_; }
    bool beats(int i, int j) const { return beats_[static_cast<size_t>(i) * m_ + j] != 0; }
    void set_beats(int i, int j) { beats_[static_cast<size_t>(i) * m_ + j] = 1; }

    // Every pair {i, j} has exactly one arc.
    bool complete() const;

    std::string to_dot() const;

private:
    int m_;
    std::vector<unsigned char> beats_;
};

Tournament majority_digraph(const Profile& profile);

struct GreedyRound {
    int chosen = -1;
    int in_degree = 0;        // in-neighbours of chosen among the remaining vertices
    int remaining_before = 0; // vertices alive when the round started
};

struct GreedyResult {
    std::vector<int> set;            // ascending candidate ids
    std::vector<GreedyRound> rounds; // one per selected vertex
};

// Repeatedly selects the remaining vertex with the most in-neighbours
// (lowest index on ties), removing it together with its in-neighbours.
// The result has size <= ceil(log2 m) and dominates the tournament.
// Throws DomainError("IncompleteTournament") if some pair has no arc.
GreedyResult greedy_dominating_set(const Tournament& t);

// True iff every vertex outside s is beaten by some member of s.
bool is_dominating_set(const Tournament& t, const std::vector<int>& s);

// ceil(log2 m), with m = 1 treated as 1.
int ceil_log2(int m);

} // namespace cws

#endif
