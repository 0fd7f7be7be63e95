#ifndef CWS_PROFILE_HPP
#define CWS_PROFILE_HPP

#include <string>
#include <vector>

#include "errors.hpp"

namespace cws {

/// An election given as ordinal preferences: n voters, each with a strict
/// complete ranking over m candidates, stored best-to-worst. The inverse
/// (candidate -> position) table is kept alongside so preference queries are
/// constant-time. Immutable after construction.
class Profile {
public:
    // Validates on construction; throws DomainError on malformed rankings
    // (EmptyProfile, DuplicateCandidateInRanking, MissingCandidate).
    Profile(int m, std::vector<std::vector<int>> rankings);

    int num_candidates() const { return m_; }
    int num_voters() const { return static_cast<int>(rankings_.size()); }

    const std::vector<std::vector<int>>& rankings() const { return rankings_; }
    const std::vector<int>& ranking(int voter) const;

    // True iff voter v ranks candidate a above candidate b. Requires a != b.
    bool prefers(int v, int a, int b) const;

    // 1-based position of candidate i in voter j's ranking.
    int rank_position(int i, int j) const;

    // Row of 1-based positions for voter j, indexed by candidate.
    const std::vector<int>& positions(int j) const;

    bool operator==(const Profile& other) const {
        return m_ == other.m_ && rankings_ == other.rankings_;
    }

private:
    void check_voter(int v) const;
    void check_candidate(int c) const;

    int m_;
    std::vector<std::vector<int>> rankings_;
    std::vector<std::vector<int>> positions_; // positions_[v][c] in [1, m]
};

struct ValidationResult {
    bool ok = true;
    std::string code;   // DuplicateCandidateInRanking | MissingCandidate | EmptyProfile
    std::string detail; // names the first offending voter
};

// Non-throwing validation of raw rankings.
ValidationResult validate_profile(int m, const std::vector<std::vector<int>>& rankings);

} // namespace cws

#endif
