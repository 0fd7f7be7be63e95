#include "profile.hpp"

#include <string>

namespace cws {

Profile::Profile(int m, std::vector<std::vector<int>> rankings)
    : m_(m), rankings_(std::move(rankings)) {
    if (m_ < 1 || rankings_.empty())
        throw DomainError("EmptyProfile", "a profile needs m >= 1 and n >= 1");
    positions_.reserve(rankings_.size());
    for (size_t v = 0; v < rankings_.size(); ++v) {
        const auto& rk = rankings_[v];
        std::vector<int> pos(m_, 0);
        if (static_cast<int>(rk.size()) != m_)
            throw DomainError("MissingCandidate",
                              "voter " + std::to_string(v) + " ranks " +
                                  std::to_string(rk.size()) + " of " + std::to_string(m_) +
                                  " candidates");
        for (int r = 0; r < m_; ++r) {
            int c = rk[r];
            if (c < 0 || c >= m_)
                throw DomainError("MissingCandidate",
                                  "voter " + std::to_string(v) + " ranks unknown candidate " +
                                      std::to_string(c));
            if (pos[c] != 0)
                throw DomainError("DuplicateCandidateInRanking",
                                  "voter " + std::to_string(v) + " ranks candidate " +
                                      std::to_string(c) + " twice");
            pos[c] = r + 1;
        }
        positions_.push_back(std::move(pos));
    }
}

const std::vector<int>& Profile::ranking(int voter) const {
    check_voter(voter);
    return rankings_[voter];
}

bool Profile::prefers(int v, int a, int b) const {
    check_voter(v);
    check_candidate(a);
    check_candidate(b);
    return positions_[v][a] < positions_[v][b];
}

int Profile::rank_position(int i, int j) const {
    check_voter(j);
    check_candidate(i);
    return positions_[j][i];
}

const std::vector<int>& Profile::positions(int j) const {
    check_voter(j);
    return positions_[j];
}

void Profile::check_voter(int v) const {
    if (v < 0 || v >= num_voters())
        throw DomainError("IndexOutOfRange", "voter index " + std::to_string(v));
}

void Profile::check_candidate(int c) const {
    if (c < 0 || c >= m_)
        throw DomainError("IndexOutOfRange", "candidate index " + std::to_string(c));
}

ValidationResult validate_profile(int m, const std::vector<std::vector<int>>& rankings) {
    try {
        Profile p(m, rankings);
        return {};
    } catch (const DomainError& e) {
        return {false, e.code(), e.what()};
    }
}

} // namespace cws
