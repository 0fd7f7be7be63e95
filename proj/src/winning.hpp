#ifndef CWS_WINNING_HPP
#define CWS_WINNING_HPP

#include <map>
#include <optional>
#include <vector>

#include "profile.hpp"

namespace cws {

/// Proof that a candidate set wins: for every challenger outside the set the
/// number of voters preferring some (voter-dependent) member over the
/// challenger, each strictly above n/2.
struct WinningSetCertificate {
    std::vector<int> set;             // ascending
    std::map<int, int> per_challenger; // challenger -> voter count, 2*count > n
    int n = 0;
};

struct WinningSetCheck {
    std::optional<WinningSetCertificate> certificate;
    int first_failing_challenger = -1; // set when certificate is absent
};

struct DimensionResult {
    int dimension = 0;
    WinningSetCertificate witness;
    int k_searched = 0;
};

// The candidate beating every other by strict majority, if one exists.
std::optional<int> condorcet_winner(const Profile& profile);

// Certificate if s is a Condorcet winning set, otherwise the first failing
// challenger. Throws DomainError("EmptySet") on an empty set.
WinningSetCheck is_condorcet_winning_set(const Profile& profile, const std::vector<int>& s);

// Exhaustive search over subsets by increasing cardinality, lexicographic
// within each cardinality; returns the first winning set found.
// Throws DomainError("DimensionExceedsBound") if no set of size <= k_max wins.
DimensionResult condorcet_dimension(const Profile& profile, int k_max);

// Default search bound: the ceil(log2 m) guarantee for odd voter counts.
int default_k_max(const Profile& profile);

} // namespace cws

#endif
