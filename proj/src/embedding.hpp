#ifndef CWS_EMBEDDING_HPP
#define CWS_EMBEDDING_HPP

#include <optional>

#include "spatial.hpp"

namespace cws {

enum class EmbeddingConstruction { CandidateSimplex, VoterSimplex };

struct EmbeddingResult {
    SpatialElection election;
    EmbeddingConstruction construction;
    std::optional<Rational> scale_b; // VoterSimplex only
};

// D = m. Candidate i sits at 2m * e_i; voter j at (m - rho(1,j), ...,
// m - rho(m,j)) with 1-based rank positions rho. Works for the infinity norm
// and every p >= 1; the result is roundtrip-verified before returning.
EmbeddingResult embed_candidate_simplex(const Profile& profile, const Norm& norm);

// D = n. Voter j sits at B * e_j; candidate i at (-rho(i,1), ..., -rho(i,n)).
// B starts at max(m, n*m) and doubles until the roundtrip verifies (budget 20
// doublings). Requires the infinity norm or p > 1; p = 1 is rejected with
// DomainError("UnsupportedNorm").
EmbeddingResult embed_voter_simplex(const Profile& profile, const Norm& norm);

struct EmbeddingMismatch {
    int voter;
};

// True iff deriving from the election reproduces the profile exactly with no
// distance ties; otherwise reports the first mismatching voter.
std::pair<bool, std::optional<EmbeddingMismatch>> verify_embedding(const Profile& profile,
                                                                   const SpatialElection& e,
                                                                   const Norm& norm);

} // namespace cws

#endif
