#include "embedding.hpp"

namespace cws {

std::pair<bool, std::optional<EmbeddingMismatch>> verify_embedding(const Profile& profile,
                                                                   const SpatialElection& e,
                                                                   const Norm& norm) {
    if (e.num_candidates() != profile.num_candidates() ||
        e.num_voters() != profile.num_voters())
        throw DomainError("DimensionMismatch", "election and profile sizes differ");

    auto derived = derive_profile(e, norm);
    if (!derived.ties.empty())
        return {false, EmbeddingMismatch{derived.ties.front().voter}};
    for (int v = 0; v < profile.num_voters(); ++v) {
        if (derived.profile.ranking(v) != profile.ranking(v))
            return {false, EmbeddingMismatch{v}};
    }
    return {true, std::nullopt};
}

EmbeddingResult embed_candidate_simplex(const Profile& profile, const Norm& norm) {
    const int m = profile.num_candidates();
    const int n = profile.num_voters();

    SpatialElection e;
    e.dimension = m;
    e.candidates.reserve(m);
    for (int i = 0; i < m; ++i) {
        Point x(m, 0);
        x[i] = 2 * m;
        e.candidates.push_back(std::move(x));
    }
    e.voters.reserve(n);
    for (int j = 0; j < n; ++j) {
        Point y(m);
        for (int i = 0; i < m; ++i) y[i] = m - profile.rank_position(i, j);
        e.voters.push_back(std::move(y));
    }

    auto [ok, mismatch] = verify_embedding(profile, e, norm);
    if (!ok)
        throw DomainError("RoundtripFailed",
                          "candidate-simplex embedding failed verification at voter " +
                              std::to_string(mismatch->voter));
    return {std::move(e), EmbeddingConstruction::CandidateSimplex, std::nullopt};
}

EmbeddingResult embed_voter_simplex(const Profile& profile, const Norm& norm) {
    if (!norm.infinity && norm.p <= 1)
        throw DomainError("UnsupportedNorm",
                          "the voter-simplex construction needs the infinity norm or p > 1");
    const int m = profile.num_candidates();
    const int n = profile.num_voters();

    SpatialElection e;
    e.dimension = n;
    e.candidates.reserve(m);
    for (int i = 0; i < m; ++i) {
        Point x(n);
        for (int j = 0; j < n; ++j) x[j] = -profile.rank_position(i, j);
        e.candidates.push_back(std::move(x));
    }

    Rational b = std::max<Rational>(m, Rational(n) * m);
    constexpr int kDoublingBudget = 20;
    for (int attempt = 0; attempt <= kDoublingBudget; ++attempt) {
        e.voters.clear();
        e.voters.reserve(n);
        for (int j = 0; j < n; ++j) {
            Point y(n, 0);
            y[j] = b;
            e.voters.push_back(std::move(y));
        }
        auto [ok, mismatch] = verify_embedding(profile, e, norm);
        if (ok) return {std::move(e), EmbeddingConstruction::VoterSimplex, b};
        b *= 2;
    }
    throw DomainError("RoundtripFailed",
                      "voter-simplex embedding did not verify within the doubling budget");
}

} // namespace cws
