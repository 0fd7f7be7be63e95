#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "embedding.hpp"
#include "harness.hpp"
#include "oracles.hpp"

using namespace cws;
using namespace cws::testing;

TEST_CASE("candidate simplex for one voter over two candidates") {
    Profile p(2, {{0, 1}});
    auto result = embed_candidate_simplex(p, Norm::inf());
    CHECK(result.election.dimension == 2);
    CHECK(result.election.candidates[0] == Point{4, 0});
    CHECK(result.election.candidates[1] == Point{0, 4});
    CHECK(result.election.voters[0] == Point{1, 0});
    CHECK(distance_power(result.election.voters[0], result.election.candidates[0], Norm::inf())
              .value == 3);
    CHECK(distance_power(result.election.voters[0], result.election.candidates[1], Norm::inf())
              .value == 4);
}

TEST_CASE("candidate simplex handles a single candidate") {
    Profile p(1, {{0}});
    auto result = embed_candidate_simplex(p, Norm::inf());
    CHECK(result.election.dimension == 1);
    CHECK(result.election.candidates[0] == Point{2});
}

TEST_CASE("candidate simplex reproduces the cycle profile under L1") {
    Profile p = cycle_profile();
    auto result = embed_candidate_simplex(p, Norm::lp(1));
    auto [ok, mismatch] = verify_embedding(p, result.election, Norm::lp(1));
    CHECK(ok);
}

TEST_CASE("voter simplex for one voter over two candidates") {
    Profile p(2, {{0, 1}});
    auto result = embed_voter_simplex(p, Norm::inf());
    CHECK(result.election.dimension == 1);
    REQUIRE(result.scale_b.has_value());
    CHECK(*result.scale_b == 2); // max(m, n*m) with m = 2, n = 1
    CHECK(result.election.candidates[0] == Point{-1});
    CHECK(result.election.candidates[1] == Point{-2});
    CHECK(distance_power(result.election.voters[0], result.election.candidates[0], Norm::inf())
              .value == 3);
}

TEST_CASE("voter simplex rejects p = 1") {
    try {
        embed_voter_simplex(cycle_profile(), Norm::lp(1));
        FAIL("expected UnsupportedNorm");
    } catch (const DomainError& e) {
        CHECK(e.code() == "UnsupportedNorm");
    }
}

TEST_CASE("voter simplex reproduces the cycle profile under p = 2") {
    Profile p = cycle_profile();
    auto result = embed_voter_simplex(p, Norm::lp(2));
    auto [ok, mismatch] = verify_embedding(p, result.election, Norm::lp(2));
    CHECK(ok);
}

TEST_CASE("verify_embedding flags a perturbed embedding") {
    Profile p(2, {{0, 1}});
    auto result = embed_candidate_simplex(p, Norm::inf());
    std::swap(result.election.candidates[0], result.election.candidates[1]);
    auto [ok, mismatch] = verify_embedding(p, result.election, Norm::inf());
    CHECK_FALSE(ok);
    REQUIRE(mismatch.has_value());
    CHECK(mismatch->voter == 0);
}

TEST_CASE("infinity-norm distance identities hold exactly") {
    Rng rng(64);
    for (int trial = 0; trial < 100; ++trial) {
        int m = 1 + static_cast<int>(rng.uniform(0, 7));
        int n = 1 + static_cast<int>(rng.uniform(0, 6));
        Rng gen(rng.next());
        Profile p = impartial_culture(m, n, gen);

        auto cand = embed_candidate_simplex(p, Norm::inf());
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < m; ++i)
                CHECK(distance_power(cand.election.voters[j], cand.election.candidates[i],
                                     Norm::inf())
                          .value == m + p.rank_position(i, j));

        auto voter = embed_voter_simplex(p, Norm::inf());
        REQUIRE(voter.scale_b.has_value());
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < m; ++i)
                CHECK(distance_power(voter.election.voters[j], voter.election.candidates[i],
                                     Norm::inf())
                          .value == *voter.scale_b + p.rank_position(i, j));
    }
}

TEST_CASE("roundtrip property over random strict profiles") {
    Rng rng(12345);
    const std::vector<Norm> candidate_norms = {Norm::inf(), Norm::lp(1),
                                               Norm::lp(Rational(3, 2)), Norm::lp(2), Norm::lp(3)};
    const std::vector<Norm> voter_norms = {Norm::inf(), Norm::lp(Rational(3, 2)), Norm::lp(2),
                                           Norm::lp(3)};
    for (int trial = 0; trial < 500; ++trial) {
        int m = 1 + static_cast<int>(rng.uniform(0, 7));
        int n = 1 + static_cast<int>(rng.uniform(0, 6));
        Rng gen(rng.next());
        Profile p = impartial_culture(m, n, gen);

        for (const auto& norm : candidate_norms) {
            auto result = embed_candidate_simplex(p, norm);
            CHECK(result.election.dimension == m);
            CHECK(verify_embedding(p, result.election, norm).first);
        }
        for (const auto& norm : voter_norms) {
            auto result = embed_voter_simplex(p, norm);
            CHECK(result.election.dimension == n);
            CHECK(verify_embedding(p, result.election, norm).first);
        }
    }
}

TEST_CASE("the candidate-simplex monotonicity inequality") {
    // (m+ri)^p - (m+rk)^p + (m-rk)^p - (m-ri)^p > 0 whenever ri > rk.
    for (int m = 2; m <= 8; ++m) {
        for (int ri = 1; ri <= m; ++ri) {
            for (int rk = 1; rk < ri; ++rk) {
                for (int p = 1; p <= 4; ++p) {
                    auto ipow = [](long base, int e) {
                        long r = 1;
                        while (e--) r *= base;
                        return r;
                    };
                    long lhs = ipow(m + ri, p) - ipow(m + rk, p) + ipow(m - rk, p) -
                               ipow(m - ri, p);
                    CHECK(lhs > 0);
                }
                double p = 1.5;
                double lhs = std::pow(m + ri, p) - std::pow(m + rk, p) +
                             std::pow(m - rk, p) - std::pow(m - ri, p);
                CHECK(lhs > 0.0);
            }
        }
    }
}
