#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "oracles.hpp"
#include "spatial.hpp"
#include "winning.hpp"

using namespace cws;
using namespace cws::testing;

namespace {

const std::vector<std::vector<int>> kCycleRankings = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};

} // namespace

TEST_CASE("distance powers on the 3-4-5 triangle") {
    Point a{0, 0};
    Point b{3, 4};
    CHECK(distance_power(a, b, Norm::lp(1)).value == 7);
    CHECK(distance_power(a, b, Norm::inf()).value == 4);
    CHECK(distance_power(a, b, Norm::lp(2)).value == 25);
}

TEST_CASE("distance power symmetry, identity, and dimension mismatch") {
    Rng rng(9);
    for (int trial = 0; trial < 100; ++trial) {
        Point a{Rational(rng.uniform(-50, 50), 7), Rational(rng.uniform(-50, 50), 3)};
        Point b{Rational(rng.uniform(-50, 50), 7), Rational(rng.uniform(-50, 50), 3)};
        for (const Norm& norm : {Norm::lp(1), Norm::lp(2), Norm::lp(3), Norm::inf()}) {
            CHECK(distance_power(a, b, norm).value == distance_power(b, a, norm).value);
            CHECK(distance_power(a, a, norm).value == 0);
        }
    }
    CHECK_THROWS_AS(distance_power(Point{0}, Point{0, 0}, Norm::lp(1)), DomainError);
}

TEST_CASE("non-integer p falls back to floats") {
    auto d = distance_power(Point{0, 0}, Point{3, 4}, Norm::lp(Rational(3, 2)));
    CHECK_FALSE(d.exact);
    CHECK(d.approx == doctest::Approx(std::pow(3.0, 1.5) + 8.0));
}

TEST_CASE("norm wire format round-trips") {
    CHECK(Norm::inf().to_string() == "inf");
    CHECK(Norm::lp(2).to_string() == "p:2");
    CHECK(Norm::lp(Rational(3, 2)).to_string() == "p:3/2");
    CHECK(Norm::from_string("inf").infinity);
    CHECK(Norm::from_string("p:3/2").p == Rational(3, 2));
    CHECK(Norm::from_string("1.5").p == Rational(3, 2));
    CHECK(Norm::from_string("2").p == 2);
    CHECK_THROWS_AS(Norm::lp(Rational(1, 2)), DomainError);
}

TEST_CASE("lemma4 instance matches its fixed coordinates") {
    SpatialElection e = lemma4_instance();
    CHECK(e.dimension == 2);
    REQUIRE(e.num_voters() == 3);
    REQUIRE(e.num_candidates() == 3);
    CHECK(e.voters[0] == Point{9, 0});
    CHECK(e.voters[1] == Point{0, 9});
    CHECK(e.voters[2] == Point{-9, 0});
    CHECK(e.candidates[0] == Point{1, -1});
    CHECK(e.candidates[1] == Point{8, 10});
    CHECK(e.candidates[2] == Point{-9, 9});
}

TEST_CASE("lemma4 rankings for p in {1, 2, 3, inf}") {
    SpatialElection e = lemma4_instance();
    for (const Norm& norm : {Norm::lp(1), Norm::lp(2), Norm::lp(3), Norm::inf()}) {
        auto derived = derive_profile(e, norm);
        CHECK(derived.profile.rankings() == kCycleRankings);
        CHECK_FALSE(condorcet_winner(derived.profile).has_value());
    }
    // At p = 1 voter 1 is Manhattan-equidistant (distance 9) from candidates
    // 1 and 2; the index tie-break reproduces the published ranking.
    auto l1 = derive_profile(e, Norm::lp(1));
    REQUIRE(l1.ties.size() == 1);
    CHECK(l1.ties[0].voter == 1);
    CHECK(l1.ties[0].closer_candidate == 1);
    CHECK(l1.ties[0].other_candidate == 2);
    // Strict for every other tested norm.
    CHECK(derive_profile(e, Norm::lp(2)).ties.empty());
    CHECK(derive_profile(e, Norm::lp(3)).ties.empty());
    CHECK(derive_profile(e, Norm::inf()).ties.empty());
}

TEST_CASE("lemma4 profile has Condorcet dimension 2") {
    auto derived = derive_profile(lemma4_instance(), Norm::lp(2));
    CHECK(oracle_dimension(derived.profile) == 2);
    CHECK(condorcet_dimension(derived.profile, 2).dimension == 2);
}

TEST_CASE("symmetric tie is reported and broken by index") {
    SpatialElection e;
    e.dimension = 2;
    e.voters = {{0, 0}};
    e.candidates = {{1, 0}, {0, 1}};
    auto derived = derive_profile(e, Norm::lp(2));
    REQUIRE(derived.ties.size() == 1);
    CHECK(derived.ties[0].voter == 0);
    CHECK(derived.profile.ranking(0) == std::vector<int>{0, 1});
}

TEST_CASE("random_spatial is deterministic per seed and tie-free") {
    auto a = random_spatial(5, 3, 2, 100, 7, Norm::lp(1));
    auto b = random_spatial(5, 3, 2, 100, 7, Norm::lp(1));
    CHECK(a.voters == b.voters);
    CHECK(a.candidates == b.candidates);
    auto c = random_spatial(5, 3, 2, 100, 8, Norm::lp(1));
    CHECK(a.candidates != c.candidates);

    Rng rng(123);
    for (int trial = 0; trial < 1000; ++trial) {
        auto e = random_spatial(2 + static_cast<int>(rng.uniform(0, 6)),
                                1 + 2 * static_cast<int>(rng.uniform(0, 3)), 2, 100,
                                rng.next(), Norm::lp(1));
        CHECK(derive_profile(e, Norm::lp(1)).ties.empty());
    }
}

TEST_CASE("one-point election generates") {
    auto e = random_spatial(1, 1, 1, 10, 3, Norm::lp(1));
    CHECK(e.num_voters() == 1);
    CHECK(e.num_candidates() == 1);
    CHECK(derive_profile(e, Norm::lp(1)).profile.num_candidates() == 1);
}

TEST_CASE("translate_scale identity and profile invariance") {
    SpatialElection e = lemma4_instance();
    auto same = translate_scale(e, {0, 0}, 1);
    CHECK(same.voters == e.voters);
    CHECK(same.candidates == e.candidates);

    auto shifted = translate_scale(e, {1, 1}, 1);
    CHECK(derive_profile(shifted, Norm::lp(1)).profile.rankings() ==
          derive_profile(e, Norm::lp(1)).profile.rankings());

    CHECK_THROWS_AS(translate_scale(e, {0, 0}, 0), DomainError);
    CHECK_THROWS_AS(translate_scale(e, {0, 0}, -2), DomainError);
}

TEST_CASE("derived rankings are invariant under similarity transforms") {
    Rng rng(456);
    for (int trial = 0; trial < 1000; ++trial) {
        auto e = random_spatial(2 + static_cast<int>(rng.uniform(0, 5)),
                                1 + 2 * static_cast<int>(rng.uniform(0, 3)), 2, 50, rng.next(),
                                Norm::lp(1));
        Point shift{Rational(rng.uniform(-20, 20), 3), Rational(rng.uniform(-20, 20), 5)};
        Rational scale(1 + rng.uniform(0, 8), 3);
        auto mapped = translate_scale(e, shift, scale);
        for (const Norm& norm : {Norm::lp(1), Norm::lp(2), Norm::inf()}) {
            CHECK(derive_profile(mapped, norm).profile.rankings() ==
                  derive_profile(e, norm).profile.rankings());
        }
    }
}

TEST_CASE("1-D median voter theorem on tie-free instances") {
    Rng rng(789);
    for (int trial = 0; trial < 1000; ++trial) {
        int m = 2 + static_cast<int>(rng.uniform(0, 8));
        int n = 1 + 2 * static_cast<int>(rng.uniform(0, 5));
        auto e = random_spatial(m, n, 1, 100, rng.next(), Norm::lp(1));
        auto derived = derive_profile(e, Norm::lp(1));
        REQUIRE(derived.ties.empty());

        std::vector<Rational> xs;
        for (const auto& v : e.voters) xs.push_back(v[0]);
        std::sort(xs.begin(), xs.end());
        Rational median = xs[xs.size() / 2];
        int nearest = 0;
        for (int c = 1; c < m; ++c) {
            Rational dc = e.candidates[c][0] - median;
            if (dc < 0) dc = -dc;
            Rational db = e.candidates[nearest][0] - median;
            if (db < 0) db = -db;
            if (dc < db) nearest = c;
        }
        auto w = condorcet_winner(derived.profile);
        REQUIRE(w.has_value());
        CHECK(*w == nearest);
    }
}
