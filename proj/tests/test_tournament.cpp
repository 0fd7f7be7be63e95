#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "harness.hpp"
#include "oracles.hpp"
#include "tournament.hpp"
#include "winning.hpp"

using namespace cws;
using namespace cws::testing;

TEST_CASE("majority digraph of the cycle profile is the 3-cycle") {
    Tournament t = majority_digraph(cycle_profile());
    // Arcs (p2,p1), (p3,p2), (p1,p3): beats(0,1), beats(1,2), beats(2,0).
    CHECK(t.beats(0, 1));
    CHECK(t.beats(1, 2));
    CHECK(t.beats(2, 0));
    CHECK_FALSE(t.beats(1, 0));
    CHECK_FALSE(t.beats(2, 1));
    CHECK_FALSE(t.beats(0, 2));
    CHECK(t.complete());
}

TEST_CASE("single candidate gives an empty digraph") {
    Tournament t = majority_digraph(Profile(1, {{0}}));
    CHECK(t.size() == 1);
    CHECK(t.complete());
}

TEST_CASE("1-D proximity profile: only the far candidate is beaten") {
    // Voters at 1, 2, 3; candidates at 0 and 5/2. Brute-force pairwise count:
    // voters 2 and 3 are closer to 5/2, so candidate 1 beats candidate 0.
    SpatialElection e;
    e.dimension = 1;
    e.voters = {{1}, {2}, {3}};
    e.candidates = {{0}, {Rational(5, 2)}};
    auto derived = derive_profile(e, Norm::lp(2));
    CHECK(derived.ties.empty());
    CHECK(oracle_pairwise_count(derived.profile, 1, 0) == 2);
    Tournament t = majority_digraph(derived.profile);
    CHECK(t.beats(1, 0));
    CHECK_FALSE(t.beats(0, 1));
}

TEST_CASE("even voter count can leave tied pairs with no arc") {
    Profile p(2, {{0, 1}, {1, 0}});
    Tournament t = majority_digraph(p);
    CHECK_FALSE(t.beats(0, 1));
    CHECK_FALSE(t.beats(1, 0));
    CHECK_FALSE(t.complete());
    CHECK_THROWS_AS(greedy_dominating_set(t), DomainError);
}

TEST_CASE("greedy on the 3-cycle picks {0, 2} under the lowest-index tie-break") {
    Tournament t = majority_digraph(cycle_profile());
    auto g = greedy_dominating_set(t);
    CHECK(g.set == std::vector<int>{0, 2});
    CHECK(is_dominating_set(t, g.set));
    CHECK(oracle_is_dominating(t, g.set));
}

TEST_CASE("transitive tournament is dominated by its source alone") {
    Tournament t(5);
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) t.set_beats(i, j);
    auto g = greedy_dominating_set(t);
    CHECK(g.set == std::vector<int>{0});
}

TEST_CASE("is_dominating_set edge cases") {
    Tournament t = majority_digraph(cycle_profile());
    CHECK(is_dominating_set(t, {0, 2}));
    CHECK_FALSE(is_dominating_set(t, {0})); // 2 beats 0, nobody in the set beats 2
    CHECK(is_dominating_set(t, {0, 1, 2}));
}

TEST_CASE("dot export lists one arc per pair") {
    Tournament t = majority_digraph(cycle_profile());
    std::string dot = t.to_dot();
    // beats(0, 1) is the arc (1, 0): the majority prefers 0 over 1.
    CHECK(dot.find("c1 -> c0") != std::string::npos);
    CHECK(dot.find("c2 -> c1") != std::string::npos);
    CHECK(dot.find("c0 -> c2") != std::string::npos);
    CHECK(dot.find("c0 -> c1") == std::string::npos);
}

TEST_CASE("ceil_log2") {
    CHECK(ceil_log2(1) == 1);
    CHECK(ceil_log2(2) == 1);
    CHECK(ceil_log2(3) == 2);
    CHECK(ceil_log2(4) == 2);
    CHECK(ceil_log2(5) == 3);
    CHECK(ceil_log2(16) == 4);
    CHECK(ceil_log2(17) == 5);
    CHECK(ceil_log2(32) == 5);
}

TEST_CASE("greedy bound, domination, and halving over random profiles") {
    Rng rng(2024);
    for (int trial = 0; trial < 1000; ++trial) {
        int m = 2 + static_cast<int>(rng.uniform(0, 30));
        int n = 1 + 2 * static_cast<int>(rng.uniform(0, 7)); // odd
        Rng gen(rng.next());
        Profile p = impartial_culture(m, n, gen);
        Tournament t = majority_digraph(p);
        REQUIRE(t.complete());

        auto g = greedy_dominating_set(t);
        CHECK(static_cast<int>(g.set.size()) <= ceil_log2(m));
        CHECK(oracle_is_dominating(t, g.set));
        for (const auto& round : g.rounds)
            CHECK(2 * round.in_degree >= round.remaining_before - 1);

        // Thm 1 chain: a dominating set of the majority digraph wins.
        auto check = is_condorcet_winning_set(p, g.set);
        CHECK(check.certificate.has_value());
    }
}
