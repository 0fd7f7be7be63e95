#include "planar.hpp"

#include <algorithm>

namespace cws {

namespace {

void require_planar_odd(const SpatialElection& e) {
    if (e.dimension != 2)
        throw DomainError("WrongDimension", "this operation needs D = 2");
    if (e.num_voters() % 2 == 0)
        throw DomainError("EvenVoterCount", "this operation needs an odd voter count");
}

Rational median_of(std::vector<Rational> values) {
    std::sort(values.begin(), values.end());
    return values[values.size() / 2];
}

// Half-open quadrants after shifting medians to the origin:
// Q1 = {x >= 0, y >= 0}, Q2 = {x < 0, y >= 0}, Q3 = {x < 0, y < 0},
// Q4 = {x >= 0, y < 0}.
int quadrant_of(const Rational& x, const Rational& y) {
    if (x >= 0 && y >= 0) return 0;
    if (x < 0 && y >= 0) return 1;
    if (x < 0 && y < 0) return 2;
    return 3;
}

Rational l1_magnitude(const Rational& x, const Rational& y) {
    Rational ax = x >= 0 ? x : Rational(-x);
    Rational ay = y >= 0 ? y : Rational(-y);
    return ax + ay;
}

} // namespace

std::pair<Rational, Rational> coordinate_medians(const SpatialElection& e) {
    require_planar_odd(e);
    std::vector<Rational> xs, ys;
    xs.reserve(e.voters.size());
    ys.reserve(e.voters.size());
    for (const auto& v : e.voters) {
        xs.push_back(v[0]);
        ys.push_back(v[1]);
    }
    return {median_of(std::move(xs)), median_of(std::move(ys))};
}

QuadrantSelection quadrant_candidates(const SpatialElection& e) {
    auto [mx, my] = coordinate_medians(e);
    QuadrantSelection sel;
    sel.median_x = mx;
    sel.median_y = my;
    sel.quadrant.resize(e.num_candidates());

    std::array<Rational, 4> best_dist;
    for (int c = 0; c < e.num_candidates(); ++c) {
        Rational x = e.candidates[c][0] - mx;
        Rational y = e.candidates[c][1] - my;
        int q = quadrant_of(x, y);
        sel.quadrant[c] = q;
        Rational dist = l1_magnitude(x, y);
        if (!sel.closest[q] || dist < best_dist[q]) {
            sel.closest[q] = c;
            best_dist[q] = dist;
        }
        // equal distance keeps the earlier (lower-index) candidate
    }
    return sel;
}

SpatialElection shear_to_l1(const SpatialElection& e) {
    if (e.dimension != 2)
        throw DomainError("WrongDimension", "shear_to_l1 needs D = 2");
    auto map_point = [](const Point& p) { return Point{p[0] + p[1], p[1] - p[0]}; };
    SpatialElection out;
    out.dimension = 2;
    out.voters.reserve(e.voters.size());
    out.candidates.reserve(e.candidates.size());
    for (const auto& p : e.voters) out.voters.push_back(map_point(p));
    for (const auto& p : e.candidates) out.candidates.push_back(map_point(p));
    return out;
}

PlanarResult planar_winning_set(const SpatialElection& e, PlanarNorm norm) {
    require_planar_odd(e);
    const SpatialElection l1 = norm == PlanarNorm::LInfinity ? shear_to_l1(e) : e;

    auto derived = derive_profile(l1, Norm::lp(1));
    if (!derived.ties.empty())
        throw DomainError("TiedPreferences",
                          "the derived profile has exact distance ties; planar_winning_set "
                          "needs strict preferences");

    QuadrantSelection sel = quadrant_candidates(l1);

    // S in quadrant order, duplicates collapsed.
    std::vector<int> full;
    for (int q = 0; q < 4; ++q) {
        if (!sel.closest[q]) continue;
        int c = *sel.closest[q];
        if (std::find(full.begin(), full.end(), c) == full.end()) full.push_back(c);
    }

    // Drop each member in quadrant order, then fall back to S itself.
    std::vector<std::vector<int>> attempts;
    if (full.size() >= 2) {
        for (int q = 0; q < 4; ++q) {
            if (!sel.closest[q]) continue;
            int drop = *sel.closest[q];
            std::vector<int> sub;
            for (int c : full)
                if (c != drop) sub.push_back(c);
            if (sub.size() == full.size()) continue; // duplicate representative, already dropped
            attempts.push_back(std::move(sub));
        }
    }
    // S itself only when it already has size <= 3; with four distinct
    // representatives one of the drops is guaranteed to certify.
    if (full.size() <= 3) attempts.push_back(full);

    for (const auto& candidate_set : attempts) {
        auto check = is_condorcet_winning_set(derived.profile, candidate_set);
        if (check.certificate)
            return {std::move(*check.certificate), std::move(sel), {}};
    }
    // Unreachable: the full quadrant set is winning whenever preferences are
    // strict and n is odd.
    throw DomainError("InternalError", "quadrant set failed certification");
}

Lemma2Report lemma2_check(const SpatialElection& e, const QuadrantSelection& sel) {
    require_planar_odd(e);
    auto derived = derive_profile(e, Norm::lp(1));
    const int n = e.num_voters();

    Lemma2Report report;
    for (int c = 0; c < e.num_candidates(); ++c) {
        int q = sel.quadrant[c];
        if (!sel.closest[q] || *sel.closest[q] == c) continue;
        int rep = *sel.closest[q];
        int count = 0;
        for (int v = 0; v < n; ++v)
            if (derived.profile.prefers(v, rep, c)) ++count;
        ++report.checked;
        if (2 * count <= n) report.violations.push_back({q, c, count});
    }
    return report;
}

} // namespace cws
