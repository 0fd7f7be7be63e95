#ifndef CWS_PLANAR_HPP
#define CWS_PLANAR_HPP

#include <array>
#include <optional>
#include <vector>

#include "spatial.hpp"
#include "winning.hpp"

namespace cws {

/// Median-centered quadrant decomposition of a planar election with the
/// Manhattan-nearest candidate to the origin in each occupied quadrant.
struct QuadrantSelection {
    Rational median_x;
    Rational median_y;
    // closest[i] is the chosen candidate for quadrant Q_{i+1}, if occupied.
    std::array<std::optional<int>, 4> closest;
    // quadrant[c] in {0..3} for every candidate (after shifting medians to 0).
    std::vector<int> quadrant;
};

// Coordinate-wise medians of the voters. Requires D = 2 and odd n.
std::pair<Rational, Rational> coordinate_medians(const SpatialElection& e);

QuadrantSelection quadrant_candidates(const SpatialElection& e);

// (x, y) -> (x + y, y - x). Manhattan distances in the image are exactly
// twice the original Chebyshev distances, so derived profiles coincide.
SpatialElection shear_to_l1(const SpatialElection& e);

struct PlanarResult {
    WinningSetCertificate certificate;
    QuadrantSelection selection;
    std::vector<TieEntry> ties; // empty; strictness is a precondition
};

enum class PlanarNorm { L1, LInfinity };

// A certified Condorcet winning set of size <= 3 for a planar election under
// the Manhattan or infinity norm. The quadrant set S = {c_1..c_4} is pruned
// by testing S minus each member in quadrant order, then S itself.
// Throws DomainError("TiedPreferences") when the derived profile is not
// strict and DomainError("EvenVoterCount") for even n.
PlanarResult planar_winning_set(const SpatialElection& e, PlanarNorm norm);

struct QuadrantViolation {
    int quadrant;   // 0..3
    int candidate;  // beaten-by-majority check failed for this candidate
    int count;      // voters preferring the quadrant representative
};

struct Lemma2Report {
    int checked = 0;
    std::vector<QuadrantViolation> violations;
};

// For every candidate c in quadrant Q_i, counts the voters preferring the
// quadrant representative c_i over c and reports any count not a strict
// majority. Expects Manhattan geometry, odd n, and a strict profile.
Lemma2Report lemma2_check(const SpatialElection& e, const QuadrantSelection& sel);

} // namespace cws

#endif
