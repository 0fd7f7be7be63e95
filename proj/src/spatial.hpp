#ifndef CWS_SPATIAL_HPP
#define CWS_SPATIAL_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "profile.hpp"
#include "rational.hpp"

namespace cws {

using Point = std::vector<Rational>;

/// p-norm selector. Finite integer p and the infinity norm compare distances
/// exactly; non-integer p falls back to floating point with a tie band.
struct Norm {
    bool infinity = false;
    Rational p = 1; // >= 1 when finite

    static Norm inf() { return {true, 0}; }
    static Norm lp(Rational p_value);

    bool is_integer_p() const { return !infinity && is_integer(p); }
    bool operator==(const Norm& other) const {
        return infinity == other.infinity && (infinity || p == other.p);
    }

    // "inf" or "p:<rational>", the wire encoding used in JSON documents.
    std::string to_string() const;
    static Norm from_string(const std::string& text);
};

struct SpatialElection {
    int dimension = 0;
    std::vector<Point> voters;
    std::vector<Point> candidates;

    int num_voters() const { return static_cast<int>(voters.size()); }
    int num_candidates() const { return static_cast<int>(candidates.size()); }
};

// Order-preserving stand-in for a distance: the p-th power of the p-norm for
// finite integer p (exact), the max coordinate gap for infinity (exact), and
// a double of the p-th power otherwise.
struct DistancePower {
    bool exact = true;
    Rational value = 0;
    double approx = 0.0;
};

DistancePower distance_power(const Point& a, const Point& b, const Norm& norm);

// -1 / 0 / +1; approximate values within a relative 1e-12 band compare equal.
int compare_distance(const DistancePower& a, const DistancePower& b);

struct TieEntry {
    int voter;
    int closer_candidate; // lower index, wins the tie-break
    int other_candidate;
};

struct DerivedProfile {
    Profile profile;
    std::vector<TieEntry> ties;
};

// Rankings by increasing distance; exact ties broken by ascending candidate
// index and recorded.
DerivedProfile derive_profile(const SpatialElection& e, const Norm& norm);

// Three voters and three candidates on a Condorcet cycle for every p >= 1.
SpatialElection lemma4_instance();

// Uniform points on a scaled integer lattice in [-box, box]^D, deterministic
// per seed. Points causing a distance tie under `norm` are regenerated until
// the derived profile is strict. Throws DomainError("TieEliminationFailed")
// after the retry budget.
SpatialElection random_spatial(int m, int n, int dimension, const Rational& box,
                               uint64_t seed, const Norm& norm);

// x -> scale * (x + shift); proximity rankings are unchanged for every norm.
SpatialElection translate_scale(const SpatialElection& e, const Point& shift,
                                const Rational& scale);

// Portable uniform integer in [lo, hi] on top of a 64-bit generator state
// (splitmix-style), so seeded runs are reproducible across platforms.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}
    uint64_t next();
    int64_t uniform(int64_t lo, int64_t hi);

private:
    uint64_t state_;
};

} // namespace cws

#endif
