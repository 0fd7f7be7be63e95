#ifndef CWS_HARNESS_HPP
#define CWS_HARNESS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "planar.hpp"
#include "spatial.hpp"
#include "winning.hpp"

namespace cws {

struct GeneratorSpec {
    enum class Kind { ImpartialCulture, Spatial } kind = Kind::ImpartialCulture;
    int m = 3;
    int n = 3;
    // Spatial only:
    int dimension = 2;
    Rational box = 100;
    Norm norm = Norm::lp(1);
};

struct ExperimentConfig {
    GeneratorSpec generator;
    int instances = 100;
    uint64_t seed = 0;
    int k_max = 0; // 0 = default ceil(log2 m)
    int threads = 1;
};

struct InstanceRecord {
    int index = 0;
    int exact_dimension = 0;
    int planar_set_size = 0; // 0 when the planar path does not apply
};

struct Witness {
    int instance_index = 0;
    uint64_t seed = 0;
    int dimension = 0;
    Profile profile;
    WinningSetCertificate certificate;
    std::optional<SpatialElection> election; // provenance for spatial generators
};

struct ExperimentReport {
    ExperimentConfig config;
    std::map<int, int> histogram; // dimension -> count
    std::vector<Witness> witnesses; // instances attaining the max dimension seen
    std::vector<InstanceRecord> instances; // ordered by index
    double wall_time_ms = 0.0;
};

// Generates `instances` elections, computes the exact Condorcet dimension of
// each, and for planar L1/LInf spatial runs also the certified planar set
// size. Deterministic per seed; instance i uses an rng stream derived from
// (seed, i).
ExperimentReport run_dimension_survey(const ExperimentConfig& cfg);

struct HuntResult {
    std::optional<Witness> witness;
    int instances_examined = 0;
};

// First generated instance with exact dimension >= target, re-verified
// through the certificate checker, or absent after the instance budget.
HuntResult hunt_high_dimension(const ExperimentConfig& cfg, int target);

// A uniform random permutation profile (impartial culture).
Profile impartial_culture(int m, int n, Rng& rng);

// Per-instance rng seed derivation used by both the survey and the hunt.
uint64_t instance_seed(uint64_t seed, int index);

} // namespace cws

#endif
