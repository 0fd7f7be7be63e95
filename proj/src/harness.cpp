#include "harness.hpp"

#include "tournament.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <thread>

namespace cws {

Profile impartial_culture(int m, int n, Rng& rng) {
    std::vector<std::vector<int>> rankings;
    rankings.reserve(n);
    for (int v = 0; v < n; ++v) {
        std::vector<int> perm(m);
        for (int i = 0; i < m; ++i) perm[i] = i;
        for (int i = m - 1; i > 0; --i) {
            int j = static_cast<int>(rng.uniform(0, i));
            std::swap(perm[i], perm[j]);
        }
        rankings.push_back(std::move(perm));
    }
    return Profile(m, std::move(rankings));
}

uint64_t instance_seed(uint64_t seed, int index) {
    // One splitmix step keeps per-instance streams independent of each other.
    Rng r(seed ^ (0xA24BAED4963EE407ULL + static_cast<uint64_t>(index)));
    return r.next();
}

namespace {

struct GeneratedInstance {
    Profile profile;
    std::optional<SpatialElection> election;
};

GeneratedInstance generate(const GeneratorSpec& gen, uint64_t seed) {
    if (gen.kind == GeneratorSpec::Kind::ImpartialCulture) {
        Rng rng(seed);
        return {impartial_culture(gen.m, gen.n, rng), std::nullopt};
    }
    SpatialElection e = random_spatial(gen.m, gen.n, gen.dimension, gen.box, seed, gen.norm);
    auto derived = derive_profile(e, gen.norm);
    return {std::move(derived.profile), std::move(e)};
}

bool planar_applies(const GeneratorSpec& gen) {
    if (gen.kind != GeneratorSpec::Kind::Spatial || gen.dimension != 2) return false;
    return gen.norm.infinity || gen.norm.p == 1;
}

int effective_k_max(const ExperimentConfig& cfg) {
    return cfg.k_max > 0 ? cfg.k_max : ceil_log2(cfg.generator.m);
}

template <typename Fn>
void parallel_for(int count, int threads, Fn&& fn) {
    if (threads <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

} // namespace

ExperimentReport run_dimension_survey(const ExperimentConfig& cfg) {
    const auto start = std::chrono::steady_clock::now();
    if (cfg.instances < 1) throw DomainError("EmptyProfile", "instances must be >= 1");

    ExperimentReport report;
    report.config = cfg;
    report.instances.resize(cfg.instances);

    const bool planar = planar_applies(cfg.generator);
    const int k_max = effective_k_max(cfg);
    const PlanarNorm planar_norm =
        cfg.generator.norm.infinity ? PlanarNorm::LInfinity : PlanarNorm::L1;

    std::vector<std::optional<Witness>> found(cfg.instances);
    std::exception_ptr failure;
    std::mutex failure_mutex;

    parallel_for(cfg.instances, cfg.threads, [&](int i) {
        try {
            const uint64_t iseed = instance_seed(cfg.seed, i);
            auto inst = generate(cfg.generator, iseed);
            auto result = condorcet_dimension(inst.profile, k_max);

            InstanceRecord rec;
            rec.index = i;
            rec.exact_dimension = result.dimension;
            if (planar) {
                auto planar_result = planar_winning_set(*inst.election, planar_norm);
                rec.planar_set_size = static_cast<int>(planar_result.certificate.set.size());
            }
            report.instances[i] = rec;
            found[i] = Witness{i, iseed, result.dimension, std::move(inst.profile),
                               std::move(result.witness), std::move(inst.election)};
        } catch (...) {
            std::lock_guard<std::mutex> lock(failure_mutex);
            if (!failure) failure = std::current_exception();
        }
    });
    if (failure) std::rethrow_exception(failure);

    int max_dim = 0;
    for (const auto& w : found) {
        ++report.histogram[w->dimension];
        max_dim = std::max(max_dim, w->dimension);
    }
    constexpr size_t kWitnessCap = 10;
    for (auto& w : found) {
        if (w->dimension == max_dim && report.witnesses.size() < kWitnessCap)
            report.witnesses.push_back(std::move(*w));
    }

    report.wall_time_ms = std::chrono::duration<double, std::milli>(
                              std::chrono::steady_clock::now() - start)
                              .count();
    return report;
}

HuntResult hunt_high_dimension(const ExperimentConfig& cfg, int target) {
    if (target < 1) throw DomainError("IndexOutOfRange", "target must be >= 1");
    HuntResult result;
    for (int i = 0; i < cfg.instances; ++i) {
        const uint64_t iseed = instance_seed(cfg.seed, i);
        auto inst = generate(cfg.generator, iseed);
        ++result.instances_examined;

        // Dimension >= target iff no winning set of size < target exists.
        bool small_set_exists = true;
        if (target == 1) {
            small_set_exists = false;
        } else {
            try {
                condorcet_dimension(inst.profile, target - 1);
            } catch (const DomainError& e) {
                if (e.code() != "DimensionExceedsBound") throw;
                small_set_exists = false;
            }
        }
        if (small_set_exists) continue;

        // Re-verify with a full search for the exact dimension.
        auto exact = condorcet_dimension(inst.profile, inst.profile.num_candidates());
        auto recheck = is_condorcet_winning_set(inst.profile, exact.witness.set);
        if (exact.dimension < target || !recheck.certificate)
            throw DomainError("InternalError", "hunt witness failed re-verification");
        result.witness = Witness{i, iseed, exact.dimension, std::move(inst.profile),
                                 std::move(exact.witness), std::move(inst.election)};
        return result;
    }
    return result;
}

} // namespace cws
