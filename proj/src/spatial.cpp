#include "spatial.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace cws {

Norm Norm::lp(Rational p_value) {
    if (p_value < 1)
        throw DomainError("UnsupportedNorm", "p-norms need p >= 1, got " + format_rational(p_value));
    Norm n;
    n.infinity = false;
    n.p = std::move(p_value);
    return n;
}

std::string Norm::to_string() const {
    if (infinity) return "inf";
    return "p:" + format_rational(p);
}

Norm Norm::from_string(const std::string& text) {
    if (text == "inf" || text == "infinity" || text == "oo") return Norm::inf();
    std::string body = text;
    if (body.rfind("p:", 0) == 0) body = body.substr(2);
    return Norm::lp(parse_rational(body));
}

namespace {

Rational pow_rational(const Rational& base, long exp) {
    Rational result = 1;
    Rational b = base;
    long e = exp;
    while (e > 0) {
        if (e & 1) result *= b;
        b *= b;
        e >>= 1;
    }
    return result;
}

} // namespace

DistancePower distance_power(const Point& a, const Point& b, const Norm& norm) {
    if (a.size() != b.size())
        throw DomainError("DimensionMismatch", "points of dimension " + std::to_string(a.size()) +
                                                   " and " + std::to_string(b.size()));
    DistancePower d;
    if (norm.infinity) {
        Rational best = 0;
        for (size_t i = 0; i < a.size(); ++i) {
            Rational diff = a[i] >= b[i] ? a[i] - b[i] : b[i] - a[i];
            if (diff > best) best = diff;
        }
        d.value = best;
        return d;
    }
    if (norm.is_integer_p()) {
        const long p = boost::multiprecision::numerator(norm.p).convert_to<long>();
        Rational sum = 0;
        for (size_t i = 0; i < a.size(); ++i) {
            Rational diff = a[i] >= b[i] ? a[i] - b[i] : b[i] - a[i];
            sum += pow_rational(diff, p);
        }
        d.value = sum;
        return d;
    }
    const double p = to_double(norm.p);
    double sum = 0.0;
    for (size_t i = 0; i < a.size(); ++i)
        sum += std::pow(std::abs(to_double(a[i]) - to_double(b[i])), p);
    d.exact = false;
    d.approx = sum;
    return d;
}

int compare_distance(const DistancePower& a, const DistancePower& b) {
    if (a.exact && b.exact) {
        if (a.value < b.value) return -1;
        if (a.value > b.value) return 1;
        return 0;
    }
    const double x = a.exact ? to_double(a.value) : a.approx;
    const double y = b.exact ? to_double(b.value) : b.approx;
    const double tol = 1e-12 * std::max({1.0, std::abs(x), std::abs(y)});
    if (std::abs(x - y) <= tol) return 0;
    return x < y ? -1 : 1;
}

DerivedProfile derive_profile(const SpatialElection& e, const Norm& norm) {
    const int m = e.num_candidates();
    const int n = e.num_voters();
    if (m < 1 || n < 1)
        throw DomainError("EmptyProfile", "a spatial election needs m >= 1 and n >= 1");

    std::vector<std::vector<int>> rankings;
    rankings.reserve(n);
    std::vector<TieEntry> ties;

    std::vector<DistancePower> dist(m);
    for (int v = 0; v < n; ++v) {
        for (int c = 0; c < m; ++c) dist[c] = distance_power(e.voters[v], e.candidates[c], norm);
        std::vector<int> order(m);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int lhs, int rhs) {
            int cmp = compare_distance(dist[lhs], dist[rhs]);
            if (cmp != 0) return cmp < 0;
            return lhs < rhs; // tie-break by ascending index, recorded below
        });
        for (int k = 0; k + 1 < m; ++k) {
            if (compare_distance(dist[order[k]], dist[order[k + 1]]) == 0)
                ties.push_back({v, order[k], order[k + 1]});
        }
        rankings.push_back(std::move(order));
    }
    return {Profile(m, std::move(rankings)), std::move(ties)};
}

SpatialElection lemma4_instance() {
    SpatialElection e;
    e.dimension = 2;
    e.voters = {{9, 0}, {0, 9}, {-9, 0}};
    e.candidates = {{1, -1}, {8, 10}, {-9, 9}};
    return e;
}

uint64_t Rng::next() {
    // splitmix64
    state_ += 0x9E3779B97F4A7C15ULL;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

int64_t Rng::uniform(int64_t lo, int64_t hi) {
    const uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
    const uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    uint64_t r;
    do {
        r = next();
    } while (r >= limit);
    return lo + static_cast<int64_t>(r % span);
}

namespace {

constexpr int64_t kLatticeResolution = 1'000'000;

Point random_point(Rng& rng, int dimension, const Rational& box) {
    Point pt(dimension);
    for (int d = 0; d < dimension; ++d) {
        int64_t k = rng.uniform(-kLatticeResolution, kLatticeResolution);
        pt[d] = box * Rational(k, kLatticeResolution);
    }
    return pt;
}

} // namespace

SpatialElection random_spatial(int m, int n, int dimension, const Rational& box,
                               uint64_t seed, const Norm& norm) {
    if (m < 1 || n < 1 || dimension < 1)
        throw DomainError("EmptyProfile", "random_spatial needs m, n, D >= 1");
    Rng rng(seed);
    SpatialElection e;
    e.dimension = dimension;
    e.voters.reserve(n);
    e.candidates.reserve(m);
    for (int v = 0; v < n; ++v) e.voters.push_back(random_point(rng, dimension, box));
    for (int c = 0; c < m; ++c) e.candidates.push_back(random_point(rng, dimension, box));

    // Regenerate the higher-indexed candidate of the first reported tie.
    constexpr int kRetryBudget = 1000;
    for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
        auto derived = derive_profile(e, norm);
        if (derived.ties.empty()) return e;
        e.candidates[derived.ties.front().other_candidate] = random_point(rng, dimension, box);
    }
    throw DomainError("TieEliminationFailed",
                      "could not generate a tie-free instance within the retry budget");
}

SpatialElection translate_scale(const SpatialElection& e, const Point& shift,
                                const Rational& scale) {
    if (scale <= 0) throw DomainError("NonpositiveScale", "scale must be > 0");
    if (static_cast<int>(shift.size()) != e.dimension)
        throw DomainError("DimensionMismatch", "shift dimension mismatch");
    auto map_point = [&](const Point& p) {
        Point q(p.size());
        for (size_t i = 0; i < p.size(); ++i) q[i] = scale * (p[i] + shift[i]);
        return q;
    };
    SpatialElection out;
    out.dimension = e.dimension;
    out.voters.reserve(e.voters.size());
    out.candidates.reserve(e.candidates.size());
    for (const auto& p : e.voters) out.voters.push_back(map_point(p));
    for (const auto& p : e.candidates) out.candidates.push_back(map_point(p));
    return out;
}

} // namespace cws
