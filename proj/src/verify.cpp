#include "labelsem/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "labelsem/combination.hpp"
#include "labelsem/game.hpp"
#include "labelsem/seeding.hpp"

namespace labelsem {

namespace {

std::vector<double> random_weights(std::mt19937_64& rng, std::size_t n) {
    std::vector<double> w(n);
    for (auto& v : w) v = 0.05 + 3.0 * uniform01(rng);
    return w;
}

std::vector<Sign> random_signs(std::mt19937_64& rng, std::size_t n) {
    std::vector<Sign> s(n);
    for (auto& v : s) v = uniform_below(rng, 2) ? Sign::positive : Sign::negative;
    return s;
}

std::vector<double> random_memberships(std::mt19937_64& rng, std::size_t n) {
    std::vector<double> m(n);
    for (auto& v : m) v = uniform01(rng);
    return m;
}

BitVector bits_of(const std::vector<Sign>& signs) {
    BitVector bits(signs.size());
    for (std::size_t i = 0; i < signs.size(); ++i) {
        bits[i] = signs[i] == Sign::positive ? 1 : 0;
    }
    return bits;
}

std::string describe(double worst, double tolerance) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "worst deviation %.3g, tolerance %.3g", worst, tolerance);
    return buf;
}

CheckResult check_composite_oracle(std::mt19937_64& rng) {
    constexpr double kTol = 1e-9;
    double worst = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t n = 1 + uniform_below(rng, 10);
        const WeightVector weights(random_weights(rng, n));
        const auto signs = random_signs(rng, n);
        const auto m = random_memberships(rng, n);
        const double direct = composite_membership(weights, signs, m);
        const double oracle = binary_oracle(bits_of(signs), weights, m);
        worst = std::max(worst, std::abs(direct - oracle));
    }
    return {"composite formula matches exhaustive enumeration", worst <= kTol,
            describe(worst, kTol)};
}

CheckResult check_flatten_two_level(std::mt19937_64& rng) {
    constexpr double kTolValue = 1e-9;
    constexpr double kTolSum = 1e-12;
    double worst_value = 0.0;
    double worst_sum = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t n = 1 + uniform_below(rng, 8);
        const WeightVector left(random_weights(rng, n));
        const WeightVector right(random_weights(rng, n));
        const auto signs = random_signs(rng, n);
        const auto m = random_memberships(rng, n);
        const double w1 = 0.05 + 2.0 * uniform01(rng);
        const double w2 = 0.05 + 2.0 * uniform01(rng);

        const double two_level =
            compound_membership(w1, w2, composite_membership(left, signs, m),
                                composite_membership(right, signs, m));

        const auto coeff = flatten_coefficients(w1, w2, left, right);
        double flat = 0.0;
        double sum = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            flat += coeff[i] * signed_value(signs[i], m[i]);
            sum += coeff[i];
        }
        worst_value = std::max(worst_value, std::abs(flat - two_level));
        worst_sum = std::max(worst_sum, std::abs(sum - 1.0));
    }
    const bool ok = worst_value <= kTolValue && worst_sum <= kTolSum;
    return {"flattened compound matches two-level evaluation", ok,
            describe(worst_value, kTolValue) + "; " + describe(worst_sum, kTolSum)};
}

CheckResult check_update_target_solves(std::mt19937_64& rng) {
    constexpr double kTol = 1e-12;
    double worst = 0.0;
    int checked = 0;
    while (checked < 100000) {
        const double w = uniform01(rng);
        const double s1 = uniform01(rng);
        const double s2 = uniform01(rng);
        if (s1 == s2) continue;
        const double unclamped = (w - s2) / (s1 - s2);
        if (!(unclamped >= 0.0 && unclamped <= 1.0)) continue;
        ++checked;
        worst = std::max(worst, std::abs(assertion_value(unclamped, s1, s2) - w));
    }
    return {"interior update target solves value = reliability", worst <= kTol,
            describe(worst, kTol)};
}

CheckResult check_clamp_dichotomy(std::mt19937_64& rng) {
    const ElementDistribution unit({{0.0, 1.0}, {0.0, 1.0}});
    const Agent probe{};
    double x[2];
    std::size_t events = 0;
    std::size_t bad = 0;
    while (events < 1000000) {
        unit.sample_into(rng, x);
        const Assertion a = best_assertion(probe, x);
        const auto [s1, s2] = signed_pair(a, x);
        const auto target = update_target(1.0, s1, s2);
        if (!target) continue;
        ++events;
        if (*target != 0.0 && *target != 1.0) ++bad;
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%zu of %zu events off the lattice", bad, events);
    return {"clamped target is exactly 0 or 1 at reliability 1", bad == 0, buf};
}

CheckResult check_fixed_point_monte_carlo(std::mt19937_64& rng) {
    constexpr double kTol = 0.005;
    constexpr std::size_t kSamples = 1000000;
    std::vector<ElementDistribution> dists;
    dists.emplace_back(
        std::vector<ElementDistribution::Interval>{{0.0, 1.0}, {0.0, 0.5}});
    dists.emplace_back(
        std::vector<ElementDistribution::Interval>{{0.25, 0.75}, {0.0, 0.5}});
    for (int extra = 0; extra < 3; ++extra) {
        std::vector<ElementDistribution::Interval> ranges;
        for (int d = 0; d < 2; ++d) {
            double a = uniform01(rng);
            double b = uniform01(rng);
            if (a > b) std::swap(a, b);
            if (a == b) {
                a = 0.0;
                b = 1.0;
            }
            ranges.emplace_back(a, b);
        }
        dists.emplace_back(ranges);
    }
    double worst = 0.0;
    for (const auto& dist : dists) {
        const double analytic = predicted_fixed_point(dist);
        const double estimate = positive_region_probability(dist, 0.5, 1.0, kSamples, rng());
        worst = std::max(worst, std::abs(analytic - estimate));
    }
    return {"analytic fixed point matches Monte Carlo", worst <= kTol, describe(worst, kTol)};
}

}  // namespace

std::vector<CheckResult> run_verification(std::uint64_t seed) {
    std::mt19937_64 rng(splitmix64(seed));
    std::vector<CheckResult> results;
    results.push_back(check_composite_oracle(rng));
    results.push_back(check_flatten_two_level(rng));
    results.push_back(check_update_target_solves(rng));
    results.push_back(check_clamp_dichotomy(rng));
    results.push_back(check_fixed_point_monte_carlo(rng));
    return results;
}

}  // namespace labelsem
