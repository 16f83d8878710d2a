#include "labelsem/game.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "labelsem/errors.hpp"
#include "labelsem/seeding.hpp"

namespace labelsem {

namespace {

const Label& game_label() {
    static const Label label = standard_game_label();
    return label;
}

void check_unit(double v, const char* what) {
    if (!(v >= 0.0 && v <= 1.0)) {
        throw InputError(std::string(what) + " must lie in [0,1]");
    }
}

void check_scene(std::span<const double> x) {
    if (x.size() != 2) throw InputError("game elements are two-dimensional");
    check_unit(x[0], "element coordinates");
    check_unit(x[1], "element coordinates");
}

// P(max(x, 1-x) <= t) for x ~ U[lo, hi]; t in [0.5, 1].
double folded_cdf(double lo, double hi, double t) {
    const double width = std::min(hi, t) - std::max(lo, 1.0 - t);
    return std::max(0.0, width) / (hi - lo);
}

// Density of max(x, 1-x) away from its breakpoints.
double folded_density(double lo, double hi, double t) {
    double hits = 0.0;
    if (t > lo && t < hi) hits += 1.0;
    if (1.0 - t > lo && 1.0 - t < hi) hits += 1.0;
    return hits / (hi - lo);
}

}  // namespace

Label standard_game_label() {
    return Label({1.0}, ThresholdDistribution::uniform(1.0));
}

ElementDistribution::ElementDistribution(std::vector<Interval> ranges)
    : ranges_(std::move(ranges)) {
    if (ranges_.size() != 2) {
        throw InputError("element distribution needs exactly two interval pairs");
    }
    for (const auto& [lo, hi] : ranges_) {
        if (!(lo >= 0.0 && lo < hi && hi <= 1.0)) {
            throw InputError("element ranges must satisfy 0 <= low < high <= 1");
        }
    }
}

std::vector<double> ElementDistribution::sample(std::mt19937_64& rng) const {
    std::vector<double> x(ranges_.size());
    sample_into(rng, x);
    return x;
}

void ElementDistribution::sample_into(std::mt19937_64& rng, std::span<double> out) const {
    if (out.size() != ranges_.size()) throw InputError("sample buffer has the wrong dimension");
    for (std::size_t i = 0; i < ranges_.size(); ++i) {
        const auto& [lo, hi] = ranges_[i];
        out[i] = lo + uniform01(rng) * (hi - lo);
    }
}

std::pair<double, double> signed_pair(const Assertion& a, std::span<const double> x) {
    check_scene(x);
    const double mu1 = game_label().appropriateness(x.subspan(0, 1));
    const double mu2 = game_label().appropriateness(x.subspan(1, 1));
    return {signed_value(a.sign1, mu1), signed_value(a.sign2, mu2)};
}

double assertion_value(double lambda, double s1, double s2) {
    check_unit(lambda, "lambda");
    check_unit(s1, "signed memberships");
    check_unit(s2, "signed memberships");
    return lambda * s1 + (1.0 - lambda) * s2;
}

double assertion_value(const Agent& speaker, const Assertion& a, std::span<const double> x) {
    const auto [s1, s2] = signed_pair(a, x);
    return assertion_value(speaker.lambda, s1, s2);
}

Assertion best_assertion(const Agent&, std::span<const double> x) {
    check_scene(x);
    const double mu1 = game_label().appropriateness(x.subspan(0, 1));
    const double mu2 = game_label().appropriateness(x.subspan(1, 1));
    return {mu1 >= 0.5 ? Sign::positive : Sign::negative,
            mu2 >= 0.5 ? Sign::positive : Sign::negative};
}

std::optional<double> update_target(double reliability, double s1, double s2) {
    check_unit(reliability, "reliability");
    check_unit(s1, "signed memberships");
    check_unit(s2, "signed memberships");
    if (s1 == s2) return std::nullopt;
    const double target = (reliability - s2) / (s1 - s2);
    if (target <= 0.0) return 0.0;
    if (target >= 1.0) return 1.0;
    return target;
}

double listener_update(const Agent& listener, const Assertion& a, std::span<const double> x,
                       double speaker_reliability) {
    check_unit(listener.learning_rate, "learning rate");
    const auto [s1, s2] = signed_pair(a, x);
    const double v = assertion_value(listener.lambda, s1, s2);
    if (v > speaker_reliability) return listener.lambda;
    const auto target = update_target(speaker_reliability, s1, s2);
    if (!target) return listener.lambda;
    return listener.lambda + listener.learning_rate * (*target - listener.lambda);
}

PopulationStats population_stats(std::span<const double> lambdas) {
    if (lambdas.empty()) throw InputError("population statistics need at least one value");
    double mean = 0.0;
    for (const double v : lambdas) mean += v;
    mean /= static_cast<double>(lambdas.size());
    double var = 0.0;
    for (const double v : lambdas) var += (v - mean) * (v - mean);
    var /= static_cast<double>(lambdas.size());
    return {mean, std::sqrt(var)};
}

GameWorld::GameWorld(std::size_t population_size, ElementDistribution distribution,
                     double reliability, double learning_rate, std::uint64_t seed)
    : distribution_(std::move(distribution)),
      reliability_(reliability),
      learning_rate_(learning_rate),
      rng_(seed) {
    if (population_size < 2) throw InputError("population size must be at least 2");
    if (!std::isfinite(reliability_)) throw InputError("reliability must be finite");
    check_unit(reliability_, "reliability");
    if (!std::isfinite(learning_rate_)) throw InputError("learning rate must be finite");
    check_unit(learning_rate_, "learning rate");
    agents_.reserve(population_size);
    for (std::size_t i = 0; i < population_size; ++i) {
        agents_.push_back({uniform01(rng_), reliability_, learning_rate_});
    }
    order_.resize(population_size);
}

void GameWorld::step() {
    const std::size_t n = agents_.size();
    for (std::size_t i = 0; i < n; ++i) order_[i] = static_cast<std::uint32_t>(i);
    for (std::size_t i = n - 1; i > 0; --i) {
        const std::size_t j = uniform_below(rng_, i + 1);
        std::swap(order_[i], order_[j]);
    }
    double x[2];
    for (std::size_t k = 0; k < n; ++k) {
        const std::uint32_t listener = order_[k];
        std::uint64_t speaker = uniform_below(rng_, n - 1);
        if (speaker >= listener) ++speaker;
        distribution_.sample_into(rng_, x);
        const Agent& sp = agents_[speaker];
        const Assertion a = best_assertion(sp, x);
        agents_[listener].lambda = listener_update(agents_[listener], a, x, sp.reliability);
    }
    ++timestep_;
}

void GameWorld::run(std::size_t timesteps) {
    for (std::size_t t = 0; t < timesteps; ++t) step();
}

std::vector<double> GameWorld::lambdas() const {
    std::vector<double> out(agents_.size());
    for (std::size_t i = 0; i < agents_.size(); ++i) out[i] = agents_[i].lambda;
    return out;
}

PopulationStats GameWorld::stats() const {
    const auto l = lambdas();
    return population_stats(l);
}

double positive_region_probability(const ElementDistribution& distribution, double lambda,
                                   double reliability, std::size_t samples, std::uint64_t seed) {
    check_unit(lambda, "lambda");
    check_unit(reliability, "reliability");
    if (samples == 0) throw InputError("sample count must be at least 1");
    std::mt19937_64 rng(seed);
    const Agent probe{lambda, reliability, 0.0};
    double x[2];
    std::size_t hits = 0;
    for (std::size_t s = 0; s < samples; ++s) {
        distribution.sample_into(rng, x);
        const Assertion a = best_assertion(probe, x);
        const auto [s1, s2] = signed_pair(a, x);
        const auto target = update_target(reliability, s1, s2);
        if (!target || *target >= lambda) ++hits;
    }
    return static_cast<double>(hits) / static_cast<double>(samples);
}

double predicted_fixed_point(const ElementDistribution& distribution) {
    const auto& r = distribution.ranges();
    const double lo1 = r[0].first, hi1 = r[0].second;
    const double lo2 = r[1].first, hi2 = r[1].second;

    // Integrate P(s2 <= t) dF1(t) over [0.5, 1]. Cutting at every breakpoint
    // of either folded distribution leaves pieces where the integrand is
    // linear, so the trapezoid rule is exact.
    std::vector<double> cuts{0.5, 1.0};
    for (const double c :
         {lo1, hi1, 1.0 - lo1, 1.0 - hi1, lo2, hi2, 1.0 - lo2, 1.0 - hi2}) {
        if (c > 0.5 && c < 1.0) cuts.push_back(c);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    double total = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double a = cuts[i];
        const double b = cuts[i + 1];
        const double f1 = folded_density(lo1, hi1, 0.5 * (a + b));
        if (f1 == 0.0) continue;
        const double cdf2 = folded_cdf(lo2, hi2, a) + folded_cdf(lo2, hi2, b);
        total += (b - a) * f1 * 0.5 * cdf2;
    }
    return std::clamp(total, 0.0, 1.0);
}

}  // namespace labelsem
