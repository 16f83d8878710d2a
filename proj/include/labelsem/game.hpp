#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "labelsem/semantics.hpp"

namespace labelsem {

// The label shared by both game dimensions: prototype 1 with a uniform
// threshold on [0,1], so its appropriateness at x in [0,1] is x itself.
Label standard_game_label();

// Polarities a speaker attaches to the two labels of a conjunction.
struct Assertion {
    Sign sign1 = Sign::positive;
    Sign sign2 = Sign::positive;

    bool operator==(const Assertion&) const = default;
};

// One participant: weight of dimension 1 (dimension 2 carries 1 - lambda),
// the reliability attributed to speakers, and the learning rate.
struct Agent {
    double lambda = 0.5;
    double reliability = 1.0;
    double learning_rate = 1e-3;
};

// Independent uniform ranges for the two scene dimensions, each inside [0,1].
class ElementDistribution {
public:
    using Interval = std::pair<double, double>;

    explicit ElementDistribution(std::vector<Interval> ranges);

    std::size_t dimension() const { return ranges_.size(); }
    const std::vector<Interval>& ranges() const { return ranges_; }

    std::vector<double> sample(std::mt19937_64& rng) const;
    void sample_into(std::mt19937_64& rng, std::span<double> out) const;

private:
    std::vector<Interval> ranges_;
};

// Signed memberships (s1, s2) of the two game labels at x under a's signs.
std::pair<double, double> signed_pair(const Assertion& a, std::span<const double> x);

double assertion_value(double lambda, double s1, double s2);
double assertion_value(const Agent& speaker, const Assertion& a, std::span<const double> x);

// Argmax of the assertion value over the four sign patterns. The value is
// separable, so each dimension independently takes the sign with the larger
// membership; ties go positive, and the speaker's weighting drops out.
Assertion best_assertion(const Agent& speaker, std::span<const double> x);

// The lambda at which the assertion value would equal the reliability,
// clamped to [0,1]; empty at s1 = s2, where no single lambda is selected.
std::optional<double> update_target(double reliability, double s1, double s2);

// New lambda for a listener that heard assertion a about x from a speaker of
// the given reliability. Moves toward the update target only when the
// listener's own value for the assertion does not exceed that reliability.
double listener_update(const Agent& listener, const Assertion& a, std::span<const double> x,
                       double speaker_reliability);

struct PopulationStats {
    double mean = 0.0;
    double sd = 0.0;
};

// Mean and population (divide-by-N) standard deviation.
PopulationStats population_stats(std::span<const double> lambdas);

// A population playing the two-label game with one shared reliability and
// learning rate. One step gives every agent a listener turn in random order
// against a uniformly drawn distinct speaker; lambdas start i.i.d. U[0,1].
class GameWorld {
public:
    GameWorld(std::size_t population_size, ElementDistribution distribution, double reliability,
              double learning_rate, std::uint64_t seed);

    void step();
    void run(std::size_t timesteps);

    const std::vector<Agent>& agents() const { return agents_; }
    std::vector<double> lambdas() const;
    PopulationStats stats() const;

    std::size_t timestep() const { return timestep_; }
    double reliability() const { return reliability_; }
    double learning_rate() const { return learning_rate_; }
    const ElementDistribution& distribution() const { return distribution_; }

private:
    ElementDistribution distribution_;
    double reliability_;
    double learning_rate_;
    std::vector<Agent> agents_;
    std::vector<std::uint32_t> order_;
    std::mt19937_64 rng_;
    std::size_t timestep_ = 0;
};

// Monte Carlo estimate of the chance that a sampled element's clamped update
// target is at least lambda; elements with no defined target count as
// non-negative moves. At reliability 1 this is P(s1 >= s2).
double positive_region_probability(const ElementDistribution& distribution, double lambda,
                                   double reliability, std::size_t samples, std::uint64_t seed);

// Limit of the expected lambda at reliability 1: P(s1 >= s2) under the best
// assertion, where s_i folds x_i to max(x_i, 1 - x_i). Integrated exactly
// over the piecewise-uniform folded distributions.
double predicted_fixed_point(const ElementDistribution& distribution);

}  // namespace labelsem
