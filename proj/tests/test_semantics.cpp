#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "labelsem/errors.hpp"
#include "labelsem/seeding.hpp"
#include "labelsem/semantics.hpp"

using namespace labelsem;

namespace {

// Survival by numerical integration of the uniform density over [d, inf),
// independent of the closed form under test.
double survival_by_quadrature(double d, double upper) {
    const int bins = 200000;
    const double lo = std::clamp(d, 0.0, upper);
    const double width = upper - lo;
    double mass = 0.0;
    for (int i = 0; i < bins; ++i) {
        const double eps = lo + (i + 0.5) * width / bins;
        if (eps >= d) mass += 1.0 / upper;
    }
    return mass * width / bins;
}

}  // namespace

TEST_SUITE("semantics") {

TEST_CASE("uniform survival matches its defining integral") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const double upper = 0.2 + 3.0 * uniform01(rng);
        const auto dist = ThresholdDistribution::uniform(upper);
        const double d = -0.5 + 2.0 * upper * uniform01(rng);
        CHECK(dist.survival(d) == doctest::Approx(survival_by_quadrature(d, upper)).epsilon(1e-4));
    }
}

TEST_CASE("survival endpoints and shape") {
    const auto dist = ThresholdDistribution::uniform(1.0);
    CHECK(dist.survival(0.0) == 1.0);
    CHECK(dist.survival(-3.0) == 1.0);
    CHECK(dist.survival(1.0) == 0.0);
    CHECK(dist.survival(7.0) == 0.0);
    CHECK(dist.survival(0.25) == doctest::Approx(0.75));

    std::mt19937_64 rng(12);
    std::vector<double> ds(100);
    for (auto& d : ds) d = -0.2 + 1.6 * uniform01(rng);
    std::sort(ds.begin(), ds.end());
    for (std::size_t i = 1; i < ds.size(); ++i) {
        CHECK(dist.survival(ds[i]) <= dist.survival(ds[i - 1]));
    }
}

TEST_CASE("threshold bound must be positive and finite") {
    CHECK_THROWS_AS(ThresholdDistribution::uniform(0.0), InputError);
    CHECK_THROWS_AS(ThresholdDistribution::uniform(-1.0), InputError);
    CHECK_THROWS_AS(ThresholdDistribution::uniform(1.0 / 0.0), InputError);
}

TEST_CASE("euclidean distance") {
    const std::vector<double> a{0.0, 3.0};
    const std::vector<double> b{4.0, 0.0};
    CHECK(distance(Metric::euclidean, a, b) == doctest::Approx(5.0));
    CHECK(distance(Metric::euclidean, a, a) == 0.0);
    const std::vector<double> c{1.0};
    CHECK_THROWS_AS(distance(Metric::euclidean, a, c), InputError);
}

TEST_CASE("appropriateness of the unit label") {
    const Label label({1.0}, ThresholdDistribution::uniform(1.0));
    const std::vector<double> at_prototype{1.0};
    CHECK(label.appropriateness(at_prototype) == 1.0);
    const std::vector<double> x{0.3};
    CHECK(label.appropriateness(x) == doctest::Approx(0.3));

    const Label narrow({1.0}, ThresholdDistribution::uniform(0.5));
    CHECK(narrow.appropriateness(x) == 0.0);
}

TEST_CASE("appropriateness stays in range and peaks at the prototype") {
    std::mt19937_64 rng(13);
    const Label label({0.3, 0.7, 0.1}, ThresholdDistribution::uniform(0.8));
    CHECK(label.appropriateness(label.prototype()) == 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        const std::vector<double> x{uniform01(rng) * 3 - 1, uniform01(rng) * 3 - 1,
                                    uniform01(rng) * 3 - 1};
        const double mu = label.appropriateness(x);
        CHECK(mu >= 0.0);
        CHECK(mu <= 1.0);
    }
}

TEST_CASE("appropriateness is nonincreasing in prototype distance") {
    std::mt19937_64 rng(14);
    const Label label({0.5, 0.5}, ThresholdDistribution::uniform(0.6));
    struct Sample {
        double d;
        double mu;
    };
    std::vector<Sample> samples;
    for (int trial = 0; trial < 300; ++trial) {
        const std::vector<double> x{2.0 * uniform01(rng) - 0.5, 2.0 * uniform01(rng) - 0.5};
        samples.push_back(
            {distance(Metric::euclidean, x, label.prototype()), label.appropriateness(x)});
    }
    std::sort(samples.begin(), samples.end(),
              [](const Sample& a, const Sample& b) { return a.d < b.d; });
    for (std::size_t i = 1; i < samples.size(); ++i) {
        CHECK(samples[i].mu <= samples[i - 1].mu + 1e-15);
    }
}

TEST_CASE("dimension mismatch is rejected") {
    const Label label({1.0, 0.0}, ThresholdDistribution::uniform(1.0));
    const std::vector<double> x{0.5};
    CHECK_THROWS_AS(label.appropriateness(x), InputError);
    CHECK_THROWS_AS(Label({}, ThresholdDistribution::uniform(1.0)), InputError);
}

TEST_CASE("signed memberships complement to exactly one") {
    std::mt19937_64 rng(15);
    for (int trial = 0; trial < 1000; ++trial) {
        const double mu = uniform01(rng);
        CHECK(signed_value(Sign::positive, mu) + signed_value(Sign::negative, mu) == 1.0);
    }
    CHECK(signed_value(Sign::positive, 0.3) == 0.3);
    CHECK(signed_value(Sign::negative, 0.3) == doctest::Approx(0.7));
}

TEST_CASE("signed membership at and away from the prototype") {
    const Label label({1.0}, ThresholdDistribution::uniform(1.0));
    const std::vector<double> at{1.0};
    CHECK(signed_membership({label, Sign::positive}, at) == 1.0);
    CHECK(signed_membership({label, Sign::negative}, at) == 0.0);
    const std::vector<double> x{0.3};
    CHECK(signed_membership({label, Sign::negative}, x) == doctest::Approx(0.7));
}

}  // TEST_SUITE
