#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "labelsem/combination.hpp"
#include "labelsem/errors.hpp"
#include "labelsem/seeding.hpp"

using namespace labelsem;

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

std::vector<double> random_unit(std::mt19937_64& rng, std::size_t n) {
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

}  // namespace

TEST_SUITE("combination") {

TEST_CASE("weight vectors reject non-positive entries") {
    CHECK_THROWS_AS(WeightVector({}), InputError);
    CHECK_THROWS_AS(WeightVector({1.0, 0.0}), InputError);
    CHECK_THROWS_AS(WeightVector({1.0, -2.0}), InputError);
    const WeightVector w({1.0, 2.0, 3.0});
    CHECK(w.total() == doctest::Approx(6.0));
    CHECK(w[1] == 2.0);
}

TEST_CASE("weighted hamming distance") {
    const WeightVector w({1.0, 2.0, 3.0});
    CHECK(weighted_hamming(w, BitVector{1, 0, 1}, BitVector{0, 0, 1}) == doctest::Approx(1.0));
    CHECK(weighted_hamming(w, BitVector{1, 0, 1}, BitVector{1, 0, 1}) == 0.0);

    const WeightVector unit({1.0, 1.0});
    CHECK(weighted_hamming(unit, BitVector{1, 1}, BitVector{0, 0}) == doctest::Approx(2.0));

    CHECK_THROWS_AS(weighted_hamming(w, BitVector{1, 0}, BitVector{0, 0, 1}), InputError);
    CHECK_THROWS_AS(weighted_hamming(w, BitVector{1, 0, 2}, BitVector{0, 0, 1}), InputError);

    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + uniform_below(rng, 6);
        const WeightVector weights(random_weights(rng, n));
        BitVector x(n), y(n);
        for (std::size_t i = 0; i < n; ++i) {
            x[i] = static_cast<std::uint8_t>(uniform_below(rng, 2));
            y[i] = static_cast<std::uint8_t>(uniform_below(rng, 2));
        }
        CHECK(weighted_hamming(weights, x, y) == weighted_hamming(weights, y, x));
    }
}

TEST_CASE("composite membership formula") {
    const WeightVector w({0.6, 0.4});
    const std::vector<Sign> pp{Sign::positive, Sign::positive};
    CHECK(composite_membership(w, pp, std::vector<double>{0.5, 1.0}) == doctest::Approx(0.7));
    CHECK(composite_membership(w, pp, std::vector<double>{1.0, 1.0}) == doctest::Approx(1.0));

    // Single label: reduces to the signed membership.
    const WeightVector one({2.7});
    CHECK(composite_membership(one, std::vector<Sign>{Sign::negative},
                               std::vector<double>{0.3}) == doctest::Approx(0.7));

    CHECK_THROWS_AS(
        composite_membership(w, pp, std::vector<double>{0.5, 1.5}), InputError);
    CHECK_THROWS_AS(composite_membership(w, pp, std::vector<double>{0.5}), InputError);
}

TEST_CASE("composite membership is monotone in each input") {
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + uniform_below(rng, 6);
        const WeightVector weights(random_weights(rng, n));
        const auto signs = random_signs(rng, n);
        auto m = random_unit(rng, n);
        const double base = composite_membership(weights, signs, m);
        const std::size_t i = uniform_below(rng, n);
        const double bumped_value = m[i] + (1.0 - m[i]) * uniform01(rng);
        m[i] = bumped_value;
        const double bumped = composite_membership(weights, signs, m);
        if (signs[i] == Sign::positive) {
            CHECK(bumped >= base - 1e-15);
        } else {
            CHECK(bumped <= base + 1e-15);
        }
    }
}

TEST_CASE("binary oracle on hand-checked cases") {
    CHECK(binary_oracle(BitVector{1}, WeightVector({1.0}), std::vector<double>{1.0}) ==
          doctest::Approx(1.0));
    CHECK(binary_oracle(BitVector{1, 1}, WeightVector({1.0, 1.0}),
                        std::vector<double>{0.5, 0.5}) == doctest::Approx(0.5));
}

TEST_CASE("binary oracle refuses oversized enumerations") {
    const std::size_t n = 21;
    const WeightVector w(std::vector<double>(n, 1.0));
    CHECK_THROWS_AS(
        binary_oracle(BitVector(n, 1), w, std::vector<double>(n, 0.5)), ResourceError);
    const WeightVector w5(std::vector<double>(5, 1.0));
    CHECK_THROWS_AS(
        binary_oracle(BitVector(5, 1), w5, std::vector<double>(5, 0.5), 4), ResourceError);
    CHECK_NOTHROW(binary_oracle(BitVector(5, 1), w5, std::vector<double>(5, 0.5), 5));
}

TEST_CASE("composite formula equals exhaustive enumeration") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t n = 1 + uniform_below(rng, 10);
        const WeightVector weights(random_weights(rng, n));
        const auto signs = random_signs(rng, n);
        const auto m = random_unit(rng, n);
        const double direct = composite_membership(weights, signs, m);
        const double oracle = binary_oracle(bits_of(signs), weights, m);
        CHECK(std::abs(direct - oracle) <= 1e-9);
    }
}

TEST_CASE("composite concept wraps labels and weights") {
    const Label near_one({1.0}, ThresholdDistribution::uniform(1.0));
    const Label near_zero({0.0}, ThresholdDistribution::uniform(1.0));
    const CompositeConcept c({{near_one, Sign::positive}, {near_zero, Sign::negative}},
                             WeightVector({0.6, 0.4}));

    CHECK(c.prototype_bits() == BitVector{1, 0});
    CHECK(c.signs() == std::vector<Sign>{Sign::positive, Sign::negative});

    const std::vector<std::vector<double>> points{{0.5}, {1.0}};
    const auto m = c.label_memberships(points);
    CHECK(m[0] == doctest::Approx(0.5));
    CHECK(m[1] == doctest::Approx(0.0));
    // 0.6*0.5 + 0.4*(1-0.0)
    CHECK(c.membership_at(points) == doctest::Approx(0.7));

    CHECK_THROWS_AS(CompositeConcept({{near_one, Sign::positive}}, WeightVector({1.0, 1.0})),
                    InputError);
    CHECK_THROWS_AS(c.label_memberships(std::vector<std::vector<double>>{{0.5}}), InputError);
}

TEST_CASE("compound membership formula") {
    CHECK(compound_membership(1.0, 3.0, 1.0, 0.0) == doctest::Approx(0.25));
    CHECK(compound_membership(1.0, 1.0, 0.4, 0.4) == doctest::Approx(0.4));
    CHECK(compound_membership(2.0, 5.0, 1.0, 1.0) == doctest::Approx(1.0));
    CHECK_THROWS_AS(compound_membership(0.0, 1.0, 0.5, 0.5), InputError);
    CHECK_THROWS_AS(compound_membership(1.0, 1.0, 1.5, 0.5), InputError);
}

TEST_CASE("compound membership agrees with a two-bit enumeration") {
    std::mt19937_64 rng(24);
    for (int trial = 0; trial < 100; ++trial) {
        const double w1 = 0.05 + 2.0 * uniform01(rng);
        const double w2 = 0.05 + 2.0 * uniform01(rng);
        const double mu1 = uniform01(rng);
        const double mu2 = uniform01(rng);
        const double direct = compound_membership(w1, w2, mu1, mu2);
        const double oracle = binary_oracle(BitVector{1, 1}, WeightVector({w1, w2}),
                                            std::vector<double>{mu1, mu2});
        CHECK(std::abs(direct - oracle) <= 1e-12);
    }
}

TEST_CASE("flatten coefficients on hand-checked cases") {
    const auto c = flatten_coefficients(1.0, 1.0, WeightVector({1.0, 1.0}),
                                        WeightVector({3.0, 1.0}));
    REQUIRE(c.size() == 2);
    CHECK(c[0] == doctest::Approx(0.625));
    CHECK(c[1] == doctest::Approx(0.375));

    // Equal sides with equal pair weights collapse to the weight shares.
    const auto shares = flatten_coefficients(2.0, 2.0, WeightVector({1.0, 3.0}),
                                             WeightVector({1.0, 3.0}));
    CHECK(shares[0] == doctest::Approx(0.25));
    CHECK(shares[1] == doctest::Approx(0.75));

    CHECK_THROWS_AS(flatten_coefficients(1.0, 1.0, WeightVector({1.0}),
                                         WeightVector({1.0, 1.0})),
                    UnsupportedStructureError);
}

TEST_CASE("flattened compound equals two-level evaluation") {
    std::mt19937_64 rng(25);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t n = 1 + uniform_below(rng, 8);
        const WeightVector left(random_weights(rng, n));
        const WeightVector right(random_weights(rng, n));
        const auto signs = random_signs(rng, n);
        const auto m = random_unit(rng, n);
        const double w1 = 0.05 + 2.0 * uniform01(rng);
        const double w2 = 0.05 + 2.0 * uniform01(rng);

        const double two_level = compound_membership(
            w1, w2, composite_membership(left, signs, m),
            composite_membership(right, signs, m));

        const auto coeff = flatten_coefficients(w1, w2, left, right);
        double flat = 0.0;
        double coeff_sum = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            flat += coeff[i] * signed_value(signs[i], m[i]);
            coeff_sum += coeff[i];
        }
        CHECK(std::abs(flat - two_level) <= 1e-9);
        CHECK(std::abs(coeff_sum - 1.0) <= 1e-12);
    }
}

TEST_CASE("compound concepts flatten only when structure matches") {
    const Label a({1.0}, ThresholdDistribution::uniform(1.0));
    const Label b({0.0}, ThresholdDistribution::uniform(0.5));

    const CompositeConcept theta({{a, Sign::positive}, {b, Sign::negative}},
                                 WeightVector({1.0, 1.0}));
    const CompositeConcept phi({{a, Sign::positive}, {b, Sign::negative}},
                               WeightVector({3.0, 1.0}));
    const CompoundConcept ok(theta, phi, 1.0, 1.0);
    const auto c = ok.flatten();
    CHECK(c[0] == doctest::Approx(0.625));
    CHECK(c[1] == doctest::Approx(0.375));

    const CompositeConcept flipped({{a, Sign::positive}, {b, Sign::positive}},
                                   WeightVector({3.0, 1.0}));
    CHECK_THROWS_AS(CompoundConcept(theta, flipped, 1.0, 1.0).flatten(),
                    UnsupportedStructureError);

    const CompositeConcept other_label({{a, Sign::positive}, {a, Sign::negative}},
                                       WeightVector({3.0, 1.0}));
    CHECK_THROWS_AS(CompoundConcept(theta, other_label, 1.0, 1.0).flatten(),
                    UnsupportedStructureError);

    CHECK_THROWS_AS(CompoundConcept(theta, phi, -1.0, 1.0), InputError);

    // Mixed-sign compounds still evaluate two-level.
    const CompoundConcept unflattenable(theta, flipped, 1.0, 1.0);
    CHECK(unflattenable.membership(0.5, 0.5) == doctest::Approx(0.5));
}

TEST_CASE("compound evaluation over shared points") {
    const Label unit({1.0}, ThresholdDistribution::uniform(1.0));
    const CompositeConcept theta({{unit, Sign::positive}, {unit, Sign::positive}},
                                 WeightVector({1.0, 1.0}));
    const CompositeConcept phi = theta;
    const CompoundConcept cc(theta, phi, 1.0, 3.0);
    const std::vector<std::vector<double>> points{{0.8}, {0.4}};
    // Both sides evaluate to 0.6, so any pair weighting returns 0.6.
    CHECK(cc.membership_at(points) == doctest::Approx(0.6));
}

}  // TEST_SUITE
