#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace labelsem {

enum class Sign { positive, negative };

enum class Metric { euclidean };

// Uncertain distance threshold. Only the uniform family on [0, upper] is
// implemented; survival(d) is the probability that a drawn threshold is at
// least d, so it is 1 at d = 0, nonincreasing, and 0 from d = upper on.
class ThresholdDistribution {
public:
    enum class Family { uniform };

    static ThresholdDistribution uniform(double upper);

    double survival(double distance) const;

    Family family() const { return family_; }
    double upper() const { return upper_; }

    bool operator==(const ThresholdDistribution&) const = default;

private:
    ThresholdDistribution(Family family, double upper) : family_(family), upper_(upper) {}

    Family family_;
    double upper_;
};

double distance(Metric metric, std::span<const double> x, std::span<const double> y);

// A label over a conceptual space: a prototype point, a distance metric and
// an uncertain threshold. A point is described by the label whenever its
// distance to the prototype falls below the drawn threshold, so the
// appropriateness of the label for x is survival(distance(x, prototype)).
class Label {
public:
    Label(std::vector<double> prototype, ThresholdDistribution threshold,
          Metric metric = Metric::euclidean);

    double appropriateness(std::span<const double> x) const;

    const std::vector<double>& prototype() const { return prototype_; }
    const ThresholdDistribution& threshold() const { return threshold_; }
    Metric metric() const { return metric_; }
    std::size_t dimension() const { return prototype_.size(); }

    bool operator==(const Label&) const = default;

private:
    std::vector<double> prototype_;
    ThresholdDistribution threshold_;
    Metric metric_;
};

struct SignedLabel {
    Label label;
    Sign sign = Sign::positive;
};

// mu under a polarity: positive keeps mu, negative complements it.
double signed_value(Sign sign, double mu);

double signed_membership(const SignedLabel& sl, std::span<const double> x);

}  // namespace labelsem
