#include "labelsem/semantics.hpp"

#include <cmath>
#include <utility>

#include "labelsem/errors.hpp"

namespace labelsem {

ThresholdDistribution ThresholdDistribution::uniform(double upper) {
    if (!(upper > 0.0) || !std::isfinite(upper)) {
        throw InputError("threshold upper bound must be a positive finite real");
    }
    return ThresholdDistribution(Family::uniform, upper);
}

double ThresholdDistribution::survival(double d) const {
    if (d <= 0.0) return 1.0;
    if (d >= upper_) return 0.0;
    return 1.0 - d / upper_;
}

double distance(Metric metric, std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) {
        throw InputError("points have different dimensions");
    }
    switch (metric) {
        case Metric::euclidean: {
            double sq = 0.0;
            for (std::size_t i = 0; i < x.size(); ++i) {
                const double d = x[i] - y[i];
                sq += d * d;
            }
            return std::sqrt(sq);
        }
    }
    throw InputError("unknown metric");
}

Label::Label(std::vector<double> prototype, ThresholdDistribution threshold, Metric metric)
    : prototype_(std::move(prototype)), threshold_(threshold), metric_(metric) {
    if (prototype_.empty()) {
        throw InputError("label prototype must have at least one dimension");
    }
}

double Label::appropriateness(std::span<const double> x) const {
    if (x.size() != prototype_.size()) {
        throw InputError("point dimension does not match the label prototype");
    }
    return threshold_.survival(distance(metric_, x, prototype_));
}

double signed_value(Sign sign, double mu) {
    return sign == Sign::positive ? mu : 1.0 - mu;
}

double signed_membership(const SignedLabel& sl, std::span<const double> x) {
    return signed_value(sl.sign, sl.label.appropriateness(x));
}

}  // namespace labelsem
