#include "labelsem/combination.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "labelsem/errors.hpp"

namespace labelsem {

namespace {

void check_bits(std::span<const std::uint8_t> bits) {
    for (const auto b : bits) {
        if (b > 1) throw InputError("bit vectors may only contain 0 or 1");
    }
}

void check_unit_interval(std::span<const double> values, const char* what) {
    for (const double v : values) {
        if (!(v >= 0.0 && v <= 1.0)) {
            throw InputError(std::string(what) + " must lie in [0,1]");
        }
    }
}

}  // namespace

WeightVector::WeightVector(std::vector<double> weights) : weights_(std::move(weights)) {
    if (weights_.empty()) throw InputError("weight vector must not be empty");
    total_ = 0.0;
    for (const double w : weights_) {
        if (!(w > 0.0) || !std::isfinite(w)) {
            throw InputError("weights must be positive finite reals");
        }
        total_ += w;
    }
}

double weighted_hamming(const WeightVector& weights, std::span<const std::uint8_t> x,
                        std::span<const std::uint8_t> y) {
    if (x.size() != weights.size() || y.size() != weights.size()) {
        throw InputError("weighted_hamming: lengths do not agree");
    }
    check_bits(x);
    check_bits(y);
    double h = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] != y[i]) h += weights[i];
    }
    return h;
}

double composite_membership(const WeightVector& weights, std::span<const Sign> signs,
                            std::span<const double> memberships) {
    if (signs.size() != weights.size() || memberships.size() != weights.size()) {
        throw InputError("composite_membership: lengths do not agree");
    }
    check_unit_interval(memberships, "memberships");
    double mu = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        mu += weights[i] / weights.total() * signed_value(signs[i], memberships[i]);
    }
    return mu;
}

double binary_oracle(std::span<const std::uint8_t> prototype_bits, const WeightVector& weights,
                     std::span<const double> bit_probs, int enumeration_cap) {
    const std::size_t n = weights.size();
    if (prototype_bits.size() != n || bit_probs.size() != n) {
        throw InputError("binary_oracle: lengths do not agree");
    }
    check_bits(prototype_bits);
    check_unit_interval(bit_probs, "bit probabilities");
    if (enumeration_cap < 1) throw InputError("enumeration cap must be at least 1");
    if (n > static_cast<std::size_t>(enumeration_cap)) {
        throw ResourceError("binary_oracle: dimension exceeds the enumeration cap");
    }

    const auto threshold = ThresholdDistribution::uniform(weights.total());
    double total = 0.0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        double prob = 1.0;
        double dist = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const std::uint8_t bit = (mask >> i) & 1u;
            prob *= bit ? bit_probs[i] : 1.0 - bit_probs[i];
            if (bit != prototype_bits[i]) dist += weights[i];
        }
        total += prob * threshold.survival(dist);
    }
    return total;
}

CompositeConcept::CompositeConcept(std::vector<SignedLabel> labels, WeightVector weights)
    : labels_(std::move(labels)), weights_(std::move(weights)) {
    if (labels_.size() != weights_.size()) {
        throw InputError("composite concept: one weight per label required");
    }
}

BitVector CompositeConcept::prototype_bits() const {
    BitVector bits(labels_.size());
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        bits[i] = labels_[i].sign == Sign::positive ? 1 : 0;
    }
    return bits;
}

std::vector<Sign> CompositeConcept::signs() const {
    std::vector<Sign> s(labels_.size());
    for (std::size_t i = 0; i < labels_.size(); ++i) s[i] = labels_[i].sign;
    return s;
}

std::vector<double> CompositeConcept::label_memberships(
    std::span<const std::vector<double>> points) const {
    if (points.size() != labels_.size()) {
        throw InputError("composite concept: one point per label required");
    }
    std::vector<double> m(labels_.size());
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        m[i] = labels_[i].label.appropriateness(points[i]);
    }
    return m;
}

double CompositeConcept::membership(std::span<const double> positive_memberships) const {
    const auto s = signs();
    return composite_membership(weights_, s, positive_memberships);
}

double CompositeConcept::membership_at(std::span<const std::vector<double>> points) const {
    const auto m = label_memberships(points);
    return membership(m);
}

double compound_membership(double weight_left, double weight_right, double mu_left,
                           double mu_right) {
    if (!(weight_left > 0.0) || !(weight_right > 0.0)) {
        throw InputError("pair weights must be positive");
    }
    const double pair[] = {mu_left, mu_right};
    check_unit_interval(pair, "memberships");
    return (weight_left * mu_left + weight_right * mu_right) / (weight_left + weight_right);
}

std::vector<double> flatten_coefficients(double weight_left, double weight_right,
                                         const WeightVector& left_weights,
                                         const WeightVector& right_weights) {
    if (!(weight_left > 0.0) || !(weight_right > 0.0)) {
        throw InputError("pair weights must be positive");
    }
    if (left_weights.size() != right_weights.size()) {
        throw UnsupportedStructureError("flatten: weight vectors differ in length");
    }
    const double lt = left_weights.total();
    const double rt = right_weights.total();
    const double wt = weight_left + weight_right;
    std::vector<double> c(left_weights.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        c[i] = (weight_left * rt * left_weights[i] + weight_right * lt * right_weights[i]) /
               (wt * lt * rt);
    }
    return c;
}

CompoundConcept::CompoundConcept(CompositeConcept left, CompositeConcept right,
                                 double weight_left, double weight_right)
    : left_(std::move(left)),
      right_(std::move(right)),
      weight_left_(weight_left),
      weight_right_(weight_right) {
    if (!(weight_left_ > 0.0) || !std::isfinite(weight_left_) || !(weight_right_ > 0.0) ||
        !std::isfinite(weight_right_)) {
        throw InputError("pair weights must be positive finite reals");
    }
}

double CompoundConcept::membership(double mu_left, double mu_right) const {
    return compound_membership(weight_left_, weight_right_, mu_left, mu_right);
}

double CompoundConcept::membership_at(std::span<const std::vector<double>> points) const {
    return membership(left_.membership_at(points), right_.membership_at(points));
}

std::vector<double> CompoundConcept::flatten() const {
    if (left_.size() != right_.size()) {
        throw UnsupportedStructureError("flatten: the two sides have different label counts");
    }
    for (std::size_t i = 0; i < left_.size(); ++i) {
        if (left_.labels()[i].sign != right_.labels()[i].sign) {
            throw UnsupportedStructureError("flatten: the two sides disagree in polarity");
        }
        if (!(left_.labels()[i].label == right_.labels()[i].label)) {
            throw UnsupportedStructureError("flatten: the two sides use different labels");
        }
    }
    return flatten_coefficients(weight_left_, weight_right_, left_.weights(), right_.weights());
}

}  // namespace labelsem
