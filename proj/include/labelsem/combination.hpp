#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "labelsem/semantics.hpp"

namespace labelsem {

// Per-dimension positive weights with their cached total.
class WeightVector {
public:
    explicit WeightVector(std::vector<double> weights);

    std::span<const double> values() const { return weights_; }
    double total() const { return total_; }
    std::size_t size() const { return weights_.size(); }
    double operator[](std::size_t i) const { return weights_[i]; }

private:
    std::vector<double> weights_;
    double total_;
};

// Binary vectors carry entries 0 or 1 only.
using BitVector = std::vector<std::uint8_t>;

// Weighted Hamming distance: the weight vector dotted with the per-bit
// disagreement pattern |x - y|.
double weighted_hamming(const WeightVector& weights, std::span<const std::uint8_t> x,
                        std::span<const std::uint8_t> y);

// Membership of a signed conjunction given the positive-sign memberships m_i:
// the weight-normalised sum of (m_i or 1 - m_i) depending on each polarity.
double composite_membership(const WeightVector& weights, std::span<const Sign> signs,
                            std::span<const double> memberships);

inline constexpr int kDefaultEnumerationCap = 20;

// Reference evaluation by exhaustive enumeration of {0,1}^n. Each bit is an
// independent Bernoulli(bit_probs[i]) draw; a realisation is scored as a
// label at prototype_bits under the weighted Hamming metric with a uniform
// threshold on [0, total weight]. Refuses dimensions beyond the cap.
double binary_oracle(std::span<const std::uint8_t> prototype_bits, const WeightVector& weights,
                     std::span<const double> bit_probs,
                     int enumeration_cap = kDefaultEnumerationCap);

// A signed conjunction of labels realised in {0,1}^n: bit i of the prototype
// vector is 1 exactly when label i carries the positive sign.
class CompositeConcept {
public:
    CompositeConcept(std::vector<SignedLabel> labels, WeightVector weights);

    const std::vector<SignedLabel>& labels() const { return labels_; }
    const WeightVector& weights() const { return weights_; }
    std::size_t size() const { return labels_.size(); }

    BitVector prototype_bits() const;
    std::vector<Sign> signs() const;

    // Positive-sign appropriateness of each label at its own point.
    std::vector<double> label_memberships(std::span<const std::vector<double>> points) const;

    double membership(std::span<const double> positive_memberships) const;
    double membership_at(std::span<const std::vector<double>> points) const;

private:
    std::vector<SignedLabel> labels_;
    WeightVector weights_;
};

double compound_membership(double weight_left, double weight_right, double mu_left,
                           double mu_right);

// Per-label coefficients that express a weighted pairing of two composites
// directly over the shared labels. Requires equally long weight vectors; the
// coefficients always sum to one.
std::vector<double> flatten_coefficients(double weight_left, double weight_right,
                                         const WeightVector& left_weights,
                                         const WeightVector& right_weights);

// Two composites paired in a second-level two-bit space with prototype (1,1)
// and positive pair weights.
class CompoundConcept {
public:
    CompoundConcept(CompositeConcept left, CompositeConcept right, double weight_left,
                    double weight_right);

    const CompositeConcept& left() const { return left_; }
    const CompositeConcept& right() const { return right_; }
    double weight_left() const { return weight_left_; }
    double weight_right() const { return weight_right_; }
    double weight_total() const { return weight_left_ + weight_right_; }

    double membership(double mu_left, double mu_right) const;
    double membership_at(std::span<const std::vector<double>> points) const;

    // Per-label coefficients over the shared label sequence; throws
    // UnsupportedStructureError when the two sides disagree in structure or
    // polarity.
    std::vector<double> flatten() const;

private:
    CompositeConcept left_;
    CompositeConcept right_;
    double weight_left_;
    double weight_right_;
};

}  // namespace labelsem
