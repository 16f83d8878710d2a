#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "labelsem/game.hpp"

namespace labelsem {

struct ExperimentConfig {
    std::size_t population_size = 10;
    std::size_t timesteps = 2000;
    std::size_t replicates = 25;
    std::vector<double> reliability_values;
    std::vector<ElementDistribution::Interval> element_distribution;
    double learning_rate = 1e-3;
    std::uint64_t master_seed = 0;
};

// Throws ConfigError naming the offending field.
void validate(const ExperimentConfig& cfg);

// Parses a JSON object whose keys are the ExperimentConfig field names in
// lower_snake_case. Unknown keys and wrong types are errors; fields with
// defaults may be omitted, reliability_values and element_distribution may
// not. The result is validated.
ExperimentConfig config_from_json(const std::string& text);

ExperimentConfig load_config(const std::string& path);

struct RunRecord {
    double reliability = 0.0;
    std::size_t replicate = 0;
    std::size_t timestep = 0;
    double mean_lambda = 0.0;
    double sd_lambda = 0.0;

    bool operator==(const RunRecord&) const = default;
};

// Runs one independently seeded world per (reliability, replicate) cell and
// records population statistics at timestep 0, at every multiple of `thin`,
// and at the final timestep. Deterministic for a fixed config.
std::vector<RunRecord> run_sweep(const ExperimentConfig& cfg, std::size_t thin = 1);

struct SummaryRow {
    double reliability = 0.0;
    double mean_final_lambda = 0.0;
    double mean_final_sd = 0.0;
};

// Per-reliability means, over replicates, of the final-timestep mean lambda
// and SD. Row order of the input does not matter; output is sorted by
// reliability.
std::vector<SummaryRow> summarize(std::span<const RunRecord> records);

// Header `w,replicate,timestep,mean_lambda,sd_lambda`, one row per record,
// reals with 17 significant digits so equal runs emit equal bytes.
std::string to_csv(std::span<const RunRecord> records);

}  // namespace labelsem
