#include "labelsem/experiment.hpp"

#include <array>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "labelsem/errors.hpp"
#include "labelsem/seeding.hpp"

namespace labelsem {

namespace {

std::size_t count_field(const nlohmann::json& value, const char* field, std::size_t minimum) {
    if (!value.is_number_unsigned()) {
        throw ConfigError(std::string(field) + " must be a nonnegative integer");
    }
    const auto v = value.get<std::uint64_t>();
    if (v < minimum) {
        throw ConfigError(std::string(field) + " must be at least " + std::to_string(minimum));
    }
    return static_cast<std::size_t>(v);
}

double real_field(const nlohmann::json& value, const char* field) {
    if (!value.is_number()) throw ConfigError(std::string(field) + " must be a number");
    return value.get<double>();
}

}  // namespace

void validate(const ExperimentConfig& cfg) {
    if (cfg.population_size < 2) throw ConfigError("population_size must be at least 2");
    if (cfg.replicates < 1) throw ConfigError("replicates must be at least 1");
    if (cfg.reliability_values.empty()) {
        throw ConfigError("reliability_values must not be empty");
    }
    for (const double w : cfg.reliability_values) {
        if (!(w >= 0.0 && w <= 1.0)) {
            throw ConfigError("reliability_values must lie in [0,1]");
        }
    }
    if (cfg.element_distribution.size() != 2) {
        throw ConfigError("element_distribution must hold exactly two interval pairs");
    }
    for (const auto& [lo, hi] : cfg.element_distribution) {
        if (!(lo >= 0.0 && lo < hi && hi <= 1.0)) {
            throw ConfigError("element_distribution intervals must satisfy 0 <= low < high <= 1");
        }
    }
    if (!(cfg.learning_rate >= 0.0 && cfg.learning_rate <= 1.0)) {
        throw ConfigError("learning_rate must lie in [0,1]");
    }
}

ExperimentConfig config_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError("config must be a JSON object");

    ExperimentConfig cfg;
    bool saw_reliability = false;
    bool saw_distribution = false;
    for (const auto& [key, value] : j.items()) {
        if (key == "population_size") {
            cfg.population_size = count_field(value, "population_size", 2);
        } else if (key == "timesteps") {
            cfg.timesteps = count_field(value, "timesteps", 0);
        } else if (key == "replicates") {
            cfg.replicates = count_field(value, "replicates", 1);
        } else if (key == "reliability_values") {
            if (!value.is_array() || value.empty()) {
                throw ConfigError("reliability_values must be a nonempty array");
            }
            cfg.reliability_values.clear();
            for (const auto& item : value) {
                cfg.reliability_values.push_back(real_field(item, "reliability_values"));
            }
            saw_reliability = true;
        } else if (key == "element_distribution") {
            if (!value.is_array() || value.size() != 2) {
                throw ConfigError("element_distribution must be an array of two [low, high] pairs");
            }
            cfg.element_distribution.clear();
            for (const auto& pair : value) {
                if (!pair.is_array() || pair.size() != 2) {
                    throw ConfigError(
                        "element_distribution must be an array of two [low, high] pairs");
                }
                cfg.element_distribution.emplace_back(real_field(pair[0], "element_distribution"),
                                                      real_field(pair[1], "element_distribution"));
            }
            saw_distribution = true;
        } else if (key == "learning_rate") {
            cfg.learning_rate = real_field(value, "learning_rate");
        } else if (key == "master_seed") {
            if (!value.is_number_unsigned()) {
                throw ConfigError("master_seed must be a nonnegative integer");
            }
            cfg.master_seed = value.get<std::uint64_t>();
        } else {
            throw ConfigError("unknown config field: " + key);
        }
    }
    if (!saw_reliability) throw ConfigError("reliability_values is required");
    if (!saw_distribution) throw ConfigError("element_distribution is required");
    validate(cfg);
    return cfg;
}

ExperimentConfig load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot read config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return config_from_json(buf.str());
}

std::vector<RunRecord> run_sweep(const ExperimentConfig& cfg, std::size_t thin) {
    validate(cfg);
    if (thin == 0) throw InputError("thinning interval must be at least 1");
    const ElementDistribution dist(cfg.element_distribution);

    std::vector<RunRecord> records;
    for (std::size_t wi = 0; wi < cfg.reliability_values.size(); ++wi) {
        const double w = cfg.reliability_values[wi];
        for (std::size_t rep = 0; rep < cfg.replicates; ++rep) {
            GameWorld world(cfg.population_size, dist, w, cfg.learning_rate,
                            child_seed(cfg.master_seed, wi, rep));
            const auto record = [&] {
                const auto st = world.stats();
                records.push_back({w, rep, world.timestep(), st.mean, st.sd});
            };
            record();
            while (world.timestep() < cfg.timesteps) {
                world.step();
                if (world.timestep() % thin == 0 || world.timestep() == cfg.timesteps) {
                    record();
                }
            }
        }
    }
    return records;
}

std::vector<SummaryRow> summarize(std::span<const RunRecord> records) {
    if (records.empty()) throw InputError("summarize needs at least one record");

    // Final row per (reliability, replicate) cell.
    std::map<std::pair<double, std::size_t>, RunRecord> finals;
    for (const auto& r : records) {
        const auto key = std::make_pair(r.reliability, r.replicate);
        auto [it, inserted] = finals.try_emplace(key, r);
        if (!inserted && r.timestep > it->second.timestep) it->second = r;
    }

    std::map<double, std::array<double, 3>> acc;
    for (const auto& [key, rec] : finals) {
        auto& a = acc[key.first];
        a[0] += rec.mean_lambda;
        a[1] += rec.sd_lambda;
        a[2] += 1.0;
    }

    std::vector<SummaryRow> out;
    out.reserve(acc.size());
    for (const auto& [w, a] : acc) {
        out.push_back({w, a[0] / a[2], a[1] / a[2]});
    }
    return out;
}

std::string to_csv(std::span<const RunRecord> records) {
    std::string out = "w,replicate,timestep,mean_lambda,sd_lambda\n";
    char buf[128];
    for (const auto& r : records) {
        std::snprintf(buf, sizeof buf, "%.17g,%zu,%zu,%.17g,%.17g\n", r.reliability, r.replicate,
                      r.timestep, r.mean_lambda, r.sd_lambda);
        out += buf;
    }
    return out;
}

}  // namespace labelsem
