#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "labelsem/combination.hpp"
#include "labelsem/errors.hpp"
#include "labelsem/experiment.hpp"
#include "labelsem/game.hpp"
#include "labelsem/verify.hpp"

namespace {

using labelsem::ConfigError;
using nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot read file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Empty path means stdout.
void write_output(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot write file: " + path);
    out << text;
    if (!out) throw ConfigError("cannot write file: " + path);
}

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("input is not valid JSON: ") + e.what());
    }
}

void expect_keys(const json& j, std::initializer_list<const char*> allowed,
                 const char* where) {
    for (const auto& [key, value] : j.items()) {
        (void)value;
        bool known = false;
        for (const char* k : allowed) {
            if (key == k) {
                known = true;
                break;
            }
        }
        if (!known) {
            throw ConfigError(std::string("unknown field in ") + where + ": " + key);
        }
    }
}

double number_at(const json& j, const char* field) {
    if (!j.is_number()) throw ConfigError(std::string(field) + " must be a number");
    return j.get<double>();
}

std::vector<double> number_array(const json& j, const char* field) {
    if (!j.is_array() || j.empty()) {
        throw ConfigError(std::string(field) + " must be a nonempty array of numbers");
    }
    std::vector<double> out;
    out.reserve(j.size());
    for (const auto& item : j) out.push_back(number_at(item, field));
    return out;
}

labelsem::Sign parse_sign(const json& j) {
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (s == "positive" || s == "+") return labelsem::Sign::positive;
        if (s == "negative" || s == "-") return labelsem::Sign::negative;
    }
    throw ConfigError("sign must be \"positive\" or \"negative\"");
}

labelsem::SignedLabel parse_signed_label(const json& j) {
    if (!j.is_object()) throw ConfigError("each label must be an object");
    expect_keys(j, {"sign", "prototype", "threshold"}, "label");
    if (!j.contains("prototype") || !j.contains("threshold")) {
        throw ConfigError("each label needs prototype and threshold");
    }
    const auto prototype = number_array(j.at("prototype"), "prototype");
    const double upper = number_at(j.at("threshold"), "threshold");
    labelsem::Sign sign = labelsem::Sign::positive;
    if (j.contains("sign")) sign = parse_sign(j.at("sign"));
    return {labelsem::Label(prototype, labelsem::ThresholdDistribution::uniform(upper)), sign};
}

labelsem::CompositeConcept parse_composite(const json& j, const char* where,
                                           bool strict_keys = true) {
    if (!j.is_object()) throw ConfigError(std::string(where) + " must be an object");
    if (strict_keys) expect_keys(j, {"type", "weights", "labels"}, where);
    if (!j.contains("weights") || !j.contains("labels")) {
        throw ConfigError(std::string(where) + " needs weights and labels");
    }
    labelsem::WeightVector weights(number_array(j.at("weights"), "weights"));
    if (!j.at("labels").is_array()) throw ConfigError("labels must be an array");
    std::vector<labelsem::SignedLabel> labels;
    for (const auto& item : j.at("labels")) labels.push_back(parse_signed_label(item));
    return {std::move(labels), std::move(weights)};
}

std::vector<std::vector<double>> parse_points(const json& j, const char* field) {
    if (!j.is_array()) throw ConfigError(std::string(field) + " must be an array of points");
    std::vector<std::vector<double>> points;
    for (const auto& item : j) points.push_back(number_array(item, field));
    return points;
}

// Positive-sign memberships for a composite, from either an explicit
// memberships array or per-label element points.
std::vector<double> composite_inputs(const labelsem::CompositeConcept& composite,
                                     const json& spec, const char* where) {
    if (spec.contains("memberships")) {
        return number_array(spec.at("memberships"), "memberships");
    }
    if (spec.contains("element")) {
        return composite.label_memberships(parse_points(spec.at("element"), "element"));
    }
    throw ConfigError(std::string(where) + " needs element points or memberships");
}

json evaluate_composite(const json& j) {
    expect_keys(j, {"type", "weights", "labels", "element", "memberships"}, "concept");
    const auto composite = parse_composite(j, "concept", false);
    const auto m = composite_inputs(composite, j, "concept");
    json out;
    out["type"] = "composite";
    out["label_memberships"] = m;
    out["membership"] = composite.membership(m);
    return out;
}

json evaluate_compound(const json& j) {
    expect_keys(j, {"type", "pair_weights", "left", "right", "element", "memberships"},
                "concept");
    if (!j.contains("pair_weights") || !j.contains("left") || !j.contains("right")) {
        throw ConfigError("compound concept needs pair_weights, left and right");
    }
    const auto pair = number_array(j.at("pair_weights"), "pair_weights");
    if (pair.size() != 2) throw ConfigError("pair_weights must hold exactly two numbers");
    const labelsem::CompoundConcept compound(parse_composite(j.at("left"), "left"),
                                             parse_composite(j.at("right"), "right"), pair[0],
                                             pair[1]);

    json sides;
    if (j.contains("element")) {
        sides = j.at("element");
    } else if (j.contains("memberships")) {
        sides = j.at("memberships");
    } else {
        throw ConfigError("compound concept needs element points or memberships");
    }
    if (!sides.is_object()) {
        throw ConfigError("compound element/memberships must be an object with left and right");
    }
    expect_keys(sides, {"left", "right"}, "element");
    if (!sides.contains("left") || !sides.contains("right")) {
        throw ConfigError("compound element/memberships must hold left and right");
    }

    const bool from_points = j.contains("element");
    const auto left_m = from_points ? compound.left().label_memberships(
                                          parse_points(sides.at("left"), "left element"))
                                    : number_array(sides.at("left"), "left memberships");
    const auto right_m = from_points ? compound.right().label_memberships(
                                           parse_points(sides.at("right"), "right element"))
                                     : number_array(sides.at("right"), "right memberships");

    const double mu_left = compound.left().membership(left_m);
    const double mu_right = compound.right().membership(right_m);

    json out;
    out["type"] = "compound";
    out["left_membership"] = mu_left;
    out["right_membership"] = mu_right;
    out["membership"] = compound.membership(mu_left, mu_right);
    try {
        out["flatten_coefficients"] = compound.flatten();
    } catch (const labelsem::UnsupportedStructureError&) {
        // Two-level value stands on its own when no flat form exists.
    }
    return out;
}

int run_combine(const std::string& config_path, const std::string& out_path) {
    const json j = parse_json(read_file(config_path));
    if (!j.is_object()) throw ConfigError("concept description must be a JSON object");
    std::string type = "composite";
    if (j.contains("type")) {
        if (!j.at("type").is_string()) throw ConfigError("type must be a string");
        type = j.at("type").get<std::string>();
    }
    json out;
    if (type == "composite") {
        out = evaluate_composite(j);
    } else if (type == "compound") {
        out = evaluate_compound(j);
    } else {
        throw ConfigError("type must be \"composite\" or \"compound\"");
    }
    write_output(out_path, out.dump(2) + "\n");
    return 0;
}

int run_simulate(const std::string& config_path, const std::string& out_path,
                 std::optional<std::uint64_t> seed, std::size_t thin) {
    auto cfg = labelsem::load_config(config_path);
    if (seed) cfg.master_seed = *seed;
    const auto records = labelsem::run_sweep(cfg, thin);
    write_output(out_path, labelsem::to_csv(records));
    return 0;
}

labelsem::ElementDistribution distribution_from_config(const std::string& config_path) {
    const json j = parse_json(read_file(config_path));
    if (!j.is_object() || !j.contains("element_distribution")) {
        throw ConfigError("config needs an element_distribution field");
    }
    // A full experiment config is accepted; extra fields go through the
    // experiment parser so typos are still caught.
    if (j.size() > 1) {
        const auto cfg = labelsem::config_from_json(j.dump());
        return labelsem::ElementDistribution(cfg.element_distribution);
    }
    const auto& dist = j.at("element_distribution");
    if (!dist.is_array() || dist.size() != 2) {
        throw ConfigError("element_distribution must be an array of two [low, high] pairs");
    }
    std::vector<labelsem::ElementDistribution::Interval> ranges;
    for (const auto& pair : dist) {
        const auto bounds = number_array(pair, "element_distribution");
        if (bounds.size() != 2) {
            throw ConfigError("element_distribution must be an array of two [low, high] pairs");
        }
        ranges.emplace_back(bounds[0], bounds[1]);
    }
    return labelsem::ElementDistribution(ranges);
}

int run_fixed_point(const std::string& config_path, const std::string& out_path,
                    std::uint64_t seed, std::size_t samples, double lambda, double reliability) {
    const auto dist = distribution_from_config(config_path);
    const double predicted = labelsem::predicted_fixed_point(dist);
    const double estimated =
        labelsem::positive_region_probability(dist, lambda, reliability, samples, seed);
    char buf[128];
    std::snprintf(buf, sizeof buf, "predicted_fixed_point %.17g\nmonte_carlo_p_plus %.17g\n",
                  predicted, estimated);
    write_output(out_path, buf);
    return 0;
}

int run_verify(std::uint64_t seed) {
    const auto results = labelsem::run_verification(seed);
    bool all_passed = true;
    for (const auto& r : results) {
        std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << " (" << r.detail << ")\n";
        all_passed = all_passed && r.passed;
    }
    return all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Label-semantics concept combination and language-game experiments"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_path;
    std::optional<std::uint64_t> seed_override;
    std::size_t thin = 10;
    std::uint64_t seed = 0;
    std::size_t samples = 1000000;
    double lambda = 0.5;
    double reliability = 1.0;

    auto* combine = app.add_subcommand("combine", "Evaluate a concept membership from JSON");
    combine->add_option("--config", config_path, "Concept description (JSON)")->required();
    combine->add_option("--out", out_path, "Output path (default stdout)");

    auto* simulate = app.add_subcommand("simulate", "Run a reliability sweep, write CSV");
    simulate->add_option("--config", config_path, "Experiment config (JSON)")->required();
    simulate->add_option("--out", out_path, "Output path (default stdout)");
    simulate->add_option("--seed", seed_override, "Master seed override");
    simulate->add_option("--thin", thin, "Record every K timesteps")->default_val(10);

    auto* fixed_point = app.add_subcommand(
        "fixed-point", "Predicted fixed point and Monte Carlo estimate for a distribution");
    fixed_point->add_option("--config", config_path, "Config with element_distribution (JSON)")
        ->required();
    fixed_point->add_option("--out", out_path, "Output path (default stdout)");
    fixed_point->add_option("--seed", seed, "Monte Carlo seed");
    fixed_point->add_option("--samples", samples, "Monte Carlo sample count");
    fixed_point->add_option("--lambda", lambda, "Current dimension weight");
    fixed_point->add_option("--w", reliability, "Speaker reliability");

    auto* verify = app.add_subcommand("verify", "Run the oracle-equivalence suites");
    verify->add_option("--seed", seed, "Suite seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(combine)) return run_combine(config_path, out_path);
        if (app.got_subcommand(simulate)) {
            return run_simulate(config_path, out_path, seed_override, thin);
        }
        if (app.got_subcommand(fixed_point)) {
            return run_fixed_point(config_path, out_path, seed, samples, lambda, reliability);
        }
        if (app.got_subcommand(verify)) return run_verify(seed);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
