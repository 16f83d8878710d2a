#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "labelsem/combination.hpp"
#include "labelsem/errors.hpp"
#include "labelsem/experiment.hpp"
#include "labelsem/game.hpp"
#include "labelsem/seeding.hpp"
#include "labelsem/semantics.hpp"
#include "labelsem/verify.hpp"

namespace py = pybind11;

using namespace labelsem;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Label-semantics concept combination and the two-label language game";

    py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
    py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);
    py::register_exception<UnsupportedStructureError>(m, "UnsupportedStructureError",
                                                      PyExc_RuntimeError);

    py::enum_<Sign>(m, "Sign")
        .value("positive", Sign::positive)
        .value("negative", Sign::negative);

    py::class_<ThresholdDistribution>(m, "ThresholdDistribution")
        .def_static("uniform", &ThresholdDistribution::uniform, py::arg("upper"))
        .def("survival", &ThresholdDistribution::survival, py::arg("distance"))
        .def_property_readonly("upper", &ThresholdDistribution::upper);

    py::class_<Label>(m, "Label")
        .def(py::init<std::vector<double>, ThresholdDistribution>(), py::arg("prototype"),
             py::arg("threshold"))
        .def(
            "appropriateness",
            [](const Label& label, const std::vector<double>& x) {
                return label.appropriateness(x);
            },
            py::arg("x"))
        .def_property_readonly("prototype", &Label::prototype)
        .def_property_readonly("dimension", &Label::dimension);

    m.def("signed_value", &signed_value, py::arg("sign"), py::arg("membership"));

    m.def(
        "weighted_hamming",
        [](std::vector<double> weights, const std::vector<std::uint8_t>& x,
           const std::vector<std::uint8_t>& y) {
            return weighted_hamming(WeightVector(std::move(weights)), x, y);
        },
        py::arg("weights"), py::arg("x"), py::arg("y"));

    m.def(
        "composite_membership",
        [](std::vector<double> weights, const std::vector<Sign>& signs,
           const std::vector<double>& memberships) {
            return composite_membership(WeightVector(std::move(weights)), signs, memberships);
        },
        py::arg("weights"), py::arg("signs"), py::arg("memberships"));

    m.def(
        "binary_oracle",
        [](const std::vector<std::uint8_t>& prototype_bits, std::vector<double> weights,
           const std::vector<double>& bit_probs, int enumeration_cap) {
            return binary_oracle(prototype_bits, WeightVector(std::move(weights)), bit_probs,
                                 enumeration_cap);
        },
        py::arg("prototype_bits"), py::arg("weights"), py::arg("bit_probs"),
        py::arg("enumeration_cap") = kDefaultEnumerationCap);

    m.def("compound_membership", &compound_membership, py::arg("weight_left"),
          py::arg("weight_right"), py::arg("mu_left"), py::arg("mu_right"));

    m.def(
        "flatten_coefficients",
        [](double weight_left, double weight_right, std::vector<double> left,
           std::vector<double> right) {
            return flatten_coefficients(weight_left, weight_right,
                                        WeightVector(std::move(left)),
                                        WeightVector(std::move(right)));
        },
        py::arg("weight_left"), py::arg("weight_right"), py::arg("left_weights"),
        py::arg("right_weights"));

    py::class_<ElementDistribution>(m, "ElementDistribution")
        .def(py::init<std::vector<ElementDistribution::Interval>>(), py::arg("ranges"))
        .def_property_readonly("ranges", &ElementDistribution::ranges)
        .def_property_readonly("dimension", &ElementDistribution::dimension);

    py::class_<PopulationStats>(m, "PopulationStats")
        .def_readonly("mean", &PopulationStats::mean)
        .def_readonly("sd", &PopulationStats::sd)
        .def("__repr__", [](const PopulationStats& s) {
            return "PopulationStats(mean=" + std::to_string(s.mean) +
                   ", sd=" + std::to_string(s.sd) + ")";
        });

    m.def(
        "population_stats",
        [](const std::vector<double>& lambdas) { return population_stats(lambdas); },
        py::arg("lambdas"));

    m.def("assertion_value",
          py::overload_cast<double, double, double>(&assertion_value), py::arg("lambda_"),
          py::arg("s1"), py::arg("s2"));

    m.def("update_target", &update_target, py::arg("reliability"), py::arg("s1"), py::arg("s2"));

    py::class_<GameWorld>(m, "GameWorld")
        .def(py::init<std::size_t, ElementDistribution, double, double, std::uint64_t>(),
             py::arg("population_size"), py::arg("distribution"), py::arg("reliability"),
             py::arg("learning_rate"), py::arg("seed"))
        .def("step", &GameWorld::step)
        .def("run", &GameWorld::run, py::arg("timesteps"))
        .def("lambdas", &GameWorld::lambdas)
        .def("stats", &GameWorld::stats)
        .def_property_readonly("timestep", &GameWorld::timestep)
        .def_property_readonly("reliability", &GameWorld::reliability)
        .def_property_readonly("learning_rate", &GameWorld::learning_rate);

    m.def("positive_region_probability", &positive_region_probability, py::arg("distribution"),
          py::arg("lambda_"), py::arg("reliability"), py::arg("samples"), py::arg("seed"));

    m.def("predicted_fixed_point", &predicted_fixed_point, py::arg("distribution"));

    py::class_<ExperimentConfig>(m, "ExperimentConfig")
        .def(py::init<>())
        .def_readwrite("population_size", &ExperimentConfig::population_size)
        .def_readwrite("timesteps", &ExperimentConfig::timesteps)
        .def_readwrite("replicates", &ExperimentConfig::replicates)
        .def_readwrite("reliability_values", &ExperimentConfig::reliability_values)
        .def_readwrite("element_distribution", &ExperimentConfig::element_distribution)
        .def_readwrite("learning_rate", &ExperimentConfig::learning_rate)
        .def_readwrite("master_seed", &ExperimentConfig::master_seed);

    m.def("validate_config", &validate, py::arg("config"));
    m.def("config_from_json", &config_from_json, py::arg("text"));
    m.def("load_config", &load_config, py::arg("path"));

    py::class_<RunRecord>(m, "RunRecord")
        .def_readonly("reliability", &RunRecord::reliability)
        .def_readonly("replicate", &RunRecord::replicate)
        .def_readonly("timestep", &RunRecord::timestep)
        .def_readonly("mean_lambda", &RunRecord::mean_lambda)
        .def_readonly("sd_lambda", &RunRecord::sd_lambda)
        .def("__repr__", [](const RunRecord& r) {
            return "RunRecord(w=" + std::to_string(r.reliability) +
                   ", replicate=" + std::to_string(r.replicate) +
                   ", timestep=" + std::to_string(r.timestep) + ")";
        });

    py::class_<SummaryRow>(m, "SummaryRow")
        .def_readonly("reliability", &SummaryRow::reliability)
        .def_readonly("mean_final_lambda", &SummaryRow::mean_final_lambda)
        .def_readonly("mean_final_sd", &SummaryRow::mean_final_sd);

    m.def(
        "run_sweep",
        [](const ExperimentConfig& cfg, std::size_t thin) { return run_sweep(cfg, thin); },
        py::arg("config"), py::arg("thin") = 1);

    m.def(
        "summarize",
        [](const std::vector<RunRecord>& records) { return summarize(records); },
        py::arg("records"));

    m.def(
        "to_csv", [](const std::vector<RunRecord>& records) { return to_csv(records); },
        py::arg("records"));

    m.def("child_seed", &child_seed, py::arg("master_seed"), py::arg("reliability_index"),
          py::arg("replicate_index"));

    py::class_<CheckResult>(m, "CheckResult")
        .def_readonly("name", &CheckResult::name)
        .def_readonly("passed", &CheckResult::passed)
        .def_readonly("detail", &CheckResult::detail);

    m.def("run_verification", &run_verification, py::arg("seed"));
}
