"""Label-semantics concept combination and the two-label language game."""

from labelsem._core import (
    CheckResult,
    ConfigError,
    ElementDistribution,
    ExperimentConfig,
    GameWorld,
    InputError,
    Label,
    PopulationStats,
    ResourceError,
    RunRecord,
    Sign,
    SummaryRow,
    ThresholdDistribution,
    UnsupportedStructureError,
    assertion_value,
    binary_oracle,
    child_seed,
    composite_membership,
    compound_membership,
    config_from_json,
    flatten_coefficients,
    load_config,
    population_stats,
    positive_region_probability,
    predicted_fixed_point,
    run_sweep,
    run_verification,
    signed_value,
    summarize,
    to_csv,
    update_target,
    validate_config,
    weighted_hamming,
)

__version__ = "0.1.0"

__all__ = [
    "CheckResult",
    "ConfigError",
    "ElementDistribution",
    "ExperimentConfig",
    "GameWorld",
    "InputError",
    "Label",
    "PopulationStats",
    "ResourceError",
    "RunRecord",
    "Sign",
    "SummaryRow",
    "ThresholdDistribution",
    "UnsupportedStructureError",
    "assertion_value",
    "binary_oracle",
    "child_seed",
    "composite_membership",
    "compound_membership",
    "config_from_json",
    "flatten_coefficients",
    "load_config",
    "population_stats",
    "positive_region_probability",
    "predicted_fixed_point",
    "run_sweep",
    "run_verification",
    "signed_value",
    "summarize",
    "to_csv",
    "update_target",
    "validate_config",
    "weighted_hamming",
]
