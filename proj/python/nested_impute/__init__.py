"""Multiple imputation and synthesis for nested household data."""

from ._core import (
    Dataset,
    NestedImputeError,
    RuleSet,
    Schema,
    apply_mcar,
    apply_stress_mechanism,
    cmd_diagnose,
    cmd_evaluate,
    cmd_impute,
    cmd_simulate,
    cmd_synthesize,
    combine_partial_synth,
    combine_rubin,
    count_combinations,
    count_structural_zeros,
    estimate,
    impute,
    simulate_census,
    t_quantile,
)

__all__ = [
    "Dataset",
    "NestedImputeError",
    "RuleSet",
    "Schema",
    "apply_mcar",
    "apply_stress_mechanism",
    "cmd_diagnose",
    "cmd_evaluate",
    "cmd_impute",
    "cmd_simulate",
    "cmd_synthesize",
    "combine_partial_synth",
    "combine_rubin",
    "count_combinations",
    "count_structural_zeros",
    "estimate",
    "impute",
    "simulate_census",
    "t_quantile",
]
