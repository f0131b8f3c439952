"""Core algorithms: names and substitution, spines, equivalences, reductions, types and the measure."""

from .equivalence import (
    ArgumentIndexError,
    ENormalizationError,
    arg,
    canonical_e_context,
    equivalent,
    head_canonical,
    normalize_e,
    permute_primary_redexes,
    sigma_normal_forms,
)
from .gandy import SemanticError, bottom, bump, collapse, default_valuation, interpret, measure, measure_trace
from .generators import GenerationError, enumerate_terms, gen_e_term, gen_term, gen_typed_term
from .postponement import PostponementError, postpone_garbage
from .reductions import (
    FuelExhaustedError,
    StaleRedexError,
    apply_step,
    default_fuel,
    find_redexes,
    normalize,
    reduce_primary_redexes,
    simulate_beta_by_affine,
)
from .spine import NotAnEContextError, analyze_spine, decompose, eta, head_context, primary_redexes
from .suites import UnknownSuiteError, run_property_suite, suite_names
from .syntax import NameSupply, alpha_eq, apply_env, ensure_distinct_names, free_vars, has_distinct_names, substitute
from .typecheck import TypeCheckError, check_subject_reduction, infer

__all__ = [
    "ArgumentIndexError",
    "ENormalizationError",
    "arg",
    "canonical_e_context",
    "equivalent",
    "head_canonical",
    "normalize_e",
    "permute_primary_redexes",
    "sigma_normal_forms",
    "SemanticError",
    "bottom",
    "bump",
    "collapse",
    "default_valuation",
    "interpret",
    "measure",
    "measure_trace",
    "GenerationError",
    "enumerate_terms",
    "gen_e_term",
    "gen_term",
    "gen_typed_term",
    "PostponementError",
    "postpone_garbage",
    "FuelExhaustedError",
    "StaleRedexError",
    "apply_step",
    "default_fuel",
    "find_redexes",
    "normalize",
    "reduce_primary_redexes",
    "simulate_beta_by_affine",
    "NotAnEContextError",
    "analyze_spine",
    "decompose",
    "eta",
    "head_context",
    "primary_redexes",
    "UnknownSuiteError",
    "run_property_suite",
    "suite_names",
    "NameSupply",
    "alpha_eq",
    "apply_env",
    "ensure_distinct_names",
    "free_vars",
    "has_distinct_names",
    "substitute",
    "TypeCheckError",
    "check_subject_reduction",
    "infer",
]
