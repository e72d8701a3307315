"""Deterministic Gravitational Search Algorithm with pluggable G0 strategies."""

from .benchmarks import evaluate, function_spec, list_functions
from .config import ExperimentConfig, load_config, parse_config
from .core import (
    Agent,
    GsaConfig,
    IterationRecord,
    RunResult,
    acceleration,
    compute_masses,
    gravitational_constant,
    kbest_size,
    run,
    step,
    update_position,
    update_velocity,
)
from .experiment import run_experiment, split_seed
from .model import (
    ConfigError,
    GsaLabError,
    HeuristicDomainError,
    ProblemSpec,
    RegistryError,
    RunAbortError,
    Sense,
)
from .report import ComparisonTable, SummaryStats, compare_strategies, export, summarize
from .strategies import InitialSnapshot, StrategyKind, StrategySpec, fixed_g0, proposed_g0, select_strategy

__version__ = "0.1.0"

__all__ = [
    "Agent",
    "ComparisonTable",
    "ConfigError",
    "ExperimentConfig",
    "GsaConfig",
    "GsaLabError",
    "HeuristicDomainError",
    "InitialSnapshot",
    "IterationRecord",
    "ProblemSpec",
    "RegistryError",
    "RunAbortError",
    "RunResult",
    "Sense",
    "StrategyKind",
    "StrategySpec",
    "SummaryStats",
    "acceleration",
    "compare_strategies",
    "compute_masses",
    "evaluate",
    "export",
    "fixed_g0",
    "function_spec",
    "gravitational_constant",
    "kbest_size",
    "list_functions",
    "load_config",
    "parse_config",
    "proposed_g0",
    "run",
    "run_experiment",
    "select_strategy",
    "split_seed",
    "step",
    "summarize",
    "update_position",
    "update_velocity",
]
