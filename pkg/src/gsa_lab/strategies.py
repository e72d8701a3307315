"""Strategies that fix the initial gravitational constant G0 for a run.

A strategy is evaluated once per run, right after the initial population has
been sampled and evaluated. It sees the whole :class:`InitialSnapshot` and
returns a finite, strictly positive G0. Strategies consume no random draws.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Callable, Mapping

import numpy as np

from .model import ConfigError, HeuristicDomainError, ProblemSpec


class StrategyKind(str, enum.Enum):
    FIXED_G0 = "FixedG0"
    PROPOSED_HEURISTIC = "ProposedHeuristic"


# Accepted parameter keys per kind; every key is required (no silent defaults).
PARAMS = {
    StrategyKind.FIXED_G0: ("value",),
    StrategyKind.PROPOSED_HEURISTIC: ("fraction",),
}


@dataclass(frozen=True)
class StrategySpec:
    kind: StrategyKind
    params: Mapping[str, float] = field(default_factory=dict)

    @property
    def label(self) -> str:
        return self.kind.value


@dataclass(frozen=True)
class InitialSnapshot:
    spec: ProblemSpec
    positions: np.ndarray  # (N, d)
    fitness: np.ndarray  # (N,)

    def __post_init__(self):
        if self.positions.ndim != 2 or self.positions.shape[1] != self.spec.dimension:
            raise ValueError("positions must have shape (N, d)")
        if self.positions.shape[0] != self.fitness.shape[0]:
            raise ValueError("positions and fitness disagree on N")


def _positive_finite(key: str, value) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float, np.floating, np.integer)):
        raise ConfigError(key, value, "must be a real number")
    value = float(value)
    if not math.isfinite(value) or value <= 0:
        raise ConfigError(key, value, "must be finite and > 0")
    return value


def validate(spec: StrategySpec, prefix: str = "g0") -> StrategySpec:
    """Return a normalized copy of ``spec`` or raise :class:`ConfigError`."""
    try:
        kind = StrategyKind(spec.kind)
    except ValueError:
        raise ConfigError(f"{prefix}.kind", spec.kind, f"unknown strategy kind; expected one of {[k.value for k in StrategyKind]}") from None
    allowed = PARAMS[kind]
    params = dict(spec.params or {})
    for key in params:
        if key not in allowed:
            raise ConfigError(f"{prefix}.params.{key}", params[key], f"unknown parameter for {kind.value}")
    clean = {}
    for key in allowed:
        if key not in params:
            raise ConfigError(f"{prefix}.params.{key}", None, f"required parameter for {kind.value}")
        clean[key] = _positive_finite(f"{prefix}.params.{key}", params[key])
    return StrategySpec(kind, clean)


def fixed_g0(spec: StrategySpec, snapshot: InitialSnapshot) -> float:
    return float(spec.params["value"])


def search_space_diagonal(lower: np.ndarray, upper: np.ndarray) -> float:
    return float(np.sqrt(np.sum((upper - lower) ** 2)))


def proposed_g0(spec: StrategySpec, snapshot: InitialSnapshot) -> float:
    """Dimension-normalized G0.

    With normalized masses summing to one, the unit-direction weights in the
    force sum bound the first-iteration acceleration magnitude by G0. Setting

        G0 = fraction * ||upper - lower||_2

    therefore caps the first displacement of any agent at ``fraction`` of the
    search-box diagonal, whatever the dimension and the box widths.
    """
    fraction = float(spec.params["fraction"])
    g0 = fraction * search_space_diagonal(snapshot.spec.lower, snapshot.spec.upper)
    if not math.isfinite(g0) or g0 <= 0:
        raise HeuristicDomainError(f"heuristic G0 is not finite and positive: {g0!r}")
    return g0


_IMPLS = {
    StrategyKind.FIXED_G0: fixed_g0,
    StrategyKind.PROPOSED_HEURISTIC: proposed_g0,
}


def select_strategy(spec: StrategySpec) -> Callable[[InitialSnapshot], float]:
    """Validate ``spec`` and return a callable ``snapshot -> G0``."""
    spec = validate(spec)
    impl = _IMPLS[spec.kind]

    def strategy(snapshot: InitialSnapshot) -> float:
        return impl(spec, snapshot)

    strategy.spec = spec
    return strategy
