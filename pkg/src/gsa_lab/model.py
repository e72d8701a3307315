"""Problem definition and error types shared across the package."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable

import numpy as np


class Sense(str, enum.Enum):
    MINIMIZE = "minimize"
    MAXIMIZE = "maximize"


class GsaLabError(Exception):
    """Base class for every error raised by gsa_lab."""

    kind = "error"

    def to_dict(self) -> dict:
        return {"error": self.kind, "message": str(self)}


class ConfigError(GsaLabError, ValueError):
    """Invalid configuration. ``key`` is the dotted path of the offending entry."""

    kind = "config"

    def __init__(self, key: str, value, message: str):
        self.key = key
        self.value = value
        super().__init__(f"{key}={value!r}: {message}")

    def to_dict(self) -> dict:
        return {"error": self.kind, "key": self.key, "value": repr(self.value), "message": str(self)}


class ConfigParseError(ConfigError):
    kind = "parse"


class UnknownKeyError(ConfigError):
    kind = "unknown_key"


class RegistryError(GsaLabError, KeyError):
    kind = "registry"

    def __str__(self) -> str:
        return str(self.args[0]) if self.args else ""


class HeuristicDomainError(GsaLabError, ArithmeticError):
    """The G0 heuristic is undefined for the given initial population."""

    kind = "heuristic_domain"


class RunAbortError(GsaLabError, RuntimeError):
    """Objective returned a non-finite value."""

    kind = "run_abort"

    def __init__(self, agent: int, iteration: int, value: float, context: str = ""):
        self.agent = agent
        self.iteration = iteration
        self.value = value
        self.context = context
        msg = f"non-finite objective value {value!r} for agent {agent} at iteration {iteration}"
        if context:
            msg = f"{context}: {msg}"
        super().__init__(msg)

    def annotate(self, context: str) -> RunAbortError:
        return RunAbortError(self.agent, self.iteration, self.value, context)

    def to_dict(self) -> dict:
        return {
            "error": self.kind,
            "agent": self.agent,
            "iteration": self.iteration,
            "context": self.context,
            "message": str(self),
        }


@dataclass(frozen=True)
class ProblemSpec:
    """Box-bounded objective. ``objective`` maps a length-d vector to a float."""

    objective: Callable[[np.ndarray], float]
    lower: np.ndarray
    upper: np.ndarray
    sense: Sense = Sense.MINIMIZE

    def __post_init__(self):
        lower = np.asarray(self.lower, dtype=np.float64).reshape(-1)
        upper = np.asarray(self.upper, dtype=np.float64).reshape(-1)
        if lower.shape != upper.shape or lower.size == 0:
            raise ConfigError("bounds", (lower.size, upper.size), "lower and upper must be non-empty and equal length")
        if not (np.all(np.isfinite(lower)) and np.all(np.isfinite(upper))):
            raise ConfigError("bounds", None, "bounds must be finite")
        if np.any(lower >= upper):
            raise ConfigError("bounds", None, "lower[k] < upper[k] required for every k")
        object.__setattr__(self, "lower", lower)
        object.__setattr__(self, "upper", upper)
        object.__setattr__(self, "sense", Sense(self.sense))

    @property
    def dimension(self) -> int:
        return self.lower.size

    @classmethod
    def box(cls, objective, dimension: int, lower: float, upper: float, sense=Sense.MINIMIZE) -> ProblemSpec:
        return cls(objective, np.full(dimension, float(lower)), np.full(dimension, float(upper)), sense)
