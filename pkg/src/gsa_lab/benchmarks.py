"""Classical benchmark functions used in GSA experiments.

All functions are minimized and use the same scalar bound in every dimension.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .model import ProblemSpec, RegistryError

SCHWEFEL_226_ARGMIN = 420.96874635998203
SCHWEFEL_226_MIN_PER_DIM = -418.9828872724337


def sphere(x):
    return float(np.sum(x * x))


def schwefel_222(x):
    a = np.abs(x)
    return float(np.sum(a) + np.prod(a))


def rosenbrock(x):
    return float(np.sum(100.0 * (x[1:] - x[:-1] ** 2) ** 2 + (x[:-1] - 1.0) ** 2))


def rastrigin(x):
    return float(np.sum(x * x - 10.0 * np.cos(2.0 * np.pi * x) + 10.0))


def ackley(x):
    d = x.size
    return float(-20.0 * np.exp(-0.2 * np.sqrt(np.sum(x * x) / d))
                 - np.exp(np.sum(np.cos(2.0 * np.pi * x)) / d) + 20.0 + math.e)


def griewank(x):
    k = np.arange(1, x.size + 1)
    return float(np.sum(x * x) / 4000.0 - np.prod(np.cos(x / np.sqrt(k))) + 1.0)


def schwefel_226(x):
    return float(-np.sum(x * np.sin(np.sqrt(np.abs(x)))))


@dataclass(frozen=True)
class BenchmarkSpec:
    id: str
    function: Callable[[np.ndarray], float]
    lower: float
    upper: float
    default_dimension: int = 30
    optimizer_coordinate: float = 0.0  # the minimizer is this value in every coordinate
    optimum_per_dimension: float = 0.0  # optimum = this * d

    @property
    def known_optimizer(self) -> str:
        return f"x_k = {self.optimizer_coordinate!r} for all k"

    def known_optimum_value(self, dimension: int | None = None) -> float:
        return self.optimum_per_dimension * (dimension or self.default_dimension)

    def optimizer(self, dimension: int) -> np.ndarray:
        return np.full(dimension, self.optimizer_coordinate)

    def problem(self, dimension: int | None = None) -> ProblemSpec:
        return ProblemSpec.box(self.function, dimension or self.default_dimension, self.lower, self.upper)


_REGISTRY = {
    b.id: b
    for b in (
        BenchmarkSpec("sphere", sphere, -100.0, 100.0),
        BenchmarkSpec("schwefel222", schwefel_222, -10.0, 10.0),
        BenchmarkSpec("rosenbrock", rosenbrock, -30.0, 30.0, optimizer_coordinate=1.0),
        BenchmarkSpec("rastrigin", rastrigin, -5.12, 5.12),
        BenchmarkSpec("ackley", ackley, -32.0, 32.0),
        BenchmarkSpec("griewank", griewank, -600.0, 600.0),
        BenchmarkSpec("schwefel226", schwefel_226, -500.0, 500.0,
                      optimizer_coordinate=SCHWEFEL_226_ARGMIN,
                      optimum_per_dimension=SCHWEFEL_226_MIN_PER_DIM),
    )
}


def list_functions() -> list:
    return sorted(_REGISTRY)


def function_spec(id: str) -> BenchmarkSpec:
    try:
        return _REGISTRY[id]
    except KeyError:
        raise RegistryError(f"unknown benchmark function {id!r}; known: {', '.join(list_functions())}") from None


def evaluate(id: str, x, dimension: int | None = None) -> float:
    """Evaluate benchmark ``id`` at ``x``.

    If ``dimension`` is given, ``x`` must have exactly that length.
    """
    spec = function_spec(id)
    x = np.asarray(x, dtype=np.float64).reshape(-1)
    if dimension is not None and x.size != dimension:
        raise ValueError(f"{id}: expected a point of dimension {dimension}, got {x.size}")
    if x.size == 0:
        raise ValueError(f"{id}: empty point")
    return spec.function(x)
