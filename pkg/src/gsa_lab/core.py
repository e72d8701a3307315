"""Gravitational Search Algorithm: update equations and the run loop.

Random draws
------------
Every run owns one ``numpy.random.Generator`` built with
``numpy.random.default_rng(seed)`` (PCG64 seeded through ``SeedSequence``).
Uniform [0, 1) draws are consumed in this fixed order:

* initialization: agent-major, dimension-minor positions;
* per iteration, accelerations: agent ``i`` ascending, then Kbest member
  ``j`` ascending (``j != i``), then dimension;
* per iteration, velocities: agent ascending, then dimension.

Fitness, mass and Kbest computations draw nothing. Functions that take a
``draws`` argument call it as ``draws(n)`` and expect ``n`` uniforms back, so
``Generator.random`` can be passed directly and tests can pass stubs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Callable, Optional

import numpy as np

from .model import ConfigError, ProblemSpec, RunAbortError, Sense
from .strategies import InitialSnapshot, StrategyKind, StrategySpec, select_strategy, validate

Draws = Callable[[int], np.ndarray]

DEFAULT_ALPHA = 20.0
DEFAULT_EPSILON = 1e-10


@dataclass
class Agent:
    position: np.ndarray
    velocity: np.ndarray
    fitness: float = math.nan
    mass: float = 0.0


@dataclass(frozen=True)
class GsaConfig:
    population_size: int
    iterations: int
    g0_strategy: StrategySpec = field(default_factory=lambda: StrategySpec(StrategyKind.FIXED_G0, {"value": 100.0}))
    alpha: float = DEFAULT_ALPHA
    epsilon: float = DEFAULT_EPSILON
    boundary_policy: str = "clamp"
    seed: int = 0

    def validated(self) -> GsaConfig:
        n, t = self.population_size, self.iterations
        if isinstance(n, bool) or not isinstance(n, (int, np.integer)) or n < 2:
            raise ConfigError("gsa.population_size", n, "must be an integer >= 2")
        if isinstance(t, bool) or not isinstance(t, (int, np.integer)) or t < 1:
            raise ConfigError("gsa.iterations", t, "must be an integer >= 1")
        for key in ("alpha", "epsilon"):
            value = getattr(self, key)
            if isinstance(value, bool) or not isinstance(value, (int, float)) or not (math.isfinite(value) and value > 0):
                raise ConfigError(f"gsa.{key}", value, "must be finite and > 0")
        if str(self.boundary_policy).lower() != "clamp":
            raise ConfigError("gsa.boundary_policy", self.boundary_policy, "only 'clamp' is supported")
        if isinstance(self.seed, bool) or not isinstance(self.seed, (int, np.integer)) or not 0 <= self.seed < 2**64:
            raise ConfigError("seed", self.seed, "must be an unsigned 64-bit integer")
        return replace(
            self,
            population_size=int(n),
            iterations=int(t),
            alpha=float(self.alpha),
            epsilon=float(self.epsilon),
            boundary_policy="clamp",
            seed=int(self.seed),
            g0_strategy=validate(self.g0_strategy),
        )


@dataclass(frozen=True)
class IterationRecord:
    iteration: int
    best_fitness: float
    mean_fitness: float
    g_value: float
    kbest: int


@dataclass(frozen=True)
class RunResult:
    records: list
    best_position: np.ndarray
    best_fitness: float
    g0_used: float
    seed: int

    def to_dict(self) -> dict:
        return {
            "seed": self.seed,
            "g0_used": self.g0_used,
            "best_fitness": self.best_fitness,
            "best_position": [float(v) for v in self.best_position],
            "records": [
                {
                    "iteration": r.iteration,
                    "best_fitness": r.best_fitness,
                    "mean_fitness": r.mean_fitness,
                    "g_value": r.g_value,
                    "kbest": r.kbest,
                }
                for r in self.records
            ],
        }


# --- update equations -------------------------------------------------------


def gravitational_constant(t: int, T: int, g0: float, alpha: float) -> float:
    if t == 0:
        return float(g0)
    return g0 * math.exp(-alpha * t / T)


def _best_worst(fitness: np.ndarray, sense: Sense) -> tuple:
    if Sense(sense) is Sense.MAXIMIZE:
        return fitness.max(), fitness.min()
    return fitness.min(), fitness.max()


def compute_masses(fitness, sense: Sense = Sense.MINIMIZE) -> np.ndarray:
    """Normalized inertial masses; uniform when all fitness values are equal."""
    fitness = np.asarray(fitness, dtype=np.float64)
    best, worst = _best_worst(fitness, sense)
    if best == worst:
        return np.full(fitness.size, 1.0 / fitness.size)
    m = (fitness - worst) / (best - worst)
    return m / m.sum()


def kbest_size(t: int, T: int, N: int) -> int:
    return N - ((N - 1) * t) // max(T - 1, 1)


def kbest_indices(fitness: np.ndarray, k: int, sense: Sense = Sense.MINIMIZE) -> np.ndarray:
    """Indices of the ``k`` best agents, ascending. Ties go to the lower index."""
    key = -fitness if Sense(sense) is Sense.MAXIMIZE else fitness
    order = np.argsort(key, kind="stable")
    return np.sort(order[:k])


def acceleration(i: int, positions: np.ndarray, masses: np.ndarray, G: float,
                 kbest: np.ndarray, epsilon: float, draws: Draws) -> np.ndarray:
    """Acceleration of agent ``i`` with its own mass cancelled out.

    Defined for the worst agent too, whose mass is zero.
    """
    members = [j for j in np.sort(kbest) if j != i]
    d = positions.shape[1]
    if not members:
        return np.zeros(d)
    members = np.asarray(members)
    rand = np.asarray(draws(members.size * d), dtype=np.float64).reshape(members.size, d)
    diff = positions[members] - positions[i]
    dist = np.sqrt(np.sum(diff * diff, axis=1))
    weight = G * masses[members] / (dist + epsilon)
    return np.sum(rand * weight[:, None] * diff, axis=0)


def accelerations(positions: np.ndarray, masses: np.ndarray, G: float,
                  kbest: np.ndarray, epsilon: float, draws: Draws) -> np.ndarray:
    """All agents' accelerations at once; same draw order as calling
    :func:`acceleration` for ``i = 0..N-1``."""
    n, d = positions.shape
    kbest = np.sort(kbest)
    interacting = kbest[None, :] != np.arange(n)[:, None]  # (N, K)
    count = int(interacting.sum())
    rand = np.zeros((n, kbest.size, d))
    if count:
        rand[interacting] = np.asarray(draws(count * d), dtype=np.float64).reshape(count, d)
    diff = positions[kbest][None, :, :] - positions[:, None, :]  # (N, K, d)
    dist = np.sqrt(np.sum(diff * diff, axis=2))
    weight = G * masses[kbest][None, :] / (dist + epsilon)
    return np.sum(rand * weight[:, :, None] * diff, axis=1)


def update_velocity(v, a, draws: Draws) -> np.ndarray:
    v = np.asarray(v, dtype=np.float64)
    rand = np.asarray(draws(v.size), dtype=np.float64).reshape(v.shape)
    return rand * v + np.asarray(a, dtype=np.float64)


def update_position(x, v, spec: ProblemSpec) -> tuple:
    """Move and clamp to the box; clamped coordinates lose their velocity."""
    x = np.asarray(x, dtype=np.float64)
    v = np.asarray(v, dtype=np.float64)
    candidate = x + v
    clamped = np.minimum(spec.upper, np.maximum(spec.lower, candidate))
    v = np.where(clamped != candidate, 0.0, v)
    return clamped, v


# --- run loop ---------------------------------------------------------------


@dataclass
class State:
    positions: np.ndarray  # (N, d)
    velocities: np.ndarray  # (N, d)
    t: int = 0
    g0: float = 100.0
    fitness: Optional[np.ndarray] = None
    masses: Optional[np.ndarray] = None
    best_fitness: float = math.nan
    best_position: Optional[np.ndarray] = None
    records: list = field(default_factory=list)

    def agents(self) -> list:
        n = self.positions.shape[0]
        fit = self.fitness if self.fitness is not None else np.full(n, math.nan)
        mass = self.masses if self.masses is not None else np.zeros(n)
        return [Agent(self.positions[i].copy(), self.velocities[i].copy(), float(fit[i]), float(mass[i])) for i in range(n)]


def evaluate(spec: ProblemSpec, positions: np.ndarray, iteration: int) -> np.ndarray:
    fitness = np.empty(positions.shape[0])
    for i, x in enumerate(positions):
        value = float(spec.objective(x.copy()))
        if not math.isfinite(value):
            raise RunAbortError(i, iteration, value)
        fitness[i] = value
    return fitness


def _improves(candidate: float, incumbent: float, sense: Sense) -> bool:
    if math.isnan(incumbent):
        return True
    if sense is Sense.MAXIMIZE:
        return candidate > incumbent
    return candidate < incumbent


def step(state: State, config: GsaConfig, spec: ProblemSpec, rng) -> State:
    """Advance ``state`` by one iteration in place and return it.

    ``rng`` is anything with a ``random(n)`` method (a numpy Generator).
    """
    t, T = state.t, config.iterations
    n = state.positions.shape[0]

    fitness = evaluate(spec, state.positions, t)
    ib = int(np.argmax(fitness) if spec.sense is Sense.MAXIMIZE else np.argmin(fitness))
    if _improves(fitness[ib], state.best_fitness, spec.sense):
        state.best_fitness = float(fitness[ib])
        state.best_position = state.positions[ib].copy()

    G = gravitational_constant(t, T, state.g0, config.alpha)
    k = kbest_size(t, T, n)
    state.records.append(IterationRecord(t, state.best_fitness, float(fitness.mean()), G, k))

    masses = compute_masses(fitness, spec.sense)
    kb = kbest_indices(fitness, k, spec.sense)
    acc = accelerations(state.positions, masses, G, kb, config.epsilon, rng.random)

    vel = update_velocity(state.velocities, acc, rng.random)
    state.positions, state.velocities = update_position(state.positions, vel, spec)
    state.fitness, state.masses = fitness, masses
    state.t = t + 1
    return state


def initialize(spec: ProblemSpec, n: int, rng) -> State:
    d = spec.dimension
    u = rng.random(n * d).reshape(n, d)
    positions = spec.lower + u * (spec.upper - spec.lower)
    positions = np.minimum(spec.upper, np.maximum(spec.lower, positions))
    return State(positions=positions, velocities=np.zeros((n, d)))


def run(spec: ProblemSpec, config: GsaConfig, observer=None) -> RunResult:
    """Execute one seeded GSA run.

    ``observer``, if given, is called with the state after every step.
    """
    config = config.validated()
    strategy = select_strategy(config.g0_strategy)
    rng = np.random.default_rng(config.seed)

    state = initialize(spec, config.population_size, rng)
    fitness = evaluate(spec, state.positions, 0)
    state.g0 = float(strategy(InitialSnapshot(spec, state.positions.copy(), fitness)))

    for _ in range(config.iterations):
        step(state, config, spec, rng)
        if observer is not None:
            observer(state)

    return RunResult(
        records=list(state.records),
        best_position=state.best_position.copy(),
        best_fitness=state.best_fitness,
        g0_used=state.g0,
        seed=config.seed,
    )
