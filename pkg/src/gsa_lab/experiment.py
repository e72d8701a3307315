"""Seed fan-out over problems, strategies and repetitions."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace

from . import benchmarks
from .config import ExperimentConfig, Pairing
from .core import RunResult, run
from .model import RunAbortError

MASK64 = (1 << 64) - 1


def splitmix64(x: int) -> int:
    x = (x + 0x9E3779B97F4A7C15) & MASK64
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & MASK64
    return x ^ (x >> 31)


def split_seed(base_seed: int, cell: int, repetition: int) -> int:
    """Derive a per-run 64-bit seed: ``mix(mix(mix(base) ^ cell) ^ repetition)``."""
    h = splitmix64(base_seed & MASK64)
    h = splitmix64(h ^ (cell & MASK64))
    return splitmix64(h ^ (repetition & MASK64))


@dataclass(frozen=True)
class CellRun:
    function: str
    dimension: int
    strategy: str
    kind: str
    repetition: int
    result: RunResult


def run_seed(config: ExperimentConfig, problem_index: int, strategy_index: int, repetition: int) -> int:
    # Paired: the seed ignores the strategy so every strategy sees the same streams.
    if config.pairing is Pairing.PAIRED:
        cell = problem_index
    else:
        cell = problem_index * len(config.strategies) + strategy_index
    return split_seed(config.base_seed, cell, repetition)


def _tasks(config: ExperimentConfig):
    for pi, problem in enumerate(config.problems):
        for si, strategy in enumerate(config.strategies):
            for r in range(config.runs):
                yield (problem.function, problem.dimension, strategy.name, strategy.spec,
                       r, replace(config.gsa, g0_strategy=strategy.spec, seed=run_seed(config, pi, si, r)))


def _execute(task):
    function, dimension, name, spec, r, gsa = task
    problem = benchmarks.function_spec(function).problem(dimension)
    try:
        result = run(problem, gsa)
    except RunAbortError as exc:
        raise exc.annotate(f"{function} d={dimension} strategy={name} run={r}") from None
    return CellRun(function, dimension, name, spec.kind.value, r, result)


def default_workers() -> int:
    value = os.environ.get("GSA_LAB_WORKERS", "").strip()
    if not value:
        return 1
    try:
        return max(1, int(value))
    except ValueError:
        return 1


def run_experiment(config: ExperimentConfig, workers: int | None = None) -> list:
    """Run every (problem, strategy, repetition) cell.

    Results come back problem-major, then strategy, then repetition, whatever
    the worker count.
    """
    workers = default_workers() if workers is None else workers
    tasks = list(_tasks(config))
    if workers <= 1 or len(tasks) <= 1:
        return [_execute(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_execute, tasks))
