"""Experiment configuration: YAML loading and validation.

Example::

    problems:
      - {function: sphere, dimension: 10}
    gsa:
      population_size: 30
      iterations: 500
      alpha: 20            # default 20
      epsilon: 1.0e-10     # default 1e-10
      boundary_policy: clamp
    strategies:
      - g0: {kind: FixedG0, params: {value: 100}}
      - g0: {kind: ProposedHeuristic, params: {fraction: 0.1}}
        name: heuristic    # optional, defaults to the kind
    runs: 20
    base_seed: 12345
    pairing: paired        # or: independent
    output: {dir: results, format: csv}
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, replace
from pathlib import Path

import yaml

from . import benchmarks
from .core import DEFAULT_ALPHA, DEFAULT_EPSILON, GsaConfig
from .model import ConfigError, ConfigParseError, RegistryError, UnknownKeyError
from .strategies import StrategySpec, validate


class OutputFormat(str, enum.Enum):
    CSV = "csv"
    JSON = "json"


class Pairing(str, enum.Enum):
    PAIRED = "paired"
    INDEPENDENT = "independent"


@dataclass(frozen=True)
class Problem:
    function: str
    dimension: int


@dataclass(frozen=True)
class NamedStrategy:
    name: str
    spec: StrategySpec


@dataclass(frozen=True)
class ExperimentConfig:
    problems: tuple
    gsa: GsaConfig
    strategies: tuple
    runs: int
    base_seed: int = 0
    pairing: Pairing = Pairing.PAIRED
    output_dir: Path = Path("results")
    output_format: OutputFormat = OutputFormat.CSV

    def with_overrides(self, *, seed=None, out=None, fmt=None) -> ExperimentConfig:
        changes = {}
        if seed is not None:
            changes["base_seed"] = _u64("base_seed", seed)
        if out is not None:
            changes["output_dir"] = Path(out)
        if fmt is not None:
            changes["output_format"] = _enum("output.format", fmt, OutputFormat)
        return replace(self, **changes)


_TOP_KEYS = {"problems", "gsa", "strategies", "runs", "base_seed", "pairing", "output"}
_GSA_KEYS = {"population_size", "iterations", "alpha", "epsilon", "boundary_policy"}


def _check_keys(key: str, mapping, allowed) -> None:
    if not isinstance(mapping, dict):
        raise ConfigError(key or "<root>", mapping, "must be a mapping")
    for k in mapping:
        if k not in allowed:
            raise UnknownKeyError(f"{key}.{k}" if key else str(k), mapping[k], "unknown key")


def _int(key, value, minimum):
    if isinstance(value, bool) or not isinstance(value, int) or value < minimum:
        raise ConfigError(key, value, f"must be an integer >= {minimum}")
    return value


def _u64(key, value):
    if isinstance(value, str):
        try:
            value = int(value, 0)
        except ValueError:
            pass
    if isinstance(value, bool) or not isinstance(value, int) or not 0 <= value < 2**64:
        raise ConfigError(key, value, "must be an unsigned 64-bit integer")
    return value


def _real(key, value):
    # PyYAML reads "1e-10" (no dot) as a string.
    if isinstance(value, str):
        try:
            value = float(value)
        except ValueError:
            pass
    if isinstance(value, bool) or not isinstance(value, (int, float)) or not math.isfinite(value) or value <= 0:
        raise ConfigError(key, value, "must be a finite number > 0")
    return float(value)


def _enum(key, value, enum_cls):
    try:
        return enum_cls(str(value).lower())
    except ValueError:
        raise ConfigError(key, value, f"expected one of {[e.value for e in enum_cls]}") from None


def _strategy(key: str, entry) -> NamedStrategy:
    _check_keys(key, entry, {"g0", "name"})
    if "g0" not in entry:
        raise ConfigError(f"{key}.g0", None, "required")
    g0 = entry["g0"]
    _check_keys(f"{key}.g0", g0, {"kind", "params"})
    params = g0.get("params") or {}
    if not isinstance(params, dict):
        raise ConfigError(f"{key}.g0.params", params, "must be a mapping")
    params = {k: (float(v) if isinstance(v, str) and _is_float(v) else v) for k, v in params.items()}
    spec = validate(StrategySpec(g0.get("kind"), params), prefix=f"{key}.g0")
    name = entry.get("name", spec.kind.value)
    if not isinstance(name, str) or not name:
        raise ConfigError(f"{key}.name", name, "must be a non-empty string")
    return NamedStrategy(name, spec)


def _is_float(s: str) -> bool:
    try:
        float(s)
    except ValueError:
        return False
    return True


def parse_config(raw) -> ExperimentConfig:
    """Validate an already-parsed mapping and apply defaults."""
    _check_keys("", raw, _TOP_KEYS)
    for required in ("problems", "gsa", "strategies", "runs"):
        if required not in raw:
            raise ConfigError(required, None, "required")

    problems = raw["problems"]
    if not isinstance(problems, list) or not problems:
        raise ConfigError("problems", problems, "must be a non-empty list")
    parsed_problems = []
    for idx, entry in enumerate(problems):
        key = f"problems[{idx}]"
        _check_keys(key, entry, {"function", "dimension"})
        fid = entry.get("function")
        try:
            spec = benchmarks.function_spec(fid)
        except RegistryError:
            raise ConfigError(f"{key}.function", fid, f"unknown function; known: {benchmarks.list_functions()}") from None
        dim = _int(f"{key}.dimension", entry.get("dimension", spec.default_dimension), 1)
        parsed_problems.append(Problem(fid, dim))

    gsa = raw["gsa"]
    _check_keys("gsa", gsa, _GSA_KEYS)
    for required in ("population_size", "iterations"):
        if required not in gsa:
            raise ConfigError(f"gsa.{required}", None, "required")
    template = GsaConfig(
        population_size=_int("gsa.population_size", gsa["population_size"], 2),
        iterations=_int("gsa.iterations", gsa["iterations"], 1),
        alpha=_real("gsa.alpha", gsa.get("alpha", DEFAULT_ALPHA)),
        epsilon=_real("gsa.epsilon", gsa.get("epsilon", DEFAULT_EPSILON)),
        boundary_policy=_enum_policy(gsa.get("boundary_policy", "clamp")),
    )

    strategies = raw["strategies"]
    if not isinstance(strategies, list) or not strategies:
        raise ConfigError("strategies", strategies, "must be a non-empty list")
    named = [_strategy(f"strategies[{i}]", s) for i, s in enumerate(strategies)]
    seen = set()
    for i, s in enumerate(named):
        if s.name in seen:
            raise ConfigError(f"strategies[{i}].name", s.name, "duplicate strategy name")
        seen.add(s.name)

    output = raw.get("output") or {}
    _check_keys("output", output, {"dir", "format"})

    return ExperimentConfig(
        problems=tuple(parsed_problems),
        gsa=template,
        strategies=tuple(named),
        runs=_int("runs", raw["runs"], 1),
        base_seed=_u64("base_seed", raw.get("base_seed", 0)),
        pairing=_enum("pairing", raw.get("pairing", "paired"), Pairing),
        output_dir=Path(output.get("dir", "results")),
        output_format=_enum("output.format", output.get("format", "csv"), OutputFormat),
    )


def _enum_policy(value):
    if str(value).lower() != "clamp":
        raise ConfigError("gsa.boundary_policy", value, "only 'clamp' is supported")
    return "clamp"


def load_config(path) -> ExperimentConfig:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ConfigParseError("<file>", str(path), f"cannot read config: {exc.strerror}") from None
    try:
        raw = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        raise ConfigParseError("<file>", str(path), f"invalid YAML: {exc}") from None
    return parse_config(raw)
