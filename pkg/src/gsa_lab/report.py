"""Summary statistics, head-to-head comparison and export."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .model import GsaLabError
from .strategies import StrategyKind

TIE_MARGIN = 1e-12

SUMMARY_COLUMNS = ["function", "dim", "strategy", "mean", "std", "median", "best", "worst",
                   "mean_g0", "wins", "ties", "losses"]
CURVE_COLUMNS = ["function", "dim", "strategy", "run", "iteration", "best_fitness", "g_value"]


class ContractError(GsaLabError, ValueError):
    kind = "contract"


class ExportError(GsaLabError, OSError):
    kind = "io"


@dataclass(frozen=True)
class SummaryStats:
    mean: float
    std: float
    median: float
    best: float
    worst: float
    count: int


@dataclass(frozen=True)
class SummaryRow:
    function: str
    dimension: int
    strategy: str
    kind: str
    stats: SummaryStats
    mean_g0: float


@dataclass(frozen=True)
class HeadToHead:
    function: str
    dimension: int
    proposed: str
    fixed: str
    wins: int
    ties: int
    losses: int


@dataclass
class ComparisonTable:
    rows: list = field(default_factory=list)
    head_to_head: list = field(default_factory=list)


def summarize(finals) -> SummaryStats:
    """Statistics of final best values. ``std`` uses the population denominator.

    Accepts floats or objects with a ``result.best_fitness`` / ``best_fitness``.
    """
    values = [_final(f) for f in finals]
    if not values:
        raise ContractError("summarize needs at least one result")
    a = np.asarray(values, dtype=np.float64)
    return SummaryStats(
        mean=float(a.mean()),
        std=float(a.std(ddof=0)),
        median=float(np.median(a)),
        best=float(a.min()),
        worst=float(a.max()),
        count=a.size,
    )


def _final(item) -> float:
    if hasattr(item, "result"):
        item = item.result
    if hasattr(item, "best_fitness"):
        return float(item.best_fitness)
    return float(item)


def head_to_head(proposed, fixed, margin: float = TIE_MARGIN) -> tuple:
    """(wins, ties, losses) of ``proposed`` against ``fixed`` finals, pairwise."""
    if len(proposed) != len(fixed):
        raise ContractError(f"unpaired finals: {len(proposed)} vs {len(fixed)}")
    wins = ties = losses = 0
    for p, f in zip(proposed, fixed):
        if p < f - margin:
            wins += 1
        elif p > f + margin:
            losses += 1
        else:
            ties += 1
    return wins, ties, losses


def _cells(results) -> dict:
    cells = {}
    for cr in results:
        cells.setdefault((cr.function, cr.dimension, cr.strategy), []).append(cr)
    return cells


def compare_strategies(results, strict: bool = True, same_seed: bool = True) -> ComparisonTable:
    """Aggregate each cell and count proposed-vs-fixed outcomes per problem.

    The first ProposedHeuristic strategy is compared with the first FixedG0
    strategy of the same problem, run by run. With ``strict``, a problem that
    lacks either side is an error; otherwise it simply gets no head-to-head.
    ``same_seed`` additionally requires paired runs to share their seed.
    """
    cells = _cells(results)
    table = ComparisonTable()
    problems = {}
    for (function, dim, strategy), runs in cells.items():
        table.rows.append(SummaryRow(
            function, dim, strategy, runs[0].kind, summarize(runs),
            float(np.mean([r.result.g0_used for r in runs])),
        ))
        problems.setdefault((function, dim), {}).setdefault(runs[0].kind, (strategy, runs))

    for (function, dim), by_kind in problems.items():
        fixed = by_kind.get(StrategyKind.FIXED_G0.value)
        proposed = by_kind.get(StrategyKind.PROPOSED_HEURISTIC.value)
        if fixed is None or proposed is None:
            if strict:
                raise ContractError(f"{function} d={dim}: need both FixedG0 and ProposedHeuristic runs")
            continue
        p_runs = sorted(proposed[1], key=lambda r: r.repetition)
        f_runs = sorted(fixed[1], key=lambda r: r.repetition)
        if [r.repetition for r in p_runs] != [r.repetition for r in f_runs]:
            raise ContractError(f"{function} d={dim}: repetitions do not pair up")
        if same_seed and any(p.result.seed != f.result.seed for p, f in zip(p_runs, f_runs)):
            raise ContractError(f"{function} d={dim}: paired runs have different seeds")
        w, t, l = head_to_head([r.result.best_fitness for r in p_runs], [r.result.best_fitness for r in f_runs])
        table.head_to_head.append(HeadToHead(function, dim, proposed[0], fixed[0], w, t, l))
    return table


# --- export -----------------------------------------------------------------


def fmt_number(x) -> str:
    """Integers as-is, floats as the shortest string that round-trips."""
    if isinstance(x, (int, np.integer)) and not isinstance(x, bool):
        return str(int(x))
    return repr(float(x))


def _wtl_for(row: SummaryRow, table: ComparisonTable):
    for h in table.head_to_head:
        if (h.function, h.dimension) != (row.function, row.dimension):
            continue
        if row.strategy == h.proposed:
            return h.wins, h.ties, h.losses
        if row.strategy == h.fixed:
            return h.losses, h.ties, h.wins
    return None


def summary_csv(table: ComparisonTable) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(SUMMARY_COLUMNS)
    for row in table.rows:
        s = row.stats
        wtl = _wtl_for(row, table)
        w.writerow([row.function, row.dimension, row.strategy]
                   + [fmt_number(v) for v in (s.mean, s.std, s.median, s.best, s.worst, row.mean_g0)]
                   + (list(wtl) if wtl else ["", "", ""]))
    return buf.getvalue()


def curves_csv(results) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CURVE_COLUMNS)
    for cr in results:
        for rec in cr.result.records:
            w.writerow([cr.function, cr.dimension, cr.strategy, cr.repetition, rec.iteration,
                        fmt_number(rec.best_fitness), fmt_number(rec.g_value)])
    return buf.getvalue()


def to_document(results, table: ComparisonTable) -> dict:
    return {
        "summary": [
            {
                "function": r.function,
                "dim": r.dimension,
                "strategy": r.strategy,
                "kind": r.kind,
                "mean": r.stats.mean,
                "std": r.stats.std,
                "median": r.stats.median,
                "best": r.stats.best,
                "worst": r.stats.worst,
                "count": r.stats.count,
                "mean_g0": r.mean_g0,
            }
            for r in table.rows
        ],
        "head_to_head": [
            {
                "function": h.function,
                "dim": h.dimension,
                "proposed": h.proposed,
                "fixed": h.fixed,
                "wins": h.wins,
                "ties": h.ties,
                "losses": h.losses,
            }
            for h in table.head_to_head
        ],
        "runs": [
            {"function": cr.function, "dim": cr.dimension, "strategy": cr.strategy,
             "kind": cr.kind, "run": cr.repetition, **cr.result.to_dict()}
            for cr in results
        ],
    }


def _write(path: Path, text: str) -> Path:
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise ExportError(f"cannot write {path}: {exc.strerror or exc}") from None
    return path


def export(results, table: ComparisonTable, fmt: str, directory) -> list:
    """Write results to ``directory``; returns the written paths.

    ``csv`` writes ``summary.csv`` and ``curves.csv``; ``json`` writes
    ``results.json``.
    """
    directory = Path(directory)
    fmt = getattr(fmt, "value", fmt)
    if fmt == "csv":
        return [_write(directory / "summary.csv", summary_csv(table)),
                _write(directory / "curves.csv", curves_csv(results))]
    if fmt == "json":
        text = json.dumps(to_document(results, table), indent=2, allow_nan=False) + "\n"
        return [_write(directory / "results.json", text)]
    raise ValueError(f"unknown export format {fmt!r}")
