"""Comparing simulated histograms against the limiting laws.

Works on `Snapshot` objects: normalizes weight histograms to fractions,
pools replications, fits log-log slopes over declared windows, measures
sup-norm gaps against the limit sequences, and bundles everything into a
deterministic `ComparisonReport` (stable text and JSON forms, floats
printed with six significant digits).

Empirical tail fits are noisy where counts are small, so `fit_slope`
takes a minimum-count filter and every default window below was chosen
so that pooled million-step runs keep at least ~10 objects per bin at
the window's far end.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .snapshots import Snapshot
from .theory import TheoreticalDistribution, TheoryTables

__all__ = [
    "EMPIRICAL_WINDOWS",
    "GAP_RANGE",
    "MIN_COUNT",
    "THEORY_WINDOW",
    "ComparisonReport",
    "SlopeFit",
    "compare",
    "convergence_series",
    "fit_slope",
    "fit_theory_slope",
    "normalized",
    "pooled_histogram",
    "pooled_normalized",
    "sup_gap",
]

# log-log fit window for the theory sequences, deep in the tail
THEORY_WINDOW = (1000, 10000)
# per-kind windows for fits on pooled simulated histograms
EMPIRICAL_WINDOWS = {"vertex": (20, 200), "edge": (5, 60), "clique": (5, 30)}
MIN_COUNT = 10
GAP_RANGE = (1, 20)

_KINDS = ("vertex", "edge", "clique", "degree")


def _level_for(snap: Snapshot, kind: str) -> int:
    if kind == "vertex":
        return 1
    if kind == "edge":
        return 2
    if kind == "clique":
        return snap.top_level()
    raise ValueError(f"unknown histogram kind {kind!r}")


def _raw_hist(snap: Snapshot, kind: str) -> dict[int, int]:
    if kind == "degree":
        return snap.degree_hist
    level = _level_for(snap, kind)
    if level not in snap.weight_hists:
        raise ValueError(f"snapshot does not track level {level} ({kind})")
    return snap.weight_hists[level]


def normalized(snap: Snapshot, kind: str, exact: bool = False) -> dict[int, float] | dict[int, Fraction]:
    """Histogram of ``kind`` scaled to fractions of its object count."""
    hist = _raw_hist(snap, kind)
    denom = snap.vertices if kind == "degree" else snap.count(_level_for(snap, kind))
    if denom == 0:
        raise ValueError(f"empty {kind} histogram")
    if exact:
        return {w: Fraction(c, denom) for w, c in sorted(hist.items())}
    return {w: c / denom for w, c in sorted(hist.items())}


def pooled_histogram(snaps: list[Snapshot], kind: str) -> dict[int, int]:
    """Summed raw histogram across replications."""
    if not snaps:
        raise ValueError("no snapshots to pool")
    out: dict[int, int] = {}
    for snap in snaps:
        for w, c in _raw_hist(snap, kind).items():
            out[w] = out.get(w, 0) + c
    return dict(sorted(out.items()))


def pooled_normalized(snaps: list[Snapshot], kind: str) -> dict[int, float]:
    hist = pooled_histogram(snaps, kind)
    if kind == "degree":
        denom = sum(s.vertices for s in snaps)
    else:
        denom = sum(s.count(_level_for(s, kind)) for s in snaps)
    return {w: c / denom for w, c in hist.items()}


def convergence_series(snaps: list[Snapshot], kind: str, index: int) -> list[tuple[int, float]]:
    """(step, normalized value at ``index``) across one run's checkpoints."""
    out = []
    for snap in snaps:
        out.append((snap.n, normalized(snap, kind).get(index, 0.0)))
    return out


@dataclass(frozen=True)
class SlopeFit:
    """Least-squares line through (log w, log value) pairs."""

    slope: float
    intercept: float
    points: int
    window: tuple[int, int]


def fit_slope(
    values: dict[int, float],
    window: tuple[int, int],
    min_count: int = 0,
    counts: dict[int, int] | None = None,
) -> SlopeFit:
    """Log-log slope of ``values`` over ``window``; bins with fewer than
    ``min_count`` raw observations (per ``counts``) are dropped."""
    lo, hi = window
    if lo < 1 or hi <= lo:
        raise ValueError(f"bad window {window}")
    xs, ys = [], []
    for w in sorted(values):
        if w < lo or w > hi or values[w] <= 0.0:
            continue
        if counts is not None and counts.get(w, 0) < min_count:
            continue
        xs.append(math.log(w))
        ys.append(math.log(values[w]))
    if len(xs) < 2:
        raise ValueError(f"only {len(xs)} usable points in window {window}")
    slope, intercept = np.polyfit(np.array(xs), np.array(ys), 1)
    return SlopeFit(float(slope), float(intercept), len(xs), (lo, hi))


def fit_theory_slope(dist: TheoreticalDistribution, window: tuple[int, int]) -> SlopeFit:
    lo, hi = window
    if hi > dist.max_index:
        raise ValueError(f"window {window} exceeds tabulated range {dist.max_index}")
    vals = dist.values[lo - 1 : hi]
    idx = np.arange(lo, hi + 1, dtype=float)
    keep = vals > 0.0
    if int(keep.sum()) < 2:
        raise ValueError(f"theory sequence vanishes on window {window}")
    slope, intercept = np.polyfit(np.log(idx[keep]), np.log(vals[keep]), 1)
    return SlopeFit(float(slope), float(intercept), int(keep.sum()), (lo, hi))


def sup_gap(
    values: dict[int, float],
    reference: TheoreticalDistribution,
    index_range: tuple[int, int] = GAP_RANGE,
) -> float:
    """Largest absolute difference from the limit over an index range;
    indices missing from ``values`` count as zero."""
    lo, hi = index_range
    if hi > reference.max_index:
        raise ValueError(f"range {index_range} exceeds tabulated range {reference.max_index}")
    return max(abs(values.get(i, 0.0) - reference.value(i)) for i in range(lo, hi + 1))


class ComparisonReport:
    """Simulation-versus-theory summary with stable text/JSON renderings."""

    def __init__(
        self,
        model: dict,
        rates: dict,
        head_fractions: dict,
        sup_gaps: dict,
        slopes: dict,
    ):
        self.model = model
        self.rates = rates
        self.head_fractions = head_fractions
        self.sup_gaps = sup_gaps
        self.slopes = slopes

    def to_json_dict(self) -> dict:
        return {
            "format": "cliquesim comparison 1",
            "model": self.model,
            "rates": self.rates,
            "head_fractions": self.head_fractions,
            "sup_gaps": self.sup_gaps,
            "slopes": self.slopes,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True, separators=(",", ":")) + "\n"

    def to_text(self) -> str:
        m = self.model
        lines = [
            "# cliquesim comparison 1",
            (
                f"model n={m['n_model']} p={m['p']:.6g} q={m['q']:.6g} r={m['r']:.6g} "
                f"steps={m['steps']} streams={m['streams']} seed={m['seed']}"
            ),
            "",
            "per-step rates (pooled observed vs limit)",
        ]
        for name in ("vertices", "edges", "tops"):
            row = self.rates[name]
            lines.append(
                f"  {name:<8s} observed {row['observed']:.6g}  expected {row['expected']:.6g}"
                f"  error {row['error']:.6g}"
            )
        lines.append("")
        lines.append("weight-1 fractions (pooled observed vs limit)")
        for name in ("vertex", "edge", "clique"):
            row = self.head_fractions[name]
            lines.append(
                f"  {name:<8s} observed {row['observed']:.6g}  expected {row['expected']:.6g}"
                f"  error {row['error']:.6g}"
            )
        lines.append("")
        lo, hi = self.sup_gaps["range"]
        lines.append(f"sup gaps vs limit over weights {lo}..{hi}")
        for name in ("vertex", "edge", "clique"):
            lines.append(f"  {name:<8s} {self.sup_gaps[name]:.6g}")
        lines.append("")
        lines.append("log-log slopes")
        for name in ("vertex", "edge", "clique"):
            row = self.slopes[name]
            lines.append(
                f"  {name:<8s} empirical {row['empirical']:.6g} over {row['window'][0]}..{row['window'][1]}"
                f" ({row['points']} bins)  reference {row['reference']:.6g}"
                f"  theory-fit {row['theory_fit']:.6g} over {row['theory_window'][0]}..{row['theory_window'][1]}"
                f"  exponent {row['exponent']:.6g}"
            )
        lines.append("")
        return "\n".join(lines)


def compare(
    snaps: list[Snapshot],
    tabs: TheoryTables,
    model: dict | None = None,
    windows: dict[str, tuple[int, int]] | None = None,
    min_count: int = MIN_COUNT,
    gap_range: tuple[int, int] = GAP_RANGE,
    theory_window: tuple[int, int] = THEORY_WINDOW,
) -> ComparisonReport:
    """Build a report from the final snapshots of one or more streams.

    Pools histograms across streams for fractions, gaps, and fits;
    rate rows also carry per-stream values. Only the 3-interaction
    model has tabulated laws to compare against."""
    if not snaps:
        raise ValueError("no snapshots to compare")
    if any(s.top_level() != 3 for s in snaps):
        raise ValueError("comparison laws cover the 3-interaction model only")
    if any(s.n < 1 for s in snaps):
        raise ValueError("snapshots must come from at least one step")
    windows = dict(EMPIRICAL_WINDOWS, **(windows or {}))
    c = tabs.constants

    model_info = {
        "n_model": 3,
        "p": tabs.p,
        "q": tabs.q,
        "r": tabs.r,
        "steps": snaps[0].n,
        "streams": len(snaps),
        "seed": None,
    }
    if model:
        model_info.update(model)

    def rate_row(observed_per: list[float], expected: float) -> dict:
        pooled = sum(observed_per) / len(observed_per)
        return {
            "per_stream": observed_per,
            "observed": pooled,
            "expected": expected,
            "error": abs(pooled - expected),
        }

    rates = {
        "vertices": rate_row([s.vertices / s.n for s in snaps], tabs.p),
        "edges": rate_row([s.edges / s.n for s in snaps], c.edge_growth),
        "tops": rate_row([s.top / s.n for s in snaps], c.clique_growth),
    }

    dists = {"vertex": tabs.vertex, "edge": tabs.edge, "clique": tabs.clique}
    exponents = {
        "vertex": c.vertex_exponent,
        "edge": c.edge_exponent,
        "clique": c.clique_exponent,
    }
    head_fractions = {}
    gaps: dict = {"range": list(gap_range)}
    slopes = {}
    for kind, dist in dists.items():
        pooled = pooled_normalized(snaps, kind)
        counts = pooled_histogram(snaps, kind)
        expected = dist.value(1)
        observed = pooled.get(1, 0.0)
        head_fractions[kind] = {
            "observed": observed,
            "expected": expected,
            "error": abs(observed - expected),
        }
        gaps[kind] = sup_gap(pooled, dist, gap_range)
        emp = fit_slope(pooled, windows[kind], min_count=min_count, counts=counts)
        ref = fit_theory_slope(dist, windows[kind])
        theory_fit = fit_theory_slope(dist, theory_window)
        slopes[kind] = {
            "empirical": emp.slope,
            "points": emp.points,
            "window": list(emp.window),
            "reference": ref.slope,
            "theory_fit": theory_fit.slope,
            "theory_window": list(theory_window),
            "exponent": -exponents[kind],
        }
    return ComparisonReport(model_info, rates, head_fractions, gaps, slopes)
