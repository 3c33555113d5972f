"""Independent one-step verification of the evolution dynamics.

`exhaustive_one_step` walks every possible next interaction of a small
state, weighting each successor by its exact rational probability, and
accumulates expected counts, weight histograms, and per-object selection
probabilities. Nothing here reuses the closed-form expectations from
`theory`; `formula_checks` is where the two meet, comparing the exact
enumeration against the formulas at near machine precision.

`monte_carlo_one_step` covers states too large to enumerate: it replays
a single interaction many times with one stream per replicate and tests
the same formulas against sample means within a sigma budget.

Branch probabilities are built with `Fraction` directly from the stored
double-precision parameters, so the enumeration matches what the
simulator actually draws, not a decimal idealization of it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from . import theory
from .evolution import GraphState, ModelParams
from .sampling import RandomSource

__all__ = [
    "CheckResult",
    "OneStepOracle",
    "enumerate_outcomes",
    "exhaustive_one_step",
    "formula_checks",
    "forced_state",
    "grow_to_vertices",
    "monte_carlo_one_step",
]


@dataclass(frozen=True)
class CheckResult:
    """One expected-versus-observed comparison.

    ``mode`` is "rel" (tolerance scales with the larger magnitude) or
    "abs" (tolerance is already in value units, e.g. a sigma budget).
    """

    name: str
    expected: float
    observed: float
    tolerance: float
    mode: str = "rel"

    @property
    def error(self) -> float:
        return abs(self.observed - self.expected)

    @property
    def passed(self) -> bool:
        if self.mode == "abs":
            return self.error <= self.tolerance
        scale = max(abs(self.expected), abs(self.observed))
        return self.error <= self.tolerance * scale

    def describe(self) -> str:
        flag = "ok" if self.passed else "FAIL"
        return (
            f"{flag:4s} {self.name}: expected {self.expected:.12g}, "
            f"observed {self.observed:.12g} (tol {self.tolerance:.3g} {self.mode})"
        )


def enumerate_outcomes(state: GraphState) -> list[tuple[Fraction, GraphState]]:
    """All possible successor states of one interaction with exact
    probabilities. Probabilities sum to exactly 1."""
    params = state.params
    p, q, r = Fraction(params.p), Fraction(params.q), Fraction(params.r)
    arity = params.n_model
    v_old = state.vertices.count
    out: list[tuple[Fraction, GraphState]] = []

    def push(prob: Fraction, base, add_vertex: bool) -> None:
        if prob == 0:
            return
        nxt = state.clone()
        nxt.apply_forced(base, add_vertex, record=False)
        out.append((prob, nxt))

    att = state.attachment
    branch = p * r
    if branch:
        for cid in range(len(att)):
            push(branch * Fraction(att.weight(cid), att.total), att.key_of(cid), True)
    branch = p * (1 - r)
    if branch:
        share = Fraction(1, math.comb(v_old, arity - 1))
        for base in combinations(range(v_old), arity - 1):
            push(branch * share, base, True)
    top = state.top
    branch = (1 - p) * q
    if branch:
        for cid in range(len(top)):
            push(branch * Fraction(top.weight(cid), top.total), top.key_of(cid), False)
    branch = (1 - p) * (1 - q)
    if branch:
        share = Fraction(1, math.comb(v_old, arity))
        for base in combinations(range(v_old), arity):
            push(branch * share, base, False)
    return out


@dataclass(frozen=True)
class OneStepOracle:
    """Exact expectations over one interaction.

    ``counts[m]``: expected object count at level m (1 = vertices, 2 =
    edges, higher = tracked clique levels). ``hists[m][w]``: expected
    number of level-m objects at weight w. ``bumps[m][i]``: probability
    that the level-m object with id i participates in the interaction.
    """

    total: Fraction
    counts: dict[int, Fraction]
    hists: dict[int, dict[int, Fraction]]
    bumps: dict[int, dict[int, Fraction]]


def exhaustive_one_step(state: GraphState) -> OneStepOracle:
    src_weights: dict[int, list[int]] = {1: list(state.vertices.weights)}
    for m, reg in state.levels.items():
        src_weights[m] = list(reg.weights)

    zero = Fraction(0)
    count_levels = sorted({1, 2, *state.levels})
    counts = {m: zero for m in count_levels}
    hists: dict[int, dict[int, Fraction]] = {m: {} for m in src_weights}
    bumps = {m: {i: zero for i in range(len(ws))} for m, ws in src_weights.items()}

    total = zero
    for prob, nxt in enumerate_outcomes(state):
        total += prob
        counts[1] += prob * nxt.vertices.count
        counts[2] += prob * nxt.vertices.edge_count
        new_weights = {1: nxt.vertices.weights}
        for m, reg in nxt.levels.items():
            if m != 2:
                counts[m] += prob * len(reg)
            new_weights[m] = reg.weights
        for m, ws in new_weights.items():
            hist = hists[m]
            for w in ws:
                hist[w] = hist.get(w, zero) + prob
            level_bumps = bumps[m]
            for i, w0 in enumerate(src_weights[m]):
                if ws[i] > w0:
                    level_bumps[i] += prob
    return OneStepOracle(total=total, counts=counts, hists=hists, bumps=bumps)


def formula_checks(state: GraphState, tol: float = 1e-12) -> list[CheckResult]:
    """Compare exhaustive one-step expectations against the closed-form
    conditional expectations, object by object and weight by weight."""
    params = state.params
    nm, p, q, r = params.n_model, params.p, params.q, params.r
    snap = state.snapshot()
    oracle = exhaustive_one_step(state)
    checks = [
        CheckResult("probability-total", 1.0, float(oracle.total), 0.0, mode="abs"),
        CheckResult("vertex-count", snap.vertices + p, float(oracle.counts[1]), tol),
    ]

    def hist_range(level: int) -> range:
        return range(1, max(snap.weight_hists[level]) + 2)

    for w in hist_range(1):
        checks.append(
            CheckResult(
                f"vertex-hist-w{w}",
                theory.one_step_vertex_expectation(snap, nm, p, q, r, w),
                float(oracle.hists[1].get(w, 0)),
                tol,
            )
        )
    for vid, w in enumerate(state.vertices.weights):
        checks.append(
            CheckResult(
                f"vertex-bump-id{vid}-w{w}",
                theory.vertex_selection_probability(snap, nm, p, q, r, w),
                float(oracle.bumps[1][vid]),
                tol,
            )
        )

    level = nm - 1
    checks.append(
        CheckResult(
            "attachment-count",
            theory.one_step_attachment_count_expectation(snap, nm, p, q, r),
            float(oracle.counts[level]),
            tol,
        )
    )
    for w in hist_range(level):
        checks.append(
            CheckResult(
                f"attachment-hist-w{w}",
                theory.one_step_attachment_expectation(snap, nm, p, q, r, w),
                float(oracle.hists[level].get(w, 0)),
                tol,
            )
        )
    att = state.attachment
    for cid in range(len(att)):
        w = att.weight(cid)
        checks.append(
            CheckResult(
                f"attachment-bump-id{cid}-w{w}",
                theory.attachment_selection_probability(snap, nm, p, q, r, w),
                float(oracle.bumps[level][cid]),
                tol,
            )
        )

    if nm == 3:
        # the named edge-law formulas; independent of the attachment path above
        checks.append(
            CheckResult(
                "edge-count",
                theory.one_step_edge_count_expectation(snap, p, q, r),
                float(oracle.counts[2]),
                tol,
            )
        )
        for w in hist_range(2):
            checks.append(
                CheckResult(
                    f"edge-hist-w{w}",
                    theory.one_step_edge_expectation(snap, p, q, r, w),
                    float(oracle.hists[2].get(w, 0)),
                    tol,
                )
            )
        reg = state.levels[2]
        for cid in range(len(reg)):
            w = reg.weight(cid)
            checks.append(
                CheckResult(
                    f"edge-bump-id{cid}-w{w}",
                    theory.edge_selection_probability(snap, p, q, r, w),
                    float(oracle.bumps[2][cid]),
                    tol,
                )
            )

    checks.append(
        CheckResult(
            "top-count",
            theory.one_step_clique_count_expectation(snap, nm, p, q),
            float(oracle.counts[nm]),
            tol,
        )
    )
    for w in hist_range(nm):
        checks.append(
            CheckResult(
                f"top-hist-w{w}",
                theory.one_step_clique_expectation(snap, nm, p, q, w),
                float(oracle.hists[nm].get(w, 0)),
                tol,
            )
        )
    top = state.top
    for cid in range(len(top)):
        w = top.weight(cid)
        checks.append(
            CheckResult(
                f"top-bump-id{cid}-w{w}",
                theory.clique_selection_probability(snap, nm, p, q, w),
                float(oracle.bumps[nm][cid]),
                tol,
            )
        )
    return checks


def forced_state(params: ModelParams, moves) -> GraphState:
    """Initial state advanced through a scripted interaction sequence;
    each move is (participants, add_vertex)."""
    state = GraphState(params)
    for base, add_vertex in moves:
        state.apply_forced(base, add_vertex, record=False)
    return state


def grow_to_vertices(
    params: ModelParams, target: int, stream: int = 0, max_steps: int = 1_000_000
) -> GraphState:
    """Evolve a fresh state until it holds ``target`` vertices."""
    state = GraphState(params)
    rng = RandomSource(params.seed, stream)
    while state.vertices.count < target:
        if state.n >= max_steps:
            raise RuntimeError(f"no {target}-vertex state within {max_steps} steps")
        state.step(rng)
    return state


def monte_carlo_one_step(
    state: GraphState, reps: int, seed: int, sigmas: float = 3.0
) -> list[CheckResult]:
    """Replay one interaction ``reps`` times (stream i for replicate i)
    and compare sample means of the headline statistics against the
    closed-form expectations, with tolerance ``sigmas`` standard errors.

    Requires the 3-interaction model (the statistics include edge-law
    quantities)."""
    params = state.params
    if params.n_model != 3:
        raise ValueError("Monte Carlo check works on the 3-interaction model")
    if reps < 2:
        raise ValueError(f"reps must be >= 2, got {reps}")
    p, q, r = params.p, params.q, params.r
    snap = state.snapshot()
    expected = {
        "edges-at-weight-1": theory.one_step_edge_expectation(snap, p, q, r, 1),
        "edge-count": theory.one_step_edge_count_expectation(snap, p, q, r),
        "tops-at-weight-1": theory.one_step_clique_expectation(snap, 3, p, q, 1),
        "top-count": theory.one_step_clique_count_expectation(snap, 3, p, q),
    }
    names = list(expected)
    sums = dict.fromkeys(names, 0.0)
    squares = dict.fromkeys(names, 0.0)
    for i in range(reps):
        rng = RandomSource(seed, i)
        trial = state.clone()
        trial.step(rng)
        values = (
            trial.levels[2].weights.count(1),
            trial.edge_count,
            trial.top.weights.count(1),
            trial.top_count,
        )
        for name, value in zip(names, values):
            sums[name] += value
            squares[name] += value * value
    checks = []
    for name in names:
        mean = sums[name] / reps
        variance = max(squares[name] / reps - mean * mean, 0.0)
        stderr = math.sqrt(variance / reps)
        checks.append(
            CheckResult(
                f"mc-{name}",
                expected[name],
                mean,
                sigmas * stderr,
                mode="abs",
            )
        )
    return checks
