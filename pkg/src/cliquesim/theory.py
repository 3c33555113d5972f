"""Limit laws and one-step expectations for the interaction model.

Limiting weight distributions are defined by a first value and a ratio
recurrence. With ``alpha = (2/3)pr + (1-p)q``, ``beta = 2(1-r) +
3(1-p)(1-q)/p``, ``a = pr/3 + (1-p)q`` and ``h = (1-p)q``:

* vertex weights:  x_1 = 1/(alpha+beta+1),
                   x_w = x_{w-1} (alpha(w-1)+beta)/(alpha w+beta+1);
* edge weights:    u_1 = 1/(a+1),  u_v = u_{v-1} (v-1)a/(va+1);
* top cliques:     t_1 = 1/(h+1),  t_w = t_{w-1} h(w-1)/(hw+1).

Per-step rate sequences scale these: e_v = u_v * (edge growth)/p and
k_w = t_w * (clique growth), where edge growth = p(3-r) + 3(1-p)(1-q)
and clique growth = 1 - h are the limits of edge and top-clique counts
per step. Tail exponents are 1 + 1/alpha, 1 + 1/a, 1 + 1/h.

Everything is evaluated in double precision by default; exact rational
variants cover small indices for equality-grade checks, and the Gamma
closed forms run in log space so large indices stay finite. Parameter
sets outside a law's assumptions still compute, with machine-readable
warnings attached.

One-step conditional expectations (edge/top-clique weight histograms and
counts, given the state after n-1 steps) are exposed for oracle tests;
they use the exact totals implied by conservation (edge weight total 3n,
top weight total n before step n in the 3-interaction model).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .snapshots import Snapshot

__all__ = [
    "DerivedConstants",
    "TheoreticalDistribution",
    "TheoryTables",
    "clique_partial_sum",
    "clique_selection_probability",
    "clique_weight_dist",
    "clique_weight_fractions",
    "closed_form_clique_fraction",
    "closed_form_edge_fraction",
    "derive_constants",
    "derive_constants_fractions",
    "edge_partial_sum",
    "edge_selection_probability",
    "edge_weight_dist",
    "edge_weight_fractions",
    "attachment_selection_probability",
    "gamma_ratio_partial_sum",
    "hypothesis_warnings",
    "one_step_attachment_count_expectation",
    "one_step_attachment_expectation",
    "one_step_clique_count_expectation",
    "one_step_clique_count_expectation_alt",
    "one_step_clique_expectation",
    "one_step_edge_count_expectation",
    "one_step_edge_expectation",
    "one_step_vertex_expectation",
    "tables",
    "vertex_selection_probability",
    "vertex_weight_dist",
    "vertex_weight_fractions",
]


def _validate_pqr(p: float, q: float, r: float) -> None:
    if not 0.0 < p <= 1.0:
        raise ValueError(f"p must be in (0, 1], got {p}")
    if not 0.0 <= q <= 1.0:
        raise ValueError(f"q must be in [0, 1], got {q}")
    if not 0.0 <= r <= 1.0:
        raise ValueError(f"r must be in [0, 1], got {r}")


@dataclass(frozen=True)
class DerivedConstants:
    """Recurrence coefficients and growth-rate limits for one (p, q, r).

    ``alpha``/``beta`` drive the vertex-weight recurrence, ``edge_a`` and
    ``edge_b`` the edge one, ``clique_h`` the top-clique one.
    ``edge_growth`` and ``clique_growth`` are the per-step limits of the
    edge and top-clique counts. Exponents are the power-law tails
    ``1 + 1/coefficient``; prefactors multiply ``index**-exponent`` in the
    asymptotic laws. Degenerate coefficients yield infinite exponents and
    NaN prefactors rather than errors.
    """

    p: float
    q: float
    r: float
    alpha: float
    beta: float
    edge_a: float
    edge_b: float
    clique_h: float
    edge_growth: float
    clique_growth: float
    vertex_exponent: float
    edge_exponent: float
    clique_exponent: float
    vertex_prefactor: float
    edge_prefactor: float
    clique_prefactor: float


def derive_constants(p: float, q: float, r: float) -> DerivedConstants:
    _validate_pqr(p, q, r)
    alpha = (2.0 / 3.0) * p * r + (1.0 - p) * q
    beta = 2.0 * (1.0 - r) + 3.0 * (1.0 - p) * (1.0 - q) / p
    a = p * r / 3.0 + (1.0 - p) * q
    b = 2.0 * (p * (1.0 - r) + 3.0 * (1.0 - p) * (1.0 - q)) / (p * p)
    h = (1.0 - p) * q
    growth_e = p * (3.0 - r) + 3.0 * (1.0 - p) * (1.0 - q)
    growth_k = 1.0 - h

    if alpha > 0.0:
        vertex_exp = 1.0 + 1.0 / alpha
        vertex_pre = math.exp(
            math.lgamma(1.0 + (beta + 1.0) / alpha) - math.lgamma(1.0 + beta / alpha)
        ) / alpha
    else:
        vertex_exp, vertex_pre = math.inf, math.nan
    if a > 0.0:
        edge_exp = 1.0 + 1.0 / a
        edge_pre = math.exp(math.lgamma(1.0 + 1.0 / a)) / a
    else:
        edge_exp, edge_pre = math.inf, math.nan
    if h > 0.0:
        clique_exp = 1.0 + 1.0 / h
        clique_pre = math.exp(math.lgamma(1.0 + 1.0 / h)) / h
    else:
        clique_exp, clique_pre = math.inf, math.nan

    return DerivedConstants(
        p=p,
        q=q,
        r=r,
        alpha=alpha,
        beta=beta,
        edge_a=a,
        edge_b=b,
        clique_h=h,
        edge_growth=growth_e,
        clique_growth=growth_k,
        vertex_exponent=vertex_exp,
        edge_exponent=edge_exp,
        clique_exponent=clique_exp,
        vertex_prefactor=vertex_pre,
        edge_prefactor=edge_pre,
        clique_prefactor=clique_pre,
    )


def derive_constants_fractions(p: float, q: float, r: float) -> dict[str, Fraction]:
    """Exact rational constants (binary parameter values taken literally)."""
    _validate_pqr(p, q, r)
    fp, fq, fr = Fraction(p), Fraction(q), Fraction(r)
    one = Fraction(1)
    return {
        "alpha": Fraction(2, 3) * fp * fr + (one - fp) * fq,
        "beta": 2 * (one - fr) + 3 * (one - fp) * (one - fq) / fp,
        "edge_a": fp * fr / 3 + (one - fp) * fq,
        "edge_b": 2 * (fp * (one - fr) + 3 * (one - fp) * (one - fq)) / (fp * fp),
        "clique_h": (one - fp) * fq,
        "edge_growth": fp * (3 - fr) + 3 * (one - fp) * (one - fq),
        "clique_growth": one - (one - fp) * fq,
    }


def hypothesis_warnings(p: float, q: float, r: float) -> tuple[tuple[str, str], ...]:
    """Machine-readable notes when (p, q, r) sits outside a limit law's
    assumptions. Sequences are still computed for such parameters."""
    _validate_pqr(p, q, r)
    notes = []
    if not (p < 1.0 and q > 0.0 and r > 0.0 and (r < 1.0 or q < 1.0)):
        notes.append(
            (
                "vertex-weight-limit",
                "vertex-weight limit law assumes 0<p<1, q>0, r>0, and (r<1 or q<1)",
            )
        )
    if not (p < 1.0 and q > 0.0):
        notes.append(
            ("clique-weight-limit", "top-clique limit law assumes 0<p<1 and q>0")
        )
    if not (r > 0.0 or (1.0 - p) * q > 0.0):
        notes.append(
            ("edge-weight-limit", "edge-weight limit law assumes r>0 or (1-p)q>0")
        )
    return tuple(notes)


@dataclass(frozen=True)
class TheoreticalDistribution:
    """A limiting sequence over indices 1..max_index.

    ``values[i]`` holds the mass at index ``i + 1``. ``degenerate`` marks a
    zero driving coefficient: no power-law tail (edge and clique sequences
    collapse to index 1, the vertex sequence decays geometrically).
    """

    kind: str
    values: np.ndarray
    degenerate: bool = False

    @property
    def max_index(self) -> int:
        return len(self.values)

    def value(self, index: int) -> float:
        if index < 1:
            raise ValueError(f"indices start at 1, got {index}")
        return float(self.values[index - 1])

    def partial_sum(self, upto: int | None = None) -> float:
        if upto is None:
            return float(self.values.sum())
        return float(self.values[:upto].sum())

    def as_dict(self, limit: int | None = None) -> dict[int, float]:
        top = self.max_index if limit is None else min(limit, self.max_index)
        return {i + 1: float(self.values[i]) for i in range(top)}


def _ratio_values(first: float, num0: float, num1: float, den0: float, den1: float, max_index: int) -> np.ndarray:
    """values[0] = first; values[w-1] = values[w-2] * (num1*w + num0) /
    (den1*w + den0) for w >= 2."""
    if max_index < 1:
        raise ValueError(f"max_index must be >= 1, got {max_index}")
    vals = np.empty(max_index, dtype=float)
    vals[0] = first
    if max_index > 1:
        idx = np.arange(2, max_index + 1, dtype=float)
        factors = (num1 * idx + num0) / (den1 * idx + den0)
        np.multiply.accumulate(factors, out=factors)
        vals[1:] = first * factors
    return vals


def vertex_weight_dist(p: float, q: float, r: float, max_index: int = 100) -> TheoreticalDistribution:
    """Limiting fractions of vertices at each weight (3-interaction model)."""
    c = derive_constants(p, q, r)
    first = 1.0 / (c.alpha + c.beta + 1.0)
    vals = _ratio_values(first, c.beta - c.alpha, c.alpha, c.beta + 1.0, c.alpha, max_index)
    return TheoreticalDistribution("vertex", vals, degenerate=(c.alpha == 0.0))


def edge_weight_dist(
    p: float, q: float, r: float, max_index: int = 100
) -> tuple[TheoreticalDistribution, TheoreticalDistribution]:
    """Limiting edge-weight fractions u and per-step rates e = u * growth/p."""
    c = derive_constants(p, q, r)
    a = c.edge_a
    first = 1.0 / (a + 1.0)
    vals = _ratio_values(first, -a, a, 1.0, a, max_index)
    u = TheoreticalDistribution("edge", vals, degenerate=(a == 0.0))
    e = TheoreticalDistribution("edge_rate", vals * (c.edge_growth / p), u.degenerate)
    return u, e


def clique_weight_dist(
    p: float, q: float, r: float, max_index: int = 100
) -> tuple[TheoreticalDistribution, TheoreticalDistribution]:
    """Limiting top-clique weight fractions t and per-step rates k = t * growth."""
    c = derive_constants(p, q, r)
    h = c.clique_h
    first = 1.0 / (h + 1.0)
    vals = _ratio_values(first, -h, h, 1.0, h, max_index)
    t = TheoreticalDistribution("clique", vals, degenerate=(h == 0.0))
    k = TheoreticalDistribution("clique_rate", vals * c.clique_growth, t.degenerate)
    return t, k


def vertex_weight_fractions(p: float, q: float, r: float, max_index: int = 50) -> list[Fraction]:
    cf = derive_constants_fractions(p, q, r)
    alpha, beta = cf["alpha"], cf["beta"]
    vals = [Fraction(1) / (alpha + beta + 1)]
    for w in range(2, max_index + 1):
        vals.append(vals[-1] * (alpha * (w - 1) + beta) / (alpha * w + beta + 1))
    return vals


def edge_weight_fractions(
    p: float, q: float, r: float, max_index: int = 50
) -> tuple[list[Fraction], list[Fraction]]:
    cf = derive_constants_fractions(p, q, r)
    a = cf["edge_a"]
    vals = [Fraction(1) / (a + 1)]
    for v in range(2, max_index + 1):
        vals.append(vals[-1] * ((v - 1) * a) / (v * a + 1))
    scale = cf["edge_growth"] / Fraction(p)
    return vals, [v * scale for v in vals]


def clique_weight_fractions(
    p: float, q: float, r: float, max_index: int = 50
) -> tuple[list[Fraction], list[Fraction]]:
    cf = derive_constants_fractions(p, q, r)
    h = cf["clique_h"]
    vals = [Fraction(1) / (h + 1)]
    for w in range(2, max_index + 1):
        vals.append(vals[-1] * (h * (w - 1)) / (h * w + 1))
    return vals, [v * cf["clique_growth"] for v in vals]


# ---- Gamma closed forms ----


def closed_form_edge_fraction(p: float, q: float, r: float, v: int) -> float:
    """Edge-weight fraction u_v through the Gamma-function closed form."""
    if v < 1:
        raise ValueError(f"indices start at 1, got {v}")
    a = derive_constants(p, q, r).edge_a
    if a <= 0.0:
        raise ValueError("closed form requires a positive edge coefficient")
    s = 1.0 / a
    u1 = 1.0 / (a + 1.0)
    return u1 * math.exp(math.lgamma(v) + math.lgamma(2.0 + s) - math.lgamma(1.0 + v + s))


def closed_form_clique_fraction(p: float, q: float, r: float, w: int) -> float:
    """Top-clique weight fraction t_w through the Gamma-function closed form."""
    if w < 1:
        raise ValueError(f"indices start at 1, got {w}")
    h = derive_constants(p, q, r).clique_h
    if h <= 0.0:
        raise ValueError("closed form requires a positive clique coefficient")
    s = 1.0 / h
    return (1.0 / h) * math.exp(math.lgamma(w) + math.lgamma(1.0 + s) - math.lgamma(1.0 + w + s))


def gamma_ratio_partial_sum(s: float, t: float, n: int) -> float:
    """Sum of Gamma(k+s)/Gamma(k+t) for k = 0..n via the telescoping
    closed form; requires s - t + 1 != 0 and positive s, t - 1."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    denom = s - t + 1.0
    if denom == 0.0:
        raise ValueError("closed form undefined at s - t + 1 = 0")
    lead = math.exp(math.lgamma(n + s + 1.0) - math.lgamma(n + t))
    tail = math.exp(math.lgamma(s) - math.lgamma(t - 1.0))
    return (lead - tail) / denom


def edge_partial_sum(p: float, q: float, r: float, n: int) -> float:
    """Closed-form partial sum of the edge-weight fractions up to index n.

    Folds the Gamma prefactor into each term's log so nothing overflows."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    a = derive_constants(p, q, r).edge_a
    if a <= 0.0:
        raise ValueError("partial-sum closed form requires a positive edge coefficient")
    s, t = 1.0, 2.0 + 1.0 / a
    u1 = 1.0 / (a + 1.0)
    lg_t = math.lgamma(t)
    m = n - 1
    lead = math.exp(lg_t + math.lgamma(m + s + 1.0) - math.lgamma(m + t))
    tail = math.exp(lg_t + math.lgamma(s) - math.lgamma(t - 1.0))
    return u1 * (lead - tail) / (s - t + 1.0)


def clique_partial_sum(p: float, q: float, r: float, n: int) -> float:
    """Closed-form partial sum of the top-clique weight fractions up to n."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    h = derive_constants(p, q, r).clique_h
    if h <= 0.0:
        raise ValueError("partial-sum closed form requires a positive clique coefficient")
    s, t = 1.0, 2.0 + 1.0 / h
    pref = math.lgamma(1.0 + 1.0 / h) - math.log(h)
    m = n - 1
    lead = math.exp(pref + math.lgamma(m + s + 1.0) - math.lgamma(m + t))
    tail = math.exp(pref + math.lgamma(s) - math.lgamma(t - 1.0))
    return (lead - tail) / (s - t + 1.0)


# ---- one-step conditional expectations ----
#
# Every formula below conditions on the state after `snap.n` steps and
# predicts the statistic after one more interaction. `snap.n + 1` is the
# index of the step being taken; conservation fixes the weight totals the
# selection probabilities divide by. Three containment identities make
# the weighted-draw terms exact: the top cliques containing a vertex
# carry total weight equal to the vertex's weight, those containing a
# fixed attachment clique carry its weight, and the attachment cliques
# containing a vertex carry (arity - 1) times its weight.


def vertex_selection_probability(
    snap: Snapshot, n_model: int, p: float, q: float, r: float, w: int
) -> float:
    """Probability that a fixed old vertex of weight w joins the next
    interaction (any arity)."""
    n = snap.n + 1
    big_v = snap.vertices
    return (
        p * r * (n_model - 1) * w / (n_model * n)
        + p * (1.0 - r) * (n_model - 1) / big_v
        + (1.0 - p) * q * w / n
        + (1.0 - p) * (1.0 - q) * n_model / big_v
    )


def one_step_vertex_expectation(
    snap: Snapshot, n_model: int, p: float, q: float, r: float, w: int
) -> float:
    """Expected number of weight-w vertices after one more interaction."""
    if w < 1:
        raise ValueError(f"weights start at 1, got {w}")
    hist = snap.weight_hists[1]
    prev = hist.get(w - 1, 0) if w > 1 else 0
    cur = hist.get(w, 0)
    p_prev = vertex_selection_probability(snap, n_model, p, q, r, w - 1) if w > 1 else 0.0
    p_cur = vertex_selection_probability(snap, n_model, p, q, r, w)
    value = p_prev * prev + (1.0 - p_cur) * cur
    if w == 1:
        value += p
    return value


def attachment_selection_probability(
    snap: Snapshot, n_model: int, p: float, q: float, r: float, w: int
) -> float:
    """Probability that a fixed attachment clique of weight w joins the
    next interaction (any arity). At arity 3 this is the edge formula
    rewritten branch by branch; both paths are kept so they can be
    checked against each other."""
    n = snap.n + 1
    big_v = snap.vertices
    return (
        p * r * w / (n_model * n)
        + p * (1.0 - r) / math.comb(big_v, n_model - 1)
        + (1.0 - p) * q * w / n
        + (1.0 - p) * (1.0 - q) * (big_v - n_model + 1) / math.comb(big_v, n_model)
    )


def one_step_attachment_expectation(
    snap: Snapshot, n_model: int, p: float, q: float, r: float, w: int
) -> float:
    """Expected number of weight-w attachment cliques after one more
    interaction."""
    if w < 1:
        raise ValueError(f"weights start at 1, got {w}")
    level = n_model - 1
    hist = snap.weight_hists[level]
    prev = hist.get(w - 1, 0) if w > 1 else 0
    cur = hist.get(w, 0)
    p_prev = (
        attachment_selection_probability(snap, n_model, p, q, r, w - 1) if w > 1 else 0.0
    )
    p_cur = attachment_selection_probability(snap, n_model, p, q, r, w)
    value = p_prev * prev + (1.0 - p_cur) * cur
    if w == 1:
        registered = snap.count(level)
        groups = math.comb(snap.vertices, level)
        value += p * (n_model - 1) + (
            p * (1.0 - r) + n_model * (1.0 - p) * (1.0 - q)
        ) * (1.0 - registered / groups)
    return value


def one_step_attachment_count_expectation(
    snap: Snapshot, n_model: int, p: float, q: float, r: float
) -> float:
    """Expected attachment-clique count after one more interaction."""
    level = n_model - 1
    groups = math.comb(snap.vertices, level)
    damp = 1.0 - (p * (1.0 - r) + n_model * (1.0 - p) * (1.0 - q)) / groups
    growth = p * (n_model - 1) + p * (1.0 - r) + n_model * (1.0 - p) * (1.0 - q)
    return damp * snap.count(level) + growth


def edge_selection_probability(snap: Snapshot, p: float, q: float, r: float, v: int) -> float:
    """Probability that a fixed edge of weight v joins the next interaction
    (3-interaction model)."""
    c = derive_constants(p, q, r)
    n = snap.n + 1
    big_v = snap.vertices
    return (v / n) * c.edge_a + (p * p * c.edge_b) / (big_v * (big_v - 1))


def one_step_edge_expectation(snap: Snapshot, p: float, q: float, r: float, v: int) -> float:
    """Expected number of weight-v edges after one more interaction."""
    if v < 1:
        raise ValueError(f"weights start at 1, got {v}")
    hist = snap.weight_hists[2]
    prev = hist.get(v - 1, 0) if v > 1 else 0
    cur = hist.get(v, 0)
    p_prev = edge_selection_probability(snap, p, q, r, v - 1) if v > 1 else 0.0
    p_cur = edge_selection_probability(snap, p, q, r, v)
    value = p_prev * prev + (1.0 - p_cur) * cur
    if v == 1:
        pairs = snap.vertices * (snap.vertices - 1) // 2
        birth = 2.0 * p + (p * (1.0 - r) + 3.0 * (1.0 - p) * (1.0 - q)) * (
            1.0 - snap.edges / pairs
        )
        value += birth
    return value


def one_step_edge_count_expectation(snap: Snapshot, p: float, q: float, r: float) -> float:
    """Expected edge count after one more interaction."""
    c = derive_constants(p, q, r)
    big_v = snap.vertices
    damp = 1.0 - (2.0 * p * (1.0 - r) + 6.0 * (1.0 - p) * (1.0 - q)) / (big_v * (big_v - 1))
    return damp * snap.edges + c.edge_growth


def clique_selection_probability(snap: Snapshot, n_model: int, p: float, q: float, w: int) -> float:
    """Probability that a fixed top clique of weight w joins the next
    interaction."""
    n = snap.n + 1
    groups = math.comb(snap.vertices, n_model)
    return (1.0 - p) * (q * w / n + (1.0 - q) / groups)


def one_step_clique_expectation(snap: Snapshot, n_model: int, p: float, q: float, w: int) -> float:
    """Expected number of weight-w top cliques after one more interaction."""
    if w < 1:
        raise ValueError(f"weights start at 1, got {w}")
    hist = snap.weight_hists[max(snap.weight_hists)]
    prev = hist.get(w - 1, 0) if w > 1 else 0
    cur = hist.get(w, 0)
    p_prev = clique_selection_probability(snap, n_model, p, q, w - 1) if w > 1 else 0.0
    p_cur = clique_selection_probability(snap, n_model, p, q, w)
    value = p_prev * prev + (1.0 - p_cur) * cur
    if w == 1:
        groups = math.comb(snap.vertices, n_model)
        value += p + (1.0 - p) * (1.0 - q) * (1.0 - snap.top / groups)
    return value


def one_step_clique_count_expectation(snap: Snapshot, n_model: int, p: float, q: float) -> float:
    """Expected top-clique count after one more interaction.

    The damping coefficient 1 - (1-p)(1-q)/C(V, n_model) is the one
    consistent with the per-weight recursion and with exhaustive
    enumeration on small graphs.
    """
    groups = math.comb(snap.vertices, n_model)
    damp = 1.0 - (1.0 - p) * (1.0 - q) / groups
    return damp * snap.top + (1.0 - (1.0 - p) * q)


def one_step_clique_count_expectation_alt(snap: Snapshot, n_model: int, p: float, q: float) -> float:
    """Variant damping form 1 - (1-p)(1-q)(1 - 1/C(V, n_model)).

    Kept for diagnostics only: it disagrees with exhaustive enumeration on
    small graphs (e.g. 1.75 instead of 1.5 on the initial 3-interaction
    state at p = q = 1/2) and is not used by any production path.
    """
    groups = math.comb(snap.vertices, n_model)
    damp = 1.0 - (1.0 - p) * (1.0 - q) * (1.0 - 1.0 / groups)
    return damp * snap.top + (1.0 - (1.0 - p) * q)


# ---- bundled tables ----


@dataclass(frozen=True)
class TheoryTables:
    """Constants plus the five limiting sequences for one parameter set."""

    p: float
    q: float
    r: float
    max_index: int
    constants: DerivedConstants
    vertex: TheoreticalDistribution
    edge: TheoreticalDistribution
    edge_rate: TheoreticalDistribution
    clique: TheoreticalDistribution
    clique_rate: TheoreticalDistribution
    warnings: tuple[tuple[str, str], ...]

    def distribution(self, kind: str) -> TheoreticalDistribution:
        try:
            return {
                "vertex": self.vertex,
                "edge": self.edge,
                "edge_rate": self.edge_rate,
                "clique": self.clique,
                "clique_rate": self.clique_rate,
            }[kind]
        except KeyError:
            raise ValueError(f"unknown distribution kind {kind!r}") from None


def tables(p: float, q: float, r: float, max_index: int = 100) -> TheoryTables:
    constants = derive_constants(p, q, r)
    vertex = vertex_weight_dist(p, q, r, max_index)
    edge, edge_rate = edge_weight_dist(p, q, r, max_index)
    clique, clique_rate = clique_weight_dist(p, q, r, max_index)
    return TheoryTables(
        p=p,
        q=q,
        r=r,
        max_index=max_index,
        constants=constants,
        vertex=vertex,
        edge=edge,
        edge_rate=edge_rate,
        clique=clique,
        clique_rate=clique_rate,
        warnings=hypothesis_warnings(p, q, r),
    )
