"""Interaction-driven graph evolution.

The state starts as a complete graph on ``n_model`` vertices with every
sub-clique at weight 1. One step selects participants four ways:

* prob ``p*r``:        new vertex joined to a weight-drawn attachment
                       clique (an (n_model-1)-clique);
* prob ``p*(1-r)``:    new vertex joined to a uniform distinct subset of
                       old vertices;
* prob ``(1-p)*q``:    a weight-drawn top clique (an n_model-clique);
* prob ``(1-p)(1-q)``: a uniform distinct n_model-subset of old vertices.

The interaction then draws every missing edge among the participants and
advances the weight of every tracked sub-clique of the participant set by
one; freshly created objects start at weight 1, which counts as their
advance. Creations happen in a fixed canonical order (level ascending,
lexicographic within a level) so id assignment, and therefore the whole
trajectory, is reproducible bit for bit across engines.

Two engines implement the same draw contract: this module's pure-Python
one (any ``n_model``) and the compiled three-interaction core in
``_kernel`` (used automatically when available and ``n_model == 3``).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .registry import CliqueRegistry, VertexTable
from .sampling import RandomSource, uniform_distinct_subset
from .snapshots import Snapshot

try:
    from . import _kernel
except ImportError:  # compiled core is optional; the Python engine covers everything
    _kernel = None

__all__ = [
    "KIND_NAMES",
    "GraphState",
    "ModelParams",
    "RunAborted",
    "StepOutcome",
    "available_engines",
    "geometric_checkpoints",
    "run",
    "select_engine",
]

KIND_NEW_ATTACH, KIND_NEW_UNIFORM, KIND_OLD_TOP, KIND_OLD_UNIFORM = range(4)
KIND_NAMES = ("new-vertex-attachment", "new-vertex-uniform", "old-top", "old-uniform")


def geometric_checkpoints(steps: int, per_decade: int = 4) -> tuple[int, ...]:
    """Checkpoints spaced roughly 1.78x apart (4 per decade) plus the final
    step; a zero-step run checkpoints its initial state."""
    if steps <= 0:
        return (0,)
    points = {steps}
    k = 0
    while True:
        v = round(10 ** (k / per_decade))
        if v >= steps:
            break
        points.add(v)
        k += 1
    return tuple(sorted(points))


@dataclass(frozen=True)
class ModelParams:
    """Interaction arity, branch probabilities, and run controls."""

    n_model: int = 3
    p: float = 0.5
    q: float = 0.5
    r: float = 0.5
    steps: int = 0
    seed: int = 0
    cutoff: int = 1000
    track_all_levels: bool = False
    checkpoints: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.n_model < 3:
            raise ValueError(f"n_model must be >= 3, got {self.n_model}")
        if not 0.0 < self.p <= 1.0:
            raise ValueError(f"p must be in (0, 1], got {self.p}")
        if not 0.0 <= self.q <= 1.0:
            raise ValueError(f"q must be in [0, 1], got {self.q}")
        if not 0.0 <= self.r <= 1.0:
            raise ValueError(f"r must be in [0, 1], got {self.r}")
        if self.steps < 0:
            raise ValueError(f"steps must be >= 0, got {self.steps}")
        if self.cutoff < 1:
            raise ValueError(f"cutoff must be >= 1, got {self.cutoff}")
        if self.checkpoints is not None:
            pts = tuple(sorted({int(c) for c in self.checkpoints}))
            if pts and (pts[0] < 0 or pts[-1] > self.steps):
                raise ValueError(f"checkpoints must lie in [0, steps], got {pts}")
            object.__setattr__(self, "checkpoints", pts)

    @property
    def tracked_levels(self) -> tuple[int, ...]:
        """Clique levels carrying weight registries. Level 1 (vertices) and
        the attachment/top levels are always on; the flag adds the rest."""
        n = self.n_model
        if self.track_all_levels:
            return tuple(range(1, n + 1))
        return tuple(sorted({1, n - 1, n}))

    @property
    def kind_thresholds(self) -> tuple[float, float, float]:
        """Cumulative step-kind thresholds for a single uniform draw.

        Computed once here so every engine compares against the identical
        doubles."""
        return (self.p * self.r, self.p, self.p + (1.0 - self.p) * self.q)

    def checkpoint_schedule(self) -> tuple[int, ...]:
        if self.checkpoints is not None:
            return tuple(sorted(set(self.checkpoints) | {self.steps}))
        return geometric_checkpoints(self.steps)


@dataclass(frozen=True)
class StepOutcome:
    """Audit record of one interaction: what was drawn, created, bumped."""

    kind: int
    participants: tuple[int, ...]
    new_vertex: int | None
    created: dict[int, tuple]
    bumped: dict[int, tuple]

    @property
    def kind_name(self) -> str:
        return KIND_NAMES[self.kind]


class GraphState:
    """Mutable evolution state: vertex table plus per-level registries."""

    __slots__ = ("params", "n", "vertices", "levels")

    def __init__(self, params: ModelParams):
        self.params = params
        self.n = 0
        self.vertices = VertexTable()
        self.levels = {m: CliqueRegistry(m) for m in params.tracked_levels if m >= 2}
        base = tuple(range(params.n_model))
        for _ in base:
            self.vertices.add_vertex()
        for u, v in combinations(base, 2):
            self.vertices.add_edge(u, v)
        for m in sorted(self.levels):
            reg = self.levels[m]
            for key in combinations(base, m):
                reg.ensure(key, 0)

    @property
    def attachment(self) -> CliqueRegistry:
        return self.levels[self.params.n_model - 1]

    @property
    def top(self) -> CliqueRegistry:
        return self.levels[self.params.n_model]

    @property
    def vertex_count(self) -> int:
        return self.vertices.count

    @property
    def edge_count(self) -> int:
        return self.vertices.edge_count

    @property
    def top_count(self) -> int:
        return len(self.top)

    def step(self, rng: RandomSource, record: bool = False) -> StepOutcome | None:
        """Advance one interaction using the shared draw contract."""
        t0, t1, t2 = self.params.kind_thresholds
        u = rng.next_double()
        arity = self.params.n_model
        v_old = self.vertices.count
        if u < t0:
            kind = KIND_NEW_ATTACH
            base = self.attachment.key_of(self.attachment.draw(rng))
            new = self.vertices.add_vertex()
        elif u < t1:
            kind = KIND_NEW_UNIFORM
            base = uniform_distinct_subset(v_old, arity - 1, rng)
            new = self.vertices.add_vertex()
        elif u < t2:
            kind = KIND_OLD_TOP
            base = self.top.key_of(self.top.draw(rng))
            new = None
        else:
            kind = KIND_OLD_UNIFORM
            base = uniform_distinct_subset(v_old, arity, rng)
            new = None
        return self._interact(kind, base, new, record)

    def apply_forced(self, base, add_vertex: bool, record: bool = True) -> StepOutcome | None:
        """Inject one interaction with chosen participants (oracle hook).

        ``base`` holds n_model - 1 existing vertices when ``add_vertex``,
        n_model otherwise. Consumes no randomness.
        """
        base = tuple(sorted(base))
        expected = self.params.n_model - (1 if add_vertex else 0)
        if len(base) != expected or len(set(base)) != len(base):
            raise ValueError(f"need {expected} distinct existing vertices, got {base}")
        if base and not (0 <= base[0] and base[-1] < self.vertices.count):
            raise ValueError(f"unknown vertex in {base}")
        kind = KIND_NEW_ATTACH if add_vertex else KIND_OLD_TOP
        new = self.vertices.add_vertex() if add_vertex else None
        return self._interact(kind, base, new, record)

    def _interact(self, kind, base, new, record) -> StepOutcome | None:
        parts = base if new is None else base + (new,)  # new id is largest, stays sorted
        vt = self.vertices
        step_index = self.n + 1
        for v in base:
            vt.bump_weight(v)
        created: dict[int, list] = {}
        bumped: dict[int, list] = {}
        if record:
            created[1] = [(new,)] if new is not None else []
            bumped[1] = [(v,) for v in base]
            created[2] = []
            bumped[2] = []
        reg2 = self.levels.get(2)
        for pair in combinations(parts, 2):
            fresh = vt.add_edge(*pair)
            if reg2 is not None:
                cid, made = reg2.ensure(pair, step_index)
                if not made:
                    reg2.bump(cid)
            if record:
                (created[2] if fresh else bumped[2]).append(pair)
        for m in range(3, self.params.n_model + 1):
            reg = self.levels.get(m)
            if reg is None:
                continue
            if record:
                created.setdefault(m, [])
                bumped.setdefault(m, [])
            for key in combinations(parts, m):
                cid, made = reg.ensure(key, step_index)
                if not made:
                    reg.bump(cid)
                if record:
                    (created[m] if made else bumped[m]).append(key)
        self.n += 1
        if record:
            return StepOutcome(
                kind,
                parts,
                new,
                {m: tuple(v) for m, v in created.items()},
                {m: tuple(v) for m, v in bumped.items()},
            )
        return None

    def snapshot(self, cutoff: int | None = None) -> Snapshot:
        cut = self.params.cutoff if cutoff is None else cutoff
        hists: dict[int, dict[int, int]] = {1: _count(self.vertices.weights)}
        for m in sorted(self.levels):
            hists[m] = _count(self.levels[m].weights)
        return Snapshot(
            n=self.n,
            vertices=self.vertices.count,
            edges=self.vertices.edge_count,
            top=len(self.top),
            weight_hists=hists,
            degree_hist=_count(self.vertices.degrees),
            cutoff=cut,
        )

    def clone(self) -> "GraphState":
        other = GraphState.__new__(GraphState)
        other.params = self.params
        other.n = self.n
        other.vertices = self.vertices.clone()
        other.levels = {m: reg.clone() for m, reg in self.levels.items()}
        return other


def _count(values) -> dict[int, int]:
    out: dict[int, int] = {}
    for v in values:
        out[v] = out.get(v, 0) + 1
    return out


class RunAborted(RuntimeError):
    """A run failed mid-way; carries the snapshots taken before failure."""

    def __init__(self, message: str, snapshots):
        super().__init__(message)
        self.snapshots = list(snapshots)


def available_engines() -> tuple[str, ...]:
    return ("fast", "python") if _kernel is not None else ("python",)


def select_engine(params: ModelParams, engine: str = "auto") -> str:
    if engine == "auto":
        if _kernel is not None and params.n_model == 3:
            return "fast"
        return "python"
    if engine == "fast":
        if _kernel is None:
            raise RuntimeError("compiled kernel is not available")
        if params.n_model != 3:
            raise ValueError("compiled kernel only implements the 3-interaction model")
        return "fast"
    if engine == "python":
        return "python"
    raise ValueError(f"unknown engine {engine!r}")


def run(params: ModelParams, stream: int = 0, engine: str = "auto") -> list[Snapshot]:
    """Execute ``params.steps`` interactions on one stream; returns the
    checkpoint snapshots (final step always included)."""
    chosen = select_engine(params, engine)
    schedule = params.checkpoint_schedule()
    if chosen == "fast":
        return _run_fast(params, stream, schedule)
    return _run_python(params, stream, schedule)


def _run_python(params, stream, schedule):
    state = GraphState(params)
    rng = RandomSource(params.seed, stream)
    snaps: list[Snapshot] = []
    try:
        for target in schedule:
            while state.n < target:
                state.step(rng)
            snaps.append(state.snapshot())
    except Exception as exc:
        raise RunAborted(f"run failed at step {state.n}: {exc}", snaps) from exc
    return snaps


def _run_fast(params, stream, schedule):
    t0, t1, t2 = params.kind_thresholds
    words = RandomSource(params.seed, stream).state_words()
    core = _kernel.TriKernel(words, t0, t1, t2)
    snaps: list[Snapshot] = []
    try:
        for target in schedule:
            core.run_to(target)
            snaps.append(
                Snapshot(
                    n=core.n,
                    vertices=core.vertex_count,
                    edges=core.edge_count,
                    top=core.top_count,
                    weight_hists={
                        1: core.vertex_weight_hist(),
                        2: core.edge_weight_hist(),
                        3: core.top_weight_hist(),
                    },
                    degree_hist=core.degree_hist(),
                    cutoff=params.cutoff,
                )
            )
    except Exception as exc:
        raise RunAborted(f"run failed at step {core.n}: {exc}", snaps) from exc
    return snaps
