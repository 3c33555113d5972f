"""Command-line front end.

Verbs:

* ``simulate``        run replication streams, write snapshots and a manifest
* ``theory``          tabulate the limiting laws
* ``compare``         check finished runs against the laws, emit report + plot data
* ``oracle``          exhaustive and Monte Carlo one-step verification
* ``manifest-verify`` re-digest run trees against their manifests
* ``bench``           time the compiled core against the pure-Python engine

``simulate`` and ``bench`` read defaults from a flat ``key = value``
config file (``--config``); explicit flags always win. Reports print
floats with six significant digits; plot data keeps twelve.
"""

from __future__ import annotations

import argparse
import dataclasses
import re
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from . import analysis, manifest, oracle, theory
from .evolution import GraphState, ModelParams, available_engines, run, select_engine
from .snapshots import read_snapshot, write_snapshot

__all__ = ["RunConfig", "main"]

_SNAPSHOT_RE = re.compile(r"^stream-(\d{3})/snapshot-(\d{10})\.txt$")


@dataclass
class RunConfig:
    """Simulation knobs; mirrors the config-file keys one to one."""

    n_model: int = 3
    p: float = 0.5
    q: float = 0.5
    r: float = 0.5
    steps: int = 1000
    seeds: int = 1
    seed_base: int = 0
    cutoff: int = 1000
    track_all_levels: bool = False
    checkpoints: str = ""
    engine: str = "auto"
    max_index: int = 100
    jobs: int = 1

    def to_file(self, path: Path) -> None:
        lines = [
            f"{f.name.replace('_', '-')} = {getattr(self, f.name)}"
            for f in dataclasses.fields(self)
        ]
        Path(path).write_text("\n".join(lines) + "\n")

    @classmethod
    def from_file(cls, path: Path) -> "RunConfig":
        data: dict[str, str] = {}
        for lineno, raw in enumerate(Path(path).read_text().splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected 'key = value', got {raw!r}")
            key, _, value = line.partition("=")
            data[key.strip().replace("-", "_")] = value.strip()
        kwargs = {}
        for f in dataclasses.fields(cls):
            if f.name not in data:
                continue
            raw_value = data.pop(f.name)
            if isinstance(f.default, bool):
                kwargs[f.name] = raw_value.lower() in ("1", "true", "yes", "on")
            elif isinstance(f.default, int):
                kwargs[f.name] = int(raw_value)
            elif isinstance(f.default, float):
                kwargs[f.name] = float(raw_value)
            else:
                kwargs[f.name] = raw_value
        if data:
            raise ValueError(f"{path}: unknown config keys {sorted(data)}")
        return cls(**kwargs)

    def model_params(self) -> ModelParams:
        checkpoints = None
        if self.checkpoints:
            checkpoints = tuple(int(tok) for tok in self.checkpoints.split(","))
        return ModelParams(
            n_model=self.n_model,
            p=self.p,
            q=self.q,
            r=self.r,
            steps=self.steps,
            seed=self.seed_base,
            cutoff=self.cutoff,
            track_all_levels=self.track_all_levels,
            checkpoints=checkpoints,
        )


def _effective_config(args: argparse.Namespace) -> RunConfig:
    cfg = RunConfig.from_file(args.config) if getattr(args, "config", None) else RunConfig()
    for f in dataclasses.fields(RunConfig):
        value = getattr(args, f.name, None)
        if value is not None:
            setattr(cfg, f.name, value)
    return cfg


def _parse_windows(spec: str) -> dict[str, tuple[int, int]]:
    """'vertex:20:200,edge:5:60' -> {'vertex': (20, 200), 'edge': (5, 60)}."""
    out: dict[str, tuple[int, int]] = {}
    for part in spec.split(","):
        part = part.strip()
        if not part:
            continue
        pieces = part.split(":")
        if len(pieces) != 3:
            raise ValueError(f"bad window {part!r}; expected kind:lo:hi")
        kind, lo, hi = pieces[0], int(pieces[1]), int(pieces[2])
        if kind not in analysis.EMPIRICAL_WINDOWS:
            raise ValueError(f"unknown window kind {kind!r}")
        out[kind] = (lo, hi)
    return out


# ---- simulate ----


def _run_stream(job: tuple) -> tuple[int, list[str]]:
    params_kwargs, stream, engine, out = job
    params = ModelParams(**params_kwargs)
    snaps = run(params, stream=stream, engine=engine)
    stream_dir = Path(out) / f"stream-{stream:03d}"
    files: list[str] = []
    for snap in snaps:
        files.extend(str(p) for p in write_snapshot(snap, stream_dir))
    return stream, files


def cmd_simulate(args: argparse.Namespace) -> int:
    cfg = _effective_config(args)
    out = Path(args.out)
    if (out / manifest.MANIFEST_NAME).exists():
        raise ValueError(f"{out} already holds a run; pick a fresh --out")
    params = cfg.model_params()
    engine = select_engine(params, cfg.engine)
    out.mkdir(parents=True, exist_ok=True)

    config_path = out / "config.cfg"
    cfg.to_file(config_path)

    params_kwargs = dataclasses.asdict(params)
    jobs = [(params_kwargs, stream, engine, str(out)) for stream in range(cfg.seeds)]
    results: dict[int, list[str]] = {}
    if cfg.jobs > 1 and cfg.seeds > 1:
        with ProcessPoolExecutor(max_workers=min(cfg.jobs, cfg.seeds)) as pool:
            for stream, files in pool.map(_run_stream, jobs):
                results[stream] = files
    else:
        for job in jobs:
            stream, files = _run_stream(job)
            results[stream] = files

    all_files = [config_path]
    for stream in sorted(results):
        all_files.extend(Path(p) for p in results[stream])
        final = read_snapshot(Path(results[stream][-2]))
        print(
            f"stream {stream:03d}: n={final.n} V={final.vertices} "
            f"E={final.edges} K={final.top}"
        )
    meta = {
        "command": "simulate",
        "engine": engine,
        "params": params_kwargs,
        "streams": cfg.seeds,
    }
    manifest_path = manifest.write_manifest(out, manifest.build_manifest(out, all_files, meta))
    print(f"wrote {len(all_files)} files; manifest {manifest_path}")
    return 0


# ---- theory ----


def cmd_theory(args: argparse.Namespace) -> int:
    cfg = _effective_config(args)
    if cfg.n_model != 3:
        raise ValueError("limit tables cover the 3-interaction model only")
    tabs = theory.tables(cfg.p, cfg.q, cfg.r, max_index=cfg.max_index)
    c = tabs.constants
    lines = [
        "# cliquesim theory 1",
        f"# p={cfg.p:.12g} q={cfg.q:.12g} r={cfg.r:.12g} max-index={cfg.max_index}",
        f"# alpha={c.alpha:.12g} beta={c.beta:.12g} edge-a={c.edge_a:.12g}"
        f" edge-b={c.edge_b:.12g} clique-h={c.clique_h:.12g}",
        f"# edge-growth={c.edge_growth:.12g} clique-growth={c.clique_growth:.12g}",
        f"# exponents vertex={c.vertex_exponent:.12g} edge={c.edge_exponent:.12g}"
        f" clique={c.clique_exponent:.12g}",
        f"# prefactors vertex={c.vertex_prefactor:.12g} edge={c.edge_prefactor:.12g}"
        f" clique={c.clique_prefactor:.12g}",
    ]
    for key, text in tabs.warnings:
        lines.append(f"# warning {key}: {text}")
    lines.append("# columns: index vertex edge edge-rate clique clique-rate")
    for i in range(1, cfg.max_index + 1):
        lines.append(
            f"{i} {tabs.vertex.value(i):.12g} {tabs.edge.value(i):.12g}"
            f" {tabs.edge_rate.value(i):.12g} {tabs.clique.value(i):.12g}"
            f" {tabs.clique_rate.value(i):.12g}"
        )
    text = "\n".join(lines) + "\n"
    if args.out:
        Path(args.out).write_text(text)
        print(f"wrote {args.out}")
    else:
        sys.stdout.write(text)
    return 0


# ---- compare ----


def _final_snapshots(root: Path) -> tuple[dict, list]:
    """Run metadata and the last checkpoint snapshot of every stream."""
    mani = manifest.load_manifest(root)
    finals: dict[int, tuple[int, str]] = {}
    for rel in mani["files"]:
        match = _SNAPSHOT_RE.match(rel)
        if not match:
            continue
        stream, n = int(match.group(1)), int(match.group(2))
        if stream not in finals or n > finals[stream][0]:
            finals[stream] = (n, rel)
    if not finals:
        raise ValueError(f"{root}: manifest lists no snapshots")
    snaps = [read_snapshot(root / finals[stream][1]) for stream in sorted(finals)]
    return mani["meta"], snaps


_MATCH_KEYS = ("n_model", "p", "q", "r", "steps")


def cmd_compare(args: argparse.Namespace) -> int:
    roots = [Path(d) for d in args.runs]
    metas, snaps = [], []
    for root in roots:
        meta, stream_snaps = _final_snapshots(root)
        metas.append(meta)
        snaps.extend(stream_snaps)
    reference = {k: metas[0]["params"][k] for k in _MATCH_KEYS}
    for root, meta in zip(roots[1:], metas[1:]):
        found = {k: meta["params"][k] for k in _MATCH_KEYS}
        if found != reference:
            raise ValueError(
                f"{root} was produced with different parameters: {found} != {reference}"
            )
    if reference["n_model"] != 3:
        raise ValueError("comparison laws cover the 3-interaction model only")

    max_index = args.max_index if args.max_index is not None else 10000
    windows = _parse_windows(args.window) if args.window else None
    tabs = theory.tables(reference["p"], reference["q"], reference["r"], max_index=max_index)
    model = dict(reference)
    model["streams"] = len(snaps)
    model["seed"] = metas[0]["params"]["seed"]
    report = analysis.compare(snaps, tabs, model=model, windows=windows)
    sys.stdout.write(report.to_text())

    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        (out / "report.txt").write_text(report.to_text())
        (out / "report.json").write_text(report.to_json())
        plots = {
            "plot_vertex_weight.dat": ("vertex-weight", "vertex", tabs.vertex),
            "plot_edge_weight.dat": ("edge-weight", "edge", tabs.edge),
            "plot_top_weight.dat": ("top-weight", "clique", tabs.clique),
            "plot_degree.dat": ("degree", "degree", None),
        }
        for name, (label, kind, dist) in plots.items():
            pooled = analysis.pooled_normalized(snaps, kind)
            lines = ["# cliquesim plot 1", f"# kind: {label}"]
            lines.append("# columns: index fraction" + (" limit" if dist else ""))
            for w in sorted(pooled):
                row = f"{w} {pooled[w]:.12g}"
                if dist is not None:
                    limit = dist.value(w) if w <= dist.max_index else float("nan")
                    row += f" {limit:.12g}"
                lines.append(row)
            (out / name).write_text("\n".join(lines) + "\n")
        print(f"wrote report and plot data under {out}")
    return 0


# ---- oracle ----


def cmd_oracle(args: argparse.Namespace) -> int:
    cfg = _effective_config(args)
    p, q, r = cfg.p, cfg.q, cfg.r
    base = ModelParams(p=p, q=q, r=r, seed=cfg.seed_base)
    states = [
        ("initial", GraphState(base)),
        ("after forced vertex join on (0,1)", oracle.forced_state(base, [((0, 1), True)])),
        ("after forced top interaction", oracle.forced_state(base, [((0, 1, 2), False)])),
        ("grown 12 steps", _grown(base, 12)),
    ]
    if cfg.n_model != 3:
        extra = ModelParams(n_model=cfg.n_model, p=p, q=q, r=r)
        states.append((f"{cfg.n_model}-interaction initial", GraphState(extra)))

    failures = 0
    total = 0
    for label, state in states:
        checks = oracle.formula_checks(state)
        bad = [c for c in checks if not c.passed]
        total += len(checks)
        failures += len(bad)
        print(f"exhaustive [{label}]: {len(checks)} checks, {len(bad)} failed")
        for c in bad:
            print("  " + c.describe())

    snap = GraphState(base).snapshot()
    used = theory.one_step_clique_count_expectation(snap, 3, p, q)
    alt = theory.one_step_clique_count_expectation_alt(snap, 3, p, q)
    exact = float(oracle.exhaustive_one_step(GraphState(base)).counts[3])
    if abs(alt - used) > 1e-15:
        print(
            f"note: initial-state top count by enumeration is {exact:.6g}; the damping"
            f" form in use predicts {used:.6g}, the rejected variant {alt:.6g}."
            " The variant is kept as a diagnostic only."
        )

    mc_state = oracle.grow_to_vertices(base, args.mc_vertices)
    checks = oracle.monte_carlo_one_step(mc_state, args.mc_reps, cfg.seed_base, sigmas=3.0)
    bad = [c for c in checks if not c.passed]
    total += len(checks)
    failures += len(bad)
    print(
        f"monte carlo [{mc_state.vertices.count} vertices, {args.mc_reps} replicates,"
        f" 3 sigma]: {len(checks)} checks, {len(bad)} failed"
    )
    for c in checks:
        print("  " + c.describe())

    print(f"oracle: {total} checks, {failures} failed")
    return 0 if failures == 0 else 1


def _grown(params: ModelParams, steps: int) -> GraphState:
    from .sampling import RandomSource

    state = GraphState(params)
    rng = RandomSource(params.seed, 0)
    for _ in range(steps):
        state.step(rng)
    return state


# ---- manifest-verify ----


def cmd_manifest_verify(args: argparse.Namespace) -> int:
    bad = 0
    for root in args.runs:
        problems = manifest.verify_tree(Path(root))
        if problems:
            bad += 1
            print(f"{root}: {len(problems)} problem(s)")
            for item in problems:
                print(f"  {item}")
        else:
            print(f"{root}: ok")
    return 0 if bad == 0 else 1


# ---- bench ----


def cmd_bench(args: argparse.Namespace) -> int:
    cfg = _effective_config(args)
    params = cfg.model_params()
    print(
        f"bench: n={params.n_model} p={params.p:.6g} q={params.q:.6g} r={params.r:.6g}"
        f" steps={params.steps} seed={params.seed}"
    )
    engines = [e for e in available_engines() if e == "python" or params.n_model == 3]
    results = {}
    for engine in engines:
        start = time.perf_counter()
        snaps = run(params, stream=0, engine=engine)
        elapsed = time.perf_counter() - start
        results[engine] = (elapsed, snaps)
        rate = params.steps / elapsed if elapsed > 0 else float("inf")
        print(f"  {engine:<7s} {elapsed:8.3f} s  ({rate:,.0f} steps/s)")
    if len(results) == 2:
        speedup = results["python"][0] / results["fast"][0]
        same = results["python"][1] == results["fast"][1]
        print(f"  speedup {speedup:.1f}x; identical checkpoint snapshots: {'yes' if same else 'NO'}")
        if not same:
            return 1
    elif "fast" not in results:
        if "fast" in available_engines():
            print("  compiled core covers the 3-interaction model only; measured pure Python")
        else:
            print("  compiled core unavailable; measured the pure-Python engine only")
    return 0


# ---- parser ----


def _add_model_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--n-model", dest="n_model", type=int, help="interaction arity (default 3)")
    parser.add_argument("--p", type=float, help="new-vertex probability")
    parser.add_argument("--q", type=float, help="weighted-draw probability for old-vertex steps")
    parser.add_argument("--r", type=float, help="weighted-draw probability for new-vertex steps")


def _add_run_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--steps", type=int, help="interactions per stream")
    parser.add_argument("--seeds", type=int, help="number of replication streams")
    parser.add_argument("--seed-base", dest="seed_base", type=int, help="seed shared by all streams")
    parser.add_argument("--cutoff", type=int, help="histogram cutoff recorded in snapshots")
    parser.add_argument(
        "--track-all-levels",
        dest="track_all_levels",
        action=argparse.BooleanOptionalAction,
        default=None,
        help="track weights at every clique level, not just 1, n-1, n",
    )
    parser.add_argument("--checkpoints", help="comma-separated checkpoint steps")
    parser.add_argument("--engine", choices=("auto", "fast", "python"), help="evolution engine")
    parser.add_argument("--jobs", type=int, help="parallel worker processes for streams")
    parser.add_argument("--config", help="key = value config file; flags override it")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cliquesim",
        description="Simulator and verification harness for clique-interaction random graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sim = sub.add_parser("simulate", help="run streams and write snapshots")
    _add_model_flags(sim)
    _add_run_flags(sim)
    sim.add_argument("--out", required=True, help="output directory")
    sim.set_defaults(func=cmd_simulate)

    thy = sub.add_parser("theory", help="tabulate the limiting laws")
    _add_model_flags(thy)
    thy.add_argument("--max-index", dest="max_index", type=int, help="table depth")
    thy.add_argument("--out", help="output file (default stdout)")
    thy.set_defaults(func=cmd_theory)

    cmp_ = sub.add_parser("compare", help="compare runs against the laws")
    cmp_.add_argument("runs", nargs="+", help="simulate output directories")
    cmp_.add_argument("--out", help="directory for report and plot data")
    cmp_.add_argument("--max-index", dest="max_index", type=int, help="law table depth (default 10000)")
    cmp_.add_argument("--window", help="fit windows, e.g. vertex:20:200,edge:5:60")
    cmp_.set_defaults(func=cmd_compare)

    orc = sub.add_parser("oracle", help="one-step verification checks")
    _add_model_flags(orc)
    orc.add_argument("--seed-base", dest="seed_base", type=int, help="seed for grown states")
    orc.add_argument("--mc-reps", dest="mc_reps", type=int, default=20000, help="Monte Carlo replicates")
    orc.add_argument(
        "--mc-vertices", dest="mc_vertices", type=int, default=50, help="state size for Monte Carlo"
    )
    orc.set_defaults(func=cmd_oracle)

    ver = sub.add_parser("manifest-verify", help="re-digest run trees")
    ver.add_argument("runs", nargs="+", help="run directories")
    ver.set_defaults(func=cmd_manifest_verify)

    ben = sub.add_parser("bench", help="time both engines")
    _add_model_flags(ben)
    _add_run_flags(ben)
    ben.set_defaults(func=cmd_bench)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, RuntimeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
