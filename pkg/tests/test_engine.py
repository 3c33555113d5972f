import pytest
from scipy import stats

from cliquesim.evolution import (
    GraphState,
    ModelParams,
    available_engines,
    geometric_checkpoints,
    run,
    select_engine,
)
from cliquesim.sampling import RandomSource

from conftest import ENGINE, requires_kernel


def total_weights(state: GraphState) -> tuple[int, int, int]:
    return (
        state.vertices.total_weight,
        state.attachment.total,
        state.top.total,
    )


def test_initial_state():
    state = GraphState(ModelParams())
    assert state.n == 0
    assert state.vertex_count == 3
    assert state.edge_count == 3
    assert state.top_count == 1
    assert state.vertices.weights == [1, 1, 1]
    assert state.levels[2].weights == [1, 1, 1]
    assert state.top.weights == [1]
    assert total_weights(state) == (3, 3, 1)


def test_initial_state_higher_arity():
    state = GraphState(ModelParams(n_model=4))
    assert state.vertex_count == 4
    assert state.edge_count == 6
    assert state.top_count == 1
    assert sorted(state.levels) == [3, 4]  # level 2 untracked by default
    assert state.attachment.weights == [1, 1, 1, 1]
    state = GraphState(ModelParams(n_model=4, track_all_levels=True))
    assert sorted(state.levels) == [2, 3, 4]
    assert state.levels[2].weights == [1] * 6


def test_params_validation():
    with pytest.raises(ValueError):
        ModelParams(n_model=2)
    with pytest.raises(ValueError):
        ModelParams(p=0.0)
    with pytest.raises(ValueError):
        ModelParams(q=1.5)
    with pytest.raises(ValueError):
        ModelParams(r=-0.1)
    with pytest.raises(ValueError):
        ModelParams(steps=-1)
    with pytest.raises(ValueError):
        ModelParams(cutoff=0)
    with pytest.raises(ValueError):
        ModelParams(steps=10, checkpoints=(5, 20))


def test_geometric_checkpoints():
    assert geometric_checkpoints(0) == (0,)
    pts = geometric_checkpoints(1000)
    assert pts[-1] == 1000
    assert pts[0] == 1
    # four points per decade, rounded
    assert set(pts) >= {1, 2, 3, 6, 10, 18, 32, 56, 100, 178, 316, 562, 1000}
    assert all(a < b for a, b in zip(pts, pts[1:]))


def test_forced_new_vertex_on_edge():
    """Hand-worked example: a new vertex lands on edge (0, 1)."""
    state = GraphState(ModelParams())
    out = state.apply_forced((0, 1), add_vertex=True)
    assert out.new_vertex == 3
    assert out.participants == (0, 1, 3)
    assert state.vertex_count == 4
    assert state.edge_count == 5
    assert state.top_count == 2
    snap = state.snapshot()
    assert snap.weight_hists[1] == {1: 2, 2: 2}
    assert snap.weight_hists[2] == {1: 4, 2: 1}
    assert snap.weight_hists[3] == {1: 2}
    assert total_weights(state) == (6, 6, 2)
    assert out.created[2] == ((0, 3), (1, 3))
    assert out.bumped[2] == ((0, 1),)
    assert out.created[3] == ((0, 1, 3),)


def test_forced_top_interaction():
    state = GraphState(ModelParams())
    out = state.apply_forced((0, 1, 2), add_vertex=False)
    assert out.new_vertex is None
    snap = state.snapshot()
    assert snap.weight_hists[1] == {2: 3}
    assert snap.weight_hists[2] == {2: 3}
    assert snap.weight_hists[3] == {2: 1}
    assert state.edge_count == 3 and state.top_count == 1
    assert out.bumped[3] == ((0, 1, 2),)
    assert total_weights(state) == (6, 6, 2)


def test_forced_higher_arity():
    state = GraphState(ModelParams(n_model=4))
    state.apply_forced((0, 1, 2), add_vertex=True)
    assert state.vertex_count == 5
    assert state.edge_count == 9
    assert state.top_count == 2
    assert total_weights(state) == (8, 8, 2)


def test_apply_forced_validation():
    state = GraphState(ModelParams())
    with pytest.raises(ValueError):
        state.apply_forced((0,), add_vertex=True)  # wrong size
    with pytest.raises(ValueError):
        state.apply_forced((0, 0), add_vertex=True)
    with pytest.raises(ValueError):
        state.apply_forced((0, 7), add_vertex=True)  # unknown vertex
    with pytest.raises(ValueError):
        state.apply_forced((0, 1), add_vertex=False)


def test_conservation_random_runs():
    """After n steps the three weight totals are exactly
    arity*(n+1), arity*(n+1), n+1."""
    for n_model in (3, 4, 5):
        params = ModelParams(n_model=n_model, p=0.4, q=0.7, r=0.3, seed=12)
        state = GraphState(params)
        rng = RandomSource(12, 0)
        for _ in range(400):
            state.step(rng)
        n = state.n
        assert total_weights(state) == (
            n_model * (n + 1),
            n_model * (n + 1),
            n + 1,
        )


def test_step_kind_frequencies():
    params = ModelParams(p=0.55, q=0.3, r=0.7, seed=77)
    state = GraphState(params)
    rng = RandomSource(77, 0)
    counts = [0, 0, 0, 0]
    n = 20000
    for _ in range(n):
        out = state.step(rng, record=True)
        counts[out.kind] += 1
    p, q, r = params.p, params.q, params.r
    probs = [p * r, p * (1 - r), (1 - p) * q, (1 - p) * (1 - q)]
    assert stats.chisquare(counts, [n * x for x in probs]).pvalue > 1e-3


def test_run_determinism_and_stream_separation():
    params = ModelParams(steps=500, seed=42)
    first = run(params, stream=0, engine="python")
    again = run(params, stream=0, engine="python")
    other = run(params, stream=1, engine="python")
    assert first == again
    assert first[-1] != other[-1]


def test_snapshot_checkpoint_schedule():
    params = ModelParams(steps=100, seed=1, checkpoints=(0, 10, 50))
    snaps = run(params, stream=0, engine="python")
    assert [s.n for s in snaps] == [0, 10, 50, 100]


def test_clone_does_not_share_state():
    state = GraphState(ModelParams(seed=9))
    rng = RandomSource(9, 0)
    for _ in range(30):
        state.step(rng)
    twin = state.clone()
    for _ in range(20):
        twin.step(rng)
    assert twin.n == 50 and state.n == 30
    n = state.n
    assert total_weights(state) == (3 * (n + 1), 3 * (n + 1), n + 1)


def test_select_engine_rules():
    assert select_engine(ModelParams(), "python") == "python"
    with pytest.raises(ValueError):
        select_engine(ModelParams(), "warp")
    if "fast" in available_engines():
        assert select_engine(ModelParams(), "auto") == "fast"
        assert select_engine(ModelParams(n_model=4), "auto") == "python"
        with pytest.raises(ValueError):
            select_engine(ModelParams(n_model=4), "fast")


@requires_kernel
@pytest.mark.parametrize(
    "kwargs",
    [
        {"p": 0.5, "q": 0.5, "r": 0.5, "seed": 0},
        {"p": 0.9, "q": 0.2, "r": 0.8, "seed": 1},
        {"p": 0.3, "q": 0.9, "r": 0.1, "seed": 2},
        {"p": 1.0, "q": 0.5, "r": 0.5, "seed": 3},
        {"p": 0.5, "q": 1.0, "r": 1.0, "seed": 4},
    ],
)
def test_engines_agree_bit_for_bit(kwargs):
    """Both engines must produce identical checkpoint snapshots from the
    same seed and stream."""
    params = ModelParams(steps=2000, **kwargs)
    for stream in (0, 3):
        fast = run(params, stream=stream, engine="fast")
        python = run(params, stream=stream, engine="python")
        assert fast == python


@requires_kernel
def test_kernel_conservation_long_run():
    params = ModelParams(steps=200_000, seed=31, checkpoints=(200_000,))
    snap = run(params, stream=0, engine="fast")[-1]
    n = snap.n
    assert snap.mass(1) == 3 * (n + 1)
    assert snap.mass(2) == 3 * (n + 1)
    assert snap.mass(3) == n + 1


def test_engine_fixture_is_valid():
    assert ENGINE in available_engines()
