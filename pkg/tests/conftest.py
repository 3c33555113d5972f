import time

import pytest

from cliquesim.evolution import ModelParams, available_engines, run
from cliquesim.oracle import grow_to_vertices

ENGINE = "fast" if "fast" in available_engines() else "python"

requires_kernel = pytest.mark.skipif(
    "fast" not in available_engines(), reason="compiled kernel not built"
)

MILLION_STEPS = 10**6
MILLION_SEED = 20240817
MILLION_STREAMS = 5


@pytest.fixture(scope="session")
def million_runs():
    """Final snapshots of five million-step streams, plus the wall time
    the runs took. Shared by the statistical acceptance criteria."""
    params = ModelParams(steps=MILLION_STEPS, seed=MILLION_SEED, cutoff=1000)
    start = time.perf_counter()
    finals = [run(params, stream=i, engine=ENGINE)[-1] for i in range(MILLION_STREAMS)]
    elapsed = time.perf_counter() - start
    return finals, elapsed


@pytest.fixture(scope="session")
def mc_state():
    """A 3-interaction state grown to 50 vertices for Monte Carlo checks."""
    return grow_to_vertices(ModelParams(seed=2024), 50)
