from fractions import Fraction

import pytest

from cliquesim.evolution import GraphState, ModelParams
from cliquesim.oracle import (
    CheckResult,
    enumerate_outcomes,
    exhaustive_one_step,
    forced_state,
    formula_checks,
    grow_to_vertices,
    monte_carlo_one_step,
)

JOIN_EDGE_01 = ((0, 1), True)
HIT_TOP_012 = ((0, 1, 2), False)


def assert_all_pass(checks):
    failed = [c.describe() for c in checks if not c.passed]
    assert not failed, "\n".join(failed)


def test_outcome_probabilities_sum_to_one():
    for params in (ModelParams(), ModelParams(p=0.3, q=0.7, r=0.4), ModelParams(n_model=4)):
        outcomes = enumerate_outcomes(GraphState(params))
        assert sum(prob for prob, _ in outcomes) == Fraction(1)
        assert all(prob > 0 for prob, _ in outcomes)


def test_zero_probability_branches_are_skipped():
    outcomes = enumerate_outcomes(GraphState(ModelParams(p=1.0, q=0.5, r=1.0)))
    # only the weighted new-vertex branch survives: 3 attachment edges
    assert len(outcomes) == 3
    assert sum(prob for prob, _ in outcomes) == 1


def test_frozen_initial_expectations():
    """Exact one-step expectations on the starting triangle at
    p = q = r = 1/2, worked out by hand."""
    oracle = exhaustive_one_step(GraphState(ModelParams()))
    assert oracle.total == 1
    assert oracle.counts[1] == Fraction(7, 2)
    assert oracle.counts[2] == 4
    assert oracle.counts[3] == Fraction(3, 2)
    assert oracle.hists[1] == {1: 1, 2: Fraction(5, 2)}
    assert oracle.hists[2] == {1: 2, 2: 2}
    assert oracle.hists[3] == {1: 1, 2: Fraction(1, 2)}
    assert oracle.bumps[1] == {0: Fraction(5, 6), 1: Fraction(5, 6), 2: Fraction(5, 6)}
    assert oracle.bumps[2] == {0: Fraction(2, 3), 1: Fraction(2, 3), 2: Fraction(2, 3)}
    assert oracle.bumps[3] == {0: Fraction(1, 2)}


def test_formula_checks_initial_state():
    assert_all_pass(formula_checks(GraphState(ModelParams())))


@pytest.mark.parametrize("moves", [[JOIN_EDGE_01], [HIT_TOP_012], [JOIN_EDGE_01, HIT_TOP_012, ((1, 3), True)]])
def test_formula_checks_forced_states(moves):
    state = forced_state(ModelParams(p=0.3, q=0.7, r=0.4), moves)
    assert_all_pass(formula_checks(state))


@pytest.mark.parametrize(
    "kwargs",
    [
        {},
        {"p": 0.9, "q": 0.1, "r": 0.8},
        {"p": 1.0},                      # no old-clique interactions
        {"q": 1.0, "r": 1.0},            # weighted draws only
        {"q": 0.0},
        {"r": 0.0},
    ],
)
def test_formula_checks_grown_state(kwargs):
    state = grow_to_vertices(ModelParams(seed=7, **kwargs), 12)
    assert_all_pass(formula_checks(state))


def test_formula_checks_higher_arity():
    assert_all_pass(formula_checks(GraphState(ModelParams(n_model=4))))
    grown = grow_to_vertices(
        ModelParams(n_model=4, p=0.6, q=0.4, r=0.7, seed=5, track_all_levels=True), 10
    )
    assert_all_pass(formula_checks(grown))
    assert_all_pass(formula_checks(GraphState(ModelParams(n_model=5))))


def test_check_result_semantics():
    rel = CheckResult("x", 100.0, 100.0 + 5e-10, 1e-12)
    assert not rel.passed  # tolerance scales with magnitude: 1e-12 * 100
    rel = CheckResult("x", 100.0, 100.0 + 5e-11, 1e-12)
    assert rel.passed
    exact = CheckResult("x", 1.0, 1.0, 0.0, mode="abs")
    assert exact.passed and exact.error == 0.0
    off = CheckResult("x", 1.0, 1.25, 0.2, mode="abs")
    assert not off.passed
    assert "FAIL" in off.describe()
    assert off.describe().startswith("FAIL")


def test_forced_state_rejects_bad_moves():
    with pytest.raises(ValueError):
        forced_state(ModelParams(), [((0, 1, 2), True)])  # too many for a join
    with pytest.raises(ValueError):
        forced_state(ModelParams(), [((0, 9), True)])


def test_grow_to_vertices():
    state = grow_to_vertices(ModelParams(seed=1), 20)
    assert state.vertices.count == 20
    with pytest.raises(RuntimeError):
        grow_to_vertices(ModelParams(seed=1), 1000, max_steps=10)


def test_monte_carlo_agrees_with_formulas():
    state = grow_to_vertices(ModelParams(seed=99), 20)
    checks = monte_carlo_one_step(state, reps=3000, seed=424242)
    assert len(checks) == 4
    assert_all_pass(checks)


def test_monte_carlo_guards():
    with pytest.raises(ValueError):
        monte_carlo_one_step(GraphState(ModelParams(n_model=4)), reps=10, seed=1)
    with pytest.raises(ValueError):
        monte_carlo_one_step(GraphState(ModelParams()), reps=1, seed=1)
