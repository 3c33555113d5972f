from itertools import accumulate

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy import stats

from cliquesim.sampling import (
    GENERATOR_FAMILY,
    RandomSource,
    WeightTree,
    seed_state,
    uniform_distinct_subset,
)

# Frozen against an independent transcription of the published splitmix64
# and xoshiro256** routines plus this package's documented seeding rule.
FROZEN_STREAMS = {
    (0, 0): {
        "words": (
            9074916114554775536,
            9993986118153606378,
            15907883684229219923,
            5351164271239061357,
        ),
        "u64": (
            11518530590971696170,
            4246113861638221388,
            16167447180422533025,
            15207775429392819214,
        ),
    },
    (123, 7): {
        "words": (
            14149783446058616383,
            8359150643228051469,
            2690821686346546408,
            12027945848051742877,
        ),
        "u64": (
            2705672611646743986,
            4065109785752120596,
            5263774823047314715,
            11504868352564057092,
        ),
    },
    (20240817, 4): {
        "words": (
            11407375677112134267,
            1214663862734294230,
            10235408165896365679,
            8669149070611603463,
        ),
        "u64": (
            5147845413614702714,
            17982201659699301641,
            11617457253179451582,
            4615452680660693282,
        ),
    },
    (2**63, 2**32): {
        "words": (
            7933342478333569097,
            6139953225539804635,
            11084515871701570399,
            10009006710194243398,
        ),
        "u64": (
            3722189808064250493,
            17172337700811375951,
            13502218767618462638,
            13970030058135555375,
        ),
    },
}


def test_generator_family_label():
    assert GENERATOR_FAMILY == "splitmix64-xoshiro256starstar"
    assert RandomSource(0).family == GENERATOR_FAMILY


@pytest.mark.parametrize("key", sorted(FROZEN_STREAMS))
def test_frozen_seed_words_and_outputs(key):
    seed, stream = key
    frozen = FROZEN_STREAMS[key]
    assert seed_state(seed, stream) == frozen["words"]
    rng = RandomSource(seed, stream)
    assert tuple(rng.next_u64() for _ in range(4)) == frozen["u64"]


def test_next_double_is_top_53_bits():
    rng_bits = RandomSource(0, 0)
    rng_vals = RandomSource(0, 0)
    for _ in range(200):
        expect = (rng_bits.next_u64() >> 11) * 2.0**-53
        assert rng_vals.next_double() == expect
        assert 0.0 <= expect < 1.0


def test_streams_are_distinct():
    words = {seed_state(5, stream) for stream in range(64)}
    words |= {seed_state(seed, 0) for seed in range(64, 128)}
    assert len(words) == 128


def test_randbelow_bounds_and_trivial_case():
    rng = RandomSource(9, 0)
    before = rng.state_words()
    assert rng.randbelow(1) == 0
    assert rng.state_words() == before  # bound 1 must not consume entropy
    with pytest.raises(ValueError):
        rng.randbelow(0)
    for bound in (2, 3, 7, 100, 1 << 40):
        for _ in range(50):
            assert 0 <= rng.randbelow(bound) < bound


def test_randbelow_uniformity():
    rng = RandomSource(31337, 0)
    n, bound = 60000, 6
    counts = [0] * bound
    for _ in range(n):
        counts[rng.randbelow(bound)] += 1
    assert stats.chisquare(counts).pvalue > 1e-3


def test_weight_tree_basics():
    tree = WeightTree([3, 1, 4])
    assert len(tree) == 3
    assert tree.total == 8
    assert [tree.weight(i) for i in range(3)] == [3, 1, 4]
    tree.increment(1, 2)
    assert tree.weight(1) == 3 and tree.total == 10
    assert tree.append(5) == 3
    assert tree.total == 15
    with pytest.raises(ValueError):
        tree.append(0)
    with pytest.raises(IndexError):
        tree.increment(99)
    with pytest.raises(ValueError):
        tree.locate(15)


@given(
    ops=st.lists(
        st.one_of(
            st.tuples(st.just("append"), st.integers(1, 60)),
            st.tuples(st.just("bump"), st.integers(0, 10**9)),
        ),
        min_size=1,
        max_size=60,
    )
)
@settings(max_examples=200, deadline=None)
def test_weight_tree_matches_linear_scan(ops):
    """Every prefix interval must resolve like a cumulative-sum scan."""
    tree = WeightTree()
    weights: list[int] = []
    for op, value in ops:
        if op == "append" or not weights:
            w = value if op == "append" else 1
            tree.append(w)
            weights.append(w)
        else:
            i = value % len(weights)
            tree.increment(i)
            weights[i] += 1
    assert tree.total == sum(weights)
    cumulative = list(accumulate(weights))
    for target in range(tree.total):
        expected = next(i for i, c in enumerate(cumulative) if target < c)
        assert tree.locate(target) == expected


def test_weight_tree_draw_distribution():
    tree = WeightTree([1, 2, 3, 4])
    rng = RandomSource(7, 0)
    n = 40000
    counts = [0] * 4
    for _ in range(n):
        counts[tree.draw(rng)] += 1
    expected = [n * w / 10 for w in (1, 2, 3, 4)]
    assert stats.chisquare(counts, expected).pvalue > 1e-3


def test_weight_tree_clone_is_independent():
    tree = WeightTree([2, 2])
    copy = tree.clone()
    copy.increment(0)
    copy.append(9)
    assert tree.total == 4 and len(tree) == 2
    assert copy.total == 14 and len(copy) == 3


@given(n=st.integers(1, 30), k=st.integers(1, 6), seed=st.integers(0, 2**32))
@settings(max_examples=200, deadline=None)
def test_uniform_subset_invariants(n, k, seed):
    if k > n:
        k = n
    subset = uniform_distinct_subset(n, k, RandomSource(seed, 0))
    assert len(subset) == k
    assert len(set(subset)) == k
    assert all(0 <= v < n for v in subset)
    assert list(subset) == sorted(subset)


def test_uniform_subset_equiprobable():
    from itertools import combinations

    rng = RandomSource(555, 0)
    keys = list(combinations(range(5), 2))
    counts = dict.fromkeys(keys, 0)
    n = 50000
    for _ in range(n):
        counts[uniform_distinct_subset(5, 2, rng)] += 1
    assert stats.chisquare(list(counts.values())).pvalue > 1e-3


def test_uniform_subset_rejects_bad_sizes():
    rng = RandomSource(0, 0)
    with pytest.raises(ValueError):
        uniform_distinct_subset(3, 4, rng)
    with pytest.raises(ValueError):
        uniform_distinct_subset(3, 0, rng)
