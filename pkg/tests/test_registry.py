import pytest

from cliquesim.registry import CliqueRegistry, VertexTable, weight_histogram
from cliquesim.sampling import RandomSource


def test_weight_histogram_cutoff():
    hist = weight_histogram([1, 1, 2, 5, 9, 9], cutoff=5)
    assert hist.counts == {1: 2, 2: 1, 5: 1}
    assert hist.overflow == {9: 2}
    assert hist.overflow_count == 2
    assert hist.item_count == 6
    assert hist.mass == 27


def test_registry_ensure_and_bump():
    reg = CliqueRegistry(2)
    cid, created = reg.ensure((0, 1), step=0)
    assert (cid, created) == (0, True)
    cid2, created2 = reg.ensure((0, 1), step=9)
    assert (cid2, created2) == (0, False)  # ensure never re-creates
    assert reg.birth_step(0) == 0
    assert reg.weight(0) == 1
    reg.bump(0)
    assert reg.weight(0) == 2
    assert reg.total == 2
    assert len(reg) == 1
    assert (0, 1) in reg
    assert reg.key_of(0) == (0, 1)
    assert reg.id_of((0, 1)) == 0


def test_registry_rejects_malformed_keys():
    reg = CliqueRegistry(2)
    with pytest.raises(ValueError):
        reg.ensure((1, 0))  # not increasing
    with pytest.raises(ValueError):
        reg.ensure((1, 1))
    with pytest.raises(ValueError):
        reg.ensure((0, 1, 2))  # wrong level


def test_registry_draw_by_weight():
    reg = CliqueRegistry(2)
    reg.ensure((0, 1))
    reg.ensure((0, 2))
    for _ in range(9):
        reg.bump(1)  # weights 1 vs 10
    rng = RandomSource(3, 0)
    draws = [reg.draw(rng) for _ in range(2000)]
    share = draws.count(1) / len(draws)
    assert 0.86 < share < 0.96  # expected 10/11


def test_registry_histogram_and_clone():
    reg = CliqueRegistry(3)
    reg.ensure((0, 1, 2))
    reg.ensure((1, 2, 3))
    reg.bump(0)
    hist = reg.histogram(cutoff=10)
    assert hist.counts == {1: 1, 2: 1}
    twin = reg.clone()
    twin.bump(1)
    twin.ensure((2, 3, 4))
    assert len(reg) == 2 and reg.weights == [2, 1]
    assert len(twin) == 3 and twin.weights == [2, 2, 1]


def test_vertex_table_edges_and_degrees():
    vt = VertexTable()
    for _ in range(4):
        vt.add_vertex()
    assert vt.count == 4
    assert vt.add_edge(0, 1) is True
    assert vt.add_edge(1, 0) is False  # already present, order-insensitive
    assert vt.add_edge(2, 3) is True
    assert vt.edge_count == 2
    assert vt.degrees == [1, 1, 1, 1]
    assert vt.has_edge(0, 1) and not vt.has_edge(0, 2)
    assert vt.neighbors(1) == frozenset({0})
    with pytest.raises(ValueError):
        vt.add_edge(2, 2)


def test_vertex_table_weights_and_histograms():
    vt = VertexTable()
    for _ in range(3):
        vt.add_vertex()
    vt.bump_weight(0)
    vt.bump_weight(0)
    vt.add_edge(0, 1)
    assert vt.weights == [3, 1, 1]
    assert vt.total_weight == 5
    assert vt.histogram(cutoff=2).counts == {1: 2}
    assert vt.histogram(cutoff=2).overflow == {3: 1}
    assert vt.degree_histogram() == {0: 1, 1: 2}


def test_vertex_table_clone_is_independent():
    vt = VertexTable()
    for _ in range(3):
        vt.add_vertex()
    vt.add_edge(0, 1)
    twin = vt.clone()
    twin.add_vertex()
    twin.add_edge(0, 2)
    twin.bump_weight(1)
    assert vt.count == 3 and vt.edge_count == 1 and vt.weights == [1, 1, 1]
    assert twin.count == 4 and twin.edge_count == 2 and twin.weights == [1, 2, 1, 1]
    assert vt.neighbors(0) == frozenset({1})
