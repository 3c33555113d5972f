"""Canonical storage for vertices, edges, and m-clique weights.

A clique's weight is one plus the number of interactions it has joined
since birth, so every interaction advances the total weight at a tracked
level by exactly the number of member sub-cliques at that level. Keys are
strictly increasing vertex tuples; ids are dense append-order integers.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .sampling import RandomSource, WeightTree

__all__ = [
    "CliqueRegistry",
    "VertexTable",
    "WeightHistogram",
    "weight_histogram",
]


def _require_canonical(key: tuple[int, ...]) -> None:
    for a, b in zip(key, key[1:]):
        if a >= b:
            raise ValueError(f"clique key must be strictly increasing, got {key}")


@dataclass(frozen=True)
class WeightHistogram:
    """Counts per weight up to a cutoff, with the exact tail kept above it.

    The tail is retained weight-by-weight because slope fits need it; the
    ``overflow_count`` view is for quick mass accounting.
    """

    counts: dict[int, int]
    overflow: dict[int, int]

    @property
    def overflow_count(self) -> int:
        return sum(self.overflow.values())

    @property
    def item_count(self) -> int:
        return sum(self.counts.values()) + self.overflow_count

    @property
    def mass(self) -> int:
        total = sum(w * c for w, c in self.counts.items())
        return total + sum(w * c for w, c in self.overflow.items())


def weight_histogram(weights, cutoff: int) -> WeightHistogram:
    """Histogram of integer weights split at ``cutoff``."""
    if cutoff < 1:
        raise ValueError(f"cutoff must be >= 1, got {cutoff}")
    counts: Counter[int] = Counter()
    overflow: Counter[int] = Counter()
    for w in weights:
        if w <= cutoff:
            counts[w] += 1
        else:
            overflow[w] += 1
    return WeightHistogram(dict(counts), dict(overflow))


class CliqueRegistry:
    """id <-> key bijection plus a weight tree over the ids at one level."""

    __slots__ = ("level", "tree", "_ids", "_keys", "_birth")

    def __init__(self, level: int):
        if level < 1:
            raise ValueError(f"level must be >= 1, got {level}")
        self.level = level
        self.tree = WeightTree()
        self._ids: dict[tuple[int, ...], int] = {}
        self._keys: list[tuple[int, ...]] = []
        self._birth: list[int] = []

    def __len__(self) -> int:
        return len(self._keys)

    def __contains__(self, key) -> bool:
        return tuple(key) in self._ids

    @property
    def total(self) -> int:
        return self.tree.total

    @property
    def weights(self) -> list[int]:
        return self.tree.weights

    def ensure(self, key: tuple[int, ...], step: int = 0) -> tuple[int, bool]:
        """Register ``key`` at weight 1 if absent; returns (id, created)."""
        _require_canonical(key)
        if len(key) != self.level:
            raise ValueError(f"level-{self.level} registry got key {key}")
        cid = self._ids.get(key)
        if cid is not None:
            return cid, False
        cid = self.tree.append(1)
        self._ids[key] = cid
        self._keys.append(key)
        self._birth.append(step)
        return cid, True

    def bump(self, cid: int) -> int:
        """Advance one clique's weight by 1; returns the new weight."""
        if not 0 <= cid < len(self._keys):
            raise IndexError(f"no clique id {cid}")
        self.tree.increment(cid, 1)
        return self.tree.weight(cid)

    def weight(self, cid: int) -> int:
        return self.tree.weight(cid)

    def key_of(self, cid: int) -> tuple[int, ...]:
        if not 0 <= cid < len(self._keys):
            raise IndexError(f"no clique id {cid}")
        return self._keys[cid]

    def id_of(self, key) -> int:
        return self._ids[tuple(key)]

    def birth_step(self, cid: int) -> int:
        if not 0 <= cid < len(self._birth):
            raise IndexError(f"no clique id {cid}")
        return self._birth[cid]

    def draw(self, rng: RandomSource) -> int:
        return self.tree.draw(rng)

    def histogram(self, cutoff: int) -> WeightHistogram:
        return weight_histogram(self.tree.weights, cutoff)

    def clone(self) -> "CliqueRegistry":
        other = CliqueRegistry.__new__(CliqueRegistry)
        other.level = self.level
        other.tree = self.tree.clone()
        other._ids = self._ids.copy()
        other._keys = self._keys.copy()
        other._birth = self._birth.copy()
        return other


class VertexTable:
    """Vertex weights, distinct-neighbor degrees, and adjacency."""

    __slots__ = ("weights", "degrees", "_adj", "edge_count")

    def __init__(self):
        self.weights: list[int] = []
        self.degrees: list[int] = []
        self._adj: list[set[int]] = []
        self.edge_count = 0

    @property
    def count(self) -> int:
        return len(self.weights)

    @property
    def total_weight(self) -> int:
        return sum(self.weights)

    def add_vertex(self) -> int:
        self.weights.append(1)
        self.degrees.append(0)
        self._adj.append(set())
        return len(self.weights) - 1

    def bump_weight(self, v: int) -> None:
        self.weights[v] += 1

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def add_edge(self, u: int, v: int) -> bool:
        """Insert edge {u, v} if missing; returns True when created."""
        if u == v:
            raise ValueError(f"self-loop at {u}")
        nbrs = self._adj[u]
        if v in nbrs:
            return False
        nbrs.add(v)
        self._adj[v].add(u)
        self.degrees[u] += 1
        self.degrees[v] += 1
        self.edge_count += 1
        return True

    def neighbors(self, v: int) -> frozenset[int]:
        return frozenset(self._adj[v])

    def histogram(self, cutoff: int) -> WeightHistogram:
        return weight_histogram(self.weights, cutoff)

    def degree_histogram(self) -> dict[int, int]:
        return dict(Counter(self.degrees))

    def clone(self) -> "VertexTable":
        other = VertexTable.__new__(VertexTable)
        other.weights = self.weights.copy()
        other.degrees = self.degrees.copy()
        other._adj = [s.copy() for s in self._adj]
        other.edge_count = self.edge_count
        return other
