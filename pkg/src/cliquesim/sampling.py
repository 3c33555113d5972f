"""Deterministic randomness and exact-integer weighted sampling.

The random stream is a splitmix64-expanded xoshiro256** generator, chosen
for cross-platform and cross-language reproducibility: every draw is a pure
function of ``(seed, stream)``, and run manifests name the family so a
trajectory can be replayed anywhere, including by the compiled core.

No floating point enters any selection probability. Bounded draws use
bitmask rejection on raw 64-bit words, and weighted draws place a uniform
integer from ``[0, total)`` by exact prefix search over integer weights.
Engines that promise bit-identical trajectories must consume draws in the
documented order:

* one ``next_double()`` to pick the step kind against fixed thresholds,
* one ``randbelow(total)`` per weighted clique selection,
* repeated ``randbelow(n)`` with rejection of repeats for a uniform
  distinct subset, in selection order.

``randbelow(1)`` returns 0 without consuming the stream.
"""

from __future__ import annotations

__all__ = [
    "GENERATOR_FAMILY",
    "RandomSource",
    "WeightTree",
    "seed_state",
    "uniform_distinct_subset",
]

GENERATOR_FAMILY = "splitmix64-xoshiro256starstar"

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15
_TWO53_INV = 2.0**-53


def _mix64(z: int) -> int:
    """splitmix64 output mix; bijective on 64-bit words."""
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


def _rotl(x: int, k: int) -> int:
    return ((x << k) | (x >> (64 - k))) & _MASK64


def seed_state(seed: int, stream: int = 0) -> tuple[int, int, int, int]:
    """Expand ``(seed, stream)`` into a nonzero xoshiro256** state.

    Distinct stream ids give decorrelated sequences under one seed; the
    house rule is one stream per replication.
    """
    base = _mix64(seed & _MASK64) ^ _rotl(_mix64((stream & _MASK64) ^ _GOLDEN), 32)
    words = tuple(_mix64((base + k * _GOLDEN) & _MASK64) for k in (1, 2, 3, 4))
    if not any(words):
        words = (_GOLDEN, 0, 0, 0)
    return words


class RandomSource:
    """xoshiro256** stream addressed by ``(seed, stream)``."""

    family = GENERATOR_FAMILY

    __slots__ = ("seed", "stream", "_s0", "_s1", "_s2", "_s3")

    def __init__(self, seed: int, stream: int = 0):
        self.seed = seed
        self.stream = stream
        self._s0, self._s1, self._s2, self._s3 = seed_state(seed, stream)

    def state_words(self) -> tuple[int, int, int, int]:
        """Current raw state, used to hand this stream to the compiled core."""
        return (self._s0, self._s1, self._s2, self._s3)

    def next_u64(self) -> int:
        s1 = self._s1
        result = (_rotl((s1 * 5) & _MASK64, 7) * 9) & _MASK64
        t = (s1 << 17) & _MASK64
        s2 = self._s2 ^ self._s0
        s3 = self._s3 ^ s1
        self._s1 = s1 ^ s2
        self._s0 = self._s0 ^ s3
        self._s2 = s2 ^ t
        self._s3 = _rotl(s3, 45)
        return result

    def next_double(self) -> float:
        """Uniform in [0, 1): the top 53 bits scaled by 2**-53 (exact)."""
        return (self.next_u64() >> 11) * _TWO53_INV

    def randbelow(self, bound: int) -> int:
        """Uniform integer in [0, bound) via bitmask rejection."""
        if bound <= 1:
            if bound < 1:
                raise ValueError(f"bound must be >= 1, got {bound}")
            return 0
        mask = (1 << (bound - 1).bit_length()) - 1
        while True:
            x = self.next_u64() & mask
            if x < bound:
                return x


class WeightTree:
    """Append-only positive integer weights with logarithmic draws.

    A Fenwick tree over the weights keeps the running total exact, so that
    ``draw`` can place a uniform integer from ``[0, total)`` without any
    floating point. Item ids are dense and stable in append order.
    """

    __slots__ = ("_weights", "_fen", "_total")

    def __init__(self, weights=()):
        self._weights: list[int] = []
        self._fen: list[int] = [0]
        self._total = 0
        for w in weights:
            self.append(w)

    def __len__(self) -> int:
        return len(self._weights)

    @property
    def total(self) -> int:
        return self._total

    @property
    def weights(self) -> list[int]:
        """The weight list itself; callers must not mutate it."""
        return self._weights

    def weight(self, item: int) -> int:
        if not 0 <= item < len(self._weights):
            raise IndexError(f"no item {item}")
        return self._weights[item]

    def append(self, w: int) -> int:
        if w < 1:
            raise ValueError(f"weights must be positive integers, got {w}")
        i = len(self._fen)  # 1-based index of the new item
        low = i & (-i)
        val = w + self._prefix(i - 1) - self._prefix(i - low)
        self._weights.append(w)
        self._fen.append(val)
        self._total += w
        return i - 1

    def increment(self, item: int, delta: int = 1) -> int:
        if delta < 1:
            raise ValueError(f"delta must be positive, got {delta}")
        if not 0 <= item < len(self._weights):
            raise IndexError(f"no item {item}")
        self._weights[item] += delta
        self._total += delta
        fen = self._fen
        n = len(self._weights)
        i = item + 1
        while i <= n:
            fen[i] += delta
            i += i & (-i)
        return self._total

    def _prefix(self, i: int) -> int:
        fen = self._fen
        s = 0
        while i > 0:
            s += fen[i]
            i -= i & (-i)
        return s

    def locate(self, target: int) -> int:
        """Item whose cumulative-weight interval contains ``target``."""
        if not 0 <= target < self._total:
            raise ValueError(f"target {target} outside [0, {self._total})")
        fen = self._fen
        n = len(self._weights)
        pos = 0
        bit = 1
        while (bit << 1) <= n:
            bit <<= 1
        while bit:
            nxt = pos + bit
            if nxt <= n and fen[nxt] <= target:
                pos = nxt
                target -= fen[nxt]
            bit >>= 1
        return pos

    def draw(self, rng: RandomSource) -> int:
        """Draw an item with probability weight/total. Consumes one
        ``randbelow(total)``."""
        if not self._weights:
            raise ValueError("draw from empty tree")
        return self.locate(rng.randbelow(self._total))

    def clone(self) -> "WeightTree":
        other = WeightTree.__new__(WeightTree)
        other._weights = self._weights.copy()
        other._fen = self._fen.copy()
        other._total = self._total
        return other


def uniform_distinct_subset(n: int, k: int, rng: RandomSource) -> tuple[int, ...]:
    """k distinct indices from range(n); all C(n, k) subsets equiprobable.

    Sequential draws with rejection of repeats. The expected number of
    extra draws is negligible for k much smaller than n, which is the
    regime the evolution operates in (k is the interaction arity or one
    less).
    """
    if k < 1 or k > n:
        raise ValueError(f"need 1 <= k <= n, got k={k}, n={n}")
    chosen: list[int] = []
    while len(chosen) < k:
        x = rng.randbelow(n)
        if x not in chosen:
            chosen.append(x)
    return tuple(sorted(chosen))
