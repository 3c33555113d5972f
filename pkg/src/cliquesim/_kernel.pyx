# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled evolution core for the 3-interaction model.

Implements the same draw contract as the pure-Python engine (see
``sampling`` and ``evolution``): one double for the step kind, one bounded
draw per weighted selection, sequential rejection for uniform distinct
subsets, creations in canonical order. Trajectories are bit-identical to
the Python engine for equal (seed, stream, params).

Edges are keyed as ``u << 32 | v`` with ``u < v``; triangles as
``edge_id(u, v) << 32 | w`` with ``u < v < w``, which stays inside 64 bits
for any vertex count the memory budget allows.
"""

from cython.operator cimport dereference as deref
from libc.stdint cimport int64_t, uint64_t
from libcpp.unordered_map cimport unordered_map
from libcpp.vector cimport vector

cdef uint64_t _M32 = 0xFFFFFFFF
cdef double _TWO53_INV = 1.0 / 9007199254740992.0


cdef inline uint64_t _rotl(uint64_t x, int k) nogil:
    return (x << k) | (x >> (64 - k))


cdef inline int64_t _fen_prefix(vector[int64_t]& fen, int64_t i) nogil:
    cdef int64_t s = 0
    while i > 0:
        s += fen[i]
        i -= i & (-i)
    return s


cdef inline void _fen_append(vector[int64_t]& fen, int64_t w) nogil:
    # new 1-based index is the current vector size (slot 0 is a dummy)
    cdef int64_t i = <int64_t>fen.size()
    cdef int64_t low = i & (-i)
    fen.push_back(w + _fen_prefix(fen, i - 1) - _fen_prefix(fen, i - low))


cdef inline void _fen_add(vector[int64_t]& fen, int64_t item, int64_t delta) nogil:
    cdef int64_t n = <int64_t>fen.size() - 1
    cdef int64_t i = item + 1
    while i <= n:
        fen[i] += delta
        i += i & (-i)


cdef inline int64_t _fen_locate(vector[int64_t]& fen, int64_t target) nogil:
    cdef int64_t n = <int64_t>fen.size() - 1
    cdef int64_t pos = 0
    cdef int64_t bit = 1
    cdef int64_t nxt
    while (bit << 1) <= n:
        bit <<= 1
    while bit:
        nxt = pos + bit
        if nxt <= n and fen[nxt] <= target:
            pos = nxt
            target -= fen[nxt]
        bit >>= 1
    return pos


cdef dict _hist_from(vector[int64_t]& values):
    cdef int64_t i, n = <int64_t>values.size()
    cdef int64_t top = 0
    for i in range(n):
        if values[i] > top:
            top = values[i]
    cdef vector[int64_t] counts = vector[int64_t](top + 1, 0)
    for i in range(n):
        counts[values[i]] += 1
    out = {}
    for i in range(top + 1):
        if counts[i]:
            out[i] = counts[i]
    return out


cdef class TriKernel:
    cdef uint64_t s0, s1, s2, s3
    cdef double t0, t1, t2
    cdef int64_t steps_done
    cdef vector[int64_t] vweight
    cdef vector[int64_t] vdeg
    cdef vector[int64_t] eweight
    cdef vector[uint64_t] ekey
    cdef vector[int64_t] efen
    cdef int64_t etotal
    cdef unordered_map[uint64_t, int64_t] emap
    cdef vector[int64_t] tweight
    cdef vector[uint64_t] tkey
    cdef vector[int64_t] tfen
    cdef int64_t ttotal
    cdef unordered_map[uint64_t, int64_t] tmap

    def __init__(self, state_words, double t0, double t1, double t2):
        self.s0, self.s1, self.s2, self.s3 = state_words
        self.t0 = t0
        self.t1 = t1
        self.t2 = t2
        self.steps_done = 0
        self.etotal = 0
        self.ttotal = 0
        self.efen.push_back(0)
        self.tfen.push_back(0)
        cdef int64_t v
        for v in range(3):
            self._add_vertex()
        self._touch_edge(0, 1)
        self._touch_edge(0, 2)
        self._touch_edge(1, 2)
        self._touch_tri(0, 2)  # edge id of (0, 1) is 0; third vertex is 2

    # ---- random stream ----

    cdef inline uint64_t _next64(self) nogil:
        cdef uint64_t s1 = self.s1
        cdef uint64_t result = _rotl(s1 * 5, 7) * 9
        cdef uint64_t t = s1 << 17
        self.s2 ^= self.s0
        self.s3 ^= s1
        self.s1 = s1 ^ self.s2
        self.s0 ^= self.s3
        self.s2 ^= t
        self.s3 = _rotl(self.s3, 45)
        return result

    cdef inline double _next_double(self) nogil:
        return <double>(self._next64() >> 11) * _TWO53_INV

    cdef inline uint64_t _randbelow(self, uint64_t bound) nogil:
        if bound <= 1:
            return 0
        cdef uint64_t m = bound - 1
        m |= m >> 1
        m |= m >> 2
        m |= m >> 4
        m |= m >> 8
        m |= m >> 16
        m |= m >> 32
        cdef uint64_t x
        while True:
            x = self._next64() & m
            if x < bound:
                return x

    # ---- state updates ----

    cdef inline int64_t _add_vertex(self) nogil:
        self.vweight.push_back(1)
        self.vdeg.push_back(0)
        return <int64_t>self.vweight.size() - 1

    cdef inline int64_t _touch_edge(self, int64_t u, int64_t v) nogil:
        cdef uint64_t key = (<uint64_t>u << 32) | <uint64_t>v
        cdef int64_t eid
        cdef unordered_map[uint64_t, int64_t].iterator it = self.emap.find(key)
        if it == self.emap.end():
            eid = <int64_t>self.ekey.size()
            self.emap[key] = eid
            self.ekey.push_back(key)
            self.eweight.push_back(1)
            _fen_append(self.efen, 1)
            self.vdeg[u] += 1
            self.vdeg[v] += 1
        else:
            eid = deref(it).second
            self.eweight[eid] += 1
            _fen_add(self.efen, eid, 1)
        self.etotal += 1
        return eid

    cdef inline void _touch_tri(self, int64_t eid, int64_t w) nogil:
        cdef uint64_t key = (<uint64_t>eid << 32) | <uint64_t>w
        cdef int64_t tid
        cdef unordered_map[uint64_t, int64_t].iterator it = self.tmap.find(key)
        if it == self.tmap.end():
            self.tmap[key] = <int64_t>self.tkey.size()
            self.tkey.push_back(key)
            self.tweight.push_back(1)
            _fen_append(self.tfen, 1)
        else:
            tid = deref(it).second
            self.tweight[tid] += 1
            _fen_add(self.tfen, tid, 1)
        self.ttotal += 1

    cdef inline void _interact(self, int64_t x, int64_t y, int64_t z, bint fresh_vertex) nogil:
        # participants sorted x < y < z; creations level-ascending, pairs
        # lexicographic, matching the Python engine's canonical order
        self.vweight[x] += 1
        self.vweight[y] += 1
        if not fresh_vertex:
            self.vweight[z] += 1
        cdef int64_t exy = self._touch_edge(x, y)
        self._touch_edge(x, z)
        self._touch_edge(y, z)
        self._touch_tri(exy, z)

    cdef void _step(self) nogil:
        cdef double u = self._next_double()
        cdef uint64_t nv = <uint64_t>self.vweight.size()
        cdef int64_t a, b, c, z, eid, tmp
        cdef uint64_t key, pair
        if u < self.t0:
            eid = _fen_locate(self.efen, <int64_t>self._randbelow(<uint64_t>self.etotal))
            key = self.ekey[eid]
            a = <int64_t>(key >> 32)
            b = <int64_t>(key & _M32)
            z = self._add_vertex()
            self._interact(a, b, z, True)
        elif u < self.t1:
            a = <int64_t>self._randbelow(nv)
            b = <int64_t>self._randbelow(nv)
            while b == a:
                b = <int64_t>self._randbelow(nv)
            if a > b:
                tmp = a
                a = b
                b = tmp
            z = self._add_vertex()
            self._interact(a, b, z, True)
        elif u < self.t2:
            eid = _fen_locate(self.tfen, <int64_t>self._randbelow(<uint64_t>self.ttotal))
            key = self.tkey[eid]
            c = <int64_t>(key & _M32)
            pair = self.ekey[key >> 32]
            a = <int64_t>(pair >> 32)
            b = <int64_t>(pair & _M32)
            self._interact(a, b, c, False)
        else:
            a = <int64_t>self._randbelow(nv)
            b = <int64_t>self._randbelow(nv)
            while b == a:
                b = <int64_t>self._randbelow(nv)
            c = <int64_t>self._randbelow(nv)
            while c == a or c == b:
                c = <int64_t>self._randbelow(nv)
            if a > b:
                tmp = a
                a = b
                b = tmp
            if b > c:
                tmp = b
                b = c
                c = tmp
            if a > b:
                tmp = a
                a = b
                b = tmp
            self._interact(a, b, c, False)
        self.steps_done += 1

    # ---- python-facing API ----

    def run_to(self, target):
        cdef int64_t goal = target
        if goal < self.steps_done:
            raise ValueError(f"cannot rewind from step {self.steps_done} to {goal}")
        with nogil:
            while self.steps_done < goal:
                self._step()

    @property
    def n(self):
        return self.steps_done

    @property
    def vertex_count(self):
        return <int64_t>self.vweight.size()

    @property
    def edge_count(self):
        return <int64_t>self.ekey.size()

    @property
    def top_count(self):
        return <int64_t>self.tkey.size()

    @property
    def vertex_total(self):
        cdef int64_t i, s = 0
        for i in range(<int64_t>self.vweight.size()):
            s += self.vweight[i]
        return s

    @property
    def edge_total(self):
        return self.etotal

    @property
    def top_total(self):
        return self.ttotal

    def vertex_weight_hist(self):
        return _hist_from(self.vweight)

    def edge_weight_hist(self):
        return _hist_from(self.eweight)

    def top_weight_hist(self):
        return _hist_from(self.tweight)

    def degree_hist(self):
        return _hist_from(self.vdeg)
