"""Free modules over a GF(2) polynomial ring and syzygy computation.

A module monomial is a pair (position, ring monomial); a vector is a
frozenset of such pairs.  Syzygies are computed by the tag-column method:
each input vector v_i is augmented with a unit in a trailing block, a module
Groebner basis is computed under an order eliminating the leading block, and
the basis elements supported entirely on the trailing block generate the
module of relations among the v_i.
"""

from __future__ import annotations

import heapq
from bisect import insort
from typing import Sequence

from .f2poly import Polynomial, Ring
from .groebner import Budget

Vector = frozenset  # of (pos, monomial)


def vector_from_coords(coords: Sequence[Polynomial]) -> Vector:
    return frozenset((i, m) for i, p in enumerate(coords) for m in p)


def vector_to_coords(v: Vector, rank: int) -> list:
    out = [set() for _ in range(rank)]
    for pos, m in v:
        out[pos].add(m)
    return [frozenset(s) for s in out]


def _mul_vec(v: Vector, m) -> Vector:
    return frozenset((pos, tuple(x + y for x, y in zip(mm, m))) for pos, mm in v)


class _ModOrder:
    """Compare (position, monomial): front block first, then ring order, then slot."""

    __slots__ = ("ring", "front")

    def __init__(self, ring: Ring, front: int):
        self.ring = ring
        self.front = front

    def key(self, pm):
        pos, m = pm
        return (1 if pos < self.front else 0, self.ring.key(m), -pos)


def _nf_vec(order: _ModOrder, v: Vector, reducers, budget: Budget | None) -> Vector:
    if not v:
        return frozenset()
    ring = order.ring
    divides = ring.divides

    def negkey(pm):
        pos, m = pm
        return (0 if pos < order.front else 1, ring.negkey(m), pos)

    work = set(v)
    heap = [(negkey(pm), pm) for pm in work]
    heapq.heapify(heap)
    rem = []
    while heap:
        pm = heapq.heappop(heap)[1]
        if pm not in work:
            continue
        work.remove(pm)
        pos, m = pm
        hit = None
        for rlm, _, tail in reducers.get(pos, ()):
            if divides(rlm, m):
                hit = (rlm, tail)
                break
        if hit is None:
            rem.append(pm)
            continue
        if budget is not None:
            budget.spend()
        rlm, tail = hit
        q = tuple(x - y for x, y in zip(m, rlm))
        for tpos, tm in tail:
            t = (tpos, tuple(x + y for x, y in zip(tm, q)))
            if t in work:
                work.remove(t)
            else:
                work.add(t)
                heapq.heappush(heap, (negkey(t), t))
    return frozenset(rem)


def _module_groebner(order: _ModOrder, vectors, budget: Budget | None):
    ring = order.ring
    G: list = []
    lead: list = []  # (pos, mono)
    reducers: dict = {}  # position -> sorted (lm, key, tail)

    def update(pairs, f):
        lf = max(f, key=order.key)
        posf, mf = lf
        t = len(G)
        kept = set()
        for (i, j) in pairs:
            pi, mi = lead[i]
            pj, mj = lead[j]
            lij = ring.lcm_mono(mi, mj)
            if (posf != pi or (not ring.divides(mf, lij))
                    or ring.lcm_mono(mi, mf) == lij or ring.lcm_mono(mj, mf) == lij):
                kept.add((i, j))
        by_lcm: dict = {}
        for i in range(t):
            if lead[i][0] == posf:
                by_lcm.setdefault(ring.lcm_mono(lead[i][1], mf), []).append(i)
        minimal = []
        for L in sorted(by_lcm, key=ring.key):
            if all(not ring.divides(M, L) for M in minimal):
                minimal.append(L)
        for L in minimal:
            kept.add((min(by_lcm[L]), t))
        G.append(f)
        lead.append(lf)
        insort(reducers.setdefault(posf, []), (mf, order.key(lf), f - {lf}),
               key=lambda t: t[1])
        return kept

    pairs: set = set()
    queue: list = []

    def enqueue(fresh):
        for ij in fresh:
            L = ring.lcm_mono(lead[ij[0]][1], lead[ij[1]][1])
            heapq.heappush(queue, (ring.key(L), ij))

    for v in vectors:
        v = _nf_vec(order, v, reducers, budget)
        if v:
            before = pairs
            pairs = update(pairs, v)
            enqueue(pairs - before)
    while pairs:
        ij = heapq.heappop(queue)[1]
        if ij not in pairs:
            continue
        i, j = ij
        pairs.discard(ij)
        (pi, mi), (pj, mj) = lead[i], lead[j]
        lij = ring.lcm_mono(mi, mj)
        s = _mul_vec(G[i], ring.div_mono(lij, mi)) ^ _mul_vec(G[j], ring.div_mono(lij, mj))
        if budget is not None:
            budget.spend()
        r = _nf_vec(order, s, reducers, budget)
        if r:
            before = pairs
            pairs = update(pairs, r)
            enqueue(pairs - before)
    return G


def syzygies(ring: Ring, rank: int, vectors: Sequence[Vector],
             budget: Budget | None = None) -> list:
    """Generators for { (c_1..c_s) : sum c_i * v_i = 0 } in ring^len(vectors).

    Every returned generator is checked to annihilate the inputs.
    """
    s = len(vectors)
    if s == 0:
        return []
    unit = ring.unit()
    # peel off zero and duplicate columns first; they only add trivial syzygies
    trivial: list = []
    live_idx: list = []
    seen: dict = {}
    for i, v in enumerate(vectors):
        if not v:
            trivial.append(frozenset({(i, unit)}))
        elif v in seen:
            trivial.append(frozenset({(seen[v], unit), (i, unit)}))
        else:
            seen[v] = i
            live_idx.append(i)
    order = _ModOrder(ring, rank)
    aug = []
    for i in live_idx:
        aug.append(vectors[i] | {(rank + i, unit)})
    G = _module_groebner(order, aug, budget)
    out = list(trivial)
    for g in G:
        if all(pos >= rank for pos, _ in g):
            out.append(frozenset((pos - rank, m) for pos, m in g))
    for c in out:
        acc = set()
        for j, m in c:
            acc ^= _mul_vec(vectors[j], m)
        if acc:
            raise AssertionError("syzygy failed to annihilate the input vectors")
    return out
