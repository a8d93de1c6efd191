"""Buchberger's algorithm over GF(2), reduced bases, and the derived queries.

Everything here is deterministic: inputs are canonically sorted before any
pair selection happens, so a given (generating set, order) always yields the
same reduced basis, byte for byte.
"""

from __future__ import annotations

import heapq
import os
from bisect import insort
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .f2poly import (ZERO, BudgetExceeded, ContractError, Polynomial, Ring,
                     SchemaError)

DEFAULT_BUDGET_STEPS = 20_000_000


class Budget:
    """Mutable step counter shared across nested basis computations."""

    __slots__ = ("left",)

    def __init__(self, steps: int | None = None):
        if steps is None:
            steps = int(os.environ.get("SWC_BUDGET", DEFAULT_BUDGET_STEPS))
        self.left = steps

    def spend(self, k: int = 1):
        self.left -= k
        if self.left < 0:
            raise BudgetExceeded("computation abandoned: step budget exceeded")


def poly_key(ring: Ring, p: Polynomial):
    """Canonical comparison key for whole polynomials."""
    return tuple(sorted((ring.key(m) for m in p), reverse=True))


# ----------------------------------------------------------------------------
# division


def _prep(ring: Ring, gb: Sequence[Polynomial]):
    """Precompute (lm, tail) reducers, sorted so small leading terms come first."""
    reducers = []
    for g in gb:
        if not g:
            continue
        lm = ring.lm(g)
        reducers.append((lm, ring.key(lm), g - {lm}))
    reducers.sort(key=lambda t: t[1])
    return reducers


def _nf(ring: Ring, p: Polynomial, reducers, budget: Budget | None) -> Polynomial:
    """Full division: a lazy max-heap walks the support from the top down."""
    if not p:
        return ZERO
    divides = ring.divides
    negkey = ring.negkey
    work = set(p)
    heap = [(negkey(m), m) for m in work]
    heapq.heapify(heap)
    rem = []
    while heap:
        m = heapq.heappop(heap)[1]
        if m not in work:
            continue
        work.remove(m)
        hit = None
        for lm, _, tail in reducers:
            if divides(lm, m):
                hit = (lm, tail)
                break
        if hit is None:
            rem.append(m)
            continue
        if budget is not None:
            budget.spend()
        lm, tail = hit
        q = tuple(x - y for x, y in zip(m, lm))
        for t in tail:
            tm = tuple(x + y for x, y in zip(t, q))
            if tm in work:
                work.remove(tm)
            else:
                work.add(tm)
                heapq.heappush(heap, (negkey(tm), tm))
    return frozenset(rem)


def _check_ring(ring: Ring, p: Polynomial):
    if p and len(next(iter(p))) != ring.n:
        raise SchemaError("polynomial does not live over this variable set")


def normal_form(ring: Ring, p: Polynomial, gb: Sequence[Polynomial],
                budget: Budget | None = None) -> Polynomial:
    """Remainder of p modulo gb; zero iff p lies in the ideal (gb reduced)."""
    _check_ring(ring, p)
    for g in gb:
        _check_ring(ring, g)
    return _nf(ring, p, _prep(ring, gb), budget)


# ----------------------------------------------------------------------------
# Buchberger


def _update(ring, G, lms, pairs, f, budget):
    """Gebauer-Moeller pair update when f joins the basis."""
    lcm, mul, divides = ring.lcm_mono, ring.mul_mono, ring.divides
    lmf = ring.lm(f)
    t = len(G)
    kept = set()
    for (i, j) in pairs:
        lij = lcm(lms[i], lms[j])
        if (not divides(lmf, lij)) or lcm(lms[i], lmf) == lij or lcm(lms[j], lmf) == lij:
            kept.add((i, j))
    by_lcm: dict = {}
    for i in range(t):
        by_lcm.setdefault(lcm(lms[i], lmf), []).append(i)
    minimal = []
    for L in sorted(by_lcm, key=ring.key):
        if all(not divides(M, L) for M in minimal):
            minimal.append(L)
    for L in minimal:
        if not any(lcm(lms[i], lmf) == mul(lms[i], lmf) for i in by_lcm[L]):
            kept.add((min(by_lcm[L]), t))
    G.append(f)
    lms.append(lmf)
    return kept


def buchberger(ring: Ring, gens: Iterable[Polynomial],
               budget: Budget | None = None,
               cap: int | None = None) -> tuple:
    """Reduced Groebner basis of the ideal generated by gens.

    With a degree cap, homogeneous elements above the cap are discarded as
    they appear (the result then presents the ideal in degrees <= cap).
    """
    gens = list(gens)
    for g in gens:
        _check_ring(ring, g)
    seed = sorted({g for g in gens if g}, key=lambda p: poly_key(ring, p))
    if cap is not None:
        for g in seed:
            if not ring.is_homogeneous(g):
                raise ContractError("degree caps require homogeneous generators")
        seed = [g for g in seed if ring.poly_degree(g) <= cap]
    G: list = []
    lms: list = []
    reducers: list = []  # sorted (lm, key, tail), grown alongside G
    pairs: set = set()
    queue: list = []  # heap mirror of `pairs`, stale entries skipped

    def admit(g):
        nonlocal pairs
        before = pairs
        pairs = _update(ring, G, lms, pairs, g, budget)
        for ij in pairs - before:
            L = ring.lcm_mono(lms[ij[0]], lms[ij[1]])
            heapq.heappush(queue, (ring.key(L), ij))
        lm = lms[-1]
        insort(reducers, (lm, ring.key(lm), g - {lm}), key=lambda t: t[1])

    for g in seed:
        g = _nf(ring, g, reducers, budget)
        if g:
            admit(g)
    while pairs:
        ij = heapq.heappop(queue)[1]
        if ij not in pairs:
            continue
        i, j = ij
        pairs.discard(ij)
        lij = ring.lcm_mono(lms[i], lms[j])
        s = (ring.mul_by_mono(G[i], ring.div_mono(lij, lms[i]))
             ^ ring.mul_by_mono(G[j], ring.div_mono(lij, lms[j])))
        if budget is not None:
            budget.spend()
        r = _nf(ring, s, reducers, budget)
        if r and cap is not None and ring.deg(ring.lm(r)) > cap:
            continue
        if r:
            admit(r)
    return _reduce_basis(ring, G, budget)


def _reduce_basis(ring: Ring, G: Sequence[Polynomial], budget) -> tuple:
    """Minimalize leading terms, then autoreduce tails; canonical sort."""
    order = sorted((g for g in G if g), key=lambda g: ring.key(ring.lm(g)))
    minimal: list = []
    for g in order:
        lg = ring.lm(g)
        if not any(ring.divides(ring.lm(h), lg) for h in minimal):
            minimal.append(g)
    changed = True
    while changed:
        changed = False
        for i, g in enumerate(minimal):
            others = minimal[:i] + minimal[i + 1:]
            r = _nf(ring, g, _prep(ring, others), budget)
            if r != g:
                minimal[i] = r
                changed = True
        minimal = [g for g in minimal if g]
    minimal.sort(key=lambda g: ring.key(ring.lm(g)))
    return tuple(minimal)


def ideal_equal(ring: Ring, a: Sequence[Polynomial], b: Sequence[Polynomial]) -> bool:
    """Reduced bases over one ring are canonical, so compare as sets."""
    return frozenset(a) == frozenset(b)


def minimal_generators(ring: Ring, gb: Sequence[Polynomial],
                       budget: Budget | None = None) -> tuple:
    """Minimal homogeneous generating set extracted degree by degree."""
    for g in gb:
        if not ring.is_homogeneous(g):
            raise ContractError("minimal_generators requires a homogeneous ideal")
    elems = sorted(gb, key=lambda g: (ring.poly_degree(g), poly_key(ring, g)))
    kept: list = []
    kept_gb: tuple = ()
    for g in elems:
        if kept_gb and not _nf(ring, g, _prep(ring, kept_gb), budget):
            continue
        kept.append(g)
        kept_gb = buchberger(ring, kept, budget)
    return tuple(kept)


# ----------------------------------------------------------------------------
# presented algebras


@dataclass(frozen=True)
class Algebra:
    """A graded quotient ring: ambient polynomial ring plus a reduced basis."""

    ring: Ring
    relations: tuple

    def nf(self, p: Polynomial, budget: Budget | None = None) -> Polynomial:
        return normal_form(self.ring, p, self.relations, budget)


def present(ring: Ring, gens: Iterable[Polynomial],
            budget: Budget | None = None, check_homogeneous: bool = True) -> Algebra:
    gens = list(gens)
    if check_homogeneous:
        for g in gens:
            if not ring.is_homogeneous(g):
                raise ContractError("relation %s is not homogeneous" % ring.format_poly(g))
    return Algebra(ring, buchberger(ring, gens, budget))


def standard_monomials(alg: Algebra, d: int) -> list:
    """Monomials of degree d not divisible by any leading term, ascending order."""
    lms = [alg.ring.lm(g) for g in alg.relations]
    out = [m for m in alg.ring.monomials_of_degree(d)
           if not any(alg.ring.divides(l, m) for l in lms)]
    out.sort(key=alg.ring.key)
    return out


def graded_dimension(alg: Algebra, d: int) -> int:
    if d < 0:
        raise ContractError("degree must be nonnegative")
    return len(standard_monomials(alg, d))


def enumerate_degree(alg: Algebra, d: int) -> Iterator[Polynomial]:
    """All 2^dim residue classes in degree d, as normal forms, zero first."""
    basis = standard_monomials(alg, d)
    for mask in range(1 << len(basis)):
        yield frozenset(m for i, m in enumerate(basis) if mask >> i & 1)


def is_finite_dimensional(alg: Algebra) -> tuple:
    """(True, total dimension) iff every variable has a pure-power leading term."""
    ring = alg.ring
    caps = [None] * ring.n
    for g in alg.relations:
        lm = ring.lm(g)
        support = [i for i, e in enumerate(lm) if e]
        if len(support) == 1:
            i = support[0]
            if caps[i] is None or lm[i] < caps[i]:
                caps[i] = lm[i]
    if any(c is None for c in caps):
        return (False, None)
    lms = [ring.lm(g) for g in alg.relations]
    count = 0
    stack = [(0, ring.unit())]
    while stack:
        i, m = stack.pop()
        if i == ring.n:
            if not any(ring.divides(l, m) for l in lms):
                count += 1
            continue
        for e in range(caps[i]):
            mm = list(m)
            mm[i] = e
            stack.append((i + 1, tuple(mm)))
    return (True, count)


# ----------------------------------------------------------------------------
# kernels and subalgebras


def _combined_ring(target: Ring, names, degrees) -> Ring:
    src_names = ["\x00s%d" % i for i in range(len(names))]
    ring = Ring(tuple(target.names) + tuple(src_names),
                tuple(target.degrees) + tuple(degrees),
                front=range(target.n))
    return ring


def kernel_of_map(source_names: Sequence[str], source_degrees: Sequence[int],
                  target: Algebra, images: Sequence[Polynomial],
                  budget: Budget | None = None) -> tuple:
    """Reduced basis (in a fresh default-order source ring) of the kernel of
    the ring map sending source variable i to images[i] in the target algebra.

    Returns (source_ring, basis).  Computed by block elimination: target
    variables form the front block and are eliminated.
    """
    if len(images) != len(source_names):
        raise ContractError("need one image per source variable")
    tring = target.ring
    for nm, d, img in zip(source_names, source_degrees, images):
        if img and tring.poly_degree(img) != d:
            raise ContractError("image of %s has degree %d, expected %d"
                                % (nm, tring.poly_degree(img), d))
    comb = _combined_ring(tring, source_names, source_degrees)
    gens = [_lift(tring, comb, g) for g in target.relations]
    for i, img in enumerate(images):
        v = [0] * comb.n
        v[tring.n + i] = 1
        gens.append(frozenset({tuple(v)}) ^ _lift(tring, comb, img))
    gb = buchberger(comb, gens, budget)
    source = Ring(source_names, source_degrees)
    kept = []
    for g in gb:
        if all(all(e == 0 for e in m[:tring.n]) for m in g):
            kept.append(frozenset(m[tring.n:] for m in g))
    return source, buchberger(source, kept, budget)


def _lift(src: Ring, comb: Ring, p: Polynomial) -> Polynomial:
    """Embed a target-ring polynomial into the combined ring (front positions)."""
    pad = comb.n - src.n
    return frozenset(m + (0,) * pad for m in p)


class Subring:
    """A subalgebra of a presented algebra, handled with tag variables.

    The combined ring puts the ambient variables in an elimination front
    block and one tag variable per subalgebra generator behind them; the
    reduced basis of (ambient relations + tag - expression) answers
    membership, rewriting, and the induced presentation.
    """

    def __init__(self, ambient: Algebra, gens: Sequence[tuple],
                 budget: Budget | None = None):
        # gens: list of (name, polynomial in ambient ring)
        self.ambient = ambient
        self.gens = list(gens)
        aring = ambient.ring
        degrees = []
        for nm, p in self.gens:
            if not p:
                raise ContractError("subalgebra generator %s is zero" % nm)
            degrees.append(aring.poly_degree(p))
        tags = tuple("\x00t%d" % i for i in range(len(self.gens)))
        self.comb = Ring(tuple(aring.names) + tags,
                         tuple(aring.degrees) + tuple(degrees),
                         front=range(aring.n))
        ideal = [_lift(aring, self.comb, g) for g in ambient.relations]
        for k, (nm, p) in enumerate(self.gens):
            v = [0] * self.comb.n
            v[aring.n + k] = 1
            ideal.append(frozenset({tuple(v)}) ^ _lift(aring, self.comb, p))
        self.gb = buchberger(self.comb, ideal, budget)
        self._budget = budget

    def reduce(self, p: Polynomial) -> Polynomial:
        return normal_form(self.comb, _lift(self.ambient.ring, self.comb, p),
                           self.gb, self._budget)

    def express(self, p: Polynomial):
        """Rewrite p in the tag variables, or None if p is not in the subalgebra."""
        an = self.ambient.ring.n
        r = self.reduce(p)
        if any(any(m[:an]) for m in r):
            return None
        return frozenset(m[an:] for m in r)

    def contains(self, p: Polynomial) -> bool:
        return self.express(p) is not None

    def tag_ring(self) -> Ring:
        return Ring(tuple(nm for nm, _ in self.gens),
                    tuple(self.comb.degrees[self.ambient.ring.n:]))

    def presentation(self) -> Algebra:
        """The subalgebra presented on its own generators."""
        an = self.ambient.ring.n
        ring = self.tag_ring()
        rels = [frozenset(m[an:] for m in g) for g in self.gb
                if all(not any(m[:an]) for m in g)]
        return Algebra(ring, buchberger(ring, rels, self._budget))


def subalgebra_slice_span(ambient: Algebra, gens: Sequence[tuple], d: int,
                          budget: Budget | None = None):
    """(span, basis): the degree-d slice of the subalgebra generated by gens,
    as masks over the ambient standard monomials of degree d."""
    from .linalg import SpanF2
    ring = ambient.ring
    basis = standard_monomials(ambient, d)
    pos = {m: i for i, m in enumerate(basis)}
    span = SpanF2()
    if gens:
        helper = Ring(tuple("\x00g%d" % i for i in range(len(gens))),
                      tuple(ring.poly_degree(p) for _, p in gens))
        exprs = {helper.names[i]: p for i, (_, p) in enumerate(gens)}
        for mono in helper.monomials_of_degree(d):
            val = ambient.nf(helper.substitute(frozenset({mono}), exprs, ring),
                             budget)
            mask = 0
            for m in val:
                mask |= 1 << pos[m]
            span.add(mask)
    return span, basis


def subalgebra_contains(ambient: Algebra, gens: Sequence[tuple], p: Polynomial,
                        budget: Budget | None = None) -> bool:
    """Homogeneous membership test, degree slice by degree slice."""
    p = ambient.nf(p, budget)
    if not p:
        return True
    d = ambient.ring.poly_degree(p)
    if d == 0:
        return True
    span, basis = subalgebra_slice_span(ambient, gens, d, budget)
    pos = {m: i for i, m in enumerate(basis)}
    mask = 0
    for m in p:
        mask |= 1 << pos[m]
    return span.contains(mask)


def minimalize_subalgebra(ambient: Algebra, gens: Sequence[tuple],
                          budget: Budget | None = None) -> list:
    """Drop generators lying in the subalgebra of the others.

    Everything is homogeneous, so membership in a given degree is linear
    algebra over the standard monomials of that degree: a candidate is
    redundant exactly when it falls in the span of the products of the kept
    generators.
    """
    ring = ambient.ring
    live = [(nm, ambient.nf(p, budget)) for nm, p in gens]
    live = [(nm, p) for nm, p in live if p and ring.poly_degree(p) > 0]
    seen: dict = {}
    for nm, p in live:
        seen.setdefault(p, nm)
    live = [(nm, p) for p, nm in
            sorted(((p, nm) for p, nm in seen.items()),
                   key=lambda t: (ring.poly_degree(t[0]), poly_key(ring, t[0])))]
    kept: list = []
    for nm, p in live:
        if not subalgebra_contains(ambient, kept, p, budget):
            kept.append((nm, p))
    return kept
