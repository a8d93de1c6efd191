"""Bounds for the image of the cycle map in mod-2 cohomology.

The Chern subring is a lower bound; the upper bound is the even-degree
subring killed by every Milnor derivation, computed by iterating the
syzygy-based kernel-of-a-derivation recipe until the even part becomes
Steenrod stable.
"""

from __future__ import annotations

from dataclasses import dataclass

from .f2poly import ZERO, ContractError, Polynomial, Ring
from .groebner import (Algebra, Budget, Subring, minimalize_subalgebra,
                       normal_form, standard_monomials, subalgebra_contains,
                       subalgebra_slice_span)
from .linalg import SpanF2, kernel_basis
from .modules_f2 import syzygies
from .solver import FinalPresentation


@dataclass
class UnstableAlgebra:
    """Presented algebra with a complete table of squares on its generators."""

    algebra: Algebra
    sq: dict  # generator name -> {k: Polynomial}, 0 <= k <= |generator|

    def __post_init__(self):
        ring = self.algebra.ring
        for i, nm in enumerate(ring.names):
            d = ring.degrees[i]
            table = self.sq.get(nm)
            if table is None or any(k not in table for k in range(d + 1)):
                raise ContractError("incomplete Steenrod table for %r" % nm)
            if table[0] != ring.var(nm):
                raise ContractError("Sq^0 must be the identity on %r" % nm)
            if self.algebra.nf(table[d] ^ ring.square(ring.var(nm))):
                raise ContractError("Sq^%d(%s) must be the square" % (d, nm))
        self._totals = {nm: _xor_all(self.sq[nm].values()) for nm in ring.names}
        for rel in self.algebra.relations:
            d = ring.poly_degree(rel)
            for k in range(1, d + 1):
                if self.sq_k(k, rel):
                    raise ContractError("Steenrod table is inconsistent with the "
                                        "relation %s" % ring.format_poly(rel))

    def total_square(self, p: Polynomial) -> Polynomial:
        ring = self.algebra.ring
        acc = ZERO
        for m in p:
            term = ring.one()
            for i, e in enumerate(m):
                if e:
                    term = ring.mul(term, ring.power(self._totals[ring.names[i]], e))
            acc = acc ^ term
        return acc

    def sq_k(self, k: int, p: Polynomial, budget: Budget | None = None) -> Polynomial:
        if not p:
            return ZERO
        d = self.algebra.ring.poly_degree(p)
        parts = self.algebra.ring.homogeneous_parts(self.total_square(p))
        return self.algebra.nf(parts.get(d + k, ZERO), budget)


def _xor_all(values) -> Polynomial:
    acc = ZERO
    for v in values:
        acc = acc ^ v
    return acc


def from_final_presentation(fp: FinalPresentation) -> UnstableAlgebra:
    """Build the unstable algebra of a solver result; every square must be known."""
    unknown = [nm for nm, table in fp.steenrod_table.items() if table is None]
    if unknown:
        raise ContractError("Steenrod action unknown on %s" % ", ".join(unknown))
    alg = Algebra(fp.ring, fp.kernel_basis)
    return UnstableAlgebra(alg, {nm: dict(t) for nm, t in fp.steenrod_table.items()})


# ---------------------------------------------------------------------------
# derivations


@dataclass
class Derivation:
    values: dict  # generator name -> Polynomial (reduced)

    def apply(self, alg: Algebra, p: Polynomial,
              budget: Budget | None = None) -> Polynomial:
        """Leibniz extension; squares die in characteristic 2."""
        ring = alg.ring
        acc = ZERO
        for m in p:
            for i, e in enumerate(m):
                if e % 2 == 0:
                    continue
                rest = list(m)
                rest[i] -= 1
                acc = acc ^ ring.mul_by_mono(self.values[ring.names[i]], tuple(rest))
        return alg.nf(acc, budget)


def check_derivation(alg: Algebra, d: Derivation, budget: Budget | None = None):
    for rel in alg.relations:
        if d.apply(alg, rel, budget):
            raise ContractError("derivation does not descend to the quotient")


def milnor_derivation(i: int, A: UnstableAlgebra,
                      budget: Budget | None = None) -> Derivation:
    """Q_0 = Sq^1, Q_{n+1} = Sq^{2^{n+1}} Q_n + Q_n Sq^{2^{n+1}}."""
    if i < 0:
        raise ContractError("Milnor index must be nonnegative")
    ring = A.algebra.ring
    cur = Derivation({nm: A.sq_k(1, ring.var(nm), budget) for nm in ring.names})
    for n in range(i):
        shift = 2 ** (n + 1)
        nxt = {}
        for nm in ring.names:
            v = ring.var(nm)
            nxt[nm] = A.algebra.nf(
                A.sq_k(shift, cur.apply(A.algebra, v, budget), budget)
                ^ cur.apply(A.algebra, A.sq_k(shift, v, budget), budget), budget)
        cur = Derivation(nxt)
    check_derivation(A.algebra, cur, budget)
    expected = 2 ** (i + 1) - 1
    for nm, val in cur.values.items():
        if val and ring.poly_degree(val) != _gen_degree(ring, nm) + expected:
            raise AssertionError("Milnor derivation has wrong degree")
    return cur


def _gen_degree(ring: Ring, nm: str) -> int:
    return ring.degrees[ring.index[nm]]


# ---------------------------------------------------------------------------
# kernel of a derivation


@dataclass
class SubalgebraResult:
    gens: list          # (name, expression in the ambient algebra)
    presentation: Algebra
    subring: Subring


def _present_subalgebra(ambient: Algebra, gens, budget=None) -> SubalgebraResult:
    sub = Subring(ambient, gens, budget)
    return SubalgebraResult(list(gens), sub.presentation(), sub)


def derivation_kernel(alg: Algebra, d: Derivation,
                      budget: Budget | None = None,
                      rank_budget: int = 4096) -> SubalgebraResult:
    """Algebra generators for ker d, via the syzygy module of the images of a
    module basis together with the relation columns.

    Variables moved by d contribute their squares to the base ring B; the
    ambient algebra is a B-module generated by the square-free monomials in
    the moved variables.
    """
    ring = alg.ring
    moved = [i for i, nm in enumerate(ring.names) if d.values[nm]]
    if len(moved) > 12 or (1 << len(moved)) > rank_budget:
        raise ContractError("free-module rank 2^%d exceeds the budget" % len(moved))
    n = 1 << len(moved)

    bnames = ["b%d" % i for i in range(ring.n)]
    bdegrees = [ring.degrees[i] * (2 if i in moved else 1) for i in range(ring.n)]
    bring = Ring(bnames, bdegrees)

    moved_pos = {i: t for t, i in enumerate(moved)}

    def basis_mono(mask: int):
        m = [0] * ring.n
        for t, i in enumerate(moved):
            if mask >> t & 1:
                m[i] = 1
        return tuple(m)

    def decompose(p: Polynomial):
        """Ambient polynomial -> vector over the base ring."""
        out = set()
        for m in p:
            pos = 0
            bm = [0] * ring.n
            for i, e in enumerate(m):
                t = moved_pos.get(i)
                if t is not None:
                    if e % 2:
                        pos |= 1 << t
                    bm[i] = e // 2
                else:
                    bm[i] = e
            out.add((pos, tuple(bm)))
        return frozenset(out)

    def recompose(pos: int, bm) -> Polynomial:
        m = list(basis_mono(pos))
        for i in range(ring.n):
            m[i] += bm[i] * (2 if i in moved_pos else 1)
        return frozenset({tuple(m)})

    vectors = []
    for mask in range(n):
        eps = frozenset({basis_mono(mask)})
        vectors.append(decompose(d.apply(alg, eps, budget)))
    for f in alg.relations:
        for mask in range(n):
            eps = frozenset({basis_mono(mask)})
            vectors.append(decompose(ring.mul(eps, f)))

    syz = syzygies(bring, n, vectors, budget)

    candidates = []
    for nm_i, i in ((ring.names[i], i) for i in range(ring.n)):
        if i in moved:
            candidates.append(("sq_" + nm_i, alg.nf(ring.square(ring.var(nm_i)), budget)))
        else:
            candidates.append((nm_i, alg.nf(ring.var(nm_i), budget)))
    for s_index, s in enumerate(syz):
        acc = ZERO
        for pos, bm in s:
            if pos < n:
                acc = acc ^ recompose(pos, bm)
        val = alg.nf(acc, budget)
        if val and ring.poly_degree(val) > 0:
            candidates.append(("s%d" % s_index, val))

    live = minimalize_subalgebra(alg, candidates, budget)
    named = [("k%d" % i, expr) for i, (_, expr) in enumerate(live)]
    result = _present_subalgebra(alg, named, budget)
    for _, expr in named:
        if d.apply(alg, expr, budget):
            raise AssertionError("kernel generator not killed by the derivation")
    return result


# ---------------------------------------------------------------------------
# the even Steenrod-annihilated subring


@dataclass
class ChowReport:
    chern_generators: list      # polynomial strings in the ambient generators
    tilde_generators: list
    equal: bool
    equal_mod_sqrt0: bool
    iterations: int
    stable: bool = True


def even_part(ambient: Algebra, gens, budget=None) -> list:
    """Even-degree generators plus squares of the odd ones, minimalized."""
    ring = ambient.ring
    cands = []
    for nm, expr in gens:
        if ring.poly_degree(expr) % 2 == 0:
            cands.append((nm, expr))
        else:
            cands.append((nm + "_sq", ambient.nf(ring.square(expr), budget)))
    return minimalize_subalgebra(ambient, [c for c in cands if c[1]], budget)


def tilde_subring(A: UnstableAlgebra, max_q: int = 6,
                  budget: Budget | None = None,
                  rank_budget: int = 4096):
    """Iterate kernels of Milnor derivations until the even part stabilizes.

    Returns (SubalgebraResult of the even part, N, stable_flag).
    """
    ambient = A.algebra
    ring = ambient.ring
    kgens = [(nm, ring.var(nm)) for nm in ring.names]
    kalg = ambient
    ksub = None  # Subring for expressing ambient elements in the current K

    for N in range(max_q + 1):
        q = milnor_derivation(N, A, budget)
        values = {}
        for knm, expr in kgens:
            img = q.apply(ambient, expr, budget)
            if ksub is None:
                values[knm] = img
            else:
                inside = ksub.express(img)
                if inside is None:
                    raise AssertionError("Milnor derivative left the current kernel")
                values[knm] = normal_form(kalg.ring, inside, kalg.relations, budget)
        dK = Derivation(values)
        check_derivation(kalg, dK, budget)
        kernel = derivation_kernel(kalg, dK, budget, rank_budget)
        # rewrite kernel generators as ambient expressions
        images = {nm: expr for nm, expr in kgens}
        new_gens = []
        for nm, expr in kernel.gens:
            amb = kalg.ring.substitute(expr, images, ring)
            new_gens.append((nm, ambient.nf(amb, budget)))
        new_gens = minimalize_subalgebra(ambient, new_gens, budget)
        kgens = [("g%d" % i, expr) for i, (_, expr) in enumerate(new_gens)]
        ksub = Subring(ambient, kgens, budget)
        kalg = ksub.presentation()

        ev = even_part(ambient, kgens, budget)
        if _even_stable(A, ev, N, budget):
            result = _present_subalgebra(ambient, [("t%d" % i, expr)
                                                   for i, (_, expr) in enumerate(ev)],
                                         budget)
            return result, N, True
    ev = even_part(ambient, kgens, budget)
    result = _present_subalgebra(ambient, [("t%d" % i, expr)
                                           for i, (_, expr) in enumerate(ev)], budget)
    return result, max_q, False


def _even_stable(A: UnstableAlgebra, ev, N: int, budget) -> bool:
    """Sq^k of every generator must stay inside the even part and be killed by
    the first Milnor derivations; that certifies the whole subalgebra."""
    ambient = A.algebra
    if not ev:
        return True
    qs = [milnor_derivation(i, A, budget) for i in range(N + 1)]
    for _, u in ev:
        d = ambient.ring.poly_degree(u)
        for k in range(1, d):
            s = A.sq_k(k, u, budget)
            if not s:
                continue
            if not subalgebra_contains(ambient, ev, s, budget):
                return False
            if any(q.apply(ambient, s, budget) for q in qs):
                return False
    return True


# ---------------------------------------------------------------------------
# the lower bound and the comparison


def chern_subring(fp: FinalPresentation, budget: Budget | None = None) -> SubalgebraResult:
    """Subalgebra generated by every Chern class, from the solver dictionary."""
    ambient = Algebra(fp.ring, fp.kernel_basis)
    cands = [("c%d" % i, expr)
             for i, (_, expr) in enumerate(sorted(fp.chern_dictionary.items()))
             if expr]
    live = minimalize_subalgebra(ambient, cands, budget)
    return _present_subalgebra(ambient, [("c%d" % i, expr)
                                         for i, (_, expr) in enumerate(live)], budget)


def _degree_slice_span(ambient: Algebra, sub: SubalgebraResult, d: int,
                       budget=None) -> SpanF2:
    """Span of the subalgebra's degree-d part over the ambient monomial basis."""
    span, _ = subalgebra_slice_span(ambient, sub.gens, d, budget)
    return span


def _square_zero_span(ambient: Algebra, d: int, budget=None) -> SpanF2:
    """Degree-d elements whose square reduces to zero (squaring is linear)."""
    basis = standard_monomials(ambient, d)
    target = standard_monomials(ambient, 2 * d)
    tpos = {m: i for i, m in enumerate(target)}
    images = []
    for m in basis:
        sq = ambient.nf(ambient.ring.square(frozenset({m})), budget)
        mask = 0
        for mm in sq:
            mask |= 1 << tpos[mm]
        images.append(mask)
    span = SpanF2()
    for combo in kernel_basis(images):
        span.add(combo)
    return span


def frobenius_probe(ambient: Algebra, chern: SubalgebraResult,
                    tilde: SubalgebraResult, n: int,
                    budget: Budget | None = None) -> bool:
    """Diagnostic: does every upper-bound generator land in the Chern subring
    after raising to the 2^n-th power?  True for n large enough; the bound is
    not known a priori, so n is caller-supplied."""
    ring = ambient.ring
    for _, u in tilde.gens:
        p = u
        for _ in range(n):
            p = ambient.nf(ring.square(p), budget)
        if p and not subalgebra_contains(ambient, chern.gens, p, budget):
            return False
    return True


def compare_bounds(ambient: Algebra, chern: SubalgebraResult,
                   tilde: SubalgebraResult,
                   budget: Budget | None = None,
                   iterations: int = 0, stable: bool = True) -> ChowReport:
    """Mutual membership, then the square-zero comparison degree by degree."""
    equal = (all(subalgebra_contains(ambient, tilde.gens, expr, budget)
                 for _, expr in chern.gens)
             and all(subalgebra_contains(ambient, chern.gens, expr, budget)
                     for _, expr in tilde.gens))

    def mod_sqrt0(u: Polynomial, other: SubalgebraResult) -> bool:
        if not u:
            return True
        d = ambient.ring.poly_degree(u)
        basis = standard_monomials(ambient, d)
        pos = {m: i for i, m in enumerate(basis)}
        mask = 0
        for m in u:
            mask |= 1 << pos[m]
        span = _degree_slice_span(ambient, other, d, budget)
        for row in _square_zero_span(ambient, d, budget).pivots.values():
            span.add(row)
        return span.contains(mask)

    if equal:
        eq0 = True
    else:
        eq0 = (all(mod_sqrt0(expr, tilde) for _, expr in chern.gens)
               and all(mod_sqrt0(expr, chern) for _, expr in tilde.gens))
    fmt = ambient.ring.format_poly
    return ChowReport([fmt(e) for _, e in chern.gens],
                      [fmt(e) for _, e in tilde.gens],
                      equal, eq0, iterations, stable)
