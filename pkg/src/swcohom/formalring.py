"""The formal ring of Stiefel-Whitney classes.

Starting from representation data we build the polynomial ring on symbols
w_j(r_i), impose the relations that characteristic-class formalism forces
(vanishing by endomorphism type, tensor products and exterior powers through
the splitting principle, Chern-class relations pushed through the
complexification/realification rules), close the ideal under the Steenrod
squares via Wu's formula, and finally eliminate redundant variables.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb as binomial

from .f2poly import ZERO, Polynomial, Ring
from .groebner import (Algebra, Budget, buchberger, minimal_generators,
                       normal_form)
from .repdata import Decomposition, RepTheoryData


def sw_name(rep: str, j: int) -> str:
    return "w%d(%s)" % (j, rep)


def chern_name(rep: str, j: int) -> str:
    return "c%d(%s)" % (j, rep)


class ClassFamily:
    """One graded family of characteristic-class variables.

    Stiefel-Whitney classes have root degree 1 and w_j in degree j; Chern
    classes are the same machinery with every degree doubled.
    """

    def __init__(self, reps, namer, root_degree: int):
        self.reps = list(reps)  # (rep name, dimension)
        self.dims = dict(self.reps)
        self.namer = namer
        self.root_degree = root_degree
        names, degrees = [], []
        for rep, dim in self.reps:
            for j in range(1, dim + 1):
                names.append(namer(rep, j))
                degrees.append(j * root_degree)
        self.ring = Ring(names, degrees)
        self.meta = {}
        for rep, dim in self.reps:
            for j in range(1, dim + 1):
                self.meta[namer(rep, j)] = (rep, j, dim)

    def total_class(self, rep: str) -> Polynomial:
        """1 + w_1(rep) + ... + w_dim(rep)."""
        acc = set(self.ring.one())
        for j in range(1, self.dims[rep] + 1):
            acc |= self.ring.var(self.namer(rep, j))
        return frozenset(acc)


def total_of_decomposition(fam: ClassFamily, dec: Decomposition,
                           cap: int | None = None) -> Polynomial:
    """Total class of a nonnegative combination: product of per-summand totals."""
    acc = fam.ring.one()
    for rep, mult in dec.items():
        acc = fam.ring.mul(acc, fam.ring.power(fam.total_class(rep), mult, cap), cap)
    return acc


# ---------------------------------------------------------------------------
# splitting principle


def _root_ring(fam: ClassFamily, reps) -> tuple:
    """Auxiliary ring with one degree-r root per slot, one block per rep."""
    names, degrees, blocks = [], [], {}
    for rep in dict.fromkeys(reps):  # preserve order, dedupe
        dim = fam.dims[rep]
        idx = []
        for k in range(dim):
            idx.append(len(names))
            names.append("@%s.%d" % (rep, k))
            degrees.append(fam.root_degree)
        blocks[rep] = idx
    return Ring(names, degrees), blocks


def _lex_key(m):
    return m  # plain lex on the exponent tuple, earlier roots are bigger


def _elementary(ring: Ring, positions, j: int) -> Polynomial:
    acc = set()
    for sub in combinations(positions, j):
        m = [0] * ring.n
        for i in sub:
            m[i] = 1
        acc.add(tuple(m))
    return frozenset(acc)


def symmetric_reduce(fam: ClassFamily, rring: Ring, blocks: dict,
                     p: Polynomial) -> Polynomial:
    """Rewrite a block-symmetric root polynomial in the class variables.

    Classical leading-term subtraction; a leading monomial that is not
    non-increasing inside every block means the input was not symmetric,
    which is an internal invariant breach.
    """
    out = ZERO
    work = p
    ering = fam.ring
    while work:
        m = max(work, key=_lex_key)
        target = ering.unit()
        expansion = rring.one()
        for rep, pos in blocks.items():
            exps = [m[i] for i in pos]
            if any(exps[i] < exps[i + 1] for i in range(len(exps) - 1)):
                raise AssertionError("non-symmetric intermediate in splitting "
                                     "principle expansion")
            lam = exps + [0]
            emono = list(target)
            for j in range(1, len(pos) + 1):
                mult = lam[j - 1] - lam[j]
                if mult:
                    v = ering.index[fam.namer(rep, j)]
                    tmp = list(emono)
                    tmp[v] += mult
                    emono = tmp
                    expansion = rring.mul(expansion,
                                          rring.power(_elementary(rring, pos, j), mult))
            target = tuple(emono)
        out = out ^ frozenset({target})
        work = work ^ expansion
    return out


def _root_mono(ring: Ring, i: int) -> frozenset:
    m = [0] * ring.n
    m[i] = 1
    return frozenset({tuple(m)})


def expand_tensor_pair(fam: ClassFamily, a: str, b: str,
                       cap: int | None = None) -> Polynomial:
    """Total class of a (x) b over the roots: prod over (k, l) of (1 + a_k + b_l).

    For a == b both factors read from one root block, and the diagonal terms
    1 + 2a_k collapse to 1 in characteristic 2 (the xor cancels them).
    """
    rring, blocks = _root_ring(fam, [a, b])
    acc = rring.one()
    for i in blocks[a]:
        for j in blocks[b]:
            factor = rring.one() ^ _root_mono(rring, i) ^ _root_mono(rring, j)
            acc = rring.mul(acc, factor, cap)
    return _rewrite(fam, rring, blocks, acc)


def expand_lambda(fam: ClassFamily, rep: str, p: int,
                  cap: int | None = None) -> Polynomial:
    """Total class of lambda^p(rep): prod over p-subsets of (1 + sum of roots)."""
    rring, blocks = _root_ring(fam, [rep])
    acc = rring.one()
    for sub in combinations(blocks[rep], p):
        factor = rring.one()
        for i in sub:
            factor = factor ^ _root_mono(rring, i)
        acc = rring.mul(acc, factor, cap)
    return _rewrite(fam, rring, blocks, acc)


def _rewrite(fam: ClassFamily, rring: Ring, blocks: dict, p: Polynomial) -> Polynomial:
    out = ZERO
    for d, part in sorted(rring.homogeneous_parts(p).items()):
        out = out ^ symmetric_reduce(fam, rring, blocks, part)
    return out


# ---------------------------------------------------------------------------
# relation generators


def rationality_relations(fam: ClassFamily, data: RepTheoryData) -> list:
    """w_j vanishes for complex type and odd j, quaternion type and 4 not | j."""
    out = []
    for r in data.nontrivial_reals():
        if r.fs_type == "C":
            bad = [j for j in range(1, r.dim + 1) if j % 2]
        elif r.fs_type == "H":
            bad = [j for j in range(1, r.dim + 1) if j % 4]
        else:
            bad = []
        for j in bad:
            out.append(fam.ring.var(fam.namer(r.name, j)))
    return out


def _homogeneous_parts_nonzero(ring: Ring, p: Polynomial) -> list:
    return [part for _, part in sorted(ring.homogeneous_parts(p).items()) if part]


def tensor_relations(fam: ClassFamily, table: dict, cap: int | None = None) -> list:
    """Homogeneous parts of w(a (x) b) - w(decomposition) for every table entry."""
    out = []
    for (a, b) in sorted(table):
        dec = table[(a, b)]
        local_cap = fam.dims[a] * fam.dims[b] * fam.root_degree
        if cap is not None:
            local_cap = min(local_cap, cap)
        tp = expand_tensor_pair(fam, a, b, local_cap)
        tq = total_of_decomposition(fam, dec, local_cap)
        out.extend(_homogeneous_parts_nonzero(fam.ring, tp ^ tq))
    return out


def exterior_relations(fam: ClassFamily, table: dict, cap: int | None = None) -> list:
    out = []
    for (rep, p) in sorted(table):
        dec = table[(rep, p)]
        local_cap = binomial(fam.dims[rep], p) * fam.root_degree
        if cap is not None:
            local_cap = min(local_cap, cap)
        tp = expand_lambda(fam, rep, p, local_cap)
        tq = total_of_decomposition(fam, dec, local_cap)
        out.extend(_homogeneous_parts_nonzero(fam.ring, tp ^ tq))
    return out


def chern_to_sw_images(data: RepTheoryData, cfam: ClassFamily,
                       wfam: ClassFamily) -> dict:
    """The substitution c_j(rho) -> w_j(r)^2 or w_2j(r), by link kind."""
    images = {}
    links = {c.name: c for c in data.nontrivial_complexes()}
    for name, (rep, j, dim) in cfam.meta.items():
        c = links[rep]
        if c.link_kind == "complexification":
            images[name] = wfam.ring.square(wfam.ring.var(sw_name(c.link_real, j)))
        else:
            images[name] = wfam.ring.var(sw_name(c.link_real, 2 * j))
    return images


def chern_relations_and_phi(data: RepTheoryData, cfam: ClassFamily,
                            wfam: ClassFamily, cap: int | None = None) -> list:
    gens = tensor_relations(cfam, data.tensor_complex, cap)
    gens += exterior_relations(cfam, data.lambda_complex, cap)
    images = chern_to_sw_images(data, cfam, wfam)
    out = []
    for g in gens:
        h = cfam.ring.substitute(g, images, wfam.ring, cap)
        out.extend(_homogeneous_parts_nonzero(wfam.ring, h))
    return out


# ---------------------------------------------------------------------------
# Steenrod squares via Wu's formula


def _binom2(a: int, b: int) -> int:
    """Binomial coefficient mod 2: C(a,0)=1 always, 0 when b<0 or b>a>=0."""
    if b == 0:
        return 1
    if b < 0 or a < b:
        return 0
    return 1 if (a - b) & b == 0 else 0


def wu_square_on_variable(fam: ClassFamily, name: str, k: int) -> Polynomial:
    """Sq^k(w_j(r)) as a polynomial of the same family, classes above the
    dimension vanishing."""
    rep, j, dim = fam.meta[name]
    if k == 0:
        return fam.ring.var(name)
    if k > j:
        return ZERO
    acc = ZERO
    for t in range(0, k + 1):
        if _binom2(j + t - k - 1, t) == 0:
            continue
        lo, hi = k - t, j + t
        if hi > dim:
            continue
        term = fam.ring.var(fam.namer(rep, hi))
        if lo > 0:
            if lo > dim:
                continue
            term = fam.ring.mul(term, fam.ring.var(fam.namer(rep, lo)))
        acc = acc ^ term
    return acc


class SteenrodContext:
    """Total-square operator on a class family (Cartan via multiplicativity)."""

    def __init__(self, fam: ClassFamily):
        self.fam = fam
        self._totals = {}
        for name, (rep, j, dim) in fam.meta.items():
            tot = ZERO
            for k in range(0, j + 1):
                tot = tot ^ wu_square_on_variable(fam, name, k)
            self._totals[name] = tot

    def total_square(self, p: Polynomial) -> Polynomial:
        ring = self.fam.ring
        acc = ZERO
        for m in p:
            term = ring.one()
            for i, e in enumerate(m):
                if e:
                    term = ring.mul(term, ring.power(self._totals[ring.names[i]], e))
            acc = acc ^ term
        return acc

    def sq(self, k: int, p: Polynomial) -> Polynomial:
        """Sq^k of a homogeneous polynomial."""
        if not p:
            return ZERO
        d = self.fam.ring.poly_degree(p)
        parts = self.fam.ring.homogeneous_parts(self.total_square(p))
        return parts.get(d + k, ZERO)


def steenrod_closure(ctx: SteenrodContext, gens, budget: Budget | None = None,
                     cap: int | None = None) -> tuple:
    """Smallest ideal containing gens and stable under every Sq^k."""
    ring = ctx.fam.ring
    gb = buchberger(ring, gens, budget, cap)
    while True:
        new = []
        for g in minimal_generators(ring, gb, budget):
            d = ring.poly_degree(g)
            for k in range(1, d):
                s = ctx.sq(k, g)
                if cap is not None and s and ring.poly_degree(s) > cap:
                    continue
                if s and normal_form(ring, s, gb, budget):
                    new.append(s)
        if not new:
            return gb
        gb = buchberger(ring, list(gb) + new, budget, cap)


# ---------------------------------------------------------------------------
# assembly


@dataclass
class FormalRing:
    data: RepTheoryData
    sw: ClassFamily
    chern: ClassFamily
    ambient: Algebra          # full variable set modulo the closed ideal
    algebra: Algebra          # surviving variables only
    eliminated: dict          # variable name -> expression in surviving variables
    classification: dict      # surviving variable name -> "t" | "p" | "q"
    chern_images: dict        # chern variable name -> ambient polynomial

    def survivors(self, kind: str | None = None) -> list:
        names = list(self.algebra.ring.names)
        if kind is None:
            return names
        return [n for n in names if self.classification[n] == kind]

    def to_surviving(self, p: Polynomial, budget: Budget | None = None) -> Polynomial:
        """Ambient polynomial -> normal form in the surviving presentation."""
        r = normal_form(self.ambient.ring, p, self.ambient.relations, budget)
        return self.ambient.ring.cast(self.algebra.ring, r)

    def sw_expression(self, rep: str, j: int, budget: Budget | None = None) -> Polynomial:
        return self.to_surviving(self.sw.ring.var(sw_name(rep, j)), budget)


def raw_ideal_generators(data: RepTheoryData, wfam: ClassFamily,
                         cfam: ClassFamily, cap: int | None = None) -> tuple:
    """(I generators, phi(J) generators) before the Steenrod closure."""
    gens = rationality_relations(wfam, data)
    gens += tensor_relations(wfam, data.tensor_real, cap)
    gens += exterior_relations(wfam, data.lambda_real, cap)
    phij = chern_relations_and_phi(data, cfam, wfam, cap)
    return gens, phij


def build_formal_ring(data: RepTheoryData, budget: Budget | None = None,
                      cap: int | None = None) -> FormalRing:
    wfam = ClassFamily([(r.name, r.dim) for r in data.nontrivial_reals()],
                       sw_name, 1)
    cfam = ClassFamily([(c.name, c.dim) for c in data.nontrivial_complexes()],
                       chern_name, 2)
    gens, phij = raw_ideal_generators(data, wfam, cfam, cap)
    ctx = SteenrodContext(wfam)
    closed = steenrod_closure(ctx, gens + phij, budget, cap)
    ambient = Algebra(wfam.ring, closed)

    # eliminate variables whose leading monomial is the variable itself
    ring, gb = wfam.ring, closed
    eliminated: dict = {}
    while True:
        victim = None
        for g in gb:
            lm = ring.lm(g)
            support = [i for i, e in enumerate(lm) if e]
            if len(support) == 1 and lm[support[0]] == 1:
                victim = (g, support[0])
                break
        if victim is None:
            break
        g, vi = victim
        name = ring.names[vi]
        expr = g ^ frozenset({ring.lm(g)})  # tail never contains the victim
        small = Ring(ring.names[:vi] + ring.names[vi + 1:],
                     ring.degrees[:vi] + ring.degrees[vi + 1:])
        new_gens = []
        for h in gb:
            if h == g:
                continue
            new_gens.append(ring.substitute(h, {name: expr}, ring))
        new_gens = [ring.cast(small, h) for h in new_gens if h]
        eliminated[name] = ring.cast(wfam.ring, expr)
        ring, gb = small, buchberger(small, new_gens, budget, cap)

    surviving = Algebra(ring, gb)

    # resolve elimination chains into surviving variables only
    resolved: dict = {}
    for name in eliminated:
        expr = eliminated[name]
        while True:
            pending = {nm for nm in _vars_of(wfam.ring, expr) if nm in eliminated}
            if not pending:
                break
            expr = wfam.ring.substitute(expr, {nm: eliminated[nm] for nm in pending},
                                        wfam.ring)
        resolved[name] = normal_form(ring, wfam.ring.cast(ring, expr), gb, budget)

    occurring = set()
    for g in gb:
        for m in g:
            for i, e in enumerate(m):
                if e:
                    occurring.add(ring.names[i])
    classification = {}
    for i, name in enumerate(ring.names):
        if ring.degrees[i] == 1:
            classification[name] = "t"
        elif name not in occurring:
            classification[name] = "p"
        else:
            classification[name] = "q"

    chern_images = chern_to_sw_images(data, cfam, wfam)
    return FormalRing(data, wfam, cfam, ambient, surviving, resolved,
                      classification, chern_images)


def _vars_of(ring: Ring, p: Polynomial) -> set:
    out = set()
    for m in p:
        for i, e in enumerate(m):
            if e:
                out.add(ring.names[i])
    return out
