"""Enumerate and filter ring maps from the formal ring into the cohomology.

Three construction steps (degree-one variables, constrained variables in
weight order, polynomial variables through the quotient-lift trick or
exhaustively), four tests (finite generation, polynomial-variable stability
of the kernel, Steenrod stability, restriction to maximal elementary
abelians), then the equivalence partition and the final presentation.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import product

from .f2poly import ZERO, ContractError, Polynomial, Ring
from .formalring import FormalRing, SteenrodContext, sw_name
from .groebner import (Algebra, Budget, buchberger, enumerate_degree,
                       graded_dimension, is_finite_dimensional, kernel_of_map,
                       minimal_generators, normal_form, standard_monomials)
from .linalg import SpanF2, kernel_basis


class CandidateCeiling(Exception):
    def __init__(self, count):
        super().__init__("candidate ceiling exceeded at %d" % count)
        self.count = count


@dataclass
class Candidate:
    assignment: dict                 # surviving variable -> polynomial in H
    ideal_f: tuple = ()              # reduced basis of (H relations + images)
    ker_ring: Ring | None = None
    ker_f: tuple = ()
    adjoined: tuple = ()             # H generators surviving in the cokernel
    plus_ring: Ring | None = None
    ker_plus: tuple = ()


@dataclass
class FinalPresentation:
    ring: Ring                       # surviving SW variables + adjoined generators
    kinds: dict                      # generator name -> "sw" | "adjoined"
    relations: tuple                 # minimal generators of the kernel
    kernel_basis: tuple              # full reduced basis
    sw_dictionary: dict              # every w_j(r_i) -> polynomial here
    chern_dictionary: dict           # every c_j(rho_i) -> polynomial here
    steenrod_table: dict             # sw generator -> {k: polynomial}, adjoined -> None
    verification_bound: int = 0


@dataclass
class SolveOutcome:
    status: str                      # success | multiple-classes | aborted-test2 | exhausted
    stats: dict = field(default_factory=dict)
    presentation: FinalPresentation | None = None
    detail: str = ""


class Solver:
    def __init__(self, fr: FormalRing, H: Algebra, mode: str = "quotient-lift",
                 max_candidates: int = 10 ** 6, budget: Budget | None = None,
                 verify_bound: int | None = None, threads: int = 1,
                 lift_rule: str = "first"):
        if mode not in ("quotient-lift", "exhaustive"):
            raise ContractError("unknown mode %r" % mode)
        self.fr = fr
        self.H = H
        self.mode = mode
        self.ceiling = max_candidates
        self.budget = budget
        self.verify_bound = verify_bound
        self.threads = max(1, threads)
        self.lift_rule = lift_rule
        self.ctx = SteenrodContext(fr.sw)
        self.W = fr.algebra
        self.relations = minimal_generators(self.W.ring, self.W.relations, budget)
        self.stats: dict = {}

    # -- step 1 --------------------------------------------------------------

    def _tvars(self):
        return [n for n in self.W.ring.names if self.fr.classification[n] == "t"]

    def step1(self) -> list:
        tvars = self._tvars()
        h1 = standard_monomials(self.H, 1)
        if len(tvars) != graded_dimension(self.H, 1):
            raise ContractError(
                "inconsistent input: %d degree-1 variables vs dim H^1 = %d"
                % (len(tvars), graded_dimension(self.H, 1)))
        if not tvars:
            return [dict()]
        t_rels = [r for r in self.relations
                  if _variables(self.W.ring, r) <= set(tvars)]
        classes = list(enumerate_degree(self.H, 1))
        masks = {p: _mask(p, h1) for p in classes}

        survivors: list = []
        examined = 0

        def extend(partial, span):
            nonlocal examined
            if len(partial) == len(tvars):
                examined += 1
                if examined > self.ceiling:
                    raise CandidateCeiling(examined)
                asg = dict(zip(tvars, partial))
                for r in t_rels:
                    img = self.W.ring.substitute(r, asg, self.H.ring)
                    if self.H.nf(img, self.budget):
                        return
                survivors.append(asg)
                return
            for p in classes:
                if not p or span.contains(masks[p]):
                    continue
                span2 = SpanF2(list(span.pivots.values()))
                span2.add(masks[p])
                extend(partial + [p], span2)

        extend([], SpanF2())
        kept: list = []
        for asg in survivors:
            if any(self._degree_one_equivalent(prev, asg, tvars) for prev in kept):
                continue
            kept.append(asg)
        self.stats["step1_raw"] = len(survivors)
        self.stats["step1"] = len(kept)
        return kept

    def _degree_one_equivalent(self, f, g, tvars) -> bool:
        """Does relabelling degree-1 generators a_i -> b_i fix all H relations?"""
        h1 = standard_monomials(self.H, 1)
        span = SpanF2()
        rows = []  # (mask of a_i, image polynomial b_i)
        for t in tvars:
            rows.append((_mask(f[t], h1), g[t]))
        alpha = {}
        ring = self.H.ring
        for i, nm in enumerate(ring.names):
            if ring.degrees[i] != 1:
                continue
            target = _mask(ring.var(nm), h1)
            combo = _solve(rows, target)
            if combo is None:
                return False
            img = ZERO
            for j in combo:
                img = img ^ rows[j][1]
            alpha[nm] = img
        for rel in self.H.relations:
            if self.H.nf(ring.substitute(rel, alpha, ring), self.budget):
                return False
        return True

    # -- step 2 --------------------------------------------------------------

    def step2(self, partials: list) -> list:
        qvars = [n for n in self.W.ring.names if self.fr.classification[n] == "q"]
        if not qvars:
            self.stats["step2"] = len(partials)
            return partials
        q_rels = [r for r in self.relations
                  if _variables(self.W.ring, r) & set(qvars)]
        out: list = []
        count = 0

        def weight(rel, asg):
            unset = [v for v in _variables(self.W.ring, rel) & set(qvars)
                     if v not in asg]
            return (sum(graded_dimension(self.H, _degree_of(self.W.ring, v))
                        for v in unset), _rel_index(rel))

        def _rel_index(rel):
            return q_rels.index(rel)

        def walk(asg, remaining):
            nonlocal count
            if not remaining:
                free = [v for v in qvars if v not in asg]
                choices = [list(enumerate_degree(self.H, _degree_of(self.W.ring, v)))
                           for v in free]
                for combo in product(*choices):
                    count += 1
                    if count > self.ceiling:
                        raise CandidateCeiling(count)
                    full = dict(asg)
                    full.update(zip(free, combo))
                    out.append(full)
                return
            rel = min(remaining, key=lambda r: weight(r, asg))
            rest = [r for r in remaining if r is not rel]
            unset = sorted(_variables(self.W.ring, rel) & set(qvars) - set(asg),
                           key=self.W.ring.index.get)
            choices = [list(enumerate_degree(self.H, _degree_of(self.W.ring, v)))
                       for v in unset]
            for combo in product(*choices):
                count += 1
                if count > self.ceiling:
                    raise CandidateCeiling(count)
                asg2 = dict(asg)
                asg2.update(zip(unset, combo))
                img = self.W.ring.substitute(rel, asg2, self.H.ring)
                if self.H.nf(img, self.budget):
                    continue
                walk(asg2, rest)

        for partial in partials:
            pending = [r for r in q_rels
                       if not all(v in partial for v in
                                  _variables(self.W.ring, r) & set(qvars))]
            settled = [r for r in q_rels if r not in pending]
            ok = True
            for r in settled:
                if self.H.nf(self.W.ring.substitute(r, partial, self.H.ring),
                             self.budget):
                    ok = False
                    break
            if ok:
                walk(dict(partial), pending)
        self.stats["step2"] = len(out)
        return out

    # -- step 3 --------------------------------------------------------------

    def step3(self, partials: list) -> list:
        pvars = [n for n in self.W.ring.names if self.fr.classification[n] == "p"]
        out: list = []
        raw = 0
        for partial in partials:
            images = [p for p in partial.values() if p]
            quot = None
            if self.mode == "quotient-lift":
                quot = Algebra(self.H.ring,
                               buchberger(self.H.ring,
                                          list(self.H.relations) + images,
                                          self.budget))
            choicelists = []
            full = 1
            for v in pvars:
                d = _degree_of(self.W.ring, v)
                full *= 1 << graded_dimension(self.H, d)
                if self.mode == "exhaustive":
                    choicelists.append(list(enumerate_degree(self.H, d)))
                else:
                    lifts = []
                    for cls in enumerate_degree(quot, d):
                        lifts.append(self._lift(cls, quot, d))
                    choicelists.append(lifts)
            raw += full
            for combo in product(*choicelists):
                if len(out) >= self.ceiling:
                    raise CandidateCeiling(len(out))
                asg = dict(partial)
                asg.update(zip(pvars, combo))
                out.append(Candidate(assignment=asg))
        self.stats["step3_raw"] = raw
        self.stats["step3"] = len(out)
        return out

    def _lift(self, cls: Polynomial, quot: Algebra, d: int) -> Polynomial:
        """Deterministic preimage in H of a class of the quotient.

        The default takes the plain normal form; the alternate rule shifts it
        by the first nonzero degree-d element of the image ideal, exercising
        the lift-independence lemma in tests.
        """
        lift = self.H.nf(cls, self.budget)
        if self.lift_rule == "first":
            return lift
        basis = standard_monomials(self.H, d)
        qbasis = standard_monomials(quot, d)
        images = [_mask(quot.nf(frozenset({m}), self.budget), qbasis) for m in basis]
        for combo in kernel_basis(images):
            shift = frozenset(basis[i] for i in range(len(basis)) if combo >> i & 1)
            return self.H.nf(lift ^ shift, self.budget)
        return lift

    # -- tests ---------------------------------------------------------------

    def complete(self, cand: Candidate):
        images = [p for p in cand.assignment.values() if p]
        cand.ideal_f = buchberger(self.H.ring, list(self.H.relations) + images,
                                  self.budget)

    def test1(self, cand: Candidate) -> bool:
        finite, _ = is_finite_dimensional(Algebra(self.H.ring, cand.ideal_f))
        return finite

    def test2(self, cand: Candidate) -> bool:
        """Extend by the cokernel generators; False means global abort."""
        ring = self.W.ring
        adjoined = [nm for nm in self.H.ring.names
                    if normal_form(self.H.ring, self.H.ring.var(nm), cand.ideal_f,
                                   self.budget)]
        for nm in adjoined:
            if nm in ring.index:
                raise ContractError("adjoined generator %r collides with a "
                                    "Stiefel-Whitney variable" % nm)
        names = list(ring.names) + adjoined
        degrees = list(ring.degrees) + [_degree_of(self.H.ring, nm)
                                        for nm in adjoined]
        images = [cand.assignment[nm] for nm in ring.names]
        images += [self.H.ring.var(nm) for nm in adjoined]
        cand.adjoined = tuple(adjoined)
        cand.plus_ring, cand.ker_plus = kernel_of_map(names, degrees, self.H,
                                                      images, self.budget)
        pvars = {n for n in ring.names if self.fr.classification[n] == "p"}
        occurring = set()
        for g in cand.ker_plus:
            occurring |= _variables(cand.plus_ring, g)
        return not (occurring & pvars)

    def kernel(self, cand: Candidate):
        ring = self.W.ring
        images = [cand.assignment[nm] for nm in ring.names]
        cand.ker_ring, cand.ker_f = kernel_of_map(ring.names, ring.degrees,
                                                  self.H, images, self.budget)

    def test3(self, cand: Candidate) -> bool:
        """Kernel must be stable under the Steenrod squares."""
        amb = self.fr.ambient
        lifted = [cand.ker_ring.cast(amb.ring, g) for g in cand.ker_f]
        closure = buchberger(amb.ring, list(amb.relations) + lifted, self.budget)
        for r in minimal_generators(cand.ker_ring, cand.ker_f, self.budget):
            lift = cand.ker_ring.cast(amb.ring, r)
            d = amb.ring.poly_degree(lift)
            for k in range(1, d):
                if normal_form(amb.ring, self.ctx.sq(k, lift), closure, self.budget):
                    return False
        return True

    def test4(self, cand: Candidate) -> bool:
        if not self.fr.data.restrictions:
            return True
        gens = minimal_generators(cand.ker_ring, cand.ker_f, self.budget)
        for rank, forms in self.fr.data.restrictions:
            ering = Ring(tuple("e%d" % (i + 1) for i in range(rank)), (1,) * rank)
            images = self._restriction_images(ering, forms)
            for r in gens:
                img = cand.ker_ring.substitute(r, images, ering)
                if img:
                    return False
        return True

    def _restriction_images(self, ering: Ring, forms: dict) -> dict:
        """w_j(r) restricted to the elementary abelian: e_j of the linear forms."""
        images = {}
        for nm in self.W.ring.names:
            rep, j, dim = self.fr.sw.meta[nm]
            rows = forms[rep]
            total = ering.one()
            for row in rows:
                lin = ZERO
                for i, bit in enumerate(row):
                    if bit:
                        lin = lin ^ ering.var(ering.names[i])
                total = ering.mul(total, ering.one() ^ lin)
            parts = ering.homogeneous_parts(total)
            images[nm] = parts.get(j, ZERO)
        return images

    # -- conclusion ------------------------------------------------------------

    def conclude(self, survivors: list) -> SolveOutcome:
        classes: dict = {}
        for cand in survivors:
            key = (frozenset(cand.ker_f), frozenset(cand.ideal_f))
            classes.setdefault(key, []).append(cand)
        self.stats["equivalence_classes"] = len(classes)
        if len(classes) > 1:
            detail = "; ".join(
                "class %d: kernel {%s}" % (
                    i + 1, ", ".join(cands[0].ker_ring.format_poly(g)
                                     for g in cands[0].ker_f))
                for i, (key, cands) in enumerate(sorted(classes.items(),
                                                        key=lambda kv: repr(kv[0]))))
            return SolveOutcome("multiple-classes", self.stats, None, detail)
        reps = survivors
        first = reps[0]
        for other in reps[1:]:
            if frozenset(other.ker_plus) != frozenset(first.ker_plus) or \
                    other.adjoined != first.adjoined:
                return SolveOutcome("multiple-classes", self.stats, None,
                                    "extensions to the adjoined generators disagree")
        return SolveOutcome("success", self.stats, self.presentation(first))

    def presentation(self, cand: Candidate) -> FinalPresentation:
        ring = cand.plus_ring
        kinds = {}
        for nm in ring.names:
            kinds[nm] = "adjoined" if nm in cand.adjoined else "sw"
        relations = minimal_generators(ring, cand.ker_plus, self.budget)
        final = Algebra(ring, cand.ker_plus)

        amb = self.fr.ambient
        lifted = [cand.ker_ring.cast(amb.ring, g) for g in cand.ker_f]
        mod_kernel = buchberger(amb.ring, list(amb.relations) + lifted, self.budget)

        def to_final(p_ambient: Polynomial) -> Polynomial:
            r = normal_form(amb.ring, p_ambient, mod_kernel, self.budget)
            return final.nf(amb.ring.cast(ring, r), self.budget)

        sw_dict = {}
        for rep, dim in self.fr.sw.reps:
            for j in range(1, dim + 1):
                sw_dict[sw_name(rep, j)] = to_final(self.fr.sw.ring.var(sw_name(rep, j)))
        chern_dict = {}
        for nm, img in self.fr.chern_images.items():
            chern_dict[nm] = to_final(img)

        steenrod = {}
        for nm in ring.names:
            if kinds[nm] == "adjoined":
                steenrod[nm] = None
                continue
            d = _degree_of(ring, nm)
            table = {}
            for k in range(0, d + 1):
                table[k] = to_final(self.ctx.sq(k, self.fr.sw.ring.var(nm)))
            steenrod[nm] = table

        bound = self.verify_bound
        if bound is None:
            maxdeg = max((ring.poly_degree(r) for r in relations), default=1)
            bound = 2 * maxdeg + 2
        for d in range(0, bound + 1):
            if graded_dimension(final, d) != graded_dimension(self.H, d):
                raise AssertionError(
                    "presentation fails the graded-dimension check in degree %d" % d)
        return FinalPresentation(ring, kinds, relations, cand.ker_plus, sw_dict,
                                 chern_dict, steenrod, bound)

    # -- driver ----------------------------------------------------------------

    def run(self) -> SolveOutcome:
        try:
            partials = self.step1()
            if not partials:
                return SolveOutcome("exhausted", self.stats, None,
                                    "no admissible degree-1 assignment")
            partials = self.step2(partials)
            if not partials:
                return SolveOutcome("exhausted", self.stats, None,
                                    "Step 2 exhausted every branch")
            candidates = self.step3(partials)
        except CandidateCeiling as exc:
            return SolveOutcome("exhausted", self.stats, None, str(exc))

        def prep(c):
            self.complete(c)
            return c

        candidates = list(self._map(prep, candidates))
        admissible = [c for c in candidates if self.test1(c)]
        self.stats["test1"] = len(admissible)
        if not admissible:
            return SolveOutcome("exhausted", self.stats, None,
                                "no admissible map (Test 1 empty)")
        for i, cand in enumerate(admissible):
            if not self.test2(cand) and self.mode == "quotient-lift":
                # one bad candidate poisons the whole lift trick; the
                # exhaustive variant has no lifts to justify, so there the
                # extension is computed but never gates
                detail = "candidate %d sends a polynomial variable into the kernel: %s" \
                    % (i + 1, _describe(self.W.ring, self.H.ring, cand.assignment))
                return SolveOutcome("aborted-test2", self.stats, None, detail)
        self.stats["test2"] = len(admissible)
        for cand in admissible:
            self.kernel(cand)
        s3 = [c for c in self._map(lambda c: (c, self.test3(c)), admissible) if c[1]]
        survivors = [c for c, _ in s3]
        self.stats["test3"] = len(survivors)
        if not survivors:
            return SolveOutcome("exhausted", self.stats, None,
                                "Test 3 rejected every candidate")
        survivors = [c for c, ok in self._map(lambda c: (c, self.test4(c)), survivors)
                     if ok]
        self.stats["test4"] = len(survivors)
        if not survivors:
            return SolveOutcome("exhausted", self.stats, None,
                                "Test 4 rejected every candidate")
        return self.conclude(survivors)

    def _map(self, fn, items):
        if self.threads == 1 or len(items) <= 1:
            return [fn(x) for x in items]
        with ThreadPoolExecutor(max_workers=self.threads) as pool:
            return list(pool.map(fn, items))


# ---------------------------------------------------------------------------


def _variables(ring: Ring, p: Polynomial) -> set:
    out = set()
    for m in p:
        for i, e in enumerate(m):
            if e:
                out.add(ring.names[i])
    return out


def _degree_of(ring: Ring, name: str) -> int:
    return ring.degrees[ring.index[name]]


def _mask(p: Polynomial, basis: list) -> int:
    m = 0
    for i, mono in enumerate(basis):
        if mono in p:
            m |= 1 << i
    return m


def _solve(rows, target):
    """Indices of rows whose masks xor to target, or None."""
    span: dict = {}
    for j, (mask, _) in enumerate(rows):
        m, pre = mask, 1 << j
        while m:
            top = m.bit_length() - 1
            if top in span:
                sm, sp = span[top]
                m ^= sm
                pre ^= sp
            else:
                span[top] = (m, pre)
                break
    combo = 0
    m = target
    while m:
        top = m.bit_length() - 1
        if top not in span:
            return None
        sm, sp = span[top]
        m ^= sm
        combo ^= sp
    return [j for j in range(len(rows)) if combo >> j & 1]


def _describe(wring: Ring, hring: Ring, assignment: dict) -> str:
    return ", ".join("%s -> %s" % (nm, hring.format_poly(assignment[nm]))
                     for nm in wring.names)
