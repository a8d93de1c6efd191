"""Sparse multivariate polynomials over GF(2) with weighted-graded variables.

A monomial is a tuple of exponents (one slot per ring variable), a polynomial
is a frozenset of monomials: every coefficient is 1, addition is symmetric
difference, so (p + q)^2 = p^2 + q^2 holds for free.  Rings know their
variable degrees and carry a monomial order (weighted degrevlex, or a block
elimination order for kernel computations).
"""

from __future__ import annotations

import re
from operator import add, le, sub
from typing import Iterable, Sequence

Monomial = tuple  # exponent vector, len == ring.n
Polynomial = frozenset  # set of monomials

ZERO: Polynomial = frozenset()


class F2Error(Exception):
    """Base error for the algebra layer."""


class SchemaError(F2Error):
    """Malformed input document or mismatched variable sets."""


class ContractError(F2Error):
    """An operation precondition was violated (e.g. non-homogeneous input)."""


class BudgetExceeded(F2Error):
    """A step budget ran out; the computation was abandoned."""


class Ring:
    """A graded polynomial ring over GF(2) with a fixed monomial order.

    Variables are identified by position; `names[i]` has degree `degrees[i]`.
    The default order is weighted degrevlex where, among variables of equal
    degree, the later-declared one is larger (so eliminations prefer to remove
    late-declared variables).  `front` selects a block elimination order: the
    listed positions form the front block, and any monomial meeting the front
    block is larger than any monomial avoiding it.
    """

    __slots__ = ("names", "degrees", "n", "index", "front",
                 "_small_first", "_front_small", "_back_small", "_key_cache")

    def __init__(self, names: Sequence[str], degrees: Sequence[int],
                 front: Iterable[int] | None = None):
        if len(names) != len(set(names)):
            raise SchemaError("duplicate variable names: %r" % (names,))
        if any(d < 1 for d in degrees):
            raise SchemaError("variable degrees must be >= 1")
        self.names = tuple(names)
        self.degrees = tuple(degrees)
        self.n = len(self.names)
        self.index = {nm: i for i, nm in enumerate(self.names)}
        # revlex scan order: smallest variable first = (degree, declaration) ascending
        small = sorted(range(self.n), key=lambda i: (self.degrees[i], i))
        self.front = frozenset(front) if front is not None else None
        if self.front is None:
            self._small_first = tuple(small)
            self._front_small = self._back_small = ()
        else:
            self._front_small = tuple(i for i in small if i in self.front)
            self._back_small = tuple(i for i in small if i not in self.front)
            self._small_first = ()
        self._key_cache: dict = {}

    # -- monomials ---------------------------------------------------------

    def unit(self) -> Monomial:
        return (0,) * self.n

    def deg(self, m: Monomial) -> int:
        d = self.degrees
        return sum(e * d[i] for i, e in enumerate(m) if e)

    def key(self, m: Monomial):
        """Order key; max(key) picks the leading monomial."""
        k = self._key_cache.get(m)
        if k is None:
            d = self.degrees
            if self.front is None:
                k = (sum(e * d[i] for i, e in enumerate(m) if e),
                     tuple(-m[i] for i in self._small_first))
            else:
                k = (sum(m[i] * d[i] for i in self.front),
                     tuple(-m[i] for i in self._front_small),
                     sum(m[i] * d[i] for i in self._back_small),
                     tuple(-m[i] for i in self._back_small))
            self._key_cache[m] = k
        return k

    def negkey(self, m: Monomial):
        """Min-heap companion of key: negkey(a) < negkey(b) iff a > b."""
        d = self.degrees
        if self.front is None:
            return (-sum(e * d[i] for i, e in enumerate(m) if e),
                    tuple(m[i] for i in self._small_first))
        return (-sum(m[i] * d[i] for i in self.front),
                tuple(m[i] for i in self._front_small),
                -sum(m[i] * d[i] for i in self._back_small),
                tuple(m[i] for i in self._back_small))

    @staticmethod
    def mul_mono(a: Monomial, b: Monomial) -> Monomial:
        return tuple(map(add, a, b))

    @staticmethod
    def divides(a: Monomial, b: Monomial) -> bool:
        return all(map(le, a, b))

    @staticmethod
    def div_mono(a: Monomial, b: Monomial) -> Monomial:
        """a / b, assuming b | a."""
        return tuple(map(sub, a, b))

    @staticmethod
    def lcm_mono(a: Monomial, b: Monomial) -> Monomial:
        return tuple(map(max, a, b))

    # -- polynomials -------------------------------------------------------

    def var(self, name: str) -> Polynomial:
        m = [0] * self.n
        m[self.index[name]] = 1
        return frozenset({tuple(m)})

    def one(self) -> Polynomial:
        return frozenset({self.unit()})

    @staticmethod
    def add(p: Polynomial, q: Polynomial) -> Polynomial:
        return p ^ q

    def mul(self, p: Polynomial, q: Polynomial, cap: int | None = None) -> Polynomial:
        if not p or not q:
            return ZERO
        if len(p) > len(q):
            p, q = q, p
        acc = set()
        if cap is None:
            for a in p:
                for b in q:
                    m = tuple(x + y for x, y in zip(a, b))
                    if m in acc:
                        acc.discard(m)
                    else:
                        acc.add(m)
        else:
            deg = self.deg
            for a in p:
                da = deg(a)
                for b in q:
                    if da + deg(b) > cap:
                        continue
                    m = tuple(x + y for x, y in zip(a, b))
                    if m in acc:
                        acc.discard(m)
                    else:
                        acc.add(m)
        return frozenset(acc)

    def mul_by_mono(self, p: Polynomial, m: Monomial) -> Polynomial:
        return frozenset(tuple(x + y for x, y in zip(a, m)) for a in p)

    def square(self, p: Polynomial) -> Polynomial:
        """Frobenius: squaring doubles every exponent."""
        return frozenset(tuple(2 * e for e in a) for a in p)

    def power(self, p: Polynomial, k: int, cap: int | None = None) -> Polynomial:
        acc = self.one()
        base = p
        while k:
            if k & 1:
                acc = self.mul(acc, base, cap)
            k >>= 1
            if k:
                base = self.square(base)
                if cap is not None:
                    base = self.truncate(base, cap)
        return acc

    def truncate(self, p: Polynomial, cap: int) -> Polynomial:
        deg = self.deg
        return frozenset(m for m in p if deg(m) <= cap)

    def lm(self, p: Polynomial) -> Monomial:
        return max(p, key=self.key)

    def is_homogeneous(self, p: Polynomial) -> bool:
        degs = {self.deg(m) for m in p}
        return len(degs) <= 1

    def poly_degree(self, p: Polynomial) -> int:
        """Degree of a homogeneous polynomial (0 for the zero polynomial)."""
        if not p:
            return 0
        degs = {self.deg(m) for m in p}
        if len(degs) > 1:
            raise ContractError("polynomial is not homogeneous")
        return degs.pop()

    def homogeneous_parts(self, p: Polynomial) -> dict:
        parts: dict = {}
        for m in p:
            parts.setdefault(self.deg(m), set()).add(m)
        return {d: frozenset(s) for d, s in parts.items()}

    def monomials_of_degree(self, d: int) -> list:
        """All monomials of weighted degree d, sorted descending by the order."""
        out = []
        degs = self.degrees
        n = self.n

        def rec(i, rem, acc):
            if i == n:
                if rem == 0:
                    out.append(tuple(acc))
                return
            if i == n - 1:
                q, r = divmod(rem, degs[i])
                if r == 0:
                    out.append(tuple(acc + [q]))
                return
            for e in range(rem // degs[i], -1, -1):
                rec(i + 1, rem - e * degs[i], acc + [e])

        rec(0, d, [])
        out.sort(key=self.key, reverse=True)
        return out

    # -- moving between rings ----------------------------------------------

    def cast(self, other: "Ring", p: Polynomial) -> Polynomial:
        """Reinterpret p in `other`, matching variables by name.

        Variables with nonzero exponent must exist in `other`.
        """
        if not p:
            return ZERO
        pos = []
        for i, nm in enumerate(self.names):
            pos.append(other.index.get(nm, -1))
        out = set()
        for m in p:
            mm = [0] * other.n
            for i, e in enumerate(m):
                if e:
                    j = pos[i]
                    if j < 0:
                        raise SchemaError("variable %r not present in target ring"
                                          % self.names[i])
                    mm[j] = e
            out.add(tuple(mm))
        if len(out) != len(p):
            raise SchemaError("variable collision while casting")
        return frozenset(out)

    def substitute(self, p: Polynomial, images: dict, target: "Ring",
                   cap: int | None = None) -> Polynomial:
        """Map each variable through `images` (name -> Polynomial in target).

        Variables absent from `images` must exist in `target` under the same
        name and degree.
        """
        acc = ZERO
        for m in p:
            term = target.one()
            for i, e in enumerate(m):
                if not e:
                    continue
                nm = self.names[i]
                img = images.get(nm)
                if img is None:
                    img = target.var(nm)
                term = target.mul(term, target.power(img, e, cap), cap)
                if not term:
                    break
            acc = acc ^ term
        return acc

    # -- text format ---------------------------------------------------------

    def format_poly(self, p: Polynomial) -> str:
        if not p:
            return "0"
        terms = []
        for m in sorted(p, key=self.key, reverse=True):
            factors = []
            for i, e in enumerate(m):
                if e == 1:
                    factors.append(self.names[i])
                elif e > 1:
                    factors.append("%s^%d" % (self.names[i], e))
            terms.append("*".join(factors) if factors else "1")
        return " + ".join(terms)

    def parse(self, text: str) -> Polynomial:
        return parse_poly(text, self)

    def __repr__(self):
        return "Ring(%s)" % ", ".join("%s:%d" % nd
                                      for nd in zip(self.names, self.degrees))


_TOKEN = re.compile(r"\s*(?:(?P<name>[A-Za-z_][A-Za-z0-9_()]*)"
                    r"|(?P<int>\d+)|(?P<op>[+*^]))")


def _tokenize(text: str):
    pos, out = 0, []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            if text[pos:].strip() == "":
                break
            raise SchemaError("cannot tokenize polynomial at %r" % text[pos:pos + 12])
        if m.group("name"):
            out.append(("name", m.group("name")))
        elif m.group("int"):
            out.append(("int", int(m.group("int"))))
        else:
            out.append(("op", m.group("op")))
        pos = m.end()
    return out


def parse_poly(text: str, ring: Ring) -> Polynomial:
    """Parse the `a*b^2 + c + 1` grammar; only 0/1 constants are accepted."""
    toks = _tokenize(text)
    if not toks:
        raise SchemaError("empty polynomial string")
    acc = ZERO
    i = 0
    while True:
        term, i = _parse_term(toks, i, ring)
        acc = acc ^ term
        if i == len(toks):
            return acc
        kind, val = toks[i]
        if (kind, val) != ("op", "+"):
            raise SchemaError("expected '+' in polynomial, got %r" % (val,))
        i += 1


def _parse_term(toks, i, ring: Ring):
    mono = [0] * ring.n
    coeff = 1
    while True:
        if i >= len(toks):
            raise SchemaError("unexpected end of polynomial")
        kind, val = toks[i]
        if kind == "int":
            if val not in (0, 1):
                raise SchemaError("coefficient %d not allowed over GF(2)" % val)
            coeff *= val
            i += 1
        elif kind == "name":
            if val not in ring.index:
                raise SchemaError("unknown variable %r" % val)
            i += 1
            exp = 1
            if i < len(toks) and toks[i] == ("op", "^"):
                i += 1
                if i >= len(toks) or toks[i][0] != "int" or toks[i][1] < 1:
                    raise SchemaError("exponent must be a positive integer")
                exp = toks[i][1]
                i += 1
            mono[ring.index[val]] += exp
        else:
            raise SchemaError("unexpected token %r in term" % (val,))
        if i < len(toks) and toks[i] == ("op", "*"):
            i += 1
            continue
        break
    if coeff == 0:
        return ZERO, i
    return frozenset({tuple(mono)}), i
