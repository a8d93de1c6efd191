"""Exact arithmetic with sums of roots of unity.

A value is a dict {exponent: Fraction} representing sum c_j zeta_N^j.  The
representation is not unique; rationality and equality questions go through
reduction modulo the N-th cyclotomic polynomial.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache


def value(coeffs, n: int) -> dict:
    """From a length-n coefficient list (zeta_N^0 .. zeta_N^(n-1))."""
    return {j % n: Fraction(c) for j, c in enumerate(coeffs) if c}


def rational(q) -> dict:
    q = Fraction(q)
    return {0: q} if q else {}


def add(a: dict, b: dict) -> dict:
    out = dict(a)
    for j, c in b.items():
        s = out.get(j, Fraction(0)) + c
        if s:
            out[j] = s
        else:
            out.pop(j, None)
    return out


def mul(a: dict, b: dict, n: int) -> dict:
    out: dict = {}
    for j, c in a.items():
        for k, d in b.items():
            e = (j + k) % n
            s = out.get(e, Fraction(0)) + c * d
            if s:
                out[e] = s
            else:
                out.pop(e, None)
    return out


def conj(a: dict, n: int) -> dict:
    """Complex conjugation sends zeta^j to zeta^(-j)."""
    return {(-j) % n: c for j, c in a.items()}


def scale(a: dict, q) -> dict:
    q = Fraction(q)
    return {j: c * q for j, c in a.items()} if q else {}


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple:
    """Coefficients (ascending) of the n-th cyclotomic polynomial over Q."""
    # x^n - 1 divided by the cyclotomic polynomials of the proper divisors
    num = [Fraction(-1)] + [Fraction(0)] * (n - 1) + [Fraction(1)]
    for d in range(1, n):
        if n % d == 0:
            num = _polydiv(num, [Fraction(c) for c in cyclotomic_poly(d)])
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return tuple(num)


def _polydiv(num, den):
    num = list(num)
    out = [Fraction(0)] * (len(num) - len(den) + 1)
    for i in range(len(out) - 1, -1, -1):
        q = num[i + len(den) - 1] / den[-1]
        out[i] = q
        for j, d in enumerate(den):
            num[i + j] -= q * d
    assert all(c == 0 for c in num[:len(den) - 1]), "non-exact division"
    return out


def reduce_mod_cyclotomic(a: dict, n: int) -> list:
    """Canonical coefficients of degree < phi(n)."""
    phi = cyclotomic_poly(n)
    deg = len(phi) - 1
    coeffs = [Fraction(0)] * n
    for j, c in a.items():
        coeffs[j] += c
    for i in range(n - 1, deg - 1, -1):
        q = coeffs[i] / phi[-1]
        if q:
            for j, p in enumerate(phi):
                coeffs[i - deg + j] -= q * p
    return coeffs[:deg]


def as_integer(a: dict, n: int) -> int:
    """The value must be a rational integer; anything else is an error."""
    red = reduce_mod_cyclotomic(a, n)
    if any(c for c in red[1:]):
        raise ValueError("value is not rational: %r" % (a,))
    c = red[0] if red else Fraction(0)
    if c.denominator != 1:
        raise ValueError("value is not an integer: %r" % c)
    return int(c)


def equal(a: dict, b: dict, n: int) -> bool:
    return reduce_mod_cyclotomic(add(a, scale(b, -1)), n) == \
        reduce_mod_cyclotomic({}, n)
