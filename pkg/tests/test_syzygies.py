"""Syzygy module computation: annihilation contract and brute-force slices."""

import random

import pytest

from oracles import monomial_mask
from swcohom.f2poly import Ring
from swcohom.linalg import SpanF2, kernel_basis
from swcohom.modules_f2 import syzygies, vector_from_coords, vector_to_coords


def test_koszul_relation():
    R = Ring(("x", "y"), (1, 1))
    vx = vector_from_coords([R.var("x")])
    vy = vector_from_coords([R.var("y")])
    syz = syzygies(R, 1, [vx, vy])
    assert len(syz) == 1
    coords = vector_to_coords(syz[0], 2)
    assert coords == [R.var("y"), R.var("x")]


def test_power_pair():
    R = Ring(("x",), (1,))
    out = syzygies(R, 1, [vector_from_coords([R.parse("x^2")]),
                          vector_from_coords([R.parse("x^3")])])
    wanted = vector_from_coords([R.var("x"), R.one()])
    assert wanted in out


def test_zero_and_duplicate_columns():
    R = Ring(("x",), (1,))
    z = frozenset()
    v = vector_from_coords([R.var("x")])
    out = syzygies(R, 1, [z, v, v])
    unit = R.unit()
    assert frozenset({(0, unit)}) in out
    assert frozenset({(1, unit), (2, unit)}) in out


def test_empty_input():
    R = Ring(("x",), (1,))
    assert syzygies(R, 1, []) == []


def _mul_poly_vec(R, p, coords):
    return [R.mul(p, c) for c in coords]


@pytest.mark.parametrize("seed", range(25))
def test_annihilation_random(seed):
    rnd = random.Random(500 + seed)
    nv = rnd.choice((2, 3))
    R = Ring(tuple("xyz"[:nv]), (1,) * nv)
    rank = rnd.choice((1, 2))
    vectors = []
    for _ in range(rnd.randint(2, 4)):
        coords = []
        for _ in range(rank):
            d = rnd.randint(1, 3)
            monos = R.monomials_of_degree(d)
            coords.append(frozenset(rnd.sample(monos, rnd.randint(0, min(3, len(monos))))))
        vectors.append(vector_from_coords(coords))
    syz = syzygies(R, rank, vectors)  # raises internally if a syzygy fails
    for s in syz:
        coords = vector_to_coords(s, len(vectors))
        acc = [frozenset() for _ in range(rank)]
        for j, c in enumerate(coords):
            prod = _mul_poly_vec(R, c, vector_to_coords(vectors[j], rank))
            acc = [a ^ b for a, b in zip(acc, prod)]
        assert all(not a for a in acc)


@pytest.mark.parametrize("seed", range(12))
def test_rank1_slices_match_linear_algebra(seed):
    """For two homogeneous polynomials, compare the syzygy module degreewise
    against the dense kernel of (a, b) -> a f + b g."""
    rnd = random.Random(900 + seed)
    nv = rnd.choice((2, 3))
    R = Ring(tuple("xyz"[:nv]), (1,) * nv)
    df, dg = rnd.randint(1, 3), rnd.randint(1, 3)

    def pick(d):
        monos = R.monomials_of_degree(d)
        return frozenset(rnd.sample(monos, rnd.randint(1, min(3, len(monos)))))

    f, g = pick(df), pick(dg)
    syz = syzygies(R, 1, [vector_from_coords([f]), vector_from_coords([g])])

    for d in range(max(df, dg), 7):
        fa = R.monomials_of_degree(d - df)
        fb = R.monomials_of_degree(d - dg)
        target = {m: i for i, m in enumerate(R.monomials_of_degree(d))}
        images = []
        for m in fa:
            images.append(monomial_mask(R.mul_by_mono(f, m), target))
        for m in fb:
            images.append(monomial_mask(R.mul_by_mono(g, m), target))
        brute_rank = len(kernel_basis(images))

        # slice of the computed syzygy module: monomial multiples of generators
        span = SpanF2()
        a_pos = {m: i for i, m in enumerate(fa)}
        b_pos = {m: len(fa) + i for i, m in enumerate(fb)}
        for s in syz:
            ca, cb = vector_to_coords(s, 2)
            if not ca and not cb:
                continue
            sdeg = R.poly_degree(ca) + df if ca else R.poly_degree(cb) + dg
            if sdeg > d:
                continue
            for m in R.monomials_of_degree(d - sdeg):
                mask = 0
                for mono in R.mul_by_mono(ca, m):
                    mask |= 1 << a_pos[mono]
                for mono in R.mul_by_mono(cb, m):
                    mask |= 1 << b_pos[mono]
                span.add(mask)
        assert span.rank == brute_rank
