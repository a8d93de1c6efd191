"""Cycle-map bounds: Milnor derivations, derivation kernels, the comparison."""

import pytest

from oracles import monomial_mask
from swcohom.chow import (Derivation, UnstableAlgebra, chern_subring,
                          compare_bounds, derivation_kernel, even_part,
                          from_final_presentation, milnor_derivation,
                          tilde_subring)
from swcohom.f2poly import ZERO, ContractError, Ring
from swcohom.groebner import (Algebra, present, standard_monomials,
                              subalgebra_contains, subalgebra_slice_span)
from swcohom.linalg import SpanF2, kernel_basis


@pytest.fixture(scope="module")
def z2cubed_unstable(solved):
    return from_final_presentation(solved["z2cubed"].presentation)


def free_unstable(names, degrees):
    """Polynomial ring on degree-1 classes with the standard squares."""
    ring = Ring(names, degrees)
    alg = present(ring, [])
    sq = {}
    for i, nm in enumerate(names):
        v = ring.var(nm)
        table = {0: v}
        for k in range(1, degrees[i] + 1):
            table[k] = ring.square(v) if k == degrees[i] else ZERO
        sq[nm] = table
    return UnstableAlgebra(alg, sq)


# -- Milnor derivations -----------------------------------------------------------


def test_q0_q1_on_three_lines(z2cubed_unstable):
    A = z2cubed_unstable
    ring = A.algebra.ring
    q0 = milnor_derivation(0, A)
    q1 = milnor_derivation(1, A)
    for nm in ring.names:
        v = ring.var(nm)
        assert q0.values[nm] == ring.square(v)
        assert q1.values[nm] == ring.square(ring.square(v))


def test_milnor_degree(z2cubed_unstable):
    A = z2cubed_unstable
    ring = A.algebra.ring
    for i in range(3):
        q = milnor_derivation(i, A)
        for nm in ring.names:
            assert ring.poly_degree(q.values[nm]) == 1 + 2 ** (i + 1) - 1


@pytest.mark.parametrize("name", ("q8", "z2cubed"))
def test_milnor_derivations_commute(name, solved):
    A = from_final_presentation(solved[name].presentation)
    ring = A.algebra.ring
    qs = [milnor_derivation(i, A) for i in range(3)]
    for i in range(3):
        for j in range(i + 1, 3):
            for nm in ring.names:
                v = ring.var(nm)
                lhs = qs[i].apply(A.algebra, qs[j].apply(A.algebra, v))
                rhs = qs[j].apply(A.algebra, qs[i].apply(A.algebra, v))
                assert lhs == rhs, (name, i, j, nm)


def test_derivation_kills_squares(z2cubed_unstable):
    A = z2cubed_unstable
    ring = A.algebra.ring
    q0 = milnor_derivation(0, A)
    for nm in ring.names:
        assert q0.apply(A.algebra, ring.square(ring.var(nm))) == ZERO


def test_inconsistent_table_rejected():
    ring = Ring(("x",), (2,))
    alg = present(ring, [])
    with pytest.raises(ContractError):
        UnstableAlgebra(alg, {"x": {0: ring.var("x"), 1: ZERO,
                                    2: ring.var("x")}})  # top square wrong


# -- kernel of a derivation ----------------------------------------------------------


def test_kernel_z2cubed_first_iteration(z2cubed_unstable):
    """ker Sq^1 = B[a1, a2, a3, a4], as subalgebras."""
    A = z2cubed_unstable
    ring = A.algebra.ring
    q0 = milnor_derivation(0, A)
    res = derivation_kernel(A.algebra, q0)
    x, y, z = (ring.var(nm) for nm in ring.names)
    published = [
        ring.square(x), ring.square(y), ring.square(z),
        ring.parse("w1(r3)^2*w1(r1) + w1(r3)*w1(r1)^2"),
        ring.parse("w1(r2)^2*w1(r1) + w1(r2)*w1(r1)^2"),
        ring.parse("w1(r2)^2*w1(r3) + w1(r2)*w1(r3)^2"),
        ring.parse("w1(r2)^2*w1(r3)*w1(r1) + w1(r2)*w1(r3)^2*w1(r1)"
                   " + w1(r2)*w1(r3)*w1(r1)^2"),
    ]
    for p in published:
        assert subalgebra_contains(A.algebra, res.gens, p)
    named = [("p%d" % i, p) for i, p in enumerate(published)]
    for _, expr in res.gens:
        assert subalgebra_contains(A.algebra, named, expr)


def test_kernel_second_iteration_single_generator(z2cubed_unstable):
    """ker Q1 inside ker Sq^1 adjoins exactly one generator over B."""
    A = z2cubed_unstable
    res, n_iter, stable = tilde_subring(A)
    assert (n_iter, stable) == (1, True)
    ring = A.algebra.ring
    squares = [("b%d" % i, ring.square(ring.var(nm)))
               for i, nm in enumerate(ring.names)]
    assert len(res.gens) == 3
    for _, expr in res.gens:
        assert subalgebra_contains(A.algebra, squares, expr)


def test_kernel_of_zero_derivation(z2cubed_unstable):
    A = z2cubed_unstable
    ring = A.algebra.ring
    zero = Derivation({nm: ZERO for nm in ring.names})
    res = derivation_kernel(A.algebra, zero)
    for nm in ring.names:
        assert subalgebra_contains(A.algebra, res.gens, ring.var(nm))


@pytest.mark.parametrize("i", (0, 1))
def test_kernel_slices_against_linear_algebra(i, z2cubed_unstable):
    """Degree-by-degree, the computed kernel subalgebra spans ker Q_i."""
    A = z2cubed_unstable
    alg = A.algebra
    q = milnor_derivation(i, A)
    res = derivation_kernel(alg, q)
    for d in range(1, 9):
        basis = standard_monomials(alg, d)
        shift = 2 ** (i + 1) - 1
        target = {m: idx for idx, m in enumerate(standard_monomials(alg, d + shift))}
        images = []
        for m in basis:
            images.append(monomial_mask(q.apply(alg, frozenset({m})), target))
        brute = SpanF2()
        for combo in kernel_basis(images):
            brute.add(combo)
        computed, cb = subalgebra_slice_span(alg, res.gens, d)
        assert set(cb) == set(basis)
        pos = {m: idx for idx, m in enumerate(cb)}
        # same space: mutual containment
        for piv in computed.pivots.values():
            assert brute.contains(piv)
        for piv in brute.pivots.values():
            assert computed.contains(piv)


# -- the even stable subring -----------------------------------------------------------


def test_tilde_z2cubed(z2cubed_unstable):
    A = z2cubed_unstable
    ring = A.algebra.ring
    res, n_iter, stable = tilde_subring(A)
    assert n_iter == 1 and stable
    got = {ring.format_poly(e) for _, e in res.gens}
    assert got == {"w1(r1)^2", "w1(r2)^2", "w1(r3)^2"}


def test_tilde_single_even_generator():
    A = free_unstable(("x",), (2,))
    res, n_iter, stable = tilde_subring(A)
    assert stable and n_iter == 0
    assert [A.algebra.ring.format_poly(e) for _, e in res.gens] == ["x"]


def test_tilde_single_line():
    A = free_unstable(("t",), (1,))
    res, n_iter, stable = tilde_subring(A)
    assert stable
    assert [A.algebra.ring.format_poly(e) for _, e in res.gens] == ["t^2"]


def test_even_part_takes_squares(z2cubed_unstable):
    A = z2cubed_unstable
    ring = A.algebra.ring
    gens = [("a", ring.var("w1(r1)")), ("b", ring.square(ring.var("w1(r2)")))]
    ev = even_part(A.algebra, gens)
    got = {ring.format_poly(e) for _, e in ev}
    assert got == {"w1(r1)^2", "w1(r2)^2"}


# -- bounds -------------------------------------------------------------------------


def test_chern_q8(solved):
    fp = solved["q8"].presentation
    sub = chern_subring(fp)
    ring = fp.ring
    amb = Algebra(ring, fp.kernel_basis)
    published = [("a", amb.nf(ring.parse("w1(r1)^2"))),
                 ("b", amb.nf(ring.parse("w1(r2)^2"))),
                 ("c", ring.parse("w4(D)"))]
    for _, p in published:
        assert subalgebra_contains(amb, sub.gens, p)
    for _, p in sub.gens:
        assert subalgebra_contains(amb, published, p)


def test_chern_inside_tilde(solved):
    for name in ("q8", "z2cubed"):
        fp = solved[name].presentation
        A = from_final_presentation(fp)
        tilde, n_iter, stable = tilde_subring(A)
        chern = chern_subring(fp)
        for _, p in chern.gens:
            assert subalgebra_contains(A.algebra, tilde.gens, p), name


def test_compare_bounds_equal_cases(solved):
    for name in ("q8", "z2cubed"):
        fp = solved[name].presentation
        A = from_final_presentation(fp)
        tilde, n_iter, stable = tilde_subring(A)
        chern = chern_subring(fp)
        report = compare_bounds(A.algebra, chern, tilde, iterations=n_iter)
        assert report.equal and report.equal_mod_sqrt0


def test_compare_bounds_strict_inclusion():
    """A synthetic unstable algebra where the upper bound is strictly larger:
    an even nilpotent class is Q-killed without being a Chern class."""
    ring = Ring(("u", "n"), (2, 2))
    alg = present(ring, [ring.parse("n^2")])
    sq = {"u": {0: ring.var("u"), 1: ZERO, 2: ring.square(ring.var("u"))},
          "n": {0: ring.var("n"), 1: ZERO, 2: ring.square(ring.var("n"))}}
    A = UnstableAlgebra(alg, sq)
    tilde, n_iter, stable = tilde_subring(A)
    assert stable
    from swcohom.chow import _present_subalgebra
    chern = _present_subalgebra(alg, [("c", ring.var("u"))])
    report = compare_bounds(alg, chern, tilde, iterations=n_iter)
    assert not report.equal
    assert report.equal_mod_sqrt0  # n differs from 0 by a square-zero class


def test_squaring_is_linear(z2cubed_unstable):
    alg = z2cubed_unstable.algebra
    ring = alg.ring
    import random
    rnd = random.Random(5)
    monos = standard_monomials(alg, 3)
    for _ in range(30):
        p = frozenset(rnd.sample(monos, rnd.randint(0, 4)))
        q = frozenset(rnd.sample(monos, rnd.randint(0, 4)))
        assert ring.square(p ^ q) == ring.square(p) ^ ring.square(q)


def test_milnor_negative_index_rejected(z2cubed_unstable):
    with pytest.raises(ContractError):
        milnor_derivation(-1, z2cubed_unstable)


def test_rank_budget_guard():
    """Thirteen moved variables would need a 2^13 module basis."""
    names = tuple("v%d" % i for i in range(13))
    ring = Ring(names, (1,) * 13)
    alg = present(ring, [])
    d = Derivation({nm: ring.square(ring.var(nm)) for nm in names})
    with pytest.raises(ContractError):
        derivation_kernel(alg, d)


def test_table_inconsistent_with_relation_rejected():
    """Sq^1(u) = x^3 cannot coexist with the relation u x."""
    ring = Ring(("x", "u"), (1, 2))
    alg = present(ring, [ring.parse("u*x")])
    sq = {"x": {0: ring.var("x"), 1: ring.square(ring.var("x"))},
          "u": {0: ring.var("u"), 1: ring.parse("x^3"),
                2: ring.square(ring.var("u"))}}
    with pytest.raises(ContractError):
        UnstableAlgebra(alg, sq)


def test_d8_bounds_meet_at_squares(solved):
    fp = solved["d8"].presentation
    A = from_final_presentation(fp)
    tilde, n_iter, stable = tilde_subring(A)
    chern = chern_subring(fp)
    report = compare_bounds(A.algebra, chern, tilde, iterations=n_iter)
    assert stable and report.equal
    assert set(report.tilde_generators) == {"w1(r1)^2", "w1(r2)^2", "w2(D)^2"}


def test_frobenius_probe_on_strict_inclusion():
    """The nilpotent extra class squares into the Chern subring."""
    ring = Ring(("u", "n"), (2, 2))
    alg = present(ring, [ring.parse("n^2")])
    sq = {"u": {0: ring.var("u"), 1: ZERO, 2: ring.square(ring.var("u"))},
          "n": {0: ring.var("n"), 1: ZERO, 2: ring.square(ring.var("n"))}}
    A = UnstableAlgebra(alg, sq)
    tilde, n_iter, stable = tilde_subring(A)
    from swcohom.chow import _present_subalgebra, frobenius_probe
    chern = _present_subalgebra(alg, [("c", ring.var("u"))])
    assert not frobenius_probe(alg, chern, tilde, 0)
    assert frobenius_probe(alg, chern, tilde, 1)


def test_tilde_partial_when_capped(z2cubed_unstable):
    """Stopping before the stabilizing derivation reports instability."""
    res, n_iter, stable = tilde_subring(z2cubed_unstable, max_q=0)
    assert (n_iter, stable) == (0, False)
