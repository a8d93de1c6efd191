"""Groebner engine: worked examples plus randomized property suites."""

import random

import pytest

from oracles import brute_graded_dimension, brute_map_kernel_slice, ideal_slice_span
from swcohom.f2poly import ZERO, ContractError, Ring
from swcohom.groebner import (Algebra, buchberger, enumerate_degree,
                              graded_dimension, ideal_equal,
                              is_finite_dimensional, kernel_of_map,
                              minimal_generators, minimalize_subalgebra,
                              normal_form, present, standard_monomials,
                              subalgebra_contains)


def ring_xy():
    return Ring(("x", "y"), (1, 1))


# -- normal form ------------------------------------------------------------


def test_nf_generator_reduces_to_zero():
    R = ring_xy()
    gb = buchberger(R, [R.parse("x^2")])
    assert normal_form(R, R.parse("x^2"), gb) == ZERO


def test_nf_char2_square():
    R = ring_xy()
    gb = buchberger(R, [R.parse("x + y")])
    assert normal_form(R, R.parse("x^2 + y^2"), gb) == ZERO


def test_nf_idempotent_and_linear():
    R = Ring(("x", "y", "z"), (1, 1, 1))
    gb = buchberger(R, [R.parse("x*y + z^2"), R.parse("x^2")])
    rnd = random.Random(7)
    monos = R.monomials_of_degree(3) + R.monomials_of_degree(4)
    for _ in range(40):
        p = frozenset(rnd.sample(monos, rnd.randint(0, 5)))
        q = frozenset(rnd.sample(monos, rnd.randint(0, 5)))
        np_, nq = normal_form(R, p, gb), normal_form(R, q, gb)
        assert normal_form(R, np_, gb) == np_
        assert normal_form(R, p ^ q, gb) == np_ ^ nq
        assert normal_form(R, R.mul(p, q), gb) == \
            normal_form(R, R.mul(np_, nq), gb)


# -- buchberger ---------------------------------------------------------------


def test_monomial_ideal_is_its_own_basis():
    R = ring_xy()
    gb = buchberger(R, [R.parse("x^2"), R.parse("x*y")])
    assert set(gb) == {R.parse("x^2"), R.parse("x*y")}


def test_principal_ideal():
    R = ring_xy()
    p = R.parse("x^2 + x*y")
    assert buchberger(R, [p]) == (p,)


def test_gp16_cohomology_relations_are_a_basis():
    H = Ring(("z", "y", "x", "w"), (1, 1, 3, 4))
    rels = [H.parse(s) for s in ("z^2", "z*y^2", "z*x", "x^2")]
    assert set(buchberger(H, rels)) == set(rels)


def _random_ring_and_gens(rnd):
    nvars = rnd.choice((2, 3))
    degrees = tuple(rnd.choice((1, 1, 2)) for _ in range(nvars))
    R = Ring(tuple("abc"[:nvars]), degrees)
    gens = []
    for _ in range(rnd.randint(1, 3)):
        d = rnd.randint(1, 4)
        monos = R.monomials_of_degree(d)
        if not monos:
            continue
        gens.append(frozenset(rnd.sample(monos, rnd.randint(1, min(3, len(monos))))))
    return R, gens


@pytest.mark.parametrize("seed", range(40))
def test_buchberger_spair_criterion(seed):
    """Every S-polynomial of the output reduces to zero."""
    rnd = random.Random(seed)
    R, gens = _random_ring_and_gens(rnd)
    gb = buchberger(R, gens)
    for i in range(len(gb)):
        for j in range(i + 1, len(gb)):
            li, lj = R.lm(gb[i]), R.lm(gb[j])
            L = R.lcm_mono(li, lj)
            s = R.mul_by_mono(gb[i], R.div_mono(L, li)) \
                ^ R.mul_by_mono(gb[j], R.div_mono(L, lj))
            assert normal_form(R, s, gb) == ZERO


@pytest.mark.parametrize("seed", range(40))
def test_buchberger_input_order_invariance(seed):
    rnd = random.Random(1000 + seed)
    R, gens = _random_ring_and_gens(rnd)
    if not gens:
        pytest.skip("empty generating set")
    gb = buchberger(R, gens)
    shuffled = list(gens)
    rnd.shuffle(shuffled)
    assert buchberger(R, shuffled + [gens[0]]) == gb  # duplicates too


# -- minimal generators -------------------------------------------------------


def test_minimal_generators_drops_redundant():
    R = Ring(("x",), (1,))
    gb = buchberger(R, [R.parse("x^2"), R.parse("x^3")])
    assert minimal_generators(R, gb) == (R.parse("x^2"),)


def test_minimal_generators_requires_homogeneous():
    R = ring_xy()
    with pytest.raises(ContractError):
        minimal_generators(R, (R.parse("x^2 + y"),))


def test_minimal_generators_variable_set_matches_known_case():
    # the occurring-variable set is order independent
    R = Ring(("a", "b"), (1, 1))
    gb = buchberger(R, [R.parse("a^2 + b^2"), R.parse("a^3")])
    gens = minimal_generators(R, gb)
    occurring = set()
    for g in gens:
        for m in g:
            for i, e in enumerate(m):
                if e:
                    occurring.add(R.names[i])
    assert occurring == {"a", "b"}


# -- graded dimensions --------------------------------------------------------


def test_graded_dimension_examples(cohomology):
    free = present(Ring(("x",), (1,)), [])
    assert graded_dimension(free, 5) == 1
    assert graded_dimension(cohomology["g16_11"], 4) == 3
    assert graded_dimension(cohomology["q8"], 1) == 2


@pytest.mark.parametrize("seed", range(30))
def test_graded_dimension_against_linear_algebra(seed):
    rnd = random.Random(2000 + seed)
    R, gens = _random_ring_and_gens(rnd)
    homog = [g for g in gens if R.is_homogeneous(g)]
    alg = present(R, homog)
    for d in range(0, 7):
        assert graded_dimension(alg, d) == brute_graded_dimension(alg, d)


def test_enumerate_degree():
    free = present(Ring(("x",), (1,)), [])
    assert list(enumerate_degree(free, 1)) == [ZERO, free.ring.var("x")]
    assert list(enumerate_degree(free, 0)) == [ZERO, free.ring.one()]


def test_enumerate_degree_gp16(cohomology):
    classes = list(enumerate_degree(cohomology["g16_11"], 4))
    assert len(classes) == 8
    assert len(set(classes)) == 8


# -- finiteness ---------------------------------------------------------------


def test_finite_dimensional_examples():
    R = Ring(("x",), (1,))
    assert is_finite_dimensional(present(R, [R.parse("x^3")])) == (True, 3)
    R2 = ring_xy()
    assert is_finite_dimensional(present(R2, [R2.parse("x*y")])) == (False, None)


def test_finite_q8_quotient(cohomology):
    """Killing all three generators leaves only the unit class."""
    H = cohomology["q8"]
    gens = [H.ring.var(nm) for nm in H.ring.names]
    alg = Algebra(H.ring, buchberger(H.ring, list(H.relations) + gens))
    finite, dim = is_finite_dimensional(alg)
    assert finite
    # brute force: count independent normal forms degree by degree
    total = 0
    for d in range(0, 8):
        total += brute_graded_dimension(alg, d)
    assert dim == total == 1


# -- kernels ------------------------------------------------------------------


def test_kernel_to_zero():
    T = present(Ring(("x",), (1,)), [])
    ring, gb = kernel_of_map(("u",), (1,), T, [ZERO])
    assert [ring.format_poly(g) for g in gb] == ["u"]


def test_kernel_identity_presentation(cohomology):
    H = cohomology["q8"]
    ring, gb = kernel_of_map(H.ring.names, H.ring.degrees, H,
                             [H.ring.var(nm) for nm in H.ring.names])
    assert frozenset(gb) == frozenset(H.relations)


def test_kernel_fplus_gp16(formal_rings, cohomology):
    """The four stated polynomials generate ker(f+) for group 16 number 11."""
    H = cohomology["g16_11"]
    names = ("w1(r2)", "w1(r3)", "w4(r8)", "x")
    degrees = (1, 1, 4, 3)
    images = [H.ring.parse("z + y"), H.ring.parse("y"), H.ring.parse("w"),
              H.ring.parse("x")]
    ring, gb = kernel_of_map(names, degrees, H, images)
    stated = [ring.parse(s) for s in (
        "w1(r2)^2 + w1(r3)^2",
        "w1(r2)^2*w1(r3) + w1(r2)*w1(r3)^2",
        "w1(r2)*x + w1(r3)*x",
        "x^2")]
    assert ideal_equal(ring, gb, buchberger(ring, stated))
    for s in stated:
        assert normal_form(ring, s, gb) == ZERO
    occurring = set()
    for g in gb:
        for m in g:
            for i, e in enumerate(m):
                if e:
                    occurring.add(ring.names[i])
    assert "w4(r8)" not in occurring


def test_kernel_degree_mismatch_rejected(cohomology):
    H = cohomology["q8"]
    with pytest.raises(ContractError):
        kernel_of_map(("u",), (2,), H, [H.ring.var("z")])


@pytest.mark.parametrize("seed", range(25))
def test_kernel_against_degreewise_brute_force(seed):
    rnd = random.Random(3000 + seed)
    R, gens = _random_ring_and_gens(rnd)
    target = present(R, [g for g in gens if R.is_homogeneous(g)])
    src_names = ("u", "v")
    src_degs = (rnd.choice((1, 2)), rnd.choice((1, 2)))
    images = []
    for d in src_degs:
        monos = standard_monomials(target, d)
        images.append(frozenset(rnd.sample(monos, rnd.randint(0, len(monos))))
                      if monos else ZERO)
    source, gb = kernel_of_map(src_names, src_degs, target, images)
    img_map = dict(zip(src_names, images))
    for d in range(0, 6):
        brute = brute_map_kernel_slice(source, target, img_map, d)
        # every brute-force kernel element is in the computed ideal
        for p in brute:
            assert normal_form(source, p, gb) == ZERO
        # and the slice dimensions agree
        span = ideal_slice_span(source, gb, d)
        assert span.rank == len(brute)


# -- ideal equality -----------------------------------------------------------


def test_ideal_equal_redundant_generator():
    R = ring_xy()
    a = buchberger(R, [R.parse("x^2 + y^2"), R.parse("y^3")])
    b = buchberger(R, [R.parse("x^2 + y^2"), R.parse("y^3"),
                       R.parse("x^2*y + y^3")])
    assert ideal_equal(R, a, b)


def test_ideal_not_equal():
    R = ring_xy()
    assert not ideal_equal(R, buchberger(R, [R.parse("x")]),
                           buchberger(R, [R.parse("x^2")]))


# -- subalgebra helpers --------------------------------------------------------


def test_subalgebra_membership_and_minimalization():
    R = Ring(("x", "y"), (1, 1))
    A = present(R, [])
    gens = [("a", R.parse("x^2")), ("b", R.parse("x*y + y^2")),
            ("c", R.parse("x^2 + x*y + y^2")),  # a + b: redundant
            ("d", R.parse("x^4"))]              # a^2: redundant
    live = minimalize_subalgebra(A, gens)
    assert [nm for nm, _ in live] == ["a", "b"]
    assert subalgebra_contains(A, live, R.parse("x^3*y + x^2*y^2"))  # a*b
    assert not subalgebra_contains(A, live, R.parse("y"))
    assert not subalgebra_contains(A, live, R.parse("x^4 + x^2*y^2"))


def test_variable_mismatch_is_schema_error():
    from swcohom.f2poly import SchemaError
    R2 = Ring(("x", "y"), (1, 1))
    R3 = Ring(("x", "y", "z"), (1, 1, 1))
    p3 = R3.parse("x*z")
    with pytest.raises(SchemaError):
        normal_form(R2, p3, [R2.parse("x^2")])
    with pytest.raises(SchemaError):
        buchberger(R2, [p3])
