from collections import defaultdict
from fractions import Fraction
from itertools import product

import numpy as np
import pytest

from multibgg.core import (ExtAlgebra, Field, GradingSpec, dual_ring_toric, ext_multiply, find_positivity_functional,
                           mk_poly_ring)
from multibgg.core.linalg import nullspace, rank, rref, solve
from multibgg.errors import Inhomogeneous, InvalidRingError, NotPositivelyGraded


def test_prime_field_arithmetic():
    F = Field.prime(101)
    assert F(-1) == 100
    assert F.mul(F.inv(2), 2) == 1
    assert F("1/2") == F.inv(2)
    assert F.signed(100) == -1
    assert F.name == "ZZ/101"


def test_rational_field():
    F = Field.rationals()
    assert F("3/4") == Fraction(3, 4)
    assert F.div(1, 3) == Fraction(1, 3)
    with pytest.raises(ZeroDivisionError):
        F.inv(0)


def test_field_rejects_composite_characteristic():
    with pytest.raises(InvalidRingError):
        Field.prime(4)


def test_polynomial_arithmetic(qq_xy):
    x, y = qq_xy.gens
    assert (x + y) ** 2 == x ** 2 + 2 * x * y + y ** 2
    assert (x - x).is_zero()
    assert (x * y).degree == (2,)
    assert (3 * x - 1).constant_term == -1
    with pytest.raises(Inhomogeneous):
        _ = (x ** 2 + y).degree


def test_polynomial_coefficients_reduce_mod_p(r101):
    x, _ = r101.gens
    assert 101 * x == 0
    assert str(-x) == "-x"


def test_hirzebruch_positivity_functional(hirzebruch3):
    assert hirzebruch3.theta == (1, 4)
    assert hirzebruch3.var_weights == (1, 1, 1, 4)


def test_positivity_functional_fails_for_opposite_degrees():
    grading = GradingSpec.of([(1,), (-1,)])
    with pytest.raises(NotPositivelyGraded):
        find_positivity_functional(grading, 10)


def test_explicit_theta_is_checked():
    with pytest.raises(NotPositivelyGraded):
        mk_poly_ring(Field.rationals(), ["x", "y"], [(1, 0), (0, 1)], theta=(1, 0))


def test_monomials_of_degree_match_enumeration(hirzebruch3):
    S = hirzebruch3
    bound = 12
    expected = defaultdict(set)
    for exp in product(range(bound + 1), range(bound + 1), range(bound + 1), range(bound // 4 + 1)):
        if S.weight_of(exp) <= bound:
            expected[S.degree_of(exp)].add(exp)

    for d, monomials in expected.items():
        found = S.monomials_of_degree(d)
        assert set(found) == monomials
        assert list(found) == sorted(found, reverse=True)

    # every degree of weight at most the bound and no monomials
    for a, b in product(range(-12, 13), range(0, 4)):
        d = (a, b)
        if 0 <= S.weight(d) <= bound and d not in expected:
            assert S.monomials_of_degree(d) == ()


def test_monomials_of_negative_weight(hirzebruch3):
    assert hirzebruch3.monomials_of_degree((-1, 0)) == ()
    assert hirzebruch3.monomials_of_degree((0, 0)) == ((0, 0, 0, 0),)


@pytest.mark.parametrize("d", [(1, 0, 5), (1,)])
def test_degrees_of_the_wrong_length_are_rejected(hirzebruch3, d):
    with pytest.raises(InvalidRingError):
        hirzebruch3.monomials_of_degree(d)
    with pytest.raises(InvalidRingError):
        hirzebruch3.weight(d)


def test_exterior_multiplication_signs(hirzebruch3):
    E = dual_ring_toric(hirzebruch3)
    e0, e1, e2 = E.var(0), E.var(1), E.var(2)
    assert e0 * e1 == -(e1 * e0)
    assert (e0 * e0).is_zero()
    assert e2 * e0 * e1 == e0 * e1 * e2
    assert E.word((1, 0)) == -E.word((0, 1))
    assert len(list(E.all_words())) == 16


def test_exterior_degrees(hirzebruch3):
    E = dual_ring_toric(hirzebruch3)
    assert isinstance(E, ExtAlgebra)
    assert E.var_degrees == ((-1, 0, -1), (3, -1, -1), (-1, 0, -1), (0, -1, -1))
    assert (E.var(0) * E.var(3)).degree == (-1, -1, -2)
    assert E.symmetric_degree_sum == (-1, 2)


def test_koszul_dual_round_trip(hirzebruch3, wp11122):
    for S in (hirzebruch3, wp11122):
        assert dual_ring_toric(dual_ring_toric(S)) == S


def test_exact_linear_algebra():
    F = Field.prime(7)
    A = np.array([[1, 2, 3], [2, 4, 6]], dtype=object)
    assert rank(F, A) == 1
    kernel = nullspace(F, A)
    assert len(kernel) == 2
    for v in kernel:
        assert all(x % 7 == 0 for x in A.dot(v))
    assert solve(F, A, np.array([1, 3], dtype=object)) is None


@pytest.mark.parametrize("field, half", [(Field.rationals(), Fraction(1, 2)), (Field.prime(7), 4)])
def test_rref_stays_in_the_field(field, half):
    A = np.array([[field(2), field(1), field(0)], [field(4), field(2), field(1)]], dtype=object)
    R, pivots = rref(field, A)
    assert pivots == [0, 2]
    assert R.tolist() == [[1, half, 0], [0, 0, 1]]
    assert all(type(x) is type(field.one) for x in R.flat)
    x = solve(field, A, np.array([field(1), field(3)], dtype=object))
    assert list(A.dot(x) % 7 if field.characteristic else A.dot(x)) == [1, 3]


def test_ext_multiply(hirzebruch3):
    E = dual_ring_toric(hirzebruch3)
    e0, e1 = E.var(0), E.var(1)
    assert ext_multiply(e0, e1) == E.word((0, 1))
    assert ext_multiply(e1, e0) == -E.word((0, 1))
    assert ext_multiply(e0, e0).is_zero()


def test_homogeneity_of_polynomials(hirzebruch3):
    x0, x1, x2, x3 = hirzebruch3.gens
    assert (x0 * x3 + x2 * x3).is_homogeneous()
    assert not (x0 + x3).is_homogeneous()
    assert (x0 * x3).constant_term == 0
    assert (x1 * x0).degree == (-2, 1)
    assert (x1 * x0 ** 3).degree == (0, 1)
