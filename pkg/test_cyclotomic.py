"""
Test Script: Cyclotomic Arithmetic

Exact field operations in Q(zeta_N), conductor changes, the JSON form of
scalars and the exact linear algebra used by the hom-space layer.
"""

import random
from fractions import Fraction

import pytest
import sympy

from app.core.exceptions import InvalidInputError
from app.services.cyclotomic_service import ONE, ZERO, CycPoly, CycScalar, cyclotomic_service


def z(n, e=1):
    return CycScalar.root_of_unity(n, e)


def test_root_of_unity_has_its_order():
    """zeta_N^N = 1 and no smaller power of a primitive root is 1"""
    print("🧪 Testing orders of roots of unity")
    assert z(72) ** 72 == ONE
    assert not (z(72) ** 36).is_one()
    assert z(72) ** 36 == CycScalar.from_int(-1)


def test_roots_of_unity_sum_to_zero():
    total = ZERO
    for e in range(5):
        total = total + z(5, e)
    assert total.is_zero()


def test_mixed_conductors_compare_exactly():
    assert z(12, 3) == z(4)
    assert z(8, 2) * z(3) == z(12, 7)
    assert z(6, 3) == -1


def test_inverse_and_division():
    x = ONE + z(7) + 3 * z(7, 4)
    assert x * x.inv() == ONE
    assert (x / x).is_one()
    with pytest.raises(InvalidInputError):
        ZERO.inv()


def test_conjugation_inverts_roots():
    x = z(36, 5)
    assert x * x.conj() == ONE
    q = z(36) + z(36, -1)
    assert q.conj() == q


def test_rationals_stay_rational():
    half = CycScalar.from_fraction(Fraction(1, 2))
    assert (half + half).is_one()
    assert (half * 4).as_int() == 2
    with pytest.raises(InvalidInputError):
        half.as_int()
    with pytest.raises(InvalidInputError):
        z(5).as_fraction()


def test_to_conductor_finds_subfield_element():
    """2cos(2pi/12) = sqrt(3) lives in Q(zeta_12)"""
    sqrt3 = z(12) + z(12, -1)
    assert sqrt3 * sqrt3 == 3
    lifted = sqrt3.lift(72)
    assert lifted.conductor == 72
    assert lifted.to_conductor(12) == sqrt3
    with pytest.raises(InvalidInputError):
        z(9).to_conductor(3)


def test_encode_decode_json_form():
    x = CycScalar.from_terms(72, [(0, Fraction(1, 3)), (5, -2), (80, 1)])
    payload = cyclotomic_service.encode(x)
    assert payload["N"] == 72
    assert all(isinstance(c, str) for _, c in payload["terms"])
    assert cyclotomic_service.decode(payload) == x


def test_decode_rejects_malformed_payload():
    with pytest.raises(InvalidInputError):
        cyclotomic_service.decode({"N": 8, "terms": [[0, "one"]]})
    with pytest.raises(InvalidInputError):
        cyclotomic_service.decode({"terms": []})


def test_zero_denominator_is_rejected():
    with pytest.raises(InvalidInputError):
        CycScalar(8, (1, 0, 0, 0), 0)


def test_rank_determinant_and_nullspace():
    w = z(3)
    rows = [[ONE, w, w * w], [ONE, w * w, w], [ONE, ONE, ONE]]
    assert cyclotomic_service.rank(rows) == 3
    det = cyclotomic_service.determinant(rows)
    assert not det.is_zero()
    assert det * det == -27

    singular = [[ONE, w], [w, w * w]]
    assert cyclotomic_service.rank(singular) == 1
    assert cyclotomic_service.determinant(singular).is_zero()
    kernel = cyclotomic_service.nullspace(singular, 2)
    assert len(kernel) == 1
    v = kernel[0]
    assert (singular[1][0] * v[0] + singular[1][1] * v[1]).is_zero()


def test_solve_linear_system():
    i = z(4)
    rows = [[ONE, i], [i, ONE]]
    x = cyclotomic_service.solve(rows, [ONE, ZERO])
    assert rows[0][0] * x[0] + rows[0][1] * x[1] == ONE
    assert (rows[1][0] * x[0] + rows[1][1] * x[1]).is_zero()
    assert cyclotomic_service.solve([[ONE, ONE], [ONE, ONE]], [ONE, ZERO]) is None


def test_sqrt_exact():
    root = cyclotomic_service.sqrt_exact(CycScalar.from_int(-4))
    assert root * root == -4
    root = cyclotomic_service.sqrt_exact(z(3))
    assert root * root == z(3)


@pytest.mark.parametrize("value", [2, 3, -6, 5, 12, Fraction(7, 12), Fraction(-1, 8)])
def test_sqrt_of_rationals_uses_gauss_sums(value):
    root = cyclotomic_service.sqrt_exact(CycScalar.from_fraction(Fraction(value)))
    assert root is not None
    assert root * root == CycScalar.from_fraction(Fraction(value))


def test_sqrt_of_rational_times_root_of_unity():
    value = 2 * z(5, 2)
    root = cyclotomic_service.sqrt_exact(value)
    assert root * root == value
    assert cyclotomic_service.sqrt_exact(ONE + z(5)) is None


def _random_scalar(rng, conductor):
    return CycScalar.from_terms(conductor, [(e, Fraction(rng.randint(-5, 5), rng.randint(1, 4)))
                                            for e in range(rng.randint(1, conductor))])


def test_random_inverses():
    """x * x^-1 = 1 for 100 seeded nonzero scalars"""
    print("🧪 Testing inverses of random scalars")
    rng = random.Random(17)
    checked = 0
    while checked < 100:
        x = _random_scalar(rng, rng.choice([3, 8, 12, 15, 16, 24, 68]))
        if x.is_zero():
            continue
        assert x * x.inv() == ONE
        checked += 1


def test_random_ring_axioms():
    rng = random.Random(5)
    for _ in range(30):
        a, b, c = (_random_scalar(rng, rng.choice([4, 9, 12, 16])) for _ in range(3))
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + (b - a) == b


def test_cyclotomic_polynomial_arithmetic():
    m0, m1 = CycPoly.variable(0, 2), CycPoly.variable(1, 2)
    w = z(3)
    p = (m0 + w) * (m0 - w)
    assert p.univariate(0) == {2: ONE, 0: -(w * w)}
    assert p.substitute(0, CycPoly.constant(w, 2)).is_zero()
    assert p.variables() == {0}

    q = m0 * m0 * m1 + m0 * m1 * w
    assert q.divide_out(1).variables() == {0}
    stripped = q.divide_out(0)
    assert stripped.monomials() == {(1, 1): ONE, (0, 1): w}
    assert (q.substitute(1, CycPoly.constant(ONE, 2)).substitute(0, CycPoly.constant(ONE, 2))).value() == ONE + w
    assert CycPoly.constant(z(8), 2).is_constant()


def test_minimal_polynomial_oracle():
    """2cos(pi/9) = zeta_18 + zeta_18^-1 is a root of the polynomial sympy reports"""
    x = sympy.Symbol("x")
    coeffs = sympy.Poly(sympy.minimal_polynomial(2 * sympy.cos(sympy.pi / 9), x), x).all_coeffs()
    value = z(18) + z(18, -1)
    total = ZERO
    for c in coeffs:
        total = total * value + int(c)
    assert total.is_zero()
    assert not (value * value - 3).is_zero()
