"""
Test Script: Frobenius Algebras

Axiom checks, the trivial/opposite/tensor constructions and the haploid
algebra solver at level 16.
"""

import random

import pytest

from app.core.exceptions import InvalidInputError
from app.services.cyclotomic_service import ONE, CycScalar
from app.services.frobenius_service import FrobeniusAlgebra, frobenius_service
from app.services.homspace_service import SSObject, homspace_service as h


def test_trivial_algebra(sl2_16, one16):
    report = frobenius_service.check_algebra(one16)
    assert report.passed
    assert all(report.flags.values())
    assert frobenius_service.dimension(one16) == ONE
    op = frobenius_service.opposite(one16)
    assert op.mu == one16.mu and op.delta == one16.delta


def test_d10_is_symmetric_special(d10):
    print("🧪 Testing the D10 algebra")
    report = frobenius_service.check_algebra(d10)
    assert report.passed
    for flag in ("is_frobenius", "symmetric", "delta_separable", "commutative", "haploid"):
        assert report.flags[flag], flag
    assert frobenius_service.is_symmetric_special(d10)
    assert frobenius_service.dimension(d10) == 2
    assert d10.obj == SSObject.parse("0+16")


def test_flipped_unit_component_is_located(sl2_16, d10):
    entries = []
    for src, dst, value in d10.mu.entries():
        labels = tuple(k[0] for k in src[0])
        entries.append((src, dst, -value if labels == (0, 16) else value))
    mu = h.from_entries(sl2_16, d10.mu.dom, d10.mu.cod, entries)
    broken = FrobeniusAlgebra("broken", sl2_16, d10.word, mu, d10.eta, d10.delta, d10.eps)
    report = frobenius_service.check_algebra(broken)
    assert not report.passed
    assert not report.flags["unit"]
    assert "left unit" in [f.axiom for f in report.failures]


def test_opposite_of_commutative_algebra(d10):
    op = frobenius_service.opposite(d10)
    assert op.mu == d10.mu
    report = frobenius_service.check_algebra(op)
    assert report.passed
    assert report.flags["delta_separable"]


def test_tensor_with_trivial_algebra(one16, d10):
    T = frobenius_service.tensor_algebra(one16, d10)
    assert T.word == d10.word
    assert T.mu == d10.mu
    assert frobenius_service.check_algebra(T).passed


def test_tensor_square_of_d10(d10):
    T = frobenius_service.tensor_algebra(d10, d10)
    report = frobenius_service.check_algebra(T)
    assert report.passed
    assert report.flags["symmetric"]
    assert report.flags["delta_separable"]
    assert frobenius_service.dimension(T) == 4


def test_tensor_is_associative_blockwise(sl2_3):
    one = frobenius_service.trivial_algebra(sl2_3)
    A = frobenius_service.solve_haploid_algebra(sl2_3, SSObject.parse("0")).algebras[0]
    left = frobenius_service.tensor_algebra(frobenius_service.tensor_algebra(A, one), A)
    right = frobenius_service.tensor_algebra(A, frobenius_service.tensor_algebra(one, A))
    for name in ("mu", "eta", "delta", "eps"):
        assert getattr(left, name) == getattr(right, name), name


def test_solver_on_the_unit(sl2_16):
    outcome = frobenius_service.solve_haploid_algebra(sl2_16, SSObject.parse("0"))
    assert len(outcome.algebras) == 1
    A = outcome.algebras[0]
    assert frobenius_service.dimension(A) == ONE
    assert frobenius_service.check_algebra(A).passed


def test_solver_on_d10_object(sl2_16):
    outcome = frobenius_service.solve_haploid_algebra(sl2_16, SSObject.parse("0+16"))
    assert outcome.algebras
    for A in outcome.algebras:
        assert frobenius_service.is_symmetric_special(A)


@pytest.mark.slow
def test_solver_finds_e7(e7):
    report = frobenius_service.check_algebra(e7)
    assert report.passed
    assert report.flags["haploid"]
    assert report.flags["symmetric"] and report.flags["delta_separable"]
    assert not report.flags["commutative"]
    C = e7.category
    assert frobenius_service.dimension(e7) == 2 + C.qdim[8]


def test_solver_rejects_bad_objects(sl2_16):
    with pytest.raises(InvalidInputError):
        frobenius_service.solve_haploid_algebra(sl2_16, SSObject.parse("8+16"))
    with pytest.raises(InvalidInputError):
        frobenius_service.solve_haploid_algebra(sl2_16, SSObject.parse("0+2*16"))


def test_structure_constants_on_the_unit(sl2_3):
    A = frobenius_service.from_structure_constants(sl2_3, SSObject.parse("0"), {})
    assert A is not None
    assert frobenius_service.check_algebra(A).passed
    assert A.mu.column((((0, 0), (0, 0)), (0, 0))) == {(((0, 0),), (0,)): CycScalar.from_int(1)}


@pytest.fixture(scope="module")
def fermion_pair(sl2_2):
    outcome = frobenius_service.solve_haploid_algebra(sl2_2, SSObject.parse("0+2"))
    assert outcome.algebras, outcome.diagnostics
    return outcome.algebras[0]


def test_level_2_fermion_pair_algebra(fermion_pair):
    assert frobenius_service.check_algebra(fermion_pair).passed
    assert frobenius_service.is_symmetric_special(fermion_pair)
    assert frobenius_service.dimension(fermion_pair) == 2


def test_seeded_structure_mutations_are_detected(sl2_2, fermion_pair):
    """20 random single-entry shifts of the product or coproduct all break the axioms"""
    print("🧪 Testing seeded product/coproduct mutations")
    A = fermion_pair
    sites = [(which, i) for which, m in (("mu", A.mu), ("delta", A.delta)) for i in range(len(list(m.entries())))]
    choices = [(site, shift) for site in sites for shift in (1, 3, 4, 5)]
    missed = []
    for (which, target), shift in random.Random(11).sample(choices, 20):
        m = getattr(A, which)
        entries = [(src, dst, value + shift if i == target else value)
                   for i, (src, dst, value) in enumerate(m.entries())]
        mutated = h.from_entries(sl2_2, m.dom, m.cod, entries)
        mu, delta = (mutated, A.delta) if which == "mu" else (A.mu, mutated)
        broken = FrobeniusAlgebra("mutated", sl2_2, A.word, mu, A.eta, delta, A.eps)
        report = frobenius_service.check_algebra(broken)
        if report.passed and frobenius_service.is_symmetric_special(broken):
            missed.append((which, target, shift))
    assert not missed
