"""
Test Script: Category Data

Generated sl(2)_k data, the pentagon/hexagon/ribbon/modularity verifiers,
S and T matrices, the anomaly sums and category files.
"""

import random

import pytest

from app.core.exceptions import InvalidInputError, VerificationError
from app.services.category_service import category_service, gen_sl2k
from app.services.cyclotomic_service import ONE, CycScalar


def test_sl2_16_fusion_and_dimensions(sl2_16):
    """N_{8,16}^8 = 1, N_{i,16}^i = 0 otherwise, and d_16 = 1 exactly"""
    print("🧪 Testing sl(2)_16 fusion rules")
    assert sl2_16.size == 17
    assert sl2_16.N(8, 16, 8) == 1
    assert all(sl2_16.N(i, 16, i) == 0 for i in sl2_16.labels if i != 8)
    assert sl2_16.qdim[16] == ONE
    assert sl2_16.qdim[0] == ONE
    assert sl2_16.channels(16, 16) == (0,)


def test_sl2_1_has_two_unit_dimension_labels():
    C = gen_sl2k(1)
    assert C.size == 2
    assert all(d == ONE for d in C.qdim)


def test_level_must_be_positive():
    with pytest.raises(InvalidInputError):
        gen_sl2k(0)


def test_self_duality(sl2_16):
    assert all(sl2_16.dual(i) == i for i in sl2_16.labels)


@pytest.mark.parametrize("level", [1, 2, 3, 4])
def test_full_verification_at_small_levels(level):
    bundle = category_service.verify_all(gen_sl2k(level), mode="full")
    assert bundle.passed


def test_full_pentagon_at_level_3(sl2_3):
    report = category_service.verify_pentagon(sl2_3, mode="full")
    assert report.passed
    assert report.instances > 0


def test_sampled_pentagon_at_level_16(sl2_16):
    report = category_service.verify_pentagon(sl2_16, mode="sampled", samples=2000, seed=1)
    assert report.passed
    assert report.seed == 1
    assert report.instances == 2000


@pytest.mark.slow
def test_sampled_pentagon_at_level_16_full_budget(sl2_16):
    assert category_service.verify_pentagon(sl2_16, mode="sampled", samples=100000, seed=1).passed


def test_perturbed_f_symbol_is_located(sl2_3):
    broken = sl2_3.perturbed("F", (1, 1, 1, 1, 0, 0))
    report = category_service.verify_pentagon(broken, mode="full")
    assert not report.passed
    assert report.failure is not None
    assert report.failure.labels
    assert report.failure.lhs != report.failure.rhs


def test_hexagon_and_ribbon_at_level_2(sl2_2):
    assert category_service.verify_hexagon(sl2_2).passed
    assert category_service.verify_ribbon(sl2_2).passed


def test_sign_flipped_r_symbol_fails_hexagon(sl2_2):
    flipped = sl2_2.perturbed("R", (1, 1, 0), delta=-2 * sl2_2.R(1, 1, 0))
    assert flipped.R(1, 1, 0) == -sl2_2.R(1, 1, 0)
    report = category_service.verify_hexagon(flipped)
    assert not report.passed
    assert report.failure.check == "hexagon"


def test_ribbon_at_level_16(sl2_16):
    assert sl2_16.theta[0].is_one()
    assert category_service.verify_ribbon(sl2_16).passed


def test_unknown_check_is_rejected(sl2_2):
    with pytest.raises(InvalidInputError):
        category_service.verify_all(sl2_2, ["pentagon", "associator"])


def test_smatrix_normalization(sl2_3):
    S = category_service.smatrix(sl2_3)
    assert S[0][0] == ONE
    for j in sl2_3.labels:
        assert S[0][j] == sl2_3.qdim[j]
        for i in sl2_3.labels:
            assert S[i][j] == S[j][i]
            assert S[i][sl2_3.dual(j)] == S[i][j].conj()


def test_modularity(sl2_3):
    report = category_service.verify_modularity(sl2_3)
    assert report.passed
    assert report.details["determinant_nonzero"]


@pytest.mark.slow
def test_modularity_at_level_16(sl2_16):
    assert category_service.verify_modularity(sl2_16).passed


def test_tmatrix_is_diagonal_twist(sl2_3):
    T = category_service.tmatrix(sl2_3)
    for i in sl2_3.labels:
        for j in sl2_3.labels:
            assert T[i][j] == (sl2_3.theta[i] if i == j else 0)


def test_anomaly_sums(trivial, sl2_16):
    out = category_service.anomaly_check(trivial)
    assert out.anomaly_free_linear
    assert out.anomaly_free_squared
    assert out.p_plus.to_scalar() == ONE

    out = category_service.anomaly_check(sl2_16)
    p_plus, p_minus = out.p_plus.to_scalar(), out.p_minus.to_scalar()
    assert p_minus == p_plus.conj()
    assert out.anomaly_free_linear == (p_plus == p_minus)


def test_category_file_round_trip(sl2_2, tmp_path):
    path = tmp_path / "sl2_2.json"
    category_service.dump_category(sl2_2, path)
    C = category_service.load_category(path, samples=200)
    assert C.name == "sl2_2"
    assert C.F(1, 1, 1, 1, 0, 2) == sl2_2.F(1, 1, 1, 1, 0, 2)
    assert C.R(1, 1, 2) == sl2_2.R(1, 1, 2)
    assert category_service.verify_all(C, mode="full").passed


def test_invalid_category_file(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text('{"name": "x", "labels": ["0", "1"], "dual": [1, 1], "fusion": [], "theta": [], "qdim": []}')
    with pytest.raises(InvalidInputError):
        category_service.load_category(path)


def _mutation_is_detected(C, kind):
    checks = ("pentagon", "hexagon") if kind == "F" else ("hexagon", "ribbon")
    try:
        return not category_service.verify_all(C, checks, mode="full").passed
    except VerificationError:
        return True


def test_seeded_symbol_mutations_are_detected(sl2_2, sl2_3):
    """36 random single-entry shifts of F, R and theta at levels 2 and 3 all fail verification"""
    print("🧪 Testing seeded symbol mutations")
    rng = random.Random(2024)
    missed = []
    for C in (sl2_2, sl2_3):
        keys = {
            "F": list(C.admissible_six()),
            "R": list(C.ring.triples()),
            "theta": [(a,) for a in C.labels],
        }
        for kind, count in (("F", 8), ("R", 5), ("theta", 5)):
            for key in rng.sample(keys[kind], min(count, len(keys[kind]))):
                delta = CycScalar.from_int(rng.choice([1, 3, 4, 5]))
                if not _mutation_is_detected(C.perturbed(kind, key, delta), kind):
                    missed.append((C.name, kind, key))
    assert not missed
