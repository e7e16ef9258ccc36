"""
Shared fixtures for the root test scripts.

Level-16 data and the solved D10/E7 algebras are built once per session.
"""

import sys
from pathlib import Path

import pytest

# Add the app directory to path
sys.path.append(str(Path(__file__).parent))

from app.services.category_service import gen_sl2k, trivial_category
from app.services.frobenius_service import frobenius_service
from app.services.homspace_service import SSObject


def _solve(C, text, name):
    outcome = frobenius_service.solve_haploid_algebra(C, SSObject.parse(text))
    assert outcome.algebras, outcome.diagnostics
    A = outcome.algebras[0]
    A.name = name
    return A


@pytest.fixture(scope="session")
def sl2_2():
    return gen_sl2k(2)


@pytest.fixture(scope="session")
def sl2_3():
    return gen_sl2k(3)


@pytest.fixture(scope="session")
def sl2_16():
    return gen_sl2k(16)


@pytest.fixture(scope="session")
def trivial():
    return trivial_category()


@pytest.fixture(scope="session")
def one16(sl2_16):
    return frobenius_service.trivial_algebra(sl2_16)


@pytest.fixture(scope="session")
def d10(sl2_16):
    return _solve(sl2_16, "0+16", "D10")


@pytest.fixture(scope="session")
def e7(sl2_16):
    return _solve(sl2_16, "0+8+16", "E7")
