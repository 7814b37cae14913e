import pytest

from coamoeba.catalog import (
    hyperplane_a,
    hyperplane_b,
    line_b,
    plane_b,
    sixline_a,
    sixline_b,
    sixline_discriminant,
)
from coamoeba.matroid import Matroid


@pytest.fixture(scope="session")
def a6():
    return sixline_a()


@pytest.fixture(scope="session")
def b6():
    return sixline_b()


@pytest.fixture(scope="session")
def m6(b6):
    return Matroid(b6)


@pytest.fixture(scope="session")
def m_line():
    return Matroid(line_b())


@pytest.fixture(scope="session")
def m_plane():
    return Matroid(plane_b())


@pytest.fixture(scope="session")
def big_d():
    return sixline_discriminant()
