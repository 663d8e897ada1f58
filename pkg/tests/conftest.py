import pytest

from hopfcat import build_double, build_triangular, parse_group_spec

CATALOG = ["Z1", "Z2", "Z3", "Z4", "Z2xZ2", "Z6", "S3", "D4", "Q8"]


@pytest.fixture(scope="session")
def doubles():
    # session-shared so smatrix/lattice caches are computed once
    return {name: build_double(parse_group_spec(name)) for name in CATALOG}


@pytest.fixture(scope="session")
def double_s3(doubles):
    return doubles["S3"]


@pytest.fixture(scope="session")
def double_z6(doubles):
    return doubles["Z6"]


@pytest.fixture(scope="session")
def triangular_s3():
    return build_triangular(parse_group_spec("S3"))
