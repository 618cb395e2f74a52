import pytest

from toricci import Configuration, SimplicialConfig


@pytest.fixture
def membership_columns():
    """4 columns in N^3 with one known member and one known non-member."""
    return ((10, 2, 5), (3, 1, 0), (2, 1, 1), (1, 3, 2))


@pytest.fixture
def group_columns():
    """5 columns in N^3 whose cokernel has order 72."""
    return ((24, 0, 0), (0, 24, 0), (0, 0, 24), (8, 10, 5), (3, 6, 9))


@pytest.fixture
def reduction_config():
    """5 columns in N^3 that reduce to the empty set with 2 generators."""
    return Configuration.from_columns(
        [(0, 0, 3), (2, 3, 12), (0, 6, 18), (1, 0, 0), (1, 5, 17)]
    )


@pytest.fixture
def numerical_fixed_point():
    """Four coprime-ish scalars that are their own reduction fixed point."""
    return Configuration.from_columns([(14,), (15,), (20,), (21,)])


@pytest.fixture
def eight_column_ci():
    """Simplicial 3x8 configuration, degree-52 axes; CI with 5 generators."""
    return SimplicialConfig.detect(
        Configuration.from_columns(
            [
                (52, 0, 0),
                (0, 52, 0),
                (0, 0, 52),
                (20, 30, 100),
                (28, 42, 140),
                (30, 45, 150),
                (42, 63, 210),
                (52, 52, 78),
            ]
        )
    )


@pytest.fixture
def five_column_non_ci():
    """Simplicial 3x5 configuration that is not a complete intersection."""
    return SimplicialConfig.detect(
        Configuration.from_columns(
            [(12, 0, 0), (0, 10, 0), (0, 0, 8), (1, 3, 3), (2, 2, 3)]
        )
    )


@pytest.fixture
def ten_column_ci():
    """Simplicial 3x10 configuration; CI with 7 generators."""
    return SimplicialConfig.detect(
        Configuration.from_columns(
            [
                (52, 0, 0),
                (0, 52, 0),
                (0, 0, 52),
                (20, 30, 100),
                (28, 42, 140),
                (30, 45, 150),
                (42, 63, 210),
                (32, 32, 48),
                (36, 36, 54),
                (40, 40, 60),
            ]
        )
    )
