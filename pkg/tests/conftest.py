from fractions import Fraction

import pytest

from twoarr.arrangement import Arrangement, LinearForm, SubspacePair
from twoarr.fixtures import load_fixture


def form(*coeffs) -> LinearForm:
    return LinearForm(tuple(Fraction(c) for c in coeffs))


def pair(name, first, second) -> SubspacePair:
    return SubspacePair(name, form(*first), form(*second))


@pytest.fixture(scope="session")
def arr_b():
    return load_fixture("example22-B")


@pytest.fixture(scope="session")
def arr_bprime():
    return load_fixture("example22-Bprime")


@pytest.fixture(scope="session")
def arr_bhat():
    return load_fixture("thm32-Bhat")


@pytest.fixture(scope="session")
def arr_bhat_complex():
    return load_fixture("thm32-Bhat-complex")


@pytest.fixture(scope="session")
def independent_pair():
    """Two transversal subspaces in R^4: no circuits at all."""
    return Arrangement(
        4,
        (
            pair("H1", (1, 0, 0, 0), (0, 1, 0, 0)),
            pair("H2", (0, 0, 1, 0), (0, 0, 0, 1)),
        ),
    )


@pytest.fixture(scope="session")
def single_subspace():
    """One codimension-2 subspace of R^2: the origin."""
    return Arrangement(2, (pair("H1", (1, 0), (0, 1)),))
