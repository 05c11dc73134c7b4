"""Shared fixtures."""

import pytest

from syndrome_resampler.codes import build_rotated, build_unrotated


@pytest.fixture(scope="session")
def rotated3():
    return build_rotated(3)


@pytest.fixture(scope="session")
def rotated5():
    return build_rotated(5)


@pytest.fixture(scope="session")
def unrotated3():
    return build_unrotated(3)
