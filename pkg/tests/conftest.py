import pytest

from hyperlap import builtin_fixture


@pytest.fixture
def fig1():
    return builtin_fixture("fig1")


@pytest.fixture
def fig2():
    return builtin_fixture("fig2")
