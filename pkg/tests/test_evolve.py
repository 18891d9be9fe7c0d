import cmath

import numpy as np
import pytest

from hyperlap import (
    Hypergraph,
    evolution_operator,
    evolve_state,
    hypergraph_laplacian,
    partition_trace,
    susy_laplacian,
)
from hyperlap.evolve import NotSymmetricError, format_complex
from hyperlap.laplacian import ExactMatrix
from hyperlap.model import HyperlapError


def test_theta_zero_is_exact_identity(fig1):
    u = evolution_operator(susy_laplacian(fig1), 0.0)
    assert np.array_equal(u, np.eye(13, dtype=complex))


def test_scalar_exponential():
    m = ExactMatrix(dim=1, entries=((1,),))
    u = evolution_operator(m, np.pi)
    assert abs(u[0, 0] - (-1)) < 1e-12


def test_non_symmetric_rejected():
    m = ExactMatrix(dim=2, entries=((0, 1), (0, 0)))
    with pytest.raises(NotSymmetricError):
        evolution_operator(m, 0.5)


@pytest.mark.parametrize("theta", [0.01, 0.1, 1.0, 10.0])
def test_unitarity(fig1, theta):
    u = evolution_operator(susy_laplacian(fig1), theta)
    assert np.abs(u @ u.conj().T - np.eye(13)).max() < 1e-10


def test_composition(fig1):
    susy = susy_laplacian(fig1)
    u = evolution_operator(susy, 0.3) @ evolution_operator(susy, 0.7)
    assert np.abs(evolution_operator(susy, 1.0) - u).max() < 1e-9


def test_small_theta_series_consistency(fig1):
    susy = susy_laplacian(fig1)
    delta = np.array(susy.entries, dtype=float)
    norm = np.abs(delta).sum(axis=1).max()
    for theta in (0.001, 0.005, 0.01):
        u = evolution_operator(susy, theta)
        second_order = (
            np.eye(13) - 1j * theta * delta - theta**2 * (delta @ delta) / 2
        )
        assert np.abs(u - second_order).max() < norm**3 * theta**3


def test_evolve_state_identity(fig1):
    psi = np.arange(13, dtype=complex)
    out = evolve_state(np.eye(13, dtype=complex), psi)
    assert np.array_equal(out, psi)


def test_evolve_state_preserves_norm(fig1):
    u = evolution_operator(susy_laplacian(fig1), 0.1)
    psi = np.zeros(13, dtype=complex)
    psi[0] = 1
    assert abs(np.linalg.norm(evolve_state(u, psi)) - 1) < 1e-10


def test_evolve_state_dimension_mismatch():
    with pytest.raises(HyperlapError, match="mismatch"):
        evolve_state(np.eye(3, dtype=complex), np.zeros(4, dtype=complex))


def test_partition_trace_theta_zero(fig1):
    assert partition_trace(fig1, 0.0) == 13


def test_partition_trace_single_edge_closed_form():
    h = Hypergraph(n=2, edges=((1, 2),))
    for theta in (0.1, 0.7, 2.0):
        expected = 1 + 2 * cmath.exp(-2j * theta)
        assert abs(partition_trace(h, theta) - expected) < 1e-10


def test_partition_trace_block_additivity(fig1):
    # trace over the full direct sum equals the sum of the block traces
    theta = 0.05
    full = np.trace(evolution_operator(susy_laplacian(fig1), theta))
    assert abs(partition_trace(fig1, theta) - full) < 1e-10


def test_format_complex():
    assert format_complex(1 + 2j) == "1+2i"
    assert format_complex(-0.5 - 0.25j) == "-0.5-0.25i"
