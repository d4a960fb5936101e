"""Shared oracles for the test suite.

Expected unitaries are constructed directly as numpy permutation/block
matrices so they stay independent of the circuit builders they check.
"""
import numpy as np
import pytest

SX_MAT = 0.5 * np.array([[1 + 1j, 1 - 1j], [1 - 1j, 1 + 1j]], dtype=complex)


def permutation_unitary(n, mapping):
    """Unitary sending basis index b to mapping(b)."""
    dim = 2 ** n
    u = np.zeros((dim, dim), dtype=complex)
    for b in range(dim):
        u[mapping(b), b] = 1.0
    return u


def toffoli_unitary():
    """Controls q0, q1; target q2 (basis bit i = qubit i)."""
    return permutation_unitary(3, lambda b: b ^ 0b100 if (b & 0b011) == 0b011 else b)


def fredkin_unitary():
    """Control q0; swaps q1 and q2 when the control is set."""

    def mapping(b):
        if b & 1:
            b1, b2 = (b >> 1) & 1, (b >> 2) & 1
            return (b & 1) | (b2 << 1) | (b1 << 2)
        return b

    return permutation_unitary(3, mapping)


def swap_unitary():
    return permutation_unitary(2, lambda b: ((b & 1) << 1) | ((b >> 1) & 1))


def controlled_gate_unitary(block):
    """Control q0, target q1: identity on c=0, `block` on the target for c=1."""
    u = np.zeros((4, 4), dtype=complex)
    for b in range(4):
        c, t = b & 1, (b >> 1) & 1
        if c == 0:
            u[b, b] = 1.0
        else:
            for t2 in (0, 1):
                u[(t2 << 1) | 1, b] = block[t2, t]
    return u


@pytest.fixture(scope="session")
def brisbane():
    from hexsynth.layout import heavy_hex_127

    return heavy_hex_127()
