"""Shared dense-matrix oracles for the test suite.

Everything here is built straight from textbook definitions (kron chains
and explicit basis-state bookkeeping) with no calls into the package's
kernels, so tests can cross-check the fast implementations against an
independent route.
"""

import math

import numpy as np
import pytest

I2 = np.eye(2, dtype=complex)
PAULI_1Q = {
    "I": I2,
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}


def kron_chain(mats):
    out = np.array([[1.0 + 0j]])
    for m in mats:
        out = np.kron(out, m)
    return out


def dense_pauli(label):
    """Dense matrix of a Pauli string given as e.g. 'XIZ' (qubit 1 first)."""
    return kron_chain([PAULI_1Q[c] for c in label])


def dense_pauli_from_masks(n, x_mask, z_mask):
    """Hermitian signless Pauli: i^{|x&z|} X^x Z^z, built per qubit."""
    mats = []
    for i in range(n):
        shift = n - 1 - i
        x = (x_mask >> shift) & 1
        z = (z_mask >> shift) & 1
        mats.append(PAULI_1Q["IXZY"[x + 2 * z]])
    return kron_chain(mats)


def dense_gate(gate, n):
    """Unitary of one gate on n qubits, from its definition."""
    kind = gate.kind
    if kind in ("H", "X", "Y", "Z", "S", "T", "RX", "RY", "RZ"):
        q = gate.qubits[0]
        u = _dense_1q(kind, gate.angle)
        return kron_chain([u if i == q else I2 for i in range(1, n + 1)])
    dim = 1 << n
    out = np.zeros((dim, dim), dtype=complex)
    for b in range(dim):
        bits = [(b >> (n - i)) & 1 for i in range(1, n + 1)]
        amp = 1.0 + 0j
        if kind == "CNOT":
            c, t = gate.qubits
            if bits[c - 1]:
                bits[t - 1] ^= 1
        elif kind == "SWAP":
            a, bq = gate.qubits
            bits[a - 1], bits[bq - 1] = bits[bq - 1], bits[a - 1]
        elif kind == "CZ":
            a, bq = gate.qubits
            if bits[a - 1] and bits[bq - 1]:
                amp = -1.0
        elif kind == "CPHASE":
            a, bq = gate.qubits
            if bits[a - 1] and bits[bq - 1]:
                amp = np.exp(1j * gate.angle)
        elif kind == "CLAUSE_PHASE":
            got = "".join(str(bits[q - 1]) for q in gate.qubits)
            if got == gate.pattern:
                amp = np.exp(-1j * gate.angle)
        else:
            raise ValueError(kind)
        target = 0
        for i, bit in enumerate(bits):
            target |= bit << (n - 1 - i)
        out[target, b] = amp
    return out


def _dense_1q(kind, angle):
    s2 = 1 / math.sqrt(2)
    if kind == "H":
        return np.array([[s2, s2], [s2, -s2]], dtype=complex)
    if kind in ("X", "Y", "Z"):
        return PAULI_1Q[kind]
    if kind == "S":
        return np.diag([1, 1j]).astype(complex)
    if kind == "T":
        return np.diag([1, np.exp(1j * math.pi / 4)]).astype(complex)
    half = angle / 2
    c, s = math.cos(half), math.sin(half)
    if kind == "RX":
        return np.array([[c, -1j * s], [-1j * s, c]])
    if kind == "RY":
        return np.array([[c, -s], [s, c]], dtype=complex)
    if kind == "RZ":
        return np.diag([np.exp(-1j * half), np.exp(1j * half)])
    raise ValueError(kind)


def dense_circuit(circuit):
    """Product of the dense gate unitaries, in application order."""
    dim = 1 << circuit.n
    u = np.eye(dim, dtype=complex)
    for gate in circuit.gates:
        u = dense_gate(gate, circuit.n) @ u
    return u


def dense_permutation(sigma, n):
    """Matrix P with P|b1...bn> = |b_sigma(1) ... b_sigma(n)>."""
    dim = 1 << n
    out = np.zeros((dim, dim), dtype=complex)
    for b in range(dim):
        bits = [(b >> (n - i)) & 1 for i in range(1, n + 1)]
        new_bits = [bits[sigma[i] - 1] for i in range(n)]
        target = 0
        for i, bit in enumerate(new_bits):
            target |= bit << (n - 1 - i)
        out[target, b] = 1.0
    return out


@pytest.fixture
def rng():
    return np.random.default_rng(20240809)
