"""Dense state vectors, gates, qubit permutations and one-qubit colours.

Bit-order convention used everywhere in this package: qubit 1 is the most
significant bit of the amplitude index, so the basis state |b1 b2 ... bn>
sits at index sum_i b_i * 2**(n - i). SAT assignment strings use the same
orientation, which keeps classical bitstrings and amplitude indices aligned.

States are immutable values; every operation returns a fresh StateVector.
Amplitudes are renormalised after each gate to cap drift over long traces.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from .backend import kernels

MAX_QUBITS = 12
NORM_ATOL = 1e-9

_SQRT1_2 = 1.0 / math.sqrt(2.0)

GATE_ARITY = {
    "H": 1, "X": 1, "Y": 1, "Z": 1, "S": 1, "T": 1,
    "RX": 1, "RY": 1, "RZ": 1,
    "CNOT": 2, "CZ": 2, "CPHASE": 2, "SWAP": 2,
    "CLAUSE_PHASE": 3,
}

ANGLE_GATES = frozenset({"RX", "RY", "RZ", "CPHASE", "CLAUSE_PHASE"})

# Gates that map the Pauli group to itself; their SRE step difference is
# zero up to float noise.
CLIFFORD_GATES = frozenset({"H", "X", "Y", "Z", "S", "CNOT", "CZ", "SWAP"})

# Gates diagonal in the computational basis; they cannot change any |amp|^2.
DIAGONAL_GATES = frozenset({"Z", "S", "T", "RZ", "CZ", "CPHASE", "CLAUSE_PHASE"})


@dataclass(frozen=True)
class Gate:
    """One circuit operation; qubit indices are 1-based and distinct.

    `angle` is in radians and only meaningful for RX/RY/RZ/CPHASE and
    CLAUSE_PHASE; `pattern` is the 3-bit match string of CLAUSE_PHASE.
    Rotation conventions: RX/RY/RZ(t) = exp(-i t P / 2) for P in {X, Y, Z},
    CPHASE(t) = diag(1, 1, 1, e^{it}), and CLAUSE_PHASE(t, pattern)
    multiplies every amplitude whose bits on the three qubits equal
    `pattern` by e^{-it}.
    """

    kind: str
    qubits: tuple
    angle: float = None
    pattern: str = None

    def __post_init__(self):
        if self.kind not in GATE_ARITY:
            raise ValueError(f"unknown gate kind {self.kind!r}")
        qubits = tuple(int(q) for q in self.qubits)
        object.__setattr__(self, "qubits", qubits)
        if len(qubits) != GATE_ARITY[self.kind]:
            raise ValueError(
                f"{self.kind} expects {GATE_ARITY[self.kind]} qubit(s), "
                f"got {qubits}"
            )
        if len(set(qubits)) != len(qubits):
            raise ValueError(f"{self.kind} qubits must be distinct: {qubits}")
        if any(q < 1 for q in qubits):
            raise ValueError(f"qubit indices are 1-based: {qubits}")
        if self.kind in ANGLE_GATES:
            if self.angle is None:
                raise ValueError(f"{self.kind} requires an angle")
            object.__setattr__(self, "angle", float(self.angle))
        elif self.angle is not None:
            raise ValueError(f"{self.kind} takes no angle")
        if self.kind == "CLAUSE_PHASE":
            if (self.pattern is None or len(self.pattern) != 3
                    or set(self.pattern) - {"0", "1"}):
                raise ValueError(
                    f"CLAUSE_PHASE needs a 3-bit pattern, got {self.pattern!r}"
                )
        elif self.pattern is not None:
            raise ValueError(f"{self.kind} takes no pattern")


@dataclass(frozen=True, eq=False)
class StateVector:
    """Normalised pure state of n qubits (1 <= n <= 12)."""

    n: int
    amps: np.ndarray = field(repr=False)

    def __post_init__(self):
        if not 1 <= self.n <= MAX_QUBITS:
            raise ValueError(f"qubit count must be in [1, {MAX_QUBITS}], got {self.n}")
        amps = np.asarray(self.amps, dtype=np.complex128)
        if amps.shape != (1 << self.n,):
            raise ValueError(
                f"expected {1 << self.n} amplitudes for n={self.n}, got {amps.shape}"
            )
        norm = np.linalg.norm(amps)
        if abs(norm - 1.0) > NORM_ATOL:
            raise ValueError(f"state not normalised: |norm - 1| = {abs(norm - 1.0):.3e}")
        amps = amps.copy()
        amps.setflags(write=False)
        object.__setattr__(self, "amps", amps)

    @property
    def dim(self):
        return 1 << self.n

    def probabilities(self):
        """|amp|^2 per basis index."""
        return np.abs(self.amps) ** 2


@dataclass(frozen=True)
class QubitPermutation:
    """Bijection on qubit positions {1, ..., n}, stored as the image tuple."""

    sigma: tuple

    def __post_init__(self):
        sigma = tuple(int(s) for s in self.sigma)
        object.__setattr__(self, "sigma", sigma)
        if sorted(sigma) != list(range(1, len(sigma) + 1)):
            raise ValueError(f"not a bijection on 1..{len(sigma)}: {sigma}")

    @property
    def n(self):
        return len(self.sigma)

    @classmethod
    def identity(cls, n):
        return cls(tuple(range(1, n + 1)))

    def inverse(self):
        inv = [0] * self.n
        for i, image in enumerate(self.sigma, start=1):
            inv[image - 1] = i
        return QubitPermutation(tuple(inv))

    def then(self, other):
        """Permutation equivalent to applying self first, then other."""
        return QubitPermutation(
            tuple(self.sigma[other.sigma[i] - 1] for i in range(self.n))
        )

    def index_map(self, n=None):
        """Array M with (permuted psi)[j] = psi.amps[M[j]] for all j."""
        n = self.n if n is None else n
        if n != self.n:
            raise ValueError(f"permutation is over {self.n} qubits, state has {n}")
        j = np.arange(1 << n)
        out = np.zeros_like(j)
        inv = self.inverse().sigma
        for k in range(1, n + 1):
            out |= ((j >> (n - inv[k - 1])) & 1) << (n - k)
        return out


class QubitColour(tuple):
    """(p0, p+, p+i) occupation triple of a reduced one-qubit state.

    Plain tuple subclass so spectra sort lexicographically.
    """

    __slots__ = ()

    def __new__(cls, p0, pplus, pplusi):
        return super().__new__(cls, (float(p0), float(pplus), float(pplusi)))

    @property
    def p0(self):
        return self[0]

    @property
    def pplus(self):
        return self[1]

    @property
    def pplusi(self):
        return self[2]


def _rotation_matrix(kind, angle):
    half = 0.5 * angle
    c, s = math.cos(half), math.sin(half)
    if kind == "RX":
        return (c, -1j * s, -1j * s, c)
    if kind == "RY":
        return (c, -s, s, c)
    # RZ
    return (complex(c, -s), 0.0, 0.0, complex(c, s))


_FIXED_1Q = {
    "H": (_SQRT1_2, _SQRT1_2, _SQRT1_2, -_SQRT1_2),
    "X": (0.0, 1.0, 1.0, 0.0),
    "Y": (0.0, -1j, 1j, 0.0),
    "Z": (1.0, 0.0, 0.0, -1.0),
    "S": (1.0, 0.0, 0.0, 1j),
    "T": (1.0, 0.0, 0.0, complex(_SQRT1_2, _SQRT1_2)),
}


def gate_matrix_1q(gate):
    """Row-major 2x2 entries (u00, u01, u10, u11) of a one-qubit gate."""
    if gate.kind in _FIXED_1Q:
        return _FIXED_1Q[gate.kind]
    return _rotation_matrix(gate.kind, gate.angle)


def apply_gate_inplace(amps, n, gate):
    """Apply one gate to a writable amplitude array and renormalise."""
    for q in gate.qubits:
        if q > n:
            raise ValueError(f"gate {gate.kind} targets qubit {q} but n={n}")
    kind = gate.kind
    if GATE_ARITY[kind] == 1:
        u00, u01, u10, u11 = gate_matrix_1q(gate)
        kernels.apply_unitary_1q(amps, n, gate.qubits[0], u00, u01, u10, u11)
    elif kind == "CNOT":
        kernels.apply_cnot(amps, n, gate.qubits[0], gate.qubits[1])
    elif kind == "SWAP":
        kernels.apply_swap(amps, n, gate.qubits[0], gate.qubits[1])
    elif kind == "CZ":
        kernels.apply_phase_11(amps, n, gate.qubits[0], gate.qubits[1], -1.0 + 0.0j)
    elif kind == "CPHASE":
        phase = complex(math.cos(gate.angle), math.sin(gate.angle))
        kernels.apply_phase_11(amps, n, gate.qubits[0], gate.qubits[1], phase)
    else:  # CLAUSE_PHASE
        phase = complex(math.cos(gate.angle), -math.sin(gate.angle))
        q1, q2, q3 = gate.qubits
        kernels.apply_pattern_phase(amps, n, q1, q2, q3, int(gate.pattern, 2), phase)
    amps /= np.linalg.norm(amps)


def init_basis_state(n, bitstring):
    """Computational basis state |bitstring>, qubit 1 first."""
    if len(bitstring) != n:
        raise ValueError(f"bitstring {bitstring!r} does not have length {n}")
    if set(bitstring) - {"0", "1"}:
        raise ValueError(f"bitstring {bitstring!r} is not binary")
    amps = np.zeros(1 << n, dtype=np.complex128)
    amps[int(bitstring, 2)] = 1.0
    return StateVector(n, amps)


def apply_gate(psi, gate):
    """New state with `gate` applied (norm preserved, then renormalised)."""
    amps = psi.amps.copy()
    apply_gate_inplace(amps, psi.n, gate)
    return StateVector(psi.n, amps)


def apply_permutation(psi, sigma):
    """Relabel qubits: basis index bits are permuted per sigma."""
    return StateVector(psi.n, psi.amps[sigma.index_map(psi.n)])


def inner_product(a, b):
    """<a|b> with the conjugate on the first argument."""
    if a.n != b.n:
        raise ValueError(f"dimension mismatch: n={a.n} vs n={b.n}")
    return complex(np.vdot(a.amps, b.amps))


def reduced_density_1q(psi, q):
    """2x2 reduced density matrix of qubit q (trace 1, Hermitian, PSD)."""
    if not 1 <= q <= psi.n:
        raise ValueError(f"qubit {q} out of range for n={psi.n}")
    v = psi.amps.reshape(1 << (q - 1), 2, 1 << (psi.n - q))
    return np.einsum("iaj,ibj->ab", v, v.conj())


def qubit_colour(psi, q):
    """Probabilities of qubit q's reduced state being |0>, |+> and |+i>."""
    rho = reduced_density_1q(psi, q)
    p0 = rho[0, 0].real
    pplus = 0.5 + rho[0, 1].real
    pplusi = 0.5 - rho[0, 1].imag
    clip = lambda p: min(max(p, 0.0), 1.0)
    return QubitColour(clip(p0), clip(pplus), clip(pplusi))


def colour_spectrum(psi):
    """Per-qubit colours sorted descending, hence permutation invariant."""
    colours = [qubit_colour(psi, q) for q in range(1, psi.n + 1)]
    return sorted(colours, reverse=True)


def haar_random_state(n, seed):
    """Haar-distributed pure state: normalised iid complex Gaussians."""
    rng = np.random.default_rng(seed)
    amps = rng.standard_normal(1 << n) + 1j * rng.standard_normal(1 << n)
    return StateVector(n, amps / np.linalg.norm(amps))


def random_stabilizer_state(n, depth, seed):
    """State after `depth` uniformly random {H, S, CNOT} gates on |0...0>."""
    rng = np.random.default_rng(seed)
    kinds = ("H", "S") if n == 1 else ("H", "S", "CNOT")
    amps = np.zeros(1 << n, dtype=np.complex128)
    amps[0] = 1.0
    for _ in range(depth):
        kind = kinds[rng.integers(len(kinds))]
        if kind == "CNOT":
            control, target = (rng.permutation(n)[:2] + 1).tolist()
            gate = Gate("CNOT", (control, target))
        else:
            gate = Gate(kind, (int(rng.integers(n)) + 1,))
        apply_gate_inplace(amps, n, gate)
    return StateVector(n, amps)
