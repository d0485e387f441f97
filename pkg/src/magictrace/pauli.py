"""Signless Pauli strings, their expectation spectrum and stabiliser
Renyi entropies.

A string is stored as an (x_mask, z_mask) bit pair: qubit i carries X if
only its x bit is set, Z if only its z bit is set, Y if both (realised as
Y = i X Z, which keeps every string Hermitian so expectations are real).
Phases are quotiented out; the sweep runs over all 4**n mask pairs.
"""

from dataclasses import dataclass

import numpy as np

from .backend import kernels

# Entries of the squared-expectation distribution below this are treated as
# outside the support when alpha = 0.
_SUPPORT_EPS = 1e-12

_AXES = {(0, 0): "I", (1, 0): "X", (0, 1): "Z", (1, 1): "Y"}


@dataclass(frozen=True)
class PauliString:
    """Signless n-qubit Pauli operator as an (x_mask, z_mask) pair."""

    n: int
    x_mask: int
    z_mask: int

    def __post_init__(self):
        limit = 1 << self.n
        if not (0 <= self.x_mask < limit and 0 <= self.z_mask < limit):
            raise ValueError(
                f"masks must fit in {self.n} bits: x={self.x_mask}, z={self.z_mask}"
            )

    def label(self):
        """Human-readable string, qubit 1 first, e.g. 'XIZY'."""
        chars = []
        for i in range(self.n):
            shift = self.n - 1 - i
            chars.append(_AXES[(self.x_mask >> shift) & 1, (self.z_mask >> shift) & 1])
        return "".join(chars)


@dataclass(frozen=True)
class SreConfig:
    """Renyi order and logarithm base for entropy values."""

    alpha: float = 2.0
    log_base: str = "2"

    def __post_init__(self):
        if self.alpha < 0:
            raise ValueError(f"alpha must be >= 0, got {self.alpha}")
        if self.log_base not in ("2", "e"):
            raise ValueError(f"log_base must be '2' or 'e', got {self.log_base!r}")

    def log(self, x):
        return np.log2(x) if self.log_base == "2" else np.log(x)


def enumerate_paulis(n):
    """Yield all 4**n signless Pauli strings, x_mask outer, z_mask inner.

    The order matches the layout of `xi_distribution`: the string
    (x, z) sits at flat index x * 2**n + z.
    """
    size = 1 << n
    for x in range(size):
        for z in range(size):
            yield PauliString(n, x, z)


def pauli_expectation(psi, p):
    """<psi|P|psi> for a single string, by direct summation over the basis.

    Kept independent of the batched sweep in `xi_distribution` so the two
    routes can cross-check each other.
    """
    if psi.n != p.n:
        raise ValueError(f"dimension mismatch: state n={psi.n}, pauli n={p.n}")
    idx = np.arange(psi.dim)
    signs = 1.0 - 2.0 * (np.bitwise_count(idx & p.z_mask) & 1)
    total = np.sum(np.conj(psi.amps[idx ^ p.x_mask]) * signs * psi.amps)
    total *= 1j ** (int(np.bitwise_count(np.uint64(p.x_mask & p.z_mask))) % 4)
    return float(total.real)


def xi_distribution(psi):
    """Probability 2^-n <psi|P|psi>^2 for every string, in enumeration order.

    Sums to 1 for any pure normalised state.
    """
    e = kernels.pauli_expectations(np.ascontiguousarray(psi.amps), psi.n)
    return (e * e) / psi.dim


def sre(psi, cfg=SreConfig()):
    """Stabiliser Renyi entropy of order cfg.alpha.

    Renyi entropy of the squared-expectation distribution, offset by
    log(2^n) so that stabiliser states sit exactly at zero. alpha = 1 uses
    the Shannon limit with 0 log 0 = 0; alpha = 0 counts the support above
    a 1e-12 floor.
    """
    return sre_from_xi(xi_distribution(psi), psi.n, cfg)


def sre_from_xi(xi, n, cfg=SreConfig()):
    """`sre` on a precomputed distribution (used by the trace loop)."""
    offset = n * cfg.log(2.0)
    alpha = cfg.alpha
    if alpha == 1.0:
        positive = xi[xi > 0.0]
        return float(-(positive * cfg.log(positive)).sum() - offset)
    if alpha == 0.0:
        return float(cfg.log(int((xi > _SUPPORT_EPS).sum())) - offset)
    return float(cfg.log((xi ** alpha).sum()) / (1.0 - alpha) - offset)
