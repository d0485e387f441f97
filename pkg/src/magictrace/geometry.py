"""Target spaces, projector expectations and geodesic distances.

Distances are Fubini-Study angles. Two readings of the distance to a
multi-dimensional target space are supported and reported side by side:

  * "paper_literal":  2 * arccos(<H_c>)        (projector expectation fed
    straight into the arccos; reproduces the published figures),
  * "fubini_study":   2 * arccos(sqrt(<H_c>))  (the overlap amplitude, which
    for a single-state space equals the state-to-state geodesic exactly).

Both are monotone in <H_c>, so permutation minimisers agree between modes.
"""

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .state import QubitPermutation, StateVector

PAPER_LITERAL = "paper_literal"
FUBINI_STUDY = "fubini_study"
DISTANCE_MODES = (PAPER_LITERAL, FUBINI_STUDY)

MAX_PERMUTATION_QUBITS = 8
_ORTHO_ATOL = 1e-9
_PERM_CHUNK = 8192


@dataclass(frozen=True, eq=False)
class TargetSpace:
    """Span of orthonormal target states.

    Either `indices` holds the basis-state indices of a computational-basis
    space (the fast diagonal path, used for SAT solution sets), or `dense`
    holds the basis as rows of a (dim, 2^n) matrix (used for arbitrary
    states such as a transform output).
    """

    n: int
    indices: np.ndarray = None
    dense: np.ndarray = None

    def __post_init__(self):
        if (self.indices is None) == (self.dense is None):
            raise ValueError("exactly one of indices/dense must be given")
        if self.indices is not None:
            idx = np.unique(np.asarray(self.indices, dtype=np.int64))
            if idx.size != np.asarray(self.indices).size:
                raise ValueError("duplicate basis indices")
            if idx.size == 0:
                raise ValueError("unsatisfiable instance: empty target space")
            if idx.min() < 0 or idx.max() >= (1 << self.n):
                raise ValueError(f"basis index out of range for n={self.n}")
            idx.setflags(write=False)
            object.__setattr__(self, "indices", idx)
        else:
            dense = np.asarray(self.dense, dtype=np.complex128)
            if dense.ndim != 2 or dense.shape[1] != (1 << self.n):
                raise ValueError(f"dense basis must be (dim, {1 << self.n})")
            if dense.shape[0] == 0:
                raise ValueError("unsatisfiable instance: empty target space")
            gram = dense @ dense.conj().T
            if not np.allclose(gram, np.eye(dense.shape[0]), atol=_ORTHO_ATOL):
                raise ValueError("target basis is not orthonormal")
            dense = dense.copy()
            dense.setflags(write=False)
            object.__setattr__(self, "dense", dense)

    @property
    def dim(self):
        return len(self.indices) if self.indices is not None else self.dense.shape[0]

    @property
    def is_diagonal(self):
        return self.indices is not None

    def diagonal_mask(self):
        """Boolean membership vector over basis indices (diagonal spaces)."""
        if not self.is_diagonal:
            raise ValueError("not a computational-basis target space")
        mask = np.zeros(1 << self.n, dtype=bool)
        mask[self.indices] = True
        return mask

    def basis_states(self):
        """The orthonormal basis, materialised as StateVectors."""
        if self.is_diagonal:
            out = []
            for i in self.indices:
                amps = np.zeros(1 << self.n, dtype=np.complex128)
                amps[i] = 1.0
                out.append(StateVector(self.n, amps))
            return out
        return [StateVector(self.n, row) for row in self.dense]

    @classmethod
    def from_states(cls, states):
        states = list(states)
        if not states:
            raise ValueError("unsatisfiable instance: empty target space")
        n = states[0].n
        if any(s.n != n for s in states):
            raise ValueError("mixed qubit counts in target basis")
        return cls(n, dense=np.stack([s.amps for s in states]))

    @classmethod
    def single_state(cls, psi):
        return cls.from_states([psi])


def target_from_solutions(n, solutions):
    """Computational-basis target space of a classical solution set."""
    if len(solutions) == 0:
        raise ValueError("unsatisfiable instance: empty solution set")
    if solutions.n != n:
        raise ValueError(f"solution set is over {solutions.n} variables, n={n}")
    return TargetSpace(n, indices=solutions.indices())


def projector_expectation(amps, space):
    """<H_c> from a raw amplitude array (hot-loop variant, no wrapping)."""
    if space.is_diagonal:
        picked = amps[space.indices]
        return float((picked.real ** 2 + picked.imag ** 2).sum())
    overlaps = space.dense.conj() @ amps
    return float((overlaps.real ** 2 + overlaps.imag ** 2).sum())


def verifier_expectation(psi, space):
    """<psi|H_c|psi> for the projector H_c onto the target space.

    Equals the total solution probability of the state; in [0, 1] up to
    float noise.
    """
    if psi.n != space.n:
        raise ValueError(f"dimension mismatch: state n={psi.n}, space n={space.n}")
    return projector_expectation(psi.amps, space)


def _clamp01(x):
    return min(max(x, 0.0), 1.0)


def distance_from_expectation(hc, mode):
    """Map a projector expectation to the distance under either mode."""
    if mode == PAPER_LITERAL:
        return 2.0 * math.acos(_clamp01(hc))
    if mode == FUBINI_STUDY:
        return 2.0 * math.acos(_clamp01(math.sqrt(_clamp01(hc))))
    raise ValueError(f"unknown distance mode {mode!r}")


def geodesic_to_state(psi, target):
    """Fubini-Study angle 2 arccos |<psi|target>|, in [0, pi]."""
    if psi.n != target.n:
        raise ValueError(f"dimension mismatch: n={psi.n} vs n={target.n}")
    overlap = abs(np.vdot(psi.amps, target.amps))
    return 2.0 * math.acos(_clamp01(overlap))


def geodesic_to_space(psi, space, mode=PAPER_LITERAL):
    """Distance from psi to the target space under the chosen mode."""
    return distance_from_expectation(verifier_expectation(psi, space), mode)


@lru_cache(maxsize=4)
def _permutation_tables(n):
    """All n! qubit permutations (lexicographic) and their index maps.

    Row s of the map array satisfies (sigma_s psi)[j] = psi[maps[s, j]].
    """
    perms = list(itertools.permutations(range(1, n + 1)))
    sig = np.array(perms, dtype=np.int64)
    inv = np.argsort(sig, axis=1) + 1
    j = np.arange(1 << n, dtype=np.int64)
    maps = np.zeros((len(perms), 1 << n), dtype=np.int64)
    for k in range(1, n + 1):
        source = inv[:, k - 1][:, None]
        maps |= ((j[None, :] >> (n - source)) & 1) << (n - k)
    maps = maps.astype(np.int32)
    maps.setflags(write=False)
    return perms, maps


class PermutationScan:
    """Reusable scanner for max_sigma <H_c> over all qubit relabellings.

    Precomputes the per-permutation gather tables once per target space so
    a trace can query every snapshot cheaply.
    """

    def __init__(self, space):
        if space.n > MAX_PERMUTATION_QUBITS:
            raise ValueError(
                f"exhaustive permutation scan needs n! evaluations; "
                f"capped at n={MAX_PERMUTATION_QUBITS} ({math.factorial(MAX_PERMUTATION_QUBITS)} "
                f"permutations), got n={space.n}"
            )
        self.space = space
        self.perms, self._maps = _permutation_tables(space.n)
        if space.is_diagonal:
            self._gather = self._maps[:, space.indices]

    def expectations(self, psi):
        """<H_c> of every permuted state, in permutation enumeration order."""
        if self.space.is_diagonal:
            pr = psi.probabilities()
            return pr[self._gather].sum(axis=1)
        out = np.empty(len(self.perms))
        basis_conj = self.space.dense.conj()
        for start in range(0, len(self.perms), _PERM_CHUNK):
            block = self._maps[start:start + _PERM_CHUNK]
            permuted = psi.amps[block]
            overlaps = permuted @ basis_conj.T
            out[start:start + block.shape[0]] = (
                overlaps.real ** 2 + overlaps.imag ** 2
            ).sum(axis=1)
        return out

    def max_expectation(self, psi):
        return float(self.expectations(psi).max())

    def best(self, psi):
        """(max <H_c>, minimising permutation); ties pick the lexicographically
        smallest permutation (first index of the maximum)."""
        values = self.expectations(psi)
        best = int(np.argmax(values))
        return float(values[best]), QubitPermutation(self.perms[best])


def geodesic_perm_min(psi, space, mode=PAPER_LITERAL):
    """Minimum of geodesic_to_space(sigma psi, space) over all sigma in S_n.

    Scanning permutations of the state is equivalent to scanning basis
    relabellings of the target space; the returned permutation attains the
    minimum.
    """
    scan = PermutationScan(space)
    hc, sigma = scan.best(psi)
    return distance_from_expectation(hc, mode), sigma


def hop_length(a_amps, b_amps):
    """Fubini-Study angle between consecutive snapshots.

    Overlaps within an ulp of 1 count as an exact zero hop, so a constant
    path has length exactly 0 despite rounding in the inner product.
    """
    overlap = abs(np.vdot(a_amps, b_amps))
    if overlap >= 1.0 - 1e-14:
        return 0.0
    return 2.0 * math.acos(overlap)


def path_length(states):
    """Chordwise Fubini-Study length of a discrete state path."""
    states = list(states)
    if len(states) < 2:
        raise ValueError(f"need at least 2 snapshots, got {len(states)}")
    n = states[0].n
    if any(s.n != n for s in states):
        raise ValueError("mixed qubit counts along the path")
    return sum(hop_length(a.amps, b.amps) for a, b in zip(states, states[1:]))


def geodesic_efficiency(states, space, mode=PAPER_LITERAL):
    """Net distance closed towards the space divided by path length.

    Floored at 0 (paths that end further away score 0) and capped at 1.
    """
    length = path_length(states)
    if length == 0.0:
        raise ValueError("zero path length: efficiency undefined")
    closed = geodesic_to_space(states[0], space, mode) - geodesic_to_space(
        states[-1], space, mode
    )
    return _clamp01(max(closed, 0.0) / length)
