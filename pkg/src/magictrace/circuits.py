"""Circuit IR, builders for the three studied circuit families, and the
gate-by-gate evolution tracer.

Trace granularity is one gate: step 0 is the initial state and step k the
state after gate k. "Relative depth" is k / (gate count).
"""

import math
from dataclasses import dataclass

import numpy as np

from . import geometry
from .pauli import SreConfig, sre
from .sat import unsat_pattern
from .state import (
    ANGLE_GATES,
    GATE_ARITY,
    Gate,
    StateVector,
    apply_gate_inplace,
    colour_spectrum,
)


@dataclass(frozen=True)
class Circuit:
    n: int
    gates: tuple
    label: str = ""

    def __post_init__(self):
        gates = tuple(self.gates)
        object.__setattr__(self, "gates", gates)
        for gate in gates:
            if max(gate.qubits) > self.n:
                raise ValueError(
                    f"gate {gate.kind} on {gate.qubits} exceeds n={self.n}"
                )

    def __len__(self):
        return len(self.gates)


@dataclass(frozen=True)
class HeaParams:
    """Per-layer per-qubit RY/RZ angles of the hardware-efficient ansatz."""

    thetas_y: np.ndarray
    thetas_z: np.ndarray

    def __post_init__(self):
        ty = np.asarray(self.thetas_y, dtype=np.float64)
        tz = np.asarray(self.thetas_z, dtype=np.float64)
        if ty.ndim != 2 or ty.shape != tz.shape:
            raise ValueError(
                f"expected matching (p, n) angle matrices, got {ty.shape} and {tz.shape}"
            )
        if not (np.isfinite(ty).all() and np.isfinite(tz).all()):
            raise ValueError("angles must be finite")
        object.__setattr__(self, "thetas_y", ty)
        object.__setattr__(self, "thetas_z", tz)

    @property
    def p(self):
        return self.thetas_y.shape[0]

    @classmethod
    def from_flat(cls, n, p, flat):
        flat = np.asarray(flat, dtype=np.float64)
        if flat.shape != (2 * p * n,):
            raise ValueError(f"expected {2 * p * n} parameters, got {flat.shape}")
        return cls(flat[: p * n].reshape(p, n), flat[p * n:].reshape(p, n))


@dataclass(frozen=True)
class QaoaParams:
    """Cost angles (gammas) and mixer angles (betas), one pair per layer."""

    gammas: np.ndarray
    betas: np.ndarray

    def __post_init__(self):
        g = np.asarray(self.gammas, dtype=np.float64)
        b = np.asarray(self.betas, dtype=np.float64)
        if g.ndim != 1 or g.shape != b.shape:
            raise ValueError(f"expected matching length-p vectors, got {g.shape}, {b.shape}")
        if not (np.isfinite(g).all() and np.isfinite(b).all()):
            raise ValueError("angles must be finite")
        object.__setattr__(self, "gammas", g)
        object.__setattr__(self, "betas", b)

    @property
    def p(self):
        return self.gammas.shape[0]

    @classmethod
    def from_flat(cls, p, flat):
        flat = np.asarray(flat, dtype=np.float64)
        if flat.shape != (2 * p,):
            raise ValueError(f"expected {2 * p} parameters, got {flat.shape}")
        return cls(flat[:p], flat[p:])


def build_qft(n, include_final_swaps=True):
    """Standard transform circuit: H plus controlled phases per qubit, then
    the qubit-order reversal swaps when requested.

    With the swaps the full unitary is the DFT matrix
    F[a, b] = 2^{-n/2} exp(2 pi i a b / 2^n).
    """
    gates = []
    for j in range(1, n + 1):
        gates.append(Gate("H", (j,)))
        for k in range(j + 1, n + 1):
            gates.append(Gate("CPHASE", (k, j), angle=math.pi / 2 ** (k - j)))
    if include_final_swaps:
        for j in range(1, n // 2 + 1):
            gates.append(Gate("SWAP", (j, n + 1 - j)))
    return Circuit(n, tuple(gates), label="qft")


def build_hea(n, p, params):
    """Layered ansatz: RY stack, RZ stack, then an ascending CNOT ladder
    (control q, target q+1). Gate count p * (3n - 1)."""
    if params.thetas_y.shape != (p, n):
        raise ValueError(
            f"parameter matrices shaped {params.thetas_y.shape}, expected ({p}, {n})"
        )
    gates = []
    for layer in range(p):
        for q in range(1, n + 1):
            gates.append(Gate("RY", (q,), angle=params.thetas_y[layer, q - 1]))
        for q in range(1, n + 1):
            gates.append(Gate("RZ", (q,), angle=params.thetas_z[layer, q - 1]))
        for q in range(1, n):
            gates.append(Gate("CNOT", (q, q + 1)))
    return Circuit(n, tuple(gates), label="hea")


def build_qaoa(formula, params):
    """Alternating ansatz for a 3-CNF formula.

    Initial H on every qubit, then per layer: one CLAUSE_PHASE(gamma) per
    clause (the diagonal unitary exp(-i gamma |unsat><unsat| (x) 1)) and an
    RX(2 beta) mixer on every qubit. All clause terms are diagonal, so the
    cost layer realises exp(-i gamma sum_c P_c) exactly.
    """
    n = formula.n
    gates = [Gate("H", (q,)) for q in range(1, n + 1)]
    clause_info = [(c.variables, unsat_pattern(c)) for c in formula.clauses]
    for layer in range(params.p):
        gamma = params.gammas[layer]
        beta = params.betas[layer]
        for variables, pattern in clause_info:
            gates.append(
                Gate("CLAUSE_PHASE", variables, angle=gamma, pattern=pattern)
            )
        for q in range(1, n + 1):
            gates.append(Gate("RX", (q,), angle=2.0 * beta))
    return Circuit(n, tuple(gates), label="qaoa")


def simulate(circuit, initial):
    """Final state of the circuit (per-gate renormalisation, no metrics)."""
    if initial.n != circuit.n:
        raise ValueError(f"initial state has n={initial.n}, circuit n={circuit.n}")
    amps = initial.amps.copy()
    for gate in circuit.gates:
        apply_gate_inplace(amps, circuit.n, gate)
    return StateVector(circuit.n, amps)


def circuit_to_text(circuit):
    """Line-oriented serialisation: header then one gate per line.

    Floats are written with repr() so they round-trip exactly.
    """
    lines = [f"# n={circuit.n} label={circuit.label}"]
    for g in circuit.gates:
        parts = [g.kind] + [str(q) for q in g.qubits]
        if g.angle is not None:
            parts.append(repr(g.angle))
        if g.pattern is not None:
            parts.append(g.pattern)
        lines.append(" ".join(parts))
    return "\n".join(lines) + "\n"


def circuit_from_text(text):
    n = None
    label = ""
    gates = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if body.startswith("n="):
                head, _, rest = body.partition(" ")
                n = int(head[2:])
                rest = rest.strip()
                if rest.startswith("label="):
                    label = rest[6:]
            continue
        tokens = line.split()
        kind = tokens[0]
        arity = GATE_ARITY.get(kind)
        if arity is None:
            raise ValueError(f"unknown gate kind in circuit file: {kind!r}")
        qubits = tuple(int(t) for t in tokens[1:1 + arity])
        rest = tokens[1 + arity:]
        angle = None
        pattern = None
        if kind in ANGLE_GATES:
            angle = float(rest.pop(0))
        if kind == "CLAUSE_PHASE":
            pattern = rest.pop(0)
        if rest:
            raise ValueError(f"trailing tokens on line {raw!r}")
        gates.append(Gate(kind, qubits, angle=angle, pattern=pattern))
    if n is None:
        raise ValueError("missing '# n=...' header line")
    return Circuit(n, tuple(gates), label=label)


@dataclass(frozen=True)
class TraceOptions:
    """Which metrics the tracer records at every step."""

    alpha: float = 2.0
    log_base: str = "2"
    compute_sre: bool = True
    permutation_min: bool = True
    colours: bool = False

    def sre_config(self):
        return SreConfig(alpha=self.alpha, log_base=self.log_base)


@dataclass(frozen=True)
class TraceRecord:
    step: int
    gate_kind: str
    gate_qubits: tuple
    rel_depth: float
    hc: float
    sre: float
    d_sre: float
    s0_lit: float
    s0_perm_lit: float
    s0_fs: float
    s0_perm_fs: float
    d_s0_perm_lit: float
    colours: tuple = None


@dataclass
class EvolutionTrace:
    """Per-gate metric series plus run-level aggregates."""

    header: dict
    records: list
    path_length: float
    final_state: StateVector

    @property
    def steps(self):
        return len(self.records) - 1


def run_trace(circuit, initial, space=None, opts=TraceOptions(), header=None):
    """Apply the circuit gate by gate, recording metrics at every step.

    `space` may be None (e.g. for colour-spectrum captures), in which case
    all distance columns are NaN. Deltas at step 0 are NaN.
    """
    if initial.n != circuit.n:
        raise ValueError(f"initial state has n={initial.n}, circuit n={circuit.n}")
    cfg = opts.sre_config()
    scan = None
    if space is not None and opts.permutation_min:
        scan = geometry.PermutationScan(space)

    records = []
    total_length = 0.0
    nan = float("nan")
    amps = initial.amps.copy()
    previous = initial
    prev_sre = None
    prev_s0_perm = None

    gate_count = len(circuit.gates)
    for step in range(gate_count + 1):
        if step == 0:
            kind, qubits = "", ()
        else:
            gate = circuit.gates[step - 1]
            kind, qubits = gate.kind, gate.qubits
            apply_gate_inplace(amps, circuit.n, gate)
        current = StateVector(circuit.n, amps) if step else initial
        if step:
            total_length += geometry.hop_length(previous.amps, current.amps)

        hc = s0_lit = s0_fs = nan
        s0_perm_lit = s0_perm_fs = nan
        if space is not None:
            hc = geometry.verifier_expectation(current, space)
            s0_lit = geometry.distance_from_expectation(hc, geometry.PAPER_LITERAL)
            s0_fs = geometry.distance_from_expectation(hc, geometry.FUBINI_STUDY)
            if scan is not None:
                hc_perm = scan.max_expectation(current)
                s0_perm_lit = geometry.distance_from_expectation(
                    hc_perm, geometry.PAPER_LITERAL
                )
                s0_perm_fs = geometry.distance_from_expectation(
                    hc_perm, geometry.FUBINI_STUDY
                )

        sre_value = sre(current, cfg) if opts.compute_sre else nan

        d_sre = nan
        d_s0_perm = nan
        if step > 0:
            if opts.compute_sre and prev_sre is not None:
                d_sre = sre_value - prev_sre
            if scan is not None and prev_s0_perm is not None:
                d_s0_perm = s0_perm_lit - prev_s0_perm

        records.append(
            TraceRecord(
                step=step,
                gate_kind=kind,
                gate_qubits=qubits,
                rel_depth=step / gate_count if gate_count else 0.0,
                hc=hc,
                sre=sre_value,
                d_sre=d_sre,
                s0_lit=s0_lit,
                s0_perm_lit=s0_perm_lit,
                s0_fs=s0_fs,
                s0_perm_fs=s0_perm_fs,
                d_s0_perm_lit=d_s0_perm,
                colours=tuple(colour_spectrum(current)) if opts.colours else None,
            )
        )
        previous = current
        prev_sre = sre_value
        prev_s0_perm = s0_perm_lit

    head = {
        "n": circuit.n,
        "label": circuit.label,
        "gates": gate_count,
        "alpha": opts.alpha,
        "log_base": opts.log_base,
        "permutation_min": bool(scan is not None),
        "sre": bool(opts.compute_sre),
    }
    if header:
        head.update(header)
    return EvolutionTrace(
        header=head,
        records=records,
        path_length=total_length,
        final_state=previous,
    )
