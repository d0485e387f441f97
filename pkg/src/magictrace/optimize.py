"""Derivative-free parameter optimisation against the target-space cost.

A hand-rolled Nelder-Mead simplex with the standard coefficients
(reflection 1, expansion 2, contraction 0.5, shrink 0.5) plus seeded
multi-restart. Written here rather than borrowed so the evaluation budget
is enforced call-exactly and runs are bit-reproducible for a fixed seed.
"""

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .backend import kernels
from .geometry import projector_expectation
from .sat import unsat_pattern
from .state import _FIXED_1Q, _rotation_matrix

_REFLECT, _EXPAND, _CONTRACT, _SHRINK = 1.0, 2.0, 0.5, 0.5

# Initial simplex edge length (radians); angles live on a 2*pi-periodic
# landscape so a fixed step is more robust than scipy-style relative steps.
SIMPLEX_STEP = 0.25


@dataclass(frozen=True)
class OptimizerConfig:
    max_evals: int = 5000        # per restart
    ftol: float = 1e-6
    restarts: int = 3
    seed: int = 0
    init_scale: float = 0.1

    def __post_init__(self):
        if self.restarts < 1:
            raise ValueError(f"restarts must be >= 1, got {self.restarts}")
        if self.max_evals < 1:
            raise ValueError(f"max_evals must be positive, got {self.max_evals}")


class MinimizeResult(NamedTuple):
    x: np.ndarray
    fun: float
    evals: int
    notes: tuple


class _BudgetExhausted(Exception):
    pass


class _NonFiniteObjective(Exception):
    pass


def _simplex_descent(objective, x0, ftol, max_evals, step):
    """One Nelder-Mead run; returns (x_best, f_best, evals_used)."""
    dim = x0.size
    if max_evals < dim + 2:
        raise ValueError(
            f"max_evals must be at least dimension + 2 = {dim + 2}, got {max_evals}"
        )
    evals = 0
    best = [x0.copy(), math.inf]

    def evaluate(x):
        nonlocal evals
        if evals >= max_evals:
            raise _BudgetExhausted
        evals += 1
        value = float(objective(x))
        if not math.isfinite(value):
            raise _NonFiniteObjective(f"objective returned {value} at eval {evals}")
        if value < best[1]:
            best[0], best[1] = x.copy(), value
        return value

    try:
        points = [x0.copy()]
        values = [evaluate(x0)]
        for i in range(dim):
            x = x0.copy()
            x[i] += step
            points.append(x)
            values.append(evaluate(x))

        while True:
            order = np.argsort(values, kind="stable")
            points = [points[i] for i in order]
            values = [values[i] for i in order]
            if values[-1] - values[0] <= ftol:
                break
            centroid = np.mean(points[:-1], axis=0)
            worst = points[-1]

            reflected = centroid + _REFLECT * (centroid - worst)
            f_reflected = evaluate(reflected)
            if f_reflected < values[0]:
                expanded = centroid + _EXPAND * (centroid - worst)
                f_expanded = evaluate(expanded)
                if f_expanded < f_reflected:
                    points[-1], values[-1] = expanded, f_expanded
                else:
                    points[-1], values[-1] = reflected, f_reflected
                continue
            if f_reflected < values[-2]:
                points[-1], values[-1] = reflected, f_reflected
                continue
            contracted = centroid + _CONTRACT * (worst - centroid)
            f_contracted = evaluate(contracted)
            if f_contracted < values[-1]:
                points[-1], values[-1] = contracted, f_contracted
                continue
            for i in range(1, dim + 1):
                points[i] = points[0] + _SHRINK * (points[i] - points[0])
                values[i] = evaluate(points[i])
    except _BudgetExhausted:
        pass
    return best[0], best[1], evals


def minimize(objective, x0, cfg=OptimizerConfig()):
    """Multi-restart simplex descent; deterministic for a fixed cfg.seed.

    Restart 0 starts exactly at x0; later restarts perturb x0 uniformly
    within +/- init_scale. A restart whose objective goes non-finite is
    abandoned and reported in the notes. Never returns a value above f(x0).
    """
    x0 = np.asarray(x0, dtype=np.float64)
    rng = np.random.default_rng(cfg.seed)
    best_x, best_f = None, math.inf
    total_evals = 0
    notes = []
    for restart in range(cfg.restarts):
        start = x0 if restart == 0 else x0 + rng.uniform(
            -cfg.init_scale, cfg.init_scale, size=x0.shape
        )
        try:
            x, f, evals = _simplex_descent(
                objective, start, cfg.ftol, cfg.max_evals, SIMPLEX_STEP
            )
        except _NonFiniteObjective as exc:
            notes.append(f"restart {restart} aborted: {exc}")
            continue
        total_evals += evals
        if f < best_f:
            best_x, best_f = x, f
    if best_x is None:
        raise RuntimeError(f"all {cfg.restarts} restarts failed: {notes}")
    return MinimizeResult(best_x, best_f, total_evals, tuple(notes))


def vqe_cost(formula, space, n, p):
    """Objective over the 2pn hardware-efficient angles.

    Returns 1 - <H_c> of the final layered-ansatz state on |0...0>; no
    intermediate metrics are evaluated. Applies the same kernel calls in
    the same order as simulating build_hea, just without building gate
    objects, so the cost matches the traced circuit bit for bit.
    """

    def objective(flat):
        ty = flat[: p * n].reshape(p, n)
        tz = flat[p * n:].reshape(p, n)
        amps = np.zeros(1 << n, dtype=np.complex128)
        amps[0] = 1.0
        for layer in range(p):
            for q in range(1, n + 1):
                u = _rotation_matrix("RY", ty[layer, q - 1])
                kernels.apply_unitary_1q(amps, n, q, *u)
                amps /= np.linalg.norm(amps)
            for q in range(1, n + 1):
                u = _rotation_matrix("RZ", tz[layer, q - 1])
                kernels.apply_unitary_1q(amps, n, q, *u)
                amps /= np.linalg.norm(amps)
            for q in range(1, n):
                kernels.apply_cnot(amps, n, q, q + 1)
                amps /= np.linalg.norm(amps)
        return 1.0 - projector_expectation(amps, space)

    return objective


def qaoa_cost(formula, space, p):
    """Objective over the 2p alternating-ansatz angles (gammas then betas).

    Same bit-exact correspondence with the built circuit as vqe_cost.
    """
    n = formula.n
    h00, h01, h10, h11 = _FIXED_1Q["H"]
    clauses = [
        (c.variables, int(unsat_pattern(c), 2)) for c in formula.clauses
    ]

    def objective(flat):
        gammas = flat[:p]
        betas = flat[p:]
        amps = np.zeros(1 << n, dtype=np.complex128)
        amps[0] = 1.0
        for q in range(1, n + 1):
            kernels.apply_unitary_1q(amps, n, q, h00, h01, h10, h11)
            amps /= np.linalg.norm(amps)
        for layer in range(p):
            gamma = gammas[layer]
            phase = complex(math.cos(gamma), -math.sin(gamma))
            for (q1, q2, q3), pattern in clauses:
                kernels.apply_pattern_phase(amps, n, q1, q2, q3, pattern, phase)
                amps /= np.linalg.norm(amps)
            u = _rotation_matrix("RX", 2.0 * betas[layer])
            for q in range(1, n + 1):
                kernels.apply_unitary_1q(amps, n, q, *u)
                amps /= np.linalg.norm(amps)
        return 1.0 - projector_expectation(amps, space)

    return objective


def qaoa_ramp(p, gamma_max=1.0, beta_max=1.0):
    """Annealing-style start: gamma ramps up, beta ramps down."""
    i = np.arange(1, p + 1, dtype=np.float64)
    return np.concatenate([(i / p) * gamma_max, (1.0 - i / p) * beta_max])


def hea_random_start(n, p, scale, seed):
    """Near-identity start: angles uniform in [-scale, scale]."""
    rng = np.random.default_rng(seed)
    return rng.uniform(-scale, scale, size=2 * p * n)
