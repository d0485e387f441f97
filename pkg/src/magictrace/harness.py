"""Command-line harness: instance generation, experiment execution,
step statistics and CSV/JSON persistence.

Subcommands: sat-gen, qft-demo, evolve, stats, spectrum. All outputs are
deterministic for a fixed config: floats are formatted with 12 significant
digits and no timestamps are embedded, so re-runs are byte-identical.
"""

import argparse
import csv
import io
import json
import math
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass

import numpy as np

from . import geometry, optimize, sat
from .backend import backend_name
from .circuits import (
    HeaParams,
    QaoaParams,
    TraceOptions,
    build_hea,
    build_qaoa,
    build_qft,
    circuit_from_text,
    run_trace,
)
from .geometry import TargetSpace, target_from_solutions
from .state import DIAGONAL_GATES, StateVector, init_basis_state

CSV_COLUMNS = (
    "instance_id", "ansatz", "step", "gate", "qubits", "rel_depth",
    "hc_expect", "sre", "d_sre", "s0_T_literal", "s0_Tperm_literal",
    "s0_T_fs", "s0_Tperm_fs", "d_s0_perm_literal",
)

ZERO_EPS = 1e-12          # |delta| at or below this counts as a zero step
DSRE_FILTER = 0.3         # correlation outlier filter on |d_sre|
QUARTILE_METHOD = "linear"

_ROLE_HEA_START = 1
_ROLE_HEA_OPT = 2
_ROLE_QAOA_OPT = 3

ANSATZ_LABELS = ("structured", "unstructured")


@dataclass(frozen=True)
class ExperimentConfig:
    n: int = 7
    p: int = 7
    ratio: float = 3.0
    instances: int = 20
    seed: int = 2024
    alpha: float = 2.0
    log_base: str = "2"
    distance_mode: str = geometry.PAPER_LITERAL
    permutation_min: bool = True
    output_dir: str = "runs"
    workers: int = 1
    opt_max_evals: int = 4000
    opt_restarts: int = 2
    opt_ftol: float = 1e-6
    opt_init_scale: float = 0.1

    def __post_init__(self):
        if self.distance_mode not in geometry.DISTANCE_MODES:
            raise ValueError(f"unknown distance mode {self.distance_mode!r}")


@dataclass(frozen=True)
class StepStats:
    """Pooled per-step distance statistics for one ansatz."""

    q1: float
    q2: float
    q3: float
    fraction_negative: float
    fraction_positive: float
    fraction_zero: float
    pearson_r: float            # None when undefined
    retained_fraction: float
    n_distance_samples: int
    n_pairs: int


def fmt(value):
    """12-significant-digit float formatting shared by all CSV output."""
    if isinstance(value, float):
        return f"{value:.12g}"
    return str(value)


def atomic_write_text(path, text):
    tmp = path + ".tmp"
    with open(tmp, "w") as fh:
        fh.write(text)
    os.replace(tmp, path)


def write_json(path, payload):
    atomic_write_text(path, json.dumps(payload, indent=2, sort_keys=True) + "\n")


def derived_seed(*parts):
    """Stable 32-bit seed from a tuple of integers."""
    return int(np.random.SeedSequence(list(parts)).generate_state(1)[0])


def trace_to_csv(trace, instance_id, ansatz):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for r in trace.records:
        writer.writerow([
            instance_id,
            ansatz,
            r.step,
            r.gate_kind,
            ";".join(str(q) for q in r.gate_qubits),
            fmt(r.rel_depth),
            fmt(r.hc),
            fmt(r.sre),
            fmt(r.d_sre),
            fmt(r.s0_lit),
            fmt(r.s0_perm_lit),
            fmt(r.s0_fs),
            fmt(r.s0_perm_fs),
            fmt(r.d_s0_perm_lit),
        ])
    return buf.getvalue()


def mu_gd(trace, mode):
    """Geodesic efficiency of a finished trace: net distance closed over
    path length, clamped to [0, 1]."""
    first, last = trace.records[0], trace.records[-1]
    s_first = first.s0_lit if mode == geometry.PAPER_LITERAL else first.s0_fs
    s_last = last.s0_lit if mode == geometry.PAPER_LITERAL else last.s0_fs
    if trace.path_length == 0.0:
        return float("nan")
    value = max(s_first - s_last, 0.0) / trace.path_length
    return min(value, 1.0)


def instance_name(n, ratio, seed):
    return f"sat_n{n}_r{ratio:g}_s{seed}"


def qft_output_state(n, bitstring):
    """The transform of a basis state, built directly from the DFT kernel."""
    if len(bitstring) != n or set(bitstring) - {"0", "1"}:
        raise ValueError(f"bad input bitstring {bitstring!r} for n={n}")
    x = int(bitstring, 2)
    size = 1 << n
    y = np.arange(size)
    amps = np.exp(2j * np.pi * x * y / size) / math.sqrt(size)
    return StateVector(n, amps)


# ---------------------------------------------------------------------------
# sat-gen


def cmd_sat_gen(cfg):
    out_dir = os.path.join(cfg.output_dir, "instances")
    os.makedirs(out_dir, exist_ok=True)
    manifest = {
        "n": cfg.n,
        "ratio": cfg.ratio,
        "seed": cfg.seed,
        "clauses_per_instance": round(cfg.ratio * cfg.n),
        "sampler": {
            "distinct_variables_per_clause": True,
            "duplicate_clauses_allowed": True,
            "resample_until_satisfiable": True,
        },
        "instances": [],
    }
    for i in range(cfg.instances):
        seed_i = cfg.seed + i
        formula = sat.random_3cnf(cfg.n, cfg.ratio, seed_i)
        solutions = sat.solve_brute_force(formula)
        name = instance_name(cfg.n, cfg.ratio, seed_i)
        path = os.path.join(out_dir, name + ".cnf")
        atomic_write_text(path, sat.emit_dimacs(formula))
        manifest["instances"].append({
            "file": name + ".cnf",
            "seed": seed_i,
            "clauses": formula.m,
            "solutions": len(solutions),
        })
    write_json(os.path.join(out_dir, "manifest.json"), manifest)
    print(f"wrote {cfg.instances} instances to {out_dir}")
    return out_dir


# ---------------------------------------------------------------------------
# qft-demo


def cmd_qft_demo(n, input_bitstring, output_dir, alpha=2.0, log_base="2"):
    os.makedirs(output_dir, exist_ok=True)
    circuit = build_qft(n, include_final_swaps=True)
    target = TargetSpace.single_state(qft_output_state(n, input_bitstring))
    initial = init_basis_state(n, input_bitstring)
    opts = TraceOptions(alpha=alpha, log_base=log_base,
                        compute_sre=True, permutation_min=True)
    instance_id = f"qft_n{n}_x{input_bitstring}"
    trace = run_trace(circuit, initial, target, opts,
                      header={"instance_id": instance_id, "ansatz": "qft",
                              "input": input_bitstring})
    csv_path = os.path.join(output_dir, instance_id + ".csv")
    atomic_write_text(csv_path, trace_to_csv(trace, instance_id, "qft"))

    swap_steps = [r.step for r in trace.records if r.gate_kind == "SWAP"]
    first_swap = min(swap_steps) if swap_steps else None
    pre_swap = trace.records[first_swap - 1] if first_swap else trace.records[-1]
    final = trace.records[-1]
    signature = {
        "first_swap_step": first_swap,
        "s0_perm_before_swaps": pre_swap.s0_perm_lit,
        "s0_plain_before_swaps": pre_swap.s0_lit,
        "s0_perm_final": final.s0_perm_lit,
        "s0_plain_final": final.s0_lit,
        "masked_progress": bool(
            first_swap is not None and pre_swap.s0_perm_lit < 1e-6
        ),
    }
    meta = dict(trace.header)
    meta.update({"signature": signature, "path_length": trace.path_length,
                 "backend": backend_name()})
    write_json(os.path.join(output_dir, instance_id + ".meta.json"), meta)
    if not signature["masked_progress"]:
        print("warning: masked-progress signature did not hold", file=sys.stderr)
    print(f"wrote {csv_path}")
    return csv_path


# ---------------------------------------------------------------------------
# evolve


def _load_instances(cfg, instances_dir):
    """(instance_id, formula_seed, dimacs_text) triples for the run."""
    if instances_dir:
        names = sorted(f for f in os.listdir(instances_dir) if f.endswith(".cnf"))
        out = []
        for i, name in enumerate(names):
            with open(os.path.join(instances_dir, name)) as fh:
                out.append((name[:-4], cfg.seed + i, fh.read()))
        return out
    return [
        (instance_name(cfg.n, cfg.ratio, cfg.seed + i), cfg.seed + i, None)
        for i in range(cfg.instances)
    ]


# Annealing-style starting schedules for the structured ansatz: a small
# family of linear ramps (gamma up to gamma_max, beta down from beta_max).
QAOA_RAMP_GRID = ((0.375, 0.5), (0.75, 0.5), (0.75, 1.0), (1.5, 1.0))
# Light descent per ramp keeps the schedule annealing-like; the heavier
# chained stage only fires when the best ramp still leaves the state far
# from the target space.
QAOA_STAGE1_EVALS = 800
QAOA_STAGE2_COST_THRESHOLD = 0.45
QAOA_STAGE2_RESTART_SCALE = 0.3


def _optimise_structured(cfg, formula, space, index):
    p = cfg.p
    objective = optimize.qaoa_cost(formula, space, p)
    opt_seed = derived_seed(cfg.seed, index, _ROLE_QAOA_OPT)
    best = None
    evals = 0
    notes = []
    for gamma_max, beta_max in QAOA_RAMP_GRID:
        x0 = optimize.qaoa_ramp(p, gamma_max, beta_max)
        result = optimize.minimize(objective, x0, optimize.OptimizerConfig(
            max_evals=QAOA_STAGE1_EVALS, ftol=cfg.opt_ftol,
            restarts=1, seed=opt_seed, init_scale=cfg.opt_init_scale))
        evals += result.evals
        notes.extend(result.notes)
        if best is None or result.fun < best.fun:
            best = result
    if best.fun > QAOA_STAGE2_COST_THRESHOLD:
        polish = optimize.minimize(objective, best.x, optimize.OptimizerConfig(
            max_evals=cfg.opt_max_evals, ftol=cfg.opt_ftol,
            restarts=cfg.opt_restarts, seed=opt_seed,
            init_scale=QAOA_STAGE2_RESTART_SCALE))
        evals += polish.evals
        notes.extend(polish.notes)
        notes.append("stage2 polish applied")
        if polish.fun < best.fun:
            best = polish
    return optimize.MinimizeResult(best.x, best.fun, evals, tuple(notes))


def _optimise(cfg, ansatz, formula, space, index):
    n, p = formula.n, cfg.p
    if ansatz == "unstructured":
        x0 = optimize.hea_random_start(
            n, p, cfg.opt_init_scale,
            derived_seed(cfg.seed, index, _ROLE_HEA_START))
        objective = optimize.vqe_cost(formula, space, n, p)
        result = optimize.minimize(objective, x0, optimize.OptimizerConfig(
            max_evals=cfg.opt_max_evals, ftol=cfg.opt_ftol,
            restarts=cfg.opt_restarts,
            seed=derived_seed(cfg.seed, index, _ROLE_HEA_OPT),
            init_scale=cfg.opt_init_scale))
        circuit = build_hea(n, p, HeaParams.from_flat(n, p, result.x))
    else:
        result = _optimise_structured(cfg, formula, space, index)
        circuit = build_qaoa(formula, QaoaParams.from_flat(p, result.x))
    return circuit, result


def _evolve_one(cfg, ansatz, index, instance_id, formula_seed, dimacs_text):
    """Full pipeline for one instance; returns the summary row."""
    if dimacs_text is None:
        formula = sat.random_3cnf(cfg.n, cfg.ratio, formula_seed)
    else:
        formula = sat.parse_dimacs(dimacs_text)
    solutions = sat.solve_brute_force(formula)
    if len(solutions) == 0:
        return {"instance_id": instance_id, "skipped": "unsatisfiable instance"}
    space = target_from_solutions(formula.n, solutions)

    circuit, result = _optimise(cfg, ansatz, formula, space, index)
    opts = TraceOptions(alpha=cfg.alpha, log_base=cfg.log_base,
                        compute_sre=True, permutation_min=cfg.permutation_min)
    header = {
        "instance_id": instance_id,
        "ansatz": ansatz,
        "seed": cfg.seed,
        "formula_seed": formula_seed,
        "p": cfg.p,
        "ratio": cfg.ratio,
        "clauses": formula.m,
        "solutions": len(solutions),
        "optimizer": {
            "kind": "nelder-mead-multistart",
            "max_evals": cfg.opt_max_evals,
            "restarts": cfg.opt_restarts,
            "ftol": cfg.opt_ftol,
            "init_scale": cfg.opt_init_scale,
            "evals_used": result.evals,
            "cost": result.fun,
            "notes": list(result.notes),
        },
        "cnot_ladder": "ascending (control q, target q+1)" if ansatz == "unstructured" else None,
        "cost_layer": "per-clause diagonal phase gates" if ansatz == "structured" else None,
        "backend": backend_name(),
    }
    initial = init_basis_state(formula.n, "0" * formula.n)
    trace = run_trace(circuit, initial, space, opts, header=header)

    trace_dir = os.path.join(cfg.output_dir, "traces")
    os.makedirs(trace_dir, exist_ok=True)
    stem = f"{instance_id}_{ansatz}"
    atomic_write_text(os.path.join(trace_dir, stem + ".csv"),
                      trace_to_csv(trace, instance_id, ansatz))
    meta = dict(trace.header)
    meta["path_length"] = trace.path_length
    write_json(os.path.join(trace_dir, stem + ".meta.json"), meta)

    final = trace.records[-1]
    return {
        "instance_id": instance_id,
        "formula_seed": formula_seed,
        "solutions": len(solutions),
        "steps": trace.steps,
        "final_hc": final.hc,
        "final_sre": final.sre,
        "mu_gd_literal": mu_gd(trace, geometry.PAPER_LITERAL),
        "mu_gd_fubini_study": mu_gd(trace, geometry.FUBINI_STUDY),
        "path_length": trace.path_length,
        "optimizer_cost": result.fun,
        "optimizer_evals": result.evals,
    }


def _evolve_task(args):
    return _evolve_one(*args)


def cmd_evolve(cfg, ansatz, instances_dir=None):
    if ansatz not in ANSATZ_LABELS:
        raise ValueError(f"ansatz must be one of {ANSATZ_LABELS}, got {ansatz!r}")
    os.makedirs(cfg.output_dir, exist_ok=True)
    triples = _load_instances(cfg, instances_dir)
    tasks = [
        (cfg, ansatz, i, instance_id, formula_seed, text)
        for i, (instance_id, formula_seed, text) in enumerate(triples)
    ]
    if cfg.workers > 1:
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            rows = list(pool.map(_evolve_task, tasks))
    else:
        rows = [_evolve_task(t) for t in tasks]
    summary = {
        "ansatz": ansatz,
        "config": asdict(cfg),
        "backend": backend_name(),
        "instances": sorted(rows, key=lambda r: r["instance_id"]),
    }
    path = os.path.join(cfg.output_dir, f"summary_{ansatz}.json")
    write_json(path, summary)
    done = sum(1 for r in rows if "skipped" not in r)
    print(f"evolved {done}/{len(rows)} instances ({ansatz}); summary at {path}")
    return summary


# ---------------------------------------------------------------------------
# stats


def _read_trace_rows(trace_dir):
    """All gate rows (step >= 1) grouped by (ansatz, instance), file order."""
    groups = {}
    for name in sorted(os.listdir(trace_dir)):
        if not name.endswith(".csv") or name.startswith("pooled_"):
            continue
        with open(os.path.join(trace_dir, name)) as fh:
            for row in csv.DictReader(fh):
                if int(row["step"]) == 0:
                    continue
                key = (row["ansatz"], row["instance_id"])
                groups.setdefault(key, []).append(row)
    return groups


def _coalesced_samples(rows, coalesce):
    """(d_s0, d_sre) step samples with diagonal-gate runs merged.

    Gates diagonal in the computational basis cannot move any probability,
    so their individual distance deltas are structural zeros; a maximal run
    of them (e.g. one cost layer) is one non-Clifford event and becomes a
    single sample with the summed deltas. Disable with coalesce=False for
    raw per-gate samples.
    """
    samples = []
    run = None
    for row in rows:
        ds0 = float(row["d_s0_perm_literal"])
        dsre = float(row["d_sre"])
        if coalesce and row["gate"] in DIAGONAL_GATES:
            if run is None:
                run = [0.0, 0.0]
            run[0] += ds0
            run[1] += dsre
            continue
        if run is not None:
            samples.append(tuple(run))
            run = None
        samples.append((ds0, dsre))
    if run is not None:
        samples.append(tuple(run))
    return samples


def _pearson(x, y):
    """Pearson r, or None when either side is constant up to float noise
    (e.g. the |d_sre| column of an all-Clifford trace)."""
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    if x.size < 2 or float(np.std(x)) <= ZERO_EPS or float(np.std(y)) <= ZERO_EPS:
        return None
    return float(np.corrcoef(x, y)[0, 1])


def compute_step_stats(groups, ansatz, coalesce=True):
    """StepStats plus the pooled sample tables for one ansatz label."""
    pooled = []          # (instance_id, sample_index, d_s0, d_sre, retained)
    per_instance_r = {}
    for (label, instance_id), rows in sorted(groups.items()):
        if label != ansatz:
            continue
        inst_pairs = []
        for k, (ds0, dsre) in enumerate(_coalesced_samples(rows, coalesce)):
            retained = abs(dsre) < DSRE_FILTER
            pooled.append((instance_id, k, ds0, dsre, retained))
            if retained:
                inst_pairs.append((-ds0, abs(dsre)))
        per_instance_r[instance_id] = (
            _pearson([p[0] for p in inst_pairs], [p[1] for p in inst_pairs])
            if inst_pairs else None
        )
    if not pooled:
        raise ValueError(f"no traces with ansatz label {ansatz!r}")

    samples = np.array([r[2] for r in pooled])
    if np.isnan(samples).any():
        raise ValueError(
            "distance deltas contain NaN; was the trace run with permutation_min?"
        )
    q1, q2, q3 = np.percentile(samples, [25, 50, 75], method=QUARTILE_METHOD)
    negative = int(np.sum(samples < -ZERO_EPS))
    positive = int(np.sum(samples > ZERO_EPS))
    zero = samples.size - negative - positive

    kept = [r for r in pooled if r[4]]
    pearson = _pearson([-r[2] for r in kept], [abs(r[3]) for r in kept])
    stats = StepStats(
        q1=float(q1), q2=float(q2), q3=float(q3),
        fraction_negative=negative / samples.size,
        fraction_positive=positive / samples.size,
        fraction_zero=zero / samples.size,
        pearson_r=pearson,
        retained_fraction=len(kept) / len(pooled),
        n_distance_samples=int(samples.size),
        n_pairs=len(pooled),
    )
    return stats, pooled, per_instance_r


def _collect_trace_config(trace_dir):
    """Distinct config values found in the trace .meta.json sidecars, so
    downstream figure renderers can embed them."""
    seen = {}
    for name in sorted(os.listdir(trace_dir)):
        if not name.endswith(".meta.json"):
            continue
        with open(os.path.join(trace_dir, name)) as fh:
            meta = json.load(fh)
        for key in ("n", "p", "alpha", "log_base", "seed", "permutation_min"):
            if key in meta and meta[key] is not None:
                seen.setdefault(key, set()).add(meta[key])
    return {key: sorted(values)[0] if len(values) == 1 else sorted(values)
            for key, values in seen.items()}


def cmd_stats(trace_dir, output_dir=None, coalesce=True):
    output_dir = output_dir or trace_dir
    os.makedirs(output_dir, exist_ok=True)
    groups = _read_trace_rows(trace_dir)
    if not groups:
        raise ValueError(f"no trace CSVs found in {trace_dir}")
    labels = sorted({label for label, _ in groups})
    payload = {
        "zero_eps": ZERO_EPS,
        "dsre_filter": DSRE_FILTER,
        "quartile_method": QUARTILE_METHOD,
        "diagonal_runs_coalesced": coalesce,
        "distance_column": "d_s0_perm_literal",
        "config": _collect_trace_config(trace_dir),
        "ansatz": {},
    }
    for label in labels:
        stats, pooled, per_r = compute_step_stats(groups, label, coalesce)
        payload["ansatz"][label] = {
            **asdict(stats),
            "per_instance_pearson": per_r,
        }
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["instance_id", "sample", "d_s0", "d_sre", "retained"])
        for instance_id, k, ds0, dsre, retained in pooled:
            w.writerow([instance_id, k, fmt(ds0), fmt(dsre), int(retained)])
        atomic_write_text(
            os.path.join(output_dir, f"pooled_steps_{label}.csv"), buf.getvalue())
    write_json(os.path.join(output_dir, "stats.json"), payload)
    print(f"stats for {labels} written to {output_dir}")
    return payload


# ---------------------------------------------------------------------------
# spectrum


def cmd_spectrum(output_dir, circuit_file=None, builtin=None, n=None,
                 input_bitstring=None, initial=None):
    os.makedirs(output_dir, exist_ok=True)
    if circuit_file:
        with open(circuit_file) as fh:
            circuit = circuit_from_text(fh.read())
        name = os.path.splitext(os.path.basename(circuit_file))[0]
    elif builtin == "qft":
        if n is None:
            raise ValueError("--builtin qft requires --n")
        circuit = build_qft(n, include_final_swaps=True)
        name = f"qft_n{n}"
        if input_bitstring and initial is None:
            initial = input_bitstring
    else:
        raise ValueError("need either --circuit-file or --builtin qft")
    bits = initial or "0" * circuit.n
    state = init_basis_state(circuit.n, bits)
    opts = TraceOptions(compute_sre=False, permutation_min=False, colours=True)
    trace = run_trace(circuit, state, space=None, opts=opts)

    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["step", "rank", "p0", "pplus", "pplusi"])
    for record in trace.records:
        for rank, colour in enumerate(record.colours):
            w.writerow([record.step, rank, fmt(colour.p0),
                        fmt(colour.pplus), fmt(colour.pplusi)])
    path = os.path.join(output_dir, f"spectrum_{name}.csv")
    atomic_write_text(path, buf.getvalue())
    meta = dict(trace.header)
    meta.update({"initial": bits, "circuit": name, "backend": backend_name()})
    write_json(os.path.join(output_dir, f"spectrum_{name}.meta.json"), meta)
    print(f"wrote {path}")
    return path


# ---------------------------------------------------------------------------
# CLI plumbing


def _add_config_flags(parser):
    parser.add_argument("--config", help="JSON file with ExperimentConfig fields")
    parser.add_argument("--n", type=int)
    parser.add_argument("--p", type=int)
    parser.add_argument("--ratio", type=float)
    parser.add_argument("--instances", type=int)
    parser.add_argument("--seed", type=int)
    parser.add_argument("--alpha", type=float)
    parser.add_argument("--log-base", dest="log_base", choices=("2", "e"))
    parser.add_argument("--distance-mode", dest="distance_mode",
                        choices=geometry.DISTANCE_MODES)
    parser.add_argument("--permutation-min", dest="permutation_min",
                        action="store_true", default=None)
    parser.add_argument("--no-permutation-min", dest="permutation_min",
                        action="store_false")
    parser.add_argument("--output-dir", dest="output_dir")
    parser.add_argument("--workers", type=int)
    parser.add_argument("--opt-max-evals", dest="opt_max_evals", type=int)
    parser.add_argument("--opt-restarts", dest="opt_restarts", type=int)
    parser.add_argument("--opt-ftol", dest="opt_ftol", type=float)
    parser.add_argument("--opt-init-scale", dest="opt_init_scale", type=float)


def config_from_args(args):
    values = {}
    if getattr(args, "config", None):
        with open(args.config) as fh:
            file_values = json.load(fh)
        unknown = set(file_values) - set(ExperimentConfig.__dataclass_fields__)
        if unknown:
            raise ValueError(f"unknown config keys {sorted(unknown)}")
        values.update(file_values)
    for name in ExperimentConfig.__dataclass_fields__:
        flag = getattr(args, name, None)
        if flag is not None:
            values[name] = flag
    if "log_base" in values:
        values["log_base"] = str(values["log_base"])
    env_dir = os.environ.get("MAGICTRACE_OUTPUT_DIR")
    if env_dir:
        values["output_dir"] = env_dir
    return ExperimentConfig(**values)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="magictrace",
        description="Track non-stabiliserness and target-space geodesic "
                    "distance through circuit evolutions.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("sat-gen", help="generate random satisfiable 3-CNF instances")
    _add_config_flags(p_gen)

    p_qft = sub.add_parser("qft-demo", help="trace the transform circuit against its output state")
    _add_config_flags(p_qft)
    p_qft.add_argument("--input", dest="input_bitstring",
                       help="input basis bitstring (default: 0...01)")

    p_ev = sub.add_parser("evolve", help="optimise and trace an ansatz over SAT instances")
    p_ev.add_argument("ansatz", choices=ANSATZ_LABELS)
    p_ev.add_argument("--instances-dir", dest="instances_dir",
                      help="read DIMACS files instead of generating")
    _add_config_flags(p_ev)

    p_st = sub.add_parser("stats", help="pooled step statistics over trace CSVs")
    p_st.add_argument("--trace-dir", dest="trace_dir", required=True)
    p_st.add_argument("--no-coalesce", dest="coalesce", action="store_false",
                      help="keep every diagonal gate as its own sample")
    _add_config_flags(p_st)

    p_sp = sub.add_parser("spectrum", help="per-step sorted qubit colour triples")
    p_sp.add_argument("--circuit-file", dest="circuit_file")
    p_sp.add_argument("--builtin", choices=("qft",))
    p_sp.add_argument("--input", dest="input_bitstring")
    p_sp.add_argument("--initial", help="initial basis state bitstring")
    _add_config_flags(p_sp)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    cfg = config_from_args(args)
    if args.command == "sat-gen":
        cmd_sat_gen(cfg)
    elif args.command == "qft-demo":
        bits = args.input_bitstring or ("0" * (cfg.n - 1) + "1")
        cmd_qft_demo(cfg.n, bits, cfg.output_dir, cfg.alpha, cfg.log_base)
    elif args.command == "evolve":
        cmd_evolve(cfg, args.ansatz, args.instances_dir)
    elif args.command == "stats":
        out = args.output_dir or os.environ.get("MAGICTRACE_OUTPUT_DIR")
        cmd_stats(args.trace_dir, out, coalesce=args.coalesce)
    elif args.command == "spectrum":
        cmd_spectrum(cfg.output_dir, circuit_file=args.circuit_file,
                     builtin=args.builtin, n=cfg.n,
                     input_bitstring=args.input_bitstring,
                     initial=args.initial)
    return 0


if __name__ == "__main__":
    sys.exit(main())
