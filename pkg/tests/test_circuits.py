import math

import numpy as np
import pytest

from magictrace.circuits import (
    Circuit,
    HeaParams,
    QaoaParams,
    TraceOptions,
    build_hea,
    build_qaoa,
    build_qft,
    circuit_from_text,
    circuit_to_text,
    run_trace,
    simulate,
)
from magictrace.geometry import TargetSpace, target_from_solutions
from magictrace.sat import CnfFormula, Clause, random_3cnf, solve_brute_force
from magictrace.state import Gate, StateVector, haar_random_state, init_basis_state

from conftest import dense_circuit

S2 = 1 / math.sqrt(2)


def dft_matrix(n):
    dim = 1 << n
    a = np.arange(dim)
    return np.exp(2j * np.pi * np.outer(a, a) / dim) / math.sqrt(dim)


class TestQftBuilder:
    def test_single_qubit_is_hadamard(self):
        c = build_qft(1)
        assert [g.kind for g in c.gates] == ["H"]
        out = simulate(c, init_basis_state(1, "0"))
        assert np.allclose(out.amps, [S2, S2], atol=1e-12)

    def test_uniform_output_on_zero(self):
        out = simulate(build_qft(3), init_basis_state(3, "000"))
        assert np.allclose(out.amps, np.full(8, 8 ** -0.5), atol=1e-9)

    def test_gate_counts_n4(self):
        kinds = [g.kind for g in build_qft(4).gates]
        assert kinds.count("H") == 4
        assert kinds.count("CPHASE") == 6
        assert kinds.count("SWAP") == 2
        assert len(kinds) == 12

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
    def test_unitary_equals_dft(self, n):
        u = dense_circuit(build_qft(n, include_final_swaps=True))
        assert np.max(np.abs(u - dft_matrix(n))) < 1e-9

    def test_without_swaps_is_bit_reversed(self):
        n = 3
        u = dense_circuit(build_qft(n, include_final_swaps=False))
        f = dft_matrix(n)
        rev = [int(format(b, f"0{n}b")[::-1], 2) for b in range(1 << n)]
        assert np.max(np.abs(u[rev, :] - f)) < 1e-9


class TestHeaBuilder:
    def test_zero_angles_fix_vacuum(self):
        params = HeaParams(np.zeros((3, 4)), np.zeros((3, 4)))
        out = simulate(build_hea(4, 3, params), init_basis_state(4, "0000"))
        assert abs(out.amps[0]) == pytest.approx(1.0, abs=1e-12)

    def test_shape_and_count_for_experiment_scale(self):
        params = HeaParams.from_flat(7, 7, np.zeros(98))
        c = build_hea(7, 7, params)
        assert len(c) == 140
        assert params.thetas_y.size + params.thetas_z.size == 98

    def test_single_layer_hand_trace(self):
        # RY(pi) on qubit 1 gives |10>, the ladder CNOT then sets |11>
        params = HeaParams(np.array([[math.pi, 0.0]]), np.zeros((1, 2)))
        out = simulate(build_hea(2, 1, params), init_basis_state(2, "00"))
        assert abs(out.amps[3]) == pytest.approx(1.0, abs=1e-12)

    def test_shape_mismatch(self):
        with pytest.raises(ValueError):
            build_hea(3, 2, HeaParams(np.zeros((1, 3)), np.zeros((1, 3))))

    def test_matches_dense_oracle(self, rng):
        n, p = 3, 2
        flat = rng.uniform(-1, 1, 2 * p * n)
        c = build_hea(n, p, HeaParams.from_flat(n, p, flat))
        psi = haar_random_state(n, 3)
        expected = dense_circuit(c) @ psi.amps
        assert np.allclose(simulate(c, psi).amps, expected, atol=1e-9)


class TestQaoaBuilder:
    def test_zero_angles_give_uniform(self):
        f = random_3cnf(4, 3.0, seed=5)
        params = QaoaParams(np.zeros(2), np.zeros(2))
        out = simulate(build_qaoa(f, params), init_basis_state(4, "0000"))
        assert np.allclose(out.amps, np.full(16, 0.25), atol=1e-9)

    def test_clause_phase_touches_exact_subspace(self):
        f = CnfFormula(4, (Clause(((1, False), (2, False), (3, False))),))
        gamma = 0.731
        c = build_qaoa(f, QaoaParams(np.array([gamma]), np.array([0.0])))
        out = simulate(c, init_basis_state(4, "0000"))
        uniform = np.full(16, 0.25, dtype=complex)
        expected = uniform.copy()
        for b in range(16):
            if (b >> 3) & 1 == 0 and (b >> 2) & 1 == 0 and (b >> 1) & 1 == 0:
                expected[b] *= np.exp(-1j * gamma)
        assert np.allclose(out.amps, expected, atol=1e-12)

    def test_gate_count_experiment_scale(self):
        f = random_3cnf(7, 3.0, seed=2)
        c = build_qaoa(f, QaoaParams(np.linspace(0.1, 1, 7), np.linspace(1, 0.1, 7)))
        assert len(c) == 7 + 7 * (21 + 7)

    def test_cost_layer_equals_dense_exponential(self):
        # one layer, beta = 0: the circuit realises exp(-i gamma sum_c P_c)
        # on the uniform state; the sum is diagonal so its exponential is
        # the elementwise phase of the violated-clause count
        for seed in range(5):
            n = 3 + seed % 3
            f = random_3cnf(n, 3.0, seed=60 + seed)
            gamma = 0.9
            violations = np.zeros(1 << n)
            for cl in f.clauses:
                mask = np.ones(1 << n, dtype=bool)
                for v, neg in cl.literals:
                    bits = (np.arange(1 << n) >> (n - v)) & 1
                    mask &= bits == int(neg)
                violations += mask
            expected = np.exp(-1j * gamma * violations) * (1 << n) ** -0.5
            c = build_qaoa(f, QaoaParams(np.array([gamma]), np.array([0.0])))
            out = simulate(c, init_basis_state(n, "0" * n))
            assert np.allclose(out.amps, expected, atol=1e-9)


class TestSerialization:
    def test_round_trip(self):
        f = random_3cnf(5, 3.0, seed=3)
        c = build_qaoa(f, QaoaParams(np.array([0.1234567890123]), np.array([0.9])))
        assert circuit_from_text(circuit_to_text(c)) == c

    def test_label_with_spaces(self):
        c = Circuit(2, (Gate("H", (1,)),), label="two words here")
        assert circuit_from_text(circuit_to_text(c)).label == "two words here"

    def test_float_exactness(self):
        angle = 0.1 + 0.2  # not representable prettily
        c = Circuit(1, (Gate("RZ", (1,), angle=angle),))
        parsed = circuit_from_text(circuit_to_text(c))
        assert parsed.gates[0].angle == angle

    def test_missing_header(self):
        with pytest.raises(ValueError):
            circuit_from_text("H 1\n")

    def test_unknown_gate(self):
        with pytest.raises(ValueError):
            circuit_from_text("# n=2 label=x\nTOFFOLI 1 2\n")


class TestRunTrace:
    def test_clifford_circuit_stays_magic_free(self):
        gates = (Gate("H", (1,)), Gate("CNOT", (1, 2)), Gate("S", (2,)),
                 Gate("SWAP", (1, 2)), Gate("CZ", (1, 2)), Gate("X", (1,)))
        c = Circuit(2, gates, label="clifford")
        space = TargetSpace.single_state(haar_random_state(2, 8))
        trace = run_trace(c, init_basis_state(2, "00"), space)
        for rec in trace.records:
            assert abs(rec.sre) < 1e-9
        for rec in trace.records[1:]:
            assert abs(rec.d_sre) < 1e-9

    def test_empty_circuit_single_record(self):
        c = Circuit(2, (), label="empty")
        trace = run_trace(c, init_basis_state(2, "00"))
        assert len(trace.records) == 1
        assert trace.records[0].step == 0
        assert trace.path_length == 0.0

    def test_record_count_and_depth(self):
        c = build_qft(3)
        trace = run_trace(c, init_basis_state(3, "001"))
        assert len(trace.records) == len(c) + 1
        depths = [r.rel_depth for r in trace.records]
        assert depths[0] == 0.0 and depths[-1] == 1.0
        assert all(b >= a for a, b in zip(depths, depths[1:]))

    def test_concatenation(self):
        f = random_3cnf(3, 2.0, seed=1)
        space = target_from_solutions(3, solve_brute_force(f))
        c1 = build_qft(3)
        params = HeaParams.from_flat(3, 1, np.linspace(-0.4, 0.4, 6))
        c2 = build_hea(3, 1, params)
        whole = Circuit(3, c1.gates + c2.gates, label="concat")
        initial = init_basis_state(3, "010")
        t_whole = run_trace(whole, initial, space)
        t1 = run_trace(c1, initial, space)
        t2 = run_trace(c2, t1.final_state, space)
        assert len(t_whole.records) == len(t1.records) + len(t2.records) - 1
        assert np.allclose(t_whole.final_state.amps, t2.final_state.amps, atol=1e-12)
        assert t_whole.path_length == pytest.approx(
            t1.path_length + t2.path_length, abs=1e-9)

    def test_swap_block_masks_progress(self):
        n = 3
        x = "011"
        from magictrace.harness import qft_output_state

        target = TargetSpace.single_state(qft_output_state(n, x))
        c = build_qft(n, include_final_swaps=True)
        trace = run_trace(c, init_basis_state(n, x), target)
        first_swap = next(r.step for r in trace.records if r.gate_kind == "SWAP")
        pre = trace.records[first_swap - 1]
        last = trace.records[-1]
        assert pre.s0_perm_lit < 1e-6
        assert pre.s0_lit > 0.5
        assert last.s0_lit < 1e-6 and last.s0_perm_lit < 1e-6
        for rec in trace.records[first_swap:]:
            assert rec.gate_kind == "SWAP"
            assert abs(rec.d_sre) < 1e-9
            assert abs(rec.d_s0_perm_lit) < 1e-9

    def test_mixed_circuit_clifford_steps_cost_nothing(self, rng):
        from magictrace.state import CLIFFORD_GATES

        gates = []
        for _ in range(30):
            roll = rng.integers(4)
            if roll == 0:
                gates.append(Gate("T", (int(rng.integers(3)) + 1,)))
            elif roll == 1:
                gates.append(Gate("RY", (int(rng.integers(3)) + 1,),
                                  angle=float(rng.uniform(-2, 2))))
            elif roll == 2:
                a, b = (rng.permutation(3)[:2] + 1).tolist()
                gates.append(Gate("CNOT", (a, b)))
            else:
                gates.append(Gate("H", (int(rng.integers(3)) + 1,)))
        c = Circuit(3, tuple(gates), label="mixed")
        trace = run_trace(c, init_basis_state(3, "000"))
        for rec in trace.records[1:]:
            if rec.gate_kind in CLIFFORD_GATES:
                assert abs(rec.d_sre) < 1e-9

    def test_colour_capture(self):
        c = Circuit(2, (Gate("H", (1,)), Gate("H", (2,))), label="hh")
        trace = run_trace(c, init_basis_state(2, "00"),
                          opts=TraceOptions(compute_sre=False, colours=True,
                                            permutation_min=False))
        assert trace.records[0].colours == ((1.0, 0.5, 0.5), (1.0, 0.5, 0.5))
        assert trace.records[-1].colours[0] == pytest.approx((0.5, 1.0, 0.5),
                                                             abs=1e-12)

    def test_initial_dimension_mismatch(self):
        with pytest.raises(ValueError):
            run_trace(build_qft(3), init_basis_state(2, "00"))
