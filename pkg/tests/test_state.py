import math

import numpy as np
import pytest

from magictrace.pauli import sre
from magictrace.state import (
    Gate,
    QubitPermutation,
    StateVector,
    apply_gate,
    apply_permutation,
    colour_spectrum,
    gate_matrix_1q,
    haar_random_state,
    init_basis_state,
    inner_product,
    qubit_colour,
    random_stabilizer_state,
    reduced_density_1q,
)

from conftest import dense_gate, dense_permutation

S2 = 1 / math.sqrt(2)


class TestBasisInit:
    def test_single_qubit_zero(self):
        psi = init_basis_state(1, "0")
        assert np.array_equal(psi.amps, [1, 0])

    def test_two_qubits(self):
        psi = init_basis_state(2, "10")
        assert psi.amps[2] == 1 and np.count_nonzero(psi.amps) == 1

    def test_all_ones(self):
        psi = init_basis_state(3, "111")
        assert psi.amps[7] == 1

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            init_basis_state(3, "01")

    def test_qubit_cap(self):
        with pytest.raises(ValueError):
            StateVector(13, np.zeros(2 ** 13))


class TestGateValidation:
    def test_arity(self):
        with pytest.raises(ValueError):
            Gate("CNOT", (1,))

    def test_distinct(self):
        with pytest.raises(ValueError):
            Gate("SWAP", (2, 2))

    def test_angle_required(self):
        with pytest.raises(ValueError):
            Gate("RY", (1,))

    def test_pattern_required(self):
        with pytest.raises(ValueError):
            Gate("CLAUSE_PHASE", (1, 2, 3), angle=0.3)

    def test_out_of_range_at_apply(self):
        psi = init_basis_state(2, "00")
        with pytest.raises(ValueError):
            apply_gate(psi, Gate("H", (3,)))


class TestApplyGate:
    def test_hadamard(self):
        psi = apply_gate(init_basis_state(1, "0"), Gate("H", (1,)))
        assert np.allclose(psi.amps, [S2, S2], atol=1e-12)

    def test_bell_pair(self):
        psi = apply_gate(init_basis_state(2, "00"), Gate("H", (1,)))
        psi = apply_gate(psi, Gate("CNOT", (1, 2)))
        assert np.allclose(psi.amps, [S2, 0, 0, S2], atol=1e-12)

    def test_ry_pi_flips(self):
        psi = apply_gate(init_basis_state(1, "0"), Gate("RY", (1,), angle=math.pi))
        assert abs(psi.amps[1]) == pytest.approx(1.0, abs=1e-12)

    @pytest.mark.parametrize("kind,qubits,angle,pattern", [
        ("H", (2,), None, None), ("X", (1,), None, None),
        ("Y", (3,), None, None), ("Z", (2,), None, None),
        ("S", (1,), None, None), ("T", (3,), None, None),
        ("RX", (2,), 0.7, None), ("RY", (1,), -1.2, None),
        ("RZ", (3,), 2.4, None), ("CNOT", (3, 1), None, None),
        ("CZ", (1, 3), None, None), ("CPHASE", (2, 3), 0.9, None),
        ("SWAP", (1, 3), None, None),
        ("CLAUSE_PHASE", (1, 3, 2), 0.55, "011"),
    ])
    def test_against_dense_oracle(self, kind, qubits, angle, pattern, rng):
        n = 3
        amps = rng.standard_normal(8) + 1j * rng.standard_normal(8)
        psi = StateVector(n, amps / np.linalg.norm(amps))
        gate = Gate(kind, qubits, angle=angle, pattern=pattern)
        expected = dense_gate(gate, n) @ psi.amps
        got = apply_gate(psi, gate).amps
        assert np.allclose(got, expected, atol=1e-12)

    def test_norm_drift_over_1000_gates(self, rng):
        # raw kernel applications, no renormalisation, to bound the drift
        from magictrace.backend import kernels

        n = 5
        amps = rng.standard_normal(32) + 1j * rng.standard_normal(32)
        amps /= np.linalg.norm(amps)
        kinds = ["H", "X", "Y", "Z", "S", "T", "RX", "RY", "RZ"]
        for _ in range(1000):
            kind = kinds[rng.integers(len(kinds))]
            angle = float(rng.uniform(-math.pi, math.pi))
            gate = Gate(kind, (int(rng.integers(n)) + 1,),
                        angle=angle if kind in ("RX", "RY", "RZ") else None)
            u = gate_matrix_1q(gate)
            kernels.apply_unitary_1q(amps, n, gate.qubits[0], *u)
        assert abs(np.linalg.norm(amps) - 1.0) < 1e-9


class TestPermutation:
    def test_bijection_enforced(self):
        with pytest.raises(ValueError):
            QubitPermutation((1, 1, 3))

    def test_identity(self):
        psi = haar_random_state(3, 5)
        out = apply_permutation(psi, QubitPermutation.identity(3))
        assert np.array_equal(out.amps, psi.amps)

    def test_transposition_on_basis(self):
        psi = init_basis_state(2, "01")
        out = apply_permutation(psi, QubitPermutation((2, 1)))
        assert np.array_equal(out.amps, init_basis_state(2, "10").amps)

    def test_transposition_by_linearity(self):
        # sigma = (1 2) acting on a|01> + b|11> gives a|10> + b|11>
        a, b = 0.6, 0.8
        psi = StateVector(2, np.array([0, a, 0, b]))
        out = apply_permutation(psi, QubitPermutation((2, 1)))
        assert np.allclose(out.amps, [0, 0, a, b], atol=0)

    def test_matches_dense_oracle(self, rng):
        n = 4
        amps = rng.standard_normal(16) + 1j * rng.standard_normal(16)
        psi = StateVector(n, amps / np.linalg.norm(amps))
        sigma = QubitPermutation((3, 1, 4, 2))
        expected = dense_permutation(sigma.sigma, n) @ psi.amps
        assert np.allclose(apply_permutation(psi, sigma).amps, expected, atol=0)

    def test_inverse_restores_exactly(self, rng):
        psi = haar_random_state(5, 17)
        perm = rng.permutation(5) + 1
        sigma = QubitPermutation(tuple(int(x) for x in perm))
        back = apply_permutation(apply_permutation(psi, sigma), sigma.inverse())
        assert np.array_equal(back.amps, psi.amps)

    def test_group_law(self, rng):
        psi = haar_random_state(4, 23)
        for _ in range(10):
            sigma = QubitPermutation(tuple(int(x) for x in rng.permutation(4) + 1))
            tau = QubitPermutation(tuple(int(x) for x in rng.permutation(4) + 1))
            two_step = apply_permutation(apply_permutation(psi, sigma), tau)
            one_step = apply_permutation(psi, sigma.then(tau))
            assert np.array_equal(two_step.amps, one_step.amps)


class TestReducedDensity:
    def test_product_state(self):
        rho = reduced_density_1q(init_basis_state(2, "00"), 1)
        assert np.allclose(rho, np.diag([1, 0]), atol=1e-12)

    def test_bell_marginal(self):
        psi = StateVector(2, np.array([S2, 0, 0, S2]))
        rho = reduced_density_1q(psi, 1)
        assert np.allclose(rho, np.eye(2) / 2, atol=1e-12)

    def test_plus_tensor_zero(self):
        psi = StateVector(2, np.array([S2, 0, S2, 0]))
        rho = reduced_density_1q(psi, 1)
        assert np.allclose(rho, np.full((2, 2), 0.5), atol=1e-12)

    def test_haar_marginals_are_states(self):
        for seed in range(100):
            psi = haar_random_state(4, seed)
            q = seed % 4 + 1
            rho = reduced_density_1q(psi, q)
            assert abs(np.trace(rho).real - 1.0) < 1e-9
            assert np.allclose(rho, rho.conj().T, atol=1e-12)
            eigs = np.linalg.eigvalsh(rho)
            assert eigs.min() > -1e-9 and eigs.max() < 1 + 1e-9

    def test_index_out_of_range(self):
        with pytest.raises(ValueError):
            reduced_density_1q(init_basis_state(2, "00"), 3)


class TestColours:
    def test_zero_state(self):
        assert qubit_colour(init_basis_state(1, "0"), 1) == (1.0, 0.5, 0.5)

    def test_plus_state(self):
        psi = apply_gate(init_basis_state(1, "0"), Gate("H", (1,)))
        p0, pplus, pplusi = qubit_colour(psi, 1)
        assert (p0, pplus, pplusi) == pytest.approx((0.5, 1.0, 0.5), abs=1e-12)

    def test_plus_i_state(self):
        psi = apply_gate(init_basis_state(1, "0"), Gate("H", (1,)))
        psi = apply_gate(psi, Gate("S", (1,)))
        p0, pplus, pplusi = qubit_colour(psi, 1)
        assert (p0, pplus, pplusi) == pytest.approx((0.5, 0.5, 1.0), abs=1e-12)

    def test_spectrum_order_independent_of_layout(self):
        zero_plus = StateVector(2, np.array([S2, S2, 0, 0]))
        plus_zero = StateVector(2, np.array([S2, 0, S2, 0]))
        assert colour_spectrum(zero_plus) == colour_spectrum(plus_zero)

    def test_spectrum_all_zeros(self):
        spec = colour_spectrum(init_basis_state(2, "00"))
        assert spec == [(1.0, 0.5, 0.5), (1.0, 0.5, 0.5)]

    def test_ghz_spectrum(self):
        ghz = StateVector(3, np.array([S2, 0, 0, 0, 0, 0, 0, S2]))
        spec = colour_spectrum(ghz)
        for colour in spec:
            assert colour == pytest.approx((0.5, 0.5, 0.5), abs=1e-12)

    def test_spectrum_permutation_invariant(self, rng):
        import itertools

        for n in (2, 3, 4, 5):
            psi = haar_random_state(n, n * 100)
            base = colour_spectrum(psi)
            for perm in itertools.permutations(range(1, n + 1)):
                spec = colour_spectrum(apply_permutation(psi, QubitPermutation(perm)))
                assert np.allclose(np.array(spec), np.array(base), atol=1e-12)


class TestRandomStates:
    def test_haar_deterministic(self):
        a = haar_random_state(4, 99)
        b = haar_random_state(4, 99)
        assert np.array_equal(a.amps, b.amps)

    def test_haar_norm(self):
        for seed in range(10):
            psi = haar_random_state(5, seed)
            assert abs(np.linalg.norm(psi.amps) - 1.0) < 1e-12

    def test_haar_overlap_concentration(self):
        n = 4
        overlaps = []
        for i in range(100):
            a = haar_random_state(n, 2 * i)
            b = haar_random_state(n, 2 * i + 1)
            overlaps.append(abs(inner_product(a, b)) ** 2)
        overlaps = np.array(overlaps)
        se = overlaps.std(ddof=1) / math.sqrt(len(overlaps))
        assert abs(overlaps.mean() - 1 / 2 ** n) < 3 * se

    def test_stabilizer_depth_zero(self):
        psi = random_stabilizer_state(3, 0, 1)
        assert np.array_equal(psi.amps, init_basis_state(3, "000").amps)

    def test_stabilizer_deterministic(self):
        a = random_stabilizer_state(4, 30, 7)
        b = random_stabilizer_state(4, 30, 7)
        assert np.array_equal(a.amps, b.amps)

    def test_stabilizer_has_zero_magic(self):
        for seed in range(20):
            psi = random_stabilizer_state(3, 25, seed)
            assert sre(psi) < 1e-9


class TestInnerProduct:
    def test_orthonormal_basis(self):
        zero = init_basis_state(1, "0")
        one = init_basis_state(1, "1")
        assert inner_product(zero, zero) == 1
        assert inner_product(zero, one) == 0

    def test_zero_plus(self):
        plus = apply_gate(init_basis_state(1, "0"), Gate("H", (1,)))
        assert inner_product(init_basis_state(1, "0"), plus).real == pytest.approx(S2)

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            inner_product(init_basis_state(1, "0"), init_basis_state(2, "00"))
