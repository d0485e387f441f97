import math

import numpy as np
import pytest

from magictrace.pauli import (
    PauliString,
    SreConfig,
    enumerate_paulis,
    pauli_expectation,
    sre,
    xi_distribution,
)
from magictrace.state import (
    Gate,
    QubitPermutation,
    StateVector,
    apply_gate,
    apply_permutation,
    haar_random_state,
    init_basis_state,
    random_stabilizer_state,
)

from conftest import dense_pauli, dense_pauli_from_masks

S2 = 1 / math.sqrt(2)
LOG2_4_3 = math.log2(4 / 3)


def t_state():
    return StateVector(1, np.array([S2, S2 * np.exp(1j * math.pi / 4)]))


def ghz(n):
    amps = np.zeros(1 << n, dtype=complex)
    amps[0] = amps[-1] = S2
    return StateVector(n, amps)


class TestEnumeration:
    def test_single_qubit_labels(self):
        labels = {p.label() for p in enumerate_paulis(1)}
        assert labels == {"I", "X", "Z", "Y"}

    def test_two_qubits_count(self):
        assert len(list(enumerate_paulis(2))) == 16

    def test_three_qubits_unique(self):
        items = [(p.x_mask, p.z_mask) for p in enumerate_paulis(3)]
        assert len(items) == 64 and len(set(items)) == 64

    def test_mask_bounds(self):
        with pytest.raises(ValueError):
            PauliString(2, 4, 0)


class TestExpectation:
    def test_z_on_zero(self):
        assert pauli_expectation(init_basis_state(1, "0"), PauliString(1, 0, 1)) == 1

    def test_x_on_plus_and_zero(self):
        plus = apply_gate(init_basis_state(1, "0"), Gate("H", (1,)))
        x = PauliString(1, 1, 0)
        assert pauli_expectation(plus, x) == pytest.approx(1.0, abs=1e-12)
        assert pauli_expectation(init_basis_state(1, "0"), x) == 0

    def test_ghz_strings(self):
        psi = ghz(3)
        xxx = PauliString(3, 0b111, 0)
        zzi = PauliString(3, 0, 0b110)
        zii = PauliString(3, 0, 0b100)
        # dense 8x8 oracle
        for p, label in ((xxx, "XXX"), (zzi, "ZZI"), (zii, "ZII")):
            oracle = (psi.amps.conj() @ dense_pauli(label) @ psi.amps).real
            assert pauli_expectation(psi, p) == pytest.approx(oracle, abs=1e-12)
        assert pauli_expectation(psi, xxx) == pytest.approx(1.0, abs=1e-12)
        assert pauli_expectation(psi, zzi) == pytest.approx(1.0, abs=1e-12)
        assert pauli_expectation(psi, zii) == pytest.approx(0.0, abs=1e-12)

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            pauli_expectation(init_basis_state(1, "0"), PauliString(2, 0, 0))

    def test_random_states_against_dense_oracle(self, rng):
        for n in (1, 2, 3, 4):
            psi = haar_random_state(n, 1000 + n)
            for _ in range(8):
                x = int(rng.integers(1 << n))
                z = int(rng.integers(1 << n))
                dense = dense_pauli_from_masks(n, x, z)
                oracle = (psi.amps.conj() @ dense @ psi.amps).real
                got = pauli_expectation(psi, PauliString(n, x, z))
                assert got == pytest.approx(oracle, abs=1e-12)

    def test_sweep_matches_single_route(self):
        # the batched kernel and the direct per-string sum are two routes
        psi = haar_random_state(4, 321)
        xi = xi_distribution(psi)
        for i, p in enumerate(enumerate_paulis(4)):
            assert xi[i] == pytest.approx(
                pauli_expectation(psi, p) ** 2 / 16, abs=1e-12)

    def test_bounded_by_one(self):
        psi = haar_random_state(5, 8)
        for p in enumerate_paulis(5):
            assert abs(pauli_expectation(psi, p)) <= 1 + 1e-12


class TestXiDistribution:
    def test_zero_state(self):
        xi = xi_distribution(init_basis_state(1, "0"))
        by_label = dict(zip((p.label() for p in enumerate_paulis(1)), xi))
        assert by_label["I"] == pytest.approx(0.5, abs=1e-12)
        assert by_label["Z"] == pytest.approx(0.5, abs=1e-12)
        assert by_label["X"] == by_label["Y"] == 0

    def test_normalisation_on_haar_states(self):
        for seed in range(20):
            psi = haar_random_state(4, seed)
            assert xi_distribution(psi).sum() == pytest.approx(1.0, abs=1e-9)

    def test_t_state_distribution(self):
        # <X> = <Y> = 1/sqrt(2), <Z> = 0, confirmed by the dense oracle
        psi = t_state()
        for label in ("X", "Y", "Z"):
            oracle = (psi.amps.conj() @ dense_pauli(label) @ psi.amps).real
            expected = {"X": S2, "Y": S2, "Z": 0.0}[label]
            assert oracle == pytest.approx(expected, abs=1e-12)
        xi = dict(zip((p.label() for p in enumerate_paulis(1)), xi_distribution(psi)))
        assert xi["I"] == pytest.approx(0.5, abs=1e-12)
        assert xi["X"] == pytest.approx(0.25, abs=1e-12)
        assert xi["Y"] == pytest.approx(0.25, abs=1e-12)
        assert xi["Z"] == pytest.approx(0.0, abs=1e-12)


class TestSre:
    def test_zero_state_all_orders(self):
        psi = init_basis_state(3, "000")
        for alpha in (0.5, 1.0, 2.0, 3.0):
            assert abs(sre(psi, SreConfig(alpha=alpha))) < 1e-9

    def test_ghz_is_free(self):
        assert abs(sre(ghz(3))) < 1e-9

    def test_t_state_value(self):
        assert sre(t_state()) == pytest.approx(LOG2_4_3, abs=1e-9)

    def test_t_state_shannon_limit(self):
        # Xi = (1/2, 1/4, 1/4, 0): H = 1.5 bits, offset 1 bit
        assert sre(t_state(), SreConfig(alpha=1.0)) == pytest.approx(0.5, abs=1e-9)

    def test_tensor_product_additivity_tt(self):
        tt = StateVector(2, np.kron(t_state().amps, t_state().amps))
        assert sre(tt) == pytest.approx(2 * LOG2_4_3, abs=1e-9)

    def test_tensor_product_additivity_random(self):
        for seed in range(20):
            a = haar_random_state(2, 3 * seed)
            b = haar_random_state(3, 3 * seed + 1)
            ab = StateVector(5, np.kron(a.amps, b.amps))
            assert sre(ab) == pytest.approx(sre(a) + sre(b), abs=1e-9)

    def test_natural_log_base(self):
        value = sre(t_state(), SreConfig(log_base="e"))
        assert value == pytest.approx(math.log(4 / 3), abs=1e-9)

    def test_non_negative_on_haar(self):
        for seed in range(50):
            psi = haar_random_state(3, seed)
            for alpha in (0.5, 1.0, 2.0, 3.0):
                assert sre(psi, SreConfig(alpha=alpha)) >= -1e-9

    def test_upper_bound(self):
        for seed in range(25):
            n = 2 + seed % 4
            psi = haar_random_state(n, seed)
            assert sre(psi) <= n + 1e-9
            assert sre(psi, SreConfig(log_base="e")) <= n * math.log(2) + 1e-9

    def test_haar_concentration(self):
        # Haar states are nearly maximally magic: the mean at n = 6 sits
        # about n log 2 - log 4 nats, comfortably above n log 2 - 2
        n = 6
        values = [sre(haar_random_state(n, seed), SreConfig(log_base="e"))
                  for seed in range(50)]
        assert np.mean(values) > n * math.log(2) - 2

    def test_t_gate_creates_magic(self):
        plus = apply_gate(init_basis_state(1, "0"), Gate("H", (1,)))
        magic = apply_gate(plus, Gate("T", (1,)))
        assert abs(sre(plus)) < 1e-9
        assert sre(magic) > 0.1


class TestInvariances:
    def test_clifford_invariance(self, rng):
        kinds = ("H", "S", "CNOT")
        checked = 0
        for case in range(100):
            n = 2 + case % 4
            psi = haar_random_state(n, 7000 + case)
            before = sre(psi)
            for _ in range(12):
                kind = kinds[rng.integers(3)]
                if kind == "CNOT":
                    a, b = (rng.permutation(n)[:2] + 1).tolist()
                    psi = apply_gate(psi, Gate("CNOT", (a, b)))
                else:
                    psi = apply_gate(psi, Gate(kind, (int(rng.integers(n)) + 1,)))
            assert abs(sre(psi) - before) < 1e-9
            checked += 1
        assert checked == 100

    def test_permutation_invariance_exhaustive(self):
        import itertools

        for n in (2, 3, 4, 5):
            psi = haar_random_state(n, 40 + n)
            reference = sre(psi)
            for perm in itertools.permutations(range(1, n + 1)):
                value = sre(apply_permutation(psi, QubitPermutation(perm)))
                assert abs(value - reference) < 1e-9

    def test_stabilizer_characterisation(self):
        # random stabiliser states have zero entropy, and any state at zero
        # has every squared expectation in {0, 1}
        for seed in range(40):
            n = 2 + seed % 5
            psi = random_stabilizer_state(n, 30, seed)
            assert sre(psi) < 1e-9
            if sre(psi) < 1e-12:
                for p in enumerate_paulis(n):
                    e = abs(pauli_expectation(psi, p))
                    assert min(e, abs(e - 1.0)) < 1e-6


class TestSreConfig:
    def test_alpha_validation(self):
        with pytest.raises(ValueError):
            SreConfig(alpha=-1)

    def test_base_validation(self):
        with pytest.raises(ValueError):
            SreConfig(log_base="10")
