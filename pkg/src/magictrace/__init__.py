"""magictrace: gate-by-gate non-stabiliserness and target-space geodesic
distance tracking for dense state-vector circuit simulations.
"""

from .backend import backend_name
from .circuits import (
    Circuit,
    EvolutionTrace,
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
from .geometry import (
    FUBINI_STUDY,
    PAPER_LITERAL,
    TargetSpace,
    geodesic_efficiency,
    geodesic_perm_min,
    geodesic_to_space,
    geodesic_to_state,
    path_length,
    target_from_solutions,
    verifier_expectation,
)
from .optimize import OptimizerConfig, minimize, qaoa_cost, vqe_cost
from .pauli import PauliString, SreConfig, enumerate_paulis, pauli_expectation, sre, xi_distribution
from .sat import (
    Clause,
    CnfFormula,
    SolutionSet,
    emit_dimacs,
    evaluate,
    parse_dimacs,
    random_3cnf,
    solve_brute_force,
    unsat_pattern,
)
from .state import (
    Gate,
    QubitColour,
    QubitPermutation,
    StateVector,
    apply_gate,
    apply_permutation,
    colour_spectrum,
    haar_random_state,
    init_basis_state,
    inner_product,
    qubit_colour,
    random_stabilizer_state,
    reduced_density_1q,
)

__version__ = "0.1.0"
