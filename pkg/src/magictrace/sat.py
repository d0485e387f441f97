"""3-CNF formulas: evaluation, brute-force solving, random instances and
DIMACS round-tripping.

Assignment strings follow the package bit order: character i of the string
is the value of variable i, and variable 1 is the most significant bit of
the corresponding amplitude index.
"""

from dataclasses import dataclass

import numpy as np

MAX_BRUTE_FORCE_VARS = 24
_RESAMPLE_LIMIT = 1000


@dataclass(frozen=True)
class Clause:
    """Disjunction of exactly three literals over distinct variables.

    Literals are (variable, negated) pairs, stored sorted by variable, so
    equal clauses compare equal. Having three distinct variables gives the
    clause exactly one falsifying assignment of its variable triple.
    """

    literals: tuple

    def __post_init__(self):
        lits = tuple((int(v), bool(neg)) for v, neg in self.literals)
        lits = tuple(sorted(lits))
        object.__setattr__(self, "literals", lits)
        if len(lits) != 3:
            raise ValueError(f"3-CNF clause needs exactly 3 literals, got {len(lits)}")
        variables = [v for v, _ in lits]
        if len(set(variables)) != 3:
            raise ValueError(f"clause variables must be distinct: {variables}")
        if min(variables) < 1:
            raise ValueError(f"variable indices are 1-based: {variables}")

    @property
    def variables(self):
        return tuple(v for v, _ in self.literals)


@dataclass(frozen=True)
class CnfFormula:
    n: int
    clauses: tuple

    def __post_init__(self):
        clauses = tuple(self.clauses)
        object.__setattr__(self, "clauses", clauses)
        if self.n < 1:
            raise ValueError(f"need at least one variable, got n={self.n}")
        for clause in clauses:
            if max(clause.variables) > self.n:
                raise ValueError(
                    f"clause {clause.literals} references a variable > n={self.n}"
                )

    @property
    def m(self):
        return len(self.clauses)


@dataclass(frozen=True)
class SolutionSet:
    """All satisfying assignments of a formula, as sorted bitstrings."""

    n: int
    members: tuple

    def __post_init__(self):
        members = tuple(sorted(self.members))
        object.__setattr__(self, "members", members)
        for m in members:
            if len(m) != self.n or set(m) - {"0", "1"}:
                raise ValueError(f"bad assignment string {m!r} for n={self.n}")

    def __len__(self):
        return len(self.members)

    def indices(self):
        """Amplitude indices of the members (variable 1 = MSB)."""
        return np.array([int(m, 2) for m in self.members], dtype=np.int64)


def unsat_pattern(clause):
    """The unique 3-bit assignment of the clause's variables falsifying it."""
    return "".join("1" if neg else "0" for _, neg in clause.literals)


def evaluate(formula, assignment):
    """True iff every clause has at least one satisfied literal."""
    if len(assignment) != formula.n:
        raise ValueError(
            f"assignment length {len(assignment)} != variable count {formula.n}"
        )
    values = [c == "1" for c in assignment]
    for clause in formula.clauses:
        if not any(values[v - 1] != neg for v, neg in clause.literals):
            return False
    return True


def satisfaction_table(formula):
    """0/1 vector over all 2^n assignments, computed clause by clause.

    Entry b is the product over clauses of (1 - [clause violated at b]),
    i.e. the diagonal of the projector onto the solution space.
    """
    if formula.n > MAX_BRUTE_FORCE_VARS:
        raise ValueError(
            f"brute force capped at {MAX_BRUTE_FORCE_VARS} variables, got {formula.n}"
        )
    idx = np.arange(1 << formula.n, dtype=np.int64)
    sat = np.ones(idx.shape, dtype=np.int8)
    for clause in formula.clauses:
        violated = np.ones(idx.shape, dtype=bool)
        for v, neg in clause.literals:
            bit = (idx >> (formula.n - v)) & 1
            violated &= bit == int(neg)
        sat &= ~violated
    return sat


def solve_brute_force(formula):
    """Exact enumeration of every satisfying assignment."""
    sat = satisfaction_table(formula)
    members = tuple(format(i, f"0{formula.n}b") for i in np.nonzero(sat)[0])
    return SolutionSet(formula.n, members)


def random_3cnf(n, ratio, seed):
    """Random satisfiable 3-CNF with round(ratio * n) clauses.

    Clauses draw 3 distinct variables uniformly with uniform polarities;
    duplicate clauses are allowed. Unsatisfiable draws are rejected and the
    whole formula resampled, which keeps the ensemble uniform conditioned
    on satisfiability.
    """
    if n < 3:
        raise ValueError(f"need n >= 3 to draw 3 distinct variables, got {n}")
    if ratio <= 0:
        raise ValueError(f"clause-to-variable ratio must be positive, got {ratio}")
    m = round(ratio * n)
    rng = np.random.default_rng(seed)
    for _ in range(_RESAMPLE_LIMIT):
        clauses = []
        for _ in range(m):
            variables = rng.permutation(n)[:3] + 1
            negations = rng.integers(0, 2, size=3)
            clauses.append(
                Clause(tuple((int(v), bool(g)) for v, g in zip(variables, negations)))
            )
        formula = CnfFormula(n, tuple(clauses))
        if satisfaction_table(formula).any():
            return formula
    raise RuntimeError(
        f"no satisfiable formula in {_RESAMPLE_LIMIT} draws (n={n}, ratio={ratio})"
    )


def parse_dimacs(text):
    """Parse a DIMACS CNF string; only 3-literal clauses are accepted."""
    n = None
    expected_m = None
    literals = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("c") or line.startswith("%"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise ValueError(f"malformed DIMACS header: {line!r}")
            n, expected_m = int(parts[2]), int(parts[3])
            continue
        literals.extend(int(tok) for tok in line.split())
    if n is None:
        raise ValueError("missing 'p cnf' header")
    clauses = []
    current = []
    for lit in literals:
        if lit == 0:
            if len(current) != 3:
                raise ValueError(
                    f"this tool is 3-CNF only; got a {len(current)}-literal clause"
                )
            if any(abs(l) > n for l in current):
                raise ValueError(f"variable out of range in clause {current}")
            clauses.append(Clause(tuple((abs(l), l < 0) for l in current)))
            current = []
        else:
            current.append(lit)
    if current:
        raise ValueError("last clause not terminated by 0")
    if len(clauses) != expected_m:
        raise ValueError(
            f"header promises {expected_m} clauses, file has {len(clauses)}"
        )
    return CnfFormula(n, tuple(clauses))


def emit_dimacs(formula):
    """Serialise to DIMACS CNF; parse(emit(F)) == F."""
    lines = [f"p cnf {formula.n} {formula.m}"]
    for clause in formula.clauses:
        lits = " ".join(str(-v if neg else v) for v, neg in clause.literals)
        lines.append(f"{lits} 0")
    return "\n".join(lines) + "\n"
