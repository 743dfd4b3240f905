"""
Solve A·x ≡ 0 (mod Δ) for Hermite normal forms of determinant Δ and lift residues to candidate columns.
"""
import itertools
import math
from typing import Iterable, Sequence

from delta_modular.errors import CertificateError
from delta_modular.exactmat import HnfMatrix, snf

CANDIDATE_MODES = ("generic", "nongeneric")


class ResidueSolutionSet:
    def __init__(self, delta: int, r: int, solutions: list[tuple[int, ...]]):
        self.delta = delta
        self.r = r
        self.solutions = solutions

    def __len__(self):
        return len(self.solutions)

    def __iter__(self):
        return iter(self.solutions)

    def __repr__(self):
        return f"ResidueSolutionSet(delta={self.delta}, r={self.r}, solutions={len(self.solutions)})"


class CandidateColumns:
    def __init__(self, columns: Iterable[Sequence[int]], mode: str = "generic"):
        if mode not in CANDIDATE_MODES:
            raise ValueError(f"Unknown candidate mode '{mode}', expected one of {CANDIDATE_MODES}")
        self.columns = [tuple(v) for v in columns]
        self.mode = mode

    def __len__(self):
        return len(self.columns)

    def __iter__(self):
        return iter(self.columns)

    def __getitem__(self, i):
        return self.columns[i]

    def __repr__(self):
        return f"CandidateColumns(mode='{self.mode}', columns={len(self.columns)})"


def solve_mod(a: HnfMatrix, delta: int) -> ResidueSolutionSet:
    """All x in Z_Δ^r with A·x ≡ 0 (mod Δ), via the Smith normal form of A."""
    if a.det != delta:
        raise ValueError(f"Determinant {a.det} of {a.to_lists()} does not match Δ={delta}")
    dec = snf(a.inner)
    q = dec.Q.to_lists()
    r = a.r
    # α_i·y_i ≡ 0 (mod Δ) has the α_i solutions y_i = m·Δ/α_i
    axes = [[m * (delta // alpha) for m in range(alpha)] for alpha in dec.alphas]
    rows = a.to_lists()
    solutions = set()
    for y in itertools.product(*axes):
        x = tuple(sum(q[i][j] * y[j] for j in range(r)) % delta for i in range(r))
        if any(sum(rows[i][j] * x[j] for j in range(r)) % delta for i in range(r)):
            raise CertificateError(f"Residue {x} does not solve A·x ≡ 0 (mod {delta}) for {rows}")
        solutions.add(x)
    if len(solutions) != delta:
        raise CertificateError(f"Found {len(solutions)} residue solutions for {rows}, expected {delta}")
    return ResidueSolutionSet(delta, r, sorted(solutions))


def _normalize_sign(v: tuple[int, ...]) -> tuple[int, ...]:
    """Flip v so that its first nonzero entry is positive."""
    first = next((x for x in v if x != 0), 0)
    return tuple(-x for x in v) if first < 0 else v


def lift_representatives(x: Sequence[int], delta: int, mode: str = "generic",
                         allow_negations: bool = False) -> list[tuple[int, ...]]:
    """Integer vectors v with |v_i| ≤ Δ and v ≡ x (mod Δ), normalized per mode."""
    if mode not in CANDIDATE_MODES:
        raise ValueError(f"Unknown candidate mode '{mode}', expected one of {CANDIDATE_MODES}")
    for k in x:
        if not 0 <= k < delta:
            raise ValueError(f"Residue entry {k} outside [0, {delta})")
    if mode == "generic":
        options = [(delta, -delta) if k == 0 else (k, k - delta) for k in x]
        return [v for v in itertools.product(*options) if v[0] > 0]
    options = [(0, delta, -delta) if k == 0 else (k, k - delta) for k in x]
    if allow_negations:
        return list(itertools.product(*options))
    lifts = []
    for v in itertools.product(*options):
        if any(v):
            v = _normalize_sign(v)
            if v not in lifts:
                lifts.append(v)
    return lifts


def prune_parallel(cands: CandidateColumns) -> CandidateColumns:
    """Keep one column per direction: the one with the smallest content, first occurrence on ties."""
    if cands.mode != "generic":
        raise ValueError("Parallel columns are legal outside generic mode and must not be pruned")
    best: dict[tuple[int, ...], tuple[int, ...]] = {}
    for v in cands:
        g = math.gcd(*v)
        direction = tuple(c // g for c in v)
        kept = best.get(direction)
        if kept is None or math.gcd(*kept) > g:
            best[direction] = v
    keep = set(best.values())
    return CandidateColumns([v for v in cands if v in keep], cands.mode)


def candidate_columns(a: HnfMatrix, delta: int, mode: str = "generic",
                      allow_negations: bool = False) -> CandidateColumns:
    """Relevant columns of C for Hermite normal form A; excludes lifts that reproduce a column of A."""
    excluded = set()
    for j in range(a.r):
        e = [0] * a.r
        e[j] = delta
        excluded.add(tuple(e))
        if mode == "generic" or not allow_negations:
            e[j] = -delta
            excluded.add(tuple(e))
    columns, seen = [], set()
    for x in solve_mod(a, delta):
        for v in lift_representatives(x, delta, mode, allow_negations):
            if v not in seen and v not in excluded:
                seen.add(v)
                columns.append(v)
    cands = CandidateColumns(columns, mode)
    return prune_parallel(cands) if mode == "generic" else cands
