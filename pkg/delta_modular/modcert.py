"""
Predicates and certificates for Δ-modularity, genericity and Δ-boundedness.
"""
import itertools
from typing import Iterator

from delta_modular.exactmat import IntMatrix, det_int, rank


def colex_subsets(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """k-subsets of range(n) in colexicographic order."""
    if k == 0:
        yield ()
        return
    for last in range(k - 1, n):
        for prefix in colex_subsets(last, k - 1):
            yield prefix + (last,)


def _minors(m: list[list[int]], k: int, row_sets=None) -> Iterator[int]:
    """All k×k minors of m, column subsets in colex order."""
    n_rows, n_cols = len(m), len(m[0])
    if row_sets is None:
        row_sets = list(itertools.combinations(range(n_rows), k))
    for cols in colex_subsets(n_cols, k):
        for rows in row_sets:
            yield det_int([[m[i][j] for j in cols] for i in rows])


def _check_delta(delta: int):
    if delta < 1:
        raise ValueError(f"Δ must be a positive integer, got {delta}")


def _require_full_row_rank(a: IntMatrix):
    rk = rank(a)
    if rk != a.rows:
        raise ValueError(f"Matrix with {a.rows} rows has rank {rk}, full row rank required")


def is_generic(a: IntMatrix) -> bool:
    _require_full_row_rank(a)
    return all(v != 0 for v in _minors(a.to_lists(), a.rows, [tuple(range(a.rows))]))


def is_delta_modular(a: IntMatrix, delta: int) -> bool:
    _check_delta(delta)
    _require_full_row_rank(a)
    best = 0
    for v in _minors(a.to_lists(), a.rows, [tuple(range(a.rows))]):
        v = abs(v)
        if v > delta:
            return False
        best = max(best, v)
    return best == delta


def is_totally_generic(a: IntMatrix) -> bool:
    m = a.to_lists()
    return all(v != 0 for k in range(1, min(a.rows, a.cols) + 1) for v in _minors(m, k))


def is_delta_bound(a: IntMatrix, delta: int) -> bool:
    _check_delta(delta)
    m = a.to_lists()
    return all(abs(v) <= delta ** k for k in range(1, min(a.rows, a.cols) + 1) for v in _minors(m, k))


class CertReport:
    def __init__(self, delta: int, rank: int, columns: int, max_abs_top_minor: int,
                 zero_top_minor_count: int, is_generic: bool, is_delta_submodular: bool,
                 is_delta_modular: bool, columns_distinct: bool):
        self.delta = delta
        self.rank = rank
        self.columns = columns
        self.max_abs_top_minor = max_abs_top_minor
        self.zero_top_minor_count = zero_top_minor_count
        self.is_generic = is_generic
        self.is_delta_submodular = is_delta_submodular
        self.is_delta_modular = is_delta_modular
        self.columns_distinct = columns_distinct

    def as_dict(self) -> dict:
        return dict(vars(self))

    def __repr__(self):
        fields = ", ".join(f"{k}={v}" for k, v in vars(self).items())
        return f"CertReport({fields})"


def certify(a: IntMatrix, delta: int) -> CertReport:
    """Full report on the top-size minors of A; rank-deficient input is reported, not rejected."""
    _check_delta(delta)
    rk = rank(a)
    k = max(rk, 1)
    m = a.to_lists()
    max_abs, zeros = 0, 0
    for v in _minors(m, k):
        if v == 0:
            zeros += 1
        max_abs = max(max_abs, abs(v))
    columns = a.columns()
    return CertReport(
        delta=delta,
        rank=rk,
        columns=a.cols,
        max_abs_top_minor=max_abs,
        zero_top_minor_count=zeros,
        is_generic=zeros == 0,
        is_delta_submodular=max_abs <= delta,
        is_delta_modular=max_abs == delta,
        columns_distinct=len(set(columns)) == len(columns),
    )
