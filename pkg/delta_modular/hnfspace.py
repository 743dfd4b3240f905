"""
Enumerate and count Hermite normal forms of fixed determinant, with symmetry reductions.
"""
import itertools
import logging
import math
from typing import Iterator, Optional

import numpy as np

from delta_modular.errors import SearchLimitExceeded
from delta_modular.exactmat import HnfMatrix, IntMatrix, canonical_hnf, hnf_of
from delta_modular.primes import factorize, ordered_factorizations

logger = logging.getLogger(__name__)

HNF_MODES = ("all", "op")


class HnfEnumConfig:
    def __init__(self, delta: int, r: int, mode: str = "all"):
        if delta < 1:
            raise ValueError(f"Δ must be a positive integer, got {delta}")
        if r < 1:
            raise ValueError(f"Rank must be at least 1, got {r}")
        if mode not in HNF_MODES:
            raise ValueError(f"Unknown enumeration mode '{mode}', expected one of {HNF_MODES}")
        self.delta = delta
        self.r = r
        self.mode = mode

    def __repr__(self):
        return f"HnfEnumConfig(delta={self.delta}, r={self.r}, mode='{self.mode}')"


def _entry_ranges(diag: tuple[int, ...], op_reduced: bool) -> list[tuple[tuple[int, int], list[int]]]:
    """Admissible values of every entry above the diagonal, in row-major order."""
    r = len(diag)
    ranges = []
    for i in range(r):
        for j in range(i + 1, r):
            values = range(diag[j])
            if op_reduced and j == i + 1:
                values = [b for b in values if diag[i] <= math.gcd(b, diag[j])]
            ranges.append(((i, j), list(values)))
    return ranges


def _fillings(diag: tuple[int, ...], op_reduced: bool) -> Iterator[np.ndarray]:
    r = len(diag)
    ranges = _entry_ranges(diag, op_reduced)
    positions = [pos for pos, _ in ranges]
    for values in itertools.product(*(vals for _, vals in ranges)):
        a = np.diag(np.array(diag, dtype=np.int64))
        for (i, j), v in zip(positions, values):
            a[i, j] = v
        yield a


def _last_column_fillings(delta: int, r: int) -> Iterator[np.ndarray]:
    # Diagonal (1, ..., 1, Δ): last column sorted and folded into [0, Δ/2].
    for v in itertools.combinations_with_replacement(range(delta // 2 + 1), r - 1):
        a = np.eye(r, dtype=np.int64)
        a[-1, -1] = delta
        a[:-1, -1] = v
        yield a


def enumerate_hnf(cfg: HnfEnumConfig) -> Iterator[HnfMatrix]:
    """Stream Hermite normal forms of determinant Δ in a deterministic order."""
    op_reduced = cfg.mode == "op"
    special = (1,) * (cfg.r - 1) + (cfg.delta,)
    for diag in ordered_factorizations(cfg.delta, cfg.r):
        if op_reduced and list(diag) != sorted(diag):
            continue
        if op_reduced and diag == special and cfg.r > 1 and cfg.delta > 1:
            matrices = _last_column_fillings(cfg.delta, cfg.r)
        else:
            matrices = _fillings(diag, op_reduced)
        for a in matrices:
            yield HnfMatrix(IntMatrix(a))


def count_hnf_closed_form(delta: int, r: int) -> int:
    """Number of r×r Hermite normal forms with determinant Δ."""
    if delta < 1 or r < 1:
        raise ValueError(f"Need Δ ≥ 1 and r ≥ 1, got Δ={delta}, r={r}")
    total = 1
    for p, e in factorize(delta):
        num, den = 1, 1
        for j in range(1, e + 1):
            num *= p ** (j + r - 1) - 1
            den *= p ** j - 1
        q, rem = divmod(num, den)
        if rem:
            raise ArithmeticError(f"Inexact division {num}/{den} for prime {p}")
        total *= q
    return total


def reduce_op1(a: HnfMatrix) -> HnfMatrix:
    """Sort the diagonal by adjacent column swaps, restoring Hermite normal form after each swap."""
    h = a
    while True:
        rows = h.to_lists()
        d = h.diagonal
        i = next((i for i in range(h.r - 1) if d[i] > math.gcd(rows[i][i + 1], d[i + 1])), None)
        if i is None:
            return h
        perm = list(range(h.r))
        perm[i], perm[i + 1] = i + 1, i
        h = hnf_of(IntMatrix([[row[k] for k in perm] for row in rows]))


def reduce_op2(a: HnfMatrix) -> HnfMatrix:
    """Fold the last column of a (1, ..., 1, Δ) form into 0 ≤ v_1 ≤ ... ≤ v_{r-1} ≤ Δ/2."""
    delta = a.diagonal[-1]
    if a.diagonal[:-1] != (1,) * (a.r - 1):
        raise ValueError(f"Folding the last column needs diagonal (1, ..., 1, Δ), got {a.diagonal}")
    v = sorted(delta - x if 2 * x > delta else x for x in a.last_column)
    rows = np.eye(a.r, dtype=np.int64)
    rows[-1, -1] = delta
    rows[:-1, -1] = v
    return HnfMatrix(IntMatrix(rows))


def count_inequivalent(delta: int, r: int, cap: Optional[int] = None) -> int:
    """Number of ≃-classes among Hermite normal forms of determinant Δ."""
    forms = list(enumerate_hnf(HnfEnumConfig(delta, r, "op")))
    if cap is not None and len(forms) > cap:
        raise SearchLimitExceeded(f"{len(forms)} reduced forms for Δ={delta}, r={r} exceed the cap of {cap}")
    classes = {canonical_hnf(h.inner) for h in forms}
    logger.debug("Δ=%d r=%d: %d reduced forms in %d classes", delta, r, len(forms), len(classes))
    return len(classes)


def count_hnf(delta: int, r: int, mode: str = "all") -> int:
    """Count with mode 'all' (closed form), 'op' (reduced enumeration) or 'classes'."""
    if mode == "all":
        return count_hnf_closed_form(delta, r)
    if mode == "op":
        return sum(1 for _ in enumerate_hnf(HnfEnumConfig(delta, r, "op")))
    if mode == "classes":
        return count_inequivalent(delta, r)
    raise ValueError(f"Unknown count mode '{mode}', expected 'all', 'op' or 'classes'")
