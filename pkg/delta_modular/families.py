"""
Explicit constructions of generic Δ-modular matrices.
"""
import math
from typing import Sequence

import numpy as np

from delta_modular.exactmat import IntMatrix
from delta_modular.primes import is_prime

FAMILIES = ("basic", "f1", "f2", "f3", "30s24", "vandermonde", "M")

# ν_s for s = 0, ..., 12 in the Δ = 30s + 24 family
NU_VALUES = (8, 6, 6, 6, 6, 4, 4, 4, 4, 2, 2, 2, 2)


def construct_basic(delta: int, r: int) -> IntMatrix:
    """(I_r | Δ·1), an r×(r+1) generic Δ-modular matrix."""
    if delta < 1 or r < 1:
        raise ValueError(f"Need Δ ≥ 1 and r ≥ 1, got Δ={delta}, r={r}")
    return IntMatrix(np.hstack([np.eye(r, dtype=np.int64), np.full((r, 1), delta, dtype=np.int64)]))


def construct_f1(delta: int) -> IntMatrix:
    if delta < 1:
        raise ValueError(f"Δ must be a positive integer, got {delta}")
    return IntMatrix.from_columns([(1, 0), (0, 1)] + [(1, k) for k in range(1, delta + 1)])


def construct_f2(delta: int) -> IntMatrix:
    if delta < 3 or delta % 2 == 0:
        raise ValueError(f"Family f2 needs an odd Δ ≥ 3, got {delta}")
    return IntMatrix.from_columns([(1, 0), (0, 1)] + [(1, k) for k in range(1, delta + 1)] + [(2, delta)])


def construct_M(a: Sequence[int], b: Sequence[int]) -> IntMatrix:
    """Column (0, 1) followed by the primitive columns (j, k), a_j ≤ k ≤ b_j, block by block."""
    if len(a) != len(b):
        raise ValueError(f"Length mismatch between a={list(a)} and b={list(b)}")
    columns = [(0, 1)]
    for j, (aj, bj) in enumerate(zip(a, b), start=1):
        if aj > bj:
            raise ValueError(f"Block {j}: lower end {aj} exceeds upper end {bj}")
        columns += [(j, k) for k in range(aj, bj + 1) if math.gcd(j, k) == 1]
    return IntMatrix.from_columns(columns)


def f3_parameters(delta: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    if delta < 4 or delta % 12 not in (2, 8):
        raise ValueError(f"Family f3 needs an even Δ ≥ 4 with Δ ≡ 2 (mod 3), got {delta}")
    s = delta // 12
    if delta % 12 == 2:
        return (0, 4 * s + 1, 9 * s + 1), (7 * s + 1, 10 * s + 1, 12 * s + 2)
    return (0, 4 * s + 3, 9 * s + 7), (7 * s + 5, 10 * s + 7, 12 * s + 8)


def construct_f3(delta: int) -> IntMatrix:
    return construct_M(*f3_parameters(delta))


def construct_30s24(s: int) -> IntMatrix:
    """The Δ = 30s + 24 family with Δ + 2 + ⌊ν_s/2⌋ columns."""
    if not 0 <= s < len(NU_VALUES):
        raise ValueError(f"Family 30s24 is tabulated for 0 ≤ s ≤ {len(NU_VALUES) - 1}, got s={s}")
    nu = NU_VALUES[s]
    a = (0, 6 * s + 5, 12 * s + 10, 18 * s + 15, 25 * s + 21)
    b = (11 * s + 9, 16 * s + 13, 21 * s + 17, 26 * s + 13 + nu, 30 * s + 24)
    return construct_M(a, b)


def construct_vandermonde(p: int, r: int) -> IntMatrix:
    """Columns (1, [t]_p, ..., [t^{r-1}]_p) for t = 1..p with residues in {1, ..., p}."""
    if r < 2:
        raise ValueError(f"Rank must be at least 2, got {r}")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p < r:
        raise ValueError(f"Need p ≥ r, got p={p}, r={r}")
    return IntMatrix([[pow(t, k, p) or p for t in range(1, p + 1)] for k in range(r)])


class ConstructionSpec:
    def __init__(self, family: str, **params):
        if family not in FAMILIES:
            raise ValueError(f"Unknown family '{family}', expected one of {FAMILIES}")
        self.family = family
        self.params = params

    def __repr__(self):
        params = ", ".join(f"{k}={v}" for k, v in self.params.items())
        return f"ConstructionSpec('{self.family}', {params})"


def construct(spec: ConstructionSpec) -> IntMatrix:
    p = spec.params

    def need(*names):
        missing = [n for n in names if p.get(n) is None]
        if missing:
            raise ValueError(f"Family {spec.family} needs parameter(s) {', '.join(missing)}")
        return [p[n] for n in names]

    if spec.family == "basic":
        return construct_basic(*need("delta", "r"))
    if spec.family == "f1":
        return construct_f1(*need("delta"))
    if spec.family == "f2":
        return construct_f2(*need("delta"))
    if spec.family == "f3":
        return construct_f3(*need("delta"))
    if spec.family == "30s24":
        if p.get("s") is None and p.get("delta") is not None:
            s, rem = divmod(p["delta"] - 24, 30)
            if rem or s < 0:
                raise ValueError(f"Family 30s24 needs Δ ≡ 24 (mod 30), got Δ={p['delta']}")
            return construct_30s24(s)
        s, = need("s")
        if p.get("delta") is not None and p["delta"] != 30 * s + 24:
            raise ValueError(f"Family 30s24 with s={s} has Δ={30 * s + 24}, got Δ={p['delta']}")
        return construct_30s24(s)
    if spec.family == "vandermonde":
        return construct_vandermonde(*need("p", "r"))
    return construct_M(*need("a", "b"))
