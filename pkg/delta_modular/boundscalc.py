"""
Closed-form upper and lower bounds on g(Δ, r).
"""
import functools
import math
from typing import Optional

from delta_modular.families import NU_VALUES, construct_vandermonde, f3_parameters
from delta_modular.modcert import certify
from delta_modular.primes import iroot, primes_up_to, smallest_prime_above

# Largest number of r-subsets certified when computing the modulus of a moment-curve matrix
VANDERMONDE_SUBSET_CAP = 20000

BOUND_FIELDS = ("delta", "rank", "lower_bound", "lower_source", "upper_linear", "upper_sublinear",
                "exact_if_forced")


class BoundReport:
    def __init__(self, delta: int, r: int, lower_bound: Optional[int] = None,
                 lower_source: Optional[str] = None, upper_linear: Optional[int] = None,
                 upper_sublinear: Optional[int] = None, exact_if_forced: Optional[int] = None):
        self.delta = delta
        self.r = r
        self.lower_bound = lower_bound
        self.lower_source = lower_source
        self.upper_linear = upper_linear
        self.upper_sublinear = upper_sublinear
        self.exact_if_forced = exact_if_forced

    def merge(self, other: 'BoundReport') -> 'BoundReport':
        fields = {k: v if v is not None else getattr(other, k) for k, v in vars(self).items()}
        return BoundReport(**fields)

    @property
    def upper(self) -> int:
        """Tightest applicable upper bound."""
        bounds = [b for b in (self.upper_linear, self.upper_sublinear, self.exact_if_forced) if b is not None]
        return min(bounds)

    def csv_row(self) -> str:
        values = (self.delta, self.r, self.lower_bound, self.lower_source, self.upper_linear,
                  self.upper_sublinear, self.exact_if_forced)
        return ",".join("" if v is None else str(v) for v in values)

    def __repr__(self):
        fields = ", ".join(f"{k}={v}" for k, v in vars(self).items())
        return f"BoundReport({fields})"


def _check_args(delta: int, r: int):
    if delta < 1:
        raise ValueError(f"Δ must be a positive integer, got {delta}")
    if r < 2:
        raise ValueError(f"Bounds need rank r ≥ 2, got {r}")


def moment_curve_delta(p: int, r: int) -> int:
    """⌈(r-1)^{(r-1)/2}⌉·(p-1)^{r-1}."""
    x = (r - 1) ** (r - 1)
    c = math.isqrt(x)
    if c * c < x:
        c += 1
    return c * (p - 1) ** (r - 1)


@functools.lru_cache(maxsize=None)
def vandermonde_modulus(p: int, r: int) -> Optional[int]:
    """Largest absolute r×r minor of the moment-curve matrix, None if the matrix is not generic."""
    report = certify(construct_vandermonde(p, r), 1)
    return report.max_abs_top_minor if report.is_generic else None


def upper_bound(delta: int, r: int) -> BoundReport:
    _check_args(delta, r)
    p = smallest_prime_above(delta)
    linear = max(r, p) + 1
    if delta >= 2 and r <= 2 * delta - 1:
        linear = min(linear, 2 * delta)
    sublinear = None
    if r >= 3:
        # ⌊130·r³·Δ^{2/r}⌋ as the integer r-th root of 130^r·r^{3r}·Δ²
        sublinear = iroot(130 ** r * r ** (3 * r) * delta ** 2, r)
    forced = r + 1 if r >= 2 * delta - 1 else None
    return BoundReport(delta, r, upper_linear=linear, upper_sublinear=sublinear, exact_if_forced=forced)


def _vandermonde_lower(delta: int, r: int, beat: int) -> Optional[int]:
    """Largest prime p > beat whose moment-curve matrix modulus divides Δ."""
    candidates = [p for p in primes_up_to(4 * delta + 2 * r) if p >= r and p > beat
                  and math.comb(p, r) <= VANDERMONDE_SUBSET_CAP]
    for p in reversed(candidates):
        # Scaling one row by k keeps genericity and multiplies every top minor by k
        modulus = vandermonde_modulus(p, r)
        if modulus is not None and delta % modulus == 0:
            return p
    return None


def lower_bound(delta: int, r: int) -> BoundReport:
    _check_args(delta, r)
    best, source = r + 1, "basic"

    def offer(value: int, name: str):
        nonlocal best, source
        if value > best:
            best, source = value, name

    if r == 2:
        offer(delta + 2, "f1")
        if delta >= 3 and delta % 2 == 1:
            offer(delta + 3, "f2")
        try:
            f3_parameters(delta)
            offer(delta + 4, "f3")
        except ValueError:
            pass
        if delta >= 24 and (delta - 24) % 30 == 0 and (delta - 24) // 30 < len(NU_VALUES):
            offer(delta + 2 + NU_VALUES[(delta - 24) // 30] // 2, "30s24")
    p = _vandermonde_lower(delta, r, best)
    if p is not None:
        offer(p, "vandermonde")
    return BoundReport(delta, r, lower_bound=best, lower_source=source)


def bounds(delta: int, r: int) -> BoundReport:
    return lower_bound(delta, r).merge(upper_bound(delta, r))
