"""
Compute g(Δ, r) and h(Δ, r) by enumerating Hermite normal forms and searching hypercliques.

For every reduced Hermite normal form A of determinant Δ the residue solutions of
A·x ≡ 0 (mod Δ) are lifted to candidate columns, and a largest compatible set C is
searched. The best C over all A gives the witness D = (A, A·C/Δ).
"""
import csv
import io
import itertools
import json
import logging
import multiprocessing as mp
import time
from pathlib import Path
from typing import Iterable, Iterator, Optional

import numpy as np
from tqdm import tqdm

from delta_modular.boundscalc import bounds
from delta_modular.cliquecore import DEFAULT_NODE_LIMIT, CliqueInstance, max_clique
from delta_modular.errors import CertificateError, SearchLimitExceeded
from delta_modular.exactmat import HnfMatrix, IntMatrix, canonical_hnf, det_int
from delta_modular.hnfspace import HnfEnumConfig, enumerate_hnf
from delta_modular.matrix_io import format_witness
from delta_modular.modcert import certify
from delta_modular.modsolve import CANDIDATE_MODES, candidate_columns

logger = logging.getLogger(__name__)

ALGORITHM_VERSION = "1"

CSV_HEADER = ("delta", "rank", "mode", "value", "lower_bound", "upper_linear", "upper_sublinear",
              "excess", "witness", "elapsed_ms")


class SearchOptions:
    def __init__(self, node_limit: int = DEFAULT_NODE_LIMIT, time_budget: Optional[float] = None,
                 workers: int = 1, deterministic: bool = True, deduplicate: bool = False,
                 allow_negations: bool = False, progress: bool = False):
        if node_limit < 1:
            raise ValueError(f"Node limit must be positive, got {node_limit}")
        if time_budget is not None and time_budget <= 0:
            raise ValueError(f"Time budget must be positive, got {time_budget}")
        if workers < 1:
            raise ValueError(f"Need at least one worker, got {workers}")
        self.node_limit = node_limit
        self.time_budget = time_budget
        self.workers = workers
        self.deterministic = deterministic
        self.deduplicate = deduplicate
        self.allow_negations = allow_negations
        self.progress = progress

    def __repr__(self):
        fields = ", ".join(f"{k}={v}" for k, v in vars(self).items())
        return f"SearchOptions({fields})"


class ComputationResult:
    def __init__(self, delta: int, r: int, mode: str, value: int, witness: IntMatrix,
                 source_hnf: Optional[HnfMatrix], hnfs_processed: int, elapsed: float,
                 status: str = "complete", clique_size: Optional[int] = None,
                 allow_negations: bool = False):
        self.delta = delta
        self.r = r
        self.mode = mode
        self.value = value
        self.witness = witness
        self.source_hnf = source_hnf
        self.hnfs_processed = hnfs_processed
        self.elapsed = elapsed
        self.status = status
        self.clique_size = clique_size
        self.allow_negations = allow_negations

    @property
    def complete(self) -> bool:
        return self.status == "complete"

    def to_dict(self) -> dict:
        return {
            "delta": self.delta,
            "r": self.r,
            "mode": self.mode,
            "value": self.value,
            "witness": self.witness.to_lists(),
            "source_hnf": None if self.source_hnf is None else self.source_hnf.to_lists(),
            "hnfs_processed": self.hnfs_processed,
            "elapsed": self.elapsed,
            "status": self.status,
            "clique_size": self.clique_size,
            "allow_negations": self.allow_negations,
        }

    @classmethod
    def from_dict(cls, d: dict) -> 'ComputationResult':
        d = dict(d)
        d["witness"] = IntMatrix(d["witness"])
        d["source_hnf"] = None if d["source_hnf"] is None else HnfMatrix(IntMatrix(d["source_hnf"]))
        return cls(**d)

    def __repr__(self):
        return (f"ComputationResult(delta={self.delta}, r={self.r}, mode='{self.mode}', value={self.value}, "
                f"status='{self.status}', hnfs_processed={self.hnfs_processed}, elapsed={self.elapsed:.3f})")


def _cache_key(delta: int, r: int, mode: str, allow_negations: bool) -> str:
    label = mode + ("+negations" if allow_negations and mode == "nongeneric" else "")
    return f"{delta}:{r}:{label}:{ALGORITHM_VERSION}"


class ResultCache:
    """Complete results persisted as one JSON file."""

    def __init__(self, path):
        self.path = Path(path)
        self._entries: dict[str, dict] = {}
        if self.path.exists():
            self._entries = json.loads(self.path.read_text(encoding="utf-8"))

    def get(self, delta: int, r: int, mode: str, allow_negations: bool = False) -> Optional[ComputationResult]:
        entry = self._entries.get(_cache_key(delta, r, mode, allow_negations))
        return None if entry is None else ComputationResult.from_dict(entry)

    def put(self, result: ComputationResult):
        if not result.complete:
            return
        key = _cache_key(result.delta, result.r, result.mode, result.allow_negations)
        self._entries[key] = result.to_dict()
        self.path.write_text(json.dumps(self._entries, indent=1, sort_keys=True), encoding="utf-8")

    def __len__(self):
        return len(self._entries)


_shared_best = None


def _init_worker(shared_best):
    global _shared_best
    _shared_best = shared_best


def _solve_unit(unit: tuple) -> tuple[int, int, list[tuple[int, ...]], bool]:
    """Largest compatible candidate set for one Hermite normal form."""
    index, rows, delta, mode, allow_negations, node_limit, deadline = unit
    a = HnfMatrix(IntMatrix(rows))
    cands = candidate_columns(a, delta, mode, allow_negations)
    if len(cands) == 0:
        return index, 0, [], True
    inst = CliqueInstance(cands, delta, a.r, mode)
    try:
        res = max_clique(inst, node_limit=node_limit, deadline=deadline, shared_best=_shared_best)
    except SearchLimitExceeded as exc:
        logger.warning("HNF #%d (Δ=%d): %s, best size so far %s", index, delta, exc, exc.best)
        return index, len(exc.members), [cands[i] for i in exc.members], False
    return index, res.size, [cands[i] for i in res.members], True


def _run_units(units: list[tuple], options: SearchOptions, shared_best) -> list[tuple]:
    bar = tqdm(total=len(units), disable=not options.progress, desc="HNFs", leave=False)
    outcomes = []
    try:
        if options.workers > 1:
            with mp.Pool(options.workers, initializer=_init_worker, initargs=(shared_best,)) as pool:
                for outcome in pool.imap_unordered(_solve_unit, units, chunksize=1):
                    outcomes.append(outcome)
                    bar.update()
        else:
            _init_worker(shared_best)
            for unit in units:
                outcomes.append(_solve_unit(unit))
                bar.update()
    finally:
        _init_worker(None)
        bar.close()
    return outcomes


def _deduplicate(forms: list[HnfMatrix]) -> list[HnfMatrix]:
    seen, kept = set(), []
    for h in forms:
        key = canonical_hnf(h.inner)
        if key not in seen:
            seen.add(key)
            kept.append(h)
    return kept


def build_witness(a: HnfMatrix, members: list[tuple[int, ...]], delta: int, mode: str,
                  allow_negations: bool = False) -> IntMatrix:
    """D = (A, A·C/Δ), closed under negation plus the zero column in the restricted nongeneric universe."""
    d = a.inner
    if members:
        ac = a.inner @ IntMatrix.from_columns(members)
        if not ac.divisible_by(delta):
            raise CertificateError(f"A·C is not divisible by Δ={delta} for A={a.to_lists()}, C={members}")
        d = d.hstack(ac // delta)
    if mode == "nongeneric" and not allow_negations:
        d = d.hstack(-d, IntMatrix(np.zeros((a.r, 1), dtype=np.int64)))
    report = certify(d, delta)
    ok = report.rank == a.r and report.is_delta_modular and report.columns_distinct
    if mode == "generic":
        ok = ok and report.is_generic
    if not ok:
        raise CertificateError(f"Witness failed re-certification: {report}")
    return d


def compute(delta: int, r: int, mode: str = "generic", options: Optional[SearchOptions] = None,
            cache: Optional[ResultCache] = None) -> ComputationResult:
    options = options or SearchOptions()
    if delta < 1:
        raise ValueError(f"Δ must be a positive integer, got {delta}")
    if r < 2:
        raise ValueError(f"Rank must be at least 2, got {r}")
    if mode not in CANDIDATE_MODES:
        raise ValueError(f"Unknown mode '{mode}', expected one of {CANDIDATE_MODES}")
    allow_negations = options.allow_negations and mode == "nongeneric"
    if cache is not None:
        hit = cache.get(delta, r, mode, allow_negations)
        if hit is not None:
            logger.info("Δ=%d r=%d %s: cached value %d", delta, r, mode, hit.value)
            return hit

    start = time.perf_counter()
    forms = list(enumerate_hnf(HnfEnumConfig(delta, r, "op")))
    if options.deduplicate:
        forms = _deduplicate(forms)
    logger.info("Δ=%d r=%d %s: searching %d Hermite normal forms", delta, r, mode, len(forms))
    deadline = None if options.time_budget is None else time.time() + options.time_budget
    units = [(i, h.to_lists(), delta, mode, allow_negations, options.node_limit, deadline)
             for i, h in enumerate(forms)]
    shared_best = None if options.deterministic else mp.Value("i", 0)
    outcomes = _run_units(units, options, shared_best)

    # Largest clique wins, ties go to the earliest form in enumeration order.
    index, size, members, _ = max(outcomes, key=lambda o: (o[1], -o[0]))
    complete = all(o[3] for o in outcomes)
    witness = build_witness(forms[index], members, delta, mode, allow_negations)
    result = ComputationResult(delta, r, mode, witness.cols, witness, forms[index], len(forms),
                               time.perf_counter() - start, "complete" if complete else "incomplete",
                               size, allow_negations)
    logger.info("Δ=%d r=%d %s: value %d (%s) in %.2fs", delta, r, mode, result.value, result.status,
                result.elapsed)
    if cache is not None:
        cache.put(result)
    return result


def compute_g(delta: int, r: int, options: Optional[SearchOptions] = None,
              cache: Optional[ResultCache] = None) -> ComputationResult:
    return compute(delta, r, "generic", options, cache)


def compute_h(delta: int, r: int, options: Optional[SearchOptions] = None,
              cache: Optional[ResultCache] = None) -> ComputationResult:
    return compute(delta, r, "nongeneric", options, cache)


def _csv_line(values: Iterable) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="").writerow(["" if v is None else v for v in values])
    return buf.getvalue()


def compute_table(ranks: Iterable[int], delta_max: int, mode: str = "generic",
                  options: Optional[SearchOptions] = None, cache: Optional[ResultCache] = None,
                  delta_min: int = 2) -> Iterator[str]:
    """CSV lines, header first, one row per (r, Δ) in ascending order."""
    yield _csv_line(CSV_HEADER)
    for r in sorted(set(ranks)):
        for delta in range(delta_min, delta_max + 1):
            result = compute(delta, r, mode, options, cache)
            if not result.complete:
                raise SearchLimitExceeded(f"Computation for Δ={delta}, r={r} is incomplete",
                                          best=result.value)
            lower = upper_linear = upper_sublinear = excess = None
            if mode == "generic":
                report = bounds(delta, r)
                lower, upper_linear, upper_sublinear = (report.lower_bound, report.upper_linear,
                                                        report.upper_sublinear)
                if r == 2:
                    excess = result.value - (delta + 2)
            yield _csv_line((delta, r, mode, result.value, lower, upper_linear, upper_sublinear, excess,
                             format_witness(result.witness), round(result.elapsed * 1000)))


def oracle_g(delta: int, r: int = 2) -> ComputationResult:
    """Exhaustive maximum over all sets of normalized columns in [-Δ, Δ]², without Hermite normal forms."""
    if r != 2 or not 1 <= delta <= 3:
        raise ValueError(f"The oracle only runs for r = 2 and 1 ≤ Δ ≤ 3, got Δ={delta}, r={r}")
    start = time.perf_counter()
    universe = [v for v in itertools.product(range(-delta, delta + 1), repeat=2)
                if v[0] > 0 or (v[0] == 0 and v[1] > 0)]
    n = len(universe)
    dets = [[abs(det_int([[u[0], w[0]], [u[1], w[1]]])) for w in universe] for u in universe]
    best: list[int] = []

    def extend(chosen: list[int], first: int, reached: bool):
        nonlocal best
        if len(chosen) >= 2 and reached and len(chosen) > len(best):
            best = list(chosen)
        for j in range(first, n):
            if all(0 < dets[i][j] <= delta for i in chosen):
                hit = reached or any(dets[i][j] == delta for i in chosen)
                chosen.append(j)
                extend(chosen, j + 1, hit)
                chosen.pop()

    extend([], 0, False)
    witness = IntMatrix.from_columns([universe[i] for i in best])
    report = certify(witness, delta)
    if not (report.is_generic and report.is_delta_modular and report.rank == 2):
        raise CertificateError(f"Oracle witness failed re-certification: {report}")
    return ComputationResult(delta, r, "generic", witness.cols, witness, None, 0,
                             time.perf_counter() - start)
