"""
Maximum clique and maximum k-hyperclique search over candidate columns.

An index set I with |I| ≤ r is a hyperedge iff the columns in I form a totally generic
Δ-bound matrix (generic mode) or a Δ-bound matrix (nongeneric mode). The family is
downward closed, so pairs are precomputed into bitsets and larger sets are evaluated
on demand and memoized.
"""
import itertools
import logging
import time
from typing import Optional, Sequence

from delta_modular.errors import SearchLimitExceeded
from delta_modular.exactmat import det_int
from delta_modular.modsolve import CANDIDATE_MODES, CandidateColumns

logger = logging.getLogger(__name__)

DEFAULT_NODE_LIMIT = 10 ** 9


class CliqueInstance:
    def __init__(self, columns, delta: int, r: Optional[int] = None, mode: Optional[str] = None,
                 lower_bound: int = 0):
        if isinstance(columns, CandidateColumns):
            mode = mode or columns.mode
            columns = columns.columns
        mode = mode or "generic"
        if mode not in CANDIDATE_MODES:
            raise ValueError(f"Unknown clique mode '{mode}', expected one of {CANDIDATE_MODES}")
        self.columns = [tuple(v) for v in columns]
        if r is None:
            if not self.columns:
                raise ValueError("Rank must be given for an empty candidate list")
            r = len(self.columns[0])
        if any(len(v) != r for v in self.columns):
            raise ValueError(f"All candidate columns must have length {r}")
        if delta < 1:
            raise ValueError(f"Δ must be a positive integer, got {delta}")
        self.delta = delta
        self.r = r
        self.mode = mode
        self.lower_bound = lower_bound
        self._row_sets = {m: list(itertools.combinations(range(r), m)) for m in range(1, r + 1)}
        self._cache: dict[tuple[int, ...], bool] = {}

        n = len(self.columns)
        self.vertex_ok = [self.condition((i,)) for i in range(n)]
        self.pair_adjacency = [0] * n
        for i in range(n):
            if not self.vertex_ok[i]:
                continue
            for j in range(i + 1, n):
                if self.vertex_ok[j] and self.condition((i, j)):
                    self.pair_adjacency[i] |= 1 << j
                    self.pair_adjacency[j] |= 1 << i

    def __len__(self):
        return len(self.columns)

    def _set_condition(self, idx: tuple[int, ...]) -> bool:
        """Minors of full size |idx| over the columns idx."""
        m = len(idx)
        cols = [self.columns[i] for i in idx]
        bound = self.delta ** m
        generic = self.mode == "generic"
        for rows in self._row_sets[m]:
            d = det_int([[c[i] for c in cols] for i in rows])
            if (generic and d == 0) or abs(d) > bound:
                return False
        return True

    def condition(self, idx: tuple[int, ...]) -> bool:
        ok = self._cache.get(idx)
        if ok is None:
            ok = self._cache[idx] = self._set_condition(idx)
        return ok

    def is_hyperedge(self, idx: Sequence[int]) -> bool:
        idx = tuple(sorted(idx))
        if len(set(idx)) != len(idx):
            raise ValueError(f"Duplicate index in {list(idx)}")
        if len(idx) > self.r:
            raise ValueError(f"Hyperedges have at most {self.r} vertices, got {len(idx)}")
        if len({self.columns[i] for i in idx}) != len(idx):
            return False
        return all(self.condition(sub) for m in range(1, len(idx) + 1)
                   for sub in itertools.combinations(idx, m))

    def __repr__(self):
        return (f"CliqueInstance(delta={self.delta}, r={self.r}, mode='{self.mode}', "
                f"columns={len(self.columns)})")


def is_hyperedge(inst: CliqueInstance, idx: Sequence[int], k: Optional[int] = None) -> bool:
    if k is not None and k != len(idx):
        raise ValueError(f"Index set {list(idx)} does not have size {k}")
    return inst.is_hyperedge(idx)


class CliqueResult:
    def __init__(self, size: int, members: list[int], nodes_explored: int, elapsed: float):
        self.size = size
        self.members = members
        self.nodes_explored = nodes_explored
        self.elapsed = elapsed

    def __repr__(self):
        return (f"CliqueResult(size={self.size}, members={self.members}, "
                f"nodes_explored={self.nodes_explored}, elapsed={self.elapsed:.3f})")


class _BranchAndBound:
    """Greedy-coloring branch and bound on bitsets, vertices relabeled by descending degree."""

    def __init__(self, inst: CliqueInstance, k: int, node_limit: int,
                 deadline: Optional[float], shared_best):
        self.inst = inst
        self.k = k
        self.node_limit = node_limit
        self.deadline = deadline
        self.shared_best = shared_best
        adj = inst.pair_adjacency
        verts = [i for i in range(len(inst)) if inst.vertex_ok[i]]
        self.order = sorted(verts, key=lambda i: (-bin(adj[i]).count("1"), i))
        pos = {v: p for p, v in enumerate(self.order)}
        self.adj = []
        for v in self.order:
            bits = 0
            for w in _bits(adj[v]):
                bits |= 1 << pos[w]
            self.adj.append(bits)
        self.floor = max(1, inst.lower_bound)
        self.best: list[int] = []
        self.nodes = 0

    def need(self) -> int:
        # A valid instance hint may be matched; another instance's size must be beaten.
        n = max(len(self.best) + 1, self.floor)
        if self.shared_best is not None:
            n = max(n, self.shared_best.value + 1)
        return n

    def _record(self, clique: list[int]):
        self.best = list(clique)
        if self.shared_best is not None:
            with self.shared_best.get_lock():
                if len(clique) > self.shared_best.value:
                    self.shared_best.value = len(clique)

    def _color_sort(self, p: int) -> tuple[list[int], list[int]]:
        order, colors = [], []
        color = 0
        uncolored = p
        while uncolored:
            color += 1
            q = uncolored
            while q:
                low = q & -q
                v = low.bit_length() - 1
                q &= ~(self.adj[v] | low)
                uncolored &= ~low
                order.append(v)
                colors.append(color)
        return order, colors

    def _filter(self, clique: list[int], v: int, p: int) -> int:
        """Drop w unless T ∪ {v, w} is an edge for every T ⊆ clique with |T| ≤ k-2."""
        cond = self.inst.condition
        order = self.order
        ov = order[v]
        subsets = [tuple(order[u] for u in t)
                   for size in range(1, min(self.k - 2, len(clique)) + 1)
                   for t in itertools.combinations(clique, size)]
        for w in _bits(p):
            ow = order[w]
            if not all(cond(tuple(sorted(t + (ov, ow)))) for t in subsets):
                p &= ~(1 << w)
        return p

    def members(self) -> list[int]:
        return sorted(self.order[p] for p in self.best)

    def _tick(self):
        self.nodes += 1
        if self.nodes > self.node_limit:
            raise SearchLimitExceeded(f"Node limit {self.node_limit} exceeded", best=len(self.best),
                                      members=self.members())
        if self.deadline is not None and self.nodes % 256 == 0 and time.time() > self.deadline:
            raise SearchLimitExceeded("Wall-clock budget exceeded", best=len(self.best), members=self.members())

    def expand(self, clique: list[int], p: int):
        self._tick()
        order, colors = self._color_sort(p)
        for idx in range(len(order) - 1, -1, -1):
            if len(clique) + colors[idx] < self.need():
                return
            v = order[idx]
            new_p = p & self.adj[v]
            if self.k > 2 and clique and new_p:
                new_p = self._filter(clique, v, new_p)
            clique.append(v)
            if new_p:
                self.expand(clique, new_p)
            elif len(clique) >= self.need():
                self._record(clique)
            clique.pop()
            p &= ~(1 << v)

    def run(self) -> CliqueResult:
        start = time.perf_counter()
        self.expand([], (1 << len(self.order)) - 1)
        members = self.members()
        return CliqueResult(len(members), members, self.nodes, time.perf_counter() - start)


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def _search(inst: CliqueInstance, k: int, node_limit: int, deadline: Optional[float],
            shared_best) -> CliqueResult:
    result = _BranchAndBound(inst, k, node_limit, deadline, shared_best).run()
    logger.debug("clique search on %d candidates (Δ=%d, r=%d, k=%d): size %d after %d nodes",
                 len(inst), inst.delta, inst.r, k, result.size, result.nodes_explored)
    return result


def max_clique_graph(inst: CliqueInstance, node_limit: int = DEFAULT_NODE_LIMIT,
                     deadline: Optional[float] = None, shared_best=None) -> CliqueResult:
    """Maximum clique of the pair graph; only meaningful for rank 2."""
    if inst.r != 2:
        raise ValueError(f"Graph search needs rank 2, got {inst.r}; use max_hyperclique")
    return _search(inst, 2, node_limit, deadline, shared_best)


def max_hyperclique(inst: CliqueInstance, k: Optional[int] = None, node_limit: int = DEFAULT_NODE_LIMIT,
                    deadline: Optional[float] = None, shared_best=None) -> CliqueResult:
    k = inst.r if k is None else k
    if inst.r < 3:
        raise ValueError(f"Hyperclique search needs rank at least 3, got {inst.r}; use max_clique_graph")
    if not 2 <= k <= inst.r:
        raise ValueError(f"Hyperedge size k={k} must lie in [2, {inst.r}]")
    return _search(inst, k, node_limit, deadline, shared_best)


def max_clique(inst: CliqueInstance, **kwargs) -> CliqueResult:
    if inst.r == 2:
        return max_clique_graph(inst, **kwargs)
    return max_hyperclique(inst, **kwargs)
