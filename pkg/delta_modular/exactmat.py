"""
Exact integer linear algebra: minors, rank, Hermite and Smith normal forms.
"""
import itertools
import math
from typing import Iterator, Sequence

import numpy as np

INT64_MIN, INT64_MAX = -2 ** 63, 2 ** 63 - 1
MINOR_BOUND = 2 ** 127


def _check_int64(value: int):
    if not INT64_MIN <= value <= INT64_MAX:
        raise OverflowError(f"Entry {value} does not fit into a signed 64-bit integer")


def _max_abs(arr: np.ndarray) -> int:
    # Python ints: np.abs wraps at the smallest 64-bit integer
    return max(abs(int(arr.max())), abs(int(arr.min())))


def _as_int64_array(data) -> np.ndarray:
    if isinstance(data, IntMatrix):
        return data.data
    if isinstance(data, np.ndarray) and data.dtype.kind in "iu":
        if data.dtype == np.uint64 and data.size and data.max() > INT64_MAX:
            raise OverflowError(f"Entry {int(data.max())} does not fit into a signed 64-bit integer")
        arr = data.astype(np.int64)
    else:
        arr = np.array(data, dtype=object)
        if arr.ndim != 2:
            raise ValueError(f"Expected a two-dimensional integer matrix, got {arr.ndim} dimensions")
        for value in arr.flat:
            if isinstance(value, (bool, np.bool_)) or not isinstance(value, (int, np.integer)):
                raise ValueError(f"Matrix entry {value!r} is not an integer")
            _check_int64(int(value))
        arr = arr.astype(np.int64)
    if arr.ndim != 2:
        raise ValueError(f"Expected a two-dimensional integer matrix, got {arr.ndim} dimensions")
    if arr.shape[0] < 1 or arr.shape[1] < 1:
        raise ValueError(f"Matrix must have at least one row and one column, got shape {arr.shape}")
    arr.flags.writeable = False
    return arr


class IntMatrix:
    """Dense exact-integer matrix stored as signed 64-bit entries."""

    def __init__(self, data):
        self._data = _as_int64_array(data)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]]) -> 'IntMatrix':
        if len(columns) == 0:
            raise ValueError("Cannot build a matrix from zero columns")
        return cls([list(row) for row in zip(*columns)])

    @classmethod
    def identity(cls, n: int) -> 'IntMatrix':
        return cls(np.eye(n, dtype=np.int64))

    @property
    def data(self) -> np.ndarray:
        return self._data

    @property
    def rows(self) -> int:
        return self._data.shape[0]

    @property
    def cols(self) -> int:
        return self._data.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self._data.shape

    @property
    def T(self) -> 'IntMatrix':
        return IntMatrix(self._data.T.copy())

    def entry(self, i: int, j: int) -> int:
        return int(self._data[i, j])

    def to_lists(self) -> list[list[int]]:
        return [[int(v) for v in row] for row in self._data]

    def columns(self) -> list[tuple[int, ...]]:
        return [tuple(int(v) for v in col) for col in self._data.T]

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> 'IntMatrix':
        return IntMatrix(self._data[np.ix_(list(row_idx), list(col_idx))])

    def hstack(self, *others: 'IntMatrix') -> 'IntMatrix':
        return IntMatrix(np.hstack([self._data] + [o.data for o in others]))

    def divisible_by(self, k: int) -> bool:
        return bool(np.all(self._data % k == 0))

    def __floordiv__(self, k: int) -> 'IntMatrix':
        return IntMatrix(self._data // k)

    def __neg__(self) -> 'IntMatrix':
        if self._data.size and self._data.min() == INT64_MIN:
            raise OverflowError("Negation of the smallest 64-bit integer overflows")
        return IntMatrix(-self._data)

    def __matmul__(self, other: 'IntMatrix') -> 'IntMatrix':
        if self.cols != other.rows:
            raise ValueError(f"Cannot multiply matrices of shape {self.shape} and {other.shape}")
        bound = _max_abs(self._data) * _max_abs(other.data) * self.cols
        if bound <= INT64_MAX:
            return IntMatrix(np.matmul(self._data, other.data))
        # Exact product on Python integers, range-checked on construction.
        return IntMatrix(np.matmul(self._data.astype(object), other.data.astype(object)))

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.shape == other.shape and bool(np.array_equal(self._data, other.data))

    def __hash__(self):
        return hash((self.shape, self._data.tobytes()))

    def __repr__(self):
        return f"IntMatrix({self.to_lists()})"


class HnfMatrix:
    """Square upper triangular matrix in Hermite normal form."""

    def __init__(self, inner: IntMatrix):
        a = inner.data
        if inner.rows != inner.cols:
            raise ValueError(f"Hermite normal form must be square, got shape {inner.shape}")
        d = np.diag(a)
        if np.any(np.tril(a, -1) != 0):
            raise ValueError(f"Matrix {inner.to_lists()} is not upper triangular")
        if np.any(d <= 0):
            raise ValueError(f"Diagonal {d.tolist()} of {inner.to_lists()} is not positive")
        upper = np.triu(a, 1)
        if np.any(upper < 0) or np.any(upper >= d[np.newaxis, :]):
            raise ValueError(f"Off-diagonal entries of {inner.to_lists()} are not reduced")
        self._inner = inner

    @property
    def inner(self) -> IntMatrix:
        return self._inner

    @property
    def r(self) -> int:
        return self._inner.rows

    @property
    def diagonal(self) -> tuple[int, ...]:
        return tuple(int(v) for v in np.diag(self._inner.data))

    @property
    def det(self) -> int:
        return math.prod(self.diagonal)

    @property
    def last_column(self) -> tuple[int, ...]:
        """Entries above the diagonal in the last column."""
        return tuple(int(v) for v in self._inner.data[:-1, -1])

    def key(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(row) for row in self._inner.to_lists())

    def to_lists(self) -> list[list[int]]:
        return self._inner.to_lists()

    def __eq__(self, other) -> bool:
        if not isinstance(other, HnfMatrix):
            return NotImplemented
        return self._inner == other.inner

    def __hash__(self):
        return hash(self._inner)

    def __repr__(self):
        return f"HnfMatrix({self.to_lists()})"


class SnfDecomposition:
    """P·A·Q = S with S = diag(alphas) and alphas forming a divisibility chain."""

    def __init__(self, P: IntMatrix, S: IntMatrix, Q: IntMatrix, alphas: tuple[int, ...]):
        self.P = P
        self.S = S
        self.Q = Q
        self.alphas = alphas

    def __repr__(self):
        return f"SnfDecomposition(alphas={self.alphas})"


def _check_minor_width(value: int) -> int:
    if not -MINOR_BOUND <= value < MINOR_BOUND:
        raise OverflowError(f"Minor {value} exceeds the signed 128-bit range")
    return value


def det_int(m: Sequence[Sequence[int]]) -> int:
    """Exact determinant of a square matrix given as nested Python integer lists."""
    n = len(m)
    if n == 1:
        return _check_minor_width(m[0][0])
    if n == 2:
        return _check_minor_width(m[0][0] * m[1][1] - m[0][1] * m[1][0])
    if n == 3:
        return _check_minor_width(
            m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))
    # Bareiss fraction-free elimination
    a = [list(row) for row in m]
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
        prev = akk
    return _check_minor_width(sign * a[n - 1][n - 1])


def _check_indices(idx: Sequence[int], bound: int, what: str):
    for i in idx:
        if not 0 <= i < bound:
            raise ValueError(f"{what} index {i} out of range [0, {bound})")
    if len(set(idx)) != len(idx):
        raise ValueError(f"Duplicate {what.lower()} index in {list(idx)}")


def minor(a: IntMatrix, row_idx: Sequence[int], col_idx: Sequence[int]) -> int:
    if len(row_idx) != len(col_idx) or len(row_idx) == 0:
        raise ValueError(f"Minor needs equally many rows and columns (at least one), got "
                         f"{len(row_idx)} rows and {len(col_idx)} columns")
    _check_indices(row_idx, a.rows, "Row")
    _check_indices(col_idx, a.cols, "Column")
    data = a.data
    return det_int([[int(data[i, j]) for j in col_idx] for i in row_idx])


def rank(a: IntMatrix) -> int:
    rows = a.to_lists()
    n, r = len(rows), 0
    for c in range(a.cols):
        pivot = next((i for i in range(r, n) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        p = rows[r]
        for i in range(r + 1, n):
            f = rows[i][c]
            if f:
                new = [p[c] * x - f * y for x, y in zip(rows[i], p)]
                g = math.gcd(*new)
                rows[i] = [x // g for x in new] if g > 1 else new
        r += 1
        if r == n:
            break
    return r


def _hnf_rows(h: list[list[int]], u: list[list[int]] | None = None) -> list[list[int]]:
    """Row-reduce h in place to Hermite normal form; u receives the inverse column operations."""
    n = len(h)

    def swap(i, k):
        h[i], h[k] = h[k], h[i]
        if u is not None:
            for row in u:
                row[i], row[k] = row[k], row[i]

    def add(i, k, c):
        # row i += c * row k
        hi, hk = h[i], h[k]
        for j in range(n):
            hi[j] += c * hk[j]
        if u is not None:
            for row in u:
                row[k] -= c * row[i]

    def negate(i):
        h[i] = [-x for x in h[i]]
        if u is not None:
            for row in u:
                row[i] = -row[i]

    for j in range(n):
        while True:
            nonzero = [i for i in range(j, n) if h[i][j] != 0]
            if not nonzero:
                raise ValueError("Hermite normal form requires a nonsingular matrix")
            p = min(nonzero, key=lambda i: (abs(h[i][j]), i))
            if p != j:
                swap(p, j)
            done = True
            for i in range(j + 1, n):
                if h[i][j]:
                    add(i, j, -(h[i][j] // h[j][j]))
                    done = done and h[i][j] == 0
            if done:
                break
        if h[j][j] < 0:
            negate(j)
        for i in range(j):
            q = h[i][j] // h[j][j]
            if q:
                add(i, j, -q)
    return h


def _require_square(a: IntMatrix, what: str):
    if a.rows != a.cols:
        raise ValueError(f"{what} requires a square matrix, got shape {a.shape}")


def hnf(a: IntMatrix) -> tuple[IntMatrix, HnfMatrix]:
    """Return (U, H) with A = U·H, U unimodular and H in Hermite normal form."""
    _require_square(a, "Hermite normal form")
    u = IntMatrix.identity(a.rows).to_lists()
    h = _hnf_rows(a.to_lists(), u)
    return IntMatrix(u), HnfMatrix(IntMatrix(h))


def hnf_of(a: IntMatrix) -> HnfMatrix:
    """Hermite normal form without the transformation matrix."""
    _require_square(a, "Hermite normal form")
    return HnfMatrix(IntMatrix(_hnf_rows(a.to_lists())))


def snf(a: IntMatrix) -> SnfDecomposition:
    _require_square(a, "Smith normal form")
    n = a.rows
    s = a.to_lists()
    p = IntMatrix.identity(n).to_lists()
    q = IntMatrix.identity(n).to_lists()

    def row_swap(i, k):
        s[i], s[k] = s[k], s[i]
        p[i], p[k] = p[k], p[i]

    def row_add(i, k, c):
        for m in (s, p):
            m[i] = [x + c * y for x, y in zip(m[i], m[k])]

    def col_swap(j, k):
        for m in (s, q):
            for row in m:
                row[j], row[k] = row[k], row[j]

    def col_add(j, k, c):
        for m in (s, q):
            for row in m:
                row[j] += c * row[k]

    for t in range(n):
        while True:
            entries = [(abs(s[i][j]), i, j) for i in range(t, n) for j in range(t, n) if s[i][j]]
            if not entries:
                raise ValueError("Smith normal form requires a nonsingular matrix")
            _, i, j = min(entries)
            if i != t:
                row_swap(i, t)
            if j != t:
                col_swap(j, t)
            pivot = s[t][t]
            clean = True
            for i in range(t + 1, n):
                if s[i][t]:
                    row_add(i, t, -(s[i][t] // pivot))
                    clean = clean and s[i][t] == 0
            for j in range(t + 1, n):
                if s[t][j]:
                    col_add(j, t, -(s[t][j] // pivot))
                    clean = clean and s[t][j] == 0
            if not clean:
                continue
            bad = next((i for i in range(t + 1, n) for j in range(t + 1, n) if s[i][j] % pivot), None)
            if bad is None:
                break
            row_add(t, bad, 1)
        if s[t][t] < 0:
            s[t] = [-x for x in s[t]]
            p[t] = [-x for x in p[t]]

    alphas = tuple(s[t][t] for t in range(n))
    return SnfDecomposition(IntMatrix(p), IntMatrix(s), IntMatrix(q), alphas)


def signed_permutation(a: IntMatrix, signs: Sequence[int], perm: Sequence[int]) -> IntMatrix:
    """A·D·P: column j of the result is signs[perm[j]] times column perm[j] of A."""
    data = a.data[:, list(perm)] * np.array([signs[k] for k in perm], dtype=np.int64)
    return IntMatrix(data)


def _orbit_keys(rows: list[list[int]]) -> Iterator[tuple[tuple[int, ...], ...]]:
    r = len(rows)
    for perm in itertools.permutations(range(r)):
        for signs in itertools.product((1, -1), repeat=r):
            m = [[signs[k] * row[k] for k in perm] for row in rows]
            yield tuple(tuple(row) for row in _hnf_rows(m))


def equivalence_orbit(a: IntMatrix) -> Iterator[HnfMatrix]:
    """Hermite normal forms of A·D·P over all sign diagonals D and permutations P."""
    _require_square(a, "Equivalence testing")
    for key in _orbit_keys(a.to_lists()):
        yield HnfMatrix(IntMatrix(key))


def canonical_hnf(a: IntMatrix) -> HnfMatrix:
    """Lexicographically smallest Hermite normal form in the orbit of A."""
    _require_square(a, "Equivalence testing")
    return HnfMatrix(IntMatrix(min(_orbit_keys(a.to_lists()))))


def equivalent(a1: IntMatrix, a2: IntMatrix) -> bool:
    if a1.shape != a2.shape:
        raise ValueError(f"Shape mismatch: {a1.shape} vs {a2.shape}")
    _require_square(a1, "Equivalence testing")
    target = hnf_of(a2).key()
    return any(key == target for key in _orbit_keys(a1.to_lists()))
