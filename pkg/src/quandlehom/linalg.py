"""Exact integer linear algebra: Smith and Hermite normal forms, kernels,
and lattice membership.

Everything is arbitrary-precision: matrices are plain nested lists of Python
ints.  The lattice class keeps an int64 numpy fast path for the bulk
membership solves; every single elimination step is bounded (entries stay
below 2^30 so products stay below 2^60) and the lattice falls back to exact
Python integers the moment a bound would be crossed.
"""

from __future__ import annotations

import bisect
import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

Matrix = list[list[int]]

_INT64_BOUND = 1 << 30


def identity_matrix(k: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(k)] for i in range(k)]


def zeros_matrix(m: int, n: int) -> Matrix:
    return [[0] * n for _ in range(m)]


def copy_matrix(mat: Sequence[Sequence[int]]) -> Matrix:
    return [list(map(int, row)) for row in mat]


def transpose(mat: Sequence[Sequence[int]]) -> Matrix:
    return [list(col) for col in zip(*mat)] if mat else []


def mat_mul(A: Sequence[Sequence[int]], B: Sequence[Sequence[int]]) -> Matrix:
    rows, inner = len(A), len(B)
    cols = len(B[0]) if inner else 0
    Bt = transpose(B)
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


def mat_vec(A: Sequence[Sequence[int]], v: Sequence[int]) -> list[int]:
    return [sum(a * b for a, b in zip(row, v)) for row in A]


def det_bareiss(mat: Sequence[Sequence[int]]) -> int:
    """Fraction-free determinant; exact for integer matrices."""
    A = copy_matrix(mat)
    n = len(A)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k]:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
            A[i][k] = 0
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def rank_fraction_free(mat: Sequence[Sequence[int]]) -> int:
    """Rational rank by fraction-free elimination (independent of SNF)."""
    A = copy_matrix(mat)
    m = len(A)
    n = len(A[0]) if m else 0
    rank = 0
    row = 0
    for col in range(n):
        piv = next((i for i in range(row, m) if A[i][col]), None)
        if piv is None:
            continue
        A[row], A[piv] = A[piv], A[row]
        for i in range(row + 1, m):
            if A[i][col]:
                f = A[i][col]
                g = A[row][col]
                d = math.gcd(f, g)
                fa, fb = g // d, f // d
                A[i] = [fa * a - fb * b for a, b in zip(A[i], A[row])]
        row += 1
        rank += 1
        if row == m:
            break
    return rank


@dataclass(frozen=True)
class SmithForm:
    """U @ M @ V = D with D diagonal and d1 | d2 | ... ; U, V unimodular."""

    shape: tuple[int, int]
    invariant_factors: tuple[int, ...]     # the nonzero diagonal, in chain order
    U: Optional[Matrix]
    V: Optional[Matrix]

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)

    def diagonal_matrix(self) -> Matrix:
        m, n = self.shape
        D = zeros_matrix(m, n)
        for i, d in enumerate(self.invariant_factors):
            D[i][i] = d
        return D

    def check(self, mat: Sequence[Sequence[int]]) -> bool:
        """Exact verification: reconstruction, divisibility, unimodularity."""
        facs = self.invariant_factors
        for a, b in zip(facs, facs[1:]):
            if a <= 0 or b % a:
                return False
        if self.U is None or self.V is None:
            raise ValueError("transforms were not requested")
        if abs(det_bareiss(self.U)) != 1 or abs(det_bareiss(self.V)) != 1:
            return False
        return mat_mul(mat_mul(self.U, copy_matrix(mat)), self.V) == \
            self.diagonal_matrix()


def smith_normal_form(mat: Sequence[Sequence[int]],
                      with_transforms: bool = True) -> SmithForm:
    """Smith normal form with deterministic minimal-pivot elimination."""
    A = copy_matrix(mat)
    m = len(A)
    n = len(A[0]) if m else 0
    U = identity_matrix(m) if with_transforms else None
    V = identity_matrix(n) if with_transforms else None

    def row_sub(i, k, q):          # row_i -= q * row_k
        A[i] = [a - q * b for a, b in zip(A[i], A[k])]
        if U is not None:
            U[i] = [a - q * b for a, b in zip(U[i], U[k])]

    def col_sub(j, k, q):          # col_j -= q * col_k
        for row in A:
            row[j] -= q * row[k]
        if V is not None:
            for row in V:
                row[j] -= q * row[k]

    def row_swap(i, k):
        if i != k:
            A[i], A[k] = A[k], A[i]
            if U is not None:
                U[i], U[k] = U[k], U[i]

    def col_swap(j, k):
        if j != k:
            for row in A:
                row[j], row[k] = row[k], row[j]
            if V is not None:
                for row in V:
                    row[j], row[k] = row[k], row[j]

    def row_negate(i):
        A[i] = [-a for a in A[i]]
        if U is not None:
            U[i] = [-a for a in U[i]]

    def find_pivot(t):
        best = None
        where = None
        for i in range(t, m):
            row = A[i]
            for j in range(t, n):
                v = abs(row[j])
                if v and (best is None or v < best):
                    best, where = v, (i, j)
                    if v == 1:
                        return where
        return where

    t = 0
    while t < min(m, n):
        if find_pivot(t) is None:
            break
        while True:
            # always restart from the smallest entry: remainders produced by
            # the reductions below become the next pivot, which keeps the
            # classical coefficient explosion in check
            i, j = find_pivot(t)
            row_swap(t, i)
            col_swap(t, j)
            if A[t][t] < 0:
                row_negate(t)
            d = A[t][t]
            dirty = False
            for i2 in range(t + 1, m):
                if A[i2][t]:
                    q = A[i2][t] // d
                    row_sub(i2, t, q)
                    if A[i2][t]:
                        dirty = True
            for j2 in range(t + 1, n):
                if A[t][j2]:
                    q = A[t][j2] // d
                    col_sub(j2, t, q)
                    if A[t][j2]:
                        dirty = True
            if dirty:
                continue
            # divisibility sweep into the trailing block
            offender = None
            for i2 in range(t + 1, m):
                row = A[i2]
                for j2 in range(t + 1, n):
                    if row[j2] % d:
                        offender = i2
                        break
                if offender is not None:
                    break
            if offender is None:
                break
            row_sub(t, offender, -1)   # add the offending row to the pivot row
        t += 1
    facs = tuple(A[i][i] for i in range(min(m, n)) if A[i][i])
    return SmithForm(shape=(m, n), invariant_factors=facs, U=U, V=V)


@dataclass(frozen=True)
class HermiteForm:
    """Row-style Hermite form: U @ M = H, H in row echelon with positive
    pivots and reduced entries above them."""

    h: Matrix
    pivots: tuple[tuple[int, int], ...]    # (row, col) per pivot
    U: Optional[Matrix]

    @property
    def rank(self) -> int:
        return len(self.pivots)


def hermite_normal_form(mat: Sequence[Sequence[int]],
                        with_transform: bool = False) -> HermiteForm:
    A = copy_matrix(mat)
    m = len(A)
    n = len(A[0]) if m else 0
    U = identity_matrix(m) if with_transform else None

    def row_sub(i, k, q):
        A[i] = [a - q * b for a, b in zip(A[i], A[k])]
        if U is not None:
            U[i] = [a - q * b for a, b in zip(U[i], U[k])]

    r = 0
    pivots = []
    for col in range(n):
        while True:
            nz = [i for i in range(r, m) if A[i][col]]
            if not nz:
                break
            i0 = min(nz, key=lambda i: abs(A[i][col]))
            if i0 != r:
                A[r], A[i0] = A[i0], A[r]
                if U is not None:
                    U[r], U[i0] = U[i0], U[r]
            done = True
            for i in range(r + 1, m):
                if A[i][col]:
                    q = A[i][col] // A[r][col]
                    row_sub(i, r, q)
                    if A[i][col]:
                        done = False
            if done:
                break
        if r < m and A[r][col]:
            if A[r][col] < 0:
                A[r] = [-a for a in A[r]]
                if U is not None:
                    U[r] = [-a for a in U[r]]
            for i in range(r):
                q = A[i][col] // A[r][col]
                if q:
                    row_sub(i, r, q)
            pivots.append((r, col))
            r += 1
            if r == m:
                break
    return HermiteForm(h=A, pivots=tuple(pivots), U=U)


def kernel_basis(mat: Sequence[Sequence[int]]) -> list[list[int]]:
    """Basis of the integer kernel {v : M v = 0} (a saturated lattice)."""
    m = len(mat)
    n = len(mat[0]) if m else 0
    if n == 0:
        return []
    snf = smith_normal_form(mat, with_transforms=True)
    r = snf.rank
    V = snf.V
    return [[V[i][j] for i in range(n)] for j in range(r, n)]


class IntLattice:
    """Integer row lattice with an echelon basis for membership and solves.

    Generators accumulate through add(); the echelon basis is built in one
    batch pass on first query (minimal-pivot column elimination, which keeps
    entries small, unlike naive incremental insertion).  Arithmetic runs on an
    int64 fast path with per-step overflow bounds and falls back to exact
    Python integers if a bound would be crossed.
    """

    def __init__(self, dim: int):
        self.dim = dim
        self._pending: list[list[int]] = []
        self._pivcols: list[int] = []              # sorted pivot columns
        self._rows: list = []                      # parallel to _pivcols
        self._exact = False                        # True -> python-int rows
        self._final = False

    @property
    def rank(self) -> int:
        self._finalize()
        return len(self._rows)

    def basis_vectors(self) -> list[list[int]]:
        self._finalize()
        return [[int(v) for v in row] for row in self._rows]

    @property
    def pivot_columns(self) -> tuple[int, ...]:
        self._finalize()
        return tuple(self._pivcols)

    def add(self, vec) -> None:
        vals = [int(v) for v in vec]
        if len(vals) != self.dim:
            raise ValueError("vector dimension mismatch")
        if self._final:
            # restart from the current basis plus the newcomer
            self._pending = self.basis_vectors() + [vals]
            self._rows, self._pivcols = [], []
            self._final = False
            self._exact = False
        else:
            self._pending.append(vals)

    # -- batch echelonization -------------------------------------------------
    def _finalize(self):
        if self._final:
            return
        rows = self._pending
        self._pending = []
        self._final = True
        if not rows:
            return
        big = max(abs(v) for row in rows for v in row)
        if big < _INT64_BOUND:
            R = np.array(rows, dtype=np.int64)
            out = self._echelon_np(R)
            if out is not None:
                self._rows, self._pivcols = out
                self._exact = False
                return
        self._rows, self._pivcols = self._echelon_exact(
            [list(row) for row in rows])
        self._exact = True

    @staticmethod
    def _echelon_np(R: np.ndarray):
        """Vectorized minimal-pivot echelon; None when int64 gets too hot."""
        m, dim = R.shape
        active = np.ones(m, dtype=bool)
        placed: list[tuple[int, int]] = []
        for col in range(dim):
            colv = R[:, col]
            while True:
                nz = np.nonzero(active & (colv != 0))[0]
                if nz.size <= 1:
                    break
                k = nz[np.argmin(np.abs(colv[nz]))]
                if R[k, col] < 0:
                    R[k] = -R[k]
                piv = int(R[k, col])
                others = nz[nz != k]
                q = colv[others] // piv
                R[others] -= q[:, None] * R[k][None, :]
                if int(np.abs(R[others]).max(initial=0)) >= _INT64_BOUND:
                    return None
            nz = np.nonzero(active & (R[:, col] != 0))[0]
            if nz.size:
                k = int(nz[0])
                if R[k, col] < 0:
                    R[k] = -R[k]
                active[k] = False
                placed.append((col, k))
        # row echelon suffices for exact reduction; normalizing entries above
        # pivots is skipped on purpose (it cascades entry growth)
        rows = [R[k].copy() for _, k in placed]
        pivcols = [c for c, _ in placed]
        return rows, pivcols

    @staticmethod
    def _echelon_exact(rows: list[list[int]]):
        """Same elimination in exact Python integers."""
        m = len(rows)
        dim = len(rows[0]) if m else 0
        active = [True] * m
        placed: list[tuple[int, int]] = []
        for col in range(dim):
            while True:
                nz = [i for i in range(m) if active[i] and rows[i][col]]
                if len(nz) <= 1:
                    break
                k = min(nz, key=lambda i: abs(rows[i][col]))
                if rows[k][col] < 0:
                    rows[k] = [-v for v in rows[k]]
                piv = rows[k][col]
                base = rows[k]
                for i in nz:
                    if i != k:
                        q = rows[i][col] // piv
                        if q:
                            rows[i] = [a - q * b
                                       for a, b in zip(rows[i], base)]
            nz = [i for i in range(m) if active[i] and rows[i][col]]
            if nz:
                k = nz[0]
                if rows[k][col] < 0:
                    rows[k] = [-v for v in rows[k]]
                active[k] = False
                placed.append((col, k))
        out_rows = [list(rows[k]) for _, k in placed]
        pivcols = [c for c, _ in placed]
        return out_rows, pivcols

    # -- queries ---------------------------------------------------------------
    def _reduce_vector(self, vec, vec_exact: bool, want_coords: bool):
        """Subtract basis multiples; returns (residue, exact flag, coords).

        The vector escalates to Python ints (independently of the basis) the
        moment an entry leaves the int64 comfort zone; coordinates accumulated
        before the switch are kept.
        """
        coords = [0] * len(self._rows) if want_coords else None
        pos = 0
        while True:
            lead = self._lead(vec, vec_exact)
            if lead == -1:
                return vec, vec_exact, coords
            k = bisect.bisect_left(self._pivcols, lead, lo=pos)
            if k >= len(self._pivcols) or self._pivcols[k] != lead:
                return vec, vec_exact, coords
            row = self._rows[k]
            piv = int(row[lead])
            q = int(vec[lead]) // piv
            if q:
                if vec_exact or self._exact:
                    if not vec_exact:
                        vec, vec_exact = [int(v) for v in vec], True
                    vec = [a - q * int(b) for a, b in zip(vec, row)]
                else:
                    # |vec|,|row| < 2^30 bound |q| and keep the step in int64
                    nxt = vec - q * row
                    if int(np.abs(nxt).max(initial=0)) < _INT64_BOUND:
                        vec = nxt
                    else:
                        vec, vec_exact = [int(v) for v in nxt], True
                if coords is not None:
                    coords[k] += q
            if int(vec[lead]) != 0:
                return vec, vec_exact, coords   # pivot does not divide: stuck
            pos = k + 1

    @staticmethod
    def _lead(row, exact: bool) -> int:
        if exact:
            for j, v in enumerate(row):
                if v:
                    return j
            return -1
        nz = np.nonzero(row)[0]
        return int(nz[0]) if nz.size else -1

    def _ingest(self, vec):
        if len(vec) != self.dim:
            raise ValueError("vector dimension mismatch")
        vals = [int(v) for v in vec]
        if self._exact or any(abs(v) >= _INT64_BOUND for v in vals):
            return vals, True
        return np.array(vals, dtype=np.int64), False

    def reduce(self, vec):
        """(residue, coords): vec = sum coords[k] * basis[k] + residue."""
        self._finalize()
        work, exact = self._ingest(vec)
        res, _, coords = self._reduce_vector(work, exact, want_coords=True)
        return [int(v) for v in res], coords

    def contains(self, vec) -> bool:
        res, _ = self.reduce(vec)
        return not any(res)

    def coordinates(self, vec) -> Optional[list[int]]:
        res, coords = self.reduce(vec)
        if any(res):
            return None
        return coords


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """g, s, t with s*a + t*b = g = gcd(a, b), g > 0 for nonzero input."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def lattice_from_rows(rows: Sequence[Sequence[int]], dim: int) -> IntLattice:
    lat = IntLattice(dim)
    for row in rows:
        lat.add(row)
    return lat
