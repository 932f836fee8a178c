"""Dense exact linear algebra: RREF, kernels, and canonical subspaces.

Everything downstream (series, quotients, presentations, homology) reduces to
row reduction over the declared field.  Subspaces are stored only in
reduced-row-echelon canonical form, so subspace equality is structural
equality of the stored rows.

Two elimination cores sit behind one API:

* over Q, rows are scaled to primitive integer vectors and eliminated with
  fraction-free integer operations (gcd-normalized after every update);
  Fractions reappear only in the final canonical rows;
* over GF(p), rows live in numpy int64 arrays and the column eliminations are
  vectorized.  FieldSpec caps p below 2^31 so residue products fit in int64.

Both cores are exact; there is no floating point and no modular lifting.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce as _reduce
from typing import Iterable, Sequence

import numpy as np

from .errors import ShapeError
from .field import FieldSpec, Scalar

Vector = tuple  # tuple[Scalar, ...]


# ======================================================================
# vectors
# ======================================================================

def zero_vector(field: FieldSpec, n: int) -> Vector:
    return (field.zero,) * n

def vec_add(field: FieldSpec, u: Sequence, v: Sequence) -> Vector:
    return tuple(field.add(a, b) for a, b in zip(u, v))

def vec_sub(field: FieldSpec, u: Sequence, v: Sequence) -> Vector:
    return tuple(field.sub(a, b) for a, b in zip(u, v))

def vec_scale(field: FieldSpec, c: Scalar, v: Sequence) -> Vector:
    return tuple(field.mul(c, x) for x in v)

def is_zero_vector(v: Sequence) -> bool:
    return all(x == 0 for x in v)


# ======================================================================
# Matrix
# ======================================================================

@dataclass(frozen=True)
class Matrix:
    """Immutable dense matrix with entries canonical in `field`."""

    field: FieldSpec
    rows: tuple  # tuple[tuple[Scalar, ...], ...]
    ncols: int

    @staticmethod
    def from_rows(field: FieldSpec, rows: Iterable[Sequence], ncols: int | None = None) -> "Matrix":
        coerced = tuple(tuple(field.coerce(x) for x in row) for row in rows)
        if coerced:
            width = len(coerced[0])
            if any(len(r) != width for r in coerced):
                raise ShapeError("ragged rows")
        else:
            width = 0 if ncols is None else ncols
        if ncols is not None and coerced and width != ncols:
            raise ShapeError(f"expected {ncols} columns, got {width}")
        return Matrix(field, coerced, width)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.rows)

    def apply(self, v: Sequence) -> Vector:
        """Matrix-vector product (v has ncols entries)."""
        if len(v) != self.ncols:
            raise ShapeError(f"vector length {len(v)} != {self.ncols} columns")
        f = self.field
        out = []
        for row in self.rows:
            acc = f.zero
            for a, x in zip(row, v):
                if a != 0 and x != 0:
                    acc = f.add(acc, f.mul(a, x))
            out.append(acc)
        return tuple(out)


# ======================================================================
# elimination cores
# ======================================================================

def _primitive(row: list) -> None:
    """Divide an integer row by the gcd of its entries, in place."""
    g = 0
    for x in row:
        if x:
            g = math.gcd(g, x)
            if g == 1:
                return
    if g > 1:
        for i, x in enumerate(row):
            row[i] = x // g


def _rref_int(work: list) -> list:
    """Full RREF on integer rows (in place); returns pivot column list.

    Rows stay integral and primitive; pivot entries are not normalized to 1
    (the caller rescales into the field).
    """
    nrows = len(work)
    ncols = len(work[0]) if nrows else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        sel = -1
        for i in range(r, nrows):
            if work[i][c]:
                sel = i
                break
        if sel < 0:
            continue
        if sel != r:
            work[sel], work[r] = work[r], work[sel]
        piv = work[r]
        pv = piv[c]
        for i in range(nrows):
            if i == r:
                continue
            q = work[i][c]
            if q:
                row = work[i]
                work[i] = [pv * x - q * y for x, y in zip(row, piv)]
                _primitive(work[i])
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return pivots


def _q_rows_to_int(rows: Iterable[Sequence]) -> list:
    out = []
    for row in rows:
        denom = 1
        for x in row:
            d = x.denominator
            if d != 1:
                denom = denom * d // math.gcd(denom, d)
        irow = [int(x * denom) if denom != 1 else x.numerator for x in row]
        _primitive(irow)
        out.append(irow)
    return out


def _rref_q(rows: Iterable[Sequence]) -> tuple[list, list[int]]:
    """RREF over Q.  Returns (canonical Fraction rows, pivots)."""
    work = _q_rows_to_int(rows)
    pivots = _rref_int(work)
    out = []
    for i, c in enumerate(pivots):
        pv = work[i][c]
        out.append([Fraction(x, pv) for x in work[i]])
    nzero = len(work) - len(pivots)
    width = len(work[0]) if work else 0
    out.extend([Fraction(0)] * width for _ in range(nzero))
    return out, pivots


def _rref_gf(rows, p: int) -> tuple[list, list[int]]:
    """RREF over GF(p) via numpy.  Returns (canonical int rows, pivots)."""
    A = np.array(rows, dtype=np.int64)
    if A.ndim == 1:
        A = A.reshape((0, 0))
    nrows, ncols = A.shape
    A %= p
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.flatnonzero(A[r:, c])
        if nz.size == 0:
            continue
        sel = r + int(nz[0])
        if sel != r:
            A[[r, sel]] = A[[sel, r]]
        inv = pow(int(A[r, c]), -1, p)
        if inv != 1:
            A[r] = (A[r] * inv) % p
        col = A[:, c].copy()
        col[r] = 0
        nzr = np.flatnonzero(col)
        if nzr.size:
            A[nzr] = (A[nzr] - np.outer(col[nzr], A[r])) % p
        pivots.append(c)
        r += 1
    return [[int(x) for x in row] for row in A], pivots


def rref_rows(field: FieldSpec, rows: Iterable[Sequence]) -> tuple[list, list[int]]:
    """Canonical RREF of raw rows; returns (rows incl. zero rows, pivots)."""
    rows = list(rows)
    if not rows:
        return [], []
    if field.is_rationals:
        return _rref_q(rows)
    return _rref_gf(rows, field.p)


def rref(m: Matrix) -> tuple[Matrix, tuple[int, ...], int]:
    """RREF of a Matrix: (reduced matrix, pivot columns, rank)."""
    rows, pivots = rref_rows(m.field, m.rows)
    reduced = Matrix(m.field, tuple(tuple(x for x in r) for r in rows), m.ncols)
    return reduced, tuple(pivots), len(pivots)


# ======================================================================
# Subspace
# ======================================================================

@dataclass(frozen=True)
class Subspace:
    """A subspace of field^ambient_dim held in RREF-canonical form.

    `basis` rows are the canonical RREF rows (no zero rows), `pivots` their
    pivot columns in increasing order.  Construct via span()/kernel()/... —
    direct construction must supply already-canonical data.
    """

    field: FieldSpec
    ambient_dim: int
    basis: tuple  # tuple[Vector, ...]
    pivots: tuple  # tuple[int, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def is_zero(self) -> bool:
        return not self.basis

    def reduce(self, v: Sequence) -> Vector:
        """Residual of v after eliminating this subspace's pivot coordinates.

        v is in the subspace iff the residual is zero.
        """
        if len(v) != self.ambient_dim:
            raise ShapeError(f"vector length {len(v)} != ambient {self.ambient_dim}")
        f = self.field
        w = list(v)
        for row, p in zip(self.basis, self.pivots):
            c = w[p]
            if c != 0:
                for j in range(p, self.ambient_dim):
                    x = row[j]
                    if x != 0:
                        w[j] = f.sub(w[j], f.mul(c, x))
        return tuple(w)

    def contains(self, v: Sequence) -> bool:
        return is_zero_vector(self.reduce(v))

    def contains_subspace(self, other: "Subspace") -> bool:
        self._check_mate(other)
        if not set(other.pivots) <= set(self.pivots):
            return False
        return all(self.contains(row) for row in other.basis)

    def coordinates(self, v: Sequence) -> Vector:
        """Coordinates of v in the canonical basis (v must lie in the span)."""
        coords = tuple(v[p] for p in self.pivots)
        # constraint the caller relies on: v really is in the span
        f = self.field
        check = list(v)
        for c, row in zip(coords, self.basis):
            if c != 0:
                check = [f.sub(a, f.mul(c, b)) for a, b in zip(check, row)]
        if not is_zero_vector(check):
            raise ShapeError("vector not in subspace")
        return coords

    def _check_mate(self, other: "Subspace") -> None:
        if self.field != other.field or self.ambient_dim != other.ambient_dim:
            raise ShapeError("subspaces live in different ambient spaces")

    def __repr__(self) -> str:
        return f"Subspace({self.field}, dim {self.dim} of {self.ambient_dim})"


def span(field: FieldSpec, ambient_dim: int, rows: Iterable[Sequence]) -> Subspace:
    rows = [tuple(field.coerce(x) for x in row) for row in rows]
    for row in rows:
        if len(row) != ambient_dim:
            raise ShapeError(f"row length {len(row)} != ambient {ambient_dim}")
    reduced, pivots = rref_rows(field, rows)
    basis = tuple(tuple(r) for r in reduced[: len(pivots)])
    return Subspace(field, ambient_dim, basis, tuple(pivots))


def zero_subspace(field: FieldSpec, n: int) -> Subspace:
    return Subspace(field, n, (), ())


def full_subspace(field: FieldSpec, n: int) -> Subspace:
    return coordinate_subspace(field, n, range(n))


def coordinate_subspace(field: FieldSpec, n: int, indices: Iterable[int]) -> Subspace:
    """Span of the standard basis vectors at `indices` (already canonical)."""
    idx = sorted(set(indices))
    if idx and (idx[0] < 0 or idx[-1] >= n):
        raise ShapeError(f"coordinate index out of range for ambient {n}")
    one, zero = field.one, field.zero
    basis = tuple(
        tuple(one if j == i else zero for j in range(n)) for i in idx
    )
    return Subspace(field, n, basis, tuple(idx))


def _is_coordinate(sub: Subspace) -> bool:
    for row, p in zip(sub.basis, sub.pivots):
        for j, x in enumerate(row):
            if j == p:
                if x != sub.field.one:
                    return False
            elif x != 0:
                return False
    return True


def kernel(m: Matrix) -> Subspace:
    """Null space {v : m v = 0} as a canonical Subspace of field^ncols."""
    f = m.field
    n = m.ncols
    rows, pivots = rref_rows(f, m.rows)
    pivset = set(pivots)
    free = [c for c in range(n) if c not in pivset]
    basis = []
    for fc in free:
        v = [f.zero] * n
        v[fc] = f.one
        for i, pc in enumerate(pivots):
            x = rows[i][fc]
            if x != 0:
                v[pc] = f.neg(x)
        basis.append(v)
    return span(f, n, basis)


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    a._check_mate(b)
    return span(a.field, a.ambient_dim, list(a.basis) + list(b.basis))


def _intersect_with_coordinates(s: Subspace, coord: Subspace) -> Subspace:
    """{v in s : v_i = 0 for i outside coord's coordinate set}."""
    f = s.field
    outside = sorted(set(range(s.ambient_dim)) - set(coord.pivots))
    if not outside or s.is_zero:
        return s
    # coefficient vectors c with (c . basis) zero at every outside coordinate
    constraint = Matrix.from_rows(
        f, [[row[z] for row in s.basis] for z in outside], ncols=s.dim
    )
    coeffs = kernel(constraint)
    rows = []
    for cv in coeffs.basis:
        acc = [f.zero] * s.ambient_dim
        for c, row in zip(cv, s.basis):
            if c != 0:
                for j, x in enumerate(row):
                    if x != 0:
                        acc[j] = f.add(acc[j], f.mul(c, x))
        rows.append(acc)
    return span(f, s.ambient_dim, rows)


def subspace_intersect(a: Subspace, b: Subspace) -> Subspace:
    """Intersection; Zassenhaus block reduction, with a fast path when one
    operand is a coordinate subspace (the common case R meet F^2)."""
    a._check_mate(b)
    if a.is_zero or b.is_zero:
        return zero_subspace(a.field, a.ambient_dim)
    if _is_coordinate(b):
        return _intersect_with_coordinates(a, b)
    if _is_coordinate(a):
        return _intersect_with_coordinates(b, a)
    f, n = a.field, a.ambient_dim
    zero = [f.zero] * n
    stacked = [list(row) + list(row) for row in a.basis]
    stacked += [list(row) + zero for row in b.basis]
    reduced, pivots = rref_rows(f, stacked)
    rows = []
    for r in reduced[: len(pivots)]:
        if all(x == 0 for x in r[:n]):
            rows.append(r[n:])
    return span(f, n, rows)


def complement_in(sub: Subspace, ambient: Subspace) -> Subspace:
    """Deterministic complement of `sub` inside `ambient`: the ambient basis
    rows whose pivots avoid sub's pivots.  Requires sub <= ambient."""
    sub._check_mate(ambient)
    if not ambient.contains_subspace(sub):
        raise ShapeError("complement_in: first argument is not inside second")
    taken = set(sub.pivots)
    rows, pivots = [], []
    for row, p in zip(ambient.basis, ambient.pivots):
        if p not in taken:
            rows.append(row)
            pivots.append(p)
    return Subspace(ambient.field, ambient.ambient_dim, tuple(rows), tuple(pivots))


def extend_to_complement(seed: Subspace, avoid: Subspace) -> Subspace:
    """Smallest-index-greedy complement of `avoid` containing `seed`.

    Requires seed and avoid independent.  Standard basis vectors are tried in
    index order and kept when they enlarge span(seed + avoid + picked).
    """
    seed._check_mate(avoid)
    n = seed.ambient_dim
    f = seed.field
    if subspace_sum(seed, avoid).dim != seed.dim + avoid.dim:
        raise ShapeError("extend_to_complement: seed meets avoid")
    picked: list[Vector] = []
    current = span(f, n, list(seed.basis) + list(avoid.basis))
    for k in range(n):
        if current.dim == n:
            break
        e = tuple(f.one if j == k else f.zero for j in range(n))
        if not current.contains(e):
            picked.append(e)
            current = span(f, n, list(current.basis) + [e])
    result = span(f, n, list(seed.basis) + picked)
    assert result.dim == n - avoid.dim
    return result


def reduce_rows(sub: Subspace, rows: Sequence[Sequence]) -> list:
    """Residuals of many vectors mod `sub` (batched; numpy over GF(p))."""
    if not rows:
        return []
    f = sub.field
    if f.is_rationals or sub.is_zero:
        return [list(sub.reduce(r)) for r in rows]
    p = f.p
    R = np.array([list(r) for r in rows], dtype=np.int64) % p
    B = np.array([list(b) for b in sub.basis], dtype=np.int64)
    for i, pc in enumerate(sub.pivots):
        col = R[:, pc].copy()
        nz = np.flatnonzero(col)
        if nz.size:
            R[nz] = (R[nz] - np.outer(col[nz], B[i])) % p
    return [[int(x) for x in row] for row in R]


def span_is_equal(a: Subspace, b: Subspace) -> bool:
    return a == b


def solve_right_inverse(m: Matrix) -> Matrix:
    """A section s with m . s = identity (m must have full row rank).

    Found by reducing [m | I]: if U m is the RREF with pivot columns P, then
    s(e_k) = sum_i U[i][k] e_{P_i}.
    """
    f = m.field
    nr, nc = m.nrows, m.ncols
    aug = [list(row) + [f.one if i == j else f.zero for j in range(nr)]
           for i, row in enumerate(m.rows)]
    reduced, pivots = rref_rows(f, aug)
    pivots = [p for p in pivots if p < nc]
    if len(pivots) != nr:
        raise ShapeError("matrix does not have full row rank")
    section = [[f.zero] * nr for _ in range(nc)]
    for i, p in enumerate(pivots):
        for k in range(nr):
            section[p][k] = reduced[i][nc + k]
    return Matrix.from_rows(f, section, ncols=nr)
