"""Finite-dimensional Lie algebras by structure constants, exactly.

A LieAlgebra stores the brackets [e_i, e_j] for i < j as sparse coordinate
dictionaries over a FieldSpec.  All derived objects (series, centers,
quotients, products, stem decompositions) are computed with the canonical
subspaces from linalg, so equal inputs give byte-equal outputs.

Indices are 0-based internally; the JSON file format (cli module) is 1-based.
Instances are immutable after construction apart from a private cache of
derived data.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional, Sequence

from . import linalg
from .errors import NotIdealError, NotNilpotentError, ShapeError
from .field import FieldSpec, Scalar
from .linalg import Matrix, Subspace

SparseVec = dict  # dict[int, Scalar], no zero values


# ======================================================================
# core type
# ======================================================================

class LieAlgebra:
    """Lie algebra with basis e_0..e_{dim-1} and sparse bracket table.

    `table` maps (i, j) with i < j to {k: coefficient}; omitted pairs bracket
    to zero.  The Jacobi identity is checked by validate(), not assumed.
    """

    __slots__ = ("field", "dim", "table", "name", "_cache")

    def __init__(self, field: FieldSpec, dim: int,
                 brackets: Mapping | None = None, name: str = ""):
        if dim < 0:
            raise ShapeError("negative dimension")
        self.field = field
        self.dim = dim
        table: dict = {}
        for (i, j), out in (brackets or {}).items():
            if not (0 <= i < j < dim):
                raise ShapeError(f"bad bracket pair ({i}, {j}) for dim {dim}")
            entry: SparseVec = {}
            items = out.items() if isinstance(out, Mapping) else out
            for k, c in items:
                if not 0 <= k < dim:
                    raise ShapeError(f"bracket target {k} out of range")
                c = field.coerce(c)
                if c != 0:
                    entry[k] = field.add(entry.get(k, field.zero), c)
                    if entry[k] == 0:
                        del entry[k]
            if entry:
                table[(i, j)] = entry
        self.table = table
        self.name = name
        self._cache: dict = {}

    # --- bracket arithmetic ----------------------------------------------

    def bracket_basis(self, i: int, j: int) -> SparseVec:
        """[e_i, e_j] as a sparse dict (empty means zero)."""
        if i == j:
            return {}
        if i < j:
            return self.table.get((i, j), {})
        entry = self.table.get((j, i))
        if not entry:
            return {}
        neg = self.field.neg
        return {k: neg(c) for k, c in entry.items()}

    def bracket_sparse(self, x: SparseVec, y: SparseVec) -> SparseVec:
        f = self.field
        acc: SparseVec = {}
        for i, a in x.items():
            for j, b in y.items():
                if i == j:
                    continue
                ab = f.mul(a, b)
                for k, c in self.bracket_basis(i, j).items():
                    v = f.add(acc.get(k, f.zero), f.mul(ab, c))
                    if v == 0:
                        acc.pop(k, None)
                    else:
                        acc[k] = v
        return acc

    def bracket(self, x: Sequence, y: Sequence) -> tuple:
        """[x, y] for dense coordinate vectors."""
        if len(x) != self.dim or len(y) != self.dim:
            raise ShapeError("element has wrong length")
        sx = {i: a for i, a in enumerate(x) if a != 0}
        sy = {j: b for j, b in enumerate(y) if b != 0}
        return self._densify(self.bracket_sparse(sx, sy))

    def _densify(self, sv: SparseVec) -> tuple:
        out = [self.field.zero] * self.dim
        for k, c in sv.items():
            out[k] = c
        return tuple(out)

    def basis_vector(self, i: int) -> tuple:
        return tuple(self.field.one if j == i else self.field.zero
                     for j in range(self.dim))

    # --- validation -------------------------------------------------------

    def validate(self) -> "JacobiReport":
        """Check Jacobi on all basis triples i < j < k."""
        violations = []
        f = self.field
        n = self.dim
        get = self.table.get
        for i in range(n):
            for j in range(i + 1, n):
                bij = get((i, j))
                for k in range(j + 1, n):
                    bjk = get((j, k))
                    bik = get((i, k))
                    if not (bij or bjk or bik):
                        continue
                    acc: SparseVec = {}
                    for inner, outer, sign in (
                        (bjk, i, 1),    # [e_i, [e_j, e_k]]
                        (bik, j, -1),   # [e_j, [e_k, e_i]] = -[e_j, [e_i, e_k]]
                        (bij, k, 1),    # [e_k, [e_i, e_j]]
                    ):
                        if not inner:
                            continue
                        for t, c in inner.items():
                            for u, d in self.bracket_basis(outer, t).items():
                                cd = f.mul(c, d) if sign > 0 else f.neg(f.mul(c, d))
                                v = f.add(acc.get(u, f.zero), cd)
                                if v == 0:
                                    acc.pop(u, None)
                                else:
                                    acc[u] = v
                    if acc:
                        violations.append((i, j, k))
        return JacobiReport(ok=not violations, violations=tuple(violations))

    # --- subspace machinery ----------------------------------------------

    def full_space(self) -> Subspace:
        return linalg.full_subspace(self.field, self.dim)

    def bracket_subspaces(self, a: Subspace, b: Subspace) -> Subspace:
        """span{[x, y] : x in a, y in b}."""
        a._check_mate(b)
        if a.ambient_dim != self.dim:
            raise ShapeError("subspace ambient does not match algebra dim")
        n = self.dim
        full_a = a.dim == n
        full_b = b.dim == n
        if full_a and full_b:
            rows = [self._densify(sv) for sv in self.table.values()]
            return linalg.span(self.field, n, rows)
        rows = []
        for x in a.basis:
            sx = {i: c for i, c in enumerate(x) if c != 0}
            for y in b.basis:
                sy = {j: c for j, c in enumerate(y) if c != 0}
                sv = self.bracket_sparse(sx, sy)
                if sv:
                    rows.append(self._densify(sv))
        return linalg.span(self.field, n, rows)

    def derived_subalgebra(self) -> Subspace:
        if "derived" not in self._cache:
            full = self.full_space()
            self._cache["derived"] = self.bracket_subspaces(full, full)
        return self._cache["derived"]

    def center(self) -> Subspace:
        """Kernel of v -> ([v, e_j])_j, assembled from the sparse table."""
        if "center" in self._cache:
            return self._cache["center"]
        f, n = self.field, self.dim
        rows: dict = {}
        for (i, j), entry in self.table.items():
            for t, c in entry.items():
                key = (j, t)
                if key not in rows:
                    rows[key] = [f.zero] * n
                rows[key][i] = f.add(rows[key][i], c)
                key = (i, t)
                if key not in rows:
                    rows[key] = [f.zero] * n
                rows[key][j] = f.sub(rows[key][j], c)
        if rows:
            m = Matrix.from_rows(f, [rows[k] for k in sorted(rows)], ncols=n)
            z = linalg.kernel(m)
        else:
            z = self.full_space()
        self._cache["center"] = z
        return z

    def lower_central_series(self) -> tuple:
        """(L^1, L^2, ...) down to 0 or to stabilization."""
        if "lcs" in self._cache:
            return self._cache["lcs"]
        full = self.full_space()
        series = [full]
        while True:
            nxt = self.bracket_subspaces(series[-1], full)
            if nxt.dim == series[-1].dim:
                series.append(nxt)  # stabilized (nonzero unless already zero)
                break
            series.append(nxt)
            if nxt.is_zero:
                break
        self._cache["lcs"] = tuple(series)
        return self._cache["lcs"]

    @property
    def is_nilpotent(self) -> bool:
        return self.lower_central_series()[-1].is_zero

    def nilpotency_class(self) -> int:
        series = self.lower_central_series()
        if not series[-1].is_zero:
            raise NotNilpotentError(
                f"lower central series stabilizes at dim {series[-1].dim}")
        # class c: L^c != 0, L^{c+1} = 0; the zero algebra has class 0
        return len(series) - 1 if self.dim else 0

    def upper_central_series(self) -> tuple:
        """(Z_0 = 0, Z_1 = Z(L), ...) up to L or to stabilization."""
        if "ucs" in self._cache:
            return self._cache["ucs"]
        series = [linalg.zero_subspace(self.field, self.dim)]
        while True:
            zi = series[-1]
            if zi.dim == self.dim:
                break
            quot, proj = self.quotient(zi)
            zq = quot.center()
            # preimage: v with proj(v) in Z(Q), i.e. residual of proj(v) mod
            # Z(Q) vanishes
            rows = []
            for k in range(self.dim):
                img = proj.apply(self.basis_vector(k))
                rows.append(zq.reduce(img))
            m = Matrix.from_rows(self.field,
                                 [[rows[k][t] for k in range(self.dim)]
                                  for t in range(quot.dim)],
                                 ncols=self.dim)
            nxt = linalg.kernel(m) if quot.dim else self.full_space()
            if nxt.dim == zi.dim:
                series.append(nxt)  # stabilized below L: not nilpotent
                break
            series.append(nxt)
        self._cache["ucs"] = tuple(series)
        return self._cache["ucs"]

    # --- structural predicates --------------------------------------------

    def structural_profile(self) -> "StructuralProfile":
        derived = self.derived_subalgebra()
        z = self.center()
        nilpotent = self.is_nilpotent
        cls: Optional[int] = self.nilpotency_class() if nilpotent else None
        ghrank: Optional[int] = None
        if not derived.is_zero and derived == z:
            ghrank = derived.dim
        return StructuralProfile(
            is_abelian=derived.is_zero,
            is_nilpotent=nilpotent,
            nilpotency_class=cls,
            is_stem=derived.contains_subspace(z),
            gen_heisenberg_rank=ghrank,
            is_maximal_class=(nilpotent and self.dim >= 1
                              and cls == self.dim - 1),
        )

    # --- constructions ----------------------------------------------------

    def quotient(self, ideal: Subspace) -> tuple:
        """(L/I, projection Hom).  Basis: standard vectors at I's non-pivot
        coordinates, in index order (the canonical complement rule)."""
        if ideal.ambient_dim != self.dim or ideal.field != self.field:
            raise ShapeError("ideal lives in the wrong space")
        for row in ideal.basis:
            srow = {i: c for i, c in enumerate(row) if c != 0}
            for j in range(self.dim):
                img = self.bracket_sparse(srow, {j: self.field.one})
                if img and not ideal.contains(self._densify(img)):
                    raise NotIdealError(
                        f"subspace is not an ideal (fails at basis {j})")
        f = self.field
        keep = [k for k in range(self.dim) if k not in set(ideal.pivots)]
        pos = {k: a for a, k in enumerate(keep)}
        m = len(keep)
        brackets: dict = {}
        for a in range(m):
            for b in range(a + 1, m):
                sv = self.bracket_basis(keep[a], keep[b])
                if not sv:
                    continue
                residual = ideal.reduce(self._densify(sv))
                # residual is supported on non-pivot coordinates of the ideal
                entry = {pos[k]: c for k, c in enumerate(residual) if c != 0}
                if entry:
                    brackets[(a, b)] = entry
        quot = LieAlgebra(f, m, brackets,
                          name=f"{self.name}/I" if self.name else "")
        proj_rows = []
        for k in range(self.dim):
            residual = ideal.reduce(self.basis_vector(k))
            proj_rows.append([residual[t] for t in keep])
        matrix = Matrix.from_rows(f, [[proj_rows[k][a] for k in range(self.dim)]
                                      for a in range(m)], ncols=self.dim)
        return quot, Hom(self, quot, matrix)

    def subalgebra_on(self, space: Subspace) -> "LieAlgebra":
        """The algebra structure induced on a bracket-closed subspace,
        in the subspace's canonical basis."""
        m = space.dim
        brackets: dict = {}
        for a in range(m):
            sa = {i: c for i, c in enumerate(space.basis[a]) if c != 0}
            for b in range(a + 1, m):
                sb = {i: c for i, c in enumerate(space.basis[b]) if c != 0}
                sv = self.bracket_sparse(sa, sb)
                if not sv:
                    continue
                coords = space.coordinates(self._densify(sv))
                entry = {k: c for k, c in enumerate(coords) if c != 0}
                if entry:
                    brackets[(a, b)] = entry
        return LieAlgebra(self.field, m, brackets)

    def same_table(self, other: "LieAlgebra") -> bool:
        """Structural equality: same field, dim, and bracket table."""
        return (self.field == other.field and self.dim == other.dim
                and self.table == other.table)


# ======================================================================
# reports and satellite types
# ======================================================================

@dataclass(frozen=True)
class JacobiReport:
    ok: bool
    violations: tuple  # tuple[(i, j, k), ...] 0-based


@dataclass(frozen=True)
class StructuralProfile:
    is_abelian: bool
    is_nilpotent: bool
    nilpotency_class: Optional[int]
    is_stem: bool
    gen_heisenberg_rank: Optional[int]
    is_maximal_class: bool


class Hom:
    """Linear map between Lie algebras, stored as a target x source matrix."""

    __slots__ = ("source", "target", "matrix")

    def __init__(self, source: LieAlgebra, target: LieAlgebra, matrix: Matrix):
        if matrix.nrows != target.dim or matrix.ncols != source.dim:
            raise ShapeError("hom matrix shape mismatch")
        self.source = source
        self.target = target
        self.matrix = matrix

    def apply(self, v: Sequence) -> tuple:
        return self.matrix.apply(v)

    def column(self, k: int) -> tuple:
        return self.matrix.column(k)

    def image(self) -> Subspace:
        return linalg.span(self.target.field, self.target.dim,
                           [self.matrix.column(k) for k in range(self.source.dim)])

    def kernel(self) -> Subspace:
        return linalg.kernel(self.matrix)

    def is_bracket_compatible(self) -> bool:
        """phi([x, y]) == [phi(x), phi(y)] on all basis pairs."""
        src, tgt = self.source, self.target
        for i in range(src.dim):
            fi = self.column(i)
            for j in range(i + 1, src.dim):
                lhs = self.apply(src._densify(src.bracket_basis(i, j)))
                rhs = tgt.bracket(fi, self.column(j))
                if lhs != rhs:
                    return False
        return True


@dataclass(frozen=True)
class StemDecomposition:
    """L = T + A with T a stem ideal containing L^2 and A a central abelian
    direct factor; iso maps direct_sum(T, A) onto L."""

    T: LieAlgebra
    A: LieAlgebra
    t_space: Subspace
    a_space: Subspace
    iso: Hom


# ======================================================================
# module-level operations
# ======================================================================

def validate(L: LieAlgebra) -> JacobiReport:
    return L.validate()


def bracket(L: LieAlgebra, x: Sequence, y: Sequence) -> tuple:
    return L.bracket(x, y)


def bracket_subspaces(L: LieAlgebra, a: Subspace, b: Subspace) -> Subspace:
    return L.bracket_subspaces(a, b)


def lower_central_series(L: LieAlgebra) -> tuple:
    return L.lower_central_series()


def upper_central_series(L: LieAlgebra) -> tuple:
    return L.upper_central_series()


def structural_predicates(L: LieAlgebra) -> StructuralProfile:
    return L.structural_profile()


def quotient(L: LieAlgebra, ideal: Subspace) -> tuple:
    return L.quotient(ideal)


def minimal_generators(L: LieAlgebra) -> Subspace:
    """Canonical complement of L^2: standard vectors at its non-pivot
    coordinates.  Spans a minimal generating set for nilpotent L."""
    return linalg.complement_in(L.derived_subalgebra(), L.full_space())


def direct_sum(a: LieAlgebra, b: LieAlgebra, name: str = "") -> LieAlgebra:
    if a.field != b.field:
        raise ShapeError("direct_sum over different fields")
    brackets: dict = {}
    for (i, j), entry in a.table.items():
        brackets[(i, j)] = dict(entry)
    off = a.dim
    for (i, j), entry in b.table.items():
        brackets[(i + off, j + off)] = {k + off: c for k, c in entry.items()}
    return LieAlgebra(a.field, a.dim + b.dim, brackets,
                      name=name or f"{a.name}+{b.name}".strip("+"))


def central_product(a: LieAlgebra, b: LieAlgebra,
                    pairs: Sequence, name: str = "") -> tuple:
    """Glue a and b along central elements: quotient of a (+) b by the span of
    (x_i, -y_i) for each (x_i, y_i) in pairs.  A bare int stands for that
    basis vector.  Returns (product, Hom from the direct sum onto it).
    """
    if a.field != b.field:
        raise ShapeError("central_product over different fields")
    f = a.field

    def _vec(alg: LieAlgebra, v):
        if isinstance(v, int):
            return alg.basis_vector(v)
        return tuple(f.coerce(c) for c in v)

    za, zb = a.center(), b.center()
    xs = [_vec(a, x) for x, _ in pairs]
    ys = [_vec(b, y) for _, y in pairs]
    for x in xs:
        if not za.contains(x):
            raise ShapeError("left gluing element is not central")
    for y in ys:
        if not zb.contains(y):
            raise ShapeError("right gluing element is not central")
    if linalg.span(f, a.dim, xs).dim != len(pairs) \
            or linalg.span(f, b.dim, ys).dim != len(pairs):
        raise ShapeError("gluing elements must be linearly independent")
    d = direct_sum(a, b)
    glue = [list(x) + [f.neg(c) for c in y] for x, y in zip(xs, ys)]
    ideal = linalg.span(f, d.dim, glue)
    prod, proj = d.quotient(ideal)
    if name:
        prod.name = name
    assert prod.dim == a.dim + b.dim - len(pairs)
    return prod, proj


def stem_decompose(L: LieAlgebra) -> StemDecomposition:
    """Split nilpotent L as T (+) A with A an abelian direct summand chosen
    inside the center, T a stem ideal containing L^2 (pivot-greedy rule)."""
    if not L.is_nilpotent:
        raise NotNilpotentError("stem decomposition needs a nilpotent algebra")
    f = L.field
    z = L.center()
    derived = L.derived_subalgebra()
    zl2 = linalg.subspace_intersect(z, derived)
    a_space = linalg.complement_in(zl2, z)
    t_space = linalg.extend_to_complement(derived, a_space)
    T = L.subalgebra_on(t_space)
    T.name = f"stem({L.name})" if L.name else ""
    A = LieAlgebra(f, a_space.dim, {}, name=f"A({a_space.dim})")
    d = direct_sum(T, A)
    cols = [list(row) for row in t_space.basis] + [list(row) for row in a_space.basis]
    iso_matrix = Matrix.from_rows(
        f, [[cols[c][r] for c in range(d.dim)] for r in range(L.dim)],
        ncols=d.dim)
    iso = Hom(d, L, iso_matrix)
    # stem property: Z(T) inside T^2 (= L^2)
    zt = T.center()
    t_derived = T.derived_subalgebra()
    if not t_derived.contains_subspace(zt):
        raise ShapeError("stem decomposition failed the stem check")
    return StemDecomposition(T=T, A=A, t_space=t_space, a_space=a_space, iso=iso)


def abelian(field: FieldSpec, n: int, name: str = "") -> LieAlgebra:
    return LieAlgebra(field, n, {}, name=name or f"A({n})")
