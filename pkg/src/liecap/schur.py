"""Free presentations and the homological invariants built from them.

For a nilpotent algebra L of class c with d = dim(L/L^2), we present L as
F/R with F free nilpotent of class c+1 on d generators.  Truncating at
class c+1 is harmless: the discarded degrees lie inside [R, F] for any
full free presentation, so the multiplier quotient (R cap F^2)/[R,F], the
exterior square F^2/[R,F], and the exterior center are unchanged.

Two internal shortcuts, both load-bearing for speed and both covered by
dual-route tests against the direct definitions:

* [R, F] is spanned by brackets of R-basis vectors with the d generators
  alone.  (Induction on Hall-tree degree: [r,[u,v]] = [[r,u],v] + [u,[r,v]]
  and R is an ideal, so both terms reduce to lower-degree second factors.)
  Top-degree components of R-vectors are dropped first; they bracket to
  zero in the truncated cover.

* The exterior-center condition "z wedge x = 0 for all x in L" is tested
  against lifts of an L-basis only: [s(z), h] mod [R,F] depends only on
  the image of h in L.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .errors import NotIdealError, NotNilpotentError, ShapeError
from .freelie import FreeNilpotent, extend_hom, free_nilpotent
from .liealg import Hom, LieAlgebra, minimal_generators
from .linalg import (
    Matrix,
    Subspace,
    coordinate_subspace,
    is_zero_vector,
    kernel,
    reduce_rows,
    solve_right_inverse,
    span,
    subspace_intersect,
    zero_subspace,
)


@dataclass(frozen=True)
class Presentation:
    """L presented as F/R with the subspaces the invariants live in."""

    L: LieAlgebra
    F: FreeNilpotent
    pi: Hom
    section: Matrix
    R: Subspace
    RF: Subspace
    RcapF2: Subspace

    @property
    def dim_F(self) -> int:
        return self.F.dim

    @property
    def dim_F2(self) -> int:
        return self.F.dim - self.F.d


@dataclass(frozen=True)
class HomologyReport:
    dim_M: int
    dim_exterior_square: int
    exterior_center: Subspace
    capable: bool

    def to_json(self) -> dict:
        return {
            "dim_multiplier": self.dim_M,
            "dim_exterior_square": self.dim_exterior_square,
            "dim_exterior_center": self.exterior_center.dim,
            "capable": self.capable,
        }


class DDResult(NamedTuple):
    """Both sides of the central-ideal multiplier bound, plus containment
    of the ideal in the exterior center."""

    lhs: int
    rhs: int
    contained: bool

    @property
    def bound_holds(self) -> bool:
        return self.lhs >= self.rhs

    @property
    def consistent(self) -> bool:
        return self.bound_holds and (self.lhs == self.rhs) == self.contained


# ======================================================================
# free presentations
# ======================================================================

def _generator_images(L: LieAlgebra, variant: int) -> list:
    """Images in L for the free generators: a minimal generating basis,
    optionally reordered or shifted by derived-subalgebra vectors.  All
    variants generate the same algebra; they exist so tests can confirm
    the invariants do not depend on the choice."""
    base = [list(r) for r in minimal_generators(L).basis]
    if variant == 0:
        return base
    if variant == 1:
        return base[::-1]
    if variant == 2:
        shifted = []
        der = L.derived_subalgebra()
        for l, row in enumerate(base):
            if der.dim:
                extra = der.basis[l % der.dim]
                row = [L.field.add(a, b) for a, b in zip(row, extra)]
            shifted.append(row)
        return shifted
    raise ShapeError(f"unknown presentation variant {variant}")


def free_presentation(L: LieAlgebra, variant: int = 0) -> Presentation:
    if L.dim == 0:
        raise ShapeError("zero algebra has no free presentation here")
    if not L.is_nilpotent:
        raise NotNilpotentError("free presentation requires a nilpotent algebra")
    key = ("presentation", variant)
    cached = L._cache.get(key)
    if cached is not None:
        return cached

    cls = max(L.nilpotency_class(), 1)
    images = _generator_images(L, variant)
    d = len(images)
    F = free_nilpotent(d, cls + 1, L.field)
    pi = extend_hom(F, L, images)
    R = pi.kernel()
    assert R.dim == F.dim - L.dim, "kernel dimension mismatch: pi not surjective"
    section = solve_right_inverse(pi.matrix)

    RF = _commutator_with_free(F, R)
    F2 = coordinate_subspace(L.field, F.dim, range(F.d, F.dim))
    RcapF2 = subspace_intersect(R, F2)
    assert RcapF2.dim == (F.dim - F.d) - L.derived_subalgebra().dim

    pres = Presentation(L=L, F=F, pi=pi, section=section,
                        R=R, RF=RF, RcapF2=RcapF2)
    L._cache[key] = pres
    return pres


def _commutator_with_free(F: FreeNilpotent, R: Subspace) -> Subspace:
    """[R, F] inside the truncated cover, spanned over generators only."""
    alg = F.algebra
    top = F.degree_start(F.c)
    rows = []
    zeros = (alg.field.zero,) * (F.dim - top)
    for r in R.basis:
        trunc = tuple(r[:top]) + zeros
        if is_zero_vector(trunc):
            continue
        for l in range(F.d):
            w = alg.bracket(trunc, alg.basis_vector(l))
            if not is_zero_vector(w):
                rows.append(w)
    return span(alg.field, F.dim, rows)


def commutator_full_route(F: FreeNilpotent, R: Subspace) -> Subspace:
    """[R, F] spanned over the full Hall basis.  Slow; used as the
    cross-check oracle for _commutator_with_free."""
    return F.algebra.bracket_subspaces(R, F.algebra.full_space())


# ======================================================================
# invariants
# ======================================================================

def schur_multiplier_dim(L: LieAlgebra, variant: int = 0) -> int:
    if L.dim == 0:
        return 0
    pres = free_presentation(L, variant)
    return pres.RcapF2.dim - pres.RF.dim


def exterior_square_dim(L: LieAlgebra, variant: int = 0) -> int:
    if L.dim == 0:
        return 0
    pres = free_presentation(L, variant)
    return pres.dim_F2 - pres.RF.dim


def exterior_center(L: LieAlgebra, variant: int = 0) -> Subspace:
    """{z in L : z wedge x = 0 for every x}, as a subspace of L."""
    if L.dim == 0:
        return zero_subspace(L.field, 0)
    key = ("exterior_center", variant)
    cached = L._cache.get(key)
    if cached is not None:
        return cached
    pres = free_presentation(L, variant)
    zc = _exterior_center_from(pres)
    L._cache[key] = zc
    return zc


def _exterior_center_from(pres: Presentation) -> Subspace:
    L, F = pres.L, pres.F
    n = L.dim
    alg = F.algebra
    lifts = [tuple(pres.section.rows[r][k] for r in range(F.dim))
             for k in range(n)]
    pair_rows = []
    for t in range(n):
        for j in range(n):
            pair_rows.append(alg.bracket(lifts[t], lifts[j]))
    residuals = reduce_rows(pres.RF, pair_rows)
    # constraint matrix over z-coordinates: one row per (j, cover coord)
    zero = L.field.zero
    rows = []
    for j in range(n):
        for c in range(F.dim):
            row = [residuals[t * n + j][c] for t in range(n)]
            if any(x != zero for x in row):
                rows.append(row)
    if not rows:
        return L.full_space()
    m = Matrix.from_rows(L.field, rows, ncols=n)
    return kernel(m)


def is_capable(L: LieAlgebra, variant: int = 0) -> bool:
    """True exactly when the exterior center vanishes."""
    return exterior_center(L, variant).is_zero


def homology(L: LieAlgebra) -> HomologyReport:
    cached = L._cache.get("homology") if L.dim else None
    if cached is not None:
        return cached
    zc = exterior_center(L)
    report = HomologyReport(
        dim_M=schur_multiplier_dim(L),
        dim_exterior_square=exterior_square_dim(L),
        exterior_center=zc,
        capable=zc.is_zero,
    )
    if L.dim:
        L._cache["homology"] = report
    return report


def epicenter_test_dd(L: LieAlgebra, I: Subspace) -> DDResult:
    """Compare dim M(L) with dim M(L/I) - dim(L^2 cap I) for a central
    ideal I, and report whether I sits inside the exterior center."""
    if I.ambient_dim != L.dim:
        raise ShapeError("ideal lives in the wrong space")
    if not L.center().contains_subspace(I):
        raise NotIdealError("ideal is not central")
    lhs = schur_multiplier_dim(L)
    if I.is_zero:
        return DDResult(lhs=lhs, rhs=lhs, contained=True)
    quotient_alg, _ = L.quotient(I)
    overlap = subspace_intersect(L.derived_subalgebra(), I).dim
    rhs = schur_multiplier_dim(quotient_alg) - overlap
    contained = exterior_center(L).contains_subspace(I)
    return DDResult(lhs=lhs, rhs=rhs, contained=contained)
