"""Free nilpotent Lie algebras on Hall-tree bases, with bracket rewriting.

Hall trees are nested tuples: a leaf is a generator index, a node is a pair
(left, right).  The basis order is degree first, then a recursive structural
key (generator index at leaves, pair of child keys at nodes), which is a
fixed admissible order: degree-compatible and deterministic.

A tree t = (l, r) is a Hall tree when l and r are Hall trees with l < r and,
if r = (r1, r2) is a node, r1 <= l.  Arbitrary brackets of basis elements are
rewritten into the basis with antisymmetry and the Jacobi identity
([u,[a,b]] = [[u,a],b] + [a,[u,b]]); per-degree counts are asserted against
the Witt formula at construction, and validate() on the result is the
decisive correctness check exercised by the tests.

Structure constants are computed once over the integers per (d, c) and then
coerced into the requested field.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from typing import Sequence, Union

from . import liealg
from .errors import NotNilpotentError, ResourceError, ShapeError
from .field import FieldSpec
from .liealg import Hom, LieAlgebra
from .linalg import Matrix

HallTree = Union[int, tuple]

DEFAULT_MAX_DIM = 2000


# ======================================================================
# trees and their order
# ======================================================================

def tree_degree(t: HallTree) -> int:
    if isinstance(t, int):
        return 1
    return tree_degree(t[0]) + tree_degree(t[1])


def _struct_key(t: HallTree):
    if isinstance(t, int):
        return (0, t)
    return (1, _struct_key(t[0]), _struct_key(t[1]))


def tree_order_key(t: HallTree):
    """Total order on Hall trees: degree, then structural key."""
    return (tree_degree(t), _struct_key(t))


def tree_str(t: HallTree) -> str:
    """Printable bracket string, e.g. [[x1,x2],x1] (1-based)."""
    if isinstance(t, int):
        return f"x{t + 1}"
    return f"[{tree_str(t[0])},{tree_str(t[1])}]"


def _is_hall_pair(l: HallTree, r: HallTree) -> bool:
    """Given Hall trees l < r, is (l, r) itself a Hall tree?"""
    if isinstance(r, int):
        return True
    return tree_order_key(r[0]) <= tree_order_key(l)


# ======================================================================
# Witt dimensions
# ======================================================================

def _mobius(n: int) -> int:
    result = 1
    f = 2
    while f * f <= n:
        if n % f == 0:
            n //= f
            if n % f == 0:
                return 0
            result = -result
        f += 1
    if n > 1:
        result = -result
    return result


def witt_dimension(d: int, k: int) -> int:
    """Number of degree-k Hall basis elements on d generators:
    (1/k) sum_{m | k} mu(m) d^(k/m)."""
    total = 0
    for m in range(1, k + 1):
        if k % m == 0:
            total += _mobius(m) * d ** (k // m)
    assert total % k == 0
    return total // k


def free_dimension(d: int, c: int) -> int:
    return sum(witt_dimension(d, k) for k in range(1, c + 1))


# ======================================================================
# Hall basis and integer structure constants (cached per (d, c))
# ======================================================================

def hall_basis(d: int, c: int) -> list:
    """All Hall trees of degree <= c on d generators, in basis order."""
    if d < 1 or c < 1:
        raise ShapeError("hall_basis needs d >= 1, c >= 1")
    by_degree: dict = {1: list(range(d))}
    for k in range(2, c + 1):
        items = []
        for dl in range(1, k):
            dr = k - dl
            if dl > dr:
                continue
            for l in by_degree[dl]:
                kl = tree_order_key(l)
                for r in by_degree[dr]:
                    if dl == dr and not kl < tree_order_key(r):
                        continue
                    if _is_hall_pair(l, r):
                        items.append((l, r))
        items.sort(key=tree_order_key)
        expected = witt_dimension(d, k)
        assert len(items) == expected, \
            f"Hall count {len(items)} != Witt {expected} at degree {k}"
        by_degree[k] = items
    out = []
    for k in range(1, c + 1):
        out.extend(by_degree[k])
    return out


@lru_cache(maxsize=None)
def _hall_data(d: int, c: int):
    """(trees, index, degrees, children, table) with integer coefficients."""
    trees = tuple(hall_basis(d, c))
    index = {t: i for i, t in enumerate(trees)}
    degrees = tuple(tree_degree(t) for t in trees)
    children = tuple(
        None if isinstance(t, int) else (index[t[0]], index[t[1]])
        for t in trees
    )
    memo: dict = {}

    def nb(i: int, j: int) -> dict:
        """[e_i, e_j] as {k: int}, for i < j."""
        got = memo.get((i, j))
        if got is not None:
            return got
        if degrees[i] + degrees[j] > c:
            memo[(i, j)] = {}
            return {}
        ti, tj = trees[i], trees[j]
        if _is_hall_pair(ti, tj):
            out = {index[(ti, tj)]: 1}
            memo[(i, j)] = out
            return out
        a, b = children[j]  # tj = (a, b) with a > i in the tree order
        out: dict = {}
        for t_idx, cf in nb_signed(i, a).items():
            for k2, c2 in nb_signed(t_idx, b).items():
                v = out.get(k2, 0) + cf * c2
                if v:
                    out[k2] = v
                else:
                    out.pop(k2, None)
        for s_idx, cf in nb_signed(i, b).items():
            for k2, c2 in nb_signed(a, s_idx).items():
                v = out.get(k2, 0) + cf * c2
                if v:
                    out[k2] = v
                else:
                    out.pop(k2, None)
        memo[(i, j)] = out
        return out

    def nb_signed(i: int, j: int) -> dict:
        if i == j:
            return {}
        if i < j:
            return nb(i, j)
        return {k: -v for k, v in nb(j, i).items()}

    table: dict = {}
    n = len(trees)
    for i in range(n):
        for j in range(i + 1, n):
            if degrees[i] + degrees[j] > c:
                continue
            entry = nb(i, j)
            if entry:
                table[(i, j)] = entry
    return trees, index, degrees, children, table


# ======================================================================
# FreeNilpotent
# ======================================================================

@dataclass
class FreeNilpotent:
    """Free nilpotent Lie algebra F(d, c) over a field, on the Hall basis."""

    d: int
    c: int
    field: FieldSpec
    algebra: LieAlgebra
    trees: tuple
    degrees: tuple
    index: dict = dc_field(repr=False, default_factory=dict)

    @property
    def dim(self) -> int:
        return self.algebra.dim

    def degree_of(self, idx: int) -> int:
        return self.degrees[idx]

    def degree_start(self, k: int) -> int:
        """Index of the first basis element of degree k (dim if none)."""
        for i, dg in enumerate(self.degrees):
            if dg >= k:
                return i
        return self.dim

    @property
    def generator_indices(self) -> range:
        return range(self.d)

    @property
    def squared_indices(self) -> range:
        """Coordinate indices spanning F^2 (all degrees >= 2)."""
        return range(self.d, self.dim)


@lru_cache(maxsize=None)
def free_nilpotent(d: int, c: int, field: FieldSpec,
                   max_dim: int = DEFAULT_MAX_DIM) -> FreeNilpotent:
    if d < 1 or c < 1:
        raise ShapeError("free_nilpotent needs d >= 1, c >= 1")
    total = free_dimension(d, c)
    if total > max_dim:
        raise ResourceError(
            f"F({d},{c}) has dimension {total} > guard {max_dim}")
    trees, index, degrees, _children, ztable = _hall_data(d, c)
    brackets = {
        pair: {k: field.coerce(v) for k, v in entry.items()}
        for pair, entry in ztable.items()
    }
    alg = LieAlgebra(field, total, brackets, name=f"F({d},{c})")
    return FreeNilpotent(d=d, c=c, field=field, algebra=alg,
                         trees=trees, degrees=degrees, index=dict(index))


def normalize_bracket(F: FreeNilpotent, t1: HallTree, t2: HallTree) -> tuple:
    """[t1, t2] as a dense coordinate vector over the Hall basis."""
    i = F.index.get(t1)
    j = F.index.get(t2)
    if i is None or j is None:
        raise ShapeError("argument is not a Hall basis tree of this algebra")
    sv = F.algebra.bracket_basis(i, j)
    return F.algebra._densify(sv)


def extend_hom(F: FreeNilpotent, target: LieAlgebra,
               images: Sequence[Sequence]) -> Hom:
    """The unique homomorphism F -> target sending generator l to images[l].

    Requires target nilpotent of class <= c (then the assignment extends by
    evaluating each Hall tree in the target).
    """
    if len(images) != F.d:
        raise ShapeError(f"need {F.d} generator images, got {len(images)}")
    if target.field != F.field:
        raise ShapeError("field mismatch between free algebra and target")
    if not target.is_nilpotent or target.nilpotency_class() > F.c:
        raise NotNilpotentError(
            f"target must be nilpotent of class <= {F.c}")
    img: list = []
    for l in range(F.d):
        v = tuple(F.field.coerce(x) for x in images[l])
        if len(v) != target.dim:
            raise ShapeError("generator image has wrong length")
        img.append(v)
    for idx in range(F.d, F.dim):
        t = F.trees[idx]
        li, ri = F.index[t[0]], F.index[t[1]]
        img.append(target.bracket(img[li], img[ri]))
    matrix = Matrix.from_rows(
        F.field,
        [[img[k][r] for k in range(F.dim)] for r in range(target.dim)],
        ncols=F.dim)
    return Hom(F.algebra, target, matrix)
