"""Exact linear algebra: echelon forms, subspaces, and the operations the
homology computations rely on."""

import itertools
import random
from fractions import Fraction

import pytest

from liecap import GF2, GF3, GF5, QQ, Matrix, Subspace, kernel, span
from liecap.errors import ShapeError
from liecap.linalg import (
    complement_in,
    coordinate_subspace,
    extend_to_complement,
    full_subspace,
    reduce_rows,
    solve_right_inverse,
    span_is_equal,
    subspace_intersect,
    subspace_sum,
    zero_subspace,
)


def _enumerate(sub):
    """All vectors of a subspace over a finite field (brute-force oracle)."""
    f = sub.field
    vecs = set()
    for coeffs in itertools.product(list(f.elements()), repeat=sub.dim):
        v = [f.zero] * sub.ambient_dim
        for c, row in zip(coeffs, sub.basis):
            for k, x in enumerate(row):
                v[k] = f.add(v[k], f.mul(c, x))
        vecs.add(tuple(v))
    return vecs


def _random_subspace(f, n, rng, max_rows=3):
    rows = [[f.random_scalar(rng) for _ in range(n)]
            for _ in range(rng.randrange(max_rows + 1))]
    return span(f, n, rows)


# ----------------------------------------------------------------------
# echelon form
# ----------------------------------------------------------------------

def test_rref_collapses_dependent_rows_over_q():
    s = span(QQ, 2, [[2, 4], [1, 2]])
    assert s.dim == 1
    assert s.basis == ((1, 2),)


def test_rref_identity_fixed_point():
    rows = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    s = span(QQ, 3, rows)
    assert s.dim == 3
    assert s.basis == ((1, 0, 0), (0, 1, 0), (0, 0, 1))


def test_rref_gf2_full_rank():
    # [[1,1],[1,0]] over GF(2): row-reduce by hand — r2 := r1+r2 gives
    # [[1,1],[0,1]], then r1 := r1+r2 gives the identity.
    s = span(GF2, 2, [[1, 1], [1, 0]])
    assert s.dim == 2
    assert s.basis == ((1, 0), (0, 1))


def test_rref_canonical_under_row_shuffle():
    rng = random.Random(7)
    for f in (QQ, GF2, GF3, GF5):
        for trial in range(20):
            rows = [[f.random_scalar(rng) for _ in range(4)]
                    for _ in range(3)]
            ref = span(f, 4, rows)
            shuffled = rows[:]
            rng.shuffle(shuffled)
            scaled = []
            for row in shuffled:
                c = f.random_scalar(rng, nonzero=True)
                scaled.append([f.mul(c, x) for x in row])
            assert span(f, 4, scaled).basis == ref.basis


def test_membership_matches_enumeration_gf3():
    rng = random.Random(3)
    for trial in range(10):
        s = _random_subspace(GF3, 3, rng)
        vecs = _enumerate(s)
        for v in itertools.product(range(3), repeat=3):
            assert s.contains(v) == (v in vecs)


def test_coordinates_reconstruct_vector():
    rng = random.Random(11)
    for f in (QQ, GF5):
        for trial in range(10):
            s = _random_subspace(f, 4, rng)
            if s.dim == 0:
                continue
            coeffs = [f.random_scalar(rng) for _ in range(s.dim)]
            v = [f.zero] * 4
            for c, row in zip(coeffs, s.basis):
                for k, x in enumerate(row):
                    v[k] = f.add(v[k], f.mul(c, x))
            assert s.coordinates(v) == tuple(coeffs)


def test_coordinates_rejects_outside_vector():
    s = span(QQ, 3, [[1, 0, 0]])
    with pytest.raises(ShapeError):
        s.coordinates([0, 1, 0])


# ----------------------------------------------------------------------
# kernel
# ----------------------------------------------------------------------

def test_kernel_of_rank_one_row():
    k = kernel(Matrix.from_rows(QQ, [[1, 0, -1]]))
    assert k.basis == ((1, 0, 1), (0, 1, 0))


def test_kernel_of_invertible_matrix_is_zero():
    k = kernel(Matrix.from_rows(QQ, [[1, 2], [3, 4]]))
    assert k.dim == 0


def test_kernel_gf2_matches_enumeration():
    m = Matrix.from_rows(GF2, [[1, 1]])
    k = kernel(m)
    assert k.basis == ((1, 1),)
    # enumerate GF(2)^2: exactly (0,0) and (1,1) die
    dead = {v for v in itertools.product(range(2), repeat=2)
            if all(c == 0 for c in m.apply(v))}
    assert dead == {(0, 0), (1, 1)}


def test_kernel_vectors_actually_die():
    rng = random.Random(17)
    for f in (QQ, GF2, GF3):
        for trial in range(10):
            m = Matrix.from_rows(
                f, [[f.random_scalar(rng) for _ in range(5)]
                    for _ in range(3)])
            k = kernel(m)
            assert k.dim >= 2  # rank <= 3 in ambient dim 5
            for row in k.basis:
                assert all(c == f.zero for c in m.apply(row))


# ----------------------------------------------------------------------
# sum and intersection
# ----------------------------------------------------------------------

def test_sum_of_coordinate_lines():
    a = span(QQ, 3, [[1, 0, 0]])
    b = span(QQ, 3, [[0, 1, 0]])
    s = subspace_sum(a, b)
    assert s.basis == ((1, 0, 0), (0, 1, 0))


def test_sum_with_zero_is_identity():
    v = span(GF3, 4, [[1, 2, 0, 1], [0, 0, 1, 1]])
    assert subspace_sum(v, zero_subspace(GF3, 4)).basis == v.basis


def test_sum_of_independent_lines_is_plane():
    s = subspace_sum(span(QQ, 2, [[1, 1]]), span(QQ, 2, [[1, -1]]))
    assert s.dim == 2  # stacked matrix has rank 2


def test_intersection_with_coordinate_plane():
    a = span(QQ, 3, [[1, 0, 0], [0, 1, 0]])
    b = span(QQ, 3, [[1, 1, 0]])
    assert subspace_intersect(a, b).basis == ((1, 1, 0),)


def test_intersection_idempotent():
    v = span(GF5, 4, [[1, 2, 3, 4], [0, 1, 0, 2]])
    assert subspace_intersect(v, v).basis == v.basis


def test_intersection_gf3_matches_enumeration():
    a = span(GF3, 2, [[1, 0], [0, 1]])
    b = span(GF3, 2, [[1, 1]])
    got = subspace_intersect(a, b)
    assert got.basis == ((1, 1),)
    assert _enumerate(got) == _enumerate(a) & _enumerate(b)


def test_intersection_random_against_enumeration():
    rng = random.Random(23)
    for trial in range(15):
        a = _random_subspace(GF2, 4, rng)
        b = _random_subspace(GF2, 4, rng)
        got = _enumerate(subspace_intersect(a, b))
        assert got == _enumerate(a) & _enumerate(b)


def test_dimension_formula_sum_intersection():
    rng = random.Random(29)
    for f in (QQ, GF3):
        for trial in range(15):
            a = _random_subspace(f, 5, rng)
            b = _random_subspace(f, 5, rng)
            assert (subspace_sum(a, b).dim + subspace_intersect(a, b).dim
                    == a.dim + b.dim)


# ----------------------------------------------------------------------
# complements
# ----------------------------------------------------------------------

def test_complement_of_coordinate_line():
    amb = full_subspace(QQ, 2)
    c = complement_in(span(QQ, 2, [[1, 0]]), amb)
    assert c.basis == ((0, 1),)


def test_complement_of_full_space_is_zero():
    v = span(GF2, 3, [[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    assert complement_in(v, v).dim == 0


def test_complement_picks_non_pivot_coordinates():
    c = complement_in(span(QQ, 3, [[1, 1, 0]]), full_subspace(QQ, 3))
    assert c.basis == ((0, 1, 0), (0, 0, 1))


def test_complement_gives_direct_sum():
    rng = random.Random(31)
    for f in (QQ, GF5):
        for trial in range(10):
            amb = full_subspace(f, 4)
            s = _random_subspace(f, 4, rng)
            c = complement_in(s, amb)
            assert s.dim + c.dim == 4
            assert subspace_intersect(s, c).dim == 0


def test_extend_to_complement_disjoint_and_covering():
    rng = random.Random(37)
    for trial in range(10):
        seed = _random_subspace(GF3, 4, rng, max_rows=2)
        avoid = _random_subspace(GF3, 4, rng, max_rows=2)
        if subspace_intersect(seed, avoid).dim != 0:
            continue
        ext = extend_to_complement(seed, avoid)
        assert ext.contains_subspace(seed)
        assert subspace_intersect(ext, avoid).dim == 0
        assert ext.dim + avoid.dim == 4


# ----------------------------------------------------------------------
# reduction helpers
# ----------------------------------------------------------------------

def test_reduce_is_zero_exactly_on_members():
    rng = random.Random(41)
    s = _random_subspace(GF3, 4, rng)
    for v in itertools.product(range(3), repeat=4):
        red = s.reduce(v)
        assert (all(c == 0 for c in red)) == s.contains(v)


def test_reduce_rows_matches_single_reduce():
    rng = random.Random(43)
    for f in (QQ, GF2, GF5):
        s = _random_subspace(f, 5, rng)
        rows = [[f.random_scalar(rng) for _ in range(5)] for _ in range(8)]
        batch = reduce_rows(s, rows)
        assert [tuple(r) for r in batch] == [s.reduce(r) for r in rows]


def test_coordinate_subspace_shape():
    s = coordinate_subspace(QQ, 4, [1, 3])
    assert s.basis == ((0, 1, 0, 0), (0, 0, 0, 1))


def test_span_is_equal_ignores_presentation():
    a = span(QQ, 3, [[1, 1, 0], [0, 0, 1]])
    b = span(QQ, 3, [[2, 2, 2], [0, 0, -1]])
    assert span_is_equal(a, b)
    assert not span_is_equal(a, span(QQ, 3, [[1, 0, 0]]))


def test_contains_subspace():
    big = span(QQ, 3, [[1, 0, 0], [0, 1, 0]])
    small = span(QQ, 3, [[1, 1, 0]])
    assert big.contains_subspace(small)
    assert not small.contains_subspace(big)


# ----------------------------------------------------------------------
# right inverse (sections of surjective maps)
# ----------------------------------------------------------------------

def test_right_inverse_on_surjective_maps():
    rng = random.Random(47)
    for f in (QQ, GF2, GF3):
        for trial in range(10):
            rows = [[f.random_scalar(rng) for _ in range(5)]
                    for _ in range(3)]
            m = Matrix.from_rows(f, rows)
            if span(f, 5, rows).dim < 3:
                continue  # row rank 3 <=> surjective onto f^3
            sec = solve_right_inverse(m)
            assert sec.nrows == 5 and sec.ncols == 3
            for j in range(3):
                e = [f.one if i == j else f.zero for i in range(3)]
                assert m.apply(sec.apply(e)) == tuple(e)


def test_right_inverse_requires_surjectivity():
    m = Matrix.from_rows(QQ, [[1, 0], [2, 0]])  # rank 1, target dim 2
    with pytest.raises(ShapeError):
        solve_right_inverse(m)


# ----------------------------------------------------------------------
# mixed-field guards
# ----------------------------------------------------------------------

def test_operations_reject_mixed_fields():
    a = span(QQ, 2, [[1, 0]])
    b = span(GF2, 2, [[1, 0]])
    with pytest.raises(ShapeError):
        subspace_sum(a, b)
    with pytest.raises(ShapeError):
        subspace_intersect(a, b)


def test_operations_reject_mixed_ambient_dims():
    a = span(QQ, 2, [[1, 0]])
    b = span(QQ, 3, [[1, 0, 0]])
    with pytest.raises(ShapeError):
        subspace_sum(a, b)
