"""Multiplier, exterior square, and exterior center via free presentations.

The heavy lifting has an independent in-suite oracle: `commutator_full_route`
recomputes the commutator subspace from the full relation space without the
degree-truncation shortcut, and presentation variants 0/1/2 change the chosen
section, which the reported invariants must not see.
"""

import pytest
from fractions import Fraction

from liecap import GF2, GF3, GF5, QQ, span
from liecap.errors import NotIdealError, NotNilpotentError, ShapeError
from liecap.catalog import build
from liecap.liealg import LieAlgebra, abelian, direct_sum
from liecap.linalg import coordinate_subspace, zero_subspace
from liecap.schur import (
    commutator_full_route,
    epicenter_test_dd,
    exterior_center,
    exterior_square_dim,
    free_presentation,
    homology,
    is_capable,
    schur_multiplier_dim,
)

from oracles import brute_force_multiplier_dim_abelian


# ----------------------------------------------------------------------
# presentation shapes
# ----------------------------------------------------------------------

def test_abelian_presentation_has_all_quadratic_relations():
    for n in (2, 3, 4):
        A = abelian(QQ, n)
        pres = free_presentation(A)
        assert pres.dim_F == n + n * (n - 1) // 2
        # R is exactly the span of the non-generator coordinates
        expected = coordinate_subspace(QQ, pres.dim_F,
                                       range(n, pres.dim_F))
        assert pres.R.basis == expected.basis
        assert pres.RF.dim == 0
        assert pres.RcapF2.basis == pres.R.basis


def test_heisenberg_presentation_shape():
    pres = free_presentation(build("H", QQ, m=1))
    assert pres.dim_F == 5  # two generators, class cap 3
    assert pres.R.dim == 2
    assert pres.RF.dim == 0
    assert pres.RcapF2.basis == pres.R.basis


def test_chain_presentation_shape():
    pres = free_presentation(build("L4_3", QQ))
    assert pres.dim_F == 8  # two generators, class cap 4
    assert pres.R.dim == 4


def test_presentation_projection_is_a_section_pair():
    for f in (QQ, GF2):
        L = build("L5_5", f)
        pres = free_presentation(L)
        assert pres.pi.is_bracket_compatible()
        assert pres.pi.image().dim == L.dim
        assert pres.pi.kernel().basis == pres.R.basis
        # pi after the section is the identity on L
        for j in range(L.dim):
            e = L.basis_vector(j)
            assert pres.pi.apply(pres.section.apply(e)) == e


def test_presentation_is_cached_per_algebra():
    L = build("L5_8", QQ)
    assert free_presentation(L) is free_presentation(L)


def test_presentation_rejects_non_nilpotent():
    S = LieAlgebra(QQ, 2, {(0, 1): {1: Fraction(1)}})
    with pytest.raises(NotNilpotentError):
        free_presentation(S)


# ----------------------------------------------------------------------
# commutator subspace: fast route vs full-relation-space route
# ----------------------------------------------------------------------

def test_commutator_shortcut_agrees_with_full_route():
    cases = [
        build("H", QQ, m=1), build("H", QQ, m=2),
        build("L4_3", QQ), build("L5_5", QQ), build("L5_7", QQ),
        build("L5_8", QQ), build("L6_22", QQ, eps=1),
        build("H", GF2, m=2), build("L6_7_2", GF2, eta=1),
        build("L5_5", GF3), build("L6_22", GF5, eps=2),
        direct_sum(build("H", QQ, m=1), abelian(QQ, 2)),
    ]
    for L in cases:
        pres = free_presentation(L)
        full = commutator_full_route(pres.F, pres.R)
        assert full.basis == pres.RF.basis, L.name


def test_commutator_sits_inside_quadratic_relations():
    for L in (build("L4_3", QQ), build("L6_10", GF3),
              build("L6_13", QQ), build("L27A", GF2)):
        pres = free_presentation(L)
        assert pres.RcapF2.contains_subspace(pres.RF), L.name


# ----------------------------------------------------------------------
# multiplier dimensions
# ----------------------------------------------------------------------

def test_multiplier_abelian_matches_pair_count():
    for f in (QQ, GF2, GF5):
        for n in range(7):
            assert schur_multiplier_dim(abelian(f, n)) == \
                brute_force_multiplier_dim_abelian(n), (f, n)


def test_multiplier_of_six_dim_rank_two_family():
    assert schur_multiplier_dim(build("L6_22", QQ, eps=0)) == 8
    assert schur_multiplier_dim(build("L6_22", QQ, eps=1)) == 8
    assert schur_multiplier_dim(build("L6_7_2", GF2, eta=0)) == 8


def test_multiplier_known_small_values():
    assert schur_multiplier_dim(build("H", QQ, m=1)) == 2
    assert schur_multiplier_dim(build("H", QQ, m=2)) == 5
    assert schur_multiplier_dim(build("H", QQ, m=3)) == 14
    assert schur_multiplier_dim(build("L4_3", QQ)) == 2
    assert schur_multiplier_dim(abelian(QQ, 0)) == 0


# ----------------------------------------------------------------------
# exterior square
# ----------------------------------------------------------------------

def test_exterior_square_dims():
    assert exterior_square_dim(abelian(QQ, 2)) == 1
    assert exterior_square_dim(build("H", QQ, m=1)) == 3
    assert exterior_square_dim(build("L6_22", QQ, eps=1)) == 10


def test_exterior_square_identity_everywhere():
    for f in (QQ, GF2):
        for L in (build("H", f, m=2), build("L5_7", f),
                  build("L6_10", f), abelian(f, 4)):
            assert exterior_square_dim(L) == (
                schur_multiplier_dim(L) + L.derived_subalgebra().dim)


# ----------------------------------------------------------------------
# exterior center and capability
# ----------------------------------------------------------------------

def test_exterior_center_nonzero_for_larger_dim7_algebra():
    assert exterior_center(build("L27B", QQ)).dim > 0
    assert not is_capable(build("L27B", QQ))


def test_exterior_center_of_line_is_the_line():
    A = abelian(QQ, 1)
    assert exterior_center(A).dim == 1
    assert not is_capable(A)


def test_exterior_center_of_plane_is_zero():
    assert exterior_center(abelian(QQ, 2)).dim == 0
    assert is_capable(abelian(QQ, 2))


def test_exterior_center_of_genus_two_heisenberg_is_derived():
    H2 = build("H", QQ, m=2)
    zc = exterior_center(H2)
    assert zc.basis == H2.derived_subalgebra().basis
    assert zc.dim == 1


def test_capability_small_cases():
    assert is_capable(build("L5_8", QQ))
    assert is_capable(build("L27A", QQ))
    assert is_capable(build("L4_3", QQ))
    assert is_capable(build("L5_5", QQ))
    assert not is_capable(build("L6_10", QQ))
    assert not is_capable(build("H", QQ, m=2))


def test_exterior_center_is_central_and_in_derived():
    for L in (build("H", GF2, m=3), build("L27B", GF2),
              build("L6_10", QQ)):
        zc = exterior_center(L)
        assert L.center().contains_subspace(zc)
        assert L.derived_subalgebra().contains_subspace(zc)


# ----------------------------------------------------------------------
# section independence
# ----------------------------------------------------------------------

def test_invariants_do_not_depend_on_the_section():
    for f in (QQ, GF3):
        for name, kw in (("L5_8", {}), ("L6_10", {}), ("L6_22", {"eps": 1})):
            L = build(name, f, **kw)
            dims = {schur_multiplier_dim(L, variant=v) for v in (0, 1, 2)}
            assert len(dims) == 1, (f, name)
            centers = {exterior_center(L, variant=v).basis
                       for v in (0, 1, 2)}
            assert len(centers) == 1, (f, name)


def test_variants_produce_distinct_relation_spaces():
    # the sections genuinely differ; only the invariants coincide
    L = build("L6_10", QQ)
    sections = {free_presentation(L, variant=v).section.rows
                for v in (0, 1, 2)}
    assert len(sections) > 1


# ----------------------------------------------------------------------
# the homology report
# ----------------------------------------------------------------------

def test_homology_report_is_coherent_and_cached():
    L = build("L5_7", GF2)
    rep = homology(L)
    assert rep is homology(L)
    assert rep.dim_exterior_square == rep.dim_M + L.derived_subalgebra().dim
    assert rep.capable == rep.exterior_center.is_zero
    assert rep.to_json() == {
        "dim_multiplier": rep.dim_M,
        "dim_exterior_square": rep.dim_exterior_square,
        "dim_exterior_center": rep.exterior_center.dim,
        "capable": rep.capable,
    }


def test_homology_of_zero_algebra():
    rep = homology(abelian(QQ, 0))
    assert rep.dim_M == 0 and rep.dim_exterior_square == 0
    assert rep.capable  # the zero algebra is its own central quotient


# ----------------------------------------------------------------------
# central-ideal bound
# ----------------------------------------------------------------------

def test_bound_equality_at_the_exterior_center():
    L = build("L27B", QQ)
    dd = epicenter_test_dd(L, exterior_center(L))
    assert dd.contained
    assert dd.lhs == dd.rhs
    assert dd.consistent


def test_bound_strict_for_capable_heisenberg():
    L = build("H", QQ, m=1)
    dd = epicenter_test_dd(L, L.center())
    assert dd.lhs == 2
    # the quotient is the plane, whose multiplier is 1; the overlap with
    # the derived line is 1
    assert dd.rhs == 0
    assert not dd.contained
    assert dd.consistent


def test_bound_trivial_on_zero_ideal():
    L = build("L5_5", GF2)
    dd = epicenter_test_dd(L, zero_subspace(GF2, 5))
    assert dd.lhs == dd.rhs and dd.contained and dd.consistent


def test_bound_rejects_wrong_ambient():
    L = build("L4_3", QQ)
    with pytest.raises(ShapeError):
        epicenter_test_dd(L, zero_subspace(QQ, 3))


def test_bound_rejects_non_central_ideal():
    L = build("L4_3", QQ)
    with pytest.raises(NotIdealError):
        epicenter_test_dd(L, span(QQ, 4, [[0, 0, 1, 0]]))


def test_bound_holds_on_all_center_lines_of_catalog_sample():
    for f in (QQ, GF2):
        for name in ("L5_7", "L6_13", "L27A"):
            L = build(name, f)
            for row in L.center().basis:
                dd = epicenter_test_dd(L, span(f, L.dim, [row]))
                assert dd.consistent, (f, name, row)
