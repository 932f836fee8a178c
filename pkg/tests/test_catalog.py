"""Named algebra constructions, parameter validation, and the seeded
random sampler."""

import pytest
from fractions import Fraction

from liecap import GF2, GF3, GF5, QQ
from liecap.errors import FieldError, ScopeError
from liecap.catalog import (
    CATALOG,
    build,
    catalog_names,
    eps_values,
    random_gen_heisenberg,
    standard_instances,
)


# ----------------------------------------------------------------------
# construction
# ----------------------------------------------------------------------

def test_catalog_names_cover_expected_families():
    names = set(catalog_names())
    assert {"A", "H", "L4_3", "L5_5", "L5_7", "L5_8", "L6_10", "L6_13",
            "L6_22", "L6_7_2", "L27A", "L27B"} <= names


def test_heisenberg_rank_two_shape():
    H = build("H", QQ, m=2)
    assert H.dim == 5
    assert H.derived_subalgebra().basis == H.center().basis
    assert H.center().dim == 1


def test_six_dim_family_is_gen_heisenberg_over_gf3():
    L = build("L6_22", GF3, eps=1)
    assert L.dim == 6
    p = L.structural_profile()
    assert p.is_stem and p.gen_heisenberg_rank == 2


def test_dims_of_fixed_names():
    dims = {"L4_3": 4, "L5_5": 5, "L5_7": 5, "L5_8": 5,
            "L6_10": 6, "L6_13": 6, "L27A": 7, "L27B": 7}
    for name, d in dims.items():
        assert build(name, QQ).dim == d


def test_abelian_any_size():
    assert build("A", QQ, n=0).dim == 0
    assert build("A", GF5, n=6).table == {}


def test_instances_are_cached():
    assert build("L4_3", QQ) is build("L4_3", QQ)
    assert build("L6_22", QQ, eps=1) is build("L6_22", QQ, eps=1)


def test_names_embed_parameters():
    assert build("H", QQ, m=3).name == "H(3)"
    assert build("L6_22", QQ, eps=-1).name == "L6_22(eps=-1)"
    assert build("L6_7_2", GF2, eta=1).name == "L6_7_2(eta=1)"


# ----------------------------------------------------------------------
# characteristic guards
# ----------------------------------------------------------------------

def test_eps_family_refuses_characteristic_two():
    with pytest.raises(FieldError):
        build("L6_22", GF2, eps=1)


def test_eta_family_requires_characteristic_two():
    for f in (QQ, GF3, GF5):
        with pytest.raises(FieldError):
            build("L6_7_2", f, eta=0)


def test_eta_value_must_be_zero_or_the_witness():
    assert build("L6_7_2", GF2, eta=0).dim == 6
    assert build("L6_7_2", GF2, eta=1).dim == 6


# ----------------------------------------------------------------------
# parameter validation
# ----------------------------------------------------------------------

def test_unknown_name_rejected():
    with pytest.raises(ValueError):
        build("L9_99", QQ)


def test_missing_required_parameter_rejected():
    with pytest.raises(ValueError):
        build("H", QQ)
    with pytest.raises(ValueError):
        build("A", QQ)
    with pytest.raises(ValueError):
        build("L6_22", QQ)


def test_unexpected_parameter_rejected():
    with pytest.raises(ValueError):
        build("L4_3", QQ, n=1)
    with pytest.raises(ValueError):
        build("H", QQ, m=1, eps=0)


def test_parameter_ranges():
    with pytest.raises(ValueError):
        build("A", QQ, n=-1)
    with pytest.raises(ValueError):
        build("H", QQ, m=0)


# ----------------------------------------------------------------------
# parameter sweeps
# ----------------------------------------------------------------------

def test_eps_sweep_deduplicates_per_field():
    assert eps_values(QQ) == [0, 1, -1, 2]
    assert eps_values(GF3) == [0, 1, 2]
    assert eps_values(GF5) == [0, 1, 4, 2]


def test_standard_instances_counts_and_validity():
    expected = {QQ: 16, GF2: 14, GF3: 15, GF5: 16}
    for f, count in expected.items():
        instances = standard_instances(f)
        assert len(instances) == count
        names = [L.name for L in instances]
        assert len(set(names)) == count  # no duplicates
        for L in instances:
            assert L.validate().ok
            assert L.field == f


def test_standard_instances_respect_characteristic():
    for L in standard_instances(GF2):
        assert not L.name.startswith("L6_22")
    for L in standard_instances(QQ):
        assert not L.name.startswith("L6_7_2")


# ----------------------------------------------------------------------
# random generalized Heisenberg sampler
# ----------------------------------------------------------------------

def test_sampler_output_shape():
    L = random_gen_heisenberg(7, 2, GF2, seed=1)
    assert L.dim == 7
    assert L.derived_subalgebra().dim == 2
    assert L.derived_subalgebra().basis == L.center().basis
    assert L.validate().ok


def test_sampler_is_deterministic():
    a = random_gen_heisenberg(7, 2, GF2, seed=1)
    b = random_gen_heisenberg(7, 2, GF2, seed=1)
    assert a.same_table(b)


def test_sampler_varies_with_seed():
    tables = {tuple(sorted(
        (pair, tuple(sorted(entry.items())))
        for pair, entry in random_gen_heisenberg(7, 2, GF2, seed=s)
        .table.items()))
        for s in range(12)}
    assert len(tables) > 1


def test_sampler_scope_guards():
    with pytest.raises(ScopeError):
        random_gen_heisenberg(6, 2, GF2, seed=0)
    with pytest.raises(ScopeError):
        random_gen_heisenberg(7, 3, GF2, seed=0)
    with pytest.raises(ScopeError):
        random_gen_heisenberg(7, 2, QQ, seed=0)


def test_sampler_works_over_other_primes():
    L = random_gen_heisenberg(7, 2, GF5, seed=3)
    assert L.center().dim == 2
    p = L.structural_profile()
    assert p.is_stem and p.gen_heisenberg_rank == 2
