from fractions import Fraction

import pytest

from schurlab.catalog import (
    abelian,
    catalog_get,
    enumerate_catalog,
    heisenberg,
    verify_catalog,
)
from schurlab.dsl import parse_presentation
from schurlab.errors import (
    MissingParameter,
    ResourceCapExceeded,
    UnknownName,
)


def test_name_forms():
    assert catalog_get("A4").dim == 4
    assert catalog_get("A(4)").name == "A(4)"
    assert catalog_get("H2").dim == 5
    assert catalog_get("H(2)").name == "H(2)"
    assert catalog_get("L5_7").name == "L5_7"
    total = catalog_get("H(1)+A(2)")
    assert total.dim == 5 and total.name == "H(1)+A(2)"
    assert catalog_get("L6_22(1/2)").name == "L6_22(1/2)"
    assert catalog_get("L6_22", params={"eps": Fraction(-1)}).name == "L6_22(-1)"


def test_unknown_and_missing():
    with pytest.raises(UnknownName):
        catalog_get("NOPE")
    with pytest.raises(UnknownName):
        catalog_get("L9_99")
    with pytest.raises(UnknownName):
        catalog_get("L5_7(3)")
    with pytest.raises(MissingParameter):
        catalog_get("L6_22")
    with pytest.raises(UnknownName):
        catalog_get("L6_22(one)")
    with pytest.raises(UnknownName):
        catalog_get("")


def test_constructors():
    h = heisenberg(3)
    assert h.dim == 7
    rep = h.series()
    assert rep.derived_dim == 1 and rep.nilpotency_class == 2
    assert abelian(0).dim == 0
    with pytest.raises(ValueError):
        heisenberg(0)
    with pytest.raises(ValueError):
        abelian(-1)


def test_heisenberg_matches_presentation_text():
    text = "algebra H dim 3\n[x1, x2] = x3\n"
    assert parse_presentation(text).sc == heisenberg(1).sc


def test_catalog_entries_validate(catalog6):
    for name, algebra in catalog6:
        algebra.validate()
        assert algebra.name == name


def test_enumerate_shape_and_determinism(catalog6):
    names = [name for name, _ in catalog6]
    assert len(names) == len(set(names))
    assert names == [name for name, _ in enumerate_catalog(6)]
    assert names[:6] == [f"A({k})" for k in range(1, 7)]
    assert "L6_22(1/2)" in names
    assert "L5_8+A(1)" in names
    assert all(algebra.dim <= 6 for _, algebra in catalog6)


def test_enumerate_respects_eps_samples():
    entries = enumerate_catalog(6, eps_samples=(Fraction(3),))
    names = [name for name, _ in entries]
    assert "L6_22(3)" in names
    assert "L6_22(0)" not in names


def test_enumerate_caps():
    with pytest.raises(ResourceCapExceeded):
        enumerate_catalog(9)
    with pytest.raises(ValueError):
        enumerate_catalog(0)
    assert all(a.dim <= 8 for _, a in enumerate_catalog(8))


def test_verify_catalog_runs():
    names = verify_catalog()
    assert "L5_8" in names and "L6_26" in names
