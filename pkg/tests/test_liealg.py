from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from schurlab.errors import (
    JacobiViolation,
    NotAnIdeal,
    NotNilpotent,
    SingularMatrix,
)
from schurlab.catalog import abelian, catalog_get, heisenberg
from schurlab.liealg import LieAlgebra, direct_sum
from schurlab.linalg import Subspace

from oracles import random_basis_change


def test_constructor_normalizes_and_rejects():
    a = LieAlgebra(3, {(1, 0): {2: -1}})
    b = LieAlgebra(3, {(0, 1): {2: 1}})
    assert a.sc == b.sc
    with pytest.raises(ValueError):
        LieAlgebra(3, {(0, 3): {1: 1}})
    with pytest.raises(ValueError):
        LieAlgebra(3, {(0, 0): {1: 1}})
    with pytest.raises(ValueError):
        LieAlgebra(3, {(0, 1): {2: 1}, (1, 0): {2: 1}})
    # consistent duplicate is fine
    LieAlgebra(3, {(0, 1): {2: 1}, (1, 0): {2: -1}})


vectors5 = st.lists(
    st.fractions(min_value=-2, max_value=2, max_denominator=2),
    min_size=5,
    max_size=5,
)


@given(vectors5, vectors5, vectors5)
@settings(max_examples=60, deadline=None)
def test_bracket_bilinear_antisymmetric(u, v, w):
    L = catalog_get("L5_9")
    assert L.bracket(u, u) == L.zero()
    assert L.bracket(u, v) == tuple(-x for x in L.bracket(v, u))
    left = L.bracket([a + b for a, b in zip(u, v)], w)
    split = tuple(
        a + b for a, b in zip(L.bracket(u, w), L.bracket(v, w))
    )
    assert left == split


@given(vectors5, vectors5, vectors5)
@settings(max_examples=40, deadline=None)
def test_jacobi_identity_on_elements(u, v, w):
    L = catalog_get("H(2)")
    total = [
        a + b + c
        for a, b, c in zip(
            L.bracket(L.bracket(u, v), w),
            L.bracket(L.bracket(v, w), u),
            L.bracket(L.bracket(w, u), v),
        )
    ]
    assert all(x == 0 for x in total)


def test_validate_catches_violation():
    # both (1,2,3) and (1,2,4) genuinely fail Jacobi here; the checker
    # reports the first in lexicographic order
    L = LieAlgebra(
        4, {(0, 1): {2: 1}, (0, 2): {3: 1}, (1, 3): {2: 1}}
    )
    with pytest.raises(JacobiViolation) as info:
        L.validate()
    err = info.value
    assert err.triple in ((1, 2, 3), (1, 2, 4))
    # independent hand expansion of the (1,2,4) Jacobiator:
    # [[x1,x2],x4] + [[x2,x4],x1] + [[x4,x1],x2] = 0 + [x3,x1] + 0 = -x4
    i, j, k = (x - 1 for x in (1, 2, 4))
    jac = [
        a + b + c
        for a, b, c in zip(
            L.bracket(L.bracket(L.basis_vector(i), L.basis_vector(j)), L.basis_vector(k)),
            L.bracket(L.bracket(L.basis_vector(j), L.basis_vector(k)), L.basis_vector(i)),
            L.bracket(L.bracket(L.basis_vector(k), L.basis_vector(i)), L.basis_vector(j)),
        )
    ]
    assert jac == [0, 0, 0, -1]
    # and the reported residual matches the true Jacobiator of the
    # reported triple
    ri, rj, rk = (x - 1 for x in err.triple)
    true_residual = [
        a + b + c
        for a, b, c in zip(
            L.bracket(L.bracket(L.basis_vector(ri), L.basis_vector(rj)), L.basis_vector(rk)),
            L.bracket(L.bracket(L.basis_vector(rj), L.basis_vector(rk)), L.basis_vector(ri)),
            L.bracket(L.bracket(L.basis_vector(rk), L.basis_vector(ri)), L.basis_vector(rj)),
        )
    ]
    assert list(err.residual) == true_residual
    assert any(true_residual)


def test_series_reports():
    rep = catalog_get("L5_7").series()
    assert rep.gamma_dims == (5, 3, 2, 1, 0)
    assert rep.derived_dim == 3
    assert rep.nilpotency_class == 4
    assert rep.min_generators == 2
    rep = heisenberg(2).series()
    assert rep.gamma_dims == (5, 1, 0)
    assert rep.center_dim == 1
    assert rep.min_generators == 4
    rep = abelian(3).series()
    assert rep.gamma_dims == (3, 0)
    assert rep.nilpotency_class == 1
    assert rep.center_dim == 3


def test_not_nilpotent():
    L = LieAlgebra(2, {(0, 1): {1: 1}})
    with pytest.raises(NotNilpotent):
        L.lower_central_series()


def test_center_and_derived():
    L = catalog_get("L6_26")
    assert L.center() == L.derived_subspace()
    assert L.center().dim == 3


def test_quotient_heisenberg_mod_center_is_abelian():
    L = heisenberg(2)
    q = L.quotient(L.center())
    assert q.algebra.dim == 4
    assert q.algebra.series().derived_dim == 0
    # projection and section compose to the identity on the quotient
    for t in range(4):
        unit = [Fraction(int(s == t)) for s in range(4)]
        assert list(q.project(q.lift(unit))) == unit


def test_quotient_requires_ideal():
    L = catalog_get("L5_7")
    not_ideal = Subspace([[1, 0, 0, 0, 0]], 5)
    with pytest.raises(NotAnIdeal):
        L.quotient(not_ideal)


def test_quotient_bracket_is_projected_bracket():
    L = catalog_get("L5_5")
    ideal = L.lower_central_series()[2]
    q = L.quotient(ideal)
    q.algebra.validate()
    for i in range(q.algebra.dim):
        for j in range(q.algebra.dim):
            ei = [Fraction(int(s == i)) for s in range(q.algebra.dim)]
            ej = [Fraction(int(s == j)) for s in range(q.algebra.dim)]
            lhs = q.algebra.bracket(ei, ej)
            rhs = q.project(L.bracket(q.lift(ei), q.lift(ej)))
            assert list(lhs) == list(rhs)


def test_direct_sum_series_adds():
    a = catalog_get("L5_8")
    b = abelian(2)
    s = direct_sum(a, b)
    assert s.name == "L5_8+A(2)"
    rep = s.series()
    assert rep.gamma_dims == (7, 2, 0)
    assert rep.center_dim == a.series().center_dim + 2
    s.validate()


def test_change_basis_keeps_invariants():
    import random

    L = catalog_get("L5_5")
    rng = random.Random(7)
    for _ in range(5):
        other = random_basis_change(L, rng)
        other.validate()
        assert other.series() == L.series()


def test_change_basis_rejects_singular():
    L = abelian(2)
    with pytest.raises(SingularMatrix):
        L.change_basis([[1, 1], [1, 1]])
    with pytest.raises(ValueError):
        L.change_basis([[1, 0]])
