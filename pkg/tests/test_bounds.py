import pytest

from schurlab.bounds import (
    attains_e2,
    bound_e1,
    bound_e2,
    check_theorem_2_1,
    check_theorem_2_2,
    check_theorem_2_5,
    check_theorem_2_6,
    check_theorem_3_7,
    classification_sweep,
    gamma_images,
    scan_theorem_2_9,
)
from schurlab.catalog import abelian, catalog_get, heisenberg
from schurlab.errors import NotCentral
from schurlab.linalg import Subspace


def test_bound_values():
    assert bound_e1(3, 1) == 2
    assert bound_e1(4, 2) == 3
    assert bound_e1(5, 2) == 6
    assert bound_e2(3, 1, 2) == 2
    assert bound_e2(5, 2, 2) == 6
    assert bound_e2(6, 3, 2) == 8
    assert bound_e2(4, 2, 3) == 3
    assert bound_e2(5, 3, 4) == 4
    assert bound_e2(5, 3, 3) == 4
    # codimension-2 derived subalgebra collapses the bound to n - 1
    for n in range(4, 10):
        for c in range(2, n):
            assert bound_e2(n, n - 2, c) == n - 1


def test_bound_validation():
    with pytest.raises(ValueError):
        bound_e1(3, 0)
    with pytest.raises(ValueError):
        bound_e1(3, 2)
    with pytest.raises(ValueError):
        bound_e2(5, 2, 1)
    with pytest.raises(ValueError):
        bound_e2(5, 2, 5)


def test_refined_bound_never_exceeds_first():
    for n in range(3, 13):
        for m in range(1, n - 1):
            assert bound_e2(n, m, 2) == bound_e1(n, m)
            for c in range(2, n):
                assert bound_e2(n, m, c) <= bound_e1(n, m)


def test_equality_characterization():
    """bound_e2 = bound_e1 exactly when c = 2 or n - m <= 3.

    For n - m <= 3 every subtracted term n - m - i with i in
    2..min(n-m,c) vanishes or the range is empty, so the bounds agree
    at any class; (4,2,3), (5,2,3) and (5,3,3) are the smallest
    equal-at-class-3 cases.
    """
    for n in range(3, 13):
        for m in range(1, n - 1):
            for c in range(2, n):
                equal = bound_e2(n, m, c) == bound_e1(n, m)
                assert equal == (c == 2 or n - m <= 3), (n, m, c)
    assert bound_e2(4, 2, 3) == bound_e1(4, 2)
    assert bound_e2(5, 2, 3) == bound_e1(5, 2)
    assert bound_e2(6, 2, 3) < bound_e1(6, 2)


def test_attains():
    assert attains_e2(catalog_get("L5_8"))
    assert attains_e2(catalog_get("L6_26"))
    assert attains_e2(heisenberg(1))
    assert not attains_e2(heisenberg(2))
    assert not attains_e2(catalog_get("L5_7"))
    with pytest.raises(ValueError):
        attains_e2(abelian(3))


def test_gamma_images_values():
    images = gamma_images(catalog_get("L4_3"))
    assert images.dim_im_gamma_L == 0
    assert images.dim_im_gamma_prime2 == 0
    assert images.dim_im_gamma_prime3 == 1
    images = gamma_images(heisenberg(2))
    assert images.dim_im_gamma_L == 4
    assert images.dim_im_gamma_prime2 == 4
    assert images.dim_im_gamma_prime3 is None
    images = gamma_images(abelian(4))
    assert images.dim_im_gamma_L == 0
    assert images.dim_im_gamma_prime3 is None


def test_theorem_2_1_on_catalog(catalog6):
    for name, algebra in catalog6:
        center = algebra.center()
        report = check_theorem_2_1(algebra, center)
        assert report.holds, name
        for row in center.rows:
            line = Subspace([row], algebra.dim)
            assert check_theorem_2_1(algebra, line).holds, name
    with pytest.raises(NotCentral):
        check_theorem_2_1(
            catalog_get("L5_7"), Subspace([[1, 0, 0, 0, 0]], 5)
        )


def test_theorem_2_2_applicability(catalog6):
    applicable = []
    for name, algebra in catalog6:
        rep = algebra.series()
        if rep.derived_dim == algebra.dim - 2 and algebra.dim >= 4:
            report = check_theorem_2_2(algebra)
            assert report.holds, name
            applicable.append(name)
    assert applicable == ["L4_3", "L5_7", "L5_9"]
    with pytest.raises(ValueError):
        check_theorem_2_2(heisenberg(1))
    with pytest.raises(ValueError):
        check_theorem_2_2(heisenberg(2))


def test_theorem_2_5_and_2_6(catalog6):
    for name, algebra in catalog6:
        rep = algebra.series()
        if rep.derived_dim:
            assert check_theorem_2_5(algebra).holds, name
        if rep.nilpotency_class == 3:
            assert check_theorem_2_6(algebra).holds, name
    with pytest.raises(ValueError):
        check_theorem_2_5(abelian(2))
    with pytest.raises(ValueError):
        check_theorem_2_6(catalog_get("L5_7"))


def test_theorem_2_5_tight_for_heisenberg():
    report = check_theorem_2_5(heisenberg(2))
    assert report.lhs == report.rhs == 10


def test_scan_2_9():
    report = scan_theorem_2_9(6)
    assert report.holds
    assert report.witnesses["violations"] == []
    assert report.witnesses["class_two_matches"] == ["L6_26"]
    assert "L5_9" in report.witnesses["checked"]


def test_theorem_3_7_witnesses():
    report = check_theorem_3_7(6)
    assert report.holds
    assert report.witnesses["equality_witnesses"] == [
        "L4_3",
        "L5_7",
        "L5_9",
    ]


def test_sweep_small():
    rows3 = classification_sweep(3)
    assert [r.name for r in rows3 if r.attains_e2] == ["H(1)"]
    rows4 = classification_sweep(4)
    assert [r.name for r in rows4 if r.attains_e2] == [
        "H(1)",
        "H(1)+A(1)",
    ]
    by_name = {r.name: r for r in rows4}
    assert by_name["A(4)"].bound_e2 is None
    assert not by_name["A(4)"].attains_e2
    assert by_name["L4_3"].dim_M == 2
    assert by_name["L4_3"].bound_e2 == 3


def test_sweep_deterministic_and_parallel():
    sequential = classification_sweep(5)
    again = classification_sweep(5)
    assert sequential == again
    parallel = classification_sweep(5, parallel=True)
    assert parallel == sequential
