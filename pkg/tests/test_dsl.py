from fractions import Fraction

import pytest

from schurlab.catalog import catalog_get
from schurlab.dsl import format_presentation, parse_combo, parse_presentation
from schurlab.errors import (
    DslSyntaxError,
    DuplicateInconsistentBracket,
    JacobiViolation,
    NotNilpotent,
    UnknownGenerator,
)

L5_7_TEXT = """\
# five generators, filiform
algebra L5_7 dim 5
[x1, x2] = x3
[x1, x3] = x4
[x1, x4] = x5
"""


def test_parse_known_presentation():
    algebra = parse_presentation(L5_7_TEXT)
    rep = algebra.series()
    assert (algebra.dim, rep.derived_dim, rep.nilpotency_class) == (5, 3, 4)
    assert algebra.sc == catalog_get("L5_7").sc
    assert algebra.name == "L5_7"


def test_parse_combos():
    assert parse_combo("0", 4) == {}
    assert parse_combo("x3", 4) == {2: Fraction(1)}
    assert parse_combo("2*x1 - x2", 4) == {0: Fraction(2), 1: Fraction(-1)}
    assert parse_combo("1/2*x1 + 3/4*x2 - x1", 4) == {
        0: Fraction(-1, 2),
        1: Fraction(3, 4),
    }
    assert parse_combo("x1 - x1", 4) == {}
    assert parse_combo("eps*x2", 4, params={"eps": Fraction(5)}) == {
        1: Fraction(5)
    }


def test_combo_errors():
    with pytest.raises(DslSyntaxError):
        parse_combo("-x1", 4)
    with pytest.raises(DslSyntaxError):
        parse_combo("", 4)
    with pytest.raises(DslSyntaxError):
        parse_combo("x1 +", 4)
    with pytest.raises(DslSyntaxError):
        parse_combo("2 x1", 4)
    with pytest.raises(DslSyntaxError):
        parse_combo("x1 x2", 4)
    with pytest.raises(DslSyntaxError):
        parse_combo("eps*x1", 4)
    with pytest.raises(UnknownGenerator):
        parse_combo("x9", 4)


def test_header_errors():
    with pytest.raises(DslSyntaxError) as info:
        parse_presentation("")
    assert info.value.line == 1
    with pytest.raises(DslSyntaxError):
        parse_presentation("algebra X\n")
    with pytest.raises(DslSyntaxError):
        parse_presentation("algebra X dim five\n")


def test_line_errors_carry_numbers():
    text = "algebra X dim 3\n\n# comment\n[x1, x2] == x3\n"
    with pytest.raises(DslSyntaxError) as info:
        parse_presentation(text)
    assert info.value.line == 4
    assert "line 4" in str(info.value)


def test_unknown_generator_in_bracket():
    with pytest.raises(UnknownGenerator):
        parse_presentation("algebra X dim 2\n[x1, x5] = x2\n")


def test_self_bracket():
    with pytest.raises(DslSyntaxError):
        parse_presentation("algebra X dim 3\n[x1, x1] = x2\n")
    # explicitly zero self-bracket is harmless
    algebra = parse_presentation("algebra X dim 3\n[x1, x1] = 0\n")
    assert algebra.sc == {}


def test_antisymmetric_normalization_and_duplicates():
    text = "algebra X dim 3\n[x2, x1] = x3\n"
    algebra = parse_presentation(text)
    assert algebra.sc == {(0, 1): {2: Fraction(-1)}}
    # "0 - x3" is not in the grammar: "0" is only valid alone
    with pytest.raises(DslSyntaxError):
        parse_presentation(
            "algebra X dim 3\n[x1, x2] = x3\n[x2, x1] = 0 - x3\n"
        )
    repeated = "algebra X dim 3\n[x1, x2] = x3\n[x1, x2] = x3\n"
    assert parse_presentation(repeated).sc == {(0, 1): {2: Fraction(1)}}
    inconsistent = "algebra X dim 3\n[x1, x2] = x3\n[x2, x1] = x3\n"
    with pytest.raises(DuplicateInconsistentBracket) as info:
        parse_presentation(inconsistent)
    assert info.value.line == 3


def test_parse_rejects_non_jacobi_and_non_nilpotent():
    bad = (
        "algebra B dim 4\n"
        "[x1, x2] = x3\n"
        "[x1, x3] = x4\n"
        "[x2, x4] = x3\n"
    )
    with pytest.raises(JacobiViolation):
        parse_presentation(bad)
    with pytest.raises(NotNilpotent):
        parse_presentation("algebra S dim 2\n[x1, x2] = x2\n")


def test_roundtrip_catalog(catalog6):
    for name, algebra in catalog6:
        text = format_presentation(algebra)
        again = parse_presentation(text)
        assert again.sc == algebra.sc, name
        assert again.dim == algebra.dim


def test_format_avoids_leading_signs():
    from schurlab.liealg import LieAlgebra

    L = LieAlgebra(
        5,
        {
            (0, 1): {2: Fraction(-1)},
            (0, 2): {3: Fraction(2), 4: Fraction(-1, 2)},
            (1, 2): {3: Fraction(-1), 4: Fraction(-1)},
        },
        name="mixed signs",
    )
    text = format_presentation(L)
    for line in text.splitlines()[1:]:
        rhs = line.split("=", 1)[1].strip()
        assert not rhs.startswith("-"), line
    again = parse_presentation(text)
    assert again.sc == L.sc
