"""Built-in catalog of small nilpotent algebras.

Families A(n) (abelian) and H(m) (Heisenberg, dimension 2m + 1) are
constructed directly.  The named algebras L4_3, L5_5, L5_7, L5_8,
L5_9, L6_22(eps), L6_26 are read from data/catalog.json, which follows
the standard classification of nilpotent Lie algebras in dimension at
most 6 over fields of characteristic not 2 (de Graaf); see the data
file for the exact citation and layout.

Every constructed algebra passes the Jacobi check, and each data-file
entry is gated against its asserted (n, m, c) triple; the entries that
also assert a multiplier dimension (L4_3, L5_8, L6_26) are verified
once per process on first use, so a wrong structure constant fails
loudly rather than producing quiet nonsense.

Names accepted by catalog_get: "A(4)" or "A4", "H(2)" or "H2",
"L5_7", "L6_22(1/2)", and direct sums joined with "+", for example
"H(1)+A(2)".
"""

import json
import re
from fractions import Fraction
from importlib import resources

from .dsl import parse_combo
from .errors import (
    InvariantMismatch,
    MissingParameter,
    ResourceCapExceeded,
    UnknownName,
)
from .liealg import LieAlgebra, direct_sum
from .multiplier import schur_multiplier_dim

MAX_ENUMERATION_DIM = 8
DEFAULT_EPS_SAMPLES = (
    Fraction(0),
    Fraction(1),
    Fraction(-1),
    Fraction(1, 2),
)

_raw_entries = None
_gates_done = False


def abelian(n: int) -> LieAlgebra:
    """A(n): the abelian algebra of dimension n >= 0."""
    if n < 0:
        raise ValueError("dimension must be nonnegative")
    return LieAlgebra(n, {}, name=f"A({n})")


def heisenberg(m: int) -> LieAlgebra:
    """H(m): dimension 2m + 1 with [x_{2i-1}, x_{2i}] = x_{2m+1}."""
    if m < 1:
        raise ValueError("requires m >= 1")
    brackets = {(2 * i, 2 * i + 1): {2 * m: 1} for i in range(m)}
    return LieAlgebra(2 * m + 1, brackets, name=f"H({m})")


def _entries():
    global _raw_entries
    if _raw_entries is None:
        text = (
            resources.files("schurlab")
            .joinpath("data/catalog.json")
            .read_text(encoding="utf-8")
        )
        _raw_entries = {e["name"]: e for e in json.loads(text)["entries"]}
    return _raw_entries


def _build_entry(entry, params) -> LieAlgebra:
    dim = entry["dim"]
    values = {}
    for parameter in entry["parameters"]:
        if parameter not in params:
            raise MissingParameter(
                f"{entry['name']} needs a value for {parameter!r}"
            )
        values[parameter] = Fraction(params[parameter])
    brackets = {}
    for i, j, combo in entry["brackets"]:
        brackets[(i - 1, j - 1)] = parse_combo(combo, dim, params=values)
    if entry["parameters"]:
        args = ",".join(str(values[p]) for p in entry["parameters"])
        name = f"{entry['name']}({args})"
    else:
        name = entry["name"]
    algebra = LieAlgebra(dim, brackets, name=name)
    algebra.validate()
    rep = algebra.series()
    want = entry["invariants"]
    got = {"n": algebra.dim, "m": rep.derived_dim, "c": rep.nilpotency_class}
    if got != want:
        raise InvariantMismatch(
            f"{name}: computed (n, m, c) = {got}, asserted {want}"
        )
    return algebra


def _run_gates():
    """Check asserted multiplier dimensions, once per process."""
    global _gates_done
    if _gates_done:
        return
    _gates_done = True
    for entry in _entries().values():
        if "dim_M" in entry:
            algebra = _build_entry(entry, {})
            got = schur_multiplier_dim(algebra)
            if got != entry["dim_M"]:
                raise InvariantMismatch(
                    f"{entry['name']}: computed dim M = {got}, "
                    f"asserted {entry['dim_M']}"
                )


_PART = re.compile(
    r"(?:(?P<fam>[AH])\(?(?P<idx>\d+)\)?"
    r"|(?P<table>L\d+_\d+)(?:\((?P<value>[^()]+)\))?)$"
)


def _build_part(part: str, params) -> LieAlgebra:
    match = _PART.match(part)
    if match is None:
        raise UnknownName(f"unknown algebra name {part!r}")
    if match.group("fam") == "A":
        return abelian(int(match.group("idx")))
    if match.group("fam") == "H":
        return heisenberg(int(match.group("idx")))
    table = match.group("table")
    entry = _entries().get(table)
    if entry is None:
        raise UnknownName(f"unknown algebra name {part!r}")
    merged = dict(params)
    value = match.group("value")
    if value is not None:
        if not entry["parameters"]:
            raise UnknownName(f"{table} takes no parameter")
        try:
            merged[entry["parameters"][0]] = Fraction(value)
        except (ValueError, ZeroDivisionError):
            raise UnknownName(
                f"invalid parameter value {value!r} in {part!r}"
            ) from None
    return _build_entry(entry, merged)


def catalog_get(name: str, params=None) -> LieAlgebra:
    """Construct a catalog algebra by name, or a "+"-joined direct sum."""
    _run_gates()
    params = params or {}
    parts = [part.strip() for part in name.replace(" ", "").split("+")]
    if not all(parts):
        raise UnknownName(f"unknown algebra name {name!r}")
    algebras = [_build_part(part, params) for part in parts]
    result = algebras[0]
    for other in algebras[1:]:
        result = direct_sum(result, other)
    return result


def enumerate_catalog(max_dim: int, eps_samples=None):
    """All catalog entries of dimension <= max_dim as (name, algebra)
    pairs: abelians, then each non-abelian base followed by its
    abelian extensions base+A(k).  The order is deterministic."""
    if max_dim < 1:
        raise ValueError("max_dim must be at least 1")
    if max_dim > MAX_ENUMERATION_DIM:
        raise ResourceCapExceeded(
            f"catalog enumeration is capped at dimension "
            f"{MAX_ENUMERATION_DIM} (asked for {max_dim})"
        )
    _run_gates()
    if eps_samples is None:
        eps_samples = DEFAULT_EPS_SAMPLES

    out = [(f"A({k})", abelian(k)) for k in range(1, max_dim + 1)]

    bases = []
    m = 1
    while 2 * m + 1 <= max_dim:
        bases.append(heisenberg(m))
        m += 1
    for entry in _entries().values():
        if entry["dim"] > max_dim:
            continue
        if entry["parameters"]:
            parameter = entry["parameters"][0]
            for eps in eps_samples:
                bases.append(_build_entry(entry, {parameter: eps}))
        else:
            bases.append(_build_entry(entry, {}))

    for base in bases:
        out.append((base.name, base))
        for k in range(1, max_dim - base.dim + 1):
            name = f"{base.name}+A({k})"
            out.append((name, direct_sum(base, abelian(k), name=name)))
    return out


def verify_catalog(eps_samples=None):
    """Rebuild and gate every entry; returns the verified names."""
    global _gates_done
    _gates_done = False
    _run_gates()
    names = [name for name, _ in enumerate_catalog(MAX_ENUMERATION_DIM,
                                                   eps_samples=eps_samples)]
    return names
