"""Exact linear algebra over the rationals.

Conventions used throughout schurlab:

* scalars are ``fractions.Fraction`` (no floats anywhere),
* a vector is a sequence of scalars, returned as a tuple,
* a matrix is a sequence of rows,
* a subspace of Q^n is held in canonical reduced row echelon form:
  pivot entries are 1, pivot columns strictly increase, every pivot
  column is zero elsewhere, zero rows are dropped.  The canonical form
  makes subspace equality a structural comparison.

Elimination is fraction-free in the Bareiss spirit: rows are scaled to
primitive integer vectors and combined by integer cross-multiplication,
dividing out the content when it grows, so intermediate entries stay
small.  Fractions reappear only when a canonical basis is materialised.
"""

from fractions import Fraction
from math import gcd, lcm

from .errors import SingularMatrix

_FRAC_CACHE: dict = {}


def _cached_fraction(num, den=1):
    # den > 0 expected; keeps one object per small value so large
    # mostly-zero bases do not allocate a Fraction per entry
    g = gcd(num, den)
    if g > 1:
        num //= g
        den //= g
    if -64 <= num <= 64 and den <= 64:
        key = (num, den)
        f = _FRAC_CACHE.get(key)
        if f is None:
            f = Fraction(num, den)
            _FRAC_CACHE[key] = f
        return f
    return Fraction(num, den)


def frac(x) -> Fraction:
    """Coerce ints, strings like '2/3' and Fractions to Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return _cached_fraction(x)
    if isinstance(x, float):
        raise TypeError(f"floats are not exact: {x!r}")
    return Fraction(x)


def _content(row):
    g = 0
    for x in row:
        if x:
            g = gcd(g, x)
            if g == 1:
                return 1
    return g or 1


def _primitive(row):
    g = _content(row)
    if g > 1:
        return [x // g for x in row]
    return row


def int_row(vec) -> list:
    """Scale a rational vector to a primitive integer row (same line)."""
    fs = [frac(x) for x in vec]
    den = 1
    for f in fs:
        den = lcm(den, f.denominator)
    return _primitive([int(f * den) for f in fs])


class SpanBuilder:
    """Incrementally built integer row space in echelon form.

    Rows are primitive integer vectors with positive leading entry,
    keyed by pivot column.  This is the workhorse behind every span,
    kernel and rank computation; callers feed it integer rows (see
    ``int_row``) and extract a canonical ``Subspace`` at the end.
    """

    __slots__ = ("ambient", "rows")

    def __init__(self, ambient: int):
        self.ambient = ambient
        self.rows: dict = {}

    @property
    def rank(self) -> int:
        return len(self.rows)

    def add(self, vec) -> bool:
        """Insert an integer row; return True if the rank grew."""
        row = list(vec)
        rows = self.rows
        n = self.ambient
        c = 0
        while c < n:
            a = row[c]
            if a:
                prow = rows.get(c)
                if prow is None:
                    if a < 0:
                        row = [-x for x in row]
                    rows[c] = _primitive(row)
                    return True
                b = prow[c]
                if b == 1:
                    row = [x - a * y for x, y in zip(row, prow)]
                else:
                    g = gcd(a, b)
                    mb = b // g
                    ma = a // g
                    row = _primitive(
                        [mb * x - ma * y for x, y in zip(row, prow)]
                    )
            c += 1
        return False

    def reduce(self, vec):
        """Reduce an integer row against the current echelon rows.

        Returns ``(residual, scale)`` with ``residual == scale * vec``
        modulo the row space and ``scale`` a positive integer, so
        ``residual/scale`` depends linearly on ``vec``.  The residual is
        zero exactly when ``vec`` lies in the span.
        """
        row = list(vec)
        scale = 1
        rows = self.rows
        n = self.ambient
        c = 0
        while c < n:
            a = row[c]
            if a:
                prow = rows.get(c)
                if prow is not None:
                    b = prow[c]
                    if b == 1:
                        row = [x - a * y for x, y in zip(row, prow)]
                    else:
                        g = gcd(a, b)
                        mb = b // g
                        ma = a // g
                        row = [mb * x - ma * y for x, y in zip(row, prow)]
                        scale *= mb
            c += 1
        return row, scale

    def contains(self, vec) -> bool:
        residual, _ = self.reduce(vec)
        return not any(residual)

    def subspace(self) -> "Subspace":
        """Canonicalise (Jordan phase plus pivot normalisation)."""
        pivots = sorted(self.rows)
        work = [list(self.rows[p]) for p in pivots]
        # walk pivots from the right; each pivot row is already clean of
        # later pivots by the time it is used to clear earlier rows
        for t in range(len(pivots) - 1, -1, -1):
            p = pivots[t]
            prow = work[t]
            b = prow[p]
            for q in range(t):
                row = work[q]
                a = row[p]
                if a:
                    if b == 1:
                        row = [x - a * y for x, y in zip(row, prow)]
                    else:
                        g = gcd(a, b)
                        mb = b // g
                        ma = a // g
                        row = _primitive(
                            [mb * x - ma * y for x, y in zip(row, prow)]
                        )
                    work[q] = row
        frozen = []
        for t, p in enumerate(pivots):
            row = work[t]
            lead = row[p]
            frozen.append(tuple(_cached_fraction(x, lead) for x in row))
        return Subspace._trusted(tuple(frozen), tuple(pivots), self.ambient)


class Subspace:
    """A subspace of Q^ambient in canonical reduced row echelon form."""

    __slots__ = ("ambient", "rows", "pivots")

    def __init__(self, vectors, ambient: int):
        builder = SpanBuilder(ambient)
        for v in vectors:
            if len(v) != ambient:
                raise ValueError(
                    f"vector of length {len(v)} in ambient dimension {ambient}"
                )
            builder.add(int_row(v))
        canonical = builder.subspace()
        self.ambient = ambient
        self.rows = canonical.rows
        self.pivots = canonical.pivots

    @classmethod
    def _trusted(cls, rows, pivots, ambient):
        self = object.__new__(cls)
        self.ambient = ambient
        self.rows = rows
        self.pivots = pivots
        return self

    @classmethod
    def zero(cls, ambient: int) -> "Subspace":
        return cls._trusted((), (), ambient)

    @classmethod
    def full(cls, ambient: int) -> "Subspace":
        return cls.coordinate(range(ambient), ambient)

    @classmethod
    def coordinate(cls, indices, ambient: int) -> "Subspace":
        """Span of the standard basis vectors e_i for i in indices."""
        idx = sorted(set(indices))
        one = _cached_fraction(1)
        zero = _cached_fraction(0)
        rows = tuple(
            tuple(one if j == i else zero for j in range(ambient)) for i in idx
        )
        return cls._trusted(rows, tuple(idx), ambient)

    @property
    def dim(self) -> int:
        return len(self.rows)

    def reduce(self, vec):
        """Canonical representative of vec modulo this subspace."""
        row = [frac(x) for x in vec]
        if len(row) != self.ambient:
            raise ValueError("vector/ambient mismatch")
        for p, srow in zip(self.pivots, self.rows):
            a = row[p]
            if a:
                row = [x - a * y for x, y in zip(row, srow)]
        return tuple(row)

    def contains(self, vec) -> bool:
        return not any(self.reduce(vec))

    def coords(self, vec):
        """Coordinates of vec in the canonical basis; vec must lie here."""
        row = self.reduce(vec)
        if any(row):
            raise ValueError("vector is not in the subspace")
        fs = [frac(x) for x in vec]
        return tuple(fs[p] for p in self.pivots)

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.ambient == other.ambient
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.ambient, self.rows))

    def __le__(self, other: "Subspace") -> bool:
        if self.ambient != other.ambient:
            raise ValueError("ambient dimensions differ")
        return all(other.contains(r) for r in self.rows)

    def __add__(self, other: "Subspace") -> "Subspace":
        if self.ambient != other.ambient:
            raise ValueError("ambient dimensions differ")
        builder = SpanBuilder(self.ambient)
        for r in self.rows:
            builder.add(int_row(r))
        for r in other.rows:
            builder.add(int_row(r))
        return builder.subspace()

    def __and__(self, other: "Subspace") -> "Subspace":
        """Intersection by the Zassenhaus double-block trick."""
        if self.ambient != other.ambient:
            raise ValueError("ambient dimensions differ")
        n = self.ambient
        builder = SpanBuilder(2 * n)
        for r in self.rows:
            ir = int_row(r)
            builder.add(ir + ir)
        zero = [0] * n
        for r in other.rows:
            builder.add(int_row(r) + zero)
        inner = SpanBuilder(n)
        for p in sorted(builder.rows):
            if p >= n:
                inner.add(builder.rows[p][n:])
        return inner.subspace()

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient})"


def rref(matrix):
    """Canonical reduced row echelon form.

    Returns ``(rows, rank)`` where ``rows`` is a tuple of canonical
    basis rows of the row space (zero rows dropped).
    """
    matrix = [list(r) for r in matrix]
    if matrix:
        width = len(matrix[0])
        if any(len(r) != width for r in matrix):
            raise ValueError("ragged matrix")
    else:
        width = 0
    builder = SpanBuilder(width)
    for r in matrix:
        builder.add(int_row(r))
    sub = builder.subspace()
    return sub.rows, sub.dim


def kernel_basis(matrix, ncols=None) -> Subspace:
    """The solution space {x : A x = 0} as a canonical Subspace."""
    matrix = list(matrix)
    if ncols is None:
        if not matrix:
            raise ValueError("ncols required for an empty matrix")
        ncols = len(matrix[0])
    rows, _ = rref(matrix)
    pivots = []
    for r in rows:
        for c, x in enumerate(r):
            if x:
                pivots.append(c)
                break
    pivot_set = set(pivots)
    builder = SpanBuilder(ncols)
    zero = _cached_fraction(0)
    one = _cached_fraction(1)
    for f in range(ncols):
        if f in pivot_set:
            continue
        vec = [zero] * ncols
        vec[f] = one
        for t, p in enumerate(pivots):
            if rows[t][f]:
                vec[p] = -rows[t][f]
        builder.add(int_row(vec))
    return builder.subspace()


def solve_particular(matrix, target):
    """One solution x of A x = b, or None if the system is inconsistent.

    The solution is deterministic: it is supported on the pivot columns
    of the reduced form of A.
    """
    matrix = [list(r) for r in matrix]
    if not matrix:
        return None if any(frac(t) for t in target) else ()
    ncols = len(matrix[0])
    augmented = [
        [frac(x) for x in row] + [frac(t)] for row, t in zip(matrix, target)
    ]
    rows, _ = rref(augmented)
    x = [_cached_fraction(0)] * ncols
    for r in rows:
        pivot = next(c for c, v in enumerate(r) if v)
        if pivot == ncols:
            return None
        x[pivot] = r[ncols]
    return tuple(x)


def invert(matrix):
    """Inverse of a square rational matrix; raises SingularMatrix."""
    n = len(matrix)
    work = [
        [frac(x) for x in row] + [
            _cached_fraction(1 if i == j else 0) for j in range(n)
        ]
        for i, row in enumerate(matrix)
    ]
    if any(len(r) != 2 * n for r in work):
        raise ValueError("matrix is not square")
    for col in range(n):
        pivot_row = None
        for r in range(col, n):
            if work[r][col]:
                pivot_row = r
                break
        if pivot_row is None:
            raise SingularMatrix(f"no pivot in column {col}")
        work[col], work[pivot_row] = work[pivot_row], work[col]
        lead = work[col][col]
        work[col] = [x / lead for x in work[col]]
        for r in range(n):
            if r != col and work[r][col]:
                a = work[r][col]
                work[r] = [x - a * y for x, y in zip(work[r], work[col])]
    return tuple(tuple(row[n:]) for row in work)


def matvec(matrix, vec):
    return tuple(
        sum((frac(a) * frac(b) for a, b in zip(row, vec)), Fraction(0))
        for row in matrix
    )
