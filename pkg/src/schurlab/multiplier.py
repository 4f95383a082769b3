"""Schur multipliers, exterior squares and capability.

For a nilpotent algebra L with d minimal generators and class c, write
L = F/R with F free on d generators.  Everything below is computed in
the free nilpotent algebra F' = F/gamma_{c+2}(F) of class c+1: the
truncation is exact because gamma_{c+1}(F) lies in R, which forces
gamma_{c+2}(F) into [F, R], so R/[F,R] and F2/[F,R] are unchanged.

    dim M(L)  = dim(R cap F2) - dim [F,R]      (Hopf formula)
    L wedge L = F2 / [F,R]
    Z^(L)     = {z in L : [lift(z), F'] contained in [F',R']}

Minimal generators are the lowest-index standard-basis complement of
L2, so R automatically lies inside F2.  Since R is an ideal, [F,R] is
spanned by the brackets of R with the generators alone; and because
every top-degree Hall word already lies in R, only the kernel rows
supported below the top degree contribute.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    InvariantMismatch,
    NotCentral,
    NotOneDimensional,
)
from .hall import free_nilpotent_algebra
from .liealg import LieAlgebra
from .linalg import (
    SpanBuilder,
    Subspace,
    int_row,
    kernel_basis,
    solve_particular,
)


class Presentation:
    """A minimal free presentation of L, truncated at class c+1.

    ``pi_matrix`` (rows indexed by L, columns by Hall words) is the
    induced map F' -> L; ``r`` is its kernel, ``f2`` the span of the
    Hall words of degree >= 2, and ``fr`` the bracket ideal [F', R'].
    ``fr`` is canonicalised lazily; ``dim_fr`` is always available.
    """

    def __init__(self, algebra, free, pi_matrix, r, f2, fr_builder):
        self.algebra = algebra
        self.free = free
        self.pi_matrix = pi_matrix
        self.r = r
        self.f2 = f2
        self._fr_builder = fr_builder
        self._fr = None
        self._exterior_center = None

    @property
    def dim_fr(self):
        return self._fr_builder.rank

    @property
    def fr(self) -> Subspace:
        if self._fr is None:
            self._fr = self._fr_builder.subspace()
        return self._fr

    @property
    def r_cap_f2(self) -> Subspace:
        """R cap F2; equals R itself for a minimal presentation."""
        return self.r

    @property
    def dim_multiplier(self):
        return self.r.dim - self.dim_fr

    @property
    def dim_exterior_square(self):
        return (self.free.dim - self.free.generators) - self.dim_fr

    def __repr__(self):
        return (
            f"Presentation(free={self.free!r}, dim R={self.r.dim}, "
            f"dim [F,R]={self.dim_fr})"
        )


@dataclass(frozen=True)
class GaneaReport:
    """Dimension comparison for a central line N: dim M(L/N) against
    dim M(L) + dim(N cap L2), and whether N lies in the exterior
    center.  The two tests must agree; ``consistent`` records that."""

    lhs: int
    rhs: int
    n_in_exterior_center: bool
    consistent: bool


@dataclass(frozen=True)
class MultiplierReport:
    """All computed invariants of one algebra.

    ``bound_e1``, ``bound_e2`` and ``attains_e2`` are None for abelian
    algebras (the bounds assume a nonzero derived subalgebra).
    """

    n: int
    m: int
    c: int
    d: int
    dim_M: int
    dim_exterior_square: int
    exterior_center: Subspace
    capable: bool
    bound_e1: int
    bound_e2: int
    attains_e2: bool


def present_minimal(L: LieAlgebra) -> Presentation:
    """Build (and cache on L) the minimal truncated free presentation."""
    if L._presentation is not None:
        return L._presentation
    if L.dim == 0:
        raise ValueError("the zero algebra has no generators to present")
    rep = L.series()
    n = L.dim
    m = rep.derived_dim
    c = rep.nilpotency_class
    d = n - m
    derived = L.derived_subspace()
    pivot_set = set(derived.pivots)
    complement = [i for i in range(n) if i not in pivot_set]
    free = free_nilpotent_algebra(d, c + 1)
    big = free.dim

    images = [None] * big
    for word in free.basis:
        if word.gen is not None:
            images[word.position] = L.basis_vector(complement[word.gen])
        else:
            images[word.position] = L.bracket(
                images[word.left], images[word.right]
            )
    pi_matrix = tuple(
        tuple(images[pos][k] for pos in range(big)) for k in range(n)
    )

    r = kernel_basis(pi_matrix, ncols=big)
    if r.dim != big - n:
        raise InvariantMismatch("induced map onto L is not surjective")
    if any(row[g] for row in r.rows for g in range(d)):
        raise InvariantMismatch("kernel meets the generator block")

    f2 = Subspace.coordinate(range(d, big), big)
    top_start = free.degree_offsets[c + 1].start

    fr_builder = SpanBuilder(big)
    low_rows = []
    for pivot, row in zip(r.pivots, r.rows):
        if pivot >= top_start:
            if any(x for col, x in enumerate(row) if col != pivot):
                raise InvariantMismatch(
                    "top-degree kernel row is not a coordinate vector"
                )
            continue
        low_rows.append(row)
    # Highest-degree rows first: their brackets are supported in few
    # trailing degree blocks, which keeps the echelon reduction cheap.
    for row in reversed(low_rows):
        ints = int_row(row)
        support = [(pos, coeff) for pos, coeff in enumerate(ints) if coeff]
        for j in range(d):
            vec = [0] * big
            for pos, coeff in support:
                for t, v in free.product(j, pos).items():
                    vec[t] += coeff * v
            if any(vec):
                fr_builder.add(vec)

    pres = Presentation(L, free, pi_matrix, r, f2, fr_builder)
    L._presentation = pres
    return pres


def schur_multiplier_dim(L: LieAlgebra) -> int:
    """dim M(L), without materialising witness subspaces."""
    if L.dim == 0:
        return 0
    return present_minimal(L).dim_multiplier


def schur_multiplier(L: LieAlgebra):
    """(dim M(L), (R cap F2, [F,R])) from the Hopf formula."""
    if L.dim == 0:
        zero = Subspace.zero(0)
        return 0, (zero, zero)
    pres = present_minimal(L)
    return pres.dim_multiplier, (pres.r_cap_f2, pres.fr)


def exterior_square_dim(L: LieAlgebra) -> int:
    """dim(L wedge L) = dim F2 - dim [F,R] = dim M(L) + dim L2."""
    if L.dim == 0:
        return 0
    return present_minimal(L).dim_exterior_square


def _fraction_residual(builder: SpanBuilder, vec):
    """Reduce a rational vector against integer echelon rows exactly.

    The result is a fixed linear function of ``vec`` (zero exactly on
    the span), which is what the exterior-center constraints need.
    """
    row = list(vec)
    rows = builder.rows
    for c in range(builder.ambient):
        a = row[c]
        if a:
            prow = rows.get(c)
            if prow is not None:
                coeff = a / prow[c]
                row = [x - coeff * y for x, y in zip(row, prow)]
    return row


def exterior_center(L: LieAlgebra) -> Subspace:
    """Z^(L): the z with z wedge L = 0 in L wedge L.

    A lift of z is bracketed with each free generator and reduced
    modulo [F,R]; the simultaneous kernel of those residuals is Z^.
    Generator brackets suffice: if [z~, g] lies in [F,R] for every
    generator g then [z~, w] does for every Hall word w, by induction
    on the degree of w using the Jacobi identity and the fact that
    [F,R] is an ideal.
    """
    if L.dim == 0:
        return Subspace.zero(0)
    pres = present_minimal(L)
    if pres._exterior_center is not None:
        return pres._exterior_center
    n = L.dim
    free = pres.free
    d = free.generators
    big = free.dim
    lifts = []
    for k in range(n):
        lift = solve_particular(pres.pi_matrix, L.basis_vector(k))
        if lift is None:
            raise InvariantMismatch("presentation map is not surjective")
        lifts.append(lift)
    constraints = []
    for j in range(d):
        residuals = []
        for k in range(n):
            vec = [Fraction(0)] * big
            for pos, coeff in enumerate(lifts[k]):
                if coeff:
                    for t, v in free.product(pos, j).items():
                        vec[t] += coeff * v
            residuals.append(_fraction_residual(pres._fr_builder, vec))
        used = set()
        for res in residuals:
            for idx, x in enumerate(res):
                if x:
                    used.add(idx)
        for idx in sorted(used):
            constraints.append([residuals[k][idx] for k in range(n)])
    if constraints:
        result = kernel_basis(constraints, ncols=n)
    else:
        result = Subspace.full(n)
    pres._exterior_center = result
    return result


def is_capable(L: LieAlgebra) -> bool:
    """Whether L is a central quotient E/Z(E); equivalently Z^(L) = 0."""
    return exterior_center(L).dim == 0


def ganea_dimension_check(L: LieAlgebra, line: Subspace) -> GaneaReport:
    """Compare dim M(L/N) with dim M(L) + dim(N cap L2) for a central
    line N, and test N against the exterior center; equality must hold
    exactly when N lies in Z^(L)."""
    if line.dim != 1:
        raise NotOneDimensional(
            f"expected a 1-dimensional subspace, got dimension {line.dim}"
        )
    if not line <= L.center():
        raise NotCentral("the given line is not central")
    quotient = L.quotient(line)
    lhs = schur_multiplier_dim(quotient.algebra)
    rhs = schur_multiplier_dim(L) + (line & L.derived_subspace()).dim
    member = line <= exterior_center(L)
    return GaneaReport(
        lhs=lhs,
        rhs=rhs,
        n_in_exterior_center=member,
        consistent=(lhs == rhs) == member,
    )


def multiplier_report(L: LieAlgebra) -> MultiplierReport:
    """Compute every invariant the reports and the CLI expose."""
    from .bounds import bound_e1, bound_e2

    rep = L.series()
    n = L.dim
    m = rep.derived_dim
    c = rep.nilpotency_class
    dim_m = schur_multiplier_dim(L)
    wedge = exterior_square_dim(L)
    zext = exterior_center(L)
    if m == 0:
        b1 = b2 = attains = None
    else:
        b1 = bound_e1(n, m)
        b2 = bound_e2(n, m, c)
        attains = dim_m == b2
    return MultiplierReport(
        n=n,
        m=m,
        c=c,
        d=n - m,
        dim_M=dim_m,
        dim_exterior_square=wedge,
        exterior_center=zext,
        capable=zext.dim == 0,
        bound_e1=b1,
        bound_e2=b2,
        attains_e2=attains,
    )
