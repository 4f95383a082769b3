"""Dimension bounds for multipliers of nilpotent algebras.

For L of dimension n with dim L2 = m >= 1 and class c, two upper
bounds on dim M(L) are computed exactly:

    bound_e1(n, m)    = (n + m - 2)(n - m - 1)/2 + 1
    bound_e2(n, m, c) = (n - m - 1)(n + m)/2
                        - sum((n - m - i) for i = 2..min(n - m, c))

Both products are even, so the division is exact.  bound_e2 refines
bound_e1 (they agree when c = 2), and bound_e2(n, n-2, c) = n - 1.

The remaining functions verify inequalities relating dim(L wedge L)
to the images of the trilinear map

    gamma(x, y, z) = [x,y] (x) z + [z,x] (x) y + [y,z] (x) x

(values in L2/L3 tensor L/L2, and the primed variants on L/Z(L)L2)
and run consistency scans over the built-in catalog.
"""

from dataclasses import dataclass
from math import comb

from .errors import InvariantMismatch, NotCentral
from .liealg import LieAlgebra
from .linalg import Subspace
from .multiplier import exterior_square_dim, schur_multiplier_dim


def bound_e1(n: int, m: int) -> int:
    """Upper bound for dim M(L) depending on n and m only."""
    if m < 1:
        raise ValueError("requires a nonzero derived subalgebra (m >= 1)")
    if n < m + 2:
        raise ValueError("requires n >= m + 2")
    return (n + m - 2) * (n - m - 1) // 2 + 1


def bound_e2(n: int, m: int, c: int) -> int:
    """Refined upper bound for dim M(L), decreasing in the class c."""
    if m < 1:
        raise ValueError("requires a nonzero derived subalgebra (m >= 1)")
    if n < m + 2:
        raise ValueError("requires n >= m + 2")
    if not 2 <= c <= n - 1:
        raise ValueError("requires 2 <= c <= n - 1")
    total = (n - m - 1) * (n + m) // 2
    for i in range(2, min(n - m, c) + 1):
        total -= n - m - i
    return total


def attains_e2(L: LieAlgebra) -> bool:
    """Whether dim M(L) equals bound_e2(n, m, c)."""
    rep = L.series()
    if rep.derived_dim == 0:
        raise ValueError("the bound applies to non-abelian algebras only")
    bound = bound_e2(L.dim, rep.derived_dim, rep.nilpotency_class)
    return schur_multiplier_dim(L) == bound


@dataclass(frozen=True)
class GammaImages:
    """Dimensions of the images of gamma and its primed variants.

    ``dim_im_gamma_prime3`` is None when the class is below 3.
    """

    dim_im_gamma_L: int
    dim_im_gamma_prime2: int
    dim_im_gamma_prime3: int


@dataclass(frozen=True)
class TheoremReport:
    """Outcome of one inequality or scan: lhs <= rhs (or a violation
    count against zero), with the intermediate dimensions retained."""

    theorem: str
    instance: str
    lhs: int
    rhs: int
    holds: bool
    witnesses: dict


def _gamma_terms(L):
    """Shared coordinate maps for the gamma images.

    Returns (ab_reps, ab_proj, prime_reps, prime_proj, phi2, g2mod,
    gamma3) where phi2 gives coordinates in L2/L3 and the rep lists
    are lifted bases of L/L2 and L/(Z(L) + L2).
    """
    n = L.dim
    gammas = L.lower_central_series()
    gamma2 = gammas[1] if len(gammas) > 1 else Subspace.zero(n)
    gamma3 = gammas[2] if len(gammas) > 2 else Subspace.zero(n)

    q_ab = L.quotient(gamma2)
    ab_dim = n - gamma2.dim
    ab_reps = [
        q_ab.lift([1 if t == s else 0 for t in range(ab_dim)])
        for s in range(ab_dim)
    ]

    central = gamma2 + L.center()
    q_prime = L.quotient(central)
    prime_dim = n - central.dim
    prime_reps = [
        q_prime.lift([1 if t == s else 0 for t in range(prime_dim)])
        for s in range(prime_dim)
    ]

    q3 = L.quotient(gamma3)
    mod3 = Subspace([q3.project(row) for row in gamma2.rows], n - gamma3.dim)

    def phi2(vec):
        return mod3.coords(q3.project(vec))

    return ab_reps, q_ab.project, prime_reps, q_prime.project, phi2, mod3.dim, gamma3


def _trilinear_image(L, reps, proj, phi2, g2mod):
    """Image dimension of gamma on the given representatives."""
    width = len(reps)
    rows = []
    for x in reps:
        for y in reps:
            for z in reps:
                vec = [0] * (g2mod * width)
                for u, v, w in ((x, y, z), (z, x, y), (y, z, x)):
                    left = phi2(L.bracket(u, v))
                    right = proj(w)
                    for a in range(g2mod):
                        if left[a]:
                            for b in range(width):
                                vec[a * width + b] += left[a] * right[b]
                rows.append(vec)
    return Subspace(rows, g2mod * width).dim


def gamma_images(L: LieAlgebra) -> GammaImages:
    """Image dimensions of gamma on L/L2, and of the primed variants
    on L/(Z(L) + L2) (the degree-4 variant only when the class is at
    least 3)."""
    ab_reps, ab_proj, prime_reps, prime_proj, phi2, g2mod, gamma3 = _gamma_terms(L)
    dim_gamma = _trilinear_image(L, ab_reps, ab_proj, phi2, g2mod)
    dim_prime2 = _trilinear_image(L, prime_reps, prime_proj, phi2, g2mod)

    dim_prime3 = None
    if L.series().nilpotency_class >= 3:
        width = len(prime_reps)
        g3 = gamma3.dim
        rows = []
        for x in prime_reps:
            for y in prime_reps:
                for z in prime_reps:
                    xy = L.bracket(x, y)
                    for w in prime_reps:
                        zw = L.bracket(z, w)
                        vec = [0] * (g3 * width)
                        for u, v in (
                            (L.bracket(xy, z), w),
                            (L.bracket(w, xy), z),
                            (L.bracket(zw, x), y),
                            (L.bracket(y, zw), x),
                        ):
                            left = gamma3.coords(u)
                            right = prime_proj(v)
                            for a in range(g3):
                                if left[a]:
                                    for b in range(width):
                                        vec[a * width + b] += left[a] * right[b]
                        rows.append(vec)
        dim_prime3 = Subspace(rows, g3 * width).dim

    return GammaImages(
        dim_im_gamma_L=dim_gamma,
        dim_im_gamma_prime2=dim_prime2,
        dim_im_gamma_prime3=dim_prime3,
    )


def check_theorem_2_1(L: LieAlgebra, K: Subspace) -> TheoremReport:
    """For central K of dimension k:

    dim M(L) + dim(L2 cap K)
        <= dim M(L/K) + k(k-1)/2 + k * dim((L/K)/(L/K)2).
    """
    if not K <= L.center():
        raise NotCentral("K must be a central subspace")
    k = K.dim
    quotient = L.quotient(K).algebra
    q_rep = quotient.series()
    lhs = schur_multiplier_dim(L) + (L.derived_subspace() & K).dim
    rhs = (
        schur_multiplier_dim(quotient)
        + k * (k - 1) // 2
        + k * (quotient.dim - q_rep.derived_dim)
    )
    return TheoremReport(
        theorem="central quotient bound",
        instance=_name_of(L),
        lhs=lhs,
        rhs=rhs,
        holds=lhs <= rhs,
        witnesses={"k": k, "dim_M_quotient": schur_multiplier_dim(quotient)},
    )


def check_theorem_2_2(L: LieAlgebra) -> TheoremReport:
    """dim M(L) <= m when dim L >= 4 and L2 has codimension 2."""
    rep = L.series()
    n, m = L.dim, rep.derived_dim
    if m != n - 2:
        raise ValueError("applies only when the derived subalgebra has codimension 2")
    if n < 4:
        raise ValueError("applies only in dimension at least 4")
    dim_m = schur_multiplier_dim(L)
    return TheoremReport(
        theorem="codimension-2 derived subalgebra bound",
        instance=_name_of(L),
        lhs=dim_m,
        rhs=m,
        holds=dim_m <= m,
        witnesses={"n": n, "m": m},
    )


def check_theorem_2_5(L: LieAlgebra) -> TheoremReport:
    """dim(L wedge L) + dim im(gamma')
        <= C(n-m, 2) + sum over i >= 2 of dim(g_i/g_{i+1}) * dim L/(Z(L)+L2).
    """
    rep = L.series()
    n, m = L.dim, rep.derived_dim
    if m == 0:
        raise ValueError("applies to non-abelian algebras only")
    images = gamma_images(L)
    gammas = L.lower_central_series()
    layer_sum = 0
    prime_width = n - (L.derived_subspace() + L.center()).dim
    for i in range(1, len(gammas) - 1):
        layer = gammas[i].dim - gammas[i + 1].dim
        layer_sum += layer * prime_width
    lhs = exterior_square_dim(L) + images.dim_im_gamma_prime2
    rhs = comb(n - m, 2) + layer_sum
    return TheoremReport(
        theorem="exterior square bound via gamma'",
        instance=_name_of(L),
        lhs=lhs,
        rhs=rhs,
        holds=lhs <= rhs,
        witnesses={
            "dim_wedge": exterior_square_dim(L),
            "dim_im_gamma_prime2": images.dim_im_gamma_prime2,
        },
    )


def check_theorem_2_6(L: LieAlgebra) -> TheoremReport:
    """For class exactly 3:

    dim(L wedge L) + dim im(gamma'_2) + dim im(gamma'_3)
        <= C(n-m, 2) + (m - g3)(n - m) + g3 (n - m),  g3 = dim L3.
    """
    rep = L.series()
    n, m = L.dim, rep.derived_dim
    if rep.nilpotency_class != 3:
        raise ValueError("applies to algebras of class exactly 3")
    images = gamma_images(L)
    g3 = L.lower_central_series()[2].dim
    lhs = (
        exterior_square_dim(L)
        + images.dim_im_gamma_prime2
        + images.dim_im_gamma_prime3
    )
    rhs = comb(n - m, 2) + (m - g3) * (n - m) + g3 * (n - m)
    return TheoremReport(
        theorem="class-3 exterior square bound",
        instance=_name_of(L),
        lhs=lhs,
        rhs=rhs,
        holds=lhs <= rhs,
        witnesses={
            "dim_wedge": exterior_square_dim(L),
            "dim_im_gamma_prime2": images.dim_im_gamma_prime2,
            "dim_im_gamma_prime3": images.dim_im_gamma_prime3,
            "g3": g3,
        },
    )


def scan_theorem_2_9(max_dim: int = 6) -> TheoremReport:
    """Scan the catalog: no algebra of class >= 3 with m = 3 has
    dim M(L) = (n-1)(n-2)/2 - 2.  Class-2 algebras hitting that value
    are recorded for information but are not violations."""
    from .catalog import enumerate_catalog

    checked = []
    violations = []
    class_two = []
    for name, algebra in enumerate_catalog(max_dim):
        rep = algebra.series()
        if rep.derived_dim != 3:
            continue
        n = algebra.dim
        target = (n - 1) * (n - 2) // 2 - 2
        dim_m = schur_multiplier_dim(algebra)
        checked.append(name)
        if dim_m == target:
            if rep.nilpotency_class >= 3:
                violations.append(name)
            else:
                class_two.append(name)
    return TheoremReport(
        theorem="multiplier gap for m = 3",
        instance=f"catalog up to dimension {max_dim}",
        lhs=len(violations),
        rhs=0,
        holds=not violations,
        witnesses={
            "checked": checked,
            "violations": violations,
            "class_two_matches": class_two,
        },
    )


def check_theorem_3_7(max_dim: int = 6) -> TheoremReport:
    """Scan the catalog: every algebra of class >= 3 satisfies
    dim M(L) <= bound_e2 - 1; the equality witnesses are recorded."""
    from .catalog import enumerate_catalog

    checked = []
    violations = []
    equality = []
    for name, algebra in enumerate_catalog(max_dim):
        rep = algebra.series()
        if rep.derived_dim == 0 or rep.nilpotency_class < 3:
            continue
        bound = bound_e2(algebra.dim, rep.derived_dim, rep.nilpotency_class)
        dim_m = schur_multiplier_dim(algebra)
        checked.append(name)
        if dim_m > bound - 1:
            violations.append(name)
        if dim_m == bound - 1:
            equality.append(name)
    return TheoremReport(
        theorem="strict refinement for class >= 3",
        instance=f"catalog up to dimension {max_dim}",
        lhs=len(violations),
        rhs=0,
        holds=not violations,
        witnesses={
            "checked": checked,
            "violations": violations,
            "equality_witnesses": equality,
        },
    )


@dataclass(frozen=True)
class SweepRow:
    """One catalog entry in a classification sweep."""

    name: str
    n: int
    m: int
    c: int
    dim_M: int
    bound_e2: int
    attains_e2: bool


def _sweep_row(item):
    name, algebra = item
    rep = algebra.series()
    n, m, c = algebra.dim, rep.derived_dim, rep.nilpotency_class
    dim_m = schur_multiplier_dim(algebra)
    if m == 0:
        return SweepRow(name, n, m, c, dim_m, None, False)
    bound = bound_e2(n, m, c)
    attains = dim_m == bound
    if c >= 3 and dim_m > bound - 1:
        raise InvariantMismatch(
            f"{name}: class {c} >= 3 but dim M = {dim_m} exceeds {bound} - 1"
        )
    if m == n - 2 and n >= 4 and attains:
        raise InvariantMismatch(
            f"{name}: codimension-2 derived subalgebra attains the bound"
        )
    return SweepRow(name, n, m, c, dim_m, bound, attains)


def classification_sweep(max_dim: int = 6, eps_samples=None, parallel=False):
    """Multiplier data for every catalog entry up to ``max_dim``,
    in deterministic catalog order."""
    from .catalog import enumerate_catalog

    entries = list(enumerate_catalog(max_dim, eps_samples=eps_samples))
    if parallel:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor() as pool:
            return list(pool.map(_sweep_row, entries))
    return [_sweep_row(item) for item in entries]


def _name_of(L):
    return L.name if L.name is not None else f"<algebra of dimension {L.dim}>"
