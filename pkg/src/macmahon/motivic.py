"""Class formulas for torus-fixed loci of framed sheaf moduli on the plane,
their large-rank limits, and the q-series identities they assemble into.

Everything is carried by FactorProduct objects in the variable L (the class
of the affine line). Finite-rank classes must certify as polynomials in L
with exact division; failure raises instead of silently emitting a rational
function, since it would indicate a transcription bug in a formula.
"""

from __future__ import annotations

from typing import Sequence

from .partitions import PlanePartition, chi, enumerate_plane_partitions
from .series import (
    FactorProduct,
    NotPolynomialError,
    TruncatedSeries,
    TruncationProfile,
    gl_class,
    q_factorial,
)
from .vuletic import vuletic_weight_t0


class MotivicClass:
    """A class in the variable L, kept factored with exact cancellation."""

    __slots__ = ("factors", "_poly")

    def __init__(self, factors: FactorProduct):
        self.factors = factors
        self._poly: dict[int, int] | None = None

    def polynomial(self) -> dict[int, int]:
        """Certified polynomial coefficients {degree: coeff}; exact division."""
        if self._poly is None:
            var, poly = self.factors.to_polynomial()
            if var not in (None, "L"):
                raise NotPolynomialError(f"class involves unexpected variable {var!r}")
            self._poly = poly
        return dict(self._poly)

    def certify(self) -> MotivicClass:
        self.polynomial()
        return self

    def series(self, cap: int) -> TruncatedSeries:
        """Expansion as a power series in L up to the cap."""
        return self.factors.expand(TruncationProfile(L=cap))

    def evaluate(self, x: int) -> int:
        poly = self.polynomial()
        return sum(c * x**d for d, c in poly.items())

    def __eq__(self, other: object) -> bool:
        return isinstance(other, MotivicClass) and self.factors == other.factors

    def __hash__(self) -> int:
        return hash(self.factors)

    def __repr__(self) -> str:
        return f"MotivicClass({self.factors!r})"


def _box_factorial_ratio(pi: PlanePartition, var: str = "L") -> FactorProduct:
    # prod over boxes of [a - diag]! / ([a - below]! [a - right]!) with
    # a = pi[i,j]; boxes outside the support contribute 1.
    out = FactorProduct.one()
    for i, j in pi.support():
        a = pi.entry(i, j)
        out = out * q_factorial(a - pi.entry(i + 1, j + 1), var)
        out = out / q_factorial(a - pi.entry(i + 1, j), var)
        out = out / q_factorial(a - pi.entry(i, j + 1), var)
    return out


def fixed_component_class(r: int, pi: PlanePartition) -> MotivicClass:
    """Class of the rank-r fixed component indexed by pi:

        [r]!_L / [r - pi00]!_L * prod_boxes [a-diag]! / ([a-below]! [a-right]!)

    Certified as a polynomial in L. Requires pi00 <= r.
    """
    if r < 1:
        raise ValueError("rank must be positive")
    if pi.first_entry > r:
        raise ValueError(f"corner entry {pi.first_entry} exceeds rank {r}")
    fp = q_factorial(r, "L") / q_factorial(r - pi.first_entry, "L")
    fp = fp * _box_factorial_ratio(pi)
    return MotivicClass(fp).certify()


def limit_class(pi: PlanePartition) -> MotivicClass:
    """Large-rank limit: the box factorial ratio alone, a power series in L."""
    return MotivicClass(_box_factorial_ratio(pi))


def _normalize_chain(mu: Sequence[int], nu: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    mu_t = tuple(int(v) for v in mu)
    nu_t = tuple(int(v) for v in nu)
    if not mu_t:
        raise ValueError("chain needs at least one stage")
    if len(nu_t) > len(mu_t):
        if any(v != 0 for v in nu_t[len(mu_t):]):
            raise ValueError("nu is longer than mu")
        nu_t = nu_t[: len(mu_t)]
    nu_t = nu_t + (0,) * (len(mu_t) - len(nu_t))
    if any(v < 0 for v in mu_t + nu_t):
        raise ValueError("stage dimensions must be nonnegative")
    if any(a < b for a, b in zip(mu_t, mu_t[1:])):
        raise ValueError("mu must be weakly decreasing")
    if any(a < b for a, b in zip(nu_t, nu_t[1:])):
        raise ValueError("nu must be weakly decreasing")
    if any(m < v for m, v in zip(mu_t, nu_t)):
        raise ValueError("mu must dominate nu")
    return mu_t, nu_t


def surjective_chain_class(mu: Sequence[int], nu: Sequence[int]) -> MotivicClass:
    """Class of the variety of chains of surjections intertwined over fixed
    surjections between the nu-stages:

        [mu1]! [GL_nu1] / ([nu1]! [mu1-nu1]!)
        * prod_i [mu_i - nu_{i+1}]! [GL_{mu_{i+1}}] / ([mu_i - mu_{i+1}]! [mu_{i+1} - nu_{i+1}]!)

    Independent of the choice of the fixed surjections. Certified polynomial.
    """
    mu_t, nu_t = _normalize_chain(mu, nu)
    fp = q_factorial(mu_t[0], "L") * gl_class(nu_t[0])
    fp = fp / (q_factorial(nu_t[0], "L") * q_factorial(mu_t[0] - nu_t[0], "L"))
    for i in range(len(mu_t) - 1):
        fp = fp * q_factorial(mu_t[i] - nu_t[i + 1], "L") * gl_class(mu_t[i + 1])
        fp = fp / q_factorial(mu_t[i] - mu_t[i + 1], "L")
        fp = fp / q_factorial(mu_t[i + 1] - nu_t[i + 1], "L")
    return MotivicClass(fp).certify()


def commuting_grid_class(pi: PlanePartition) -> MotivicClass:
    """Class of the grid of commuting surjections with stage dimensions pi:

        [pi00]! / [GL_pi00]
        * prod_boxes [a-diag]! [GL_a] / ([a-below]! [a-right]!)

    Certified polynomial.
    """
    fp = q_factorial(pi.first_entry, "L") / gl_class(pi.first_entry)
    for i, j in pi.support():
        a = pi.entry(i, j)
        fp = fp * q_factorial(a - pi.entry(i + 1, j + 1), "L") * gl_class(a)
        fp = fp / q_factorial(a - pi.entry(i + 1, j), "L")
        fp = fp / q_factorial(a - pi.entry(i, j + 1), "L")
    return MotivicClass(fp).certify()


def chain_bookkeeping_identity(r: int, pi: PlanePartition) -> bool:
    """Exact factored-form consistency between the two class formulas:

    fixed component class = grid class * (class of surjections from rank r
    onto the corner stage) / prod over boxes of [GL_a].
    """
    a = pi.first_entry
    surj = q_factorial(r, "L") * gl_class(a)
    surj = surj / (q_factorial(a, "L") * q_factorial(r - a, "L"))
    expected = commuting_grid_class(pi).factors * surj
    for i, j in pi.support():
        expected = expected / gl_class(pi.entry(i, j))
    return expected == fixed_component_class(r, pi).factors


def moduli_space_class(r: int, n: int, cap: int | None = None) -> dict[int, int]:
    """Coefficient of t^n in prod_{m<=r} prod_{k>=1} 1/(1 - L^(rk+m) t^k).

    The coefficient is a polynomial in L of degree exactly 2rn, so the
    default cap 2rn loses nothing.
    """
    if r < 1:
        raise ValueError("rank must be positive")
    if n < 0:
        raise ValueError("weight must be nonnegative")
    if n == 0:
        return {0: 1}
    l_cap = 2 * r * n if cap is None else cap
    profile = TruncationProfile(t=n, L=l_cap)
    fp = FactorProduct.one()
    for m in range(1, r + 1):
        for k in range(1, n + 1):
            fp = fp * FactorProduct.from_factor({"L": r * k + m, "t": k}, -1)
    series = fp.expand(profile)
    return {vec[1]: c for vec, c in series.coeffs.items() if vec[0] == n}


def bb_identity_check(r: int, n: int) -> dict:
    """Compare the moduli class with the attracting-cell decomposition:

        [moduli] = sum over pi (|pi| = n, pi00 <= r) of [component] * L^(rn + chi(pi)).

    Both sides are exact polynomials in L; the report carries them and the
    first differing coefficient on mismatch.
    """
    lhs = moduli_space_class(r, n)
    rhs: dict[int, int] = {}
    components = 0
    for pi in enumerate_plane_partitions(n, max_first_entry=r):
        components += 1
        poly = fixed_component_class(r, pi).polynomial()
        shift = r * n + chi(pi)
        for d, c in poly.items():
            nc = rhs.get(d + shift, 0) + c
            if nc:
                rhs[d + shift] = nc
            else:
                del rhs[d + shift]
    report = {
        "r": r,
        "n": n,
        "num_components": components,
        "lhs": lhs,
        "rhs": rhs,
        "match": lhs == rhs,
    }
    if not report["match"]:
        degree = min(d for d in set(lhs) | set(rhs) if lhs.get(d, 0) != rhs.get(d, 0))
        report["first_difference"] = (degree, lhs.get(degree, 0), rhs.get(degree, 0))
    return report


def refined_macmahon_lhs(r: int | None, t_order: int, q_order: int) -> TruncatedSeries:
    """Weighted sum over plane partitions:

        sum_pi t^|pi| [r]!_q / [r - pi00]!_q * q^chi(pi) * weight(pi, t=0)

    restricted to pi00 <= r. r = None is the large-rank limit: the
    prefactor is 1 and the corner constraint is vacuous.
    """
    profile = TruncationProfile(q=q_order, t=t_order)
    total = TruncatedSeries.zero(profile)
    for w in range(t_order + 1):
        for pi in enumerate_plane_partitions(w, max_first_entry=r):
            fp = vuletic_weight_t0(pi)
            if r is not None:
                fp = fp * q_factorial(r, "q") / q_factorial(r - pi.first_entry, "q")
            fp = fp * FactorProduct.monomial({"q": chi(pi), "t": w})
            total = total + fp.expand(profile)
    return total


def refined_macmahon_rhs(r: int | None, t_order: int, q_order: int) -> TruncatedSeries:
    """prod_{k=1..t_order} prod_{m=1..r} 1/(1 - q^m t^k); m unbounded (up to
    the q cap) in the large-rank limit r = None."""
    profile = TruncationProfile(q=q_order, t=t_order)
    m_top = q_order if r is None else r
    fp = FactorProduct.one()
    for k in range(1, t_order + 1):
        for m in range(1, m_top + 1):
            fp = fp * FactorProduct.from_factor({"q": m, "t": k}, -1)
    return fp.expand(profile)


def refined_macmahon_check(r: int | None, t_order: int, q_order: int) -> dict:
    lhs = refined_macmahon_lhs(r, t_order, q_order)
    rhs = refined_macmahon_rhs(r, t_order, q_order)
    report = {
        "r": "inf" if r is None else r,
        "t_order": t_order,
        "q_order": q_order,
        "match": lhs == rhs,
    }
    if not report["match"]:
        report["first_difference"] = lhs.first_difference(rhs)
    return report


def limit_series_lhs(t_order: int, l_order: int) -> TruncatedSeries:
    """sum_n t^n * sum_{|pi| = n} (limit class of pi) expanded in L."""
    profile = TruncationProfile(t=t_order, L=l_order)
    total = TruncatedSeries.zero(profile)
    for w in range(t_order + 1):
        for pi in enumerate_plane_partitions(w):
            fp = limit_class(pi).factors * FactorProduct.monomial({"t": w})
            total = total + fp.expand(profile)
    return total


def limit_series_rhs(t_order: int, l_order: int) -> TruncatedSeries:
    """prod_{i>=0, j>=1} 1/(1 - L^i t^j)^j, truncated to the caps."""
    profile = TruncationProfile(t=t_order, L=l_order)
    fp = FactorProduct.one()
    for i in range(l_order + 1):
        for j in range(1, t_order + 1):
            fp = fp * FactorProduct.from_factor({"L": i, "t": j}, -j)
    return fp.expand(profile)


def limit_series_check(t_order: int, l_order: int) -> dict:
    lhs = limit_series_lhs(t_order, l_order)
    rhs = limit_series_rhs(t_order, l_order)
    report = {"t_order": t_order, "l_order": l_order, "match": lhs == rhs}
    if not report["match"]:
        report["first_difference"] = lhs.first_difference(rhs)
    return report


def limit_class_check(max_weight: int, l_order: int) -> dict:
    """Per-partition comparison of the t = 0 weight (q renamed to L) against
    the large-rank limit class, both as factored forms and as expansions."""
    checked = 0
    factored_matches = 0
    failures: list[list[list[int]]] = []
    for w in range(max_weight + 1):
        for pi in enumerate_plane_partitions(w):
            checked += 1
            lhs = vuletic_weight_t0(pi).rename("q", "L")
            rhs = limit_class(pi).factors
            if lhs == rhs:
                factored_matches += 1
            profile = TruncationProfile(L=l_order)
            if lhs.expand(profile) != rhs.expand(profile):
                failures.append(pi.to_lists())
    return {
        "max_weight": max_weight,
        "l_order": l_order,
        "num_partitions": checked,
        "factored_matches": factored_matches,
        "failures": failures,
        "match": not failures,
    }
