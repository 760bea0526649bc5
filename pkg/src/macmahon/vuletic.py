"""Vuletic's two-variable box weights for plane partitions and the two
sides of the weighted MacMahon identity

    sum_pi F_pi(q, t) s^|pi|  =  prod_{n>=1} prod_{k>=0} ((1 - t s^n q^k) / (1 - s^n q^k))^n.

Weights are kept in factored form end to end; expansion happens only at the
identity-verification boundary.
"""

from __future__ import annotations

from dataclasses import dataclass

from .partitions import PlanePartition, diagonal_partitions, enumerate_plane_partitions
from .series import FactorProduct, TruncatedSeries, TruncationProfile


def little_f(n: int, m: int) -> FactorProduct:
    """prod_{i<n} (1 - q^i t^(m+1)) / (1 - q^(i+1) t^m); 1 when n = 0."""
    if n < 0 or m < 0:
        raise ValueError("little_f needs nonnegative arguments")
    out = FactorProduct.one()
    for i in range(n):
        out = out * FactorProduct.from_factor({"q": i, "t": m + 1})
        out = out / FactorProduct.from_factor({"q": i + 1, "t": m})
    return out


@dataclass(frozen=True)
class BoxWeight:
    """The weight attached to one box of a plane partition."""

    box: tuple[int, int]
    factor: FactorProduct


def _level_factor(top: int, lam, mu, nu, m: int) -> FactorProduct:
    args = (
        top - mu.part(m + 1),
        top - nu.part(m + 1),
        top - lam.part(m + 1),
        top - lam.part(m + 2),
    )
    assert all(a >= 0 for a in args), f"negative weight argument at level {m}: {args}"
    num = little_f(args[0], m) * little_f(args[1], m)
    den = little_f(args[2], m) * little_f(args[3], m)
    return num / den


def box_weight(pi: PlanePartition, i: int, j: int, levels: int | None = None) -> BoxWeight:
    """Weight of box (i, j): the product over levels m of

        f(a - mu_{m+1}, m) f(a - nu_{m+1}, m) / (f(a - lam_{m+1}, m) f(a - lam_{m+2}, m))

    where a = pi[i,j] and lam, mu, nu are the diagonal slices through the box
    and its lower/right neighbors. Beyond max(len(lam), len(mu), len(nu))
    every level collapses to 1; the cutoff is checked, not trusted: the next
    level must be the identity.
    """
    lam, mu, nu = diagonal_partitions(pi, i, j)
    top = lam.part(1)
    cut = max(len(lam), len(mu), len(nu)) if levels is None else levels
    out = FactorProduct.one()
    for m in range(cut):
        out = out * _level_factor(top, lam, mu, nu, m)
    if levels is None:
        assert _level_factor(top, lam, mu, nu, cut).is_one(), (
            f"box weight cutoff unstable at box ({i}, {j}) of {pi!r}"
        )
    return BoxWeight((i, j), out)


def vuletic_weight(pi: PlanePartition) -> FactorProduct:
    """Product of the box weights over the support; 1 for the empty partition."""
    out = FactorProduct.one()
    for i, j in pi.support():
        out = out * box_weight(pi, i, j).factor
    return out


def vuletic_weight_t0(pi: PlanePartition) -> FactorProduct:
    """The t = 0 specialization of the weight, a product in q alone."""
    return vuletic_weight(pi).substitute_zero("t")


def vuletic_lhs(s_order: int, profile: TruncationProfile) -> TruncatedSeries:
    """Sum over all plane partitions of weight(pi) * s^|pi|, to the caps."""
    if profile.cap("s") != s_order:
        raise ValueError("profile must cap s at the requested order")
    total = TruncatedSeries.zero(profile)
    for w in range(s_order + 1):
        for pi in enumerate_plane_partitions(w):
            term = vuletic_weight(pi) * FactorProduct.monomial({"s": w})
            total = total + term.expand(profile)
    return total


def vuletic_rhs(s_order: int, profile: TruncationProfile) -> TruncatedSeries:
    """The double product side, expanded to the caps.

    Only the factors whose monomial s^n q^k fits under the s and q caps are
    included; all others contribute 1 (their lowest non-constant monomial
    already exceeds the caps). The n-th power is taken on multiplicities.
    """
    if profile.cap("s") != s_order:
        raise ValueError("profile must cap s at the requested order")
    q_order = profile.cap("q")
    out = FactorProduct.one()
    for n in range(1, s_order + 1):
        for k in range(q_order + 1):
            out = out * FactorProduct.from_factor({"t": 1, "s": n, "q": k}, n)
            out = out * FactorProduct.from_factor({"s": n, "q": k}, -n)
    return out.expand(profile)
