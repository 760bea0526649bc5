"""Desk-scale verification checks bundling every identity in the package.

Each check returns a report dict with a boolean "match" and enough payload
to diagnose a failure. The test suite and the command-line `all` subcommand
both run these.
"""

from __future__ import annotations

from .fforacle import (
    ChainInstance,
    DEFAULT_BUDGET,
    GridInstance,
    chain_entry_count,
    count_chain_points,
    grid_entry_count,
    oracle_vs_class,
    surjective_h_choices,
)
from .motivic import (
    bb_identity_check,
    fixed_component_class,
    limit_class_check,
    limit_series_check,
    refined_macmahon_check,
)
from .partitions import (
    enumerate_diagram_tuples,
    enumerate_plane_partitions,
    partition_of_tuple,
)
from .series import FactorProduct, TruncationProfile
from .torus import attracting_dimension, positive_weight_count, tangent_character
from .vuletic import vuletic_lhs, vuletic_rhs

MACMAHON_COUNTS = (1, 1, 3, 6, 13, 24, 48, 86, 160)


def check_macmahon_baseline(order: int = 8) -> dict:
    """Enumerator counts against the series expansion of prod (1-s^k)^-k."""
    counts = [
        sum(1 for _ in enumerate_plane_partitions(n)) for n in range(order + 1)
    ]
    fp = FactorProduct.one()
    for k in range(1, order + 1):
        fp = fp * FactorProduct.from_factor({"s": k}, -k)
    series = fp.expand(TruncationProfile(s=order))
    expanded = [series.coefficient({"s": n}) for n in range(order + 1)]
    expected = list(MACMAHON_COUNTS[: order + 1])
    return {
        "name": "macmahon",
        "order": order,
        "enumerated": counts,
        "expanded": expanded,
        "match": counts == expanded == expected,
    }


def check_vuletic(s_order: int = 6, q_order: int = 6, t_order: int = 6) -> dict:
    """Coefficient-exact equality of the weighted sum and the double product."""
    profile = TruncationProfile(s=s_order, q=q_order, t=t_order)
    lhs = vuletic_lhs(s_order, profile)
    rhs = vuletic_rhs(s_order, profile)
    num_partitions = sum(
        1 for w in range(s_order + 1) for _ in enumerate_plane_partitions(w)
    )
    report = {
        "name": "vuletic",
        "orders": {"s": s_order, "q": q_order, "t": t_order},
        "num_partitions": num_partitions,
        "match": lhs == rhs,
    }
    if not report["match"]:
        report["first_difference"] = lhs.first_difference(rhs)
    return report


def check_limit_class(max_weight: int = 5, l_order: int = 20) -> dict:
    """The t = 0 weight of every small partition equals its limit class."""
    report = limit_class_check(max_weight, l_order)
    report["name"] = "limit-class"
    return report


def check_refined_macmahon() -> dict:
    """The rank-refined identity for r in {1, 2, 3} and its large-rank form."""
    cases = [
        refined_macmahon_check(1, 6, 10),
        refined_macmahon_check(2, 6, 10),
        refined_macmahon_check(3, 6, 10),
        refined_macmahon_check(None, 5, 8),
    ]
    return {
        "name": "refined-macmahon",
        "cases": cases,
        "match": all(c["match"] for c in cases),
    }


def check_limit_series(t_order: int = 6, l_order: int = 10) -> dict:
    report = limit_series_check(t_order, l_order)
    report["name"] = "limit-series"
    return report


def check_bb(r_max: int = 3, n_max: int = 5) -> dict:
    """Attracting-cell decomposition against the known generating product."""
    cases = []
    for r in range(1, r_max + 1):
        for n in range(n_max + 1):
            rep = bb_identity_check(r, n)
            cases.append({k: rep[k] for k in ("r", "n", "num_components", "match")})
    return {"name": "bb", "cases": cases, "match": all(c["match"] for c in cases)}


def check_tangent(r_max: int = 3, n_max: int = 5) -> dict:
    """Tangent dimension 2rn, the attracting-dimension closed form, and
    alpha-stability of the positive-weight count."""
    checked = 0
    failures: list[dict] = []
    for r in range(1, r_max + 1):
        for n in range(n_max + 1):
            alphas = list(range(n + 2, 2 * n + 5))
            for tup in enumerate_diagram_tuples(r, n):
                checked += 1
                character = tangent_character(tup)
                ok = character.size() == 2 * r * n
                pi = partition_of_tuple(tup)
                counts = [positive_weight_count(tup, a) for a in alphas]
                ok = ok and counts[0] == attracting_dimension(pi, r)
                ok = ok and all(c == counts[0] for c in counts)
                ok = ok and all(
                    k1 + a * k2 != 0
                    for a in alphas
                    for (_, _, k1, k2) in character.terms
                    if (k1, k2) != (0, 0)
                )
                if not ok:
                    failures.append({"tuple": tup.to_lists(), "r": r, "n": n})
    return {
        "name": "tangent",
        "num_tuples": checked,
        "failures": failures,
        "match": not failures,
    }


def _chain_domain(max_top: int = 3) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    chains: list[tuple[tuple[int, ...], tuple[int, ...]]] = []
    for m1 in range(1, max_top + 1):
        for v1 in range(m1 + 1):
            chains.append(((m1,), (v1,)))
    for m1 in range(1, max_top + 1):
        for m2 in range(m1 + 1):
            for v1 in range(m1 + 1):
                for v2 in range(min(v1, m2) + 1):
                    chains.append(((m1, m2), (v1, v2)))
    return chains


def check_oracle(
    max_grid_weight: int = 4, max_top: int = 3, budget: int = DEFAULT_BUDGET
) -> dict:
    """Finite-field point counts against the class polynomials at L = 2, 3.

    Every in-budget grid with |pi| <= max_grid_weight and every in-budget
    chain with at most two stages and top dimension <= max_top is counted
    exhaustively; chains are additionally swept over every surjective choice
    of the intertwining map, whose value must not affect the count.
    """
    primes = (2, 3)
    grid_checked = chain_checked = skipped = h_variants = 0
    failures: list[dict] = []

    for w in range(max_grid_weight + 1):
        for pi in enumerate_plane_partitions(w):
            inst = GridInstance(pi, budget=budget)
            for p in primes:
                if p ** grid_entry_count(pi) > budget:
                    skipped += 1
                    continue
                rep = oracle_vs_class(inst, p)
                grid_checked += 1
                if not rep["match"]:
                    failures.append(rep)

    for mu, nu in _chain_domain(max_top):
        entries = chain_entry_count(mu, nu)
        for p in primes:
            if p**entries > budget:
                skipped += 1
                continue
            rep = oracle_vs_class(ChainInstance(mu, nu, budget=budget), p)
            chain_checked += 1
            if not rep["match"]:
                failures.append(rep)
                continue
            if len(mu) == 2:
                base = rep["count"]
                for h in surjective_h_choices(nu[1], nu[0], p):
                    h_variants += 1
                    alt = count_chain_points(ChainInstance(mu, nu, (h,), budget), p)
                    if alt != base:
                        failures.append(
                            {"kind": "chain-h", "mu": list(mu), "nu": list(nu),
                             "p": p, "h": [list(r) for r in h],
                             "count": alt, "expected": base, "match": False}
                        )
    return {
        "name": "oracle",
        "grids_checked": grid_checked,
        "chains_checked": chain_checked,
        "h_variants": h_variants,
        "skipped_over_budget": skipped,
        "failures": failures,
        "match": not failures,
    }


def check_class_structure(r_max: int = 4, max_weight: int = 5) -> dict:
    """Every finite-rank component class is a certified polynomial with
    nonnegative coefficients and constant term 1."""
    checked = 0
    failures: list[dict] = []
    for r in range(1, r_max + 1):
        for w in range(max_weight + 1):
            for pi in enumerate_plane_partitions(w, max_first_entry=r):
                checked += 1
                poly = fixed_component_class(r, pi).polynomial()
                if poly.get(0, 0) != 1 or any(c < 0 for c in poly.values()):
                    failures.append({"r": r, "partition": pi.to_lists(), "poly": poly})
    return {
        "name": "class-structure",
        "num_classes": checked,
        "failures": failures,
        "match": not failures,
    }


def run_all() -> list[dict]:
    """All checks at the documented desk scale, in a canonical order."""
    return [
        check_macmahon_baseline(),
        check_vuletic(),
        check_limit_class(),
        check_refined_macmahon(),
        check_limit_series(),
        check_bb(),
        check_tangent(),
        check_oracle(),
        check_class_structure(),
    ]
