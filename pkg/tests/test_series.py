import random

import pytest

from macmahon.series import (
    FactorProduct,
    NotPolynomialError,
    TruncatedSeries,
    TruncationProfile,
    evaluate_at_integer,
    gl_class,
    q_factorial,
)


def _random_series(profile, rng, terms=4, bound=3):
    s = TruncatedSeries.zero(profile)
    for _ in range(terms):
        exps = {v: rng.randint(0, c) for v, c in zip(profile.vars, profile.caps)}
        s = s + TruncatedSeries.monomial(profile, exps, rng.randint(-bound, bound))
    return s


def _random_factor_product(rng, variables=("q", "t"), factors=3):
    fp = FactorProduct.one()
    for _ in range(factors):
        exps = {v: rng.randint(0, 2) for v in variables}
        if all(e == 0 for e in exps.values()):
            exps[variables[0]] = 1
        fp = fp * FactorProduct.from_factor(exps, rng.choice((-2, -1, 1, 2)))
    return fp


def test_basic_products():
    p = TruncationProfile(q=2)
    one = TruncatedSeries.one(p)
    q = TruncatedSeries.monomial(p, {"q": 1})
    assert ((one + q) * (one - q)).terms() == [((0,), 1), ((2,), -1)]
    assert (one + q) + TruncatedSeries.zero(p) == one + q


def test_mixed_variable_coefficient():
    p = TruncationProfile(q=2, t=1)
    a = TruncatedSeries.one(p) + TruncatedSeries.monomial(p, {"q": 1}) + TruncatedSeries.monomial(p, {"q": 2})
    b = TruncatedSeries.one(p) + TruncatedSeries.monomial(p, {"t": 1})
    assert (a * b).coefficient({"q": 1, "t": 1}) == 1


def test_profile_mismatch_raises():
    a = TruncatedSeries.one(TruncationProfile(q=2))
    b = TruncatedSeries.one(TruncationProfile(q=3))
    with pytest.raises(ValueError):
        a + b
    with pytest.raises(ValueError):
        a * b


def test_ring_axioms_randomized():
    rng = random.Random(20240811)
    profile = TruncationProfile(q=3, t=2)
    for _ in range(25):
        a = _random_series(profile, rng)
        b = _random_series(profile, rng)
        c = _random_series(profile, rng)
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c


def test_division_geometric():
    p = TruncationProfile(q=4)
    one = TruncatedSeries.one(p)
    geo = one.divide(one - TruncatedSeries.monomial(p, {"q": 1}))
    assert geo.terms() == [((k,), 1) for k in range(5)]


def test_division_cancels_factor():
    p = TruncationProfile(q=3)
    one = TruncatedSeries.one(p)
    num = one - TruncatedSeries.monomial(p, {"q": 2})
    den = one - TruncatedSeries.monomial(p, {"q": 1})
    assert num.divide(den) == one + TruncatedSeries.monomial(p, {"q": 1})


def test_division_three_variables():
    # (1 - t s q) / (1 - s q) against the multiplied-out oracle
    p = TruncationProfile(q=2, t=2, s=2)
    one = TruncatedSeries.one(p)
    num = one - TruncatedSeries.monomial(p, {"t": 1, "s": 1, "q": 1})
    den = one - TruncatedSeries.monomial(p, {"s": 1, "q": 1})
    expected = TruncatedSeries.zero(p)
    for k in range(3):
        expected = expected + TruncatedSeries.monomial(p, {"s": k, "q": k})
        if k >= 1:
            expected = expected - TruncatedSeries.monomial(p, {"t": 1, "s": k, "q": k})
    assert num.divide(den) == expected


def test_division_postcondition_randomized():
    rng = random.Random(77)
    profile = TruncationProfile(q=3, t=2)
    one = TruncatedSeries.one(profile)
    for _ in range(25):
        a = _random_series(profile, rng)
        b = one + _random_series(profile, rng)
        if b.constant_term() not in (1, -1):
            continue
        assert a.divide(b) * b == a


def test_division_requires_unit():
    p = TruncationProfile(q=2)
    with pytest.raises(ValueError):
        TruncatedSeries.one(p).divide(TruncatedSeries.monomial(p, {"q": 1}))
    with pytest.raises(ValueError):
        TruncatedSeries.one(p).divide(TruncatedSeries.monomial(p, {}, 2))


def test_expand_empty_and_geometric():
    p = TruncationProfile(q=3)
    assert FactorProduct.one().expand(p).is_one()
    geo = FactorProduct.from_factor({"q": 1}, -1).expand(p)
    assert geo.terms() == [((k,), 1) for k in range(4)]


def test_expand_is_multiplicative_randomized():
    rng = random.Random(1234)
    profile = TruncationProfile(q=4, t=3)
    for _ in range(20):
        f = _random_factor_product(rng)
        g = _random_factor_product(rng)
        assert (f * g).expand(profile) == f.expand(profile) * g.expand(profile)


def test_expand_beyond_caps_contributes_one():
    p = TruncationProfile(q=2)
    fp = FactorProduct.from_factor({"q": 5}, -3)
    assert fp.expand(p).is_one()


def test_expand_unknown_variable():
    with pytest.raises(ValueError):
        FactorProduct.from_factor({"t": 1}).expand(TruncationProfile(q=2))


def test_forbidden_factor():
    with pytest.raises(ValueError):
        FactorProduct.from_factor({})
    with pytest.raises(ValueError):
        FactorProduct.from_factor({"q": 0})


def test_q_factorial_structure():
    assert q_factorial(0).is_one()
    assert q_factorial(1) == FactorProduct.from_factor({"q": 1})
    f3 = q_factorial(3)
    assert f3.factors == {(("q", 1),): 1, (("q", 2),): 1, (("q", 3),): 1}
    for n in range(7):
        series = q_factorial(n).expand(TruncationProfile(q=n * (n + 1) // 2 + 1))
        degrees = [vec[0] for vec, _ in series.terms()]
        assert max(degrees, default=0) == n * (n + 1) // 2
        assert series.constant_term() == 1


def _brute_force_gl_count(n, p):
    # every n x n matrix over F_p, keep the invertible ones
    import itertools

    count = 0
    for entries in itertools.product(range(p), repeat=n * n):
        mat = [list(entries[i * n : (i + 1) * n]) for i in range(n)]
        # rank by elimination
        rank = 0
        m = [row[:] for row in mat]
        for c in range(n):
            piv = next((r for r in range(rank, n) if m[r][c] % p), None)
            if piv is None:
                continue
            m[rank], m[piv] = m[piv], m[rank]
            inv = pow(m[rank][c], -1, p)
            m[rank] = [(v * inv) % p for v in m[rank]]
            for r in range(n):
                if r != rank and m[r][c] % p:
                    f = m[r][c]
                    m[r] = [(v - f * w) % p for v, w in zip(m[r], m[rank])]
            rank += 1
        count += rank == n
    return count


def test_gl_class_values():
    assert gl_class(0).is_one()
    assert gl_class(1).evaluate_int(3) == 2
    assert gl_class(2).evaluate_int(2) == _brute_force_gl_count(2, 2) == 6
    assert gl_class(2).evaluate_int(3) == _brute_force_gl_count(2, 3) == 48
    assert gl_class(3).evaluate_int(2) == _brute_force_gl_count(3, 2) == 168


def test_evaluate_at_integer():
    assert evaluate_at_integer(FactorProduct.one(), 5) == 1
    assert evaluate_at_integer(gl_class(1), 3) == 2
    series = q_factorial(2, "L").expand(TruncationProfile(L=3))
    assert evaluate_at_integer(series, 2) == (1 - 2) * (1 - 4)
    with pytest.raises(NotPolynomialError):
        evaluate_at_integer(FactorProduct.from_factor({"q": 1}, -1), 2)
    with pytest.raises(NotPolynomialError):
        fp = FactorProduct.from_factor({"q": 1}) * FactorProduct.from_factor({"t": 1})
        fp.evaluate_int(2)


def test_to_polynomial_cancellation():
    fp = q_factorial(3, "L") / (q_factorial(2, "L") * q_factorial(1, "L"))
    var, poly = fp.to_polynomial()
    assert var == "L"
    assert poly == {0: 1, 1: 1, 2: 1}


def test_to_polynomial_rejects_nonpolynomial():
    with pytest.raises(NotPolynomialError):
        (FactorProduct.from_factor({"q": 2}) / FactorProduct.from_factor({"q": 3})).to_polynomial()


def test_substitute_zero():
    fp = FactorProduct.from_factor({"t": 1}) * FactorProduct.from_factor({"q": 1}, -1)
    assert fp.substitute_zero("t") == FactorProduct.from_factor({"q": 1}, -1)
    mixed = FactorProduct.from_factor({"q": 1, "t": 2}, -4) * FactorProduct.from_factor({"q": 2})
    assert mixed.substitute_zero("t") == FactorProduct.from_factor({"q": 2})
    with pytest.raises(ValueError):
        FactorProduct.monomial({"t": 1}).substitute_zero("t")


def test_rename():
    fp = q_factorial(2, "q")
    assert fp.rename("q", "L") == q_factorial(2, "L")
    with pytest.raises(ValueError):
        (FactorProduct.from_factor({"q": 1}) * FactorProduct.from_factor({"L": 1})).rename("q", "L")


def test_profile_validation():
    with pytest.raises(ValueError):
        TruncationProfile(x=3)
    with pytest.raises(ValueError):
        TruncationProfile(q=-1)
    p = TruncationProfile(q=2, s=1)
    assert p.vars == ("q", "s")
    with pytest.raises(ValueError):
        p.cap("t")


def test_series_json_schema():
    p = TruncationProfile(q=2, t=1)
    s = TruncatedSeries.one(p) - TruncatedSeries.monomial(p, {"q": 2, "t": 1}, 3)
    assert s.to_json_dict() == [
        {"exponents": {}, "coeff": "1"},
        {"exponents": {"q": 2, "t": 1}, "coeff": "-3"},
    ]


def test_factor_product_json_schema():
    fp = gl_class(2)
    doc = fp.to_json_dict()
    assert doc["prefactor"] == {"coeff": "1", "monomial": {"L": 1}}
    assert doc["factors"] == [
        {"exponents": {"L": 1}, "multiplicity": 1},
        {"exponents": {"L": 2}, "multiplicity": 1},
    ]
