"""Exact truncated power series and factored products over the integers.

Every coefficient is a Python int; nothing in this module ever constructs a
float. Series live in a fixed four-variable alphabet with per-variable
exponent caps. Products of atomic factors (1 - x^e)^m stay in factored form
until explicitly expanded, so cancellation between numerators and
denominators is exact multiset arithmetic.
"""

from __future__ import annotations

from math import comb
from typing import Mapping

# Closed variable alphabet. "L" is the class of the affine line; identities
# that specialize a formal variable to that class simply rename q -> L.
ALPHABET = ("q", "t", "s", "L")

_ALPHABET_INDEX = {v: i for i, v in enumerate(ALPHABET)}

ExponentKey = tuple[tuple[str, int], ...]


class NotPolynomialError(ValueError):
    """A factored product failed exact polynomial division."""


def _canonical_exponents(exponents: Mapping[str, int]) -> ExponentKey:
    for var in exponents:
        if var not in _ALPHABET_INDEX:
            raise ValueError(f"unknown variable {var!r}; alphabet is {ALPHABET}")
    items = [(v, int(e)) for v, e in exponents.items() if int(e) != 0]
    items.sort(key=lambda ve: _ALPHABET_INDEX[ve[0]])
    return tuple(items)


class TruncationProfile:
    """Per-variable exponent caps; variables not listed are disallowed."""

    __slots__ = ("vars", "caps")

    def __init__(self, caps: Mapping[str, int] | None = None, **kw: int):
        merged: dict[str, int] = dict(caps or {})
        merged.update(kw)
        for var, cap in merged.items():
            if var not in _ALPHABET_INDEX:
                raise ValueError(f"unknown variable {var!r}; alphabet is {ALPHABET}")
            if int(cap) < 0:
                raise ValueError(f"cap for {var!r} must be nonnegative")
        self.vars: tuple[str, ...] = tuple(v for v in ALPHABET if v in merged)
        self.caps: tuple[int, ...] = tuple(int(merged[v]) for v in self.vars)

    def cap(self, var: str) -> int:
        try:
            return self.caps[self.vars.index(var)]
        except ValueError:
            raise ValueError(f"variable {var!r} not allowed by profile {self!r}") from None

    def zero(self) -> tuple[int, ...]:
        return (0,) * len(self.vars)

    def admits(self, vec: tuple[int, ...]) -> bool:
        return all(0 <= e <= c for e, c in zip(vec, self.caps))

    def vector(self, exponents: Mapping[str, int]) -> tuple[int, ...] | None:
        """Full exponent vector for this profile, or None when beyond caps."""
        vec = [0] * len(self.vars)
        for var, e in exponents.items():
            e = int(e)
            if e == 0:
                continue
            if e < 0:
                raise ValueError(f"negative exponent for {var!r}")
            if var not in self.vars:
                raise ValueError(f"variable {var!r} not allowed by profile {self!r}")
            vec[self.vars.index(var)] = e
        vec_t = tuple(vec)
        return vec_t if self.admits(vec_t) else None

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, TruncationProfile)
            and self.vars == other.vars
            and self.caps == other.caps
        )

    def __hash__(self) -> int:
        return hash((self.vars, self.caps))

    def __repr__(self) -> str:
        inner = ", ".join(f"{v}:{c}" for v, c in zip(self.vars, self.caps))
        return f"TruncationProfile({inner})"


class TruncatedSeries:
    """Sparse multivariate polynomial modulo the profile's exponent caps."""

    __slots__ = ("profile", "coeffs")

    def __init__(self, profile: TruncationProfile, coeffs: Mapping[tuple[int, ...], int] = ()):
        self.profile = profile
        self.coeffs: dict[tuple[int, ...], int] = dict(coeffs)

    @classmethod
    def zero(cls, profile: TruncationProfile) -> TruncatedSeries:
        return cls(profile)

    @classmethod
    def one(cls, profile: TruncationProfile) -> TruncatedSeries:
        return cls(profile, {profile.zero(): 1})

    @classmethod
    def monomial(
        cls, profile: TruncationProfile, exponents: Mapping[str, int], coeff: int = 1
    ) -> TruncatedSeries:
        vec = profile.vector(exponents)
        if vec is None or coeff == 0:
            return cls.zero(profile)
        return cls(profile, {vec: int(coeff)})

    def _require_same(self, other: TruncatedSeries) -> None:
        if self.profile != other.profile:
            raise ValueError(f"profile mismatch: {self.profile!r} vs {other.profile!r}")

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        self._require_same(other)
        out = dict(self.coeffs)
        for vec, c in other.coeffs.items():
            nc = out.get(vec, 0) + c
            if nc:
                out[vec] = nc
            else:
                out.pop(vec, None)
        return TruncatedSeries(self.profile, out)

    def __sub__(self, other: TruncatedSeries) -> TruncatedSeries:
        return self + (-other)

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries(self.profile, {k: -v for k, v in self.coeffs.items()})

    def __mul__(self, other: TruncatedSeries) -> TruncatedSeries:
        self._require_same(other)
        caps = self.profile.caps
        a, b = self.coeffs, other.coeffs
        if len(a) > len(b):
            a, b = b, a
        out: dict[tuple[int, ...], int] = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                vec = tuple(x + y for x, y in zip(e1, e2))
                if any(x > c for x, c in zip(vec, caps)):
                    continue
                nc = out.get(vec, 0) + c1 * c2
                if nc:
                    out[vec] = nc
                else:
                    del out[vec]
        return TruncatedSeries(self.profile, out)

    def __pow__(self, n: int) -> TruncatedSeries:
        if n < 0:
            raise ValueError("negative series power; use divide")
        result = TruncatedSeries.one(self.profile)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def divide(self, other: TruncatedSeries) -> TruncatedSeries:
        """Exact quotient in the truncated ring.

        The divisor must have constant term +1 or -1 (a unit over the
        integers); then divide(a, b) * b == a modulo the profile.
        """
        self._require_same(other)
        zero_vec = self.profile.zero()
        c0 = other.coeffs.get(zero_vec, 0)
        if c0 not in (1, -1):
            raise ValueError("divisor constant term must be +1 or -1")
        tail = TruncatedSeries(
            self.profile, {k: -c0 * v for k, v in other.coeffs.items() if k != zero_vec}
        )
        inv = TruncatedSeries.one(self.profile)
        power = TruncatedSeries.one(self.profile)
        for _ in range(sum(self.profile.caps)):
            power = power * tail
            if power.is_zero():
                break
            inv = inv + power
        if c0 == -1:
            inv = -inv
        return self * inv

    def coefficient(self, exponents: Mapping[str, int]) -> int:
        vec = self.profile.vector(exponents)
        return 0 if vec is None else self.coeffs.get(vec, 0)

    def constant_term(self) -> int:
        return self.coeffs.get(self.profile.zero(), 0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == {self.profile.zero(): 1}

    def terms(self) -> list[tuple[tuple[int, ...], int]]:
        """Sorted (exponent vector, coefficient) pairs; deterministic."""
        return sorted(self.coeffs.items())

    def first_difference(
        self, other: TruncatedSeries
    ) -> tuple[tuple[int, ...], int, int] | None:
        """Smallest exponent vector where the two series disagree."""
        self._require_same(other)
        diff = [k for k in set(self.coeffs) | set(other.coeffs)
                if self.coeffs.get(k, 0) != other.coeffs.get(k, 0)]
        if not diff:
            return None
        vec = min(diff)
        return vec, self.coeffs.get(vec, 0), other.coeffs.get(vec, 0)

    def to_json_dict(self) -> list[dict]:
        """Sorted [{exponents: {var: int}, coeff: decimal string}] terms."""
        return [
            {
                "exponents": {v: e for v, e in zip(self.profile.vars, vec) if e},
                "coeff": str(coeff),
            }
            for vec, coeff in self.terms()
        ]

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, TruncatedSeries)
            and self.profile == other.profile
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.profile, tuple(sorted(self.coeffs.items()))))

    def __repr__(self) -> str:
        return f"TruncatedSeries({self.profile!r}, {len(self.coeffs)} terms)"


class FactorProduct:
    """A signed monomial times a multiset of atomic factors (1 - x^e)^m.

    The exponent vector e of a factor key is nonzero with nonnegative
    entries, so every factor has constant term 1 and the whole product is a
    unit in the integer power-series ring. Multiplication and division merge
    multiplicities; common factors cancel exactly before any expansion.
    """

    __slots__ = ("coeff", "mono", "factors")

    def __init__(
        self,
        coeff: int = 1,
        mono: ExponentKey = (),
        factors: Mapping[ExponentKey, int] | None = None,
    ):
        if coeff not in (1, -1):
            raise ValueError("prefactor coefficient must be +1 or -1")
        self.coeff = coeff
        self.mono = mono
        self.factors: dict[ExponentKey, int] = dict(factors or {})

    @classmethod
    def one(cls) -> FactorProduct:
        return cls()

    @classmethod
    def monomial(cls, exponents: Mapping[str, int], coeff: int = 1) -> FactorProduct:
        return cls(coeff, _canonical_exponents(exponents), {})

    @classmethod
    def from_factor(cls, exponents: Mapping[str, int], multiplicity: int = 1) -> FactorProduct:
        key = _canonical_exponents(exponents)
        if not key:
            raise ValueError("the factor (1 - 1) is forbidden")
        if any(e < 0 for _, e in key):
            raise ValueError("factor exponents must be nonnegative")
        if multiplicity == 0:
            return cls.one()
        return cls(1, (), {key: int(multiplicity)})

    def _mono_dict(self) -> dict[str, int]:
        return dict(self.mono)

    def __mul__(self, other: FactorProduct) -> FactorProduct:
        factors = dict(self.factors)
        for key, m in other.factors.items():
            nm = factors.get(key, 0) + m
            if nm:
                factors[key] = nm
            else:
                del factors[key]
        mono = self._mono_dict()
        for var, e in other.mono:
            mono[var] = mono.get(var, 0) + e
        return FactorProduct(self.coeff * other.coeff, _canonical_exponents(mono), factors)

    def inverse(self) -> FactorProduct:
        return FactorProduct(
            self.coeff,
            tuple((v, -e) for v, e in self.mono),
            {k: -m for k, m in self.factors.items()},
        )

    def __truediv__(self, other: FactorProduct) -> FactorProduct:
        return self * other.inverse()

    def __pow__(self, n: int) -> FactorProduct:
        if n == 0:
            return FactorProduct.one()
        coeff = 1 if self.coeff == 1 or n % 2 == 0 else -1
        return FactorProduct(
            coeff,
            tuple((v, e * n) for v, e in self.mono),
            {k: m * n for k, m in self.factors.items()},
        )

    def is_one(self) -> bool:
        return self.coeff == 1 and not self.mono and not self.factors

    def variables(self) -> set[str]:
        out = {v for v, _ in self.mono}
        for key in self.factors:
            out.update(v for v, _ in key)
        return out

    def substitute_zero(self, var: str) -> FactorProduct:
        """Set a variable to zero.

        Every factor whose exponent vector touches the variable has constant
        term 1 and collapses to 1; the monomial prefactor must not involve
        the variable (the result would vanish or blow up).
        """
        for v, e in self.mono:
            if v == var:
                raise ValueError(f"monomial prefactor involves {var!r}; specialization is singular")
        factors = {k: m for k, m in self.factors.items() if all(v != var for v, _ in k)}
        return FactorProduct(self.coeff, self.mono, factors)

    def rename(self, old: str, new: str) -> FactorProduct:
        if old == new:
            return self
        if new in self.variables():
            raise ValueError(f"variable {new!r} already present")

        def rekey(key: ExponentKey) -> ExponentKey:
            return _canonical_exponents({(new if v == old else v): e for v, e in key})

        return FactorProduct(
            self.coeff, rekey(self.mono), {rekey(k): m for k, m in self.factors.items()}
        )

    def expand(self, profile: TruncationProfile) -> TruncatedSeries:
        """Exact expansion truncated to the profile.

        A factor whose lowest monomial already exceeds the caps contributes
        1. Negative multiplicities expand through the binomial series
        (1 - u)^-n = sum_k C(n+k-1, k) u^k, exact over the integers.
        """
        for _, e in self.mono:
            if e < 0:
                raise ValueError("negative exponent in monomial prefactor; cannot expand")
        series = TruncatedSeries.monomial(profile, self._mono_dict(), self.coeff)
        for key, mult in sorted(self.factors.items()):
            if series.is_zero():
                break
            vec = profile.vector(dict(key))
            if vec is None:
                continue
            kmax = min(c // e for e, c in zip(vec, profile.caps) if e > 0)
            if kmax == 0:
                continue
            if mult > 0:
                top = min(kmax, mult)
                poly = {
                    tuple(k * x for x in vec): comb(mult, k) * (-1) ** k
                    for k in range(top + 1)
                }
            else:
                poly = {
                    tuple(k * x for x in vec): comb(-mult + k - 1, k)
                    for k in range(kmax + 1)
                }
            series = series * TruncatedSeries(profile, poly)
        return series

    def to_polynomial(self) -> tuple[str | None, dict[int, int]]:
        """Certify the product as a univariate polynomial.

        Returns (variable, {degree: coefficient}); the variable is None for
        constants. Raises NotPolynomialError when more than one variable is
        involved or a denominator factor fails to divide out exactly.
        """
        vars_used = self.variables()
        if len(vars_used) > 1:
            raise NotPolynomialError(f"not univariate: {sorted(vars_used)}")
        var = next(iter(vars_used)) if vars_used else None
        poly = {0: self.coeff}
        negatives: list[tuple[int, int]] = []
        for key, mult in sorted(self.factors.items()):
            e = key[0][1]
            if mult > 0:
                for _ in range(mult):
                    poly = _mul_one_minus(poly, e)
            else:
                negatives.append((e, -mult))
        for e, count in negatives:
            for _ in range(count):
                poly = _div_one_minus(poly, e)
        shift = self.mono[0][1] if self.mono else 0
        if shift:
            if shift < 0 and any(d < -shift for d in poly):
                raise NotPolynomialError("monomial denominator does not divide")
            poly = {d + shift: c for d, c in poly.items()}
        return var, poly

    def evaluate_int(self, x: int) -> int:
        """Exact integer value; requires a certified univariate polynomial."""
        _, poly = self.to_polynomial()
        return sum(c * x**d for d, c in poly.items())

    def to_json_dict(self) -> dict:
        """{prefactor: {coeff, monomial}, factors: [{exponents, multiplicity}]}."""
        return {
            "prefactor": {"coeff": str(self.coeff), "monomial": dict(self.mono)},
            "factors": [
                {"exponents": dict(key), "multiplicity": mult}
                for key, mult in sorted(self.factors.items())
            ],
        }

    def _key(self) -> tuple:
        return (self.coeff, self.mono, tuple(sorted(self.factors.items())))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FactorProduct) and self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        def fmt_mono(key: ExponentKey) -> str:
            return " ".join(f"{v}^{e}" if e != 1 else v for v, e in key) or "1"

        parts = [] if self.coeff == 1 else ["-"]
        if self.mono:
            parts.append(fmt_mono(self.mono))
        for key, m in sorted(self.factors.items()):
            parts.append(f"(1 - {fmt_mono(key)})^{m}" if m != 1 else f"(1 - {fmt_mono(key)})")
        return "FactorProduct[" + (" ".join(parts) or "1") + "]"


def _mul_one_minus(poly: dict[int, int], e: int) -> dict[int, int]:
    out = dict(poly)
    for d, c in poly.items():
        nc = out.get(d + e, 0) - c
        if nc:
            out[d + e] = nc
        else:
            out.pop(d + e, None)
    return out


def _div_one_minus(poly: dict[int, int], e: int) -> dict[int, int]:
    """Exact quotient poly / (1 - x^e); verified by multiplying back."""
    if not poly:
        return {}
    deg = max(poly)
    q: dict[int, int] = {}
    for d in range(deg + 1):
        c = poly.get(d, 0) + q.get(d - e, 0)
        if c:
            q[d] = c
    if _mul_one_minus(q, e) != poly:
        raise NotPolynomialError(f"factor (1 - x^{e}) does not divide exactly")
    return q


def q_factorial(n: int, var: str = "q") -> FactorProduct:
    """(1 - x)(1 - x^2)...(1 - x^n); the empty product 1 for n = 0."""
    if n < 0:
        raise ValueError("q-factorial needs a nonnegative order")
    out = FactorProduct.one()
    for i in range(1, n + 1):
        out = out * FactorProduct.from_factor({var: i})
    return out


def gl_class(n: int) -> FactorProduct:
    """Class of the invertible n x n matrices, prod_{i<n} (L^n - L^i).

    Normalized to the factored form (-1)^n L^(n(n-1)/2) (1-L)...(1-L^n),
    which keeps the sign bookkeeping exact.
    """
    if n < 0:
        raise ValueError("gl_class needs a nonnegative rank")
    sign = 1 if n % 2 == 0 else -1
    return FactorProduct.monomial({"L": n * (n - 1) // 2}, sign) * q_factorial(n, "L")


def evaluate_at_integer(obj: FactorProduct | TruncatedSeries, x: int) -> int:
    """Exact integer specialization of a univariate polynomial object."""
    if isinstance(obj, FactorProduct):
        return obj.evaluate_int(x)
    if isinstance(obj, TruncatedSeries):
        if len(obj.profile.vars) > 1:
            raise NotPolynomialError(f"not univariate: {obj.profile.vars}")
        return sum(c * x ** (vec[0] if vec else 0) for vec, c in obj.coeffs.items())
    raise TypeError(f"cannot evaluate {type(obj).__name__}")
