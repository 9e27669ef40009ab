"""Exact arithmetic in Q(zeta_p)[s] / (s^2 - p).

zeta_p is a primitive p-th root of unity, stored by its coordinates in the
power basis 1, zeta, ..., zeta^(p-2) with the reduction
zeta^(p-1) = -(1 + zeta + ... + zeta^(p-2)).  s is a formal square root of p,
kept unresolved: values are a + b*s with a, b in Q(zeta_p), and s^(-1) = s/p.
All coefficients are `fractions.Fraction`, so every identity in the suites is
an exact equality, never a float comparison.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_odd_prime(p: int) -> bool:
    if p < 3 or p % 2 == 0:
        return False
    for q in _SMALL_PRIMES:
        if p == q:
            return True
        if p % q == 0:
            return False
    d = 41
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def _require_odd_prime(p: int) -> None:
    if not is_odd_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")


class CycloElement:
    """An element of Q(zeta_p) in the power basis of length p-1."""

    __slots__ = ("p", "coeffs")

    def __init__(self, p: int, coeffs: Sequence[Fraction | int]):
        _require_odd_prime(p)
        if len(coeffs) != p - 1:
            raise ValueError(f"need {p - 1} coefficients, got {len(coeffs)}")
        self.p = p
        self.coeffs: tuple[Fraction, ...] = tuple(Fraction(c) for c in coeffs)

    @staticmethod
    def zero(p: int) -> "CycloElement":
        return CycloElement(p, [0] * (p - 1))

    @staticmethod
    def one(p: int) -> "CycloElement":
        return CycloElement(p, [1] + [0] * (p - 2))

    @staticmethod
    def rational(p: int, value: Fraction | int) -> "CycloElement":
        return CycloElement(p, [Fraction(value)] + [0] * (p - 2))

    @staticmethod
    def zeta_power(p: int, k: int) -> "CycloElement":
        """zeta^k, reduced into the power basis."""
        k %= p
        if k < p - 1:
            coeffs = [Fraction(0)] * (p - 1)
            coeffs[k] = Fraction(1)
            return CycloElement(p, coeffs)
        return CycloElement(p, [Fraction(-1)] * (p - 1))

    def _check(self, other: "CycloElement") -> None:
        if self.p != other.p:
            raise ValueError("mixed cyclotomic fields")

    def __add__(self, other: "CycloElement") -> "CycloElement":
        self._check(other)
        return CycloElement(self.p, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "CycloElement") -> "CycloElement":
        self._check(other)
        return CycloElement(self.p, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self) -> "CycloElement":
        return CycloElement(self.p, [-a for a in self.coeffs])

    def __mul__(self, other: "CycloElement | Fraction | int") -> "CycloElement":
        if isinstance(other, (Fraction, int)):
            f = Fraction(other)
            return CycloElement(self.p, [a * f for a in self.coeffs])
        self._check(other)
        p = self.p
        # exponent accumulation mod p, then eliminate zeta^(p-1)
        acc = [Fraction(0)] * p
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    acc[(i + j) % p] += a * b
        top = acc[p - 1]
        return CycloElement(p, [acc[i] - top for i in range(p - 1)])

    __rmul__ = __mul__

    def scalar_div(self, other: Fraction | int) -> "CycloElement":
        f = Fraction(other)
        return CycloElement(self.p, [a / f for a in self.coeffs])

    def conjugate(self) -> "CycloElement":
        """Galois conjugation zeta -> zeta^(-1)."""
        p = self.p
        acc = [Fraction(0)] * p
        for i, a in enumerate(self.coeffs):
            acc[(-i) % p] += a
        top = acc[p - 1]
        return CycloElement(p, [acc[i] - top for i in range(p - 1)])

    def galois(self, k: int) -> "CycloElement":
        """Galois action zeta -> zeta^k for k not divisible by p."""
        p = self.p
        if k % p == 0:
            raise ValueError("k must be prime to p")
        acc = [Fraction(0)] * p
        for i, a in enumerate(self.coeffs):
            acc[(i * k) % p] += a
        top = acc[p - 1]
        return CycloElement(p, [acc[i] - top for i in range(p - 1)])

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coeffs)

    def is_rational(self) -> bool:
        return all(a == 0 for a in self.coeffs[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"not rational: {self}")
        return self.coeffs[0]

    def inverse(self) -> "CycloElement":
        """Multiplicative inverse via a rational linear solve in the power basis."""
        if self.is_zero():
            raise ZeroDivisionError("cyclotomic zero has no inverse")
        p = self.p
        n = p - 1
        cols = [(CycloElement.zeta_power(p, j) * self).coeffs for j in range(n)]
        aug = [[cols[j][i] for j in range(n)] + [Fraction(1 if i == 0 else 0)] for i in range(n)]
        for c in range(n):
            piv = next(i for i in range(c, n) if aug[i][c] != 0)
            aug[c], aug[piv] = aug[piv], aug[c]
            f = aug[c][c]
            aug[c] = [x / f for x in aug[c]]
            for i in range(n):
                if i != c and aug[i][c] != 0:
                    g = aug[i][c]
                    aug[i] = [x - g * y for x, y in zip(aug[i], aug[c])]
        return CycloElement(p, [aug[i][n] for i in range(n)])

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, CycloElement)
            and self.p == other.p
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.p, self.coeffs))

    def __repr__(self) -> str:
        terms = []
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            if i == 0:
                terms.append(str(a))
            elif i == 1:
                terms.append(f"{a}*z")
            else:
                terms.append(f"{a}*z^{i}")
        return " + ".join(terms) if terms else "0"


class RingValue:
    """a + b*s with a, b in Q(zeta_p) and s^2 = p."""

    __slots__ = ("p", "a", "b")

    def __init__(self, p: int, a: CycloElement, b: CycloElement | None = None):
        _require_odd_prime(p)
        if a.p != p or (b is not None and b.p != p):
            raise ValueError("component field mismatch")
        self.p = p
        self.a = a
        self.b = b if b is not None else CycloElement.zero(p)

    @staticmethod
    def zero(p: int) -> "RingValue":
        return RingValue(p, CycloElement.zero(p))

    @staticmethod
    def one(p: int) -> "RingValue":
        return RingValue(p, CycloElement.one(p))

    @staticmethod
    def rational(p: int, value: Fraction | int) -> "RingValue":
        return RingValue(p, CycloElement.rational(p, value))

    @staticmethod
    def s_power(p: int, k: int) -> "RingValue":
        """s^k for any integer k, using s^2 = p and s^(-1) = s/p."""
        q, r = divmod(k, 2)
        rat = Fraction(p) ** q
        if r == 0:
            return RingValue(p, CycloElement.rational(p, rat))
        return RingValue(p, CycloElement.zero(p), CycloElement.rational(p, rat))

    def _check(self, other: "RingValue") -> None:
        if self.p != other.p:
            raise ValueError("mixed value rings")

    def __add__(self, other: "RingValue") -> "RingValue":
        self._check(other)
        return RingValue(self.p, self.a + other.a, self.b + other.b)

    def __sub__(self, other: "RingValue") -> "RingValue":
        self._check(other)
        return RingValue(self.p, self.a - other.a, self.b - other.b)

    def __neg__(self) -> "RingValue":
        return RingValue(self.p, -self.a, -self.b)

    def __mul__(self, other: "RingValue | CycloElement | Fraction | int") -> "RingValue":
        if isinstance(other, (Fraction, int)):
            return RingValue(self.p, self.a * other, self.b * other)
        if isinstance(other, CycloElement):
            return RingValue(self.p, self.a * other, self.b * other)
        self._check(other)
        pa = self.a * other.a + (self.b * other.b) * self.p
        pb = self.a * other.b + self.b * other.a
        return RingValue(self.p, pa, pb)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "RingValue":
        if n < 0:
            return self.inverse() ** (-n)
        out = RingValue.one(self.p)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def inverse(self) -> "RingValue":
        """(a + bs)^(-1) = (a - bs) / (a^2 - p b^2)."""
        norm = self.a * self.a - (self.b * self.b) * self.p
        if norm.is_zero():
            raise ZeroDivisionError("value has zero s-norm")
        inv = norm.inverse()
        return RingValue(self.p, self.a * inv, -(self.b * inv))

    def conjugate(self) -> "RingValue":
        """zeta -> zeta^(-1), s fixed."""
        return RingValue(self.p, self.a.conjugate(), self.b.conjugate())

    def abs_square(self) -> "RingValue":
        """v * conj(v); rational for the values produced by the suites' sums."""
        return self * self.conjugate()

    def is_zero(self) -> bool:
        return self.a.is_zero() and self.b.is_zero()

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, RingValue)
            and self.p == other.p
            and self.a == other.a
            and self.b == other.b
        )

    def __hash__(self) -> int:
        return hash((self.p, self.a, self.b))

    def __repr__(self) -> str:
        if self.b.is_zero():
            return repr(self.a)
        if self.a.is_zero():
            return f"({self.b!r})*s"
        return f"({self.a!r}) + ({self.b!r})*s"


@lru_cache(maxsize=None)
def psi(p: int, x: int) -> RingValue:
    """Additive character psi(x) = zeta^x."""
    return RingValue(p, CycloElement.zeta_power(p, x))


@lru_cache(maxsize=None)
def legendre(p: int, x: int) -> int:
    """Quadratic residue symbol: +1 / -1 for nonzero squares / nonsquares.

    Raises on x = 0: every use site pairs it with a change-of-basis
    determinant or a graph-map discriminant that must be invertible.
    """
    x %= p
    if x == 0:
        raise ValueError("legendre symbol of 0 is not used here")
    e = pow(x, (p - 1) // 2, p)
    return 1 if e == 1 else -1


@lru_cache(maxsize=None)
def gauss_sum(p: int) -> RingValue:
    """g = sum over x in F_p of psi(x^2); satisfies g^2 = legendre(-1) * p."""
    total = RingValue.zero(p)
    for x in range(p):
        total = total + psi(p, x * x)
    return total


@lru_cache(maxsize=None)
def c_shift(p: int, n: int) -> RingValue:
    """The exact factor carried by an n-fold shift-and-twist: (-1)^n * s^(-n)."""
    v = RingValue.s_power(p, -n)
    return v if n % 2 == 0 else -v


@lru_cache(maxsize=None)
def e_value(p: int, d: int) -> RingValue:
    """(gauss_sum * c_shift(1))^d, the d-th power of the normalized Gauss unit."""
    return (gauss_sum(p) * c_shift(p, 1)) ** d


def half(p: int) -> int:
    """The inverse of 2 in F_p, i.e. (p+1)/2."""
    return (p + 1) // 2


def magnitude_exponent(v: RingValue) -> int:
    """k with v * conj(v) = p^k, for values whose squared magnitude is a p-power.

    Raises if v*conj(v) is not an exact (possibly negative) power of p.
    """
    m = v.abs_square()
    if not m.b.is_zero() or not m.a.is_rational():
        raise ValueError(f"squared magnitude not rational: {m}")
    q = m.a.rational_value()
    if q <= 0:
        raise ValueError(f"squared magnitude not positive: {q}")
    p = v.p
    k = 0
    while q.denominator != 1:
        q *= p
        k -= 1
    while q != 1:
        if q % p != 0:
            raise ValueError("squared magnitude is not a power of p")
        q /= p
        k += 1
    return k


# --- serialization ---------------------------------------------------------


def _frac_str(f: Fraction) -> str:
    return f"{f.numerator}/{f.denominator}"


def _parse_frac(s: str) -> Fraction:
    num, _, den = s.partition("/")
    return Fraction(int(num), int(den) if den else 1)


def ring_value_to_obj(v: RingValue) -> dict:
    return {
        "p": v.p,
        "a": [_frac_str(c) for c in v.a.coeffs],
        "b": [_frac_str(c) for c in v.b.coeffs],
    }


def ring_value_from_obj(obj: dict) -> RingValue:
    p = int(obj["p"])
    a = CycloElement(p, [_parse_frac(c) for c in obj["a"]])
    b = CycloElement(p, [_parse_frac(c) for c in obj["b"]])
    return RingValue(p, a, b)


def ring_value_to_json(v: RingValue) -> str:
    return json.dumps(ring_value_to_obj(v), separators=(",", ":"))


def ring_value_from_json(s: str) -> RingValue:
    return ring_value_from_obj(json.loads(s))
