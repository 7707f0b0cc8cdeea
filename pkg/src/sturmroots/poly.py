"""Exact univariate polynomial arithmetic over the rationals.

Scalars are :class:`fractions.Fraction`, which keeps every value in reduced
form with a positive denominator (zero is ``0/1``).  Polynomials are dense,
ascending and immutable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence, Union

Rational = Fraction
Number = Union[int, Fraction]


class DomainError(ValueError):
    """An operation was called outside its mathematical domain."""


class NotDivisibleError(DomainError):
    """Exact division left a nonzero remainder."""


def as_rational(value: Number | str) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("floating point values are not accepted; use Fraction or str")
    return Fraction(value)


@dataclass(frozen=True)
class Polynomial:
    """Dense polynomial; ``coeffs[i]`` is the coefficient of ``x**i``.

    Trailing zeros are stripped on construction, so the zero polynomial stores
    an empty tuple and its :attr:`degree` is ``None``.
    """

    coeffs: tuple[Fraction, ...] = ()

    def __post_init__(self) -> None:
        cs = [as_rational(c) for c in self.coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def constant(cls, c: Number) -> Polynomial:
        return cls((c,))

    @classmethod
    def x(cls) -> Polynomial:
        return cls((0, 1))

    @property
    def degree(self) -> int | None:
        """Degree, or ``None`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __call__(self, c: Number) -> Fraction:
        return evaluate(self, c)

    def __neg__(self) -> Polynomial:
        return Polynomial(tuple(-c for c in self.coeffs))

    def __add__(self, other: Polynomial | Number) -> Polynomial:
        other = _lift(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return Polynomial(tuple(x + y for x, y in zip(a, b)))

    __radd__ = __add__

    def __sub__(self, other: Polynomial | Number) -> Polynomial:
        return self + (-_lift(other))

    def __rsub__(self, other: Number) -> Polynomial:
        return _lift(other) - self

    def __mul__(self, other: Polynomial | Number) -> Polynomial:
        other = _lift(other)
        if not self.coeffs or not other.coeffs:
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Polynomial:
        if n < 0:
            raise DomainError("negative exponent")
        result = Polynomial.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other: Polynomial) -> tuple[Polynomial, Polynomial]:
        return poly_divmod(self, other)

    def __floordiv__(self, other: Polynomial) -> Polynomial:
        return poly_divmod(self, other)[0]

    def __mod__(self, other: Polynomial) -> Polynomial:
        return poly_divmod(self, other)[1]

    def __str__(self) -> str:
        from sturmroots.parsing import format_polynomial

        return format_polynomial(self)


def _lift(value: Polynomial | Number) -> Polynomial:
    if isinstance(value, Polynomial):
        return value
    return Polynomial.constant(value)


def poly_from_coeffs(coeffs: Iterable[Number | str]) -> Polynomial:
    """Build a polynomial from ascending coefficients."""
    return Polynomial(tuple(as_rational(c) for c in coeffs))


def evaluate(p: Polynomial, c: Number) -> Fraction:
    """Exact value ``p(c)`` by Horner's rule."""
    c = as_rational(c)
    acc = Fraction(0)
    for coeff in reversed(p.coeffs):
        acc = acc * c + coeff
    return acc


def derivative(p: Polynomial) -> Polynomial:
    return Polynomial(tuple(i * c for i, c in enumerate(p.coeffs) if i > 0))


def poly_divmod(p: Polynomial, q: Polynomial) -> tuple[Polynomial, Polynomial]:
    """Quotient and remainder with ``p == quot*q + rem`` and ``deg rem < deg q``."""
    if q.is_zero():
        raise DomainError("division by the zero polynomial")
    rem = list(p.coeffs)
    dq = len(q.coeffs) - 1
    lead = q.coeffs[-1]
    if len(rem) <= dq:
        return Polynomial(), p
    quot = [Fraction(0)] * (len(rem) - dq)
    for k in range(len(rem) - 1, dq - 1, -1):
        c = rem[k]
        if c == 0:
            continue
        t = c / lead
        shift = k - dq
        quot[shift] = t
        for j, b in enumerate(q.coeffs):
            rem[shift + j] -= t * b
    return Polynomial(tuple(quot)), Polynomial(tuple(rem[:dq]))


def monic(p: Polynomial) -> Polynomial:
    if p.is_zero():
        raise DomainError("the zero polynomial has no monic associate")
    lead = p.leading
    return Polynomial(tuple(c / lead for c in p.coeffs))


def gcd(p: Polynomial, q: Polynomial) -> Polynomial:
    """Monic greatest common divisor by Euclidean remainders."""
    if p.is_zero() and q.is_zero():
        raise DomainError("gcd(0, 0) is undefined")
    while not q.is_zero():
        p, q = q, poly_divmod(p, q)[1]
    return monic(p)


def exact_divide(p: Polynomial, g: Polynomial) -> Polynomial:
    quot, rem = poly_divmod(p, g)
    if not rem.is_zero():
        raise NotDivisibleError(f"{g} does not divide {p} (remainder {rem})")
    return quot


@lru_cache(maxsize=4096)
def square_free_part(p: Polynomial) -> Polynomial:
    """``p / gcd(p, p')`` made monic: the same distinct roots, each simple."""
    if p.is_constant():
        raise DomainError("square-free part needs a polynomial of degree >= 1")
    return monic(exact_divide(p, gcd(p, derivative(p))))


def cauchy_bound(p: Polynomial) -> Fraction:
    """``1 + max |c_i / c_d|``; every real root lies in ``(-B, B]``."""
    if p.is_constant():
        raise DomainError("root bound needs a polynomial of degree >= 1")
    lead = abs(p.leading)
    return 1 + max(abs(c) for c in p.coeffs[:-1]) / lead


def poly_from_roots(roots: Sequence[tuple[Number, int]]) -> Polynomial:
    """Expand ``prod (x - r)**m`` over ``(r, m)`` pairs."""
    result = Polynomial.constant(1)
    for r, m in roots:
        if m < 1:
            raise DomainError(f"multiplicity must be positive, got {m}")
        result = result * Polynomial((-as_rational(r), 1)) ** m
    return result


def taylor_shift(p: Polynomial, c: Number) -> Polynomial:
    """Coefficients of ``t -> p(c + t)``."""
    c = as_rational(c)
    shifted = Polynomial()
    step = Polynomial((c, 1))
    for coeff in reversed(p.coeffs):
        shifted = shifted * step + coeff
    return shifted
