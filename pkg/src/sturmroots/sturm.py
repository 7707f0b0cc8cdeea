"""Sturm sequences, sign variations and half-open root counting.

The sequence for ``f`` starts ``(f, f')`` and continues with the negated
remainder of dividing the previous two entries.  Counting roots in ``(a, b]``
as ``V(a) - V(b)`` is valid whenever neither endpoint is a multiple root of
``f``, even if an endpoint is a simple root.  At a multiple root every entry
of the sequence vanishes and ``V`` is identically 0 there.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from sturmroots.poly import (
    DomainError,
    Number,
    Polynomial,
    as_rational,
    cauchy_bound,
    derivative,
    evaluate,
    poly_divmod,
    square_free_part,
)

SignSequence = tuple[int, ...]


class DegenerateEndpointError(DomainError):
    """An interval endpoint is a multiple root, so ``V`` there carries no information."""

    def __init__(self, endpoint: str, value: Fraction):
        self.endpoint = endpoint
        self.value = value
        super().__init__(
            f"endpoint {endpoint} = {value} is a multiple root (f({value}) = f'({value}) = 0); "
            "the sign-variation count is 0 there and V(a) - V(b) is not a root count. "
            "Use the squarefree policy."
        )


class EndpointPolicy(enum.Enum):
    STRICT = "strict"
    SQUAREFREE = "squarefree"


@dataclass(frozen=True)
class Interval:
    """Half-open interval ``(a, b]``; ``(a, a]`` is empty."""

    a: Fraction
    b: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", as_rational(self.a))
        object.__setattr__(self, "b", as_rational(self.b))
        if self.a > self.b:
            raise DomainError(f"interval needs a <= b, got a = {self.a}, b = {self.b}")

    def __contains__(self, x: Number) -> bool:
        return self.a < x <= self.b

    @property
    def width(self) -> Fraction:
        return self.b - self.a

    def is_empty(self) -> bool:
        return self.a == self.b

    def midpoint(self) -> Fraction:
        return (self.a + self.b) / 2


@dataclass(frozen=True)
class SturmSequence:
    """Stored entries ``p_0 .. p_k`` up to the last nonzero remainder.

    Entries past ``k`` are implicitly zero.  ``seeds`` records the two
    polynomials the recurrence was started from.
    """

    polys: tuple[Polynomial, ...]
    seeds: tuple[Polynomial, Polynomial]

    def __len__(self) -> int:
        return len(self.polys)

    def __getitem__(self, i: int) -> Polynomial:
        return self.polys[i]

    def __iter__(self):
        return iter(self.polys)

    @property
    def nominal_length(self) -> int:
        """``d + 1`` where ``d`` is the degree of the first seed."""
        d = self.seeds[0].degree
        return max(len(self.polys), (d if d is not None else 0) + 1)

    def padded(self) -> tuple[Polynomial, ...]:
        return self.polys + (Polynomial(),) * (self.nominal_length - len(self.polys))

    def __mul__(self, g: Polynomial) -> SturmSequence:
        return SturmSequence(tuple(p * g for p in self.polys), (self.seeds[0] * g, self.seeds[1] * g))

    __rmul__ = __mul__


def generalized_sequence(p0: Polynomial, p1: Polynomial) -> SturmSequence:
    """Remainder sequence from arbitrary seeds: ``p_{i+2} = -(p_i mod p_{i+1})``."""
    if p1.is_zero():
        raise DomainError("second seed must be nonzero")
    polys = [p0, p1]
    while True:
        rem = poly_divmod(polys[-2], polys[-1])[1]
        if rem.is_zero():
            break
        polys.append(-rem)
    return SturmSequence(tuple(polys), (p0, p1))


@lru_cache(maxsize=4096)
def sturm_sequence(f: Polynomial) -> SturmSequence:
    if f.is_constant():
        raise DomainError("Sturm sequence needs a polynomial of degree >= 1")
    return generalized_sequence(f, derivative(f))


def sign(x: Number) -> int:
    return (x > 0) - (x < 0)


def sign_sequence(s: SturmSequence, c: Number, *, padded: bool = False) -> SignSequence:
    c = as_rational(c)
    polys = s.padded() if padded else s.polys
    return tuple(sign(evaluate(p, c)) for p in polys)


def sign_variations(signs) -> int:
    """Number of sign changes once zeros are deleted."""
    nonzero = [x for x in signs if x != 0]
    return sum(1 for u, v in zip(nonzero, nonzero[1:]) if u * v < 0)


def variations(f: Polynomial | SturmSequence, c: Number) -> int:
    """``V_f(c)``: sign variations of the Sturm sequence of ``f`` at ``c``."""
    seq = f if isinstance(f, SturmSequence) else sturm_sequence(f)
    return sign_variations(sign_sequence(seq, c))


V = variations


def is_multiple_root(f: Polynomial, c: Number) -> bool:
    return evaluate(f, c) == 0 and evaluate(derivative(f), c) == 0


def count_roots_half_open(
    f: Polynomial,
    iv: Interval,
    policy: EndpointPolicy = EndpointPolicy.STRICT,
) -> int:
    """Number of distinct roots of ``f`` in ``(iv.a, iv.b]``.

    ``STRICT`` evaluates the Sturm sequence of ``f`` itself and refuses
    endpoints that are multiple roots.  ``SQUAREFREE`` first divides out
    ``gcd(f, f')``, which makes every endpoint admissible.
    """
    if f.is_zero():
        raise DomainError("the zero polynomial vanishes everywhere")
    policy = EndpointPolicy(policy)
    if iv.is_empty() or f.is_constant():
        return 0
    if policy is EndpointPolicy.STRICT:
        for name, c in (("a", iv.a), ("b", iv.b)):
            if is_multiple_root(f, c):
                raise DegenerateEndpointError(name, c)
        seq = sturm_sequence(f)
    else:
        seq = sturm_sequence(square_free_part(f))
    return variations(seq, iv.a) - variations(seq, iv.b)


def count_distinct_real_roots(f: Polynomial) -> int:
    if f.is_zero():
        raise DomainError("the zero polynomial has every point as a root")
    if f.is_constant():
        return 0
    bound = cauchy_bound(f)
    return count_roots_half_open(f, Interval(-bound, bound), EndpointPolicy.SQUAREFREE)
