"""Ground truth for tests, built without any Sturm machinery.

Instances are constructed from known rational roots, so the number of roots
in an interval is a matter of comparing rationals.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from sturmroots.poly import DomainError, Polynomial, as_rational, derivative, evaluate, poly_from_roots, taylor_shift
from sturmroots.sturm import Interval

MAX_NUMERATOR = 50
MAX_DENOMINATOR = 12


@dataclass(frozen=True)
class RootSpec:
    """Distinct rational roots with multiplicities, strictly increasing."""

    roots: tuple[tuple[Fraction, int], ...]

    def __post_init__(self) -> None:
        roots = tuple((as_rational(r), int(m)) for r, m in self.roots)
        for _, m in roots:
            if m < 1:
                raise DomainError(f"multiplicity must be positive, got {m}")
        values = [r for r, _ in roots]
        if any(u >= v for u, v in zip(values, values[1:])):
            raise DomainError("root values must be strictly increasing")
        object.__setattr__(self, "roots", roots)

    @classmethod
    def of(cls, pairs) -> RootSpec:
        return cls(tuple(sorted((as_rational(r), m) for r, m in pairs)))

    @property
    def values(self) -> list[Fraction]:
        return [r for r, _ in self.roots]

    @property
    def multiple(self) -> list[Fraction]:
        return [r for r, m in self.roots if m >= 2]

    @property
    def simple(self) -> list[Fraction]:
        return [r for r, m in self.roots if m == 1]

    @property
    def total_multiplicity(self) -> int:
        return sum(m for _, m in self.roots)

    def polynomial(self) -> Polynomial:
        return poly_from_roots(self.roots)


def oracle_count(spec: RootSpec, iv: Interval) -> int:
    return sum(1 for r in spec.values if iv.a < r <= iv.b)


def min_root_gap(spec: RootSpec) -> Fraction:
    values = spec.values
    if len(values) < 2:
        return Fraction(1)
    return min(v - u for u, v in zip(values, values[1:]))


def random_rational(rng: random.Random, num: int = MAX_NUMERATOR, den: int = MAX_DENOMINATOR) -> Fraction:
    return Fraction(rng.randint(-num, num), rng.randint(1, den))


def generate_instance(
    seed: int,
    degree_budget: int,
    *,
    require_multiple: bool = False,
    allow_quadratic: bool = True,
) -> tuple[RootSpec, Polynomial]:
    """Reproducible random polynomial with known rational roots.

    Root multiplicities are drawn from {1, 2, 3} with total at most
    ``degree_budget``.  When room remains, the product may also carry an
    irreducible factor ``x**2 + k`` (``k > 0``), which adds no real roots.
    """
    if degree_budget < 1:
        raise DomainError("degree_budget must be >= 1")
    if require_multiple and degree_budget < 2:
        raise DomainError("a multiple root needs degree_budget >= 2")
    rng = random.Random(seed)
    lowest = 2 if require_multiple else 1
    quadratic = allow_quadratic and degree_budget - 2 >= lowest and rng.random() < 0.3
    room = degree_budget - (2 if quadratic else 0)
    target = rng.randint(lowest, room)

    roots: dict[Fraction, int] = {}
    total = 0
    if require_multiple:
        m = rng.randint(2, min(3, target))
        roots[random_rational(rng)] = m
        total = m
    while total < target:
        r = random_rational(rng)
        if r in roots:
            continue
        m = rng.randint(1, min(3, target - total))
        roots[r] = m
        total += m

    spec = RootSpec.of(roots.items())
    poly = spec.polynomial()
    if quadratic:
        k = Fraction(rng.randint(1, MAX_NUMERATOR), rng.randint(1, MAX_DENOMINATOR))
        poly = poly * Polynomial((k, 0, 1))
    return spec, poly


def zero_free_radius(p: Polynomial, c: Fraction, radius: Fraction) -> Fraction:
    """Shrink ``radius`` by halving until ``p`` provably has no zero in ``[c - radius, c + radius]``.

    Uses the Taylor expansion at ``c``: if ``|p(c)| > sum_{k>=1} |b_k| r**k``
    then ``p`` cannot vanish within distance ``r`` of ``c``.
    """
    if evaluate(p, c) == 0:
        raise DomainError(f"p vanishes at the centre {c}")
    b = taylor_shift(p, c).coeffs
    centre = abs(b[0])
    while sum(abs(bk) * radius**k for k, bk in enumerate(b) if k > 0) >= centre:
        radius /= 2
    return radius


def local_epsilon(spec: RootSpec, f: Polynomial, zeta: Fraction) -> Fraction:
    """A concrete "sufficiently small" offset around the simple root ``zeta``.

    Starts from half the minimum root gap of ``f`` (so no other root of ``f``
    is in reach) and shrinks until ``f'`` is certified zero-free nearby.
    """
    return zero_free_radius(derivative(f), as_rational(zeta), min_root_gap(spec) / 2)
