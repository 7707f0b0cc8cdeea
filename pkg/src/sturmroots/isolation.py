"""Real-root isolation and refinement by exact bisection.

Everything runs on the square-free part of the input, so every rational point
is an admissible endpoint and ``V(a) - V(b)`` counts distinct roots in
``(a, b]``.  A root that lands on a bisection midpoint ``m`` simply belongs to
the left half ``(a, m]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from sturmroots.poly import DomainError, Number, Polynomial, as_rational, cauchy_bound, square_free_part
from sturmroots.sturm import Interval, SturmSequence, sturm_sequence, variations


@dataclass(frozen=True)
class RootReport:
    interval: Interval
    variations_left: int
    variations_right: int
    certified_count: int = 1

    def __post_init__(self) -> None:
        if self.variations_left - self.variations_right != self.certified_count:
            raise DomainError(
                f"certificate mismatch: V(a) - V(b) = {self.variations_left - self.variations_right}, "
                f"claimed {self.certified_count}"
            )

    @property
    def a(self) -> Fraction:
        return self.interval.a

    @property
    def b(self) -> Fraction:
        return self.interval.b


def _reduced_sequence(f: Polynomial) -> SturmSequence:
    if f.is_zero():
        raise DomainError("the zero polynomial has every point as a root")
    return sturm_sequence(square_free_part(f))


def isolate_roots(f: Polynomial) -> list[RootReport]:
    """One certified half-open interval per distinct real root, in increasing order."""
    seq = _reduced_sequence(f)
    bound = cauchy_bound(seq[0])
    reports = []
    stack = [(-bound, variations(seq, -bound), bound, variations(seq, bound))]
    while stack:
        a, va, b, vb = stack.pop()
        n = va - vb
        if n == 0:
            continue
        if n == 1:
            reports.append(RootReport(Interval(a, b), va, vb))
            continue
        m = (a + b) / 2
        vm = variations(seq, m)
        stack.append((m, vm, b, vb))
        stack.append((a, va, m, vm))
    reports.sort(key=lambda r: r.a)
    return reports


def refine_root(f: Polynomial, report: RootReport, epsilon: Number) -> RootReport:
    """Bisect ``report`` until its width is at most ``epsilon``.

    The certificate is recomputed from ``f`` rather than trusted.
    """
    epsilon = as_rational(epsilon)
    if epsilon <= 0:
        raise DomainError("epsilon must be positive")
    seq = _reduced_sequence(f)
    a, b = report.a, report.b
    va, vb = variations(seq, a), variations(seq, b)
    if va - vb != 1:
        raise DomainError(f"({a}, {b}] is not an isolating interval: V(a) - V(b) = {va - vb}")
    while b - a > epsilon:
        m = (a + b) / 2
        vm = variations(seq, m)
        if va - vm == 1:
            b, vb = m, vm
        else:
            a, va = m, vm
    return RootReport(Interval(a, b), va, vb)
