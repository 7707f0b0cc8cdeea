"""Polynomial input parsing and exact text rendering.

Accepted expressions are sums and differences of terms.  A term is an
optional rational literal, an optional ``*``, and an optional power of the
variable (``x`` or ``x1``) with a nonnegative integer exponent, e.g.
``4x^3-4x``, ``8/9x - 8/9``, ``x1^2 + 3*x1``.
"""

from __future__ import annotations

import re
from fractions import Fraction

from sturmroots.poly import Polynomial


class ParseError(ValueError):
    pass


_TERM = re.compile(
    r"""
    (?P<sign>[+-])?
    (?P<coef>\d+(?:\.\d*)?(?:/\d+)?|\.\d+(?:/\d+)?)?
    (?:(?P<star>\*)?(?P<var>x1|x)(?:\^(?P<exp>\d+))?)?
    """,
    re.VERBOSE,
)


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"not a rational number: {text!r}") from exc


def parse_coeffs(text: str) -> Polynomial:
    """Comma-separated ascending coefficients, e.g. ``"-3,7,-5,1"``."""
    parts = [p for p in re.split(r"[,\s]+", text.strip()) if p]
    if not parts:
        raise ParseError("empty coefficient list")
    return Polynomial(tuple(parse_rational(p) for p in parts))


def parse_expression(text: str) -> Polynomial:
    gap = re.search(r"[\d.x]\s+[\d./]|/\s", text)
    if gap:
        raise ParseError(f"whitespace inside a number or variable at position {gap.start()} in {text!r}")
    src = re.sub(r"\s+", "", text)
    if not src:
        raise ParseError("empty expression")
    coeffs: dict[int, Fraction] = {}
    pos = 0
    first = True
    while pos < len(src):
        m = _TERM.match(src, pos)
        if m is None or m.end() == pos:
            raise ParseError(f"unexpected {src[pos:]!r} at position {pos} in {text!r}")
        if not first and m.group("sign") is None:
            raise ParseError(f"missing operator before {src[pos:]!r}")
        coef_text, var = m.group("coef"), m.group("var")
        if coef_text is None and var is None:
            raise ParseError(f"dangling sign at position {pos} in {text!r}")
        if m.group("star") and coef_text is None:
            raise ParseError(f"'*' without a coefficient at position {pos}")
        value = parse_rational(coef_text) if coef_text else Fraction(1)
        if m.group("sign") == "-":
            value = -value
        power = 0
        if var is not None:
            power = int(m.group("exp")) if m.group("exp") else 1
        coeffs[power] = coeffs.get(power, Fraction(0)) + value
        pos = m.end()
        first = False
    top = max(coeffs)
    return Polynomial(tuple(coeffs.get(i, Fraction(0)) for i in range(top + 1)))


def format_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_polynomial(p: Polynomial, var: str = "x") -> str:
    """Render as e.g. ``x^4 - 2x^2 + 1``; the zero polynomial renders as ``0``."""
    if p.is_zero():
        return "0"
    pieces = []
    for i in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[i]
        if c == 0:
            continue
        mag = abs(c)
        if i == 0:
            body = format_rational(mag)
        else:
            mono = var if i == 1 else f"{var}^{i}"
            body = mono if mag == 1 else format_rational(mag) + mono
        if not pieces:
            pieces.append(("-" if c < 0 else "") + body)
        else:
            pieces.append(("- " if c < 0 else "+ ") + body)
    return " ".join(pieces)
