"""Textual polynomial format shared by the CLI, the golden files and the tests.

A polynomial is written as terms joined by '+', each term a coefficient and a
'*'-separated list of factors, e.g. ``1*t1^2*u2+-1/2*v1+(1-2i)*t2``. The zero
polynomial is ``0``. Coefficients are integers, ``a/b`` rationals, pure
imaginary ``bi`` or a parenthesised ``(a+bi)``. Variable names are t, u, v
plus the particle index when at most three axes are in use and
``x{axis}_{particle}`` otherwise.

The parser is generic over factor names so the spherical alphabet
(e11, e10, e1m1, P11, P10, P1m1) reuses it.
"""

from __future__ import annotations

import re
from collections.abc import Callable, Hashable, Iterable, Sequence
from fractions import Fraction
from typing import TypeVar

from bosonise.algebra import (
    GaussianRational,
    Polynomial,
    VariableId,
    monomial,
)
from bosonise.errors import DimensionError, ParseError

K = TypeVar("K", bound=Hashable)

AXIS_LETTERS = "tuv"

_LETTER_VAR = re.compile(r"([tuv])(\d+)")
_INDEXED_VAR = re.compile(r"x(\d+)_(\d+)")


# -- formatting ----------------------------------------------------------------


def format_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_gaussian(c: GaussianRational) -> str:
    if c.im == 0:
        return format_rational(c.re)
    if c.re == 0:
        return f"{format_rational(c.im)}i"
    sign = "+" if c.im > 0 else "-"
    return f"({format_rational(c.re)}{sign}{format_rational(abs(c.im))}i)"


def variable_name(v: VariableId, *, indexed: bool = False) -> str:
    if indexed or v.axis >= len(AXIS_LETTERS):
        return f"x{v.axis}_{v.particle}"
    return f"{AXIS_LETTERS[v.axis]}{v.particle}"


def format_terms(terms: Iterable[tuple[GaussianRational, Sequence[tuple[str, int]]]]) -> str:
    """Render (coefficient, [(factor name, exponent)]) pairs; empty input is '0'."""
    parts = []
    for c, factors in terms:
        coef = format_gaussian(c)
        if not factors:
            parts.append(coef)
            continue
        body = "*".join(name if e == 1 else f"{name}^{e}" for name, e in factors)
        parts.append(f"{coef}*{body}")
    return "+".join(parts) if parts else "0"


def format_polynomial(p: Polynomial, *, dims: int | None = None) -> str:
    indexed = (dims is not None and dims > len(AXIS_LETTERS)) or any(
        v.axis >= len(AXIS_LETTERS) for v in p.variables()
    )
    return format_terms(
        (c, [(variable_name(v, indexed=indexed), e) for v, e in m]) for m, c in p.terms()
    )


# -- parsing -------------------------------------------------------------------


class _Cursor:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self, offset: int = 0) -> str:
        self.skip_ws()
        i = self.pos + offset
        return self.text[i] if i < len(self.text) else ""

    def at_end(self) -> bool:
        self.skip_ws()
        return self.pos >= len(self.text)

    def take(self, ch: str) -> bool:
        if self.peek() == ch:
            self.pos += 1
            return True
        return False

    def expect(self, ch: str) -> None:
        if not self.take(ch):
            found = self.peek() or "end of input"
            raise ParseError(f"expected '{ch}', found '{found}'", position=self.pos)

    def digits(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise ParseError("expected a number", position=start)
        return int(self.text[start : self.pos])

    def rational(self) -> Fraction:
        num = self.digits()
        if self.take("/"):
            start = self.pos
            den = self.digits()
            if den == 0:
                raise ParseError("zero denominator", position=start)
            return Fraction(num, den)
        return Fraction(num)

    def imaginary_unit(self) -> bool:
        """Consume a standalone 'i' (not the start of a longer name)."""
        if self.peek() != "i":
            return False
        nxt = self.text[self.pos + 1] if self.pos + 1 < len(self.text) else ""
        if nxt.isalnum() or nxt == "_":
            return False
        self.pos += 1
        return True

    def name(self) -> tuple[str, int]:
        self.skip_ws()
        start = self.pos
        if start >= len(self.text) or not self.text[start].isalpha():
            found = self.text[start] if start < len(self.text) else "end of input"
            raise ParseError(f"expected a factor name, found '{found}'", position=start)
        while self.pos < len(self.text) and (self.text[self.pos].isalnum() or self.text[self.pos] == "_"):
            self.pos += 1
        return self.text[start : self.pos], start


def _coefficient(cur: _Cursor) -> GaussianRational:
    if cur.take("("):
        neg = cur.take("-")
        re_part = cur.rational()
        if neg:
            re_part = -re_part
        if cur.take("+"):
            im_sign = 1
        elif cur.take("-"):
            im_sign = -1
        else:
            raise ParseError("expected '+' or '-' inside complex coefficient", position=cur.pos)
        im_part = cur.rational() if cur.peek().isdigit() else Fraction(1)
        if not cur.imaginary_unit():
            raise ParseError("expected 'i' closing the imaginary part", position=cur.pos)
        cur.expect(")")
        return GaussianRational(re_part, im_sign * im_part)
    if cur.imaginary_unit():
        return GaussianRational(Fraction(0), Fraction(1))
    value = cur.rational()
    if cur.imaginary_unit():
        return GaussianRational(Fraction(0), value)
    return GaussianRational(value)


def _factors(cur: _Cursor, resolve: Callable[[str, int], K]) -> dict[K, int]:
    out: dict[K, int] = {}
    while True:
        name, start = cur.name()
        key = resolve(name, start)
        exp = 1
        if cur.take("^"):
            exp = cur.digits()
        out[key] = out.get(key, 0) + exp
        if not cur.take("*"):
            return out


def parse_terms(text: str, resolve: Callable[[str, int], K]) -> list[tuple[GaussianRational, dict[K, int]]]:
    """Parse the generic term syntax; ``resolve(name, position)`` maps factor names to keys."""
    cur = _Cursor(text)
    if cur.at_end():
        raise ParseError("empty polynomial text", position=0)
    terms: list[tuple[GaussianRational, dict[K, int]]] = []
    negate = False
    while True:
        if cur.take("-"):
            negate = not negate
        nxt = cur.peek()
        if nxt.isdigit() or nxt == "(" or (nxt == "i" and not cur.peek(1).isalnum()):
            coef = _coefficient(cur)
            factors = _factors(cur, resolve) if cur.take("*") else {}
        else:
            coef = GaussianRational(Fraction(1))
            factors = _factors(cur, resolve)
        terms.append((-coef if negate else coef, factors))
        if cur.at_end():
            return terms
        if cur.take("+"):
            negate = False
        elif cur.take("-"):
            negate = True
        else:
            raise ParseError(f"unexpected character '{cur.peek()}'", position=cur.pos)


def resolve_variable(name: str, position: int) -> VariableId:
    m = _LETTER_VAR.fullmatch(name)
    if m:
        axis, particle = AXIS_LETTERS.index(m.group(1)), int(m.group(2))
    else:
        m = _INDEXED_VAR.fullmatch(name)
        if not m:
            raise ParseError(
                f"unknown variable '{name}'",
                position=position,
                hint="use t1, u2, v3 or x{axis}_{particle}",
            )
        axis, particle = int(m.group(1)), int(m.group(2))
    if particle < 1:
        raise ParseError(f"particle index in '{name}' must start at 1", position=position)
    return VariableId(axis, particle)


def parse_polynomial(text: str, *, particles: int | None = None, dims: int | None = None) -> Polynomial:
    """Parse text into a Polynomial, optionally checking it lives in (particles, dims)."""
    terms = parse_terms(text, resolve_variable)
    poly = Polynomial.from_terms((c, monomial(f)) for c, f in terms)
    for v in poly.variables():
        if particles is not None and v.particle > particles:
            raise DimensionError(
                f"variable {variable_name(v)} refers to particle {v.particle} but N={particles}",
            )
        if dims is not None and v.axis >= dims:
            raise DimensionError(f"variable {variable_name(v)} refers to axis {v.axis} but d={dims}")
    return poly

