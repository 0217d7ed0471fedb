"""Text front-end for homogeneous polynomials.

Grammar (whitespace ignored, ``**`` accepted as a synonym for ``^``)::

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor ('*'? factor)*          # implicit multiplication: 3x^2y
    factor := atom ('^' nat)*
    atom   := rational | 'x' | 'y' | 'z' | '(' expr ')'
    rational := int ('/' int)?

:func:`format_poly` prints the canonical form that :func:`parse_poly` reads back.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .algebra import VARS, HPoly

__all__ = ["ParseError", "parse_poly", "format_poly", "parse_components"]


class ParseError(ValueError):
    """Malformed or non-homogeneous input.

    ``kind`` is ``syntax``, ``not_homogeneous`` or ``constant``.
    """

    def __init__(self, message: str, kind: str = "syntax", position: int | None = None, degrees=None):
        super().__init__(message)
        self.kind = kind
        self.position = position
        self.degrees = degrees


_TOKEN = re.compile(r"\s*(?:(\d+)|([xyz])|(\*\*|[-+*^/()]))")


def _tokenize(src: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while src[pos:].strip():
        m = _TOKEN.match(src, pos)
        if not m:
            bad = len(src) - len(src[pos:].lstrip())
            raise ParseError(f"unexpected character {src[bad]!r} at position {bad}", position=bad)
        num, var, op = m.groups()
        start = m.start(m.lastindex)
        if num is not None:
            tokens.append(("num", num, start))
        elif var is not None:
            tokens.append(("var", var, start))
        else:
            tokens.append(("op", "^" if op == "**" else op, start))
        pos = m.end()
    tokens.append(("end", "", len(src)))
    return tokens


# polynomials during parsing may be inhomogeneous: exponent -> Fraction
def _add(p: dict, q: dict, sign: int = 1) -> dict:
    out = dict(p)
    for e, c in q.items():
        v = out.get(e, 0) + sign * c
        if v:
            out[e] = v
        else:
            out.pop(e, None)
    return out


def _mul(p: dict, q: dict) -> dict:
    out: dict = {}
    for a, c in p.items():
        for b, d in q.items():
            e = (a[0] + b[0], a[1] + b[1], a[2] + b[2])
            out[e] = out.get(e, 0) + c * d
    return {e: c for e, c in out.items() if c}


class _Parser:
    def __init__(self, src: str):
        self.tokens = _tokenize(src)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value: str):
        kind, val, pos = self.take()
        if val != value or kind != "op":
            found = "end of input" if kind == "end" else repr(val)
            raise ParseError(f"expected {value!r} at position {pos}, found {found}", position=pos)

    def expr(self) -> dict:
        sign = 1
        kind, val, _ = self.peek()
        if kind == "op" and val in "+-":
            self.take()
            sign = -1 if val == "-" else 1
        acc = _add({}, self.term(), sign)
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                acc = _add(acc, self.term(), -1 if val == "-" else 1)
            else:
                return acc

    def _starts_factor(self) -> bool:
        kind, val, _ = self.peek()
        return kind in ("num", "var") or (kind == "op" and val == "(")

    def term(self) -> dict:
        acc = self.factor()
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val == "*":
                self.take()
                acc = _mul(acc, self.factor())
            elif self._starts_factor():
                acc = _mul(acc, self.factor())
            else:
                return acc

    def factor(self) -> dict:
        base = self.atom()
        while True:
            kind, val, _ = self.peek()
            if not (kind == "op" and val == "^"):
                return base
            self.take()
            kind, val, pos = self.take()
            if kind != "num":
                raise ParseError(f"expected a natural exponent at position {pos}", position=pos)
            result = {(0, 0, 0): Fraction(1)}
            for _ in range(int(val)):
                result = _mul(result, base)
            base = result

    def atom(self) -> dict:
        kind, val, pos = self.take()
        if kind == "num":
            value = Fraction(int(val))
            nk, nv, _ = self.peek()
            if nk == "op" and nv == "/":
                self.take()
                dk, dv, dpos = self.take()
                if dk != "num":
                    raise ParseError(f"expected a denominator at position {dpos}", position=dpos)
                if int(dv) == 0:
                    raise ParseError(f"zero denominator at position {dpos}", position=dpos)
                value = Fraction(int(val), int(dv))
            return {(0, 0, 0): value} if value else {}
        if kind == "var":
            e = [0, 0, 0]
            e[VARS.index(val)] = 1
            return {tuple(e): Fraction(1)}
        if kind == "op" and val == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        found = "end of input" if kind == "end" else repr(val)
        raise ParseError(f"unexpected {found} at position {pos}", position=pos)


def parse_poly(src: str, expect_curve: bool = False) -> HPoly:
    """Parse a homogeneous polynomial in ``x, y, z``.

    With ``expect_curve`` set, constants (including zero) are rejected.
    """
    p = _Parser(src)
    terms = p.expr()
    kind, val, pos = p.peek()
    if kind != "end":
        raise ParseError(f"unexpected {val!r} at position {pos}", position=pos)
    degrees = sorted({sum(e) for e in terms}, reverse=True)
    if len(degrees) > 1:
        hi, lo = degrees[0], degrees[-1]
        raise ParseError(
            f"not homogeneous: terms of degrees {hi} and {lo}", kind="not_homogeneous", degrees=(hi, lo)
        )
    degree = degrees[0] if degrees else 0
    if expect_curve and degree == 0:
        raise ParseError("expected a curve, got a constant", kind="constant")
    return HPoly(terms, degree)


def _monomial_str(e) -> str:
    parts = []
    for name, k in zip(VARS, e):
        if k == 1:
            parts.append(name)
        elif k > 1:
            parts.append(f"{name}^{k}")
    return "*".join(parts)


def format_poly(f: HPoly) -> str:
    """Canonical text: descending graded-lex order, ``*`` between factors."""
    if f.is_zero():
        return "0"
    out = []
    for e, c in sorted(f.terms.items(), reverse=True):
        mon = _monomial_str(e)
        mag = abs(c)
        if not mon:
            body = str(mag)
        elif mag == 1:
            body = mon
        else:
            body = f"{mag}*{mon}"
        if not out:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append((" - " if c < 0 else " + ") + body)
    return "".join(out)


def parse_components(text: str) -> list[HPoly]:
    """Factored-curve file: one component per line, ``#`` comments, blank lines ignored."""
    comps = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            comps.append(parse_poly(line, expect_curve=True))
        except ParseError as exc:
            raise ParseError(f"line {lineno}: {exc}", kind=exc.kind, position=exc.position, degrees=exc.degrees) from None
    return comps
