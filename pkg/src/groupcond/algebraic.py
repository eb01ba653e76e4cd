"""Exact numbers of the form sum_D q_D sqrt(D) + i * sum_D r_D sqrt(D).

Each D is a positive square-free integer (D = 1 is the rational part) and each
coefficient is a :class:`fractions.Fraction`.  Square roots of distinct
square-free integers are linearly independent over Q, so the normalised
representation is unique and equality is structural.

That covers every character value in a real quadratic field, and imaginary
quadratic ones through the ``i`` component (e.g. (-1 + i*sqrt(3))/2).
General cyclotomic values are out of scope.
"""
from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational

from .numtheory import squarefree_split

__all__ = ["AlgebraicValue", "parse_algebraic", "AlgebraicParseError"]


class AlgebraicParseError(ValueError):
    pass


def _norm(terms: dict) -> tuple:
    return tuple(sorted((d, c) for d, c in terms.items() if c != 0))


def _add_terms(a: tuple, b: tuple, sign=1) -> tuple:
    out = dict(a)
    for d, c in b:
        out[d] = out.get(d, 0) + sign * c
    return _norm(out)


def _mul_terms(a: tuple, b: tuple) -> tuple:
    out: dict[int, Fraction] = {}
    for d1, c1 in a:
        for d2, c2 in b:
            s, d = squarefree_split(d1 * d2)
            out[d] = out.get(d, 0) + c1 * c2 * s
    return _norm(out)


def _scale(a: tuple, q) -> tuple:
    return _norm({d: c * q for d, c in a})


class AlgebraicValue:
    __slots__ = ("real", "imag")

    def __init__(self, real=(), imag=()):
        # real / imag: iterables of (squarefree D, coefficient)
        self.real = _norm(_collect(real))
        self.imag = _norm(_collect(imag))

    @classmethod
    def rational(cls, q) -> AlgebraicValue:
        return cls(((1, Fraction(q)),))

    @classmethod
    def sqrt(cls, n: int) -> AlgebraicValue:
        """sqrt(n) for a positive integer n, normalised to s*sqrt(D)."""
        if n <= 0:
            raise ValueError("sqrt is only defined here for positive integers")
        s, d = squarefree_split(n)
        return cls(((d, Fraction(s)),))

    @classmethod
    def i(cls) -> AlgebraicValue:
        return cls((), ((1, Fraction(1)),))

    @staticmethod
    def coerce(x) -> AlgebraicValue:
        if isinstance(x, AlgebraicValue):
            return x
        if isinstance(x, (int, Rational)):
            return AlgebraicValue.rational(x)
        raise TypeError(f"cannot use {type(x).__name__} as an exact algebraic value")

    def __add__(self, other):
        try:
            o = self.coerce(other)
        except TypeError:
            return NotImplemented
        return _make(_add_terms(self.real, o.real), _add_terms(self.imag, o.imag))

    __radd__ = __add__

    def __neg__(self):
        return _make(_scale(self.real, -1), _scale(self.imag, -1))

    def __sub__(self, other):
        try:
            return self + (-self.coerce(other))
        except TypeError:
            return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            o = self.coerce(other)
        except TypeError:
            return NotImplemented
        # (a + bi)(c + di) = (ac - bd) + (ad + bc)i
        re_ = _add_terms(_mul_terms(self.real, o.real), _mul_terms(self.imag, o.imag), -1)
        im_ = _add_terms(_mul_terms(self.real, o.imag), _mul_terms(self.imag, o.real))
        return _make(re_, im_)

    __rmul__ = __mul__

    def __truediv__(self, other):
        """Division by nonzero rationals only."""
        o = self.coerce(other)
        if not o.is_rational():
            raise TypeError("division is only supported by rational values")
        q = o.rational_part()
        if q == 0:
            raise ZeroDivisionError("division by zero")
        return _make(_scale(self.real, 1 / q), _scale(self.imag, 1 / q))

    def conjugate(self) -> AlgebraicValue:
        """Complex conjugate.  Real square roots are fixed."""
        return _make(self.real, _scale(self.imag, -1))

    def is_zero(self) -> bool:
        return not self.real and not self.imag

    def is_real(self) -> bool:
        return not self.imag

    def is_rational(self) -> bool:
        return not self.imag and all(d == 1 for d, _ in self.real)

    def is_integer(self) -> bool:
        return self.is_rational() and self.rational_part().denominator == 1

    def rational_part(self) -> Fraction:
        return dict(self.real).get(1, Fraction(0))

    def __eq__(self, other):
        try:
            o = self.coerce(other)
        except TypeError:
            return NotImplemented
        return self.real == o.real and self.imag == o.imag

    def __hash__(self):
        if self.is_rational():
            return hash(self.rational_part())
        return hash((self.real, self.imag))

    def __bool__(self):
        return not self.is_zero()

    def __complex__(self):
        re_ = sum(float(c) * d ** 0.5 for d, c in self.real)
        im_ = sum(float(c) * d ** 0.5 for d, c in self.imag)
        return complex(re_, im_)

    def __float__(self):
        if self.imag:
            raise TypeError("value is not real")
        return complex(self).real

    def __str__(self):
        def part(terms):
            out = []
            for d, c in terms:
                if d == 1:
                    body = str(c)
                elif c == 1:
                    body = f"r{d}"
                elif c == -1:
                    body = f"-r{d}"
                else:
                    body = f"{c}*r{d}"
                out.append(body)
            return "+".join(out).replace("+-", "-")

        re_, im_ = part(self.real), part(self.imag)
        if not im_:
            return re_ or "0"
        im_ = f"i*({im_})" if len(self.imag) > 1 or "/" in im_ or "*" in im_ else f"i*{im_}"
        return f"{re_}+{im_}" if re_ else im_

    def __repr__(self):
        return f"AlgebraicValue({self})"


def _collect(terms) -> dict:
    out: dict[int, Fraction] = {}
    for d, c in terms:
        d = int(d)
        if d <= 0:
            raise ValueError("radicands must be positive")
        s, sq = squarefree_split(d)
        out[sq] = out.get(sq, Fraction(0)) + Fraction(c) * s
    return out


def _make(real: tuple, imag: tuple) -> AlgebraicValue:
    v = object.__new__(AlgebraicValue)
    v.real, v.imag = real, imag
    return v


_TOKEN = re.compile(r"\s*(?:(\d+)|(r)(\d+)|(i)|([-+*/()]))")


def parse_algebraic(text) -> AlgebraicValue:
    """Parse an entry such as ``"-1"``, ``"3/2"``, ``"(-1+r5)/2"``, ``"2*r3"``, ``"i*r3"``.

    Grammar::

        expr   := term (("+" | "-") term)*
        term   := factor (("*" | "/") factor | factor)*     juxtaposition multiplies
        factor := ("+" | "-") factor | atom
        atom   := INT | "r" INT | "i" | "(" expr ")"

    ``rN`` is sqrt(N); division is only allowed by rational values.
    """
    if isinstance(text, bool):
        raise AlgebraicParseError(f"not a character value: {text!r}")
    if isinstance(text, (int, Fraction)):
        return AlgebraicValue.rational(text)
    if not isinstance(text, str):
        raise AlgebraicParseError(f"not a character value: {text!r}")
    tokens = []
    pos = 0
    s = text.strip()
    while pos < len(s):
        m = _TOKEN.match(s, pos)
        if not m or m.end() == pos:
            raise AlgebraicParseError(
                f"cannot parse {text!r} at {s[pos:]!r}; only integers, rationals, rN (square roots) "
                "and i are supported (general cyclotomic values are not)")
        pos = m.end()
        if m.group(1):
            tokens.append(("int", int(m.group(1))))
        elif m.group(2):
            tokens.append(("sqrt", int(m.group(3))))
        elif m.group(4):
            tokens.append(("i", None))
        else:
            tokens.append((m.group(5), None))
    parser = _Parser(tokens, text)
    value = parser.expr()
    if parser.pos != len(tokens):
        raise AlgebraicParseError(f"trailing input in {text!r}")
    return value


class _Parser:
    def __init__(self, tokens, text):
        self.tokens, self.text, self.pos = tokens, text, 0

    def peek(self):
        return self.tokens[self.pos][0] if self.pos < len(self.tokens) else None

    def take(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def fail(self, msg):
        raise AlgebraicParseError(f"{msg} in {self.text!r}")

    def expr(self):
        v = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            v = v + rhs if op == "+" else v - rhs
        return v

    def term(self):
        v = self.factor()
        while True:
            k = self.peek()
            if k == "*":
                self.take()
                v = v * self.factor()
            elif k == "/":
                self.take()
                d = self.factor()
                if not d.is_rational():
                    self.fail("division by an irrational value")
                if d.is_zero():
                    self.fail("division by zero")
                v = v / d
            elif k in ("int", "sqrt", "i", "("):
                v = v * self.factor()
            else:
                return v

    def factor(self):
        k = self.peek()
        if k == "-":
            self.take()
            return -self.factor()
        if k == "+":
            self.take()
            return self.factor()
        return self.atom()

    def atom(self):
        k = self.peek()
        if k is None:
            self.fail("unexpected end of input")
        kind, val = self.take()
        if kind == "int":
            return AlgebraicValue.rational(val)
        if kind == "sqrt":
            if val <= 0:
                self.fail("square root of a non-positive integer")
            return AlgebraicValue.sqrt(val)
        if kind == "i":
            return AlgebraicValue.i()
        if kind == "(":
            v = self.expr()
            if self.peek() != ")":
                self.fail("missing ')'")
            self.take()
            return v
        self.fail(f"unexpected {kind!r}")
