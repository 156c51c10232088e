"""Laurent polynomials in the formal parameter ``q`` with rational coefficients.

These are the coefficients of every algebra element, tensor and structure map.
Values are immutable and kept in canonical form (no zero coefficients), so
equality is structural.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational
from typing import Mapping, Union

from .errors import ZeroEvaluationPoint

__all__ = ["LaurentScalar", "ScalarLike", "as_scalar", "ONE", "ZERO", "Q"]

ScalarLike = Union["LaurentScalar", int, Fraction]

_UNIT_TERMS = {0: Fraction(1)}

_TERM = re.compile(r"([+-])(\d+(?:/\d+)?)?\*?(q(?:\^(-?\d+))?)?")


class LaurentScalar:
    """A finite sum ``sum_k c_k q^k`` with ``c_k`` rational and ``k`` any integer."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, Rational] | None = None):
        clean = {}
        if terms:
            for k, c in terms.items():
                c = Fraction(c)
                if c:
                    clean[int(k)] = c
        self._terms = dict(sorted(clean.items()))
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> LaurentScalar:
        # terms already canonical: sorted keys, nonzero Fraction values
        obj = object.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, c: Rational) -> LaurentScalar:
        return cls({0: c})

    @classmethod
    def monomial(cls, exponent: int, coeff: Rational = 1) -> LaurentScalar:
        return cls({exponent: coeff})

    @property
    def terms(self) -> dict[int, Fraction]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(k == 0 for k in self._terms)

    def constant_value(self) -> Fraction:
        """Coefficient of ``q^0``; raises if the scalar depends on ``q``."""
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return self._terms.get(0, Fraction(0))

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if isinstance(other, LaurentScalar):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == LaurentScalar.constant(other)._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def __add__(self, other):
        other = as_scalar(other)
        if not other._terms:
            return self
        if not self._terms:
            return other
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return LaurentScalar(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentScalar({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-as_scalar(other))

    def __rsub__(self, other):
        return as_scalar(other) - self

    def __mul__(self, other):
        if not isinstance(other, (LaurentScalar, int, Fraction)):
            return NotImplemented
        other = as_scalar(other)
        a, b = self._terms, other._terms
        if a == _UNIT_TERMS:
            return other
        if b == _UNIT_TERMS:
            return self
        if len(a) == 1 and len(b) == 1:
            ((k1, c1),) = a.items()
            ((k2, c2),) = b.items()
            return LaurentScalar._raw({k1 + k2: c1 * c2})
        out: dict[int, Fraction] = {}
        for k1, c1 in self._terms.items():
            for k2, c2 in other._terms.items():
                out[k1 + k2] = out.get(k1 + k2, 0) + c1 * c2
        return LaurentScalar(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials are invertible")
            ((k, c),) = self._terms.items()
            return LaurentScalar({k * n: Fraction(1) / c ** (-n)})
        result = ONE
        for _ in range(n):
            result = result * self
        return result

    def evaluate(self, q0: Rational) -> Fraction:
        """Exact value at ``q = q0``."""
        q0 = Fraction(q0)
        if q0 == 0:
            if any(k < 0 for k in self._terms):
                raise ZeroEvaluationPoint(f"cannot evaluate {self} at q=0")
            return self._terms.get(0, Fraction(0))
        return sum((c * q0**k for k, c in self._terms.items()), Fraction(0))

    def to_sympy(self, q):
        import sympy

        return sum((sympy.Rational(c.numerator, c.denominator) * q**k for k, c in self._terms.items()), sympy.Integer(0))

    def is_single_term(self) -> bool:
        return len(self._terms) <= 1

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for k, c in self._terms.items():
            if k == 0:
                body = str(c)
            else:
                power = "q" if k == 1 else f"q^{k}"
                if c == 1:
                    body = power
                elif c == -1:
                    body = "-" + power
                else:
                    body = f"{c}*{power}"
            parts.append(body)
        text = parts[0]
        for p in parts[1:]:
            text += " - " + p[1:] if p.startswith("-") else " + " + p
        return text

    def __repr__(self):
        return f"LaurentScalar({self})"

    @classmethod
    def parse(cls, text: str) -> LaurentScalar:
        """Parse the rendering produced by ``str``, e.g. ``"3/2*q^-1 + 1 + q^2"``."""
        compact = text.replace(" ", "")
        if not compact:
            raise ValueError("empty scalar")
        if compact[0] not in "+-":
            compact = "+" + compact
        total, pos = ZERO, 0
        while pos < len(compact):
            m = _TERM.match(compact, pos)
            if not m or m.end() == pos or (m.group(2) is None and m.group(3) is None):
                raise ValueError(f"cannot parse scalar {text!r}")
            sign = -1 if m.group(1) == "-" else 1
            coeff = Fraction(m.group(2)) if m.group(2) else Fraction(1)
            exponent = 0
            if m.group(3):
                exponent = int(m.group(4)) if m.group(4) else 1
            total = total + cls.monomial(exponent, sign * coeff)
            pos = m.end()
        return total


def as_scalar(x: ScalarLike) -> LaurentScalar:
    if isinstance(x, LaurentScalar):
        return x
    if isinstance(x, (int, Fraction)):
        return LaurentScalar.constant(x)
    raise TypeError(f"not a scalar: {x!r}")


ZERO = LaurentScalar()
ONE = LaurentScalar({0: 1})
Q = LaurentScalar({1: 1})
