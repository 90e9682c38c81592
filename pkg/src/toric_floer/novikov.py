"""Finite sums in the Novikov ring.

An element is a finite sum ``sum a_k T^(2*pi*r_k)`` with exact rational
exponents ``r_k`` (stored in units of 2*pi) and coefficients that are either
exact Gaussian rationals or floating complex numbers.  The two coefficient
modes are never mixed inside one element.
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational


class GaussianRational:
    """Exact complex number ``re + im*i`` with rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    @classmethod
    def coerce(cls, value) -> "GaussianRational":
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, Rational):
            return cls(value)
        raise TypeError(f"cannot represent {value!r} exactly as a Gaussian rational")

    def __repr__(self):
        return f"GaussianRational({self.re}, {self.im})"

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, Rational):
            return self.im == 0 and self.re == other
        if isinstance(other, (complex, float)):
            return complex(self) == other
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __add__(self, other):
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def norm(self) -> Fraction:
        """Squared modulus, exact."""
        return self.re * self.re + self.im * self.im

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def inverse(self) -> "GaussianRational":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero")
        return GaussianRational(self.re / n, -self.im / n)

    def __truediv__(self, other):
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return GaussianRational.coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.inverse()
        result = GaussianRational(1)
        for _ in range(abs(k)):
            result = result * base
        return result


def is_exact(value) -> bool:
    return isinstance(value, (Rational, GaussianRational))


def _coerce_coefficient(value):
    if isinstance(value, bool):
        raise TypeError("boolean is not a coefficient")
    if is_exact(value):
        return GaussianRational.coerce(value)
    if isinstance(value, (complex, float)):
        return complex(value)
    raise TypeError(f"unsupported coefficient type {type(value).__name__}")


def _coerce_exponent(value) -> Fraction:
    if isinstance(value, bool) or not isinstance(value, (Rational, str)):
        raise TypeError(f"exponents must be exact rationals, got {value!r}")
    return Fraction(value)


class NovikovElement:
    """A normalized finite sum ``sum coeff * T^(2*pi*exp)``.

    ``terms`` is a tuple of ``(exponent, coefficient)`` pairs with strictly
    increasing exponents and no zero coefficients.  The zero element has no
    terms and is compatible with either coefficient mode.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=()):
        merged: dict[Fraction, object] = {}
        exact = None
        for exp, coeff in terms:
            exp = _coerce_exponent(exp)
            coeff = _coerce_coefficient(coeff)
            mode = isinstance(coeff, GaussianRational)
            if exact is None:
                exact = mode
            elif exact != mode:
                raise TypeError("cannot mix exact and floating coefficients")
            merged[exp] = merged[exp] + coeff if exp in merged else coeff
        self.terms = tuple(sorted((e, c) for e, c in merged.items() if c != 0))

    @classmethod
    def monomial(cls, coeff, exp) -> "NovikovElement":
        return cls([(exp, coeff)])

    @classmethod
    def zero(cls) -> "NovikovElement":
        return cls()

    @property
    def exact(self) -> bool | None:
        """True for Gaussian-rational coefficients, False for floating, None for zero."""
        if not self.terms:
            return None
        return isinstance(self.terms[0][1], GaussianRational)

    def _check_mode(self, other: "NovikovElement"):
        a, b = self.exact, other.exact
        if a is not None and b is not None and a != b:
            raise TypeError("cannot mix exact and floating Novikov elements")

    def __add__(self, other):
        if not isinstance(other, NovikovElement):
            return NotImplemented
        self._check_mode(other)
        return NovikovElement(self.terms + other.terms)

    def __neg__(self):
        return NovikovElement((e, -c) for e, c in self.terms)

    def __sub__(self, other):
        if not isinstance(other, NovikovElement):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, NovikovElement):
            try:
                scalar = _coerce_coefficient(other)
            except TypeError:
                return NotImplemented
            return NovikovElement((e, c * scalar) for e, c in self.terms)
        self._check_mode(other)
        return NovikovElement(
            (e1 + e2, c1 * c2) for e1, c1 in self.terms for e2, c2 in other.terms
        )

    def __rmul__(self, other):
        return self.__mul__(other)

    def __eq__(self, other):
        if isinstance(other, NovikovElement):
            return self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        return f"NovikovElement({list(self.terms)!r})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.terms:
            parts.append(f"({c})*T^(2pi*{e})")
        return " + ".join(parts)

    def valuation(self):
        """Smallest exponent, or ``math.inf`` for zero."""
        return self.terms[0][0] if self.terms else math.inf

    def leading_coefficient(self):
        return self.terms[0][1] if self.terms else 0

    def max_abs_coefficient(self) -> float:
        return max((abs(complex(c)) for _, c in self.terms), default=0.0)

    def conjugate(self) -> "NovikovElement":
        return NovikovElement((e, c.conjugate()) for e, c in self.terms)

    def convergent_eval(self, base: float = math.exp(-1)) -> complex:
        """Evaluate with ``T^(2*pi)`` replaced by the positive number ``base``."""
        if base <= 0:
            raise ValueError("base must be positive")
        return sum(
            (complex(c) * base ** float(e) for e, c in self.terms), complex(0.0)
        )

    def to_json(self) -> list[dict]:
        out = []
        for e, c in self.terms:
            if isinstance(c, GaussianRational):
                re, im = str(c.re), str(c.im)
            else:
                re, im = c.real, c.imag
            out.append({"exp": str(e), "re": re, "im": im})
        return out

    @classmethod
    def from_json(cls, records) -> "NovikovElement":
        terms = []
        for rec in records:
            re, im = rec["re"], rec["im"]
            if isinstance(re, str) and isinstance(im, str):
                coeff = GaussianRational(Fraction(re), Fraction(im))
            else:
                coeff = complex(float(re), float(im))
            terms.append((Fraction(rec["exp"]), coeff))
        return cls(terms)


def add(a: NovikovElement, b: NovikovElement) -> NovikovElement:
    return a + b


def mul(a: NovikovElement, b: NovikovElement) -> NovikovElement:
    return a * b


def valuation(a: NovikovElement):
    return a.valuation()


def convergent_eval(a: NovikovElement, base: float = math.exp(-1)) -> complex:
    return a.convergent_eval(base)
