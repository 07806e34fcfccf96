"""Truncated formal power series in t with Poly-in-x coefficients.

All arithmetic is exact modulo t^(order+1); no guard terms are needed and
coefficients beyond the truncation order are never consulted.  The
logarithm and exponential are plain truncated Taylor sums, which keeps the
whole engine inside one ring: rational-function arguments such as
x*t/(t-1) are expanded to series before use.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

from .exact import ScalarLike, ensure_scalar, factorial
from .poly import Poly


class SeriesDomainError(ValueError):
    """A series operation was applied outside its domain of definition."""


def _as_poly(c) -> Poly:
    return c if isinstance(c, Poly) else Poly.const(c)


class TruncSeries:
    """Formal power series sum_{n=0}^{order} c_n(x) t^n, exact mod t^(order+1)."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Iterable[Union[Poly, ScalarLike]], order: int):
        if order < 0:
            raise ValueError("series order must be >= 0")
        polys = [_as_poly(c) for c in coeffs][: order + 1]
        polys += [Poly.zero()] * (order + 1 - len(polys))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(polys))

    def __setattr__(self, name, value):
        raise AttributeError("TruncSeries is immutable")

    @classmethod
    def zero(cls, order: int) -> "TruncSeries":
        return cls((), order)

    @classmethod
    def one(cls, order: int) -> "TruncSeries":
        return cls((Poly.one(),), order)

    def coeff(self, n: int) -> Poly:
        if not 0 <= n <= self.order:
            raise IndexError(f"coefficient index {n} beyond truncation order {self.order}")
        return self.coeffs[n]

    def _coerce(self, other):
        if isinstance(other, TruncSeries):
            if other.order != self.order:
                raise ValueError("mixed truncation orders")
            return other
        if isinstance(other, (Poly, int, Fraction)) or type(other).__name__ == "GaussianRational":
            return TruncSeries((_as_poly(other),), self.order)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return TruncSeries(
            (a + b for a, b in zip(self.coeffs, o.coeffs)), self.order
        )

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __neg__(self):
        return TruncSeries((-p for p in self.coeffs), self.order)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = self.order
        out = [Poly.zero()] * (n + 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j in range(n + 1 - i):
                b = o.coeffs[j]
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return TruncSeries(out, n)

    __rmul__ = __mul__

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def scale(self, s: Union[Poly, ScalarLike]) -> "TruncSeries":
        s = _as_poly(s)
        return TruncSeries((s * p for p in self.coeffs), self.order)

    def invert(self) -> "TruncSeries":
        """Multiplicative inverse; requires constant term 1."""
        self._require_const_one("invert")
        n = self.order
        out = [Poly.zero()] * (n + 1)
        out[0] = Poly.one()
        for m in range(1, n + 1):
            acc = Poly.zero()
            for k in range(1, m + 1):
                if not self.coeffs[k].is_zero():
                    acc = acc + self.coeffs[k] * out[m - k]
            out[m] = -acc
        return TruncSeries(out, n)

    def exp(self) -> "TruncSeries":
        """exp of a series with zero constant term."""
        if not self.coeffs[0].is_zero():
            raise SeriesDomainError(
                f"exp requires constant term 0, got {self.coeffs[0]!r}"
            )
        n = self.order
        result = TruncSeries.one(n)
        power = TruncSeries.one(n)
        for k in range(1, n + 1):
            power = power * self
            result = result + power.scale(Fraction(1, factorial(k)))
        return result

    def log(self) -> "TruncSeries":
        """log of a series with constant term 1."""
        self._require_const_one("log")
        n = self.order
        u = self - TruncSeries.one(n)
        result = TruncSeries.zero(n)
        power = TruncSeries.one(n)
        for k in range(1, n + 1):
            power = power * u
            result = result + power.scale(Fraction((-1) ** (k + 1), k))
        return result

    def pow_scalar(self, gamma: ScalarLike) -> "TruncSeries":
        """S^gamma = exp(gamma * log S) for a scalar exponent in Q(i)."""
        self._require_const_one("pow_scalar")
        return self.log().scale(ensure_scalar(gamma)).exp()

    def pow_poly(self, e: Poly) -> "TruncSeries":
        """S^e for a polynomial exponent e(x): exp(e * log S)."""
        self._require_const_one("pow_poly")
        return self.log().scale(e).exp()

    def _require_const_one(self, op: str):
        if self.coeffs[0] != Poly.one():
            raise SeriesDomainError(
                f"{op} requires constant term 1, got {self.coeffs[0]!r}"
            )

    def __repr__(self):
        terms = ", ".join(repr(p) for p in self.coeffs)
        return f"TruncSeries(order={self.order}, [{terms}])"
