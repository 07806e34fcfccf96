"""Dense univariate polynomials over exact scalars, plus bivariate
polynomials in one auxiliary variable (y or M) with Poly coefficients.

Everything is immutable and exact.  Multiplication is the naive O(n^2)
product: all degrees in scope are a few dozen at most and exactness is the
point, not asymptotics.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

from .exact import (
    Scalar,
    ScalarLike,
    ensure_scalar,
    format_scalar,
    imag_part,
    parse_scalar,
    real_part,
)

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _trim(coeffs: list) -> tuple:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class Poly:
    """Dense polynomial in x, coefficients ascending by degree.

    Trailing zeros are trimmed; the zero polynomial has an empty
    coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[ScalarLike] = ()):
        object.__setattr__(
            self, "coeffs", _trim([ensure_scalar(c) for c in coeffs])
        )

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls) -> "Poly":
        return cls()

    @classmethod
    def one(cls) -> "Poly":
        return cls((1,))

    @classmethod
    def x(cls) -> "Poly":
        return cls((0, 1))

    @classmethod
    def const(cls, c: ScalarLike) -> "Poly":
        return cls((c,))

    # -- inspection -------------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, k: int) -> Scalar:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else _ZERO

    def real_part(self) -> "Poly":
        return Poly(real_part(c) for c in self.coeffs)

    def imag_part(self) -> "Poly":
        return Poly(imag_part(c) for c in self.coeffs)

    # -- ring operations ---------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)) or type(other).__name__ == "GaussianRational":
            return Poly((other,))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] = out[k] + c
        return Poly(out)

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
        return Poly(-c for c in self.coeffs)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if not a or not b:
            return Poly()
        out = [_ZERO] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                out[i + j] = out[i + j] + ca * cb
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        if not isinstance(n, int) or n < 0:
            raise ValueError("Poly power requires a nonnegative integer")
        result = Poly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    # -- calculus and evaluation ---------------------------------------

    def derivative(self, order: int = 1) -> "Poly":
        if order < 0:
            raise ValueError("derivative order must be >= 0")
        p = self
        for _ in range(order):
            p = Poly(k * c for k, c in enumerate(p.coeffs) if k >= 1)
            if p.is_zero():
                break
        return p

    def __call__(self, x0):
        """Horner evaluation; x0 may be a scalar or a Poly (composition)."""
        if isinstance(x0, Poly):
            acc = Poly()
            for c in reversed(self.coeffs):
                acc = acc * x0 + c
            return acc
        x0 = ensure_scalar(x0)
        acc = ensure_scalar(0)
        for c in reversed(self.coeffs):
            acc = acc * x0 + c
        return acc

    # -- serialization --------------------------------------------------

    def to_json(self, var: str = "x") -> dict:
        return {"var": var, "coeffs": [format_scalar(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj: dict) -> "Poly":
        return cls(parse_scalar(s) for s in obj["coeffs"])

    def to_latex(self, var: str = "x") -> str:
        if self.is_zero():
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeff(k)
            if c == 0:
                continue
            cs = format_scalar(c)
            if "/" in cs or "i" in cs:
                cs = _latex_scalar(c)
            if k == 0:
                terms.append(cs)
            else:
                mono = var if k == 1 else f"{var}^{{{k}}}"
                if cs == "1":
                    terms.append(mono)
                elif cs == "-1":
                    terms.append(f"-{mono}")
                else:
                    terms.append(f"{cs}{mono}")
        out = terms[0]
        for t in terms[1:]:
            out += t if t.startswith("-") else "+" + t
        return out

    def __repr__(self):
        return f"Poly({[format_scalar(c) for c in self.coeffs]})"

    def __str__(self):
        return self.to_latex()


def _latex_scalar(c: Scalar) -> str:
    re, im = real_part(c), imag_part(c)
    if im != 0:
        s = format_scalar(c).replace("*i", "i")
        return f"\\left({_frac_latex(re)}{'+' if im > 0 else '-'}{_frac_latex(abs(im))}i\\right)"
    return _frac_latex(re)


def _frac_latex(f: Fraction) -> str:
    if f.denominator == 1:
        return str(f.numerator)
    sign = "-" if f < 0 else ""
    return f"{sign}\\frac{{{abs(f.numerator)}}}{{{f.denominator}}}"


class BiPoly:
    """Polynomial in an auxiliary variable v (named "y" or "M") whose
    coefficients are Poly in x.  Evaluation at a scalar or Poly value of v
    collapses to Poly and commutes with the ring operations.
    """

    __slots__ = ("var", "coeffs")

    def __init__(self, coeffs: Sequence[Union[Poly, ScalarLike]] = (), var: str = "y"):
        polys = [c if isinstance(c, Poly) else Poly.const(c) for c in coeffs]
        while polys and polys[-1].is_zero():
            polys.pop()
        object.__setattr__(self, "coeffs", tuple(polys))
        object.__setattr__(self, "var", var)

    def __setattr__(self, name, value):
        raise AttributeError("BiPoly is immutable")

    @classmethod
    def from_x_poly(cls, p: Poly, var: str = "y") -> "BiPoly":
        """Embed a Poly in x as a BiPoly of v-degree 0."""
        return cls((p,), var=var)

    @classmethod
    def from_aux_poly(cls, p: Poly, var: str = "y") -> "BiPoly":
        """Reinterpret a scalar-coefficient Poly as a polynomial in v."""
        return cls(tuple(Poly.const(c) for c in p.coeffs), var=var)

    @classmethod
    def aux(cls, var: str = "y") -> "BiPoly":
        return cls((Poly.zero(), Poly.one()), var=var)

    @property
    def aux_degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, k: int) -> Poly:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Poly.zero()

    def _coerce(self, other):
        if isinstance(other, BiPoly):
            if other.coeffs and self.coeffs and other.var != self.var:
                raise ValueError(f"mixed auxiliary variables {self.var!r}/{other.var!r}")
            return other
        if isinstance(other, Poly):
            return BiPoly((other,), var=self.var)
        if isinstance(other, (int, Fraction)) or type(other).__name__ == "GaussianRational":
            return BiPoly((Poly.const(other),), var=self.var)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, p in enumerate(b):
            out[k] = out[k] + p
        return BiPoly(out, var=self.var or o.var)

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
        return BiPoly([-p for p in self.coeffs], var=self.var)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if not a or not b:
            return BiPoly((), var=self.var)
        out = [Poly.zero()] * (len(a) + len(b) - 1)
        for i, pa in enumerate(a):
            for j, pb in enumerate(b):
                out[i + j] = out[i + j] + pa * pb
        return BiPoly(out, var=self.var)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "BiPoly":
        if not isinstance(n, int) or n < 0:
            raise ValueError("BiPoly power requires a nonnegative integer")
        result = BiPoly((Poly.one(),), var=self.var)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash((self.var, self.coeffs))

    def eval_aux(self, v0) -> Poly:
        """Substitute v = v0 (scalar or Poly in x), collapsing to a Poly."""
        if not isinstance(v0, Poly):
            v0 = Poly.const(v0)
        acc = Poly.zero()
        for p in reversed(self.coeffs):
            acc = acc * v0 + p
        return acc

    def derivative_x(self, order: int = 1) -> "BiPoly":
        return BiPoly([p.derivative(order) for p in self.coeffs], var=self.var)

    def to_json(self) -> dict:
        return {"var": self.var, "coeffs": [p.to_json() for p in self.coeffs]}

    @classmethod
    def from_json(cls, obj: dict) -> "BiPoly":
        return cls([Poly.from_json(p) for p in obj["coeffs"]], var=obj["var"])

    def __repr__(self):
        return f"BiPoly({self.var!r}, {list(self.coeffs)!r})"
