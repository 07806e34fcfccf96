"""Solving sum_i a_i(x) D^i p_n(x) = F_n(x), n = 1..N, two ways.

The generic route is forward substitution: the system is triangular in the
coefficient index because D^n p_n is a nonzero constant, so a_n is pinned
by rows 1..n.  The closed forms express a_i directly through the inverted
family matrices; the two routes are cross-checked exactly.

The underlying systems are infinite (n = 1, 2, 3, ...), but a_i depends
only on F_1..F_i, so truncating at N determines a_1..a_N exactly; solving
with a longer prefix leaves the earlier coefficients unchanged.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from .exact import I, pochhammer
from .families import (
    HERMITE,
    JACOBI,
    LAGUERRE,
    ParamError,
    ParamSet,
    polynomial,
    validate_params,
)
from .poly import Poly

SOLVABLE_FAMILIES = (LAGUERRE, HERMITE, JACOBI)


@dataclass(frozen=True)
class DiffSystem:
    family: str
    params: ParamSet
    rhs: Tuple[Poly, ...]  # F_1 .. F_N

    def __post_init__(self):
        if self.family not in SOLVABLE_FAMILIES:
            raise ParamError(
                f"solver supports {SOLVABLE_FAMILIES}, got {self.family!r}"
            )
        if len(self.rhs) < 1:
            raise ValueError("rhs must contain at least F_1")
        validate_params(self.family, self.params)
        object.__setattr__(self, "rhs", tuple(self.rhs))


@dataclass(frozen=True)
class CoeffSolution:
    coeffs: Tuple[Poly, ...]  # a_1 .. a_N
    method: str  # "generic" | "closed_form"

    def to_json(self) -> dict:
        return {
            "method": self.method,
            "coeffs": [p.to_json() for p in self.coeffs],
        }


def _rhs_poly(sys: DiffSystem, n: int) -> Poly:
    return sys.rhs[n - 1]


def solve_generic(sys: DiffSystem) -> CoeffSolution:
    """Forward substitution row by row in the polynomial degree n."""
    N = len(sys.rhs)
    coeffs = []
    for n in range(1, N + 1):
        p_n = polynomial(sys.family, n, sys.params)
        diag = p_n.derivative(n)
        if diag.degree > 0 or diag.is_zero():
            raise ParamError(
                f"diagonal term D^{n} p_{n} is not a nonzero constant "
                f"(family {sys.family}, params {sys.params})"
            )
        residual = _rhs_poly(sys, n)
        for i in range(1, n):
            residual = residual - coeffs[i - 1] * p_n.derivative(i)
        coeffs.append((1 / diag.coeff(0)) * residual)
    solution = CoeffSolution(tuple(coeffs), "generic")
    _assert_satisfies(sys, solution)
    return solution


def solve_closed_form(sys: DiffSystem) -> CoeffSolution:
    """The catalog's explicit solution formulas.

    laguerre: a_i = (-1)^i sum_j L_{i-j}^(-alpha-i-1)(-x) F_j
    hermite:  a_k = sum_j i^(k-j) H_{k-j}(ix) F_j  (evaluated in Q(i); the
              imaginary part of every a_k is asserted to vanish)
    jacobi:   c_i = 2^i sum_j (a+b+2j+1)/(a+b+j+1)_{i+1}
                         * P_{i-j}^(-a-i-1,-b-i-1) F_j
    """
    N = len(sys.rhs)
    neg_x = Poly((0, -1))
    coeffs = []
    if sys.family == LAGUERRE:
        alpha = sys.params.alpha
        for i in range(1, N + 1):
            acc = Poly.zero()
            for j in range(1, i + 1):
                left = polynomial(LAGUERRE, i - j, ParamSet(alpha=-alpha - i - 1))(neg_x)
                acc = acc + left * _rhs_poly(sys, j)
            coeffs.append((-1) ** i * acc)
    elif sys.family == HERMITE:
        ix = Poly((0, I))
        for k in range(1, N + 1):
            acc = Poly.zero()
            for j in range(1, k + 1):
                left = I ** (k - j) * polynomial(HERMITE, k - j)(ix)
                acc = acc + left * _rhs_poly(sys, j)
            imag = acc.imag_part()
            assert imag.is_zero(), f"a_{k} has nonzero imaginary part {imag!r}"
            coeffs.append(acc.real_part())
    elif sys.family == JACOBI:
        a, b = sys.params.alpha, sys.params.beta
        s = a + b
        for i in range(1, N + 1):
            acc = Poly.zero()
            for j in range(1, i + 1):
                den = pochhammer(s + j + 1, i + 1)
                if den == 0:
                    raise ParamError(
                        f"jacobi closed form pole: (a+b+{j}+1)_{i + 1} = 0"
                    )
                left = polynomial(JACOBI, i - j, ParamSet(alpha=-a - i - 1, beta=-b - i - 1))
                acc = acc + ((s + 2 * j + 1) / den) * left * _rhs_poly(sys, j)
            coeffs.append(Fraction(2 ** i) * acc)
    else:
        raise ParamError(f"no closed form for family {sys.family!r}")
    solution = CoeffSolution(tuple(coeffs), "closed_form")
    _assert_satisfies(sys, solution)
    return solution


def _assert_satisfies(sys: DiffSystem, solution: CoeffSolution) -> None:
    """Back-substitution: sum_{i<=n} a_i D^i p_n must equal F_n for every n."""
    for n in range(1, len(sys.rhs) + 1):
        p_n = polynomial(sys.family, n, sys.params)
        acc = Poly.zero()
        for i in range(1, n + 1):
            acc = acc + solution.coeffs[i - 1] * p_n.derivative(i)
        assert acc == _rhs_poly(sys, n), (
            f"solution does not satisfy row n={n} ({solution.method})"
        )
