"""Triangular polynomial matrices, exact inversion, and the full catalog
of inversion / convolution identities, each verified to zero residual.

Matrix identities are checked the strong way: the closed-form left factor
must equal the computed inverse entry by entry, not merely give U*T = I
(the product check is kept as an internal assertion of invert_triangular).

Indexing: matrices are stored 0-based, matching the i,j = 0,1,2,... of the
Charlier/Laguerre/Jacobi catalog entries; the banded Legendre/Chebyshev
matrices are shift-invariant so the 1-based presentation they are usually
given in differs only by a relabeling.

The Jacobi inversion couples its scalar factor to (i, j, k) jointly, so it
is not literally a product of two polynomial matrices.  Writing
(a+b+k+j+1)_{i-j+1} = (a+b+k+1)_{i+1} / (a+b+k+1)_j splits the factor into
row and column weights; normalizing both matrices to unit diagonals gives

    t_kj = (a+b+k+1)_j / (a+b+j+1)_j           * P_{k-j}^(a+j, b+j)
    u_ik = (a+b+i+1)_i (a+b+2k+1)
              / (a+b+k+1)_{i+1}                * P_{i-k}^(-a-i-1, -b-i-1)

and the literal triple sum is verified separately as well.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, List, Optional, Sequence

from .exact import GaussianRational, I, factorial, pochhammer
from .families import (
    CHARLIER,
    CHEBYSHEV_T,
    CHEBYSHEV_U,
    GEGENBAUER,
    HERMITE,
    JACOBI,
    LAGUERRE,
    LEGENDRE,
    MEIXNER,
    MEIXNER_POLLACZEK,
    EMPTY_PARAMS,
    ParamError,
    ParamSet,
    PoleError,
    polynomial,
)
from .poly import BiPoly, Poly

_HALF = Fraction(1, 2)
_NEG_X = Poly((0, -1))


class LowerTriPolyMatrix:
    """Square lower-triangular matrix with Poly entries (implicit zeros
    above the diagonal); row i stores entries for columns 0..i."""

    __slots__ = ("size", "rows")

    def __init__(self, rows: Sequence[Sequence[Poly]]):
        rows = [tuple(row) for row in rows]
        for i, row in enumerate(rows):
            if len(row) != i + 1:
                raise ValueError(f"row {i} must have {i + 1} entries, got {len(row)}")
        object.__setattr__(self, "rows", tuple(rows))
        object.__setattr__(self, "size", len(rows))

    def __setattr__(self, name, value):
        raise AttributeError("LowerTriPolyMatrix is immutable")

    @classmethod
    def from_entry_fn(cls, size: int, entry: Callable[[int, int], Poly]):
        return cls([[entry(i, j) for j in range(i + 1)] for i in range(size)])

    @classmethod
    def identity(cls, size: int):
        return cls.from_entry_fn(
            size, lambda i, j: Poly.one() if i == j else Poly.zero()
        )

    def entry(self, i: int, j: int) -> Poly:
        if j > i:
            return Poly.zero()
        return self.rows[i][j]

    def __matmul__(self, other: "LowerTriPolyMatrix") -> "LowerTriPolyMatrix":
        if self.size != other.size:
            raise ValueError("size mismatch")
        return LowerTriPolyMatrix.from_entry_fn(
            self.size,
            lambda i, j: sum(
                (self.entry(i, k) * other.entry(k, j) for k in range(j, i + 1)),
                Poly.zero(),
            ),
        )

    def __eq__(self, other):
        if not isinstance(other, LowerTriPolyMatrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def is_identity(self) -> bool:
        return self == LowerTriPolyMatrix.identity(self.size)

    def invert(self) -> "LowerTriPolyMatrix":
        """Exact inverse by forward substitution.  Diagonal entries must be
        nonzero constants (polynomial division is not supported)."""
        diag = []
        for i in range(self.size):
            d = self.entry(i, i)
            if d.degree > 0 or d.is_zero():
                raise ValueError(
                    f"diagonal entry ({i},{i}) is not a nonzero constant: {d!r}"
                )
            diag.append(d.coeff(0))
        rows: List[List[Poly]] = []
        for i in range(self.size):
            row = []
            for j in range(i):
                acc = Poly.zero()
                for k in range(j, i):
                    acc = acc + self.entry(i, k) * rows[k][j]
                row.append((1 / diag[i]) * -acc)
            row.append(Poly.const(1 / diag[i]))
            rows.append(row)
        inverse = LowerTriPolyMatrix(rows)
        assert (inverse @ self).is_identity() and (self @ inverse).is_identity()
        return inverse

    def to_json(self) -> dict:
        return {
            "size": self.size,
            "rows": [[p.to_json() for p in row] for row in self.rows],
        }


# ---------------------------------------------------------------------------
# identity catalog
# ---------------------------------------------------------------------------

MATRIX_IDENTITIES = (
    "charlier_inv",
    "laguerre_inv",
    "laguerre_inv_plain",
    "jacobi_inv",
    "jacobi_from_meixner",
    "jacobi_from_ultra",
    "ultra_inv",
    "meixner_inv",
    "mp_inv_reflect",
    "mp_inv_phase",
    "legendre_limit_inverse",
    "chebU_banded_inverse",
    "chebT_inverse",
)

CONVOLUTION_IDENTITIES = (
    "hermite_conv",
    "legendre_conv_u",
    "chebT_geom_conv",
    "chebU_recurrence",
    "chebTU_relation",
    "jacobi_two_var",
)

ALL_IDENTITIES = MATRIX_IDENTITIES + CONVOLUTION_IDENTITIES

#: parameters each identity samples over
IDENTITY_PARAMS = {
    "charlier_inv": ("a",),
    "laguerre_inv": ("alpha",),
    "laguerre_inv_plain": ("alpha",),
    "jacobi_inv": ("alpha", "beta"),
    "jacobi_two_var": ("alpha", "beta"),
    "jacobi_from_meixner": ("alpha", "beta"),
    "jacobi_from_ultra": ("alpha",),
    "ultra_inv": ("lam",),
    "meixner_inv": ("beta_m", "c"),
    "mp_inv_reflect": ("lam", "phase"),
    "mp_inv_phase": ("lam", "phase"),
    "hermite_conv": (),
    "legendre_limit_inverse": (),
    "chebU_banded_inverse": (),
    "chebT_inverse": (),
    "legendre_conv_u": (),
    "chebT_geom_conv": (),
    "chebU_recurrence": (),
    "chebTU_relation": (),
}


def _check_identity_tag(identity: str):
    if identity not in ALL_IDENTITIES:
        raise ValueError(
            f"unknown identity {identity!r}; expected one of {ALL_IDENTITIES}"
        )


# -- base (right-factor) matrices -------------------------------------------

def _matrix_entry(identity: str, i: int, j: int, params: ParamSet) -> Poly:
    m = i - j
    if identity == "charlier_inv":
        return polynomial(CHARLIER, m, ParamSet(a=params.a))
    if identity == "laguerre_inv":
        return polynomial(LAGUERRE, m, ParamSet(alpha=params.alpha + j))
    if identity == "laguerre_inv_plain":
        return polynomial(LAGUERRE, m, ParamSet(alpha=params.alpha))
    if identity == "jacobi_inv":
        s = params.alpha + params.beta
        num = pochhammer(s + i + 1, j)
        den = pochhammer(s + j + 1, j)
        if den == 0:
            raise PoleError(f"jacobi_inv pole in column weight at (i,j)=({i},{j})")
        return (num / den) * polynomial(
            JACOBI, m, ParamSet(alpha=params.alpha + j, beta=params.beta + j)
        )
    if identity == "jacobi_from_meixner":
        return polynomial(
            JACOBI, m, ParamSet(alpha=params.alpha, beta=params.beta - m)
        )
    if identity == "jacobi_from_ultra":
        num = pochhammer(2 * params.alpha + 1, m)
        den = pochhammer(params.alpha + 1, m)
        if den == 0:
            raise PoleError(f"jacobi_from_ultra pole at (i,j)=({i},{j})")
        return (num / den) * polynomial(
            JACOBI, m, ParamSet(alpha=params.alpha, beta=params.alpha)
        )
    if identity == "ultra_inv":
        return polynomial(GEGENBAUER, m, ParamSet(lam=params.lam))
    if identity == "meixner_inv":
        return polynomial(MEIXNER, m, ParamSet(beta_m=params.beta_m, c=params.c))
    if identity in ("mp_inv_reflect", "mp_inv_phase"):
        return polynomial(
            MEIXNER_POLLACZEK, m, ParamSet(lam=params.lam, phase=params.phase)
        )
    if identity == "legendre_limit_inverse":
        return polynomial(LEGENDRE, m)
    if identity == "chebU_banded_inverse":
        return polynomial(CHEBYSHEV_U, m)
    if identity == "chebT_inverse":
        return polynomial(CHEBYSHEV_T, m)
    raise ValueError(f"{identity!r} has no base matrix")


def build_matrix(identity: str, size: int, params: ParamSet = EMPTY_PARAMS) -> LowerTriPolyMatrix:
    """The lower-triangular family-member matrix an identity inverts."""
    _check_identity_tag(identity)
    if identity not in MATRIX_IDENTITIES:
        raise ValueError(f"{identity!r} is a convolution identity, not a matrix one")
    return LowerTriPolyMatrix.from_entry_fn(
        size, lambda i, j: _matrix_entry(identity, i, j, params)
    )


# -- closed-form left factors -------------------------------------------------

def closed_form_inverse_entry(
    identity: str, i: int, j: int, params: ParamSet = EMPTY_PARAMS
) -> Poly:
    """The inverse-matrix entry u_ij the catalog asserts, j <= i."""
    _check_identity_tag(identity)
    if j > i:
        return Poly.zero()
    m = i - j
    if identity == "charlier_inv":
        return polynomial(CHARLIER, m, ParamSet(a=-params.a))(_NEG_X)
    if identity == "laguerre_inv":
        return polynomial(LAGUERRE, m, ParamSet(alpha=-params.alpha - i - 1))(_NEG_X)
    if identity == "laguerre_inv_plain":
        return polynomial(LAGUERRE, m, ParamSet(alpha=-params.alpha - 2))(_NEG_X)
    if identity == "jacobi_inv":
        s = params.alpha + params.beta
        den = pochhammer(s + j + 1, i + 1)
        if den == 0:
            raise PoleError(f"jacobi_inv pole in row weight at (i,j)=({i},{j})")
        factor = pochhammer(s + i + 1, i) * (s + 2 * j + 1) / den
        return factor * polynomial(
            JACOBI, m, ParamSet(alpha=-params.alpha - i - 1, beta=-params.beta - i - 1)
        )
    if identity == "jacobi_from_meixner":
        return polynomial(
            JACOBI, m, ParamSet(alpha=-params.alpha - 2, beta=-params.beta - m)
        )
    if identity == "jacobi_from_ultra":
        num = pochhammer(-2 * params.alpha - 1, m)
        den = pochhammer(-params.alpha, m)
        if den == 0:
            raise PoleError(f"jacobi_from_ultra pole at (i,j)=({i},{j})")
        return (num / den) * polynomial(
            JACOBI, m, ParamSet(alpha=-params.alpha - 1, beta=-params.alpha - 1)
        )
    if identity == "ultra_inv":
        return polynomial(GEGENBAUER, m, ParamSet(lam=-params.lam))
    if identity == "meixner_inv":
        return polynomial(MEIXNER, m, ParamSet(beta_m=-params.beta_m, c=params.c))(_NEG_X)
    if identity == "mp_inv_reflect":
        return polynomial(
            MEIXNER_POLLACZEK, m, ParamSet(lam=-params.lam, phase=params.phase)
        )(_NEG_X)
    if identity == "mp_inv_phase":
        return polynomial(
            MEIXNER_POLLACZEK,
            m,
            ParamSet(lam=-params.lam, phase=params.phase.conjugate()),
        )
    if identity == "legendre_limit_inverse":
        if m == 0:
            return Poly.one()
        if m == 1:
            return _NEG_X
        b = polynomial(JACOBI, m - 1, ParamSet(alpha=Fraction(1), beta=Fraction(-1)))
        return Fraction(1, m) * (Poly((1, -1)) * b)  # (1/m)(1-x) P_{m-1}^(1,-1)
    if identity == "chebU_banded_inverse":
        if m == 0 or m == 2:
            return Poly.one()
        if m == 1:
            return Poly((0, -2))
        return Poly.zero()
    if identity == "chebT_inverse":
        if m == 0:
            return Poly.one()
        if m == 1:
            return _NEG_X
        return Poly.x() ** (m - 2) * Poly((1, 0, -1))  # x^(m-2)(1-x^2)
    raise ValueError(f"{identity!r} has no closed-form inverse")


def closed_form_inverse(
    identity: str, size: int, params: ParamSet = EMPTY_PARAMS
) -> LowerTriPolyMatrix:
    return LowerTriPolyMatrix.from_entry_fn(
        size, lambda i, j: closed_form_inverse_entry(identity, i, j, params)
    )


def invert_triangular(matrix: LowerTriPolyMatrix) -> LowerTriPolyMatrix:
    return matrix.invert()


# ---------------------------------------------------------------------------
# convolution / recurrence verifiers
# ---------------------------------------------------------------------------

def _hermite_conv_residual(n: int) -> Poly:
    # sum_k H_k(x) H_{n-k}(ix) i^{n-k}  -  delta_{n0}
    ix = Poly((0, I))
    acc = Poly.zero()
    for k in range(n + 1):
        acc = acc + polynomial(HERMITE, k) * (
            polynomial(HERMITE, n - k)(ix) * I ** (n - k)
        )
    return acc - (Poly.one() if n == 0 else Poly.zero())


def _convolution_residual(identity: str, n: int) -> Poly:
    if identity == "hermite_conv":
        return _hermite_conv_residual(n)
    if identity == "legendre_conv_u":
        acc = sum(
            (polynomial(LEGENDRE, k) * polynomial(LEGENDRE, n - k) for k in range(n + 1)),
            Poly.zero(),
        )
        return acc - polynomial(CHEBYSHEV_U, n)
    if identity == "chebT_geom_conv":
        acc = sum(
            (Poly.x() ** k * polynomial(CHEBYSHEV_T, n - k) for k in range(n + 1)),
            Poly.zero(),
        )
        return acc - polynomial(CHEBYSHEV_U, n)
    if identity == "chebU_recurrence":
        return (
            polynomial(CHEBYSHEV_U, n)
            - Poly((0, 2)) * polynomial(CHEBYSHEV_U, n + 1)
            + polynomial(CHEBYSHEV_U, n + 2)
        )
    if identity == "chebTU_relation":
        return (
            Poly((1, 0, -1)) * polynomial(CHEBYSHEV_U, n)
            - Poly.x() * polynomial(CHEBYSHEV_T, n + 1)
            + polynomial(CHEBYSHEV_T, n + 2)
        )
    raise ValueError(f"{identity!r} is not a scalar convolution identity")


def jacobi_two_var_sides(n: int, alpha: Fraction, beta: Fraction):
    """Both sides of the two-variable Jacobi identity as BiPoly in (x, y):

        sum_k (a+b+2k+1)/(a+b+k+1)_{n+1} P_k^(a,b)(x) P_{n-k}^(-n-a-1,-n-b-1)(y)
            = (1/n!) ((x-y)/2)^n
    """
    s = alpha + beta
    lhs = BiPoly((), var="y")
    for k in range(n + 1):
        den = pochhammer(s + k + 1, n + 1)
        if den == 0:
            raise PoleError(f"jacobi_two_var pole at k={k}, n={n}")
        factor = (s + 2 * k + 1) / den
        px = polynomial(JACOBI, k, ParamSet(alpha=alpha, beta=beta))
        py = polynomial(
            JACOBI, n - k, ParamSet(alpha=-alpha - n - 1, beta=-beta - n - 1)
        )
        lhs = lhs + factor * (
            BiPoly.from_x_poly(px) * BiPoly.from_aux_poly(py, var="y")
        )
    half_diff = BiPoly.from_x_poly(Poly((0, _HALF))) - BiPoly(
        (Poly.zero(), Poly.const(_HALF)), var="y"
    )
    rhs = Fraction(1, factorial(n)) * half_diff ** n
    return lhs, rhs


# ---------------------------------------------------------------------------
# deterministic parameter sampling
# ---------------------------------------------------------------------------

def sample_rational(rng: random.Random, bound: int = 50) -> Fraction:
    num = rng.randint(-bound, bound)
    den = rng.randint(1, bound)
    return Fraction(num, den)


def sample_phase(rng: random.Random, bound: int = 12) -> GaussianRational:
    """A unimodular Gaussian rational from a random Pythagorean pair."""
    while True:
        m = rng.randint(1, bound)
        n = rng.randint(1, bound)
        if m == n:
            continue
        m, n = max(m, n), min(m, n)
        h = m * m + n * n
        return GaussianRational(Fraction(m * m - n * n, h), Fraction(2 * m * n, h))


def _params_pole_free(identity: str, params: ParamSet, size: int) -> bool:
    try:
        if identity in MATRIX_IDENTITIES:
            for i in range(size):
                for j in range(i + 1):
                    _matrix_entry(identity, i, j, params)
                    closed_form_inverse_entry(identity, i, j, params)
        elif identity == "jacobi_two_var":
            for n in range(size + 1):
                s = params.alpha + params.beta
                for k in range(n + 1):
                    if pochhammer(s + k + 1, n + 1) == 0:
                        return False
        return True
    except (PoleError, ParamError):
        return False


def sample_params(
    identity: str, size: int, count: int, seed: int, pit: bool = False
) -> List[ParamSet]:
    """Deterministic seeded parameter samples avoiding all pole sets.

    With pit=True a grid is used whose side exceeds the per-parameter degree
    bound (2*size + 2) of every identity in the catalog, which turns the
    zero-residual checks into a proof by polynomial identity testing.
    """
    _check_identity_tag(identity)
    names = IDENTITY_PARAMS[identity]
    if not names:
        return [EMPTY_PARAMS]
    rng = random.Random(seed)
    out: List[ParamSet] = []
    if pit:
        # grid side exceeds the per-parameter degree bound, so zero residual
        # on the whole grid certifies the identity in those parameters
        grid_side = 2 * size + 3
        values = [Fraction(v, 2) + Fraction(1, 3) for v in range(1, grid_side + 1)]
        rational_names = [name for name in names if name != "phase"]
        import itertools

        for combo in itertools.product(values, repeat=len(rational_names)):
            kwargs = dict(zip(rational_names, combo))
            if "phase" in names:
                kwargs["phase"] = DEFAULT_PHASE_SAMPLE
            ps = ParamSet(**kwargs)
            if _params_pole_free(identity, ps, size):
                out.append(ps)
        return out
    attempts = 0
    while len(out) < count and attempts < count * 200:
        attempts += 1
        kwargs = {}
        for name in names:
            if name == "phase":
                kwargs[name] = sample_phase(rng)
            elif name == "c":
                c = sample_rational(rng)
                if c == 0:
                    c = Fraction(1, 2)
                kwargs[name] = c
            else:
                kwargs[name] = sample_rational(rng)
        ps = ParamSet(**kwargs)
        if _params_pole_free(identity, ps, size):
            out.append(ps)
    if len(out) < count:
        raise RuntimeError(f"could not find {count} pole-free samples for {identity}")
    return out


DEFAULT_PHASE_SAMPLE = GaussianRational(Fraction(3, 5), Fraction(4, 5))


# ---------------------------------------------------------------------------
# verification reports
# ---------------------------------------------------------------------------

@dataclass
class VerificationReport:
    identity: str
    size: int
    param_samples: List[ParamSet] = field(default_factory=list)
    status: str = "pass"
    counterexample: Optional[dict] = None
    max_residual_degree: int = -1
    elapsed_ms: float = 0.0

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json(self, include_elapsed: bool = False) -> dict:
        # elapsed is reported as null in JSON so identical arguments give
        # byte-identical output; the measured time lives in the text format
        return {
            "identity": self.identity,
            "size": self.size,
            "samples": [_params_json(p) for p in self.param_samples],
            "status": self.status,
            "counterexample": self.counterexample,
            "elapsed_ms": round(self.elapsed_ms, 3) if include_elapsed else None,
        }


def _params_json(params: ParamSet) -> dict:
    from .exact import format_scalar

    out = {}
    for name in ("alpha", "beta", "lam", "a", "c", "beta_m", "phase"):
        value = getattr(params, name)
        if value is not None:
            out[name] = format_scalar(value)
    return out


def verify_identity(
    identity: str,
    size: int,
    param_samples: Optional[Sequence[ParamSet]] = None,
    samples: int = 20,
    seed: int = 0,
    pit: bool = False,
) -> VerificationReport:
    """Run one identity's verifier over parameter samples; failures are
    reported (with the first counterexample location), never raised."""
    _check_identity_tag(identity)
    if param_samples is None:
        param_samples = sample_params(identity, size, samples, seed, pit=pit)
    start = time.monotonic()
    report = VerificationReport(identity=identity, size=size, param_samples=list(param_samples))

    def fail(location: dict, residual: Poly):
        report.status = "fail"
        report.counterexample = dict(location, residual=residual.to_json())

    for params in param_samples:
        if report.status == "fail":
            break
        if identity in MATRIX_IDENTITIES:
            base = build_matrix(identity, size, params)
            computed = base.invert()
            closed = closed_form_inverse(identity, size, params)
            for i in range(size):
                for j in range(i + 1):
                    residual = closed.entry(i, j) - computed.entry(i, j)
                    if not residual.is_zero():
                        fail({"i": i, "j": j, "params": _params_json(params)}, residual)
                        break
                else:
                    continue
                break
            else:
                if identity == "jacobi_inv":
                    _verify_jacobi_inv_literal(size, params, fail)
        elif identity == "jacobi_two_var":
            for n in range(size + 1):
                lhs, rhs = jacobi_two_var_sides(n, params.alpha, params.beta)
                diff = lhs - rhs
                if not diff.is_zero():
                    worst = max(diff.coeffs, key=lambda p: p.degree)
                    fail({"n": n, "params": _params_json(params)}, worst)
                    break
        else:
            for n in range(size + 1):
                residual = _convolution_residual(identity, n)
                if not residual.is_zero():
                    fail({"n": n, "params": _params_json(params)}, residual)
                    break
    report.elapsed_ms = (time.monotonic() - start) * 1000.0
    return report


def _verify_jacobi_inv_literal(size: int, params: ParamSet, fail) -> None:
    """The paper's literal triple sum for the Jacobi inversion:
    sum_k (a+b+2k+1)/(a+b+k+j+1)_{i-j+1} P_{i-k}^(-a-i-1,-b-i-1) P_{k-j}^(a+j,b+j) = delta_ij."""
    a, b = params.alpha, params.beta
    s = a + b
    for i in range(size):
        for j in range(i + 1):
            acc = Poly.zero()
            for k in range(j, i + 1):
                den = pochhammer(s + k + j + 1, i - j + 1)
                if den == 0:
                    raise PoleError(f"jacobi_inv literal pole at (i,j,k)=({i},{j},{k})")
                acc = acc + ((s + 2 * k + 1) / den) * (
                    polynomial(JACOBI, i - k, ParamSet(alpha=-a - i - 1, beta=-b - i - 1))
                    * polynomial(JACOBI, k - j, ParamSet(alpha=a + j, beta=b + j))
                )
            residual = acc - (Poly.one() if i == j else Poly.zero())
            if not residual.is_zero():
                fail(
                    {"i": i, "j": j, "form": "literal", "params": _params_json(params)},
                    residual,
                )
                return


def bavinck_series_replay(alpha: Fraction, i: int, j: int, order: int) -> bool:
    """Replay of the series derivation behind the Laguerre inversion:
    (1-t)^(-a-j-1) exp(xt/(t-1)) * (1-t)^(a+i) exp(-xt/(t-1)) = (1-t)^(i-j-1)."""
    from .series import TruncSeries

    one_minus_t = TruncSeries((1, -1), order)
    t = TruncSeries((Poly.zero(), Poly.one()), order)

    def exp_xt_over_tm1(x: Poly):
        # xt/(t-1) = -x * t * (1-t)^(-1)
        return (t * one_minus_t.invert()).scale(-x).exp()

    left = one_minus_t.pow_scalar(-alpha - j - 1) * exp_xt_over_tm1(Poly.x())
    right = one_minus_t.pow_scalar(Fraction(alpha + i)) * exp_xt_over_tm1(-Poly.x())
    return (left * right) == one_minus_t.pow_scalar(Fraction(i - j - 1))
