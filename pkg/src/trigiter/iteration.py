"""Real and complex iteration of the cosine and sine maps.

The cosine map has a single real fixed point (the Dottie number), which
attracts every real orbit.  This module provides the iteration engine,
two fixed-point solvers, an extended-precision solver, and closed forms
for the range of high-order cosine iterates, the sine iterate envelope,
and the spacing of fixed-point-level crossings.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import mpmath

__all__ = [
    "DOTTIE",
    "TrigKind",
    "SolverMethod",
    "ConvergenceError",
    "IterationSpec",
    "FixedPointResult",
    "RangeBound",
    "iterate",
    "dottie",
    "dottie_digits",
    "cos_range",
    "sin_envelope",
    "intersection_distances",
]

DOTTIE = 0.7390851332151607
"""Fixed point of cos, correctly rounded to double precision."""

MAX_DIGITS = 64
"""Largest decimal precision served by :func:`dottie_digits`."""


class TrigKind(Enum):
    """Which trigonometric map is being iterated."""

    COSINE = "cos"
    SINE = "sin"

    @classmethod
    def parse(cls, name: str) -> "TrigKind":
        for kind in cls:
            if kind.value == name:
                return kind
        raise ValueError(f"unknown map {name!r}: expected 'cos' or 'sin'")


class SolverMethod(Enum):
    """Root-finding strategy for the cosine fixed point."""

    FIXED_POINT = "fixed-point"
    NEWTON = "newton"


class ConvergenceError(RuntimeError):
    """A solver ran out of iterations before reaching its tolerance."""


@dataclass(frozen=True)
class IterationSpec:
    """An n-fold application of cos or sin to a starting value."""

    kind: TrigKind
    order: int
    initial: complex | float = 0.0

    def __post_init__(self) -> None:
        if not isinstance(self.order, int) or self.order < 0:
            raise ValueError(f"order must be a non-negative integer, got {self.order!r}")

    def evaluate(self) -> complex | float:
        return iterate(self.kind, self.order, self.initial)


@dataclass(frozen=True)
class FixedPointResult:
    """Solver outcome: the fixed point plus convergence diagnostics."""

    value: float
    iterations: int
    residual: float
    method: SolverMethod


@dataclass(frozen=True)
class RangeBound:
    """Closed interval [lower, upper] attained by an iterate over the reals."""

    lower: float
    upper: float
    order: int


def _cosh_inf(x: float) -> float:
    try:
        return math.cosh(x)
    except OverflowError:
        return math.inf


def _sinh_inf(x: float) -> float:
    try:
        return math.sinh(x)
    except OverflowError:
        return math.copysign(math.inf, x)


def _iterate_real(kind: TrigKind, order: int, x: float) -> float:
    f = math.cos if kind is TrigKind.COSINE else math.sin
    for _ in range(order):
        if not math.isfinite(x):
            return math.nan
        x = f(x)
    return x


def _iterate_complex(kind: TrigKind, order: int, z: complex) -> complex:
    # Componentwise form of complex cos/sin; overflow saturates to inf
    # instead of raising, so an escaping orbit yields a non-finite value.
    a, b = z.real, z.imag
    cosine = kind is TrigKind.COSINE
    for _ in range(order):
        if not (math.isfinite(a) and math.isfinite(b)):
            break
        ch, sh = _cosh_inf(b), _sinh_inf(b)
        if cosine:
            a, b = math.cos(a) * ch, -math.sin(a) * sh
        else:
            a, b = math.sin(a) * ch, math.cos(a) * sh
    return complex(a, b)


def iterate(kind: TrigKind, order: int, initial: complex | float = 0.0) -> complex | float:
    """Apply cos or sin to `initial` exactly `order` times.

    Order 0 returns `initial` unchanged.  Real input stays real.  A
    complex orbit that overflows is reported as a non-finite value, not
    an exception.
    """
    if not isinstance(order, int) or order < 0:
        raise ValueError(f"order must be a non-negative integer, got {order!r}")
    if isinstance(initial, complex):
        return _iterate_complex(kind, order, initial)
    return _iterate_real(kind, order, float(initial))


def dottie(
    tolerance: float = 1e-12,
    method: SolverMethod = SolverMethod.FIXED_POINT,
    max_iterations: int = 1000,
) -> FixedPointResult:
    """Solve cos(x) = x in double precision.

    Stops once both the step size and the residual |cos(x) - x| fall
    within `tolerance`.  Raises ConvergenceError, naming the best
    residual reached, if `max_iterations` applications are not enough.
    """
    tol = float(tolerance)
    if not math.isfinite(tol) or tol <= 0.0:
        raise ValueError(
            f"tolerance must be positive and finite, got {tolerance!r}; "
            f"the smallest usable tolerance is {math.ulp(0.0):g}"
        )
    if max_iterations < 1:
        raise ValueError(f"max_iterations must be >= 1, got {max_iterations}")

    best = math.inf
    if method is SolverMethod.FIXED_POINT:
        x = 0.0
        fx = math.cos(x)
        for k in range(1, max_iterations + 1):
            nxt = fx
            fnxt = math.cos(nxt)
            residual = abs(fnxt - nxt)
            best = min(best, residual)
            if abs(nxt - x) <= tol and residual <= tol:
                return FixedPointResult(nxt, k, residual, method)
            x, fx = nxt, fnxt
    elif method is SolverMethod.NEWTON:
        x = 0.75
        for k in range(1, max_iterations + 1):
            nxt = x + (math.cos(x) - x) / (1.0 + math.sin(x))
            residual = abs(math.cos(nxt) - nxt)
            best = min(best, residual)
            if abs(nxt - x) <= tol and residual <= tol:
                return FixedPointResult(nxt, k, residual, method)
            x = nxt
    else:
        raise ValueError(f"unknown method {method!r}")
    raise ConvergenceError(
        f"no fixed point to tolerance {tol:g} within {max_iterations} iterations; "
        f"best residual {best:g}"
    )


def dottie_digits(digits: int = MAX_DIGITS) -> str:
    """Return the cosine fixed point as a decimal string.

    `digits` counts significant digits and must lie in [1, 64]; the
    constant starts 0.739..., so they coincide with decimal places.
    """
    if not isinstance(digits, int) or not 1 <= digits <= MAX_DIGITS:
        raise ValueError(f"digits must be an integer in [1, {MAX_DIGITS}], got {digits!r}")
    with mpmath.workdps(digits + 15):
        root = mpmath.findroot(lambda t: mpmath.cos(t) - t, mpmath.mpf("0.74"))
        if abs(mpmath.cos(root) - root) > mpmath.mpf(10) ** -(digits + 5):
            raise ConvergenceError("extended-precision solve did not converge")
        return mpmath.nstr(root, digits, strip_zeros=False)


def cos_range(order: int) -> RangeBound:
    """Exact range of the order-n cosine iterate over the real line, n >= 2.

    The endpoints are consecutive cosine iterates of 1; which pair
    depends on the parity of n.  The first iterate spans [-1, 1] and is
    left to the caller.
    """
    if not isinstance(order, int) or order < 2:
        raise ValueError(
            f"order must be an integer >= 2, got {order!r}; the order-1 range is [-1, 1]"
        )
    parity = order % 2
    lower = _iterate_real(TrigKind.COSINE, order - 1 - parity, 1.0)
    upper = _iterate_real(TrigKind.COSINE, order - 2 + parity, 1.0)
    return RangeBound(lower, upper, order)


def sin_envelope(order: int) -> float:
    """Half-width s_n of the symmetric envelope of the order-n sine iterate.

    s_n is sin applied n times to 1.  The order-n iterate maps [-1, 1]
    into [-s_n, s_n], and the order-(n+1) iterate maps the whole real
    line into it, touching both ends; the sequence decreases to 0, so
    repeated sine flattens everything toward the axis.
    """
    if not isinstance(order, int) or order < 1:
        raise ValueError(f"order must be an integer >= 1, got {order!r}")
    return _iterate_real(TrigKind.SINE, order, 1.0)


def intersection_distances(order: int) -> tuple[float, float]:
    """Gap lengths between consecutive fixed-point-level crossings.

    The order-n cosine iterate meets the level y = D (its fixed point)
    at a periodic set of abscissas; the gaps alternate between a short
    and a long one.  Returns (short, long): (2D, 2(pi - D)) for order 1
    and (2D, pi - 2D) for every higher order.
    """
    if not isinstance(order, int) or order < 1:
        raise ValueError(f"order must be an integer >= 1, got {order!r}")
    short = 2.0 * DOTTIE
    if order == 1:
        return short, 2.0 * (math.pi - DOTTIE)
    return short, math.pi - 2.0 * DOTTIE
