"""Truncated Maclaurin series with explicit tail error accounting.

A series is a finite coefficient tuple plus a tail bound: a sup-norm
bound, valid on |x| <= 1, for everything the truncation discards.
Products convolve coefficients, composition substitutes one series into
another at full degree before cropping, and both propagate tail bounds
so Horner evaluation comes with an error certificate.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .iteration import TrigKind

__all__ = [
    "PowerSeries",
    "TailBoundError",
    "cos_series",
    "sin_series",
    "cauchy_product",
    "compose",
    "iterated_series",
]


class TailBoundError(ValueError):
    """A composition's error bound diverges at the given truncation."""


def _exp_tail(magnitude: float, order: int) -> float:
    # sum_{k > order} magnitude^k / k!, bounded by the geometric tail
    # head / (1 - magnitude / (order + 2)); requires magnitude < order + 2.
    head = 1.0
    for k in range(1, order + 2):
        head *= magnitude / k
    ratio = magnitude / (order + 2)
    if ratio >= 1.0:
        return math.inf
    return head / (1.0 - ratio)


@dataclass(frozen=True)
class PowerSeries:
    """Truncated Maclaurin series: coefficients c_0..c_N and a tail bound.

    `tail_bound` limits |true function - polynomial part| on |x| <= 1.
    Instances are immutable; all arithmetic returns new series.
    """

    coefficients: tuple[float, ...]
    tail_bound: float = 0.0

    def __post_init__(self) -> None:
        coeffs = tuple(float(c) for c in self.coefficients)
        if not coeffs:
            raise ValueError("need at least the constant coefficient")
        if not all(math.isfinite(c) for c in coeffs):
            raise ValueError("coefficients must be finite")
        tail = float(self.tail_bound)
        if math.isnan(tail) or tail < 0.0:
            raise ValueError(f"tail_bound must be >= 0, got {self.tail_bound!r}")
        object.__setattr__(self, "coefficients", coeffs)
        object.__setattr__(self, "tail_bound", tail)

    @property
    def order(self) -> int:
        """Truncation order N; the highest retained power."""
        return len(self.coefficients) - 1

    @classmethod
    def one(cls, order: int) -> "PowerSeries":
        """The constant 1 padded to the given truncation order."""
        return cls((1.0,) + (0.0,) * order)

    @classmethod
    def identity(cls, order: int) -> "PowerSeries":
        """The series of x itself padded to the given truncation order."""
        if order < 1:
            raise ValueError("identity needs order >= 1")
        return cls((0.0, 1.0) + (0.0,) * (order - 1))

    def __call__(self, x: float) -> float:
        """Horner evaluation of the polynomial part."""
        acc = 0.0
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def derivative_at_zero(self, k: int) -> float:
        """k-th derivative at 0, recovered as k! times the coefficient."""
        if not 0 <= k <= self.order:
            raise IndexError(f"derivative {k} outside stored range 0..{self.order}")
        return self.coefficients[k] * math.factorial(k)

    def l1_norm(self) -> float:
        """Sum of coefficient magnitudes; bounds the polynomial on |x| <= 1."""
        return float(sum(abs(c) for c in self.coefficients))

    def truncate(self, order: int) -> "PowerSeries":
        """Crop (or zero-pad) to the given order, charging cropped mass to the tail."""
        if order < 0:
            raise ValueError(f"order must be >= 0, got {order}")
        if order >= self.order:
            return PowerSeries(
                self.coefficients + (0.0,) * (order - self.order), self.tail_bound
            )
        dropped = sum(abs(c) for c in self.coefficients[order + 1 :])
        return PowerSeries(self.coefficients[: order + 1], self.tail_bound + dropped)

    def __mul__(self, other: "PowerSeries") -> "PowerSeries":
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return cauchy_product(self, other)

    def __add__(self, other: "PowerSeries") -> "PowerSeries":
        if not isinstance(other, PowerSeries):
            return NotImplemented
        order = min(self.order, other.order)
        a = self.truncate(order)
        b = other.truncate(order)
        coeffs = tuple(x + y for x, y in zip(a.coefficients, b.coefficients))
        return PowerSeries(coeffs, a.tail_bound + b.tail_bound)


def cos_series(order: int = 16) -> PowerSeries:
    """Maclaurin series of cos truncated at the given order."""
    if not isinstance(order, int) or order < 0:
        raise ValueError(f"order must be a non-negative integer, got {order!r}")
    coeffs = [0.0] * (order + 1)
    for k in range(0, order + 1, 2):
        coeffs[k] = (-1.0) ** (k // 2) / math.factorial(k)
    return PowerSeries(tuple(coeffs), _exp_tail(1.0, order))


def sin_series(order: int = 17) -> PowerSeries:
    """Maclaurin series of sin truncated at the given order."""
    if not isinstance(order, int) or order < 0:
        raise ValueError(f"order must be a non-negative integer, got {order!r}")
    coeffs = [0.0] * (order + 1)
    for k in range(1, order + 1, 2):
        coeffs[k] = (-1.0) ** (k // 2) / math.factorial(k)
    return PowerSeries(tuple(coeffs), _exp_tail(1.0, order))


def cauchy_product(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    """Coefficient convolution of two series, cropped to the shorter order.

    The full convolution is computed first; mass cropped away joins the
    tail bound along with the cross terms of the input tails.
    """
    full = np.convolve(a.coefficients, b.coefficients)
    order = min(a.order, b.order)
    kept = tuple(float(c) for c in full[: order + 1])
    dropped = float(np.abs(full[order + 1 :]).sum())
    tail = (
        a.tail_bound * b.l1_norm()
        + b.tail_bound * a.l1_norm()
        + a.tail_bound * b.tail_bound
        + dropped
    )
    return PowerSeries(kept, tail)


def compose(
    outer: PowerSeries,
    inner: PowerSeries,
    order: int | None = None,
    lipschitz: float | None = None,
) -> PowerSeries:
    """Substitute `inner` into `outer`, truncating the result at `order`.

    Powers of `inner` are accumulated at full polynomial degree and only
    cropped at the end.  The tail bound assumes the outer function's
    dropped coefficients keep decaying factorially, |c_k| <= C / k! with
    C read off the stored coefficients; cos and sin satisfy this with
    C = 1.  Requires outer.order + 1 > the inner magnitude bound, else
    the error estimate diverges and TailBoundError is raised.

    `lipschitz` optionally supplies a known derivative bound for the
    outer function on the real values `inner` can reach; it controls how
    the inner tail bound transports through the composition.  Without
    it, the conservative envelope estimate C * e^M is used, which
    compounds quickly in repeated composition; cos and sin admit 1.
    """
    result_order = min(outer.order, inner.order) if order is None else order
    if result_order < 0:
        raise ValueError(f"order must be >= 0, got {order!r}")

    magnitude = inner.l1_norm() + inner.tail_bound
    if outer.order + 1 <= magnitude:
        raise TailBoundError(
            f"outer truncation order {outer.order} too small for inner magnitude "
            f"{magnitude:.6g}: the tail estimate needs order + 1 > magnitude"
        )
    envelope = max(
        [1.0] + [abs(c) * math.factorial(k) for k, c in enumerate(outer.coefficients)]
    )

    inner_coeffs = np.asarray(inner.coefficients)
    acc = np.zeros(1)
    comp = np.zeros(1)
    power = np.ones(1)
    for k, ck in enumerate(outer.coefficients):
        if k > 0:
            power = np.convolve(power, inner_coeffs)
        if ck != 0.0:
            if acc.size < power.size:
                grow = power.size - acc.size
                acc = np.pad(acc, (0, grow))
                comp = np.pad(comp, (0, grow))
            # compensated accumulation keeps low-order coefficients
            # correctly rounded across the alternating outer terms
            contribution = ck * power - comp[: power.size]
            fresh = acc[: power.size] + contribution
            comp[: power.size] = (fresh - acc[: power.size]) - contribution
            acc[: power.size] = fresh
    if acc.size < result_order + 1:
        acc = np.pad(acc, (0, result_order + 1 - acc.size))
    kept = tuple(float(c) for c in acc[: result_order + 1])
    dropped = float(np.abs(acc[result_order + 1 :]).sum())

    transport = envelope * math.exp(magnitude) if lipschitz is None else float(lipschitz)
    tail = (
        envelope * _exp_tail(magnitude, outer.order)
        + transport * inner.tail_bound
        + dropped
    )
    return PowerSeries(kept, tail)


def iterated_series(
    kind: TrigKind, order: int, truncation: int, working_order: int | None = None
) -> PowerSeries:
    """Maclaurin series of the order-n cos or sin iterate.

    Composition is carried out at a working truncation of at least 30
    terms so low-order coefficients converge to full double precision,
    then cropped to `truncation`.  Cosine iterates keep only even
    powers; sine iterates only odd ones.
    """
    if not isinstance(order, int) or order < 0:
        raise ValueError(f"order must be a non-negative integer, got {order!r}")
    if not isinstance(truncation, int) or truncation < 0:
        raise ValueError(f"truncation must be a non-negative integer, got {truncation!r}")
    if order == 0:
        if truncation < 1:
            raise ValueError("the identity needs truncation >= 1")
        return PowerSeries.identity(truncation)
    working = max(truncation, 30) if working_order is None else working_order
    if working < truncation:
        raise ValueError("working_order must be >= truncation")
    base = cos_series(working) if kind is TrigKind.COSINE else sin_series(working)
    series = base
    for _ in range(order - 1):
        # cos and sin are 1-Lipschitz on the reals, so inner error does
        # not amplify from one composition to the next
        series = compose(base, series, order=working, lipschitz=1.0)
    return series.truncate(truncation)
