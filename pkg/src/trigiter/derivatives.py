"""Closed-form derivatives of iterated maps and the product derivative rule.

The chain rule collapses the first derivative of an n-fold cos or sin
iterate into a product over the forward orbit.  Higher derivatives of an
m-factor product expand over weak compositions with multinomial weights;
that expansion also yields the second Maclaurin coefficient of high
cosine iterates in closed form.
"""

from __future__ import annotations

import math
from collections.abc import Iterator, Sequence
from typing import Any

from .iteration import TrigKind

__all__ = [
    "iterated_derivative",
    "enumerate_compositions",
    "composition_count",
    "product_nth_derivative",
    "second_derivative_at_zero",
    "extrema_locations",
]

MAX_COMPOSITIONS = 10_000_000
"""Refuse product_nth_derivative expansions larger than this."""


def iterated_derivative(kind: TrigKind, order: int, at: float) -> float:
    """First derivative of the order-n cos or sin iterate at a real point.

    Chain rule product over the forward orbit: each cosine step
    contributes -sin(x_k), each sine step cos(x_k).  Order 0
    differentiates the identity, giving 1.
    """
    if not isinstance(order, int) or order < 0:
        raise ValueError(f"order must be a non-negative integer, got {order!r}")
    x = float(at)
    p = 1.0
    if kind is TrigKind.COSINE:
        for _ in range(order):
            p *= -math.sin(x)
            x = math.cos(x)
    else:
        for _ in range(order):
            p *= math.cos(x)
            x = math.sin(x)
    return p


def composition_count(total: int, parts: int) -> int:
    """Number of ordered tuples of `parts` non-negative integers summing to `total`."""
    if not isinstance(total, int) or total < 0:
        raise ValueError(f"total must be a non-negative integer, got {total!r}")
    if not isinstance(parts, int) or parts < 1:
        raise ValueError(f"parts must be an integer >= 1, got {parts!r}")
    return math.comb(total + parts - 1, parts - 1)


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def enumerate_compositions(
    total: int, parts: int, max_count: int = MAX_COMPOSITIONS
) -> list[tuple[int, ...]]:
    """All weak compositions of `total` into `parts` parts, lexicographically.

    Raises if the enumeration would exceed `max_count` tuples, naming
    the count that was refused.
    """
    count = composition_count(total, parts)
    if count > max_count:
        raise ValueError(
            f"{count} compositions of {total} into {parts} parts "
            f"exceed the limit of {max_count}"
        )
    return list(_compositions(total, parts))


def product_nth_derivative(factors: Sequence[Sequence[Any]], order: int) -> Any:
    """Order-n derivative of a pointwise product from per-factor derivative tables.

    `factors[k][j]` holds the j-th derivative of factor k at the point
    of interest, for j = 0..order.  Sums multinomial-weighted terms over
    all weak compositions of `order`; the arithmetic is whatever the
    table entries support (int, Fraction, float, complex), so exact
    inputs give exact output.  With two factors this reduces to the
    Leibniz rule.
    """
    m = len(factors)
    if m < 1:
        raise ValueError("need at least one factor")
    if not isinstance(order, int) or order < 0:
        raise ValueError(f"order must be a non-negative integer, got {order!r}")
    for k, table in enumerate(factors):
        if len(table) < order + 1:
            raise ValueError(
                f"factor {k} supplies {len(table)} derivatives, need {order + 1}"
            )
    n_fact = math.factorial(order)
    total = 0
    for comp in enumerate_compositions(order, m):
        denom = 1
        for j in comp:
            denom *= math.factorial(j)
        term = n_fact // denom
        for j, table in zip(comp, factors):
            term = term * table[j]
        total = total + term
    return total


def second_derivative_at_zero(order: int) -> float:
    """Second derivative at 0 of the order-m cosine iterate.

    Equals (-1)^m times the product of sin over the first m-1 cosine
    iterates of 1; the magnitude decays geometrically in m.  Order 1
    gives plain cos'' at 0, which is -1.
    """
    if not isinstance(order, int) or order < 1:
        raise ValueError(f"order must be an integer >= 1, got {order!r}")
    p = 1.0
    x = 1.0
    for _ in range(order - 1):
        p *= math.sin(x)
        x = math.cos(x)
    return p if order % 2 == 0 else -p


def extrema_locations(kind: TrigKind, order: int, periods: int = 1) -> list[float]:
    """Abscissas of the extrema of an iterate inside (-periods*pi, periods*pi).

    Only the first orbit factor of the derivative product can vanish
    for sine (deeper iterates stay inside (-1, 1), clear of pi/2), and
    only the first two can for cosine, so the loci form an arithmetic
    grid: odd multiples of pi/2 for sine iterates, all multiples of
    pi/2 for cosine iterates of order >= 2, and multiples of pi for
    plain cosine.  The interval is open at both ends.
    """
    if not isinstance(order, int) or order < 1:
        raise ValueError(f"order must be an integer >= 1, got {order!r}")
    if not isinstance(periods, int) or periods < 1:
        raise ValueError(f"periods must be an integer >= 1, got {periods!r}")
    if kind is TrigKind.SINE:
        half = math.pi / 2.0
        return [half + j * math.pi for j in range(-periods, periods)]
    if order == 1:
        return [j * math.pi for j in range(-periods + 1, periods)]
    half = math.pi / 2.0
    return [j * half for j in range(-2 * periods + 1, 2 * periods)]
