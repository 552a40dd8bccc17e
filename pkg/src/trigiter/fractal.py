"""Escape-time membership scans for iterated complex maps.

A point survives when the squared magnitude of its orbit's final
iterate stays below a threshold; only the final iterate is tested, so
an orbit may wander past the threshold and return.  Orbits that leave
the finite range are escaped by definition.  Grids are sampled by
cumulative stepping (each coordinate is the previous plus a fixed
increment, not an independently rounded product), which pins the output
bytes of a scan regardless of backend chunking or worker count.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from .iteration import TrigKind

__all__ = [
    "Quadratic",
    "MANDELBROT",
    "EscapeParams",
    "ScanRegion",
    "PointSet",
    "point_survives",
    "scan",
    "scan_raw",
    "format_point",
    "format_points",
]


@dataclass(frozen=True)
class Quadratic:
    """The map z -> z*z + c with a fixed parameter c."""

    c: complex = 0j


class _MandelbrotFamily:
    """Marker: iterate z -> z*z + c with c set to each point scanned, from z=0."""

    def __repr__(self) -> str:  # pragma: no cover
        return "MANDELBROT"


MANDELBROT = _MandelbrotFamily()


@dataclass(frozen=True)
class EscapeParams:
    """Escape test configuration.

    `threshold_sq` bounds the squared magnitude, so the default 10
    corresponds to |z| < sqrt(10).  With `early_exit` the orbit is
    abandoned (and the point counted as escaped) as soon as the bound
    is reached, which is faster but can drop points whose orbits would
    have returned below it.
    """

    iterations: int = 50
    threshold_sq: float = 10.0
    early_exit: bool = False

    def __post_init__(self) -> None:
        if not isinstance(self.iterations, int) or self.iterations < 0:
            raise ValueError(
                f"iterations must be a non-negative integer, got {self.iterations!r}"
            )
        t = float(self.threshold_sq)
        if not math.isfinite(t) or t <= 0.0:
            raise ValueError(f"threshold_sq must be positive and finite, got {self.threshold_sq!r}")


@dataclass(frozen=True)
class ScanRegion:
    """Rectangle to sample, normalized so corner1 is the lower-left corner."""

    corner1: complex
    corner2: complex
    grid: int

    def __post_init__(self) -> None:
        if not isinstance(self.grid, int) or self.grid < 2:
            raise ValueError(f"grid must be an integer >= 2, got {self.grid!r}")
        a, b = complex(self.corner1), complex(self.corner2)
        lo = complex(min(a.real, b.real), min(a.imag, b.imag))
        hi = complex(max(a.real, b.real), max(a.imag, b.imag))
        object.__setattr__(self, "corner1", lo)
        object.__setattr__(self, "corner2", hi)


@dataclass(frozen=True, eq=False)
class PointSet:
    """Scan outcome: surviving samples in scan order plus the full mask.

    `points` holds one entry per surviving grid cell (coordinates may
    repeat on degenerate zero-step grids); `mask[r, i]` indexes real
    step r, imaginary step i; `scanned` counts every cell evaluated.
    """

    points: tuple[complex, ...]
    mask: np.ndarray = field(repr=False)
    scanned: int

    def __post_init__(self) -> None:
        if self.mask.dtype != np.bool_ or self.mask.ndim != 2:
            raise ValueError("mask must be a two-dimensional boolean array")
        if self.scanned != self.mask.size:
            raise ValueError(
                f"scanned ({self.scanned}) must equal the mask size ({self.mask.size})"
            )
        if len(self.points) != int(self.mask.sum()):
            raise ValueError(
                f"points ({len(self.points)}) must match the mask's surviving"
                f" cell count ({int(self.mask.sum())})"
            )

    def __len__(self) -> int:
        return len(self.points)

    def __getitem__(self, index):
        return self.points[index]

    def __iter__(self):
        return iter(self.points)


def _map_code(mapping) -> tuple[int, float, float]:
    if mapping is TrigKind.COSINE:
        return _kernels.CODE_COS, 0.0, 0.0
    if mapping is TrigKind.SINE:
        return _kernels.CODE_SIN, 0.0, 0.0
    if isinstance(mapping, Quadratic):
        c = complex(mapping.c)
        return _kernels.CODE_JULIA_QUADRATIC, c.real, c.imag
    if isinstance(mapping, _MandelbrotFamily):
        return _kernels.CODE_MANDELBROT, 0.0, 0.0
    raise TypeError(
        f"mapping must be TrigKind.COSINE, TrigKind.SINE, Quadratic(c) or MANDELBROT, "
        f"got {mapping!r}"
    )


def point_survives(
    initial: complex,
    mapping,
    params: EscapeParams = EscapeParams(),
    backend: str | None = None,
) -> bool:
    """Escape test for a single starting point (parameter point for MANDELBROT)."""
    code, c_re, c_im = _map_code(mapping)
    z = complex(initial)
    grid = _kernels.survive(
        np.array([z.real]),
        np.array([z.imag]),
        code,
        c_re,
        c_im,
        params.iterations,
        params.threshold_sq,
        params.early_exit,
        backend=backend,
    )
    return bool(grid[0, 0])


def _cumulative_axis(start: float, step: float, count: int) -> np.ndarray:
    out = np.empty(count)
    value = start
    for i in range(count):
        out[i] = value
        value += step
    return out


def scan_raw(
    x1: float,
    y1: float,
    x2: float,
    y2: float,
    grid: int,
    mapping,
    params: EscapeParams = EscapeParams(),
    workers: int | None = None,
    backend: str | None = None,
) -> PointSet:
    """Scan the rectangle (x1, y1)-(x2, y2) without normalizing corner order.

    Sampling follows cumulative stepping: the imaginary coordinate runs
    from y1 in increments of (y2-y1)/(grid-1) and resets per column;
    the real coordinate accumulates across columns.  Adding the (zero)
    imaginary step to a row origin normalizes a negative-zero real part,
    so the very first sample is the only place -0.0 can appear on the
    real axis; the coordinates reproduce that faithfully.  Corners given
    in descending order scan in descending order.
    """
    if not isinstance(grid, int) or grid < 2:
        raise ValueError(f"grid must be an integer >= 2, got {grid!r}")
    code, c_re, c_im = _map_code(mapping)
    n = grid
    step_re = (float(x2) - float(x1)) / (n - 1)
    step_im = (float(y2) - float(y1)) / (n - 1)

    ys = _cumulative_axis(float(y1), step_im, n)
    # Row origins: xs_first is the coordinate of each row's first sample,
    # xs_rest the (+0.0 adjusted) value used by the rest of the row and
    # carried into the next row's origin.
    xs_first = np.empty(n)
    xs_rest = np.empty(n)
    x = float(x1)
    for r in range(n):
        xs_first[r] = x
        x = x + 0.0
        xs_rest[r] = x
        x = x + step_re

    if workers is None:
        workers = os.cpu_count() or 1
    if workers < 1:
        raise ValueError(f"workers must be >= 1, got {workers!r}")
    backend_name = backend or _kernels.default_backend()

    mask = np.empty((n, n), dtype=bool)
    bounds = np.linspace(0, n, min(workers, n) + 1, dtype=int)

    def run_chunk(lo: int, hi: int) -> None:
        mask[lo:hi] = _kernels.survive(
            xs_rest[lo:hi],
            ys,
            code,
            c_re,
            c_im,
            params.iterations,
            params.threshold_sq,
            params.early_exit,
            backend=backend_name,
        )

    spans = [(int(lo), int(hi)) for lo, hi in zip(bounds[:-1], bounds[1:]) if lo < hi]
    if len(spans) <= 1:
        for lo, hi in spans:
            run_chunk(lo, hi)
    else:
        with ThreadPoolExecutor(max_workers=len(spans)) as pool:
            list(pool.map(lambda span: run_chunk(*span), spans))

    mask.setflags(write=False)
    points: list[complex] = []
    for r in range(n):
        row = mask[r]
        first = xs_first[r]
        rest = xs_rest[r]
        for i in range(n):
            if row[i]:
                points.append(complex(first if i == 0 else rest, ys[i]))
    return PointSet(tuple(points), mask, n * n)


def scan(
    region: ScanRegion,
    mapping,
    params: EscapeParams = EscapeParams(),
    workers: int | None = None,
    backend: str | None = None,
) -> PointSet:
    """Scan a normalized region; see scan_raw for sampling semantics."""
    return scan_raw(
        region.corner1.real,
        region.corner1.imag,
        region.corner2.real,
        region.corner2.imag,
        region.grid,
        mapping,
        params,
        workers=workers,
        backend=backend,
    )


def format_point(z: complex, padded: bool = True) -> str:
    """One output line: 16-significant-digit coordinates, right-aligned to 25 columns."""
    re_str = "%.16g" % z.real
    im_str = "%.16g" % z.imag
    if padded:
        return "%25s %25s" % (re_str, im_str)
    return f"{re_str} {im_str}"


def format_points(points, padded: bool = True) -> str:
    """Newline-terminated lines for each point; empty input gives an empty string."""
    return "".join(format_point(z, padded) + "\n" for z in points)
