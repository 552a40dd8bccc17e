"""Iterated cosine and sine maps: fixed points, calculus, and escape-time scans."""

from .derivatives import (
    composition_count,
    enumerate_compositions,
    extrema_locations,
    iterated_derivative,
    product_nth_derivative,
    second_derivative_at_zero,
)
from .fractal import (
    MANDELBROT,
    EscapeParams,
    PointSet,
    Quadratic,
    ScanRegion,
    format_point,
    format_points,
    point_survives,
    scan,
    scan_raw,
)
from .iteration import (
    DOTTIE,
    ConvergenceError,
    FixedPointResult,
    IterationSpec,
    RangeBound,
    SolverMethod,
    TrigKind,
    cos_range,
    dottie,
    dottie_digits,
    intersection_distances,
    iterate,
    sin_envelope,
)
from .series import (
    PowerSeries,
    TailBoundError,
    cauchy_product,
    compose,
    cos_series,
    iterated_series,
    sin_series,
)

__version__ = "0.1.0"

__all__ = [
    "DOTTIE",
    "MANDELBROT",
    "ConvergenceError",
    "EscapeParams",
    "FixedPointResult",
    "IterationSpec",
    "PointSet",
    "PowerSeries",
    "Quadratic",
    "RangeBound",
    "ScanRegion",
    "SolverMethod",
    "TailBoundError",
    "TrigKind",
    "cauchy_product",
    "compose",
    "composition_count",
    "cos_range",
    "cos_series",
    "dottie",
    "dottie_digits",
    "enumerate_compositions",
    "extrema_locations",
    "format_point",
    "format_points",
    "intersection_distances",
    "iterate",
    "iterated_derivative",
    "iterated_series",
    "point_survives",
    "product_nth_derivative",
    "scan",
    "scan_raw",
    "second_derivative_at_zero",
    "sin_envelope",
    "sin_series",
    "__version__",
]
