"""Distortion functions, the rank weights they generate, and their shape."""
from __future__ import annotations

import math
import re

import numpy as np
import numpy.typing as npt

from ci_metrics._data import FAMILY_PARAMETERS
from ci_metrics._data import DistortionError
from ci_metrics._data import DistortionFamily
from ci_metrics._data import DistortionSpec
from ci_metrics._data import DomainError
from ci_metrics._data import Shape
from ci_metrics._data import WeightDirection
from ci_metrics._data import WeightVector
from ci_metrics._special import normal_cdf
from ci_metrics._special import normal_quantile
from ci_metrics._special import regularized_beta

DEFAULT_GRID = 1000

SHAPE_TOLERANCE = 1e-9
WEIGHT_SUM_TOLERANCE = 1e-10
MONOTONE_TOLERANCE = 1e-12

# family[:key=value,key=value], decimal literals only
_SPEC_PATTERN = re.compile(r"^\s*([a-z]+)\s*(?::(.*))?$", re.IGNORECASE)
_DECIMAL_PATTERN = re.compile(r"^[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?$")


def parse_distortion(text: str) -> DistortionSpec:
    """Parse the compact form, e.g. ``power:a=0.5`` or ``beta:a=0.5,b=2``."""
    match = _SPEC_PATTERN.match(text)
    if match is None:
        raise DistortionError(f"cannot parse distortion {text!r}")
    name, params_text = match.groups()
    try:
        family = DistortionFamily(name.lower())
    except ValueError:
        known = ", ".join(f.value for f in DistortionFamily)
        raise DistortionError(
            f"unknown distortion family {name!r} (expected one of: {known})",
        ) from None

    params: dict[str, float] = {}
    if params_text is not None and params_text.strip():
        for item in params_text.split(","):
            key, sep, value = item.partition("=")
            key = key.strip().lower()
            value = value.strip()
            if not sep or not key:
                raise DistortionError(f"expected key=value in {text!r}, got {item!r}")
            if key in params:
                raise DistortionError(f"parameter '{key}' given twice in {text!r}")
            if key not in FAMILY_PARAMETERS[family]:
                raise DistortionError(
                    f"{family.value} distortion takes no parameter '{key}'",
                )
            if not _DECIMAL_PATTERN.match(value):
                raise DistortionError(
                    f"parameter '{key}' is not a decimal number: {value!r}",
                )
            params[key] = float(value)

    return DistortionSpec(family, **params)


def _format_number(value: float) -> str:
    text = repr(value)
    if text.endswith(".0"):
        text = text[:-2]
    return text


def format_distortion(spec: DistortionSpec) -> str:
    """Canonical compact form of a spec; parse_distortion reads it back."""
    names = FAMILY_PARAMETERS[spec.family]
    if not names:
        return spec.family.value
    params = ",".join(
        f"{name}={_format_number(getattr(spec, name))}" for name in names
    )
    return f"{spec.family.value}:{params}"


def _check_unit(x: float) -> None:
    if math.isnan(x) or x < 0.0 or x > 1.0:
        raise DomainError(f"distortion argument must lie in [0, 1], got {x}")


def evaluate(spec: DistortionSpec, x: float) -> float:
    """Q(x) for the distortion described by spec."""
    _check_unit(x)
    family = spec.family
    if family is DistortionFamily.IDENTITY:
        return float(x)
    if family is DistortionFamily.POWER:
        assert spec.a is not None
        return x ** spec.a
    if family is DistortionFamily.DUAL_POWER:
        assert spec.b is not None
        return 1.0 - (1.0 - x) ** spec.b
    if family is DistortionFamily.INCOMPLETE_BETA:
        assert spec.a is not None and spec.b is not None
        return regularized_beta(x, spec.a, spec.b)
    if family is DistortionFamily.WANG:
        assert spec.p is not None
        # Phi^-1 is infinite at the endpoints
        if x == 0.0:
            return 0.0
        if x == 1.0:
            return 1.0
        return normal_cdf(normal_quantile(x) + normal_quantile(spec.p))
    if family is DistortionFamily.LOOKBACK:
        assert spec.p is not None
        # x^p ln x -> 0 as x -> 0
        if x == 0.0:
            return 0.0
        return x ** spec.p * (1.0 - spec.p * math.log(x))
    raise AssertionError(f"unhandled distortion family {family}")


def evaluate_array(
    spec: DistortionSpec,
    xs: npt.ArrayLike,
) -> npt.NDArray[np.float64]:
    """Vectorised evaluate over an array of points in [0, 1]."""
    arr = np.asarray(xs, dtype=np.float64)
    if arr.size and (np.isnan(arr).any() or arr.min() < 0.0 or arr.max() > 1.0):
        raise DomainError("distortion arguments must lie in [0, 1]")

    family = spec.family
    if family is DistortionFamily.IDENTITY:
        return arr.copy()
    if family is DistortionFamily.POWER:
        assert spec.a is not None
        return np.power(arr, spec.a)
    if family is DistortionFamily.DUAL_POWER:
        assert spec.b is not None
        return 1.0 - np.power(1.0 - arr, spec.b)
    if family is DistortionFamily.LOOKBACK:
        assert spec.p is not None
        out = np.zeros_like(arr)
        positive = arr > 0.0
        xp = arr[positive]
        out[positive] = np.power(xp, spec.p) * (1.0 - spec.p * np.log(xp))
        return out
    # No closed vector form for the special-function families
    return np.fromiter(
        (evaluate(spec, float(x)) for x in arr.ravel()),
        dtype=np.float64,
        count=arr.size,
    ).reshape(arr.shape)


def leading_weights(
    spec: DistortionSpec,
    m: int,
    count: int,
) -> npt.NDArray[np.float64]:
    """The first `count` of the m rank weights Q(j/m) - Q((j-1)/m).

    Only `count` + 1 evaluations are made however large m is. Negative
    increments from rounding are clamped to 0.
    """
    if m < 1:
        raise DomainError(f"number of ranks must be positive, got {m}")
    if not 0 <= count <= m:
        raise DomainError(f"count must lie in [0, {m}], got {count}")
    grid = np.arange(count + 1, dtype=np.float64) / m
    if count == m:
        grid[-1] = 1.0
    increments = np.diff(evaluate_array(spec, grid))
    return np.maximum(increments, 0.0)


def make_weights(spec: DistortionSpec, m: int) -> WeightVector:
    """Rank weights w_j = Q(j/m) - Q((j-1)/m), j = 1..m."""
    weights = leading_weights(spec, m, m)
    total = float(weights.sum())
    if abs(total - 1.0) > WEIGHT_SUM_TOLERANCE:
        weights = weights / total
    return WeightVector(tuple(float(w) for w in weights))


def classify_shape(spec: DistortionSpec, grid_size: int = DEFAULT_GRID) -> Shape:
    """Classify Q by the signs of its second differences on a uniform grid."""
    if grid_size < 3:
        raise DomainError(f"grid_size must be at least 3, got {grid_size}")
    ys = evaluate_array(spec, np.linspace(0.0, 1.0, grid_size))
    second = ys[2:] - 2.0 * ys[1:-1] + ys[:-2]
    if np.all(np.abs(second) <= SHAPE_TOLERANCE):
        return Shape.LINEAR
    if np.all(second <= SHAPE_TOLERANCE):
        return Shape.CONCAVE
    if np.all(second >= -SHAPE_TOLERANCE):
        return Shape.CONVEX
    return Shape.NEITHER


def dominates(
    lower: DistortionSpec,
    upper: DistortionSpec,
    grid_size: int = DEFAULT_GRID,
) -> bool:
    """True when lower(x) <= upper(x) at every point of a uniform grid."""
    if grid_size < 2:
        raise DomainError(f"grid_size must be at least 2, got {grid_size}")
    xs = np.linspace(0.0, 1.0, grid_size)
    diff = evaluate_array(lower, xs) - evaluate_array(upper, xs)
    return bool(np.all(diff <= MONOTONE_TOLERANCE))


def weight_direction(weights: WeightVector) -> WeightDirection:
    """Whether the weights rise, fall, stay flat or do neither with rank."""
    steps = np.diff(np.asarray(weights.w, dtype=np.float64))
    if np.all(np.abs(steps) <= MONOTONE_TOLERANCE):
        return WeightDirection.CONSTANT
    if np.all(steps >= -MONOTONE_TOLERANCE):
        return WeightDirection.INCREASING
    if np.all(steps <= MONOTONE_TOLERANCE):
        return WeightDirection.DECREASING
    return WeightDirection.NEITHER
