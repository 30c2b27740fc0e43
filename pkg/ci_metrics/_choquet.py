"""Discrete Choquet integral and the CI indices built on it."""
from __future__ import annotations

import math
from collections.abc import Sequence

import numpy as np
import numpy.typing as npt

from ci_metrics._data import DistortionSpec
from ci_metrics._data import DomainError
from ci_metrics._data import IndexReport
from ci_metrics._data import ResearcherProfile
from ci_metrics._distortion import evaluate_array
from ci_metrics._distortion import leading_weights
from ci_metrics._distortion import make_weights
from ci_metrics._indices import classic_indices
from ci_metrics._indices import g_core
from ci_metrics._indices import h_core


def _checked_values(values: Sequence[float]) -> npt.NDArray[np.float64]:
    arr = np.asarray(values, dtype=np.float64)
    if arr.ndim != 1 or arr.size == 0:
        raise DomainError("Choquet integral needs a non-empty sequence of values")
    if not np.all(np.isfinite(arr)):
        raise DomainError("Choquet integral values must be finite")
    if arr.min() < 0.0:
        raise DomainError("Choquet integral values must be non-negative")
    if np.any(np.diff(arr) > 0.0):
        raise DomainError("Choquet integral values must be sorted in non-increasing order")
    return arr


def choquet_value(values: Sequence[float], spec: DistortionSpec) -> float:
    """Weighted sum of non-increasing values by the rank weights of spec.

    Unsorted input is rejected, not sorted.
    """
    arr = _checked_values(values)
    weights = np.asarray(make_weights(spec, arr.size).w, dtype=np.float64)
    return float(np.dot(arr, weights))


def staircase_integral(values: Sequence[float], spec: DistortionSpec) -> float:
    """The integral of Q(S(x)) over [0, inf) for the empirical survival function S.

    S is a step function, so the integral is the sum over steps of
    (x_j - x_{j+1}) * Q(j/m) with x_{m+1} = 0.
    """
    arr = _checked_values(values)
    m = arr.size
    steps = arr - np.append(arr[1:], 0.0)
    levels = np.arange(1, m + 1, dtype=np.float64) / m
    levels[-1] = 1.0
    return float(np.dot(steps, evaluate_array(spec, levels)))


def _core_index(values: tuple[int, ...], spec: DistortionSpec) -> float:
    if not values:
        return 0.0
    return math.sqrt(len(values) * choquet_value(values, spec))


def ci_h(profile: ResearcherProfile, spec: DistortionSpec) -> float:
    """CI index over the h-core: sqrt(#C_h * Choquet value of the core)."""
    return _core_index(h_core(profile).values, spec)


def ci_g(
    profile: ResearcherProfile,
    spec: DistortionSpec,
    capped: bool = False,
) -> float:
    """CI index over the zero-padded g-core."""
    return _core_index(g_core(profile, capped=capped).values, spec)


def ci_n(profile: ResearcherProfile, spec: DistortionSpec) -> float:
    """CI index over all N citations.

    The n paper counts are zero-padded to length N; only the ranks that
    hold a cited paper are weighted, so the cost is O(n) whatever N is.
    """
    total = profile.total_citations
    if total == 0:
        return 0.0
    cited = np.asarray(
        [count for count in profile.citations if count > 0], dtype=np.float64,
    )
    weights = leading_weights(spec, total, cited.size)
    return math.sqrt(total * float(np.dot(cited, weights)))


def compute_report(
    profile: ResearcherProfile,
    spec: DistortionSpec,
    g_capped: bool = False,
) -> IndexReport:
    """Every classic and CI index of one profile under one distortion."""
    classic = classic_indices(profile, g_capped=g_capped)
    return IndexReport(
        id=profile.id,
        distortion=spec,
        h=classic.h,
        sharp_c_h=classic.sharp_c_h,
        g=classic.g,
        n_papers=classic.n_papers,
        total_citations=classic.total_citations,
        a_index=classic.a_index,
        r_index=classic.r_index,
        r_m=classic.r_m,
        r_g=classic.r_g,
        r_n=classic.r_n,
        euclidean=classic.euclidean,
        ci_h=ci_h(profile, spec),
        ci_g=ci_g(profile, spec, capped=g_capped),
        ci_n=ci_n(profile, spec),
    )
