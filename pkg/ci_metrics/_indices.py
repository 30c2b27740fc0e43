"""Classic citation indices and the h-core and g-core they are built on."""
from __future__ import annotations

import itertools
import math

from ci_metrics._data import ClassicIndices
from ci_metrics._data import CoreKind
from ci_metrics._data import CoreSet
from ci_metrics._data import ResearcherProfile


def h_index(profile: ResearcherProfile) -> int:
    """Largest h such that h papers have at least h citations each."""
    h = 0
    for rank, count in enumerate(profile.citations, 1):
        if count < rank:
            break
        h = rank
    return h


def h_core(profile: ResearcherProfile) -> CoreSet:
    """Every paper with at least h citations; may hold more than h papers."""
    h = h_index(profile)
    if h == 0:
        return CoreSet(CoreKind.H_CORE, ())
    values = tuple(count for count in profile.citations if count >= h)
    return CoreSet(CoreKind.H_CORE, values)


def g_index(profile: ResearcherProfile, capped: bool = False) -> int:
    """Largest g such that the top g papers have at least g**2 citations.

    By default g may exceed the number of papers (the missing papers count
    as fictitious zero-citation papers). With capped=True, g <= n.
    """
    g = 0
    # Ranks meeting the condition form a prefix
    for rank, running in enumerate(itertools.accumulate(profile.citations), 1):
        if running < rank * rank:
            return g
        g = rank
    if capped:
        return g
    return math.isqrt(profile.total_citations)


def g_core(profile: ResearcherProfile, capped: bool = False) -> CoreSet:
    """The top g papers, zero-padded when g exceeds the number of papers."""
    g = g_index(profile, capped=capped)
    top = profile.citations[:g]
    values = top + (0,) * (g - len(top))
    return CoreSet(CoreKind.G_CORE, values)


def classic_indices(profile: ResearcherProfile, g_capped: bool = False) -> ClassicIndices:
    """h, g, A, R, R_m, R_g, R_N, Euclidean and citation totals of a profile.

    Indices over an empty set are 0, including A when h is 0.
    """
    h = h_index(profile)
    core_h = h_core(profile)
    core_g = g_core(profile, capped=g_capped)

    top_h_sum = sum(profile.citations[:h])
    total = profile.total_citations
    return ClassicIndices(
        h=h,
        sharp_c_h=core_h.size,
        g=core_g.size,
        n_papers=profile.n_papers,
        total_citations=total,
        a_index=top_h_sum / h if h else 0.0,
        r_index=math.sqrt(top_h_sum),
        r_m=math.sqrt(sum(core_h.values)),
        r_g=math.sqrt(sum(core_g.values)),
        r_n=math.sqrt(total),
        euclidean=math.sqrt(sum(count * count for count in profile.citations)),
    )
