"""Lexicographic comparison and ranking of researchers by CI_h, CI_g, CI_N."""
from __future__ import annotations

import math
from collections.abc import Iterable

from ci_metrics._choquet import compute_report
from ci_metrics._data import ComparisonOutcome
from ci_metrics._data import DistortionSpec
from ci_metrics._data import DomainError
from ci_metrics._data import IndexReport
from ci_metrics._data import ProfileError
from ci_metrics._data import RankResult
from ci_metrics._data import Relation
from ci_metrics._data import ResearcherProfile

DEFAULT_TOLERANCE = 1e-9

# (index name, rule when the first report is higher); the lower rule is +1
_LEVELS = (
    ("ci_h", 1),
    ("ci_g", 3),
    ("ci_n", 5),
)
EQUIVALENT_RULE = 7

WORSE_SYMBOL = "≺"
BETTER_SYMBOL = "≻"
EQUIVALENT_SYMBOL = "~"


def deciding_index(rule: int) -> str | None:
    """Name of the index a rule compares, None for the all-equal rule."""
    for name, higher_rule in _LEVELS:
        if rule in (higher_rule, higher_rule + 1):
            return name
    return None


def _check_tolerance(tol: float) -> None:
    if tol < 0 or math.isnan(tol):
        raise DomainError(f"tolerance must be non-negative, got {tol}")


def compare(
    r1: IndexReport,
    r2: IndexReport,
    tol: float = DEFAULT_TOLERANCE,
) -> ComparisonOutcome:
    """Compare r1 against r2 on CI_h, then CI_g, then CI_N.

    Two values are equal when they agree within the relative tolerance.
    """
    if r1.distortion != r2.distortion:
        raise DomainError(
            f"cannot compare reports computed under different distortions "
            f"({r1.id!r} and {r2.id!r})",
        )
    _check_tolerance(tol)
    for name, higher_rule in _LEVELS:
        v1 = getattr(r1, name)
        v2 = getattr(r2, name)
        if math.isclose(v1, v2, rel_tol=tol):
            continue
        if v1 > v2:
            return ComparisonOutcome(Relation.BETTER, higher_rule, v1 - v2)
        return ComparisonOutcome(Relation.WORSE, higher_rule + 1, v2 - v1)
    return ComparisonOutcome(Relation.EQUIVALENT, EQUIVALENT_RULE, 0.0)


def _check_profiles(profiles: list[ResearcherProfile]) -> None:
    if not profiles:
        raise ProfileError("cannot rank an empty collection of profiles")
    seen: set[str] = set()
    for position, profile in enumerate(profiles, 1):
        if profile.id in seen:
            raise ProfileError(f"duplicate profile id {profile.id!r} at position {position}")
        seen.add(profile.id)


def _tie_chains(
    reports: list[IndexReport],
    members: list[int],
    name: str,
    tol: float,
) -> list[list[int]]:
    # Neighbours in value order within tolerance share a chain
    ordered = sorted(members, key=lambda i: getattr(reports[i], name))
    chains: list[list[int]] = []
    for i in ordered:
        value = getattr(reports[i], name)
        if chains and math.isclose(getattr(reports[chains[-1][-1]], name), value, rel_tol=tol):
            chains[-1].append(i)
        else:
            chains.append([i])
    return chains


def _partition(
    reports: list[IndexReport],
    members: list[int],
    level: int,
    tol: float,
) -> tuple[list[list[int]], list[int]]:
    """Split members into groups, worst first.

    Also returns, for each boundary between adjacent groups, the level
    at which the two groups were separated.
    """
    if level == len(_LEVELS):
        return [sorted(members)], []
    groups: list[list[int]] = []
    boundaries: list[int] = []
    for chain in _tie_chains(reports, members, _LEVELS[level][0], tol):
        if groups:
            boundaries.append(level)
        chain_groups, chain_boundaries = _partition(reports, chain, level + 1, tol)
        groups.extend(chain_groups)
        boundaries.extend(chain_boundaries)
    return groups, boundaries


def rank(
    profiles: Iterable[ResearcherProfile],
    spec: DistortionSpec,
    tol: float = DEFAULT_TOLERANCE,
    g_capped: bool = False,
) -> RankResult:
    """Order profiles worst first, grouping equivalent ones.

    Equality is decided one index at a time. Values of CI_h are sorted and
    split wherever two neighbours differ beyond the tolerance; each part is
    then split the same way on CI_g, and then on CI_N. Values linked by a
    chain of close neighbours therefore count as tied even when the ends of
    the chain are further apart than the tolerance. When values are either
    identical or well apart, as integer citation data gives under the
    default tolerance, this agrees with ``compare`` for every pair.

    The result does not depend on input order, except that members of a
    group keep their input order.
    """
    items = list(profiles)
    _check_profiles(items)
    _check_tolerance(tol)

    reports = [compute_report(profile, spec, g_capped=g_capped) for profile in items]
    groups, boundaries = _partition(reports, list(range(len(reports))), 0, tol)

    steps: list[ComparisonOutcome] = []
    for lower, upper, level in zip(groups, groups[1:], boundaries):
        name, higher_rule = _LEVELS[level]
        gap = min(getattr(reports[i], name) for i in upper) - max(
            getattr(reports[i], name) for i in lower
        )
        steps.append(ComparisonOutcome(Relation.WORSE, higher_rule + 1, gap))

    return RankResult(
        ordered_groups=tuple(
            tuple(reports[i].id for i in group) for group in groups
        ),
        reports=tuple(reports),
        steps=tuple(steps),
        distortion=spec,
    )


def _group_label(group: tuple[str, ...]) -> str:
    if len(group) == 1:
        return group[0]
    return "{" + f" {EQUIVALENT_SYMBOL} ".join(group) + "}"


def format_chain(result: RankResult, best_first: bool = False) -> str:
    """Render the ranking as ``A ≺ B ≺ {C ~ D}``, or best first with ≻."""
    labels = [_group_label(group) for group in result.ordered_groups]
    if best_first:
        return f" {BETTER_SYMBOL} ".join(reversed(labels))
    return f" {WORSE_SYMBOL} ".join(labels)
