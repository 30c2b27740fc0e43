"""Worked examples with known CI values and ranking chains."""
from __future__ import annotations

import math

import pytest

from ci_metrics._choquet import ci_g
from ci_metrics._choquet import ci_h
from ci_metrics._choquet import compute_report
from ci_metrics._data import Relation
from ci_metrics._data import ResearcherProfile
from ci_metrics._distortion import parse_distortion
from ci_metrics._indices import classic_indices
from ci_metrics._ranking import format_chain
from ci_metrics._ranking import rank

POWER_HALF = parse_distortion('power:a=0.5')

# Ten profiles whose h-cores give the published CI_h values. Cases 7 and 10
# use a last paper below h so that the core sizes match the published ones
# (4 and 1).
SQUARE_ROOT_CASES = (
    ('R_1', (50, 50, 3, 1), 11.14),
    ('R_2', (50, 50, 3, 3, 1), 12.04),
    ('R_3', (70, 30, 3, 1), 12.02),
    ('R_4', (70, 30, 3, 3, 1), 12.98),
    ('R_5', (90, 10, 3, 1), 12.83),
    ('R_6', (90, 10, 3, 3, 1), 13.85),
    ('R_7', (40, 30, 20, 13, 3), 11.16),
    ('R_8', (10,) * 10 + (3,), 10.0),
    ('R_9', (100, 3, 1), 11.97),
    ('R_10', (103, 0), 10.15),
)

# Profiles with equal CI_h separated by CI_g
G_CORE_CASES = (
    ('R_1', (10,) * 10 + (0,), 10.0),
    ('R_2', (25, 25, 25, 25, 0), 12.57),
    ('R_3', (50, 50, 0), 14.95),
    ('R_4', (100, 0), 17.78),
)


@pytest.fixture
def square_root_profiles():
    return [ResearcherProfile(pid, counts) for pid, counts, _ in SQUARE_ROOT_CASES]


@pytest.fixture
def g_core_profiles():
    return [ResearcherProfile(pid, counts) for pid, counts, _ in G_CORE_CASES]


@pytest.mark.parametrize(
    ('counts', 'expected'),
    [pytest.param(counts, value, id=pid) for pid, counts, value in SQUARE_ROOT_CASES],
)
def test_ci_h_published_values(counts, expected):
    assert abs(ci_h(ResearcherProfile('R', counts), POWER_HALF) - expected) <= 0.005


@pytest.mark.parametrize(
    ('counts', 'h', 'core_size'),
    (
        pytest.param((50, 50, 3, 1), 3, 3, id='R_1'),
        pytest.param((50, 50, 3, 3, 1), 3, 4, id='R_2'),
        pytest.param((90, 10, 3, 1), 3, 3, id='R_5'),
        pytest.param((40, 30, 20, 13, 3), 4, 4, id='R_7'),
        pytest.param((10,) * 10 + (3,), 10, 10, id='R_8'),
        pytest.param((100, 3, 1), 2, 2, id='R_9'),
        pytest.param((103, 0), 1, 1, id='R_10'),
    ),
)
def test_h_and_core_size(counts, h, core_size):
    classic = classic_indices(ResearcherProfile('R', counts))
    assert classic.h == h
    assert classic.sharp_c_h == core_size


@pytest.mark.parametrize(
    ('counts', 'expected'),
    (
        # the whole multiset (40, 30, 20, 13, 4) is the h-core
        pytest.param((40, 30, 20, 13, 4), 11.889, id='five paper core'),
        # (103, 1) has h = 1 and both papers in the core
        pytest.param((103, 1), 12.093, id='two paper core'),
    ),
)
def test_ci_h_counts_every_paper_at_or_above_h(counts, expected):
    assert ci_h(ResearcherProfile('R', counts), POWER_HALF) == pytest.approx(expected, abs=0.001)


def test_equal_r_different_ci_h():
    profiles = [ResearcherProfile('R', counts) for counts in ((50, 50, 3, 1), (70, 30, 3, 1), (90, 10, 3, 1))]
    assert {classic_indices(p).r_index for p in profiles} == {math.sqrt(103)}
    values = [ci_h(p, POWER_HALF) for p in profiles]
    assert values == sorted(values)
    assert len(set(values)) == 3


def test_equal_r_m_different_ci_h():
    profiles = [ResearcherProfile('R', counts) for counts in ((50, 50, 3, 3, 1), (70, 30, 3, 3, 1), (90, 10, 3, 3, 1))]
    assert {classic_indices(p).r_m for p in profiles} == {math.sqrt(106)}
    assert len({ci_h(p, POWER_HALF) for p in profiles}) == 3


def test_square_root_chain(square_root_profiles):
    result = rank(square_root_profiles, POWER_HALF)
    assert format_chain(result) == (
        'R_8 ≺ R_10 ≺ R_1 ≺ R_7 ≺ R_9 ≺ R_3 ≺ R_2 ≺ R_5 ≺ R_4 ≺ R_6'
    )
    # Every adjacent pair is split on CI_h
    assert [step.deciding_rule for step in result.steps] == [2] * 9


@pytest.mark.parametrize(
    ('counts', 'expected'),
    [pytest.param(counts, value, id=pid) for pid, counts, value in G_CORE_CASES],
)
def test_ci_g_published_values(counts, expected):
    profile = ResearcherProfile('R', counts)
    assert abs(ci_h(profile, POWER_HALF) - 10.0) <= 1e-9
    assert abs(ci_g(profile, POWER_HALF) - expected) <= 0.005


def test_g_core_chain(g_core_profiles):
    result = rank(g_core_profiles, POWER_HALF)
    assert format_chain(result) == 'R_1 ≺ R_2 ≺ R_3 ≺ R_4'
    assert [step.deciding_rule for step in result.steps] == [4, 4, 4]


def test_g_core_cases_all_have_g_ten(g_core_profiles):
    assert [compute_report(p, POWER_HALF).g for p in g_core_profiles] == [10] * 4


def test_equal_euclidean_index_separated_by_ranking():
    profiles = [
        ResearcherProfile('A', (10,) * 100),
        ResearcherProfile('B', (100,)),
        ResearcherProfile('C', (1,) * 10000),
    ]
    assert [classic_indices(p).euclidean for p in profiles] == [100.0] * 3

    result = rank(profiles, POWER_HALF)
    assert all(len(group) == 1 for group in result.ordered_groups)
    assert all(step.relation is Relation.WORSE for step in result.steps)
    assert result.report_for('A').ci_h == pytest.approx(math.sqrt(1000))
    assert result.report_for('B').ci_h == pytest.approx(10.0)
    assert result.report_for('C').ci_h == pytest.approx(100.0)
    assert format_chain(result) == 'B ≺ A ≺ C'
