"""Output formatting for CLI."""
from __future__ import annotations

from collections.abc import Sequence

from ci_metrics._data import ComparisonOutcome
from ci_metrics._data import DistortionSpec
from ci_metrics._data import IndexReport
from ci_metrics._data import RankResult
from ci_metrics._data import Relation
from ci_metrics._distortion import format_distortion
from ci_metrics._ranking import BETTER_SYMBOL
from ci_metrics._ranking import EQUIVALENT_SYMBOL
from ci_metrics._ranking import WORSE_SYMBOL
from ci_metrics._ranking import deciding_index
from ci_metrics._ranking import format_chain

# Box drawing characters for nicer output
HORIZONTAL = "─"
DOUBLE_HORIZONTAL = "═"
RULE_WIDTH = 79

# (header, report attribute)
TABLE_COLUMNS = (
    ("id", "id"),
    ("h", "h"),
    ("#C_h", "sharp_c_h"),
    ("g", "g"),
    ("n", "n_papers"),
    ("N", "total_citations"),
    ("A", "a_index"),
    ("R", "r_index"),
    ("R_m", "r_m"),
    ("R_g", "r_g"),
    ("R_N", "r_n"),
    ("l_E", "euclidean"),
    ("CI_h", "ci_h"),
    ("CI_g", "ci_g"),
    ("CI_N", "ci_n"),
)

_RELATION_SYMBOLS = {
    Relation.WORSE: WORSE_SYMBOL,
    Relation.BETTER: BETTER_SYMBOL,
    Relation.EQUIVALENT: EQUIVALENT_SYMBOL,
}

_INDEX_LABELS = {"ci_h": "CI_h", "ci_g": "CI_g", "ci_n": "CI_N"}


def format_value(value: object) -> str:
    """Integers as-is, reals to 6 significant digits."""
    if isinstance(value, float):
        return f"{value:.6g}"
    return str(value)


def _title(text: str, rule: str = HORIZONTAL) -> list[str]:
    return [rule * RULE_WIDTH, text, rule * RULE_WIDTH]


def _distortion_line(spec: DistortionSpec) -> str:
    return f"Distortion: {format_distortion(spec)}"


def format_report_table(reports: Sequence[IndexReport]) -> list[str]:
    """Format reports as an aligned table, one row per profile."""
    header = [name for name, _ in TABLE_COLUMNS]
    rows = [
        [format_value(getattr(report, attr)) for _, attr in TABLE_COLUMNS]
        for report in reports
    ]
    widths = [
        max(len(cell) for cell in column)
        for column in zip(header, *rows)
    ]

    def render(cells: list[str]) -> str:
        # Left-align the id column, right-align the numbers
        parts = [cells[0].ljust(widths[0])]
        parts.extend(cell.rjust(width) for cell, width in zip(cells[1:], widths[1:]))
        return "  ".join(parts).rstrip()

    lines: list[str] = []
    distortions = {report.distortion for report in reports}
    if len(distortions) == 1:
        lines.append(_distortion_line(next(iter(distortions))))
    lines.append(render(header))
    lines.append(HORIZONTAL * len(render(header)))
    lines.extend(render(row) for row in rows)
    return lines


def format_outcome(
    first: str,
    second: str,
    outcome: ComparisonOutcome,
) -> str:
    """One comparison as ``A ≺ B  rule 2 (CI_h differs by 0.149)``."""
    symbol = _RELATION_SYMBOLS[outcome.relation]
    text = f"{first} {symbol} {second}  rule {outcome.deciding_rule}"
    index = deciding_index(outcome.deciding_rule)
    if index is None:
        return f"{text} (CI_h, CI_g and CI_N all equal)"
    return f"{text} ({_INDEX_LABELS[index]} differs by {format_value(outcome.margin)})"


def format_rank_result(
    result: RankResult,
    best_first: bool = False,
    quiet: bool = False,
) -> list[str]:
    """Format a ranking: the chain, then the rule that split each adjacent pair.

    Args:
        result: The ranking to display
        best_first: Show the best group first (display only)
        quiet: Only show the chain
    """
    lines: list[str] = []
    order = "best first" if best_first else "worst first"
    lines.extend(
        _title(
            f"Ranking under {format_distortion(result.distortion)} ({order})",
            DOUBLE_HORIZONTAL,
        ),
    )
    lines.append(format_chain(result, best_first=best_first))

    if quiet or not result.steps:
        return lines

    lines.append("")
    lines.extend(_title("Deciding rules"))
    pairs = [
        (result.ordered_groups[i][0], result.ordered_groups[i + 1][0], step)
        for i, step in enumerate(result.steps)
    ]
    if best_first:
        pairs = [(later, earlier, step.flipped()) for earlier, later, step in reversed(pairs)]
    for first, second, outcome in pairs:
        lines.append(f"  {format_outcome(first, second, outcome)}")

    tied = [group for group in result.ordered_groups if len(group) > 1]
    if tied:
        lines.append("")
        lines.append(f"{len(tied)} group(s) of equivalent profiles (rule 7)")
    return lines


def format_comparison(
    first: IndexReport,
    second: IndexReport,
    outcome: ComparisonOutcome,
) -> list[str]:
    """Format the outcome of comparing two profiles, with the indices compared."""
    lines = _title(_distortion_line(first.distortion), DOUBLE_HORIZONTAL)
    width = max(len(first.id), len(second.id))
    for name, attr in (("CI_h", "ci_h"), ("CI_g", "ci_g"), ("CI_N", "ci_n")):
        lines.append(
            f"  {name}: {first.id:<{width}} {format_value(getattr(first, attr)):>12}"
            f"   {second.id:<{width}} {format_value(getattr(second, attr)):>12}",
        )
    lines.append("")
    lines.append(format_outcome(first.id, second.id, outcome))
    return lines
