"""Reading citation profiles and writing reports and plot data."""
from __future__ import annotations

import csv
import io
import json
import re
from collections.abc import Iterable
from collections.abc import Sequence
from pathlib import Path
from typing import Any

import numpy as np

from ci_metrics._data import CurveKind
from ci_metrics._data import CurveSample
from ci_metrics._data import DistortionSpec
from ci_metrics._data import DomainError
from ci_metrics._data import IndexReport
from ci_metrics._data import ProfileError
from ci_metrics._data import ProfileFile
from ci_metrics._data import ProfileFormat
from ci_metrics._data import ReportFormat
from ci_metrics._data import ResearcherProfile
from ci_metrics._distortion import evaluate_array
from ci_metrics._distortion import format_distortion
from ci_metrics._distortion import make_weights
from ci_metrics._format import format_report_table

# Citation counts inside the second CSV column
CITATION_DELIMITER = ";"

REPORT_FIELDS = (
    "id",
    "distortion",
    "h",
    "sharp_c_h",
    "g",
    "n_papers",
    "total_citations",
    "a_index",
    "r_index",
    "r_m",
    "r_g",
    "r_n",
    "euclidean",
    "ci_h",
    "ci_g",
    "ci_n",
)

_INTEGER_PATTERN = re.compile(r"^[+-]?\d+$")


def infer_format(path: Path) -> ProfileFormat:
    """JSON for a .json suffix, CSV for anything else."""
    if path.suffix.lower() == ".json":
        return ProfileFormat.JSON
    return ProfileFormat.CSV


def _parse_count(token: str, where: str) -> int:
    token = token.strip()
    if not _INTEGER_PATTERN.match(token):
        raise ProfileError(f"{where}: citation count is not an integer: {token!r}")
    count = int(token)
    if count < 0:
        raise ProfileError(f"{where}: citation count is negative: {count}")
    return count


def _is_header(fields: list[str]) -> bool:
    return (
        len(fields) == 2
        and bool(fields[1].strip())
        and not any(ch.isdigit() for ch in fields[1])
    )


def _parse_csv(text: str, source: str) -> list[ResearcherProfile]:
    profiles: list[ResearcherProfile] = []
    first_record = True
    reader = csv.reader(io.StringIO(text))
    for fields in reader:
        lineno = reader.line_num
        if not fields or not "".join(fields).strip():
            continue
        if fields[0].lstrip().startswith("#"):
            continue
        if first_record:
            first_record = False
            if _is_header(fields):
                continue
        if len(fields) > 2:
            raise ProfileError(
                f"{source}:{lineno}: expected 'id,count;count;...', got {len(fields)} fields",
            )
        profile_id = fields[0].strip()
        if not profile_id:
            raise ProfileError(f"{source}:{lineno}: missing profile id")
        where = f"{source}:{lineno}: profile {profile_id!r}"
        counts_field = fields[1] if len(fields) == 2 else ""
        counts = []
        if counts_field.strip():
            counts = [
                _parse_count(token, where)
                for token in counts_field.split(CITATION_DELIMITER)
            ]
        profiles.append(ResearcherProfile(profile_id, tuple(counts)))
    return profiles


def _parse_json(text: str, source: str) -> list[ResearcherProfile]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ProfileError(
            f"{source}:{e.lineno}:{e.colno}: invalid JSON: {e.msg}",
        ) from None
    if not isinstance(data, list):
        raise ProfileError(f"{source}: expected a JSON array of profile records")

    profiles: list[ResearcherProfile] = []
    for position, record in enumerate(data, 1):
        where = f"{source}: record {position}"
        if not isinstance(record, dict):
            raise ProfileError(f"{where}: expected an object with 'id' and 'citations'")
        profile_id = record.get("id")
        if not isinstance(profile_id, str) or not profile_id:
            raise ProfileError(f"{where}: 'id' must be a non-empty string")
        where = f"{where} ({profile_id!r})"
        citations = record.get("citations", [])
        if not isinstance(citations, list):
            raise ProfileError(f"{where}: 'citations' must be an array")
        counts: list[int] = []
        for count in citations:
            if isinstance(count, bool) or not isinstance(count, int):
                raise ProfileError(f"{where}: citation count is not an integer: {count!r}")
            if count < 0:
                raise ProfileError(f"{where}: citation count is negative: {count}")
            counts.append(count)
        profiles.append(ResearcherProfile(profile_id, tuple(counts)))
    return profiles


def parse_profiles(
    text: str,
    fmt: ProfileFormat,
    source: str = "<string>",
) -> ProfileFile:
    """Parse profile records, checking counts and id uniqueness.

    CSV has one record per line, ``id,count;count;...``, with an optional
    header row. JSON is an array of ``{"id": ..., "citations": [...]}``.
    """
    if fmt is ProfileFormat.JSON:
        profiles = _parse_json(text, source)
    else:
        profiles = _parse_csv(text, source)

    seen: set[str] = set()
    for position, profile in enumerate(profiles, 1):
        if profile.id in seen:
            raise ProfileError(
                f"{source}: duplicate profile id {profile.id!r} (record {position})",
            )
        seen.add(profile.id)
    return ProfileFile(fmt, tuple(profiles))


def load_profiles(path: Path, fmt: ProfileFormat | None = None) -> list[ResearcherProfile]:
    """Read and validate every profile in a CSV or JSON file."""
    if fmt is None:
        fmt = infer_format(path)
    text = path.read_text(encoding="utf-8")
    return list(parse_profiles(text, fmt, source=str(path)).records)


def dump_profiles(profiles: Iterable[ResearcherProfile], fmt: ProfileFormat) -> str:
    """Write profiles in a form parse_profiles reads back."""
    if fmt is ProfileFormat.JSON:
        records = [
            {"id": profile.id, "citations": list(profile.citations)}
            for profile in profiles
        ]
        return json.dumps(records, indent=2) + "\n"

    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["id", "citations"])
    for profile in profiles:
        writer.writerow([
            profile.id,
            CITATION_DELIMITER.join(str(count) for count in profile.citations),
        ])
    return out.getvalue()


def report_to_dict(report: IndexReport) -> dict[str, Any]:
    """Report fields in REPORT_FIELDS order, distortion in compact form."""
    record: dict[str, Any] = {}
    for name in REPORT_FIELDS:
        value = getattr(report, name)
        if isinstance(value, DistortionSpec):
            value = format_distortion(value)
        record[name] = value
    return record


def emit_reports(reports: Sequence[IndexReport], fmt: ReportFormat) -> str:
    """Serialize reports as an aligned table, a JSON array or CSV rows."""
    if fmt is ReportFormat.TABLE:
        return "\n".join(format_report_table(reports)) + "\n"
    if fmt is ReportFormat.JSON:
        return json.dumps([report_to_dict(r) for r in reports], indent=2) + "\n"

    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(REPORT_FIELDS)
    for report in reports:
        writer.writerow([
            repr(value) if isinstance(value, float) else value
            for value in report_to_dict(report).values()
        ])
    return out.getvalue()


def emit_report(report: IndexReport, fmt: ReportFormat) -> str:
    """Serialize one report; JSON gives a single object."""
    if fmt is ReportFormat.JSON:
        return json.dumps(report_to_dict(report), indent=2) + "\n"
    return emit_reports([report], fmt)


def sample_curves(
    spec: DistortionSpec,
    m: int,
    grid: int,
) -> tuple[CurveSample, CurveSample]:
    """Q sampled at grid + 1 uniform points, and the m rank weights."""
    if grid < 2:
        raise DomainError(f"grid must be at least 2, got {grid}")
    if m < 1:
        raise DomainError(f"number of ranks must be positive, got {m}")
    xs = np.linspace(0.0, 1.0, grid + 1)
    ys = evaluate_array(spec, xs)
    curve = CurveSample(
        CurveKind.DISTORTION_CURVE,
        tuple((float(x), float(y)) for x, y in zip(xs, ys)),
    )
    weights = make_weights(spec, m)
    bars = CurveSample(
        CurveKind.WEIGHT_BARS,
        tuple((float(j), w) for j, w in enumerate(weights.w, 1)),
    )
    return curve, bars


def emit_curves(spec: DistortionSpec, m: int, grid: int) -> str:
    """CSV with columns curve,x,y: the distortion curve then the weight bars."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["curve", "x", "y"])
    for sample in sample_curves(spec, m, grid):
        for x, y in sample.points:
            label = int(x) if sample.kind is CurveKind.WEIGHT_BARS else repr(x)
            writer.writerow([sample.kind.value, label, repr(y)])
    return out.getvalue()
