from __future__ import annotations

import enum
import math
import numbers
from dataclasses import dataclass
from dataclasses import field


class CIMetricsError(Exception):
    """Base class for every error raised by ci_metrics."""


class DistortionError(CIMetricsError, ValueError):
    """Invalid distortion parameters or an unparsable distortion string."""


class DomainError(CIMetricsError, ValueError):
    """A numeric argument lies outside the domain of the operation."""


class ProfileError(CIMetricsError, ValueError):
    """Citation data failed validation."""


class DistortionFamily(enum.Enum):
    IDENTITY = "identity"
    POWER = "power"
    DUAL_POWER = "dualpower"
    INCOMPLETE_BETA = "beta"
    WANG = "wang"
    LOOKBACK = "lookback"


# Parameters each family takes, in canonical order
FAMILY_PARAMETERS: dict[DistortionFamily, tuple[str, ...]] = {
    DistortionFamily.IDENTITY: (),
    DistortionFamily.POWER: ("a",),
    DistortionFamily.DUAL_POWER: ("b",),
    DistortionFamily.INCOMPLETE_BETA: ("a", "b"),
    DistortionFamily.WANG: ("p",),
    DistortionFamily.LOOKBACK: ("p",),
}


@dataclass(frozen=True)
class DistortionSpec:
    """A distortion family plus the parameters it needs.

    Parameters a family does not use must be left as None.
    """

    family: DistortionFamily
    a: float | None = None  # Power exponent / first beta shape
    b: float | None = None  # Dual-power exponent / second beta shape
    p: float | None = None  # Wang level in (0, 1), lookback level in (0, 1]

    def __post_init__(self) -> None:
        wanted = FAMILY_PARAMETERS[self.family]
        for name in ("a", "b", "p"):
            value = getattr(self, name)
            if name not in wanted:
                if value is not None:
                    raise DistortionError(
                        f"{self.family.value} distortion takes no parameter '{name}'",
                    )
                continue
            if value is None:
                raise DistortionError(
                    f"{self.family.value} distortion requires parameter '{name}'",
                )
            if isinstance(value, bool) or not isinstance(value, numbers.Real):
                raise DistortionError(f"parameter '{name}' must be a real number")
            if not math.isfinite(value):
                raise DistortionError(f"parameter '{name}' must be finite, got {value}")
            object.__setattr__(self, name, float(value))

        if self.a is not None and self.a <= 0:
            raise DistortionError(f"parameter 'a' must be positive, got {self.a}")
        if self.b is not None and self.b <= 0:
            raise DistortionError(f"parameter 'b' must be positive, got {self.b}")
        if self.family is DistortionFamily.WANG:
            assert self.p is not None
            if not 0 < self.p < 1:
                raise DistortionError(f"wang distortion needs 0 < p < 1, got {self.p}")
        if self.family is DistortionFamily.LOOKBACK:
            assert self.p is not None
            if not 0 < self.p <= 1:
                raise DistortionError(
                    f"lookback distortion needs 0 < p <= 1, got {self.p}",
                )


IDENTITY = DistortionSpec(DistortionFamily.IDENTITY)


@dataclass(frozen=True)
class WeightVector:
    """Rank weights w_1..w_m generated from a distortion function.

    Rank 1 is the most cited paper.
    """

    w: tuple[float, ...]

    @property
    def m(self) -> int:
        return len(self.w)


class Shape(enum.Enum):
    CONVEX = "convex"
    CONCAVE = "concave"
    NEITHER = "neither"
    LINEAR = "linear"


class WeightDirection(enum.Enum):
    INCREASING = "increasing"
    DECREASING = "decreasing"
    CONSTANT = "constant"
    NEITHER = "neither"


@dataclass(frozen=True)
class ResearcherProfile:
    """A researcher id and one citation count per paper.

    Citations are stored in non-increasing order whatever order they were
    given in. Zero-citation papers are kept: they count towards n_papers
    but never enter a core.
    """

    id: str
    citations: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if not isinstance(self.id, str) or not self.id:
            raise ProfileError("profile id must be a non-empty string")
        counts: list[int] = []
        for position, count in enumerate(self.citations, 1):
            if isinstance(count, bool) or not isinstance(count, numbers.Integral):
                raise ProfileError(
                    f"profile '{self.id}': citation #{position} is not an integer: "
                    f"{count!r}",
                )
            if count < 0:
                raise ProfileError(
                    f"profile '{self.id}': citation #{position} is negative: {count}",
                )
            counts.append(int(count))
        object.__setattr__(self, "citations", tuple(sorted(counts, reverse=True)))

    @property
    def n_papers(self) -> int:
        return len(self.citations)

    @property
    def total_citations(self) -> int:
        return sum(self.citations)


class CoreKind(enum.Enum):
    H_CORE = "h-core"
    G_CORE = "g-core"


@dataclass(frozen=True)
class CoreSet:
    """Citation counts of the papers in a core, most cited first.

    A g-core is padded with fictitious zero-citation papers when g exceeds
    the number of papers.
    """

    kind: CoreKind
    values: tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class ClassicIndices:
    """The classic indices of one profile (everything not tied to a distortion)."""

    h: int
    sharp_c_h: int  # Size of the h-core
    g: int
    n_papers: int
    total_citations: int
    a_index: float
    r_index: float
    r_m: float  # R over the whole h-core
    r_g: float  # R over the g-core
    r_n: float  # R over all citations
    euclidean: float


@dataclass(frozen=True)
class IndexReport:
    """Every index computed for one profile under one distortion."""

    id: str
    distortion: DistortionSpec
    h: int
    sharp_c_h: int
    g: int
    n_papers: int
    total_citations: int
    a_index: float
    r_index: float
    r_m: float
    r_g: float
    r_n: float
    euclidean: float
    ci_h: float
    ci_g: float
    ci_n: float


class Relation(enum.Enum):
    BETTER = "better"
    WORSE = "worse"
    EQUIVALENT = "equivalent"


@dataclass(frozen=True)
class ComparisonOutcome:
    """Result of comparing two reports, from the first report's side."""

    relation: Relation
    deciding_rule: int  # 1..7; odd rules 1-5 mean better, even mean worse, 7 a tie
    margin: float  # Absolute difference at the deciding level, 0 for rule 7

    def flipped(self) -> ComparisonOutcome:
        """The same outcome seen from the second report's side."""
        if self.relation is Relation.EQUIVALENT:
            return self
        if self.relation is Relation.BETTER:
            return ComparisonOutcome(Relation.WORSE, self.deciding_rule + 1, self.margin)
        return ComparisonOutcome(Relation.BETTER, self.deciding_rule - 1, self.margin)


@dataclass(frozen=True)
class RankResult:
    """Profiles ordered worst first, grouped into equivalence classes."""

    ordered_groups: tuple[tuple[str, ...], ...]
    reports: tuple[IndexReport, ...]  # In input order
    # steps[i] compares group i against group i + 1 (always WORSE)
    steps: tuple[ComparisonOutcome, ...]
    distortion: DistortionSpec
    _by_id: dict[str, IndexReport] = field(
        init=False, repr=False, compare=False, default_factory=dict,
    )

    def __post_init__(self) -> None:
        self._by_id.update((report.id, report) for report in self.reports)

    def report_for(self, profile_id: str) -> IndexReport:
        return self._by_id[profile_id]


class CurveKind(enum.Enum):
    DISTORTION_CURVE = "distortion"
    WEIGHT_BARS = "weights"


@dataclass(frozen=True)
class CurveSample:
    """Plot-ready points: (x, Q(x)) for a curve or (rank, weight) for bars."""

    kind: CurveKind
    points: tuple[tuple[float, float], ...]


class ProfileFormat(enum.Enum):
    CSV = "csv"
    JSON = "json"


class ReportFormat(enum.Enum):
    TABLE = "table"
    JSON = "json"
    CSV = "csv"


@dataclass(frozen=True)
class ProfileFile:
    """Profiles read from one input source."""

    format: ProfileFormat
    records: tuple[ResearcherProfile, ...]
