from __future__ import annotations

from importlib.metadata import version

from ci_metrics._choquet import choquet_value
from ci_metrics._choquet import ci_g
from ci_metrics._choquet import ci_h
from ci_metrics._choquet import ci_n
from ci_metrics._choquet import compute_report
from ci_metrics._choquet import staircase_integral
from ci_metrics._data import IDENTITY
from ci_metrics._data import CIMetricsError
from ci_metrics._data import ClassicIndices
from ci_metrics._data import ComparisonOutcome
from ci_metrics._data import CoreKind
from ci_metrics._data import CoreSet
from ci_metrics._data import CurveKind
from ci_metrics._data import CurveSample
from ci_metrics._data import DistortionError
from ci_metrics._data import DistortionFamily
from ci_metrics._data import DistortionSpec
from ci_metrics._data import DomainError
from ci_metrics._data import IndexReport
from ci_metrics._data import ProfileError
from ci_metrics._data import ProfileFile
from ci_metrics._data import ProfileFormat
from ci_metrics._data import RankResult
from ci_metrics._data import Relation
from ci_metrics._data import ReportFormat
from ci_metrics._data import ResearcherProfile
from ci_metrics._data import Shape
from ci_metrics._data import WeightDirection
from ci_metrics._data import WeightVector
from ci_metrics._distortion import classify_shape
from ci_metrics._distortion import dominates
from ci_metrics._distortion import evaluate
from ci_metrics._distortion import format_distortion
from ci_metrics._distortion import make_weights
from ci_metrics._distortion import parse_distortion
from ci_metrics._distortion import weight_direction
from ci_metrics._indices import classic_indices
from ci_metrics._indices import g_core
from ci_metrics._indices import g_index
from ci_metrics._indices import h_core
from ci_metrics._indices import h_index
from ci_metrics._io import dump_profiles
from ci_metrics._io import emit_curves
from ci_metrics._io import emit_report
from ci_metrics._io import emit_reports
from ci_metrics._io import load_profiles
from ci_metrics._io import parse_profiles
from ci_metrics._io import sample_curves
from ci_metrics._main import main
from ci_metrics._ranking import DEFAULT_TOLERANCE
from ci_metrics._ranking import compare
from ci_metrics._ranking import format_chain
from ci_metrics._ranking import rank
from ci_metrics._special import normal_cdf
from ci_metrics._special import normal_quantile
from ci_metrics._special import regularized_beta

__version__ = version("ci-metrics")

__all__ = [
    # Data types
    "DistortionFamily",
    "DistortionSpec",
    "IDENTITY",
    "WeightVector",
    "Shape",
    "WeightDirection",
    "ResearcherProfile",
    "CoreKind",
    "CoreSet",
    "ClassicIndices",
    "IndexReport",
    "Relation",
    "ComparisonOutcome",
    "RankResult",
    "CurveKind",
    "CurveSample",
    "ProfileFormat",
    "ProfileFile",
    "ReportFormat",
    # Errors
    "CIMetricsError",
    "DistortionError",
    "DomainError",
    "ProfileError",
    # Special functions
    "normal_cdf",
    "normal_quantile",
    "regularized_beta",
    # Distortions
    "evaluate",
    "make_weights",
    "classify_shape",
    "dominates",
    "weight_direction",
    "parse_distortion",
    "format_distortion",
    # Classic indices
    "h_index",
    "h_core",
    "g_index",
    "g_core",
    "classic_indices",
    # Choquet integral and CI indices
    "choquet_value",
    "staircase_integral",
    "ci_h",
    "ci_g",
    "ci_n",
    "compute_report",
    # Ranking
    "DEFAULT_TOLERANCE",
    "compare",
    "rank",
    "format_chain",
    # Input / output
    "load_profiles",
    "parse_profiles",
    "dump_profiles",
    "emit_report",
    "emit_reports",
    "sample_curves",
    "emit_curves",
    # CLI
    "main",
    # Metadata
    "__version__",
]
