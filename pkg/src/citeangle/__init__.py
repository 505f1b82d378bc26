"""Citation angles, beauty coefficients and smart-girl / sleeping-beauty classification."""
from .angles import (AngleProfile, angle_profile, beta_differential, beta_gradient, citation_angle,
                     find_peak, half_split)
from .beauty import BeautyScores, beauty_b, beauty_b_prime, beauty_scores, line_value
from .classify import (ClassResult, ConfigError, CriteriaConfig, Evidence, Tier, classify,
                       load_config, mean_ac, window_sum)
from .estimator import CitationAngleClassifier, check_series
from .report import CorpusReport, aggregate_by_category, classify_corpus, emit_curve_data
from .series import (CitationSeries, Corpus, SeriesError, parse_long, parse_wide, read_corpus,
                     validate)
from .sleep import SleepProfile, detect_sleep, grand_sb_density
from .synth import GenSpec, generate_corpus, generate_series

__version__ = "0.1.0"

__all__ = [
    "AngleProfile", "BeautyScores", "CitationAngleClassifier", "CitationSeries", "ClassResult",
    "ConfigError", "Corpus", "CorpusReport", "CriteriaConfig", "Evidence", "GenSpec",
    "SeriesError", "SleepProfile", "Tier", "aggregate_by_category", "angle_profile", "beauty_b",
    "beauty_b_prime", "beauty_scores", "beta_differential", "beta_gradient", "check_series",
    "citation_angle", "classify", "classify_corpus", "detect_sleep", "emit_curve_data",
    "find_peak", "generate_corpus", "generate_series", "grand_sb_density", "half_split",
    "line_value", "load_config", "mean_ac", "parse_long", "parse_wide", "read_corpus",
    "validate", "window_sum",
]
