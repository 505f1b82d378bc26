"""scikit-learn style front end.

``X`` is a collection of annual citation series: a 2-D array-like of shape
``(n_series, n_years)``, a ragged list of sequences, a :class:`Corpus`, or a
list of :class:`CitationSeries`. Column ``t`` is the count ``t`` years after
publication.
"""
from __future__ import annotations

from numbers import Integral

import numpy as np
from sklearn.base import BaseEstimator, ClassifierMixin, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .angles import angle_profile
from .beauty import beauty_b, beauty_b_prime
from .classify import ClassResult, CriteriaConfig, Tier, assign_tiers, evidence_for, label_for

FEATURE_NAMES = ("beta1", "beta2", "betam", "B", "B_prime", "SCa", "SCb", "AC_SG", "AC_SB", "dt")
LABELS = ("asb", "normal", "sb", "sg")


def check_series(X, *, min_length: int = 3) -> list[list[int]]:
    """Validate ``X`` and return it as a list of integer count lists."""
    if hasattr(X, "to_numpy"):
        X = X.to_numpy()
    elif hasattr(X, "series") and not isinstance(X, np.ndarray):
        X = X.series
    if isinstance(X, np.ndarray):
        if X.ndim != 2:
            raise ValueError(f"expected a 2-D array of counts, got shape {X.shape}")
        rows = list(X)
    else:
        try:
            rows = list(X)
        except TypeError:
            raise ValueError("X must be a collection of citation series") from None
    if not rows:
        raise ValueError("X contains no series")
    out = []
    for i, row in enumerate(rows):
        if hasattr(row, "counts"):
            row = row.counts
        arr = np.asarray(row)
        if arr.ndim != 1:
            raise ValueError(f"series {i} is not one-dimensional")
        if arr.dtype.kind not in "iuf" and arr.dtype != bool:
            raise ValueError(f"series {i} has non-numeric counts")
        if arr.dtype.kind == "f":
            if not np.all(np.isfinite(arr)):
                raise ValueError(f"series {i} contains NaN or inf")
            if not np.all(arr == np.round(arr)):
                raise ValueError(f"series {i} has non-integer counts")
        if np.any(arr < 0):
            raise ValueError(f"series {i} has negative counts")
        if arr.size < min_length:
            raise ValueError(f"series {i} has {arr.size} years; need at least {min_length}")
        out.append([int(v) for v in arr])
    return out


class CitationAngleClassifier(ClassifierMixin, TransformerMixin, BaseEstimator):
    """Label citation series as ``sg``, ``sb``, ``asb`` or ``normal``.

    Parameters mirror :class:`CriteriaConfig`; ``cut`` is the tier a series
    must reach for its SG/SB label (``"typical"`` by default).

    ``fit`` only validates the parameters; the criteria are fixed rules, so
    ``y`` is accepted for pipeline compatibility and ignored. ``transform``
    returns the evidence matrix (angles in degrees, ``nan`` for undefined
    means).
    """

    def __init__(self, beta1_possible_deg=60.0, beta1_higher_deg=88.0, beta2_possible_deg=5.0,
                 beta2_higher_deg=30.0, sca_min=20.0, scb_min=20.0, ac_sg_max=10.0, ac_sb_max=2.0,
                 dt_min=10, window_len=4, ac_sg_window="after_peak", sleep_from="after_early_peak",
                 cut="typical"):
        self.beta1_possible_deg = beta1_possible_deg
        self.beta1_higher_deg = beta1_higher_deg
        self.beta2_possible_deg = beta2_possible_deg
        self.beta2_higher_deg = beta2_higher_deg
        self.sca_min = sca_min
        self.scb_min = scb_min
        self.ac_sg_max = ac_sg_max
        self.ac_sb_max = ac_sb_max
        self.dt_min = dt_min
        self.window_len = window_len
        self.ac_sg_window = ac_sg_window
        self.sleep_from = sleep_from
        self.cut = cut

    @classmethod
    def from_config(cls, config: CriteriaConfig, **kwargs):
        params = {k: v for k, v in config.to_dict().items() if k != "cs_floor"}
        return cls(**params, **kwargs)

    def fit(self, X, y=None):
        params = self.get_params()
        cut = Tier.parse(params.pop("cut"))
        if cut is Tier.NONE:
            raise ValueError("cut must be possible, typical or higher")
        for name in ("dt_min", "window_len"):
            if isinstance(params[name], Integral):
                params[name] = int(params[name])
        self.config_ = CriteriaConfig(**params)
        self.cut_ = cut
        self.classes_ = np.array(LABELS)
        check_series(X)
        return self

    def classify(self, X) -> list[ClassResult]:
        check_is_fitted(self, "config_")
        results = []
        for counts in check_series(X):
            ev = evidence_for(counts, self.config_)
            results.append(ClassResult(*assign_tiers(ev, self.config_), ev))
        return results

    def predict(self, X):
        return np.array([label_for(r, self.cut_) for r in self.classify(X)])

    def transform(self, X):
        check_is_fitted(self, "config_")
        rows = []
        for counts in check_series(X):
            profile = angle_profile(counts)
            ev = evidence_for(counts, self.config_, profile)
            rows.append([
                ev.beta1_deg, ev.beta2_deg, profile.betam_deg, beauty_b(counts),
                beauty_b_prime(counts), ev.sca, ev.scb,
                np.nan if ev.ac_sg is None else ev.ac_sg,
                np.nan if ev.ac_sb is None else ev.ac_sb, ev.dt,
            ])
        return np.asarray(rows, dtype=float)

    def get_feature_names_out(self, input_features=None):
        return np.array(FEATURE_NAMES, dtype=object)
