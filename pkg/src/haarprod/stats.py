"""KS comparison of empirical spectra against the analytic limit law."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import limit_law, series
from .haar import trace_moment
from .limit_law import RadialLaw
from .spectra import EigenSample


@dataclass(frozen=True)
class KsReport:
    """One-sample KS statistic with its DKW sampling-noise threshold.

    The threshold sqrt(ln(2/delta) / (2 n)) bounds Monte-Carlo noise
    only; finite-size model bias is judged against the calibrated
    tolerances of the acceptance suite, reported separately.
    """

    statistic: float
    sample_size: int
    threshold: float
    passed: bool
    label: str


@dataclass(frozen=True)
class MomentRow:
    p: int
    empirical_mean: float
    std_error: float
    analytic: float
    z_score: float


def dkw_threshold(sample_size: int, delta: float) -> float:
    if sample_size < 1:
        raise ValueError("empty sample")
    if not (0.0 < delta < 1.0):
        raise ValueError(f"delta must lie in (0, 1), got {delta}")
    return float(np.sqrt(np.log(2.0 / delta) / (2.0 * sample_size)))


def ks_statistic(values: np.ndarray, cdf_values: np.ndarray) -> float:
    """Sup distance between the empirical CDF of `values` and a model CDF.

    cdf_values must be the model CDF evaluated at the *sorted* values.
    """
    n = len(values)
    if n == 0:
        raise ValueError("empty sample")
    grid = np.arange(1, n + 1) / n
    return float(max(np.max(grid - cdf_values), np.max(cdf_values - (grid - 1.0 / n))))


def ks_radial(sample: EigenSample, law: RadialLaw, delta: float = 0.001) -> KsReport:
    """KS distance of pooled eigenvalue radii against the radial CDF."""
    radii = np.sort(sample.radii)
    model = limit_law.cdf_many(law, radii)
    stat = ks_statistic(radii, model)
    thr = dkw_threshold(len(radii), delta)
    return KsReport(stat, len(radii), thr, stat <= thr, "radial")


def ks_radii_against_law(radii: np.ndarray, law: RadialLaw, delta: float = 0.001,
                         label: str = "radial") -> KsReport:
    """Same as ks_radial but for a bare radius array (e.g. exact draws)."""
    radii = np.sort(np.asarray(radii, dtype=float))
    model = limit_law.cdf_many(law, radii)
    stat = ks_statistic(radii, model)
    thr = dkw_threshold(len(radii), delta)
    return KsReport(stat, len(radii), thr, stat <= thr, label)


def ks_angular(sample: EigenSample, delta: float = 0.001) -> KsReport:
    """KS distance of eigenvalue angles against Uniform[0, 2*pi).

    Eigenvalues at the origin have no angle and are excluded.
    """
    angles = sample.angles[np.abs(sample.eigenvalues) > 0]
    if len(angles) == 0:
        raise ValueError("all eigenvalues at the origin; no angular sample")
    angles = np.sort(angles)
    stat = ks_statistic(angles, angles / (2.0 * np.pi))
    thr = dkw_threshold(len(angles), delta)
    return KsReport(stat, len(angles), thr, stat <= thr, "angular")


def analytic_moments(law: RadialLaw, p_max: int) -> list[float]:
    """Moments of the squared radius, from the closed-form S-transform."""
    s = series.theorem_s_series(law.alphas, order=max(p_max, 2))
    return series.moments_from_s(s)[:p_max]


def moment_rows(per_trial: np.ndarray, law: RadialLaw) -> list[MomentRow]:
    """Assemble moment rows from a (trials, p_max) table of trace moments."""
    per_trial = np.atleast_2d(per_trial)
    p_max = per_trial.shape[1]
    analytic = analytic_moments(law, p_max)
    rows = []
    for p in range(1, p_max + 1):
        emp = per_trial[:, p - 1]
        mean = float(emp.mean())
        se = float(emp.std(ddof=1) / np.sqrt(len(emp))) if len(emp) > 1 else float("nan")
        z = (mean - analytic[p - 1]) / se if se and se > 0 else float("nan")
        rows.append(MomentRow(p, mean, se, analytic[p - 1], float(z)))
    return rows


def moment_report(matrices, law: RadialLaw, p_max: int) -> list[MomentRow]:
    """Compare mean normalized trace moments across trials to the limit."""
    table = np.array([[trace_moment(b, p) for p in range(1, p_max + 1)] for b in matrices])
    return moment_rows(table, law)
