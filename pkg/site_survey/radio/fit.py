"""
Least-squares estimation of a log-distance model from survey samples.

Measured path loss ``Pt - RSSI`` is regressed on ``log10(d / d0)``; the
slope divided by 10 is the path loss exponent, the intercept is the path
loss at the reference distance and the residual standard error (N - 2
degrees of freedom) is the shadowing deviation.
"""

import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .exceptions import (
    DegenerateAbscissaError,
    DomainError,
    InsufficientDataError,
    NoSurveysError,
    SurveyError,
)
from .propagation import LogDistanceModel
from .units import Survey, require_positive

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FitResult:
    model: LogDistanceModel
    r_squared: float
    num_samples: int
    residuals: tuple
    slope_standard_error: float = 0.0

    def __post_init__(self):
        if self.num_samples != len(self.residuals):
            raise DomainError('num_samples must match the number of residuals')


class LocationFit(NamedTuple):
    """One row of a multi-location fit: either ``result`` or ``error`` is set."""

    location_id: str
    result: FitResult | None
    error: SurveyError | None = None

    @property
    def ok(self):
        return self.error is None


def fit_log_distance(survey, d0=1.0):
    d0 = require_positive(d0, 'd0')
    if len(survey.samples) < 2:
        raise InsufficientDataError(
            f'insufficient data: location {survey.location_id!r} needs at least 2 samples, '
            f'has {len(survey.samples)}'
        )

    distances = np.array(survey.distances, dtype=float)
    if np.any(distances <= 0):
        raise DomainError(f'location {survey.location_id!r} has a non-positive distance')
    if np.all(distances == distances[0]):
        raise DegenerateAbscissaError(
            f'degenerate abscissa: every sample of {survey.location_id!r} is at {distances[0]!r} m'
        )

    y = survey.ap.tx_power - np.array(survey.rssi_values, dtype=float)
    x = np.log10(distances / d0)
    design = np.c_[np.ones(len(x)), x]
    (intercept, slope), *_ = np.linalg.lstsq(design, y, rcond=None)

    residuals = y - (intercept + slope * x)
    num_samples = len(y)
    ss_res = float(residuals @ residuals)
    ss_tot = float(np.sum((y - y.mean()) ** 2))
    sxx = float(np.sum((x - x.mean()) ** 2))

    sigma = math.sqrt(ss_res / (num_samples - 2)) if num_samples > 2 else 0.0
    if ss_tot > 0:
        r_squared = min(1.0, max(0.0, 1.0 - ss_res / ss_tot))
    else:
        r_squared = 1.0

    result = FitResult(
        model=LogDistanceModel(pl_d0_db=float(intercept), d0=d0, n=float(slope) / 10.0, sigma_db=sigma),
        r_squared=r_squared,
        num_samples=num_samples,
        residuals=tuple(float(r) for r in residuals),
        slope_standard_error=sigma / math.sqrt(sxx) / 10.0,
    )
    logger.debug(
        'fitted %s: n=%.4f pl_d0=%.4f sigma=%.4f r2=%.4f (N=%d)',
        survey.location_id, result.model.n, result.model.pl_d0_db, sigma, r_squared, num_samples,
    )
    return result


def _fit_location(survey, d0):
    try:
        return LocationFit(survey.location_id, fit_log_distance(survey, d0))
    except SurveyError as exc:
        logger.warning('fit failed for %s: %s', survey.location_id, exc)
        return LocationFit(survey.location_id, None, exc)


def fit_many(surveys, d0=1.0, workers=1):
    """Fit every survey independently; failures become per-location error rows."""
    surveys = list(surveys)
    if not surveys:
        raise NoSurveysError()
    if isinstance(workers, bool) or not isinstance(workers, int) or workers < 1:
        raise DomainError(f'workers must be a positive integer, got {workers!r}')
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(lambda survey: _fit_location(survey, d0), surveys))
    return [_fit_location(survey, d0) for survey in surveys]


def pool_surveys(surveys, location_id='overall'):
    """Concatenate the samples of several surveys taken with the same transmit power."""
    surveys = list(surveys)
    if not surveys:
        raise NoSurveysError()
    ap = surveys[0].ap
    mismatched = [s.location_id for s in surveys if s.ap.tx_power != ap.tx_power]
    if mismatched:
        raise DomainError(f'cannot pool surveys with different transmit power: {", ".join(mismatched)}')
    samples = [sample for survey in surveys for sample in survey.samples]
    return Survey(location_id=location_id, samples=samples, ap=ap)
