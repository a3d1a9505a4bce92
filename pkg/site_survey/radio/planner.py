"""
Access point planning by link margin.

A location needs a new access point when its weakest reading sits less than
``margin_threshold_db`` above the receiver sensitivity. The comparison is
strict: a location exactly at the threshold margin is not flagged.
"""

import logging
from dataclasses import dataclass, field

from .exceptions import DomainError, NoSurveysError, SurveyError
from .units import require_finite

logger = logging.getLogger(__name__)

DEFAULT_MARGIN_DB = 10.0


@dataclass(frozen=True)
class PlanEntry:
    location_id: str
    worst_rssi: float | None
    margin_db: float | None
    needs_new_ap: bool
    error: str | None = None

    @property
    def ok(self):
        return self.error is None


@dataclass(frozen=True)
class PlanReport:
    sensitivity: float
    margin_threshold_db: float
    entries: tuple = field(default_factory=tuple)

    @property
    def flagged(self):
        return [entry for entry in self.entries if entry.ok and entry.needs_new_ap]

    @property
    def failed(self):
        return [entry for entry in self.entries if not entry.ok]


def link_margin_db(rssi, sensitivity):
    return require_finite(rssi, 'rssi') - require_finite(sensitivity, 'sensitivity')


def _threshold(margin_threshold_db):
    margin_threshold_db = require_finite(margin_threshold_db, 'margin_threshold_db')
    if margin_threshold_db < 0:
        raise DomainError(f'margin threshold must not be negative, got {margin_threshold_db!r}')
    return margin_threshold_db


def needs_new_ap(rssi, sensitivity, margin_threshold_db=DEFAULT_MARGIN_DB):
    return link_margin_db(rssi, sensitivity) < _threshold(margin_threshold_db)


def _plan_location(survey, sensitivity, margin_threshold_db):
    location_id = getattr(survey, 'location_id', '?')
    try:
        if not survey.samples:
            raise DomainError(f'survey {location_id!r} has no samples')
        worst = min(sample.rssi for sample in survey.samples)
        margin = link_margin_db(worst, sensitivity)
        return PlanEntry(location_id, worst, margin, margin < margin_threshold_db)
    except SurveyError as exc:
        logger.warning('planning failed for %s: %s', location_id, exc)
        return PlanEntry(location_id, None, None, False, error=str(exc))


def plan_surveys(surveys, sensitivity, margin_threshold_db=DEFAULT_MARGIN_DB):
    """Apply the margin rule to the weakest sample of every survey, in input order."""
    surveys = list(surveys)
    if not surveys:
        raise NoSurveysError()
    sensitivity = require_finite(sensitivity, 'sensitivity')
    margin_threshold_db = _threshold(margin_threshold_db)
    entries = tuple(_plan_location(survey, sensitivity, margin_threshold_db) for survey in surveys)
    logger.debug('planned %d locations, %d flagged', len(entries), sum(e.needs_new_ap for e in entries))
    return PlanReport(sensitivity=sensitivity, margin_threshold_db=margin_threshold_db, entries=entries)
