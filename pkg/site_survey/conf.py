"""Defaults for the radio toolkit taken from ``settings.SITE_SURVEY``."""

from django.conf import settings

from .radio import RegionTable
from .radio.planner import DEFAULT_MARGIN_DB

DEFAULTS = {
    'DEFAULT_D0_M': 1.0,
    'DEFAULT_FREQUENCY_MHZ': 2432.0,
    'REGION_RSSI_BOUNDS': [-48.0, -56.0, -64.0, -72.0, -80.0],
    'REGION_RANGE_BOUNDS': [4.0, 10.0, 25.0],
    'MARGIN_DB': DEFAULT_MARGIN_DB,
    'FIT_WORKERS': 1,
}


def survey_setting(key):
    return getattr(settings, 'SITE_SURVEY', {}).get(key, DEFAULTS[key])


def default_d0():
    return float(survey_setting('DEFAULT_D0_M'))


def default_frequency_mhz():
    return float(survey_setting('DEFAULT_FREQUENCY_MHZ'))


def default_margin_db():
    return float(survey_setting('MARGIN_DB'))


def fit_workers():
    return int(survey_setting('FIT_WORKERS'))


def default_region_table():
    return RegionTable(
        rssi_bounds=tuple(survey_setting('REGION_RSSI_BOUNDS')),
        range_bounds=tuple(survey_setting('REGION_RANGE_BOUNDS')),
    )
