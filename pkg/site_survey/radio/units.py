"""
Domain values and dB/dBm arithmetic shared by the whole toolkit.

Distances are meters everywhere past ingestion; powers are dBm and only
become milliwatts inside the free-space evaluation. All logs are base 10.
"""

import math
from dataclasses import dataclass

from .exceptions import DomainError

PowerDbm = float
DistanceMeters = float

FOOT_IN_METERS = 0.3048
MAX_LOCATION_ID_LENGTH = 100


def require_finite(value, name='value'):
    try:
        value = float(value)
    except (TypeError, ValueError):
        raise DomainError(f'{name} must be a real number, got {value!r}') from None
    if not math.isfinite(value):
        raise DomainError(f'{name} must be finite, got {value!r}')
    return value


def check_location_id(location_id):
    """A location id must survive a trip through a survey CSV unchanged."""
    if not isinstance(location_id, str) or not location_id.strip():
        raise DomainError('location_id must not be empty')
    if location_id != location_id.strip():
        raise DomainError(f'location_id {location_id!r} has leading or trailing whitespace')
    if location_id.startswith('#'):
        raise DomainError(f'location_id {location_id!r} must not start with "#"')
    if '\n' in location_id or '\r' in location_id:
        raise DomainError(f'location_id {location_id!r} must be a single line')
    if len(location_id) > MAX_LOCATION_ID_LENGTH:
        raise DomainError(f'location_id is longer than {MAX_LOCATION_ID_LENGTH} characters')
    return location_id


def require_positive(value, name='value'):
    value = require_finite(value, name)
    if value <= 0:
        raise DomainError(f'{name} must be positive, got {value!r}')
    return value


def mw_to_dbm(power_mw):
    power_mw = require_positive(power_mw, 'power_mw')
    return 10.0 * math.log10(power_mw)


def dbm_to_mw(power_dbm):
    power_dbm = require_finite(power_dbm, 'power_dbm')
    return 10.0 ** (power_dbm / 10.0)


def path_loss_db(tx, rx):
    """Path loss in dB between a transmit power and a received power, both dBm."""
    return require_finite(tx, 'tx') - require_finite(rx, 'rx')


def feet_to_meters(d_feet):
    d_feet = require_finite(d_feet, 'd_feet')
    if d_feet < 0:
        raise DomainError(f'distance in feet must not be negative, got {d_feet!r}')
    return d_feet * FOOT_IN_METERS


@dataclass(frozen=True)
class Sample:
    """One field reading: distance from the reference point and the measured RSSI."""

    distance: DistanceMeters
    rssi: PowerDbm

    def __post_init__(self):
        object.__setattr__(self, 'distance', require_positive(self.distance, 'distance'))
        object.__setattr__(self, 'rssi', require_finite(self.rssi, 'rssi'))


@dataclass(frozen=True)
class ApConfig:
    """
    Access point configuration active during a survey.

    Gains and ``system_loss`` are linear factors (1 means 0 dB).
    ``sensitivity`` is the receiver sensitivity used for planning and may be
    left unset when only fitting or predicting.
    """

    name: str = 'ap'
    tx_power: PowerDbm = 23.0
    frequency_mhz: float = 2432.0
    sensitivity: PowerDbm | None = None
    antenna_gain_tx: float = 1.0
    antenna_gain_rx: float = 1.0
    system_loss: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, 'tx_power', require_finite(self.tx_power, 'tx_power'))
        object.__setattr__(self, 'frequency_mhz', require_positive(self.frequency_mhz, 'frequency_mhz'))
        object.__setattr__(self, 'antenna_gain_tx', require_positive(self.antenna_gain_tx, 'antenna_gain_tx'))
        object.__setattr__(self, 'antenna_gain_rx', require_positive(self.antenna_gain_rx, 'antenna_gain_rx'))
        system_loss = require_finite(self.system_loss, 'system_loss')
        if system_loss < 1:
            raise DomainError(f'system_loss must be >= 1, got {system_loss!r}')
        object.__setattr__(self, 'system_loss', system_loss)
        if self.sensitivity is not None:
            object.__setattr__(self, 'sensitivity', require_finite(self.sensitivity, 'sensitivity'))


@dataclass(frozen=True)
class Survey:
    """The samples recorded at one named location under one AP configuration."""

    location_id: str
    samples: tuple
    ap: ApConfig

    def __post_init__(self):
        check_location_id(self.location_id)
        samples = tuple(self.samples)
        if not samples:
            raise DomainError(f'survey {self.location_id!r} has no samples')
        for sample in samples:
            if not isinstance(sample, Sample):
                raise DomainError(f'survey {self.location_id!r} holds a non-sample value {sample!r}')
        object.__setattr__(self, 'samples', samples)

    @property
    def distances(self):
        return [sample.distance for sample in self.samples]

    @property
    def rssi_values(self):
        return [sample.rssi for sample in self.samples]

    def __len__(self):
        return len(self.samples)
