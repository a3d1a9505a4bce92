"""
Closed-form propagation models.

Free space follows the Friis transmission equation with a dimensionless
system loss factor ``L >= 1``. The log-distance family is the deterministic
mean ``PL(d0) + 10 n log10(d / d0)``; the shadowing term only appears when
sampling (see ``synthgen``).

Log-distance helpers accept a scalar distance or a numpy array of
distances; a scalar in gives a float out.
"""

import math
from dataclasses import dataclass

import numpy as np

from .exceptions import DomainError, ModelNotInvertibleError
from .units import ApConfig, dbm_to_mw, mw_to_dbm, require_finite, require_positive

SPEED_OF_LIGHT = 299792458.0

# The free-space parameters are exactly the AP configuration: Pt, Gt, Gr, L and f.
FreeSpaceParams = ApConfig


@dataclass(frozen=True)
class LogDistanceModel:
    pl_d0_db: float
    d0: float = 1.0
    n: float = 2.0
    sigma_db: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, 'pl_d0_db', require_finite(self.pl_d0_db, 'pl_d0_db'))
        object.__setattr__(self, 'd0', require_positive(self.d0, 'd0'))
        object.__setattr__(self, 'n', require_finite(self.n, 'n'))
        sigma_db = require_finite(self.sigma_db, 'sigma_db')
        if sigma_db < 0:
            raise DomainError(f'sigma_db must not be negative, got {sigma_db!r}')
        object.__setattr__(self, 'sigma_db', sigma_db)

    @property
    def invertible(self):
        return self.n > 0


def _distances(d):
    arr = np.asarray(d, dtype=float)
    if not np.all(np.isfinite(arr)) or np.any(arr <= 0):
        raise DomainError(f'distance must be positive and finite, got {d!r}')
    return arr


def _unwrap(result):
    return float(result) if np.ndim(result) == 0 else result


def wavelength_m(frequency_mhz):
    frequency_mhz = require_positive(frequency_mhz, 'frequency_mhz')
    return SPEED_OF_LIGHT / (frequency_mhz * 1e6)


def _free_space_ratio(params, d):
    """Linear Pr/Pt for free space: Gt Gr W^2 / ((4 pi)^2 d^2 L)."""
    d = require_positive(d, 'distance')
    wavelength = wavelength_m(params.frequency_mhz)
    gain = params.antenna_gain_tx * params.antenna_gain_rx
    return gain * wavelength ** 2 / ((4.0 * math.pi) ** 2 * d ** 2 * params.system_loss)


def friis_received_power(params, d):
    """Received power in dBm at ``d`` meters under free-space propagation."""
    pr_mw = dbm_to_mw(params.tx_power) * _free_space_ratio(params, d)
    return mw_to_dbm(pr_mw)


def free_space_path_loss_db(params, d):
    return -10.0 * math.log10(_free_space_ratio(params, d))


def log_distance_path_loss_db(model, d):
    d = _distances(d)
    return _unwrap(model.pl_d0_db + 10.0 * model.n * np.log10(d / model.d0))


def predict_rssi(model, tx, d):
    """Mean received power in dBm at ``d`` for transmit power ``tx`` (dBm)."""
    tx = require_finite(tx, 'tx')
    return _unwrap(tx - np.asarray(log_distance_path_loss_db(model, d)))


def coverage_radius(model, tx, threshold):
    """Distance at which the predicted RSSI falls to ``threshold`` dBm."""
    tx = require_finite(tx, 'tx')
    threshold = require_finite(threshold, 'threshold')
    if not model.invertible:
        raise ModelNotInvertibleError(
            f'model not invertible: path loss exponent must be positive, got {model.n!r}'
        )
    if threshold >= tx:
        raise DomainError(f'threshold {threshold!r} dBm must be below the transmit power {tx!r} dBm')
    return model.d0 * 10.0 ** ((tx - threshold - model.pl_d0_db) / (10.0 * model.n))
