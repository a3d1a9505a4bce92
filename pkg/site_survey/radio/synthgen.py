"""
Seeded synthetic surveys drawn from a log-distance model with log-normal shadowing.

Randomness is frozen to two fully specified algorithms so that a seed
reproduces the same survey everywhere:

* uniform bits come from the Philox-4x64 counter-based generator keyed
  directly with the 64-bit seed (counter starting at zero), one 64-bit
  word per draw; the top 53 bits become a double in [0, 1);
* standard normals use the Box-Muller transform on consecutive word pairs,
  cosine branch first, so the k-th normal depends only on words 2*(k//2)
  and 2*(k//2)+1.

``generate_survey`` spends the first ``num_samples`` words on distances
(uniform in log10 distance) and the following words on shadowing.

numpy only supplies the integer words; every float is computed with the
``math`` module, one value at a time, so no CPU-specific kernel is involved.
"""

import logging
import math
from dataclasses import dataclass

import numpy as np

from .exceptions import DomainError
from .propagation import LogDistanceModel
from .units import ApConfig, Sample, Survey, check_location_id, require_finite, require_positive

logger = logging.getLogger(__name__)

MAX_SEED = 2 ** 64 - 1
_DOUBLE_UNIT = 2.0 ** -53


def _check_seed(seed):
    if isinstance(seed, bool) or not isinstance(seed, (int, np.integer)):
        raise DomainError(f'seed must be an integer, got {seed!r}')
    seed = int(seed)
    if not 0 <= seed <= MAX_SEED:
        raise DomainError(f'seed must be a 64-bit unsigned integer, got {seed}')
    return seed


def _bit_generator(seed):
    return np.random.Philox(key=_check_seed(seed))


def _uniforms(bit_generator, count):
    return [(word >> 11) * _DOUBLE_UNIT for word in bit_generator.random_raw(count).tolist()]


def _normals(bit_generator, count):
    u = _uniforms(bit_generator, 2 * ((count + 1) // 2))
    out = []
    for u1, u2 in zip(u[0::2], u[1::2]):
        radius = math.sqrt(-2.0 * math.log(1.0 - u1))
        angle = 2.0 * math.pi * u2
        out.append(radius * math.cos(angle))
        out.append(radius * math.sin(angle))
    return out[:count]


def gaussian_stream(seed, count):
    """``count`` standard normal values for ``seed``; longer streams extend shorter ones."""
    if isinstance(count, bool) or not isinstance(count, (int, np.integer)) or count < 0:
        raise DomainError(f'count must be a non-negative integer, got {count!r}')
    if count == 0:
        _check_seed(seed)
        return []
    return _normals(_bit_generator(seed), int(count))


@dataclass(frozen=True)
class SynthSpec:
    model: LogDistanceModel
    tx: float
    num_samples: int
    d_min: float
    d_max: float
    seed: int
    location_id: str = 'synthetic'
    frequency_mhz: float = 2432.0

    def __post_init__(self):
        if not isinstance(self.model, LogDistanceModel):
            raise DomainError('model must be a LogDistanceModel')
        object.__setattr__(self, 'tx', require_finite(self.tx, 'tx'))
        if isinstance(self.num_samples, bool) or not isinstance(self.num_samples, int) or self.num_samples < 1:
            raise DomainError(f'num_samples must be a positive integer, got {self.num_samples!r}')
        d_min = require_positive(self.d_min, 'd_min')
        d_max = require_positive(self.d_max, 'd_max')
        if d_min > d_max:
            raise DomainError(f'd_min {d_min} must not exceed d_max {d_max}')
        object.__setattr__(self, 'd_min', d_min)
        object.__setattr__(self, 'd_max', d_max)
        object.__setattr__(self, 'seed', _check_seed(self.seed))
        check_location_id(self.location_id)


def _log_uniform(u, d_min, d_max):
    if d_min == d_max:
        return d_min
    lo, hi = math.log10(d_min), math.log10(d_max)
    return min(max(10.0 ** (lo + u * (hi - lo)), d_min), d_max)


def _mean_rssi(model, tx, d):
    return tx - (model.pl_d0_db + 10.0 * model.n * math.log10(d / model.d0))


def generate_survey(spec):
    bit_generator = _bit_generator(spec.seed)
    distances = [_log_uniform(u, spec.d_min, spec.d_max) for u in _uniforms(bit_generator, spec.num_samples)]
    shadowing = _normals(bit_generator, spec.num_samples)
    model = spec.model
    samples = [
        Sample(d, _mean_rssi(model, spec.tx, d) - model.sigma_db * g) for d, g in zip(distances, shadowing)
    ]

    logger.debug(
        'generated %d samples for %s (n=%.4f, sigma=%.4f, seed=%d)',
        spec.num_samples, spec.location_id, model.n, model.sigma_db, spec.seed,
    )
    ap = ApConfig(name=f'{spec.location_id}-ap', tx_power=spec.tx, frequency_mhz=spec.frequency_mhz)
    return Survey(location_id=spec.location_id, samples=samples, ap=ap)
