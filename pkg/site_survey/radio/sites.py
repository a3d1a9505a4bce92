"""
Reference sites with published path loss exponents and shadowing deviations.

The raw readings behind these figures are not available, so the catalogue
only parameterises synthetic surveys and test fixtures.
"""

from dataclasses import dataclass

from .exceptions import DomainError
from .propagation import LogDistanceModel
from .synthgen import SynthSpec

INDOOR = 'indoor'
OUTDOOR = 'outdoor'


@dataclass(frozen=True)
class ReferenceSite:
    name: str
    environment: str
    n: float
    sigma_db: float
    sample_count: int

    def model(self, pl_d0_db=40.0, d0=1.0):
        return LogDistanceModel(pl_d0_db=pl_d0_db, d0=d0, n=self.n, sigma_db=self.sigma_db)

    def synth_spec(self, pl_d0_db=40.0, d0=1.0, tx=23.0, seed=0, d_min=1.0, d_max=30.0, num_samples=None):
        return SynthSpec(
            model=self.model(pl_d0_db, d0),
            tx=tx,
            num_samples=self.sample_count if num_samples is None else num_samples,
            d_min=d_min,
            d_max=d_max,
            seed=seed,
            location_id=self.name,
        )


_CATALOGUE = (
    ReferenceSite('room1', INDOOR, 3.45, 13.92, 22),
    ReferenceSite('room2', INDOOR, 3.36, 11.10, 19),
    ReferenceSite('corridor1', INDOOR, 1.88, 9.45, 28),
    ReferenceSite('corridor2', INDOOR, 1.09, 5.25, 28),
    ReferenceSite('location1', OUTDOOR, 0.48, 4.32, 26),
    ReferenceSite('location2', OUTDOOR, 0.30, 4.32, 20),
)


def all_sites():
    return list(_CATALOGUE)


def get_site(name):
    key = name.strip().lower().replace(' ', '').replace('_', '')
    for site in _CATALOGUE:
        if site.name == key:
            return site
    known = ', '.join(site.name for site in _CATALOGUE)
    raise DomainError(f'unknown reference site {name!r} (known: {known})')
