"""
Coverage regions and heatmap rasters around a single access point.

Each region owns its lower (weaker) RSSI bound and excludes the upper one;
region A extends upward without limit and anything weaker than the last
bound is out of coverage. Distance rings work the same way with region A
reaching down to 0 m and region D unbounded outward.
"""

import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

import numpy as np

from .exceptions import DomainError
from .propagation import coverage_radius, predict_rssi
from .units import require_finite

logger = logging.getLogger(__name__)


class Region(Enum):
    A = 'A'
    B = 'B'
    C = 'C'
    D = 'D'
    OUT_OF_COVERAGE = 'OUT'


_BANDS = (Region.A, Region.B, Region.C, Region.D)


@dataclass(frozen=True)
class RegionTable:
    """
    Thresholds delimiting the coverage regions.

    ``rssi_bounds`` lists five dBm values strongest first: the top edge of A,
    then the lower bounds of A, B, C and D. ``range_bounds`` lists the outer
    edges of A, B and C in meters.
    """

    rssi_bounds: tuple = (-48.0, -56.0, -64.0, -72.0, -80.0)
    range_bounds: tuple = (4.0, 10.0, 25.0)

    def __post_init__(self):
        rssi = tuple(require_finite(v, 'rssi bound') for v in self.rssi_bounds)
        ranges = tuple(require_finite(v, 'range bound') for v in self.range_bounds)
        if len(rssi) != 5:
            raise DomainError(f'expected 5 rssi bounds, got {len(rssi)}')
        if len(ranges) != 3:
            raise DomainError(f'expected 3 range bounds, got {len(ranges)}')
        if any(a <= b for a, b in zip(rssi, rssi[1:])):
            raise DomainError(f'rssi bounds must be strictly descending: {rssi}')
        if ranges[0] <= 0 or any(a >= b for a, b in zip(ranges, ranges[1:])):
            raise DomainError(f'range bounds must be positive and strictly ascending: {ranges}')
        object.__setattr__(self, 'rssi_bounds', rssi)
        object.__setattr__(self, 'range_bounds', ranges)

    def lower_bound(self, region):
        """Weakest RSSI still inside ``region``."""
        return self.rssi_bounds[_BANDS.index(region) + 1]


DEFAULT_REGION_TABLE = RegionTable()


def classify_rssi(rssi, table=DEFAULT_REGION_TABLE):
    rssi = require_finite(rssi, 'rssi')
    for region in _BANDS:
        if rssi >= table.lower_bound(region):
            return region
    return Region.OUT_OF_COVERAGE


def classify_distance(d, table=DEFAULT_REGION_TABLE):
    d = require_finite(d, 'distance')
    if d < 0:
        raise DomainError(f'distance must not be negative, got {d!r}')
    for region, outer_edge in zip(_BANDS, table.range_bounds):
        if d < outer_edge:
            return region
    return Region.D


def region_radii(model, tx, table=DEFAULT_REGION_TABLE):
    """Outer radius of every region ring: where the prediction reaches the region's lower bound."""
    radii = {}
    for region in _BANDS:
        bound = table.lower_bound(region)
        radii[region] = 0.0 if bound >= tx else coverage_radius(model, tx, bound)
    return radii


class HeatmapCell(NamedTuple):
    x: float
    y: float
    rssi: float
    region: Region


@dataclass(frozen=True, eq=False)
class HeatmapGrid:
    """
    Predicted RSSI raster; ``rssi[row, col]`` is the cell whose center is
    ``(xs[col], ys[row])`` and rows run from ``y_min`` upward.
    """

    ap_x: float
    ap_y: float
    x_min: float
    x_max: float
    y_min: float
    y_max: float
    resolution: float
    xs: np.ndarray
    ys: np.ndarray
    rssi: np.ndarray
    regions: tuple

    @property
    def shape(self):
        return self.rssi.shape

    def cells(self):
        """Every cell in row-major order."""
        for row, y in enumerate(self.ys):
            for col, x in enumerate(self.xs):
                yield HeatmapCell(float(x), float(y), float(self.rssi[row, col]), self.regions[row][col])

    def region_counts(self):
        counts = {region: 0 for region in Region}
        for row in self.regions:
            for region in row:
                counts[region] += 1
        return counts


def _cell_count(span, resolution):
    # Absorb float noise such as 1.0 / 0.1 = 10.000000000000002.
    return max(1, math.ceil(round(span / resolution, 9)))


def generate_heatmap(model, tx, ap_x, ap_y, extent, resolution, table=DEFAULT_REGION_TABLE):
    tx = require_finite(tx, 'tx')
    ap_x = require_finite(ap_x, 'ap_x')
    ap_y = require_finite(ap_y, 'ap_y')
    try:
        x_min, x_max, y_min, y_max = (require_finite(v, 'extent') for v in extent)
    except (TypeError, ValueError):
        raise DomainError(f'extent must be (x_min, x_max, y_min, y_max), got {extent!r}') from None
    resolution = require_finite(resolution, 'resolution')
    if resolution <= 0:
        raise DomainError(f'resolution must be positive, got {resolution!r}')
    if not (x_min < x_max and y_min < y_max):
        raise DomainError(f'extent is empty: {extent!r}')

    xs = x_min + (np.arange(_cell_count(x_max - x_min, resolution)) + 0.5) * resolution
    ys = y_min + (np.arange(_cell_count(y_max - y_min, resolution)) + 0.5) * resolution
    grid_x, grid_y = np.meshgrid(xs, ys)
    distances = np.maximum(np.hypot(grid_x - ap_x, grid_y - ap_y), model.d0)
    rssi = np.asarray(predict_rssi(model, tx, distances))
    regions = tuple(tuple(classify_rssi(value, table) for value in row) for row in rssi)

    logger.debug('heatmap %dx%d cells at %.3f m around (%.3f, %.3f)', len(ys), len(xs), resolution, ap_x, ap_y)
    return HeatmapGrid(
        ap_x=ap_x, ap_y=ap_y,
        x_min=x_min, x_max=x_max, y_min=y_min, y_max=y_max,
        resolution=resolution, xs=xs, ys=ys, rssi=rssi, regions=regions,
    )
