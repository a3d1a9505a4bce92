"""Radio propagation toolkit for WLAN site surveys: fitting, prediction, coverage and planning."""

from .coverage import (
    DEFAULT_REGION_TABLE,
    HeatmapGrid,
    Region,
    RegionTable,
    classify_distance,
    classify_rssi,
    generate_heatmap,
    region_radii,
)
from .exceptions import (
    DegenerateAbscissaError,
    DomainError,
    InsufficientDataError,
    ModelNotInvertibleError,
    NoSurveysError,
    SurveyError,
    SurveyFormatError,
)
from .fit import FitResult, LocationFit, fit_log_distance, fit_many, pool_surveys
from .planner import PlanEntry, PlanReport, link_margin_db, needs_new_ap, plan_surveys
from .propagation import (
    FreeSpaceParams,
    LogDistanceModel,
    coverage_radius,
    free_space_path_loss_db,
    friis_received_power,
    log_distance_path_loss_db,
    predict_rssi,
    wavelength_m,
)
from .sites import ReferenceSite, all_sites, get_site
from .synthgen import SynthSpec, gaussian_stream, generate_survey
from .units import ApConfig, Sample, Survey, dbm_to_mw, feet_to_meters, mw_to_dbm, path_loss_db
