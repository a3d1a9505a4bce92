"""
File formats of the site survey toolkit.

* Survey CSV: optional ``#`` comment lines, the header
  ``location_id,distance,unit,rssi_dbm`` and one row per reading with unit
  ``m`` or ``ft``. Feet are converted to meters while reading.
* Model JSON: one model document (or an array of them) with the fitted
  parameters and the AP settings used for the fit.
* Heatmap CSV: ``x_m,y_m,rssi_dbm,region`` per cell center, row-major.
"""

import csv
import json
import logging
from contextlib import contextmanager
from pathlib import Path

from .radio import ApConfig, LogDistanceModel, Sample, Survey, SurveyFormatError
from .serializers import ModelFileSerializer, SurveyRowSerializer

logger = logging.getLogger(__name__)

SURVEY_HEADER = ('location_id', 'distance', 'unit', 'rssi_dbm')
HEATMAP_HEADER = ('x_m', 'y_m', 'rssi_dbm', 'region')


@contextmanager
def _opened(target, mode):
    if isinstance(target, (str, Path)):
        if 'b' in mode:
            with open(target, mode) as handle:
                yield handle
            return
        encoding = 'utf-8-sig' if 'r' in mode else 'utf-8'
        with open(target, mode, encoding=encoding, newline='') as handle:
            yield handle
    else:
        yield target


def _numbered_lines(handle):
    """Decoded lines with their 1-based numbers; a leading byte order mark is dropped."""
    for line_number, line in enumerate(handle, start=1):
        if isinstance(line, bytes):
            try:
                line = line.decode('utf-8')
            except UnicodeDecodeError as exc:
                raise SurveyFormatError(f'not valid UTF-8 text at byte {exc.start}', line_number) from None
        if line_number == 1:
            line = line.lstrip('\ufeff')
        yield line_number, line


def _first_error(errors):
    field, messages = next(iter(errors.items()))
    message = messages[0] if isinstance(messages, list) else messages
    return str(message) if field == 'non_field_errors' else f'{field}: {message}'


def parse_survey(source, ap=None):
    """Read a survey CSV and group its rows into one Survey per location, in first-seen order."""
    ap = ap or ApConfig()
    groups = {}
    header_seen = False

    with _opened(source, 'rb') as handle:
        for line_number, line in _numbered_lines(handle):
            stripped = line.strip()
            if not stripped or stripped.startswith('#'):
                continue
            row = [cell.strip() for cell in next(csv.reader([stripped]))]
            if not header_seen:
                if tuple(row) != SURVEY_HEADER:
                    raise SurveyFormatError(f'expected header {",".join(SURVEY_HEADER)}', line_number)
                header_seen = True
                continue
            if len(row) != len(SURVEY_HEADER):
                raise SurveyFormatError(f'expected {len(SURVEY_HEADER)} columns, got {len(row)}', line_number)

            serializer = SurveyRowSerializer(data=dict(zip(SURVEY_HEADER, row)))
            if not serializer.is_valid():
                raise SurveyFormatError(_first_error(serializer.errors), line_number)
            location_id = serializer.validated_data['location_id']
            groups.setdefault(location_id, []).append(
                Sample(serializer.distance_m, serializer.validated_data['rssi_dbm'])
            )

    if not header_seen:
        raise SurveyFormatError('missing header line')
    if not groups:
        raise SurveyFormatError('survey file has no data rows')
    logger.debug('parsed %d locations, %d samples', len(groups), sum(len(s) for s in groups.values()))
    return [Survey(location_id=location_id, samples=samples, ap=ap) for location_id, samples in groups.items()]


def write_survey(surveys, target, comments=()):
    """Write surveys as CSV in meters; floats use shortest round-trip formatting."""
    with _opened(target, 'w') as handle:
        for comment in comments:
            handle.write(f'# {comment}\n')
        writer = csv.writer(handle, lineterminator='\n')
        writer.writerow(SURVEY_HEADER)
        for survey in surveys:
            for sample in survey.samples:
                writer.writerow([survey.location_id, repr(sample.distance), 'm', repr(sample.rssi)])


def model_document(name, result, ap):
    return {
        'name': name,
        'pl_d0_db': result.model.pl_d0_db,
        'd0_m': result.model.d0,
        'n': result.model.n,
        'sigma_db': result.model.sigma_db,
        'tx_power_dbm': ap.tx_power,
        'frequency_mhz': ap.frequency_mhz,
        'num_samples': result.num_samples,
        'r_squared': result.r_squared,
        'n_std_error': result.slope_standard_error,
    }


def write_models(documents, target):
    """One document is written as an object, several as an array."""
    payload = documents[0] if len(documents) == 1 else list(documents)
    with _opened(target, 'w') as handle:
        json.dump(payload, handle, indent=2)
        handle.write('\n')


def read_model_file(source, location=None):
    """Return ``(LogDistanceModel, document)`` from a model file, picking ``location`` out of an array."""
    try:
        with _opened(source, 'r') as handle:
            payload = json.load(handle)
    except json.JSONDecodeError as exc:
        raise SurveyFormatError(f'model file is not valid JSON: {exc.msg}', exc.lineno) from exc
    except UnicodeDecodeError as exc:
        raise SurveyFormatError(f'model file is not valid UTF-8 text at byte {exc.start}') from None

    documents = payload if isinstance(payload, list) else [payload]
    if location is not None:
        documents = [doc for doc in documents if isinstance(doc, dict) and doc.get('name') == location]
        if not documents:
            raise SurveyFormatError(f'model file has no model named {location!r}')
    if len(documents) != 1:
        raise SurveyFormatError(f'model file holds {len(documents)} models; choose one by location')

    serializer = ModelFileSerializer(data=documents[0])
    if not serializer.is_valid():
        raise SurveyFormatError(f'invalid model file: {_first_error(serializer.errors)}')
    document = dict(serializer.validated_data)
    model = LogDistanceModel(
        pl_d0_db=document['pl_d0_db'], d0=document['d0_m'], n=document['n'], sigma_db=document['sigma_db']
    )
    return model, document


def write_heatmap(grid, target):
    with _opened(target, 'w') as handle:
        writer = csv.writer(handle, lineterminator='\n')
        writer.writerow(HEATMAP_HEADER)
        for cell in grid.cells():
            writer.writerow([f'{cell.x:.4f}', f'{cell.y:.4f}', f'{cell.rssi:.2f}', cell.region.value])


def format_fit_table(rows):
    """Report lines for ``LocationFit`` rows that succeeded."""
    lines = [f'{"location":<16} {"n":>8} {"sigma_db":>9} {"pl_d0_db":>9} {"r_squared":>9} {"samples":>7}']
    for row in rows:
        if not row.ok:
            continue
        model = row.result.model
        lines.append(
            f'{row.location_id:<16} {model.n:>8.4f} {model.sigma_db:>9.4f} {model.pl_d0_db:>9.4f} '
            f'{row.result.r_squared:>9.4f} {row.result.num_samples:>7d}'
        )
    return lines


def format_plan_table(report):
    lines = [
        f'sensitivity {report.sensitivity:.2f} dBm, margin threshold {report.margin_threshold_db:.2f} dB',
        f'{"location":<16} {"worst_rssi":>10} {"margin_db":>9}  action',
    ]
    for entry in report.entries:
        if not entry.ok:
            continue
        action = 'NEW AP' if entry.needs_new_ap else 'ok'
        lines.append(f'{entry.location_id:<16} {entry.worst_rssi:>10.2f} {entry.margin_db:>9.2f}  {action}')
    return lines
