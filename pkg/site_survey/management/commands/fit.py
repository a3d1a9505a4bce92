from ...conf import default_d0, default_frequency_mhz, fit_workers
from ...radio import ApConfig, LocationFit, fit_log_distance, fit_many, pool_surveys
from ...radio.exceptions import SurveyError
from ...survey_io import format_fit_table, model_document, parse_survey, write_models
from ..base import SurveyCommand, configured, logger


class Command(SurveyCommand):
    help = 'Fit a log-distance path loss model per location of a survey CSV file.'

    def add_arguments(self, parser):
        parser.add_argument('--survey', required=True, help='Survey CSV file.')
        parser.add_argument('--tx-power-dbm', type=float, required=True, help='AP transmit power in dBm.')
        parser.add_argument('--d0-m', type=float, default=None, help='Reference distance in meters.')
        parser.add_argument('--frequency-mhz', type=float, default=None, help='AP frequency in MHz.')
        parser.add_argument('--out', default=None, help='Write fitted models as JSON to this file.')
        parser.add_argument('--pooled', action='store_true', help='Also fit all samples together as "overall".')
        parser.add_argument('--workers', type=int, default=None, help='Fit locations in parallel.')

    def run(self, **options):
        d0 = configured(options, 'd0_m', default_d0)
        ap = ApConfig(
            name='survey',
            tx_power=options['tx_power_dbm'],
            frequency_mhz=configured(options, 'frequency_mhz', default_frequency_mhz),
        )
        surveys = parse_survey(options['survey'], ap)
        rows = fit_many(surveys, d0, workers=configured(options, 'workers', fit_workers))

        if options['pooled']:
            pooled = pool_surveys(surveys)
            try:
                rows.append(LocationFit(pooled.location_id, fit_log_distance(pooled, d0)))
            except SurveyError as exc:
                rows.append(LocationFit(pooled.location_id, None, exc))

        for line in format_fit_table(rows):
            self.stdout.write(line)

        fitted = [row for row in rows if row.ok]
        logger.info('fitted %d of %d locations from %s', len(fitted), len(rows), options['survey'])
        if options['out'] and fitted:
            write_models([model_document(row.location_id, row.result, ap) for row in fitted], options['out'])
            logger.info('wrote %d model(s) to %s', len(fitted), options['out'])

        failures = [(row.location_id, str(row.error)) for row in rows if not row.ok]
        self.report_failures(failures, len(rows), 'fit')
