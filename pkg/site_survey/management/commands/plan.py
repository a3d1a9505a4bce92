from ...conf import default_frequency_mhz, default_margin_db
from ...radio import ApConfig, plan_surveys
from ...survey_io import format_plan_table, parse_survey
from ..base import SurveyCommand, configured, logger


class Command(SurveyCommand):
    help = 'Flag survey locations whose weakest reading is too close to the receiver sensitivity.'

    def add_arguments(self, parser):
        parser.add_argument('--survey', required=True, help='Survey CSV file.')
        parser.add_argument('--tx-power-dbm', type=float, required=True, help='AP transmit power in dBm.')
        parser.add_argument('--sensitivity-dbm', type=float, required=True, help='Receiver sensitivity in dBm.')
        parser.add_argument('--margin-db', type=float, default=None, help='Required margin above sensitivity.')
        parser.add_argument('--frequency-mhz', type=float, default=None, help='AP frequency in MHz.')

    def run(self, **options):
        margin = configured(options, 'margin_db', default_margin_db)
        ap = ApConfig(
            name='survey',
            tx_power=options['tx_power_dbm'],
            frequency_mhz=configured(options, 'frequency_mhz', default_frequency_mhz),
            sensitivity=options['sensitivity_dbm'],
        )
        surveys = parse_survey(options['survey'], ap)
        report = plan_surveys(surveys, options['sensitivity_dbm'], margin)

        for line in format_plan_table(report):
            self.stdout.write(line)
        logger.info('planned %d locations, %d need a new AP', len(report.entries), len(report.flagged))
        self.report_failures(
            [(entry.location_id, entry.error) for entry in report.failed], len(report.entries), 'plan'
        )
