from django.db import transaction

from ...conf import default_frequency_mhz
from ...models import AccessPoint, Measurement, PathLossFit, SurveyLocation
from ...radio import ApConfig
from ...survey_io import parse_survey
from ..base import SurveyCommand, configured, logger


class Command(SurveyCommand):
    help = 'Import a survey CSV file into the database under a named access point.'

    def add_arguments(self, parser):
        parser.add_argument('--survey', required=True, help='Survey CSV file.')
        parser.add_argument('--ap-name', required=True, help='Access point to attach the locations to.')
        parser.add_argument('--tx-power-dbm', type=float, required=True, help='AP transmit power in dBm.')
        parser.add_argument('--frequency-mhz', type=float, default=None, help='AP frequency in MHz.')
        parser.add_argument('--sensitivity-dbm', type=float, default=None, help='Receiver sensitivity in dBm.')

    def run(self, **options):
        ap_config = ApConfig(
            name=options['ap_name'],
            tx_power=options['tx_power_dbm'],
            frequency_mhz=configured(options, 'frequency_mhz', default_frequency_mhz),
            sensitivity=options['sensitivity_dbm'],
        )
        surveys = parse_survey(options['survey'], ap_config)

        with transaction.atomic():
            access_point, _ = AccessPoint.objects.update_or_create(
                name=ap_config.name,
                defaults={
                    'tx_power_dbm': ap_config.tx_power,
                    'frequency_mhz': ap_config.frequency_mhz,
                    'sensitivity_dbm': ap_config.sensitivity,
                },
            )
            for survey in surveys:
                location, _ = SurveyLocation.objects.update_or_create(
                    name=survey.location_id, defaults={'access_point': access_point}
                )
                location.measurements.all().delete()
                PathLossFit.objects.filter(location=location).delete()
                Measurement.objects.bulk_create(
                    Measurement(location=location, distance_m=s.distance, rssi_dbm=s.rssi) for s in survey.samples
                )

        total = sum(len(survey) for survey in surveys)
        logger.info('imported %d samples in %d locations for %s', total, len(surveys), access_point.name)
        self.stdout.write(f'imported {total} samples in {len(surveys)} location(s) for {access_point.name}')
