import json

from ...radio import classify_rssi, predict_rssi
from ...radio.exceptions import DomainError
from ...survey_io import read_model_file
from ..base import SurveyCommand


class Command(SurveyCommand):
    help = 'Predict the received signal strength and coverage region at a distance from the AP.'

    def add_arguments(self, parser):
        parser.add_argument('--model', required=True, help='Model JSON file written by "fit --out".')
        parser.add_argument('--location', default=None, help='Model name when the file holds several.')
        parser.add_argument('--tx-power-dbm', type=float, required=True, help='AP transmit power in dBm.')
        parser.add_argument('--distance-m', type=float, required=True, help='Distance from the AP in meters.')
        parser.add_argument('--json', action='store_true', help='Print a JSON object at full precision.')
        self.add_region_arguments(parser)

    def run(self, **options):
        distance = options['distance_m']
        if not distance > 0:
            raise DomainError(f'distance must be positive, got {distance}')
        model, _ = read_model_file(options['model'], options['location'])
        rssi = predict_rssi(model, options['tx_power_dbm'], distance)
        region = classify_rssi(rssi, self.region_table(options))

        if options['json']:
            self.stdout.write(json.dumps({'distance_m': distance, 'rssi_dbm': rssi, 'region': region.value}))
        else:
            self.stdout.write(f'{rssi:.2f} dBm, region {region.value}')
