from ...radio import ModelNotInvertibleError, generate_heatmap, region_radii
from ...survey_io import read_model_file, write_heatmap
from ..base import SurveyCommand, float_list, logger


class Command(SurveyCommand):
    help = 'Rasterize predicted RSSI and coverage regions around an AP into a CSV grid.'

    def add_arguments(self, parser):
        parser.add_argument('--model', required=True, help='Model JSON file written by "fit --out".')
        parser.add_argument('--location', default=None, help='Model name when the file holds several.')
        parser.add_argument('--tx-power-dbm', type=float, required=True, help='AP transmit power in dBm.')
        parser.add_argument('--ap-x', type=float, default=0.0, help='AP x position in meters.')
        parser.add_argument('--ap-y', type=float, default=0.0, help='AP y position in meters.')
        parser.add_argument('--extent', type=float_list(4), required=True, help='x0,x1,y0,y1 in meters.')
        parser.add_argument('--resolution', type=float, required=True, help='Cell size in meters.')
        parser.add_argument('--out', required=True, help='Grid CSV output file.')
        self.add_region_arguments(parser)

    def run(self, **options):
        model, _ = read_model_file(options['model'], options['location'])
        table = self.region_table(options)
        grid = generate_heatmap(
            model, options['tx_power_dbm'], options['ap_x'], options['ap_y'],
            tuple(options['extent']), options['resolution'], table,
        )
        write_heatmap(grid, options['out'])
        rows, cols = grid.shape
        logger.info('wrote %dx%d heatmap to %s', rows, cols, options['out'])
        self.stdout.write(f'wrote {rows * cols} cells ({cols} x {rows}) to {options["out"]}')
        for region, count in grid.region_counts().items():
            self.stdout.write(f'region {region.value}: {count} cells')

        try:
            radii = region_radii(model, options['tx_power_dbm'], table)
        except ModelNotInvertibleError as exc:
            self.stderr.write(f'region radii unavailable: {exc}')
            return
        for region, radius in radii.items():
            self.stdout.write(f'region {region.value} ends at {radius:.2f} m')
