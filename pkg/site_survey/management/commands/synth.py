from django.core.management.base import CommandError

from ...conf import default_d0
from ...radio import LogDistanceModel, SynthSpec, generate_survey, get_site
from ...survey_io import write_survey
from ..base import SurveyCommand, configured, logger


class Command(SurveyCommand):
    help = 'Generate a seeded synthetic survey CSV from a log-distance model with shadowing.'

    def add_arguments(self, parser):
        parser.add_argument('--site', default=None, help='Reference site supplying n, sigma and sample count.')
        parser.add_argument('--n', type=float, default=None, help='Path loss exponent.')
        parser.add_argument('--sigma', type=float, default=None, help='Shadowing deviation in dB.')
        parser.add_argument('--pl-d0', type=float, default=40.0, help='Path loss at d0 in dB.')
        parser.add_argument('--d0-m', type=float, default=None, help='Reference distance in meters.')
        parser.add_argument('--tx-power-dbm', type=float, default=23.0, help='AP transmit power in dBm.')
        parser.add_argument('--samples', type=int, default=None, help='Number of samples.')
        parser.add_argument('--dmin-m', type=float, default=1.0, help='Smallest distance in meters.')
        parser.add_argument('--dmax-m', type=float, default=30.0, help='Largest distance in meters.')
        parser.add_argument('--seed', type=int, default=0, help='64-bit unsigned generator seed.')
        parser.add_argument('--location-id', default=None, help='Location id written to every row.')
        parser.add_argument('--out', required=True, help='Survey CSV output file.')

    def run(self, **options):
        n, sigma, samples = options['n'], options['sigma'], options['samples']
        location_id = options['location_id']
        if options['site']:
            site = get_site(options['site'])
            n = site.n if n is None else n
            sigma = site.sigma_db if sigma is None else sigma
            samples = site.sample_count if samples is None else samples
            location_id = site.name if location_id is None else location_id
        if n is None or sigma is None:
            raise CommandError('--n and --sigma are required unless --site is given')

        spec = SynthSpec(
            model=LogDistanceModel(
                pl_d0_db=options['pl_d0'],
                d0=configured(options, 'd0_m', default_d0),
                n=n,
                sigma_db=sigma,
            ),
            tx=options['tx_power_dbm'],
            num_samples=samples if samples is not None else 50,
            d_min=options['dmin_m'],
            d_max=options['dmax_m'],
            seed=options['seed'],
            location_id='synthetic' if location_id is None else location_id,
        )
        survey = generate_survey(spec)
        comments = [
            f'synthetic survey: n={spec.model.n!r} sigma_db={spec.model.sigma_db!r} '
            f'pl_d0_db={spec.model.pl_d0_db!r} d0_m={spec.model.d0!r} tx_power_dbm={spec.tx!r} seed={spec.seed}',
        ]
        write_survey([survey], options['out'], comments=comments)
        logger.info('wrote %d synthetic samples for %s to %s', spec.num_samples, spec.location_id, options['out'])
        self.stdout.write(f'wrote {spec.num_samples} samples for {spec.location_id} to {options["out"]}')
