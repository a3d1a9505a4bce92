import json
import tempfile
from io import StringIO
from pathlib import Path

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase, TestCase

from site_survey.models import Measurement, PathLossFit, SurveyLocation
from site_survey.radio import (
    ApConfig, LogDistanceModel, classify_rssi, coverage_radius, fit_log_distance, predict_rssi,
)
from site_survey.survey_io import parse_survey, read_model_file


def run(name, *args):
    out, err = StringIO(), StringIO()
    call_command(name, *args, stdout=out, stderr=err)
    return out.getvalue(), err.getvalue()


class CommandTestCase(SimpleTestCase):
    def setUp(self):
        self._tmp = tempfile.TemporaryDirectory()
        self.tmp = Path(self._tmp.name)

    def tearDown(self):
        self._tmp.cleanup()

    def write(self, name, text):
        path = self.tmp / name
        path.write_text(text, encoding='utf-8')
        return str(path)

    def model_file(self, name='model.json', pl_d0=40.0, d0=1.0, n=2.0):
        document = {
            'name': 'room1', 'pl_d0_db': pl_d0, 'd0_m': d0, 'n': n, 'sigma_db': 0.0,
            'tx_power_dbm': 23.0, 'frequency_mhz': 2432.0, 'num_samples': 4, 'r_squared': 1.0,
        }
        return self.write(name, json.dumps(document))


class SynthCommandTest(CommandTestCase):
    def test_same_seed_byte_identical(self):
        first, second = str(self.tmp / 'a.csv'), str(self.tmp / 'b.csv')
        for path in (first, second):
            run('synth', '--site', 'room1', '--samples', '200', '--seed', '42', '--out', path)
        self.assertEqual(Path(first).read_bytes(), Path(second).read_bytes())
        [survey] = parse_survey(first, ApConfig(tx_power=23))
        self.assertEqual((survey.location_id, len(survey)), ('room1', 200))

    def test_noiseless_synth_then_fit(self):
        survey = str(self.tmp / 'line.csv')
        run('synth', '--n', '1.09', '--sigma', '0', '--pl-d0', '37.5', '--samples', '50',
            '--seed', '1', '--location-id', 'corridor2', '--out', survey)
        out, _ = run('fit', '--survey', survey, '--tx-power-dbm', '23', '--d0-m', '1')
        row = out.splitlines()[1].split()
        self.assertEqual(row[0], 'corridor2')
        self.assertEqual(row[1], '1.0900')
        self.assertEqual(row[2], '0.0000')
        self.assertEqual(row[3], '37.5000')
        self.assertEqual(row[4], '1.0000')
        self.assertEqual(row[5], '50')

    def test_requires_exponent_without_site(self):
        with self.assertRaises(CommandError):
            run('synth', '--sigma', '3', '--out', str(self.tmp / 'x.csv'))
        with self.assertRaises(CommandError):
            run('synth', '--site', 'attic', '--out', str(self.tmp / 'x.csv'))


class FitCommandTest(CommandTestCase):
    def test_two_point_room1_fixture(self):
        survey = self.write('room1.csv', 'location_id,distance,unit,rssi_dbm\nroom1,1,m,-17\nroom1,10,m,-51.5\n')
        out_path = str(self.tmp / 'models.json')
        out, _ = run('fit', '--survey', survey, '--tx-power-dbm', '23', '--d0-m', '1', '--out', out_path)
        self.assertIn('3.4500', out.splitlines()[1])
        model, document = read_model_file(out_path)
        self.assertAlmostEqual(model.n, 3.45, delta=1e-12)
        self.assertEqual(document['name'], 'room1')

    def test_failures_reported_without_aborting(self):
        survey = self.write(
            'mixed.csv',
            'location_id,distance,unit,rssi_dbm\nsolo,2,m,-40\ngood,1,m,-17\ngood,10,m,-37\ngood,4,m,-30\n',
        )
        out_path = str(self.tmp / 'models.json')
        out, err = StringIO(), StringIO()
        with self.assertRaisesMessage(CommandError, '1 of 2 location(s) failed to fit'):
            call_command('fit', '--survey', survey, '--tx-power-dbm', '23', '--out', out_path,
                         stdout=out, stderr=err)
        self.assertIn('good', out.getvalue())
        self.assertIn('solo: insufficient data', err.getvalue())
        model, document = read_model_file(out_path)
        self.assertEqual(document['name'], 'good')

    def test_pooled_row_and_model_array(self):
        survey = self.write(
            'two.csv',
            'location_id,distance,unit,rssi_dbm\na,1,m,-17\na,10,m,-37\nb,2,m,-25\nb,20,m,-47\n',
        )
        out_path = str(self.tmp / 'models.json')
        out, _ = run('fit', '--survey', survey, '--tx-power-dbm', '23', '--pooled', '--out', out_path)
        self.assertEqual([line.split()[0] for line in out.splitlines()[1:]], ['a', 'b', 'overall'])
        documents = json.loads(Path(out_path).read_text(encoding='utf-8'))
        self.assertEqual([doc['name'] for doc in documents], ['a', 'b', 'overall'])

    def test_missing_file(self):
        with self.assertRaises(CommandError):
            run('fit', '--survey', str(self.tmp / 'nope.csv'), '--tx-power-dbm', '23')

    def test_malformed_file_names_line(self):
        survey = self.write('bad.csv', 'location_id,distance,unit,rssi_dbm\nloc,0,m,-50\n')
        with self.assertRaisesRegex(CommandError, r'line 2: .*distance must be positive'):
            run('fit', '--survey', survey, '--tx-power-dbm', '23')

    def test_explicit_zero_is_not_a_default(self):
        survey = self.write('room1.csv', 'location_id,distance,unit,rssi_dbm\nroom1,1,m,-17\nroom1,10,m,-51.5\n')
        for flag in ('--frequency-mhz=0', '--workers=0'):
            with self.subTest(flag=flag), self.assertRaises(CommandError):
                run('fit', '--survey', survey, '--tx-power-dbm', '23', flag)
        with self.assertRaisesRegex(CommandError, 'frequency_mhz'):
            run('plan', '--survey', survey, '--tx-power-dbm', '23', '--sensitivity-dbm=-95', '--frequency-mhz=0')

    def test_undecodable_file_names_line(self):
        survey = self.tmp / 'latin1.csv'
        survey.write_bytes(b'location_id,distance,unit,rssi_dbm\nr\xe9ception,2,m,-30\n')
        with self.assertRaisesRegex(CommandError, r'line 2: not valid UTF-8'):
            run('fit', '--survey', str(survey), '--tx-power-dbm', '23')


class PredictCommandTest(CommandTestCase):
    def test_examples(self):
        model = self.model_file()
        out, _ = run('predict', '--model', model, '--tx-power-dbm', '23', '--distance-m', '10')
        self.assertEqual(out.strip(), '-37.00 dBm, region A')
        out, _ = run('predict', '--model', model, '--tx-power-dbm', '23', '--distance-m', '100')
        self.assertEqual(out.strip(), '-57.00 dBm, region B')
        out, _ = run('predict', '--model', model, '--tx-power-dbm', '23', '--distance-m', '1')
        self.assertEqual(out.strip(), '-17.00 dBm, region A')

    def test_json_output_and_thresholds(self):
        model = self.model_file()
        out, _ = run('predict', '--model', model, '--tx-power-dbm', '23', '--distance-m', '10', '--json',
                     '--region-thresholds=-10,-15,-20,-25,-30')
        payload = json.loads(out)
        self.assertEqual(payload['rssi_dbm'], predict_rssi(LogDistanceModel(40, 1, 2), 23, 10))
        self.assertEqual(payload['region'], 'OUT')

    def test_non_positive_distance(self):
        model = self.model_file()
        for distance in ('0', '-5'):
            with self.subTest(distance=distance), self.assertRaises(CommandError):
                run('predict', '--model', model, '--tx-power-dbm', '23', f'--distance-m={distance}')


class HeatmapCommandTest(CommandTestCase):
    def read_rows(self, path):
        lines = Path(path).read_text(encoding='utf-8').splitlines()
        self.assertEqual(lines[0], 'x_m,y_m,rssi_dbm,region')
        return [line.split(',') for line in lines[1:]]

    def test_two_by_two_symmetric(self):
        model, out_path = self.model_file(n=3.0, d0=0.1), str(self.tmp / 'grid.csv')
        out, _ = run('heatmap', '--model', model, '--tx-power-dbm', '23', '--ap-x', '0', '--ap-y', '0',
                     '--extent=-1,1,-1,1', '--resolution', '1', '--out', out_path)
        rows = self.read_rows(out_path)
        self.assertEqual(len(rows), 4)
        self.assertIn('region A: 4 cells', out)
        self.assertIn('region OUT: 0 cells', out)
        self.assertEqual(len({row[2] for row in rows}), 1)

    def test_region_flips_at_radius(self):
        model_path, out_path = self.model_file(), str(self.tmp / 'line.csv')
        radius = coverage_radius(LogDistanceModel(40, 1, 2), 23, -56)
        out, _ = run('heatmap', '--model', model_path, '--tx-power-dbm', '23',
                     '--extent', '0,200,0,1', '--resolution', '1', '--out', out_path)
        for x, _, rssi, region in self.read_rows(out_path):
            if float(x) < radius - 1:
                self.assertEqual(region, 'A')
            elif float(x) > radius + 1:
                self.assertEqual(region, 'B')
        self.assertIn('region A ends at 89.13 m', out)

    def test_bad_resolution(self):
        model = self.model_file()
        for resolution in ('0', '-1'):
            with self.subTest(resolution=resolution), self.assertRaises(CommandError):
                run('heatmap', '--model', model, '--tx-power-dbm', '23', '--extent=-1,1,-1,1',
                    f'--resolution={resolution}', '--out', str(self.tmp / 'g.csv'))


class PlanCommandTest(CommandTestCase):
    def test_flags(self):
        survey = self.write(
            'plan.csv',
            'location_id,distance,unit,rssi_dbm\nnear,1,m,-40\nnear,3,m,-50\nfar,10,m,-70\nfar,30,m,-90\n',
        )
        out, _ = run('plan', '--survey', survey, '--tx-power-dbm', '23', '--sensitivity-dbm=-95')
        lines = out.splitlines()
        self.assertTrue(lines[2].startswith('near') and lines[2].endswith('ok'))
        self.assertTrue(lines[3].startswith('far') and lines[3].endswith('NEW AP'))

    def test_custom_margin(self):
        survey = self.write('plan.csv', 'location_id,distance,unit,rssi_dbm\nroom1,5,m,-88\n')
        out, _ = run('plan', '--survey', survey, '--tx-power-dbm', '23', '--sensitivity-dbm=-95', '--margin-db', '5')
        self.assertTrue(out.splitlines()[2].endswith('ok'))
        self.assertIn('7.00', out.splitlines()[2])


class PipelineTest(CommandTestCase):
    def test_synth_fit_predict_heatmap_plan(self):
        survey = str(self.tmp / 'room1.csv')
        models = str(self.tmp / 'room1.json')
        grid = str(self.tmp / 'room1-grid.csv')
        run('synth', '--n', '3.45', '--sigma', '13.92', '--pl-d0', '40', '--d0-m', '1', '--tx-power-dbm', '23',
            '--samples', '1000', '--dmin-m', '1', '--dmax-m', '30', '--seed', '2011', '--location-id', 'room1',
            '--out', survey)
        run('fit', '--survey', survey, '--tx-power-dbm', '23', '--d0-m', '1', '--out', models)
        out, _ = run('predict', '--model', models, '--tx-power-dbm', '23', '--distance-m', '7.5', '--json')
        run('heatmap', '--model', models, '--tx-power-dbm', '23', '--extent=-20,20,-20,20',
            '--resolution', '1', '--out', grid)
        run('plan', '--survey', survey, '--tx-power-dbm', '23', '--sensitivity-dbm=-95')

        [parsed] = parse_survey(survey, ApConfig(tx_power=23))
        direct = fit_log_distance(parsed, 1.0).model
        self.assertAlmostEqual(json.loads(out)['rssi_dbm'], predict_rssi(direct, 23, 7.5), delta=1e-9)
        self.assertEqual(json.loads(out)['region'], classify_rssi(predict_rssi(direct, 23, 7.5)).value)
        self.assertEqual(len(Path(grid).read_text(encoding='utf-8').splitlines()), 40 * 40 + 1)


class LoadSurveyCommandTest(TestCase):
    def test_import_replaces_measurements(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / 'survey.csv'
            path.write_text(
                'location_id,distance,unit,rssi_dbm\nroom1,1,m,-17\nroom1,10,m,-51.5\nroom2,9,ft,-45\n',
                encoding='utf-8',
            )
            run('load_survey', '--survey', str(path), '--ap-name', 'seminar', '--tx-power-dbm', '23')
            location = SurveyLocation.objects.get(name='room1')
            PathLossFit.store(location, fit_log_distance(location.to_survey()))
            run('load_survey', '--survey', str(path), '--ap-name', 'seminar', '--tx-power-dbm', '23')

        self.assertEqual(SurveyLocation.objects.count(), 2)
        self.assertEqual(Measurement.objects.filter(location__name='room1').count(), 2)
        self.assertFalse(PathLossFit.objects.exists())
        room2 = SurveyLocation.objects.get(name='room2').to_survey()
        self.assertAlmostEqual(room2.samples[0].distance, 9 * 0.3048, places=12)
        self.assertEqual(room2.ap.tx_power, 23.0)
