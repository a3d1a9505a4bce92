import io
import json
import tempfile
from pathlib import Path

from django.test import SimpleTestCase

from site_survey.radio import (
    ApConfig, LogDistanceModel, Sample, Survey, SurveyFormatError, fit_log_distance, generate_survey,
    generate_heatmap, get_site,
)
from site_survey.survey_io import (
    model_document, parse_survey, read_model_file, write_heatmap, write_models, write_survey,
)

AP = ApConfig(tx_power=23)


def parse_text(text, ap=AP):
    return parse_survey(io.StringIO(text), ap)


class ParseSurveyTest(SimpleTestCase):
    def test_feet_and_meters(self):
        surveys = parse_text(
            '# measured with the AP on the ceiling\n'
            'location_id,distance,unit,rssi_dbm\n'
            'room1,16,ft,-60\n'
            'loc,1,m,-17\n'
            'room1,2,m,-40\n'
        )
        self.assertEqual([s.location_id for s in surveys], ['room1', 'loc'])
        room1, loc = surveys
        self.assertAlmostEqual(room1.samples[0].distance, 4.8768, places=12)
        self.assertEqual(room1.samples[0].rssi, -60)
        self.assertEqual(room1.samples[1], Sample(2, -40))
        self.assertEqual(loc.samples, (Sample(1, -17),))
        self.assertIs(loc.ap, AP)

    def test_zero_distance_names_line(self):
        with self.assertRaises(SurveyFormatError) as ctx:
            parse_text('location_id,distance,unit,rssi_dbm\nok,1,m,-20\nloc,0,m,-50\n')
        self.assertEqual(ctx.exception.line, 3)
        self.assertIn('distance must be positive', str(ctx.exception))

    def test_unknown_unit(self):
        with self.assertRaises(SurveyFormatError) as ctx:
            parse_text('location_id,distance,unit,rssi_dbm\nloc,3,yd,-50\n')
        self.assertIn('unknown unit', str(ctx.exception))
        self.assertEqual(ctx.exception.line, 2)

    def test_malformed_rows(self):
        cases = [
            'location_id,distance,unit,rssi_dbm\nloc,3,m\n',
            'location_id,distance,unit,rssi_dbm\nloc,three,m,-50\n',
            'location_id,distance,unit,rssi_dbm\nloc,3,m,nan\n',
        ]
        for text in cases:
            with self.subTest(text=text), self.assertRaises(SurveyFormatError) as ctx:
                parse_text(text)
            self.assertEqual(ctx.exception.line, 2)

    def test_missing_header_or_data(self):
        with self.assertRaisesMessage(SurveyFormatError, 'no data rows'):
            parse_text('# only comments\nlocation_id,distance,unit,rssi_dbm\n\n')
        with self.assertRaisesMessage(SurveyFormatError, 'expected header'):
            parse_text('loc,1,m,-20\n')
        with self.assertRaisesMessage(SurveyFormatError, 'missing header'):
            parse_text('')

    def test_write_then_parse(self):
        surveys = [
            generate_survey(get_site('room1').synth_spec(seed=3)),
            generate_survey(get_site('location2').synth_spec(seed=4)),
        ]
        buffer = io.StringIO()
        write_survey(surveys, buffer, comments=['round trip'])
        parsed = parse_text(buffer.getvalue(), surveys[0].ap)
        self.assertEqual([s.location_id for s in parsed], ['room1', 'location2'])
        for original, again in zip(surveys, parsed):
            self.assertEqual(original.samples, again.samples)

    def test_awkward_location_ids_survive_round_trip(self):
        for location_id in ('lab #2', 'hall, east', 'say "hi"', 'x' * 100):
            with self.subTest(location_id=location_id):
                survey = Survey(location_id, [Sample(1.5, -30.25), Sample(7.0, -61.0)], AP)
                buffer = io.StringIO()
                write_survey([survey], buffer)
                self.assertEqual(parse_text(buffer.getvalue()), [survey])

    def test_byte_order_mark_is_ignored(self):
        data = '\ufefflocation_id,distance,unit,rssi_dbm\nloc,1,m,-17\n'.encode('utf-8')
        [survey] = parse_survey(io.BytesIO(data), AP)
        self.assertEqual(survey.location_id, 'loc')
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / 'excel.csv'
            path.write_bytes(data)
            [survey] = parse_survey(path, AP)
        self.assertEqual(survey.samples, (Sample(1, -17),))

    def test_invalid_utf8_names_line(self):
        data = b'location_id,distance,unit,rssi_dbm\nloc,1,m,-17\nr\xe9ception,2,m,-30\n'
        with self.assertRaises(SurveyFormatError) as ctx:
            parse_survey(io.BytesIO(data), AP)
        self.assertEqual(ctx.exception.line, 3)
        self.assertIn('not valid UTF-8', str(ctx.exception))

    def test_reads_from_path(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / 'survey.csv'
            path.write_text('location_id,distance,unit,rssi_dbm\nloc,1,m,-17\nloc,10,m,-37\n', encoding='utf-8')
            [survey] = parse_survey(path, AP)
        self.assertEqual(len(survey), 2)


class ModelFileTest(SimpleTestCase):
    def setUp(self):
        survey = Survey('room1', [Sample(1, -17), Sample(10, -51.5), Sample(3, -33)], AP)
        self.result = fit_log_distance(survey)

    def test_round_trip_single(self):
        buffer = io.StringIO()
        write_models([model_document('room1', self.result, AP)], buffer)
        self.assertIsInstance(json.loads(buffer.getvalue()), dict)
        buffer.seek(0)
        model, document = read_model_file(buffer)
        self.assertEqual(model, self.result.model)
        self.assertEqual(document['tx_power_dbm'], 23.0)
        self.assertEqual(document['num_samples'], 3)
        self.assertAlmostEqual(document['r_squared'], self.result.r_squared, delta=1e-12)

    def test_array_requires_location(self):
        documents = [model_document('a', self.result, AP), model_document('b', self.result, AP)]
        buffer = io.StringIO()
        write_models(documents, buffer)
        buffer.seek(0)
        with self.assertRaises(SurveyFormatError):
            read_model_file(io.StringIO(buffer.getvalue()))
        model, document = read_model_file(io.StringIO(buffer.getvalue()), location='b')
        self.assertEqual(document['name'], 'b')
        with self.assertRaisesMessage(SurveyFormatError, "no model named 'c'"):
            read_model_file(io.StringIO(buffer.getvalue()), location='c')

    def test_invalid_documents(self):
        with self.assertRaises(SurveyFormatError):
            read_model_file(io.StringIO('{not json'))
        document = model_document('a', self.result, AP)
        document['d0_m'] = 0
        with self.assertRaisesMessage(SurveyFormatError, 'd0_m'):
            read_model_file(io.StringIO(json.dumps(document)))
        del document['d0_m']
        with self.assertRaises(SurveyFormatError):
            read_model_file(io.StringIO(json.dumps(document)))


class HeatmapFileTest(SimpleTestCase):
    def test_rows(self):
        grid = generate_heatmap(LogDistanceModel(40, 1, 2), 23, 0, 0, (-1, 1, -1, 1), 1.0)
        buffer = io.StringIO()
        write_heatmap(grid, buffer)
        lines = buffer.getvalue().splitlines()
        self.assertEqual(lines[0], 'x_m,y_m,rssi_dbm,region')
        self.assertEqual(len(lines), 5)
        self.assertEqual(lines[1], '-0.5000,-0.5000,-17.00,A')
