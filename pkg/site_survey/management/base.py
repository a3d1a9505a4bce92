"""Shared plumbing for the site survey management commands."""

import argparse
import logging

from django.core.management.base import BaseCommand, CommandError

from ..conf import default_region_table
from ..radio import RegionTable, SurveyError

logger = logging.getLogger('site_survey.commands')


def configured(options, key, default):
    """The option value, or the settings default when the flag was not given."""
    value = options[key]
    return default() if value is None else value


def float_list(count):
    """argparse type: ``count`` comma-separated floats."""

    def parse(text):
        try:
            values = [float(part) for part in text.split(',')]
        except ValueError:
            raise argparse.ArgumentTypeError(f'expected {count} comma-separated numbers, got {text!r}') from None
        if len(values) != count:
            raise argparse.ArgumentTypeError(f'expected {count} comma-separated numbers, got {len(values)}')
        return values

    return parse


class SurveyCommand(BaseCommand):
    """
    Base for commands that call the radio toolkit.

    Subclasses implement ``run``; toolkit and file errors surface as
    ``CommandError`` so the process exits non-zero with the message on stderr.
    """

    def handle(self, *args, **options):
        try:
            return self.run(**options)
        except SurveyError as exc:
            raise CommandError(str(exc)) from exc
        except OSError as exc:
            raise CommandError(f'{exc.filename or "file"}: {exc.strerror or exc}') from exc

    def run(self, **options):
        raise NotImplementedError('subclasses of SurveyCommand must provide a run() method')

    def add_region_arguments(self, parser):
        parser.add_argument(
            '--region-thresholds', type=float_list(5), default=None,
            help='Five RSSI thresholds in dBm, strongest first (top of A, then lower bounds of A..D).',
        )

    def region_table(self, options):
        thresholds = options.get('region_thresholds')
        if thresholds is None:
            return default_region_table()
        return RegionTable(rssi_bounds=tuple(thresholds), range_bounds=default_region_table().range_bounds)

    def report_failures(self, failures, total, verb):
        for location_id, message in failures:
            self.stderr.write(f'{location_id}: {message}')
        if failures:
            raise CommandError(f'{len(failures)} of {total} location(s) failed to {verb}')
