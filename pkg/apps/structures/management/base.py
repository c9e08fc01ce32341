"""
Shared plumbing of the structure commands: common flags, batch input
handling and report rendering.
"""
import logging

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from ..choices import EpsVariant, H21Normalization, OutputFormat, Reference
from ..exceptions import INPUT_ERRORS
from ..parsers import read_graph
from ..reports import render_csv, render_json, render_table

logger = logging.getLogger(__name__)

INPUT_ERROR_CODE = 2


def attempt(func, item):
    """Run ``func(item)``; input errors come back as ``(None, message)`` instead of raising."""
    try:
        return func(item), None
    except INPUT_ERRORS as exc:
        return None, str(exc)


class StructureCommand(BaseCommand):
    """
    Base class for commands that emit a report. Subclasses implement
    ``compute`` and describe the report through ``serializer_class`` (JSON)
    and ``rows`` (CSV and table).
    """
    serializer_class = None
    many = False
    header = ()

    def add_arguments(self, parser):
        self.add_input_arguments(parser)
        parser.add_argument(
            '--reference', choices=Reference.values, default=None,
            help='Reference vertex for remoteness and open contours (default: bn for marked graphs, else center)',
        )
        parser.add_argument(
            '--format', dest='output_format', choices=OutputFormat.values, default=OutputFormat.JSON,
            help='Output format',
        )
        parser.add_argument(
            '--tolerance', type=float, default=None,
            help='Equality tolerance (default: IE_TOLERANCE setting)',
        )
        parser.add_argument(
            '--eps-variant', choices=EpsVariant.values, default=EpsVariant.CENTER,
            help='Eccentricity used in the remoteness weights',
        )
        parser.add_argument(
            '--h21-normalization', choices=H21Normalization.values, default=H21Normalization.ROW,
            help='Normalization of the in-contour degree entropy',
        )

    def add_input_arguments(self, parser):
        pass

    @property
    def workers(self):
        return getattr(settings, 'IE_WORKERS', 1)

    @property
    def places(self):
        return getattr(settings, 'IE_FLOAT_PLACES', 9)

    def handle(self, *args, **options):
        tolerance = options.get('tolerance')
        if tolerance is None:
            tolerance = getattr(settings, 'IE_TOLERANCE', 1e-9)
        if tolerance <= 0:
            raise CommandError(f"tolerance must be positive, got {tolerance}", returncode=INPUT_ERROR_CODE)
        options['tolerance'] = tolerance
        self.failures = []

        try:
            result = self.compute(**options)
        except INPUT_ERRORS as exc:
            raise CommandError(str(exc), returncode=INPUT_ERROR_CODE)

        self.emit(result, options['output_format'])
        self.report_failures()

    def compute(self, **options):
        raise NotImplementedError('subclasses of StructureCommand must provide a compute() method')

    def rows(self, result):
        raise NotImplementedError('subclasses of StructureCommand must provide a rows() method')

    def summary(self, result):
        return ''

    def serialize(self, result):
        return self.serializer_class(result, many=self.many).data

    def emit(self, result, output_format):
        output_format = OutputFormat(output_format)
        summary = self.summary(result)
        if output_format == OutputFormat.JSON:
            self.stdout.write(render_json(self.serialize(result)), ending='')
        elif output_format == OutputFormat.CSV:
            self.stdout.write(render_csv(self.header, self.rows(result), self.places), ending='')
        else:
            self.stdout.write(render_table(self.header, self.rows(result), self.places), ending='')
            if summary:
                self.stdout.write(summary)
            return
        if summary:
            self.stderr.write(self.style.SUCCESS(summary))

    def read_batch(self, paths):
        """Read every path; unreadable or invalid files are recorded as failures and skipped."""
        graphs = []
        for path in paths:
            graph, error = attempt(read_graph, path)
            if error:
                self.failures.append((str(path), error))
            else:
                graphs.append(graph)
        return graphs

    def report_failures(self):
        if not self.failures:
            return
        for source, message in self.failures:
            self.stderr.write(self.style.ERROR(f"{source}: {message}"))
        raise CommandError(f"{len(self.failures)} input(s) failed", returncode=INPUT_ERROR_CODE)


def ie_cells(vector):
    return [
        vector.h11, vector.h12, vector.h1,
        vector.h21, vector.h22, vector.h23, vector.h2,
        vector.amplitude, vector.phase,
    ]


IE_HEADER = ('h11', 'h12', 'h1', 'h21', 'h22', 'h23', 'h2', 'amplitude', 'phase')
