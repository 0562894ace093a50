# ordered-structures-qe -- decider/management/base.py

import json
import logging

from django.core.management.base import BaseCommand, CommandError

from ..conf import decider_setting
from ..theories import TheoryId

# 1: the sentence is false, or the formula unsatisfiable. Errors exit with 2.
EXIT_NEGATIVE = 1
EXIT_ERROR = 2


class ReportCommand(BaseCommand):
    """Run one GraphQL query of project.schema.schema and print its report.

    Subclasses set ``query`` and ``field`` and implement ``variables`` and
    ``write_text``. ``negative`` decides the exit status.
    """

    query = None
    field = None

    def add_arguments(self, parser):
        parser.add_argument('formula')
        parser.add_argument('--theory', required=True, choices=[t.value for t in TheoryId])
        parser.add_argument('--format', choices=['text', 'json'], default=None,
                            help="report format (default: DECIDER['OUTPUT_FORMAT'])")
        parser.add_argument('--trace', action='store_true', default=None,
                            help='include the elimination trace')

    def execute_query(self, variables):
        from project.schema import schema

        result = schema.execute(self.query, variable_values=variables)
        if result.errors:
            raise CommandError('; '.join(e.message for e in result.errors), returncode=EXIT_ERROR)
        return result.data[self.field]

    def handle(self, *args, **options):
        if options['verbosity'] >= 2:
            logging.getLogger('decider').setLevel(logging.DEBUG)
        if options['trace'] is None:
            options['trace'] = decider_setting('TRACE')
        report = self.execute_query(self.variables(options))
        if report.get('trace') is None:
            report.pop('trace', None)
        output_format = options['format'] or decider_setting('OUTPUT_FORMAT')
        if output_format == 'json':
            self.stdout.write(json.dumps(report, indent=2, sort_keys=True, ensure_ascii=False))
        else:
            self.write_text(report)
            self.write_trace(report.get('trace'))
        if self.negative(report):
            raise SystemExit(EXIT_NEGATIVE)

    def write_trace(self, steps):
        for step in steps or []:
            self.stdout.write('[{}] {}'.format(step['rule'], step['anchor']))
            self.stdout.write('    {}'.format(step['before']))
            self.stdout.write('  = {}'.format(step['after']))

    def variables(self, options):
        raise NotImplementedError

    def write_text(self, report):
        raise NotImplementedError

    def negative(self, report):
        return False
