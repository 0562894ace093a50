# ordered-structures-qe -- decider/management/commands/selftest.py

import json
import logging

from ..base import EXIT_NEGATIVE, ReportCommand
from ...conf import decider_setting
from ...selftest import SUITES


class Command(ReportCommand):
    help = 'Run the oracle suites. Exits 0 when all pass, 1 with a failure manifest otherwise.'

    field = 'selftest'
    query = '''
      query Selftest($suites: [String]) {
        selftest(suites: $suites) { name passed detail }
      }
    '''

    def add_arguments(self, parser):
        parser.add_argument('--format', choices=['text', 'json'], default=None)
        parser.add_argument('--suite', action='append', choices=list(SUITES), dest='suites',
                            help='run only this suite (repeatable)')

    def handle(self, *args, **options):
        if options['verbosity'] >= 2:
            logging.getLogger('decider').setLevel(logging.DEBUG)
        results = self.execute_query({'suites': options['suites']})
        failed = [r['name'] for r in results if not r['passed']]
        if (options['format'] or decider_setting('OUTPUT_FORMAT')) == 'json':
            self.stdout.write(json.dumps({'suites': results, 'failed': failed}, indent=2))
        else:
            for r in results:
                self.stdout.write('{} {}: {}'.format('PASS' if r['passed'] else 'FAIL',
                                                     r['name'], r['detail']))
            if failed:
                self.stdout.write('failed suites: {}'.format(', '.join(failed)))
        if failed:
            raise SystemExit(EXIT_NEGATIVE)
