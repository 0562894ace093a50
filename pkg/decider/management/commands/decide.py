# ordered-structures-qe -- decider/management/commands/decide.py

from ..base import ReportCommand


class Command(ReportCommand):
    help = 'Decide a closed sentence. Exits 0 when it is true, 1 when false, 2 on error.'

    field = 'decide'
    query = '''
      query Decide($theory: String!, $formula: String!, $trace: Boolean) {
        decide(theory: $theory, formula: $formula, trace: $trace) {
          theory input eliminated free_variables truth
          trace { rule anchor before after }
        }
      }
    '''

    def variables(self, options):
        return {'theory': options['theory'], 'formula': options['formula'],
                'trace': options['trace']}

    def write_text(self, report):
        self.stdout.write('true' if report['truth'] else 'false')

    def negative(self, report):
        return not report['truth']
