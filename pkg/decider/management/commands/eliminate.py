# ordered-structures-qe -- decider/management/commands/eliminate.py

from ..base import ReportCommand


class Command(ReportCommand):
    help = 'Print a quantifier-free equivalent of a formula.'

    field = 'eliminate'
    query = '''
      query Eliminate($theory: String!, $formula: String!, $trace: Boolean) {
        eliminate(theory: $theory, formula: $formula, trace: $trace) {
          theory input eliminated free_variables
          trace { rule anchor before after }
        }
      }
    '''

    def variables(self, options):
        return {'theory': options['theory'], 'formula': options['formula'],
                'trace': options['trace']}

    def write_text(self, report):
        self.stdout.write(report['eliminated'])
