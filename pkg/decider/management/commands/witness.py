# ordered-structures-qe -- decider/management/commands/witness.py

from ..base import ReportCommand


class Command(ReportCommand):
    help = ('Find verified values for the leading exists-block of a formula. '
            'Exits 1 with the elimination certificate when it is unsatisfiable.')

    field = 'witness'
    query = '''
      query Witness($theory: String!, $formula: String!, $assign: String, $budget: Int,
                    $trace: Boolean) {
        witness(theory: $theory, formula: $formula, assign: $assign, budget: $budget,
                trace: $trace) {
          theory input eliminated free_variables satisfiable witness
          trace { rule anchor before after }
        }
      }
    '''

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument('--assign', default='', metavar='NAME=VALUE,...',
                            help='values of the free variables')
        parser.add_argument('--budget', type=int, default=None,
                            help="bounded search size (default: DECIDER['WITNESS_BUDGET'])")

    def variables(self, options):
        return {'theory': options['theory'], 'formula': options['formula'],
                'assign': options['assign'], 'budget': options['budget'],
                'trace': options['trace']}

    def write_text(self, report):
        if not report['satisfiable']:
            self.stdout.write('unsatisfiable')
            self.stdout.write('certificate: {}'.format(report['eliminated']))
        elif report['witness'] is None:
            self.stdout.write('satisfiable, but no rational witness within the search budget')
        else:
            for name, value in report['witness'].items():
                self.stdout.write('{} = {}'.format(name, value))

    def negative(self, report):
        return not report['satisfiable']
