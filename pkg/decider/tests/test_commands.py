# ordered-structures-qe -- decider/tests/test_commands.py

import json
from io import StringIO
from unittest import mock

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase, override_settings

QUICK = {'IDENTITY_BOUND': 5, 'CRT_MODULUS_BOUND': 5}


class CommandTestCase(SimpleTestCase):
    def run_command(self, *args, **options):
        """Return (exit status, stdout) of a management command."""
        out = StringIO()
        try:
            call_command(*args, stdout=out, **options)
        except SystemExit as e:
            return e.code, out.getvalue()
        return 0, out.getvalue()


class DecideCommandTests(CommandTestCase):
    def test_true(self):
        status, out = self.run_command('decide', 'forall x. exists y. x = 2*y', theory='oag-q')
        self.assertEqual(status, 0)
        self.assertEqual(out, 'true\n')

    def test_false(self):
        status, out = self.run_command('decide', 'forall x. exists y. x = 2*y', theory='presburger-z')
        self.assertEqual(status, 1)
        self.assertEqual(out, 'false\n')

    def test_json(self):
        status, out = self.run_command('decide', 'exists x. x*x = -1', theory='mul-q', format='json')
        self.assertEqual(status, 1)
        report = json.loads(out)
        self.assertEqual(report['truth'], False)
        self.assertEqual(report['theory'], 'mul-q')
        self.assertEqual(report['free_variables'], [])
        self.assertNotIn('trace', report)

    def test_trace(self):
        status, out = self.run_command('decide', 'forall x. exists y. x < y', theory='dlo-r',
                                       trace=True)
        self.assertEqual(status, 0)
        self.assertIn('[eliminate-dlo] dense linear order without endpoints', out)

    @override_settings(DECIDER={'OUTPUT_FORMAT': 'json', 'TRACE': True})
    def test_settings_defaults(self):
        status, out = self.run_command('decide', 'forall x. exists y. x < y', theory='dlo-q')
        report = json.loads(out)
        self.assertTrue(report['truth'])
        self.assertGreaterEqual(len(report['trace']), 2)

    def test_parse_error(self):
        with self.assertRaises(CommandError) as cm:
            self.run_command('decide', 'forall x.', theory='dlo-q')
        self.assertEqual(cm.exception.returncode, 2)

    def test_signature_error(self):
        with self.assertRaises(CommandError) as cm:
            self.run_command('decide', 'exists x. pow(2, x)', theory='mul-r')
        self.assertEqual(cm.exception.returncode, 2)
        self.assertIn("'pow'", str(cm.exception))

    def test_unknown_theory(self):
        with self.assertRaises(CommandError):
            self.run_command('decide', 'true', theory='groups')


class EliminateCommandTests(CommandTestCase):
    def test_text(self):
        status, out = self.run_command('eliminate', 'exists x. y < x /\\ x < z', theory='order-z')
        self.assertEqual(status, 0)
        self.assertEqual(out, 's(y) < z\n')

    def test_json(self):
        status, out = self.run_command('eliminate', 'exists y. x = 2*y', theory='presburger-z',
                                       format='json', trace=True)
        report = json.loads(out)
        self.assertEqual(report['eliminated'], 'x == 0 mod 2')
        self.assertEqual(report['free_variables'], ['x'])
        self.assertEqual(report['trace'][0]['rule'], 'eliminate-presburger')


class WitnessCommandTests(CommandTestCase):
    def test_witness(self):
        status, out = self.run_command('witness', 'exists x. y < x /\\ x < z', theory='dlo-q',
                                       assign='y=0,z=1')
        self.assertEqual(status, 0)
        self.assertEqual(out, 'x = 1/2\n')

    def test_unsatisfiable(self):
        status, out = self.run_command('witness', 'exists x. x + x = y', theory='presburger-z',
                                       assign='y=5')
        self.assertEqual(status, 1)
        self.assertIn('unsatisfiable', out)
        self.assertIn('certificate: ', out)

    def test_irrational_witness_falls_back_to_search(self):
        status, out = self.run_command('witness', 'exists x. x*x = y', theory='mul-r',
                                       assign='y=2', budget=5)
        self.assertEqual(status, 0)
        self.assertIn('no rational witness', out)

    def test_bad_assignment(self):
        with self.assertRaises(CommandError) as cm:
            self.run_command('witness', 'exists x. x < y', theory='order-n', assign='y=-1')
        self.assertEqual(cm.exception.returncode, 2)


@override_settings(DECIDER=QUICK)
class SelftestCommandTests(CommandTestCase):
    def test_pass(self):
        status, out = self.run_command('selftest', suite=['hinman-identity', 'crt-sweep'])
        self.assertEqual(status, 0)
        self.assertIn('PASS hinman-identity', out)
        self.assertIn('PASS crt-sweep', out)

    def test_failure_manifest(self):
        with mock.patch('decider.selftest.crt_solve', return_value=None):
            status, out = self.run_command('selftest', suite=['crt-sweep', 'hinman-identity'])
        self.assertEqual(status, 1)
        self.assertIn('FAIL crt-sweep', out)
        self.assertIn('failed suites: crt-sweep\n', out)

    def test_json(self):
        status, out = self.run_command('selftest', suite=['robinson-identity'], format='json')
        report = json.loads(out)
        self.assertEqual(report['failed'], [])
        self.assertEqual(report['suites'][0]['name'], 'robinson-identity')
