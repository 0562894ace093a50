# ordered-structures-qe -- decider/tests/test_witnesses.py

from fractions import Fraction

from django.test import SimpleTestCase
from hypothesis import given, settings, strategies as st

from decider.driver import qe_driver
from decider.engine import Cube
from decider.evaluation import eval_qf, parse_assignment, search_witness
from decider.exceptions import EvaluationError, WitnessError, WitnessUnavailable
from decider.formulas import Cong, Eq, Exists, Less, Not, Re, rename_apart
from decider.numeric import is_nth_power
from decider.parser import parse_formula
from decider.terms import LinearTerm, Monomial, OrderTerm
from decider.theories import TheoryId
from decider.witnesses import extract_witness, witness_block

from .strategies import ASSIGNMENTS_PER_FORMULA, SOUNDNESS_FORMULAS, formulas, values


class EvaluationTests(SimpleTestCase):
    def test_reciprocal_of_zero(self):
        f = parse_formula('inv(x) = 0', TheoryId.MUL_Q)
        self.assertTrue(eval_qf(f, TheoryId.MUL_Q, {'x': Fraction(0)}))
        self.assertFalse(eval_qf(f, TheoryId.MUL_Q, {'x': Fraction(2)}))

    def test_cancelled_variable_keeps_zero(self):
        f = parse_formula('x * inv(x) = 1', TheoryId.MUL_Q)
        self.assertFalse(eval_qf(f, TheoryId.MUL_Q, {'x': Fraction(0)}))
        self.assertTrue(eval_qf(f, TheoryId.MUL_Q, {'x': Fraction(-3)}))

    def test_congruence_and_powers(self):
        f = parse_formula('x == 7 mod 4', TheoryId.PRESBURGER_Z)
        self.assertTrue(eval_qf(f, TheoryId.PRESBURGER_Z, {'x': -1}))
        f = parse_formula('pow(3, x*y)', TheoryId.MUL_Q)
        self.assertTrue(eval_qf(f, TheoryId.MUL_Q, {'x': Fraction(-2), 'y': Fraction(4)}))

    def test_errors(self):
        f = parse_formula('x < y', TheoryId.DLO_Q)
        with self.assertRaises(EvaluationError):
            eval_qf(f, TheoryId.DLO_Q, {'x': 1})
        with self.assertRaises(EvaluationError):
            eval_qf(parse_formula('exists x. x < y', TheoryId.DLO_Q), TheoryId.DLO_Q, {'y': 0})
        with self.assertRaises(EvaluationError):
            eval_qf(parse_formula('x < y', TheoryId.ORDER_N), TheoryId.ORDER_N, {'x': -1, 'y': 0})
        with self.assertRaises(EvaluationError):
            eval_qf(parse_formula('x < y', TheoryId.ORDER_Z), TheoryId.ORDER_Z,
                    {'x': Fraction(1, 2), 'y': 0})
        with self.assertRaises(EvaluationError):
            eval_qf(parse_formula('x < y', TheoryId.MUL_Q_POS), TheoryId.MUL_Q_POS,
                    {'x': Fraction(0), 'y': Fraction(1)})

    def test_parse_assignment(self):
        self.assertEqual(parse_assignment('x=1/2, y=3', TheoryId.DLO_Q),
                         {'x': Fraction(1, 2), 'y': Fraction(3)})
        self.assertEqual(parse_assignment('', TheoryId.DLO_Q), {})
        self.assertEqual(parse_assignment('n=4', TheoryId.PRESBURGER_N), {'n': 4})
        with self.assertRaises(EvaluationError):
            parse_assignment('x=1/2', TheoryId.PRESBURGER_Z)
        with self.assertRaises(EvaluationError):
            parse_assignment('x', TheoryId.DLO_Q)
        with self.assertRaises(EvaluationError):
            parse_assignment('x=abc', TheoryId.DLO_Q)


class ExtractWitnessTests(SimpleTestCase):
    def test_dense_midpoint(self):
        cube = Cube('x', (Less(OrderTerm('y'), OrderTerm('x')), Less(OrderTerm('x'), OrderTerm('z'))))
        witness = extract_witness(cube, TheoryId.DLO_Q, {'y': Fraction(0), 'z': Fraction(1)})
        self.assertTrue(witness.verified)
        self.assertEqual(witness.values, {'x': Fraction(1, 2)})

    def test_integer_gap(self):
        cube = Cube('x', (Less(OrderTerm('y'), OrderTerm('x')), Less(OrderTerm('x'), OrderTerm('z'))))
        witness = extract_witness(cube, TheoryId.ORDER_Z, {'y': 0, 'z': 2})
        self.assertEqual(witness.values, {'x': 1})
        with self.assertRaises(WitnessError):
            extract_witness(cube, TheoryId.ORDER_Z, {'y': 0, 'z': 1})

    def test_congruence_representative(self):
        x = LinearTerm.var('x')
        cube = Cube('x', (Cong(3, x, LinearTerm.constant(2)), Less(LinearTerm.constant(10), x)))
        witness = extract_witness(cube, TheoryId.PRESBURGER_Z, {})
        self.assertEqual(witness.values, {'x': 11})

    def test_naturals_start_at_zero(self):
        cube = Cube('x', (Less(LinearTerm.var('x'), LinearTerm.var('y')),))
        witness = extract_witness(cube, TheoryId.PRESBURGER_N, {'y': 5})
        self.assertEqual(witness.values, {'x': 0})

    def test_power_classes(self):
        x, t, u = Monomial.var('x'), Monomial.var('t'), Monomial.var('u')
        cube = Cube('x', (Re(2, x * t), Not(Re(2, x * u))))
        a = {'t': Fraction(2), 'u': Fraction(3)}
        witness = extract_witness(cube, TheoryId.MUL_Q_POS, a)
        value = witness.values['x']
        self.assertTrue(is_nth_power(value * 2, 2))
        self.assertFalse(is_nth_power(value * 3, 2))

    def test_rational_root(self):
        x = Monomial.var('x')
        cube = Cube('x', (Eq(x * x, Monomial.var('y')),))
        witness = extract_witness(cube, TheoryId.MUL_Q, {'y': Fraction(4)})
        self.assertEqual(witness.values['x'] ** 2, 4)

    def test_irrational_root(self):
        x = Monomial.var('x')
        cube = Cube('x', (Eq(x * x, Monomial.var('y')),))
        with self.assertRaises(WitnessUnavailable):
            extract_witness(cube, TheoryId.MUL_R, {'y': Fraction(2)})


class WitnessBlockTests(SimpleTestCase):
    def test_two_variables(self):
        f = parse_formula('exists x. exists y. (x < y /\\ y < z)', TheoryId.DLO_Q)
        witness = witness_block(f, TheoryId.DLO_Q, {'z': Fraction(0)})
        self.assertTrue(witness.verified)
        self.assertLess(witness.values['x'], witness.values['y'])
        self.assertLess(witness.values['y'], 0)

    def test_naturals(self):
        f = parse_formula('exists x. x + x = y', TheoryId.PRESBURGER_N)
        self.assertEqual(witness_block(f, TheoryId.PRESBURGER_N, {'y': 6}).values, {'x': 3})
        self.assertIsNone(witness_block(f, TheoryId.PRESBURGER_N, {'y': 5}))

    def test_disjunction(self):
        f = parse_formula('exists x. (x < y \\/ z < x) /\\ ~(x = y)', TheoryId.ORDER_Z)
        witness = witness_block(f, TheoryId.ORDER_Z, {'y': 0, 'z': 3})
        self.assertTrue(witness.verified)

    def test_search(self):
        f = parse_formula('exists x. x*x = y', TheoryId.MUL_R)
        self.assertIsNone(search_witness(f, TheoryId.MUL_R, {'y': Fraction(2)}, 10))
        found = search_witness(f, TheoryId.MUL_R, {'y': Fraction(4)}, 10)
        self.assertTrue(found.verified)
        self.assertEqual(found.values['x'] ** 2, 4)


class SoundnessTests(SimpleTestCase):
    """A true eliminated form yields a verified witness; a false one leaves bounded search empty.

    Each formula is ∃x over a matrix with up to two more quantifiers, checked
    against a batch of assignments to its free variables y and z.
    """

    def check(self, theory, f, assignments):
        result, _ = qe_driver(f, theory)
        for a in assignments:
            if eval_qf(result, theory, a):
                try:
                    witness = witness_block(f, theory, a)
                except WitnessUnavailable:
                    # irrational roots over the reals
                    continue
                self.assertIsNotNone(witness, msg=repr(a))
                self.assertTrue(witness.verified, msg=repr(a))
            else:
                self.assertIsNone(search_witness(f, theory, a, 6), msg=repr(a))


def _soundness(theory):
    pair = st.tuples(values(theory), values(theory))

    @settings(max_examples=SOUNDNESS_FORMULAS)
    @given(formulas(theory, ('x', 'y', 'z'), max_quantifiers=2, max_leaves=3),
           st.lists(pair, min_size=ASSIGNMENTS_PER_FORMULA, max_size=ASSIGNMENTS_PER_FORMULA))
    def test(self, matrix, pairs):
        f = rename_apart(Exists('x', matrix))
        self.check(theory, f, [{'y': y, 'z': z} for y, z in pairs])
    return test


for _theory in TheoryId:
    setattr(SoundnessTests, 'test_' + _theory.value.replace('-', '_'), _soundness(_theory))
