# ordered-structures-qe -- decider/tests/test_engines.py

from fractions import Fraction
from itertools import product

from django.test import SimpleTestCase
from hypothesis import given, strategies as st

from decider.driver import decide, qe_driver
from decider.engine import Cube, normalize_literals
from decider.evaluation import eval_qf, eval_term
from decider.exceptions import NumericError, OpenFormulaError
from decider.formulas import (
    TRUE, And, Cong, Exists, Less, Not, Or, Re, is_quantifier_free, quantifier_count,
)
from decider.numeric import is_nth_power
from decider.parser import parse_formula
from decider.printer import print_formula
from decider.qe_additive import eliminate_presburger, merge_congruences
from decider.qe_mult import merge_re_atoms, sign_split, witness_m11
from decider.terms import LinearTerm, Monomial
from decider.theories import TheoryId

from .strategies import formulas, presburger_cubes

RATIONALS = [Fraction(p, q) for p in range(-4, 5) for q in (1, 2, 3)]


class EliminationTestCase(SimpleTestCase):
    def eliminate(self, text, theory):
        result, trace = qe_driver(parse_formula(text, theory), theory)
        self.assertTrue(is_quantifier_free(result), msg=print_formula(result))
        return result

    def assertEquivalentOnGrid(self, text, theory, oracle, names, grid):
        """The eliminated form agrees with oracle(*values) on every point of the grid."""
        result = self.eliminate(text, theory)
        for values in product(grid, repeat=len(names)):
            a = dict(zip(names, values))
            self.assertEqual(eval_qf(result, theory, a), oracle(*values),
                             msg='{} at {}'.format(print_formula(result), a))


class OrderTests(EliminationTestCase):
    def test_dense_interval(self):
        result = self.eliminate('exists x. y < x /\\ x < z', TheoryId.DLO_Q)
        self.assertEqual(print_formula(result), 'y < z')

    def test_integer_interval(self):
        result = self.eliminate('exists x. y < x /\\ x < z', TheoryId.ORDER_Z)
        self.assertEqual(print_formula(result), 's(y) < z')

    def test_natural_upper_bound(self):
        result = self.eliminate('exists x. x < y', TheoryId.ORDER_N)
        self.assertEqual(print_formula(result), '0 < y')

    def test_natural_predecessor(self):
        result = self.eliminate('exists x. s(x) = y', TheoryId.ORDER_N)
        self.assertEqual(print_formula(result), '0 < y')

    def test_unbounded_is_true(self):
        self.assertEqual(self.eliminate('exists x. y < x', TheoryId.DLO_R), TRUE)

    def test_integer_grid(self):
        self.assertEquivalentOnGrid(
            'exists x. (y < x /\\ s(x) < z) \\/ x = s(s(y))', TheoryId.ORDER_Z,
            lambda y, z: True, ['y', 'z'], range(-3, 4))
        self.assertEquivalentOnGrid(
            'exists x. y < x /\\ s(x) < z', TheoryId.ORDER_Z,
            lambda y, z: z - y >= 3, ['y', 'z'], range(-3, 4))

    def test_natural_grid(self):
        self.assertEquivalentOnGrid(
            'exists x. s(s(x)) = y /\\ x < z', TheoryId.ORDER_N,
            lambda y, z: y >= 2 and y - 2 < z, ['y', 'z'], range(0, 6))


class AdditiveTests(EliminationTestCase):
    def test_divisible_interval(self):
        result = self.eliminate('exists x. y < x /\\ x < z', TheoryId.OAG_Q)
        self.assertEqual(print_formula(result), 'y < z')

    def test_halving_needs_parity(self):
        result = self.eliminate('exists y. x = 2*y', TheoryId.PRESBURGER_Z)
        self.assertEqual(print_formula(result), 'x == 0 mod 2')

    def test_scaled_interval(self):
        self.assertEquivalentOnGrid(
            'exists x. y < 3*x /\\ 3*x < z', TheoryId.PRESBURGER_Z,
            lambda y, z: any(y < 3 * x < z for x in range(-3, 4)), ['y', 'z'], range(-6, 7))

    def test_congruences(self):
        self.assertEquivalentOnGrid(
            'exists x. (x == y mod 4 /\\ x == z mod 6 /\\ 0 < x /\\ x < 13)', TheoryId.PRESBURGER_Z,
            lambda y, z: any((x - y) % 4 == 0 and (x - z) % 6 == 0 for x in range(1, 13)),
            ['y', 'z'], range(0, 12))

    def test_negated_congruence(self):
        self.assertEquivalentOnGrid(
            'exists x. (~(x == y mod 3) /\\ y < x /\\ x < y + 2)', TheoryId.PRESBURGER_Z,
            lambda y: True, ['y'], range(-5, 6))

    def test_naturals(self):
        self.assertEquivalentOnGrid(
            'exists x. x + 3 = y', TheoryId.PRESBURGER_N,
            lambda y: y >= 3, ['y'], range(0, 8))

    def test_divisible_grid(self):
        grid = [Fraction(p, 2) for p in range(-4, 5)]
        self.assertEquivalentOnGrid(
            'exists x. (y < 2*x /\\ x < z /\\ ~(x = 0))', TheoryId.OAG_Q,
            lambda y, z: y < 2 * z, ['y', 'z'], grid)

    def test_merge_congruences(self):
        n, t, side = merge_congruences((4, LinearTerm.var('a')), (6, LinearTerm.var('b')))
        self.assertEqual(n, 12)
        for a, b in product(range(12), repeat=2):
            values = {'a': a, 'b': b}
            consistent = (a - b) % 2 == 0
            self.assertEqual(eval_qf(side, TheoryId.PRESBURGER_Z, values), consistent)
            if consistent:
                y = eval_term(t, values)
                self.assertEqual((y - a) % 4, 0)
                self.assertEqual((y - b) % 6, 0)

    def test_unsatisfiable_congruence_classes_are_pruned(self):
        y, z = LinearTerm.var('y'), LinearTerm.var('z')
        cube = Cube('x', (Less(y, LinearTerm.var('x', 3)), Less(LinearTerm.var('x', 2), z)))
        result = eliminate_presburger(cube)
        # 6x ranges over multiples of 6 and 3z - 1 only meets the classes 2 and 5
        self.assertIsInstance(result, Or)
        self.assertEqual(len(result.args), 2)
        for a, b in product(range(-9, 10), repeat=2):
            expected = any(a < 3 * x and 2 * x < b for x in range(-10, 10))
            self.assertEqual(eval_qf(result, TheoryId.PRESBURGER_Z, {'y': a, 'z': b}), expected)

    def test_normalize_negated_congruence(self):
        x, y = LinearTerm.var('x'), LinearTerm.var('y')
        result = normalize_literals(Not(Cong(3, x, y)))
        self.assertEqual(result, Or((Cong(3, x, y + LinearTerm.constant(1)),
                                     Cong(3, x, y + LinearTerm.constant(2)))))


class MultiplicativeTests(EliminationTestCase):
    def test_rational_square_roots(self):
        self.assertEquivalentOnGrid(
            'exists x. x*x = y', TheoryId.MUL_Q,
            lambda y: is_nth_power(y, 2), ['y'], RATIONALS + [Fraction(9, 4)])

    def test_real_square_roots(self):
        self.assertEquivalentOnGrid(
            'exists x. x*x = y', TheoryId.MUL_R, lambda y: y >= 0, ['y'], RATIONALS)

    def test_rational_cube_roots(self):
        self.assertEquivalentOnGrid(
            'exists x. x^3 = y', TheoryId.MUL_Q,
            lambda y: is_nth_power(y, 3), ['y'], RATIONALS + [Fraction(-8, 27)])

    def test_negative_root(self):
        self.assertEquivalentOnGrid(
            'exists x. (x < 0 /\\ x*x = y)', TheoryId.MUL_Q,
            lambda y: y > 0 and is_nth_power(y, 2), ['y'], RATIONALS)

    def test_squares_between(self):
        grid = [q for q in RATIONALS if q > 0]
        self.assertEquivalentOnGrid(
            'exists x. (y < x /\\ x < z /\\ pow(2, x))', TheoryId.MUL_Q_POS,
            lambda y, z: y < z, ['y', 'z'], grid)

    def test_power_class_of_product(self):
        grid = [Fraction(1), Fraction(2), Fraction(4), Fraction(1, 2), Fraction(8), Fraction(9, 2)]
        self.assertEquivalentOnGrid(
            'exists x. (pow(2, x*y) /\\ ~pow(2, x))', TheoryId.MUL_Q_POS,
            lambda y: not is_nth_power(y, 2), ['y'], grid)

    def test_sign_split(self):
        f = parse_formula('x*y < 1', TheoryId.MUL_Q)
        split = sign_split(f, {'x', 'y'})
        for x, y in product(RATIONALS, repeat=2):
            a = {'x': x, 'y': y}
            self.assertEqual(eval_qf(split, TheoryId.MUL_Q, a), eval_qf(f, TheoryId.MUL_Q, a))

    def test_sign_cases_fold(self):
        self.assertEqual(self.eliminate('exists x. x^3 = y', TheoryId.MUL_R), TRUE)

    def test_merge_re_atoms(self):
        x, t, u = Monomial.var('x'), Monomial.var('t'), Monomial.var('u')
        atoms = [Re(2, x * t), Re(3, x * u)]
        n, beta, side = merge_re_atoms(atoms, 'x')
        self.assertEqual(n, 6)
        merged = Re(n, x * beta)
        for values in product([Fraction(1), Fraction(2), Fraction(4), Fraction(1, 8)], repeat=3):
            a = dict(zip('xtu', values))
            left = all(eval_qf(atom, TheoryId.MUL_Q_POS, a) for atom in atoms)
            right = eval_qf(merged, TheoryId.MUL_Q_POS, a) and eval_qf(side, TheoryId.MUL_Q_POS, a)
            self.assertEqual(left, right, msg=repr(a))

    def test_preconditions(self):
        with self.assertRaises(NumericError):
            merge_re_atoms([], 'x')
        with self.assertRaises(NumericError):
            merge_re_atoms([Re(2, Monomial.var('x', 2))], 'x')
        with self.assertRaises(NumericError):
            witness_m11([Fraction(2)], 4, [2])


class PresburgerScanTests(SimpleTestCase):
    """Elimination over ℤ agrees with scanning x through [-500, 500]."""

    @given(presburger_cubes(), st.lists(st.tuples(st.integers(-20, 20), st.integers(-20, 20)),
                                         min_size=1, max_size=5))
    def test_cube_against_scan(self, literals, pairs):
        theory = TheoryId.PRESBURGER_Z
        matrix = And(literals)
        result, _ = qe_driver(Exists('x', matrix), theory)
        for y, z in pairs:
            expected = any(eval_qf(matrix, theory, {'x': x, 'y': y, 'z': z})
                           for x in range(-500, 501))
            self.assertEqual(eval_qf(result, theory, {'y': y, 'z': z}), expected,
                             msg='{} at y={}, z={}'.format(print_formula(matrix), y, z))


class DecideTests(SimpleTestCase):
    def decide(self, text, theory):
        truth, trace = decide(parse_formula(text, theory), theory)
        return truth

    def test_discriminating_pairs(self):
        cube_roots = 'forall x. exists y. y^3 = x'
        self.assertTrue(self.decide(cube_roots, TheoryId.MUL_R))
        self.assertFalse(self.decide(cube_roots, TheoryId.MUL_Q))
        halving = 'forall x. exists y. x = 2*y'
        self.assertTrue(self.decide(halving, TheoryId.OAG_Q))
        self.assertFalse(self.decide(halving, TheoryId.PRESBURGER_Z))
        predecessor = 'forall x. exists y. s(y) = x'
        self.assertTrue(self.decide(predecessor, TheoryId.ORDER_Z))
        self.assertFalse(self.decide(predecessor, TheoryId.ORDER_N))
        density = 'forall x. forall y. (x < y -> (exists z. (x < z /\\ z < y)))'
        self.assertTrue(self.decide(density, TheoryId.DLO_Q))
        self.assertFalse(self.decide(density, TheoryId.ORDER_Z))

    def test_open_formula(self):
        with self.assertRaises(OpenFormulaError) as cm:
            decide(parse_formula('exists x. x < y', TheoryId.DLO_Q), TheoryId.DLO_Q)
        self.assertEqual(cm.exception.variables, ['y'])

    def test_trace_steps(self):
        f = parse_formula('forall x. exists y. x < y', TheoryId.DLO_Q)
        truth, trace = decide(f, TheoryId.DLO_Q)
        self.assertTrue(truth)
        self.assertEqual([step.rule for step in trace][:2], ['eliminate-dlo', 'eliminate-dlo'])
        self.assertEqual(trace.replay(f), TRUE)

    def test_naturals_are_relativized(self):
        f = parse_formula('exists x. x + 1 = 0', TheoryId.PRESBURGER_N)
        truth, trace = decide(f, TheoryId.PRESBURGER_N)
        self.assertFalse(truth)
        self.assertEqual(list(trace)[0].rule, 'relativize')


class TracePropertyTests(SimpleTestCase):
    """Replaying the trace from the input reproduces the output; elimination is idempotent."""

    def check(self, theory, f):
        result, trace = qe_driver(f, theory)
        self.assertTrue(is_quantifier_free(result))
        self.assertEqual(trace.replay(f), result)
        self.assertGreaterEqual(len(trace), quantifier_count(f))
        again, _ = qe_driver(result, theory)
        self.assertEqual(again, result)

    @given(formulas(TheoryId.DLO_Q))
    def test_dense_order(self, f):
        self.check(TheoryId.DLO_Q, f)

    @given(formulas(TheoryId.ORDER_N))
    def test_natural_order(self, f):
        self.check(TheoryId.ORDER_N, f)

    @given(formulas(TheoryId.OAG_R))
    def test_divisible_group(self, f):
        self.check(TheoryId.OAG_R, f)

    @given(formulas(TheoryId.PRESBURGER_Z, max_leaves=3))
    def test_presburger(self, f):
        self.check(TheoryId.PRESBURGER_Z, f)

    @given(formulas(TheoryId.MUL_Q_POS, variables=('x', 'y'), max_quantifiers=1, max_leaves=3))
    def test_positive_rationals(self, f):
        result, trace = qe_driver(f, TheoryId.MUL_Q_POS)
        self.assertEqual(trace.replay(f), result)
