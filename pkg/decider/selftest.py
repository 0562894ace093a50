# ordered-structures-qe -- decider/selftest.py
"""Oracle suites run by ``./manage.py selftest``.

Each suite takes the resolved configuration and returns (passed, detail).
"""

import logging
import os
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement, product

from django.core import serializers

from .axioms import axiom_instances
from .driver import decide
from .engine import Cube
from .evaluation import eval_qf, search_witness
from .exceptions import WitnessError
from .formulas import And, Exists, Less, Not, Re, conj
from .identities import check_hinman_identity, check_robinson_identity
from .numeric import crt_solve, is_nth_power, lcm_all
from .parser import parse_formula
from .qe_mult import eliminate_mul_q_plus, merge_re_atoms, witness_m10, witness_m11
from .terms import Monomial
from .theories import TheoryId, theory_from_name
from .witnesses import extract_witness

logger = logging.getLogger(__name__)

BATTERY_PATH = os.path.join(os.path.dirname(__file__), 'fixtures', 'battery.json')
TEST_PRIMES = (2, 3, 5, 7)


@dataclass
class SuiteResult:
    name: str
    passed: bool
    detail: str


def _test_rationals(rng, low=-4, high=4):
    value = Fraction(1)
    for prime in TEST_PRIMES:
        value *= Fraction(prime) ** rng.randint(low, high)
    return value


# ========== suites ==========

def robinson_identity(config):
    bound = config['IDENTITY_BOUND']
    integers = check_robinson_identity(bound)
    naturals = check_robinson_identity(bound, naturals=True)
    return integers and naturals, 'bound {}: integers {}, naturals {}'.format(bound, integers, naturals)


def hinman_identity(config):
    bound = config['IDENTITY_BOUND']
    ok = check_hinman_identity(bound)
    return ok, 'bound {}'.format(bound)


def crt_sweep(config):
    bound = config['CRT_MODULUS_BOUND']
    moduli = range(2, bound + 1)
    checked = 0
    for size in (1, 2):
        for combination in combinations_with_replacement(moduli, size):
            modulus = lcm_all(combination)
            for residues in product(*[range(n) for n in combination]):
                pairs = list(zip(combination, residues))
                hits = [x for x in range(modulus) if all(x % n == t for n, t in pairs)]
                expected = hits[0] if hits else None
                if crt_solve(pairs) != expected:
                    return False, 'crt_solve({}) != {}'.format(pairs, expected)
                checked += 1
    return True, '{} systems'.format(checked)


def _integer_root(k, n, powers):
    return k in powers[n]


def power_oracle(config):
    height = config['POWER_ORACLE_HEIGHT']
    degree = config['POWER_ORACLE_DEGREE']
    powers = {n: {c ** n for c in range(height + 1)} for n in range(1, degree + 1)}
    checked = 0
    for q in range(1, height + 1):
        for p in range(-height, height + 1):
            value = Fraction(p, q)
            if value.denominator != q:
                continue
            for n in range(1, degree + 1):
                if p < 0 and n % 2 == 0:
                    expected = False
                else:
                    expected = (_integer_root(abs(value.numerator), n, powers) and
                                _integer_root(value.denominator, n, powers))
                if is_nth_power(value, n) != expected:
                    return False, 'is_nth_power({}, {}) != {}'.format(value, n, expected)
                checked += 1
    return True, '{} cases'.format(checked)


def power_lcm(config):
    """Re_m(q) ∧ Re_n(q) ↔ Re_lcm(m,n)(q) on the small-prime test set."""
    degree = config['POWER_ORACLE_DEGREE']
    checked = 0
    for exponents in product(range(-4, 5), repeat=len(TEST_PRIMES)):
        value = Fraction(1)
        for prime, e in zip(TEST_PRIMES, exponents):
            value *= Fraction(prime) ** e
        for m in range(2, degree + 1):
            for n in range(m, degree + 1):
                both = is_nth_power(value, m) and is_nth_power(value, n)
                if both != is_nth_power(value, lcm_all([m, n])):
                    return False, 'lcm law fails for {} with {} and {}'.format(value, m, n)
                checked += 1
    return True, '{} cases'.format(checked)


def power_merge(config):
    """Random instances of merging Re atoms against direct evaluation."""
    rng = random.Random(config['PROPERTY_SEED'])
    degree = config['POWER_ORACLE_DEGREE']
    x = Monomial.var('x')
    for _ in range(config['PROPERTY_INSTANCES']):
        size = rng.randint(1, 3)
        atoms = [Re(rng.randint(2, degree), x * Monomial.var('t{}'.format(i))) for i in range(size)]
        a = {'t{}'.format(i): _test_rationals(rng, -3, 3) for i in range(size)}
        a['x'] = _test_rationals(rng, -3, 3)
        n, beta, side = merge_re_atoms(atoms, 'x')
        left = eval_qf(conj(*atoms), TheoryId.MUL_Q_POS, a)
        right = eval_qf(conj(Re(n, x * beta), side), TheoryId.MUL_Q_POS, a)
        if left != right:
            return False, 'merge disagrees on {} at {}'.format(atoms, a)
    return True, '{} instances'.format(config['PROPERTY_INSTANCES'])


def bounded_power_class(config):
    """∃x(u < x < v ∧ Re_n(x·t) ∧ ¬Re_m(x·s)): elimination agrees with witnesses and search."""
    rng = random.Random(config['PROPERTY_SEED'] + 1)
    budget = config['SELFTEST_SEARCH_BUDGET']
    theory = TheoryId.MUL_Q_POS
    x, u, v, t, s = (Monomial.var(name) for name in 'xuvts')
    for _ in range(config['PROPERTY_INSTANCES']):
        n, m = rng.randint(2, 4), rng.randint(2, 4)
        cube = Cube('x', (Less(u, x), Less(x, v), Re(n, x * t), Not(Re(m, x * s))))
        a = {name: _test_rationals(rng, -2, 2) for name in 'uvts'}
        eliminated = eliminate_mul_q_plus(cube)
        if eval_qf(eliminated, theory, a):
            try:
                extract_witness(cube, theory, a)
            except WitnessError as e:
                return False, 'no witness although eliminated form holds: {}'.format(e)
        else:
            f = Exists('x', And(cube.literals))
            if search_witness(f, theory, a, budget) is not None:
                return False, 'search found a witness although eliminated form fails at {}'.format(a)
    return True, '{} instances'.format(config['PROPERTY_INSTANCES'])


def witness_constructors(config):
    rng = random.Random(config['PROPERTY_SEED'] + 2)
    for _ in range(config['PROPERTY_INSTANCES']):
        low = Fraction(rng.randint(0, 50), rng.randint(1, 20))
        high = low + Fraction(rng.randint(1, 20), rng.randint(1, 50))
        n = rng.randint(1, 6)
        y = witness_m10(low, high, n)
        if not low < y ** n < high:
            return False, 'witness_m10({}, {}, {}) = {}'.format(low, high, n, y)
        n = rng.randint(1, 6)
        ms = [m for m in (rng.randint(2, 7) for _ in range(3)) if n % m]
        xs = [_test_rationals(rng, -3, 3) for _ in ms]
        y = witness_m11(xs, n, ms)
        if any(is_nth_power(y ** n * c, m) for c, m in zip(xs, ms)):
            return False, 'witness_m11({}, {}, {}) = {}'.format(xs, n, ms, y)
    return True, '{} instances'.format(config['PROPERTY_INSTANCES'])


def axioms(config):
    """Every axiom of every structure, schemes up to AXIOM_SCHEME_BOUND, decides to true."""
    instances = axiom_instances(config['AXIOM_SCHEME_BOUND'])
    for theory, name, text in instances:
        truth, _ = decide(parse_formula(text, theory), theory)
        if not truth:
            return False, '{}: {} ({}) decided false'.format(theory, name, text)
    return True, '{} axiom instances'.format(len(instances))


def load_battery(path=BATTERY_PATH):
    with open(path) as stream:
        return [item.object for item in serializers.deserialize('json', stream)]


def battery(config):
    sentences = load_battery()
    for sentence in sentences:
        theory = theory_from_name(sentence.theory)
        truth, _ = decide(parse_formula(sentence.text, theory), theory)
        if truth != sentence.truth:
            return False, '{}: {} decided {}'.format(theory, sentence.text, truth)
    return True, '{} sentences'.format(len(sentences))


SUITES = {
    'robinson-identity': robinson_identity,
    'hinman-identity': hinman_identity,
    'crt-sweep': crt_sweep,
    'power-oracle': power_oracle,
    'power-lcm': power_lcm,
    'power-merge': power_merge,
    'bounded-power-class': bounded_power_class,
    'witness-constructors': witness_constructors,
    'axioms': axioms,
    'battery': battery,
}


def run_suites(names, config):
    results = []
    for name in names or list(SUITES):
        try:
            passed, detail = SUITES[name](config)
        except Exception as e:
            passed, detail = False, '{}: {}'.format(type(e).__name__, e)
        logger.debug('suite %s: %s (%s)', name, 'pass' if passed else 'FAIL', detail)
        results.append(SuiteResult(name, passed, detail))
    return results
