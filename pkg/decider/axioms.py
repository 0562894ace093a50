# ordered-structures-qe -- decider/axioms.py
"""Axioms of every structure, written as sentences of its theory.

Fixed axioms are listed once per theory; schemes take a parameter n and are
instantiated for n = 1 .. bound. Every instance is true in its structure, so
deciding each one is a check of the engines against a known axiomatization.
"""

from itertools import combinations

from .theories import TheoryId

ORDER_AXIOMS = [
    ('asymmetry', 'forall x. forall y. (x < y -> ~(y < x))'),
    ('transitivity', 'forall x. forall y. forall z. (x < y /\\ y < z -> x < z)'),
    ('trichotomy', 'forall x. forall y. (x < y \\/ x = y \\/ y < x)'),
]

DENSE_AXIOMS = [
    ('density', 'forall x. forall y. (x < y -> (exists z. (x < z /\\ z < y)))'),
    ('no greatest element', 'forall x. exists y. x < y'),
    ('no least element', 'forall x. exists y. y < x'),
]

DISCRETE_AXIOM = ('immediate successor', 'forall x. forall y. (x < y <-> (s(x) < y \\/ s(x) = y))')

GROUP_AXIOMS = [
    ('associativity', 'forall x. forall y. forall z. exists u. exists v. '
                      '(u = x + y /\\ v = y + z /\\ u + z = x + v)'),
    ('identity', 'forall x. x + 0 = x'),
    ('commutativity', 'forall x. forall y. x + y = y + x'),
    ('translation invariance', 'forall x. forall y. forall z. (x < y -> x + z < y + z)'),
    ('nontrivial', 'exists y. ~(y = 0)'),
]

GROUP_INVERSE = ('inverse', 'forall x. x + -x = 0')

MONOID_AXIOMS = [
    ('associativity', 'forall x. forall y. forall z. exists u. exists v. '
                      '(u = x*y /\\ v = y*z /\\ u*z = x*v)'),
    ('commutativity', 'forall x. forall y. x*y = y*x'),
]

POSITIVE_AXIOMS = [
    ('identity', 'forall x. x*1 = x'),
    ('inverse', 'forall x. x*inv(x) = 1'),
    ('scaling invariance', 'forall x. forall y. forall z. (x < y -> x*z < y*z)'),
    ('nontrivial', 'exists y. ~(y = 1)'),
]

SIGNED_AXIOMS = [
    ('identity and zero', 'forall x. (x*1 = x /\\ x*0 = 0 /\\ 0 = inv(0))'),
    ('inverse of nonzero', 'forall x. (~(x = 0) -> x*inv(x) = 1)'),
    ('positive scaling', 'forall x. forall y. forall z. (x < y /\\ 0 < z -> x*z < y*z)'),
    ('negative scaling', 'forall x. forall y. forall z. (x < y /\\ z < 0 -> y*z < x*z)'),
    ('signs', 'exists y. (-1 < 0 /\\ 0 < 1 /\\ 1 < y)'),
]

SQUARES_POSITIVE = ('positives are squares',
                    'forall x. (0 < x <-> (exists y. (~(y = 0) /\\ x = y^2)))')


# ========== schemes ==========

def divisibility(n):
    return 'divisibility by {}'.format(n), 'forall x. exists y. x = {}*y'.format(n)


def division_algorithm(n):
    cases = ['x = {}*y'.format(n)] + ['x = {}*y + {}'.format(n, i) for i in range(1, n)]
    return 'division by {}'.format(n), 'forall x. exists y. ({})'.format(' \\/ '.join(cases))


def odd_roots(n):
    k = 2 * n + 1
    return '{}-th roots'.format(k), 'forall x. exists y. x = y^{}'.format(k)


def unit_roots(n):
    return ('roots of unity of degree {}'.format(2 * n),
            'forall x. (x^{} = 1 <-> (x = 1 \\/ x = -1))'.format(2 * n))


def power_density(n, positive_only=False):
    guard = '0 < x /\\ x < z' if positive_only else 'x < z'
    return ('{}-th powers are dense'.format(n),
            'forall x. forall z. exists y. ({} -> (x < y^{n} /\\ y^{n} < z))'.format(guard, n=n))


def power_independence(n, degrees, nonzero=False):
    names = ['x{}'.format(j) for j in range(len(degrees))]
    body = ' /\\ '.join('~pow({}, y^{}*{})'.format(m, n, x) for m, x in zip(degrees, names))
    if nonzero:
        body = '{} -> ({})'.format(' /\\ '.join('~({} = 0)'.format(x) for x in names), body)
    prefix = ''.join('forall {}. '.format(x) for x in names)
    return ('{}-th powers avoid power classes {}'.format(n, ', '.join(map(str, degrees))),
            '{}exists y. ({})'.format(prefix, body))


def _independence_instances(bound, nonzero):
    instances = []
    for n in range(1, bound + 1):
        degrees = [m for m in range(2, bound + 2) if n % m]
        instances += [power_independence(n, [m], nonzero) for m in degrees]
        instances += [power_independence(n, list(pair), nonzero)
                      for pair in combinations(degrees, 2)][:1]
    return instances


def axiom_instances(bound):
    """(theory, name, text) for every axiom and every scheme instance up to bound."""
    table = {
        TheoryId.DLO_Q: DENSE_AXIOMS,
        TheoryId.DLO_R: DENSE_AXIOMS,
        TheoryId.ORDER_Z: [DISCRETE_AXIOM, ('predecessor', 'forall x. exists y. s(y) = x')],
        TheoryId.ORDER_N: [
            DISCRETE_AXIOM,
            ('predecessor of nonzero', 'forall x. exists y. (~(x = 0) -> s(y) = x)'),
            ('zero is least', 'forall x. ~(x < 0)'),
        ],
    }
    for theory in (TheoryId.OAG_Q, TheoryId.OAG_R):
        table[theory] = GROUP_AXIOMS + [GROUP_INVERSE] + [
            divisibility(n) for n in range(1, bound + 1)]
    discrete = ('successor is plus one', 'forall x. forall y. (x < y <-> x + 1 <= y)')
    table[TheoryId.PRESBURGER_Z] = GROUP_AXIOMS + [GROUP_INVERSE, discrete] + [
        division_algorithm(n) for n in range(1, bound + 1)]
    table[TheoryId.PRESBURGER_N] = GROUP_AXIOMS + [discrete] + [
        division_algorithm(n) for n in range(1, bound + 1)]
    table[TheoryId.MUL_R] = MONOID_AXIOMS + SIGNED_AXIOMS + [SQUARES_POSITIVE] + [
        odd_roots(n) for n in range(1, bound + 1)] + [
        unit_roots(n) for n in range(1, bound + 1)]
    table[TheoryId.MUL_Q] = MONOID_AXIOMS + SIGNED_AXIOMS + [
        unit_roots(n) for n in range(1, bound + 1)] + [
        power_density(n, positive_only=True) for n in range(1, bound + 1)] + (
        _independence_instances(bound, nonzero=True))
    table[TheoryId.MUL_Q_POS] = MONOID_AXIOMS + POSITIVE_AXIOMS + [
        power_density(n) for n in range(1, bound + 1)] + _independence_instances(bound, nonzero=False)

    instances = []
    for theory in TheoryId:
        for name, text in ORDER_AXIOMS + table[theory]:
            instances.append((theory, name, text))
    return instances
