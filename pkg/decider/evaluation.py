# ordered-structures-qe -- decider/evaluation.py
"""Exact evaluation of quantifier-free formulas and bounded witness search."""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from .exceptions import EvaluationError
from .formulas import (
    And, Cong, Const, Eq, Exists, Iff, Implies, Less, Not, Or, QUANTIFIERS, Re,
    free_variables, is_quantifier_free,
)
from .numeric import enumerate_rationals, is_nth_power, power
from .terms import LinearTerm, Monomial, OrderTerm

logger = logging.getLogger(__name__)


@dataclass
class Witness:
    values: dict = field(default_factory=dict)
    verified: bool = False

    def as_strings(self):
        return {v: str(q) for v, q in sorted(self.values.items())}


def _lookup(a, name):
    try:
        return a[name]
    except KeyError:
        raise EvaluationError("variable '{}' has no value".format(name))


def eval_term(t, a):
    if isinstance(t, OrderTerm):
        base = 0 if t.var is None else _lookup(a, t.var)
        return base + t.succ
    if isinstance(t, LinearTerm):
        return sum((c * _lookup(a, v) for v, c in t.coeffs), t.const)
    if isinstance(t, Monomial):
        if t.is_zero:
            return Fraction(0)
        for v in t.support:
            if _lookup(a, v) == 0:
                return Fraction(0)
        value = Fraction(t.sign)
        for v, e in t.exps:
            value *= power(_lookup(a, v), e)
        return value
    raise EvaluationError('not a term: {!r}'.format(t))


def check_assignment(theory, a):
    for name, value in a.items():
        if theory.integral and Fraction(value).denominator != 1:
            raise EvaluationError('{} = {} is not an integer'.format(name, value))
        if theory.naturals and value < 0:
            raise EvaluationError('{} = {} is not a natural number'.format(name, value))
        if theory.positive and value <= 0:
            raise EvaluationError('{} = {} is not positive'.format(name, value))


def _eval(f, a):
    if isinstance(f, Const):
        return f.value
    if isinstance(f, Less):
        return eval_term(f.left, a) < eval_term(f.right, a)
    if isinstance(f, Eq):
        return eval_term(f.left, a) == eval_term(f.right, a)
    if isinstance(f, Cong):
        return (eval_term(f.left, a) - eval_term(f.right, a)) % f.modulus == 0
    if isinstance(f, Re):
        return is_nth_power(eval_term(f.arg, a), f.degree)
    if isinstance(f, Not):
        return not _eval(f.arg, a)
    if isinstance(f, And):
        return all(_eval(g, a) for g in f.args)
    if isinstance(f, Or):
        return any(_eval(g, a) for g in f.args)
    if isinstance(f, Implies):
        return not _eval(f.left, a) or _eval(f.right, a)
    if isinstance(f, Iff):
        return _eval(f.left, a) == _eval(f.right, a)
    if isinstance(f, QUANTIFIERS):
        raise EvaluationError('eval_qf cannot evaluate a quantifier')
    raise EvaluationError('not a formula: {!r}'.format(f))


def eval_qf(f, theory, a):
    """Truth of quantifier-free f in the structure of theory under assignment a."""
    check_assignment(theory, a)
    return _eval(f, a)


# ========== bounded search ==========

def strip_exists(f):
    """Split ∃x₁…∃xₖ φ into ([x₁, …, xₖ], φ)."""
    names = []
    while isinstance(f, Exists):
        names.append(f.var)
        f = f.body
    return names, f


def candidates(theory, budget):
    if theory.naturals:
        return list(range(0, budget + 1))
    if theory.integral:
        values = [0]
        for k in range(1, budget + 1):
            values += [k, -k]
        return values
    values = list(enumerate_rationals(budget))
    if theory.positive:
        values = [q for q in values if q > 0]
    return values


def search_witness(f, theory, a, budget):
    """Scan the bounded candidate set for values of the leading ∃-block of f.

    Inner quantifiers are eliminated first. Returns None when nothing within
    the budget satisfies the matrix.
    """
    from .driver import qe_driver

    names, matrix = strip_exists(f)
    missing = free_variables(f) - set(a)
    if missing:
        raise EvaluationError('free variables without value: {}'.format(', '.join(sorted(missing))))
    if not is_quantifier_free(matrix):
        matrix, _ = qe_driver(matrix, theory)
    check_assignment(theory, a)
    pool = candidates(theory, budget)
    for values in product(pool, repeat=len(names)):
        extended = dict(a)
        extended.update(zip(names, values))
        if _eval(matrix, extended):
            logger.debug('search hit %s', dict(zip(names, values)))
            return Witness(dict(zip(names, values)), verified=eval_qf(matrix, theory, extended))
    return None


def parse_assignment(text, theory):
    """Read 'x=1/2, y=3' into an assignment for theory. Empty text gives {}."""
    a = {}
    for item in (text or '').split(','):
        if not item.strip():
            continue
        name, sep, value = item.partition('=')
        if not sep or not name.strip():
            raise EvaluationError("expected name=value, got '{}'".format(item.strip()))
        try:
            q = Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise EvaluationError("'{}' is not a rational number".format(value.strip()))
        if theory.integral and q.denominator == 1:
            q = int(q)
        a[name.strip()] = q
    check_assignment(theory, a)
    return a
