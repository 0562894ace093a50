# ordered-structures-qe -- decider/printer.py

from .formulas import (
    And, Atom, Cong, Const, Eq, Exists, Forall, Iff, Implies, Less, Not, Or, Re,
)
from .terms import LinearTerm, Monomial, OrderTerm


def print_term(t):
    if isinstance(t, OrderTerm):
        core = '0' if t.var is None else t.var
        return 's(' * t.succ + core + ')' * t.succ
    if isinstance(t, LinearTerm):
        return _print_linear(t)
    if isinstance(t, Monomial):
        return _print_monomial(t)
    raise TypeError('not a term: {!r}'.format(t))


def _print_linear(t):
    parts = []
    for v, c in t.coeffs:
        if c == 1:
            parts.append(v)
        elif c == -1:
            parts.append('-' + v)
        else:
            parts.append('{}*{}'.format(c, v))
    if t.const or not parts:
        parts.append(str(t.const))
    text = parts[0]
    for part in parts[1:]:
        if part.startswith('-'):
            text += ' - ' + part[1:]
        else:
            text += ' + ' + part
    return text


def _print_monomial(t):
    if t.is_zero:
        return '0'
    factors = []
    for v, e in t.exps:
        factors.append(v if e == 1 else '{}^{}'.format(v, e))
    for v in t.support:
        factors.append('{}*inv({})'.format(v, v))
    if t.sign < 0:
        factors.insert(0, '-1')
    return '*'.join(factors) or '1'


def print_atom(a):
    if isinstance(a, Const):
        return 'true' if a.value else 'false'
    if isinstance(a, Less):
        return '{} < {}'.format(print_term(a.left), print_term(a.right))
    if isinstance(a, Eq):
        return '{} = {}'.format(print_term(a.left), print_term(a.right))
    if isinstance(a, Cong):
        return '{} == {} mod {}'.format(print_term(a.left), print_term(a.right), a.modulus)
    if isinstance(a, Re):
        return 'pow({}, {})'.format(a.degree, print_term(a.arg))
    raise TypeError('not an atom: {!r}'.format(a))


def _is_simple(f):
    return isinstance(f, (Atom, Not))


def _operand(f):
    text = print_formula(f)
    return text if _is_simple(f) else '(' + text + ')'


def print_formula(f):
    if isinstance(f, Atom):
        return print_atom(f)
    if isinstance(f, Not):
        return '~(' + print_formula(f.arg) + ')'
    if isinstance(f, And):
        return ' /\\ '.join(_operand(a) for a in f.args)
    if isinstance(f, Or):
        return ' \\/ '.join(_operand(a) for a in f.args)
    if isinstance(f, Implies):
        return '{} -> {}'.format(_operand(f.left), _operand(f.right))
    if isinstance(f, Iff):
        return '{} <-> {}'.format(_operand(f.left), _operand(f.right))
    if isinstance(f, (Exists, Forall)):
        keyword = 'exists' if isinstance(f, Exists) else 'forall'
        body = f.body
        if _is_simple(body) or isinstance(body, (Exists, Forall)):
            inner = print_formula(body)
        else:
            inner = '(' + print_formula(body) + ')'
        return '{} {}. {}'.format(keyword, f.var, inner)
    raise TypeError('not a formula: {!r}'.format(f))
