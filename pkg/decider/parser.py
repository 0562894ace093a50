# ordered-structures-qe -- decider/parser.py
"""Surface syntax for every theory.

One lark grammar covers all signatures; ``FormulaBuilder`` turns the parse tree
into theory-specific terms and raises ``SignatureError`` on the first symbol
the theory does not have.
"""

from functools import lru_cache

from lark import Lark, Transformer
from lark.exceptions import UnexpectedEOF, UnexpectedInput, VisitError

from .exceptions import ParseError, SignatureError
from .formulas import (
    FALSE, TRUE, And, Atom, Cong, Eq, Exists, Forall, Iff, Implies, Less, Not, Or, Re,
    atoms, rename_apart,
)
from .terms import MINUS_ONE, ONE, ZERO, LinearTerm, Monomial, OrderTerm
from .theories import ADDITIVE, MULTIPLICATIVE, ORDER


GRAMMAR = r'''
?start: formula

?formula: "exists" VAR "." formula    -> exists
        | "forall" VAR "." formula    -> forall
        | iff

?iff: imp ("<->" imp)*
?imp: disj
    | disj "->" imp                   -> implies
?disj: conj ("\\/" conj)*
?conj: neg ("/\\" neg)*

?neg: "~" neg                         -> negation
    | "(" formula ")"
    | atom

atom: "true"                          -> true
    | "false"                         -> false
    | term "<" term                   -> less
    | term "=" term                   -> equal
    | term "<=" term                  -> less_equal
    | term "!=" term                  -> not_equal
    | term "==" term "mod" NAT        -> congruence
    | _POW NAT "," term ")"           -> power_atom

?term: sum
?sum: product
    | sum "+" product                 -> add
    | sum "-" product                 -> sub
?product: unary
    | product "*" unary               -> mul
?unary: power
    | "-" unary                       -> neg
?power: primary
    | primary "^" exponent            -> raise_to
exponent: NAT                         -> positive_exponent
        | "-" NAT                     -> negative_exponent
?primary: number
        | variable
        | successor
        | reciprocal
number: NAT
variable: VAR
successor: _SUCC term ")"
reciprocal: _INV term ")"

_SUCC.2: "s("
_INV.2: "inv("
_POW.2: "pow("
VAR: /[a-z][a-zA-Z0-9_]*/
NAT: /[0-9]+/

%import common.WS
%ignore WS
'''


@lru_cache(maxsize=1)
def formula_parser():
    return Lark(GRAMMAR, parser='lalr', start='start', maybe_placeholders=False)


class _Numeral(object):
    """A numeral not yet placed; oag only admits it as a multiplier."""

    def __init__(self, value):
        self.value = value


class FormulaBuilder(Transformer):
    def __init__(self, theory):
        super().__init__()
        self.theory = theory
        self.family = theory.family

    # ----- formulas -----

    def exists(self, children):
        return Exists(str(children[0]), children[1])

    def forall(self, children):
        return Forall(str(children[0]), children[1])

    def iff(self, children):
        result = children[0]
        for right in children[1:]:
            result = Iff(result, right)
        return result

    def implies(self, children):
        return Implies(children[0], children[1])

    def disj(self, children):
        return Or(tuple(children))

    def conj(self, children):
        return And(tuple(children))

    def negation(self, children):
        return Not(children[0])

    def true(self, children):
        return TRUE

    def false(self, children):
        return FALSE

    def less(self, children):
        left, right = self._terms(children)
        return Less(left, right)

    def equal(self, children):
        left, right = self._terms(children)
        return Eq(left, right)

    def less_equal(self, children):
        left, right = self._terms(children)
        return Or((Less(left, right), Eq(left, right)))

    def not_equal(self, children):
        left, right = self._terms(children)
        return Not(Eq(left, right))

    def congruence(self, children):
        if not self.theory.has_congruence:
            raise SignatureError('mod', self.theory)
        modulus = int(children[2])
        if modulus < 2:
            raise SignatureError('mod {}'.format(modulus), self.theory)
        left, right = self._terms(children[:2])
        return Cong(modulus, left, right)

    def power_atom(self, children):
        if not self.theory.has_power_predicate:
            raise SignatureError('pow', self.theory)
        degree = int(children[0])
        if degree < 2:
            raise SignatureError('pow({}, ...)'.format(degree), self.theory)
        return Re(degree, self._term(children[1]))

    # ----- terms -----

    def _term(self, value):
        if isinstance(value, _Numeral):
            return self._constant(value.value)
        return value

    def _terms(self, values):
        return [self._term(v) for v in values]

    def _constant(self, value):
        theory = self.theory
        if self.family == ORDER:
            if value == 0 and theory.has_zero:
                return OrderTerm(None)
        elif self.family == ADDITIVE:
            if value == 0 and theory.has_zero:
                return LinearTerm()
            if theory.has_numerals:
                return LinearTerm.constant(value)
        else:
            if value == 0 and theory.has_zero:
                return ZERO
            if value == 1:
                return ONE
            if value == -1 and theory.has_negation:
                return MINUS_ONE
        raise SignatureError(str(value), theory)

    def number(self, children):
        return _Numeral(int(children[0]))

    def variable(self, children):
        name = str(children[0])
        if self.family == ORDER:
            return OrderTerm(name)
        if self.family == ADDITIVE:
            return LinearTerm.var(name)
        return Monomial.var(name)

    def successor(self, children):
        if not self.theory.has_successor:
            raise SignatureError('s', self.theory)
        return self._term(children[0]).shift(1)

    def reciprocal(self, children):
        if self.family != MULTIPLICATIVE:
            raise SignatureError('inv', self.theory)
        return self._term(children[0]).inverse()

    def positive_exponent(self, children):
        return int(children[0])

    def negative_exponent(self, children):
        return -int(children[0])

    def raise_to(self, children):
        if self.family != MULTIPLICATIVE:
            raise SignatureError('^', self.theory)
        return self._term(children[0]).power(children[1])

    def neg(self, children):
        value = children[0]
        if isinstance(value, _Numeral) and self.family != ORDER:
            if value.value == 0:
                return value
            if self.family == ADDITIVE or self.theory.has_negation:
                return _Numeral(-value.value)
        if not self.theory.has_negation:
            raise SignatureError('-', self.theory)
        if self.family == ADDITIVE:
            return -self._term(value)
        return MINUS_ONE * self._term(value)

    def add(self, children):
        if self.family != ADDITIVE:
            raise SignatureError('+', self.theory)
        left, right = self._terms(children)
        return left + right

    def sub(self, children):
        if self.family != ADDITIVE or not self.theory.has_negation:
            raise SignatureError('-', self.theory)
        left, right = self._terms(children)
        return left - right

    def mul(self, children):
        left, right = children
        if self.family == ADDITIVE:
            if isinstance(left, _Numeral):
                return self._term(right).scale(left.value)
            if isinstance(right, _Numeral):
                return self._term(left).scale(right.value)
            raise SignatureError('* between non-numerals', self.theory)
        if self.family != MULTIPLICATIVE:
            raise SignatureError('*', self.theory)
        return self._term(left) * self._term(right)


def check_signature(f, theory):
    """Raise SignatureError unless every symbol of f belongs to theory."""
    family = theory.family
    for atom in atoms(f):
        if isinstance(atom, Cong) and not theory.has_congruence:
            raise SignatureError('mod', theory)
        if isinstance(atom, Re) and not theory.has_power_predicate:
            raise SignatureError('pow', theory)
        for t in atom.terms():
            _check_term(t, theory, family)


def _check_term(t, theory, family):
    if family == ORDER:
        if not isinstance(t, OrderTerm):
            raise SignatureError(type(t).__name__, theory)
        if t.var is None and not theory.has_zero:
            raise SignatureError('0', theory)
        if t.succ and not theory.has_successor:
            raise SignatureError('s', theory)
    elif family == ADDITIVE:
        if not isinstance(t, LinearTerm):
            raise SignatureError(type(t).__name__, theory)
        if t.const and not theory.has_numerals:
            raise SignatureError(str(t.const), theory)
    else:
        if not isinstance(t, Monomial):
            raise SignatureError(type(t).__name__, theory)
        if t.is_zero and not theory.has_zero:
            raise SignatureError('0', theory)
        if t.sign < 0 and not theory.has_negation:
            raise SignatureError('-1', theory)


def parse_formula(text, theory):
    try:
        tree = formula_parser().parse(text)
    except UnexpectedEOF as e:
        lines = text.splitlines() or ['']
        raise ParseError('unexpected end of input', len(lines), len(lines[-1]) + 1) from e
    except UnexpectedInput as e:
        raise ParseError('unexpected input', e.line, e.column) from e
    try:
        f = FormulaBuilder(theory).transform(tree)
    except VisitError as e:
        raise e.orig_exc
    if not isinstance(f, (Atom, Not, And, Or, Implies, Iff, Exists, Forall)):
        raise ParseError('expected a formula')
    f = rename_apart(f)
    check_signature(f, theory)
    return f
