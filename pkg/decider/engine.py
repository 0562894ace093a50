# ordered-structures-qe -- decider/engine.py
"""The theory-generic part of quantifier elimination.

An ``Engine`` only has to know how to eliminate ∃x from a conjunction of
literals that all mention x (a ``Cube``). Everything else, from unfolding ∀
to distributing the matrix into cubes, happens here.
"""

import logging
from dataclasses import dataclass, field

from .formulas import (
    And, Atom, Cong, Const, Eq, Exists, Less, Not, Or,
    QUANTIFIERS, children, conj, cubes, disj, free_variables, negate, nnf, rebuild,
    replace_first, term_variables,
)
from .printer import print_formula
from .terms import LinearTerm

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Cube:
    var: str
    literals: tuple

    def __iter__(self):
        return iter(self.literals)


@dataclass(frozen=True)
class TraceStep:
    rule: str
    anchor: str
    before: object
    after: object

    def as_dict(self):
        return {
            'rule': self.rule,
            'anchor': self.anchor,
            'before': print_formula(self.before),
            'after': print_formula(self.after),
        }


@dataclass
class QeTrace:
    steps: list = field(default_factory=list)

    def record(self, rule, anchor, before, after):
        self.steps.append(TraceStep(rule, anchor, before, after))

    def replay(self, f):
        """Apply every step to f in order and return the result."""
        for step in self.steps:
            f, found = replace_first(f, step.before, step.after)
            if not found:
                raise ValueError('trace step {} does not apply to {}'.format(
                    step.rule, print_formula(f)))
        return f

    def __len__(self):
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)


# ========== literal normalization ==========

def literal_variables(literal):
    if isinstance(literal, Not):
        return term_variables(literal.arg)
    return term_variables(literal)


def normalize_literals(f):
    """Rewrite negated atoms of an NNF formula into positive ones (¬Re stays)."""
    if isinstance(f, Not):
        atom = f.arg
        if isinstance(atom, Const):
            return negate(atom)
        if isinstance(atom, Less):
            return disj(Less(atom.right, atom.left), Eq(atom.right, atom.left))
        if isinstance(atom, Eq):
            return disj(Less(atom.left, atom.right), Less(atom.right, atom.left))
        if isinstance(atom, Cong):
            n = atom.modulus
            return disj(*[Cong(n, atom.left, atom.right + LinearTerm.constant(i))
                          for i in range(1, n)])
        return f
    if isinstance(f, And):
        return conj(*[normalize_literals(a) for a in f.args])
    if isinstance(f, Or):
        return disj(*[normalize_literals(a) for a in f.args])
    if isinstance(f, QUANTIFIERS):
        return type(f)(f.var, normalize_literals(f.body))
    return f


def simplify(f, simplify_atom):
    """Fold constants, flatten ∧/∨, drop duplicates and canonicalize atoms."""
    if isinstance(f, Atom):
        return simplify_atom(f)
    if isinstance(f, Not):
        return negate(simplify(f.arg, simplify_atom))
    if isinstance(f, And):
        return conj(*[simplify(a, simplify_atom) for a in f.args])
    if isinstance(f, Or):
        return disj(*[simplify(a, simplify_atom) for a in f.args])
    if isinstance(f, QUANTIFIERS):
        body = simplify(f.body, simplify_atom)
        if isinstance(body, Const) or f.var not in free_variables(body):
            return body
        return type(f)(f.var, body)
    return rebuild(f, [simplify(c, simplify_atom) for c in children(f)])


# ========== engines ==========

class Engine(object):
    """Base class for the per-theory elimination procedures."""

    rule = 'eliminate'
    anchor = ''

    def __init__(self, theory):
        self.theory = theory

    def simplify_atom(self, atom):
        return atom

    def simplify(self, f):
        return simplify(f, self.simplify_atom)

    def prepare(self, f):
        """Matrix of ∃x in NNF with positive literals (¬Re excepted), simplified."""
        return self.simplify(normalize_literals(nnf(f)))

    def eliminate_cube(self, cube):
        raise NotImplementedError

    def eliminate_exists(self, var, body):
        matrix = self.prepare(body)
        results = []
        distributed = cubes(matrix)
        for literals in distributed:
            free = [l for l in literals if var not in literal_variables(l)]
            bound = [l for l in literals if var in literal_variables(l)]
            if bound:
                free.append(self.eliminate_cube(Cube(var, tuple(bound))))
            results.append(conj(*free))
        result = self.simplify(disj(*results))
        logger.debug('eliminated %s from %d cube(s) under %s', var, len(distributed), self.theory)
        return result


def eliminate_quantifiers(f, engine, trace=None):
    """Eliminate every quantifier of f, innermost first. ∀x φ is ¬∃x ¬φ."""
    if trace is None:
        trace = QeTrace()

    def walk(g):
        if isinstance(g, Atom):
            return g
        if isinstance(g, QUANTIFIERS):
            body = walk(g.body)
            before = type(g)(g.var, body)
            if isinstance(g, Exists):
                after = engine.eliminate_exists(g.var, body)
            else:
                after = engine.prepare(negate(engine.eliminate_exists(g.var, negate(body))))
            trace.record(engine.rule, engine.anchor, before, after)
            return after
        return rebuild(g, [walk(c) for c in children(g)])

    result = walk(f)
    simplified = engine.simplify(result)
    if simplified != result:
        trace.record('simplify', 'propositional and atomic simplification', result, simplified)
    return simplified, trace
