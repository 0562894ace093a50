# ordered-structures-qe -- decider/qe_order.py
"""Elimination for the pure order theories: ⟨ℚ;<⟩, ⟨ℝ;<⟩, ⟨ℤ;<,s⟩, ⟨ℕ;<,s,0⟩."""

from .engine import Engine
from .formulas import FALSE, TRUE, Const, Eq, Less, conj
from .terms import OrderTerm


ZERO = OrderTerm(None)


def _key(t):
    return ('' if t.var is None else t.var, t.succ)


def canonical_order_atom(atom, naturals=False):
    """Cancel common successors, fold trivial atoms and orient equations."""
    if isinstance(atom, Const) or not isinstance(atom, (Less, Eq)):
        return atom
    left, right = atom.left, atom.right
    k = min(left.succ, right.succ)
    left, right = OrderTerm(left.var, left.succ - k), OrderTerm(right.var, right.succ - k)
    if left.var == right.var:
        if isinstance(atom, Less):
            return TRUE if left.succ < right.succ else FALSE
        return TRUE if left.succ == right.succ else FALSE
    if naturals:
        if isinstance(atom, Less):
            if right == ZERO:
                return FALSE
            if left == ZERO and right.succ > 0:
                return TRUE
        else:
            if (left == ZERO and right.succ > 0) or (right == ZERO and left.succ > 0):
                return FALSE
    if isinstance(atom, Eq):
        if _key(right) < _key(left):
            left, right = right, left
        return Eq(left, right)
    return Less(left, right)


class _Bounds(object):
    """Literals of a cube, read as bounds on y = s^depth(x)."""

    def __init__(self, cube):
        x = cube.var
        self.depth = max(t.succ for l in cube for t in l.terms() if t.var == x)
        self.lowers, self.uppers, self.equations = [], [], []
        for literal in cube:
            left, right = literal.left, literal.right
            if isinstance(literal, Eq):
                if left.var == x:
                    left, right = right, left
                self.equations.append(left.shift(self.depth - right.succ))
            elif right.var == x:
                self.lowers.append(left.shift(self.depth - right.succ))
            else:
                self.uppers.append(right.shift(self.depth - left.succ))

    def substitute_equation(self, simplify_atom):
        """Conjunction of every literal with y replaced by the first equation."""
        value = self.equations[0]
        parts = [Less(l, value) for l in self.lowers]
        parts += [Less(value, u) for u in self.uppers]
        parts += [Eq(value, e) for e in self.equations[1:]]
        return conj(*[simplify_atom(p) for p in parts])


def eliminate_dlo(cube, simplify_atom=canonical_order_atom):
    """∃x over a dense order without endpoints: every lower bound below every upper."""
    bounds = _Bounds(cube)
    if bounds.equations:
        return bounds.substitute_equation(simplify_atom)
    if not bounds.lowers or not bounds.uppers:
        return TRUE
    return conj(*[simplify_atom(Less(l, u)) for l in bounds.lowers for u in bounds.uppers])


def eliminate_discrete_z(cube, simplify_atom=canonical_order_atom):
    """∃x over ⟨ℤ;<,s⟩: every successor of a lower bound is at most every upper bound."""
    bounds = _Bounds(cube)
    if bounds.equations:
        return bounds.substitute_equation(simplify_atom)
    if not bounds.lowers or not bounds.uppers:
        return TRUE
    return conj(*[simplify_atom(Less(l.shift(1), u))
                  for l in bounds.lowers for u in bounds.uppers])


def eliminate_discrete_n(cube, simplify_atom=None):
    """∃x over ⟨ℕ;<,s,0⟩.

    y = s^depth(x) only ranges over y ≥ depth, so equations get the guard
    s^(depth-1)(0) < y and every upper bound has to exceed s^depth(0).
    """
    if simplify_atom is None:
        def simplify_atom(atom):
            return canonical_order_atom(atom, naturals=True)
    bounds = _Bounds(cube)
    depth = bounds.depth
    if bounds.equations:
        result = bounds.substitute_equation(simplify_atom)
        if depth >= 1:
            guard = simplify_atom(Less(ZERO.shift(depth - 1), bounds.equations[0]))
            result = conj(result, guard)
        return result
    if not bounds.uppers:
        return TRUE
    parts = [Less(l.shift(1), u) for l in bounds.lowers for u in bounds.uppers]
    parts += [Less(ZERO.shift(depth), u) for u in bounds.uppers]
    return conj(*[simplify_atom(p) for p in parts])


class DenseOrderEngine(Engine):
    rule = 'eliminate-dlo'
    anchor = 'dense linear order without endpoints'

    def simplify_atom(self, atom):
        return canonical_order_atom(atom)

    def eliminate_cube(self, cube):
        return eliminate_dlo(cube, self.simplify_atom)


class IntegerOrderEngine(Engine):
    rule = 'eliminate-discrete-z'
    anchor = 'discrete order without endpoints with successor'

    def simplify_atom(self, atom):
        return canonical_order_atom(atom)

    def eliminate_cube(self, cube):
        return eliminate_discrete_z(cube, self.simplify_atom)


class NaturalOrderEngine(Engine):
    rule = 'eliminate-discrete-n'
    anchor = 'discrete order with least element zero and successor'

    def simplify_atom(self, atom):
        return canonical_order_atom(atom, naturals=True)

    def eliminate_cube(self, cube):
        return eliminate_discrete_n(cube, self.simplify_atom)
