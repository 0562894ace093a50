# ordered-structures-qe -- decider/formulas.py
"""First-order formulas over one of the supported signatures.

Every node is a frozen dataclass, so formulas compare structurally and can be
used as dictionary keys. ``conj``/``disj``/``negate`` are the smart
constructors: they flatten, fold constants and drop duplicates.
"""

from dataclasses import dataclass
from itertools import product


class Formula:
    __slots__ = ()


class Atom(Formula):
    __slots__ = ()

    def terms(self):
        return ()

    def map_terms(self, fn):
        return self


@dataclass(frozen=True)
class Const(Atom):
    value: bool


TRUE = Const(True)
FALSE = Const(False)


@dataclass(frozen=True)
class Less(Atom):
    left: object
    right: object

    def terms(self):
        return (self.left, self.right)

    def map_terms(self, fn):
        return Less(fn(self.left), fn(self.right))


@dataclass(frozen=True)
class Eq(Atom):
    left: object
    right: object

    def terms(self):
        return (self.left, self.right)

    def map_terms(self, fn):
        return Eq(fn(self.left), fn(self.right))


@dataclass(frozen=True)
class Cong(Atom):
    modulus: int
    left: object
    right: object

    def terms(self):
        return (self.left, self.right)

    def map_terms(self, fn):
        return Cong(self.modulus, fn(self.left), fn(self.right))


@dataclass(frozen=True)
class Re(Atom):
    """Re(n, t): t is an n-th power."""
    degree: int
    arg: object

    def terms(self):
        return (self.arg,)

    def map_terms(self, fn):
        return Re(self.degree, fn(self.arg))


@dataclass(frozen=True)
class Not(Formula):
    arg: Formula


@dataclass(frozen=True)
class And(Formula):
    args: tuple


@dataclass(frozen=True)
class Or(Formula):
    args: tuple


@dataclass(frozen=True)
class Implies(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Iff(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Exists(Formula):
    var: str
    body: Formula


@dataclass(frozen=True)
class Forall(Formula):
    var: str
    body: Formula


QUANTIFIERS = (Exists, Forall)


# ========== smart constructors ==========

def _gather(kind, args, unit, zero):
    flat = []
    for a in args:
        if isinstance(a, kind):
            items = a.args
        else:
            items = (a,)
        for item in items:
            if item == zero:
                return None
            if item == unit or item in flat:
                continue
            flat.append(item)
    return flat


def conj(*args):
    flat = _gather(And, args, TRUE, FALSE)
    if flat is None:
        return FALSE
    if not flat:
        return TRUE
    if len(flat) == 1:
        return flat[0]
    return And(tuple(flat))


def disj(*args):
    flat = _gather(Or, args, FALSE, TRUE)
    if flat is None:
        return TRUE
    if not flat:
        return FALSE
    if len(flat) == 1:
        return flat[0]
    return Or(tuple(flat))


def negate(f):
    if isinstance(f, Const):
        return FALSE if f.value else TRUE
    if isinstance(f, Not):
        return f.arg
    return Not(f)


# ========== traversal ==========

def children(f):
    if isinstance(f, Not):
        return (f.arg,)
    if isinstance(f, (And, Or)):
        return f.args
    if isinstance(f, (Implies, Iff)):
        return (f.left, f.right)
    if isinstance(f, QUANTIFIERS):
        return (f.body,)
    return ()


def rebuild(f, new_children):
    if isinstance(f, Not):
        return Not(new_children[0])
    if isinstance(f, And):
        return And(tuple(new_children))
    if isinstance(f, Or):
        return Or(tuple(new_children))
    if isinstance(f, Implies):
        return Implies(*new_children)
    if isinstance(f, Iff):
        return Iff(*new_children)
    if isinstance(f, QUANTIFIERS):
        return type(f)(f.var, new_children[0])
    return f


def atoms(f):
    if isinstance(f, Atom):
        yield f
        return
    for child in children(f):
        yield from atoms(child)


def map_atoms(f, fn):
    """Rebuild f with every atom replaced by fn(atom), folding constants."""
    if isinstance(f, Atom):
        return fn(f)
    if isinstance(f, Not):
        return negate(map_atoms(f.arg, fn))
    if isinstance(f, And):
        return conj(*[map_atoms(a, fn) for a in f.args])
    if isinstance(f, Or):
        return disj(*[map_atoms(a, fn) for a in f.args])
    return rebuild(f, [map_atoms(c, fn) for c in children(f)])


def term_variables(atom):
    names = frozenset()
    for t in atom.terms():
        names |= t.variables()
    return names


def free_variables(f):
    if isinstance(f, Atom):
        return term_variables(f)
    if isinstance(f, QUANTIFIERS):
        return free_variables(f.body) - {f.var}
    names = frozenset()
    for child in children(f):
        names |= free_variables(child)
    return names


def all_variables(f):
    if isinstance(f, Atom):
        return term_variables(f)
    names = frozenset([f.var]) if isinstance(f, QUANTIFIERS) else frozenset()
    for child in children(f):
        names |= all_variables(child)
    return names


def is_quantifier_free(f):
    if isinstance(f, QUANTIFIERS):
        return False
    return all(is_quantifier_free(c) for c in children(f))


def quantifier_count(f):
    own = 1 if isinstance(f, QUANTIFIERS) else 0
    return own + sum(quantifier_count(c) for c in children(f))


def substitute(f, var, term):
    """Replace the free occurrences of var by term."""
    if isinstance(f, Atom):
        if var not in term_variables(f):
            return f
        return f.map_terms(lambda t: t.substitute(var, term))
    if isinstance(f, QUANTIFIERS) and f.var == var:
        return f
    return rebuild(f, [substitute(c, var, term) for c in children(f)])


def rename_apart(f):
    """Give every quantifier a distinct variable that is not free anywhere in f.

    Renamed variables become name_k for the smallest unused k. Idempotent.
    """
    used = set(all_variables(f))
    taken = set(free_variables(f))

    def fresh(name):
        k = 1
        while '{}_{}'.format(name, k) in used:
            k += 1
        new = '{}_{}'.format(name, k)
        used.add(new)
        return new

    def walk(g, mapping):
        if isinstance(g, Atom):
            if not mapping:
                return g
            return g.map_terms(lambda t: t.rename(mapping))
        if isinstance(g, QUANTIFIERS):
            name = fresh(g.var) if g.var in taken else g.var
            taken.add(name)
            inner = dict(mapping)
            if name != g.var:
                inner[g.var] = name
            else:
                inner.pop(g.var, None)
            return type(g)(name, walk(g.body, inner))
        return rebuild(g, [walk(c, mapping) for c in children(g)])

    return walk(f, {})


def replace_first(f, old, new):
    """Replace the first occurrence of subformula old (pre-order, left to right)."""
    done = [False]

    def walk(g):
        if done[0]:
            return g
        if g == old:
            done[0] = True
            return new
        kids = children(g)
        if not kids:
            return g
        return rebuild(g, [walk(c) for c in kids])

    result = walk(f)
    return result, done[0]


# ========== normal forms ==========

def nnf(f, negated=False):
    """Negation normal form; → and ↔ are expanded, negations sit on atoms."""
    if isinstance(f, Const):
        return Const(f.value != negated)
    if isinstance(f, Atom):
        return Not(f) if negated else f
    if isinstance(f, Not):
        return nnf(f.arg, not negated)
    if isinstance(f, And):
        parts = [nnf(a, negated) for a in f.args]
        return disj(*parts) if negated else conj(*parts)
    if isinstance(f, Or):
        parts = [nnf(a, negated) for a in f.args]
        return conj(*parts) if negated else disj(*parts)
    if isinstance(f, Implies):
        return nnf(Or((Not(f.left), f.right)), negated)
    if isinstance(f, Iff):
        a, b = f.left, f.right
        if negated:
            return disj(conj(nnf(a), nnf(b, True)), conj(nnf(a, True), nnf(b)))
        return disj(conj(nnf(a), nnf(b)), conj(nnf(a, True), nnf(b, True)))
    if isinstance(f, Exists):
        return Forall(f.var, nnf(f.body, True)) if negated else Exists(f.var, nnf(f.body))
    if isinstance(f, Forall):
        return Exists(f.var, nnf(f.body, True)) if negated else Forall(f.var, nnf(f.body))
    raise TypeError('not a formula: {!r}'.format(f))


def cubes(f):
    """Distribute a quantifier-free NNF formula into a list of literal lists."""
    if f == TRUE:
        return [[]]
    if f == FALSE:
        return []
    if isinstance(f, (Atom, Not)):
        return [[f]]
    if isinstance(f, Or):
        result = []
        for a in f.args:
            for cube in cubes(a):
                if cube not in result:
                    result.append(cube)
        return result
    if isinstance(f, And):
        result = []
        for combination in product(*[cubes(a) for a in f.args]):
            cube = []
            for part in combination:
                for literal in part:
                    if literal not in cube:
                        cube.append(literal)
            if cube not in result:
                result.append(cube)
        return result
    raise TypeError('cubes() needs a quantifier-free NNF formula, got {!r}'.format(f))
