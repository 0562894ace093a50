# ordered-structures-qe -- decider/qe_additive.py
"""Elimination for ordered abelian groups: divisible (ℚ, ℝ) and Presburger (ℤ, ℕ)."""

from .engine import Engine
from .formulas import (
    FALSE, TRUE, And, Atom, Cong, Eq, Exists, Forall, Implies, Less, Or,
    QUANTIFIERS, children, conj, disj, rebuild,
)
from .numeric import bezout, gcd_all, lcm_all
from .terms import LinearTerm


# ========== canonical atoms ==========

def _split(d):
    """Write d as P - N with nonnegative coefficients on both sides."""
    positive = LinearTerm.of({v: c for v, c in d.coeffs if c > 0}, max(d.const, 0))
    negative = LinearTerm.of({v: -c for v, c in d.coeffs if c < 0}, max(-d.const, 0))
    return negative, positive


def canonical_linear_atom(atom):
    if isinstance(atom, Less):
        d = atom.right - atom.left
        if d.is_constant:
            return TRUE if d.const > 0 else FALSE
        d = d.exact_div(d.content())
        negative, positive = _split(d)
        return Less(negative, positive)
    if isinstance(atom, Eq):
        d = atom.right - atom.left
        if d.is_constant:
            return TRUE if d.const == 0 else FALSE
        d = d.exact_div(d.content())
        if d.coeffs[0][1] < 0:
            d = -d
        negative, positive = _split(d)
        return Eq(negative, positive)
    if isinstance(atom, Cong):
        n = atom.modulus
        d = (atom.left - atom.right).reduce_mod(n)
        variables = LinearTerm(d.coeffs)
        if variables.is_constant:
            return TRUE if d.const % n == 0 else FALSE
        return Cong(n, variables, LinearTerm.constant(-d.const % n))
    return atom


# ========== bounds on α·x ==========

class _Bounds(object):
    """A cube read as bounds, equations and congruences on y = α·x."""

    def __init__(self, cube):
        x = cube.var
        lowers, uppers, equations, congruences = [], [], [], []
        for literal in cube:
            if isinstance(literal, Cong):
                d = literal.left - literal.right
                a = d.coeff(x) % literal.modulus
                rest = d.drop(x)
                # a·x ≡ -rest (mod n)
                congruences.append((literal.modulus, a, -rest))
                continue
            d = literal.right - literal.left
            c = d.coeff(x)
            rest = d.drop(x)
            if isinstance(literal, Eq):
                if c > 0:
                    equations.append((c, -rest))
                else:
                    equations.append((-c, rest))
            elif c > 0:
                lowers.append((c, -rest))
            else:
                uppers.append((-c, rest))
        self.alpha = lcm_all([c for c, _ in lowers + uppers + equations] +
                             [a for _, a, _ in congruences])
        alpha = self.alpha
        self.lowers = [b.scale(alpha // c) for c, b in lowers]
        self.uppers = [b.scale(alpha // c) for c, b in uppers]
        self.equations = [b.scale(alpha // c) for c, b in equations]
        self.congruences = [(n * (alpha // a), t.scale(alpha // a)) for n, a, t in congruences]


def _substitute_equation(bounds, simplify_atom):
    value = bounds.equations[0]
    parts = [Less(l, value) for l in bounds.lowers]
    parts += [Less(value, u) for u in bounds.uppers]
    parts += [Eq(value, e) for e in bounds.equations[1:]]
    parts += [Cong(n, value, t) for n, t in bounds.congruences]
    return conj(*[simplify_atom(p) for p in parts])


def _less_or_equal(a, b, simplify_atom):
    return disj(simplify_atom(Less(a, b)), simplify_atom(Eq(a, b)))


def max_split(terms, simplify_atom, largest=True):
    """Yield (term, side) where side says term is the largest (or smallest) of terms."""
    for i, t in enumerate(terms):
        side = []
        for j, other in enumerate(terms):
            if j == i:
                continue
            if largest:
                side.append(_less_or_equal(other, t, simplify_atom))
            else:
                side.append(_less_or_equal(t, other, simplify_atom))
        yield t, conj(*side)


def eliminate_odag(cube, simplify_atom=canonical_linear_atom):
    """∃x over a divisible ordered abelian group: scale to α·x, then dense order."""
    bounds = _Bounds(cube)
    if bounds.equations:
        return _substitute_equation(bounds, simplify_atom)
    if not bounds.lowers or not bounds.uppers:
        return TRUE
    return conj(*[simplify_atom(Less(l, u)) for l in bounds.lowers for u in bounds.uppers])


def merge_congruences(first, second, simplify_atom=canonical_linear_atom):
    """Combine y ≡ t₀ (mod n₀) and y ≡ t₁ (mod n₁) into y ≡ t (mod lcm).

    Returns (n, t, side) where side is the solvability condition t₀ ≡ t₁ (mod gcd).
    """
    (n0, t0), (n1, t1) = first, second
    d, a0, a1 = bezout(n0, n1)
    n = n0 * n1 // d
    t = (t1.scale(a0 * (n0 // d)) + t0.scale(a1 * (n1 // d))).reduce_mod(n)
    side = TRUE if d == 1 else simplify_atom(Cong(d, t0, t1))
    return n, t, side


def _base_case(lower, upper, congruence, simplify_atom):
    if congruence is None:
        if lower is None or upper is None:
            return TRUE
        return simplify_atom(Less(lower + LinearTerm.constant(1), upper))
    if lower is None or upper is None:
        return TRUE
    n, t = congruence
    r = lower - t
    s = upper - t - LinearTerm.constant(1)
    # s ≡ i (mod n) forces i ≡ s.const modulo the gcd of n and the coefficients of s
    g = gcd_all([c for _, c in s.coeffs] + [n])
    return disj(*[
        conj(simplify_atom(Cong(n, s, LinearTerm.constant(i))),
             simplify_atom(Less(r + LinearTerm.constant(i), s)))
        for i in range(n) if (i - s.const) % g == 0
    ])


def eliminate_presburger(cube, simplify_atom=canonical_linear_atom):
    """∃x over ⟨ℤ;<,+,0,1,≡ₙ⟩."""
    bounds = _Bounds(cube)
    if bounds.alpha > 1:
        bounds.congruences.append((bounds.alpha, LinearTerm()))
    if bounds.equations:
        return _substitute_equation(bounds, simplify_atom)
    lowers = list(max_split(bounds.lowers, simplify_atom, largest=True)) or [(None, TRUE)]
    uppers = list(max_split(bounds.uppers, simplify_atom, largest=False)) or [(None, TRUE)]
    side, congruence = TRUE, None
    for other in bounds.congruences:
        if congruence is None:
            congruence = other
            continue
        n, t, condition = merge_congruences(congruence, other, simplify_atom)
        congruence, side = (n, t), conj(side, condition)
    if congruence is not None:
        n, t = congruence
        congruence = (n, t.reduce_mod(n))
    cases = []
    for lower, lower_side in lowers:
        for upper, upper_side in uppers:
            cases.append(conj(lower_side, upper_side,
                              _base_case(lower, upper, congruence, simplify_atom)))
    return conj(side, disj(*cases))


def relativize_to_n(f):
    """Restrict every quantifier of f to 0 ≤ x."""
    if isinstance(f, Atom):
        return f
    if isinstance(f, QUANTIFIERS):
        x = LinearTerm.var(f.var)
        zero = LinearTerm()
        guard = Or((Less(zero, x), Eq(zero, x)))
        body = relativize_to_n(f.body)
        if isinstance(f, Exists):
            return Exists(f.var, And((guard, body)))
        return Forall(f.var, Implies(guard, body))
    return rebuild(f, [relativize_to_n(c) for c in children(f)])


class DivisibleGroupEngine(Engine):
    rule = 'eliminate-odag'
    anchor = 'divisible ordered abelian group'

    def simplify_atom(self, atom):
        return canonical_linear_atom(atom)

    def eliminate_cube(self, cube):
        return eliminate_odag(cube, self.simplify_atom)


class PresburgerEngine(Engine):
    rule = 'eliminate-presburger'
    anchor = 'discretely ordered abelian group with division algorithm'

    def simplify_atom(self, atom):
        return canonical_linear_atom(atom)

    def eliminate_cube(self, cube):
        return eliminate_presburger(cube, self.simplify_atom)
