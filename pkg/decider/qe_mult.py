# ordered-structures-qe -- decider/qe_mult.py
"""Elimination for ordered multiplicative structures.

The positive cones ⟨ℝ⁺;<,×⟩ and ⟨ℚ⁺;<,×,Re_n⟩ are handled directly: through
the logarithm the first is a divisible ordered abelian group and the second a
group whose "congruences" are the power predicates Re_n. Full ℚ and ℝ reduce
to the cones by splitting every relevant variable on its sign.
"""

from fractions import Fraction
from itertools import product

from .engine import Cube, Engine, eliminate_quantifiers, literal_variables, simplify
from .exceptions import NumericError, WitnessError
from .formulas import (
    FALSE, TRUE, Eq, Less, Not, Re, conj, disj, negate, substitute,
)
from .numeric import (
    bezout_many, factor_rational, fresh_prime, gcd_all, is_nth_power, lcm_all,
    rational_between_roots,
)
from .qe_additive import max_split
from .terms import MINUS_ONE, ONE, ZERO, Monomial
from .theories import TheoryId


def _key(m):
    return (m.sign, m.exps, m.support)


def _orient(left, right):
    if _key(right) < _key(left):
        return right, left
    return left, right


def reduce_exponents(t, n):
    """t with exponents taken mod n; variables reduced to 0 keep their zero guard."""
    exps = {v: e % n for v, e in t.exps}
    gone = {v for v, e in exps.items() if e == 0}
    return Monomial.of(exps, t.sign, set(t.support) | gone)


# ========== atom simplification ==========

def canonical_mult_atom(atom):
    """Rules valid in every structure of the family, zero and negatives included."""
    if isinstance(atom, (Less, Eq)):
        left, right = atom.left, atom.right
        if left == right:
            return FALSE if isinstance(atom, Less) else TRUE
        if left.is_constant and right.is_constant:
            if isinstance(atom, Less):
                return TRUE if left.sign < right.sign else FALSE
            return TRUE if left.sign == right.sign else FALSE
        if isinstance(atom, Eq):
            return Eq(*_orient(left, right))
        return atom
    if isinstance(atom, Re):
        n, t = atom.degree, atom.arg
        if t.is_zero:
            return TRUE
        if t.sign < 0 and n % 2 == 1:
            t = t.negate()
        t = reduce_exponents(t, n)
        if not t.exps:
            if t.sign > 0:
                return TRUE
            if not t.support:
                return FALSE
        return Re(n, t)
    return atom


def _ratio(b, a):
    return (b.positive_part() * a.positive_part().inverse()).positive_part()


def _split(q):
    positive = Monomial.of({v: e for v, e in q.exps if e > 0})
    negative = Monomial.of({v: -e for v, e in q.exps if e < 0})
    return negative, positive


def simplify_positive_atom(atom):
    """Canonical atom, assuming every variable is positive."""
    if isinstance(atom, (Less, Eq)):
        is_less = isinstance(atom, Less)
        a, b = atom.left, atom.right
        sa, sb = a.sign, b.sign
        if sa == 0 or sb == 0 or sa != sb:
            if is_less:
                return TRUE if sa < sb else FALSE
            return TRUE if sa == sb else FALSE
        if sa < 0:
            a, b = b.negate(), a.negate()
        q = _ratio(b, a)
        if not q.exps:
            return FALSE if is_less else TRUE
        negative, positive = _split(q)
        if is_less:
            return Less(negative, positive)
        return Eq(*_orient(negative, positive))
    if isinstance(atom, Re):
        n, t = atom.degree, atom.arg
        if t.sign == 0:
            return TRUE
        if t.sign < 0 and n % 2 == 0:
            return FALSE
        exps = {v: e % n for v, e in t.exps}
        t = Monomial.of(exps)
        if not t.exps:
            return TRUE
        return Re(n, t)
    return atom


# ========== sign splitting ==========

def _sign_guard(v, sign):
    t = Monomial.var(v)
    if sign > 0:
        return Less(ZERO, t)
    if sign < 0:
        return Less(t, ZERO)
    return Eq(t, ZERO)


def _sign_substitute(f, v, sign):
    if sign > 0:
        return f
    if sign < 0:
        return substitute(f, v, MINUS_ONE * Monomial.var(v))
    return substitute(f, v, ZERO)


def sign_cases(literals, variables):
    """Yield (signs, guard, literals) with the literals rewritten over positive variables.

    A negative variable v is replaced by -v, so in each case every variable is
    read as positive. Cases with a false literal are skipped.
    """
    variables = sorted(variables)
    for signs in product((1, 0, -1), repeat=len(variables)):
        assignment = dict(zip(variables, signs))
        rewritten = []
        for literal in literals:
            for v, sign in assignment.items():
                literal = _sign_substitute(literal, v, sign)
            literal = simplify(literal, simplify_positive_atom)
            if literal == FALSE:
                break
            if literal != TRUE and literal not in rewritten:
                rewritten.append(literal)
        else:
            guard = conj(*[_sign_guard(v, s) for v, s in assignment.items()])
            yield assignment, guard, rewritten


def _restore_signs(f, assignment):
    for v, sign in assignment.items():
        if sign < 0:
            f = substitute(f, v, MINUS_ONE * Monomial.var(v))
    return simplify(f, canonical_mult_atom)


def merge_sign_cases(cases, variables):
    """Disjunction of guard ∧ body over cases, a list of (sign assignment, body).

    A variable whose three sign cases share one body is dropped from their guards,
    so complementary sign guards fold away.
    """
    merged = {}
    for assignment, body in cases:
        key = tuple(sorted(assignment.items()))
        merged[key] = disj(merged[key], body) if key in merged else body
    for v in sorted(variables):
        groups = {}
        for key, body in merged.items():
            rest = tuple(p for p in key if p[0] != v)
            groups.setdefault(rest, []).append((key, body))
        merged = {}
        for rest, members in groups.items():
            signs = {dict(key).get(v) for key, _ in members}
            if signs == {1, 0, -1} and len({body for _, body in members}) == 1:
                merged[rest] = members[0][1]
            else:
                merged.update(members)
    return disj(*[conj(*([_sign_guard(v, s) for v, s in key] + [body]))
                  for key, body in merged.items()])


def sign_split(f, variables):
    """Equivalent of quantifier-free f as a disjunction over the signs of variables."""
    cases = [(assignment, _restore_signs(conj(*literals), assignment))
             for assignment, _, literals in sign_cases([f], variables)]
    return merge_sign_cases(cases, variables)


# ========== bounds on y = x^α ==========

class _PowerBounds(object):
    def __init__(self, cube, root_predicate):
        x = cube.var
        lowers, uppers, equations, positives, negatives = [], [], [], [], []
        for literal in cube:
            negated = isinstance(literal, Not)
            atom = literal.arg if negated else literal
            if isinstance(atom, Re):
                n = atom.degree
                entry = (n, atom.arg.exponent(x) % n, atom.arg.drop(x).positive_part())
                (negatives if negated else positives).append(entry)
                continue
            q = _ratio(atom.right, atom.left)
            e = q.exponent(x)
            rest = q.drop(x)
            if e > 0:
                target = equations if isinstance(atom, Eq) else lowers
                target.append((e, rest.inverse()))
            else:
                target = equations if isinstance(atom, Eq) else uppers
                target.append((-e, rest))
        self.alpha = lcm_all([e for e, _ in lowers + uppers + equations] +
                             [a for _, a, _ in positives + negatives])
        alpha = self.alpha
        self.lowers = [b.power(alpha // e) for e, b in lowers]
        self.uppers = [b.power(alpha // e) for e, b in uppers]
        self.equations = [b.power(alpha // e) for e, b in equations]
        self.positives = [(n * (alpha // a), t.power(alpha // a)) for n, a, t in positives]
        self.negatives = [(n * (alpha // a), t.power(alpha // a)) for n, a, t in negatives]
        if root_predicate and alpha > 1:
            self.positives.append((alpha, ONE))

    def substitute_equation(self, simplify_atom):
        value = self.equations[0]
        parts = [simplify_atom(Less(l, value)) for l in self.lowers]
        parts += [simplify_atom(Less(value, u)) for u in self.uppers]
        parts += [simplify_atom(Eq(value, e)) for e in self.equations[1:]]
        parts += [simplify_atom(Re(n, value * t)) for n, t in self.positives]
        parts += [negate(simplify_atom(Re(n, value * t))) for n, t in self.negatives]
        return conj(*parts)


def eliminate_mul_group(cube, simplify_atom=simplify_positive_atom):
    """∃x over ⟨ℝ⁺;<,×⟩: scale exponents to α, then dense order on y = x^α."""
    bounds = _PowerBounds(cube, root_predicate=False)
    if bounds.equations:
        return bounds.substitute_equation(simplify_atom)
    if not bounds.lowers or not bounds.uppers:
        return TRUE
    return conj(*[simplify_atom(Less(l, u)) for l in bounds.lowers for u in bounds.uppers])


def _merge_re(pairs, simplify_atom=simplify_positive_atom):
    if not pairs:
        raise NumericError('merge_re_atoms needs at least one atom')
    n = lcm_all([m for m, _ in pairs])
    _, coefficients = bezout_many([n // m for m, _ in pairs])
    beta = ONE
    for (m, t), c in zip(pairs, coefficients):
        beta = (beta * t.power(c * (n // m))).positive_part()
    side = []
    for i, (mi, ti) in enumerate(pairs):
        for mj, tj in pairs[i + 1:]:
            g = gcd_all([mi, mj])
            if g > 1:
                side.append(simplify_atom(Re(g, ti * tj.inverse())))
    return n, beta, conj(*side)


def merge_re_atoms(atoms, x):
    """Merge Re_{nᵢ}(x·tᵢ) into Re_n(x·β) plus the pairwise solvability side condition.

    Returns (n, β, side) with n the lcm of the degrees.
    """
    pairs = []
    for atom in atoms:
        if atom.arg.exponent(x) != 1:
            raise NumericError('x must occur with exponent 1 in {!r}'.format(atom))
        pairs.append((atom.degree, atom.arg.drop(x).positive_part()))
    return _merge_re(pairs)


def _bounded_power_class(lower, upper, merged, negatives, simplify_atom):
    between = [] if lower is None or upper is None else [simplify_atom(Less(lower, upper))]
    if merged is None or not negatives:
        return conj(*between)
    n, beta = merged
    parts = [negate(simplify_atom(Re(m, beta.inverse() * t)))
             for m, t in negatives if n % m == 0]
    return conj(*(parts + between))


def eliminate_mul_q_plus(cube, simplify_atom=simplify_positive_atom):
    """∃x over ⟨ℚ⁺;<,×,Re_n⟩."""
    bounds = _PowerBounds(cube, root_predicate=True)
    if bounds.equations:
        return bounds.substitute_equation(simplify_atom)
    lowers = list(max_split(bounds.lowers, simplify_atom, largest=True)) or [(None, TRUE)]
    uppers = list(max_split(bounds.uppers, simplify_atom, largest=False)) or [(None, TRUE)]
    merged, side = None, TRUE
    if bounds.positives:
        n, beta, side = _merge_re(bounds.positives, simplify_atom)
        merged = (n, beta)
    cases = []
    for lower, lower_side in lowers:
        for upper, upper_side in uppers:
            cases.append(conj(lower_side, upper_side, _bounded_power_class(
                lower, upper, merged, bounds.negatives, simplify_atom)))
    return conj(side, disj(*cases))


# ========== witness constructors ==========

def witness_m10(x, z, n):
    """A positive rational y with x < yⁿ < z, for 0 ≤ x < z."""
    y = rational_between_roots(x, z, n)
    if not (y > 0 and Fraction(x) < y ** n < Fraction(z)):
        raise WitnessError('no {}-th power strictly between {} and {}'.format(n, x, z))
    return y


def witness_m11(xs, n, ms):
    """A prime y such that yⁿ·xⱼ is not an mⱼ-th power for every j. Needs mⱼ ∤ n."""
    avoid = set()
    for m in ms:
        if n % m == 0:
            raise NumericError('{} divides {}'.format(m, n))
    for x in xs:
        if x == 0:
            raise NumericError('0 is an m-th power for every m')
        avoid |= factor_rational(Fraction(x)).primes
    y = Fraction(fresh_prime(avoid))
    for x, m in zip(xs, ms):
        if is_nth_power(y ** n * Fraction(x), m):
            raise WitnessError('{}^{}*{} is a {}-th power'.format(y, n, x, m))
    return y


# ========== engines ==========

class PositiveRationalEngine(Engine):
    rule = 'eliminate-mul-q-pos'
    anchor = 'positive rationals with order, multiplication and power predicates'

    def simplify_atom(self, atom):
        return simplify_positive_atom(atom)

    def eliminate_cube(self, cube):
        return eliminate_mul_q_plus(cube, self.simplify_atom)


class SignSplitEngine(Engine):
    """Reduces a cube over ℚ or ℝ to the positive cone, one sign case at a time."""

    positive_procedure = None

    def simplify_atom(self, atom):
        return canonical_mult_atom(atom)

    def eliminate_cube(self, cube):
        x = cube.var
        variables = set()
        for literal in cube:
            atom = literal.arg if isinstance(literal, Not) else literal
            for t in atom.terms():
                variables |= t.variables()
        cases = []
        for assignment, _, literals in sign_cases(cube.literals, variables):
            bound = [l for l in literals if x in literal_variables(l)]
            free = [l for l in literals if x not in literal_variables(l)]
            if bound:
                free.append(self.positive_procedure(Cube(x, tuple(bound))))
            # the sign of x is absorbed by the quantifier
            others = {v: s for v, s in assignment.items() if v != x}
            cases.append((others, _restore_signs(conj(*free), others)))
        return merge_sign_cases(cases, variables - {x})


class RealMultiplicativeEngine(SignSplitEngine):
    rule = 'eliminate-mul-r'
    anchor = 'ordered field multiplication with roots of positives'
    positive_procedure = staticmethod(eliminate_mul_group)


class RationalMultiplicativeEngine(SignSplitEngine):
    rule = 'eliminate-mul-q'
    anchor = 'rationals with order, multiplication and power predicates'
    positive_procedure = staticmethod(eliminate_mul_q_plus)


def eliminate_mul_q(f, trace=None):
    return eliminate_quantifiers(f, RationalMultiplicativeEngine(TheoryId.MUL_Q), trace)


def eliminate_mul_r(f, trace=None):
    return eliminate_quantifiers(f, RealMultiplicativeEngine(TheoryId.MUL_R), trace)
