# ordered-structures-qe -- decider/witnesses.py
"""Witness extraction that mirrors the elimination steps.

``extract_witness`` reads a cube under an assignment of its other variables as
numeric constraints on the eliminated variable and builds a value the way the
matching engine proves one exists. Every value is re-verified exactly.
"""

import logging
import math
from fractions import Fraction

from .engine import Cube, eliminate_quantifiers, literal_variables
from .evaluation import Witness, _eval, check_assignment, eval_qf, eval_term, strip_exists
from .exceptions import NumericError, WitnessError, WitnessUnavailable
from .formulas import Cong, Eq, Exists, Less, Not, Re, conj, cubes, disj, is_quantifier_free
from .numeric import (
    bezout, bezout_many, crt_solve, gcd_all, is_nth_power, lcm_all, nth_root, power,
)
from .qe_additive import relativize_to_n
from .qe_mult import witness_m10, witness_m11
from .terms import LinearTerm
from .theories import MULTIPLICATIVE, TheoryId

logger = logging.getLogger(__name__)


class _Infeasible(Exception):
    """The constraints of one case have no solution."""


def _verify(cube, theory, a, x, value):
    extended = dict(a)
    extended[x] = value
    if not eval_qf(conj(*cube.literals), theory, extended):
        raise WitnessError('{} = {} does not satisfy the cube'.format(x, value))
    return Witness({x: value}, verified=True)


# ========== order and additive theories ==========

def _affine(t, x, a):
    """(k, c) with t = k·x + c under a."""
    at_zero, at_one = dict(a), dict(a)
    at_zero[x], at_one[x] = 0, 1
    c = eval_term(t, at_zero)
    return eval_term(t, at_one) - c, c


class _LinearConstraints(object):
    def __init__(self, cube, a):
        x = cube.var
        self.lower = self.upper = self.value = None
        self.residues = []
        for literal in cube:
            if isinstance(literal, Not):
                raise WitnessError('unexpected negated literal {!r}'.format(literal))
            kl, cl = _affine(literal.left, x, a)
            kr, cr = _affine(literal.right, x, a)
            c, d = kl - kr, cr - cl
            if isinstance(literal, Less):
                self._less(c, d)
            elif isinstance(literal, Eq):
                self._equal(c, d)
            elif isinstance(literal, Cong):
                self._congruent(c, d, literal.modulus)
            elif not _eval(literal, a):
                raise _Infeasible()

    def _less(self, c, d):
        # c·x < d
        if c == 0:
            if not 0 < d:
                raise _Infeasible()
        elif c > 0:
            bound = Fraction(d, c)
            self.upper = bound if self.upper is None else min(self.upper, bound)
        else:
            bound = Fraction(d, c)
            self.lower = bound if self.lower is None else max(self.lower, bound)

    def _equal(self, c, d):
        if c == 0:
            if d != 0:
                raise _Infeasible()
            return
        value = Fraction(d, c)
        if self.value is not None and self.value != value:
            raise _Infeasible()
        self.value = value

    def _congruent(self, c, d, n):
        # c·x ≡ d (mod n)
        c, d = int(c) % n, int(d) % n
        if c == 0:
            if d != 0:
                raise _Infeasible()
            return
        g = gcd_all([c, n])
        if d % g:
            raise _Infeasible()
        n, c, d = n // g, c // g, d // g
        if n == 1:
            return
        _, inverse, _ = bezout(c, n)
        self.residues.append((n, d * inverse % n))


def _dense_value(constraints):
    lower, upper, value = constraints.lower, constraints.upper, constraints.value
    if value is not None:
        return value
    if lower is not None and upper is not None:
        if lower >= upper:
            raise _Infeasible()
        return (lower + upper) / 2
    if lower is not None:
        return lower + 1
    if upper is not None:
        return upper - 1
    return Fraction(0)


def _integer_value(constraints, naturals):
    low = None if constraints.lower is None else math.floor(constraints.lower) + 1
    high = None if constraints.upper is None else math.ceil(constraints.upper) - 1
    if naturals:
        low = 0 if low is None else max(low, 0)
    if constraints.residues:
        residue = crt_solve(constraints.residues)
        if residue is None:
            raise _Infeasible()
        modulus = lcm_all([n for n, _ in constraints.residues])
    else:
        residue, modulus = 0, 1
    if constraints.value is not None:
        value = constraints.value
        if value.denominator != 1 or (value - residue) % modulus:
            raise _Infeasible()
        value = int(value)
    elif low is not None:
        value = low + (residue - low) % modulus
    elif high is not None:
        value = high - (high - residue) % modulus
    else:
        value = residue
    if (low is not None and value < low) or (high is not None and value > high):
        raise _Infeasible()
    return value


def _linear_witness(cube, theory, a):
    constraints = _LinearConstraints(cube, a)
    if theory.integral:
        return _integer_value(constraints, theory.naturals)
    return _dense_value(constraints)


# ========== multiplicative theories ==========

def _scaled_term(t, x, a, sign):
    """(c, e) with t = c·yᵉ for x = sign·y, y > 0."""
    c = eval_term(t.drop(x), a)
    e = t.exponent(x)
    return c * power(sign, e), e


class _PowerConstraints(object):
    """Constraints on z = y^α for y > 0."""

    def __init__(self, cube, a, sign, root_predicate):
        x = cube.var
        lowers, uppers, equations, positives, negatives = [], [], [], [], []
        for literal in cube:
            negated = isinstance(literal, Not)
            atom = literal.arg if negated else literal
            if isinstance(atom, Re):
                self._power_predicate(atom, x, a, sign, negated, positives, negatives)
                continue
            if negated:
                raise WitnessError('unexpected negated literal {!r}'.format(literal))
            cl, el = _scaled_term(atom.left, x, a, sign)
            cr, er = _scaled_term(atom.right, x, a, sign)
            self._compare(atom, cl, el, cr, er, lowers, uppers, equations)
        self.alpha = alpha = lcm_all([k for k, _ in lowers + uppers + equations] +
                                     [e for _, _, e in positives + negatives])
        self.lower = max([rho ** (alpha // k) for k, rho in lowers], default=None)
        self.upper = min([rho ** (alpha // k) for k, rho in uppers], default=None)
        values = {rho ** (alpha // k) for k, rho in equations}
        if len(values) > 1:
            raise _Infeasible()
        self.value = values.pop() if values else None
        self.positives = [(n * (alpha // e), c ** (alpha // e)) for n, c, e in positives]
        self.negatives = [(n * (alpha // e), c ** (alpha // e)) for n, c, e in negatives]
        if root_predicate and alpha > 1:
            self.positives.append((alpha, Fraction(1)))

    @staticmethod
    def _power_predicate(atom, x, a, sign, negated, positives, negatives):
        n = atom.degree
        c, e = _scaled_term(atom.arg, x, a, sign)
        if c == 0:
            holds = True
        elif c < 0 and n % 2 == 0:
            holds = False
        else:
            c, e = abs(c), e % n
            if e:
                (negatives if negated else positives).append((n, c, e))
                return
            holds = is_nth_power(c, n)
        if holds == negated:
            raise _Infeasible()

    @staticmethod
    def _compare(atom, cl, el, cr, er, lowers, uppers, equations):
        is_less = isinstance(atom, Less)
        if cl == 0 or cr == 0:
            holds = (cl < cr) if is_less else (cl == cr)
            if not holds:
                raise _Infeasible()
            return
        k = el - er
        if k == 0:
            holds = (cl < cr) if is_less else (cl == cr)
            if not holds:
                raise _Infeasible()
            return
        rho = Fraction(cr) / Fraction(cl)
        if not is_less:
            if rho <= 0:
                raise _Infeasible()
            equations.append((k, rho) if k > 0 else (-k, 1 / rho))
            return
        if cl > 0:
            # y^k < rho
            if rho <= 0:
                raise _Infeasible()
            if k > 0:
                uppers.append((k, rho))
            else:
                lowers.append((-k, 1 / rho))
        elif rho > 0:
            # y^k > rho
            if k > 0:
                lowers.append((k, rho))
            else:
                uppers.append((-k, 1 / rho))


def _merge_power_classes(positives):
    """Numeric merge of Re_{nᵢ}(cᵢ·z) into Re_n(β·z)."""
    if not positives:
        return 1, Fraction(1)
    for i, (ni, ci) in enumerate(positives):
        for nj, cj in positives[i + 1:]:
            g = gcd_all([ni, nj])
            if g > 1 and not is_nth_power(ci / cj, g):
                raise _Infeasible()
    n = lcm_all([m for m, _ in positives])
    _, coefficients = bezout_many([n // m for m, _ in positives])
    beta = Fraction(1)
    for (m, c), k in zip(positives, coefficients):
        beta *= power(c, k * (n // m))
    return n, beta


def _between(lower, upper, degree):
    """δ > 0 with lower < δ^degree < upper, with missing bounds made up."""
    if lower is None and upper is None:
        return Fraction(1)
    if upper is None:
        upper = 2 * lower if lower > 0 else Fraction(1)
    if lower is None:
        lower = Fraction(0)
    if lower >= upper:
        raise _Infeasible()
    return witness_m10(max(lower, Fraction(0)), upper, degree)


def _rational_power_value(constraints):
    """y > 0 over ℚ with the power predicates."""
    alpha = constraints.alpha
    if constraints.value is not None:
        z = constraints.value
        if constraints.lower is not None and not constraints.lower < z:
            raise _Infeasible()
        if constraints.upper is not None and not z < constraints.upper:
            raise _Infeasible()
        for n, c in constraints.positives:
            if not is_nth_power(c * z, n):
                raise _Infeasible()
        for n, c in constraints.negatives:
            if is_nth_power(c * z, n):
                raise _Infeasible()
        y = nth_root(z, alpha)
        if y is None:
            raise _Infeasible()
        return y
    if (constraints.lower is not None and constraints.upper is not None
            and constraints.lower >= constraints.upper):
        raise _Infeasible()
    n, beta = _merge_power_classes(constraints.positives)
    xs, ms = [], []
    for m, c in constraints.negatives:
        if n % m == 0:
            if is_nth_power(c / beta, m):
                raise _Infeasible()
        else:
            xs.append(c / beta)
            ms.append(m)
    gamma = witness_m11(xs, n, ms) if xs else Fraction(1)
    big = 1
    for m in ms:
        big *= m
    scale = beta / gamma ** n
    lower = None if constraints.lower is None else constraints.lower * scale
    upper = None if constraints.upper is None else constraints.upper * scale
    delta = _between(lower, upper, big * n)
    z = delta ** (big * n) * gamma ** n / beta
    y = nth_root(z, alpha)
    if y is None:
        raise WitnessError('{} has no rational {}-th root'.format(z, alpha))
    return y


def _real_power_value(constraints):
    """y > 0 over the real test carrier; only equations can force an irrational value."""
    alpha = constraints.alpha
    if constraints.value is not None:
        z = constraints.value
        if constraints.lower is not None and not constraints.lower < z:
            raise _Infeasible()
        if constraints.upper is not None and not z < constraints.upper:
            raise _Infeasible()
        y = nth_root(z, alpha)
        if y is None:
            raise WitnessUnavailable('the witness is the irrational {}-th root of {}'.format(alpha, z))
        return y
    return _between(constraints.lower, constraints.upper, alpha)


def _multiplicative_witness(cube, theory, a):
    x = cube.var
    if theory.has_zero:
        extended = dict(a)
        extended[x] = Fraction(0)
        if _eval(conj(*cube.literals), extended):
            return Fraction(0)
    signs = (1,) if theory.positive else (1, -1)
    for sign in signs:
        try:
            if theory is TheoryId.MUL_R:
                y = _real_power_value(_PowerConstraints(cube, a, sign, root_predicate=False))
            else:
                y = _rational_power_value(_PowerConstraints(cube, a, sign, root_predicate=True))
        except _Infeasible:
            continue
        return sign * y
    raise _Infeasible()


def extract_witness(cube, theory, a):
    """A verified value for cube.var satisfying every literal of cube under a."""
    check_assignment(theory, a)
    try:
        if theory.family == MULTIPLICATIVE:
            value = _multiplicative_witness(cube, theory, a)
        else:
            value = _linear_witness(cube, theory, a)
    except (_Infeasible, NumericError):
        raise WitnessError('{} has no witness for {} under {}'.format(theory, cube.var, a))
    return _verify(cube, theory, a, cube.var, value)


# ========== ∃-blocks ==========

def _default_value(theory):
    return Fraction(1) if theory.positive else 0


def witness_block(f, theory, a):
    """Verified values for the leading ∃-block of f, or None when it is unsatisfiable.

    Variables are peeled outermost first: the rest of the block is eliminated,
    a satisfiable cube of the remainder is picked and its witness fixed.
    """
    from .driver import engine_for

    engine = engine_for(theory)
    names, matrix = strip_exists(f)
    if theory is TheoryId.PRESBURGER_N:
        zero = LinearTerm()
        guards = [disj(Less(zero, LinearTerm.var(x)), Eq(zero, LinearTerm.var(x))) for x in names]
        matrix = conj(*(guards + [relativize_to_n(matrix)]))
    if not is_quantifier_free(matrix):
        matrix, _ = eliminate_quantifiers(matrix, engine)
    current, values = dict(a), {}
    for i, x in enumerate(names):
        rest = matrix
        for name in reversed(names[i + 1:]):
            rest = Exists(name, rest)
        remainder, _ = eliminate_quantifiers(rest, engine)
        value = None
        for literals in cubes(engine.prepare(remainder)):
            bound = tuple(l for l in literals if x in literal_variables(l))
            free = [l for l in literals if x not in literal_variables(l)]
            if not _eval(conj(*free), current):
                continue
            if not bound:
                value = _default_value(theory)
                break
            cube = Cube(x, bound)
            if _eval(engine.eliminate_cube(cube), current):
                value = extract_witness(cube, theory, current).values[x]
                break
        if value is None:
            return None
        current[x] = value
        values[x] = value
    if not eval_qf(matrix, theory, current):
        raise WitnessError('block witness {} does not satisfy the matrix'.format(values))
    logger.debug('witness block %s', values)
    return Witness(values, verified=True)
