# ordered-structures-qe -- decider/numeric.py
"""Exact number-theoretic kernels.

Rationals are ``fractions.Fraction`` throughout; nothing here ever touches a
float. Factorization, Bézout coefficients, the generalized Chinese remainder
theorem and prime generation come from sympy.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce

from sympy import factorint, igcd, ilcm, nextprime
from sympy.core.intfunc import igcdex
from sympy.ntheory.modular import solve_congruence

from .exceptions import NumericError


def gcd_all(values):
    return reduce(igcd, values, 0)


def lcm_all(values):
    return reduce(ilcm, values, 1)


def power(q, e):
    """q**e with the convention 0**e = 0 for every nonzero e (so 0⁻¹ = 0)."""
    if e == 0:
        return Fraction(1)
    if q == 0:
        return Fraction(0)
    return Fraction(q) ** e


def inverse(q):
    return power(q, -1)


# ========== Bézout and congruences ==========

def bezout(a, b):
    """Return (d, x, y) with d = gcd(a, b) > 0 and a*x + b*y = d."""
    if a == 0 and b == 0:
        raise NumericError('bezout(0, 0) has no positive gcd')
    x, y, d = igcdex(a, b)
    if d < 0:
        d, x, y = -d, -x, -y
    return int(d), int(x), int(y)


def bezout_many(values):
    """Return (d, coefficients) with sum(c*v) = d = gcd(values)."""
    values = list(values)
    if not values or all(v == 0 for v in values):
        raise NumericError('bezout_many needs a nonzero value')
    d, coefficients = values[0], [1]
    for v in values[1:]:
        if d == 0:
            d, coefficients = v, [0] * len(coefficients) + [1]
            continue
        if v == 0:
            coefficients.append(0)
            continue
        g, x, y = bezout(d, v)
        coefficients = [c * x for c in coefficients] + [y]
        d = g
    if d < 0:
        d, coefficients = -d, [-c for c in coefficients]
    return d, coefficients


def crt_solve(pairs):
    """Solve x ≡ t (mod n) for every (n, t) in pairs.

    Moduli need not be coprime. Returns the representative in [0, lcm), or
    None when two residues disagree modulo the gcd of their moduli.
    """
    pairs = list(pairs)
    if not pairs:
        raise NumericError('crt_solve needs at least one congruence')
    for n, _ in pairs:
        if n < 2:
            raise NumericError('modulus {} is below 2'.format(n))
    solution = solve_congruence(*[(t % n, n) for n, t in pairs])
    if solution is None:
        return None
    x, modulus = solution
    return int(x) % int(modulus)


# ========== factorization and powers ==========

@dataclass(frozen=True)
class FactoredRational:
    sign: int
    exponents: tuple = ()

    def exponent(self, prime):
        return dict(self.exponents).get(prime, 0)

    @property
    def primes(self):
        return frozenset(p for p, _ in self.exponents)

    def reassemble(self):
        if self.sign == 0:
            return Fraction(0)
        value = Fraction(self.sign)
        for prime, e in self.exponents:
            value *= Fraction(prime) ** e
        return value


@lru_cache(maxsize=65536)
def factor_rational(q):
    q = Fraction(q)
    if q == 0:
        return FactoredRational(0)
    exponents = dict(factorint(abs(q.numerator)))
    for prime, e in factorint(q.denominator).items():
        exponents[prime] = exponents.get(prime, 0) - e
    exponents.pop(1, None)
    return FactoredRational(
        1 if q > 0 else -1,
        tuple(sorted((int(p), int(e)) for p, e in exponents.items() if e != 0)),
    )


def is_nth_power(q, n):
    if n < 1:
        raise NumericError('degree {} is below 1'.format(n))
    f = factor_rational(Fraction(q))
    if f.sign == 0:
        return True
    if f.sign < 0 and n % 2 == 0:
        return False
    return all(e % n == 0 for _, e in f.exponents)


def nth_root(q, n):
    """The rational y with y**n == q, or None. Odd roots of negatives are negative."""
    if not is_nth_power(q, n):
        return None
    f = factor_rational(Fraction(q))
    if f.sign == 0:
        return Fraction(0)
    return FactoredRational(f.sign, tuple((p, e // n) for p, e in f.exponents)).reassemble()


def rational_between_roots(x, z, n):
    """Return a rational y > 0 with x < y**n < z, by exact bisection."""
    x, z = Fraction(x), Fraction(z)
    if n < 1:
        raise NumericError('exponent {} is below 1'.format(n))
    if x < 0:
        raise NumericError('lower bound {} is negative'.format(x))
    if x >= z:
        raise NumericError('empty interval ({}, {})'.format(x, z))
    # invariant: low**n <= x and high**n >= z
    low, high = Fraction(0), max(Fraction(1), z)
    while True:
        middle = (low + high) / 2
        value = middle ** n
        if value <= x:
            low = middle
        elif value >= z:
            high = middle
        else:
            return middle


def fresh_prime(avoid):
    prime = 2
    while prime in avoid:
        prime = int(nextprime(prime))
    return prime


def enumerate_rationals(bound):
    """Yield every reduced p/q with |p|, q <= bound once, by nondecreasing height."""
    for height in range(1, bound + 1):
        level = []
        for q in range(1, height + 1):
            numerators = range(-height, height + 1) if q == height else (-height, height)
            for p in numerators:
                if igcd(abs(p), q) == 1:
                    level.append(Fraction(p, q))
        yield from sorted(level)


def height(q):
    q = Fraction(q)
    return max(abs(q.numerator), q.denominator)
