# ordered-structures-qe -- decider/terms.py
"""Term normal forms, one per signature family.

* ``OrderTerm``: s^k(v) or s^k(0).
* ``LinearTerm``: sum of c*v plus an integer constant (the number of 1's).
* ``Monomial``: sign * prod v^e, where sign is +1, -1 or 0.

All three are immutable and hashable; maps are stored as sorted tuples and
never contain zero entries.
"""

from dataclasses import dataclass
from typing import Optional

from .numeric import gcd_all


def _pairs(mapping):
    return tuple(sorted((v, c) for v, c in mapping.items() if c != 0))


@dataclass(frozen=True)
class OrderTerm:
    var: Optional[str] = None  # None is the constant 0
    succ: int = 0

    def __post_init__(self):
        if self.succ < 0:
            raise ValueError('negative successor count')

    def variables(self):
        return frozenset() if self.var is None else frozenset([self.var])

    def shift(self, k):
        return OrderTerm(self.var, self.succ + k)

    def substitute(self, var, term):
        if self.var == var:
            return term.shift(self.succ)
        return self

    def rename(self, mapping):
        if self.var in mapping:
            return OrderTerm(mapping[self.var], self.succ)
        return self


@dataclass(frozen=True)
class LinearTerm:
    coeffs: tuple = ()
    const: int = 0

    @classmethod
    def of(cls, mapping=None, const=0):
        return cls(_pairs(mapping or {}), const)

    @classmethod
    def var(cls, name, coefficient=1):
        return cls.of({name: coefficient})

    @classmethod
    def constant(cls, value):
        return cls((), value)

    def as_dict(self):
        return dict(self.coeffs)

    def coeff(self, var):
        return self.as_dict().get(var, 0)

    def variables(self):
        return frozenset(v for v, _ in self.coeffs)

    @property
    def is_constant(self):
        return not self.coeffs

    def __add__(self, other):
        merged = self.as_dict()
        for v, c in other.coeffs:
            merged[v] = merged.get(v, 0) + c
        return LinearTerm.of(merged, self.const + other.const)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, k):
        return LinearTerm.of({v: c * k for v, c in self.coeffs}, self.const * k)

    def drop(self, var):
        return LinearTerm(tuple((v, c) for v, c in self.coeffs if v != var), self.const)

    def substitute(self, var, term):
        c = self.coeff(var)
        if not c:
            return self
        return self.drop(var) + term.scale(c)

    def reduce_mod(self, n):
        return LinearTerm.of({v: c % n for v, c in self.coeffs}, self.const % n)

    def content(self):
        return gcd_all([abs(c) for _, c in self.coeffs] + [abs(self.const)])

    def exact_div(self, k):
        return LinearTerm.of({v: c // k for v, c in self.coeffs}, self.const // k)

    def rename(self, mapping):
        return LinearTerm.of({mapping.get(v, v): c for v, c in self.coeffs}, self.const)


@dataclass(frozen=True)
class Monomial:
    exps: tuple = ()
    sign: int = 1
    # variables whose exponents cancelled; the monomial is 0 when one of them is
    support: tuple = ()

    @classmethod
    def var(cls, name, exponent=1):
        return cls(_pairs({name: exponent}))

    @classmethod
    def of(cls, mapping, sign=1, support=()):
        if sign == 0:
            return ZERO
        exps = _pairs(mapping)
        present = {v for v, _ in exps}
        return cls(exps, sign, tuple(sorted(set(support) - present)))

    def as_dict(self):
        return dict(self.exps)

    def exponent(self, var):
        return self.as_dict().get(var, 0)

    def variables(self):
        return frozenset(v for v, _ in self.exps) | frozenset(self.support)

    @property
    def is_zero(self):
        return self.sign == 0

    @property
    def is_constant(self):
        return not self.exps and not self.support

    def __mul__(self, other):
        if self.is_zero or other.is_zero:
            return ZERO
        merged = self.as_dict()
        for v, e in other.exps:
            merged[v] = merged.get(v, 0) + e
        cancelled = {v for v, e in merged.items() if e == 0}
        support = set(self.support) | set(other.support) | cancelled
        return Monomial.of(merged, self.sign * other.sign, support)

    def inverse(self):
        if self.is_zero:
            return ZERO
        return Monomial(tuple((v, -e) for v, e in self.exps), self.sign, self.support)

    def power(self, k):
        if k == 0:
            return ONE
        if k < 0:
            return self.inverse().power(-k)
        if self.is_zero:
            return ZERO
        return Monomial(tuple((v, e * k) for v, e in self.exps), self.sign ** k, self.support)

    def negate(self):
        return Monomial(self.exps, -self.sign, self.support)

    def drop(self, var):
        if self.is_zero:
            return ZERO
        return Monomial(tuple((v, e) for v, e in self.exps if v != var), self.sign,
                        tuple(v for v in self.support if v != var))

    def positive_part(self):
        """Forget the sign and the zero guards: valid once every variable is known positive."""
        return Monomial(self.exps)

    def substitute(self, var, term):
        if var in self.support:
            return self.drop(var) * (term * term.inverse())
        e = self.exponent(var)
        if not e:
            return self
        return self.drop(var) * term.power(e)

    def rename(self, mapping):
        return Monomial.of({mapping.get(v, v): e for v, e in self.exps}, self.sign,
                           {mapping.get(v, v) for v in self.support})


ONE = Monomial()
ZERO = Monomial((), 0, ())
MINUS_ONE = Monomial((), -1, ())
