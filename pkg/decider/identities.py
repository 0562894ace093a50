# ordered-structures-qe -- decider/identities.py
"""Exhaustive checks of the definitions of + from successor and ×.

Both are finite sanity checks over a cube of integers; they back the claim
that ⟨ℕ;<,×⟩ and ⟨ℤ;<,×⟩ interpret full arithmetic and so are left undecided.
"""

from itertools import product


def succ(n):
    return n + 1


def robinson_sum(x, y, z):
    """z ≠ 0 ∧ s(z·x)·s(z·y) = s(z·z·s(x·y))"""
    return z != 0 and succ(z * x) * succ(z * y) == succ(z * z * succ(x * y))


def robinson_defines_sum(x, y, z, naturals=False):
    if naturals:
        zero_case = z == 0 and x == y == z
    else:
        zero_case = z == 0 and y == -x
    return zero_case or robinson_sum(x, y, z)


def hinman_defines_sum(x, y, z):
    zero_like = z * succ(z) == z
    if zero_like:
        return succ(x * y) == succ(x) * succ(y)
    return succ(z * x) * succ(z * y) == succ(z * z * succ(x * y))


def check_robinson_identity(bound, naturals=False):
    values = range(0, bound + 1) if naturals else range(-bound, bound + 1)
    for x, y, z in product(values, repeat=3):
        if (z == x + y) != robinson_defines_sum(x, y, z, naturals):
            return False
    return True


def check_hinman_identity(bound):
    values = range(-bound, bound + 1)
    for x, y, z in product(values, repeat=3):
        if (z == x + y) != hinman_defines_sum(x, y, z):
            return False
    return True
