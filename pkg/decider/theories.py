# ordered-structures-qe -- decider/theories.py

from enum import Enum

from django.db.models import TextChoices


ORDER = 'order'
ADDITIVE = 'additive'
MULTIPLICATIVE = 'multiplicative'


class TheoryId(str, Enum):
    DLO_Q = 'dlo-q'
    DLO_R = 'dlo-r'
    ORDER_Z = 'order-z'
    ORDER_N = 'order-n'
    OAG_Q = 'oag-q'
    OAG_R = 'oag-r'
    PRESBURGER_Z = 'presburger-z'
    PRESBURGER_N = 'presburger-n'
    MUL_R = 'mul-r'
    MUL_Q = 'mul-q'
    MUL_Q_POS = 'mul-q-pos'

    def __str__(self):
        return self.value

    @property
    def family(self):
        if self in (TheoryId.DLO_Q, TheoryId.DLO_R, TheoryId.ORDER_Z, TheoryId.ORDER_N):
            return ORDER
        if self in (TheoryId.OAG_Q, TheoryId.OAG_R, TheoryId.PRESBURGER_Z, TheoryId.PRESBURGER_N):
            return ADDITIVE
        return MULTIPLICATIVE

    @property
    def integral(self):
        """True when the carrier is ℤ or ℕ."""
        return self in (TheoryId.ORDER_Z, TheoryId.ORDER_N,
                        TheoryId.PRESBURGER_Z, TheoryId.PRESBURGER_N)

    @property
    def naturals(self):
        return self in (TheoryId.ORDER_N, TheoryId.PRESBURGER_N)

    @property
    def positive(self):
        return self is TheoryId.MUL_Q_POS

    @property
    def dense(self):
        return not self.integral

    # signature flags

    @property
    def has_successor(self):
        return self in (TheoryId.ORDER_Z, TheoryId.ORDER_N)

    @property
    def has_zero(self):
        return self not in (TheoryId.DLO_Q, TheoryId.DLO_R, TheoryId.ORDER_Z, TheoryId.MUL_Q_POS)

    @property
    def has_numerals(self):
        return self in (TheoryId.PRESBURGER_Z, TheoryId.PRESBURGER_N)

    @property
    def has_congruence(self):
        return self in (TheoryId.PRESBURGER_Z, TheoryId.PRESBURGER_N)

    @property
    def has_power_predicate(self):
        return self in (TheoryId.MUL_Q, TheoryId.MUL_Q_POS)

    @property
    def has_negation(self):
        """Unary minus (additive) or the constant -1 (multiplicative)."""
        return self not in (TheoryId.DLO_Q, TheoryId.DLO_R, TheoryId.ORDER_Z,
                            TheoryId.ORDER_N, TheoryId.MUL_Q_POS)


def theory_from_name(name):
    try:
        return TheoryId(name)
    except ValueError:
        raise ValueError("unknown theory '{}'; choose one of {}".format(
            name, ', '.join(t.value for t in TheoryId)))


class TheoryChoices(TextChoices):
    DLO_Q = TheoryId.DLO_Q.value
    DLO_R = TheoryId.DLO_R.value
    ORDER_Z = TheoryId.ORDER_Z.value
    ORDER_N = TheoryId.ORDER_N.value
    OAG_Q = TheoryId.OAG_Q.value
    OAG_R = TheoryId.OAG_R.value
    PRESBURGER_Z = TheoryId.PRESBURGER_Z.value
    PRESBURGER_N = TheoryId.PRESBURGER_N.value
    MUL_R = TheoryId.MUL_R.value
    MUL_Q = TheoryId.MUL_Q.value
    MUL_Q_POS = TheoryId.MUL_Q_POS.value
