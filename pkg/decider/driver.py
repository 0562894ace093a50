# ordered-structures-qe -- decider/driver.py

import logging

from .engine import QeTrace, eliminate_quantifiers
from .evaluation import eval_qf
from .exceptions import OpenFormulaError
from .formulas import free_variables
from .qe_additive import DivisibleGroupEngine, PresburgerEngine, relativize_to_n
from .qe_mult import PositiveRationalEngine, RationalMultiplicativeEngine, RealMultiplicativeEngine
from .qe_order import DenseOrderEngine, IntegerOrderEngine, NaturalOrderEngine
from .theories import TheoryId

logger = logging.getLogger(__name__)


ENGINES = {
    TheoryId.DLO_Q: DenseOrderEngine,
    TheoryId.DLO_R: DenseOrderEngine,
    TheoryId.ORDER_Z: IntegerOrderEngine,
    TheoryId.ORDER_N: NaturalOrderEngine,
    TheoryId.OAG_Q: DivisibleGroupEngine,
    TheoryId.OAG_R: DivisibleGroupEngine,
    TheoryId.PRESBURGER_Z: PresburgerEngine,
    TheoryId.PRESBURGER_N: PresburgerEngine,
    TheoryId.MUL_R: RealMultiplicativeEngine,
    TheoryId.MUL_Q: RationalMultiplicativeEngine,
    TheoryId.MUL_Q_POS: PositiveRationalEngine,
}


def engine_for(theory):
    return ENGINES[theory](theory)


def prepare_input(f, theory, trace):
    """presburger-n is decided inside presburger-z with every quantifier restricted to 0 ≤ x."""
    if theory is TheoryId.PRESBURGER_N:
        relativized = relativize_to_n(f)
        if relativized != f:
            trace.record('relativize', 'naturals as the nonnegative integers', f, relativized)
        return relativized
    return f


def qe_driver(f, theory):
    """Return a quantifier-free equivalent of f and the trace that produced it."""
    trace = QeTrace()
    engine = engine_for(theory)
    g = prepare_input(f, theory, trace)
    result, trace = eliminate_quantifiers(g, engine, trace)
    logger.debug('%s: %d step(s), %d free variable(s) left', theory, len(trace),
                 len(free_variables(result)))
    return result, trace


def decide(sentence, theory):
    names = free_variables(sentence)
    if names:
        raise OpenFormulaError(names)
    result, trace = qe_driver(sentence, theory)
    return eval_qf(result, theory, {}), trace
