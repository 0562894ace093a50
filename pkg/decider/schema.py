# ordered-structures-qe -- decider/schema.py
#
# Every report the management commands print is the result of one of these
# queries, executed in process against project.schema.schema.

import logging

import graphene
from graphene import ObjectType, relay
from graphene.types.generic import GenericScalar
from graphene_django import DjangoObjectType
from graphene_django.filter import DjangoFilterConnectionField

from .conf import decider_setting
from .driver import decide, qe_driver
from .evaluation import eval_qf, parse_assignment, search_witness
from .exceptions import EvaluationError, WitnessError, WitnessUnavailable
from .formulas import free_variables
from .models import Sentence
from .parser import parse_formula
from .printer import print_formula
from .selftest import SUITES, run_suites
from .theories import theory_from_name
from .witnesses import witness_block

logger = logging.getLogger(__name__)


class TraceStep(ObjectType):
    rule = graphene.String()
    anchor = graphene.String()
    before = graphene.String()
    after = graphene.String()


class Report(ObjectType):
    theory = graphene.String()
    input = graphene.String()
    eliminated = graphene.String()
    free_variables = graphene.List(graphene.String)
    truth = graphene.Boolean()
    satisfiable = graphene.Boolean()
    witness = GenericScalar()
    trace = graphene.List(TraceStep)


class SuiteReport(ObjectType):
    name = graphene.String()
    passed = graphene.Boolean()
    detail = graphene.String()


class SentenceNode(DjangoObjectType):
    class Meta:
        model = Sentence
        fields = '__all__'
        filter_fields = {
            'theory': ['exact'],
            'truth': ['exact'],
        }
        interfaces = (relay.Node, )
        convert_choices_to_enum = False


# ========== resolver helpers ==========

def _steps(trace, wanted):
    if not wanted:
        return None
    return [step.as_dict() for step in trace]


def _parse(theory, formula):
    theory = theory_from_name(theory)
    return theory, parse_formula(formula, theory)


def _selftest_config():
    return {name: decider_setting(name) for name in (
        'IDENTITY_BOUND', 'CRT_MODULUS_BOUND', 'POWER_ORACLE_HEIGHT', 'POWER_ORACLE_DEGREE',
        'PROPERTY_INSTANCES', 'PROPERTY_SEED', 'SELFTEST_SEARCH_BUDGET', 'AXIOM_SCHEME_BOUND')}


class Query(object):
    decide = graphene.Field(
        Report,
        theory=graphene.String(required=True),
        formula=graphene.String(required=True),
        trace=graphene.Boolean(),
    )
    eliminate = graphene.Field(
        Report,
        theory=graphene.String(required=True),
        formula=graphene.String(required=True),
        trace=graphene.Boolean(),
    )
    witness = graphene.Field(
        Report,
        theory=graphene.String(required=True),
        formula=graphene.String(required=True),
        assign=graphene.String(),
        budget=graphene.Int(),
        trace=graphene.Boolean(),
    )
    selftest = graphene.List(SuiteReport, suites=graphene.List(graphene.String))
    battery = DjangoFilterConnectionField(SentenceNode)
    node = relay.Node.Field()

    def resolve_decide(self, info, theory, formula, trace=None):
        theory, f = _parse(theory, formula)
        truth, qe_trace = decide(f, theory)
        if trace is None:
            trace = decider_setting('TRACE')
        return Report(theory=str(theory), input=print_formula(f),
                      eliminated=print_formula(qe_trace.replay(f)), free_variables=[], truth=truth, trace=_steps(qe_trace, trace))

    def resolve_eliminate(self, info, theory, formula, trace=None):
        theory, f = _parse(theory, formula)
        result, qe_trace = qe_driver(f, theory)
        if trace is None:
            trace = decider_setting('TRACE')
        return Report(theory=str(theory), input=print_formula(f), eliminated=print_formula(result),
                      free_variables=sorted(free_variables(result)), trace=_steps(qe_trace, trace))

    def resolve_witness(self, info, theory, formula, assign=None, budget=None, trace=None):
        theory, f = _parse(theory, formula)
        a = parse_assignment(assign, theory)
        missing = free_variables(f) - set(a)
        if missing:
            raise EvaluationError('free variables without value: {}'.format(', '.join(sorted(missing))))
        if budget is None:
            budget = decider_setting('WITNESS_BUDGET')
        if trace is None:
            trace = decider_setting('TRACE')
        result, qe_trace = qe_driver(f, theory)
        satisfiable = eval_qf(result, theory, a)
        values = None
        if satisfiable:
            try:
                found = witness_block(f, theory, a)
                if found is None:
                    raise WitnessError('{} is satisfiable but no witness was built'.format(formula))
            except WitnessUnavailable:
                logger.debug('no rational witness by construction, searching with budget %d', budget)
                found = search_witness(f, theory, a, budget)
            if found is not None:
                values = found.as_strings()
        return Report(theory=str(theory), input=print_formula(f), eliminated=print_formula(result),
                      free_variables=sorted(free_variables(f)), satisfiable=satisfiable,
                      witness=values, trace=_steps(qe_trace, trace))

    def resolve_selftest(self, info, suites=None):
        for name in suites or []:
            if name not in SUITES:
                raise ValueError("unknown suite '{}'; choose one of {}".format(name, ', '.join(SUITES)))
        return [SuiteReport(name=r.name, passed=r.passed, detail=r.detail)
                for r in run_suites(suites, _selftest_config())]
