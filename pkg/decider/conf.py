# ordered-structures-qe -- decider/conf.py

import os

from django.conf import settings


DEFAULTS = {
    'WITNESS_BUDGET': 100,
    'OUTPUT_FORMAT': 'text',
    'TRACE': False,
    'IDENTITY_BOUND': 25,
    'CRT_MODULUS_BOUND': 12,
    'POWER_ORACLE_HEIGHT': 100,
    'POWER_ORACLE_DEGREE': 6,
    'PROPERTY_INSTANCES': 1000,
    'PROPERTY_SEED': 0,
    'SELFTEST_SEARCH_BUDGET': 12,
    'AXIOM_SCHEME_BOUND': 4,
}

ENVIRONMENT = {
    'WITNESS_BUDGET': ('DECIDER_WITNESS_BUDGET', int),
}


def decider_setting(name):
    """The environment override, else settings.DECIDER[name], else the default."""
    if name not in DEFAULTS:
        raise KeyError("unknown DECIDER setting '{}'".format(name))
    if name in ENVIRONMENT:
        variable, convert = ENVIRONMENT[name]
        if variable in os.environ:
            return convert(os.environ[variable])
    return getattr(settings, 'DECIDER', {}).get(name, DEFAULTS[name])
