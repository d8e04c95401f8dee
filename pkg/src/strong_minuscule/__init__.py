"""Strong minuscule elements of finite Weyl groups.

Root data and Weyl group arithmetic, the strong minuscule classification,
product parametrizations of parabolic quotients, Bruhat intervals and
Demazure-module dimensions for minuscule fundamental weights.
"""

from .bruhat import (
    IntervalQuery,
    bar_involution,
    bruhat_leq,
    demazure_dim,
    demazure_report,
    interval,
    smi_as_interval,
)
from .cartan import CartanDatum, TypeLabel, Weight, build_datum, is_minuscule_weight
from .minuscule import Classification, Status, brute_force_strong_set, classify
from .stumbo import LSequence, count_smi, enumerate_smi, v_element
from .weyl import (
    ParabolicContext,
    ReducedWord,
    WeylElement,
    enumerate_group,
    evaluate,
    quotient_representatives,
)

__version__ = "0.1.0"

__all__ = [
    "CartanDatum",
    "TypeLabel",
    "Weight",
    "build_datum",
    "is_minuscule_weight",
    "WeylElement",
    "ReducedWord",
    "ParabolicContext",
    "evaluate",
    "enumerate_group",
    "quotient_representatives",
    "Status",
    "Classification",
    "classify",
    "brute_force_strong_set",
    "LSequence",
    "enumerate_smi",
    "count_smi",
    "v_element",
    "IntervalQuery",
    "bruhat_leq",
    "interval",
    "bar_involution",
    "smi_as_interval",
    "demazure_dim",
    "demazure_report",
]
