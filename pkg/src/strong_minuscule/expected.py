"""Access to the bundled reference values (``data/expected_values.json``)."""

from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources
from math import comb

from .cartan import TypeLabel

__all__ = ["load", "v_word", "smi_count", "demazure_dimension", "interval_form"]


@lru_cache(maxsize=None)
def load() -> dict:
    text = resources.files(__package__).joinpath("data/expected_values.json").read_text()
    return json.loads(text)


def _eval(expr: str, n: int, i: int):
    # expressions come from the bundled data file only
    return eval(expr, {"__builtins__": {}}, {"comb": comb, "n": n, "i": i})


def _rule(table: str, label: TypeLabel, i: int) -> dict | None:
    rules = load()[table]
    key = str(label) if str(label) in rules else label.family
    for rule in rules.get(key, ()):
        if _eval(rule["when"], label.rank, i):
            return rule
    return None


def v_word(label: TypeLabel, i: int) -> tuple[int, ...] | None:
    words = load()["v_words"].get(str(label), {})
    word = words.get(str(i))
    return None if word is None else tuple(word)


def smi_count(label: TypeLabel, i: int) -> int | None:
    """Reference #SM_i: the tabulated count or the closed-form formula."""
    table = load()["smi_counts"].get(str(label))
    if table is not None:
        return table.get(str(i))
    rule = _rule("smi_count_formulas", label, i)
    return None if rule is None else int(_eval(rule["count"], label.rank, i))


def demazure_dimension(label: TypeLabel, i: int) -> int | None:
    rule = _rule("demazure_dimensions", label, i)
    return None if rule is None else int(_eval(rule["dim"], label.rank, i))


def interval_form(label: TypeLabel, i: int) -> bool | None:
    """Whether SM_i is [v_i, w_0^J]^J minus its top (True), the full interval
    (False), or has no recorded interval description (None)."""
    rule = _rule("interval_forms", label, i)
    return None if rule is None else bool(rule["drop_top"])
