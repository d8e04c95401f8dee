"""Acceptance gate. Each criterion prints one ``ACCEPTANCE n ...: PASS|FAIL`` line.

Reference values are written out literally here rather than read from the
bundled data file, so the data file is itself under test.

Two criteria contain cells whose reference values disagree with independent
computation: the quotient interval, the strong-element sweep and the Demazure
character formula all give one less. Those cells keep their exact
assertions in separate ``xfail(strict=True)`` tests, and the criterion line
reports FAIL.
"""

import json
import random
from functools import lru_cache
from math import comb

import pytest

from oracles import braid_moves, demazure_character
from strong_minuscule.bruhat import bar_involution, bruhat_leq, demazure_dim, smi_as_interval
from strong_minuscule.cartan import build_datum, group_order
from strong_minuscule.checks import (
    check_bar_involution,
    check_length_criterion,
    check_quotient_parametrization,
)
from strong_minuscule.cli import main
from strong_minuscule.minuscule import (
    Status,
    classify,
    parity_profile,
    solve_word,
    stembridge_violations,
    strong_by_weight,
)
from strong_minuscule.stumbo import (
    count_smi,
    enumerate_quotient_stumbo,
    enumerate_smi,
    sequence_word,
    v_element,
)
from strong_minuscule.weyl import (
    ParabolicContext,
    ReducedWord,
    evaluate,
    quotient_representatives,
    w0J,
)


def report(capsys, n, title, failures, note=""):
    verdict = "PASS" if not failures else "FAIL"
    line = f"ACCEPTANCE {n} ({title}): {verdict}"
    if failures:
        shown = ", ".join(str(f) for f in failures[:8])
        more = f" (+{len(failures) - 8} more)" if len(failures) > 8 else ""
        line += f" [{len(failures)} cell(s): {shown}{more}]"
    if note:
        line += f" {note}"
    with capsys.disabled():
        print("\n" + line)


def labels(family, lo, hi):
    return [f"{family}{n}" for n in range(lo, hi + 1)]


# ---------------------------------------------------------------- 1

TABLE = {
    "E6": [16, 4, 1, 4, 16, 12],
    "E7": [35, 5, 1, 5, 11, 43, 20],
    "E8": [71, 6, 1, 6, 16, 27, 105, 30],
    "F4": [1, 6],
    "G2": [1],
}


def test_acceptance_1_exceptional_table(capsys):
    assert main(["table2", "--format", "json"]) in (0, 1)
    rows = json.loads(capsys.readouterr().out)["rows"]
    got = {}
    for r in rows:
        got.setdefault(r["type"], []).append((r["i"], r["count"]))
    failures = []
    for label, counts in TABLE.items():
        cells = sorted(got.get(label, []))
        assert [i for i, _ in cells] == sorted(build_datum(label).K)
        if [c for _, c in cells] != counts:
            failures.append((label, [c for _, c in cells], counts))
    assert len(rows) == 24
    report(capsys, 1, "exceptional SM_i counts", failures)
    assert not failures


# ---------------------------------------------------------------- 2

def closed_form(family, n, i):
    if family == "A":
        return comb(n - 1, i - 1)
    if family == "B":
        return 2 ** (n - 1)
    if family == "C":
        return n if i == n else comb(n - 1, i - 2)
    if i in (1, 2):
        return 2 ** (n - 2) - 1
    return n - 1 if i == n else comb(n - 2, i - 3)


# D8 has 5,160,960 elements; it is swept with a raised budget
BRUTE = labels("A", 2, 8) + labels("B", 2, 7) + labels("C", 2, 7) + labels("D", 3, 8)
BRUTE_BUDGET = 6 * 10**6


def test_acceptance_2_classical_closed_forms(capsys):
    failures = []
    for label in labels("A", 2, 8) + labels("B", 2, 8) + labels("C", 2, 8) + labels("D", 3, 8):
        d = build_datum(label)
        want = {i: closed_form(d.label.family, d.rank, i) for i in sorted(d.K)}
        got = {i: count_smi(d, i) for i in want}
        if got != want:
            failures.append((label, "stream", got))
        if label in BRUTE:
            swept = strong_by_weight(d, budget=BRUTE_BUDGET)
            sizes = {i: len(swept.get(i, ())) for i in want}
            if sizes != want or not set(swept) <= set(want):
                failures.append((label, "sweep", sizes))
    report(capsys, 2, "classical closed forms", failures)
    assert not failures


# ---------------------------------------------------------------- 3

SMALL = (labels("A", 1, 7) + labels("B", 2, 6) + labels("C", 2, 6) + labels("D", 3, 6)
         + ["E6", "F4", "G2"])


def test_acceptance_3_length_criterion(capsys):
    failures = []
    for label in SMALL:
        d = build_datum(label)
        assert group_order(d.label) <= 10**5
        res = check_length_criterion(d, budget=10**5)
        assert not res.skipped
        if not res.ok:
            failures.append((label, res.violations[:3]))
    report(capsys, 3, "strong iff minuscule with length drop n", failures)
    assert not failures


# ---------------------------------------------------------------- 4

INTERVAL_CELLS = ([(f"A{n}", i) for n in range(2, 7) for i in range(1, n + 1)]
                  + [(f"B{n}", 1) for n in range(2, 7)]
                  + [(f"C{n}", n) for n in range(2, 7)]
                  + [(f"D{n}", i) for n in range(4, 7) for i in (1, 2, n)]
                  + [("E6", 1), ("E6", 5), ("E7", 6)])

# reference asserts SM_n = interval minus its top; the top is itself strong
LAST_NODE_CELLS = [(lab, i) for lab, i in INTERVAL_CELLS if lab[0] in "CD" and i == int(lab[1:])]


@lru_cache(maxsize=None)
def interval_verdict(label, i):
    return smi_as_interval(build_datum(label), i)


def interval_cell_ok(label, i):
    d = build_datum(label)
    v = interval_verdict(label, i)
    drop = label[0] in "CD" and i == d.rank
    if not v.characterized or v.drop_top != drop:
        return False
    ctx = ParabolicContext(d, i)
    top = w0J(ctx)
    # independent recomputation: quotient filtered by two Bruhat comparisons
    upper = {w for w in quotient_representatives(ctx)
             if bruhat_leq(v_element(d, i), w) and bruhat_leq(w, top)}
    if drop:
        upper.discard(top)
    return upper == set(enumerate_smi(d, i)) and v.matches


def test_acceptance_4_intervals(capsys):
    failures = [(lab, i) for lab, i in INTERVAL_CELLS if not interval_cell_ok(lab, i)]
    unexpected = [c for c in failures if c not in LAST_NODE_CELLS]
    report(capsys, 4, "SM_i as quotient intervals", failures,
           note="(C_n/D_n i=n: SM_n is the whole interval, the top included)"
           if failures else "")
    assert not unexpected


@pytest.mark.xfail(strict=True, reason=(
    "w_0^J is itself strong for C_n and D_n at i=n, so SM_n is the full "
    "interval [v_n, w_0^J]^J and removing the top loses one element"))
@pytest.mark.parametrize("label,i", LAST_NODE_CELLS)
def test_acceptance_4_last_node_top_excluded(label, i):
    assert interval_cell_ok(label, i)


# ---------------------------------------------------------------- 5

DEMAZURE_CELLS = ([(f"A{n}", i, comb(n - 1, i - 1)) for n in range(2, 8) for i in range(1, n + 1)]
                  + [(f"B{n}", 1, 2 ** (n - 1)) for n in range(2, 7)]
                  + [(f"C{n}", n, n + 1) for n in range(3, 7)]
                  + [(f"D{n}", i, 2 ** (n - 2) - 1) for n in range(4, 7) for i in (1, 2)]
                  + [(f"D{n}", n, n) for n in range(4, 7)]
                  + [("E6", 1, 16), ("E6", 5, 16), ("E7", 6, 43)])

DEMAZURE_CONTRADICTED = [(lab, i, dim) for lab, i, dim in DEMAZURE_CELLS
                         if lab[0] in "CD" and i == int(lab[1:])]


@lru_cache(maxsize=None)
def demazure_of_bar_v(label, i):
    d = build_datum(label)
    return demazure_dim(d, i, bar_involution(v_element(d, i), ParabolicContext(d, i)))


def test_acceptance_5_demazure_dimensions(capsys):
    failures = [(lab, i, demazure_of_bar_v(lab, i), dim) for lab, i, dim in DEMAZURE_CELLS
                if demazure_of_bar_v(lab, i) != dim]
    unexpected = [f for f in failures if f[:2] not in {c[:2] for c in DEMAZURE_CONTRADICTED}]
    report(capsys, 5, "Demazure dimensions of bar(v_i)", failures,
           note="(computed, reference); C_n/D_n i=n agree with #SM_n and the character formula"
           if failures else "")
    assert not unexpected


@pytest.mark.xfail(strict=True, reason=(
    "the Demazure character formula gives n for C_n and n-1 for D_n at i=n, "
    "equal to #SM_n; the reference values exceed the interval by one"))
@pytest.mark.parametrize("label,i,dim", DEMAZURE_CONTRADICTED)
def test_acceptance_5_last_node_reference_dimension(label, i, dim):
    assert demazure_of_bar_v(label, i) == dim


@pytest.mark.parametrize("label,i", [("C3", 3), ("C4", 4), ("D4", 4), ("D5", 5)])
def test_acceptance_5_last_node_cells_agree_with_character_formula(label, i):
    d = build_datum(label)
    tau = bar_involution(v_element(d, i), ParabolicContext(d, i))
    char = demazure_character(d.cartan, d.fundamental_weight(i).coords, tau.reduced_word().letters)
    assert demazure_of_bar_v(label, i) == sum(char.values()) == count_smi(d, i)


# ---------------------------------------------------------------- 6

def test_acceptance_6_a4_counterexample(capsys):
    d = build_datum("A4")
    ctx = ParabolicContext(d, 3)
    v3 = v_element(d, 3)
    x = evaluate(d, [2]) * v3
    checks = {
        "word": x == evaluate(d, [2, 1, 2, 4, 3]),
        "above v3": bruhat_leq(v3, x),
        "below top": bruhat_leq(x, w0J(ctx)),
        "outside quotient": not ctx.contains(x),
        "not minuscule": classify(x).status is Status.NOT_MINUSCULE,
    }
    failures = [k for k, ok in checks.items() if not ok]
    report(capsys, 6, "s2 v3 in A4", failures)
    assert not failures


# ---------------------------------------------------------------- 7

def word_independence_violations(rng):
    bad = []
    for label in ["A4", "B4", "C4", "D5", "E6", "F4", "G2"]:
        d = build_datum(label)
        for _ in range(40):
            letters = [rng.randint(1, d.rank) for _ in range(rng.randint(0, 16))]
            base = evaluate(d, letters).reduced_word()
            ref = solve_word(base)
            for moved in braid_moves(d.cartan, base.letters):
                other = solve_word(ReducedWord(d, moved, _checked=True))
                if other.classification() != ref.classification() or (
                        ref.consistent and other != ref):
                    bad.append((label, base.letters, moved))
    return bad


SWEPT = labels("A", 2, 5) + labels("B", 2, 5) + labels("C", 2, 5) + labels("D", 3, 5) + [
    "E6", "F4", "G2"]
ENUMERATED = labels("A", 2, 6) + labels("B", 2, 6) + labels("C", 2, 6) + labels("D", 3, 6) + [
    "E6", "E7", "F4", "G2"]
STUMBO = labels("A", 1, 5) + labels("B", 2, 5) + labels("C", 2, 5) + labels("D", 3, 6)


def test_acceptance_7_property_suites(capsys):
    failures = []
    failures += [("word-independence",) + v for v in word_independence_violations(random.Random(7))]
    for label in SWEPT:
        d = build_datum(label)
        for i, elems in strong_by_weight(d).items():
            if i not in d.K:
                failures.append(("partition", label, i))
            failures += [("support", label, w.reduced_word().letters)
                         for w in elems if w.support() != frozenset(d.nodes)]
    for label in ENUMERATED:
        d = build_datum(label)
        for i in sorted(d.K):
            for w in enumerate_smi(d, i):
                word = w.reduced_word()
                if stembridge_violations(word):
                    failures.append(("tail", label, word.letters))
                prof = parity_profile(w, word)
                if prof.i != i or not prof.ok:
                    failures.append(("parity", label, word.letters))
    for label in ["A3", "B3", "D4"]:
        res = check_bar_involution(build_datum(label))
        failures += [("bar", label, v) for v in res.violations]
    for label in STUMBO:
        d = build_datum(label)
        res = check_quotient_parametrization(d)
        failures += [("bijection", label, v) for v in res.violations]
        for i in d.nodes:
            for seq, w in enumerate_quotient_stumbo(d, i):
                if w.length != len(sequence_word(d, seq)):
                    failures.append(("additivity", label, i))
    report(capsys, 7, "property suites", failures)
    assert not failures
