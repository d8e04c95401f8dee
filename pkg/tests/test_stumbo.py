from math import comb

import pytest

from strong_minuscule import expected, stumbo
from strong_minuscule.cartan import build_datum
from strong_minuscule.checks import check_quotient_parametrization
from strong_minuscule.minuscule import classify, strong_by_weight
from strong_minuscule.stumbo import (
    CountMismatch,
    LSequence,
    build_wj,
    count_smi,
    enumerate_quotient_stumbo,
    enumerate_smi,
    quotient_sequences,
    smi_sequences,
    v_element,
    v_word,
    vi_catalog,
    w_word,
)
from strong_minuscule.weyl import ParabolicContext, evaluate

CLASSICAL = ([f"A{n}" for n in range(1, 6)] + [f"B{n}" for n in range(2, 6)]
             + [f"C{n}" for n in range(2, 6)] + [f"D{n}" for n in range(3, 7)])


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


def test_fixed_words():
    assert w_word(build_datum("A4"), 3) == (1, 2, 3)
    assert w_word(build_datum("B3"), 2) == (3, 2, 1, 2)
    assert w_word(build_datum("C4"), 1) == (4, 3, 2, 1)
    assert w_word(build_datum("D5"), 1) == (5, 4, 3, 1)
    assert w_word(build_datum("D5"), 4) == (5, 4, 3, 1, 2, 3, 4)


def test_ambiguous_tail_needs_branch():
    d = build_datum("D5")
    with pytest.raises(ValueError):
        build_wj(d, 4, 3)
    assert build_wj(d, 4, 3, branch=1).letters == (1, 3, 4)
    assert build_wj(d, 4, 3, branch=2).letters == (2, 3, 4)
    with pytest.raises(ValueError):
        build_wj(d, 4, 2, branch=1)
    with pytest.raises(ValueError):
        build_wj(d, 4, 99)


def test_exceptional_types_have_no_product_form():
    with pytest.raises(ValueError):
        w_word(build_datum("E6"), 1)
    with pytest.raises(ValueError):
        list(quotient_sequences(build_datum("G2"), 1))


@pytest.mark.parametrize("label", CLASSICAL)
def test_product_form_is_a_bijection_onto_the_quotient(label):
    res = check_quotient_parametrization(build_datum(label))
    assert res.ok, res.violations
    assert res.checked > 0


def test_d_type_branch_tags_are_exercised():
    d = build_datum("D5")
    tagged = [s for s in quotient_sequences(d, 4) if any(b is not None for b in s.branch)]
    assert tagged
    assert {b for s in tagged for b in s.branch if b is not None} == {1, 2}


def test_length_additivity_reported_per_element():
    d = build_datum("C4")
    for seq, w in enumerate_quotient_stumbo(d, 3):
        assert w.length == len(stumbo.sequence_word(d, seq))


@pytest.mark.parametrize("label", CLASSICAL)
def test_closed_form_counts(label):
    d = build_datum(label)
    for i in sorted(d.K):
        assert count_smi(d, i) == closed_form(d.label.family, d.rank, i)


@pytest.mark.parametrize("label,i,count", [("D5", 1, 7), ("C5", 3, 4), ("E7", 6, 43),
                                           ("C3", 3, 3), ("E6", 6, 12), ("G2", 1, 1)])
def test_reference_counts(label, i, count):
    assert count_smi(build_datum(label), i) == count


@pytest.mark.parametrize("label", CLASSICAL)
def test_closed_form_sets_equal_full_sweep(label):
    d = build_datum(label)
    swept = strong_by_weight(d)
    assert set(swept) <= set(d.K)
    for i in sorted(d.K):
        assert set(enumerate_smi(d, i)) == swept.get(i, set())


@pytest.mark.parametrize("label", ["E6", "F4", "G2"])
def test_exceptional_sets_equal_full_sweep(label):
    d = build_datum(label)
    swept = strong_by_weight(d)
    for i in sorted(d.K):
        assert set(enumerate_smi(d, i)) == swept[i]


def test_smi_sequences_reject_long_nodes():
    with pytest.raises(ValueError):
        list(smi_sequences(build_datum("B3"), 2))
    with pytest.raises(ValueError):
        list(enumerate_smi(build_datum("F4"), 1))


def test_count_mismatch_is_fatal(monkeypatch):
    monkeypatch.setattr(expected, "smi_count", lambda label, i: 999)
    with pytest.raises(CountMismatch):
        count_smi(build_datum("A3"), 2)


def test_lsequence_json_round_trip():
    seq = LSequence(3, (2, 3, 1), (1, None, None))
    assert LSequence.from_json(seq.to_json()) == seq
    with pytest.raises(ValueError):
        LSequence(3, (1, 2), (1,))


@pytest.mark.parametrize("label,i,word", [
    ("A4", 2, (4, 3, 1, 2)), ("B4", 1, (4, 3, 2, 1)), ("C4", 4, (1, 2, 3, 4)),
    ("D5", 1, (2, 5, 4, 3, 1)), ("D5", 2, (1, 5, 4, 3, 2)), ("D5", 4, (5, 1, 2, 3, 4)),
    ("E6", 6, (1, 2, 5, 4, 3, 6)), ("E7", 7, (1, 2, 6, 5, 4, 3, 7)),
    ("E8", 8, (1, 2, 7, 6, 5, 4, 3, 8)), ("F4", 3, (1, 2, 4, 3)), ("G2", 1, (2, 1)),
])
def test_v_words(label, i, word):
    assert v_word(build_datum(label), i) == word


@pytest.mark.parametrize("label", CLASSICAL + ["E6", "E7", "E8", "F4", "G2"])
def test_v_elements_are_strong_of_length_rank(label):
    d = build_datum(label)
    for i, word in vi_catalog(d).items():
        w = word.element()
        assert w.length == d.rank
        c = classify(w)
        assert c.is_strong and c.node() == i
        assert ParabolicContext(d, i).contains(w)


def test_v_element_matches_word():
    d = build_datum("C3")
    assert v_element(d, 2) == evaluate(d, v_word(d, 2))
