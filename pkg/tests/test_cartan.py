import numpy as np
import pytest
from hypothesis import given, strategies as st

from oracles import cartan_from_roots, root_lengths_squared, root_system, simple_roots
from strong_minuscule.cartan import (
    InvalidTypeError,
    TypeLabel,
    Weight,
    adjacency,
    build_datum,
    group_order,
    is_minuscule_weight,
)
from strong_minuscule.weyl import walk_orbit

ALL_TYPES = ["A1", "A2", "A3", "A5", "B2", "B3", "B5", "C2", "C3", "C5", "D3", "D4", "D5", "D6",
             "E6", "E7", "E8", "F4", "G2"]


@pytest.mark.parametrize("label", ALL_TYPES)
def test_cartan_matrix_matches_euclidean_realization(label):
    d = build_datum(label)
    roots = simple_roots(d.label.family, d.rank)
    assert (cartan_from_roots(roots) == d.cartan).all()


@pytest.mark.parametrize("label", ALL_TYPES)
def test_positive_root_count_matches_reflection_closure(label):
    d = build_datum(label)
    closure = root_system(simple_roots(d.label.family, d.rank))
    assert 2 * len(d.positive_roots) == len(closure)


@pytest.mark.parametrize("label", ALL_TYPES)
def test_short_nodes_match_euclidean_lengths(label):
    d = build_datum(label)
    lengths = root_lengths_squared(simple_roots(d.label.family, d.rank))
    shortest = min(lengths)
    assert d.K == frozenset(i + 1 for i, v in enumerate(lengths) if v == shortest)


@pytest.mark.parametrize("label,K", [
    ("A4", {1, 2, 3, 4}), ("B4", {1}), ("C4", {2, 3, 4}), ("D5", {1, 2, 3, 4, 5}),
    ("E6", {1, 2, 3, 4, 5, 6}), ("F4", {3, 4}), ("G2", {1}),
])
def test_short_node_sets(label, K):
    assert build_datum(label).K == frozenset(K)


def test_cartan_entries_and_orientation():
    b3 = build_datum("B3")
    assert b3.a(1, 2) == -2 and b3.a(2, 1) == -1
    c3 = build_datum("C3")
    assert c3.a(1, 2) == -1 and c3.a(2, 1) == -2
    g2 = build_datum("G2")
    assert g2.a(1, 2) == -3 and g2.a(2, 1) == -1
    assert build_datum("F4").a(2, 3) == -1 and build_datum("F4").a(3, 2) == -2


def test_adjacency_split_by_length():
    b3 = build_datum("B3")
    short, long = adjacency(b3, 1)
    assert short == frozenset() and long == frozenset({2})
    assert adjacency(b3, 2) == (frozenset({1, 3}), frozenset())
    assert adjacency(build_datum("G2"), 1) == (frozenset(), frozenset({2}))
    d4 = build_datum("D4")
    assert adjacency(d4, 3) == (frozenset({1, 2, 4}), frozenset())


def test_positive_roots_sorted_and_contain_simple_roots():
    d = build_datum("F4")
    heights = d.positive_roots.sum(axis=1)
    assert (np.diff(heights) >= 0).all()
    assert {tuple(r) for r in d.positive_roots[:4]} == {tuple(r) for r in np.eye(4, dtype=int)}
    assert heights[-1] == 11  # Coxeter number 12


def _orbit_is_minuscule(d, i):
    for level in walk_orbit(d, d.fundamental_weight(i).coords, sort=False):
        if (np.abs(level.weights) > 1).any():
            return False
    return True


@pytest.mark.parametrize("label", ALL_TYPES)
def test_minuscule_weights_against_orbit_criterion(label):
    d = build_datum(label)
    for i in d.nodes:
        assert is_minuscule_weight(d, i) == _orbit_is_minuscule(d, i)


@pytest.mark.parametrize("label,nodes", [
    ("A3", {1, 2, 3}), ("B4", {1}), ("C4", {4}), ("D5", {1, 2, 5}),
    ("E6", {1, 5}), ("E7", {6}), ("E8", set()), ("F4", set()), ("G2", set()),
])
def test_minuscule_nodes(label, nodes):
    d = build_datum(label)
    assert {i for i in d.nodes if is_minuscule_weight(d, i)} == nodes


@pytest.mark.parametrize("label,order", [
    ("A4", 120), ("B3", 48), ("C4", 384), ("D4", 192), ("E6", 51840),
    ("E7", 2903040), ("E8", 696729600), ("F4", 1152), ("G2", 12),
])
def test_group_order(label, order):
    assert group_order(label) == order


@pytest.mark.parametrize("text", ["A0", "B1", "C1", "D2", "E5", "E9", "F3", "G3", "X2", "", "A"])
def test_invalid_labels_rejected(text):
    with pytest.raises(InvalidTypeError):
        TypeLabel.parse(text)


def test_label_parsing_variants():
    assert TypeLabel.parse("d4") == TypeLabel("D", 4)
    assert TypeLabel.parse("E_8") == TypeLabel("E", 8)
    assert str(TypeLabel("A", 5)) == "A5"
    assert build_datum(("B", 3)) is build_datum("B3")


def test_node_checks():
    d = build_datum("A3")
    for bad in (0, 4, -1):
        with pytest.raises(ValueError):
            d.check_node(bad)


def test_simple_root_weight_is_cartan_column():
    d = build_datum("G2")
    assert d.simple_root_weight(1).coords == (2, -1)
    assert d.simple_root_weight(2).coords == (-3, 2)


def test_rho_is_all_ones():
    assert build_datum("E7").rho().coords == (1,) * 7


@given(st.lists(st.integers(-5, 5), min_size=3, max_size=3), st.integers(1, 3))
def test_reflection_is_involution_and_negates_pairing(coords, i):
    d = build_datum("B3")
    w = Weight(tuple(coords))
    r = w.reflect(d, i)
    assert r.reflect(d, i) == w
    assert r.pair(i) == -w.pair(i)


def test_weight_arithmetic():
    u, v = Weight((1, 0, 2)), Weight((0, 1, -1))
    assert (u + v).coords == (1, 1, 1)
    assert (u - v).coords == (1, -1, 3)
    assert (u * 2).coords == (2, 0, 4)
    assert (-u).coords == (-1, 0, -2)
    assert u.is_dominant() and not v.is_dominant()
    assert u.support() == frozenset({1, 3})
