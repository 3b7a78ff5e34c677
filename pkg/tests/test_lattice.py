import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from fuzzycat.errors import ConstructionError, InvalidArgument
from fuzzycat.lattice import (
    Lattice,
    fold_join,
    fold_meet,
    make_lukasiewicz_chain,
    product_lattice,
    validate_lattice,
)

L5 = make_lukasiewicz_chain(4)
elems = st.integers(0, L5.size - 1)


def mutated(lat, table, a, b, value):
    tabs = {k: np.array(getattr(lat, k)) for k in ("leq", "meet", "join", "star", "hash", "neg")}
    tabs[table][a, b] = value
    return Lattice(lat.labels, tabs["leq"], tabs["meet"], tabs["join"], tabs["star"], tabs["hash"], tabs["neg"])


def test_chain_carriers():
    assert make_lukasiewicz_chain(1).labels == ("0", "1")
    assert make_lukasiewicz_chain(2).labels == ("0", "1/2", "1")
    assert L5.labels == ("0", "1/4", "1/2", "3/4", "1")
    assert (L5.bottom, L5.top) == (0, 4)


def test_lukasiewicz_values():
    # a * b = max(0, a + b - 1), a # b = min(1, a + b), neg a = 1 - a, worked by hand
    e = L5.element
    assert L5.star[e("1/2"), e("3/4")] == e("1/4")
    assert L5.star[e("1/4"), e("1/2")] == e("0")
    assert L5.hash[e("1/2"), e("3/4")] == e("1")
    assert L5.hash[e("1/4"), e("1/2")] == e("3/4")
    assert L5.neg[e("1/4")] == e("3/4")
    assert L5.meet[e("1/4"), e("3/4")] == e("1/4")
    assert L5.join[e("1/4"), e("3/4")] == e("3/4")


def test_element_parsing():
    assert L5.element("0.5") == L5.element("1/2") == L5.element(2)
    assert L5.element(" 3/4 ") == 3
    with pytest.raises(InvalidArgument):
        L5.element("1/3")
    with pytest.raises(InvalidArgument):
        L5.element(7)


@pytest.mark.parametrize("n", [1, 2, 4])
def test_chains_satisfy_every_law(n):
    report = validate_lattice(make_lukasiewicz_chain(n))
    assert report.passed, str(report)
    assert report.exhaustive


def test_product_lattice_is_valid_and_not_a_chain():
    P = product_lattice(make_lukasiewicz_chain(1), make_lukasiewicz_chain(2))
    assert P.size == 6
    assert not P.is_chain
    assert validate_lattice(P).passed


@pytest.mark.parametrize(
    "table,a,b,value",
    [("star", 2, 3, 2), ("hash", 1, 1, 1), ("star", 4, 1, 0), ("hash", 0, 0, 1)],
)
def test_broken_cell_is_flagged_with_witness(table, a, b, value):
    report = validate_lattice(mutated(L5, table, a, b, value))
    assert not report.passed
    for check in report.failures:
        assert check.witness


def test_broken_negation_is_flagged():
    neg = np.array(L5.neg)
    neg[1] = 2
    bad = Lattice(L5.labels, L5.leq, L5.meet, L5.join, L5.star, L5.hash, neg)
    report = validate_lattice(bad)
    assert not report.get("neg involutive").passed


def test_non_lattice_order_is_refused():
    # two incomparable maximal elements: no join
    leq = np.array([[1, 1, 1], [0, 1, 0], [0, 0, 1]], dtype=bool)
    z = np.zeros((3, 3), dtype=int)
    with pytest.raises(ConstructionError):
        Lattice.from_order(["0", "a", "b"], leq, z, z, [0, 0, 0])


def test_folds_of_empty_families():
    assert fold_meet(L5, []) == L5.top
    assert fold_join(L5, []) == L5.bottom
    assert fold_meet(L5, [3, 1, 2]) == 1


@given(elems, elems, elems)
def test_star_is_a_commutative_monoid(a, b, c):
    s = L5.star
    assert s[a, b] == s[b, a]
    assert s[s[a, b], c] == s[a, s[b, c]]
    assert s[a, L5.top] == a


@given(elems, elems)
def test_de_morgan_and_bounds(a, b):
    n = L5.neg
    assert n[L5.star[a, b]] == L5.hash[n[a], n[b]]
    assert n[L5.meet[a, b]] == L5.join[n[a], n[b]]
    assert L5.leq[L5.star[a, b], L5.meet[a, b]]
    assert L5.leq[L5.join[a, b], L5.hash[a, b]]


@given(st.lists(elems, max_size=6))
def test_reduce_agrees_with_fold(values):
    arr = np.array(values, dtype=np.intp)
    assert L5.meet_reduce(arr) == fold_meet(L5, values)
    assert L5.join_reduce(arr) == fold_join(L5, values)
