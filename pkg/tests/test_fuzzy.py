import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fuzzycat.errors import InvalidArgument, QuantifierBudgetError
from fuzzycat.fixtures import random_relation
from fuzzycat.fuzzy import (
    FunctionSpace,
    FuzzyRelation,
    FuzzySet,
    backward_matrix,
    backward_powerset,
    characteristic,
    coatom,
    compose_inf_hash,
    compose_sup_star,
    constant_set,
    core,
    crisp_identity,
    finite_set,
    hash_identity,
    is_normal,
    pointwise,
)
from fuzzycat.lattice import make_lukasiewicz_chain

L5 = make_lukasiewicz_chain(4)
seeds = st.integers(0, 2**32 - 1)
sizes = st.integers(1, 3)


def test_finite_set_labels():
    X = finite_set("X", 3)
    assert X.elements == ("x1", "x2", "x3")
    assert X.index("x2") == 1
    with pytest.raises(InvalidArgument):
        X.index("x9")


def test_fuzzy_set_helpers():
    X = finite_set("X", 3)
    f = FuzzySet.from_labels(X, ["1", "1/2", "1"], L5)
    assert core(f) == {"x1", "x3"}
    assert is_normal(f)
    assert not is_normal(constant_set(X, L5, 3))
    assert coatom(X, L5, "x2").labels() == ["1", "0", "1"]
    assert characteristic(X, L5, ["x3"]).labels() == ["0", "0", "1"]
    g = FuzzySet.from_labels(X, ["1/4", "3/4", "1/2"], L5)
    assert pointwise("star", f, g).labels() == ["1/4", "1/4", "1/2"]
    assert pointwise("neg", g).labels() == ["3/4", "1/4", "1/2"]


def test_foreign_values_are_refused():
    X = finite_set("X", 2)
    with pytest.raises(InvalidArgument):
        FuzzySet(X, [0, 9], L5)
    with pytest.raises(InvalidArgument):
        FuzzySet(X, [0, 1, 2], L5)


def test_backward_powerset_by_hand():
    # psi<-(f)(a) = meet_b not(psi(a, b) * not f(b))
    A, B = finite_set("A", 1), finite_set("B", 2)
    psi = FuzzyRelation.from_labels(A, B, [["3/4", "1/2"]], L5)
    f = FuzzySet.from_labels(B, ["1/4", "1/2"], L5)
    # b1: not(3/4 * 3/4) = not(1/2) = 1/2 ; b2: not(1/2 * 1/2) = 1
    assert backward_powerset(psi, f).labels() == ["1/2"]


def test_identities_of_the_two_compositions():
    X = finite_set("X", 3)
    R = random_relation(X, X, L5, 1)
    one, zero = crisp_identity(X, L5), hash_identity(X, L5)
    assert compose_sup_star(one, R) == R == compose_sup_star(R, one)
    assert compose_inf_hash(zero, R) == R == compose_inf_hash(R, zero)


def test_composition_rejects_mismatched_axes():
    X, Y = finite_set("X", 2), finite_set("Y", 3)
    with pytest.raises(InvalidArgument):
        compose_sup_star(random_relation(X, Y, L5), random_relation(X, Y, L5))


@settings(max_examples=40, deadline=None)
@given(sizes, sizes, sizes, sizes, seeds)
def test_compositions_are_associative(a, b, c, d, seed):
    rng = np.random.default_rng(seed)
    A, B, C, D = (finite_set(n, k) for n, k in zip("ABCD", (a, b, c, d)))
    R, S, T = random_relation(A, B, L5, rng), random_relation(B, C, L5, rng), random_relation(C, D, L5, rng)
    for op in (compose_sup_star, compose_inf_hash):
        assert op(op(R, S), T) == op(R, op(S, T))


@settings(max_examples=40, deadline=None)
@given(sizes, sizes, sizes, seeds)
def test_backward_powerset_is_contravariant(a, b, c, seed):
    rng = np.random.default_rng(seed)
    X1, X2, X3 = finite_set("X1", a), finite_set("X2", b), finite_set("X3", c)
    psi, psi2 = random_relation(X1, X2, L5, rng), random_relation(X2, X3, L5, rng)
    G = FunctionSpace(X3, L5).all()
    lhs = backward_matrix(L5, compose_sup_star(psi, psi2).entries, G)
    rhs = backward_matrix(L5, psi.entries, backward_matrix(L5, psi2.entries, G))
    assert np.array_equal(lhs, rhs)


@settings(max_examples=30, deadline=None)
@given(sizes, sizes, seeds)
def test_backward_powerset_preserves_meets_and_top(a, b, seed):
    rng = np.random.default_rng(seed)
    X, Y = finite_set("X", a), finite_set("Y", b)
    psi = random_relation(X, Y, L5, rng).entries
    F = FunctionSpace(Y, L5).all()
    f, g = F[rng.integers(len(F))], F[rng.integers(len(F))]
    both = backward_matrix(L5, psi, np.stack([f, g, L5.meet[f, g], np.full(b, L5.top)]))
    assert np.array_equal(both[2], L5.meet[both[0], both[1]])
    assert (both[3] == L5.top).all()


def test_function_space_order_and_codec():
    X = finite_set("X", 3)
    S = FunctionSpace(X, L5)
    F = S.all()
    assert F.shape == (125, 3)
    assert F[0].tolist() == [0, 0, 0] and F[1].tolist() == [0, 0, 1] and F[5].tolist() == [0, 1, 0]
    assert np.array_equal(S.encode(F), np.arange(125))
    assert S.decode(57).tolist() == F[57].tolist()


def test_quantifier_budget():
    S = FunctionSpace(finite_set("X", 3), L5)
    with pytest.raises(QuantifierBudgetError):
        S.quantifier(budget=10)
    F, exhaustive = S.quantifier(budget=10, samples=20, seed=3)
    assert not exhaustive
    assert np.array_equal(F, S.quantifier(budget=10, samples=20, seed=3)[0])
    # landmarks come first: constants then co-atoms
    assert np.array_equal(F[: len(S.landmarks())], S.landmarks())
    F, exhaustive = S.quantifier(budget=125)
    assert exhaustive and len(F) == 125
