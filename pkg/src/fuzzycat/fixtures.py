"""Seeded generators of valid objects and morphisms, plus named example structures."""

from __future__ import annotations

import itertools

import numpy as np

from .category import (
    Category,
    CrispMorphism,
    FiniteMap,
    MorphismPair,
    check_crisp_morphism,
    underlying_sets,
)
from .fuzzy import DEFAULT_BUDGET, FiniteSet, FunctionSpace, FuzzyRelation, backward_matrix, finite_set
from .lattice import Lattice
from .partition import FuzzyPartition, make_partition
from .systems import lts_matrix
from .topology import Pretopology


def _rng(seed):
    return seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)


def random_partition(X: FiniteSet, J: FiniteSet, lattice: Lattice, seed=0, crisp: bool = False) -> FuzzyPartition:
    """A uniformly messy valid partition: random onto ``ξ``, random non-1 values off the cores."""
    if not 1 <= len(J) <= len(X):
        raise ValueError("need 1 <= |J| <= |X|")
    rng = _rng(seed)
    xi = np.concatenate([rng.permutation(len(J)), rng.integers(0, len(J), len(X) - len(J))])
    xi = xi[rng.permutation(len(X))]
    non_top = np.array([a for a in range(lattice.size) if a != lattice.top])
    if crisp:
        A = np.full((len(J), len(X)), lattice.bottom)
    else:
        A = rng.choice(non_top, size=(len(J), len(X)))
    A[xi, np.arange(len(X))] = lattice.top
    return FuzzyPartition(X, J, A, xi, lattice).require_valid()


def one_block_partition(X: FiniteSet, lattice: Lattice, name: str = "J1") -> FuzzyPartition:
    J = finite_set(name, 1)
    return make_partition(X, J, np.full((1, len(X)), lattice.top), lattice)


def singleton_partition(X: FiniteSet, lattice: Lattice, name: str | None = None, fuzzy_seed=None) -> FuzzyPartition:
    """``|J| = |X|`` with ``A_j`` the characteristic function of ``{x_j}`` (or random off-diagonal values)."""
    J = finite_set(name or f"J{X.name}", [f"j{x}" for x in X.elements])
    eye = np.eye(len(X), dtype=bool)
    if fuzzy_seed is None:
        A = np.where(eye, lattice.top, lattice.bottom)
    else:
        rng = _rng(fuzzy_seed)
        non_top = [a for a in range(lattice.size) if a != lattice.top]
        A = np.where(eye, lattice.top, rng.choice(non_top, size=eye.shape))
    return make_partition(X, J, A, lattice)


def random_relation(A: FiniteSet, B: FiniteSet, lattice: Lattice, seed=0, p_bottom: float = 0.4) -> FuzzyRelation:
    """Random entries, with extra mass on 0 so images are not all saturated."""
    rng = _rng(seed)
    E = rng.integers(0, lattice.size, size=(len(A), len(B)))
    E[rng.random(E.shape) < p_bottom] = lattice.bottom
    return FuzzyRelation(A, B, E, lattice)


def random_map(A: FiniteSet, B: FiniteSet, seed=0) -> FiniteMap:
    rng = _rng(seed)
    return FiniteMap(A, B, tuple(int(i) for i in rng.integers(0, len(B), len(A))))


# --- backward entries compatible with a given forward relation -----------


def allowed_backward(source, target, category, forward: FuzzyRelation, budget=DEFAULT_BUDGET) -> np.ndarray:
    """Boolean ``(b2, b1, value)``: may ``backward[b2, b1] = value`` for this forward relation?

    Every morphism condition is a conjunction over entries of the backward
    relation and is monotone in each entry, so entries can be chosen
    independently and the top element is always allowed.
    """
    lat = forward.lattice
    values = np.arange(lat.size)
    category = Category(category)
    if category in (Category.QUA, Category.LSPACEFP):
        if category == Category.QUA:
            M1, M2 = source.success.entries, target.success.entries
        else:
            M1, M2 = source.membership, target.membership
        phi = forward.entries
        # lhs[q1, a1, a2] = phi(a1,a2) * M1(q1,a1); rhs[v, q2, a2] = v # M2(q2,a2)
        lhs = lat.star[phi[None, :, :], M1[:, :, None]]
        rhs = lat.hash[values[:, None, None], M2[None, :, :]]
        ok = lat.leq[lhs[None, None, :, :, :], rhs[:, :, None, None, :]]  # (v, q2, q1, a1, a2)
        return ok.all(axis=(3, 4)).transpose(1, 2, 0)
    if category == Category.LFTRANS:
        F, _ = FunctionSpace(target.X, lat).quantifier(budget)
        out2 = lts_matrix(target, F)
        out1 = lts_matrix(source, backward_matrix(lat, forward.entries, F))
    else:
        F, _ = target.space.quantifier(budget)
        out2 = target.rows(F)
        out1 = source.rows(backward_matrix(lat, forward.entries, F))
    lhs = lat.star[lat.neg[values][:, None, None], out2[None, :, :]]  # (v, f, b2)
    ok = lat.leq[lhs[:, :, :, None], out1[None, :, None, :]]  # (v, f, b2, b1)
    return ok.all(axis=1).transpose(1, 2, 0)


def random_morphism(source, target, category, seed=0, forward: FuzzyRelation | None = None, budget=DEFAULT_BUDGET):
    """A valid morphism: random (or given) forward relation, backward entries drawn from the allowed ones."""
    rng = _rng(seed)
    category = Category(category)
    first1, second1 = underlying_sets(source)
    first2, second2 = underlying_sets(target)
    lat = source.lattice
    if forward is None:
        forward = random_relation(first1, first2, lat, rng)
    ok = allowed_backward(source, target, category, forward, budget)
    B = np.empty(ok.shape[:2], dtype=np.intp)
    for idx in np.ndindex(*B.shape):
        B[idx] = rng.choice(np.flatnonzero(ok[idx]))
    return MorphismPair(forward, FuzzyRelation(second2, second1, B, lat), category, source, target)


def least_backward(source, target, category, forward: FuzzyRelation, budget=DEFAULT_BUDGET):
    """The pointwise least valid backward relation, when the lattice is a chain."""
    ok = allowed_backward(source, target, category, forward, budget)
    first2, second2 = underlying_sets(target)
    _, second1 = underlying_sets(source)
    return FuzzyRelation(second2, second1, ok.argmax(axis=2), forward.lattice)


# --- crisp morphisms --------------------------------------------------------


def all_maps(A: FiniteSet, B: FiniteSet):
    for image in itertools.product(range(len(B)), repeat=len(A)):
        yield FiniteMap(A, B, image)


def crisp_morphisms(source, target, category, budget=DEFAULT_BUDGET, limit: int | None = None):
    """Every valid crisp morphism ``source -> target``, by enumeration and filtering."""
    category = Category(category)
    first1, second1 = underlying_sets(source)
    first2, second2 = underlying_sets(target)
    two = category in (Category.SPACEFP, Category.FTRANS)
    backs = list(all_maps(second1, second2)) if two else [None]
    out = []
    for fwd in all_maps(first1, first2):
        for back in backs:
            c = CrispMorphism(fwd, back, category, source, target)
            if check_crisp_morphism(c, budget=budget).passed:
                out.append(c)
                if limit and len(out) >= limit:
                    return out
    return out


# --- named examples ---------------------------------------------------------


def threshold_pretopology(lattice: Lattice, X: FiniteSet | None = None) -> Pretopology:
    """A pretopology on two points that is not kernel-determined.

    ``p_{x1}(f) = f(x1) ∧ h(f(x2))`` with ``h(0) = 0`` and ``h(a) = 1``
    otherwise; ``p_{x2}(f) = f(x2)``. It needs ``|L| >= 3``.
    """
    if lattice.size < 3:
        raise ValueError("needs a lattice with at least three elements")
    X = X or finite_set("X", 2)
    if len(X) != 2:
        raise ValueError("defined on a two-point set")
    h = np.where(np.arange(lattice.size) == lattice.bottom, lattice.bottom, lattice.top)

    def fn(F):
        return np.stack([lattice.meet[F[:, 0], h[F[:, 1]]], F[:, 1]], axis=1)

    return Pretopology.from_function(X, lattice, fn)


def partition_fixture(lattice: Lattice) -> FuzzyPartition:
    """``X = {x1, x2, x3}``, ``A_j1 = [1, 1, 1/4]``, ``A_j2 = [1/4, 0, 1]`` on the five-element chain."""
    X, J = finite_set("X", 3), finite_set("J", 2)
    q = lattice.element("1/4")
    return make_partition(X, J, [[lattice.top, lattice.top, q], [q, lattice.bottom, lattice.top]], lattice)
