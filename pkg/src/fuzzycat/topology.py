"""L-valued fuzzy pretopologies and Čech interior operators as value tables.

Both structures are stored the same way: ``table[k, x]`` is ``p_x(f_k)``
(resp. ``i(f_k)(x)``) where ``f_k`` is the ``k``-th function of ``L^X`` in
lexicographic order. Conversion between the two is therefore a relabelling.
"""

from __future__ import annotations

from typing import Callable

import numpy as np

from .errors import InvalidArgument, QuantifierBudgetError
from .fuzzy import DEFAULT_BUDGET, FiniteSet, FunctionSpace, FuzzyRelation, FuzzySet, backward_matrix
from .lattice import Lattice
from .partition import FuzzyPartition, ftransform_matrix
from .report import ValidationReport, timed
from .systems import LowerTransformationSystem, lts_matrix


class _OperatorTable:
    kind = "operator"

    def __init__(self, X: FiniteSet, table, lattice: Lattice):
        space = FunctionSpace(X, lattice)
        T = lattice.check_array(table)
        if T.ndim != 2 or T.shape != (space.size, len(X)):
            raise InvalidArgument(
                f"{self.kind} table on {X.name!r} must have {space.size} rows of "
                f"{len(X)} values (one per f in L^X), got shape {T.shape}"
            )
        T = T.copy()
        T.setflags(write=False)
        self.X, self.lattice, self.table = X, lattice, T
        self.space = space

    @classmethod
    def from_function(cls, X: FiniteSet, lattice: Lattice, fn: Callable, budget: int = DEFAULT_BUDGET):
        """Tabulate ``fn``, which maps an ``N × |X|`` batch of functions to ``N × |X|`` values."""
        F = FunctionSpace(X, lattice).all(budget)
        return cls(X, np.asarray(fn(F), dtype=np.intp), lattice)

    def rows(self, functions: np.ndarray) -> np.ndarray:
        """Table rows for a batch of functions (shape ``N × |X|``)."""
        return self.table[self.space.encode(functions)]

    def __call__(self, f: FuzzySet) -> FuzzySet:
        if f.domain != self.X:
            raise InvalidArgument(f"{self.kind} on {self.X.name!r} applied to a set on {f.domain.name!r}")
        if f.lattice != self.lattice:
            raise InvalidArgument(f"fuzzy set and {self.kind} use different lattices")
        return FuzzySet(self.X, self.rows(f.values[None, :])[0], self.lattice)

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self.X == other.X and self.lattice == other.lattice and np.array_equal(self.table, other.table)

    def __hash__(self):
        return hash((type(self).__name__, self.X, self.table.tobytes()))

    def __repr__(self):
        return f"{type(self).__name__}(X={self.X.name}, |L^X|={self.space.size})"


class Pretopology(_OperatorTable):
    """The family ``{p_x}``; ``table[k, x] = p_x(f_k)``."""

    kind = "pretopology"

    def p(self, x, f: FuzzySet) -> int:
        return int(self(f).values[self.X.index(x)])


class CechInterior(_OperatorTable):
    """A Čech interior operator; ``table[k] = i(f_k)``."""

    kind = "interior"


def _fmt(lat, row):
    return "[" + ", ".join(lat.labels[v] for v in row) + "]"


def _validate(S: _OperatorTable, label: str, budget: int) -> ValidationReport:
    lat, X = S.lattice, S.X.elements
    report = ValidationReport(f"{S.kind} on {S.X.name}")
    if S.space.size > budget:
        raise QuantifierBudgetError(
            f"{S.kind} table has {S.space.size} rows, over quantifier budget {budget}"
        )
    with timed(report):
        F = S.space.all(S.space.size)
        T = S.table
        m = len(X)

        consts = np.repeat(np.arange(lat.size)[:, None], m, axis=1)
        bad = np.argwhere(S.rows(consts) != consts)
        report.add(
            "(i) constants preserved",
            not len(bad),
            {"a": lat.labels[bad[0][0]], "x": X[bad[0][1]]} if len(bad) else None,
        )

        bad = np.argwhere(~lat.leq[T, F])
        report.add(
            f"(ii) {label} <= f",
            not len(bad),
            {"f": _fmt(lat, F[bad[0][0]]), "x": X[bad[0][1]]} if len(bad) else None,
        )

        witness = None
        for k in range(len(F)):
            lhs = S.rows(lat.meet[F[k][None, :], F])
            bad = np.argwhere(lhs != lat.meet[T[k][None, :], T])
            if len(bad):
                witness = {"f": _fmt(lat, F[k]), "g": _fmt(lat, F[bad[0][0]]), "x": X[bad[0][1]]}
                break
        report.add("(iii) binary meets preserved", witness is None, witness)
    return report


def validate_pretopology(S: Pretopology, budget: int = DEFAULT_BUDGET) -> ValidationReport:
    return _validate(S, "p_x(f)", budget)


def validate_interior(I: CechInterior, budget: int = DEFAULT_BUDGET) -> ValidationReport:
    return _validate(I, "i(f)", budget)


def interior_from_pretopology(S: Pretopology) -> CechInterior:
    """``i(f)(x) = p_x(f)``."""
    return CechInterior(S.X, S.table, S.lattice)


def pretopology_from_interior(I: CechInterior) -> Pretopology:
    """``p_x(f) = i(f)(x)``."""
    return Pretopology(I.X, I.table, I.lattice)


def pretopology_from_partition(P: FuzzyPartition, budget: int = DEFAULT_BUDGET) -> Pretopology:
    """``p_x(f) = ⋀_{x'} ¬A_{ξ(x)}(x') # f(x')``, evaluated from the blocks."""
    P.require_valid()
    F = FunctionSpace(P.X, P.lattice).all(budget)
    # row x of membership[xi] is the block whose core holds x
    return Pretopology(P.X, backward_matrix(P.lattice, P.membership[P.xi], F), P.lattice)


def interior_from_partition(P: FuzzyPartition, budget: int = DEFAULT_BUDGET) -> CechInterior:
    """``i(f)(x) = F↓[f](ξ(x))``, evaluated through the F-transform."""
    P.require_valid()
    F = FunctionSpace(P.X, P.lattice).all(budget)
    return CechInterior(P.X, ftransform_matrix(P, F)[:, P.xi], P.lattice)


def pretopology_from_lts(H: LowerTransformationSystem, budget: int = DEFAULT_BUDGET) -> Pretopology:
    """``p_x(f) = H(f)(v(x))``."""
    F = FunctionSpace(H.X, H.lattice).all(budget)
    return Pretopology(H.X, lts_matrix(H, F)[:, H.v], H.lattice)


def interior_from_lts(H: LowerTransformationSystem, budget: int = DEFAULT_BUDGET) -> CechInterior:
    """``i(f)(x) = H(f)(v(x))``."""
    F = FunctionSpace(H.X, H.lattice).all(budget)
    return CechInterior(H.X, lts_matrix(H, F)[:, H.v], H.lattice)


def identity_interior(X: FiniteSet, lattice: Lattice, budget: int = DEFAULT_BUDGET) -> CechInterior:
    return CechInterior.from_function(X, lattice, lambda F: F, budget)


def indiscrete_interior(X: FiniteSet, lattice: Lattice, budget: int = DEFAULT_BUDGET) -> CechInterior:
    """``i(f) = constant ⋀_x f(x)``."""

    def fn(F):
        low = lattice.meet_reduce(F, axis=1)
        return np.repeat(low[:, None], F.shape[1], axis=1)

    return CechInterior.from_function(X, lattice, fn, budget)


def coatom_matrix(S: _OperatorTable) -> np.ndarray:
    """``M[x, x'] = ¬p_x(¬1_{x'})``."""
    lat, m = S.lattice, len(S.X)
    coatoms = np.where(np.eye(m, dtype=bool), lat.bottom, lat.top).reshape(m, m)
    # rows(coatoms)[x', x] = p_x(¬1_{x'})
    return lat.neg[S.rows(coatoms)].T


def qua_relation_from_pretopology(S: Pretopology) -> FuzzyRelation:
    return FuzzyRelation(S.X, S.X, coatom_matrix(S), S.lattice)


def is_kernel_determined(S: _OperatorTable) -> bool:
    """True when ``p_x(f) = ⋀_{x'} ¬M(x, x') # f(x')`` for every ``f``.

    This is the case exactly for the operators that also preserve ``a # -``;
    all partition-induced operators are of this kind.
    """
    F = S.space.all(S.space.size)
    return bool(np.array_equal(backward_matrix(S.lattice, coatom_matrix(S), F), S.table))
