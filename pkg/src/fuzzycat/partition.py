"""L-valued fuzzy partitions and the direct lower F-transform."""

from __future__ import annotations

import numpy as np

from .errors import ConstructionError, InvalidArgument
from .fuzzy import (
    DEFAULT_BUDGET,
    FiniteSet,
    FunctionSpace,
    FuzzyRelation,
    FuzzySet,
    backward_matrix,
)
from .lattice import Lattice
from .report import ValidationReport, timed

UNASSIGNED = -1


class FuzzyPartition:
    """Blocks ``A_j`` (rows of ``membership``, shape ``|J| × |X|``) and index map ``xi``.

    ``xi[x]`` is the index in ``J`` of the block whose core holds ``x``, or
    ``UNASSIGNED``. The constructor checks shapes only; use
    :func:`make_partition` for a validated instance.
    """

    def __init__(self, X: FiniteSet, J: FiniteSet, membership, xi, lattice: Lattice):
        A = lattice.check_array(membership)
        if A.size == 0:
            A = A.reshape(len(J), len(X))
        if A.shape != (len(J), len(X)):
            raise InvalidArgument(f"membership must be {len(J)}x{len(X)}, got {A.shape}")
        xi = np.asarray(xi, dtype=np.intp).reshape(-1)
        if xi.shape != (len(X),):
            raise InvalidArgument(f"xi needs {len(X)} entries, got {xi.shape[0]}")
        if ((xi < UNASSIGNED) | (xi >= len(J))).any():
            raise InvalidArgument("xi has entries outside J")
        A = A.copy()
        xi = xi.copy()
        A.setflags(write=False)
        xi.setflags(write=False)
        self.X, self.J, self.lattice = X, J, lattice
        self.membership, self.xi = A, xi
        self._valid = None

    @classmethod
    def from_membership(cls, X, J, membership, lattice) -> FuzzyPartition:
        """Derive ``xi`` from the cores; ambiguous or uncovered points get ``UNASSIGNED``."""
        A = lattice.check_array(membership).reshape(len(J), len(X))
        is_top = A == lattice.top
        xi = np.where(is_top.sum(axis=0) == 1, is_top.argmax(axis=0), UNASSIGNED)
        return cls(X, J, A, xi, lattice)

    def block(self, j) -> FuzzySet:
        return FuzzySet(self.X, self.membership[self.J.index(j)], self.lattice)

    def relation(self) -> FuzzyRelation:
        """The membership matrix as a relation ``J × X``."""
        return FuzzyRelation(self.J, self.X, self.membership, self.lattice)

    @property
    def is_valid(self) -> bool:
        if self._valid is None:
            self._valid = validate_partition(self).passed
        return self._valid

    def require_valid(self):
        if not self.is_valid:
            bad = validate_partition(self).failures[0]
            raise InvalidArgument(f"not a valid fuzzy partition: {bad.name} {bad.witness}")
        return self

    def __eq__(self, other):
        if not isinstance(other, FuzzyPartition):
            return NotImplemented
        return (
            self.X == other.X
            and self.J == other.J
            and self.lattice == other.lattice
            and np.array_equal(self.membership, other.membership)
            and np.array_equal(self.xi, other.xi)
        )

    def __hash__(self):
        return hash((self.X, self.J, self.membership.tobytes(), self.xi.tobytes()))

    def __repr__(self):
        rows = {self.J.elements[j]: [self.lattice.labels[v] for v in r] for j, r in enumerate(self.membership)}
        return f"FuzzyPartition(X={self.X.name}, blocks={rows})"


def make_partition(X, J, membership, lattice) -> FuzzyPartition:
    """Build a partition with derived ``xi``, raising if the cores do not partition ``X``."""
    P = FuzzyPartition.from_membership(X, J, membership, lattice)
    report = validate_partition(P)
    if not report.passed:
        bad = report.failures[0]
        raise ConstructionError(f"not a fuzzy partition: {bad.name} {bad.witness}")
    return P


def validate_partition(P: FuzzyPartition) -> ValidationReport:
    report = ValidationReport(f"partition of {P.X.name} by {P.J.name}")
    with timed(report):
        top = P.lattice.top
        is_top = P.membership == top
        X, J = P.X.elements, P.J.elements

        empty = np.flatnonzero(~is_top.any(axis=1))
        report.add("blocks normal", not len(empty), {"j": J[empty[0]]} if len(empty) else None)

        counts = is_top.sum(axis=0)
        over = np.flatnonzero(counts > 1)
        witness = None
        if len(over):
            js = np.flatnonzero(is_top[:, over[0]])
            witness = {"x": X[over[0]], "j1": J[js[0]], "j2": J[js[1]]}
        report.add("cores disjoint", not len(over), witness)

        under = np.flatnonzero(counts == 0)
        report.add("cores cover X", not len(under), {"x": X[under[0]]} if len(under) else None)

        bad = None
        for x in range(len(X)):
            j = P.xi[x]
            if j == UNASSIGNED or not is_top[j, x] or counts[x] != 1:
                bad = {"x": X[x], "xi": None if j == UNASSIGNED else J[j]}
                break
        report.add("xi picks the core containing x", bad is None, bad)

        hit = np.zeros(len(J), dtype=bool)
        hit[P.xi[P.xi != UNASSIGNED]] = True
        missing = np.flatnonzero(~hit)
        report.add("xi onto J", not len(missing), {"j": J[missing[0]]} if len(missing) else None)
    return report


def ftransform_matrix(P: FuzzyPartition, functions: np.ndarray) -> np.ndarray:
    """``N × |J|`` array of ``F↓_j[f] = ⋀_x ¬A_j(x) # f(x)`` for each row ``f``."""
    return backward_matrix(P.lattice, P.membership, functions)


def lower_ftransform(P: FuzzyPartition, f: FuzzySet) -> FuzzySet:
    P.require_valid()
    if f.domain != P.X:
        raise InvalidArgument(f"F-transform on {P.X.name!r} got a set on {f.domain.name!r}")
    if f.lattice != P.lattice:
        raise InvalidArgument("fuzzy set and partition use different lattices")
    return FuzzySet(P.J, ftransform_matrix(P, f.values[None, :])[0], P.lattice)


def _fmt(lat, row):
    return "[" + ", ".join(lat.labels[v] for v in row) + "]"


def check_ftransform_properties(
    P: FuzzyPartition, budget: int = DEFAULT_BUDGET, samples=None, seed: int = 0
) -> ValidationReport:
    """Constants, core bound, #-homogeneity and meet preservation of F↓."""
    P.require_valid()
    lat = P.lattice
    F, exhaustive = FunctionSpace(P.X, lat).quantifier(budget, samples, seed)
    report = ValidationReport(f"F-transform properties on {P.X.name}")
    with timed(report):
        T = ftransform_matrix(P, F)
        n, m = lat.size, len(P.X)
        J = P.J.elements

        consts = np.repeat(np.arange(n)[:, None], m, axis=1)
        Tc = ftransform_matrix(P, consts)
        bad = np.argwhere(Tc != np.arange(n)[:, None])
        report.add(
            "(i) constants preserved",
            not len(bad),
            {"a": lat.labels[bad[0][0]], "j": J[bad[0][1]]} if len(bad) else None,
        )

        # (ii): T[f, xi(x)] <= f(x) for each x (x lies in the core of xi(x))
        ok = lat.leq[T[:, P.xi], F]
        bad = np.argwhere(~ok)
        report.add(
            "(ii) core bound",
            not len(bad),
            {"f": _fmt(lat, F[bad[0][0]]), "x": P.X.elements[bad[0][1]]} if len(bad) else None,
            exhaustive=exhaustive,
        )

        witness = None
        for a in range(n):
            lhs = ftransform_matrix(P, lat.hash[a, F])
            rhs = lat.hash[a, T]
            bad = np.argwhere(lhs != rhs)
            if len(bad):
                witness = {"a": lat.labels[a], "f": _fmt(lat, F[bad[0][0]]), "j": J[bad[0][1]]}
                break
        report.add("(iii) #-homogeneity", witness is None, witness, exhaustive=exhaustive)

        witness = None
        for k in range(len(F)):
            lhs = ftransform_matrix(P, lat.meet[F[k][None, :], F])
            rhs = lat.meet[T[k][None, :], T]
            bad = np.argwhere(lhs != rhs)
            if len(bad):
                g = bad[0][0]
                witness = {"f": _fmt(lat, F[k]), "g": _fmt(lat, F[g]), "j": J[bad[0][1]]}
                break
        report.add("(iv) binary meets preserved", witness is None, witness, exhaustive=exhaustive)

        top = ftransform_matrix(P, np.full((1, m), lat.top, dtype=np.intp))[0]
        bad = np.flatnonzero(top != lat.top)
        report.add(
            "(iv) empty meet preserved",
            not len(bad),
            {"j": J[bad[0]]} if len(bad) else None,
        )
    return report
