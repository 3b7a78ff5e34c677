"""L-valued fuzzy lower transformation systems, represented by co-atom kernels.

A map ``H: L^X -> L^Y`` preserving meets and ``a # -`` is determined by its
values on the co-atoms ``¬1_{x}``, because ``f = ⋀_x f(x) # ¬1_{x}``. We store
``kernel[y, x] = ¬H(¬1_{x})(y)`` and evaluate ``H(f)(y) = ⋀_x ¬kernel[y, x] # f(x)``.
"""

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
from .partition import FuzzyPartition, validate_partition
from .report import ValidationReport, timed


class LowerTransformationSystem:
    def __init__(self, X: FiniteSet, Y: FiniteSet, v, kernel, lattice: Lattice):
        K = lattice.check_array(kernel)
        if K.size == 0:
            K = K.reshape(len(Y), len(X))
        if K.shape != (len(Y), len(X)):
            raise InvalidArgument(f"kernel must be {len(Y)}x{len(X)}, got {K.shape}")
        v = np.asarray(v, dtype=np.intp).reshape(-1)
        if v.shape != (len(X),) or ((v < 0) | (v >= len(Y))).any():
            raise InvalidArgument(f"v must map each of the {len(X)} points of X into Y")
        K, v = K.copy(), v.copy()
        K.setflags(write=False)
        v.setflags(write=False)
        self.X, self.Y, self.lattice = X, Y, lattice
        self.v, self.kernel = v, K

    def __call__(self, f: FuzzySet) -> FuzzySet:
        return apply_lts(self, f)

    def relation(self) -> FuzzyRelation:
        return FuzzyRelation(self.Y, self.X, self.kernel, self.lattice)

    def __eq__(self, other):
        if not isinstance(other, LowerTransformationSystem):
            return NotImplemented
        return (
            self.X == other.X
            and self.Y == other.Y
            and self.lattice == other.lattice
            and np.array_equal(self.v, other.v)
            and np.array_equal(self.kernel, other.kernel)
        )

    def __hash__(self):
        return hash((self.X, self.Y, self.v.tobytes(), self.kernel.tobytes()))

    def __repr__(self):
        return f"LowerTransformationSystem({self.X.name} -> {self.Y.name})"


def lts_matrix(H: LowerTransformationSystem, functions: np.ndarray) -> np.ndarray:
    """``N × |Y|`` array of ``H(f)`` for each row ``f`` of ``functions``."""
    return backward_matrix(H.lattice, H.kernel, functions)


def apply_lts(H: LowerTransformationSystem, f: FuzzySet) -> FuzzySet:
    if f.domain != H.X:
        raise InvalidArgument(f"system on {H.X.name!r} applied to a set on {f.domain.name!r}")
    if f.lattice != H.lattice:
        raise InvalidArgument("fuzzy set and system use different lattices")
    return FuzzySet(H.Y, lts_matrix(H, f.values[None, :])[0], H.lattice)


def lts_from_partition(P: FuzzyPartition) -> LowerTransformationSystem:
    if not P.is_valid:
        bad = validate_partition(P).failures[0]
        raise InvalidArgument(f"not a valid fuzzy partition: {bad.name} {bad.witness}")
    return LowerTransformationSystem(P.X, P.J, P.xi, P.membership, P.lattice)


def partition_from_lts(H: LowerTransformationSystem) -> FuzzyPartition:
    """Blocks ``A_y(x) = ¬H(¬1_{x})(y)`` with index map ``v``."""
    P = FuzzyPartition(H.X, H.Y, H.kernel, H.v, H.lattice)
    report = validate_partition(P)
    if not report.passed:
        bad = report.failures[0]
        raise ConstructionError(f"kernel does not define a fuzzy partition: {bad.name} {bad.witness}")
    return P


def _fmt(lat, row):
    return "[" + ", ".join(lat.labels[v] for v in row) + "]"


def validate_lts(
    H: LowerTransformationSystem, budget: int = DEFAULT_BUDGET, samples=None, seed: int = 0
) -> ValidationReport:
    """Check the system axioms extensionally on the induced map ``H``.

    Meet preservation is checked on all pairs and on the empty family, and
    #-homogeneity on every ``(a, f)``; the co-atom reproduction check catches
    tables where ``a # 1 = 1`` fails and the kernel shortcut would be unsound.
    """
    lat = H.lattice
    report = ValidationReport(f"lower transformation system {H.X.name} -> {H.Y.name}")
    with timed(report):
        X, Y = H.X.elements, H.Y.elements
        if not len(X):
            report.add("X nonempty", False, {"X": H.X.name})

        hit = np.zeros(len(Y), dtype=bool)
        hit[H.v] = True
        missing = np.flatnonzero(~hit)
        report.add("v surjective", not len(missing), {"y": Y[missing[0]]} if len(missing) else None)

        graph = H.v[None, :] == np.arange(len(Y))[:, None]
        bad = np.argwhere((H.kernel == lat.top) != graph)
        report.add(
            "axiom (iii): ¬H(¬1_x)(y) = 1 iff v(x) = y",
            not len(bad),
            {"y": Y[bad[0][0]], "x": X[bad[0][1]]} if len(bad) else None,
        )

        coatoms = np.where(np.eye(len(X), dtype=bool), lat.bottom, lat.top).reshape(len(X), len(X))
        reproduced = lat.neg[lts_matrix(H, coatoms)].T
        bad = np.argwhere(reproduced != H.kernel)
        report.add(
            "co-atom reproduction",
            not len(bad),
            {"y": Y[bad[0][0]], "x": X[bad[0][1]]} if len(bad) else None,
        )

        F, exhaustive = FunctionSpace(H.X, lat).quantifier(budget, samples, seed)
        HF = lts_matrix(H, F)
        witness = None
        for k in range(len(F)):
            lhs = lts_matrix(H, lat.meet[F[k][None, :], F])
            bad = np.argwhere(lhs != lat.meet[HF[k][None, :], HF])
            if len(bad):
                witness = {"f": _fmt(lat, F[k]), "g": _fmt(lat, F[bad[0][0]]), "y": Y[bad[0][1]]}
                break
        report.add("axiom (i): binary meets", witness is None, witness, exhaustive=exhaustive)

        top = lts_matrix(H, np.full((1, len(X)), lat.top, dtype=np.intp))[0]
        bad = np.flatnonzero(top != lat.top)
        report.add("axiom (i): empty meet", not len(bad), {"y": Y[bad[0]]} if len(bad) else None)

        witness = None
        for a in range(lat.size):
            bad = np.argwhere(lts_matrix(H, lat.hash[a, F]) != lat.hash[a, HF])
            if len(bad):
                witness = {"a": lat.labels[a], "f": _fmt(lat, F[bad[0][0]]), "y": Y[bad[0][1]]}
                break
        report.add("axiom (ii): #-homogeneity", witness is None, witness, exhaustive=exhaustive)
    return report
