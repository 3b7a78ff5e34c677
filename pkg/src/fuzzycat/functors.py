"""The functors between the categories, with law, isomorphism, diagram and adjunction checks.

Functor equality is decided as exact data equality of outputs on finite
samples of objects and morphisms.
"""

from __future__ import annotations

from enum import Enum
from typing import Callable, Iterable, Sequence

import numpy as np

from .category import (
    Category,
    CrispMorphism,
    MorphismPair,
    check_crisp_morphism,
    check_morphism,
    compose,
    compose_crisp,
    crisp_identity_morphism,
    crisp_to_pair,
    identity,
    object_category,
    pair_to_crisp,
)
from .errors import InvalidArgument
from .fuzzy import DEFAULT_BUDGET, FuzzyRelation
from .partition import FuzzyPartition
from .report import ValidationReport, timed
from .systems import LowerTransformationSystem, lts_from_partition, partition_from_lts
from .topology import (
    interior_from_partition,
    interior_from_pretopology,
    pretopology_from_interior,
    pretopology_from_partition,
)

C = Category


class FunctorId(str, Enum):
    F1 = "F1"
    F1P = "F1'"
    F2 = "F2"
    F2P = "F2'"
    F3 = "F3"
    F3P = "F3'"
    F4 = "F4"
    F4P = "F4'"
    F5 = "F5"
    F5P = "F5'"
    F6 = "F6"
    F6P = "F6'"
    F7 = "F7"
    F8 = "F8"
    F9 = "F9"
    F10 = "F10"

    @property
    def source(self) -> Category:
        return SIGNATURES[self][0]

    @property
    def target(self) -> Category:
        return SIGNATURES[self][1]

    def __str__(self):
        return self.value


F = FunctorId

SIGNATURES = {
    F.F1: (C.SPACEFP, C.LSPACEFP),
    F.F1P: (C.LSPACEFP, C.SPACEFP),
    F.F2: (C.FTRANS, C.LFTRANS),
    F.F2P: (C.LFTRANS, C.FTRANS),
    F.F3: (C.LSPACEFP, C.LFTRANS),
    F.F3P: (C.LFTRANS, C.LSPACEFP),
    F.F4: (C.FPRTOP, C.LFPRTOP),
    F.F4P: (C.LFPRTOP, C.FPRTOP),
    F.F5: (C.CINT, C.LFCINT),
    F.F5P: (C.LFCINT, C.CINT),
    F.F6: (C.LFPRTOP, C.LFCINT),
    F.F6P: (C.LFCINT, C.LFPRTOP),
    F.F7: (C.LSPACEFP, C.LFPRTOP),
    F.F8: (C.LFTRANS, C.LFPRTOP),
    F.F9: (C.LSPACEFP, C.LFCINT),
    F.F10: (C.LFTRANS, C.LFCINT),
}

# the structure type a category's objects are stored as
_STORED = {
    C.LSPACEFP: C.LSPACEFP,
    C.SPACEFP: C.LSPACEFP,
    C.LFTRANS: C.LFTRANS,
    C.FTRANS: C.LFTRANS,
    C.LFPRTOP: C.LFPRTOP,
    C.FPRTOP: C.LFPRTOP,
    C.LFCINT: C.LFCINT,
    C.CINT: C.LFCINT,
}

_cache: dict = {}


def apply_functor_object(fid, obj, budget: int = DEFAULT_BUDGET):
    fid = FunctorId(fid)
    if obj is None:
        return None
    if object_category(obj) != _STORED[fid.source]:
        raise InvalidArgument(f"{fid} expects a {fid.source} object, got a {object_category(obj)} object")
    key = (fid, obj, budget)
    if key in _cache:
        return _cache[key]
    if fid == F.F3:
        out = lts_from_partition(obj)
    elif fid == F.F3P:
        out = partition_from_lts(obj)
    elif fid == F.F6:
        out = interior_from_pretopology(obj)
    elif fid == F.F6P:
        out = pretopology_from_interior(obj)
    elif fid == F.F7:
        out = pretopology_from_partition(obj, budget)
    elif fid == F.F9:
        out = interior_from_partition(obj, budget)
    elif fid == F.F8:
        out = apply_functor_object(F.F7, partition_from_lts(obj), budget)
    elif fid == F.F10:
        out = apply_functor_object(F.F9, partition_from_lts(obj), budget)
    else:
        out = obj  # crisp <-> relational functors fix objects
    if len(_cache) > 4096:
        _cache.clear()
    _cache[key] = out
    return out


def transfer_backward(pair: MorphismPair) -> FuzzyRelation:
    """``ϱ'(x2, x1) = μ(ξ'(x2), ξ(x1))`` for an FP-map ``(φ, μ): π1 -> π2``."""
    P1, P2 = pair.source, pair.target
    if not isinstance(P1, FuzzyPartition) or not isinstance(P2, FuzzyPartition):
        raise InvalidArgument("morphism transfer needs the source and target partitions")
    mu = pair.backward.entries
    return FuzzyRelation(P2.X, P1.X, mu[np.ix_(P2.xi, P1.xi)], pair.lattice)


def _expect(fid: FunctorId, m):
    src = fid.source
    if src.is_crisp:
        ok = isinstance(m, CrispMorphism) and m.category == src
    else:
        ok = isinstance(m, MorphismPair) and m.category == src
    if not ok:
        got = getattr(m, "category", type(m).__name__)
        raise InvalidArgument(f"{fid} expects a {src} morphism, got {got}")


def apply_functor_morphism(fid, m, budget: int = DEFAULT_BUDGET):
    fid = FunctorId(fid)
    _expect(fid, m)
    src = apply_functor_object(fid, m.source, budget)
    tgt = apply_functor_object(fid, m.target, budget)
    if fid in (F.F1, F.F2, F.F4, F.F5):
        return crisp_to_pair(m)
    if fid in (F.F1P, F.F2P, F.F4P, F.F5P):
        return pair_to_crisp(m)
    if fid in (F.F3, F.F3P, F.F6, F.F6P):
        return MorphismPair(m.forward, m.backward, fid.target, src, tgt)
    if fid in (F.F7, F.F9):
        return MorphismPair(m.forward, transfer_backward(m), fid.target, src, tgt)
    # F8 = F7 ∘ F3', F10 = F9 ∘ F3'
    first = apply_functor_morphism(F.F3P, m, budget)
    return apply_functor_morphism(F.F7 if fid == F.F8 else F.F9, first, budget)


# --- helpers shared by the checks -----------------------------------------


def identity_in(category, obj):
    category = Category(category)
    if category.is_crisp:
        return crisp_identity_morphism(obj, category)
    return identity(obj, category)


def compose_in(p, q):
    if isinstance(p, CrispMorphism):
        return compose_crisp(p, q)
    return compose(p, q)


def validate_in(m, budget=DEFAULT_BUDGET, samples=None, seed=0) -> ValidationReport:
    if isinstance(m, CrispMorphism):
        return check_crisp_morphism(m, budget=budget, samples=samples, seed=seed)
    return check_morphism(m, budget=budget, samples=samples, seed=seed)


def describe(m) -> dict:
    if isinstance(m, CrispMorphism):
        return {
            "category": str(m.category),
            "forward": [m.forward.codomain.elements[i] for i in m.forward.image],
            "backward": None if m.backward is None else [m.backward.codomain.elements[i] for i in m.backward.image],
        }
    return {"category": str(m.category), "forward": m.forward.labels(), "backward": m.backward.labels()}


def _first_mismatch(items, name):
    for i, (got, want) in enumerate(items):
        if got != want:
            return {"sample": i, name: describe(got), "expected": describe(want)}
    return None


# --- functor laws ----------------------------------------------------------


def check_functor_laws(
    fid,
    objects: Sequence = (),
    composable: Sequence[tuple] = (),
    morphisms: Sequence = (),
    budget: int = DEFAULT_BUDGET,
    morphism_map: Callable | None = None,
    validate_images: bool = True,
) -> ValidationReport:
    """``F(id) = id``, ``F(q∘p) = F(q)∘F(p)`` and, optionally, that images are target morphisms.

    ``morphism_map`` replaces the morphism part of ``fid`` (for mutation tests).
    """
    fid = FunctorId(fid)
    Fm = morphism_map or (lambda m: apply_functor_morphism(fid, m, budget))
    report = ValidationReport(f"functor laws for {fid}: {fid.source} -> {fid.target}")
    with timed(report):
        witness = None
        for obj in objects:
            got = Fm(identity_in(fid.source, obj))
            want = identity_in(fid.target, apply_functor_object(fid, obj, budget))
            if got != want:
                witness = {"object": repr(obj), "F(id)": describe(got), "id": describe(want)}
                break
        report.add("F(id_A) = id_F(A)", witness is None, witness)

        witness = None
        for i, (p, q) in enumerate(composable):
            got = Fm(compose_in(p, q))
            want = compose_in(Fm(p), Fm(q))
            if got != want:
                witness = {"sample": i, "F(q.p)": describe(got), "F(q).F(p)": describe(want)}
                break
        report.add("F(q . p) = F(q) . F(p)", witness is None, witness)

        if validate_images:
            witness = None
            exhaustive = True
            seen = list(morphisms) + [m for pq in composable for m in pq]
            for i, m in enumerate(seen):
                r = validate_in(Fm(m), budget)
                exhaustive &= r.exhaustive
                if not r.passed:
                    witness = {"sample": i, "failure": r.failures[0].to_dict()}
                    break
            report.add(f"images are {fid.target} morphisms", witness is None, witness, exhaustive=exhaustive)
    return report


def check_isomorphism(
    fid,
    inverse,
    objects: Iterable = (),
    morphisms: Iterable = (),
    objects_back: Iterable = (),
    morphisms_back: Iterable = (),
    budget: int = DEFAULT_BUDGET,
) -> ValidationReport:
    """``G∘F = id`` on the first samples and ``F∘G = id`` on the ``*_back`` samples."""
    fid, inverse = FunctorId(fid), FunctorId(inverse)
    if fid.source != inverse.target or fid.target != inverse.source:
        raise InvalidArgument(f"{inverse} is not a candidate inverse of {fid}")
    report = ValidationReport(f"isomorphism {fid} / {inverse}")
    with timed(report):
        for a, b, objs, mors in ((fid, inverse, objects, morphisms), (inverse, fid, objects_back, morphisms_back)):
            label = f"{b}.{a}"
            bad = None
            for i, obj in enumerate(objs):
                back = apply_functor_object(b, apply_functor_object(a, obj, budget), budget)
                if back != obj:
                    bad = {"sample": i, "object": repr(obj), "round trip": repr(back)}
                    break
            report.add(f"{label} = id on objects", bad is None, bad)
            pairs = [(apply_functor_morphism(b, apply_functor_morphism(a, m, budget), budget), m) for m in mors]
            bad = _first_mismatch(pairs, "round trip")
            report.add(f"{label} = id on morphisms", bad is None, bad)
    return report


def check_diagram_fig2(
    partitions: Iterable = (),
    fp_maps: Iterable = (),
    systems: Iterable = (),
    lts_maps: Iterable = (),
    budget: int = DEFAULT_BUDGET,
) -> ValidationReport:
    """``F10∘F3 = F6∘F7`` on LSpaceFP data and ``F6∘F8 = F9∘F3'`` on LFtrans data."""

    def obj(path, x):
        for f in path:
            x = apply_functor_object(f, x, budget)
        return x

    def mor(path, m):
        for f in path:
            m = apply_functor_morphism(f, m, budget)
        return m

    report = ValidationReport("commuting square diagram")
    with timed(report):
        for name, left, right, objs, mors in (
            ("F10.F3 = F6.F7", (F.F3, F.F10), (F.F7, F.F6), partitions, fp_maps),
            ("F6.F8 = F9.F3'", (F.F8, F.F6), (F.F3P, F.F9), systems, lts_maps),
        ):
            bad = None
            for i, x in enumerate(objs):
                a, b = obj(left, x), obj(right, x)
                if a != b:
                    diff = np.argwhere(a.table != b.table)[0]
                    bad = {"sample": i, "f row": int(diff[0]), "x": a.X.elements[diff[1]]}
                    break
            report.add(f"{name} on objects", bad is None, bad)
            bad = _first_mismatch([(mor(left, m), mor(right, m)) for m in mors], "left path")
            report.add(f"{name} on morphisms", bad is None, bad)
    return report


# --- adjunctions -----------------------------------------------------------

ADJUNCTIONS = {
    "F3-F3'": (F.F3, F.F3P),
    "F6-F6'": (F.F6, F.F6P),
}


def default_unit(obj) -> MorphismPair:
    """``(1_X, 0_J)`` resp. ``(1_X, 0_X)``: the identity data on ``obj``."""
    return identity(obj)


def check_adjunction(
    kind: str,
    objects: Sequence = (),
    morphisms: Sequence = (),
    into: Sequence[tuple] = (),
    candidates: Sequence[tuple] = (),
    unit: Callable | None = None,
    budget: int = DEFAULT_BUDGET,
) -> ValidationReport:
    """Check the unit, triangle and uniqueness of ``F ⊣ F'``.

    ``morphisms``: source-category morphisms, for unit naturality.
    ``into``: pairs ``(m, B)`` with ``m: A -> F'(B)``; the lifted morphism
    ``F(A) -> B`` has the same relations as ``m`` and must validate and make
    the triangle commute.
    ``candidates``: pairs ``(A, k)`` with ``k: F(A) -> B``; ``k ↦ F'(k)∙unit``
    must be injective on them.
    """
    if kind not in ADJUNCTIONS:
        raise InvalidArgument(f"unknown adjunction {kind!r}; expected one of {sorted(ADJUNCTIONS)}")
    left, right = ADJUNCTIONS[kind]
    unit = unit or default_unit
    FF = lambda x: apply_functor_object(right, apply_functor_object(left, x, budget), budget)  # noqa: E731
    report = ValidationReport(f"adjunction {left} -| {right}")
    with timed(report):
        bad = None
        for i, A in enumerate(objects):
            eta = unit(A)
            if eta.target is not None and eta.target != FF(A):
                bad = {"sample": i, "reason": "unit does not land in F'F(A)"}
                break
            r = check_morphism(eta.retag(eta.category, A, FF(A)), budget=budget)
            if not r.passed:
                bad = {"sample": i, "failure": r.failures[0].to_dict()}
                break
        report.add("unit components are morphisms", bad is None, bad)

        squares = []
        for m in morphisms:
            FFm = apply_functor_morphism(right, apply_functor_morphism(left, m, budget), budget)
            squares.append((compose(unit(m.source), FFm), compose(m, unit(m.target))))
        bad = _first_mismatch(squares, "F'F(m).unit")
        report.add("unit naturality", bad is None, bad)

        bad = None
        exhaustive = True
        for i, (m, B) in enumerate(into):
            A = m.source
            lifted = MorphismPair(m.forward, m.backward, left.target, apply_functor_object(left, A, budget), B)
            r = check_morphism(lifted, budget=budget)
            exhaustive &= r.exhaustive
            if not r.passed:
                bad = {"sample": i, "reason": "lifted pair is not a morphism", "failure": r.failures[0].to_dict()}
                break
            tri = compose(unit(A), apply_functor_morphism(right, lifted, budget))
            if tri != m:
                bad = {"sample": i, "F'(k).unit": describe(tri), "m": describe(m)}
                break
        report.add("triangle F'(k) . unit = m", bad is None, bad, exhaustive=exhaustive)

        bad = None
        images = []
        for A, k in candidates:
            images.append((compose(unit(A), apply_functor_morphism(right, k, budget)), k))
        for i in range(len(images)):
            for j in range(i + 1, len(images)):
                (ci, ki), (cj, kj) = images[i], images[j]
                if ci == cj and ki != kj:
                    bad = {"candidates": [i, j], "k1": describe(ki), "k2": describe(kj)}
                    break
            if bad:
                break
        report.add("uniqueness of the lift", bad is None, bad)
    return report
