"""Objects, morphisms, composition and morphism conditions of the categories.

Fuzzy categories carry morphisms as pairs of relations: a covariant
``forward`` relation between the first underlying sets and a contravariant
``backward`` relation between the second ones. Crisp categories carry
functions instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Any

import numpy as np

from .errors import CrispnessViolation, InvalidArgument
from .fuzzy import (
    DEFAULT_BUDGET,
    FiniteSet,
    FunctionSpace,
    FuzzyRelation,
    backward_matrix,
    compose_inf_hash,
    compose_sup_star,
    crisp_identity,
    hash_identity,
)
from .lattice import Lattice
from .partition import FuzzyPartition
from .report import ValidationReport, timed
from .systems import LowerTransformationSystem, lts_matrix
from .topology import CechInterior, Pretopology, _OperatorTable, coatom_matrix


class Category(str, Enum):
    QUA = "Qua"
    LSPACEFP = "LSpaceFP"
    LFTRANS = "LFtrans"
    LFPRTOP = "LFPrTop"
    LFCINT = "LFCInt"
    SPACEFP = "SpaceFP"
    FTRANS = "Ftrans"
    FPRTOP = "FPrTop"
    CINT = "CInt"

    @property
    def is_crisp(self) -> bool:
        return self in CRISP_OF.values()

    def __str__(self):
        return self.value


FUZZY = (Category.QUA, Category.LSPACEFP, Category.LFTRANS, Category.LFPRTOP, Category.LFCINT)

# crisp category -> the relational category it embeds into
CRISP_OF = {
    Category.LSPACEFP: Category.SPACEFP,
    Category.LFTRANS: Category.FTRANS,
    Category.LFPRTOP: Category.FPRTOP,
    Category.LFCINT: Category.CINT,
}
RELATIONAL_OF = {v: k for k, v in CRISP_OF.items()}


@dataclass(frozen=True, eq=False)
class QuaObject:
    questions: FiniteSet
    answers: FiniteSet
    success: FuzzyRelation

    def __post_init__(self):
        if self.success.source != self.questions or self.success.target != self.answers:
            raise InvalidArgument("success relation must be questions x answers")

    @property
    def lattice(self) -> Lattice:
        return self.success.lattice

    def __eq__(self, other):
        if not isinstance(other, QuaObject):
            return NotImplemented
        return self.success == other.success

    def __hash__(self):
        return hash(self.success)


def object_category(obj) -> Category:
    if isinstance(obj, QuaObject):
        return Category.QUA
    if isinstance(obj, FuzzyPartition):
        return Category.LSPACEFP
    if isinstance(obj, LowerTransformationSystem):
        return Category.LFTRANS
    if isinstance(obj, Pretopology):
        return Category.LFPRTOP
    if isinstance(obj, CechInterior):
        return Category.LFCINT
    raise InvalidArgument(f"not a category object: {type(obj).__name__}")


def underlying_sets(obj) -> tuple[FiniteSet, FiniteSet]:
    """(first set, second set): forward relations live on the first, backward on the second."""
    if isinstance(obj, QuaObject):
        return obj.answers, obj.questions
    if isinstance(obj, FuzzyPartition):
        return obj.X, obj.J
    if isinstance(obj, LowerTransformationSystem):
        return obj.X, obj.Y
    if isinstance(obj, _OperatorTable):
        return obj.X, obj.X
    raise InvalidArgument(f"not a category object: {type(obj).__name__}")


class MorphismPair:
    """A morphism ``(forward, backward)`` of one of the relational categories.

    ``forward`` is ``first(A) × first(B)`` and ``backward`` is
    ``second(B) × second(A)``. ``source`` and ``target`` are optional and do
    not take part in equality.
    """

    def __init__(self, forward: FuzzyRelation, backward: FuzzyRelation, category, source=None, target=None):
        category = Category(category)
        if category not in FUZZY:
            raise InvalidArgument(f"{category} is not a relational category")
        if forward.lattice != backward.lattice:
            raise InvalidArgument("forward and backward relations use different lattices")
        for obj, role in ((source, "source"), (target, "target")):
            if obj is not None and object_category(obj) != category and category != Category.QUA:
                raise InvalidArgument(f"{role} is a {object_category(obj)} object, expected {category}")
        if source is not None:
            first, second = underlying_sets(source)
            if forward.source != first or backward.target != second:
                raise InvalidArgument(
                    f"axes do not match source: forward {forward.source.name}->, backward ->{backward.target.name}"
                )
        if target is not None:
            first, second = underlying_sets(target)
            if forward.target != first or backward.source != second:
                raise InvalidArgument(
                    f"axes do not match target: forward ->{forward.target.name}, backward {backward.source.name}->"
                )
        self.forward, self.backward, self.category = forward, backward, category
        self.source, self.target = source, target

    @property
    def lattice(self) -> Lattice:
        return self.forward.lattice

    def retag(self, category, source=None, target=None) -> MorphismPair:
        return MorphismPair(self.forward, self.backward, category, source, target)

    def __eq__(self, other):
        if not isinstance(other, MorphismPair):
            return NotImplemented
        return (
            self.category == other.category
            and self.forward == other.forward
            and self.backward == other.backward
        )

    def __hash__(self):
        return hash((self.category, self.forward, self.backward))

    def __repr__(self):
        return (
            f"MorphismPair({self.category}, forward={self.forward.labels()}, "
            f"backward={self.backward.labels()})"
        )


def identity(obj, category=None) -> MorphismPair:
    """``(1_first, 0_second)``: 1 on the forward diagonal, 0 on the backward diagonal."""
    category = Category(category) if category is not None else object_category(obj)
    first, second = underlying_sets(obj)
    lat = obj.lattice
    return MorphismPair(crisp_identity(first, lat), hash_identity(second, lat), category, obj, obj)


def compose(p: MorphismPair, q: MorphismPair) -> MorphismPair:
    """``q • p`` for ``p: A -> B`` and ``q: B -> C``: ``(q⊙p, p⊕q)`` in diagrammatic order."""
    if p.category != q.category:
        raise InvalidArgument(f"cannot compose a {p.category} morphism with a {q.category} morphism")
    if p.target is not None and q.source is not None and p.target != q.source:
        raise InvalidArgument("middle objects differ")
    forward = compose_sup_star(p.forward, q.forward)
    backward = compose_inf_hash(q.backward, p.backward)
    return MorphismPair(forward, backward, p.category, p.source, q.target)


# --- morphism conditions ---------------------------------------------------


def _need(cond: bool, msg: str):
    if not cond:
        raise InvalidArgument(msg)


def _check_axes(pair: MorphismPair, first1, second1, first2, second2):
    f, b = pair.forward, pair.backward
    _need(
        f.source == first1 and f.target == first2,
        f"forward relation must be {first1.name}x{first2.name}, got {f.source.name}x{f.target.name}",
    )
    _need(
        b.source == second2 and b.target == second1,
        f"backward relation must be {second2.name}x{second1.name}, got {b.source.name}x{b.target.name}",
    )


def _relational_inequality(report, name, lat, forward, M1, backward, M2, labels):
    """``forward(a1,a2) ⁎ M1(q1,a1) <= backward(q2,q1) # M2(q2,a2)`` for all four indices.

    ``labels`` gives (a1, a2, q1, q2) label lists for the witness.
    """
    lhs = lat.star[forward[:, :, None], M1.T[:, None, :]]  # (a1, a2, q1)
    rhs = lat.hash[backward[:, :, None], M2[:, None, :]]  # (q2, q1, a2)
    ok = lat.leq[lhs[:, :, :, None], rhs.transpose(2, 1, 0)[None, :, :, :]]  # (a1, a2, q1, q2)
    bad = np.argwhere(~ok)
    witness = None
    if len(bad):
        a1, a2, q1, q2 = bad[0]
        names = ("a1", "a2", "q1", "q2")
        witness = {n: labels[i][v] for i, (n, v) in enumerate(zip(names, (a1, a2, q1, q2)))}
        witness["lhs"] = lat.labels[lhs[a1, a2, q1]]
        witness["rhs"] = lat.labels[rhs[q2, q1, a2]]
    report.add(name, witness is None, witness)


def check_qua_morphism(M1: QuaObject, M2: QuaObject, pair: MorphismPair, budget=None, samples=None, seed=0):
    """``g_*(m_*, m'_*) ⁎ M(m^*, m_*) <= g^*(m'^*, m^*) # M'(m'^*, m'_*)``."""
    _need(M1.lattice == M2.lattice == pair.lattice, "objects and pair use different lattices")
    _check_axes(pair, M1.answers, M1.questions, M2.answers, M2.questions)
    lat = pair.lattice
    report = ValidationReport(f"Qua morphism {M1.questions.name}/{M1.answers.name} -> {M2.questions.name}/{M2.answers.name}")
    with timed(report):
        labels = (M1.answers.elements, M2.answers.elements, M1.questions.elements, M2.questions.elements)
        # rename indices for the witness: a = answers (m_*), q = questions (m^*)
        _relational_inequality(
            report,
            "g_*(m_*,m'_*) * M(m^*,m_*) <= g^*(m'^*,m^*) # M'(m'^*,m'_*)",
            lat,
            pair.forward.entries,
            M1.success.entries,
            pair.backward.entries,
            M2.success.entries,
            labels,
        )
    return report


def check_fpmap(P1: FuzzyPartition, P2: FuzzyPartition, pair: MorphismPair, budget=None, samples=None, seed=0):
    """``φ(x1,x2) ⁎ A_{j1}(x1) <= μ(j2,j1) # A_{j2}(x2)`` for all x1, x2, j1, j2."""
    _need(P1.lattice == P2.lattice == pair.lattice, "partitions and pair use different lattices")
    _check_axes(pair, P1.X, P1.J, P2.X, P2.J)
    lat = pair.lattice
    phi, mu = pair.forward.entries, pair.backward.entries
    report = ValidationReport(f"FP-map {P1.X.name} -> {P2.X.name}")
    with timed(report):
        witness = None
        for j1 in range(len(P1.J)):
            lhs = lat.star[phi, P1.membership[j1][:, None]]  # (x1, x2)
            for j2 in range(len(P2.J)):
                rhs = lat.hash[mu[j2, j1], P2.membership[j2]]  # (x2,)
                bad = np.argwhere(~lat.leq[lhs, rhs[None, :]])
                if len(bad):
                    x1, x2 = bad[0]
                    witness = {
                        "x1": P1.X.elements[x1],
                        "x2": P2.X.elements[x2],
                        "j1": P1.J.elements[j1],
                        "j2": P2.J.elements[j2],
                    }
                    break
            if witness:
                break
        report.add("phi(x1,x2) * A_j1(x1) <= mu(j2,j1) # A_j2(x2)", witness is None, witness)
    return report


def _operator_inequality(report, name, lat, F, out2, out1, backward, labels2, labels1, exhaustive):
    """``¬backward(b2, b1) ⁎ out2[f, b2] <= out1[f, b1]`` for every row ``f``."""
    neg_b = lat.neg[backward]  # (b2, b1)
    lhs = lat.star[neg_b[None, :, :], out2[:, :, None]]  # (f, b2, b1)
    bad = np.argwhere(~lat.leq[lhs, out1[:, None, :]])
    witness = None
    if len(bad):
        k, b2, b1 = bad[0]
        witness = {
            "f": "[" + ", ".join(lat.labels[v] for v in F[k]) + "]",
            labels2[0]: labels2[1][b2],
            labels1[0]: labels1[1][b1],
            "lhs": lat.labels[lhs[k, b2, b1]],
            "rhs": lat.labels[out1[k, b1]],
        }
    report.add(name, witness is None, witness, exhaustive=exhaustive)


def check_lts_morphism(
    H1: LowerTransformationSystem,
    H2: LowerTransformationSystem,
    pair: MorphismPair,
    budget: int = DEFAULT_BUDGET,
    samples=None,
    seed: int = 0,
):
    """``¬ν(y2,y1) ⁎ H2(f)(y2) <= H1(ψ⃖(f))(y1)`` for all y1, y2 and f on X2."""
    _need(H1.lattice == H2.lattice == pair.lattice, "systems and pair use different lattices")
    _check_axes(pair, H1.X, H1.Y, H2.X, H2.Y)
    lat = pair.lattice
    report = ValidationReport(f"LFtrans morphism {H1.X.name} -> {H2.X.name}")
    with timed(report):
        F, exhaustive = FunctionSpace(H2.X, lat).quantifier(budget or DEFAULT_BUDGET, samples, seed)
        out2 = lts_matrix(H2, F)
        out1 = lts_matrix(H1, backward_matrix(lat, pair.forward.entries, F))
        _operator_inequality(
            report,
            "neg nu(y2,y1) * H2(f)(y2) <= H1(psi<-(f))(y1)",
            lat,
            F,
            out2,
            out1,
            pair.backward.entries,
            ("y2", H2.Y.elements),
            ("y1", H1.Y.elements),
            exhaustive,
        )
    return report


def _check_table_morphism(S1, S2, pair, budget, samples, seed, title, name):
    _need(S1.lattice == S2.lattice == pair.lattice, "objects and pair use different lattices")
    _check_axes(pair, S1.X, S1.X, S2.X, S2.X)
    lat = pair.lattice
    report = ValidationReport(f"{title} {S1.X.name} -> {S2.X.name}")
    with timed(report):
        F, exhaustive = S2.space.quantifier(budget or DEFAULT_BUDGET, samples, seed)
        out2 = S2.rows(F)
        # backward images always lie in L^{X1}, whose table is total
        out1 = S1.rows(backward_matrix(lat, pair.forward.entries, F))
        _operator_inequality(
            report,
            name,
            lat,
            F,
            out2,
            out1,
            pair.backward.entries,
            ("x2", S2.X.elements),
            ("x1", S1.X.elements),
            exhaustive,
        )
    return report


def check_pretop_morphism(S1: Pretopology, S2: Pretopology, pair, budget=DEFAULT_BUDGET, samples=None, seed=0):
    """``¬ϱ'(x2,x1) ⁎ p_{x2}(f) <= p_{x1}(ϱ⃖(f))``."""
    return _check_table_morphism(
        S1, S2, pair, budget, samples, seed, "LFPrTop morphism", "neg rho'(x2,x1) * p_x2(f) <= p_x1(rho<-(f))"
    )


def check_interior_morphism(I1: CechInterior, I2: CechInterior, pair, budget=DEFAULT_BUDGET, samples=None, seed=0):
    """``¬κ'(x2,x1) ⁎ i2(f)(x2) <= i1(κ⃖(f))(x1)``."""
    return _check_table_morphism(
        I1, I2, pair, budget, samples, seed, "LFCInt morphism", "neg kappa'(x2,x1) * i2(f)(x2) <= i1(kappa<-(f))(x1)"
    )


VALIDATORS = {
    Category.QUA: check_qua_morphism,
    Category.LSPACEFP: check_fpmap,
    Category.LFTRANS: check_lts_morphism,
    Category.LFPRTOP: check_pretop_morphism,
    Category.LFCINT: check_interior_morphism,
}


def check_morphism(pair: MorphismPair, source=None, target=None, budget=DEFAULT_BUDGET, samples=None, seed=0):
    """Run the tagged category's validator, using ``pair.source``/``pair.target`` by default."""
    source = source if source is not None else pair.source
    target = target if target is not None else pair.target
    if source is None or target is None:
        raise InvalidArgument("morphism check needs source and target objects")
    return VALIDATORS[pair.category](source, target, pair, budget=budget, samples=samples, seed=seed)


# --- crisp categories ------------------------------------------------------


@dataclass(frozen=True)
class FiniteMap:
    domain: FiniteSet
    codomain: FiniteSet
    image: tuple

    def __post_init__(self):
        image = tuple(int(self.codomain.index(v)) for v in self.image)
        if len(image) != len(self.domain):
            raise InvalidArgument(f"map on {self.domain.name!r} needs {len(self.domain)} images, got {len(image)}")
        object.__setattr__(self, "image", image)

    @classmethod
    def identity(cls, X: FiniteSet) -> FiniteMap:
        return cls(X, X, tuple(range(len(X))))

    def __call__(self, x) -> int:
        return self.image[self.domain.index(x)]

    def then(self, other: FiniteMap) -> FiniteMap:
        """``other ∘ self``."""
        _need(self.codomain == other.domain, "maps are not composable")
        return FiniteMap(self.domain, other.codomain, tuple(other.image[i] for i in self.image))

    def array(self) -> np.ndarray:
        return np.array(self.image, dtype=np.intp)


@dataclass(frozen=True, eq=False)
class CrispMorphism:
    """A morphism of SpaceFP / Ftrans (a pair of maps) or FPrTop / CInt (one map)."""

    forward: FiniteMap
    backward: FiniteMap | None
    category: Category
    source: Any = None
    target: Any = None

    def __post_init__(self):
        cat = Category(self.category)
        object.__setattr__(self, "category", cat)
        _need(cat.is_crisp, f"{cat} is not a crisp category")
        two_maps = cat in (Category.SPACEFP, Category.FTRANS)
        _need(two_maps == (self.backward is not None), f"{cat} morphisms carry {'two maps' if two_maps else 'one map'}")

    def __eq__(self, other):
        if not isinstance(other, CrispMorphism):
            return NotImplemented
        return (self.category, self.forward, self.backward) == (other.category, other.forward, other.backward)

    def __hash__(self):
        return hash((self.category, self.forward, self.backward))


def crisp_identity_morphism(obj, category) -> CrispMorphism:
    category = Category(category)
    first, second = underlying_sets(obj)
    back = FiniteMap.identity(second) if category in (Category.SPACEFP, Category.FTRANS) else None
    return CrispMorphism(FiniteMap.identity(first), back, category, obj, obj)


def compose_crisp(c1: CrispMorphism, c2: CrispMorphism) -> CrispMorphism:
    _need(c1.category == c2.category, "crisp morphisms from different categories")
    back = None if c1.backward is None else c1.backward.then(c2.backward)
    return CrispMorphism(c1.forward.then(c2.forward), back, c1.category, c1.source, c2.target)


def check_crisp_morphism(c: CrispMorphism, source=None, target=None, budget=DEFAULT_BUDGET, samples=None, seed=0):
    """Crisp morphism conditions.

    SpaceFP: ``A_j(x) <= A'_{ω(j)}(α(x))``; Ftrans: ``H2(f)(ε(y)) <= H1(f∘β)(y)``;
    FPrTop: ``p_{ζ(x)}(f) <= p_x(f∘ζ)``; CInt: ``i2(f)(ζ(x)) <= i1(f∘ζ)(x)``.
    """
    S1 = source if source is not None else c.source
    S2 = target if target is not None else c.target
    _need(S1 is not None and S2 is not None, "crisp check needs source and target objects")
    lat = S1.lattice
    first1, second1 = underlying_sets(S1)
    first2, second2 = underlying_sets(S2)
    _need(c.forward.domain == first1 and c.forward.codomain == first2, "forward map has the wrong sets")
    if c.backward is not None:
        _need(c.backward.domain == second1 and c.backward.codomain == second2, "backward map has the wrong sets")
    alpha = c.forward.array()
    report = ValidationReport(f"{c.category} morphism {first1.name} -> {first2.name}")
    with timed(report):
        if c.category == Category.SPACEFP:
            omega = c.backward.array()
            lhs = S1.membership  # (j, x)
            rhs = S2.membership[omega][:, alpha]
            bad = np.argwhere(~lat.leq[lhs, rhs])
            w = {"j": second1.elements[bad[0][0]], "x": first1.elements[bad[0][1]]} if len(bad) else None
            report.add("A_j(x) <= A'_omega(j)(alpha(x))", w is None, w)
            return report
        F, exhaustive = FunctionSpace(first2, lat).quantifier(budget, samples, seed)
        pulled = F[:, alpha]  # f∘α
        if c.category == Category.FTRANS:
            eps = c.backward.array()
            lhs = lts_matrix(S2, F)[:, eps]
            rhs = lts_matrix(S1, pulled)
            name, key = "H2(f)(eps(y)) <= H1(f o beta)(y)", "y"
            elems = second1.elements
        else:
            lhs = S2.rows(F)[:, alpha]
            rhs = S1.rows(pulled)
            name = "p_zeta(x)(f) <= p_x(f o zeta)" if c.category == Category.FPRTOP else "i2(f)(zeta(x)) <= i1(f o zeta)(x)"
            key, elems = "x", first1.elements
        bad = np.argwhere(~lat.leq[lhs, rhs])
        w = None
        if len(bad):
            k, e = bad[0]
            w = {"f": "[" + ", ".join(lat.labels[v] for v in F[k]) + "]", key: elems[e]}
        report.add(name, w is None, w, exhaustive=exhaustive)
    return report


def _graph(m: FiniteMap, lat: Lattice, on, off) -> np.ndarray:
    G = np.full((len(m.domain), len(m.codomain)), off, dtype=np.intp)
    G[np.arange(len(m.domain)), m.array()] = on
    return G


def crisp_to_pair(c: CrispMorphism) -> MorphismPair:
    """The 1-graph of the forward map and the transposed 0-graph of the backward one.

    For FPrTop / CInt the single map ``ζ`` provides both, with
    ``ϱ'(x2, x1) = 0`` iff ``ζ(x1) = x2``.
    """
    obj = c.source if c.source is not None else c.target
    _need(obj is not None, "crisp_to_pair needs the source or target object for the lattice")
    lat = obj.lattice
    forward = FuzzyRelation(c.forward.domain, c.forward.codomain, _graph(c.forward, lat, lat.top, lat.bottom), lat)
    back_map = c.backward if c.backward is not None else c.forward
    back = _graph(back_map, lat, lat.bottom, lat.top).T
    backward = FuzzyRelation(back_map.codomain, back_map.domain, back, lat)
    return MorphismPair(forward, backward, RELATIONAL_OF[c.category], c.source, c.target)


def _map_from_ones(R: FuzzyRelation, value: int, other: int, what: str, by_columns: bool) -> FiniteMap:
    """Read a function from a relation that has exactly one ``value`` per row (or column)."""
    E = R.entries.T if by_columns else R.entries
    dom, cod = (R.target, R.source) if by_columns else (R.source, R.target)
    lat = R.lattice
    image = []
    for i, row in enumerate(E):
        hits = np.flatnonzero(row == value)
        stray = np.flatnonzero((row != value) & (row != other))
        if len(hits) != 1 or len(stray):
            axis = "column" if by_columns else "row"
            raise CrispnessViolation(
                f"{what} {axis} {dom.elements[i]!r} must hold exactly one {lat.labels[value]} and "
                f"{lat.labels[other]} elsewhere, got {[lat.labels[v] for v in row]}"
            )
        image.append(int(hits[0]))
    return FiniteMap(dom, cod, tuple(image))


def pair_to_crisp(pair: MorphismPair) -> CrispMorphism:
    _need(pair.category in CRISP_OF, f"{pair.category} has no crisp subcategory")
    lat = pair.lattice
    forward = _map_from_ones(pair.forward, lat.top, lat.bottom, "forward", by_columns=False)
    if pair.category in (Category.LSPACEFP, Category.LFTRANS):
        backward = _map_from_ones(pair.backward, lat.bottom, lat.top, "backward", by_columns=True)
    else:
        B = pair.backward.entries
        bad = np.argwhere((B != lat.bottom) & (B != lat.top))
        if len(bad):
            r, c = bad[0]
            raise CrispnessViolation(
                f"backward entry ({pair.backward.source.elements[r]!r}, {pair.backward.target.elements[c]!r}) "
                f"is {lat.labels[B[r, c]]}, expected 0 or 1"
            )
        backward = None
    return CrispMorphism(forward, backward, CRISP_OF[pair.category], pair.source, pair.target)


# --- Qua embeddings --------------------------------------------------------


def embed_qua_partition(P: FuzzyPartition) -> QuaObject:
    """Questions ``J``, answers ``X``, success ``A_j(x)``."""
    return QuaObject(P.J, P.X, P.relation())


def embed_qua_lts(H: LowerTransformationSystem) -> QuaObject:
    """Questions ``Y``, answers ``X``, success ``¬H(¬1_{x})(y)``."""
    return QuaObject(H.Y, H.X, H.relation())


def embed_qua_pretopology(S: Pretopology) -> QuaObject:
    """Questions and answers ``X``, success ``¬p_x(¬1_{x'})``."""
    return QuaObject(S.X, S.X, FuzzyRelation(S.X, S.X, coatom_matrix(S), S.lattice))


def embed_qua_interior(I: CechInterior) -> QuaObject:
    return QuaObject(I.X, I.X, FuzzyRelation(I.X, I.X, coatom_matrix(I), I.lattice))


EMBEDDINGS = {
    Category.LSPACEFP: embed_qua_partition,
    Category.LFTRANS: embed_qua_lts,
    Category.LFPRTOP: embed_qua_pretopology,
    Category.LFCINT: embed_qua_interior,
}


def embed_qua_object(obj) -> QuaObject:
    cat = object_category(obj)
    return obj if cat == Category.QUA else EMBEDDINGS[cat](obj)


def embed_qua_morphism(pair: MorphismPair) -> MorphismPair:
    """The same relations, read as a Qua morphism between the embedded objects."""
    src = embed_qua_object(pair.source) if pair.source is not None else None
    tgt = embed_qua_object(pair.target) if pair.target is not None else None
    return MorphismPair(pair.forward, pair.backward, Category.QUA, src, tgt)
