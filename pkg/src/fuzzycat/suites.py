"""Seeded suites that check each stated proposition on desk-scale fixtures.

Every suite returns a :class:`ValidationReport`; ``run_suites`` runs a
selection in sorted id order so reports are deterministic.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable

import numpy as np

from . import fixtures as fx
from .category import (
    Category,
    MorphismPair,
    QuaObject,
    check_morphism,
    compose,
    crisp_to_pair,
    embed_qua_morphism,
    identity,
)
from .errors import InvalidArgument
from .fuzzy import (
    DEFAULT_BUDGET,
    FunctionSpace,
    FuzzyRelation,
    backward_matrix,
    compose_sup_star,
    finite_set,
)
from .functors import (
    FunctorId,
    apply_functor_morphism,
    apply_functor_object,
    check_adjunction,
    check_diagram_fig2,
    check_functor_laws,
    check_isomorphism,
    validate_in,
)
from .lattice import Lattice, make_lukasiewicz_chain, validate_lattice
from .partition import check_ftransform_properties, ftransform_matrix
from .report import ValidationReport, timed
from .systems import lts_from_partition, lts_matrix, partition_from_lts, validate_lts
from .topology import (
    interior_from_pretopology,
    pretopology_from_interior,
    validate_interior,
    validate_pretopology,
)

C = Category
F = FunctorId


@dataclass
class SuiteConfig:
    lattice: Lattice = field(default_factory=lambda: make_lukasiewicz_chain(2))
    budget: int = DEFAULT_BUDGET
    samples: int | None = None
    seed: int = 0
    max_x: int = 3
    random_per_pair: int = 2
    composable: int = 60

    def __post_init__(self):
        if self.budget < 1:
            raise InvalidArgument("budget must be >= 1")
        if not 1 <= self.max_x <= 4:
            raise InvalidArgument("max-x must be between 1 and 4")


class Fixtures:
    """Objects and morphisms of every category, built lazily from one seed."""

    def __init__(self, config: SuiteConfig):
        self.config = config
        self.lat = config.lattice
        self.rng = np.random.default_rng(config.seed)

    @property
    def budget(self):
        return self.config.budget

    def _r(self):
        return int(self.rng.integers(2**31))

    # objects ---------------------------------------------------------------

    @cached_property
    def partitions(self):
        lat, m = self.lat, self.config.max_x
        X = finite_set("X", m)
        Z = finite_set("Z", max(1, m - 1))
        out = [
            fx.random_partition(X, finite_set("J", min(2, m)), lat, self._r()),
            fx.one_block_partition(X, lat, "K"),
            fx.singleton_partition(Z, lat, "JZ"),
            fx.random_partition(Z, finite_set("I", 1), lat, self._r()),
            fx.singleton_partition(X, lat, "JX", fuzzy_seed=self._r()),
        ]
        if m == 3 and "1/4" in lat.labels:
            out.append(fx.partition_fixture(lat))
        return out

    @cached_property
    def systems(self):
        return [lts_from_partition(P) for P in self.partitions]

    @cached_property
    def pretopologies(self):
        return [apply_functor_object(F.F7, P, self.budget) for P in self.partitions]

    @cached_property
    def interiors(self):
        return [apply_functor_object(F.F9, P, self.budget) for P in self.partitions]

    @cached_property
    def non_induced(self):
        """Pretopologies outside the partition-induced class (empty on the two-element lattice)."""
        if self.lat.size < 3:
            return []
        return [fx.threshold_pretopology(self.lat)]

    @cached_property
    def qua_objects(self):
        from .category import embed_qua_partition

        out = [embed_qua_partition(P) for P in self.partitions]
        Q, A = finite_set("Q", 2), finite_set("A", min(3, self.config.max_x))
        out.append(QuaObject(Q, A, fx.random_relation(Q, A, self.lat, self._r(), p_bottom=0.2)))
        return out

    def objects(self, category):
        category = C(category)
        return {
            C.LSPACEFP: self.partitions,
            C.LFTRANS: self.systems,
            C.LFPRTOP: self.pretopologies + self.non_induced,
            C.LFCINT: self.interiors + [interior_from_pretopology(S) for S in self.non_induced],
            C.QUA: self.qua_objects,
        }[category]

    # morphisms -------------------------------------------------------------

    def _crisp_images(self, category, A, B, limit=2):
        crisp = {C.LSPACEFP: C.SPACEFP, C.LFTRANS: C.FTRANS, C.LFPRTOP: C.FPRTOP, C.LFCINT: C.CINT}.get(category)
        if crisp is None:
            return []
        return [crisp_to_pair(c) for c in fx.crisp_morphisms(A, B, crisp, self.budget, limit=limit)]

    def _hom(self, category, objs):
        hom = {}
        for i, A in enumerate(objs):
            for k, B in enumerate(objs):
                ms = [identity(A, category)] if i == k else []
                ms += self._crisp_images(category, A, B)
                ms += [
                    fx.random_morphism(A, B, category, self._r(), budget=self.budget)
                    for _ in range(self.config.random_per_pair)
                ]
                hom[i, k] = ms
        return hom

    @cached_property
    def _homs(self):
        return {}

    def hom(self, category):
        category = C(category)
        if category not in self._homs:
            self._homs[category] = self._hom(category, self.objects(category))
        return self._homs[category]

    def morphisms(self, category, induced_only=False):
        objs = self.objects(category)
        n_induced = len(self.partitions)
        out = []
        for (i, k), ms in sorted(self.hom(category).items()):
            if induced_only and (i >= n_induced or k >= n_induced):
                continue
            out.extend(ms)
        return out

    def composable(self, category, n=None, induced_only=False):
        n = n or self.config.composable
        hom = self.hom(category)
        size = len(self.objects(category))
        if induced_only:
            size = min(size, len(self.partitions))
        triples = list(itertools.product(range(size), repeat=3))
        rng = np.random.default_rng(self.config.seed + 1)
        pairs = []
        for i, k, l in triples:
            for p in hom[i, k]:
                for q in hom[k, l]:
                    pairs.append((p, q))
        if len(pairs) > n:
            pick = rng.choice(len(pairs), size=n, replace=False)
            pairs = [pairs[j] for j in sorted(pick)]
        return pairs

    def crisp(self, crisp_category, limit=2):
        rel = {C.SPACEFP: C.LSPACEFP, C.FTRANS: C.LFTRANS, C.FPRTOP: C.LFPRTOP, C.CINT: C.LFCINT}[crisp_category]
        objs = self.objects(rel)[: len(self.partitions)]
        out = {}
        for i, A in enumerate(objs):
            for k, B in enumerate(objs):
                out[i, k] = fx.crisp_morphisms(A, B, crisp_category, self.budget, limit=limit)
        return objs, out

    def crisp_composable(self, crisp_category, n=40):
        objs, hom = self.crisp(crisp_category)
        pairs = []
        for i, k, l in itertools.product(range(len(objs)), repeat=3):
            for p in hom[i, k]:
                for q in hom[k, l]:
                    pairs.append((p, q))
        rng = np.random.default_rng(self.config.seed + 2)
        if len(pairs) > n:
            pairs = [pairs[j] for j in sorted(rng.choice(len(pairs), size=n, replace=False))]
        return pairs


# --- helpers ---------------------------------------------------------------


def _all_pass(report, name, reports):
    """Fold many sub-reports into one check holding the first failure."""
    witness, exhaustive, count = None, True, 0
    for i, r in enumerate(reports):
        count += 1
        exhaustive &= r.exhaustive
        if not r.passed and witness is None:
            fail = r.failures[0]
            witness = {"sample": i, "subject": r.subject, "check": fail.name, "witness": fail.witness}
    report.add(name, witness is None, witness, exhaustive=exhaustive, note=f"{count} samples")


def _cfg(fx_: Fixtures):
    return dict(budget=fx_.budget, samples=fx_.config.samples, seed=fx_.config.seed)


# --- suites ----------------------------------------------------------------


def suite_lattice(fx_: Fixtures) -> ValidationReport:
    lat = fx_.lat
    report = ValidationReport(f"lattice-laws on {lat.name}")
    with timed(report):
        report.extend(validate_lattice(lat))
        a, b = np.arange(lat.size)[:, None], np.arange(lat.size)[None, :]
        bad = np.argwhere(~lat.leq[lat.star[a, b], lat.meet[a, b]])
        report.add("a*b <= a meet b", not len(bad), {"a": str(bad[0][0]), "b": str(bad[0][1])} if len(bad) else None)
        bad = np.argwhere(~lat.leq[lat.join[a, b], lat.hash[a, b]])
        report.add("a join b <= a#b", not len(bad), {"a": str(bad[0][0]), "b": str(bad[0][1])} if len(bad) else None)
        witness = None
        if lat.size <= 12:
            for r in range(lat.size + 1):
                for sub in itertools.combinations(range(lat.size), r):
                    s = np.array(sub, dtype=np.intp)
                    if lat.meet_reduce(lat.neg[s]) != lat.neg[lat.join_reduce(s)] or lat.join_reduce(
                        lat.neg[s]
                    ) != lat.neg[lat.meet_reduce(s)]:
                        witness = {"subset": [lat.labels[i] for i in sub]}
                        break
                if witness:
                    break
        report.add("De Morgan over all subsets", witness is None, witness)
    return report


def suite_contravariance(fx_: Fixtures, pairs: int = 100) -> ValidationReport:
    lat, m = fx_.lat, fx_.config.max_x
    rng = np.random.default_rng(fx_.config.seed)
    report = ValidationReport("backward powerset contravariance")
    with timed(report):
        witness, exhaustive = None, True
        for t in range(pairs):
            n1, n2 = rng.integers(1, m + 1, size=2)
            X1, X2, X3 = finite_set("X1", int(n1)), finite_set("X2", int(n2)), finite_set("X3", m)
            psi = fx.random_relation(X1, X2, lat, rng)
            psi2 = fx.random_relation(X2, X3, lat, rng)
            G, ex = FunctionSpace(X3, lat).quantifier(fx_.budget, fx_.config.samples, fx_.config.seed)
            exhaustive &= ex
            lhs = backward_matrix(lat, compose_sup_star(psi, psi2).entries, G)
            rhs = backward_matrix(lat, psi.entries, backward_matrix(lat, psi2.entries, G))
            bad = np.argwhere(lhs != rhs)
            if len(bad) and witness is None:
                witness = {"pair": t, "psi": psi.labels(), "psi'": psi2.labels(), "g": [lat.labels[v] for v in G[bad[0][0]]]}
        report.add("(psi' o psi)<- = psi<- . psi'<-", witness is None, witness, exhaustive=exhaustive, note=f"{pairs} pairs")
    return report


def suite_ftransform(fx_: Fixtures, count: int = 20) -> ValidationReport:
    lat, m = fx_.lat, fx_.config.max_x
    rng = np.random.default_rng(fx_.config.seed)
    X = finite_set("X", m)
    report = ValidationReport("F-transform properties (i)-(iv)")
    with timed(report):
        reps = []
        for _ in range(count):
            J = finite_set("J", int(rng.integers(1, m + 1)))
            P = fx.random_partition(X, J, lat, rng)
            reps.append(check_ftransform_properties(P, **_cfg(fx_)))
        for P in fx_.partitions:
            reps.append(check_ftransform_properties(P, **_cfg(fx_)))
        _all_pass(report, "properties (i)-(iv) on random and named partitions", reps)
    return report


def suite_lts(fx_: Fixtures) -> ValidationReport:
    report = ValidationReport("partitions and lower transformation systems")
    with timed(report):
        _all_pass(report, "H_pi is a lower transformation system", [validate_lts(H, **_cfg(fx_)) for H in fx_.systems])
        bad = next((i for i, P in enumerate(fx_.partitions) if partition_from_lts(lts_from_partition(P)) != P), None)
        report.add("pi_(H_pi) = pi", bad is None, {"sample": bad})
        bad = next((i for i, H in enumerate(fx_.systems) if lts_from_partition(partition_from_lts(H)) != H), None)
        report.add("H_(pi_H) = H", bad is None, {"sample": bad})
        bad = None
        for i, P in enumerate(fx_.partitions):
            G = FunctionSpace(P.X, P.lattice).all(fx_.budget)
            if not np.array_equal(lts_matrix(lts_from_partition(P), G), ftransform_matrix(P, G)):
                bad = {"sample": i}
                break
        report.add("H_pi(f) = F-transform of f for every f", bad is None, bad)
    return report


def _closure(category, induced_only=False):
    def suite(fx_: Fixtures) -> ValidationReport:
        report = ValidationReport(f"composition closure in {category}")
        with timed(report):
            pairs = fx_.composable(category, induced_only=induced_only)
            _all_pass(report, "factors are morphisms", [check_morphism(m, **_cfg(fx_)) for pq in pairs for m in pq])
            _all_pass(report, "composites are morphisms", [check_morphism(compose(p, q), **_cfg(fx_)) for p, q in pairs])
            objs = fx_.objects(category)
            bad = None
            for i, (p, q) in enumerate(pairs[:20]):
                t = objs.index(q.target)
                for r in fx_.hom(category)[t, (t + i) % len(objs)][-1:]:
                    if compose(compose(p, q), r) != compose(p, compose(q, r)):
                        bad = {"sample": i, "p": repr(p)}
            report.add("associativity", bad is None, bad)
            bad = None
            for p, _ in pairs:
                if compose(identity(p.source, category), p) != p or compose(p, identity(p.target, category)) != p:
                    bad = {"p": repr(p)}
                    break
            report.add("identity laws", bad is None, bad, note=f"{len(pairs)} composable pairs")
        return report

    return suite


def _iso(fid, inv, crisp_category=None):
    def suite(fx_: Fixtures) -> ValidationReport:
        fid_, inv_ = FunctorId(fid), FunctorId(inv)
        if crisp_category is not None:
            objs, hom = fx_.crisp(crisp_category)
            mors = [m for ms in hom.values() for m in ms]
            back = [apply_functor_morphism(fid_, m, fx_.budget) for m in mors]
            return check_isomorphism(fid_, inv_, objs, mors, objs, back, budget=fx_.budget)
        cat = fid_.source
        objs = fx_.objects(cat)[: len(fx_.partitions)]
        mors = fx_.morphisms(cat, induced_only=True)
        objs_b = [apply_functor_object(fid_, o, fx_.budget) for o in objs]
        mors_b = [apply_functor_morphism(fid_, m, fx_.budget) for m in mors]
        return check_isomorphism(fid_, inv_, objs, mors, objs_b, mors_b, budget=fx_.budget)

    return suite


def suite_functor_laws(fx_: Fixtures) -> ValidationReport:
    report = ValidationReport("functor laws")
    with timed(report):
        for fid in (F.F3, F.F3P, F.F6, F.F6P):
            cat = fid.source
            report.extend(
                check_functor_laws(
                    fid,
                    fx_.objects(cat)[: len(fx_.partitions)],
                    fx_.composable(cat, n=20, induced_only=True),
                    budget=fx_.budget,
                ),
                prefix=f"{fid}: ",
            )
        for fid, crisp in ((F.F1, C.SPACEFP), (F.F2, C.FTRANS), (F.F4, C.FPRTOP), (F.F5, C.CINT)):
            objs, _ = fx_.crisp(crisp)
            pairs = fx_.crisp_composable(crisp, n=20)
            report.extend(check_functor_laws(fid, objs, pairs, budget=fx_.budget), prefix=f"{fid}: ")
        for fid, cat in ((F.F1P, C.LSPACEFP), (F.F2P, C.LFTRANS), (F.F4P, C.LFPRTOP), (F.F5P, C.LFCINT)):
            crisp = fid.target
            objs, _ = fx_.crisp(crisp)
            pairs = [
                (apply_functor_morphism(FunctorId(fid.value[:-1]), p), apply_functor_morphism(FunctorId(fid.value[:-1]), q))
                for p, q in fx_.crisp_composable(crisp, n=20)
            ]
            report.extend(check_functor_laws(fid, objs, pairs, budget=fx_.budget), prefix=f"{fid}: ")
    return report


def suite_transfer(fx_: Fixtures) -> ValidationReport:
    """F7..F10 map morphisms to morphisms and preserve composition.

    They preserve identities only when every core is a single point; that
    restriction is applied to the identity check here.
    """
    report = ValidationReport("morphism transfer F7, F8, F9, F10")
    with timed(report):
        singleton = [P for P in fx_.partitions if len(P.J) == len(P.X)]
        for fid in (F.F7, F.F9, F.F8, F.F10):
            src = fid.source
            objs = singleton if src == C.LSPACEFP else [lts_from_partition(P) for P in singleton]
            report.extend(
                check_functor_laws(
                    fid,
                    objs,
                    fx_.composable(src, n=30, induced_only=True),
                    morphisms=fx_.morphisms(src, induced_only=True),
                    budget=fx_.budget,
                ),
                prefix=f"{fid}: ",
            )
    return report


def _qua_embed(category):
    def suite(fx_: Fixtures) -> ValidationReport:
        report = ValidationReport(f"Qua embedding of {category}")
        with timed(report):
            mors = fx_.morphisms(category, induced_only=True)
            _all_pass(report, f"{category} morphisms", [check_morphism(m, **_cfg(fx_)) for m in mors])
            _all_pass(report, "embedded pairs are Qua morphisms", [check_morphism(embed_qua_morphism(m)) for m in mors])
        return report

    return suite


def suite_fig2(fx_: Fixtures) -> ValidationReport:
    return check_diagram_fig2(
        fx_.partitions,
        fx_.morphisms(C.LSPACEFP, induced_only=True),
        fx_.systems,
        fx_.morphisms(C.LFTRANS, induced_only=True),
        budget=fx_.budget,
    )


def suite_adjunction_f3(fx_: Fixtures) -> ValidationReport:
    Ps = fx_.partitions
    mors = fx_.morphisms(C.LSPACEFP, induced_only=True)
    into = [(m, lts_from_partition(m.target)) for m in mors]
    candidates = [(m.source, apply_functor_morphism(F.F3, m)) for m in mors]
    return check_adjunction("F3-F3'", Ps, mors, into, candidates, budget=fx_.budget)


def suite_adjunction_f6(fx_: Fixtures) -> ValidationReport:
    Ss = fx_.objects(C.LFPRTOP)
    mors = fx_.morphisms(C.LFPRTOP)
    into = [(m, interior_from_pretopology(m.target)) for m in mors]
    candidates = [(m.source, apply_functor_morphism(F.F6, m)) for m in mors]
    return check_adjunction("F6-F6'", Ss, mors, into, candidates, budget=fx_.budget)


def suite_structures(fx_: Fixtures) -> ValidationReport:
    report = ValidationReport("pretopologies and interiors")
    with timed(report):
        _all_pass(report, "Sigma_pi are pretopologies", [validate_pretopology(S, fx_.budget) for S in fx_.objects(C.LFPRTOP)])
        _all_pass(report, "I_pi are interiors", [validate_interior(I, fx_.budget) for I in fx_.objects(C.LFCINT)])
        bad = next(
            (i for i, S in enumerate(fx_.objects(C.LFPRTOP)) if pretopology_from_interior(interior_from_pretopology(S)) != S),
            None,
        )
        report.add("Sigma_(I_Sigma) = Sigma", bad is None, {"sample": bad})
        bad = next(
            (i for i, I in enumerate(fx_.objects(C.LFCINT)) if interior_from_pretopology(pretopology_from_interior(I)) != I),
            None,
        )
        report.add("I_(Sigma_I) = I", bad is None, {"sample": bad})
        bad = next(
            (i for i, (S, I) in enumerate(zip(fx_.pretopologies, fx_.interiors)) if interior_from_pretopology(S) != I),
            None,
        )
        report.add("I_(Sigma_pi) = I_pi", bad is None, {"sample": bad})
    return report


SUITES: dict[str, Callable[[Fixtures], ValidationReport]] = {
    "lattice-laws": suite_lattice,
    "prop-powerset-contravariance": suite_contravariance,
    "prop-ftransform-properties": suite_ftransform,
    "prop-lts-construction": suite_lts,
    "prop-topology-construction": suite_structures,
    "prop-qua-composition": _closure(C.QUA),
    "prop-3-composition": _closure(C.LSPACEFP),
    "prop-3-lts-composition": _closure(C.LFTRANS),
    "prop-4-composition": _closure(C.LFPRTOP),
    "prop-4-interior-composition": _closure(C.LFCINT),
    "prop-iso-f1": _iso("F1", "F1'", C.SPACEFP),
    "prop-iso-f2": _iso("F2", "F2'", C.FTRANS),
    "prop-iso-f3": _iso("F3", "F3'"),
    "prop-iso-f4": _iso("F4", "F4'", C.FPRTOP),
    "prop-iso-f5": _iso("F5", "F5'", C.CINT),
    "prop-iso-f6": _iso("F6", "F6'"),
    "prop-functor-laws": suite_functor_laws,
    "prop-transfer": suite_transfer,
    "prop-qua-embed-partition": _qua_embed(C.LSPACEFP),
    "prop-qua-embed-lts": _qua_embed(C.LFTRANS),
    "prop-qua-embed-pretop": _qua_embed(C.LFPRTOP),
    "prop-qua-embed-interior": _qua_embed(C.LFCINT),
    "prop-fig2": suite_fig2,
    "prop-adjunction-f3": suite_adjunction_f3,
    "prop-adjunction-f6": suite_adjunction_f6,
}


def resolve(ids) -> list[str]:
    out = []
    for i in ids:
        if i == "all":
            out.extend(SUITES)
        elif i in SUITES:
            out.append(i)
        else:
            raise InvalidArgument(f"unknown suite {i!r}; known: all, {', '.join(sorted(SUITES))}")
    return sorted(set(out))


def run_suites(ids, config: SuiteConfig | None = None) -> list[tuple[str, ValidationReport]]:
    config = config or SuiteConfig()
    fixtures = Fixtures(config)
    return [(sid, SUITES[sid](fixtures)) for sid in resolve(ids)]
