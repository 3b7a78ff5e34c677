import numpy as np
import pytest

from fuzzycat.category import (
    Category,
    CrispMorphism,
    MorphismPair,
    check_crisp_morphism,
    check_morphism,
    compose,
    crisp_to_pair,
    identity,
)
from fuzzycat.errors import CrispnessViolation, InvalidArgument
from fuzzycat.fixtures import (
    all_maps,
    crisp_morphisms,
    one_block_partition,
    random_morphism,
    random_partition,
    singleton_partition,
)
from fuzzycat.functors import (
    FunctorId as F,
    apply_functor_morphism,
    apply_functor_object,
    check_adjunction,
    check_diagram_fig2,
    check_functor_laws,
    check_isomorphism,
    transfer_backward,
)
from fuzzycat.fuzzy import FuzzyRelation, FuzzySet, finite_set
from fuzzycat.lattice import make_lukasiewicz_chain
from fuzzycat.systems import lts_from_partition
from fuzzycat.topology import interior_from_pretopology, pretopology_from_partition

L3, L5 = make_lukasiewicz_chain(2), make_lukasiewicz_chain(4)
X, Z = finite_set("X", 3), finite_set("Z", 2)


@pytest.fixture(scope="module")
def partitions():
    return [
        random_partition(X, finite_set("J", 2), L3, 5),
        one_block_partition(Z, L3),
        singleton_partition(Z, L3, fuzzy_seed=2),
        singleton_partition(X, L3),
    ]


@pytest.fixture(scope="module")
def fp_maps(partitions):
    rng = np.random.default_rng(0)
    out = [identity(P) for P in partitions]
    for A in partitions:
        for B in partitions:
            out.append(random_morphism(A, B, Category.LSPACEFP, rng))
    return out


def composable(ms):
    return [(p, q) for p in ms for q in ms if p.target == q.source][:60]


def test_signatures():
    assert (F.F3.source, F.F3.target) == (Category.LSPACEFP, Category.LFTRANS)
    assert (F.F8.source, F.F8.target) == (Category.LFTRANS, Category.LFPRTOP)
    assert (F.F1P.source, F.F1P.target) == (Category.LSPACEFP, Category.SPACEFP)
    assert str(F.F6P) == "F6'"


def test_wrong_source_is_refused(partitions):
    with pytest.raises(InvalidArgument):
        apply_functor_object(F.F3P, partitions[0])


def test_f3_laws_and_round_trip(partitions, fp_maps):
    assert check_functor_laws(F.F3, partitions, composable(fp_maps), fp_maps).passed
    systems = [apply_functor_object(F.F3, P) for P in partitions]
    back = [apply_functor_morphism(F.F3, m) for m in fp_maps]
    assert check_isomorphism(F.F3, F.F3P, partitions, fp_maps, systems, back).passed


def test_f6_laws_and_round_trip(partitions):
    Ss = [pretopology_from_partition(P) for P in partitions]
    rng = np.random.default_rng(1)
    ms = [random_morphism(A, B, Category.LFPRTOP, rng) for A in Ss for B in Ss]
    assert check_functor_laws(F.F6, Ss, composable(ms), ms).passed
    Is = [interior_from_pretopology(S) for S in Ss]
    assert check_isomorphism(F.F6, F.F6P, Ss, ms, Is, [apply_functor_morphism(F.F6, m) for m in ms]).passed


def test_mutated_morphism_map_breaks_composition(partitions, fp_maps):
    def bad(m):
        img = apply_functor_morphism(F.F3, m)
        E = np.array(img.forward.entries)
        E[0, 0] = L3.top if E[0, 0] != L3.top else L3.bottom
        return MorphismPair(FuzzyRelation(img.forward.source, img.forward.target, E, L3), img.backward, img.category)

    report = check_functor_laws(F.F3, partitions, composable(fp_maps), morphism_map=bad, validate_images=False)
    assert not report.get("F(q . p) = F(q) . F(p)").passed
    assert report.get("F(q . p) = F(q) . F(p)").witness


def test_transfer_formula(fixture_partition):
    # transferred backward entry for (x2, x1) is mu(xi(x2), xi(x1))
    P = fixture_partition
    p = random_morphism(P, P, Category.LSPACEFP, 3)
    T = transfer_backward(p).entries
    for x2 in range(3):
        for x1 in range(3):
            assert T[x2, x1] == p.backward.entries[P.xi[x2], P.xi[x1]]
    img = apply_functor_morphism(F.F7, p)
    assert img.category == Category.LFPRTOP
    assert check_morphism(img).passed
    assert check_morphism(apply_functor_morphism(F.F9, p)).passed


@pytest.mark.parametrize("fid", [F.F7, F.F9])
def test_transfer_preserves_composition(fid, partitions, fp_maps):
    report = check_functor_laws(fid, [], composable(fp_maps), fp_maps)
    assert report.passed, str(report)


@pytest.mark.parametrize("fid", [F.F7, F.F9, F.F8, F.F10])
def test_transfer_identity_law_needs_singleton_cores(fid, partitions):
    """With a block holding two core points the transferred identity is not the identity."""
    coarse = partitions[0]  # two cores cover three points
    src = coarse if fid.source == Category.LSPACEFP else lts_from_partition(coarse)
    report = check_functor_laws(fid, [src], validate_images=False)
    assert not report.get("F(id_A) = id_F(A)").passed
    fine = singleton_partition(X, L3)
    src = fine if fid.source == Category.LSPACEFP else lts_from_partition(fine)
    assert check_functor_laws(fid, [src]).passed


@pytest.mark.parametrize("fid,crisp", [(F.F1, Category.SPACEFP), (F.F2, Category.FTRANS),
                                        (F.F4, Category.FPRTOP), (F.F5, Category.CINT)])
def test_crisp_functors(fid, crisp, partitions):
    objs = partitions if crisp == Category.SPACEFP else [apply_functor_object(
        {Category.FTRANS: F.F3, Category.FPRTOP: F.F7, Category.CINT: F.F9}[crisp], P) for P in partitions]
    ms = [c for A in objs for B in objs for c in crisp_morphisms(A, B, crisp, limit=2)]
    pairs = [(p, q) for p in ms for q in ms if p.target == q.source][:40]
    assert check_functor_laws(fid, objs, pairs, ms).passed
    images = [apply_functor_morphism(fid, m) for m in ms]
    assert check_isomorphism(fid, F(fid.value + "'"), objs, ms, objs, images).passed


def test_prime_functor_refuses_fuzzy_pair(fixture_partition):
    p = random_morphism(fixture_partition, fixture_partition, Category.LSPACEFP, 0)
    assert not all(np.isin(p.forward.entries, [0, L5.top]).all(axis=1))
    with pytest.raises(CrispnessViolation):
        apply_functor_morphism(F.F1P, p)


def test_f4_round_trip_needs_a_zero_graph(fixture_partition):
    """{0,1}-valued backward relations other than the 0-graph do not come back from F4."""
    S = pretopology_from_partition(fixture_partition)
    idm = identity(S)
    ones = FuzzyRelation(S.X, S.X, np.full((3, 3), L5.top), L5)
    pair = MorphismPair(idm.forward, ones, Category.LFPRTOP, S, S)
    assert check_morphism(pair).passed
    crisp = apply_functor_morphism(F.F4P, pair)
    assert apply_functor_morphism(F.F4, crisp) == idm != pair


def test_f4_prime_can_leave_the_crisp_category(fixture_partition):
    """With an all-1 backward relation any map passes, but not every map is an FPrTop morphism."""
    S = pretopology_from_partition(fixture_partition)
    ones = FuzzyRelation(S.X, S.X, np.full((3, 3), L5.top), L5)
    bad = None
    for zeta in all_maps(S.X, S.X):
        c = CrispMorphism(zeta, None, Category.FPRTOP, S, S)
        if not check_crisp_morphism(c).passed:
            bad = c
            break
    assert bad is not None
    pair = MorphismPair(crisp_to_pair(bad).forward, ones, Category.LFPRTOP, S, S)
    assert check_morphism(pair).passed
    assert not check_crisp_morphism(apply_functor_morphism(F.F4P, pair)).passed


def test_fig2(partitions, fp_maps, fixture_partition):
    systems = [lts_from_partition(P) for P in partitions]
    lts_maps = [apply_functor_morphism(F.F3, m) for m in fp_maps]
    assert check_diagram_fig2(partitions, fp_maps, systems, lts_maps).passed
    a = apply_functor_object(F.F10, apply_functor_object(F.F3, fixture_partition))
    b = apply_functor_object(F.F6, apply_functor_object(F.F7, fixture_partition))
    assert np.array_equal(a.table, b.table)
    f = FuzzySet.from_labels(X, ["1/2", "3/4", "1/4"], L5)
    assert a(f).labels() == ["1/2", "1/2", "1/4"]


def test_adjunction_f3(partitions, fp_maps):
    into = [(m, lts_from_partition(m.target)) for m in fp_maps]
    cands = [(m.source, apply_functor_morphism(F.F3, m)) for m in fp_maps]
    report = check_adjunction("F3-F3'", partitions, fp_maps, into, cands)
    assert report.passed, str(report)


def test_adjunction_f6(partitions):
    Ss = [pretopology_from_partition(P) for P in partitions]
    rng = np.random.default_rng(4)
    ms = [random_morphism(A, B, Category.LFPRTOP, rng) for A in Ss for B in Ss]
    into = [(m, interior_from_pretopology(m.target)) for m in ms]
    cands = [(m.source, apply_functor_morphism(F.F6, m)) for m in ms]
    assert check_adjunction("F6-F6'", Ss, ms, into, cands).passed


def test_perturbed_unit_breaks_the_triangle(partitions, fp_maps):
    def unit(P):
        idm = identity(P)
        E = np.array(idm.forward.entries)
        if E.shape[0] > 1:
            E[0, 1] = L3.top
        return MorphismPair(FuzzyRelation(idm.forward.source, idm.forward.target, E, L3), idm.backward, idm.category, P, P)

    into = [(m, lts_from_partition(m.target)) for m in fp_maps]
    report = check_adjunction("F3-F3'", partitions, fp_maps, into, unit=unit)
    check = report.get("triangle F'(k) . unit = m")
    assert not check.passed and check.witness


def test_unknown_adjunction():
    with pytest.raises(InvalidArgument):
        check_adjunction("F7-F8")
