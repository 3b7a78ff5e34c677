"""Acceptance criteria 1-10, one test each; every test prints a single PASS/FAIL line.

The lines are repeated in the pytest terminal summary; executing this file
directly prints them alone.
"""

from __future__ import annotations

import contextlib
import io
import json
import sys
import time
from functools import lru_cache
from pathlib import Path

import numpy as np
import pytest

from fuzzycat.category import Category, MorphismPair, check_morphism, compose, identity
from fuzzycat.cli import main as cli
from fuzzycat.errors import CrispnessViolation
from fuzzycat.fixtures import random_morphism
from fuzzycat.functors import FunctorId as F
from fuzzycat.functors import apply_functor_morphism, check_adjunction
from fuzzycat.fuzzy import FuzzyRelation
from fuzzycat.io import lattice_to_json, lattice_from_json, parse_lattice_spec
from fuzzycat.lattice import make_lukasiewicz_chain, validate_lattice
from fuzzycat.suites import SUITES, Fixtures, SuiteConfig, suite_contravariance, suite_ftransform
from fuzzycat.systems import lts_from_partition

DATA = Path(__file__).resolve().parents[1] / "demos" / "data"
LATTICES = ("luk:2", "luk:3", "luk:5")


@lru_cache(maxsize=None)
def fixtures(spec: str, seed: int = 0) -> Fixtures:
    return Fixtures(SuiteConfig(lattice=parse_lattice_spec(spec), seed=seed))


def report_line(n, title: str, ok: bool, detail: str = "", sink=None):
    tag = f"criterion {n:>2}" if isinstance(n, int) else f"{n:<12}"
    line = f"{tag} {'PASS' if ok else 'FAIL'}  {title}" + (f"  ({detail})" if detail else "")
    print(line)
    if sink is not None:
        sink.append(line)
    return ok


@pytest.fixture
def sink(pytestconfig):
    """Lines collected here are repeated in the terminal summary."""
    if not hasattr(pytestconfig, "acceptance_lines"):
        pytestconfig.acceptance_lines = []
    return pytestconfig.acceptance_lines


def run_suites_on(ids, lattices=LATTICES):
    failures, checks = [], 0
    for spec in lattices:
        fx = fixtures(spec)
        for sid in ids:
            r = SUITES[sid](fx)
            checks += len(r.checks)
            if not r.passed or not r.exhaustive:
                failures.append(f"{spec} {sid}: {r.failures[0].name if r.failures else 'sampled'}")
    return failures, checks


# --- criteria ----------------------------------------------------------------


def criterion_1():
    bad = []
    for n in (1, 2, 4):
        r = validate_lattice(make_lukasiewicz_chain(n))
        if not (r.passed and r.exhaustive):
            bad.append(f"|L|={n + 1}")
    doc = lattice_to_json(make_lukasiewicz_chain(4))
    doc["star"][2][3] = "1/2"
    mutated = validate_lattice(lattice_from_json(doc))
    flagged = not mutated.passed and all(c.witness for c in mutated.failures)
    return not bad and flagged, f"chains 2/3/5 exhaustive, mutation flagged at {mutated.failures[0].witness}"


def criterion_2():
    fx = fixtures("luk:5")
    r = suite_contravariance(fx, pairs=100)
    return r.passed and r.exhaustive, "100 pairs, 125 functions each"


def criterion_3():
    fx = Fixtures(SuiteConfig(lattice=parse_lattice_spec("luk:3"), max_x=3))
    r = suite_ftransform(fx, count=20)
    return r.passed and r.exhaustive, "20 partitions, 27 functions"


def criterion_4():
    bad, counts = [], {}
    for spec in LATTICES:
        fx = fixtures(spec)
        for cat in ("Qua", "LSpaceFP", "LFtrans", "LFPrTop", "LFCInt"):
            pairs = fx.composable(cat)
            counts[cat] = min(counts.get(cat, 10**9), len(pairs))
            sources = {m.backward == identity(m.source, cat).backward for pq in pairs for m in pq}
            if len(pairs) < 50 or len(sources) < 2:
                bad.append(f"{spec} {cat}: {len(pairs)} pairs")
                continue
            for p, q in pairs:
                if not (check_morphism(p).passed and check_morphism(q).passed and check_morphism(compose(p, q)).passed):
                    bad.append(f"{spec} {cat}")
                    break
    return not bad, f"min pairs per category {min(counts.values())}" + (f"; {bad}" if bad else "")


def criterion_5():
    ids = [f"prop-iso-f{i}" for i in range(1, 7)] + ["prop-lts-construction", "prop-topology-construction"]
    bad, checks = run_suites_on(ids)
    return not bad, f"{checks} checks" + (f"; {bad}" if bad else "")


def criterion_6():
    bad, checks = run_suites_on(["prop-qua-embed-partition", "prop-qua-embed-pretop"])
    return not bad, f"{checks} checks" + (f"; {bad}" if bad else "")


def criterion_7():
    bad, n = [], 0
    for spec in LATTICES:
        fx = fixtures(spec)
        for m in fx.morphisms(Category.LSPACEFP, induced_only=True):
            for fid in (F.F7, F.F9):
                r = check_morphism(apply_functor_morphism(fid, m, fx.budget), budget=fx.budget)
                n += 1
                if not (r.passed and r.exhaustive):
                    bad.append(f"{spec} {fid}")
    return not bad, f"{n} transferred pairs, exhaustive"


def criterion_8():
    bad, checks = run_suites_on(["prop-fig2"])
    return not bad, f"{checks} checks" + (f"; {bad}" if bad else "")


def criterion_9():
    bad, checks = run_suites_on(["prop-adjunction-f3", "prop-adjunction-f6"])
    return not bad, f"{checks} checks" + (f"; {bad}" if bad else "")


def _quiet_cli(*argv):
    with contextlib.redirect_stdout(io.StringIO()) as out, contextlib.redirect_stderr(io.StringIO()):
        code = cli([str(a) for a in argv])
    return code, out.getvalue()


def criterion_10():
    results = {}
    code, _ = _quiet_cli("validate", "--kind", "lattice", DATA / "broken_lattice.json")
    results["broken lattice cell"] = code == 1
    code, out = _quiet_cli("validate", "--kind", "partition", DATA / "broken.json", "--json")
    results["non-partition membership"] = code == 1 and '"x": "x2"' in out
    code, out = _quiet_cli("validate", "--kind", "lts", DATA / "offgraph_lts.json", "--json")
    doc = json.loads(out)
    results["off-graph kernel 1"] = code == 1 and any(c.get("witness") == {"y": "j2", "x": "x1"} for c in doc["checks"])

    fx = fixtures("luk:5")
    P = fx.partitions[0]
    m = random_morphism(P, P, Category.LSPACEFP, 1)
    try:
        apply_functor_morphism(F.F1P, m)
        results["non-crisp pair to a prime functor"] = False
    except CrispnessViolation as exc:
        results["non-crisp pair to a prime functor"] = bool(str(exc))

    def unit(A):
        idm = identity(A)
        E = np.array(idm.forward.entries)
        E[0, -1] = A.lattice.top
        return MorphismPair(FuzzyRelation(idm.forward.source, idm.forward.target, E, A.lattice), idm.backward, idm.category, A, A)

    big = [P for P in fx.partitions if len(P.X) > 1]
    mors = [m for m in fx.morphisms(Category.LSPACEFP, induced_only=True) if len(m.source.X) > 1]
    r = check_adjunction("F3-F3'", big, mors, [(m, lts_from_partition(m.target)) for m in mors], unit=unit)
    tri = r.get("triangle F'(k) . unit = m")
    results["perturbed unit"] = not tri.passed and bool(tri.witness)
    bad = [k for k, ok in results.items() if not ok]
    return not bad, f"{len(results)} controls" + (f"; failed: {bad}" if bad else "")


CRITERIA = [
    (1, "lattice laws on L2/L3/L5 and a mutated table", criterion_1),
    (2, "backward powerset contravariance", criterion_2),
    (3, "F-transform properties (i)-(iv)", criterion_3),
    (4, "composition closure in five categories", criterion_4),
    (5, "isomorphism and structure round trips", criterion_5),
    (6, "Qua embeddings of FP-maps and pretopology morphisms", criterion_6),
    (7, "morphism transfer F7/F9", criterion_7),
    (8, "square diagram commutes", criterion_8),
    (9, "adjunction triangles and unit naturality", criterion_9),
    (10, "negative controls", criterion_10),
]


@pytest.mark.parametrize("n,title,fn", CRITERIA, ids=[f"criterion_{n}" for n, _, _ in CRITERIA])
def test_criterion(n, title, fn, sink):
    ok, detail = fn()
    report_line(n, title, ok, detail, sink)
    assert ok, detail


def test_total_runtime_under_a_minute(sink):
    start = time.perf_counter()
    code, _ = _quiet_cli("check", "--suite", "all", "--lattice", "luk:3", "--max-x", "3")
    elapsed = time.perf_counter() - start
    report_line("runtime", "check --suite all on luk:3 under 60 s", code == 0 and elapsed < 60, f"{elapsed:.1f}s", sink)
    assert code == 0 and elapsed < 60


if __name__ == "__main__":
    results = [report_line(n, title, *fn()) for n, title, fn in CRITERIA]
    sys.exit(0 if all(results) else 1)
