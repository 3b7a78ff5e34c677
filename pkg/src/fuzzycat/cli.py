"""Command-line front end: ``fuzzycat validate | transform | check``.

Exit codes: 0 pass, 1 checked and failed, 2 usage, parse or budget error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

import numpy as np

from .category import check_morphism
from .errors import FuzzyCatError, InvalidArgument, QuantifierBudgetError
from .fuzzy import DEFAULT_BUDGET, FuzzySet
from .io import ParseError, load_json, object_from_json, parse_lattice_spec, structure_from_json
from .lattice import validate_lattice
from .partition import FuzzyPartition, lower_ftransform, validate_partition
from .report import ValidationReport
from .suites import SUITES, SuiteConfig, resolve, run_suites
from .systems import LowerTransformationSystem, apply_lts, lts_from_partition, validate_lts
from .topology import (
    CechInterior,
    Pretopology,
    interior_from_partition,
    interior_from_pretopology,
    pretopology_from_interior,
    pretopology_from_lts,
    pretopology_from_partition,
    validate_interior,
    validate_pretopology,
)

OK, FAILED, USAGE = 0, 1, 2
KINDS = ("lattice", "partition", "lts", "pretopology", "interior", "morphism")


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--lattice", help="lattice shorthand luk:n (n elements), used when the file has none")
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="largest |L|^|X| to enumerate")
    common.add_argument("--samples", type=int, default=None, help="sample this many functions past the budget")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--json", action="store_true", help="print the report as JSON")

    p = argparse.ArgumentParser(prog="fuzzycat", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("validate", parents=[common], help="validate a structure file")
    v.add_argument("--kind", choices=KINDS, required=True)
    v.add_argument("path")

    t = sub.add_parser("transform", parents=[common], help="apply a construction to a fuzzy set")
    t.add_argument("--what", choices=("fdown", "lts", "pretop", "interior"), required=True)
    t.add_argument("--f", required=True, help='comma separated values, e.g. "1/2,3/4,1/4"')
    t.add_argument("path")

    c = sub.add_parser("check", parents=[common], help="run proposition suites")
    c.add_argument("--suite", action="append", required=True, help=f"suite id or 'all'; one of {', '.join(sorted(SUITES))}")
    c.add_argument("--max-x", type=int, default=3, help="largest carrier size in fixtures")
    return p


def _lattice(args):
    return parse_lattice_spec(args.lattice) if args.lattice else None


def _emit(args, reports: list[ValidationReport], out) -> int:
    if args.json:
        docs = [r.to_dict() for r in reports]
        print(json.dumps(docs[0] if len(docs) == 1 else docs, indent=2, ensure_ascii=False), file=out)
    else:
        for r in reports:
            print(r, file=out)
    return OK if all(r.passed for r in reports) else FAILED


# --- validate ----------------------------------------------------------------


def cmd_validate(args, out=None) -> int:
    out = out or sys.stdout
    doc = load_json(args.path)
    obj = structure_from_json(doc, args.kind, _lattice(args))
    if args.kind == "lattice":
        report = validate_lattice(obj)
    elif args.kind == "partition":
        report = validate_partition(obj)
    elif args.kind == "lts":
        report = validate_lts(obj, args.budget, args.samples, args.seed)
    elif args.kind == "pretopology":
        report = validate_pretopology(obj, args.budget)
    elif args.kind == "interior":
        report = validate_interior(obj, args.budget)
    else:
        report = check_morphism(obj, budget=args.budget, samples=args.samples, seed=args.seed)
    return _emit(args, [report], out)


# --- transform ---------------------------------------------------------------


def _parse_values(text: str, lat) -> list[int]:
    items = [s for s in text.replace("[", "").replace("]", "").split(",") if s.strip()]
    return [lat.element(s) for s in items]


def _pretopology(obj, budget):
    if isinstance(obj, Pretopology):
        return obj
    if isinstance(obj, CechInterior):
        return pretopology_from_interior(obj)
    if isinstance(obj, FuzzyPartition):
        return pretopology_from_partition(obj.require_valid(), budget)
    if isinstance(obj, LowerTransformationSystem):
        return pretopology_from_lts(obj, budget)
    raise InvalidArgument(f"cannot build a pretopology from a {type(obj).__name__}")


def cmd_transform(args, out=None) -> int:
    out = out or sys.stdout
    doc = load_json(args.path)
    obj = object_from_json(doc, _lattice(args))
    lat = obj.lattice
    values = _parse_values(args.f, lat)
    X = obj.X if not hasattr(obj, "questions") else None
    if X is None:
        raise InvalidArgument("transform needs a partition, system, pretopology or interior")
    if len(values) != len(X):
        print(f"axis mismatch: f has {len(values)} values but {X.name} has {len(X)} points", file=sys.stderr)
        return FAILED
    f = FuzzySet(X, np.array(values, dtype=np.intp), lat)

    if args.what == "fdown":
        if not isinstance(obj, FuzzyPartition):
            raise InvalidArgument("fdown needs a partition")
        result = lower_ftransform(obj.require_valid(), f)
    elif args.what == "lts":
        if isinstance(obj, FuzzyPartition):
            obj = lts_from_partition(obj)
        if not isinstance(obj, LowerTransformationSystem):
            raise InvalidArgument("lts needs a partition or a system")
        result = apply_lts(obj, f)
    elif args.what == "pretop":
        result = _pretopology(obj, args.budget)(f)
    else:
        I = obj if isinstance(obj, CechInterior) else None
        if I is None and isinstance(obj, FuzzyPartition):
            I = interior_from_partition(obj.require_valid(), args.budget)
        I = I or interior_from_pretopology(_pretopology(obj, args.budget))
        result = I(f)

    labels = result.labels()
    if args.json:
        print(json.dumps({"domain": list(result.domain.elements), "values": labels}), file=out)
    else:
        print("[" + ", ".join(labels) + "]", file=out)
    return OK


# --- check -------------------------------------------------------------------


def cmd_check(args, out=None) -> int:
    out = out or sys.stdout
    ids = resolve([s for arg in args.suite for s in arg.split(",") if s])
    lat = _lattice(args) or parse_lattice_spec("luk:3")
    config = SuiteConfig(lattice=lat, budget=args.budget, samples=args.samples, seed=args.seed, max_x=args.max_x)
    start = time.perf_counter()
    results = run_suites(ids, config)
    elapsed = time.perf_counter() - start
    if args.json:
        doc = {
            "lattice": lat.name,
            "seed": args.seed,
            "elapsed": elapsed,
            "passed": all(r.passed for _, r in results),
            "suites": {sid: r.to_dict() for sid, r in results},
        }
        print(json.dumps(doc, indent=2, ensure_ascii=False), file=out)
    else:
        width = max(len(sid) for sid, _ in results)
        for sid, r in results:
            status = "PASS" if r.passed else "FAIL"
            mode = "exhaustive" if r.exhaustive else "sampled"
            print(f"{sid:<{width}}  {status}  {len(r.checks):>3} checks  {mode:<10}  {r.elapsed:6.2f}s", file=out)
            for c in r.failures:
                print(f"    FAIL {c.name}: {json.dumps(c.witness, default=str)}", file=out)
        print(f"{sum(r.passed for _, r in results)}/{len(results)} suites passed on {lat.name} in {elapsed:.2f}s", file=out)
    return OK if all(r.passed for _, r in results) else FAILED


COMMANDS = {"validate": cmd_validate, "transform": cmd_transform, "check": cmd_check}


def main(argv=None) -> int:
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0) and USAGE
    try:
        if getattr(args, "budget", 1) < 1:
            raise InvalidArgument("--budget must be >= 1")
        return COMMANDS[args.command](args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
    except QuantifierBudgetError as exc:
        print(f"budget error: {exc}", file=sys.stderr)
    except (InvalidArgument, FuzzyCatError) as exc:
        print(f"error: {exc}", file=sys.stderr)
    return USAGE


if __name__ == "__main__":
    sys.exit(main())
