"""JSON reading and writing. Lattice values are written as carrier labels."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

import numpy as np

from .category import Category, MorphismPair, QuaObject
from .errors import FuzzyCatError, InvalidArgument
from .fuzzy import FiniteSet, FuzzyRelation, FuzzySet, finite_set
from .lattice import Lattice, make_lukasiewicz_chain
from .partition import FuzzyPartition
from .systems import LowerTransformationSystem
from .topology import (
    CechInterior,
    Pretopology,
    interior_from_partition,
    pretopology_from_partition,
)


class ParseError(FuzzyCatError):
    """Malformed input file; the message carries a position when one is known."""


def parse_lattice_spec(text: str) -> Lattice:
    """``luk:n`` is the Łukasiewicz chain with ``n`` elements."""
    kind, _, arg = text.partition(":")
    if kind not in ("luk", "lukasiewicz") or not arg.isdigit():
        raise InvalidArgument(f"lattice spec must look like luk:n, got {text!r}")
    n = int(arg)
    if n < 2:
        raise InvalidArgument("a Łukasiewicz chain needs at least 2 elements")
    return make_lukasiewicz_chain(n - 1)


# --- decoding ---------------------------------------------------------------


def _get(doc: dict, key: str, where: str):
    if not isinstance(doc, dict) or key not in doc:
        raise ParseError(f"{where}: missing key {key!r}")
    return doc[key]


def lattice_from_json(doc) -> Lattice:
    if isinstance(doc, str):
        return parse_lattice_spec(doc)
    kind = _get(doc, "kind", "lattice")
    if kind == "lukasiewicz":
        levels = _get(doc, "levels", "lattice")
        if not isinstance(levels, int) or levels < 2:
            raise ParseError("lattice: 'levels' must be an integer >= 2")
        return make_lukasiewicz_chain(levels - 1)
    if kind == "table":
        labels = _get(doc, "labels", "lattice")
        n = len(labels)
        try:
            idx = {str(l): i for i, l in enumerate(labels)}

            def el(v):
                return idx[str(v)] if not isinstance(v, int) else v

            leq = np.array(_get(doc, "leq", "lattice"), dtype=bool)
            star = np.vectorize(el)(np.array(_get(doc, "star", "lattice"), dtype=object)).astype(np.intp)
            hsh = np.vectorize(el)(np.array(_get(doc, "hash", "lattice"), dtype=object)).astype(np.intp)
            neg = np.array([el(v) for v in _get(doc, "neg", "lattice")], dtype=np.intp)
        except (KeyError, ValueError, TypeError) as exc:
            raise ParseError(f"lattice table: {exc}") from None
        if leq.shape != (n, n) or star.shape != (n, n) or hsh.shape != (n, n) or neg.shape != (n,):
            raise ParseError("lattice table: table shapes do not match the number of labels")
        return Lattice.from_order(labels, leq, star, hsh, neg, name=doc.get("name"))
    raise ParseError(f"lattice: unknown kind {kind!r}")


def set_from_json(doc, default_name: str) -> FiniteSet:
    """A set is ``{"name", "elements"}``, a list of labels, or a size."""
    if isinstance(doc, dict):
        return FiniteSet(str(doc.get("name", default_name)), tuple(_get(doc, "elements", "set")))
    if isinstance(doc, list):
        return FiniteSet(default_name, tuple(doc))
    if isinstance(doc, int):
        return finite_set(default_name, doc)
    if isinstance(doc, str):
        raise ParseError(f"set {doc!r} is named but not defined; give its elements")
    raise ParseError(f"cannot read a set from {doc!r}")


def _values(lat: Lattice, rows, where: str) -> np.ndarray:
    try:
        arr = np.array(rows, dtype=object)
        return np.vectorize(lat.element, otypes=[np.intp])(arr) if arr.size else arr.astype(np.intp)
    except InvalidArgument as exc:
        raise ParseError(f"{where}: {exc}") from None


def fuzzyset_from_json(doc, lat: Lattice) -> FuzzySet:
    X = set_from_json(_get(doc, "domain", "fuzzyset"), "X")
    return FuzzySet(X, _values(lat, _get(doc, "values", "fuzzyset"), "fuzzyset"), lat)


def relation_from_json(doc, lat: Lattice) -> FuzzyRelation:
    S = set_from_json(_get(doc, "source", "relation"), "S")
    T = set_from_json(_get(doc, "target", "relation"), "T")
    E = _values(lat, _get(doc, "entries", "relation"), "relation").reshape(len(S), len(T))
    return FuzzyRelation(S, T, E, lat)


def partition_from_json(doc, lat: Lattice) -> FuzzyPartition:
    X = set_from_json(_get(doc, "X", "partition"), "X")
    J = set_from_json(_get(doc, "J", "partition"), "J")
    A = _values(lat, _get(doc, "membership", "partition"), "partition membership")
    if "xi" not in doc:
        return FuzzyPartition.from_membership(X, J, A, lat)
    xi = [J.index(j) for j in doc["xi"]]
    return FuzzyPartition(X, J, A, xi, lat)


def lts_from_json(doc, lat: Lattice) -> LowerTransformationSystem:
    X = set_from_json(_get(doc, "X", "lts"), "X")
    Y = set_from_json(_get(doc, "Y", "lts"), "Y")
    v = [Y.index(y) for y in _get(doc, "v", "lts")]
    K = _values(lat, _get(doc, "kernel", "lts"), "lts kernel")
    return LowerTransformationSystem(X, Y, v, K, lat)


def _table_from_json(doc, lat: Lattice, cls, from_partition):
    if "from_partition" in doc:
        inner = doc["from_partition"]
        inner = inner.get("partition", inner)
        return from_partition(partition_from_json(inner, lat))
    X = set_from_json(_get(doc, "X", cls.kind), "X")
    return cls(X, _values(lat, _get(doc, "table", cls.kind), f"{cls.kind} table"), lat)


def qua_from_json(doc, lat: Lattice) -> QuaObject:
    Q = set_from_json(_get(doc, "questions", "qua"), "Q")
    A = set_from_json(_get(doc, "answers", "qua"), "A")
    E = _values(lat, _get(doc, "success", "qua"), "qua success").reshape(len(Q), len(A))
    return QuaObject(Q, A, FuzzyRelation(Q, A, E, lat))


OBJECT_KINDS = ("partition", "lts", "pretopology", "interior", "qua")


def object_from_json(doc: dict, lat: Lattice):
    for kind in OBJECT_KINDS:
        if kind in doc:
            return structure_from_json(doc, kind, lat)
    raise ParseError(f"expected one of {OBJECT_KINDS}, got keys {sorted(doc)}")


def structure_from_json(doc: dict, kind: str, lat: Lattice | None = None):
    """Decode ``doc[kind]``; a top-level ``"lattice"`` key overrides ``lat``."""
    if not isinstance(doc, dict):
        raise ParseError("top level must be a JSON object")
    if "lattice" in doc and kind != "lattice":
        lat = lattice_from_json(doc["lattice"])
    if kind == "lattice":
        return lattice_from_json(doc["lattice"] if "lattice" in doc else doc)
    body = _get(doc, kind, "file")
    if isinstance(body, dict) and "lattice" in body:
        lat = lattice_from_json(body["lattice"])
    if lat is None:
        raise ParseError(f"{kind}: no lattice given (add a 'lattice' key or pass --lattice)")
    try:
        if kind == "set":
            return set_from_json(body, "X")
        if kind == "fuzzyset":
            return fuzzyset_from_json(body, lat)
        if kind == "relation":
            return relation_from_json(body, lat)
        if kind == "partition":
            return partition_from_json(body, lat)
        if kind == "lts":
            return lts_from_json(body, lat)
        if kind == "pretopology":
            return _table_from_json(body, lat, Pretopology, pretopology_from_partition)
        if kind == "interior":
            return _table_from_json(body, lat, CechInterior, interior_from_partition)
        if kind == "qua":
            return qua_from_json(body, lat)
        if kind == "morphism":
            src = object_from_json(_get(body, "source", "morphism"), lat)
            tgt = object_from_json(_get(body, "target", "morphism"), lat)
            fwd = relation_from_json(_get(body, "forward", "morphism"), lat)
            bwd = relation_from_json(_get(body, "backward", "morphism"), lat)
            return MorphismPair(fwd, bwd, Category(_get(body, "category", "morphism")), src, tgt)
    except ValueError as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(f"{kind}: {exc}") from None
    raise ParseError(f"unknown structure kind {kind!r}")


def load_json(path) -> Any:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"{path}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: line {exc.lineno} column {exc.colno}: {exc.msg}") from None


def load(path, kind: str, lat: Lattice | None = None):
    return structure_from_json(load_json(path), kind, lat)


# --- encoding ---------------------------------------------------------------


def lattice_to_json(lat: Lattice) -> dict:
    return {
        "kind": "table",
        "name": lat.name,
        "labels": list(lat.labels),
        "leq": lat.leq.astype(int).tolist(),
        "star": [[lat.labels[v] for v in row] for row in lat.star],
        "hash": [[lat.labels[v] for v in row] for row in lat.hash],
        "neg": [lat.labels[v] for v in lat.neg],
    }


def set_to_json(X: FiniteSet) -> dict:
    return {"name": X.name, "elements": list(X.elements)}


def _labels(lat, arr):
    return np.asarray(lat.labels, dtype=object)[np.asarray(arr)].tolist()


def to_json(obj) -> dict:
    """Encode a structure as a one-key document (the lattice is not included)."""
    if isinstance(obj, FiniteSet):
        return {"set": set_to_json(obj)}
    if isinstance(obj, FuzzySet):
        return {"fuzzyset": {"domain": set_to_json(obj.domain), "values": _labels(obj.lattice, obj.values)}}
    if isinstance(obj, FuzzyRelation):
        return {"relation": _relation(obj)}
    if isinstance(obj, FuzzyPartition):
        return {
            "partition": {
                "X": set_to_json(obj.X),
                "J": set_to_json(obj.J),
                "membership": _labels(obj.lattice, obj.membership),
                "xi": [obj.J.elements[j] for j in obj.xi],
            }
        }
    if isinstance(obj, LowerTransformationSystem):
        return {
            "lts": {
                "X": set_to_json(obj.X),
                "Y": set_to_json(obj.Y),
                "v": [obj.Y.elements[y] for y in obj.v],
                "kernel": _labels(obj.lattice, obj.kernel),
            }
        }
    if isinstance(obj, (Pretopology, CechInterior)):
        return {obj.kind: {"X": set_to_json(obj.X), "table": _labels(obj.lattice, obj.table)}}
    if isinstance(obj, QuaObject):
        return {
            "qua": {
                "questions": set_to_json(obj.questions),
                "answers": set_to_json(obj.answers),
                "success": _labels(obj.lattice, obj.success.entries),
            }
        }
    if isinstance(obj, MorphismPair):
        body = {"category": str(obj.category), "forward": _relation(obj.forward), "backward": _relation(obj.backward)}
        if obj.source is not None:
            body["source"] = to_json(obj.source)
        if obj.target is not None:
            body["target"] = to_json(obj.target)
        return {"morphism": body}
    raise InvalidArgument(f"cannot encode {type(obj).__name__}")


def _relation(R: FuzzyRelation) -> dict:
    return {"source": set_to_json(R.source), "target": set_to_json(R.target), "entries": _labels(R.lattice, R.entries)}


def dump(obj, path, lattice: Lattice | None = None, levels: int | None = None) -> None:
    doc = to_json(obj)
    if levels is not None:
        doc = {"lattice": {"kind": "lukasiewicz", "levels": levels}, **doc}
    elif lattice is not None:
        doc = {"lattice": lattice_to_json(lattice), **doc}
    Path(path).write_text(json.dumps(doc, indent=2, ensure_ascii=False) + "\n")
