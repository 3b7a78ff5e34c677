import json

import numpy as np
import pytest

from fuzzycat.category import Category, identity
from fuzzycat.errors import InvalidArgument
from fuzzycat.fixtures import random_morphism
from fuzzycat.io import (
    ParseError,
    dump,
    lattice_from_json,
    lattice_to_json,
    load,
    parse_lattice_spec,
    structure_from_json,
)
from fuzzycat.lattice import make_lukasiewicz_chain, validate_lattice
from fuzzycat.systems import lts_from_partition
from fuzzycat.topology import interior_from_partition, pretopology_from_partition

L5 = make_lukasiewicz_chain(4)


def test_shorthand_counts_elements():
    assert parse_lattice_spec("luk:5").size == 5
    assert lattice_from_json({"kind": "lukasiewicz", "levels": 3}).size == 3
    for bad in ("luk:1", "luk:x", "godel:3"):
        with pytest.raises(InvalidArgument):
            parse_lattice_spec(bad)


def test_lattice_table_round_trip():
    doc = lattice_to_json(L5)
    back = lattice_from_json(json.loads(json.dumps(doc)))
    assert back == L5
    doc["star"][2][3] = "1/2"
    assert not validate_lattice(lattice_from_json(doc)).passed


@pytest.mark.parametrize(
    "build", [lambda P: P, lts_from_partition, pretopology_from_partition, interior_from_partition]
)
def test_structure_round_trip(tmp_path, fixture_partition, build):
    obj = build(fixture_partition)
    kind = next(iter(__import__("fuzzycat.io", fromlist=["to_json"]).to_json(obj)))
    path = tmp_path / "s.json"
    dump(obj, path, levels=5)
    assert load(path, kind) == obj


def test_morphism_round_trip(tmp_path, fixture_partition):
    m = random_morphism(fixture_partition, fixture_partition, Category.LSPACEFP, 2)
    dump(m, tmp_path / "m.json", lattice=L5)
    back = load(tmp_path / "m.json", "morphism")
    assert back == m and back.source == fixture_partition


def test_partition_from_generator_document():
    doc = {
        "lattice": {"kind": "lukasiewicz", "levels": 5},
        "pretopology": {"from_partition": {"X": ["x1", "x2"], "J": ["j1", "j2"], "membership": [["1", "1/2"], ["0", "1"]]}},
    }
    S = structure_from_json(doc, "pretopology")
    assert S.table.shape == (25, 2)


def test_errors_are_parse_errors(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text('{"lattice": ')
    with pytest.raises(ParseError, match="line 1"):
        load(p, "lattice")
    with pytest.raises(ParseError, match="missing key"):
        structure_from_json({"partition": {"X": 2}}, "partition", L5)
    with pytest.raises(ParseError, match="not an element"):
        structure_from_json({"partition": {"X": 1, "J": 1, "membership": [["2/3"]]}}, "partition", L5)
    with pytest.raises(ParseError, match="no lattice"):
        structure_from_json({"partition": {}}, "partition")
    with pytest.raises(ParseError):
        load(tmp_path / "missing.json", "lattice")
