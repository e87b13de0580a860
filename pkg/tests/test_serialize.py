from __future__ import annotations

import json
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from triorbit.derivedcat import DbIndec, DbObject, derived_category
from triorbit.exactlin import GF, QQ, Matrix
from triorbit.quiverrep import Quiver, QuiverError
from triorbit.sampling import random_complex, random_rep
from triorbit.serialize import (
    complex_from_json,
    complex_to_json,
    dbobject_from_json,
    dbobject_to_json,
    dumps,
    format_quiver,
    matrix_from_json,
    matrix_to_json,
    parse_field,
    parse_quiver,
    quiver_from_json,
    quiver_to_json,
    rep_from_json,
    rep_to_json,
)

fields = st.sampled_from([QQ, GF(2), GF(7)])
seeds = st.integers(0, 2**32)


def _json_cycle(doc):
    return json.loads(json.dumps(doc))


def test_parse_quiver_grammar():
    q = parse_quiver("# a path\nvertices 3\narrow 1 2  # first\narrow 2 3\n")
    assert q == Quiver.linear(3)
    assert parse_quiver("vertices 2; arrow 1 2") == Quiver.linear(2)
    assert parse_quiver(format_quiver(q)) == q


@pytest.mark.parametrize("text", ["arrow 1 2", "vertices x", "vertices 2\nedge 1 2", "", "vertices 2\nvertices 3"])
def test_parse_quiver_errors(text):
    with pytest.raises(QuiverError):
        parse_quiver(text)


def test_parse_field():
    assert parse_field("Q") is QQ
    assert parse_field("7") == GF(7)
    with pytest.raises(ValueError):
        parse_field("6")


@given(st.lists(st.fractions(max_denominator=20), min_size=0, max_size=12), st.integers(1, 4))
def test_matrix_round_trip(values, cols):
    rows = len(values) // cols
    m = Matrix.from_rows([values[r * cols:(r + 1) * cols] for r in range(rows)], QQ, cols=cols)
    assert matrix_from_json(_json_cycle(matrix_to_json(m))) == m


def test_matrix_entries_are_strings():
    doc = matrix_to_json(Matrix.from_rows([[1, 2]]).scale(QQ(1) / 3))
    assert doc["entries"] == ["1/3", "2/3"]


@given(seeds, fields, st.integers(1, 4))
def test_rep_round_trip(seed, field, n):
    q = Quiver.linear(n)
    r = random_rep(random.Random(seed), q, field)
    assert rep_from_json(_json_cycle(rep_to_json(r)), q, field) == r
    assert quiver_from_json(_json_cycle(quiver_to_json(q))) == q


@given(seeds, fields)
def test_complex_round_trip(seed, field):
    X = random_complex(random.Random(seed), Quiver.linear(2), field)
    doc = _json_cycle(complex_to_json(X))
    assert doc["schema"] == 1
    assert complex_from_json(doc) == X


@given(st.lists(st.tuples(st.integers(0, 5), st.integers(-3, 3)), max_size=6))
def test_dbobject_round_trip(items):
    cat = derived_category(Quiver.linear(3))
    x = DbObject.of(DbIndec(i, s) for i, s in items)
    assert dbobject_from_json(cat, _json_cycle(dbobject_to_json(cat, x))) == x


def test_dumps_adds_schema():
    assert json.loads(dumps({"count": 14})) == {"schema": 1, "count": 14}
