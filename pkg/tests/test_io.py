import json
from fractions import Fraction

import numpy as np
import pytest

from lapspec.errors import ParseError
from lapspec.graph import new_digraph
from lapspec.io import (
    format_digraph,
    format_matrix,
    parse_digraph,
    parse_matrix,
    read_digraph,
    spectrum_json,
    write_digraph,
    write_matrix,
    read_matrix,
)
from lapspec.linalg import eigenvalues


def test_parse_digraph_with_comments():
    g = parse_digraph("# a path\n3 1\n\n0 1 0.3   # light arc\n1\t2\t1\n")
    assert g.n == 3 and g.b == 1
    assert g.weight(0, 1) == Fraction(3, 10) and g.weight(1, 2) == 1


def test_weights_stored_as_read():
    g = parse_digraph("2 0.7\n0 1 0.7\n")
    assert g.weight(0, 1) == g.b  # so the complement drops the arc


@pytest.mark.parametrize("text,line,col", [
    ("3 1\n0 1 x\n", 2, 5),
    ("3 1\n0 1\n", 2, 1),
    ("3 1\n0 1 2\n", 2, None),
    ("3 1\n0 1 1\n0 1 0.5\n", 3, None),
    ("3 1\n0 0 1\n", 2, None),
    ("3 1\n0 5 1\n", 2, None),
    ("x 1\n", 1, 1),
    ("# nothing\n", None, None),
])
def test_parse_errors(text, line, col):
    with pytest.raises(ParseError) as err:
        parse_digraph(text, "g.tsv")
    assert err.value.line == line and err.value.column == col
    assert str(err.value).startswith("g.tsv:")


def test_digraph_roundtrip(tmp_path):
    g = new_digraph(4, [(0, 1, Fraction(1, 3)), (2, 3, Fraction(5, 8)), (3, 0, 1)], 1)
    write_digraph(g, tmp_path / "g.tsv")
    assert read_digraph(tmp_path / "g.tsv") == g
    assert "0.625" in format_digraph(g) and "1/3" in format_digraph(g)


def test_matrix_roundtrip(tmp_path):
    a = np.random.default_rng(0).normal(size=(4, 4))
    write_matrix(a, tmp_path / "m.csv")
    np.testing.assert_array_equal(read_matrix(tmp_path / "m.csv"), a)


def test_matrix_exact():
    m = parse_matrix("1/2,-1/2\n0,0\n", exact=True)
    assert m.dtype == object and m[0, 0] == Fraction(1, 2)


def test_matrix_errors():
    with pytest.raises(ParseError) as err:
        parse_matrix("1,2\n3\n", path="m.csv")
    assert err.value.line == 2
    with pytest.raises(ParseError) as err:
        parse_matrix("1,abc\n3,4\n")
    assert (err.value.line, err.value.column) == (1, 3)


def test_spectrum_json():
    recs = json.loads(spectrum_json(eigenvalues(np.diag([0.0, 1.0, 1.0]))))
    assert [set(r) for r in recs] == [{"re", "im", "residual", "cluster_id"}] * 3
    assert sorted(r["cluster_id"] for r in recs) == [0, 1, 1]


def test_format_matrix_repr_precision():
    assert format_matrix(np.array([[0.1]])) == "0.1\n"
