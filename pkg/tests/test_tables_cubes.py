import json

import numpy as np
import pytest

import oracles
from diag24.errors import SizeError
from diag24.modring import make_ring
from diag24.tables_cubes import (
    CubeReport,
    DiagonalReport,
    check_diagonal_table,
    check_diagonal_units,
    cube_check,
    cube_holds_structural,
    cube_scan,
    format_table_csv,
    format_table_json,
    format_table_text,
    render_table,
)

Z8 = [
    [0, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, 2, 3, 4, 5, 6, 7],
    [0, 2, 4, 6, 0, 2, 4, 6],
    [0, 3, 6, 1, 4, 7, 2, 5],
    [0, 4, 0, 4, 0, 4, 0, 4],
    [0, 5, 2, 7, 4, 1, 6, 3],
    [0, 6, 4, 2, 0, 6, 4, 2],
    [0, 7, 6, 5, 4, 3, 2, 1],
]


def test_render_table():
    assert render_table(make_ring(8)).tolist() == Z8
    assert render_table(make_ring(8))[3].tolist() == [0, 3, 6, 1, 4, 7, 2, 5]
    assert render_table(make_ring(1)).tolist() == [[0]]
    assert render_table(make_ring(2)).tolist() == [[0, 0], [0, 1]]


def test_render_cap():
    with pytest.raises(SizeError):
        render_table(make_ring(4097))
    assert render_table(make_ring(10), cap=10).shape == (10, 10)


def test_text_format():
    text = format_table_text(render_table(make_ring(3)))
    assert text == "*|0 1 2\n-+-----\n0|0 0 0\n1|0 1 2\n2|0 2 1\n"


def test_csv_and_json_formats():
    tab = render_table(make_ring(3))
    assert format_table_csv(tab) == "0,0,0\n0,1,2\n0,2,1\n"
    assert json.loads(format_table_json(tab)) == {"n": 3, "table": [[0, 0, 0], [0, 1, 2], [0, 2, 1]]}


@pytest.mark.parametrize(
    "n,holds,witness",
    [(5, False, (2, 3)), (24, True, None), (30, False, (7, 13)), (1, True, None), (2, True, None)],
)
def test_check_diagonal_table(n, holds, witness):
    rep = check_diagonal_table(n)
    assert (rep.holds, rep.witness, rep.method) == (holds, witness, "table")


def test_table_scan_cap():
    with pytest.raises(SizeError, match="units or structural"):
        check_diagonal_table(5001)


@pytest.mark.parametrize("n,holds,witness", [(9, False, (2, 5)), (12, True, None), (210, False, (11, 191))])
def test_check_diagonal_units(n, holds, witness):
    rep = check_diagonal_units(n)
    assert (rep.holds, rep.witness, rep.method) == (holds, witness, "units")


def test_table_matches_naive_oracle():
    for n in range(1, 120):
        assert check_diagonal_table(n).witness == oracles.table_witness(n)


def test_table_and_units_agree():
    for n in range(1, 2001):
        t, u = check_diagonal_table(n), check_diagonal_units(n)
        assert t.holds == u.holds
        assert t.witness == u.witness


def test_witnesses_remultiply():
    for n in range(1, 600):
        for rep in (check_diagonal_table(n), check_diagonal_units(n)):
            if rep.witness:
                a, b = rep.witness
                assert make_ring(n).mul(a, b) == 1 and a != b


def test_report_invariants_enforced():
    with pytest.raises(ValueError):
        DiagonalReport(5, False, (2, 2), "units")
    with pytest.raises(ValueError):
        DiagonalReport(5, True, (2, 3), "units")
    with pytest.raises(ValueError):
        DiagonalReport(5, False, None, "units")
    with pytest.raises(ValueError):
        CubeReport(3, False, (1, 1, 1))


@pytest.mark.parametrize("n,holds,witness", [(1, True, None), (2, True, None), (3, False, (1, 2, 2)), (5, False, (1, 2, 3))])
def test_cube_check(n, holds, witness):
    rep = cube_check(n)
    assert (rep.holds, rep.witness) == (holds, witness)


def test_cube_witness_n3_is_permutation_of_listed_triple():
    assert sorted(cube_check(3).witness) == sorted((2, 2, 1))


def test_cube_matches_oracle():
    for n in range(1, 60):
        rep = cube_check(n)
        assert rep.witness == oracles.cube_witness(n)
        assert rep.holds == (not oracles.cube_any_offdiagonal(n)) == cube_holds_structural(n)


@pytest.mark.parametrize("limit", [2, 50, 200])
def test_cube_scan(limit):
    assert cube_scan(limit) == [1, 2][:limit]


def test_cube_cap():
    with pytest.raises(SizeError):
        cube_check(1001)
    with pytest.raises(SizeError):
        cube_scan(1001)


def test_cube_restricts_to_table():
    for n in range(1, 101):
        if cube_check(n).holds:
            assert check_diagonal_units(n).holds
        w = check_diagonal_units(n).witness
        if w:
            a, b = w
            assert (a * b * 1) % n == 1
