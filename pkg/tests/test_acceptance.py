"""Exit criteria, one test per criterion, each at its stated tolerance."""

import io
import json
import time
from math import gcd

import numpy as np

import oracles
from diag24.cli import run
from diag24.modring import make_ring
from diag24.primes import interval_violations, ramanujan_primes, sieve
from diag24.proofs import verify_proposition_equivalence
from diag24.tables_cubes import check_diagonal_table, check_diagonal_units
from diag24.unit_group import check_diagonal_structural, euler_phi, unit_group_structure

DIVISORS_OF_24 = [1, 2, 3, 4, 6, 8, 12, 24]

# the Z_8 table exactly as printed in the source, row by row
Z8_ROWS = [
    "0 0 0 0 0 0 0 0",
    "0 1 2 3 4 5 6 7",
    "0 2 4 6 0 2 4 6",
    "0 3 6 1 4 7 2 5",
    "0 4 0 4 0 4 0 4",
    "0 5 2 7 4 1 6 3",
    "0 6 4 2 0 6 4 2",
    "0 7 6 5 4 3 2 1",
]


def cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue()


def test_01_theorem_reproduction(criterion):
    criterion.label = "1 theorem reproduction (scan --max 100000 structural, < 10 s)"
    t = time.perf_counter()
    code, out = cli("scan", "--max", "100000", "--method", "structural", "--json")
    dt = time.perf_counter() - t
    criterion.detail = f"{dt:.2f}s"
    assert code == 0
    assert json.loads(out)["holds"] == DIVISORS_OF_24
    assert dt < 10


def test_02_oracle_agreement(criterion):
    criterion.label = "2 oracle agreement (3 methods n<=2000, units/structural n<=1e5, < 60 s)"
    t = time.perf_counter()
    disagree = []
    for n in range(1, 2001):
        if len({check_diagonal_table(n).holds, check_diagonal_units(n).holds,
                check_diagonal_structural(n).holds}) != 1:
            disagree.append(n)
    for n in range(2001, 10**5 + 1):
        if check_diagonal_units(n).holds != check_diagonal_structural(n).holds:
            disagree.append(n)
    dt = time.perf_counter() - t
    criterion.detail = f"{len(disagree)} disagreements, {dt:.2f}s"
    assert disagree == []
    assert dt < 60


def test_03_z8_golden_table(criterion):
    criterion.label = "3 Z_8 golden table (byte-exact)"
    code, out = cli("table", "--n", "8")
    expected = "*|0 1 2 3 4 5 6 7\n-+---------------\n" + "".join(
        f"{a}|{row}\n" for a, row in enumerate(Z8_ROWS)
    )
    values = [int(v) for row in Z8_ROWS for v in row.split()]
    criterion.detail = f"{len(values)} entries"
    assert len(values) == 64
    assert code == 0 and out == expected
    assert values == [(a * b) % 8 for a in range(8) for b in range(8)]


def test_04_paper_witnesses(criterion):
    criterion.label = "4 witnesses 30:(7,13) and 210:(11,191)"
    r30 = check_diagonal_units(30)
    r210 = check_diagonal_units(210)
    assert not r30.holds and r30.witness == (7, 13) and 7 * 13 == 91 and 91 % 30 == 1
    assert check_diagonal_table(30).witness == (7, 13)
    assert not r210.holds and r210.witness == (11, 191) and 11 * 191 == 2101 and 2101 % 210 == 1
    assert make_ring(30).mul(7, 13) == 1 and make_ring(210).mul(11, 191) == 1
    code, out = cli("check", "--n", "30", "--method", "units", "--json")
    assert code == 1 and json.loads(out)["witness"] == [7, 13]
    criterion.detail = "91 mod 30 = 1, 2101 mod 210 = 1"


def test_05_ramanujan_primes(criterion):
    criterion.label = "5 Ramanujan primes 2 11 17 29 41 (limit 1e4, < 1 s)"
    t = time.perf_counter()
    rs = ramanujan_primes(sieve(10**4), 5)
    dt = time.perf_counter() - t
    criterion.detail = f"{rs} {dt:.3f}s"
    assert rs == [2, 11, 17, 29, 41]
    assert dt < 1


def test_06_prime_interval_theorems(criterion):
    criterion.label = "6 Bertrand n in [2,1e6] and Erdos n in [6,1e6] (< 30 s)"
    t = time.perf_counter()
    tab = sieve(2 * 10**6)
    bert = interval_violations(tab, 2, 10**6, 1)
    erd = interval_violations(tab, 6, 10**6, 2)
    # second route: the next one or two primes after n, located by bisection
    n = np.arange(2, 10**6 + 1)
    idx = np.searchsorted(tab.primes, n, side="right")
    first, second = tab.primes[idx], tab.primes[idx + 1]
    bert2 = n[first >= 2 * n].tolist()
    erd2 = n[(n >= 6) & (second >= 2 * n)].tolist()
    dt = time.perf_counter() - t
    criterion.detail = f"violations {len(bert)}+{len(erd)}, {dt:.2f}s"
    assert bert == bert2 == [] and erd == erd2 == []
    assert dt < 30


def test_07_proof_harness(criterion):
    criterion.label = "7 all six verify subcommands overall=true with named evidence"
    verdicts = {}
    for which in ("crt", "dirichlet", "units", "bertrand", "erdos", "proposition"):
        code, out = cli("verify", which, "--json")
        verdicts[which] = json.loads(out)
        assert code == 0 and verdicts[which]["overall"] is True, which
    ev = {w: json.dumps(v) for w, v in verdicts.items()}
    assert "15(n+1) <= 4n" in ev["bertrand"]
    assert "30(n+1) <= 4n" in ev["erdos"]
    for w in ("bertrand", "erdos"):
        steps = {s["description"]: s["evidence"] for s in verdicts[w]["steps"]}
        e210 = next(e for d, e in steps.items() if "210 | n" in d)
        e30 = next(e for d, e in steps.items() if "30 | n" in d)
        assert e210["product"] == 2101 and e210["product_mod_210"] == 1
        assert e30["product"] == 91 and e30["product_mod_30"] == 1 and e30["multiples_of_30"] == [30]
    b210 = next(s for s in verdicts["bertrand"]["steps"] if "210 | n" in s["description"])
    assert b210["evidence"]["multiples_of_210"] == [210] and b210["evidence"]["witness"] == [11, 191]
    five = next(s for s in verdicts["dirichlet"]["steps"] if "smallest prime coprime" in s["description"])
    assert five["checked"] and five["evidence"]["smallest_nondividing_prime"] == 5
    criterion.detail = ", ".join(f"{w}={v['overall']}" for w, v in verdicts.items())


def test_08_cube_classification(criterion):
    criterion.label = "8 cube --scan --max 300 == {1, 2} (< 5 s, oracle-confirmed)"
    t = time.perf_counter()
    code, out = cli("cube", "--scan", "--max", "300", "--json")
    dt = time.perf_counter() - t
    holds = json.loads(out)["holds"]
    oracle = [n for n in range(1, 301) if not oracles.cube_any_offdiagonal(n)]
    criterion.detail = f"{holds} {dt:.2f}s"
    assert code == 0 and holds == oracle == [1, 2]
    assert dt < 5


def test_09_conservation(criterion):
    criterion.label = "9 prod(cyclic orders) == phi(n) (n<=1e4) == |units| (n<=2000)"
    bad = []
    for n in range(1, 10**4 + 1):
        order = unit_group_structure(n).order
        if order != euler_phi(n):
            bad.append(n)
        elif n <= 2000 and order != sum(1 for a in range(n) if gcd(a, n) == 1):
            bad.append(n)
    criterion.detail = f"{len(bad)} violations"
    assert bad == []


def test_10_proposition_equivalence(criterion):
    criterion.label = "10 proposition equivalence n<=2000, prime bound 1e4, (4) sampled"
    tab = sieve(10**4)
    bad = []
    for n in range(1, 2001):
        v = verify_proposition_equivalence(n, 10**4, tab)
        s4 = next(s for s in v.steps if s.description.startswith("(4)"))
        if not (v.overall and s4.evidence["sampled"] is True):
            bad.append(n)
    criterion.detail = f"{len(bad)} failures"
    assert bad == []
