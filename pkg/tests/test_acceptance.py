"""Acceptance gate: the ten binding criteria for this artifact.

Each test asserts one criterion together with its wall-clock budget and
appends a single PASS/FAIL line to acceptance_report.txt next to the
package root, so a full run leaves a ten-line verdict behind.
"""

import json
import time
from itertools import combinations_with_replacement
from pathlib import Path

import pytest

from ramsey_forge.catalog import load_catalog
from ramsey_forge.checker import check_symmetric
from ramsey_forge.cli import main
from ramsey_forge.numbertheory import (
    is_generator,
    prime_factors,
    sieve_primes,
    smallest_generator,
)
from ramsey_forge.oracle import (
    Relation,
    atom_decomposition,
    exhaustive_small_scan,
    partition_atoms,
    relation_algebra_check,
)
from ramsey_forge.partition import build_class_zero, build_partition
from ramsey_forge.residues import ResidueSet, sumset
from ramsey_forge.search import ramsey_recursive_bound, records_from_csv

REPORT_PATH = Path(__file__).resolve().parent.parent / "acceptance_report.txt"

_LINES: list[str] = []


@pytest.fixture(scope="module", autouse=True)
def _write_report():
    _LINES.clear()
    yield
    REPORT_PATH.write_text("\n".join(_LINES) + "\n", encoding="ascii")


def _report(num: int, name: str, ok: bool, detail: str) -> None:
    line = f"{'PASS' if ok else 'FAIL'} criterion {num:2d} [{name}]: {detail}"
    _LINES.append(line)
    print(line)
    assert ok, line


def _timed(budget_s: float):
    start = time.perf_counter()

    def done() -> tuple[float, bool]:
        dt = time.perf_counter() - start
        return dt, dt <= budget_s

    return done


def test_criterion_01_catalog_fully_verified(tmp_path, capsys):
    done = _timed(1800.0)
    out = tmp_path / "verify.csv"
    code = main(["verify", "--all", "-q", "--out", str(out)])
    rows = out.read_text().splitlines()[1:]
    n_pass = sum(1 for r in rows if r.split(",")[10] == "true")
    dt, in_budget = done()
    ok = code == 0 and len(rows) == 397 and n_pass == 397 and in_budget
    _report(
        1, "catalog validity", ok,
        f"exit={code}, {n_pass}/397 rows passed, {dt:.1f}s (budget 1800s)",
    )


def test_criterion_02_search_reproduces_small_range(tmp_path, capsys):
    done = _timed(120.0)
    catalog = {r.m: r for r in load_catalog() if r.m <= 50}
    bound = max(r.N for r in catalog.values()) + 1
    out = tmp_path / "search.csv"
    code = main([
        "search", "--m", "2..50", "--bound", str(bound),
        "--workers", "4", "-q", "--out", str(out),
    ])
    records = {r.m: r for r in records_from_csv(out.read_text())}
    mismatches = []
    for m in range(2, 51):
        r = records[m]
        if m in (8, 13):
            if r.status != "exhausted":
                mismatches.append((m, r.status))
        elif (r.status, r.N, r.x) != ("found", catalog[m].N, catalog[m].x):
            mismatches.append((m, r.N, r.x))
    dt, in_budget = done()
    ok = code == 0 and not mismatches and in_budget
    _report(
        2, "search 2..50", ok,
        f"exit={code}, mismatches={mismatches or 'none'}, {dt:.1f}s (budget 120s)",
    )


def test_criterion_03_search_spot_checks(tmp_path, capsys):
    done = _timed(1200.0)
    expected = {
        100: (95801, 3),
        200: (479201, 3),
        300: (940801, 41),
        373: (2387201, 3),
        400: (1772801, 3),
    }
    got = {}
    for m in expected:
        out = tmp_path / f"spot{m}.csv"
        code = main([
            "search", "--m", f"{m}..{m}", "--bound", "2500000",
            "--workers", "4", "-q", "--out", str(out),
        ])
        assert code == 0
        (rec,) = records_from_csv(out.read_text())
        got[m] = (rec.N, rec.x)
    dt, in_budget = done()
    ok = got == expected and in_budget
    _report(
        3, "search spot checks", ok,
        f"got={got}, {dt:.1f}s (budget 1200s)",
    )


def test_criterion_04_eight_colors_exhausted(tmp_path, capsys):
    done = _timed(60.0)
    out = tmp_path / "sweep8.csv"
    code = main(["sweep", "--m", "8", "--workers", "4", "-q", "--out", str(out)])
    row = out.read_text().splitlines()[1].split(",")
    dt, in_budget = done()
    ok = (
        code == 0
        and row[1] == "exhausted"
        and row[4] == "109602"
        and int(row[5]) > 0
        and in_budget
    )
    _report(
        4, "m=8 nonexistence to 109602", ok,
        f"status={row[1]}, candidates={row[5]}, {dt:.1f}s (budget 60s)",
    )


def test_criterion_05_thirteen_colors_exhausted(tmp_path, capsys):
    done = _timed(120.0)
    out = tmp_path / "sweep13.csv"
    code = main(["sweep", "--m", "13", "--workers", "4", "-q", "--out", str(out)])
    row = out.read_text().splitlines()[1].split(",")
    dt, in_budget = done()
    ok = (
        code == 0
        and row[1] == "exhausted"
        and row[4] == "190997"
        and int(row[5]) > 0
        and in_budget
    )
    _report(
        5, "m=13 nonexistence to 190997", ok,
        f"status={row[1]}, candidates={row[5]}, {dt:.1f}s (budget 120s)",
    )


def test_criterion_06_recursive_bounds(capsys):
    done = _timed(5.0)
    b8 = ramsey_recursive_bound(8)
    b13 = ramsey_recursive_bound(13)
    dt, in_budget = done()
    ok = b8 == 109_602 and b13 == 16_926_797_487 and in_budget
    _report(
        6, "recursive color bounds", ok,
        f"bound(8)={b8}, bound(13)={b13}, {dt:.3f}s (budget 5s)",
    )


def test_criterion_07_fast_checker_matches_reference(capsys):
    done = _timed(60.0)
    records = exhaustive_small_scan(600)
    disagree = [(r.N, r.m) for r in records if not r.agree]
    dt, in_budget = done()
    ok = bool(records) and not disagree and in_budget
    _report(
        7, "fast vs reference, N<=600", ok,
        f"{len(records)} (N,m) pairs, disagreements={disagree or 'none'}, "
        f"{dt:.1f}s (budget 60s)",
    )


def test_criterion_08_relation_algebra(capsys):
    done = _timed(120.0)
    problems = []

    # two colors on K_5: both self-compositions hit identity plus the
    # other color, the cross composition hits everything off-diagonal
    p5 = build_partition(5, 2, 2)
    atoms = partition_atoms(p5)
    ident = Relation.identity(5)
    if not relation_algebra_check(p5):
        problems.append("axioms fail at N=5")
    red, blue = atoms
    if atom_decomposition(red.compose(red), atoms, ident) != (True, (1,)):
        problems.append("red o red != Id u blue")
    if atom_decomposition(blue.compose(blue), atoms, ident) != (True, (0,)):
        problems.append("blue o blue != Id u red")
    if atom_decomposition(red.compose(blue), atoms, ident) != (False, (0, 1)):
        problems.append("red o blue != red u blue")

    p13 = build_partition(13, 3, 2)
    atoms13 = partition_atoms(p13)
    ident13 = Relation.identity(13)
    if not relation_algebra_check(p13):
        problems.append("axioms fail at N=13")
    for i, a in enumerate(atoms13):
        rest = tuple(j for j in range(3) if j != i)
        if atom_decomposition(a.compose(a), atoms13, ident13) != (True, rest):
            problems.append(f"atom {i} self-composition wrong at N=13")
        for j in range(3):
            if j != i:
                got = atom_decomposition(a.compose(atoms13[j]), atoms13, ident13)
                if got != (False, (0, 1, 2)):
                    problems.append(f"atoms {i},{j} cross-composition wrong")

    # axioms hold exactly when the reference checker passes the partition
    checked = 0
    for r in exhaustive_small_scan(200):
        p = build_partition(r.N, r.m, r.x)
        if relation_algebra_check(p) != r.naive.overall:
            problems.append(f"axioms vs reference disagree at ({r.N},{r.m})")
        checked += 1

    dt, in_budget = done()
    ok = not problems and checked > 0 and in_budget
    _report(
        8, "relation-algebra atoms", ok,
        f"identities verified, {checked} scan partitions agree, "
        f"problems={problems or 'none'}, {dt:.1f}s (budget 120s)",
    )


def test_criterion_09_structural_invariants(capsys):
    done = _timed(120.0)
    sieve = sieve_primes(600)
    problems = []

    # the power-residue class is the same whatever generator builds it
    for N in sieve.primes.tolist():
        if N < 5 or N > 500:
            continue
        factors = prime_factors(N - 1, sieve)
        gens = [g for g in range(2, N) if is_generator(g, N, factors)]
        for m in range(2, N):
            if (N - 1) % m:
                continue
            reference = frozenset(build_class_zero(N, m, gens[0]))
            for g in gens[1:]:
                if frozenset(build_class_zero(N, m, g)) != reference:
                    problems.append(f"class zero varies with generator ({N},{m},{g})")

    # class-0 shortcuts: one class decides symmetry/sum-freeness/basis,
    # the (0,j) pairs decide the whole triangle grid
    pairs = 0
    for N in sieve.primes.tolist():
        if N < 5:
            continue
        for m in range(2, (N - 1) // 2 + 1):
            if (N - 1) % (2 * m):
                continue
            pairs += 1
            p = build_partition(N, m, smallest_generator(N))
            sets = [ResidueSet.from_elements(N, c) for c in p.classes]
            sums = {i: sumset(s, s) for i, s in enumerate(sets)}
            sym_all = all(s == s.negated() for s in sets)
            if sym_all != check_symmetric(p):
                problems.append(f"symmetry shortcut wrong at ({N},{m})")
            free_all = all(not (sums[i] & sets[i]) for i in range(m))
            free_zero = not (sums[0] & sets[0])
            if free_all != free_zero:
                problems.append(f"sum-free shortcut wrong at ({N},{m})")
            everything = ResidueSet.empty(N).complement()
            basis_all = all((sums[i] | sets[i]) == everything for i in range(m))
            basis_zero = (sums[0] | sets[0]) == everything
            if basis_all != basis_zero:
                problems.append(f"basis shortcut wrong at ({N},{m})")
            tri_all = all(
                sumset(sets[i], sets[j]) == ResidueSet.nonzero(N)
                for i in range(m)
                for j in range(m)
                if i != j
            )
            tri_zero = all(
                sumset(sets[0], sets[j]) == ResidueSet.nonzero(N)
                for j in range(1, m)
            )
            if tri_all != tri_zero:
                problems.append(f"triangle shortcut wrong at ({N},{m})")

    dt, in_budget = done()
    ok = not problems and pairs > 0 and in_budget
    _report(
        9, "structural invariants", ok,
        f"generator independence to 500, shortcut equivalences on {pairs} "
        f"(N,m) pairs to 600, problems={problems or 'none'}, "
        f"{dt:.1f}s (budget 120s)",
    )


def test_criterion_10_exported_colorings(tmp_path, capsys):
    done = _timed(5.0)
    problems = []
    for N, m, x in [(5, 2, 2), (13, 3, 2)]:
        out = tmp_path / f"color{N}.json"
        code = main([
            "export", "--m", str(m), "--N", str(N), "--x", str(x),
            "--format", "json", "--out", str(out),
        ])
        assert code == 0
        doc = json.loads(out.read_text())
        color = {}
        for e in doc["edges"]:
            color[(e["u"], e["v"])] = e["color"]
            color[(e["v"], e["u"])] = e["color"]
        mono = 0
        for u in range(N):
            for v in range(u + 1, N):
                for w in range(v + 1, N):
                    if color[(u, v)] == color[(v, w)] == color[(u, w)]:
                        mono += 1
        if mono:
            problems.append(f"N={N}: {mono} monochromatic triangles")
        # every edge meets every other color pattern a triangle can have
        nonmono = {
            t
            for t in combinations_with_replacement(range(m), 3)
            if len(set(t)) > 1
        }
        for u in range(N):
            for v in range(u + 1, N):
                c = color[(u, v)]
                seen = {
                    tuple(sorted((c, color[(u, w)], color[(v, w)])))
                    for w in range(N)
                    if w not in (u, v)
                }
                want = {t for t in nonmono if c in t}
                if seen != want:
                    problems.append(f"N={N} edge ({u},{v}) misses types")
    dt, in_budget = done()
    ok = not problems and in_budget
    _report(
        10, "exported colorings", ok,
        f"K_5 and K_13 triangle census clean, problems={problems or 'none'}, "
        f"{dt:.2f}s (budget 5s)",
    )
