"""One test per acceptance criterion; the summary prints a pass/fail line for each."""

import time

from winv import tables, verify
from winv.complex_gw import gw_p3
from winv.real6 import rgw_p3
from winv.store import Context, MemoStore

_ROWS = {}


def _run_tables(ids, ctx):
    """(mismatches, seconds) for cold regeneration of the given tables."""
    start = time.perf_counter()
    diffs = []
    for tid in ids:
        spec = tables.get_spec(tid)
        rows = tables.compute_table(spec, ctx)
        _ROWS[tid] = tables.to_csv(spec, rows)
        diffs += tables.diff_against(spec, _ROWS[tid])
    return diffs, time.perf_counter() - start


def _cell(tid, row, col):
    text = _ROWS[tid]
    grid = tables.read_csv_grid(text)
    return grid[[r[0] for r in grid].index(row)][grid[0].index(col)]


def test_criterion_1_plane_table(criterion):
    c = criterion(1, "P2 table: complex and Welschinger values, cold run under 10 s")
    diffs, secs = _run_tables(["T1"], Context())
    ok = (not diffs and secs < 10 and _cell("T1", "C", "d=8") == "13525751027392"
          and _cell("T1", "l=10", "d=7") == "-14336" and _cell("T1", "l=11", "d=8") == "-280576")
    c.done(ok, "%.2fs, %d mismatches" % (secs, len(diffs)))
    assert not diffs, diffs[:5]
    assert secs < 10
    assert ok


def test_criterion_2_quadric_tables(criterion):
    c = criterion(2, "P1xP1 tables, twisted and product involutions, under 30 s")
    diffs, secs = _run_tables(["T2", "T3"], Context())
    c.done(not diffs and secs < 30, "%.2fs, %d mismatches" % (secs, len(diffs)))
    assert not diffs, diffs[:5]
    assert secs < 30


def test_criterion_3_blowup_tables(criterion):
    c = criterion(3, "real blowup tables, cold run under 5 min")
    ids = ["T%d" % i for i in range(4, 19)]
    diffs, secs = _run_tables(ids, Context())
    ok = not diffs and secs < 300 and _cell("T6", "l=8", "7,(),(2)") == "-4096"
    c.done(ok, "%d tables, %.1fs, %d mismatches" % (len(ids), secs, len(diffs)))
    assert not diffs, diffs[:5]
    assert secs < 300
    assert ok


def test_criterion_4_sixfold_tables(criterion):
    c = criterion(4, "(P1)^3 tables at degree (2,2,2), both involutions")
    diffs, secs = _run_tables(["T19", "T20"], Context())
    column_a = [_cell("T19", "b=%d" % b, "(1,0,0)") for b in range(3)]
    column_b = [_cell("T20", "b=%d" % b, "(1,0)") for b in range(3)]
    ok = not diffs and column_a == ["6", "-4", "2"] and column_b == ["4", "-2", "0"]
    c.done(ok, "%.1fs, %d mismatches" % (secs, len(diffs)))
    assert not diffs, diffs[:5]
    assert ok


def test_criterion_5_p3(criterion):
    c = criterion(5, "P3 base values, two relations at <3,2>_2, parity up to d = 4")
    ctx = Context()
    values = [gw_p3(1, (3, 3), ctx), rgw_p3(1, (3,), ctx), rgw_p3(1, (2, 2), ctx), rgw_p3(1, (), ctx)]
    r1 = rgw_p3(2, (3, 2), ctx, method="shift")
    r2 = rgw_p3(2, (3, 2), ctx, method="trade")
    parity = [x for x in verify.suite_parity(ctx) if x.name.startswith(("P3", "parity vanishing on"))]
    ok = values == [1, -1, -1, 1] and r1 == r2 and all(x.passed for x in parity)
    c.done(ok, "<3,2>_2 = %s by both relations" % r1 if r1 == r2 else "relations disagree")
    assert values == [1, -1, -1, 1]
    assert r1 == r2
    assert all(x.passed for x in parity), [x for x in parity if not x.passed]


def test_criterion_6_cross_recursions(criterion):
    c = criterion(6, "independent recursions agree; blowup pivot independence")
    checks = verify.suite_cross(Context())
    bad = [x for x in checks if not x.passed]
    c.done(not bad, "%d checks, %d failed" % (len(checks), len(bad)))
    assert not bad, [(x.name, x.detail) for x in bad]


def test_criterion_7_fiber_classes(criterion):
    c = criterion(7, "fiber closed forms equal the recursions; (1,1,1) empty values")
    checks = verify.suite_fiber(Context())
    bad = [x for x in checks if not x.passed]
    c.done(not bad, "%d checks, %d failed" % (len(checks), len(bad)))
    assert not bad, [(x.name, x.detail) for x in bad]


def test_criterion_8_structure(criterion, tmp_path):
    c = criterion(8, "integrality, symmetry, parity scan, store round trip, deterministic output")
    notes = []
    ctx = Context()
    # compute_table asserts integrality of every cell
    emitted = {}
    for spec in tables.SPECS:
        emitted[spec.table_id] = tables.to_csv(spec, tables.compute_table(spec, ctx))
    warm_same = all(emitted[t] == tables.to_csv(tables.get_spec(t), tables.compute_table(tables.get_spec(t), ctx))
                    for t in emitted)
    cold_same = all(emitted[t] == _ROWS[t] for t in _ROWS)
    notes.append("tables stable" if warm_same and cold_same else "table output changed")
    sym = verify.suite_symmetry(ctx)
    par = verify.suite_parity(ctx)
    bad = [x for x in sym + par if not x.passed]
    notes.append("%d symmetry/parity checks" % len(sym + par))
    ctx.store.save(tmp_path / "a")
    back = MemoStore()
    n = back.load(tmp_path / "a")
    back.save(tmp_path / "b")
    trip = back.items() == ctx.store.items() and (tmp_path / "a").read_bytes() == (tmp_path / "b").read_bytes()
    notes.append("%d records round-tripped" % n)
    ok = warm_same and cold_same and not bad and trip
    c.done(ok, ", ".join(notes))
    assert warm_same and cold_same
    assert not bad, [(x.name, x.detail) for x in bad]
    assert trip
