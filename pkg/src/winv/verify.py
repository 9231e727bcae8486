"""Property suites: golden tables, independent recursions, parity, symmetry and fiber classes.

Each suite returns a list of :class:`Check`.  Checks that need a
different scheduling run in their own :class:`Context` so a shared store
never mixes values from two routes under one key.
"""

import time
from dataclasses import dataclass
from itertools import permutations, product

from . import complex_gw as cgw
from . import geometry as geo
from . import real4, real6, tables
from .exact import Fraction
from .real6 import ONE, k_p1cubed, k_p3, k_twisted
from .store import Context, Options, resolve

SUITES = ("tables", "cross", "parity", "symmetry", "fiber")


@dataclass
class Check:
    suite: str
    name: str
    passed: bool
    detail: str = ""


class _Collector:
    def __init__(self, suite):
        self.suite = suite
        self.checks = []

    def equal(self, name, got, want):
        ok = got == want
        self.checks.append(Check(self.suite, name, ok, "" if ok else "%s != %s" % (got, want)))
        return ok

    def true(self, name, ok, detail=""):
        self.checks.append(Check(self.suite, name, bool(ok), "" if ok else detail))
        return ok


def _ctx(**kw):
    return Context(options=Options(**kw))


# tables


def suite_tables(ctx=None, ids=None):
    ctx = resolve(ctx)
    out = _Collector("tables")
    for spec in tables.SPECS:
        if ids and spec.table_id not in ids:
            continue
        start = time.perf_counter()
        rows = tables.compute_table(spec, ctx)
        diffs = tables.diff_against(spec, tables.to_csv(spec, rows))
        out.true("%s matches golden (%.1fs)" % (spec.table_id, time.perf_counter() - start),
                 not diffs, "; ".join(diffs[:5]))
    return out.checks


# independent recursions


def suite_cross(ctx=None):
    out = _Collector("cross")
    ctx = resolve(ctx)
    for d in range(2, 7):
        for l in range(2, (3 * d - 1) // 2 + 1):
            if 3 * d - 1 - 2 * l < 1:
                continue
            out.equal("P2 d=%d l=%d: k>=1 vs l>=2 relation" % (d, l),
                      real4.wel_p2(d, l, ctx, method="real_point"), real4.wel_p2(d, l, ctx, method="pair_point"))
    for d in range(2, 6):
        for l in range(2, (4 * d - 1) // 2 + 1):
            if 4 * d - 1 - 2 * l < 1:
                continue
            out.equal("twisted P1xP1 d=%d l=%d: k>=1 vs l>=2 relation" % (d, l),
                      real4.wel_p1p1_twisted(d, l, ctx, method="real_point"),
                      real4.wel_p1p1_twisted(d, l, ctx, method="pair_point"))
    out.checks += _pivot_checks(ctx)
    out.checks += _lift_checks(ctx)
    out.equal("P3 <3,2>_2: both insertion relations",
              real6.rgw_p3(2, (3, 2), ctx, method="shift"), real6.rgw_p3(2, (3, 2), ctx, method="trade"))
    for d in range(3, 6):
        out.equal("P3 <3,2>_%d: both insertion relations" % (d + 1),
                  real6.rgw_p3(d + 1, (3, 2), ctx, method="shift"), real6.rgw_p3(d + 1, (3, 2), ctx, method="trade"))
    for d in range(2, 6):
        out.equal("P3 <>_%d: empty relation vs memo" % d,
                  real6.rgw_p3_empty(d, ctx, direct=True), real6.rgw_p3(d, (), ctx))
    # H1'^3 = 0, so the insertion relation run on that target has to return 0
    for d in [(2, 1), (3, 3), (3, 2), (4, 3), (3, 5), (4, 5), (4, 7)]:
        out.equal("twisted %r: relation on vanishing target H1'^3" % (d,),
                  real6._tw_insertion(d, ((3, 0),), ctx), 0)
    for d in [(2, 2), (3, 2), (3, 4), (4, 2), (2, 4), (4, 4), (3, 6)]:
        out.equal("twisted %r: both empty-class relations" % (d,),
                  real6.rgw_p1cubed_twisted(d, (), ctx, method="raise_b"),
                  real6.rgw_p1cubed_twisted(d, (), ctx, method="raise_a"))
    return out.checks


def _blowup_specs():
    return [s for s in tables.SPECS if s.kind == "blowup"]


def _pivot_checks(ctx):
    out = _Collector("cross")
    alt = _ctx(pivot="smallest")
    bad = []
    n = 0
    for spec in _blowup_specs():
        for col in spec.columns:
            d, a, b = col
            c = tuple(a) + tuple(x for x in b for _ in (0, 1))
            n += 1
            if cgw.gw_blowup(d, c, ctx) != cgw.gw_blowup(d, c, alt):
                bad.append("complex %s" % geo.key_blowup(d, c))
            for l in range(geo.ell_real_blowup(d, a, b) // 2 + 1):
                n += 1
                if real4.wel_blowup(d, a, b, l, ctx) != real4.wel_blowup(d, a, b, l, alt):
                    bad.append(geo.key_real_blowup(d, a, b, l))
    out.true("blowup pivot independence on %d table cells" % n, not bad, ", ".join(bad[:5]))
    return out.checks


def _lift_checks(ctx):
    # conjugate pairs of points traded for conjugate blowup pairs of weight 1, and back
    out = _Collector("cross")
    for d in range(2, 7):
        for l in range(1, (3 * d - 1) // 2 + 1):
            out.equal("P2 d=%d l=%d through phantom blowup pairs" % (d, l),
                      real4.wel_blowup_direct(d, (), (), l, ctx), real4.wel_p2(d, l, ctx))
    for d, a, b, l in [(5, (2,), (2,), 1), (6, (3, 2), (), 3), (6, (), (2,), 4), (7, (2, 2), (2,), 1),
                       (5, (2,), (1,), 2), (6, (2, 2), (1, 1), 1)]:
        out.equal("BL %s via direct relation" % geo.key_real_blowup(d, a, b, l),
                  real4.wel_blowup_direct(d, a, b, l, ctx), real4.wel_blowup(d, a, b, l, ctx))
    return out.checks


# parity


def parity_forbidden(key):
    """Whether the parity rule forces the sixfold key to vanish, or None for other keys."""
    parts = key.split("|")
    if len(parts) != 4:
        return None
    space, inv, cls, ins = parts
    if space == "P3" and inv == "tau3":
        d = int(cls[2:])
        m = geo._parse_tuple(ins[2:])
        return (d - k_p3(d, m)) % 2 == 0
    if space == "P1^3" and inv in ("phi3", "phi3tw"):
        d = geo._parse_tuple(cls)
        m = [tuple(int(ch) for ch in x) for x in ins[2:].split(",") if x]
        k = k_p1cubed(d, m) if inv == "phi3" else k_twisted(d, m)
        return k % 2 == 0
    return None


def scan_parity(store):
    """(number of sixfold keys scanned, offending keys)."""
    n = 0
    bad = []
    for key, value in store.items():
        forbidden = parity_forbidden(key)
        if forbidden is None:
            continue
        n += 1
        if forbidden and value != 0:
            bad.append(key)
    return n, bad


def suite_parity(ctx=None):
    out = _Collector("parity")
    ctx = resolve(ctx)
    n, bad = scan_parity(ctx.store)
    out.true("parity vanishing on %d cached sixfold keys" % n, not bad, ", ".join(bad[:5]))
    nopar = _ctx(parity_shortcut=False)
    count = 0
    for d in range(1, 5):
        for n2 in range(0, 2 * d + 2):
            for n3 in range(0, 2 * d + 1):
                m = (3,) * n3 + (2,) * n2
                if k_p3(d, m) < 0:
                    continue
                count += 1
                with_rule = real6.rgw_p3(d, m, ctx)
                without = real6.rgw_p3(d, m, nopar)
                if with_rule != without:
                    bad.append(geo.key_p3(d, m, real=True))
    out.true("P3 up to d=4: %d keys agree with the parity rule switched off" % count, not bad, ", ".join(bad[:5]))
    n, bad = scan_parity(nopar.store)
    out.true("parity vanishing on %d P3 keys computed without the rule" % n, not bad, ", ".join(bad[:5]))
    out.checks += _flip_checks()
    return out.checks


def _phi3_cases(max_total=5, max_coord=3):
    for d in product(range(max_coord + 1), repeat=3):
        if not any(d) or sum(d) > max_total:
            continue
        for a in product(range(3), repeat=3):
            for b in range(3):
                m = [_line(0)] * a[0] + [_line(1)] * a[1] + [_line(2)] * a[2] + [ONE] * b
                if k_p1cubed(d, m) >= 0:
                    yield d, m


def _twisted_cases(max_weight=9):
    for a in range(5):
        for b in range(6):
            if (a, b) == (0, 0) or 2 * a + b > max_weight:
                continue
            for c in product(range(3), repeat=3):
                m = [(1, 1)] * c[0] + [(2, 0)] * c[1] + [real6.PT] * c[2]
                if k_twisted((a, b), m) >= 0:
                    yield (a, b), m


def _line(t):
    return tuple(0 if s == t else 1 for s in range(3))


def _flip_checks():
    # negating the k = 3 mod 4 bases must negate exactly the k = 3 mod 4 values
    out = _Collector("parity")
    base, flip = Context(), _ctx(flip_odd_bases=True)
    bad = []
    n = 0
    for d, m in _phi3_cases():
        n += 1
        k = k_p1cubed(d, m)
        sign = -1 if k % 4 == 3 else 1
        if real6.rgw_p1cubed_product(d, m, flip) != sign * real6.rgw_p1cubed_product(d, m, base):
            bad.append(geo.key_p1cubed(d, m, real=True))
    for d, m in _twisted_cases():
        n += 1
        k = k_twisted(d, m)
        sign = -1 if k % 4 == 3 else 1
        if real6.rgw_p1cubed_twisted(d, m, flip) != sign * real6.rgw_p1cubed_twisted(d, m, base):
            bad.append(geo.key_p1cubed_twisted(d, m))
    out.true("base sign flip moves only k = 3 mod 4 values (%d cases)" % n, not bad, ", ".join(bad[:5]))
    return out.checks


# symmetry


def suite_symmetry(ctx=None):
    out = _Collector("symmetry")
    c1, c2 = Context(), Context()
    for a in range(2, 6):
        for b in range(a + 1, 6):
            out.equal("P1xP1 (%d,%d) swap, complex" % (a, b),
                      cgw._p1p1_wdvv(a, b, c1), cgw._p1p1_wdvv(b, a, c2))
            for l in range(1, a + b):
                out.equal("P1xP1 (%d,%d) l=%d swap, product involution" % (a, b, l),
                          real4._prod_rec(a, b, l, c1), real4._prod_rec(b, a, l, c2))
            out.equal("P1xP1 (%d,%d) l=0 swap, product involution" % (a, b),
                      real4._prod_l0(a, b, c1, "swap"), real4._prod_l0(b, a, c2, "swap"))
    alt = _ctx(pivot="smallest")
    for d, c in [(4, (2, 2, 1)), (5, (3, 2, 2)), (6, (4, 3, 2, 2)), (6, (3, 3, 2, 2, 1)), (7, (3, 2, 2, 2))]:
        want = cgw.gw_blowup(d, c, c1)
        for p in sorted(set(permutations(c))):
            out.equal("blowup d=%d c=%r" % (d, p), cgw._blowup_wdvv(d, p, alt, "perm"), want)
    for d, a, b in [(5, (3, 2), (1,)), (6, (3, 2, 2), (2,)), (6, (2,), (3, 2)), (7, (3, 3, 2), ())]:
        want = real4.wel_blowup(d, a, b, 0, c1)
        for pa in sorted(set(permutations(a))):
            for pb in sorted(set(permutations(b))):
                out.equal("real blowup d=%d a=%r b=%r" % (d, pa, pb),
                          real4._blowup_l0(d, pa, pb, alt, "perm"), want)
    for d, m in [((2, 2, 2), [_line(0), _line(1), ONE, ONE, ONE, ONE]),
                 ((3, 2, 1), [ONE] * 4 + [_line(2)] * 3),
                 ((3, 2, 2), [ONE] * 5 + [_line(0)] * 2 + [_line(1)]),
                 ((2, 2, 2), [_line(0)] * 2 + [_line(1)] * 2 + [_line(2)] * 2 + [ONE] * 3)]:
        want = cgw.gw_p1cubed(d, m, c1)
        for p in permutations(range(3)):
            pd = tuple(d[i] for i in p)
            pm = [tuple(x[i] for i in p) for x in m]
            out.equal("(P1)^3 complex %r perm %r" % (d, p), cgw._p1cubed_wdvv(pd, pm, Context()), want)
    for d, m in [((2, 2, 2), [_line(0), ONE, ONE]), ((3, 2, 2), [ONE] * 2),
                 ((2, 2, 2), [_line(0), _line(1), _line(2), ONE]), ((3, 2, 2), []), ((3, 3, 1), [ONE, ONE, ONE])]:
        want = real6.rgw_p1cubed_product(d, m, c1)
        for p in permutations(range(3)):
            pd = tuple(d[i] for i in p)
            pm = sorted((tuple(x[i] for i in p) for x in m), reverse=True)
            k = k_p1cubed(pd, pm)
            got = real6._phi3_dispatch(pd, pm, k, Context())
            out.equal("(P1)^3 phi3 %r perm %r" % (d, p), got, want)
    return out.checks


# fiber classes


def suite_fiber(ctx=None):
    out = _Collector("fiber")
    ctx = resolve(ctx)
    generic = _ctx(fiber_closed_forms=False)
    bad = []
    n = 0
    for d, m in _phi3_cases(max_total=6, max_coord=5):
        if min(d) > 1 or sorted(d)[1] + sorted(d)[2] > 5:
            continue
        n += 1
        if real6.rgw_p1cubed_product(d, m, ctx) != real6.rgw_p1cubed_product(d, m, generic):
            bad.append(geo.key_p1cubed(d, m, real=True))
        if cgw.gw_p1cubed(d, m, ctx) != cgw.gw_p1cubed(d, m, generic):
            bad.append(geo.key_p1cubed(d, m))
    out.true("(P1)^3 fiber closed forms vs recursion (%d classes)" % n, not bad, ", ".join(bad[:5]))
    bad = []
    n = 0
    for d, m in _twisted_cases(max_weight=11):
        if d[1] > 1 or d[0] > 5 or d[0] < 1:
            continue
        n += 1
        if real6.rgw_p1cubed_twisted(d, m, ctx) != real6.rgw_p1cubed_twisted(d, m, generic):
            bad.append(geo.key_p1cubed_twisted(d, m))
    out.true("twisted fiber closed forms vs recursion (%d classes)" % n, not bad, ", ".join(bad[:5]))
    out.equal("phi3 empty class (1,1,1)", real6.rgw_p1cubed_product(ONE, (), ctx), Fraction(-1))
    out.equal("phi3 empty class (1,1,1) by closed form",
              real6.phi3_fiber_value(ONE, [], ctx), Fraction(-1))
    out.equal("twisted empty class (1,1)", real6.rgw_p1cubed_twisted((1, 1), (), ctx), Fraction(1))
    out.equal("twisted empty class (1,1) by closed form",
              real6.twisted_fiber_value((1, 1), [], ctx), Fraction(1))
    return out.checks


_RUNNERS = {
    "tables": suite_tables,
    "cross": suite_cross,
    "parity": suite_parity,
    "symmetry": suite_symmetry,
    "fiber": suite_fiber,
}


def run(suite, ctx=None):
    """Run one suite or "all"; the parity scan runs last so it sees every cached key."""
    names = SUITES if suite == "all" else (suite,)
    if suite != "all" and suite not in _RUNNERS:
        raise KeyError("unknown suite %r" % suite)
    if "parity" in names:
        names = tuple(x for x in names if x != "parity") + ("parity",)
    ctx = resolve(ctx)
    checks = []
    for name in names:
        checks += _RUNNERS[name](ctx)
    return checks

