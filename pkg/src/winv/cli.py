"""``winv``: single invariants, table regeneration and property suites."""

import argparse
import os
import sys
from collections import Counter

from . import complex_gw as cgw
from . import geometry as geo
from . import real4, real6, tables, verify
from .exact import IntegralityError, SchedulingError, pow2, to_text
from .store import CACHE_ENV, CacheFormatError, Context, CorruptionError

EXIT_USAGE = 2
EXIT_SCHEDULING = 3

_REAL_CHOICES = {
    "p2": ("tau2",),
    "p1p1": ("product", "twisted"),
    "blowup": ("real",),
    "p3": ("tau3",),
    "p1cubed": ("phi3", "twisted"),
}


class UsageError(ValueError):
    pass


def _ints(text, what):
    if text is None or text == "":
        return ()
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise UsageError("%s must be comma-separated integers, got %r" % (what, text)) from None


def _vectors(text, width):
    """Insertions such as ``110,011`` (digits per coordinate)."""
    out = []
    for item in (text or "").split(","):
        item = item.strip()
        if not item:
            continue
        if len(item) != width or not item.isdigit():
            raise UsageError("insertion %r must have %d digits" % (item, width))
        out.append(tuple(int(ch) for ch in item))
    return out


def _one_int(values, what):
    if len(values) != 1:
        raise UsageError("%s takes a single integer" % what)
    return values[0]


def evaluate(args, ctx):
    """(value, key) for a parsed ``compute`` query."""
    space, real = args.space, args.real
    if real and real not in _REAL_CHOICES[space]:
        raise UsageError("--real %s does not apply to %s (choose from %s)"
                         % (real, space, ", ".join(_REAL_CHOICES[space])))
    deg = _ints(args.degree, "-d")
    l = args.pairs
    if l < 0:
        raise UsageError("-l must be nonnegative")
    if not deg:
        raise UsageError("-d is required")
    if space == "p2":
        d = _one_int(deg, "-d")
        if real:
            return real4.wel_p2(d, l, ctx), geo.key_p2(d, l)
        return cgw.gw_p2(d, ctx), geo.key_p2(d)
    if space == "p1p1":
        if real == "twisted":
            d = _one_int(deg, "-d")
            return real4.wel_p1p1_twisted(d, l, ctx), geo.key_p1p1_twisted(d, l)
        if len(deg) != 2:
            raise UsageError("P1xP1 bidegree is -d a,b")
        if real:
            return real4.wel_p1p1_product(deg[0], deg[1], l, ctx), geo.key_p1p1(deg[0], deg[1], l)
        return cgw.gw_p1p1(deg[0], deg[1], ctx), geo.key_p1p1(*deg)
    if space == "blowup":
        d = _one_int(deg, "-d")
        a, b = _ints(args.a, "-a"), _ints(args.b, "-b")
        if real:
            return real4.wel_blowup(d, a, b, l, ctx), geo.key_real_blowup(d, a, b, l)
        if b:
            raise UsageError("complex blowup classes take only -a")
        return cgw.gw_blowup(d, a, ctx), geo.key_blowup(d, a)
    if space == "p3":
        d = _one_int(deg, "-d")
        m = _ints(args.insertions, "-m") + (3,) * l
        if real:
            return real6.rgw_p3(d, m, ctx), geo.key_p3(d, m, real=True)
        return cgw.gw_p3(d, m, ctx), geo.key_p3(d, m)
    if space == "p1cubed":
        if real == "twisted":
            if len(deg) != 2:
                raise UsageError("twisted (P1)^3 classes are -d a,b for a(L1+L2)+bL3")
            m = _vectors(args.insertions, 2)
            value = pow2(l) * real6.rgw_p1cubed_twisted(deg, m + [real6.PT] * l, ctx)
            return value, geo.key_p1cubed_twisted(deg, m + [real6.PT] * l)
        if len(deg) != 3:
            raise UsageError("(P1)^3 classes are -d d1,d2,d3")
        m = _vectors(args.insertions, 3) + [real6.ONE] * l
        if real:
            return real6.rgw_p1cubed_product(deg, m, ctx), geo.key_p1cubed(deg, m, real=True)
        return cgw.gw_p1cubed(deg, m, ctx), geo.key_p1cubed(deg, m)
    raise UsageError("unknown space %r" % space)


def _cache_path(args):
    return args.cache or os.environ.get(CACHE_ENV) or None


def _open_context(args):
    ctx = Context()
    path = _cache_path(args)
    if path and os.path.exists(path):
        ctx.store.load(path, force=getattr(args, "force", False))
    return ctx, path


def _close_context(ctx, path):
    if path:
        ctx.store.save(path)


def cmd_compute(args, out):
    ctx, path = _open_context(args)
    try:
        value, key = evaluate(args, ctx)
    except SchedulingError as exc:
        print("scheduling error: %s" % exc, file=sys.stderr)
        return EXIT_SCHEDULING
    except ValueError as exc:
        if isinstance(exc, (CacheFormatError, IntegralityError)):
            raise
        raise UsageError(str(exc)) from None
    print("%s\t%s" % (to_text(value), key), file=out)
    _close_context(ctx, path)
    return 0


def _write(text, dest, out):
    if dest:
        with open(dest, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        out.write(text)


def cmd_table(args, out):
    if args.all:
        specs = tables.SPECS
    elif args.table:
        try:
            specs = [tables.get_spec(args.table)]
        except KeyError as exc:
            raise UsageError(exc.args[0]) from None
    else:
        raise UsageError("name a table (T1..T20 or an alias) or pass --all")
    if len(specs) > 1 and args.output and not os.path.isdir(args.output):
        raise UsageError("--output must be a directory with --all")
    ctx, path = _open_context(args)
    status = 0
    for spec in specs:
        try:
            rows = tables.compute_table(spec, ctx)
        except SchedulingError as exc:
            print("scheduling error in %s: %s" % (spec.table_id, exc), file=sys.stderr)
            return EXIT_SCHEDULING
        text = tables.to_csv(spec, rows) if args.format == "csv" else tables.to_json(spec, rows)
        if args.diff is not None:
            csv_text = text if args.format == "csv" else tables.to_csv(spec, rows)
            diffs = tables.diff_against(spec, csv_text, args.diff)
            for line in diffs:
                print(line, file=out)
            print("%s: %s" % (spec.table_id, "ok" if not diffs else "%d mismatches" % len(diffs)), file=out)
            if diffs:
                status = 1
        else:
            dest = args.output
            if dest and os.path.isdir(dest):
                ext = "csv" if args.format == "csv" else "json"
                dest = os.path.join(dest, "%s.%s" % (tables.golden_name(spec)[:-4], ext))
            _write(text, dest, out)
        if args.plot:
            from .plotting import plot_table

            target = args.plot
            if len(specs) > 1:
                root, ext = os.path.splitext(args.plot)
                target = "%s_%s%s" % (root, spec.table_id, ext or ".png")
            plot_table(spec, rows, target)
    _close_context(ctx, path)
    return status


def cmd_verify(args, out):
    ctx, path = _open_context(args)
    suites = verify.SUITES if args.suite == "all" else (args.suite,)
    checks = verify.run(args.suite, ctx)
    for c in checks:
        line = "%s %-9s %s" % ("PASS" if c.passed else "FAIL", c.suite, c.name)
        if c.detail:
            line += ": " + c.detail
        print(line, file=out)
    failed = sum(1 for c in checks if not c.passed)
    for s in suites:
        mine = [c for c in checks if c.suite == s]
        print("%s: %d passed, %d failed" % (s, sum(c.passed for c in mine), sum(not c.passed for c in mine)), file=out)
    _close_context(ctx, path)
    return 1 if failed else 0


def cmd_cache(args, out):
    path = _cache_path(args)
    if not path:
        raise UsageError("no cache file: pass --cache PATH or set %s" % CACHE_ENV)
    if args.action == "clear":
        ctx = Context()
        ctx.store.save(path)
        print("cleared %s" % path, file=out)
        return 0
    if not os.path.exists(path):
        print("%s: no cache file" % path, file=out)
        return 0
    ctx = Context()
    n = ctx.store.load(path, force=args.force)
    print("%s: %d records, engine %s" % (path, n, ctx.store.engine_version), file=out)
    groups = Counter("|".join(k.split("|")[:2]) for k, _ in ctx.store.items())
    for name, count in sorted(groups.items()):
        print("  %-20s %d" % (name, count), file=out)
    if args.keys:
        for key, value in ctx.store.items():
            print("%s\t%s" % (key, to_text(value)), file=out)
    return 0


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cache", metavar="PATH", help="cache file (default: $%s; none if unset)" % CACHE_ENV)
    common.add_argument("--force", action="store_true", help="load a cache written by another engine version")

    p = argparse.ArgumentParser(prog="winv", description="Exact complex and real genus-0 invariants.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", parents=[common], help="evaluate one invariant")
    c.add_argument("--space", required=True, choices=sorted(_REAL_CHOICES))
    c.add_argument("--real", metavar="INV",
                   help="involution: tau2 (p2), product|twisted (p1p1), real (blowup), "
                        "tau3 (p3), phi3|twisted (p1cubed); omit for the complex invariant")
    c.add_argument("-d", dest="degree", required=True,
                   help="degree: d, or a,b for p1p1 and twisted p1cubed, or d1,d2,d3")
    c.add_argument("-a", help="blowup multiplicities at real points (complex: all points)")
    c.add_argument("-b", help="blowup multiplicities at conjugate pairs")
    c.add_argument("-m", dest="insertions",
                   help="insertions: P3 exponents like 3,2; p1cubed vectors like 110,011; twisted pairs like 11,20")
    c.add_argument("-l", dest="pairs", type=int, default=0, help="conjugate pairs of points")

    t = sub.add_parser("table", parents=[common], help="regenerate a table")
    t.add_argument("table", nargs="?", help="T1..T20 or an alias; see --list")
    t.add_argument("--all", action="store_true", help="every table")
    t.add_argument("--list", action="store_true", help="list table ids and aliases")
    t.add_argument("--format", choices=("csv", "json"), default="csv")
    t.add_argument("--output", "-o", metavar="PATH", help="file, or directory with --all")
    t.add_argument("--diff", nargs="?", const=tables.GOLDEN_DIR, metavar="DIR",
                   help="compare against DIR/Tnn.csv (default: the bundled golden tables); exit 1 on mismatch")
    t.add_argument("--plot", metavar="PNG", help="also write a semilog plot of |N| by row")

    v = sub.add_parser("verify", parents=[common], help="run property suites")
    v.add_argument("--suite", choices=verify.SUITES + ("all",), default="all")

    k = sub.add_parser("cache", parents=[common], help="inspect or clear the cache file")
    k.add_argument("action", choices=("inspect", "clear"))
    k.add_argument("--keys", action="store_true", help="print every record")
    return p


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "compute":
            return cmd_compute(args, out)
        if args.command == "table":
            if args.list:
                for s in tables.SPECS:
                    print("%-4s %-16s %s" % (s.table_id, s.alias, s.title), file=out)
                return 0
            return cmd_table(args, out)
        if args.command == "verify":
            return cmd_verify(args, out)
        return cmd_cache(args, out)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print("winv: error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    except (CacheFormatError, CorruptionError) as exc:
        print("winv: cache error: %s" % exc, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
