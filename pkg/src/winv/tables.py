"""Table layouts, cell evaluation, CSV/JSON emission and golden diffs.

Constraint conventions that belong to a particular table live here so
that the engines stay free of them.
"""

import csv
import io
import json
import os
from dataclasses import dataclass

from . import geometry as geo
from .complex_gw import gw_blowup, gw_p1cubed, gw_p1p1, gw_p2
from .exact import assert_integral, pow2, to_text
from .real4 import wel_blowup, wel_p1p1_product, wel_p1p1_twisted, wel_p2
from .real6 import ONE, rgw_p1cubed_product, rgw_p1cubed_twisted
from .store import resolve

GOLDEN_DIR = os.path.join(os.path.dirname(__file__), "golden")


@dataclass(frozen=True)
class Cell:
    value: object
    record: dict


@dataclass
class TableSpec:
    table_id: str
    alias: str
    title: str
    kind: str
    columns: list
    row_prefix: str = "l"

    def labels(self):
        return [_label(self.kind, c) for c in self.columns]

    def max_row(self):
        return max(_row_bound(self.kind, c) for c in self.columns)


def _tuple_label(t):
    return "(%s)" % ",".join(str(x) for x in t)


def _label(kind, col):
    if kind in ("p2", "p1p1tw"):
        return "d=%d" % col
    if kind == "blowup":
        d, a, b = col
        return "%d,%s,%s" % (d, _tuple_label(a), _tuple_label(b))
    return _tuple_label(col)


def _row_bound(kind, col):
    if kind == "p2":
        return (3 * col - 1) // 2
    if kind == "p1p1tw":
        return (4 * col - 1) // 2
    if kind == "p1p1":
        return (2 * sum(col) - 1) // 2
    if kind == "blowup":
        return geo.ell_real_blowup(*col) // 2
    if kind == "phi3":
        return (6 - sum(col)) // 2
    if kind == "phi3tw":
        return (6 - sum(col)) // 2
    raise ValueError(kind)


def _real_k(kind, col, n):
    if kind == "p2":
        return 3 * col - 1 - 2 * n
    if kind == "p1p1tw":
        return 4 * col - 1 - 2 * n
    if kind == "p1p1":
        return 2 * sum(col) - 1 - 2 * n
    if kind == "blowup":
        return geo.ell_real_blowup(*col) - 2 * n
    return 6 - sum(col) - 2 * n


def _lines_phi3(a, copies):
    """Insertions for copies*a_t conjugate pairs of L_t-lines, t = 1, 2, 3."""
    m = []
    for t in range(3):
        m += [tuple(0 if s == t else 1 for s in range(3))] * (copies * a[t])
    return m


def complex_cell(spec, col, ctx=None):
    kind = spec.kind
    if kind == "p2":
        return Cell(gw_p2(col, ctx), _rec("P2", "", col, [], None, geo.key_p2(col)))
    if kind == "p1p1tw":
        return Cell(gw_p1p1(col, col, ctx), _rec("P1xP1", "", [col, col], [], None, geo.key_p1p1(col, col)))
    if kind == "p1p1":
        a, b = col
        return Cell(gw_p1p1(a, b, ctx), _rec("P1xP1", "", list(col), [], None, geo.key_p1p1(a, b)))
    if kind == "blowup":
        d, a, b = col
        # complex row: each conjugate pair of blown-up points counts twice in P2_{r+2s}
        c = tuple(a) + tuple(x for x in b for _ in (0, 1))
        return Cell(gw_blowup(d, c, ctx), _rec("BL", "", [d, list(c)], [], None, geo.key_blowup(d, c)))
    if kind == "phi3":
        d = (2, 2, 2)
        m = _lines_phi3(col, 2) + [ONE] * (6 - sum(col))
        return Cell(gw_p1cubed(d, m, ctx), _rec("P1^3", "", list(d), m, None, geo.key_p1cubed(d, m)))
    if kind == "phi3tw":
        a1, a2 = col
        d = (2, 2, 2)
        m = [(0, 1, 1)] * a1 + [(1, 0, 1)] * a1 + [(1, 1, 0)] * (2 * a2) + [ONE] * (6 - a1 - a2)
        return Cell(gw_p1cubed(d, m, ctx), _rec("P1^3", "", list(d), m, None, geo.key_p1cubed(d, m)))
    raise ValueError(kind)


def real_cell(spec, col, n, ctx=None):
    """Cell in row ``n`` (pairs l for fourfolds, point pairs b for sixfolds), or None when blank."""
    kind = spec.kind
    if _real_k(kind, col, n) < 0:
        return None
    if kind == "p2":
        return Cell(wel_p2(col, n, ctx), _rec("P2", "tau2", col, [], n, geo.key_p2(col, n)))
    if kind == "p1p1tw":
        return Cell(wel_p1p1_twisted(col, n, ctx),
                    _rec("P1xP1", "tau11tw", col, [], n, geo.key_p1p1_twisted(col, n)))
    if kind == "p1p1":
        a, b = col
        return Cell(wel_p1p1_product(a, b, n, ctx), _rec("P1xP1", "tau11", list(col), [], n, geo.key_p1p1(a, b, n)))
    if kind == "blowup":
        d, a, b = col
        return Cell(wel_blowup(d, a, b, n, ctx),
                    _rec("BL", "real", [d, list(a), list(b)], [], n, geo.key_real_blowup(d, a, b, n)))
    if kind == "phi3":
        d = (2, 2, 2)
        m = _lines_phi3(col, 1) + [ONE] * n
        return Cell(rgw_p1cubed_product(d, m, ctx),
                    _rec("P1^3", "phi3", list(d), m, n, geo.key_p1cubed(d, m, real=True)))
    if kind == "phi3tw":
        a1, a2 = col
        d = (2, 2)
        # pairs of L1/L2-lines read as H1'H2'; L3-lines and points carry a factor 2 each
        m = [(1, 1)] * a1 + [(2, 0)] * a2 + [(2, 1)] * n
        value = pow2(a2 + n) * rgw_p1cubed_twisted(d, m, ctx)
        return Cell(value, _rec("P1^3", "phi3tw", list(d), m, n, geo.key_p1cubed_twisted(d, m)))
    raise ValueError(kind)


def _rec(space, involution, cls, ins, pairs, key):
    return {"space": space, "involution": involution, "class": cls,
            "insertions": [list(x) for x in ins], "pairs": pairs, "key": key}


def _parse_bl(label):
    d, rest = label.split(",", 1)
    a, b = rest.split("),(")
    a = tuple(int(x) for x in a.strip("()").split(",") if x)
    b = tuple(int(x) for x in b.strip("()").split(",") if x)
    return (int(d), a, b)


_BLOWUP_TABLES = [
    ("T4", "bl-1-0", "P2 blown up at one real point",
     "3,(2),();4,(2),();4,(3),();5,(2),();5,(3),();5,(4),();6,(2),();6,(3),();6,(4),();6,(5),();7,(2),()"),
    ("T5", "bl-2-0", "P2 blown up at two real points",
     "4,(2,2),();5,(2,2),();5,(3,2),();6,(2,2),();6,(3,2),();6,(3,3),();6,(4,2),();7,(2,2),()"),
    ("T6", "bl-0-1", "P2 blown up at one conjugate pair",
     "4,(),(2);5,(),(2);6,(),(2);6,(),(3);7,(),(2);7,(),(3);8,(),(2);8,(),(3)"),
    ("T7", "bl-3-0", "P2 blown up at three real points",
     "5,(2,2,2),();5,(3,2,2),();6,(2,2,2),();6,(3,2,2),();6,(3,3,2),();6,(3,3,3),();"
     "6,(4,2,2),();7,(2,2,2),();7,(3,2,2),();7,(3,3,2),()"),
    ("T8", "bl-1-1", "P2 blown up at one real point and one conjugate pair",
     "4,(2),(2);5,(2),(2);5,(3),(2);6,(2),(2);6,(3),(2);6,(2),(3);6,(3),(3);6,(4),(2);7,(2),(2)"),
    ("T9", "bl-4-0", "P2 blown up at four real points",
     "5,(2,2,2,2),();6,(2,2,2,2),();6,(3,2,2,2),();6,(3,3,2,2),();6,(4,2,2,2),();"
     "7,(2,2,2,2),();7,(3,2,2,2),();7,(3,3,2,2),();7,(3,3,3,2),();7,(3,3,3,3),()"),
    ("T10", "bl-2-1", "P2 blown up at two real points and one conjugate pair",
     "5,(2,2),(2);5,(3,2),(2);6,(2,2),(2);6,(3,2),(2);6,(3,3),(2);6,(2,2),(3);6,(3,2),(3);7,(2,2),(2)"),
    ("T11", "bl-0-2", "P2 blown up at two conjugate pairs",
     "5,(),(2,2);6,(),(2,2);6,(),(3,2);7,(),(2,2);7,(),(3,2);7,(),(3,3);8,(),(2,2);8,(),(3,2);8,(),(3,3)"),
    ("T12", "bl-5-0", "P2 blown up at five real points",
     "5,(2,2,2,2,2),();6,(2,2,2,2,2),();6,(3,2,2,2,2),();6,(3,3,2,2,2),();7,(2,2,2,2,2),();"
     "7,(3,2,2,2,2),();7,(3,3,2,2,2),();7,(3,3,3,2,2),();7,(3,3,3,3,2),()"),
    ("T13", "bl-3-1", "P2 blown up at three real points and one conjugate pair",
     "5,(2,2,2),(2);6,(2,2,2),(2);6,(3,2,2),(2);6,(3,3,2),(2);6,(2,2,2),(3);7,(2,2,2),(2)"),
    ("T14", "bl-1-2", "P2 blown up at one real point and two conjugate pairs",
     "5,(2),(2,2);6,(2),(2,2);6,(3),(2,2);6,(2),(3,2);6,(4),(2,2);7,(2),(2,2)"),
    ("T15", "bl-6-0", "P2 blown up at six real points",
     "6,(2,2,2,2,2,2),();6,(3,2,2,2,2,2),();7,(2,2,2,2,2,2),();7,(3,2,2,2,2,2),();"
     "7,(3,3,2,2,2,2),();7,(3,3,3,2,2,2),();7,(3,3,3,3,2,2),();7,(4,2,2,2,2,2),();7,(4,3,2,2,2,2),()"),
    ("T16", "bl-4-1", "P2 blown up at four real points and one conjugate pair",
     "6,(2,2,2,2),(2);6,(3,2,2,2),(2);7,(2,2,2,2),(2);7,(3,2,2,2),(2);7,(3,3,2,2),(2);"
     "7,(2,2,2,2),(3);7,(3,3,3,2),(2)"),
    ("T17", "bl-2-2", "P2 blown up at two real points and two conjugate pairs",
     "6,(2,2),(2,2);6,(3,2),(2,2);7,(2,2),(2,2);7,(3,2),(2,2);7,(3,3),(2,2);7,(2,2),(3,2);7,(3,2),(3,2)"),
    ("T18", "bl-0-3", "P2 blown up at three conjugate pairs",
     "5,(),(2,2,2);6,(),(2,2,2);6,(),(3,2,2);7,(),(2,2,2);7,(),(3,2,2);7,(),(3,3,2)"),
]


def _build_specs():
    specs = [
        TableSpec("T1", "p2", "P2: complex counts and Welschinger invariants", "p2", list(range(1, 9))),
        TableSpec("T2", "p1p1-twisted", "P1xP1, bidegree (d,d), twisted involution", "p1p1tw",
                  list(range(1, 8))),
        TableSpec("T3", "p1p1-product", "P1xP1, product involution", "p1p1",
                  [(2, 2), (2, 3), (3, 3), (2, 4), (3, 4), (4, 4), (2, 5), (3, 5), (4, 5), (5, 5)]),
    ]
    for tid, alias, title, cols in _BLOWUP_TABLES:
        specs.append(TableSpec(tid, alias, title, "blowup", [_parse_bl(c) for c in cols.split(";")]))
    specs.append(TableSpec("T19", "p1cubed-product", "(P1)^3 in degree (2,2,2), product involution", "phi3",
                           [(1, 0, 0), (1, 1, 1), (2, 1, 0), (3, 0, 0), (2, 2, 1), (3, 1, 1), (3, 2, 0),
                            (4, 1, 0), (5, 0, 0)], row_prefix="b"))
    specs.append(TableSpec("T20", "p1cubed-twisted", "(P1)^3 in degree (2,2,2), twisted involution", "phi3tw",
                           [(1, 0), (0, 1), (2, 1), (1, 2), (3, 0), (0, 3), (3, 2), (2, 3), (4, 1), (1, 4),
                            (5, 0), (0, 5)], row_prefix="b"))
    return specs


SPECS = _build_specs()
_BY_NAME = {}
for _s in SPECS:
    _BY_NAME[_s.table_id.upper()] = _s
    _BY_NAME[_s.alias.upper()] = _s


def table_ids():
    return [s.table_id for s in SPECS]


def get_spec(name):
    spec = _BY_NAME.get(name.upper())
    if spec is None:
        raise KeyError("unknown table %r; known: %s" % (name, ", ".join(table_ids())))
    return spec


def golden_name(spec):
    return "T%02d.csv" % int(spec.table_id[1:])


# evaluation


def compute_table(spec, ctx=None):
    """Rows of Cells (or None for blanks): the complex row first, then n = 0, 1, ..."""
    ctx = resolve(ctx)
    rows = [("C", [complex_cell(spec, c, ctx) for c in spec.columns])]
    for n in range(spec.max_row() + 1):
        rows.append(("%s=%d" % (spec.row_prefix, n), [real_cell(spec, c, n, ctx) for c in spec.columns]))
    for label, cells in rows:
        for cell in cells:
            if cell is not None:
                assert_integral(cell.value, cell.record["key"])
    return rows


def to_csv(spec, rows):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["row"] + spec.labels())
    for label, cells in rows:
        w.writerow([label] + ["" if c is None else to_text(c.value) for c in cells])
    return buf.getvalue()


def to_json(spec, rows):
    records = []
    for label, cells in rows:
        for col, cell in zip(spec.labels(), cells):
            if cell is None:
                continue
            rec = dict(cell.record)
            rec["value"] = to_text(cell.value)
            rec["row"] = label
            rec["column"] = col
            records.append(rec)
    doc = {"table": spec.table_id, "alias": spec.alias, "title": spec.title, "records": records}
    return json.dumps(doc, indent=1) + "\n"


def read_csv_grid(text):
    return [row for row in csv.reader(io.StringIO(text))]


def diff_against(spec, csv_text, golden_dir=None):
    """Mismatch messages between emitted CSV text and the golden file; empty when identical."""
    path = os.path.join(golden_dir or GOLDEN_DIR, golden_name(spec))
    with open(path, encoding="utf-8") as fh:
        want = read_csv_grid(fh.read())
    got = read_csv_grid(csv_text)
    out = []
    if got[0] != want[0]:
        out.append("%s: header differs: %r vs %r" % (spec.table_id, got[0], want[0]))
    want_rows = {r[0]: r[1:] for r in want[1:]}
    got_rows = {r[0]: r[1:] for r in got[1:]}
    for label in sorted(set(want_rows) | set(got_rows), key=lambda x: (x != "C", x[0], int(x[2:] or 0))):
        if label not in got_rows or label not in want_rows:
            out.append("%s: row %s present on one side only" % (spec.table_id, label))
            continue
        for col, g, w in zip(want[0][1:], got_rows[label], want_rows[label]):
            if g != w:
                out.append("%s [%s, %s]: got %r, golden %r" % (spec.table_id, label, col, g, w))
    return out
