"""Genus-0 Gromov-Witten invariants of P2, P1xP1, blowups of P2, P3 and (P1)^3."""

from itertools import product

from . import geometry as geo
from .exact import Fraction, SchedulingError, binom, exact_div
from .store import resolve

# P2


def gw_p2(d, ctx=None):
    """Number of rational degree-d plane curves through 3d-1 points."""
    if d < 1:
        raise ValueError("P2 degree must be positive, got %d" % d)
    if d == 1:
        return Fraction(1)
    ctx = resolve(ctx)
    key = geo.key_p2(d)
    return ctx.memo(key, lambda: _kontsevich(d, ctx, key))


def _kontsevich(d, ctx, key):
    total = Fraction(0)
    for d1, d2 in geo.degree_splits(d):
        w = Fraction(d1 * d2) - Fraction(2 * (d1 - d2) ** 2, 3 * d - 2)
        total += w * binom(3 * d - 2, 3 * d1 - 1) * d1 * d2 * gw_p2(d1, ctx) * gw_p2(d2, ctx)
    return exact_div(total, 6 * (d - 1), "Kontsevich", key)


# P1 x P1


def gw_p1p1(a, b, ctx=None):
    if a < 0 or b < 0:
        raise ValueError("negative bidegree (%d,%d)" % (a, b))
    a, b = geo.canonical_p1p1(a, b)
    if a == 0:
        return Fraction(1 if b == 1 else 0)
    if a == 1:
        return Fraction(1)
    ctx = resolve(ctx)
    return ctx.memo(geo.key_p1p1(a, b), lambda: _p1p1_wdvv(a, b, ctx))


def _p1p1_wdvv(a, b, ctx):
    top = 2 * a + 2 * b - 4
    total = Fraction(0)
    for (a1, b1), (a2, b2) in geo.vector_splits((a, b)):
        w = (a1 * b2 + a2 * b1) * (a1 + b1)
        if not w:
            continue
        inner = (a2 + b2) * binom(top, 2 * a1 + 2 * b1 - 2) - (a1 + b1) * binom(top, 2 * a1 + 2 * b1 - 1)
        if inner:
            total += w * inner * gw_p1p1(a1, b1, ctx) * gw_p1p1(a2, b2, ctx)
    return total / 2


def gw_p1p1_total(d, ctx=None):
    """Sum of N_{a,b} over a + b = d."""
    return sum((gw_p1p1(a, d - a, ctx) for a in range(d + 1)), Fraction(0))


# blowups of P2


def gw_blowup(d, c, ctx=None):
    """N for the class dL - sum c_i E_i in P2 blown up at len(c) points.

    ``d = 0`` with a single entry -1 is an exceptional class.
    """
    c = tuple(c)
    if d == 0:
        nz = sorted(x for x in c if x)
        return Fraction(1 if nz == [-1] else 0)
    if d < 0 or any(x < 0 for x in c):
        return Fraction(0)
    ctx = resolve(ctx)
    d, c = geo.canonical_blowup(d, c)
    if geo.ell_blowup(d, c) < 0:
        return Fraction(0)
    # an entry 1 can be dropped as long as the smaller class has ell >= 0
    c = tuple(x for x in c if x != 1)
    if not c:
        return gw_p2(d, ctx)
    if ctx.options.effectiveness and not geo.is_effective_blowup(d, c):
        return Fraction(0)
    key = geo.key_blowup(d, c)
    return ctx.memo(key, lambda: _blowup_wdvv(d, c, ctx, key))


def _blowup_wdvv(d, c, ctx, key):
    if ctx.options.pivot == "largest":
        i = 0
    else:
        i = max(j for j, x in enumerate(c) if x >= 2)
    ci = c[i]
    if ci < 2:
        raise SchedulingError("no blowup pivot with c_i >= 2 for %s" % key)
    ell = geo.ell_blowup(d, c)
    w = c[:i] + (ci - 1,) + c[i + 1:]
    total = (d * d - (ci - 1) ** 2) * gw_blowup(d, w, ctx)
    for d1 in range(1, d):
        d2 = d - d1
        for c1 in product(*(range(x + 1) for x in w)):
            c2 = tuple(x - y for x, y in zip(w, c1))
            if not c2[i]:
                continue
            l1 = 3 * d1 - 1 - sum(c1)
            if l1 < 0 or l1 > ell or 3 * d2 - 1 - sum(c2) < 0:
                continue
            coef = d1 * c2[i] * (d2 * c1[i] - d1 * c2[i])
            if not coef:
                continue
            pair = d1 * d2 - sum(x * y for x, y in zip(c1, c2))
            if not pair:
                continue
            n1 = gw_blowup(d1, c1, ctx)
            if not n1:
                continue
            n2 = gw_blowup(d2, c2, ctx)
            if n2:
                total += pair * coef * binom(ell, l1) * n1 * n2
    return exact_div(total, d * d * ci, "blowup WDVV", key)


# P3


def _strip_p3(d, m):
    """Apply the divisor relation and the trivial vanishings; returns (factor, m)."""
    factor = 1
    out = []
    for x in m:
        if x == 1:
            factor *= d
        elif x in (2, 3):
            out.append(x)
        else:
            return 0, ()
    return factor, tuple(sorted(out, reverse=True))


def gw_p3(d, m, ctx=None):
    """<H^m1, ..., H^ml>_d for lines of degree d in P3."""
    if d < 1:
        raise ValueError("P3 degree must be positive, got %d" % d)
    factor, m = _strip_p3(d, m)
    if not factor:
        return Fraction(0)
    if sum(m) != 4 * d + len(m):
        return Fraction(0)
    if len(m) <= 2:
        return Fraction(factor if (d, m) == (1, (3, 3)) else 0)
    ctx = resolve(ctx)
    key = geo.key_p3(d, m)
    return factor * ctx.memo(key, lambda: _p3_wdvv(d, m, ctx))


def _p3_wdvv(d, n, ctx):
    m1, m2, m3 = n[0], n[1], n[2] - 1
    rest = n[3:]
    total = gw_p3(d, (m1, m2 + 1, m3) + rest, ctx)
    total += d * gw_p3(d, (m1 + m3, m2) + rest, ctx)
    base = (m1, m2, m3) + rest
    k = len(rest)
    for d1 in range(1, d):
        d2 = d - d1
        for mask in range(1 << k):
            left = [base[0]]
            right = []
            for t in range(k):
                (left if mask >> t & 1 else right).append(rest[t])
            for i in (1, 2):
                j = 3 - i
                # m3 with m1, m2 on the other side, minus the mirrored placement
                plus = gw_p3(d1, left + [m3, i], ctx) * gw_p3(d2, [j, m2] + right, ctx)
                minus = gw_p3(d1, left + [m2, i], ctx) * gw_p3(d2, [j, m3] + right, ctx)
                total += d2 * (plus - minus)
    return total


# (P1)^3

ONE = (1, 1, 1)


def strip_p1cubed(d, m):
    factor = 1
    out = []
    for x in m:
        if any(y not in (0, 1) for y in x) or not any(x):
            return 0, ()
        if sum(x) == 1:
            factor *= d[x.index(1)]
        else:
            out.append(tuple(x))
    return factor, out


def _types(m, t):
    """Counts (a1, a2, a3, b) of insertion types with coordinate ``t`` in the last slot."""
    counts = [0, 0, 0, 0]
    for x in m:
        if sum(x) == 3:
            counts[3] += 1
        else:
            counts[x.index(0)] += 1
    return counts


def _reorder(d, m, t):
    """Move coordinate t of d and of every insertion to the last slot."""
    p = [i for i in range(3) if i != t] + [t]
    return tuple(d[i] for i in p), [tuple(x[i] for i in p) for x in m]


def gw_p1cubed(d, m, ctx=None):
    ctx = resolve(ctx)
    raw = ("gw13", tuple(d), tuple(map(tuple, m)))
    value = ctx.scratch.get(raw)
    if value is None:
        value = ctx.scratch[raw] = _gw_p1cubed(tuple(d), m, ctx)
    return value


def _gw_p1cubed(d, m, ctx):
    if len(d) != 3 or any(x < 0 for x in d) or not any(d):
        raise ValueError("bad (P1)^3 degree %r" % (d,))
    factor, m = strip_p1cubed(d, m)
    if not factor:
        return Fraction(0)
    if sum(sum(x) for x in m) != 2 * sum(d) + len(m):
        return Fraction(0)
    d, m = geo.canonical_p1cubed(d, m)
    closed = _p1cubed_fiber(d, m, ctx) if ctx.options.fiber_closed_forms else None
    if closed is not None:
        return factor * closed
    if len(m) < 3:
        # reachable only with closed forms disabled; every such class is a fiber class
        return factor * _p1cubed_fiber(d, m, ctx)
    key = geo.key_p1cubed(d, m)
    return factor * ctx.memo(key, lambda: _p1cubed_wdvv(d, m, ctx))


def _p1cubed_fiber(d, m, ctx):
    """Closed forms for classes with some coordinate 0 or 1, or None."""
    for t in range(3):
        if d[t] == 0:
            (d1, d2, _), mm = _reorder(d, m, t)
            a1, a2, a3, b = _types(mm, 2)
            if a1 + a2 + b != 1:
                return Fraction(0)
            n = gw_p1p1(d1, d2, ctx)
            if b:
                return n
            return d2 * n if a1 else d1 * n
    for t in range(3):
        if d[t] == 1:
            (d1, d2, _), mm = _reorder(d, m, t)
            a1, a2, a3, b = _types(mm, 2)
            s = a1 + a2 + b
            if s < 3:
                return Fraction(0)
            if s == 3:
                return d1 ** a2 * d2 ** a1 * gw_p1p1(d1, d2, ctx)
    return None


def _add(u, v):
    return tuple(x + y for x, y in zip(u, v))


def _sub(u, v):
    return tuple(x - y for x, y in zip(u, v))


NONZERO = [v for v in product((0, 1), repeat=3) if any(v)]
COMPLEMENTS = [(i, _sub(ONE, i)) for i in NONZERO if any(_sub(ONE, i))]


def _p1cubed_wdvv(d, m, ctx):
    n = sorted(m, key=lambda x: (sum(x), x), reverse=True)
    n3 = n[2]
    choices = [r for r in range(3) if n3[r] == 1]
    r = next((x for x in choices if d[x] > 0), choices[0])
    er = tuple(1 if t == r else 0 for t in range(3))
    m1, m2, m3 = n[0], n[1], _sub(n3, er)
    rest = n[3:]
    total = gw_p1cubed(d, [m1, _add(m2, er), m3] + rest, ctx)
    total += d[r] * gw_p1cubed(d, [_add(m1, m3), m2] + rest, ctx)
    k = len(rest)
    for d1, d2 in geo.vector_splits(d):
        if not d2[r]:
            continue
        for mask in range(1 << k):
            left = [m1]
            right = []
            for t in range(k):
                (left if mask >> t & 1 else right).append(rest[t])
            for i, j in COMPLEMENTS:
                plus = gw_p1cubed(d1, left + [m3, i], ctx) * gw_p1cubed(d2, [j, m2] + right, ctx)
                minus = gw_p1cubed(d1, left + [m2, i], ctx) * gw_p1cubed(d2, [j, m3] + right, ctx)
                total += d2[r] * (plus - minus)
    return total


# half-basis expansion for the twisted involution

_EXPAND = {
    0: [(Fraction(1), (0, 0))],
    1: [(Fraction(1, 2), (1, 0)), (Fraction(1, 2), (0, 1))],
    2: [(Fraction(1, 2), (1, 1))],
}


def gw_p1cubed_halfbasis(d_pair, m, ctx=None):
    """Complex invariant in the basis H1' = (H1+H2)/2, H2' = H3, summed over lifts of (a, b).

    Insertions are pairs ``(r, s)`` standing for H1'^r H2'^s.
    """
    a, b = d_pair
    if b % 2:
        return Fraction(0)
    for r, s in m:
        if r > 2 or s > 1 or r < 0 or s < 0:
            return Fraction(0)
    if a == 0 and b == 0:
        raise ValueError("zero class")
    total = Fraction(0)
    for choice in product(*(_EXPAND[r] for r, _ in m)):
        coef = Fraction(1)
        ins = []
        for (w, (x, y)), (_, s) in zip(choice, m):
            coef *= w
            ins.append((x, y, s))
        for a1 in range(a + 1):
            total += coef * gw_p1cubed((a1, a - a1, b // 2), ins, ctx)
    return total
