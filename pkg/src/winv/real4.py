"""Welschinger invariants of real fourfolds.

Covers (P2, tau2), P1xP1 with the twisted and the product involution, and
P2 blown up at r real points and s conjugate pairs.  Every engine takes
the number ``l`` of conjugate point pairs; the remaining ``k`` point
constraints are real and the value is 0 when ``k < 0``.
"""

from itertools import product

from . import geometry as geo
from .complex_gw import gw_blowup, gw_p1p1, gw_p1p1_total, gw_p2
from .exact import Fraction, SchedulingError, binom, exact_div, pow2
from .store import resolve


def _neg2_pow(e):
    return pow2(e) if e % 2 == 0 else -pow2(e)


# (P2, tau2)


def wel_p2(d, l=0, ctx=None, method=None):
    """N_{d,l} for real plane curves of degree d.

    ``method`` forces one relation ("real_point", "pair_point" or "l0") for
    cross-checks; the result is then neither read from nor written to
    the memo store under the canonical key.
    """
    if d < 1 or l < 0:
        raise ValueError("bad P2 query d=%d l=%d" % (d, l))
    if 3 * d - 1 - 2 * l < 0:
        return Fraction(0)
    if d <= 2 and method is None:
        return Fraction(1)
    ctx = resolve(ctx)
    if method is not None:
        return _P2_METHODS[method](d, l, ctx)
    key = geo.key_p2(d, l)
    return ctx.memo(key, lambda: _wel_p2_dispatch(d, l, ctx))


def _wel_p2_dispatch(d, l, ctx):
    if l == 0:
        return _p2_l0(d, l, ctx)
    if 3 * d - 1 - 2 * l >= 1:
        return _p2_real_point(d, l, ctx)
    return _p2_pair_point(d, l, ctx)


def _p2_real_point(d, l, ctx):
    if d < 2 or l < 1 or 3 * d - 1 - 2 * l < 1:
        raise SchedulingError("P2 k>=1 relation outside its range at d=%d l=%d" % (d, l))
    total = Fraction(0)
    if 2 * l == 3 * d - 2:
        total -= _neg2_pow(3 * d // 2 - 4) * d * d * gw_p2(d // 2, ctx)
    for dp in range(1, (d - 1) // 2 + 1):
        d0 = d - 2 * dp
        if l - 3 * dp < 0:
            continue
        total += (_neg2_pow(3 * dp - 1) * d0 * dp ** 3 * binom(l - 1, 3 * dp - 1)
                  * gw_p2(dp, ctx) * wel_p2(d0, l - 3 * dp, ctx))
    top = 3 * d - 2 * l - 2
    for d1, d2 in geo.degree_splits(d):
        for l1 in range(l):
            l2 = l - 1 - l1
            w = d1 * d2 * binom(top, 3 * d1 - 2 * l1 - 2) - d1 * d1 * binom(top, 3 * d1 - 2 * l1 - 1)
            if w:
                total += binom(l - 1, l1) * w * wel_p2(d1, l1, ctx) * wel_p2(d2, l2, ctx)
    return total


def _p2_pair_point(d, l, ctx):
    if d < 2 or l < 2:
        raise SchedulingError("P2 l>=2 relation outside its range at d=%d l=%d" % (d, l))
    total = Fraction(0)
    for dp in range(1, (d - 1) // 2 + 1):
        d0 = d - 2 * dp
        if l - 3 * dp < 0:
            continue
        w = d0 * binom(l - 2, 3 * dp - 2) - 2 * dp * binom(l - 2, 3 * dp - 1)
        total += _neg2_pow(3 * dp - 2) * d0 * dp * dp * w * gw_p2(dp, ctx) * wel_p2(d0, l - 3 * dp, ctx)
    top = 3 * d - 2 * l - 1
    for d1, d2 in geo.degree_splits(d):
        for l1 in range(l - 1):
            l2 = l - 2 - l1
            w = d1 * d2 * binom(top, 3 * d1 - 2 * l1 - 2) - d1 * d1 * binom(top, 3 * d1 - 2 * l1 - 1)
            if w:
                total += binom(l - 2, l1) * w * wel_p2(d1, l1, ctx) * wel_p2(d2, l2 + 1, ctx)
    return total


def _p2_l0(d, l, ctx):
    if d < 2 or l != 0:
        raise SchedulingError("P2 l=0 relation outside its range at d=%d l=%d" % (d, l))
    total = Fraction(0)
    for d1, d2 in geo.degree_splits(d):
        w = d1 * binom(3 * d - 3, 3 * d1 - 2) - (d2 + 1) * binom(3 * d - 3, 3 * d1 - 3)
        if w:
            total += w * wel_p2(d1, 0, ctx) * wel_p2(d2 + 1, 1, ctx)
    return total


_P2_METHODS = {"real_point": _p2_real_point, "pair_point": _p2_pair_point, "l0": _p2_l0}


# P1xP1, twisted involution


def wel_p1p1_twisted(d, l=0, ctx=None, method=None):
    """N_{d,l} for real curves of bidegree (d,d) under (z1,z2) -> (conj z2, conj z1)."""
    if d < 1 or l < 0:
        raise ValueError("bad twisted P1xP1 query d=%d l=%d" % (d, l))
    if 4 * d - 1 - 2 * l < 0:
        return Fraction(0)
    if d == 1 and method is None:
        return Fraction(1)
    ctx = resolve(ctx)
    if method is not None:
        return _TW_METHODS[method](d, l, ctx)
    key = geo.key_p1p1_twisted(d, l)
    return ctx.memo(key, lambda: (_tw_l0 if l == 0 else _tw_real_point)(d, l, ctx))


def _tw_real_point(d, l, ctx):
    if d < 2 or l < 1 or 4 * d - 1 - 2 * l < 1:
        raise SchedulingError("twisted k>=1 relation outside its range at d=%d l=%d" % (d, l))
    total = Fraction(0)
    if l == 2 * d - 1:
        total -= (-1) ** d * pow2(l - 2) * d * d * gw_p1p1_total(d, ctx)
    for dp in range(1, d):
        d0 = d - dp
        if l - 2 * dp < 0:
            continue
        total -= ((-1) ** dp * pow2(2 * dp - 2) * d0 * dp ** 3 * binom(l - 1, 2 * dp - 1)
                  * gw_p1p1_total(dp, ctx) * wel_p1p1_twisted(d0, l - 2 * dp, ctx))
    top = 4 * d - 2 * l - 2
    for d1, d2 in geo.degree_splits(d):
        for l1 in range(l):
            l2 = l - 1 - l1
            w = d1 * d2 * binom(top, 4 * d1 - 2 * l1 - 2) - d1 * d1 * binom(top, 4 * d1 - 2 * l1 - 1)
            if w:
                total += 2 * binom(l - 1, l1) * w * wel_p1p1_twisted(d1, l1, ctx) * wel_p1p1_twisted(d2, l2, ctx)
    return total


def _tw_pair_point(d, l, ctx):
    if d < 2 or l < 2:
        raise SchedulingError("twisted l>=2 relation outside its range at d=%d l=%d" % (d, l))
    total = Fraction(0)
    for dp in range(1, d):
        d0 = d - dp
        if l - 2 * dp < 0:
            continue
        w = d0 * binom(l - 2, 2 * dp - 2) - dp * binom(l - 2, 2 * dp - 1)
        total += ((-1) ** dp * pow2(2 * dp - 2) * d0 * dp * dp * w
                  * gw_p1p1_total(dp, ctx) * wel_p1p1_twisted(d0, l - 2 * dp, ctx))
    top = 4 * d - 2 * l - 1
    for d1, d2 in geo.degree_splits(d):
        for l1 in range(l - 1):
            l2 = l - 2 - l1
            w = d1 * d2 * binom(top, 4 * d1 - 2 * l1 - 2) - d1 * d1 * binom(top, 4 * d1 - 2 * l1 - 1)
            if w:
                total += (2 * binom(l - 2, l1) * w
                          * wel_p1p1_twisted(d1, l1, ctx) * wel_p1p1_twisted(d2, l2 + 1, ctx))
    return total


def _tw_l0(d, l, ctx):
    if d < 2 or l != 0:
        raise SchedulingError("twisted l=0 relation outside its range at d=%d l=%d" % (d, l))
    total = Fraction(0)
    for d1, d2 in geo.degree_splits(d):
        w = d1 * binom(4 * d - 2, 4 * d1 - 2) - (d2 + 1) * binom(4 * d - 2, 4 * d1 - 3)
        if w:
            total += w * wel_p1p1_twisted(d1, 0, ctx) * wel_p1p1_twisted(d2 + 1, 1, ctx)
    return exact_div(total, 2 * (d - 1), "twisted l=0", geo.key_p1p1_twisted(d, 0))


_TW_METHODS = {"real_point": _tw_real_point, "pair_point": _tw_pair_point, "l0": _tw_l0}


# P1xP1, product involution


def wel_p1p1_product(a, b, l=0, ctx=None):
    """N_{(a,b),l} for real curves of bidegree (a,b) under the coordinatewise conjugation."""
    if a < 0 or b < 0 or l < 0 or (a, b) == (0, 0):
        raise ValueError("bad product P1xP1 query (%d,%d) l=%d" % (a, b, l))
    if 2 * (a + b) - 1 - 2 * l < 0:
        return Fraction(0)
    a, b = geo.canonical_p1p1(a, b)
    if a == 0:
        return Fraction(1 if b == 1 else 0)
    if a == 1:
        return Fraction(1)
    ctx = resolve(ctx)
    key = geo.key_p1p1(a, b, l)
    if l == 0:
        return ctx.memo(key, lambda: _prod_l0(b, a, ctx, key))
    return ctx.memo(key, lambda: _prod_rec(a, b, l, ctx))


def _prod_rec(a, b, l, ctx):
    total = Fraction(0)
    if a % 2 == 0 and b % 2 == 0 and l == a + b - 1:
        total -= pow2(l - 3) * a * b * gw_p1p1(a // 2, b // 2, ctx)
    for ap in range(a // 2 + 1):
        for bp in range(b // 2 + 1):
            a0, b0 = a - 2 * ap, b - 2 * bp
            if (ap, bp) == (0, 0) or (a0, b0) == (0, 0):
                continue
            s = ap + bp
            if l - 2 * s < 0:
                continue
            w = ap * bp * (a0 * bp + b0 * ap)
            if w:
                total -= (pow2(2 * s - 1) * w * binom(l - 1, 2 * s - 1)
                          * gw_p1p1(ap, bp, ctx) * wel_p1p1_product(a0, b0, l - 2 * s, ctx))
    top = 2 * (a + b) - 2 * l - 2
    for (a1, b1), (a2, b2) in geo.vector_splits((a, b)):
        if not b1:
            continue
        for l1 in range(l):
            l2 = l - 1 - l1
            s1 = 2 * (a1 + b1) - 2 * l1
            w = a2 * binom(top, s1 - 2) - a1 * binom(top, s1 - 1)
            if w:
                total += (b1 * binom(l - 1, l1) * w
                          * wel_p1p1_product(a1, b1, l1, ctx) * wel_p1p1_product(a2, b2, l2, ctx))
    return total


def _prod_l0(a, b, ctx, key):
    # first coordinate must be >= 2 and the second >= 1
    if a < 2 or b < 1:
        raise SchedulingError("product l=0 relation outside its range for %s" % key)
    top = 2 * (a + b) - 2
    total = Fraction(0)
    for a1 in range(1, a):
        a2 = a - a1
        for b1 in range(1, b + 1):
            b2 = b + 1 - b1
            s1 = 2 * (a1 + b1)
            w = b1 * b2 * binom(top, s1 - 2) - b1 * b1 * binom(top, s1 - 1)
            if w:
                total += w * wel_p1p1_product(a1, b1, 0, ctx) * wel_p1p1_product(a2, b2, 0, ctx)
    return exact_div(total, 2 * (a - 1), "product l=0", key)


# real blowups of P2


def wel_blowup(d, a=(), b=(), l=0, ctx=None):
    """N_{v,l} for v = (d, a, b) in P2 blown up at len(a) real points and len(b) conjugate pairs.

    ``d = 0`` with a single entry -1 is an exceptional class.
    """
    a, b = tuple(a), tuple(b)
    if l < 0:
        raise ValueError("negative pair count")
    if d == 0:
        na = sorted(x for x in a if x)
        nb = sorted(x for x in b if x)
        return Fraction(1 if (na, nb, l) == ([-1], [], 0) else 0)
    if d < 0 or any(x < 0 for x in a + b):
        return Fraction(0)
    ctx = resolve(ctx)
    d, a, b = geo.canonical_real_blowup(d, a, b)
    if geo.ell_real_blowup(d, a, b) - 2 * l < 0:
        return Fraction(0)
    # b_j = 1 is the same as one more conjugate point pair; a_i = 1 drops
    ones = sum(1 for x in b if x == 1)
    b = tuple(x for x in b if x != 1)
    a = tuple(x for x in a if x != 1)
    l += ones
    if not a and not b:
        return wel_p2(d, l, ctx)
    if ctx.options.effectiveness and not geo.is_effective_real_blowup(d, a, b):
        return Fraction(0)
    key = geo.key_real_blowup(d, a, b, l)
    return ctx.memo(key, lambda: _blowup_lifted(d, a, b, l, ctx, key))


def _blowup_lifted(d, a, b, l, ctx, key):
    # N_{v,l} equals N_{v', 0} where v' carries l extra conjugate blowup pairs of weight 1
    return _blowup_l0(d, a, b + (1,) * l, ctx, key)


def wel_blowup_direct(d, a, b, l=0, ctx=None):
    """Evaluate N_{v,l} by one recursion step on v itself, without the drop identities.

    Entries 0 and 1 are kept, so comparing with :func:`wel_blowup` checks
    those identities as computed values.
    """
    ctx = resolve(ctx)
    a, b = tuple(a), tuple(b)
    if geo.ell_real_blowup(d, a, b) - 2 * l < 0:
        return Fraction(0)
    key = "direct:" + geo.key_real_blowup(d, a, b, l)
    return _blowup_l0(d, a, b + (1,) * l, ctx, key)


def _blowup_l0(d, a, b, ctx, key):
    ell = geo.ell_real_blowup(d, a, b)
    largest = ctx.options.pivot == "largest"
    big = [i for i, x in enumerate(a) if x >= 2]
    if big:
        pick = max if largest else min
        i = pick(big, key=lambda t: (a[t], -t) if largest else (a[t], t))
        if ell > 0:
            return _blowup_lower_multiplicity(d, a, b, i, ctx, key)
        return _blowup_exceptional(d, a, b, "R", i, ctx, key)
    nz = [j for j, x in enumerate(b) if x >= 1]
    if nz:
        pick = max if largest else min
        j = pick(nz, key=lambda t: (b[t], -t) if largest else (b[t], t))
        return _blowup_exceptional(d, a, b, "C", j, ctx, key)
    ones = [i for i, x in enumerate(a) if x == 1]
    if ones and d != ell:
        return _blowup_exceptional(d, a, b, "R", ones[0], ctx, key)
    raise SchedulingError("no applicable blowup relation for %s" % key)


def _pair_c(v0, vp, r):
    d0, a0, b0 = v0
    dp, c = vp
    return (d0 * dp - sum(x * y for x, y in zip(a0, c[:r]))
            - sum(b0[j] * (c[r + 2 * j] + c[r + 2 * j + 1]) for j in range(len(b0))))


def _e_real(v, F, i):
    return v[1][i] if F == "R" else 2 * v[2][i]


def _e_complex(c, r, F, i):
    return c[i] if F == "R" else c[r + 2 * i] + c[r + 2 * i + 1]


def _blowup_exceptional(d, a, b, F, i, ctx, key):
    r = len(a)
    ell = geo.ell_real_blowup(d, a, b)
    v = (d, a, b)
    e = _e_real(v, F, i)
    lead = (d - ell) * e
    w = (d + 1, a, b)
    total = Fraction(0)
    if ell == 0:
        s = sum(gw_blowup(dp, c, ctx) for dp, c in geo.blowup_doubling_preimages(*w))
        total -= Fraction((-1) ** sum(b) * e * (d + 1) * s, 4)
    for v0, (dp, c) in geo.conjugate_splits(*w):
        if 3 * dp - 1 - sum(c) != 0:
            continue
        ec = _e_complex(c, r, F, i)
        if not ec:
            continue
        pair = _pair_c(v0, (dp, c), r)
        if not pair:
            continue
        nc = gw_blowup(dp, c, ctx)
        if nc:
            sign = (-1) ** (dp + sum(c[:r]))
            total -= sign * pair * dp * ec * nc * wel_blowup(*v0, l=0, ctx=ctx)
    for v1, v2 in geo.real_splits(*w):
        if v1 == v or v2 == v:
            continue
        l1 = geo.ell_real_blowup(*v1)
        if l1 < 0 or geo.ell_real_blowup(*v2) < 0:
            continue
        coef = v1[0] * (_e_real(v2, F, i) * binom(ell, l1 - 1) - _e_real(v1, F, i) * binom(ell, l1))
        if not coef:
            continue
        n1 = wel_blowup(*v1, l=0, ctx=ctx)
        if n1:
            total += coef * n1 * wel_blowup(*v2, l=0, ctx=ctx)
    return exact_div(total, lead, "blowup relation (%s pivot)" % F, key)


def _blowup_lower_multiplicity(d, a, b, i, ctx, key):
    r = len(a)
    ell = geo.ell_real_blowup(d, a, b)
    ai = a[i]
    u = (d, a[:i] + (ai - 2,) + a[i + 1:], b)
    total = wel_blowup(d, a[:i] + (ai - 1,) + a[i + 1:], b, 0, ctx)
    if ell == 1:
        s = sum(gw_blowup(dp, c, ctx) for dp, c in geo.blowup_doubling_preimages(*u))
        total += Fraction((-1) ** sum(b) * (d - ai + 2) ** 2 * s, 4)
    for v0, (dp, c) in geo.conjugate_splits(*u):
        if 3 * dp - 1 - sum(c) != 0:
            continue
        pair = _pair_c(v0, (dp, c), r)
        if not pair:
            continue
        nc = gw_blowup(dp, c, ctx)
        if nc:
            sign = (-1) ** (dp + sum(c[:r]))
            total += sign * pair * (dp - c[i]) ** 2 * nc * wel_blowup(*v0, l=0, ctx=ctx)
    for v1, v2 in geo.real_splits(*u):
        l1 = geo.ell_real_blowup(*v1)
        if l1 < 0 or geo.ell_real_blowup(*v2) < 0:
            continue
        x1 = v1[0] - v1[1][i]
        x2 = v2[0] - v2[1][i]
        coef = x1 * (x2 * binom(ell - 1, l1 - 1) - x1 * binom(ell - 1, l1))
        if not coef:
            continue
        n1 = wel_blowup(*v1, l=0, ctx=ctx)
        if n1:
            total -= coef * n1 * wel_blowup(*v2, l=0, ctx=ctx)
    return exact_div(total, ai, "blowup relation (pivot a_i >= 2)", key)
