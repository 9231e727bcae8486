"""Real genus-0 invariants of P3 and (P1)^3 relative to an averaging symmetry.

Three involutions are covered: the standard conjugation ``tau3`` of P3,
the product conjugation ``phi3`` of (P1)^3, and the twisted conjugation
``phi3tw`` that swaps the first two factors.  Twisted classes are pairs
``(a, b)`` for ``a(L1+L2) + bL3`` and twisted insertions are pairs
``(r, s)`` for ``H1'^r H2'^s`` with ``H1' = (H1+H2)/2`` and ``H2' = H3``.

Base values with k = 3 mod 4 can be negated through
``Options.flip_odd_bases``.  Such a context must use its own store.
"""

from itertools import product

from . import geometry as geo
from .complex_gw import COMPLEMENTS, gw_p1cubed, gw_p1cubed_halfbasis, gw_p3, strip_p1cubed
from .exact import Fraction, SchedulingError, binom, pow2
from .real4 import wel_p1p1_product, wel_p1p1_twisted
from .store import resolve


class ParityViolation(RuntimeError):
    """A value the parity rule forces to vanish came out nonzero."""


def _partitions(n, in_i=(0,), in_j=()):
    """All (I, J) splitting range(n) with ``in_i`` inside I and ``in_j`` inside J."""
    fixed = set(in_i) | set(in_j)
    free = [t for t in range(n) if t not in fixed]
    for mask in range(1 << len(free)):
        left = list(in_i)
        right = list(in_j)
        for pos, t in enumerate(free):
            (left if mask >> pos & 1 else right).append(t)
        yield sorted(left), sorted(right)


def _pick(m, idx):
    return [m[t] for t in idx]


def _base(value, k, ctx):
    value = Fraction(value)
    if ctx.options.flip_odd_bases and k % 4 == 3:
        return -value
    return value


def _checked(forbidden, key, compute):
    value = compute()
    if forbidden and value != 0:
        raise ParityViolation("parity forces 0 for %s, recursion gave %s" % (key, value))
    return value


# (P3, tau3)


def k_p3(d, m):
    return 2 * d + len(m) - sum(m)


def rgw_p3(d, m=(), ctx=None, method=None):
    """<H^m1, ..., H^ml>_d for (P3, tau3).

    ``method`` forces "shift", "trade" or "empty" at the top level and skips the memo.
    """
    if d < 1:
        raise ValueError("P3 degree must be positive, got %d" % d)
    ctx = resolve(ctx)
    factor = 1
    out = []
    for x in m:
        if x == 1:
            factor *= d
        elif x in (2, 3):
            out.append(x)
        else:
            return Fraction(0)
    m = tuple(sorted(out, reverse=True))
    k = k_p3(d, m)
    if k < 0:
        return Fraction(0)
    forbidden = (d - k) % 2 == 0
    if forbidden and ctx.options.parity_shortcut and method is None:
        return Fraction(0)
    if method is not None:
        return factor * _p3_dispatch(d, m, k, ctx, method)
    if d == 1 and m in ((), (3,)):
        return factor * _base(1 if not m else -1, k, ctx)
    key = geo.key_p3(d, m, real=True)
    return factor * ctx.memo(key, lambda: _checked(forbidden, key, lambda: _p3_dispatch(d, m, k, ctx)))


def _p3_dispatch(d, m, k, ctx, method=None):
    if method is None:
        if not m:
            method = "empty"
        elif k >= 1:
            method = "shift"
        else:
            method = "trade"
    if method == "empty":
        if m or d < 2:
            raise SchedulingError("empty-class relation needs m = () and d >= 2")
        return rgw_p3_empty(d, ctx, direct=True)
    if method == "shift":
        if not m or k < 1:
            raise SchedulingError("the shifting P3 relation needs an insertion and k >= 1")
        return _p3_shift(d, m, ctx)
    if method == "trade":
        if len(m) < 2:
            raise SchedulingError("the trading P3 relation needs two insertions")
        return _p3_trade(d, m, ctx)
    raise ValueError("unknown method %r" % method)


def _p3_shift(d, target, ctx):
    m = (target[0] - 1,) + target[1:]
    l = len(m)
    k = k_p3(d, m)
    total = Fraction(0)
    if d % 2 == 0 and k == 2:
        total -= pow2(l - 2) * d * gw_p3(d // 2, m + (3,), ctx)
    for dp in range(1, (d - 1) // 2 + 1):
        d0 = d - 2 * dp
        for I, J in _partitions(l):
            mi, mj = _pick(m, I), _pick(m, J)
            s = Fraction(0)
            for i in (1, 2):
                c = gw_p3(dp, mi + [i], ctx)
                if c:
                    s += c * rgw_p3(d0, [3 - i] + mj, ctx)
            total -= dp * pow2(len(I) - 1) * s
    for d1 in range(1, d):
        d2 = d - d1
        for I, J in _partitions(l):
            mi, mj = _pick(m, I), _pick(m, J)
            ki = k_p3(d1, mi)
            c = d2 * binom(k - 2, ki - 1) - d1 * binom(k - 2, ki)
            if c:
                total += c * rgw_p3(d1, mi, ctx) * rgw_p3(d2, mj, ctx)
    return total


def _p3_trade(d, target, ctx):
    # move a 3 into the first slot so the shifted term is H^4 = 0; otherwise trade 2,2 for 3,1
    n = list(target)
    first = n.index(3) if 3 in n else 0
    second = 1 if first == 0 else 0
    rest = [n[t] for t in range(len(n)) if t not in (first, second)]
    m = [n[first], n[second] - 1] + rest
    l = len(m)
    k = k_p3(d, m)
    total = rgw_p3(d, [m[0] + 1, m[1]] + rest, ctx)
    for dp in range(1, (d - 1) // 2 + 1):
        d0 = d - 2 * dp
        for I, J in _partitions(l, (0,), (1,)):
            mi, mj = _pick(m, I), _pick(m, J)
            for i in (1, 2):
                j = 3 - i
                plus = pow2(len(I) - 1) * gw_p3(dp, mi + [i], ctx) * rgw_p3(d0, [j] + mj, ctx)
                minus = pow2(len(J) - 1) * gw_p3(dp, mj + [j], ctx) * rgw_p3(d0, [i] + mi, ctx)
                total += dp * (plus - minus)
    for d1 in range(1, d):
        d2 = d - d1
        for I, J in _partitions(l, (0,), (1,)):
            mi, mj = _pick(m, I), _pick(m, J)
            c = d1 * binom(k - 1, k_p3(d1, mi)) - d2 * binom(k - 1, k_p3(d2, mj))
            if c:
                total += c * rgw_p3(d1, mi, ctx) * rgw_p3(d2, mj, ctx)
    return total


def rgw_p3_empty(d, ctx=None, direct=False):
    """<>_d for (P3, tau3) with d >= 2 from the closed relation among low-insertion values."""
    if d < 2:
        raise ValueError("the empty-class relation starts at d = 2")
    ctx = resolve(ctx)
    if not direct:
        return rgw_p3(d, (), ctx)
    total = Fraction(0)
    for d1 in range(1, d):
        d2 = d - d1
        total += d2 * binom(2 * d - 1, 2 * d1) * rgw_p3(d1 + 1, (3,), ctx) * rgw_p3(d2, (), ctx)
        w = Fraction(2 * d2 - d1 - 1, 2 * d2 - 1) * binom(2 * d - 2, 2 * d1)
        if w:
            total += w * (rgw_p3(d1 + 1, (2, 2), ctx) * rgw_p3(d2, (), ctx)
                          - rgw_p3(d1 + 1, (2,), ctx) * rgw_p3(d2, (2,), ctx))
    return total / (d + 1)


# ((P1)^3, phi3)

ONE = (1, 1, 1)


def k_p1cubed(d, m):
    return sum(d) + len(m) - sum(sum(x) for x in m)


def _unit(r, n=3):
    return tuple(1 if t == r else 0 for t in range(n))


def _types(m):
    """(a1, a2, a3, b): counts of 1-e_t for each t and of the point class."""
    counts = [0, 0, 0, 0]
    for x in m:
        if sum(x) == 3:
            counts[3] += 1
        else:
            counts[x.index(0)] += 1
    return counts


def rgw_p1cubed_product(d, m=(), ctx=None, method=None):
    """<H^m1, ..., H^ml>_d for ((P1)^3, phi3); ``method`` may force "insertion" or "raise"."""
    d = tuple(d)
    if len(d) != 3 or any(x < 0 for x in d) or not any(d):
        raise ValueError("bad (P1)^3 degree %r" % (d,))
    ctx = resolve(ctx)
    factor, m = strip_p1cubed(d, [tuple(x) for x in m])
    if not factor:
        return Fraction(0)
    k = k_p1cubed(d, m)
    if k < 0:
        return Fraction(0)
    forbidden = k % 2 == 0
    # at k = 0 no relation has an insertion to trade, so parity is the only source
    if forbidden and method is None and (ctx.options.parity_shortcut or (k == 0 and m)):
        return Fraction(0)
    d, m = geo.canonical_p1cubed(d, m)
    if method is not None:
        return factor * _phi3_dispatch(d, m, k, ctx, method)
    if ctx.options.fiber_closed_forms:
        closed = phi3_fiber_value(d, m, ctx)
        if closed is not None:
            return factor * _base(closed, k, ctx)
    if not m and sum(d) == 1:
        return factor * _base(1, k, ctx)
    if not m and d == ONE:
        return factor * _base(-1, k, ctx)
    key = geo.key_p1cubed(d, m, real=True)
    return factor * ctx.memo(key, lambda: _checked(forbidden, key, lambda: _phi3_dispatch(d, m, k, ctx)))


def phi3_fiber_value(d, m, ctx=None):
    """Closed form for classes with a coordinate 0 or 1, or None when it does not apply.

    ``d`` and ``m`` must be canonical, so a coordinate in {0, 1} sits last.
    """
    d1, d2, d3 = d
    if d3 > 1:
        return None
    a1, a2, a3, b = _types(m)
    if d3 == 0:
        if a1 == a2 == b == 0 and a3 == d1 + d2 - 1:
            return wel_p1p1_product(d1, d2, d1 + d2 - 1, ctx)
        return Fraction(0)
    s = a1 + a2 + b
    k = k_p1cubed(d, m)
    if 2 * s + k < 3:
        return Fraction(0)
    if 2 * s + k > 3:
        return None
    if s == 0:
        return -wel_p1p1_product(d1, d2, d1 + d2 - 2, ctx)
    n = wel_p1p1_product(d1, d2, d1 + d2 - 1, ctx)
    if b:
        return n
    return d2 * n if a1 else d1 * n


def _phi3_dispatch(d, m, k, ctx, method=None):
    if method is None:
        method = "insertion" if m else "raise"
    if method == "insertion":
        if not m or k < 1:
            raise SchedulingError("(P1)^3 insertion relation needs an insertion and k >= 1")
        return _phi3_insertion(d, m, ctx)
    if method == "raise":
        if m:
            raise SchedulingError("(P1)^3 empty-class relation needs m = ()")
        return _phi3_empty(d, ctx)
    raise ValueError("unknown method %r" % method)


def _phi3_insertion(d, target, ctx):
    t1 = target[0]
    choices = [r for r in range(3) if t1[r] == 1]
    r = next((x for x in choices if d[x] > 0), choices[0])
    m = [tuple(x - y for x, y in zip(t1, _unit(r)))] + list(target[1:])
    l = len(m)
    k = k_p1cubed(d, m)
    total = Fraction(0)
    if k == 2 and all(x % 2 == 0 for x in d):
        half = tuple(x // 2 for x in d)
        total -= pow2(l - 2) * d[r] * gw_p1cubed(half, m + [ONE], ctx)
    for dp in product(*(range(x // 2 + 1) for x in d)):
        dpp = tuple(x - 2 * y for x, y in zip(d, dp))
        if not dp[r] or not any(dpp):
            continue
        for I, J in _partitions(l):
            mi, mj = _pick(m, I), _pick(m, J)
            s = Fraction(0)
            for i, j in COMPLEMENTS:
                c = gw_p1cubed(dp, mi + [i], ctx)
                if c:
                    s += c * rgw_p1cubed_product(dpp, [j] + mj, ctx)
            total -= dp[r] * pow2(len(I) - 1) * s
    for d1, d2 in geo.vector_splits(d):
        for I, J in _partitions(l):
            mi, mj = _pick(m, I), _pick(m, J)
            ki = k_p1cubed(d1, mi)
            c = d2[r] * binom(k - 2, ki - 1) - d1[r] * binom(k - 2, ki)
            if c:
                total += c * rgw_p1cubed_product(d1, mi, ctx) * rgw_p1cubed_product(d2, mj, ctx)
    return total


def _phi3_empty(d, ctx):
    n = sum(d)
    r = next((x for x in range(3) if n - 1 - 2 * d[x] != 0), None)
    if r is None or n == 1:
        raise SchedulingError("no usable coordinate for the empty class %r" % (d,))
    up = tuple(x + y for x, y in zip(d, _unit(r)))
    total = Fraction(0)
    for d1 in product(*(range(x + 1) for x in up)):
        d2 = tuple(x - y for x, y in zip(up, d1))
        if sum(d1) < 2 or sum(d2) < 2:
            continue
        c = d1[r] * (d2[r] * binom(n - 1, sum(d1) - 1) - d1[r] * binom(n - 1, sum(d1)))
        if c:
            total += c * rgw_p1cubed_product(d1, (), ctx) * rgw_p1cubed_product(d2, (), ctx)
    return total / (n - 1 - 2 * d[r])


# ((P1)^3, phi3 twisted)

PT = (2, 1)
TWISTED_COMPLEMENTS = [((1, 0), (1, 1)), ((2, 0), (0, 1)), ((0, 1), (2, 0)), ((1, 1), (1, 0))]

# how many copies of <(2,0)>' the symbol <H1H2> in the third empty-class relation stands for
H1H2_IN_HALF_BASIS = 2


def k_twisted(d, m):
    return 2 * d[0] + d[1] + len(m) - sum(x + y for x, y in m)


def rgw_p1cubed_twisted(d, m=(), ctx=None, method=None):
    """<H'^m1, ..., H'^ml>_(a,b) for ((P1)^3, phi3 twisted).

    ``method`` may force "insertion", "raise_b" or "raise_a".  Values can be
    half-integers; see :func:`rgw_p1cubed_twisted_lines` for integral counts.
    """
    a, b = d = tuple(d)
    if a < 0 or b < 0 or (a, b) == (0, 0):
        raise ValueError("bad twisted degree %r" % (d,))
    ctx = resolve(ctx)
    factor = 1
    out = []
    for x in m:
        x = tuple(x)
        if x[0] < 0 or x[1] < 0 or x[0] > 2 or x[1] > 1 or x == (0, 0):
            return Fraction(0)
        if x == (1, 0):
            factor *= a
        elif x == (0, 1):
            factor *= b
        else:
            out.append(x)
        if not factor:
            return Fraction(0)
    m = tuple(sorted(out, reverse=True))
    k = k_twisted(d, m)
    if k < 0:
        return Fraction(0)
    forbidden = k % 2 == 0
    # at k = 0 no relation has an insertion to trade, so parity is the only source
    if forbidden and method is None and (ctx.options.parity_shortcut or (k == 0 and m)):
        return Fraction(0)
    if method is not None:
        return factor * _tw_dispatch(d, m, k, ctx, method)
    if ctx.options.fiber_closed_forms:
        closed = twisted_fiber_value(d, m, ctx)
        if closed is not None:
            return factor * _base(closed, k, ctx)
    base = _TW_BASES.get((d, m))
    if base is not None:
        return factor * _base(base, k, ctx)
    key = geo.key_p1cubed_twisted(d, m)
    return factor * ctx.memo(key, lambda: _checked(forbidden, key, lambda: _tw_dispatch(d, m, k, ctx)))


_TW_BASES = {
    ((0, 1), ()): Fraction(1),
    ((1, 0), ((2, 0),)): Fraction(-1, 2),
    ((1, 1), ()): Fraction(1),
}


def twisted_fiber_value(d, m, ctx=None):
    """Closed form for pair classes (a, 0) and (a, 1) with a >= 1, or None."""
    a, b = d
    if b > 1 or a < 1:
        return None
    n11 = sum(1 for x in m if x == (1, 1))
    n20 = sum(1 for x in m if x == (2, 0))
    n21 = sum(1 for x in m if x == PT)
    # <H1H2> = 2<H1'^2> and <pt> = 2<H1'^2 H2'>; H1H3 and H2H3 both read as H1'H2'
    scale = pow2(-n20 - n21)
    sign = -1 if a % 2 else 1
    if b == 0:
        if n11 == n21 == 0 and n20 == 2 * a - 1:
            return scale * sign * wel_p1p1_twisted(a, 2 * a - 1, ctx)
        return Fraction(0)
    s = n11 + n21
    k = k_twisted(d, m)
    if 2 * s + k < 3:
        return Fraction(0)
    if 2 * s + k > 3:
        return None
    if s == 0:
        return scale * -sign * wel_p1p1_twisted(a, 2 * a - 2, ctx)
    n = sign * wel_p1p1_twisted(a, 2 * a - 1, ctx)
    return scale * (n if n21 else a * n)


def _tw_dispatch(d, m, k, ctx, method=None):
    a, b = d
    if method is None:
        if m:
            method = "insertion"
        elif 2 * a - 1 - b != 0 and d != (0, 1):
            method = "raise_b"
        elif b != 1:
            method = "raise_a"
        else:
            raise SchedulingError("no empty-class relation applies to %r" % (d,))
    if method == "insertion":
        if not m or k < 1:
            raise SchedulingError("twisted insertion relation needs an insertion and k >= 1")
        return _tw_insertion(d, m, ctx)
    if m:
        raise SchedulingError("twisted empty-class relations need m = ()")
    if method == "raise_b":
        if 2 * a - 1 - b == 0 or d == (0, 1):
            raise SchedulingError("the b-raising relation is singular at %r" % (d,))
        return _tw_raise_b(d, ctx)
    if method == "raise_a":
        if b == 1:
            raise SchedulingError("the a-raising relation is singular at %r" % (d,))
        return _tw_raise_a(d, ctx)
    raise ValueError("unknown method %r" % method)


def _tw_insertion(d, target, ctx):
    t1 = target[0]
    choices = [r for r in range(2) if t1[r] >= 1]
    r = next((x for x in choices if d[x] > 0), choices[0])
    m = [tuple(x - y for x, y in zip(t1, _unit(r, 2)))] + list(target[1:])
    l = len(m)
    k = k_twisted(d, m)
    total = Fraction(0)
    if k == 2:
        total -= pow2(l - 1) * d[r] * gw_p1cubed_halfbasis(d, m + [PT], ctx)
    splits = geo.vector_splits(d)
    for d1, d2 in splits:
        if not d1[r] or d1[1] % 2:
            continue
        for I, J in _partitions(l):
            mi, mj = _pick(m, I), _pick(m, J)
            s = Fraction(0)
            for i, j in TWISTED_COMPLEMENTS:
                c = gw_p1cubed_halfbasis(d1, mi + [i], ctx)
                if c:
                    s += c * rgw_p1cubed_twisted(d2, [j] + mj, ctx)
            total -= d1[r] * pow2(len(I) - 1) * s
    for d1, d2 in splits:
        for I, J in _partitions(l):
            mi, mj = _pick(m, I), _pick(m, J)
            ki = k_twisted(d1, mi)
            c = d2[r] * binom(k - 2, ki - 1) - d1[r] * binom(k - 2, ki)
            if c:
                total += c * rgw_p1cubed_twisted(d1, mi, ctx) * rgw_p1cubed_twisted(d2, mj, ctx)
    return total


def _tw_raise_b(d, ctx):
    a, b = d
    top = 2 * a + b - 1
    total = Fraction(0)
    for a1 in range(1, a):
        for b1 in range(1, b + 1):
            a2, b2 = a - a1, b + 1 - b1
            c = b1 * (b2 * binom(top, 2 * a1 + b1 - 1) - b1 * binom(top, 2 * a1 + b1))
            if c:
                total += c * rgw_p1cubed_twisted((a1, b1), (), ctx) * rgw_p1cubed_twisted((a2, b2), (), ctx)
    return total / (2 * a - 1 - b)


def _tw_raise_a(d, ctx):
    a, b = d
    top = 2 * a + b - 1
    total = Fraction(0)
    for a1 in range(1, a + 1):
        for b1 in range(1, b):
            a2, b2 = a + 1 - a1, b - b1
            c = a1 * binom(top, 2 * a1 + b1 - 1) - a2 * binom(top, 2 * a1 + b1 - 2)
            if c:
                h = H1H2_IN_HALF_BASIS * rgw_p1cubed_twisted((a1, b1), [(2, 0)], ctx)
                total += c * h * rgw_p1cubed_twisted((a2, b2), (), ctx)
    return total / (b - 1)


def rgw_p1cubed_twisted_lines(d, n_l12, n_l3, n_pairs, ctx=None):
    """Signed count in class d = (a, b) through conjugate pairs of line constraints.

    ``n_l12`` pairs of L1- or L2-lines, ``n_l3`` pairs of L3-lines and
    ``n_pairs`` conjugate pairs of points; the rest of the constraints are
    real points.
    """
    m = [(1, 1)] * n_l12 + [(2, 0)] * n_l3 + [PT] * n_pairs
    return pow2(n_l3 + n_pairs) * rgw_p1cubed_twisted(d, m, ctx)
