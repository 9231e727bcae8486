"""Degree lattices, dimension counts, splits and canonical keys.

Classes are plain tuples inside the engines.  :class:`CurveClass` is the
tagged form used at the API and CLI boundary.
"""

from dataclasses import dataclass
from itertools import permutations, product

P2 = "P2"
P1XP1 = "P1xP1"
BLOWUP = "BL"
P3 = "P3"
P1CUBED = "P1^3"
SPACES = (P2, P1XP1, BLOWUP, P3, P1CUBED)


@dataclass(frozen=True)
class CurveClass:
    """A degree datum tagged with its target space.

    ``degree`` is ``d`` for P2 and P3, ``(a, b)`` for P1xP1 and for the
    twisted (P1)^3 pair form, ``(d1, d2, d3)`` for (P1)^3, and
    ``(d, a, b)`` for a blowup with ``r = len(a)`` real and ``s = len(b)``
    conjugate blown-up points.
    """

    space: str
    degree: object

    def __post_init__(self):
        if self.space not in SPACES:
            raise ValueError("unknown space %r" % self.space)


def ell_omega(c):
    deg = c.degree
    if c.space == P2:
        return 3 * deg - 1
    if c.space == P1XP1:
        return 2 * (deg[0] + deg[1]) - 1
    if c.space == BLOWUP:
        d, a, b = deg
        return ell_real_blowup(d, a, b)
    if c.space == P3:
        return 4 * deg
    if c.space == P1CUBED:
        return 2 * sum(deg)
    raise ValueError(c.space)


def ell_blowup(d, c):
    return 3 * d - 1 - sum(c)


def ell_real_blowup(d, a, b):
    return 3 * d - 1 - sum(a) - 2 * sum(b)


def real_k_p3(d, m):
    return 2 * d + len(m) - sum(m)


def real_k_p1cubed(d, m):
    return sum(d) + len(m) - sum(sum(x) for x in m)


def real_k_twisted(d, m):
    a, b = d
    return 2 * a + b + len(m) - sum(x[0] + x[1] for x in m)


# effectiveness


def is_effective_blowup(d, c):
    """Numerical conditions for a class dL - sum c_i E_i to carry an irreducible curve.

    Failure is a sound reason to return 0; success promises nothing.
    """
    if d < 1 or any(x < 0 for x in c):
        return False
    c = sorted(c, reverse=True)
    if sum(c) > 3 * d - 1:
        return False
    if sum(x * (x - 1) // 2 for x in c) > (d - 1) * (d - 2) // 2:
        return False
    prefix = [0]
    for x in c:
        prefix.append(prefix[-1] + x)
    for dp in range(1, d + 1):
        n = min(len(c), dp * (dp + 3) // 2)
        if prefix[n] > dp * d:
            return False
    return True


def is_effective_real_blowup(d, a, b):
    return is_effective_blowup(d, tuple(a) + tuple(x for x in b for _ in (0, 1)))


# doubling map


def double_blowup(d, c, r):
    """Image of the complex class (d, c) of P2_{r+2s} in the real lattice of P2_{r,s}."""
    a = tuple(2 * x for x in c[:r])
    rest = c[r:]
    b = tuple(rest[2 * j] + rest[2 * j + 1] for j in range(len(rest) // 2))
    return (2 * d, a, b)


def doubling_preimages(c):
    """All complex classes whose double is the real class ``c``.

    Blowup preimages are returned as ``(d, c_tuple)`` in the complex
    lattice of P2_{r+2s}; P1xP1 with the twisted involution takes the
    total degree and returns the pairs ``(a', b')``.
    """
    deg = c.degree
    if c.space in (P2, P3):
        return [deg // 2] if deg % 2 == 0 else []
    if c.space == P1XP1:
        if isinstance(deg, int):
            return [(x, deg - x) for x in range(deg + 1)]
        return [(deg[0] // 2, deg[1] // 2)] if deg[0] % 2 == 0 and deg[1] % 2 == 0 else []
    if c.space == P1CUBED:
        return [tuple(x // 2 for x in deg)] if all(x % 2 == 0 for x in deg) else []
    if c.space == BLOWUP:
        d, a, b = deg
        return blowup_doubling_preimages(d, a, b)
    raise ValueError(c.space)


def blowup_doubling_preimages(d, a, b):
    if d % 2 or any(x % 2 for x in a):
        return []
    half_a = tuple(x // 2 for x in a)
    pair_choices = [[(x, bj - x) for x in range(bj + 1)] for bj in b]
    out = []
    for pairs in product(*pair_choices):
        out.append((d // 2, half_a + tuple(y for p in pairs for y in p)))
    return out


# splits


def degree_splits(d):
    """Ordered splits d1 + d2 = d with both parts positive."""
    return [(x, d - x) for x in range(1, d)]


def vector_splits(v):
    """Ordered splits v1 + v2 = v of a nonnegative vector, both parts nonzero."""
    out = []
    for v1 in product(*(range(x + 1) for x in v)):
        if any(v1) and any(x != y for x, y in zip(v1, v)):
            out.append((v1, tuple(x - y for x, y in zip(v, v1))))
    return out


def enumerate_splits(c):
    deg = c.degree
    if c.space in (P2, P3):
        return [(CurveClass(c.space, x), CurveClass(c.space, y)) for x, y in degree_splits(deg)]
    if c.space in (P1XP1, P1CUBED):
        return [(CurveClass(c.space, x), CurveClass(c.space, y)) for x, y in vector_splits(deg)]
    if c.space == BLOWUP:
        d, a, b = deg
        return [(CurveClass(BLOWUP, x), CurveClass(BLOWUP, y)) for x, y in real_splits(d, a, b)]
    raise ValueError(c.space)


def real_splits(d, a, b):
    """The ordered splits v1 + v2 = v of a real blowup class with d1, d2 >= 1."""
    out = []
    for d1 in range(1, d):
        for a1 in product(*(range(x + 1) for x in a)):
            a2 = tuple(x - y for x, y in zip(a, a1))
            for b1 in product(*(range(x + 1) for x in b)):
                b2 = tuple(x - y for x, y in zip(b, b1))
                out.append(((d1, a1, b1), (d - d1, a2, b2)))
    return out


def conjugate_splits(d, a, b):
    """Pairs (v0, v') with v0 + double(v') = (d, a, b), d0 >= 1 and d' >= 1.

    v0 is a real class ``(d0, a0, b0)``; v' is a complex class
    ``(d', c)`` of P2_{r+2s}.
    """
    out = []
    r = len(a)
    a_choices = [range(x // 2 + 1) for x in a]
    b_choices = [[(p, q) for p in range(x + 1) for q in range(x + 1 - p)] for x in b]
    for dp in range(1, (d - 1) // 2 + 1):
        d0 = d - 2 * dp
        for ca in product(*a_choices):
            a0 = tuple(x - 2 * y for x, y in zip(a, ca))
            for cb in product(*b_choices):
                b0 = tuple(x - p - q for x, (p, q) in zip(b, cb))
                c = ca + tuple(y for pq in cb for y in pq)
                out.append(((d0, a0, b0), (dp, c)))
    assert all(len(v[1][1]) == r + 2 * len(b) for v in out)
    return out


# canonical keys


def _tuple_text(t):
    return ",".join(str(x) for x in t)


def canonical_p1p1(a, b):
    return (a, b) if a <= b else (b, a)


def canonical_blowup(d, c):
    return d, tuple(sorted((x for x in c if x), reverse=True))


def canonical_real_blowup(d, a, b):
    return (d, tuple(sorted((x for x in a if x), reverse=True)),
            tuple(sorted((x for x in b if x), reverse=True)))


def canonical_p1cubed(d, m):
    """Simultaneous coordinate permutation making (d, sorted m) lexicographically maximal."""
    best = None
    for p in permutations(range(3)):
        dd = tuple(d[i] for i in p)
        mm = tuple(sorted((tuple(x[i] for i in p) for x in m), reverse=True))
        cand = (dd, mm)
        if best is None or cand > best:
            best = cand
    return best


def key_p2(d, l=None):
    if l is None:
        return "P2||d=%d|" % d
    return "P2|tau2|d=%d|l=%d" % (d, l)


def key_p1p1(a, b, l=None):
    a, b = canonical_p1p1(a, b)
    if l is None:
        return "P1xP1||%d,%d|" % (a, b)
    return "P1xP1|tau11|%d,%d|l=%d" % (a, b, l)


def key_p1p1_twisted(d, l):
    return "P1xP1|tau11tw|d=%d|l=%d" % (d, l)


def key_blowup(d, c):
    d, c = canonical_blowup(d, c)
    return "BL(%d)||%d;%s|" % (len(c), d, _tuple_text(c))


def key_real_blowup(d, a, b, l):
    d, a, b = canonical_real_blowup(d, a, b)
    return "BL(%d,%d)|real|%d;%s;%s|l=%d" % (len(a), len(b), d, _tuple_text(a), _tuple_text(b), l)


def key_p3(d, m, real=False):
    m = sorted(m, reverse=True)
    return "P3|%s|d=%d|m=%s" % ("tau3" if real else "", d, _tuple_text(m))


def _vec_text(m):
    return ",".join("".join(str(y) for y in x) for x in m)


def key_p1cubed(d, m, real=False):
    d, m = canonical_p1cubed(d, m)
    return "P1^3|%s|%s|m=%s" % ("phi3" if real else "", _tuple_text(d), _vec_text(m))


def key_p1cubed_twisted(d, m):
    m = sorted(m, reverse=True)
    return "P1^3|phi3tw|%d,%d|m=%s" % (d[0], d[1], _vec_text(m))


def canonicalize(key):
    """Rewrite a key text into its symmetry-reduced representative."""
    space, inv, cls, ins = key.split("|")[0:4] if not key.startswith("BL(") else _split_bl(key)
    if space == "P2":
        d = int(cls[2:])
        return key_p2(d, None if not inv else int(ins[2:]))
    if space == "P1xP1":
        if inv == "tau11tw":
            return key_p1p1_twisted(int(cls[2:]), int(ins[2:]))
        a, b = (int(x) for x in cls.split(","))
        return key_p1p1(a, b, None if not inv else int(ins[2:]))
    if space.startswith("BL("):
        parts = cls.split(";")
        d = int(parts[0])
        if inv:
            a = _parse_tuple(parts[1])
            b = _parse_tuple(parts[2])
            return key_real_blowup(d, a, b, int(ins[2:]))
        return key_blowup(d, _parse_tuple(parts[1]))
    if space == "P3":
        return key_p3(int(cls[2:]), _parse_tuple(ins[2:]), real=bool(inv))
    if space == "P1^3":
        m = [tuple(int(ch) for ch in x) for x in ins[2:].split(",") if x]
        d = _parse_tuple(cls)
        if inv == "phi3tw":
            return key_p1cubed_twisted(d, m)
        return key_p1cubed(d, m, real=bool(inv))
    raise ValueError("unrecognized key %r" % key)


def _split_bl(key):
    head, rest = key.split(")", 1)
    _, inv, cls, ins = rest.split("|")
    return head + ")", inv, cls, ins


def _parse_tuple(text):
    return tuple(int(x) for x in text.split(",") if x)
