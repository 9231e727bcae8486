import pytest

from winv.complex_gw import (ONE, gw_blowup, gw_p1cubed, gw_p1cubed_halfbasis, gw_p1p1, gw_p1p1_total, gw_p2,
                             gw_p3)
from winv.exact import Fraction
from winv.store import Context, Options


@pytest.mark.parametrize("d,n", [(1, 1), (2, 1), (3, 12), (4, 620), (5, 87304), (8, 13525751027392)])
def test_plane_curves(ctx, d, n):
    assert gw_p2(d, ctx) == n


def test_p2_rejects_degree_zero():
    with pytest.raises(ValueError):
        gw_p2(0)


@pytest.mark.parametrize("a,b,n", [(0, 1, 1), (1, 0, 1), (0, 2, 0), (1, 5, 1), (2, 2, 12), (2, 3, 96),
                                   (3, 3, 3510), (5, 5, 43628131782)])
def test_p1p1(ctx, a, b, n):
    assert gw_p1p1(a, b, ctx) == n
    assert gw_p1p1(b, a, ctx) == n


def test_p1p1_total(ctx):
    assert gw_p1p1_total(2, ctx) == 1
    assert gw_p1p1_total(4, ctx) == 2 * gw_p1p1(1, 3) + gw_p1p1(2, 2)


@pytest.mark.parametrize("d,c,n", [(3, (2,), 1), (4, (2,), 96), (4, (3,), 1), (5, (4,), 1), (6, (2,), 6506400),
                                   (4, (2, 2), 12), (0, (-1,), 1), (0, (1,), 0), (2, (3,), 0)])
def test_blowups(ctx, d, c, n):
    assert gw_blowup(d, c, ctx) == n


def test_blowup_point_of_multiplicity_one_drops(ctx):
    # a simple point through which the curve passes is one of the 3d-1 point constraints
    assert gw_blowup(4, (1,), ctx) == gw_p2(4, ctx)


def test_blowup_pivot_independence():
    a = Context()
    b = Context(options=Options(pivot="smallest"))
    for d, c in [(5, (3, 2)), (6, (3, 3, 2, 2)), (7, (2, 2, 2, 2, 2))]:
        assert gw_blowup(d, c, a) == gw_blowup(d, c, b)


def test_blowup_without_effectiveness_shortcut_agrees():
    a = Context()
    b = Context(options=Options(effectiveness=False))
    for d, c in [(4, (3, 3)), (5, (3, 3, 2)), (6, (4, 3, 2, 2))]:
        assert gw_blowup(d, c, a) == gw_blowup(d, c, b)


@pytest.mark.parametrize("d,m,n", [
    (1, (3, 3), 1),
    (1, (2, 2, 2, 2), 2),       # lines meeting four lines
    (2, (2,) * 8, 92),          # conics meeting eight lines
    (2, (3, 3, 3, 2, 2), 1),    # the plane of three points meets the two lines in two more points
    (3, (3,) * 6, 1),           # twisted cubic through six points
    (2, (3, 3, 3, 3), 0),
    (1, (1, 3, 3), 1),
    (1, (4, 2), 0),
])
def test_p3(ctx, d, m, n):
    assert gw_p3(d, m, ctx) == n


def test_p1cubed(ctx):
    assert gw_p1cubed((1, 1, 1), [ONE] * 3, ctx) == 1
    # the point fixes the slice; each (1,1,0) cycle meets it once, leaving three points in P1xP1
    assert gw_p1cubed((1, 1, 0), [ONE, (1, 1, 0), (1, 1, 0)], ctx) == gw_p1p1(1, 1)
    assert gw_p1cubed((2, 2, 0), [ONE] + [(1, 1, 0)] * 6, ctx) == gw_p1p1(2, 2)
    assert gw_p1cubed((2, 2, 2), [(0, 1, 1)] * 2 + [ONE] * 5, ctx) == 12
    # divisor insertions pull out the matching coordinate of d
    assert gw_p1cubed((1, 1, 1), [ONE] * 3 + [(0, 0, 1)], ctx) == 1
    assert gw_p1cubed((3, 2, 1), [ONE] * 5, ctx) == gw_p1cubed((1, 2, 3), [ONE] * 5, ctx)


def test_p1cubed_fiber_forms_match_recursion():
    a = Context()
    b = Context(options=Options(fiber_closed_forms=False))
    for d, m in [((2, 2, 1), [ONE] * 3 + [(1, 1, 0)] * 2), ((3, 2, 1), [ONE] * 4 + [(1, 0, 1)] * 2)]:
        assert gw_p1cubed(d, m, a) == gw_p1cubed(d, m, b)


def test_halfbasis_sums_lifts(ctx):
    # H1'^2 H2' = H1H2H3 / 2, summed over the lifts of a = 1 in class a(L1+L2)
    want = Fraction(1, 2) * (gw_p1cubed((1, 0, 1), [ONE] * 2, ctx) + gw_p1cubed((0, 1, 1), [ONE] * 2, ctx))
    assert gw_p1cubed_halfbasis((1, 2), [(2, 1), (2, 1)], ctx) == want
    assert gw_p1cubed_halfbasis((1, 1), [(2, 1)], ctx) == 0
