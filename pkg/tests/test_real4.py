import pytest

from winv.exact import Fraction
from winv.real4 import wel_blowup, wel_blowup_direct, wel_p1p1_product, wel_p1p1_twisted, wel_p2
from winv.store import Context, Options


@pytest.mark.parametrize("d,l,n", [(1, 0, 1), (3, 0, 8), (4, 4, 16), (5, 3, 1872), (5, 7, 64),
                                   (7, 10, -14336), (8, 11, -280576), (8, 0, 359935488000)])
def test_plane(ctx, d, l, n):
    assert wel_p2(d, l, ctx) == n


def test_plane_too_many_pairs_is_zero(ctx):
    assert wel_p2(2, 3, ctx) == 0


@pytest.mark.parametrize("d,l", [(3, 2), (4, 3), (5, 5), (6, 7), (6, 2)])
def test_plane_relations_agree(ctx, d, l):
    assert wel_p2(d, l, ctx, method="real_point") == wel_p2(d, l, ctx, method="pair_point")


@pytest.mark.parametrize("d,l,n", [(1, 2, 0), (2, 0, 6), (2, 3, 0), (4, 7, -256), (5, 9, 26880),
                                   (6, 11, -2637824)])
def test_twisted(ctx, d, l, n):
    assert wel_p1p1_twisted(d, l, ctx) == n


@pytest.mark.parametrize("d,l", [(3, 2), (4, 5), (5, 8)])
def test_twisted_relations_agree(ctx, d, l):
    assert wel_p1p1_twisted(d, l, ctx, method="real_point") == wel_p1p1_twisted(d, l, ctx, method="pair_point")


@pytest.mark.parametrize("a,b,l,n", [(2, 2, 0, 8), (2, 3, 1, 32), (3, 3, 0, 1086), (3, 5, 1, 125855),
                                     (0, 1, 0, 1), (1, 4, 2, 1)])
def test_product(ctx, a, b, l, n):
    assert wel_p1p1_product(a, b, l, ctx) == n
    assert wel_p1p1_product(b, a, l, ctx) == n


@pytest.mark.parametrize("d,a,b,l,n", [(3, (2,), (), 3, 1), (4, (2,), (), 0, 48), (7, (), (2,), 8, -4096),
                                       (4, (), (2,), 0, 6), (0, (-1,), (), 0, 1), (0, (), (-1,), 0, 0)])
def test_blowups(ctx, d, a, b, l, n):
    assert wel_blowup(d, a, b, l, ctx) == n


def test_conjugate_blowup_of_weight_one_is_a_point_pair(ctx):
    assert wel_blowup(6, (2,), (1,), 1, ctx) == wel_blowup(6, (2,), (), 2, ctx)
    assert wel_blowup(5, (), (1, 1), 0, ctx) == wel_p2(5, 2, ctx)


@pytest.mark.parametrize("d,a,b,l", [(5, (2,), (2,), 1), (6, (3, 2), (), 3), (5, (2,), (1,), 2),
                                     (4, (), (), 3)])
def test_direct_route_agrees(ctx, d, a, b, l):
    assert wel_blowup_direct(d, a, b, l, ctx) == wel_blowup(d, a, b, l, ctx)


def test_blowup_pivot_and_effectiveness_do_not_change_values():
    base = Context()
    for opts in (Options(pivot="smallest"), Options(effectiveness=False)):
        other = Context(options=opts)
        for d, a, b, l in [(6, (3, 2, 2), (), 1), (6, (2,), (3,), 0), (7, (3, 3, 2), (2,), 0)]:
            assert wel_blowup(d, a, b, l, base) == wel_blowup(d, a, b, l, other)


def test_values_are_fractions(ctx):
    assert isinstance(wel_p2(4, 1, ctx), Fraction)
