import pytest

from winv import real6
from winv.exact import Fraction, SchedulingError
from winv.real6 import (ONE, k_p1cubed, k_twisted, rgw_p1cubed_product, rgw_p1cubed_twisted,
                        rgw_p1cubed_twisted_lines, rgw_p3, rgw_p3_empty)
from winv.store import Context, Options


def line(t):
    return tuple(0 if s == t else 1 for s in range(3))


@pytest.mark.parametrize("d,m,n", [(1, (), 1), (1, (3,), -1), (1, (2, 2), -1), (1, (3, 1), -1), (1, (2,), 0),
                                   (1, (3, 3), 0), (1, (4,), 0), (1, (3, 3, 3), 0)])
def test_p3_base_values(ctx, d, m, n):
    assert rgw_p3(d, m, ctx) == n


def test_p3_two_relations_agree(ctx):
    for d in (2, 4, 6):
        assert rgw_p3(d, (3, 2), ctx, method="shift") == rgw_p3(d, (3, 2), ctx, method="trade")


def test_p3_empty_relation(ctx):
    for d in range(2, 6):
        assert rgw_p3_empty(d, ctx, direct=True) == rgw_p3(d, (), ctx)


def test_p3_parity_rule_matches_recursion():
    on, off = Context(), Context(options=Options(parity_shortcut=False))
    for d in range(1, 4):
        for m in [(), (3,), (2,), (3, 2), (2, 2), (3, 3), (3, 3, 2), (3, 2, 2), (2, 2, 2)]:
            assert rgw_p3(d, m, on) == rgw_p3(d, m, off)


def test_p3_divisor_insertion(ctx):
    assert rgw_p3(3, (1, 3, 2), ctx) == 3 * rgw_p3(3, (3, 2), ctx)


def test_p3_method_outside_range():
    with pytest.raises(SchedulingError):
        rgw_p3(2, (), method="shift")


def test_phi3_base_values(ctx):
    assert rgw_p1cubed_product((1, 0, 0), (), ctx) == 1
    assert rgw_p1cubed_product((0, 0, 1), (), ctx) == 1
    assert rgw_p1cubed_product(ONE, (), ctx) == -1


def test_phi3_permutation_invariance(ctx):
    d, m = (3, 2, 1), [ONE, line(2)]
    want = rgw_p1cubed_product(d, m, ctx)
    assert rgw_p1cubed_product((1, 3, 2), [ONE, line(0)], ctx) == want
    assert rgw_p1cubed_product((2, 1, 3), [ONE, line(1)], ctx) == want
    assert want != 0


def test_phi3_table_cells(ctx):
    d = (2, 2, 2)
    assert [rgw_p1cubed_product(d, [line(0)] + [ONE] * b, ctx) for b in range(3)] == [6, -4, 2]


def test_phi3_parity(ctx):
    for d, m in [((2, 2, 2), [ONE] * 3), ((2, 1, 1), [])]:
        assert k_p1cubed(d, m) % 2 == 0
        assert rgw_p1cubed_product(d, m, ctx) == 0


def test_fiber_forms_match_recursion():
    a, b = Context(), Context(options=Options(fiber_closed_forms=False))
    for d, m in [((3, 2, 1), [ONE, ONE]), ((2, 2, 1), [line(0), ONE]), ((3, 1, 0), [line(2)] * 3)]:
        assert rgw_p1cubed_product(d, m, a) == rgw_p1cubed_product(d, m, b)
    for d, m in [((2, 1), [(1, 1)]), ((3, 0), [(2, 0)] * 5), ((3, 1), [])]:
        assert rgw_p1cubed_twisted(d, m, a) == rgw_p1cubed_twisted(d, m, b)


def test_twisted_base_values(ctx):
    assert rgw_p1cubed_twisted((0, 1), (), ctx) == 1
    assert rgw_p1cubed_twisted((1, 0), [(2, 0)], ctx) == Fraction(-1, 2)
    assert rgw_p1cubed_twisted((1, 1), (), ctx) == 1


def test_twisted_table_cells(ctx):
    assert [rgw_p1cubed_twisted_lines((2, 2), 1, 0, b, ctx) for b in range(3)] == [4, -2, 0]
    assert rgw_p1cubed_twisted_lines((2, 2), 0, 1, 1, ctx) == -2


def test_twisted_empty_relations_agree(ctx):
    for d in [(2, 2), (3, 4), (4, 2)]:
        assert (rgw_p1cubed_twisted(d, (), ctx, method="raise_b")
                == rgw_p1cubed_twisted(d, (), ctx, method="raise_a"))


def test_twisted_relation_on_vanishing_target(ctx):
    # H1'^3 = 0, so this has to cancel; it only does with two copies of <(2,0)> per H1H2
    for d in [(2, 1), (3, 3), (4, 5)]:
        assert real6._tw_insertion(d, ((3, 0),), ctx) == 0


def test_flip_negates_only_k_3_mod_4():
    base, flip = Context(), Context(options=Options(flip_odd_bases=True))
    for d, m in [((2, 2, 2), [line(0), ONE]), ((2, 1, 0), [line(2)] * 2), ((3, 2, 2), [])]:
        k = k_p1cubed(d, m)
        sign = -1 if k % 4 == 3 else 1
        assert rgw_p1cubed_product(d, m, flip) == sign * rgw_p1cubed_product(d, m, base)
    for d, m in [((2, 2), [(1, 1)]), ((2, 1), []), ((3, 2), [(2, 1)])]:
        k = k_twisted(d, m)
        sign = -1 if k % 4 == 3 else 1
        assert rgw_p1cubed_twisted(d, m, flip) == sign * rgw_p1cubed_twisted(d, m, base)
