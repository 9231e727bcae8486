import pytest

from winv import geometry as geo


def test_dimension_counts():
    assert geo.ell_omega(geo.CurveClass(geo.P2, 5)) == 14
    assert geo.ell_omega(geo.CurveClass(geo.P1XP1, (2, 3))) == 9
    assert geo.ell_omega(geo.CurveClass(geo.BLOWUP, (5, (3, 2), (1,)))) == 7
    assert geo.ell_omega(geo.CurveClass(geo.P3, 2)) == 8
    assert geo.ell_omega(geo.CurveClass(geo.P1CUBED, (2, 2, 2))) == 12


def test_unknown_space():
    with pytest.raises(ValueError):
        geo.CurveClass("P4", 1)


def test_effectiveness():
    # a conic cannot pass through a point with multiplicity 3
    assert not geo.is_effective_blowup(2, (3,))
    # a line through three general points does not exist
    assert not geo.is_effective_blowup(1, (1, 1, 1))
    assert geo.is_effective_blowup(3, (2,))
    assert not geo.is_effective_blowup(4, (3, 3))
    # four double points on a cubic exceed its arithmetic genus
    assert not geo.is_effective_blowup(3, (2, 2, 2, 2))


def test_doubling_preimages():
    assert geo.doubling_preimages(geo.CurveClass(geo.P2, 6)) == [3]
    assert geo.doubling_preimages(geo.CurveClass(geo.P2, 5)) == []
    assert geo.doubling_preimages(geo.CurveClass(geo.P1XP1, 2)) == [(0, 2), (1, 1), (2, 0)]
    assert geo.blowup_doubling_preimages(4, (2,), (1,)) == [(2, (1, 0, 1)), (2, (1, 1, 0))]


def test_splits():
    assert geo.degree_splits(3) == [(1, 2), (2, 1)]
    assert len(geo.vector_splits((1, 1))) == 2
    assert ((1, (1,), ()), (1, (0,), ())) in geo.real_splits(2, (1,), ())


def test_conjugate_splits_recombine():
    for (d0, a0, b0), (dp, c) in geo.conjugate_splits(7, (3, 2), (2,)):
        assert d0 + 2 * dp == 7
        assert tuple(x + 2 * y for x, y in zip(a0, c[:2])) == (3, 2)
        assert b0[0] + c[2] + c[3] == 2


@pytest.mark.parametrize("key,want", [
    ("P1xP1||3,2|", "P1xP1||2,3|"),
    ("P1xP1|tau11|5,4|l=2", "P1xP1|tau11|4,5|l=2"),
    ("BL(3)||5;2,3,0|", "BL(2)||5;3,2|"),
    ("BL(2,1)|real|5;2,3;1|l=0", "BL(2,1)|real|5;3,2;1|l=0"),
    ("P3|tau3|d=2|m=2,3", "P3|tau3|d=2|m=3,2"),
    ("P1^3|phi3|1,2,2|m=011,101", "P1^3|phi3|2,2,1|m=110,101"),
    ("P1^3|phi3tw|2,2|m=20,11", "P1^3|phi3tw|2,2|m=20,11"),
    ("P2|tau2|d=5|l=3", "P2|tau2|d=5|l=3"),
])
def test_canonicalize(key, want):
    assert geo.canonicalize(key) == want


def test_symmetric_queries_share_a_key():
    assert geo.key_p1cubed((1, 2, 3), [(1, 1, 0)]) == geo.key_p1cubed((3, 2, 1), [(0, 1, 1)])
    assert geo.key_real_blowup(6, (2, 3), (2, 1), 0) == geo.key_real_blowup(6, (3, 2), (1, 2), 0)
