from math import factorial

import pytest

from walled_brauer.triples import (
    ShapePair,
    all_paths,
    canonical_triple,
    count_ranks,
    enumerate_shapes,
    enumerate_triples,
    iter_all_triples,
    lambda0,
    m0_triples,
    make_triple,
    max_statistic,
    path_max,
    path_to_triple,
    res_shapes,
    res_triple,
    shape_relation,
    triple_to_path,
)

SMALL = [(r, s) for r in range(0, 5) for s in range(0, 5) if 1 <= r + s <= 6]


def shape(lam, mu, r, s):
    return ShapePair(lam, mu, r - sum(lam))


def test_shapes_22():
    got = [(sh.lam, sh.mu) for sh in enumerate_shapes(2, 2)]
    assert set(got) == {((2,), (2,)), ((1, 1), (2,)), ((2,), (1, 1)), ((1, 1), (1, 1)), ((1,), (1,)), ((), ())}
    assert len(got) == 6


def test_shapes_small():
    assert enumerate_shapes(1, 0) == [ShapePair((1,), (), 0)]
    assert {(sh.lam, sh.mu) for sh in enumerate_shapes(1, 1)} == {((1,), (1,)), ((), ())}


@pytest.mark.parametrize("lam,mu,count", [((1,), (1,), 4), ((), (), 2), ((2,), (2,), 1)])
def test_triple_counts_22(lam, mu, count):
    assert len(enumerate_triples(shape(lam, mu, 2, 2), 2, 2)) == count


def test_profile_22():
    assert [len(enumerate_triples(sh, 2, 2)) for sh in enumerate_shapes(2, 2)] == [1, 1, 1, 1, 4, 2]


@pytest.mark.parametrize("r,s", SMALL)
def test_sum_of_squares_is_factorial(r, s):
    total = sum(len(enumerate_triples(sh, r, s)) ** 2 for sh in enumerate_shapes(r, s))
    assert total == factorial(r + s)


@pytest.mark.parametrize("r,s", [(2, 2), (3, 1), (2, 3), (3, 2)])
def test_triples_are_standard_and_distinct(r, s):
    for sh in enumerate_shapes(r, s):
        trs = enumerate_triples(sh, r, s)
        assert len({tr.key() for tr in trs}) == len(trs)
        assert all(tr.is_standard() and tr.shape == sh for tr in trs)


@pytest.mark.parametrize("r,s", [(r, s) for r, s in SMALL if r + s <= 5])
def test_path_bijection(r, s):
    paths = all_paths(r, s)
    triples = [path_to_triple(p, r) for p in paths]
    assert len({t.key() for t in triples}) == len(paths)
    assert len(paths) == sum(len(enumerate_triples(sh, r, s)) for sh in enumerate_shapes(r, s))
    for p, t in zip(paths, triples):
        assert triple_to_path(t) == p
        assert path_max(p) == max_statistic(t)


def test_max_examples():
    assert max_statistic(canonical_triple(shape((2,), (2,), 2, 2), 2, 2)) == 4
    assert max_statistic(make_triple([[1], [2]], [[2], [1]], [])) == 1
    assert max_statistic(make_triple([[1, 2]], [[2]], [[1]])) == 3


def test_res_shapes_of_11():
    sh = shape((1,), (1,), 2, 2)
    got = res_shapes(sh, 2, 2)
    assert {(x.lam, x.mu) for x in got} == {((1,), ()), ((2,), (1,)), ((1, 1), (1,))}
    fibers = {}
    for tr in enumerate_triples(sh, 2, 2):
        key = res_triple(tr).shape
        fibers[(key.lam, key.mu)] = fibers.get((key.lam, key.mu), 0) + 1
    assert sorted(fibers.values(), reverse=True) == [2, 1, 1]
    assert fibers[((1,), ())] == 2


@pytest.mark.parametrize("r,s", [(2, 2), (3, 1), (2, 3), (3, 2)])
def test_res_shapes_linearly_ordered(r, s):
    for sh in enumerate_shapes(r, s):
        res = res_shapes(sh, r, s)
        for i in range(len(res) - 1):
            assert res[i].strictly_dominates(res[i + 1])


def test_restriction_with_s_zero_removes_r():
    tr = make_triple([[1, 3], [2]], [], [])
    assert res_triple(tr).t.rows == ((1,), (2,))


@pytest.mark.parametrize("r,s", [(2, 2), (3, 1), (2, 3)])
def test_m0_empty_iff_large_first_rows(r, s):
    for n in range(1, r + s + 2):
        for sh in enumerate_shapes(r, s):
            assert (not m0_triples(sh, r, s, n)) == (sh.lam1_plus_mu1 > n)


@pytest.mark.parametrize(
    "args,expected", [((2, 2, 4), (24, 24, 0)), ((2, 2, 2), (24, 14, 10)), ((2, 2, 3), (24, 23, 1)), ((2, 2, 1), (24, 1, 23))]
)
def test_count_ranks(args, expected):
    assert count_ranks(*args) == expected


@pytest.mark.parametrize("r,s", SMALL)
def test_faithful_for_large_n(r, s):
    assert count_ranks(r, s, r + s)[2] == 0


def test_lambda0_22():
    assert {(sh.lam, sh.mu) for sh in lambda0(2, 2, 2)} == {((1, 1), (1, 1)), ((1,), (1,)), ((), ())}


def test_shape_dominance():
    a, b = shape((), (), 2, 2), shape((1,), (1,), 2, 2)
    assert a.strictly_dominates(b)
    assert shape((2,), (2,), 2, 2).dominates(shape((1, 1), (1, 1), 2, 2))
    assert not shape((1, 1), (2,), 2, 2).dominates(shape((2,), (1, 1), 2, 2))
    rel = shape_relation(2, 2)
    assert rel[(a, b)] and not rel[(b, a)]


def test_shape_parse():
    assert ShapePair.parse("lam=1;mu=1", 2, 2) == ShapePair((1,), (1,), 1)
    assert ShapePair.parse("lam=;mu=", 2, 2) == ShapePair((), (), 2)
    with pytest.raises(ValueError):
        ShapePair.parse("lam=2;mu=1", 2, 2)
    with pytest.raises(ValueError):
        ShapePair.parse("nu=2", 2, 2)


def test_triple_json_roundtrip():
    for _, tr in iter_all_triples(2, 2):
        assert type(tr).from_json(tr.to_json()) == tr


def test_invalid_triple():
    with pytest.raises(ValueError):
        make_triple([[1, 2]], [[1]], [[1]])
