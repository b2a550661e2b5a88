import pytest
from hypothesis import given, settings, strategies as st

from operadic_posets import partitions as pt
from operadic_posets.catalog import (LeftDecorated, RightDecorated, get_family, is_noncrossing,
                                     lists_count, lists_count_recursive, noncrossing_partitions)
from operadic_posets.posets import _bits
from operadic_posets.set_operads import OPERADS
from operadic_posets.species import PI, SpeciesError


SIZES = {
    "left:as": [1, 3, 13, 75],
    "right:as": [1, 3, 13, 73],
    "right:perm": [1, 3, 10, 41],
    "ns": [1, 2, 5, 12],
    "nc2": [1, 3, 16, 125],
    "mlt": [1, 2, 7, 42],
    "mlrt": [1, 3, 16, 133],
    "left:nac2": [1, 3, 13, 87],
    "left:com": [1, 2, 5, 15],
    "right:com": [1, 2, 5, 15],
}


@pytest.mark.parametrize("fam", sorted(SIZES))
def test_sizes(fam):
    F = get_family(fam)
    assert [len(F.family_poset(n)) for n in range(1, 5)] == SIZES[fam]


def test_left_com_is_pi():
    F = get_family("left:com")
    for n in range(1, 5):
        assert sorted(map(pt.fmt_partition, (F.a(x) for x in F.family_poset(n).labels))) == \
            sorted(map(pt.fmt_partition, PI.family_poset(n).labels))


def test_refusals():
    with pytest.raises(SpeciesError):
        get_family("left:perm")
    with pytest.raises(SpeciesError):
        get_family("right:nac2")


def test_ns_small_is_pi():
    NS = get_family("ns")
    assert set(NS.family_poset(3).labels) == set(PI.family_poset(3).labels)


def _is_lattice(P):
    geq = [P.gt_bits(i) | (1 << i) for i in range(len(P))]
    for i in range(len(P)):
        for j in range(i + 1, len(P)):
            ub = geq[i] & geq[j]
            least = [k for k in _bits(ub) if geq[k] & ub == ub]
            if len(least) != 1:
                return False
    return True


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_ns_lattice(n):
    P = get_family("ns").family_poset(n)
    assert P.is_bounded() and _is_lattice(P)


def test_nc2_shape():
    P = get_family("nc2").family_poset(3)
    assert len(P.minimal) == 1 and len(P.maximal) == 6
    # parking functions
    assert [len(get_family("nc2").family_poset(n)) for n in (2, 3, 4)] == [(n + 1) ** (n - 1) for n in (2, 3, 4)]


def test_noncrossing():
    cat = [1, 1, 2, 5, 14, 42]
    for n in range(1, 6):
        assert len(noncrossing_partitions(n)) == cat[n]
    assert not is_noncrossing(pt.make({1, 3}, {2, 4}))
    assert is_noncrossing(pt.make({1, 4}, {2, 3}))


def test_tree_maxima():
    for fam, n, want in [("mlt", 3, 3), ("mlt", 4, 16), ("mlrt", 3, 9), ("mlrt", 4, 64)]:
        assert len(get_family(fam).family_poset(n).maximal) == want


def test_lists_count():
    assert lists_count(3, 2) == 6
    assert lists_count(4, 2) == 36
    for n in range(1, 9):
        for k in range(1, n + 1):
            assert lists_count(n, k) == lists_count_recursive(n, k)


def test_lists_count_direct():
    F = get_family("right:as")
    for n in range(1, 5):
        P = F.family_poset(n)
        for k in range(1, n + 1):
            direct = sum(1 for x in P.labels if len(F.a(x)) == k)
            assert direct == lists_count(n, k)


@pytest.mark.parametrize("name,side", [("as", "left"), ("nac2", "left"), ("up", "left"),
                                       ("as", "right"), ("perm", "right")])
def test_fast_covers_match_exhaustive(name, side):
    cls = LeftDecorated if side == "left" else RightDecorated
    F = cls(OPERADS[name])
    S = (1, 2, 3)
    fast = F.build(frozenset(S))
    slow = F.build(frozenset(S), exhaustive=True)
    assert fast.labels == slow.labels
    assert [set(u) for u in fast.up] == [set(u) for u in slow.up]


@settings(max_examples=20, deadline=None)
@given(st.sampled_from(["left:as", "right:as", "nc2", "mlrt", "ns"]), st.permutations((1, 2, 3)))
def test_relabel_is_an_automorphism(fam, perm):
    F = get_family(fam)
    P = F.family_poset(3)
    f = dict(zip((1, 2, 3), perm)).get
    g = [P.element(F.relabel(x, f)) for x in P.labels]
    assert sorted(g) == list(range(len(P)))
    assert all({g[j] for j in P.up[i]} == set(P.up[g[i]]) for i in range(len(P)))
