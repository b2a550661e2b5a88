import pytest
from hypothesis import given, settings, strategies as st

from operadic_posets import partitions as pt
from operadic_posets.catalog import get_family
from operadic_posets.posets import (ChainSpec, PosetError, PosetMap, adjoin_bottom, adjoin_top,
                                    check_compatibility, check_recursive_atom_condition,
                                    enumerate_chains, from_covers, from_relation, interval,
                                    is_totally_semimodular, mobius_function, mobius_number,
                                    multichain_count, fixed_chain_trace, signed_fixed_trace,
                                    sjt_order, restrict_word, dual, zeta_eval, boolean_lattice)
from operadic_posets.species import PI


def by_labels(labels, pairs):
    labels = list(labels)
    ix = {l: i for i, l in enumerate(labels)}
    return from_covers(labels, [(ix[a], ix[b]) for a, b in pairs])


def pi3():
    return PI.family_poset(3)


# ---------------------------------------------------------------- strategies

@st.composite
def random_posets(draw, max_size=7):
    """Random poset: a random strict relation on range(n) that respects index order."""
    n = draw(st.integers(1, max_size))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    rel = {p for p, k in zip(pairs, keep) if k}
    # transitive closure
    changed = True
    while changed:
        changed = False
        for (a, b) in list(rel):
            for (c, d) in list(rel):
                if b == c and (a, d) not in rel:
                    rel.add((a, d))
                    changed = True
    return from_relation(list(range(n)), lambda x, y: x == y or (x, y) in rel)


# ---------------------------------------------------------------- basics

def test_from_covers_removes_redundant_pairs():
    with pytest.warns(UserWarning):
        P = by_labels("abc", [("a", "b"), ("b", "c"), ("a", "c")])
    assert P.n_covers() == 2
    assert P.less(P.element("a"), P.element("c"))


def test_cycle_rejected():
    with pytest.raises(PosetError):
        by_labels("ab", [("a", "b"), ("b", "a")])


def test_interval_of_partition_lattice():
    P = pi3()
    sub = interval(P, lower=pt.parse_partition("1|23"))
    assert {pt.fmt_partition(x) for x in sub.poset.labels} == {"1|2|3", "1|23"}
    chains = enumerate_chains(sub.poset, ChainSpec("full", 1))
    labs = [[pt.fmt_partition(sub.poset.labels[i]) for i in c] for c in chains]
    assert labs == [["1|23", "1|2|3"]]


def test_minmax_chains_of_pi3():
    P = pi3()
    c1 = enumerate_chains(P, ChainSpec("minmax", 1))
    assert [[pt.fmt_partition(P.labels[i]) for i in c] for c in c1] == [["123", "1|2|3"]]
    c2 = enumerate_chains(P, ChainSpec("minmax", 2))
    assert len(c2) == 3
    mids = {pt.fmt_partition(P.labels[c[1]]) for c in c2}
    assert mids == {"1|23", "12|3", "13|2"}


def test_compatibility_of_forgetful_map():
    NS = get_family("ns")
    f = PosetMap.from_function(NS.family_poset(4), PI.family_poset(4), NS.a)
    assert check_compatibility(f, "minmax")
    assert f.is_order_preserving()


def test_compatibility_failure():
    # collapse the middle of a 3-chain onto its top: the preimage of max is not maximal
    C = by_labels("abc", [("a", "b"), ("b", "c")])
    D = by_labels("xy", [("x", "y")])
    f = PosetMap.from_function(C, D, {"a": "x", "b": "y", "c": "y"}.get)
    assert check_compatibility(f, "min")
    assert not check_compatibility(f, "max")
    assert not check_compatibility(f, "minmax")


# ---------------------------------------------------------------- mobius / zeta

def test_mobius_pi4_sign():
    # alternating chain sum; h^3 has rank 6 and sits in odd degree
    assert mobius_number(PI.family_poset(4), "minmax") == -6


def test_mobius_examples():
    assert mobius_number(get_family("left:as").family_poset(3), "min") == 1
    assert mobius_number(get_family("right:perm").family_poset(3), "max") == 4


def test_mobius_function():
    P = pi3()
    bot, top = P.labels[P.minimal[0]], P.labels[P.maximal[0]]
    assert mobius_function(P, bot, bot) == 1
    assert mobius_function(P, bot, top) == 2
    diamond = by_labels("0abt", [("0", "a"), ("0", "b"), ("a", "t"), ("b", "t")])
    assert mobius_function(diamond, "0", "t") == 1
    with pytest.raises(PosetError):
        mobius_function(diamond, "a", "b")


def test_zeta_examples():
    one = by_labels(["p"], [])
    for v in ("min", "max", "minmax"):
        assert zeta_eval(one, v, -1) == 1
    assert zeta_eval(get_family("left:as").family_poset(2), "min", -1) == -1
    # t counts steps: x0 <= x1 <= x2 from bottom to top has a free middle element
    assert zeta_eval(pi3(), "minmax", 1) == 1
    assert zeta_eval(pi3(), "minmax", 2) == 5


@settings(max_examples=60, deadline=None)
@given(random_posets())
def test_philip_hall(P):
    # sum of mobius(x, y) over y >= x equals the signed chain count from x
    for v in ("minmax", "min", "max"):
        assert zeta_eval(P, v, -1) == mobius_number(P, v)
    if P.is_bounded() and len(P) > 1:
        b, t = P.labels[P.bottom()], P.labels[P.top()]
        assert mobius_function(P, b, t) == mobius_number(P, "minmax")


@settings(max_examples=40, deadline=None)
@given(random_posets())
def test_mobius_sum_rule(P):
    for i in range(len(P)):
        for j in range(len(P)):
            if P.leq(i, j):
                s = sum(mobius_function(P, P.labels[i], P.labels[k])
                        for k in range(len(P)) if P.leq(i, k) and P.leq(k, j))
                assert s == (1 if i == j else 0)


@settings(max_examples=40, deadline=None)
@given(random_posets())
def test_multichain_identity_trace(P):
    # identity fixes every chain
    g = list(range(len(P)))
    for v in ("full", "min", "max", "minmax"):
        for k in range(3):
            assert fixed_chain_trace(P, g, ChainSpec(v, k)) == len(enumerate_chains(P, ChainSpec(v, k)))
    assert multichain_count(P, "full", 0) == len(P)


# ---------------------------------------------------------------- traces

def _relabel_perm(P, species, f):
    return [P.element(species.relabel(x, f)) for x in P.labels]


def test_nc2_lefschetz_values():
    N = get_family("nc2")
    P = N.family_poset(3)
    cyc = _relabel_perm(P, N, {1: 2, 2: 3, 3: 1}.get)
    tr = _relabel_perm(P, N, {1: 2, 2: 1, 3: 3}.get)
    assert signed_fixed_trace(P, cyc, "min") == 1
    assert signed_fixed_trace(P, tr, "min") == -2


def test_trace_rejects_non_automorphism():
    P = by_labels("abc", [("a", "b"), ("b", "c")])
    with pytest.raises(PosetError):
        fixed_chain_trace(P, [1, 0, 2], ChainSpec("full", 0))


# ---------------------------------------------------------------- checkers

def test_semimodular_examples():
    P = get_family("right:perm").family_poset(3)
    assert is_totally_semimodular(dual(adjoin_bottom(P)))
    bad = by_labels(["0", "a", "b", "c", "1"],
                  [("0", "a"), ("0", "b"), ("a", "1"), ("b", "c"), ("c", "1")])
    assert not is_totally_semimodular(bad)
    assert is_totally_semimodular(boolean_lattice(3))


def test_sjt_order_n3():
    got = ["".join(map(str, w)) for w in sjt_order(3)]
    assert got == ["123", "132", "312", "321", "231", "213"]


def test_sjt_adjacent_transpositions():
    for n in range(2, 6):
        ws = sjt_order(n)
        assert len(set(ws)) == len(ws)
        for a, b in zip(ws, ws[1:]):
            diff = [i for i in range(n) if a[i] != b[i]]
            assert len(diff) == 2 and diff[1] == diff[0] + 1


def test_sjt_heredity():
    # restricting the n=4 order to letters <= 3 never reverses the n=3 order
    pos3 = {w: i for i, w in enumerate(sjt_order(3))}
    seq = [pos3[restrict_word(w, 3)] for w in sjt_order(4)]
    assert seq == sorted(seq)


def _as_atoms(n, order):
    S = range(1, n + 1)
    top = frozenset(frozenset([s]) for s in S)
    return [(top, tuple(frozenset([s]) for s in w)) for w in order]


@pytest.mark.parametrize("n", [2, 3, 4])
def test_atom_order_sjt(n):
    A = dual(adjoin_top(get_family("left:as").family_poset(n)))
    assert check_recursive_atom_condition(A, _as_atoms(n, sjt_order(n)))


def test_atom_order_discriminates():
    A = dual(adjoin_top(get_family("left:as").family_poset(3)))
    bad = [(1, 2, 3), (1, 3, 2), (2, 1, 3), (3, 2, 1), (2, 3, 1), (3, 1, 2)]
    assert not check_recursive_atom_condition(A, _as_atoms(3, bad))


def test_atom_order_rejects_non_atoms():
    A = dual(adjoin_top(get_family("left:as").family_poset(3)))
    with pytest.raises(PosetError):
        check_recursive_atom_condition(A, _as_atoms(3, sjt_order(3))[:-1])
