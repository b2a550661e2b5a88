import pytest
from hypothesis import given, settings, strategies as st

from operadic_posets import partitions as pt
from operadic_posets.set_operads import (OPERADS, OperadError, check_operad_axioms, get_operad,
                                         is_left_basic, is_right_basic, left_basic_witness,
                                         nac2_recurrence, right_basic_witness, up_reference_count,
                                         up_shape_counts)

B = frozenset


def test_as_splicing():
    As = get_operad("as")
    pi = pt.make({1, 2}, {3})
    got = As.compose(pi, (B({1, 2}), B({3})), {B({1, 2}): (2, 1), B({3}): (3,)})
    assert got == (2, 1, 3)


def test_perm_pointing():
    Perm = get_operad("perm")
    pi = pt.make({1, 2}, {3, 4})
    assert Perm.compose(pi, B({1, 2}), {B({1, 2}): 2, B({3, 4}): 3}) == 2


@pytest.mark.parametrize("name", ["com", "as", "nac2", "up"])
def test_left_basic(name):
    assert is_left_basic(OPERADS[name], 4)


def test_perm_not_left_basic():
    assert not is_left_basic(OPERADS["perm"], 4)
    pi, xi, mu1, mu2 = left_basic_witness(OPERADS["perm"], 4)
    assert mu1 != mu2


@pytest.mark.parametrize("name", ["com", "as", "perm"])
def test_right_basic(name):
    assert is_right_basic(OPERADS[name], 4)


@pytest.mark.parametrize("name", ["up", "nac2"])
def test_not_right_basic_at_3(name):
    assert right_basic_witness(OPERADS[name], 3) is not None


def test_nac2_counts():
    u = nac2_recurrence(6)
    assert u[3] == 6 and u[4] == 36
    for n in range(1, 7):
        assert OPERADS["nac2"].count(n) == u[n]


def test_up_counts():
    assert up_shape_counts(5)[1:] == [1, 2, 4, 12, 40]
    for n in range(1, 5):
        assert OPERADS["up"].count(n) == up_reference_count(n)


@pytest.mark.parametrize("name", list(OPERADS))
def test_operad_axioms(name):
    assert check_operad_axioms(OPERADS[name], 3) == []


def test_unknown_operad():
    with pytest.raises(OperadError):
        get_operad("lie")


@settings(max_examples=30, deadline=None)
@given(st.permutations(range(1, 5)), st.sampled_from(["as", "nac2", "up", "perm"]))
def test_relabel_is_a_bijection(perm, name):
    O = OPERADS[name]
    S = (1, 2, 3, 4)
    f = dict(zip(S, perm)).get
    els = O.elements(S)
    img = {O.relabel(x, f) for x in els}
    assert img == set(O.elements(S))
