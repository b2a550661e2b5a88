from math import prod

import pytest

from operadic_posets import partitions as pt
from operadic_posets.catalog import get_family, forget_root, MLT, MLRT, NS
from operadic_posets.set_operads import get_operad
from operadic_posets.species import (PI, Mutated, SpeciesError, check_morphism, fiber_product,
                                     species_morphism, terminal_morphism, verify_all, verify_base,
                                     verify_unitality)


def test_partition_counts():
    assert [len(PI.family_poset(n)) for n in range(1, 6)] == [1, 2, 5, 15, 52]


@pytest.mark.parametrize("fam,n", [("pi", 5), ("ns", 4), ("nc2", 3), ("mlt", 4), ("mlrt", 3),
                                   ("right:as", 4), ("left:as", 4), ("right:perm", 4),
                                   ("left:nac2", 4), ("left:up", 3), ("left:com", 4),
                                   ("bi:as:as", 3), ("bi:nac2:perm", 3)])
def test_axioms(fam, n):
    rep = verify_all(get_family(fam), n)
    assert rep.ok, rep.to_json()
    assert rep.checks > 0


def test_singletons_are_points():
    for fam in ("pi", "ns", "nc2", "mlt", "mlrt", "left:as", "right:perm"):
        assert verify_unitality(get_family(fam)).ok


def _swap_phi(base, x, y):
    z = base.phi(x, y)
    pts = pt.sort_labels(base.ground(z))
    if len(pts) < 2:
        return z
    a, b = pts[0], pts[1]
    return base.relabel(z, lambda s: b if s == a else a if s == b else s)


def _rotate_psi(base, x, y):
    z = base.psi(x, y)
    return z[1:] + z[:1]


def test_mutated_phi_is_caught():
    bad = Mutated(PI, phi=_swap_phi)
    rep = verify_base(bad, 3)
    assert not rep.ok
    assert any(f["check"].startswith("phi") for f in rep.failures)


def test_mutated_psi_is_caught():
    bad = Mutated(get_family("left:as"), psi=_rotate_psi)
    rep = verify_all(bad, 3)
    assert not rep.ok


def test_fiber_product_counts():
    F = fiber_product(get_family("left:as"), get_family("right:as"), name="bi:as:as")
    As = get_operad("as")
    for n in (1, 2, 3):
        S = tuple(range(1, n + 1))
        want = sum(As.count(len(pi)) * prod(As.count(len(T)) for T in pi)
                   for pi in pt.set_partitions(S))
        assert len(F.family_poset(n)) == want
    assert len(F.family_poset(2)) == 4


def test_terminal_and_forget_root():
    assert check_morphism(terminal_morphism(NS), 4).ok
    assert check_morphism(forget_root(), 4).ok
    species_morphism(MLRT, MLT, forget_root().fn, n_max=3)


def test_bad_morphism_rejected():
    # sending every partition to the bottom is not order preserving onto a(x)
    def collapse(x):
        return pt.one_block(pt.ground(x))
    with pytest.raises(SpeciesError):
        species_morphism(PI, PI, collapse, n_max=3)


def test_unknown_family():
    with pytest.raises(SpeciesError) as e:
        get_family("trees")
    assert "valid:" in str(e.value)
