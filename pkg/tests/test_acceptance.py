"""Acceptance criteria, one PASS/FAIL line each.

    pytest -s tests/test_acceptance.py      (lines show with -s)
    python3 tests/test_acceptance.py        (standalone, exit 1 on any FAIL)

All comparisons are exact (integers, rationals); the only tolerances are the
wall-clock limits in LIMITS, in seconds.
"""
import subprocess
import sys
import time
from math import comb, factorial
from pathlib import Path

import pytest

from operadic_posets import partitions as pt
from operadic_posets.catalog import MLRT, MLT, NS, forget_root, get_family, lists_count, lists_count_recursive
from operadic_posets.cli import tab3_tsv
from operadic_posets.cohomology import cohomology_Z, get_complex
from operadic_posets.operad_cohomology import (arity2_generated_rank, bracket_span_rank,
                                               check_relation_zero, class_from_cochain,
                                               compose_partial, jacobi_terms,
                                               metabelian_terms, prelie_terms,
                                               pullback_operad_morphism, tree_class,
                                               verify_operad_axioms)
from operadic_posets.partitions import STAR
from operadic_posets.posets import (adjoin_bottom, adjoin_top, check_recursive_atom_condition, dual,
                                    is_totally_semimodular, mobius_number, sjt_order, zeta_eval)
from operadic_posets.series import (SymFunc, character_top, dual_series, mobius_left_egf, plethysm)
from operadic_posets.set_operads import OPERADS, nac2_recurrence
from operadic_posets.species import PI

TESTS = Path(__file__).parent
LIMITS = {1: 120, 3: 600, 4: 300, 10: 300, 12: 60}
CATALOG = ["pi", "ns", "nc2", "mlt", "mlrt", "left:com", "left:as", "left:nac2", "left:up",
           "right:com", "right:as", "right:perm", "bi:as:as", "bi:nac2:perm"]


def summary(fam, n, variant):
    return cohomology_Z(get_complex(get_family(fam).family_poset(n), variant))


def top_only(s, n, rank=None):
    """Concentrated in degree n-1, free, with the given rank."""
    free = all(not t for t in s.torsion)
    ok = free and s.concentrated_in() == [n - 1]
    return ok and (rank is None or s.betti[n - 1] == rank)


def pi_class(ground, text, deg):
    chain = tuple(pt.parse_partition(x) for x in text.split("<"))
    return class_from_cochain(PI, ground, "minmax", deg, {chain: 1})


# ---------------------------------------------------------------- criteria

def crit_1():
    got = {n: summary("pi", n, "minmax") for n in range(2, 7)}
    ok = all(top_only(s, n, factorial(n - 1)) for n, s in got.items())
    return ok, "betti " + " ".join("n=%d:%s" % (n, s.betti) for n, s in got.items())


def crit_2():
    jac = check_relation_zero(jacobi_terms())
    star = lambda *bl: frozenset(frozenset(b) for b in bl)
    u = class_from_cochain(PI, (1, STAR), "minmax", 1, {(star({1, STAR}), star({1}, {STAR})): 1})
    v = pi_class((2, 3), "23<2|3", 1)
    comp = compose_partial(u, v) == pi_class((1, 2, 3), "123<1|23<1|2|3", 2)
    return jac and comp, "jacobi=%s composition=%s" % (jac, comp)


def crit_3():
    fams = ["pi", "left:as", "right:as", "right:perm", "ns", "nc2", "mlt", "mlrt"]
    reps = {f: verify_operad_axioms(get_family(f), 4) for f in fams}
    bad = [f for f, r in reps.items() if not r.ok]
    checks = sum(r.checks for r in reps.values())
    return not bad, "checks=%d failing=%s" % (checks, bad or "none")


TAB3 = ("n\tcohomology\tmu_hat\n"
        "1\th^0=Z\t1\n"
        "2\th^1=Z\t-1\n"
        "3\th^1=Z, h^2=Z^2\t1\n"
        "4\th^2=Z^7, h^3=Z^6\t1\n"
        "5\th^3=Z^43, h^4=Z^24\t-19\n")


def crit_4():
    got = tab3_tsv(5)
    return got == TAB3, "rows=%s" % [l.split("\t")[1:] for l in got.splitlines()[1:]]


def crit_5():
    F = get_family("left:as")
    direct = [mobius_number(F.family_poset(n), "min") for n in range(1, 8)]
    egf = mobius_left_egf(dual_series("as", 7)).int_counts()
    want = [(-1) ** (n - 1) for n in range(1, 8)]
    return direct == want == egf, "direct=%s egf=%s" % (direct, egf)


def crit_6():
    rec = nac2_recurrence(6)
    enum = [OPERADS["nac2"].count(n) for n in range(1, 7)]
    F = get_family("left:nac2")
    direct = [mobius_number(F.family_poset(n), "min") for n in range(1, 6)]
    egf = mobius_left_egf(dual_series("nac2", 5)).int_counts()
    ok = enum == rec[1:7] and direct == egf == [1, -1, 1, -13, 61]
    return ok, "counts=%s direct=%s egf=%s" % (enum, direct, egf)


def crit_7():
    hat = {n: summary("right:perm", n, "max") for n in range(1, 6)}
    ok1 = all(top_only(s, n, (n - 1) ** (n - 1)) for n, s in hat.items())
    F = get_family("right:perm")
    semi = all(is_totally_semimodular(dual(adjoin_bottom(F.family_poset(n)))) for n in range(1, 5))
    h = {n: summary("right:perm", n, "minmax") for n in range(1, 5)}
    ok3 = all(h[n].betti[n - 1] == n ** (n - 1) for n in h)
    return ok1 and semi and ok3, "hat=%s semimodular=%s h=%s" % (
        [hat[n].betti[n - 1] for n in hat], semi, [h[n].betti[n - 1] for n in h])


def crit_8():
    h = {n: summary("ns", n, "minmax") for n in range(1, 7)}
    ok1 = all(top_only(s, n, max(n - 1, 1)) for n, s in h.items())
    meta = check_relation_zero(metabelian_terms())
    span = {n: bracket_span_rank(NS, n) for n in range(2, 6)}
    ok3 = all(span[n] == h[n].betti[n - 1] for n in span)
    return ok1 and meta and ok3, "ranks=%s metabelian=%s span=%s" % (
        [h[n].betti[n - 1] for n in h], meta, list(span.values()))


def _as_atoms(n):
    top = frozenset(frozenset([s]) for s in range(1, n + 1))
    return [(top, tuple(frozenset([s]) for s in w)) for w in sjt_order(n)]


def crit_9():
    F = get_family("left:as")
    rao = all(check_recursive_atom_condition(dual(adjoin_top(F.family_poset(n))), _as_atoms(n))
              for n in range(2, 5))
    s = {n: summary("left:as", n, "min") for n in range(1, 5)}
    ok = all(top_only(x, n, 1) for n, x in s.items())
    return rao and ok, "atom_order=%s check_ranks=%s" % (rao, [x.betti for x in s.values()])


def crit_10():
    h = {n: summary("nc2", n, "minmax") for n in range(1, 5)}
    check = {n: summary("nc2", n, "min") for n in range(1, 5)}
    conc = all(top_only(h[n], n) and top_only(check[n], n, (n - 1) ** (n - 1)) for n in h)
    F = get_family("nc2")
    chars = True
    for n in (3, 4):
        for lam, val in character_top(F, n, "min").items():
            z = len(lam)
            chars &= val == (-1) ** (n - z) * (n - 1) ** (z - 1)
    prelie = check_relation_zero(prelie_terms())
    ranks = [h[n].betti[n - 1] for n in h]
    cat = lambda m: comb(2 * m, m) // (m + 1)
    note = "h_ranks=%s n!C_n=%s n!C_(n-1)=%s" % (
        ranks, [factorial(n) * cat(n) for n in h], [factorial(n) * cat(n - 1) for n in h])
    return conc and chars and prelie, "concentrated=%s characters=%s prelie=%s %s" % (
        conc, chars, prelie, note)


def crit_11():
    mlt = {n: summary("mlt", n, "minmax") for n in range(1, 6)}
    mlrt = {n: summary("mlrt", n, "minmax") for n in range(1, 6)}
    ok1 = all(top_only(mlt[n], n, n ** (n - 2) if n > 1 else 1) for n in mlt)
    ok2 = all(top_only(mlrt[n], n, n ** (n - 1)) for n in mlrt)
    u, v = tree_class(MLT, [(1, STAR)]), tree_class(MLT, [(2, 3)])
    two = compose_partial(u, v) == tree_class(MLT, [(1, 2), (2, 3)]) + tree_class(MLT, [(1, 3), (3, 2)])
    fr = True
    for edges in ([(1, 2), (2, 3)], [(1, 2), (1, 3)], [(1, 3), (2, 3)]):
        want = tree_class(MLRT, edges, root=1)
        for r in (2, 3):
            want = want + tree_class(MLRT, edges, root=r)
        fr &= pullback_operad_morphism(forget_root(), tree_class(MLT, edges)) == want
    a2 = arity2_generated_rank(MLT, 3)
    return ok1 and ok2 and two and fr and a2 == 2, "mlt=%s mlrt=%s two_term=%s forget_root=%s arity2=%d" % (
        [mlt[n].betti[n - 1] for n in mlt], [mlrt[n].betti[n - 1] for n in mlrt], two, fr, a2)


def crit_12():
    pleth = all(plethysm(SymFunc.p(m, 12), SymFunc.p(n, 12)) == SymFunc.p(m * n, 12)
                for m in range(1, 4) for n in range(1, 4))
    checked, bad = 0, []
    for fam in CATALOG:
        F = get_family(fam)
        n = 1
        while True:
            P = F.family_poset(n)
            if len(P) > 40:
                break
            for v in ("full", "minmax", "min", "max"):
                checked += 1
                if zeta_eval(P, v, -1) != mobius_number(P, v):
                    bad.append((fam, n, v))
            n += 1
    R = get_family("right:as")
    lists = True
    for n in range(1, 9):
        direct = [0] * (n + 1)
        for x in R.elements(frozenset(range(1, n + 1))):
            direct[len(R.a(x))] += 1
        lists &= all(lists_count(n, k) == lists_count_recursive(n, k) == direct[k]
                     for k in range(1, n + 1))
    return pleth and not bad and lists, "plethysm=%s zeta_checks=%d mismatches=%s lists=%s" % (
        pleth, checked, bad or "none", lists)


PROPERTY_SELECTION = ("d_squared or chain_map or concat_associativity or "
                      "concat_compatible or philip_hall or mobius_sum_rule")


def crit_13():
    cmd = [sys.executable, "-m", "pytest", "-q", "-p", "no:cacheprovider",
           str(TESTS / "test_cohomology.py"), str(TESTS / "test_posets.py"),
           "-k", PROPERTY_SELECTION]
    r = subprocess.run(cmd, capture_output=True, text=True, cwd=TESTS.parent)
    tail = r.stdout.strip().splitlines()[-1] if r.stdout.strip() else r.stderr.strip()[-200:]
    return r.returncode == 0 and "passed" in tail, tail


CRITERIA = {k: globals()["crit_%d" % k] for k in range(1, 14)}


def run_criterion(k):
    t0 = time.perf_counter()
    try:
        ok, detail = CRITERIA[k]()
    except Exception as e:  # a crash is a FAIL, reported with the exception
        ok, detail = False, "%s: %s" % (type(e).__name__, e)
    dt = time.perf_counter() - t0
    limit = LIMITS.get(k)
    if limit is not None and dt > limit:
        ok, detail = False, detail + " (over %ds)" % limit
    print("%s criterion %d  %.1fs  %s" % ("PASS" if ok else "FAIL", k, dt, detail))
    return ok


@pytest.mark.parametrize("k", sorted(CRITERIA))
def test_criterion(k):
    assert run_criterion(k)


if __name__ == "__main__":
    results = [run_criterion(k) for k in sorted(CRITERIA)]
    sys.exit(0 if all(results) else 1)
