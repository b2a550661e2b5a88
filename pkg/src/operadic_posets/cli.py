"""
Command line front end.

    python3 -m operadic_posets <command> ...

Exit codes: 0 success, 1 verification failure (JSON witness on stdout),
2 usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from . import partitions as pt
from .catalog import FAMILY_HELP, get_family
from .cohomology import cohomology_Q, cohomology_Z, get_complex
from .posets import (adjoin_bottom, adjoin_top, check_recursive_atom_condition, dual,
                     is_totally_semimodular, mobius_number, sjt_order, zeta_eval)
from .series import (DEFAULT_N, REGISTRY, dual_series, mobius_left_egf,
                     mobius_right_egf, registry_entry, table_rows)
from .set_operads import OPERADS, get_operad, is_left_basic, is_right_basic
from .species import SpeciesError, verify_all

VARIANTS = ("full", "minmax", "min", "max")

# hard caps without --unsafe-large: (mobius/counts, cohomology)
BUDGETS = {"pi": (7, 6), "nc2": (5, 4), "ns": (7, 6), "mlt": (5, 5), "mlrt": (5, 5)}
DECORATED_BUDGET = (5, 5)

EXPLAIN = {
    "jacobi": "The Lie bracket [12<1|2] of h^1(Pi(2)) satisfies the (desuspended) Jacobi "
              "identity: the three composites sum to a coboundary in h^2(Pi(3)).",
    "prelie": "Pulling back along a: Pi_2 -> Pi splits [12<1|2] as 1<2 + 2<1, and 1<2 "
              "satisfies the (desuspended) pre-Lie identity in h^2(Pi_2(3)).",
    "metabelian": "NS(4) has no element whose underlying partition is 12|34, so the "
                  "composite [[1,2],[3,4]] pulls back to zero: h(NS) is metabelian.",
    "tab2": "Moebius numbers of left-decorated partition posets from -C_dual(1-exp(x)); "
            "column 2 is -C_dual(-x) in closed form, the last columns are the computed and "
            "the reference sequences.",
    "tab3": "Integral cohomology of the max variant of right-As-decorated partitions, "
            "with the alternating sum mu_hat.",
    "tab4": "Moebius numbers of right-decorated partition posets from exp(-C_dual(-x))-1.",
}


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    family: str = None
    n: int = None
    variant: str = "minmax"
    coeff: str = "Z"
    fmt: str = "tsv"
    threads: int = 1
    out: str = None
    unsafe_large: bool = False


def _budget(family, kind):
    base = family.split(":")[0]
    caps = BUDGETS.get(base, DECORATED_BUDGET)
    return caps[0] if kind == "count" else caps[1]


def _check_budget(cfg, kind):
    if cfg.n is None or cfg.n < 1:
        raise UsageError("--n must be a positive integer")
    cap = _budget(cfg.family, kind)
    if cfg.n > cap and not cfg.unsafe_large:
        raise UsageError("n=%d exceeds the budget %d for %s; pass --unsafe-large to override"
                         % (cfg.n, cap, cfg.family))


def _family(name):
    try:
        return get_family(name)
    except SpeciesError as e:
        raise UsageError(str(e))


# ---------------------------------------------------------------- commands

def cmd_family(args, cfg, emit):
    if args.action == "list":
        for name in ["pi", "ns", "nc2", "mlt", "mlrt"]:
            emit(name)
        for o in OPERADS:
            emit("left:%s%s" % (o, "" if is_left_basic(OPERADS[o], 4) else "  (refused: not left-basic)"))
        for o in OPERADS:
            emit("right:%s%s" % (o, "" if is_right_basic(OPERADS[o], 4) else "  (refused: not right-basic)"))
        emit("bi:<left op>:<right op>")
        return 0
    _check_budget(cfg, "count")
    P = _family(cfg.family)
    Pp = P.family_poset(cfg.n)
    if cfg.fmt == "json":
        emit(Pp.to_json(P.fmt))
    else:
        emit("index\telement\tblocks\tcovers")
        for i, x in enumerate(Pp.labels):
            emit("%d\t%s\t%d\t%s" % (i, P.fmt(x), len(P.a(x)), ",".join(map(str, Pp.up[i]))))
    return 0


def cmd_cohomology(args, cfg, emit):
    _check_budget(cfg, "cohomology")
    P = _family(cfg.family)
    C = get_complex(P.family_poset(cfg.n), cfg.variant)
    if cfg.coeff == "Z":
        s = cohomology_Z(C)
        if cfg.fmt == "json":
            emit(s.to_json())
        else:
            emit("degree\trank\ttorsion")
            for k, (b, t) in enumerate(zip(s.betti, s.torsion)):
                emit("%d\t%d\t%s" % (k, b, ",".join(map(str, t)) or "-"))
    else:
        ranks, _ = cohomology_Q(C)
        if cfg.fmt == "json":
            emit(json.dumps({"variant": cfg.variant, "betti": ranks}))
        else:
            emit("degree\trank")
            for k, b in enumerate(ranks):
                emit("%d\t%d" % (k, b))
    return 0


def cmd_mobius(args, cfg, emit):
    _check_budget(cfg, "count")
    P = _family(cfg.family)
    emit(str(mobius_number(P.family_poset(cfg.n), cfg.variant)))
    return 0


def cmd_zeta(args, cfg, emit):
    _check_budget(cfg, "count")
    P = _family(cfg.family)
    emit(str(zeta_eval(P.family_poset(cfg.n), cfg.variant, args.t)))
    return 0


def _parse_label(s):
    if isinstance(s, int):
        return s
    if s == "*":
        return pt.STAR
    if isinstance(s, str) and s.lstrip("-").isdigit():
        return int(s)
    return s


def _load_class(text, P):
    from .operad_cohomology import OperadClass
    if os.path.exists(text):
        with open(text) as fh:
            text = fh.read()
    try:
        d = json.loads(text)
        ground = [_parse_label(s) for s in d["ground"]]
        return OperadClass(P, tuple(ground), int(d["degree"]), d.get("variant", "minmax"),
                           [__import__("fractions").Fraction(c) for c in d["coords"]])
    except (ValueError, KeyError, TypeError) as e:
        raise UsageError("bad class payload: %s" % e)


def cmd_compose(args, cfg, emit):
    from .operad_cohomology import compose_partial, lie_class, parse_word
    P = _family(cfg.family)
    if args.word:
        c = lie_class(P, parse_word(args.word))
    else:
        if not (args.u and args.v):
            raise UsageError("compose needs --word or both --u and --v")
        u, v = _load_class(args.u, P), _load_class(args.v, P)
        c = compose_partial(u, v)
    emit(c.to_json())
    if args.show_cochain:
        for ch, x in sorted(c.cochain().items(), key=lambda kv: [P.sort_key(e) for e in kv[0]]):
            emit("%s\t%s" % (x, " < ".join(P.fmt(e) for e in ch)))
    return 0


def cmd_relation(args, cfg, emit):
    from .operad_cohomology import RELATIONS, check_relation_zero
    if args.preset not in RELATIONS:
        raise UsageError("unknown preset; known: %s" % ", ".join(RELATIONS))
    build, arity, doc = RELATIONS[args.preset]
    if cfg.n is not None and cfg.n != arity:
        raise UsageError("preset %s lives in arity %d" % (args.preset, arity))
    if args.explain:
        emit(doc)
        emit(EXPLAIN[args.preset])
    terms = build()
    ok = check_relation_zero(terms)
    if ok:
        emit("PASS")
        return 0
    acc = terms[0][1].scale(terms[0][0])
    for s, c in terms[1:]:
        acc = acc + c.scale(s)
    emit("FAIL")
    emit(acc.to_json())
    return 1


def _verify_species_task(name, n_max):
    return verify_all(get_family(name), n_max).to_json()


def cmd_verify_species(args, cfg, emit):
    _family(cfg.family)
    n_max = args.n_max
    if n_max > 5 and not cfg.unsafe_large:
        raise UsageError("--n-max above 5 needs --unsafe-large")
    rep = json.loads(_verify_species_task(cfg.family, n_max))
    emit(json.dumps(rep))
    return 0 if rep["ok"] else 1


def cmd_verify_operad(args, cfg, emit):
    from .operad_cohomology import verify_operad_axioms
    P = _family(cfg.family)
    if args.budget < 3:
        raise UsageError("--budget must be >= 3")
    if args.budget > 4 and not cfg.unsafe_large:
        raise UsageError("--budget above 4 needs --unsafe-large")
    rep = verify_operad_axioms(P, args.budget)
    emit(rep.to_json())
    return 0 if rep.ok else 1


def cmd_operad(args, cfg, emit):
    if args.action == "list":
        for k in OPERADS:
            emit(k)
        return 0
    try:
        O = get_operad(args.operad)
    except ValueError as e:
        raise UsageError(str(e))
    n = cfg.n or 4
    if args.action == "count":
        emit("n\tcount")
        for m in range(1, n + 1):
            emit("%d\t%d" % (m, O.count(m)))
        return 0
    emit("left-basic\t%s" % is_left_basic(O, n))
    emit("right-basic\t%s" % is_right_basic(O, n))
    return 0


def cmd_series(args, cfg, emit):
    N = args.max_n
    if args.action == "table":
        return _series_table(args.id, N, emit, args.explain)
    try:
        e = registry_entry(args.name)
    except ValueError as err:
        raise UsageError(str(err))
    G = dual_series(e.key, N)
    if args.side == "left":
        f = mobius_left_egf(G)
    elif args.side == "right":
        f = mobius_right_egf(G)
    else:
        f = G
    emit("\t".join(str(c) for c in f.counts()))
    return 0


def _series_table(tid, N, emit, explain=False):
    if explain:
        emit(EXPLAIN[tid])
    emit("operad\t-C_dual(-x)\tcomputed\treference\tagree_on_overlap")
    for e, comp, printed in table_rows(tid, N):
        m = min(len(comp), len(printed))
        agree = comp[:m] == list(printed[:m])
        emit("%s\t%s\t%s\t%s\t%s" % (e.label, e.printed_dual, ",".join(map(str, comp)),
                                     ",".join(map(str, printed)), "yes" if agree else "no"))
    return 0


def cmd_checkers(args, cfg, emit):
    n = cfg.n
    if n is None or n < 1:
        raise UsageError("--n required")
    if n > 4 and not cfg.unsafe_large:
        raise UsageError("checkers above n=4 need --unsafe-large")
    if args.kind == "semimodular":
        fam = cfg.family or "right:perm"
        P = _family(fam).family_poset(n)
        D = dual(adjoin_bottom(P))
        ok = is_totally_semimodular(D)
        emit("%s\tn=%d\tdual of P with a least element adjoined\ttotally semimodular: %s" % (fam, n, ok))
    else:
        LA = _family("left:as")
        S = tuple(range(1, n + 1))
        A = dual(adjoin_top(LA.family_poset(n)))
        top = frozenset(frozenset([s]) for s in S)
        atoms = [(top, tuple(frozenset([s]) for s in w)) for w in sjt_order(n)]
        ok = True if n == 1 else check_recursive_atom_condition(A, atoms)
        emit("left:as\tn=%d\tSJT atom order\trecursive atom condition: %s" % (n, ok))
    return 0 if ok else 1


def tab3_tsv(max_n, threads=1):
    lines = ["n\tcohomology\tmu_hat"]
    ns = list(range(1, max_n + 1))
    if threads > 1:
        with ProcessPoolExecutor(threads) as ex:
            rows = list(ex.map(_tab3_row, ns))
    else:
        rows = [_tab3_row(n) for n in ns]
    lines.extend(rows)
    return "\n".join(lines) + "\n"


def _tab3_row(n):
    P = get_family("right:as").family_poset(n)
    s = cohomology_Z(get_complex(P, "max"))
    groups = []
    for k, (b, t) in enumerate(zip(s.betti, s.torsion)):
        if b or t:
            g = "Z" if b == 1 else ("Z^%d" % b if b else "")
            if t:
                g = "+".join(filter(None, [g] + ["Z/%d" % d for d in t]))
            groups.append("h^%d=%s" % (k, g))
    return "%d\t%s\t%d" % (n, ", ".join(groups), mobius_number(P, "max"))


def cmd_reproduce(args, cfg, emit):
    N = args.max_n
    if args.table == "tab3":
        if N > 5 and not cfg.unsafe_large:
            raise UsageError("tab3 above n=5 needs --unsafe-large")
        if args.explain:
            emit(EXPLAIN["tab3"])
        for line in tab3_tsv(N, cfg.threads).rstrip("\n").split("\n"):
            emit(line)
        return 0
    return _series_table(args.table, N, emit, args.explain)


# ---------------------------------------------------------------- parser

def build_parser():
    ap = argparse.ArgumentParser(prog="operadic_posets",
                                 description="Operadic poset species: cohomology, Moebius numbers, operad structures.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--family", help=FAMILY_HELP)
    common.add_argument("--n", type=int)
    common.add_argument("--variant", choices=VARIANTS, default="minmax")
    common.add_argument("--coeff", choices=("Z", "Q"), default="Z")
    common.add_argument("--format", dest="fmt", choices=("tsv", "json"), default="tsv")
    common.add_argument("--threads", type=int,
                        default=int(os.environ.get("OPERADIC_POSETS_THREADS", "1")))
    common.add_argument("--out")
    common.add_argument("--unsafe-large", action="store_true")
    common.add_argument("--explain", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("family", parents=[common])
    p.add_argument("action", choices=("list", "dump"))
    sub.add_parser("cohomology", parents=[common])
    sub.add_parser("mobius", parents=[common])
    p = sub.add_parser("zeta", parents=[common])
    p.add_argument("--t", type=int, required=True)
    p = sub.add_parser("compose", parents=[common])
    p.add_argument("--word", help="bracket word such as [1,[2,3]]")
    p.add_argument("--u", help="JSON class payload (or file) on A + {*}")
    p.add_argument("--v", help="JSON class payload (or file) on B")
    p.add_argument("--show-cochain", action="store_true")
    p = sub.add_parser("relation", parents=[common])
    p.add_argument("--preset", required=True)
    p = sub.add_parser("verify-species", parents=[common])
    p.add_argument("--n-max", type=int, default=4)
    p = sub.add_parser("verify-operad", parents=[common])
    p.add_argument("--budget", type=int, default=4)
    p = sub.add_parser("operad", parents=[common])
    p.add_argument("action", choices=("list", "count", "basic-check"))
    p.add_argument("--operad", default="as")
    p = sub.add_parser("series", parents=[common])
    p.add_argument("action", choices=("table", "egf"))
    p.add_argument("--id", choices=("tab2", "tab4"), default="tab2")
    p.add_argument("--name", default="as", help="registry key: %s" % ", ".join(REGISTRY))
    p.add_argument("--side", choices=("left", "right", "dual"), default="left")
    p.add_argument("--max-n", type=int, default=DEFAULT_N)
    p = sub.add_parser("checkers", parents=[common])
    p.add_argument("kind", choices=("semimodular", "atom-order"))
    p = sub.add_parser("reproduce", parents=[common])
    p.add_argument("--table", choices=("tab2", "tab3", "tab4"), required=True)
    p.add_argument("--max-n", type=int, default=5)
    return ap


COMMANDS = {
    "family": cmd_family, "cohomology": cmd_cohomology, "mobius": cmd_mobius,
    "zeta": cmd_zeta, "compose": cmd_compose, "relation": cmd_relation,
    "verify-species": cmd_verify_species, "verify-operad": cmd_verify_operad,
    "operad": cmd_operad, "series": cmd_series, "checkers": cmd_checkers,
    "reproduce": cmd_reproduce,
}


def run(argv=None, stdout=None):
    stdout = stdout or sys.stdout
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    cfg = RunConfig(args.command, args.family, args.n, args.variant, args.coeff,
                    args.fmt, max(1, args.threads), args.out, args.unsafe_large)
    needs_family = {"cohomology", "mobius", "zeta", "compose", "verify-species", "verify-operad"}
    lines = []
    try:
        if args.command in needs_family and not cfg.family:
            raise UsageError("--family is required; valid: %s" % FAMILY_HELP)
        if args.command == "family" and args.action == "dump" and not cfg.family:
            raise UsageError("--family is required; valid: %s" % FAMILY_HELP)
        code = COMMANDS[args.command](args, cfg, lines.append)
    except UsageError as e:
        print("error: %s" % e, file=sys.stderr)
        return 2
    text = "\n".join(lines) + ("\n" if lines else "")
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
