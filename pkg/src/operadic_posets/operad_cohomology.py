"""
Operad and module structures on the cohomology of operadic poset species.

Classes are stored as coordinates in the deterministic ClassBasis of
P(S) for the relevant variant:

    minmax  h      operad
    min     h-check  left module   (operad classes act on it from the left)
    max     h-hat    right module

All maps are computed on cocycle representatives at label level and then
reduced modulo coboundaries.  The composition attached to a partition pi of
S is

    sum over x in P(S) with a(x) = pi of  mu_x( phi_x^* u  (x)  psi_x^* K(v_T) )

where K is the flattened Kunneth product over the blocks of pi in order of
minimum (first block moves first).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations

from . import partitions as pt
from .cohomology import CohomologyError, get_complex, pullback_labels
from .linalg import rank_Q
from .partitions import STAR, blocks, label_key, restrict, sort_labels
from .posets import _bits
from .species import PI, OperadicPosetSpecies, Report, SpeciesMorphism, terminal_morphism

# (variant of u, variant of the v_T) -> variant of the result
COMPOSE_RULES = {
    ("minmax", "minmax"): "minmax",
    ("minmax", "min"): "min",
    ("max", "minmax"): "max",
}


class OperadCohomologyError(ValueError):
    pass


# ---------------------------------------------------------------- classes

@dataclass(eq=False)
class OperadClass:
    species: OperadicPosetSpecies
    ground: tuple
    degree: int
    variant: str
    coords: tuple = field(default_factory=tuple)

    def __post_init__(self):
        self.ground = sort_labels(self.ground)
        self.coords = tuple(Fraction(c) for c in self.coords)
        if len(self.coords) != self.basis.rank:
            raise OperadCohomologyError("coordinate length %d != rank %d"
                                        % (len(self.coords), self.basis.rank))

    @property
    def poset(self):
        return self.species.poset(self.ground)

    @property
    def complex(self):
        return get_complex(self.poset, self.variant)

    @property
    def basis(self):
        C = self.complex
        if self.degree < 0 or self.degree > C.top_degree:
            return _EmptyBasis()
        return C.class_basis(self.degree)

    def cochain(self):
        """Label-level representative {chain of labels: coeff}."""
        if not self.coords:
            return {}
        return self.basis.representative(list(self.coords)).by_labels()

    def _same_space(self, other):
        if (self.species is not other.species or self.ground != other.ground
                or self.degree != other.degree or self.variant != other.variant):
            raise OperadCohomologyError("classes live in different spaces")

    def __add__(self, other):
        self._same_space(other)
        return self._new([a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other):
        self._same_space(other)
        return self._new([a - b for a, b in zip(self.coords, other.coords)])

    def __neg__(self):
        return self.scale(-1)

    def scale(self, s):
        return self._new([s * a for a in self.coords])

    def _new(self, coords):
        return OperadClass(self.species, self.ground, self.degree, self.variant, coords)

    def is_zero(self):
        return not any(self.coords)

    def __eq__(self, other):
        return (isinstance(other, OperadClass) and self.species is other.species
                and self.ground == other.ground and self.degree == other.degree
                and self.variant == other.variant and self.coords == other.coords)

    def __repr__(self):
        return "OperadClass(%s, %s, deg=%d, %s, %s)" % (
            self.species.name, pt.fmt_label(self.ground), self.degree, self.variant,
            [str(c) for c in self.coords])

    def to_json(self):
        return json.dumps({"species": self.species.name,
                           "n": len(self.ground),
                           "ground": [pt.fmt_label(s) for s in self.ground],
                           "degree": self.degree, "variant": self.variant,
                           "coords": [str(c) for c in self.coords]})


class _EmptyBasis:
    rank = 0
    representatives = []


def class_from_cochain(P, ground, variant, degree, values) -> OperadClass:
    """Class of a label-level cocycle {chain: coeff} on P(ground)."""
    ground = sort_labels(ground)
    C = get_complex(P.poset(ground), variant)
    if degree > C.top_degree:
        if any(values.values()):
            raise OperadCohomologyError("degree above the complex")
        return OperadClass(P, ground, degree, variant, ())
    vec = C.vector(degree, values)
    B = C.class_basis(degree)
    try:
        coords = B.coordinates(vec)
    except CohomologyError:
        raise OperadCohomologyError("cochain is not a cocycle")
    return OperadClass(P, ground, degree, variant, coords)


def basis_classes(P, ground, variant, degree):
    ground = sort_labels(ground)
    C = get_complex(P.poset(ground), variant)
    if degree > C.top_degree:
        return []
    r = C.class_basis(degree).rank
    return [OperadClass(P, ground, degree, variant, [int(i == j) for j in range(r)])
            for i in range(r)]


def all_basis_classes(P, ground, variant):
    C = get_complex(P.poset(sort_labels(ground)), variant)
    out = []
    for k in range(C.top_degree + 1):
        out.extend(basis_classes(P, ground, variant, k))
    return out


def unit_class(P, s, variant="minmax"):
    Pp = P.poset([s])
    if len(Pp) != 1:
        raise OperadCohomologyError("P({s}) is not a point")
    return class_from_cochain(P, (s,), variant, 0, {(Pp.labels[0],): 1})


def relabel_class(c: OperadClass, f) -> OperadClass:
    """Push a class along a bijection f of ground labels (f: callable or dict)."""
    if isinstance(f, dict):
        fd = f
        f = lambda s: fd.get(s, s)
    P = c.species
    vals = {}
    for ch, x in c.cochain().items():
        key = tuple(P.relabel(e, f) for e in ch)
        vals[key] = vals.get(key, 0) + x
    return class_from_cochain(P, tuple(f(s) for s in c.ground), c.variant, c.degree, vals)


# ---------------------------------------------------------------- chains through x

def _lower_chains(Pp, i, p):
    """Chains (c_0 < ... < c_p = i) as index tuples."""
    Pp._closure()
    lt = Pp._lt
    out = []

    def rec(ch, left):
        if left == 0:
            out.append(tuple(reversed(ch)))
            return
        for j in _bits(lt[ch[-1]]):
            ch.append(j)
            rec(ch, left - 1)
            ch.pop()

    rec([i], p)
    return out


def _upper_chains(Pp, i, q):
    Pp._closure()
    gt = Pp._gt
    out = []

    def rec(ch, left):
        if left == 0:
            out.append(tuple(ch))
            return
        for j in _bits(gt[ch[-1]]):
            ch.append(j)
            rec(ch, left - 1)
            ch.pop()

    rec([i], q)
    return out


def _kunneth_coeff(img, block_vals):
    """Coefficient of the flattened Kunneth product on a chain of tuples.

    The chain must move one coordinate at a time with non-decreasing
    coordinate index; the coefficient is the product of the per-block values.
    """
    m = len(block_vals)
    per = [[img[0][t]] for t in range(m)]
    last = 0
    for a, b in zip(img, img[1:]):
        moved = [t for t in range(m) if a[t] != b[t]]
        if len(moved) != 1 or moved[0] < last:
            return 0
        last = moved[0]
        per[last].append(b[last])
    x = 1
    for t in range(m):
        v = block_vals[t].get(tuple(per[t]))
        if not v:
            return 0
        x *= v
    return x


def _compose_core(P, S, pi, low_vals, low_deg, high_coeff, high_deg, variant):
    """sum_x mu_x(phi_x^* low (x) psi_x^* high), label-level result."""
    Pp = P.poset(S)
    L = Pp.labels
    out = {}
    for i, x in enumerate(L):
        if P.a(x) != pi:
            continue
        lows = []
        for c in _lower_chains(Pp, i, low_deg):
            img = tuple(P.phi(x, L[j]) for j in c)
            v = low_vals.get(img)
            if v:
                lows.append((c, v))
        if not lows:
            continue
        highs = []
        for c in _upper_chains(Pp, i, high_deg):
            v = high_coeff(tuple(P.psi(x, L[j]) for j in c))
            if v:
                highs.append((c, v))
        for a, s in lows:
            for b, t in highs:
                key = tuple(L[j] for j in a + b[1:])
                out[key] = out.get(key, 0) + s * t
    return class_from_cochain(P, S, variant, low_deg + high_deg,
                              {k: v for k, v in out.items() if v})


def _check_species(*cs):
    P = cs[0].species
    for c in cs:
        if c.species is not P:
            raise OperadCohomologyError("classes from different species")
    return P


# ---------------------------------------------------------------- compositions

def compose_general(pi, u: OperadClass, vs) -> OperadClass:
    """rho_pi(u (x) (v_T)); vs is a dict block -> class or a sequence in block order.

    The variant pair (u, v_T) decides operad composition, left action or
    right action (see COMPOSE_RULES)."""
    bl = blocks(pi)
    if not isinstance(vs, dict):
        vs = dict(zip(bl, vs))
    if set(vs) != set(pi):
        raise OperadCohomologyError("block mismatch")
    P = _check_species(u, *vs.values())
    if frozenset(u.ground) != frozenset(pi):
        raise OperadCohomologyError("u must live on the block set of pi")
    vvars = {v.variant for v in vs.values()}
    if len(vvars) != 1:
        raise OperadCohomologyError("mixed variants among the v_T")
    key = (u.variant, vvars.pop())
    if key not in COMPOSE_RULES:
        raise OperadCohomologyError("variant mismatch: %s acting on %s" % key)
    for T in bl:
        if frozenset(vs[T].ground) != T:
            raise OperadCohomologyError("block mismatch for %s" % pt.fmt_label(T))
    S = sort_labels(pt.ground(pi))
    block_vals = [vs[T].cochain() for T in bl]
    hdeg = sum(vs[T].degree for T in bl)
    return _compose_core(P, S, pi, u.cochain(), u.degree,
                         lambda img: _kunneth_coeff(img, block_vals), hdeg,
                         COMPOSE_RULES[key])


def compose_full(P, pi, u, vs):
    c = compose_general(pi, u, vs)
    if c.variant != "minmax":
        raise OperadCohomologyError("operad composition needs minmax classes")
    return c


def module_left(P, pi, u, vs):
    if u.variant != "minmax" or any(v.variant != "min" for v in _vals(vs)):
        raise OperadCohomologyError("left action: minmax class on min classes")
    return compose_general(pi, u, vs)


def module_right(P, pi, u, vs):
    if u.variant != "max" or any(v.variant != "minmax" for v in _vals(vs)):
        raise OperadCohomologyError("right action: max class on minmax classes")
    return compose_general(pi, u, vs)


def _vals(vs):
    return vs.values() if isinstance(vs, dict) else vs


def compose_partial(u: OperadClass, v: OperadClass, star=STAR) -> OperadClass:
    """u o_star v without the Kunneth product: only the block B = ground(v) is non-trivial."""
    P = _check_species(u, v)
    if u.variant != "minmax" or v.variant != "minmax":
        raise OperadCohomologyError("partial composition needs minmax classes")
    if star not in u.ground:
        raise OperadCohomologyError("star label not in u")
    A = [s for s in u.ground if s != star]
    B = frozenset(v.ground)
    if B & set(A):
        raise OperadCohomologyError("ground sets overlap")
    pi = frozenset([B] + [frozenset([a]) for a in A])
    to_block = lambda s: B if s == star else frozenset([s])
    low = {}
    for ch, x in u.cochain().items():
        low[tuple(P.relabel(e, to_block) for e in ch)] = x
    pos = blocks(pi).index(B)
    vv = v.cochain()

    def high(img):
        return vv.get(tuple(t[pos] for t in img), 0)

    S = sort_labels(A + list(B))
    return _compose_core(P, S, pi, low, u.degree, high, v.degree, "minmax")


def compose_partial_via_full(u, v, star=STAR):
    """The same composition through compose_general with unit insertions."""
    P = _check_species(u, v)
    A = [s for s in u.ground if s != star]
    B = frozenset(v.ground)
    pi = frozenset([B] + [frozenset([a]) for a in A])
    to_block = lambda s: B if s == star else frozenset([s])
    u2 = relabel_class(u, to_block)
    vs = {B: v}
    for a in A:
        vs[frozenset([a])] = unit_class(P, a)
    return compose_general(pi, u2, vs)


# ---------------------------------------------------------------- morphisms

def pullback_operad_morphism(m: SpeciesMorphism, c: OperadClass) -> OperadClass:
    if c.species is not m.target:
        raise OperadCohomologyError("class does not live on the morphism's target")
    Src = m.source.poset(c.ground)
    vals = pullback_labels(Src, c.variant, c.degree, m.fn, c.cochain())
    return class_from_cochain(m.source, c.ground, c.variant, c.degree, vals)


def identity_morphism(P):
    return SpeciesMorphism(P, P, lambda x: x, name="id:" + P.name)


# ---------------------------------------------------------------- brackets

def bracket_generator(P, s1, s2):
    """[s1 s2 < s1|s2] in h^1(Pi({s1, s2}))."""
    if P is not PI:
        raise OperadCohomologyError("the bracket generator lives on pi")
    top = frozenset([frozenset([s1, s2])])
    bot = pt.singletons([s1, s2])
    return class_from_cochain(PI, (s1, s2), "minmax", 1, {(top, bot): 1})


def _word_labels(w):
    if isinstance(w, (list, tuple)):
        if len(w) != 2:
            raise OperadCohomologyError("malformed bracket word %r" % (w,))
        return _word_labels(w[0]) + _word_labels(w[1])
    return [w]


def _pi_word_class(w):
    if not isinstance(w, (list, tuple)):
        return unit_class(PI, w)
    l, r = w
    sl, sr = pt.star("*l"), pt.star("*r")
    g = bracket_generator(PI, sl, sr)
    c = compose_partial(g, _pi_word_class(l), star=sl)
    return compose_partial(c, _pi_word_class(r), star=sr)


def lie_class(P, word) -> OperadClass:
    """Class of a bracket word in h(Pi), pulled back along a: P -> Pi."""
    labels = _word_labels(word)
    if len(set(labels)) != len(labels):
        raise OperadCohomologyError("labels of a bracket word must be distinct")
    c = _pi_word_class(word)
    if P is PI:
        return c
    return pullback_operad_morphism(terminal_morphism(P), c)


def parse_word(text):
    """'[1,[2,3]]' -> [1, [2, 3]] (integer labels)."""
    w = json.loads(text)

    def check(x):
        if isinstance(x, list):
            if len(x) != 2:
                raise OperadCohomologyError("malformed bracket word %r" % text)
            for y in x:
                check(y)
        elif not isinstance(x, int) or isinstance(x, bool):
            raise OperadCohomologyError("malformed bracket word %r" % text)
    check(w)
    return w


def comb_words(labels):
    """Right combs [s1,[s2,[...,[s_{n-1}, s_n]]]] over all orders."""
    out = []
    for p in permutations(labels):
        w = p[-1]
        for s in reversed(p[:-1]):
            w = [s, w]
        out.append(w)
    return out


def bracket_span_rank(P, n):
    """Rank of the span of lie_class over all comb words of {1..n}."""
    if n == 1:
        return 1
    vecs = [lie_class(P, w).coords for w in comb_words(range(1, n + 1))]
    cols = [{i: c for i, c in enumerate(v) if c} for v in vecs]
    return rank_Q(cols)


# ---------------------------------------------------------------- relations

def check_relation_zero(terms) -> bool:
    """terms: list of (coeff, OperadClass) or OperadClass values."""
    terms = [t if isinstance(t, tuple) else (1, t) for t in terms]
    if not terms:
        return True
    acc = terms[0][1].scale(terms[0][0])
    for s, c in terms[1:]:
        acc = acc + c.scale(s)
    return acc.is_zero()


def prec_class(x, y):
    """x < y in h^1(Pi_2({x, y})): [one block < x at position 1, y at position 2]."""
    from .catalog import NC2
    one = ((frozenset([x, y]), frozenset([1, 2])),)
    top = tuple(sorted([(frozenset([x]), frozenset([1])), (frozenset([y]), frozenset([2]))],
                       key=lambda p: label_key(pt.min_label(p[0]))))
    return class_from_cochain(NC2, (x, y), "minmax", 1, {(one, top): 1})


def _prec(l, r):
    """Binary prec on words: leaves are labels, nodes are (left, right)."""
    if not isinstance(l, tuple) and not isinstance(r, tuple):
        return prec_class(l, r)
    if isinstance(l, tuple):      # (x<y)<z = (*<z) o_* (x<y)
        return compose_partial(prec_class(STAR, r) if not isinstance(r, tuple) else _prec(STAR, r),
                               _prec(*l))
    return compose_partial(prec_class(l, STAR), _prec(*r))   # x<(y<z) = (x<*) o_* (y<z)


def prelie_terms():
    return [(1, _prec((1, 2), 3)), (1, _prec(1, (2, 3))),
            (1, _prec((1, 3), 2)), (1, _prec(1, (3, 2)))]


def jacobi_terms():
    return [(1, lie_class(PI, [1, [2, 3]])), (1, lie_class(PI, [2, [3, 1]])),
            (1, lie_class(PI, [3, [1, 2]]))]


def metabelian_terms():
    from .catalog import NS
    return [(1, lie_class(NS, [[1, 2], [3, 4]]))]


RELATIONS = {
    "jacobi": (jacobi_terms, 3,
               "[1,[2,3]] + [2,[3,1]] + [3,[1,2]] vanishes in h^2(Pi(3)): the sum is the "
               "coboundary of the length-1 chain of Pi(3)."),
    "prelie": (prelie_terms, 3,
               "(1<2)<3 + 1<(2<3) + (1<3)<2 + 1<(3<2) vanishes in h^2(Pi_2(3)), with 1<2 the "
               "degree-1 class from the one-arc element to the arc-free element with 1 first."),
    "metabelian": (metabelian_terms, 4,
                   "[[1,2],[3,4]] pulled back to NS(4) is zero because 12|34 is not in NS(4)."),
}


# ---------------------------------------------------------------- trees

def tree_class(P, edges, root=None):
    """Class of a labeled tree with ordered edges (e_1, ..., e_{n-1}) in MLT / MLRT:
    the chain t/(e_1..e_{n-1}) < t/(e_2..e_{n-1}) < ... < t."""
    labels = sort_labels({v for e in edges for v in e} | ({root} if root is not None else set()))
    chain = []
    for k in range(len(edges) + 1):
        chain.append(_contract(labels, edges, edges[k:], root))
    return class_from_cochain(P, labels, "minmax", len(edges), {tuple(chain): 1})


def _contract(labels, edges, contracted, root):
    parent = {s: s for s in labels}

    def find(s):
        while parent[s] != s:
            parent[s] = parent[parent[s]]
            s = parent[s]
        return s

    for a, b in contracted:
        parent[find(a)] = find(b)
    comp = {}
    for s in labels:
        comp.setdefault(find(s), set()).add(s)
    node = {s: frozenset(comp[find(s)]) for s in labels}
    pi = frozenset(node.values())
    E = frozenset(frozenset([node[a], node[b]]) for a, b in edges if node[a] != node[b])
    if root is None:
        return (pi, E)
    return (pi, E, node[root])


def arity2_generated_rank(P, n=3):
    """Rank of the subspace of h^{n-1}(P({1..n})) spanned by iterated partial
    compositions of arity-2 classes (all label placements), n = 3."""
    if n != 3:
        raise OperadCohomologyError("only arity 3 is implemented")
    vecs = []
    for a, b, c in permutations((1, 2, 3)):
        for u in basis_classes(P, (a, STAR), "minmax", 1):
            for v in basis_classes(P, (b, c), "minmax", 1):
                vecs.append(compose_partial(u, v).coords)
    cols = [{i: x for i, x in enumerate(v) if x} for v in vecs]
    return rank_Q(cols)


# ---------------------------------------------------------------- axiom verification

def _koszul_sign(degrees, order):
    """Sign of reordering graded items listed in `order` (a permutation of
    range(len(degrees))) back to increasing order."""
    s = 0
    for i in range(len(order)):
        for j in range(i + 1, len(order)):
            if order[i] > order[j]:
                s += degrees[order[i]] * degrees[order[j]]
    return -1 if s % 2 else 1


def _first(classes, k):
    return classes[:k]


def verify_operad_axioms(P, budget=4, per_slot=2, modules=True) -> Report:
    """Unitality, sequential and parallel associativity, equivariance of the
    partial composition, code-path equality with the full composition and
    associativity of the full composition and module actions."""
    rep = Report("%s operad n<=%d" % (P.name, budget))
    s1, s2 = pt.star("*1"), pt.star("*2")

    def guard(what, fn, **w):
        rep.checks += 1
        try:
            ok = fn()
        except Exception as e:     # a broken species shows up as a failure, not a crash
            rep.fail(what + " raised", error=str(e), **w)
            return
        if not ok:
            rep.fail(what, **w)

    # unitality
    for n in range(1, min(budget, 3) + 1):
        S = tuple(range(1, n + 1))
        for c in _first(all_basis_classes(P, S, "minmax"), per_slot):
            guard("left unit", lambda: compose_partial(unit_class(P, STAR), c) == c, n=n)
            for i in S:
                ci = relabel_class(c, {i: STAR})
                guard("right unit", lambda: compose_partial(ci, unit_class(P, i)) == c, n=n, i=i)

    def cls(ground):
        return _first(all_basis_classes(P, ground, "minmax"), per_slot)

    if budget >= 3:
        # sequential: (u o_s1 v) o_s2 w = u o_s1 (v o_s2 w), and parallel with the Koszul sign
        for A, B, C in _three_blocks(budget):
            for u in cls(A + (s1,)):
                for v in cls(B + (s2,)):
                    for w in cls(C):
                        lhs = lambda: compose_partial(compose_partial(u, v, s1), w, s2)
                        rhs = lambda: compose_partial(u, compose_partial(v, w, s2), s1)
                        guard("sequential associativity", lambda: lhs() == rhs(),
                              A=A, B=B, C=C)
        for B, C in _two_blocks(budget):
            for u in cls((s1, s2)):
                for v in cls(B):
                    for w in cls(C):
                        sign = (-1) ** (v.degree * w.degree)
                        l = lambda: compose_partial(compose_partial(u, v, s1), w, s2)
                        r = lambda: compose_partial(compose_partial(u, w, s2), v, s1).scale(sign)
                        guard("parallel associativity", lambda: l() == r(), B=B, C=C)

    # equivariance of the partial composition (no sign: one non-trivial block)
    for na in range(1, budget):
        for nb in range(1, budget - na + 1):
            A = tuple(range(1, na))
            B = tuple(range(na, na + nb))
            if na + nb - 1 > budget or not B:
                continue
            for u in cls(A + (STAR,)):
                for v in cls(B):
                    uv = compose_partial(u, v)
                    for perm in _perms_sample(A + B):
                        f = dict(zip(A + B, perm))
                        fu = dict(f)
                        fu[STAR] = STAR
                        guard("equivariance", lambda: relabel_class(uv, f) ==
                              compose_partial(relabel_class(u, fu), relabel_class(v, f)),
                              A=A, B=B, sigma=str(perm))

    # code-path equality
    for na in range(1, budget):
        for nb in range(1, budget - na + 2):
            A = tuple(range(1, na))
            B = tuple(range(na, na + nb))
            if len(A) + len(B) > budget or not B:
                continue
            for u in cls(A + (STAR,)):
                for v in cls(B):
                    guard("partial = full with units",
                          lambda: compose_partial(u, v) == compose_partial_via_full(u, v),
                          A=A, B=B)

    # associativity of full compositions and module actions
    kinds = [("minmax", "minmax", "minmax")]
    if modules:
        kinds += [("minmax", "minmax", "min"), ("max", "minmax", "minmax")]
    for n in range(2, budget + 1):
        S = tuple(range(1, n + 1))
        parts = pt.set_partitions(S)
        for pi in parts:
            for pi2 in parts:
                if not pt.leq(pi, pi2):
                    continue
                for kind in kinds:
                    _check_full_assoc(P, pi, pi2, kind, per_slot, guard)
    return rep


def _three_blocks(n):
    """Ordered triples (A, B, C) of label tuples: u on A+{s1}, v on B+{s2}, w on C,
    all of arity >= 2, total arity n."""
    out = []
    S = tuple(range(1, n + 1))
    for a in range(1, n):
        for b in range(1, n - a):
            c = n - a - b
            if c < 2:
                continue
            # one placement per size pattern plus a shuffled one
            out.append((S[:a], S[a:a + b], S[a + b:]))
            out.append((S[-a:], S[:b], S[b:b + c]))
    return out


def _two_blocks(n):
    """Pairs (B, C) of disjoint label tuples of sizes >= 2 inside {1..n}, B holding 1."""
    out = []
    S = tuple(range(1, n + 1))
    for pi in pt.set_partitions(S):
        if len(pi) == 2 and all(len(T) >= 2 for T in pi):
            B, C = blocks(pi)
            out.append((sort_labels(B), sort_labels(C)))
    return out


def _perms_sample(S):
    ps = list(permutations(S))
    if len(ps) <= 6:
        return ps
    return ps[:: max(1, len(ps) // 6)]


def _check_full_assoc(P, pi, pi2, kind, per_slot, guard):
    vu, vv, vw = kind
    bl = blocks(pi)
    bl2 = blocks(pi2)
    q = pt.quotient(pi, pi2)
    to_q = {T: restrict(pi2, T) for T in bl}
    us = _first(all_basis_classes(P, bl, vu), per_slot)
    vs_opts = [_first(all_basis_classes(P, blocks(to_q[T]), vv), 1) for T in bl]
    ws_opts = [_first(all_basis_classes(P, U, vw), 1) for U in bl2]
    if not us or any(not o for o in vs_opts) or any(not o for o in ws_opts):
        return
    for u in us:
        vs = dict(zip(bl, [o[0] for o in vs_opts]))
        ws = dict(zip(bl2, [o[0] for o in ws_opts]))

        def lhs():
            inner = {T: compose_general(to_q[T], vs[T], {U: ws[U] for U in to_q[T]})
                     for T in bl}
            return compose_general(pi, u, inner)

        def rhs():
            u2 = relabel_class(u, lambda T: to_q[T])
            mid = compose_general(q, u2, {to_q[T]: vs[T] for T in bl})
            return compose_general(pi2, mid, ws)

        # graded items: u, v_T (T in order), w_U (U in order)
        degrees = [u.degree] + [vs[T].degree for T in bl] + [ws[U].degree for U in bl2]
        widx = {U: 1 + len(bl) + k for k, U in enumerate(bl2)}
        order = [0]
        for t, T in enumerate(bl):
            order.append(1 + t)
            order.extend(widx[U] for U in blocks(to_q[T]))
        sign = _koszul_sign(degrees, order)
        guard("full associativity %s/%s/%s" % kind,
              lambda: lhs() == rhs().scale(sign),
              pi=pt.fmt_partition(pi), pi2=pt.fmt_partition(pi2))
