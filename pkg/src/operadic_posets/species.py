"""
Operadic poset species.

A species object knows, for any finite ground set S of labels, the elements
of P(S), the order (through upper covers or an exhaustive <= test), the
structure map a to partitions, and the maps

    phi(x, y)  for y <= x : element of P(a(x))    (ground set = blocks of a(x))
    psi(x, y)  for y >= x : tuple over blocks T of a(x), by increasing minimum,
                            of elements of P(T)

The verify_* functions check every axiom exhaustively on P({1..n}) and
return a Report with located witnesses.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import permutations

from . import partitions as pt
from .posets import Poset, PosetMap, from_relation, induced, _bits


class SpeciesError(ValueError):
    pass


@dataclass
class Report:
    name: str
    checks: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.failures

    def fail(self, what, **witness):
        if len(self.failures) < 20:
            self.failures.append(dict(check=what, **{k: _jsonable(v) for k, v in witness.items()}))

    def to_json(self):
        return json.dumps({"name": self.name, "ok": self.ok, "checks": self.checks,
                           "failures": self.failures})

    def merge(self, other):
        self.checks += other.checks
        self.failures.extend(other.failures)
        return self


def _jsonable(v):
    if isinstance(v, (int, str, float, bool)) or v is None:
        return v
    return pt.fmt_label(v) if isinstance(v, (frozenset, tuple)) else repr(v)


def canonical_set(n):
    return tuple(range(1, n + 1))


def multi_product(posets):
    """Product of several posets with flattened tuple labels."""
    labels = [()]
    for Q in posets:
        labels = [l + (q,) for l in labels for q in Q.labels]
    sizes = [len(Q) for Q in posets]
    strides = []
    s = 1
    for m in reversed(sizes):
        strides.append(s)
        s *= m
    strides.reverse()
    up = []
    for idx in range(len(labels)):
        rem = idx
        coords = []
        for st in strides:
            coords.append(rem // st)
            rem %= st
        cov = []
        for f, Q in enumerate(posets):
            for j in Q.up[coords[f]]:
                cov.append(idx + (j - coords[f]) * strides[f])
        up.append(cov)
    return Poset(labels, up, trusted=True)


class OperadicPosetSpecies:
    name = "species"
    graded_by_blocks = True   # every cover adds exactly one block

    def __init__(self):
        self._cache = {}

    # --- to implement
    def elements(self, S):
        raise NotImplementedError

    def a(self, x):
        raise NotImplementedError

    def phi(self, x, y):
        raise NotImplementedError

    def psi(self, x, y):
        raise NotImplementedError

    def relabel(self, x, f):
        raise NotImplementedError

    def leq(self, x, y):
        raise NotImplementedError

    def up_covers(self, x):
        """Upper covers of x; None means 'use the exhaustive order'."""
        return None

    def fmt(self, x):
        return pt.fmt_label(x) if isinstance(x, (frozenset, tuple)) else repr(x)

    # --- derived
    def ground(self, x):
        return pt.ground(self.a(x))

    def poset(self, S) -> Poset:
        key = frozenset(S)
        if key not in self._cache:
            self._cache[key] = self.build(key)
        return self._cache[key]

    def build(self, S, exhaustive=False):
        S = pt.sort_labels(S)
        if not S:
            raise SpeciesError("empty ground set")
        els = sorted(self.elements(S), key=lambda x: (len(self.a(x)), self.sort_key(x)))
        if not exhaustive:
            idx = {e: i for i, e in enumerate(els)}
            up = []
            for e in els:
                cov = self.up_covers(e)
                if cov is None:
                    break
                up.append([idx[c] for c in cov])
            else:
                return Poset(els, up, trusted=True)
        return from_relation(els, self.leq)

    def sort_key(self, x):
        return pt.label_key(x)

    def family_poset(self, n):
        return self.poset(canonical_set(n))

    # PosetMap versions of phi/psi, on the intervals of P(S)
    def phi_map(self, x) -> PosetMap:
        P = self.poset(self.ground(x))
        i = P.element(x)
        sub = induced(P, list(_bits(P.lt_bits(i) | (1 << i))))
        T = self.poset(self.a(x))
        return PosetMap(sub.poset, T, [T.element(self.phi(x, y)) for y in sub.poset.labels])

    def psi_map(self, x) -> PosetMap:
        P = self.poset(self.ground(x))
        i = P.element(x)
        sub = induced(P, list(_bits(P.gt_bits(i) | (1 << i))))
        T = multi_product([self.poset(B) for B in pt.blocks(self.a(x))])
        return PosetMap(sub.poset, T, [T.element(self.psi(x, y)) for y in sub.poset.labels])


# ---------------------------------------------------------------- partitions

class PartitionSpecies(OperadicPosetSpecies):
    name = "pi"

    def elements(self, S):
        return pt.set_partitions(S)

    def a(self, x):
        return x

    def phi(self, x, y):
        return pt.quotient(y, x)

    def psi(self, x, y):
        return pt.psi(x, y)

    def relabel(self, x, f):
        return pt.relabel_partition(x, f)

    def leq(self, x, y):
        return pt.leq(x, y)

    def up_covers(self, x):
        out = []
        for T in pt.blocks(x):
            if len(T) > 1:
                rest = x - {T}
                for A, B in pt.two_splits(T):
                    out.append(rest | {A, B})
        return out

    def fmt(self, x):
        return pt.fmt_partition(x)

    def sort_key(self, x):
        return tuple(pt.label_key(B) for B in pt.blocks(x))


PI = PartitionSpecies()


def partition_poset(n) -> Poset:
    return PI.family_poset(n)


def partition_phi(pi) -> PosetMap:
    return PI.phi_map(pi)


def partition_psi(pi) -> PosetMap:
    return PI.psi_map(pi)


# ---------------------------------------------------------------- verification

def _relabel_map(sigma):
    return lambda s: sigma[s]


def verify_base(P: OperadicPosetSpecies, n) -> Report:
    rep = Report("%s base n=%d" % (P.name, n))
    S = canonical_set(n)
    Pp = P.poset(S)
    one, ones = pt.one_block(S), pt.singletons(S)
    mins, maxs = set(Pp.minimal), set(Pp.maximal)
    for i, x in enumerate(Pp.labels):
        ax = P.a(x)
        rep.checks += 1
        if not pt.is_partition(ax, S):
            rep.fail("a(x) is not a partition of S", x=P.fmt(x))
            continue
        if (ax == one) != (i in mins):
            rep.fail("a^-1(min) != min", x=P.fmt(x))
        if (ax == ones) != (i in maxs):
            rep.fail("a^-1(max) != max", x=P.fmt(x))
        for j in Pp.up[i]:
            rep.checks += 1
            ay = P.a(Pp.labels[j])
            if not pt.leq(ax, ay) or ax == ay:
                rep.fail("a not strictly monotone", x=P.fmt(x), y=P.fmt(Pp.labels[j]))
        # phi square and monotonicity
        Tpi = P.poset(ax)
        below = list(_bits(Pp.lt_bits(i) | (1 << i)))
        img = {}
        for j in below:
            y = Pp.labels[j]
            rep.checks += 1
            try:
                z = P.phi(x, y)
            except Exception as e:  # broken structure maps are reported, not raised
                rep.fail("phi raised", x=P.fmt(x), y=P.fmt(y), error=str(e))
                continue
            if z not in Tpi.index:
                rep.fail("phi lands outside P(a(x))", x=P.fmt(x), y=P.fmt(y))
                continue
            img[j] = Tpi.index[z]
            if P.a(z) != pt.quotient(P.a(y), ax):
                rep.fail("phi square", x=P.fmt(x), y=P.fmt(y))
        for j in below:
            for k in Pp.up[j]:
                if k in img and j in img and not Tpi.leq(img[j], img[k]):
                    rep.fail("phi not monotone", x=P.fmt(x), y=P.fmt(Pp.labels[j]))
        # psi square and monotonicity
        bl = pt.blocks(ax)
        facs = [P.poset(B) for B in bl]
        above = list(_bits(Pp.gt_bits(i) | (1 << i)))
        pimg = {}
        for j in above:
            y = Pp.labels[j]
            rep.checks += 1
            try:
                z = P.psi(x, y)
            except Exception as e:
                rep.fail("psi raised", x=P.fmt(x), y=P.fmt(y), error=str(e))
                continue
            if len(z) != len(bl) or any(c not in F.index for c, F in zip(z, facs)):
                rep.fail("psi lands outside the product", x=P.fmt(x), y=P.fmt(y))
                continue
            pimg[j] = [F.index[c] for c, F in zip(z, facs)]
            if tuple(P.a(c) for c in z) != pt.psi(ax, P.a(y)):
                rep.fail("psi square", x=P.fmt(x), y=P.fmt(y))
        for j in above:
            for k in Pp.up[j]:
                if j in pimg and k in pimg:
                    if not all(F.leq(u, v) for F, u, v in zip(facs, pimg[j], pimg[k])):
                        rep.fail("psi not monotone", x=P.fmt(x), y=P.fmt(Pp.labels[j]))
    return rep


def verify_unitality(P: OperadicPosetSpecies) -> Report:
    rep = Report("%s unitality" % P.name)
    for s in (1, 7, "a", pt.STAR):
        rep.checks += 1
        if len(P.poset([s])) != 1:
            rep.fail("P({s}) is not a singleton", s=s)
    return rep


def verify_equivariance(P: OperadicPosetSpecies, n, transpositions_only=False) -> Report:
    rep = Report("%s equivariance n=%d" % (P.name, n))
    S = canonical_set(n)
    Pp = P.poset(S)
    if transpositions_only:
        sigmas = []
        for i in range(n - 1):
            p = list(S)
            p[i], p[i + 1] = p[i + 1], p[i]
            sigmas.append(dict(zip(S, p)))
    else:
        sigmas = [dict(zip(S, p)) for p in permutations(S)]
    for sigma in sigmas:
        f = _relabel_map(sigma)
        moved = {}
        for i, x in enumerate(Pp.labels):
            y = P.relabel(x, f)
            rep.checks += 1
            if y not in Pp.index:
                rep.fail("relabel leaves P(S)", x=P.fmt(x))
                break
            moved[i] = Pp.index[y]
            if P.a(y) != pt.relabel_partition(P.a(x), f):
                rep.fail("a not equivariant", x=P.fmt(x))
        else:
            g = [moved[i] for i in range(len(Pp))]
            for i in range(len(Pp)):
                if sorted(g[j] for j in Pp.up[i]) != sorted(Pp.up[g[i]]):
                    rep.fail("relabel is not an automorphism", x=P.fmt(Pp.labels[i]))
                    break
            for i, x in enumerate(Pp.labels):
                sx = Pp.labels[moved[i]]
                ax = P.a(x)
                blockmap = lambda T: frozenset(sigma[s] for s in T)
                for j in _bits(Pp.lt_bits(i) | (1 << i)):
                    y = Pp.labels[j]
                    rep.checks += 1
                    lhs = P.phi(sx, Pp.labels[moved[j]])
                    rhs = P.relabel(P.phi(x, y), blockmap)
                    if lhs != rhs:
                        rep.fail("phi not equivariant", x=P.fmt(x), y=P.fmt(y), sigma=str(sigma))
                for j in _bits(Pp.gt_bits(i) | (1 << i)):
                    y = Pp.labels[j]
                    rep.checks += 1
                    comps = dict(zip(pt.blocks(ax), P.psi(x, y)))
                    lhs = dict(zip(pt.blocks(P.a(sx)), P.psi(sx, Pp.labels[moved[j]])))
                    for T, c in comps.items():
                        if lhs.get(blockmap(T)) != P.relabel(c, f):
                            rep.fail("psi not equivariant", x=P.fmt(x), y=P.fmt(y), sigma=str(sigma))
    return rep


def verify_associativity(P: OperadicPosetSpecies, n) -> Report:
    rep = Report("%s associativity n=%d" % (P.name, n))
    S = canonical_set(n)
    Pp = P.poset(S)
    L = Pp.labels
    for i, x in enumerate(L):
        pi = P.a(x)
        bl = pt.blocks(pi)
        for i2 in _bits(Pp.gt_bits(i)):
            x2 = L[i2]
            pi2 = P.a(x2)
            xs = P.phi(x2, x)                       # the element underline{x} in P(pi2)
            to_q = {T: pt.restrict(pi2, T) for T in bl}   # T -> pi2|T
            rel = lambda T: to_q[T]
            # composition of phi's
            for j in _bits(Pp.lt_bits(i) | (1 << i)):
                y = L[j]
                rep.checks += 1
                if P.relabel(P.phi(x, y), rel) != P.phi(xs, P.phi(x2, y)):
                    rep.fail("phi o phi", x=P.fmt(x), x2=P.fmt(x2), y=P.fmt(y))
            # composition of psi's
            parts = dict(zip(bl, P.psi(x, x2)))          # x2|T in P(T)
            for j in _bits(Pp.gt_bits(i2) | (1 << i2)):
                y = L[j]
                rep.checks += 1
                direct = dict(zip(pt.blocks(pi2), P.psi(x2, y)))
                viax = dict(zip(bl, P.psi(x, y)))
                for T in bl:
                    inner = dict(zip(pt.blocks(P.a(parts[T])), P.psi(parts[T], viax[T])))
                    for U, c in inner.items():
                        if direct[U] != c:
                            rep.fail("psi o psi", x=P.fmt(x), x2=P.fmt(x2), y=P.fmt(y))
            # mixed square on [x, x2]; its diagonal is xi_{x,x2}
            for j in _bits(Pp.gt_bits(i) | (1 << i)):
                if not (j == i2 or Pp.less(j, i2)):
                    continue
                y = L[j]
                rep.checks += 1
                left = dict(zip(pt.blocks(P.a(xs)), P.psi(xs, P.phi(x2, y))))
                viax = dict(zip(bl, P.psi(x, y)))
                for T in bl:
                    right = P.phi(parts[T], viax[T])
                    if left.get(to_q[T]) != right:
                        rep.fail("mixed square", x=P.fmt(x), x2=P.fmt(x2), y=P.fmt(y))
    return rep


def verify_all(P: OperadicPosetSpecies, n_max=4, transpositions_only=False) -> Report:
    rep = Report("%s axioms n<=%d" % (P.name, n_max))
    rep.merge(verify_unitality(P))
    for n in range(1, n_max + 1):
        rep.merge(verify_base(P, n))
        rep.merge(verify_equivariance(P, n, transpositions_only=transpositions_only or n > 3))
        rep.merge(verify_associativity(P, n))
    return rep


# ---------------------------------------------------------------- fiber product

class FiberProduct(OperadicPosetSpecies):
    """Pairs (x1, x2) with a1(x1) = a2(x2); everything componentwise."""

    def __init__(self, P1, P2, name=None):
        super().__init__()
        self.P1, self.P2 = P1, P2
        self.name = name or "(%s x %s)" % (P1.name, P2.name)
        self.graded_by_blocks = P1.graded_by_blocks and P2.graded_by_blocks

    def elements(self, S):
        by = {}
        for x2 in self.P2.elements(S):
            by.setdefault(self.P2.a(x2), []).append(x2)
        return [(x1, x2) for x1 in self.P1.elements(S) for x2 in by.get(self.P1.a(x1), [])]

    def a(self, x):
        return self.P1.a(x[0])

    def phi(self, x, y):
        return (self.P1.phi(x[0], y[0]), self.P2.phi(x[1], y[1]))

    def psi(self, x, y):
        return tuple(zip(self.P1.psi(x[0], y[0]), self.P2.psi(x[1], y[1])))

    def relabel(self, x, f):
        return (self.P1.relabel(x[0], f), self.P2.relabel(x[1], f))

    def leq(self, x, y):
        return self._leq1(x[0], y[0]) and self._leq2(x[1], y[1])

    def _leq1(self, u, v):
        Q = self.P1.poset(self.P1.ground(u))
        return Q.leq(Q.index[u], Q.index[v])

    def _leq2(self, u, v):
        Q = self.P2.poset(self.P2.ground(u))
        return Q.leq(Q.index[u], Q.index[v])

    def up_covers(self, x):
        if not self.graded_by_blocks:
            return None
        c1 = self.P1.up_covers(x[0])
        c2 = self.P2.up_covers(x[1])
        if c1 is None or c2 is None:
            Q1 = self.P1.poset(self.P1.ground(x[0]))
            Q2 = self.P2.poset(self.P2.ground(x[1]))
            c1 = [Q1.labels[j] for j in Q1.up[Q1.index[x[0]]]]
            c2 = [Q2.labels[j] for j in Q2.up[Q2.index[x[1]]]]
        by = {}
        for y2 in c2:
            by.setdefault(self.P2.a(y2), []).append(y2)
        return [(y1, y2) for y1 in c1 for y2 in by.get(self.P1.a(y1), [])]

    def fmt(self, x):
        return "(%s ; %s)" % (self.P1.fmt(x[0]), self.P2.fmt(x[1]))

    def sort_key(self, x):
        return (self.P1.sort_key(x[0]), self.P2.sort_key(x[1]))


def fiber_product(P1, P2, name=None):
    return FiberProduct(P1, P2, name)


# ---------------------------------------------------------------- mutation (negative controls)

class Mutated(OperadicPosetSpecies):
    """Wraps a species and overrides phi and/or psi."""

    def __init__(self, base, phi=None, psi=None, name=None):
        super().__init__()
        self.base = base
        self._phi, self._psi = phi, psi
        self.name = name or "mutated:" + base.name
        self.graded_by_blocks = base.graded_by_blocks

    def elements(self, S):
        return self.base.elements(S)

    def a(self, x):
        return self.base.a(x)

    def phi(self, x, y):
        return self._phi(self.base, x, y) if self._phi else self.base.phi(x, y)

    def psi(self, x, y):
        return self._psi(self.base, x, y) if self._psi else self.base.psi(x, y)

    def relabel(self, x, f):
        return self.base.relabel(x, f)

    def leq(self, x, y):
        return self.base.leq(x, y)

    def up_covers(self, x):
        return self.base.up_covers(x)

    def fmt(self, x):
        return self.base.fmt(x)

    def sort_key(self, x):
        return self.base.sort_key(x)

    def poset(self, S):
        return self.base.poset(S)


# ---------------------------------------------------------------- morphisms

class SpeciesMorphism:
    """Elementwise map P(S) -> Q(S) given by fn(x) (ground set read off x)."""

    def __init__(self, source, target, fn, name="morphism"):
        self.source, self.target, self.fn, self.name = source, target, fn, name

    def __call__(self, x):
        return self.fn(x)

    def poset_map(self, S) -> PosetMap:
        P, Q = self.source.poset(S), self.target.poset(S)
        return PosetMap(P, Q, [Q.element(self.fn(x)) for x in P.labels])


def species_morphism(P, Q, fn, n_max=4, name="morphism"):
    """Validated morphism; raises SpeciesError with a witness when a diagram fails."""
    m = SpeciesMorphism(P, Q, fn, name)
    rep = check_morphism(m, n_max)
    if not rep.ok:
        raise SpeciesError(rep.to_json())
    return m


def check_morphism(m: SpeciesMorphism, n_max=4) -> Report:
    P, Q = m.source, m.target
    rep = Report("morphism %s" % m.name)
    for n in range(1, n_max + 1):
        S = canonical_set(n)
        Pp = P.poset(S)
        try:
            f = m.poset_map(S)
        except Exception as e:
            rep.fail("image outside target", n=n, error=str(e))
            continue
        rep.checks += 1
        if not f.is_order_preserving():
            rep.fail("not order preserving", n=n)
        L = Pp.labels
        for i, x in enumerate(L):
            fx = m.fn(x)
            rep.checks += 1
            if Q.a(fx) != P.a(x):
                rep.fail("a not preserved", x=P.fmt(x))
            for j in _bits(Pp.lt_bits(i) | (1 << i)):
                rep.checks += 1
                if m.fn(P.phi(x, L[j])) != Q.phi(fx, m.fn(L[j])):
                    rep.fail("phi square", x=P.fmt(x), y=P.fmt(L[j]))
            for j in _bits(Pp.gt_bits(i) | (1 << i)):
                rep.checks += 1
                if tuple(m.fn(c) for c in P.psi(x, L[j])) != Q.psi(fx, m.fn(L[j])):
                    rep.fail("psi square", x=P.fmt(x), y=P.fmt(L[j]))
        for sigma in permutations(S):
            s = dict(zip(S, sigma))
            for x in L:
                rep.checks += 1
                if m.fn(P.relabel(x, _relabel_map(s))) != Q.relabel(m.fn(x), _relabel_map(s)):
                    rep.fail("not equivariant", x=P.fmt(x))
    return rep


def terminal_morphism(P):
    """The structure map a, as a morphism to Pi."""
    return SpeciesMorphism(P, PI, P.a, name="a:%s->pi" % P.name)
