"""
Finite posets stored by their covering relation.

Elements carry opaque (hashable) labels; everything internal works on dense
indices 0..m-1 in builder insertion order.  Reachability is cached lazily as
python-int bitsets, which is fine up to a few thousand elements.  The Mobius
dynamic programs only walk the covers and never build the bitsets, so they
scale to the ~50k element posets of the decorated families at n = 7.
"""

from __future__ import annotations

import json
import warnings
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Hashable, Iterable, Sequence

VARIANTS = ("full", "minmax", "min", "max")


class PosetError(ValueError):
    pass


def _bits(b):
    """Indices of the set bits of b, increasing."""
    while b:
        low = b & -b
        yield low.bit_length() - 1
        b ^= low


class Poset:
    """Immutable finite poset.

    up[i] / down[i] are sorted tuples of upper / lower covers of element i.
    """

    def __init__(self, labels, up, trusted=False):
        # use from_covers() unless the cover lists are known to be irredundant
        self.labels = list(labels)
        self.index = {lab: i for i, lab in enumerate(self.labels)}
        self.up = [tuple(sorted(u)) for u in up]
        down = [[] for _ in self.labels]
        for i, u in enumerate(self.up):
            for j in u:
                down[j].append(i)
        self.down = [tuple(sorted(d)) for d in down]
        self.minimal = tuple(i for i in range(len(self.labels)) if not self.down[i])
        self.maximal = tuple(i for i in range(len(self.labels)) if not self.up[i])
        self.reduced_pairs = 0
        self._topo = None
        self._gt = None
        self._lt = None
        self._height_up = None
        self._height_down = None

    def __len__(self):
        return len(self.labels)

    def __repr__(self):
        return "Poset(%d elements, %d covers)" % (len(self), self.n_covers())

    def n_covers(self):
        return sum(len(u) for u in self.up)

    def covers(self):
        return [(i, j) for i in range(len(self)) for j in self.up[i]]

    # ------------------------------------------------------------ order data

    def topo_order(self):
        if self._topo is None:
            indeg = [len(d) for d in self.down]
            stack = [i for i in range(len(self)) if indeg[i] == 0]
            stack.reverse()
            order = []
            while stack:
                i = stack.pop()
                order.append(i)
                for j in reversed(self.up[i]):
                    indeg[j] -= 1
                    if indeg[j] == 0:
                        stack.append(j)
            if len(order) != len(self):
                raise PosetError("cycle detected")
            self._topo = order
        return self._topo

    def _closure(self):
        if self._gt is not None:
            return
        order = self.topo_order()
        gt = [0] * len(self)
        for i in reversed(order):
            b = 0
            for j in self.up[i]:
                b |= (1 << j) | gt[j]
            gt[i] = b
        lt = [0] * len(self)
        for i in order:
            b = 0
            for j in self.down[i]:
                b |= (1 << j) | lt[j]
            lt[i] = b
        self._gt, self._lt = gt, lt

    def gt_bits(self, i):
        """Bitset of elements strictly above i."""
        self._closure()
        return self._gt[i]

    def lt_bits(self, i):
        self._closure()
        return self._lt[i]

    def less(self, i, j):
        return bool(self.gt_bits(i) >> j & 1)

    def leq(self, i, j):
        return i == j or self.less(i, j)

    def above(self, i):
        return list(_bits(self.gt_bits(i)))

    def below(self, i):
        return list(_bits(self.lt_bits(i)))

    def is_bounded(self):
        return len(self.minimal) == 1 and len(self.maximal) == 1

    def bottom(self):
        if len(self.minimal) != 1:
            raise PosetError("no least element")
        return self.minimal[0]

    def top(self):
        if len(self.maximal) != 1:
            raise PosetError("no greatest element")
        return self.maximal[0]

    def heights(self):
        """(longest chain from a minimal element, longest chain to a maximal element)."""
        if self._height_up is None:
            order = self.topo_order()
            hd = [0] * len(self)
            for i in order:
                for j in self.up[i]:
                    hd[j] = max(hd[j], hd[i] + 1)
            hu = [0] * len(self)
            for i in reversed(order):
                for j in self.up[i]:
                    hu[i] = max(hu[i], hu[j] + 1)
            self._height_down, self._height_up = hd, hu
        return self._height_down, self._height_up

    def length(self):
        return max(self.heights()[0]) if len(self) else 0

    def element(self, label):
        try:
            return self.index[label]
        except KeyError:
            raise PosetError("not an element: %r" % (label,))

    # ------------------------------------------------------------ io

    def to_json(self, fmt=str):
        return json.dumps({"labels": [fmt(l) for l in self.labels],
                           "covers": [list(c) for c in self.covers()]})

    @classmethod
    def from_json(cls, text):
        data = json.loads(text)
        return from_covers(data["labels"], [tuple(c) for c in data["covers"]])

    def relabel(self, f):
        """Same poset with labels mapped through f (a bijection)."""
        P = Poset([f(l) for l in self.labels], self.up, trusted=True)
        if len(P.index) != len(P.labels):
            raise PosetError("relabeling is not injective")
        return P


def from_covers(labels: Sequence[Hashable], cover_pairs: Iterable, trusted=False) -> Poset:
    """Validated poset from labels and (i, j) pairs meaning i < j.

    Pairs implied by transitivity are dropped; the count is kept in
    ``reduced_pairs`` and a warning is emitted.
    """
    labels = list(labels)
    if not labels:
        raise PosetError("empty poset")
    if len(set(labels)) != len(labels):
        raise PosetError("duplicate label")
    m = len(labels)
    up = [set() for _ in range(m)]
    for i, j in cover_pairs:
        if not (0 <= i < m and 0 <= j < m):
            raise PosetError("cover pair out of range: %r" % ((i, j),))
        if i == j:
            raise PosetError("cycle detected")
        up[i].add(j)
    P = Poset(labels, up, trusted=True)
    P.topo_order()  # raises on cycles
    if trusted:
        return P
    # transitive reduction
    P._closure()
    removed = 0
    new_up = []
    for i in range(m):
        keep = []
        for j in P.up[i]:
            if any(P._gt[k] >> j & 1 for k in P.up[i] if k != j):
                removed += 1
            else:
                keep.append(j)
        new_up.append(keep)
    if removed:
        warnings.warn("%d redundant cover pairs reduced" % removed)
        Q = Poset(labels, new_up, trusted=True)
        Q.reduced_pairs = removed
        return Q
    return P


def from_relation(labels, leq) -> Poset:
    """Poset from an order predicate leq(a, b) on labels (exhaustive, small inputs)."""
    labels = list(labels)
    m = len(labels)
    pairs = [(i, j) for i in range(m) for j in range(m) if i != j and leq(labels[i], labels[j])]
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return from_covers(labels, pairs)


def chain_poset(k, prefix="c"):
    """Chain with k elements."""
    return from_covers(["%s%d" % (prefix, i) for i in range(k)], [(i, i + 1) for i in range(k - 1)])


def antichain(k):
    return from_covers(["a%d" % i for i in range(k)], [])


def boolean_lattice(k):
    labels = [frozenset(s) for r in range(k + 1) for s in combinations(range(k), r)]
    idx = {s: i for i, s in enumerate(labels)}
    pairs = [(idx[s], idx[s | {e}]) for s in labels for e in range(k) if e not in s]
    return from_covers(labels, pairs, trusted=True)


# ---------------------------------------------------------------- constructions

@dataclass
class SubPoset:
    poset: Poset
    to_parent: list  # index in subposet -> index in parent


def interval(P: Poset, lower=None, upper=None) -> SubPoset:
    """Induced subposet on {y : lower <= y <= upper}; bounds are labels or None."""
    lo = None if lower is None else P.element(lower)
    hi = None if upper is None else P.element(upper)
    if lo is not None and hi is not None and not P.leq(lo, hi):
        raise PosetError("lower bound is not below upper bound")
    full = (1 << len(P)) - 1
    mask = full
    if lo is not None:
        mask &= P.gt_bits(lo) | (1 << lo)
    if hi is not None:
        mask &= P.lt_bits(hi) | (1 << hi)
    return induced(P, list(_bits(mask)))


def induced(P: Poset, members) -> SubPoset:
    members = sorted(members)
    pos = {g: k for k, g in enumerate(members)}
    mask = 0
    for g in members:
        mask |= 1 << g
    up = []
    for g in members:
        # covers in the induced order: minimal elements of (strict upset & mask)
        cand = P.gt_bits(g) & mask
        cov = []
        for h in _bits(cand):
            if not (P.lt_bits(h) & cand):
                cov.append(pos[h])
        up.append(cov)
    return SubPoset(Poset([P.labels[g] for g in members], up, trusted=True), members)


def direct_product(P: Poset, Q: Poset) -> Poset:
    labels = [(a, b) for a in P.labels for b in Q.labels]
    nq = len(Q)
    up = []
    for i in range(len(P)):
        for j in range(nq):
            up.append([i2 * nq + j for i2 in P.up[i]] + [i * nq + j2 for j2 in Q.up[j]])
    return Poset(labels, up, trusted=True)


def dual(P: Poset) -> Poset:
    return Poset(P.labels, P.down, trusted=True)


TOP = "<top>"
BOTTOM = "<bottom>"


def adjoin_top(P: Poset, label=TOP) -> Poset:
    up = [list(u) for u in P.up] + [[]]
    t = len(P)
    for i in P.maximal:
        up[i].append(t)
    return Poset(P.labels + [label], up, trusted=True)


def adjoin_bottom(P: Poset, label=BOTTOM) -> Poset:
    # new element goes first so that index order stays a linear extension
    up = [[i + 1 for i in P.minimal]] + [[j + 1 for j in u] for u in P.up]
    return Poset([label] + P.labels, up, trusted=True)


# ---------------------------------------------------------------- maps

class PosetMap:
    """Map of posets given by an assignment on source indices."""

    def __init__(self, source: Poset, target: Poset, assignment):
        self.source = source
        self.target = target
        self.assignment = list(assignment)
        if len(self.assignment) != len(source):
            raise PosetError("assignment is not total")

    @classmethod
    def from_function(cls, source, target, f):
        return cls(source, target, [target.element(f(l)) for l in source.labels])

    def __call__(self, i):
        return self.assignment[i]

    def is_order_preserving(self):
        f = self.assignment
        T = self.target
        return all(T.leq(f[i], f[j]) for i in range(len(self.source)) for j in self.source.up[i])


def check_compatibility(f: PosetMap, mode) -> bool:
    """f^{-1}(min Q) in min P (mode min), the max analogue, or both."""
    if mode not in ("min", "max", "minmax", "full"):
        raise ValueError(mode)
    if mode == "full":
        return True
    src, tgt = f.source, f.target
    if mode in ("min", "minmax"):
        tmin = set(tgt.minimal)
        smin = set(src.minimal)
        if any(f(i) in tmin and i not in smin for i in range(len(src))):
            return False
    if mode in ("max", "minmax"):
        tmax = set(tgt.maximal)
        smax = set(src.maximal)
        if any(f(i) in tmax and i not in smax for i in range(len(src))):
            return False
    return True


# ---------------------------------------------------------------- chains

@dataclass(frozen=True)
class ChainSpec:
    variant: str
    degree: int

    def __post_init__(self):
        if self.variant not in VARIANTS:
            raise ValueError("unknown variant %r" % self.variant)
        if self.degree < 0:
            raise ValueError("negative degree")


def _start_set(P, variant):
    return P.minimal if variant in ("minmax", "min") else tuple(range(len(P)))


def _needs_max(variant):
    return variant in ("minmax", "max")


def iter_chains(P: Poset, variant: str, degree: int, starts=None, ends=None):
    """Strict chains x0 < ... < x_degree in lexicographic index order.

    starts / ends, when given, are bitsets restricting x0 and x_degree; by
    default they come from the variant.
    """
    if starts is None:
        starts = _start_set(P, variant)
    else:
        starts = list(_bits(starts))
    if ends is None:
        ends = 0
        if _needs_max(variant):
            for i in P.maximal:
                ends |= 1 << i
        else:
            ends = (1 << len(P)) - 1
    _, hup = P.heights()
    P._closure()
    gt = P._gt
    chain = []

    def rec(i, left):
        chain.append(i)
        if left == 0:
            if ends >> i & 1:
                yield tuple(chain)
        else:
            for j in _bits(gt[i]):
                if hup[j] >= left - 1 or not _needs_max(variant):
                    yield from rec(j, left - 1)
        chain.pop()

    for s in starts:
        if _needs_max(variant) and hup[s] < degree:
            continue
        yield from rec(s, degree)


def enumerate_chains(P: Poset, spec: ChainSpec):
    return list(iter_chains(P, spec.variant, spec.degree))


def max_degree(P: Poset, variant: str) -> int:
    """Longest chain length among chains of the variant."""
    hd, hu = P.heights()
    if variant == "full":
        return max(hd)
    if variant == "min":
        return max(hd)  # every longest chain starts at a minimal element
    if variant == "max":
        return max(hu)
    return max(hu[i] for i in P.minimal)


# ---------------------------------------------------------------- Mobius

def _signed_chain_sums(P: Poset, start_ok):
    """F(x) = sum over chains s = z0 < ... < zk = x with start_ok(s) of (-1)^k.

    Satisfies F(x) = [start_ok(x)] - sum_{y<x} F(y).  Down-sets are built
    from covers in topological order and dropped once no upper cover needs
    them, so memory stays near the widest antichain of down-sets.
    """
    order = P.topo_order()
    F = [0] * len(P)
    downs = {}
    pending = [len(u) for u in P.up]
    for x in order:
        d = set()
        for c in P.down[x]:
            d.add(c)
            d |= downs[c]
        F[x] = (1 if start_ok(x) else 0) - sum(F[y] for y in d)
        downs[x] = d
        for c in P.down[x]:
            pending[c] -= 1
            if pending[c] == 0:
                del downs[c]
        if pending[x] == 0:
            del downs[x]
    return F


def mobius_number(P: Poset, variant: str) -> int:
    """Sum_k (-1)^k * (number of degree-k chains of the variant), by DP."""
    if variant == "full":
        F = _signed_chain_sums(P, lambda x: True)
        return sum(F)
    if variant in ("minmax", "min"):
        mins = set(P.minimal)
        F = _signed_chain_sums(P, lambda x: x in mins)
        if variant == "min":
            return sum(F)
        return sum(F[x] for x in P.maximal)
    if variant == "max":
        F = _signed_chain_sums(P, lambda x: True)
        return sum(F[x] for x in P.maximal)
    raise ValueError(variant)


def mobius_function(P: Poset, x, y) -> int:
    """Classical Mobius function on labels (recursion over [x, y])."""
    i, j = P.element(x), P.element(y)
    return _mobius_idx(P, i, j)


def _mobius_idx(P, i, j):
    if not P.leq(i, j):
        raise PosetError("x is not below y")
    members = [k for k in _bits(P.gt_bits(i) | (1 << i)) if P.leq(k, j)]
    mu = {}
    for k in sorted(members, key=lambda k: P.heights()[0][k]):
        if k == i:
            mu[k] = 1
        else:
            mu[k] = -sum(mu[z] for z in members if z in mu and P.less(z, k) and z != k)
    return mu[j]


def count_chains_between(P: Poset, i, j, degree) -> int:
    """Number of strict chains i = z0 < ... < z_degree = j."""
    if degree == 0:
        return 1 if i == j else 0
    return sum(1 for _ in iter_chains(P, "full", degree, starts=1 << i, ends=1 << j))


# ---------------------------------------------------------------- zeta polynomial

def multichain_count(P: Poset, variant: str, t: int) -> int:
    """Multichains x0 <= ... <= x_t subject to the endpoint constraints."""
    if t < 0:
        raise ValueError("t must be non-negative")
    m = len(P)
    mins = set(P.minimal)
    maxs = set(P.maximal)
    N = [1 if (variant not in ("min", "minmax") or i in mins) else 0 for i in range(m)]
    for _ in range(t):
        new = [0] * m
        for y in range(m):
            s = N[y]
            for x in _bits(P.lt_bits(y)):
                s += N[x]
            new[y] = s
        N = new
    if variant in ("max", "minmax"):
        return sum(N[i] for i in maxs)
    return sum(N)


def _lagrange_eval(xs, ys, t):
    total = Fraction(0)
    for k, (xk, yk) in enumerate(zip(xs, ys)):
        term = Fraction(yk)
        for l, xl in enumerate(xs):
            if l != k:
                term *= Fraction(t - xl, xk - xl)
        total += term
    return total


def zeta_eval(P: Poset, variant: str, t: int) -> int:
    if t >= 0:
        return multichain_count(P, variant, t)
    bound = max_degree(P, variant)
    xs = list(range(bound + 1))
    ys = [multichain_count(P, variant, s) for s in xs]
    val = _lagrange_eval(xs, ys, t)
    assert val.denominator == 1
    return int(val)


# ---------------------------------------------------------------- automorphisms

def is_automorphism(P: Poset, g) -> bool:
    g = list(g)
    if sorted(g) != list(range(len(P))):
        return False
    return all(set(g[j] for j in P.up[i]) == set(P.up[g[i]]) for i in range(len(P)))


def fixed_chain_trace(P: Poset, g, spec: ChainSpec) -> int:
    """Number of chains of the given variant/degree fixed pointwise by g."""
    g = list(g)
    if not is_automorphism(P, g):
        raise PosetError("not an automorphism")
    fixed = 0
    for i in range(len(P)):
        if g[i] == i:
            fixed |= 1 << i
    starts = 0
    for i in _start_set(P, spec.variant):
        starts |= 1 << i
    ends = fixed
    if _needs_max(spec.variant):
        ends &= sum(1 << i for i in P.maximal)
    sub = induced(P, list(_bits(fixed)))
    # chains in the fixed subposet whose endpoints satisfy P's constraints
    Q, back = sub.poset, sub.to_parent
    pos = {b: k for k, b in enumerate(back)}
    qs = sum(1 << pos[i] for i in _bits(starts & fixed))
    qe = sum(1 << pos[i] for i in _bits(ends))
    if not qs or not qe:
        return 0
    return sum(1 for _ in iter_chains(Q, "full", spec.degree, starts=qs, ends=qe))


def signed_fixed_trace(P: Poset, g, variant) -> int:
    return sum((-1) ** k * fixed_chain_trace(P, g, ChainSpec(variant, k))
               for k in range(max_degree(P, variant) + 1))


# ---------------------------------------------------------------- checkers

def is_totally_semimodular(P: Poset) -> bool:
    """Bounded, and in every interval two covers of x have a common cover inside it."""
    if not P.is_bounded():
        return False
    P._closure()
    geq = [P._gt[i] | (1 << i) for i in range(len(P))]
    for x in range(len(P)):
        for u, v in combinations(P.up[x], 2):
            common = set(P.up[u]) & set(P.up[v])
            reach = 0
            for z in common:
                reach |= geq[z]
            # every y above both u and v must dominate some common cover
            if (geq[u] & geq[v]) & ~reach:
                return False
    return True


def check_recursive_atom_condition(P: Poset, atom_order) -> bool:
    """Condition (2) of a recursive atom ordering, plus total semimodularity
    of every upper interval [a_j, top] in place of the recursive condition (1).
    atom_order is a list of atom labels."""
    if not P.is_bounded():
        raise PosetError("poset is not bounded")
    bot = P.bottom()
    atoms = [P.element(a) for a in atom_order]
    if sorted(atoms) != sorted(P.up[bot]):
        raise PosetError("atom_order is not a permutation of the atoms")
    P._closure()
    geq = [P._gt[i] | (1 << i) for i in range(len(P))]
    for j in range(len(atoms)):
        aj = atoms[j]
        for i in range(j):
            ai = atoms[i]
            ys = geq[ai] & geq[aj]
            if not ys:
                continue
            # z covering a_j and some earlier a_k
            ok = 0
            for z in P.up[aj]:
                if any(P.leq(atoms[k], z) and z in P.up[atoms[k]] for k in range(j)):
                    ok |= geq[z]
            if ys & ~ok:
                return False
    for a in atoms:
        if not is_totally_semimodular(interval(P, P.labels[a], P.labels[P.top()]).poset):
            return False
    return True


def sjt_order(n):
    """Steinhaus-Johnson-Trotter ordering of the permutations of 1..n (as tuples)."""
    if n < 1:
        raise ValueError("n >= 1")
    order = [(1,)]
    for m in range(1, n):
        new = []
        for pos, a in enumerate(order, start=1):
            slots = range(m, -1, -1) if pos % 2 == 1 else range(m + 1)
            for j in slots:
                new.append(a[:j] + (m + 1,) + a[j:])
        order = new
    return order


def restrict_word(w, k):
    """Subword of letters <= k."""
    return tuple(c for c in w if c <= k)
