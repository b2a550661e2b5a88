"""
Concrete operadic poset species.

    left:<op>        (pi, xi)           xi in O(blocks of pi)
    right:<op>       (pi, decs)         decs = ((T, xi_T), ...) by block minimum
    bi:<op>:<op>     fiber product of the two
    ns               partitions with at most one non-singleton block
    nc2              ((T, R), ...) : T block of pi, R = f(T) block of a
                     non-crossing partition of {1..|S|}
    mlt / mlrt       (pi, edges[, root]) trees whose nodes are the blocks
"""

from __future__ import annotations

from itertools import combinations, permutations, product
from math import comb, factorial

from . import partitions as pt
from .partitions import blocks, label_key, restrict, sort_labels
from .set_operads import OPERADS, SetOperad, get_operad, is_left_basic, is_right_basic
from .species import (PI, FiberProduct, OperadicPosetSpecies, SpeciesError,
                      SpeciesMorphism)


def _key_pairs(pairs):
    return tuple(sorted(pairs, key=lambda p: label_key(pt.min_label(p[0]))))


# ---------------------------------------------------------------- left decorated

class LeftDecorated(OperadicPosetSpecies):

    def __init__(self, O: SetOperad, budget=4, check=True):
        super().__init__()
        if check and not is_left_basic(O, budget):
            raise SpeciesError("operad %s is not left-basic" % O.name)
        self.O = O
        self.name = "left:" + O.name
        self._psi_cache = {}
        self._fast = check   # cover generation by one split is only valid for left-basic O

    def elements(self, S):
        out = []
        for pi in pt.set_partitions(S):
            for xi in self.O.elements(blocks(pi)):
                out.append((pi, xi))
        return out

    def a(self, x):
        return x[0]

    def _push(self, alpha, xi, beta, mus):
        """xi o (mu_T) with xi on alpha, mu_T on beta|T -> element on beta."""
        to_b = {T: restrict(beta, T) for T in alpha}
        q = frozenset(to_b.values())
        return self.O.compose(q, self.O.relabel(xi, to_b.__getitem__),
                              {to_b[T]: mus[T] for T in alpha})

    def leq(self, x, y):
        (alpha, xi), (beta, eta) = x, y
        if not pt.leq(alpha, beta):
            return False
        bl = blocks(alpha)
        for combo in product(*[self.O.elements(restrict(beta, T)) for T in bl]):
            if self._push(alpha, xi, beta, dict(zip(bl, combo))) == eta:
                return True
        return False

    def up_covers(self, x):
        if not self._fast:
            return None
        alpha, xi = x
        O = self.O
        out = []
        for T in blocks(alpha):
            if len(T) < 2:
                continue
            for A, B in pt.two_splits(T):
                beta = (alpha - {T}) | {A, B}
                base = {U: O.unit(U) for U in alpha if U != T}
                for mu in O.elements((A, B)):
                    mus = dict(base)
                    mus[T] = mu
                    out.append((beta, self._push(alpha, xi, beta, mus)))
        return out

    def phi(self, x, y):
        pi = x[0]
        alpha, mu = y
        to_q = {A: restrict(pi, A) for A in alpha}
        return (frozenset(to_q.values()), self.O.relabel(mu, to_q.__getitem__))

    def decompose(self, x, y):
        """The unique (mu_T) with eta = xi o (mu_T) (left-basicness)."""
        key = (x, y)
        if key not in self._psi_cache:
            (pi, xi), (beta, eta) = x, y
            bl = blocks(pi)
            found = None
            for combo in product(*[self.O.elements(restrict(beta, T)) for T in bl]):
                mus = dict(zip(bl, combo))
                if self._push(pi, xi, beta, mus) == eta:
                    if found is not None:
                        raise SpeciesError("decomposition is not unique")
                    found = mus
            if found is None:
                raise SpeciesError("y is not above x")
            self._psi_cache[key] = found
        return self._psi_cache[key]

    def psi(self, x, y):
        pi = x[0]
        beta = y[0]
        mus = self.decompose(x, y)
        return tuple((restrict(beta, T), mus[T]) for T in blocks(pi))

    def relabel(self, x, f):
        pi, xi = x
        g = lambda B: frozenset(f(s) for s in B)
        return (pt.relabel_partition(pi, f), self.O.relabel(xi, g))

    def fmt(self, x):
        return "%s [%s]" % (pt.fmt_partition(x[0]), self.O.fmt(x[1]))

    def sort_key(self, x):
        return (PI.sort_key(x[0]), self.O.sort_key(x[1]))


# ---------------------------------------------------------------- right decorated

class RightDecorated(OperadicPosetSpecies):

    def __init__(self, O: SetOperad, budget=4, check=True):
        super().__init__()
        if check and not is_right_basic(O, budget):
            raise SpeciesError("operad %s is not right-basic" % O.name)
        self.O = O
        self.name = "right:" + O.name
        self._phi_cache = {}
        self._fast = check

    def elements(self, S):
        out = []
        for pi in pt.set_partitions(S):
            bl = blocks(pi)
            for combo in product(*[self.O.elements(T) for T in bl]):
                out.append((pi, tuple(zip(bl, combo))))
        return out

    def a(self, x):
        return x[0]

    def _nu_for(self, A, beta_A, decs, target):
        """All nu in O(beta|A) with nu o (xi_B) = target."""
        return [nu for nu in self.O.elements(beta_A)
                if self.O.compose(beta_A, nu, {B: decs[B] for B in beta_A}) == target]

    def leq(self, x, y):
        (alpha, eta), (beta, xi) = x, y
        if not pt.leq(alpha, beta):
            return False
        xi = dict(xi)
        for A, eA in eta:
            if not self._nu_for(A, restrict(beta, A), xi, eA):
                return False
        return True

    def up_covers(self, x):
        if not self._fast:
            return None
        alpha, eta = x
        O = self.O
        out = []
        eta_d = dict(eta)
        for T in blocks(alpha):
            if len(T) < 2:
                continue
            for A, B in pt.two_splits(T):
                q = frozenset([A, B])
                nus = O.elements((A, B))
                for xa in O.elements(A):
                    for xb in O.elements(B):
                        if any(O.compose(q, nu, {A: xa, B: xb}) == eta_d[T] for nu in nus):
                            d = dict(eta_d)
                            del d[T]
                            d[A] = xa
                            d[B] = xb
                            beta = (alpha - {T}) | {A, B}
                            out.append((beta, _key_pairs(d.items())))
        return out

    def phi(self, x, y):
        key = (x, y)
        if key not in self._phi_cache:
            pi, xi = x
            xi = dict(xi)
            alpha, eta = y
            pairs = []
            for A, eA in eta:
                pA = restrict(pi, A)
                nus = self._nu_for(A, pA, xi, eA)
                if len(nus) != 1:
                    raise SpeciesError("no unique factorization (right-basicness)")
                pairs.append((pA, nus[0]))
            self._phi_cache[key] = (frozenset(p for p, _ in pairs), _key_pairs(pairs))
        return self._phi_cache[key]

    def psi(self, x, y):
        pi = x[0]
        beta, xi = y
        xi = dict(xi)
        out = []
        for T in blocks(pi):
            bT = restrict(beta, T)
            out.append((bT, _key_pairs((B, xi[B]) for B in bT)))
        return tuple(out)

    def relabel(self, x, f):
        pi, decs = x
        g = lambda B: frozenset(f(s) for s in B)
        return (pt.relabel_partition(pi, f),
                _key_pairs((g(T), self.O.relabel(d, f)) for T, d in decs))

    def fmt(self, x):
        return " | ".join("%s:%s" % (pt.fmt_label(T), self.O.fmt(d)) for T, d in x[1])

    def sort_key(self, x):
        return (PI.sort_key(x[0]), tuple(self.O.sort_key(d) for _, d in x[1]))


def left_decorated(O, budget=4):
    return LeftDecorated(get_operad(O) if isinstance(O, str) else O, budget)


def right_decorated(O, budget=4):
    return RightDecorated(get_operad(O) if isinstance(O, str) else O, budget)


def bi_decorated(O1, O2, budget=4):
    L, R = left_decorated(O1, budget), right_decorated(O2, budget)
    return FiberProduct(L, R, name="bi:%s:%s" % (L.O.name, R.O.name))


# ---------------------------------------------------------------- NS

class NSSpecies(OperadicPosetSpecies):
    name = "ns"

    @staticmethod
    def is_ns(pi):
        return sum(1 for B in pi if len(B) > 1) <= 1

    def elements(self, S):
        return [p for p in pt.set_partitions(S) if self.is_ns(p)]

    def a(self, x):
        return x

    def leq(self, x, y):
        return pt.leq(x, y)

    def up_covers(self, x):
        out = set()
        for T in x:
            if len(T) > 1:
                for s in T:
                    out.add((x - {T}) | {T - {s}, frozenset([s])})
        return sorted(out, key=PI.sort_key)

    def phi(self, x, y):
        return pt.quotient(y, x)

    def psi(self, x, y):
        return pt.psi(x, y)

    def relabel(self, x, f):
        return pt.relabel_partition(x, f)

    def fmt(self, x):
        return pt.fmt_partition(x)

    def sort_key(self, x):
        return PI.sort_key(x)


def ns_species():
    return NS


NS = NSSpecies()


# ---------------------------------------------------------------- non-crossing 2-partitions

def is_noncrossing(rho):
    bl = [sorted(B) for B in rho]
    for a in range(len(bl)):
        for b in range(len(bl)):
            if a == b:
                continue
            A, B = bl[a], bl[b]
            for i in A:
                for k in A:
                    if k <= i:
                        continue
                    # j in B strictly between i and k, l in B beyond k
                    if any(i < j < k for j in B) and any(l > k for l in B):
                        return False
    return True


_NC_CACHE = {}


def noncrossing_partitions(n):
    if n not in _NC_CACHE:
        _NC_CACHE[n] = [p for p in pt.set_partitions(range(1, n + 1)) if is_noncrossing(p)]
    return _NC_CACHE[n]


def _std(R):
    """Order-preserving relabeling of a set of ints onto 1..|R|."""
    return {r: i + 1 for i, r in enumerate(sorted(R))}


class NC2Species(OperadicPosetSpecies):
    name = "nc2"

    def elements(self, S):
        S = sort_labels(S)
        n = len(S)
        out = []
        for pi in pt.set_partitions(S):
            sizes = sorted(len(T) for T in pi)
            for rho in noncrossing_partitions(n):
                if sorted(len(R) for R in rho) != sizes:
                    continue
                bl = blocks(pi)
                rb = blocks(rho)
                for perm in permutations(rb):
                    if all(len(T) == len(R) for T, R in zip(bl, perm)):
                        out.append(_key_pairs(zip(bl, perm)))
        return sorted(set(out), key=self.sort_key)

    def a(self, x):
        return frozenset(T for T, _ in x)

    @staticmethod
    def rho(x):
        return frozenset(R for _, R in x)

    def leq(self, x, y):
        if not pt.leq(self.a(x), self.a(y)) or not pt.leq(self.rho(x), self.rho(y)):
            return False
        for T, R in x:
            for T2, R2 in y:
                if T2 <= T and not R2 <= R:
                    return False
        return True

    def up_covers(self, x):
        out = []
        rho = self.rho(x)
        for T, R in x:
            if len(T) < 2:
                continue
            rest = [p for p in x if p[0] != T]
            Rs = sorted(R)
            for A, B in pt.two_splits(T):
                for R1 in map(frozenset, _subsets_of_size(Rs, len(A))):
                    R2 = R - R1
                    rho2 = (rho - {R}) | {R1, R2}
                    if not is_noncrossing(rho2):
                        continue
                    out.append(_key_pairs(rest + [(A, R1), (B, R2)]))
        return out

    def phi(self, x, y):
        rho = self.rho(x)
        sigma = {R: i + 1 for i, R in enumerate(blocks(rho))}
        pairs = []
        pi = self.a(x)
        for A, M in y:
            pA = restrict(pi, A)
            pairs.append((pA, frozenset(sigma[R] for R in rho if R <= M)))
        return _key_pairs(pairs)

    def psi(self, x, y):
        out = []
        for T, R in sorted(x, key=lambda p: label_key(pt.min_label(p[0]))):
            st = _std(R)
            out.append(_key_pairs((B, frozenset(st[r] for r in M)) for B, M in y if B <= T))
        return tuple(out)

    def relabel(self, x, f):
        return _key_pairs((frozenset(f(s) for s in T), R) for T, R in x)

    def fmt(self, x):
        return " ".join("%s>%s" % (pt.fmt_label(T), pt.fmt_label(R)) for T, R in x)

    def sort_key(self, x):
        return (len(x), tuple((label_key(T), label_key(R)) for T, R in x))


def _subsets_of_size(items, k):
    return combinations(items, k)


NC2 = NC2Species()


def nc2_species():
    return NC2


# ---------------------------------------------------------------- multilabeled trees

def _labeled_trees(nodes):
    """All trees on the given node list, as frozensets of 2-element frozensets (Pruefer)."""
    nodes = list(nodes)
    k = len(nodes)
    if k == 1:
        return [frozenset()]
    if k == 2:
        return [frozenset([frozenset(nodes)])]
    out = []
    for seq in product(range(k), repeat=k - 2):
        degree = [1] * k
        for s in seq:
            degree[s] += 1
        edges = []
        for s in seq:
            leaf = min(i for i in range(k) if degree[i] == 1)
            edges.append(frozenset([nodes[leaf], nodes[s]]))
            degree[leaf] -= 1
            degree[s] -= 1
        u, v = [i for i in range(k) if degree[i] == 1]
        edges.append(frozenset([nodes[u], nodes[v]]))
        out.append(frozenset(edges))
    return out


def _neighbors(edges, v):
    return [w for e in edges if v in e for w in e if w != v]


def _connected(nodes, edges):
    nodes = set(nodes)
    if not nodes:
        return True
    start = next(iter(nodes))
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in _neighbors(edges, v):
            if w in nodes and w not in seen:
                seen.add(w)
                stack.append(w)
    return seen == nodes


class MLTSpecies(OperadicPosetSpecies):
    name = "mlt"
    rooted = False

    def elements(self, S):
        out = []
        for pi in pt.set_partitions(S):
            for E in _labeled_trees(blocks(pi)):
                if self.rooted:
                    for r in blocks(pi):
                        out.append((pi, E, r))
                else:
                    out.append((pi, E))
        return out

    def a(self, x):
        return x[0]

    def leq(self, x, y):
        alpha, E = x[0], x[1]
        beta, F = y[0], y[1]
        if not pt.leq(alpha, beta):
            return False
        own = {}
        for A in alpha:
            for B in restrict(beta, A):
                own[B] = A
        for A in alpha:
            if not _connected(restrict(beta, A), [e for e in F if all(own[v] == A for v in e)]):
                return False
        image = frozenset(frozenset(own[v] for v in e) for e in F if len({own[v] for v in e}) == 2)
        if image != E:
            return False
        if self.rooted and not y[2] <= x[2]:
            return False
        return True

    def up_covers(self, x):
        pi, E = x[0], x[1]
        out = []
        for T in blocks(pi):
            if len(T) < 2:
                continue
            nb = sorted(_neighbors(E, T), key=label_key)
            others = [e for e in E if T not in e]
            for A, B in pt.two_splits(T):
                pi2 = (pi - {T}) | {A, B}
                for mask in range(2 ** len(nb)):
                    E2 = set(others)
                    E2.add(frozenset([A, B]))
                    for i, w in enumerate(nb):
                        E2.add(frozenset([A if mask >> i & 1 else B, w]))
                    E2 = frozenset(E2)
                    if self.rooted:
                        r = x[2]
                        if r == T:
                            out.append((pi2, E2, A))
                            out.append((pi2, E2, B))
                        else:
                            out.append((pi2, E2, r))
                    else:
                        out.append((pi2, E2))
        return out

    def phi(self, x, y):
        pi = x[0]
        to_q = {A: restrict(pi, A) for A in y[0]}
        E = frozenset(frozenset(to_q[v] for v in e) for e in y[1])
        q = frozenset(to_q.values())
        if self.rooted:
            return (q, E, to_q[y[2]])
        return (q, E)

    def psi(self, x, y):
        pi = x[0]
        beta, F = y[0], y[1]
        out = []
        for T in blocks(pi):
            bT = restrict(beta, T)
            FT = frozenset(e for e in F if all(v <= T for v in e))
            if self.rooted:
                out.append((bT, FT, self._entry(y, T)))
            else:
                out.append((bT, FT))
        return tuple(out)

    @staticmethod
    def _entry(y, T):
        """Node of y inside T closest to the root of y."""
        root = y[2]
        seen = {root}
        frontier = [root]
        while frontier:
            for v in sorted(frontier, key=label_key):
                if v <= T:
                    return v
            nxt = []
            for v in frontier:
                for w in _neighbors(y[1], v):
                    if w not in seen:
                        seen.add(w)
                        nxt.append(w)
            frontier = nxt
        raise SpeciesError("block not reached")

    def relabel(self, x, f):
        g = lambda B: frozenset(f(s) for s in B)
        pi = frozenset(g(B) for B in x[0])
        E = frozenset(frozenset(g(v) for v in e) for e in x[1])
        if self.rooted:
            return (pi, E, g(x[2]))
        return (pi, E)

    def fmt(self, x):
        edges = sorted(("%s-%s" % tuple(pt.fmt_label(v) for v in pt.sort_labels(e)) for e in x[1]))
        s = "%s {%s}" % (pt.fmt_partition(x[0]), ",".join(edges))
        if self.rooted:
            s += " @" + pt.fmt_label(x[2])
        return s

    def sort_key(self, x):
        k = (PI.sort_key(x[0]), tuple(sorted(label_key(e) for e in x[1])))
        if self.rooted:
            k += (label_key(x[2]),)
        return k


class MLRTSpecies(MLTSpecies):
    name = "mlrt"
    rooted = True


MLT = MLTSpecies()
MLRT = MLRTSpecies()


def mlt_species():
    return MLT


def mlrt_species():
    return MLRT


def forget_root():
    return SpeciesMorphism(MLRT, MLT, lambda x: (x[0], x[1]), name="forget-root")


# ---------------------------------------------------------------- enumeration helpers

def lists_count(n, k):
    """Partitions of {1..n} into k lists: C(n,k) (n-1)!/(k-1)!."""
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    return comb(n, k) * factorial(n - 1) // factorial(k - 1)


def lists_count_recursive(n, k):
    """f(n,k) = f(n-1,k-1) + (n+k-1) f(n-1,k)."""
    table = {(1, 1): 1}
    for m in range(2, n + 1):
        for j in range(1, m + 1):
            table[(m, j)] = table.get((m - 1, j - 1), 0) + (m + j - 1) * table.get((m - 1, j), 0)
    return table.get((n, k), 0)


# ---------------------------------------------------------------- registry

FAMILY_HELP = "pi, left:<op>, right:<op>, bi:<op>:<op>, ns, nc2, mlt, mlrt (ops: %s)" % ", ".join(OPERADS)
_FAMILIES = {}


def get_family(name) -> OperadicPosetSpecies:
    """Species from its CLI identifier (memoized)."""
    key = name.lower()
    if key in _FAMILIES:
        return _FAMILIES[key]
    parts = key.split(":")
    if key == "pi":
        sp = PI
    elif key == "ns":
        sp = NS
    elif key == "nc2":
        sp = NC2
    elif key == "mlt":
        sp = MLT
    elif key == "mlrt":
        sp = MLRT
    elif parts[0] == "left" and len(parts) == 2:
        sp = left_decorated(parts[1])
    elif parts[0] == "right" and len(parts) == 2:
        sp = right_decorated(parts[1])
    elif parts[0] == "bi" and len(parts) == 3:
        sp = bi_decorated(parts[1], parts[2])
    else:
        raise SpeciesError("unknown family %r; valid: %s" % (name, FAMILY_HELP))
    _FAMILIES[key] = sp
    return sp
