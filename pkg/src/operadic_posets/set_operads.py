"""
Finite set operads: Com, As, Perm, NAC2, UP.

Elements over a ground set S (any labels):

    Com    the string "com"
    As     tuple of labels (a linear order)
    Perm   a label (the pointed element)
    NAC2   leaf = label, node = (left, right); children of a node that is
           not highest are sorted by minimum leaf, highest nodes keep their
           planar order
    UP     leaf = label, node = (sym, left, right) with sym in {"-|", "|-"}
           on highest nodes and None elsewhere

compose(pi, xi, decs) is the full composition: xi lives on the block set of
pi and decs maps each block T to an element on T.
"""

from __future__ import annotations

from itertools import permutations, product
from math import comb

from . import partitions as pt
from .partitions import label_key, sort_labels


class OperadError(ValueError):
    pass


class SetOperad:
    name = "operad"

    def elements(self, S):
        raise NotImplementedError

    def compose(self, pi, xi, decs):
        raise NotImplementedError

    def relabel(self, xi, f):
        raise NotImplementedError

    def unit(self, s):
        raise NotImplementedError

    def fmt(self, xi):
        return pt.fmt_label(xi) if isinstance(xi, (tuple, frozenset)) else str(xi)

    def count(self, n):
        return len(self.elements(tuple(range(1, n + 1))))

    def sort_key(self, xi):
        return label_key(xi)

    def elements_sorted(self, S):
        return sorted(self.elements(tuple(S)), key=self.sort_key)

    def _check(self, pi, decs):
        if set(decs) != set(pi):
            raise OperadError("decorations do not match the blocks")


class Com(SetOperad):
    name = "com"
    E = "com"

    def elements(self, S):
        return [self.E]

    def compose(self, pi, xi, decs):
        self._check(pi, decs)
        return self.E

    def relabel(self, xi, f):
        return xi

    def unit(self, s):
        return self.E


class As(SetOperad):
    name = "as"

    def elements(self, S):
        return [tuple(p) for p in permutations(sort_labels(S))]

    def compose(self, pi, xi, decs):
        self._check(pi, decs)
        out = ()
        for T in xi:
            out += decs[T]
        return out

    def relabel(self, xi, f):
        return tuple(f(x) for x in xi)

    def unit(self, s):
        return (s,)


class Perm(SetOperad):
    name = "perm"

    def elements(self, S):
        return list(sort_labels(S))

    def compose(self, pi, xi, decs):
        self._check(pi, decs)
        return decs[xi]

    def relabel(self, xi, f):
        return f(xi)

    def unit(self, s):
        return s


# ---------------------------------------------------------------- trees

def _planar_trees(S):
    """All planar binary trees with leaf set S; node = (left, right)."""
    S = sort_labels(S)
    if len(S) == 1:
        return [S[0]]
    out = []
    n = len(S)
    for mask in range(1, 2 ** n - 1):
        A = [S[i] for i in range(n) if mask >> i & 1]
        B = [S[i] for i in range(n) if not mask >> i & 1]
        for l in _planar_trees(A):
            for r in _planar_trees(B):
                out.append((l, r))
    return out


class NAC2(SetOperad):
    name = "nac2"

    @staticmethod
    def is_leaf(t):
        return not isinstance(t, tuple)

    def min_leaf(self, t):
        if self.is_leaf(t):
            return label_key(t)
        return min(self.min_leaf(t[0]), self.min_leaf(t[1]))

    def canon(self, t):
        if self.is_leaf(t):
            return t
        l, r = self.canon(t[0]), self.canon(t[1])
        if self.is_leaf(l) and self.is_leaf(r):
            return (l, r)
        if self.min_leaf(r) < self.min_leaf(l):
            l, r = r, l
        return (l, r)

    def elements(self, S):
        seen = set()
        out = []
        for t in _planar_trees(S):
            c = self.canon(t)
            if c not in seen:
                seen.add(c)
                out.append(c)
        return out

    def _subst(self, t, decs):
        if self.is_leaf(t):
            return decs[t]
        return (self._subst(t[0], decs), self._subst(t[1], decs))

    def compose(self, pi, xi, decs):
        self._check(pi, decs)
        return self.canon(self._subst(xi, decs))

    def relabel(self, xi, f):
        if self.is_leaf(xi):
            return f(xi)
        return self.canon((self.relabel(xi[0], f), self.relabel(xi[1], f)))

    def unit(self, s):
        return s

    def fmt(self, t):
        if self.is_leaf(t):
            return pt.fmt_label(t)
        return "(" + self.fmt(t[0]) + " " + self.fmt(t[1]) + ")"


def nac2_recurrence(N):
    """u_1 = 1, u_2 = 2, u_n = 1/2 sum_k C(n,k) u_k u_{n-k}."""
    u = [0, 1, 2]
    for n in range(3, N + 1):
        s = sum(comb(n, k) * u[k] * u[n - k] for k in range(1, n))
        assert s % 2 == 0
        u.append(s // 2)
    return u[:N + 1]


class UP(SetOperad):
    name = "up"
    SYMBOLS = ("-|", "|-")

    @staticmethod
    def is_leaf(t):
        return not isinstance(t, tuple)

    def canon(self, t, sym_default=None):
        """Erase symbols on nodes that are not highest."""
        if self.is_leaf(t):
            return t
        s, l, r = t
        l, r = self.canon(l), self.canon(r)
        if self.is_leaf(l) and self.is_leaf(r):
            if s is None:
                raise OperadError("highest node without symbol")
            return (s, l, r)
        return (None, l, r)

    def _trees(self, S):
        S = sort_labels(S)
        if len(S) == 1:
            return [S[0]]
        out = []
        n = len(S)
        for mask in range(1, 2 ** n - 1):
            A = [S[i] for i in range(n) if mask >> i & 1]
            B = [S[i] for i in range(n) if not mask >> i & 1]
            for l in self._trees(A):
                for r in self._trees(B):
                    if self.is_leaf(l) and self.is_leaf(r):
                        for s in self.SYMBOLS:
                            out.append((s, l, r))
                    else:
                        out.append((None, l, r))
        return out

    def elements(self, S):
        return self._trees(S)

    def _subst(self, t, decs):
        if self.is_leaf(t):
            return decs[t]
        return (t[0], self._subst(t[1], decs), self._subst(t[2], decs))

    def compose(self, pi, xi, decs):
        self._check(pi, decs)
        return self.canon(self._subst(xi, decs))

    def relabel(self, xi, f):
        if self.is_leaf(xi):
            return f(xi)
        return (xi[0], self.relabel(xi[1], f), self.relabel(xi[2], f))

    def unit(self, s):
        return s

    def sort_key(self, t):
        if self.is_leaf(t):
            return (0, label_key(t))
        return (1, t[0] or "", self.sort_key(t[1]), self.sort_key(t[2]))

    def fmt(self, t):
        if self.is_leaf(t):
            return pt.fmt_label(t)
        s = t[0] or "."
        return "(" + self.fmt(t[1]) + " " + s + " " + self.fmt(t[2]) + ")"


def up_shape_counts(N):
    """a(n): planar binary trees with n leaves, weighted by 2^(number of highest nodes)."""
    a = [0, 1, 2]
    for n in range(3, N + 1):
        a.append(sum(a[k] * a[n - k] for k in range(1, n)))
    return a[:N + 1]


def up_reference_count(n):
    from math import factorial
    return factorial(n) * up_shape_counts(n)[n]


OPERADS = {"com": Com(), "as": As(), "perm": Perm(), "nac2": NAC2(), "up": UP()}


def get_operad(name):
    try:
        return OPERADS[name.lower()]
    except KeyError:
        raise OperadError("unknown operad %r; known: %s" % (name, ", ".join(OPERADS)))


def compose(O: SetOperad, pi, xi, decs):
    return O.compose(pi, xi, decs)


def count(O: SetOperad, n):
    return O.count(n)


# ---------------------------------------------------------------- basicness

def _decoration_tuples(O, pi):
    bl = pt.blocks(pi)
    for combo in product(*[O.elements(B) for B in bl]):
        yield dict(zip(bl, combo))


def is_left_basic(O: SetOperad, n) -> bool:
    return left_basic_witness(O, n) is None


def left_basic_witness(O, n):
    """First (pi, xi, mu, mu') with xi o mu = xi o mu', mu != mu', or None."""
    for m in range(1, n + 1):
        for pi in pt.set_partitions(range(1, m + 1)):
            for xi in O.elements(pt.blocks(pi)):
                seen = {}
                for decs in _decoration_tuples(O, pi):
                    r = O.compose(pi, xi, decs)
                    key = tuple(sorted(decs.items(), key=lambda kv: label_key(kv[0])))
                    if r in seen and seen[r] != key:
                        return (pi, xi, seen[r], key)
                    seen[r] = key
    return None


def is_right_basic(O: SetOperad, n) -> bool:
    return right_basic_witness(O, n) is None


def right_basic_witness(O, n):
    for m in range(1, n + 1):
        for pi in pt.set_partitions(range(1, m + 1)):
            nus = O.elements(pt.blocks(pi))
            for decs in _decoration_tuples(O, pi):
                seen = {}
                for nu in nus:
                    r = O.compose(pi, nu, decs)
                    if r in seen:
                        return (pi, decs, seen[r], nu)
                    seen[r] = nu
    return None


# ---------------------------------------------------------------- axiom checks

def check_operad_axioms(O: SetOperad, n):
    """Associativity over nested partitions, unitality and equivariance on
    ground sets {1..m}, m <= n.  Returns a list of failures (empty = pass)."""
    fails = []
    for m in range(1, n + 1):
        S = tuple(range(1, m + 1))
        parts = pt.set_partitions(S)
        for xi in O.elements(S):
            # units
            one = pt.one_block(S)
            T = next(iter(one))
            if O.compose(one, O.unit(T), {T: xi}) != xi:
                fails.append(("left unit", m, O.fmt(xi)))
            sing = pt.singletons(S)
            lifted = O.relabel(xi, lambda s: frozenset([s]))
            if O.compose(sing, lifted, {B: O.unit(next(iter(B))) for B in sing}) != xi:
                fails.append(("right unit", m, O.fmt(xi)))
            # equivariance
            for perm in permutations(S):
                f = dict(zip(S, perm))
                for pi in parts[:8]:
                    for outer in O.elements(pt.blocks(pi))[:3]:
                        for decs in list(_decoration_tuples(O, pi))[:3]:
                            lhs = O.relabel(O.compose(pi, outer, decs), f.__getitem__)
                            g = lambda B: frozenset(f[s] for s in B)
                            pi2 = frozenset(g(B) for B in pi)
                            rhs = O.compose(pi2, O.relabel(outer, g),
                                            {g(B): O.relabel(d, f.__getitem__) for B, d in decs.items()})
                            if lhs != rhs:
                                fails.append(("equivariance", m, O.fmt(outer)))
                break  # one element per arity is enough for the equivariance sweep
        # associativity over pi <= pi2
        for pi in parts:
            for pi2 in parts:
                if not pt.leq(pi, pi2):
                    continue
                q = pt.quotient(pi, pi2)        # partition of the block set of pi2
                bl = pt.blocks(pi)
                for xi in O.elements(bl)[:4]:
                    nus_per = [O.elements(pt.restrict(pi2, T))[:3] for T in bl]
                    for nus in product(*nus_per):
                        nu = dict(zip(bl, nus))
                        for decs in list(_decoration_tuples(O, pi2))[:4]:
                            to_q = {T: pt.restrict(pi2, T) for T in bl}
                            xi_q = O.relabel(xi, to_q.__getitem__)
                            left = O.compose(pi2, O.compose(q, xi_q, {to_q[T]: nu[T] for T in bl}), decs)
                            inner = {T: O.compose(pt.restrict(pi2, T), nu[T],
                                                  {U: decs[U] for U in pt.restrict(pi2, T)}) for T in bl}
                            right = O.compose(pi, xi, inner)
                            if left != right:
                                fails.append(("associativity", m, O.fmt(xi)))
    return fails
