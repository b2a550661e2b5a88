"""
Set partitions of arbitrary finite ground sets.

A partition is a frozenset of frozensets.  Labels may be ints, strings,
frozensets (blocks used as labels of a quotient) or the STAR sentinel; the
total order ``label_key`` decides "minimum of a block" everywhere.
"""

from __future__ import annotations

from functools import lru_cache


class _Star:
    """The extra input label used for partial compositions."""
    __slots__ = ("name",)

    def __init__(self, name="*"):
        self.name = name

    def __repr__(self):
        return self.name

    def __reduce__(self):
        return (_Star, (self.name,))

    def __eq__(self, other):
        return isinstance(other, _Star) and other.name == self.name

    def __hash__(self):
        return hash(("star", self.name))


STAR = _Star("*")


def star(name):
    return _Star(name)


@lru_cache(maxsize=None)
def label_key(x):
    if isinstance(x, bool):
        raise TypeError("bool labels are not allowed")
    if isinstance(x, int):
        return (0, x)
    if isinstance(x, str):
        return (1, x)
    if isinstance(x, frozenset):
        return (2, tuple(sorted(label_key(e) for e in x)))
    if isinstance(x, _Star):
        return (3, x.name)
    if isinstance(x, tuple):
        return (4, tuple(label_key(e) for e in x))
    if x is None:
        return (5,)
    raise TypeError("unsupported label %r" % (x,))


def sort_labels(xs):
    return tuple(sorted(xs, key=label_key))


def min_label(xs):
    return min(xs, key=label_key)


def blocks(pi):
    """Blocks ordered by increasing minimum."""
    return tuple(sorted(pi, key=lambda B: label_key(min_label(B))))


def ground(pi):
    out = set()
    for B in pi:
        out |= B
    return frozenset(out)


def make(*bl):
    return frozenset(frozenset(b) for b in bl)


def is_partition(pi, S=None):
    seen = set()
    for B in pi:
        if not B or seen & B:
            return False
        seen |= B
    return S is None or seen == set(S)


def one_block(S):
    return frozenset([frozenset(S)])


def singletons(S):
    return frozenset(frozenset([s]) for s in S)


def set_partitions(S):
    """All partitions of S, in a deterministic order."""
    S = sort_labels(S)
    if not S:
        return [frozenset()]
    out = []

    def rec(i, cur):
        if i == len(S):
            out.append(frozenset(frozenset(b) for b in cur))
            return
        x = S[i]
        for b in cur:
            b.append(x)
            rec(i + 1, cur)
            b.pop()
        cur.append([x])
        rec(i + 1, cur)
        cur.pop()

    rec(0, [])
    return out


def leq(alpha, beta):
    """alpha <= beta iff alpha is obtained by merging blocks of beta."""
    for B in beta:
        if not any(B <= A for A in alpha):
            return False
    return True


def restrict(pi, T):
    """pi|T: blocks of pi inside T (pi refines T's block)."""
    return frozenset(B for B in pi if B <= T)


def quotient(alpha, pi):
    """alpha/pi: the partition of the block set of pi induced by alpha >= ... (alpha <= pi)."""
    return frozenset(frozenset(B for B in pi if B <= A) for A in alpha)


def phi(pi, alpha):
    return quotient(alpha, pi)


def psi(pi, beta):
    """(beta|T) for T in pi, blocks of pi by increasing minimum."""
    return tuple(restrict(beta, T) for T in blocks(pi))


def unflatten(pi, q):
    """Inverse of quotient: a partition q of the block set of pi -> partition of the ground set."""
    return frozenset(frozenset().union(*Q) for Q in q)


def two_splits(T):
    """Unordered splits {T1, T2} of T, T1 containing min(T)."""
    T = sort_labels(T)
    first, rest = T[0], T[1:]
    out = []
    n = len(rest)
    for mask in range(2 ** n - 1):
        A = [first] + [rest[i] for i in range(n) if mask >> i & 1]
        B = [rest[i] for i in range(n) if not mask >> i & 1]
        out.append((frozenset(A), frozenset(B)))
    return out


def relabel_partition(pi, f):
    return frozenset(frozenset(f(x) for x in B) for B in pi)


def fmt_label(x):
    if isinstance(x, frozenset):
        return "{" + ",".join(fmt_label(e) for e in sort_labels(x)) + "}"
    if isinstance(x, tuple):
        return "(" + ",".join(fmt_label(e) for e in x) + ")"
    return str(x)


def fmt_partition(pi):
    def blk(B):
        items = sort_labels(B)
        if all(isinstance(e, int) and 0 <= e < 10 for e in items):
            return "".join(str(e) for e in items)
        return "{" + ",".join(fmt_label(e) for e in items) + "}"
    return "|".join(blk(B) for B in blocks(pi))


def parse_partition(text):
    """'1|23' -> partition of ints (single-digit labels)."""
    return frozenset(frozenset(int(c) for c in part) for part in text.split("|"))
