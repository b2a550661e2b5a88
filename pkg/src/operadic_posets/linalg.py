"""
Exact sparse linear algebra: Smith invariants over Z and echelon forms over Q.

Matrices are given column-sparse: ``cols[j]`` is a dict {row: int}.  The
integer routine first splits the matrix into connected blocks (the min/max
variants of poset complexes are block diagonal by endpoints), then
eliminates on unit pivots with a Markowitz-style choice, and only falls back
to a dense big-int Smith reduction for what is left.
"""

from __future__ import annotations

import heapq
from fractions import Fraction


def _components(cols, nrows):
    parent = list(range(nrows))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for col in cols:
        it = iter(col)
        first = next(it, None)
        if first is None:
            continue
        ra = find(first)
        for r in it:
            rb = find(r)
            if rb != ra:
                parent[rb] = ra
    groups = {}
    for j, col in enumerate(cols):
        if col:
            groups.setdefault(find(next(iter(col))), []).append(j)
    return list(groups.values())


def _dense_snf(rows):
    """Nonzero diagonal of the Smith form of a small dense integer matrix."""
    A = [list(r) for r in rows]
    if not A:
        return []
    m, n = len(A), len(A[0])
    diag = []
    t = 0
    while t < min(m, n):
        # pivot of minimal absolute value in the remaining block
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if A[i][j] and (best is None or abs(A[i][j]) < abs(A[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        i, j = best
        A[t], A[i] = A[i], A[t]
        for row in A:
            row[t], row[j] = row[j], row[t]
        while True:
            p = A[t][t]
            done = True
            for i in range(t + 1, m):
                if A[i][t]:
                    q = A[i][t] // p
                    if q:
                        A[i] = [a - q * b for a, b in zip(A[i], A[t])]
                    if A[i][t]:
                        done = False
            for j in range(t + 1, n):
                if A[t][j]:
                    q = A[t][j] // p
                    if q:
                        for row in A:
                            row[j] -= q * row[t]
                    if A[t][j]:
                        done = False
            if done:
                # divisibility of the rest by p
                bad = None
                for i in range(t + 1, m):
                    for j in range(t + 1, n):
                        if A[i][j] % p:
                            bad = i
                            break
                    if bad is not None:
                        break
                if bad is None:
                    break
                A[t] = [a + b for a, b in zip(A[t], A[bad])]
                continue
            # move a smaller remainder into the pivot position
            best = None
            for i in range(t, m):
                if A[i][t] and (best is None or abs(A[i][t]) < abs(A[best][t])):
                    best = i
            A[t], A[best] = A[best], A[t]
            bestc = None
            for j in range(t, n):
                if A[t][j] and (bestc is None or abs(A[t][j]) < abs(A[t][bestc])):
                    bestc = j
            for row in A:
                row[t], row[bestc] = row[bestc], row[t]
        diag.append(abs(A[t][t]))
        t += 1
    return diag


def _eliminate_block(cols, colids):
    """Rank and non-unit invariant factors of one connected block."""
    rows = {}
    colrows = {}
    for j in colids:
        colrows[j] = set()
        for r, v in cols[j].items():
            if v:
                rows.setdefault(r, {})[j] = v
                colrows[j].add(r)
    rank = 0
    while True:
        heap = [(len(row), r) for r, row in rows.items()]
        heapq.heapify(heap)
        progress = False
        while heap:
            ln, r = heapq.heappop(heap)
            row = rows.get(r)
            if row is None:
                continue
            if len(row) != ln:
                heapq.heappush(heap, (len(row), r))
                continue
            piv = None
            for c, v in row.items():
                if v == 1 or v == -1:
                    if piv is None or len(colrows[c]) < len(colrows[piv]):
                        piv = c
            if piv is None:
                continue
            u = row[piv]
            progress = True
            rank += 1
            for r2 in list(colrows[piv]):
                if r2 == r:
                    continue
                row2 = rows[r2]
                f = row2[piv] * u
                for c, v in row.items():
                    nv = row2.get(c, 0) - f * v
                    if nv:
                        if c not in row2:
                            colrows[c].add(r2)
                        row2[c] = nv
                    else:
                        if c in row2:
                            del row2[c]
                            colrows[c].discard(r2)
                if not row2:
                    del rows[r2]
                else:
                    heapq.heappush(heap, (len(row2), r2))
            for c in row:
                colrows[c].discard(r)
            del rows[r]
            del colrows[piv]
        if not progress:
            break
    if not rows:
        return rank, []
    rlist = sorted(rows)
    clist = sorted({c for row in rows.values() for c in row})
    dense = [[rows[r].get(c, 0) for c in clist] for r in rlist]
    diag = _dense_snf(dense)
    return rank + len(diag), [d for d in diag if d > 1]


def smith_invariants(cols, nrows):
    """(rank, sorted list of invariant factors > 1) of an integer matrix."""
    rank = 0
    tors = []
    for comp in _components(cols, nrows):
        r, t = _eliminate_block(cols, comp)
        rank += r
        tors.extend(t)
    return rank, _normalize_torsion(tors)


def _normalize_torsion(factors):
    """Re-express a multiset of cyclic orders as invariant factors d1 | d2 | ..."""
    if not factors:
        return []
    # prime-power decomposition then regroup
    pp = {}
    for f in factors:
        n = f
        p = 2
        while p * p <= n:
            while n % p == 0:
                e = 0
                while n % p == 0:
                    n //= p
                    e += 1
                pp.setdefault(p, []).append(p ** e)
            p += 1
        if n > 1:
            pp.setdefault(n, []).append(n)
    k = max(len(v) for v in pp.values())
    inv = [1] * k
    for p, powers in pp.items():
        powers.sort()
        for i, q in enumerate(reversed(powers)):
            inv[k - 1 - i] *= q
    return [d for d in inv if d > 1]


# ---------------------------------------------------------------- over Q

class Echelon:
    """Incremental sparse row echelon form over Q.

    Each stored row carries a tag vector (dict); reducing a vector returns the
    remainder and the combination of tags used, which is how class
    coordinates are read off modulo coboundaries.
    """

    def __init__(self):
        self.rows = {}   # pivot column -> (row dict, tag dict)

    def __len__(self):
        return len(self.rows)

    def reduce(self, v):
        v = {k: Fraction(x) for k, x in v.items() if x}
        tag = {}
        heap = list(v)
        heapq.heapify(heap)
        seen = set()
        while heap:
            c = heapq.heappop(heap)
            if c in seen:
                continue
            seen.add(c)
            x = v.get(c)
            if not x or c not in self.rows:
                continue
            row, rtag = self.rows[c]
            f = x / row[c]
            for k, y in row.items():
                nv = v.get(k, 0) - f * y
                if nv:
                    if k not in v:
                        heapq.heappush(heap, k)
                    v[k] = nv
                elif k in v:
                    del v[k]
            for k, y in rtag.items():
                nt = tag.get(k, 0) + f * y
                if nt:
                    tag[k] = nt
                elif k in tag:
                    del tag[k]
        return v, tag

    def add(self, v, tag=None):
        """Insert v (tag defaults to empty); returns False if v is dependent."""
        rem, used = self.reduce(v)
        if not rem:
            return False
        t = {}
        for k, y in (tag or {}).items():
            t[k] = Fraction(y)
        for k, y in used.items():
            nt = t.get(k, 0) - y
            if nt:
                t[k] = nt
            elif k in t:
                del t[k]
        piv = min(rem)
        self.rows[piv] = (rem, t)
        return True


def rank_Q(cols):
    E = Echelon()
    return sum(1 for c in cols if c and E.add(c))


def nullspace(cols, ncols):
    """Basis of {x : sum_j x_j cols[j] = 0} over Q, as dicts on column indices.

    Deterministic: column j is free iff it depends on columns < j; the basis
    vector for it is e_j minus that dependence.
    """
    E = Echelon()
    basis = []
    for j in range(ncols):
        col = cols[j]
        rem, used = E.reduce(col)
        if rem:
            E.add(col, {j: 1})
        else:
            vec = {j: Fraction(1)}
            for k, y in used.items():
                vec[k] = vec.get(k, 0) - y
            basis.append({k: y for k, y in vec.items() if y})
    return basis
