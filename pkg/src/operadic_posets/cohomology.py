"""
The four cochain complexes of a poset and their cohomology.

    full    all chains
    minmax  x0 minimal and x_n maximal
    min     x0 minimal
    max     x_n maximal

The differential inserts one element in every possible gap; inserting at
position j of the new chain carries the sign (-1)^j.  The restricted
variants are subcomplexes of the full one, so they simply drop the
insertions that would break an endpoint condition.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .linalg import Echelon, nullspace, smith_invariants
from .posets import (Poset, PosetError, PosetMap, _bits,
                     check_compatibility, iter_chains, max_degree)


class CohomologyError(ValueError):
    pass


def coboundary_terms(P: Poset, chain, variant):
    """(new_chain, sign) pairs of d[chain]."""
    P._closure()
    gt, lt = P._gt, P._lt
    n = len(chain) - 1
    if variant in ("full", "max"):
        for y in _bits(lt[chain[0]]):
            yield (y,) + chain, 1
    for i in range(1, n + 1):
        s = -1 if i % 2 else 1
        for y in _bits(gt[chain[i - 1]] & lt[chain[i]]):
            yield chain[:i] + (y,) + chain[i:], s
    if variant in ("full", "min"):
        s = -1 if (n + 1) % 2 else 1
        for y in _bits(gt[chain[n]]):
            yield chain + (y,), s


class CochainComplex:
    """Chain bases per degree and column-sparse differentials d_k: C^k -> C^{k+1}."""

    def __init__(self, P: Poset, variant: str, check=True):
        if variant not in ("full", "minmax", "min", "max"):
            raise ValueError(variant)
        self.poset = P
        self.variant = variant
        top = max_degree(P, variant)
        self.bases = [list(iter_chains(P, variant, k)) for k in range(top + 1)]
        while len(self.bases) > 1 and not self.bases[-1]:
            self.bases.pop()
        self.index = [{c: j for j, c in enumerate(b)} for b in self.bases]
        self.diff = []
        for k in range(len(self.bases)):
            cols = []
            nxt = self.index[k + 1] if k + 1 < len(self.bases) else {}
            for c in self.bases[k]:
                col = {}
                for c2, s in coboundary_terms(P, c, variant):
                    r = nxt[c2]
                    col[r] = col.get(r, 0) + s
                cols.append({r: v for r, v in col.items() if v})
            self.diff.append(cols)
        if check:
            self.check_d_squared()
        self._classes = {}

    @property
    def top_degree(self):
        return len(self.bases) - 1

    def dim(self, k):
        return len(self.bases[k]) if 0 <= k < len(self.bases) else 0

    def check_d_squared(self):
        for k in range(len(self.diff) - 1):
            d1, d2 = self.diff[k], self.diff[k + 1]
            for col in d1:
                acc = {}
                for r, v in col.items():
                    for r2, w in d2[r].items():
                        acc[r2] = acc.get(r2, 0) + v * w
                if any(acc.values()):
                    raise CohomologyError("d o d != 0 in degree %d" % k)

    def d(self, k, vec):
        """Apply d_k to a sparse dict {basis position: coeff}."""
        out = {}
        if k >= len(self.diff):
            return out
        cols = self.diff[k]
        for j, x in vec.items():
            for r, v in cols[j].items():
                out[r] = out.get(r, 0) + x * v
        return {r: v for r, v in out.items() if v}

    def chain_labels(self, k, j):
        L = self.poset.labels
        return tuple(L[i] for i in self.bases[k][j])

    def vector(self, k, by_labels):
        """CochainVector from {chain of labels: coeff}; unknown chains are an error."""
        P = self.poset
        coeffs = {}
        for ch, x in by_labels.items():
            key = tuple(P.element(l) for l in ch)
            if key not in self.index[k]:
                raise CohomologyError("chain %r is not in the basis" % (ch,))
            j = self.index[k][key]
            coeffs[j] = coeffs.get(j, 0) + x
        return CochainVector(self, k, {j: x for j, x in coeffs.items() if x})

    def class_basis(self, k):
        if k not in self._classes:
            self._classes[k] = ClassBasis(self, k)
        return self._classes[k]


def get_complex(P: Poset, variant: str) -> CochainComplex:
    """Cached complex attached to the poset object."""
    cache = P.__dict__.setdefault("_complex_cache", {})
    if variant not in cache:
        cache[variant] = CochainComplex(P, variant)
    return cache[variant]


build_complex = CochainComplex


@dataclass
class CochainVector:
    complex: CochainComplex
    degree: int
    coeffs: dict = field(default_factory=dict)

    def by_labels(self):
        return {self.complex.chain_labels(self.degree, j): x for j, x in self.coeffs.items()}

    def d(self):
        return CochainVector(self.complex, self.degree + 1, self.complex.d(self.degree, self.coeffs))

    def __add__(self, other):
        assert other.complex is self.complex and other.degree == self.degree
        out = dict(self.coeffs)
        for j, x in other.coeffs.items():
            out[j] = out.get(j, 0) + x
        return CochainVector(self.complex, self.degree, {j: x for j, x in out.items() if x})

    def scale(self, s):
        return CochainVector(self.complex, self.degree, {j: s * x for j, x in self.coeffs.items() if s * x})

    def __sub__(self, other):
        return self + other.scale(-1)

    def is_zero(self):
        return not any(self.coeffs.values())


# ---------------------------------------------------------------- cohomology

@dataclass
class CohomologySummary:
    variant: str
    betti: list
    torsion: list

    def to_json(self):
        return json.dumps({"variant": self.variant, "betti": self.betti, "torsion": self.torsion})

    def concentrated_in(self):
        return [k for k, b in enumerate(self.betti) if b or self.torsion[k]]


def cohomology_Z(C: CochainComplex) -> CohomologySummary:
    ranks = []
    tors = []
    for k in range(len(C.bases)):
        nrows = C.dim(k + 1)
        r, t = smith_invariants(C.diff[k], nrows) if nrows else (0, [])
        ranks.append(r)
        tors.append(t)
    betti = []
    torsion = []
    for k in range(len(C.bases)):
        prev = ranks[k - 1] if k else 0
        betti.append(C.dim(k) - ranks[k] - prev)
        torsion.append(tors[k - 1] if k else [])
    return CohomologySummary(C.variant, betti, torsion)


class ClassBasis:
    """Cocycle representatives of H^k over Q, and a solver modulo coboundaries.

    Representatives are the kernel vectors (in the deterministic nullspace
    order) that are independent modulo the image of d_{k-1}.
    """

    def __init__(self, C: CochainComplex, k: int):
        self.complex = C
        self.degree = k
        self._echelon = Echelon()
        if k > 0:
            for col in C.diff[k - 1]:
                if col:
                    self._echelon.add(col)
        if k < len(C.diff):
            kernel = nullspace(C.diff[k], C.dim(k))
        else:
            kernel = []
        self.representatives = []
        for z in kernel:
            if self._echelon.add(z, {len(self.representatives): 1}):
                self.representatives.append(z)

    @property
    def rank(self):
        return len(self.representatives)

    def _coeffs(self, z):
        if isinstance(z, CochainVector):
            if z.complex is not self.complex or z.degree != self.degree:
                raise CohomologyError("cochain from another complex or degree")
            return z.coeffs
        return z

    def is_cocycle(self, z):
        return not self.complex.d(self.degree, self._coeffs(z))

    def coordinates(self, z):
        z = self._coeffs(z)
        if not self.is_cocycle(z):
            raise CohomologyError("not a cocycle")
        rem, tag = self._echelon.reduce(z)
        if rem:
            raise CohomologyError("internal: cocycle outside span")
        return [tag.get(r, Fraction(0)) for r in range(self.rank)]

    def is_coboundary(self, z):
        return not any(self.coordinates(z))

    def classes_equal(self, z1, z2):
        a = dict(self._coeffs(z1))
        for j, x in self._coeffs(z2).items():
            a[j] = a.get(j, 0) - x
        return self.is_coboundary({j: x for j, x in a.items() if x})

    def representative(self, coords):
        out = {}
        for c, z in zip(coords, self.representatives):
            if c:
                for j, x in z.items():
                    out[j] = out.get(j, 0) + c * x
        return CochainVector(self.complex, self.degree, {j: x for j, x in out.items() if x})


def cohomology_Q(C: CochainComplex):
    bases = [C.class_basis(k) for k in range(len(C.bases))]
    return [b.rank for b in bases], bases


# ---------------------------------------------------------------- maps

def pullback(f: PosetMap, variant: str, v: CochainVector, source_complex=None) -> CochainVector:
    """f*[g] = sum of the source chains mapped elementwise onto g."""
    if not check_compatibility(f, variant):
        raise CohomologyError("map is not %s-compatible" % variant)
    if v.complex.poset is not f.target or v.complex.variant != variant:
        raise CohomologyError("cochain does not live on the target complex")
    S = source_complex or get_complex(f.source, variant)
    k = v.degree
    if k >= len(S.bases):
        return CochainVector(S, k, {})
    tindex = v.complex.index[k]
    a = f.assignment
    out = {}
    for j, c in enumerate(S.bases[k]):
        img = tuple(a[i] for i in c)
        t = tindex.get(img)
        if t is not None:
            x = v.coeffs.get(t)
            if x:
                out[j] = x
    return CochainVector(S, k, out)


def pullback_labels(source: Poset, variant, degree, fn, values, chains=None):
    """Label-level pullback: fn maps source labels to target labels, values is
    {target label chain: coeff}.  Returns {source label chain: coeff}."""
    L = source.labels
    out = {}
    it = chains if chains is not None else iter_chains(source, variant, degree)
    for c in it:
        img = tuple(fn(L[i]) for i in c)
        x = values.get(img)
        if x:
            out[tuple(L[i] for i in c)] = x
    return out


def kunneth(c, c2):
    """[x0<..<xm] (x) [y0<..<yn] -> [(x0,y0)<..<(xm,y0)<(xm,y1)<..<(xm,yn)]."""
    return tuple((x, c2[0]) for x in c) + tuple((c[-1], y) for y in c2[1:])


def kunneth_many(chains):
    """Flattened iterated Kunneth of several chains: the first coordinate moves
    first, then the second, and so on (left association gives this)."""
    cur = [c[0] for c in chains]
    out = [tuple(cur)]
    for i, c in enumerate(chains):
        for y in c[1:]:
            cur[i] = y
            out.append(tuple(cur))
    return tuple(out)


def kunneth_vectors(values_list):
    """Multilinear Kunneth on label-level cochains {chain: coeff}."""
    acc = {(): 1}
    for vals in values_list:
        new = {}
        for key, x in acc.items():
            for ch, y in vals.items():
                new[key + (ch,)] = x * y
        acc = new
    return {kunneth_many(list(key)): x for key, x in acc.items() if x}


def kunneth_map(u: CochainVector, v: CochainVector, product_complex: CochainComplex) -> CochainVector:
    """Kunneth on CochainVectors of P and Q into a complex of direct_product(P, Q)."""
    vals = kunneth_vectors([u.by_labels(), v.by_labels()])
    vals = {tuple(e for e in ch): x for ch, x in vals.items()}
    return product_complex.vector(u.degree + v.degree, vals)


def concat(P: Poset, x, low: CochainVector, high: CochainVector, variant: str,
           target=None) -> CochainVector:
    """Splice chains of P_{<=x} ending at x with chains of P_{>=x} starting at x.

    low and high live on complexes of interval subposets whose labels are
    labels of P.  variant: minmax (mu_x), min (low minmax, high min) or max
    (low max, high minmax).
    """
    if x not in P.index:
        raise PosetError("x not in P")
    if variant not in ("minmax", "min", "max"):
        raise ValueError(variant)
    C = target or get_complex(P, variant)
    lo = low.by_labels()
    hi = high.by_labels()
    k = low.degree + high.degree
    out = {}
    for a, s in lo.items():
        if a[-1] != x:
            continue
        for b, t in hi.items():
            if b[0] != x:
                continue
            ch = a + b[1:]
            out[ch] = out.get(ch, 0) + s * t
    return C.vector(k, {c: v for c, v in out.items() if v})


def induced_automorphism_action(g, basis: ClassBasis):
    """Matrix (list of columns) of the pushforward g.[c] = [g(c)] on the class basis.

    g is a permutation of element indices.  Column j holds the coordinates of
    g applied to representative j.
    """
    C = basis.complex
    P = C.poset
    g = list(g)
    from .posets import is_automorphism
    if not is_automorphism(P, g):
        raise PosetError("not an automorphism")
    k = basis.degree
    cols = []
    for z in basis.representatives:
        moved = {}
        for j, x in z.items():
            img = tuple(g[i] for i in C.bases[k][j])
            moved[C.index[k][img]] = x
        cols.append(basis.coordinates(moved))
    return cols


# ---------------------------------------------------------------- reduced

def reduced_betti(P: Poset, members=None):
    """Ranks of reduced cohomology of the order complex of an (induced) subposet,
    indexed from degree -1.  members: optional list of indices of P."""
    from .posets import induced
    if members is not None:
        if not members:
            return [1]
        Q = induced(P, members).poset
    else:
        Q = P
    C = CochainComplex(Q, "full", check=False)
    # augmentation: d(empty) = sum of vertices
    aug = [{j: 1 for j in range(C.dim(0))}]
    ranks = [smith_invariants(aug, C.dim(0))[0]]
    for k in range(len(C.bases)):
        nrows = C.dim(k + 1)
        ranks.append(smith_invariants(C.diff[k], nrows)[0] if nrows else 0)
    dims = [1] + [C.dim(k) for k in range(len(C.bases))]
    out = []
    for i, n in enumerate(dims):
        prev = ranks[i - 1] if i else 0
        out.append(n - ranks[i] - prev)
    return out
