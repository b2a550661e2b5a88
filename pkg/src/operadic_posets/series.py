"""
Truncated power series and cycle index series over exact rationals.

EGFSeries   coefficients of x^0..x^N (species series have constant term 0)
SymFunc     {partition (decreasing tuple): coeff} with |lambda| <= N,
            the monomial p_lambda = p_{lambda_1} ... p_{lambda_r}

The Moebius formulas for decorated partitions:

    left   sum mu_check(n) x^n/n! = -C_dual(1 - e^x) = G(e^x - 1)
    right  sum mu_hat(n)  x^n/n!  = exp(-C_dual(-x)) - 1 = exp(G(x)) - 1

with G(x) = -C_dual(-x), which is what the registry stores.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from math import factorial

DEFAULT_N = 8


class SeriesError(ValueError):
    pass


# ---------------------------------------------------------------- power series

class EGFSeries:
    __slots__ = ("N", "c")

    def __init__(self, coeffs, N=None):
        c = [Fraction(x) for x in coeffs]
        if N is None:
            N = len(c) - 1
        c = (c + [Fraction(0)] * (N + 1))[:N + 1]
        self.N, self.c = N, c

    # constructors
    @classmethod
    def x(cls, N=DEFAULT_N):
        return cls([0, 1], N)

    @classmethod
    def const(cls, a, N=DEFAULT_N):
        return cls([a], N)

    @classmethod
    def from_counts(cls, counts, N=None):
        """counts[n-1] = dim F(n) -> sum counts x^n / n!."""
        N = N or len(counts)
        return cls([0] + [Fraction(a, factorial(n)) for n, a in enumerate(counts[:N], 1)], N)

    @classmethod
    def from_function(cls, fn, N=DEFAULT_N):
        """Coefficient of x^n is fn(n) for n >= 1."""
        return cls([0] + [Fraction(fn(n)) for n in range(1, N + 1)], N)

    def counts(self):
        """n! [x^n] for n = 1..N."""
        return [self.c[n] * factorial(n) for n in range(1, self.N + 1)]

    def int_counts(self):
        out = []
        for v in self.counts():
            if v.denominator != 1:
                raise SeriesError("non-integral coefficient %s" % v)
            out.append(int(v))
        return out

    # arithmetic
    def _lift(self, o):
        if isinstance(o, EGFSeries):
            if o.N != self.N:
                raise SeriesError("truncation mismatch")
            return o
        return EGFSeries([o], self.N)

    def __add__(self, o):
        o = self._lift(o)
        return EGFSeries([a + b for a, b in zip(self.c, o.c)], self.N)

    __radd__ = __add__

    def __neg__(self):
        return EGFSeries([-a for a in self.c], self.N)

    def __sub__(self, o):
        return self + (-self._lift(o))

    def __rsub__(self, o):
        return self._lift(o) - self

    def __mul__(self, o):
        o = self._lift(o)
        out = [Fraction(0)] * (self.N + 1)
        for i, a in enumerate(self.c):
            if a:
                for j in range(self.N + 1 - i):
                    if o.c[j]:
                        out[i + j] += a * o.c[j]
        return EGFSeries(out, self.N)

    __rmul__ = __mul__

    def __eq__(self, o):
        return isinstance(o, EGFSeries) and self.N == o.N and self.c == o.c

    def __repr__(self):
        return "EGFSeries(%s)" % [str(a) for a in self.c]

    def inverse(self):
        """1/f, needs f(0) != 0."""
        if not self.c[0]:
            raise SeriesError("non-invertible leading term")
        out = [Fraction(0)] * (self.N + 1)
        out[0] = 1 / self.c[0]
        for n in range(1, self.N + 1):
            s = sum(self.c[k] * out[n - k] for k in range(1, n + 1))
            out[n] = -s / self.c[0]
        return EGFSeries(out, self.N)

    def __truediv__(self, o):
        return self * self._lift(o).inverse()

    def __rtruediv__(self, o):
        return self._lift(o) * self.inverse()

    def derivative(self):
        return EGFSeries([n * self.c[n] for n in range(1, self.N + 1)] + [0], self.N)

    def integral(self):
        return EGFSeries([0] + [self.c[n] / (n + 1) for n in range(self.N)], self.N)

    def exp(self):
        """exp(f) for f(0) = 0, via g' = f' g."""
        if self.c[0]:
            raise SeriesError("exp needs zero constant term")
        g = [Fraction(0)] * (self.N + 1)
        g[0] = Fraction(1)
        d = self.derivative().c
        for n in range(1, self.N + 1):
            g[n] = sum(d[k] * g[n - 1 - k] for k in range(n)) / n
        return EGFSeries(g, self.N)

    def log(self):
        """log(f) for f(0) = 1."""
        if self.c[0] != 1:
            raise SeriesError("log needs constant term 1")
        return (self.derivative() * self.inverse()).integral()

    def sqrt(self):
        """sqrt(f) for f(0) = 1."""
        if self.c[0] != 1:
            raise SeriesError("sqrt needs constant term 1")
        g = [Fraction(0)] * (self.N + 1)
        g[0] = Fraction(1)
        for n in range(1, self.N + 1):
            s = sum(g[k] * g[n - k] for k in range(1, n))
            g[n] = (self.c[n] - s) / 2
        return EGFSeries(g, self.N)

    def compose(self, g):
        """self(g(x)) with g(0) = 0 (Horner)."""
        g = self._lift(g)
        if g.c[0]:
            raise SeriesError("inner series needs zero constant term")
        out = EGFSeries([self.c[self.N]], self.N)
        for k in range(self.N - 1, -1, -1):
            out = out * g + self.c[k]
        return out

    __call__ = compose


def egf_comp_inverse(C: EGFSeries) -> EGFSeries:
    """Compositional inverse, needs C(0) = 0 and C'(0) = +-1... any nonzero."""
    if C.c[0] or not C.c[1]:
        raise SeriesError("non-invertible leading term")
    N = C.N
    inv = EGFSeries([0, 1 / C.c[1]], N)
    # fix one coefficient at a time: C(inv) = x
    for n in range(2, N + 1):
        err = C.compose(inv).c[n]
        inv.c[n] -= err / C.c[1]
    if C.compose(inv) != EGFSeries.x(N):
        raise SeriesError("inverse did not converge")
    return inv


def mobius_left_egf(G: EGFSeries) -> EGFSeries:
    """-C_dual(1 - e^x) = G(e^x - 1) with G = -C_dual(-x)."""
    x = EGFSeries.x(G.N)
    return G.compose(x.exp() - 1)


def mobius_right_egf(G: EGFSeries) -> EGFSeries:
    """exp(-C_dual(-x)) - 1 = exp(G(x)) - 1."""
    return G.exp() - 1


def negate_argument(C: EGFSeries) -> EGFSeries:
    """-C(-x); applied to C_dual this is G, and it is an involution."""
    return EGFSeries([-a * (-1) ** n for n, a in enumerate(C.c)], C.N)


# ---------------------------------------------------------------- symmetric functions

def partitions_of(n, maxpart=None):
    if maxpart is None:
        maxpart = n
    if n == 0:
        yield ()
        return
    for k in range(min(n, maxpart), 0, -1):
        for rest in partitions_of(n - k, k):
            yield (k,) + rest


def _merge(l1, l2):
    return tuple(sorted(l1 + l2, reverse=True))


class SymFunc:
    __slots__ = ("N", "terms")

    def __init__(self, terms=None, N=DEFAULT_N):
        self.N = N
        self.terms = {}
        for lam, c in (terms or {}).items():
            lam = tuple(sorted(lam, reverse=True))
            if sum(lam) <= N and c:
                self.terms[lam] = self.terms.get(lam, 0) + Fraction(c)
        self.terms = {k: v for k, v in self.terms.items() if v}

    @classmethod
    def p(cls, n, N=DEFAULT_N):
        return cls({(n,): 1}, N)

    @classmethod
    def const(cls, a, N=DEFAULT_N):
        return cls({(): a}, N)

    def __add__(self, o):
        o = self._lift(o)
        t = dict(self.terms)
        for k, v in o.terms.items():
            t[k] = t.get(k, 0) + v
        return SymFunc(t, self.N)

    __radd__ = __add__

    def __neg__(self):
        return SymFunc({k: -v for k, v in self.terms.items()}, self.N)

    def __sub__(self, o):
        return self + (-self._lift(o))

    def __rsub__(self, o):
        return self._lift(o) - self

    def _lift(self, o):
        if isinstance(o, SymFunc):
            if o.N != self.N:
                raise SeriesError("truncation mismatch")
            return o
        return SymFunc({(): o}, self.N)

    def __mul__(self, o):
        o = self._lift(o)
        t = {}
        for k1, v1 in self.terms.items():
            w1 = sum(k1)
            for k2, v2 in o.terms.items():
                if w1 + sum(k2) <= self.N:
                    k = _merge(k1, k2)
                    t[k] = t.get(k, 0) + v1 * v2
        return SymFunc(t, self.N)

    __rmul__ = __mul__

    def __pow__(self, e):
        out = SymFunc.const(1, self.N)
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, o):
        return isinstance(o, SymFunc) and self.N == o.N and self.terms == o.terms

    def __repr__(self):
        return "SymFunc(%s)" % self.fmt()

    def fmt(self):
        if not self.terms:
            return "0"
        parts = []
        for lam in sorted(self.terms, key=lambda l: (sum(l), [-x for x in l])):
            mono = "*".join("p%d" % k for k in lam) or "1"
            parts.append("%s*%s" % (self.terms[lam], mono))
        return " + ".join(parts)

    def constant(self):
        return self.terms.get((), Fraction(0))

    def component(self, n):
        return SymFunc({k: v for k, v in self.terms.items() if sum(k) == n}, self.N)

    def truncate(self, N):
        return SymFunc(self.terms, N)

    def substitute_scale(self, m):
        """p_k -> p_{mk}: the plethysm p_m o self."""
        return SymFunc({tuple(m * a for a in k): v for k, v in self.terms.items()}, self.N)

    def specialize_egf(self) -> EGFSeries:
        """p_1 = x, p_k = 0 for k >= 2."""
        c = [Fraction(0)] * (self.N + 1)
        for k, v in self.terms.items():
            if all(a == 1 for a in k):
                c[len(k)] += v
        return EGFSeries(c, self.N)


def sym_exp(Z: SymFunc) -> SymFunc:
    if Z.constant():
        raise SeriesError("exp needs zero constant term")
    out = SymFunc.const(1, Z.N)
    term = SymFunc.const(1, Z.N)
    for k in range(1, Z.N + 1):
        term = term * Z * Fraction(1, k)
        out = out + term
    return out


def e_plus(N=DEFAULT_N) -> SymFunc:
    """Z_{E+} = exp(sum p_n / n) - 1."""
    s = SymFunc({(n,): Fraction(1, n) for n in range(1, N + 1)}, N)
    return sym_exp(s) - 1


def plethysm(Z: SymFunc, Z2: SymFunc) -> SymFunc:
    """Z o Z2: p_n -> Z2(p_n, p_2n, ...)."""
    if Z2.constant():
        raise SeriesError("inner series needs zero constant term")
    N = Z.N
    cache = {}

    def pn(n):
        if n not in cache:
            cache[n] = Z2.substitute_scale(n)
        return cache[n]

    out = SymFunc({}, N)
    for lam, c in Z.terms.items():
        term = SymFunc.const(c, N)
        for a in lam:
            term = term * pn(a)
            if not term.terms:
                break
        out = out + term
    return out


def suspension(Z: SymFunc) -> SymFunc:
    """Sigma Z = -Z(-p_1, -p_2, ...)."""
    return SymFunc({k: -v * (-1) ** len(k) for k, v in Z.terms.items()}, Z.N)


def plethystic_inverse(Z: SymFunc) -> SymFunc:
    """W with Z o W = p_1, degree by degree; needs [p_1] Z = +-1 and no constant term."""
    a = Z.terms.get((1,), 0)
    if Z.constant() or a not in (1, -1):
        raise SeriesError("non-invertible leading term")
    N = Z.N
    W = SymFunc({(1,): 1 / a}, N)
    target = SymFunc.p(1, N)
    for n in range(2, N + 1):
        err = (plethysm(Z, W) - target).component(n)
        # the weight-n part of Z o W is a * W_n + (terms from lower weights of W)
        W = W - err * (1 / a)
    if plethysm(Z, W) != target:
        raise SeriesError("plethystic inverse did not converge")
    return W


def mobius_left_equivariant(Z_dual: SymFunc) -> SymFunc:
    return plethysm(suspension(Z_dual), e_plus(Z_dual.N))


def mobius_right_equivariant(Z_dual: SymFunc) -> SymFunc:
    return plethysm(e_plus(Z_dual.N), suspension(Z_dual))


# ---------------------------------------------------------------- characters from posets

def cycle_type(perm):
    """perm: dict on its domain -> decreasing tuple of cycle lengths."""
    seen = set()
    out = []
    for s in perm:
        if s in seen:
            continue
        k = 0
        t = s
        while t not in seen:
            seen.add(t)
            t = perm[t]
            k += 1
        out.append(k)
    return tuple(sorted(out, reverse=True))


def lefschetz_by_cycle_type(P_family, n, variant):
    """{cycle type: sum_k (-1)^k #(chains of degree k fixed by sigma)}, one sigma per type."""
    from .posets import signed_fixed_trace
    S = tuple(range(1, n + 1))
    Pp = P_family.poset(S)
    out = {}
    for perm in permutations(S):
        f = dict(zip(S, perm))
        lam = cycle_type(f)
        if lam in out:
            continue
        g = [Pp.index[P_family.relabel(x, f.__getitem__)] for x in Pp.labels]
        out[lam] = signed_fixed_trace(Pp, g, variant)
    return out


def equivariant_euler(P_family, n, variant, N=None) -> SymFunc:
    """(1/n!) sum_sigma L(sigma) p_lambda(sigma), the weight-n part of
    sum_k (-1)^k Z_{H^k}."""
    N = N or max(n, DEFAULT_N)
    L = lefschetz_by_cycle_type(P_family, n, variant)
    terms = {}
    for lam, val in L.items():
        terms[lam] = Fraction(val * class_size(lam), factorial(n))
    return SymFunc(terms, N)


def class_size(lam):
    n = sum(lam)
    z = 1
    for k, m in Counter(lam).items():
        z *= k ** m * factorial(m)
    return factorial(n) // z


def character_top(P_family, n, variant):
    """Character of the top cohomology, assuming concentration in degree n-1:
    (-1)^(n-1) times the Lefschetz number, by cycle type."""
    return {lam: (-1) ** (n - 1) * v for lam, v in lefschetz_by_cycle_type(P_family, n, variant).items()}


# ---------------------------------------------------------------- registry

def _x(N):
    return EGFSeries.x(N)


def _g_as(N):
    x = _x(N)
    return x / (1 + x)


def _g_perm(N):
    return EGFSeries.from_function(lambda n: Fraction((-n) ** (n - 1), factorial(n)), N)


def _g_nac2(N):
    x = _x(N)
    return (1 + 2 * x - x * x).sqrt() - 1


def _g_nap(N):
    x = _x(N)
    return x * (-x).exp()


def _g_dias(N):
    return EGFSeries.from_function(
        lambda n: Fraction(-factorial(2 * n), factorial(n + 1)) * (-1) ** n / factorial(n), N)


def _g_trias(N):
    # (1 + 3x - sqrt(1 + 6x + x^2)) / (4x), computed one order higher then shifted
    x = _x(N + 1)
    num = 1 + 3 * x - (1 + 6 * x + x * x).sqrt()
    return EGFSeries([c / 4 for c in num.c[1:]], N)


def _g_diptere(N):
    x = _x(N)
    return (x + x * x) / (1 - x)


def _g_comtrias(N):
    x = _x(N)
    return ((1 + (1 + 4 * x).sqrt()) * Fraction(1, 2)).log()


def _g_dup(N):
    x = _x(N)
    return x / ((1 + x) * (1 + x))


def _g_tridup(N):
    x = _x(N)
    return -(1 / (1 + 2 * x)) + 1 / (1 + x)


def _g_wnp(N):
    x = _x(N)
    return (1 + x).log() - x * x / (1 + x)


def _g_ff6(N):
    x = _x(N)
    return x * (1 - 3 * x - x * x + x * x * x) / (1 + 3 * x + x * x - x * x * x)


def _c_as(N):
    x = _x(N)
    return x / (1 - x)


def _c_perm(N):
    x = _x(N)
    return x * x.exp()


def _c_nac2(N):
    x = _x(N)
    return 1 - (1 - 2 * x - x * x).sqrt()


def _c_dias(N):
    x = _x(N)
    return x / ((1 - x) * (1 - x))


@dataclass(frozen=True)
class RegistryEntry:
    key: str
    label: str
    printed_dual: str              # the -C_dual(-x) column as printed
    dual: object                   # N -> EGFSeries of G = -C_dual(-x)
    tab2: tuple = ()
    tab4: tuple = ()
    primal: object = None          # N -> EGFSeries of C_P, if registered
    species_left: str = None       # CLI family id for a direct check
    species_right: str = None
    asserted_left: bool = False    # formula proven for this operad (left-basic and Koszul)
    asserted_right: bool = False


REGISTRY = {e.key: e for e in [
    RegistryEntry("as", "As", "x/(1+x)", _g_as,
                  (1, -1, 1, -1, 1, -1, 1, -1, 1, -1),
                  (1, -1, 1, 1, -19, 151, -1091, 7841, -56519),
                  _c_as, "left:as", "right:as", True, True),
    RegistryEntry("perm", "Perm/Com2", "sum_{n>=1} (-n)^(n-1) x^n/n!", _g_perm,
                  (1, -3, 8, -133, 1521, -22184, 393681, -8233803),
                  (1, -1, 4, -27, 256, -3125, 46656, -823543),
                  _c_perm, None, "right:perm", False, True),
    RegistryEntry("nac2", "NAC2", "-1+sqrt(1+2x-x^2)", _g_nac2,
                  (1, -1, 1, -13, 61, -601, 5881, -73333, 1021861), (),
                  _c_nac2, "left:nac2", None, True, False),
    RegistryEntry("nap", "NAP", "x exp(-x)", _g_nap,
                  (1, -1, -2, 1, 11, 18, -41, -317, -680, 1767),
                  (1, -1, -2, 9, -4, -95, 414, 49, -10088, 55521)),
    RegistryEntry("dias", "Dias", "sum_{n>=1} -(2n)!/(n+1)! (-x)^n/n!", _g_dias,
                  (1, -3, 19, -183, 2371, -38703, 763099),
                  (0, -2, 6, -36, 480, -8400, 178920, -4534320), _c_dias),
    RegistryEntry("trias", "Trias", "(1+3x-sqrt(1+6x+x^2))/(4x)", _g_trias,
                  (1, -5, 49, -725, 14401, -360005, 10863889),
                  (1, -5, 49, -743, 15421, -407909, 13135165)),
    RegistryEntry("diptere", "Diptere/2as", "(x+x^2)/(1-x)", _g_diptere,
                  (1, 5, 25, 149, 1081, 9365, 94585, 1091669),
                  (1, 5, 25, 169, 1361, 12781, 136585, 1633745)),
    RegistryEntry("comtrias", "ComTrias", "log((1+sqrt(1+4x))/2)", _g_comtrias,
                  (1, -2, 12, -110, 1380, -22022, 426972, -9747950),
                  (1, -2, 12, -120, 1680, -30240, 665280)),
    RegistryEntry("dup", "Dup", "x/(1+x)^2", _g_dup,
                  (1, -3, 7, -15, 31, -63, 127, -255, 511, -1023),
                  (1, -3, 7, 1, -219, 2581, -22973, 162177, -554039)),
    RegistryEntry("tridup", "TriDup", "-1/(1+2x)+1/(1+x)", _g_tridup,
                  (1, -5, 25, -149, 1081, -9365, 94585, -1091669),
                  (1, -5, 25, -119, 301, 5611, -171275, 3574705)),
    RegistryEntry("wnp", "WNP", "log(1+x)-x^2/(1+x)", _g_wnp,
                  (1, -2, 0, -2, 0, -2, 0, -2, 0, -2, 0, -2, 0, -2, 0),
                  (1, -2, 0, 12, -60, 240, -840, 1680, 15120, -332640)),
    RegistryEntry("ff6", "FF6", "x(1-3x-x^2+x^3)/(1+3x+x^2-x^3)", _g_ff6,
                  (1, -11, 61, -467, 4381, -49091, 643021),
                  (1, -11, 61, -215, -1559, 62941, -1371131, 26310481)),
]}


def registry_entry(key):
    try:
        return REGISTRY[key.lower()]
    except KeyError:
        raise SeriesError("unknown registry key %r; known: %s" % (key, ", ".join(REGISTRY)))


def dual_series(key, N=DEFAULT_N) -> EGFSeries:
    return registry_entry(key).dual(N)


def dual_from_primal(key, N=DEFAULT_N):
    """G derived independently as the compositional inverse of the primal EGF."""
    e = registry_entry(key)
    if e.primal is None:
        return None
    return egf_comp_inverse(e.primal(N))


def table_rows(table, max_n=DEFAULT_N):
    """(label, printed dual, computed row, printed row) for tab2 (left) or tab4 (right)."""
    if table not in ("tab2", "tab4"):
        raise SeriesError("table must be tab2 or tab4")
    rows = []
    for e in REGISTRY.values():
        printed = e.tab2 if table == "tab2" else e.tab4
        if not printed:
            continue
        G = e.dual(max_n)
        f = mobius_left_egf(G) if table == "tab2" else mobius_right_egf(G)
        rows.append((e, f.int_counts(), tuple(printed[:max_n])))
    return rows
