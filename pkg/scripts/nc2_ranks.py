"""Brute-force ranks for the pointed-partition family nc2 next to the two
Catalan-indexed candidates n! C_n and n! C_(n-1), plus the check variant.

    python3 scripts/nc2_ranks.py [--n-max 4]
"""
import argparse
import time
from math import comb, factorial

from operadic_posets.catalog import get_family
from operadic_posets.cohomology import cohomology_Z, get_complex


def catalan(m):
    return comb(2 * m, m) // (m + 1)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n-max", type=int, default=4)
    n_max = ap.parse_args().n_max
    F = get_family("nc2")
    print("n\t|P|\th^(n-1)\tn!C_n\tn!C_(n-1)\tcheck_h^(n-1)\t(n-1)^(n-1)\tsecs")
    for n in range(1, n_max + 1):
        t0 = time.perf_counter()
        P = F.family_poset(n)
        h = cohomology_Z(get_complex(P, "minmax"))
        c = cohomology_Z(get_complex(P, "min"))
        print("%d\t%d\t%d\t%d\t%d\t%d\t%d\t%.1f" % (
            n, len(P), h.betti[n - 1], factorial(n) * catalan(n), factorial(n) * catalan(n - 1),
            c.betti[n - 1], (n - 1) ** (n - 1), time.perf_counter() - t0))


if __name__ == "__main__":
    main()
