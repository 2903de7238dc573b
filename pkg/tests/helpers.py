"""Shared test utilities: seeded random inputs and independent oracles.

The oracles here deliberately avoid the library's optimized code paths: the
naive Smith reduction is a textbook smallest-entry elimination with an
explicit gcd/lcm chain repair, and the minor-gcd divisors come straight from
the determinant-divisor definition d_k = gcd of all k x k minors.
"""

from __future__ import annotations

import itertools
import random
from math import gcd

from fatwedge.complexes import make_complex


def random_complex(rng: random.Random, max_m: int = 7, min_m: int = 1):
    """Random complex on 1..max_m vertices, ghosts and empty complex allowed."""
    m = rng.randint(min_m, max_m)
    n_gens = rng.randint(0, 2 * m)
    gens = []
    for _ in range(n_gens):
        size = rng.randint(1, max(1, rng.randint(1, m)))
        gens.append(rng.sample(range(1, m + 1), size))
    return make_complex(m, gens)


def random_graph(rng: random.Random, max_m: int = 8, min_m: int = 2):
    """Random graph (all singletons present, so the vertex set is [m])."""
    m = rng.randint(min_m, max_m)
    p = rng.uniform(0.15, 0.9)
    gens = [[v] for v in range(1, m + 1)]
    for a, b in itertools.combinations(range(1, m + 1), 2):
        if rng.random() < p:
            gens.append([a, b])
    return make_complex(m, gens)


def random_matrix(rng: random.Random, max_n: int = 8, lo: int = -9, hi: int = 9):
    rows = rng.randint(1, max_n)
    cols = rng.randint(1, max_n)
    return [[rng.randint(lo, hi) for _ in range(cols)] for _ in range(rows)]


def naive_snf_divisors(matrix) -> tuple[int, ...]:
    """Textbook Smith reduction: repeatedly move a smallest-magnitude entry to
    the pivot, subtract multiples along its row and column until both are
    clear, then repair the divisibility chain pairwise via gcd/lcm."""
    A = [list(map(int, row)) for row in matrix]
    nrows = len(A)
    ncols = len(A[0]) if nrows else 0
    t = 0
    while t < min(nrows, ncols):
        piv = None
        for i in range(t, nrows):
            for j in range(t, ncols):
                if A[i][j] and (piv is None or abs(A[i][j]) < abs(A[piv[0]][piv[1]])):
                    piv = (i, j)
        if piv is None:
            break
        A[t], A[piv[0]] = A[piv[0]], A[t]
        for row in A:
            row[t], row[piv[1]] = row[piv[1]], row[t]
        while True:
            done = True
            for i in range(t + 1, nrows):
                if A[i][t]:
                    q = A[i][t] // A[t][t]
                    for k in range(t, ncols):
                        A[i][k] -= q * A[t][k]
                    if A[i][t]:
                        A[t], A[i] = A[i], A[t]
                        done = False
                        break
            if not done:
                continue
            for j in range(t + 1, ncols):
                if A[t][j]:
                    q = A[t][j] // A[t][t]
                    for k in range(t, nrows):
                        A[k][j] -= q * A[k][t]
                    if A[t][j]:
                        for row in A:
                            row[t], row[j] = row[j], row[t]
                        done = False
                        break
            if done:
                break
        t += 1
    diag = [abs(A[k][k]) for k in range(t)]
    changed = True
    while changed:
        changed = False
        for i in range(len(diag) - 1):
            a, b = diag[i], diag[i + 1]
            if b % a:
                g = gcd(a, b)
                diag[i], diag[i + 1] = g, a * b // g
                changed = True
        diag.sort()
    return tuple(diag)


def minor_gcd_divisors(matrix) -> tuple[int, ...]:
    """Divisors from the determinant-divisor definition (small matrices only):
    d_k = gcd of all k x k minors, and the k-th invariant factor is
    d_k / d_{k-1}."""
    nrows = len(matrix)
    ncols = len(matrix[0]) if nrows else 0
    gcds = [1]
    for k in range(1, min(nrows, ncols) + 1):
        g = 0
        for rows in itertools.combinations(range(nrows), k):
            for cols in itertools.combinations(range(ncols), k):
                sub = [[matrix[i][j] for j in cols] for i in rows]
                g = gcd(g, _det(sub))
                if g == 1:
                    break
            if g == 1:
                break
        if g == 0:
            break
        gcds.append(g)
    return tuple(gcds[k] // gcds[k - 1] for k in range(1, len(gcds)))


def _det(a) -> int:
    n = len(a)
    if n == 1:
        return a[0][0]
    total = 0
    for j in range(n):
        if a[0][j]:
            minor = [row[:j] + row[j + 1:] for row in a[1:]]
            total += (-1) ** j * a[0][j] * _det(minor)
    return total


def brute_force_faces(K) -> set[tuple[int, ...]]:
    """All faces by scanning every subset of the ground set."""
    from fatwedge.complexes import verts
    out = set()
    for mask in range(1 << K.m):
        if K.has_face(mask):
            out.add(verts(mask))
    return out
