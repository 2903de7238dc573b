"""Exact integer linear algebra: Smith normal form and sparse elimination.

Two engines share this module.  ``smith_normal_form`` is a dense
transform-carrying reduction used where kernel/cokernel bases are needed
(homology generators, induced maps); entries are Python ints, so there is no
overflow.  ``sparse_rank_divisors`` is a divisors-only sparse eliminator for
the bulk homology computations, where boundary matrices are large but almost
all pivots are units: unit pivots are eliminated with row operations only
(after the pivot's column is cleared, clearing its row touches nothing else),
and whatever remains is handed to the dense routine.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from math import gcd


@dataclass(frozen=True)
class SNFResult:
    """U @ A @ V = diag(divisors), with U, V unimodular.

    divisors is the nonzero diagonal d_1 | d_2 | ... | d_r (all positive);
    rank = r.  u_inv and v_inv are the inverses of U and V, accumulated during
    the reduction so callers never invert a matrix.
    """

    shape: tuple[int, int]
    divisors: tuple[int, ...]
    U: tuple[tuple[int, ...], ...]
    V: tuple[tuple[int, ...], ...]
    u_inv: tuple[tuple[int, ...], ...]
    v_inv: tuple[tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return len(self.divisors)


def _identity(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def smith_normal_form(matrix) -> SNFResult:
    """Smith normal form of an integer matrix (list of rows).

    Pivots on a smallest-magnitude nonzero entry and fully reduces its row and
    column before clearing, which keeps coefficient growth tame at desk scale.
    The divisibility chain d_1 | d_2 | ... is repaired at the end.
    """
    A = [list(map(int, row)) for row in matrix]
    nrows = len(A)
    ncols = len(A[0]) if nrows else 0
    if any(len(row) != ncols for row in A):
        raise ValueError("ragged matrix")
    U = _identity(nrows)
    Uinv = _identity(nrows)
    V = _identity(ncols)
    Vinv = _identity(ncols)

    def row_swap(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]
        for r in Uinv:
            r[i], r[j] = r[j], r[i]

    def col_swap(i, j):
        for r in A:
            r[i], r[j] = r[j], r[i]
        for r in V:
            r[i], r[j] = r[j], r[i]
        Vinv[i], Vinv[j] = Vinv[j], Vinv[i]

    def row_add(dst, src, c):
        # row_dst += c * row_src
        Ad, As = A[dst], A[src]
        for k in range(ncols):
            Ad[k] += c * As[k]
        Ud, Us = U[dst], U[src]
        for k in range(nrows):
            Ud[k] += c * Us[k]
        for r in Uinv:
            r[src] -= c * r[dst]

    def col_add(dst, src, c):
        # col_dst += c * col_src
        for r in A:
            r[dst] += c * r[src]
        for r in V:
            r[dst] += c * r[src]
        Vd, Vs = Vinv[dst], Vinv[src]
        for k in range(ncols):
            Vs[k] -= c * Vd[k]

    def row_negate(i):
        A[i] = [-x for x in A[i]]
        U[i] = [-x for x in U[i]]
        for r in Uinv:
            r[i] = -r[i]

    t = 0
    n = min(nrows, ncols)
    while t < n:
        # locate smallest nonzero entry in the trailing block
        best = None
        for i in range(t, nrows):
            Ai = A[i]
            for j in range(t, ncols):
                x = Ai[j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
                    if abs(x) == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        _, pi, pj = best
        if pi != t:
            row_swap(t, pi)
        if pj != t:
            col_swap(t, pj)
        if A[t][t] < 0:
            row_negate(t)
        # reduce until the pivot divides its whole row and column
        while True:
            p = A[t][t]
            dirty = False
            for i in range(t + 1, nrows):
                if A[i][t]:
                    q = A[i][t] // p
                    row_add(i, t, -q)
                    if A[i][t]:
                        row_swap(t, i)
                        if A[t][t] < 0:
                            row_negate(t)
                        dirty = True
                        break
            if dirty:
                continue
            for j in range(t + 1, ncols):
                if A[t][j]:
                    q = A[t][j] // p
                    col_add(j, t, -q)
                    if A[t][j]:
                        col_swap(t, j)
                        dirty = True
                        break
            if not dirty:
                break
        t += 1

    # repair the divisibility chain: fold d_j into d_i whenever d_i does not
    # divide d_j, using the classic 2x2 gcd trick
    rank = sum(1 for k in range(n) if k < nrows and k < ncols and A[k][k] != 0)
    changed = True
    while changed:
        changed = False
        for i in range(rank - 1):
            a, b = A[i][i], A[i + 1][i + 1]
            if b % a != 0:
                changed = True
                col_add(i, i + 1, 1)    # puts b into position (i+1, i)
                # re-reduce the 2x2 block at (i, i)
                while True:
                    p = A[i][i]
                    if A[i + 1][i] and A[i + 1][i] % p == 0:
                        row_add(i + 1, i, -(A[i + 1][i] // p))
                    elif A[i + 1][i]:
                        q = A[i + 1][i] // p
                        row_add(i + 1, i, -q)
                        row_swap(i, i + 1)
                        if A[i][i] < 0:
                            row_negate(i)
                        continue
                    if A[i][i + 1] and A[i][i + 1] % A[i][i] == 0:
                        col_add(i + 1, i, -(A[i][i + 1] // A[i][i]))
                    elif A[i][i + 1]:
                        q = A[i][i + 1] // A[i][i]
                        col_add(i + 1, i, -q)
                        col_swap(i, i + 1)
                        continue
                    break
                if A[i + 1][i + 1] < 0:
                    row_negate(i + 1)

    divisors = tuple(A[k][k] for k in range(rank))
    return SNFResult(
        shape=(nrows, ncols),
        divisors=divisors,
        U=tuple(tuple(r) for r in U),
        V=tuple(tuple(r) for r in V),
        u_inv=tuple(tuple(r) for r in Uinv),
        v_inv=tuple(tuple(r) for r in Vinv),
    )


# -- sparse divisors-only engine --------------------------------------------

def sparse_rank_divisors(columns, nrows: int, p: int | None = None):
    """Rank and diagonal divisors of a sparse integer matrix.

    columns is a sequence of {row: value} dicts.  With p = None the result is
    (rank over Q, invariant divisors over Z); with a prime p all arithmetic is
    mod p and the divisors are meaningless (rank only).

    Unit pivots (every nonzero entry, mod p) are eliminated greedily by
    Markowitz cost through a lazy heap; any integer residue without unit
    entries goes through the dense Smith reduction.
    """
    rows: dict[int, dict[int, int]] = {}
    cols: dict[int, dict[int, int]] = {}
    for j, col in enumerate(columns):
        for i, v in col.items():
            if p is not None:
                v %= p
            if v:
                rows.setdefault(i, {})[j] = v
                cols.setdefault(j, {})[i] = v
    unit_pivots = 0
    heap: list[tuple[int, int, int]] = []

    def cost(i: int, j: int) -> int:
        return (len(rows[i]) - 1) * (len(cols[j]) - 1)

    def push_candidates_of_row(i: int) -> None:
        for j, v in rows[i].items():
            if p is not None or v == 1 or v == -1:
                heapq.heappush(heap, (cost(i, j), i, j))

    for i in rows:
        push_candidates_of_row(i)

    while heap:
        c, pi, pj = heapq.heappop(heap)
        if pi not in rows or pj not in cols:
            continue
        v = rows[pi].get(pj)
        if v is None or (p is None and v not in (1, -1)):
            continue
        if c != cost(pi, pj):
            heapq.heappush(heap, (cost(pi, pj), pi, pj))
            continue
        # eliminate: clear column pj with row operations, then drop row/col
        if p is None:
            inv = v  # v is +-1
        else:
            inv = pow(v, -1, p)
        pivot_row = rows.pop(pi)
        for j in pivot_row:
            c2 = cols[j]
            del c2[pi]
            if not c2 and j != pj:
                del cols[j]
        col_entries = cols.pop(pj, {})
        for i2, w in col_entries.items():
            ri = rows[i2]
            del ri[pj]
            factor = (w * inv) if p is None else (w * inv) % p
            if not factor:
                if not ri:
                    del rows[i2]
                continue
            for j, pv in pivot_row.items():
                if j == pj:
                    continue
                nv = ri.get(j, 0) - factor * pv
                if p is not None:
                    nv %= p
                if nv:
                    if j not in ri:
                        cols.setdefault(j, {})[i2] = nv
                    else:
                        cols[j][i2] = nv
                    ri[j] = nv
                elif j in ri:
                    del ri[j]
                    del cols[j][i2]
                    if not cols[j]:
                        del cols[j]
            if ri:
                push_candidates_of_row(i2)
            else:
                del rows[i2]
        unit_pivots += 1

    if not rows:
        return (unit_pivots, (1,) * unit_pivots) if p is None else (unit_pivots, ())
    if p is not None:
        # all remaining entries are invertible mod p; the loop above cannot
        # leave any behind
        raise AssertionError("mod-p elimination left a nonempty residue")

    # dense residue
    rlist = sorted(rows)
    clist = sorted({j for i in rlist for j in rows[i]})
    cpos = {j: k for k, j in enumerate(clist)}
    dense = [[0] * len(clist) for _ in rlist]
    for a, i in enumerate(rlist):
        for j, v in rows[i].items():
            dense[a][cpos[j]] = v
    res = smith_normal_form(dense)
    divisors = (1,) * unit_pivots + res.divisors
    return unit_pivots + res.rank, divisors


# -- whole-complex reduction --------------------------------------------------

def complex_rank_divisors(boundaries, dims, p: int | None = None):
    """Ranks and divisors of every boundary matrix of a chain complex at once.

    boundaries maps degree q to the sparse columns of d_q (entries over the
    (q-1)-basis); dims maps degree to basis size.  Returns (ranks, divisors)
    dicts indexed by degree; with a prime p the divisors are empty.

    A unit entry <d(b), a> = +-1 is eliminated by column operations inside
    d_q alone; the cells a and b then split off as an acyclic summand, so row
    b of d_{q+1} and column a of d_{q-1} are deleted outright (their entries
    vanish in the adjusted basis because d^2 = 0).  This preserves all ranks
    and the homology, and on cell-complex boundary matrices it cascades until
    only a small non-unit residue is left for the dense Smith reduction.
    """
    col: dict[int, dict[int, dict[int, int]]] = {}
    row: dict[int, dict[int, dict[int, int]]] = {}
    for q, cols in boundaries.items():
        cq: dict[int, dict[int, int]] = {}
        rq: dict[int, dict[int, int]] = {}
        for b, column in enumerate(cols):
            entries = {}
            for a, v in column.items():
                if p is not None:
                    v %= p
                if v:
                    entries[a] = v
                    rq.setdefault(a, {})[b] = v
            if entries:
                cq[b] = entries
        if cq:
            col[q] = cq
            row[q] = rq
    pivots: dict[int, int] = {q: 0 for q in boundaries}
    heap: list[tuple[int, int, int, int]] = []

    def push_col(q: int, b: int) -> None:
        cq = col.get(q)
        if cq is None or b not in cq:
            return
        colb = cq[b]
        cb = len(colb) - 1
        rq = row[q]
        for a, v in colb.items():
            if p is not None or v == 1 or v == -1:
                heapq.heappush(heap, ((len(rq[a]) - 1) * cb, q, a, b))

    for q in col:
        for b in col[q]:
            push_col(q, b)

    def eliminate(q: int, a: int, b: int, u: int) -> None:
        pivots[q] += 1
        cq, rq = col[q], row[q]
        colb = cq.pop(b)
        for x in colb:
            rx = rq[x]
            del rx[b]
            if not rx:
                del rq[x]
        rowa = rq.pop(a, {})
        inv = u if p is None else pow(u, -1, p)
        for c, lam in rowa.items():
            colc = cq[c]
            del colc[a]
            factor = lam * inv if p is None else (lam * inv) % p
            for x, w in colb.items():
                if x == a:
                    continue
                nv = colc.get(x, 0) - factor * w
                if p is not None:
                    nv %= p
                if nv:
                    colc[x] = nv
                    rq.setdefault(x, {})[c] = nv
                elif x in colc:
                    del colc[x]
                    rx = rq[x]
                    del rx[c]
                    if not rx:
                        del rq[x]
            if colc:
                push_col(q, c)
            else:
                del cq[c]
        # adjacent matrices: pure deletions
        up_r = row.get(q + 1)
        if up_r is not None:
            rb = up_r.pop(b, None)
            if rb:
                up_c = col[q + 1]
                for e in rb:
                    ce = up_c[e]
                    del ce[b]
                    if not ce:
                        del up_c[e]
                    elif len(ce) == 1:
                        push_col(q + 1, e)
        down_c = col.get(q - 1)
        if down_c is not None:
            ca = down_c.pop(a, None)
            if ca:
                down_r = row[q - 1]
                for y in ca:
                    ry = down_r[y]
                    del ry[a]
                    if not ry:
                        del down_r[y]
                    elif len(ry) == 1:
                        ((b2, v2),) = ry.items()
                        if p is not None or v2 in (1, -1):
                            heapq.heappush(heap, (0, q - 1, y, b2))

    while heap:
        cost, q, a, b = heapq.heappop(heap)
        cq = col.get(q)
        if cq is None:
            continue
        colb = cq.get(b)
        if colb is None:
            continue
        v = colb.get(a)
        if v is None or (p is None and v not in (1, -1)):
            continue
        true_cost = (len(row[q][a]) - 1) * (len(colb) - 1)
        if true_cost > cost and true_cost > 16:
            heapq.heappush(heap, (true_cost, q, a, b))
            continue
        eliminate(q, a, b, v)

    ranks: dict[int, int] = {}
    divisors: dict[int, tuple[int, ...]] = {}
    for q in boundaries:
        r = pivots.get(q, 0)
        ds: tuple[int, ...] = (1,) * r
        cq = col.get(q)
        if cq:
            if p is not None:
                raise AssertionError("mod-p reduction left a nonempty residue")
            rows_left = sorted({a for colb in cq.values() for a in colb})
            apos = {a: i for i, a in enumerate(rows_left)}
            dense = [[0] * len(cq) for _ in rows_left]
            for j, b in enumerate(sorted(cq)):
                for a, v in cq[b].items():
                    dense[apos[a]][j] = v
            res = smith_normal_form(dense)
            r += res.rank
            ds = ds + res.divisors
        ranks[q] = r
        divisors[q] = ds
    return ranks, divisors


def invariant_factors(divisors) -> tuple[int, ...]:
    """Canonical invariant-factor chain of a multiset of cyclic orders > 1.

    Splits each order into prime powers and re-assembles d_1 | d_2 | ...;
    used when direct sums of torsion groups must be compared structurally.
    """
    powers: dict[int, list[int]] = {}
    for d in divisors:
        d = int(d)
        if d <= 1:
            continue
        for q in _prime_power_factors(d):
            pr = _prime_root(q)
            powers.setdefault(pr, []).append(q)
    if not powers:
        return ()
    for pr in powers:
        powers[pr].sort(reverse=True)
    depth = max(len(v) for v in powers.values())
    chain = []
    for k in range(depth):
        d = 1
        for pr, qs in powers.items():
            if k < len(qs):
                d *= qs[k]
        chain.append(d)
    return tuple(reversed(chain))


def _prime_power_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            q = 1
            while n % d == 0:
                q *= d
                n //= d
            out.append(q)
        d += 1
    if n > 1:
        out.append(n)
    return out


def _prime_root(q: int) -> int:
    d = 2
    while d * d <= q:
        if q % d == 0:
            return d
        d += 1
    return q


def prime_factors(n: int) -> tuple[int, ...]:
    return tuple(_prime_root(q) for q in _prime_power_factors(n))


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def gcd_of(values) -> int:
    g = 0
    for v in values:
        g = gcd(g, v)
        if g == 1:
            return 1
    return g
