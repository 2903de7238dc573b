"""Exact reduced simplicial/cellular homology over Z, Q and Z/p.

Chain complexes are augmented: degree -1 holds the empty cell and the
augmentation boundary of every vertex is [empty], so every profile is reduced
homology and degree -1 genuinely exists (the empty complex has nontrivial
H in degree -1, which Hochster-type sums rely on).

Boundary matrices are kept column-sparse.  Bulk invariants (ranks, torsion
divisors) go through the sparse eliminator in ``snf``; homology bases with
representative cycles, needed for induced maps, use the dense transform-
carrying Smith form on the small complexes where maps are actually taken.

Everything here is a pure function of immutable inputs; results are memoized,
and a parallel map over subsets in ``dK`` would be schedule-independent.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .complexes import SimplicialComplex, full_subcomplex, verts
from .snf import (complex_rank_divisors, invariant_factors, is_prime,
                  smith_normal_form, sparse_rank_divisors)

# Tally of boundary-squared verifications, one entry per chain complex or
# Koszul piece constructed; the acceptance suite reads this to confirm the
# d^2 = 0 invariant was actually exercised everywhere.
DD_ZERO_CHECKS = {"chain_complexes": 0, "koszul_pieces": 0}


@dataclass(frozen=True)
class CoefficientRing:
    """Z, Q, or the prime field Z/p."""

    kind: str
    p: int | None = None

    def __post_init__(self):
        if self.kind not in ("Z", "Q", "Zp"):
            raise ValueError(f"unknown coefficient ring kind {self.kind!r}")
        if self.kind == "Zp":
            if self.p is None or not is_prime(self.p):
                raise ValueError(f"{self.p} is not prime")
        elif self.p is not None:
            raise ValueError("p only makes sense for Zp")

    @property
    def is_field(self) -> bool:
        return self.kind != "Z"

    def __repr__(self) -> str:
        return {"Z": "Z", "Q": "Q"}.get(self.kind) or f"Z/{self.p}"


ZZ = CoefficientRing("Z")
QQ = CoefficientRing("Q")


def GF(p: int) -> CoefficientRing:
    return CoefficientRing("Zp", p)


def ring_from_string(s: str) -> CoefficientRing:
    """Parse Z | Q | Zp:<p> (also accepts Z/<p>)."""
    s = s.strip()
    if s == "Z":
        return ZZ
    if s == "Q":
        return QQ
    for prefix in ("Zp:", "Z/"):
        if s.startswith(prefix):
            return GF(int(s[len(prefix):]))
    raise ValueError(f"cannot parse coefficient ring {s!r}")


class ChainComplex:
    """Finite chain complex with sparse integer boundary columns.

    basis[q] is the tuple of cell labels in degree q; boundary[q][j] maps the
    j-th cell of degree q to a {row: coeff} combination of degree q-1 cells.
    d(d(x)) = 0 is verified at construction and a violation raises.
    """

    __slots__ = ("basis", "boundary", "_index")

    def __init__(self, basis: Mapping[int, Sequence], boundary: Mapping[int, Sequence[dict]]):
        self.basis = {q: tuple(cells) for q, cells in basis.items() if len(cells) > 0}
        self.boundary = {q: tuple(cols) for q, cols in boundary.items()
                         if q in self.basis and (q - 1) in self.basis}
        self._index = None
        for q, cols in self.boundary.items():
            if len(cols) != len(self.basis[q]):
                raise ValueError(f"boundary in degree {q} has wrong column count")
        self._verify_dd_zero()
        DD_ZERO_CHECKS["chain_complexes"] += 1

    def _verify_dd_zero(self) -> None:
        for q, cols in self.boundary.items():
            lower = self.boundary.get(q - 1)
            if lower is None:
                continue
            for j, col in enumerate(cols):
                acc: dict[int, int] = {}
                for i, v in col.items():
                    for i2, v2 in lower[i].items():
                        acc[i2] = acc.get(i2, 0) + v * v2
                if any(acc.values()):
                    raise ValueError(f"d^2 != 0 at degree {q}, column {j}")

    @property
    def min_degree(self) -> int:
        return min(self.basis) if self.basis else 0

    @property
    def max_degree(self) -> int:
        return max(self.basis) if self.basis else -1

    def dim(self, q: int) -> int:
        return len(self.basis.get(q, ()))

    def index(self, q: int, label) -> int:
        if self._index is None:
            self._index = {qq: {lab: i for i, lab in enumerate(cells)}
                           for qq, cells in self.basis.items()}
        return self._index[q][label]


class HomologyProfile:
    """Reduced homology, per degree: free rank plus invariant-factor torsion."""

    __slots__ = ("ring", "free", "torsion")

    def __init__(self, ring: CoefficientRing,
                 free: Mapping[int, int] | None = None,
                 torsion: Mapping[int, Iterable[int]] | None = None):
        self.ring = ring
        self.free = {q: int(r) for q, r in (free or {}).items() if r}
        tors = {}
        for q, ds in (torsion or {}).items():
            chain = invariant_factors(ds)
            if chain:
                if ring.is_field:
                    raise ValueError("torsion is empty over a field")
                tors[q] = chain
        self.torsion = tors

    def betti(self, q: int) -> int:
        return self.free.get(q, 0)

    def torsion_at(self, q: int) -> tuple[int, ...]:
        return self.torsion.get(q, ())

    def is_trivial(self) -> bool:
        return not self.free and not self.torsion

    def is_trivial_up_to(self, i: int) -> bool:
        """No homology in degrees <= i (degree -1 included)."""
        return (all(q > i for q in self.free)
                and all(q > i for q in self.torsion))

    def nonzero_degrees(self) -> tuple[int, ...]:
        return tuple(sorted(set(self.free) | set(self.torsion)))

    def max_degree(self) -> int | None:
        degs = self.nonzero_degrees()
        return degs[-1] if degs else None

    def shifted(self, k: int) -> "HomologyProfile":
        return HomologyProfile(self.ring,
                               {q + k: r for q, r in self.free.items()},
                               {q + k: ds for q, ds in self.torsion.items()})

    def cohomology(self) -> "HomologyProfile":
        """Universal coefficients: free part fixed, torsion moves up a degree."""
        if self.ring.is_field:
            return self
        return HomologyProfile(self.ring, dict(self.free),
                               {q + 1: ds for q, ds in self.torsion.items()})

    @staticmethod
    def direct_sum(parts: Iterable["HomologyProfile"],
                   ring: CoefficientRing) -> "HomologyProfile":
        free: dict[int, int] = {}
        tors: dict[int, list[int]] = {}
        for p in parts:
            if p.ring != ring:
                raise ValueError("direct sum of profiles over different rings")
            for q, r in p.free.items():
                free[q] = free.get(q, 0) + r
            for q, ds in p.torsion.items():
                tors.setdefault(q, []).extend(ds)
        return HomologyProfile(ring, free, tors)

    def torsion_primes(self) -> tuple[int, ...]:
        from .snf import prime_factors
        ps: set[int] = set()
        for ds in self.torsion.values():
            for d in ds:
                ps.update(prime_factors(d))
        return tuple(sorted(ps))

    def to_json(self) -> list[dict]:
        out = []
        for q in self.nonzero_degrees():
            out.append({"degree": q, "free": self.betti(q),
                        "torsion": list(self.torsion_at(q))})
        return out

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, HomologyProfile) and self.ring == other.ring
                and self.free == other.free and self.torsion == other.torsion)

    def __hash__(self):
        return hash((self.ring, tuple(sorted(self.free.items())),
                     tuple(sorted(self.torsion.items()))))

    def __repr__(self) -> str:
        if self.is_trivial():
            return f"HomologyProfile({self.ring}: trivial)"
        bits = []
        for q in self.nonzero_degrees():
            parts = []
            if self.betti(q):
                parts.append(f"{self.ring}^{self.betti(q)}" if self.betti(q) > 1
                             else f"{self.ring}")
            parts.extend(f"Z/{d}" for d in self.torsion_at(q))
            bits.append(f"H~{q}=" + "+".join(parts))
        return f"HomologyProfile({'; '.join(bits)})"


# -- profiles of chain complexes --------------------------------------------

def chain_homology(cc: ChainComplex, ring: CoefficientRing) -> HomologyProfile:
    """Reduced homology profile of an augmented chain complex."""
    p = ring.p if ring.kind == "Zp" else None
    dims = {q: cc.dim(q) for q in cc.basis}
    ranks, divisors = complex_rank_divisors(cc.boundary, dims, p=p)
    free: dict[int, int] = {}
    torsion: dict[int, list[int]] = {}
    for q in cc.basis:
        b = cc.dim(q) - ranks.get(q, 0) - ranks.get(q + 1, 0)
        if b:
            free[q] = b
        if ring.kind == "Z":
            tors = [d for d in divisors.get(q + 1, ()) if d > 1]
            if tors:
                torsion[q] = tors
    return HomologyProfile(ring, free, torsion)


@lru_cache(maxsize=None)
def simplicial_chain_complex(K: SimplicialComplex) -> ChainComplex:
    """Augmented simplicial chains; d[v0..vq] = sum (-1)^i [v0..^vi..vq]."""
    basis: dict[int, tuple[int, ...]] = {}
    for d in range(-1, K.dim + 1):
        cells = K.faces(d)
        if cells:
            basis[d] = cells
    boundary: dict[int, list[dict[int, int]]] = {}
    for d in range(0, K.dim + 1):
        if d not in basis:
            continue
        lower_index = {f: i for i, f in enumerate(basis[d - 1])}
        cols = []
        for f in basis[d]:
            col: dict[int, int] = {}
            vs = verts(f)
            for i, v in enumerate(vs):
                sub = f ^ (1 << (v - 1))
                col[lower_index[sub]] = 1 if i % 2 == 0 else -1
            cols.append(col)
        boundary[d] = cols
    return ChainComplex(basis, boundary)


@lru_cache(maxsize=None)
def reduced_homology(K: SimplicialComplex, ring: CoefficientRing = ZZ) -> HomologyProfile:
    return chain_homology(simplicial_chain_complex(K), ring)


@lru_cache(maxsize=None)
def full_subcomplex_homology(K: SimplicialComplex, imask: int,
                             ring: CoefficientRing = ZZ) -> HomologyProfile:
    return reduced_homology(full_subcomplex(K, verts(imask)), ring)


def is_acyclic(K: SimplicialComplex, ring: CoefficientRing = ZZ) -> bool:
    return reduced_homology(K, ring).is_trivial()


def is_i_acyclic(K: SimplicialComplex, ring: CoefficientRing, i: int) -> bool:
    return reduced_homology(K, ring).is_trivial_up_to(i)


# -- homology dimension ------------------------------------------------------

def hodim(K: SimplicialComplex) -> int | None:
    """Largest q with H~_q(K; A) != 0 for some finitely generated A.

    Universal coefficients make this finite: a witness is either free rank in
    degree q or torsion in degree q or q-1, so hodim is the maximum of the
    free degrees and (torsion degrees + 1).  Returns None when the complex is
    acyclic against every coefficient group.
    """
    prof = reduced_homology(K, ZZ)
    cands = list(prof.free)
    cands.extend(q + 1 for q in prof.torsion)
    return max(cands) if cands else None


@lru_cache(maxsize=None)
def dK(K: SimplicialComplex) -> int | None:
    """max over nonempty I of hodim(K_I); None when every K_I is acyclic."""
    best: int | None = None
    for imask in range(1, 1 << K.m):
        h = hodim(full_subcomplex(K, verts(imask)))
        if h is not None and (best is None or h > best):
            best = h
    return best


# -- homology bases and induced maps -----------------------------------------

def _dense_boundary(cc: ChainComplex, q: int) -> list[list[int]]:
    nrows = cc.dim(q - 1)
    cols = cc.boundary.get(q, ())
    mat = [[0] * len(cols) for _ in range(nrows)]
    for j, col in enumerate(cols):
        for i, v in col.items():
            mat[i][j] = v
    return mat


class _FieldSpan:
    """Augmented echelon span over Q or Z/p with generator bookkeeping.

    Rows are (vector, coeffs) pairs kept in echelon form by leading index;
    vectors added as boundaries carry empty coeffs, homology generators carry
    a unit coefficient, so reducing an arbitrary cycle yields its class in
    generator coordinates.
    """

    def __init__(self, n: int, p: int | None, n_gens: int):
        self.n = n
        self.p = p
        self.n_gens = n_gens
        self.rows: dict[int, tuple[list, list]] = {}

    def _inv(self, a):
        return pow(a, -1, self.p) if self.p is not None else Fraction(1) / a

    def _reduce(self, vec: list, coeffs: list):
        p = self.p
        for lead in sorted(self.rows):
            if lead >= self.n:
                break
            c = vec[lead]
            if not c:
                continue
            rvec, rco = self.rows[lead]
            for k in range(lead, self.n):
                if rvec[k]:
                    vec[k] = (vec[k] - c * rvec[k]) % p if p is not None else vec[k] - c * rvec[k]
            for k in range(self.n_gens):
                if rco[k]:
                    coeffs[k] = (coeffs[k] - c * rco[k]) % p if p is not None else coeffs[k] - c * rco[k]
        return vec, coeffs

    def add(self, vec: list, coeffs: list) -> bool:
        """Insert into the span; returns False if vec was already in it."""
        vec, coeffs = self._reduce(list(vec), list(coeffs))
        lead = next((k for k in range(self.n) if vec[k]), None)
        if lead is None:
            return False
        inv = self._inv(vec[lead])
        p = self.p
        vec = [(x * inv) % p if p is not None else x * inv for x in vec]
        coeffs = [(x * inv) % p if p is not None else x * inv for x in coeffs]
        self.rows[lead] = (vec, coeffs)
        return True

    def class_of(self, vec: list):
        """Generator coordinates of a cycle; None if outside the span."""
        vec, coeffs = self._reduce(list(vec), [0] * self.n_gens)
        if any(vec):
            return None
        neg = [(-c) % self.p if self.p is not None else -c for c in coeffs]
        return neg


class HomologyBasis:
    """Generators with representative cycles for H_q(cc; ring), plus a
    class-coordinate map used to push chains into homology coordinates."""

    def __init__(self, cc: ChainComplex, ring: CoefficientRing, q: int):
        self.cc = cc
        self.ring = ring
        self.q = q
        self.n = cc.dim(q)
        if ring.kind == "Z":
            self._init_integral()
        else:
            self._init_field()

    # orders: 0 = infinite (free generator), d >= 2 = torsion of order d
    @property
    def rank(self) -> int:
        return len(self.orders)

    def _init_integral(self):
        cc, q = self.cc, self.q
        dq = smith_normal_form(_dense_boundary(cc, q)) if q in cc.boundary else None
        n = self.n
        if dq is not None:
            r = dq.rank
            vinv = dq.v_inv
            kernel_cols = [[dq.V[i][k] for i in range(n)] for k in range(r, n)]
        else:
            r = 0
            vinv = None
            kernel_cols = [[1 if i == k else 0 for i in range(n)] for k in range(n)]
        self._dq = dq
        self._kdim = len(kernel_cols)
        self._kernel = kernel_cols
        up = cc.boundary.get(q + 1, ())
        img = []
        for col in up:
            vec = [0] * n
            for i, v in col.items():
                vec[i] = v
            img.append(self._kernel_coords(vec))
        m = [[img[j][i] for j in range(len(img))] for i in range(self._kdim)]
        msnf = smith_normal_form(m)
        self._msnf = msnf
        gens = []
        orders = []
        for i in range(self._kdim):
            if i < msnf.rank:
                d = msnf.divisors[i]
                if d == 1:
                    continue
                orders.append(d)
            else:
                orders.append(0)
            coord = [msnf.u_inv[row][i] for row in range(self._kdim)]
            cycle = [sum(self._kernel[k][idx] * coord[k] for k in range(self._kdim))
                     for idx in range(n)]
            gens.append(cycle)
        self.generators = gens
        self.orders = orders

    def _kernel_coords(self, vec: list) -> list:
        dq = self._dq
        if dq is None:
            return list(vec)
        n = self.n
        y = [sum(dq.v_inv[i][j] * vec[j] for j in range(n)) for i in range(n)]
        if any(y[:dq.rank]):
            raise ValueError("chain is not a cycle")
        return y[dq.rank:]

    def _init_field(self):
        cc, q, ring = self.cc, self.q, self.ring
        p = ring.p if ring.kind == "Zp" else None
        n = self.n
        down = cc.boundary.get(q, ())
        up = cc.boundary.get(q + 1, ())
        # kernel of d_q over the field
        kernel = _field_kernel(down, cc.dim(q - 1), n, p)
        betti = len(kernel) - _field_rank(up, n, p)
        span = _FieldSpan(n, p, betti)
        for col in up:
            vec = [0] * n
            for i, v in col.items():
                vec[i] = v % p if p is not None else Fraction(v)
            span.add(vec, [0] * betti)
        gens = []
        for vec in kernel:
            idx = len(gens)
            coeffs = [0] * betti
            if idx < betti:
                coeffs[idx] = 1
            if span.add(vec, coeffs):
                gens.append(vec)
        if len(gens) != betti:
            raise AssertionError("field homology rank mismatch")
        self._span = span
        self.generators = gens
        self.orders = [0] * betti

    def class_coords(self, chain: Mapping[int, int]) -> list:
        """Coordinates of a cycle's class in the generator basis.

        Over Z the i-th coordinate is reduced mod the i-th generator's order
        (for torsion generators); the class is zero iff all coordinates are.
        """
        vec = [0] * self.n
        for i, v in chain.items():
            vec[i] = v
        if self.ring.kind == "Z":
            y = self._kernel_coords(vec)
            w = [sum(self._msnf.U[i][k] * y[k] for k in range(self._kdim))
                 for i in range(self._kdim)]
            out = []
            for i in range(self._kdim):
                if i < self._msnf.rank:
                    d = self._msnf.divisors[i]
                    if d == 1:
                        continue
                    out.append(w[i] % d)
                else:
                    out.append(w[i])
            return out
        p = self.ring.p if self.ring.kind == "Zp" else None
        fvec = [x % p if p is not None else Fraction(x) for x in vec]
        coords = self._span.class_of(fvec)
        if coords is None:
            raise ValueError("chain is not a cycle over the field")
        return coords

    def is_zero_class(self, chain: Mapping[int, int]) -> bool:
        return not any(self.class_coords(chain))


def _field_rank(cols, nrows: int, p: int | None) -> int:
    if not cols:
        return 0
    if p is not None:
        r, _ = sparse_rank_divisors(cols, nrows, p=p)
        return r
    r, _ = sparse_rank_divisors(cols, nrows)
    return r


def _field_kernel(cols, nrows: int, ncols: int, p: int | None) -> list[list]:
    """Kernel basis of a sparse integer matrix over Q or Z/p (dense output)."""
    if not cols:
        one = 1 if p is not None else Fraction(1)
        return [[one if i == k else 0 for i in range(ncols)] for k in range(ncols)]
    dense = [[0] * ncols for _ in range(nrows)]
    for j, col in enumerate(cols):
        for i, v in col.items():
            dense[i][j] = v % p if p is not None else Fraction(v)
    # column echelon on the augmented [A; I] to read kernel columns
    aug = [list(row) for row in dense] + \
          [[(1 if j == k else 0) for k in range(ncols)] for j in range(ncols)]
    # straightforward Gaussian elimination on columns
    lead_of_col: list[int | None] = [None] * ncols
    r = 0
    for i in range(nrows):
        piv = None
        for j in range(ncols):
            if lead_of_col[j] is None and aug[i][j]:
                piv = j
                break
        if piv is None:
            continue
        lead_of_col[piv] = i
        inv = pow(aug[i][piv], -1, p) if p is not None else Fraction(1) / aug[i][piv]
        for k in range(nrows + ncols):
            aug[k][piv] = aug[k][piv] * inv % p if p is not None else aug[k][piv] * inv
        for j in range(ncols):
            if j != piv and aug[i][j]:
                c = aug[i][j]
                for k in range(nrows + ncols):
                    if aug[k][piv]:
                        aug[k][j] = (aug[k][j] - c * aug[k][piv]) % p if p is not None \
                            else aug[k][j] - c * aug[k][piv]
        r += 1
    kernel = []
    for j in range(ncols):
        if lead_of_col[j] is None:
            kernel.append([aug[nrows + t][j] for t in range(ncols)])
    return kernel


@dataclass(frozen=True)
class InducedMap:
    """Matrix of H_q(A) -> H_q(B) in the deterministic homology bases."""

    degree: int
    matrix: tuple[tuple, ...]   # rows: target generators; int or Fraction entries
    source_orders: tuple[int, ...]
    target_orders: tuple[int, ...]

    @property
    def is_zero(self) -> bool:
        return all(not any(row) for row in self.matrix)


def _simplicial_chain_map(A: SimplicialComplex, B: SimplicialComplex,
                          vertex_map: Mapping[int, int] | None):
    """Per-degree columns of the chain map induced by a vertex map."""
    vmap = vertex_map or {v: v for v in range(1, A.m + 1)}
    ccA = simplicial_chain_complex(A)
    ccB = simplicial_chain_complex(B)
    out: dict[int, list[dict[int, int]]] = {}
    for q, cells in ccA.basis.items():
        cols = []
        for cell in cells:
            if q == -1:
                cols.append({ccB.index(-1, 0): 1})
                continue
            vs = verts(cell)
            imgs = [vmap[v] for v in vs]
            if len(set(imgs)) != len(imgs):
                raise ValueError("vertex map is not injective on a simplex")
            sign = _permutation_sign(imgs)
            tgt = 0
            for w in imgs:
                tgt |= 1 << (w - 1)
            if not B.has_face(tgt):
                raise ValueError(f"vertex map is not simplicial: image of "
                                 f"{vs} is not a face")
            cols.append({ccB.index(q, tgt): sign})
        out[q] = cols
    return ccA, ccB, out


def _permutation_sign(seq: Sequence[int]) -> int:
    inv = 0
    for i, j in itertools.combinations(range(len(seq)), 2):
        if seq[i] > seq[j]:
            inv += 1
    return -1 if inv % 2 else 1


def induced_map_on_homology(A: SimplicialComplex, B: SimplicialComplex,
                            ring: CoefficientRing, q: int,
                            vertex_map: Mapping[int, int] | None = None) -> InducedMap:
    """Matrix of H~_q(A; ring) -> H~_q(B; ring) for a simplicial vertex map.

    Bases are the ones produced by the homology engine (deterministic for the
    fixed simplex ordering); over Z the coordinates of torsion generators are
    reduced modulo their orders.  Over Q the rational coordinates of cycles
    with integer pushforwards are integers, and are returned as ints.
    """
    ccA, ccB, chain_map = _simplicial_chain_map(A, B, vertex_map)
    hb_a = HomologyBasis(ccA, ring, q)
    hb_b = HomologyBasis(ccB, ring, q)
    cols = []
    for gen in hb_a.generators:
        pushed: dict[int, int] = {}
        cmq = chain_map.get(q, [])
        for i, v in enumerate(gen):
            if not v:
                continue
            for tgt, s in cmq[i].items():
                pushed[tgt] = pushed.get(tgt, 0) + v * s
        cols.append(hb_b.class_coords(pushed))
    matrix = tuple(tuple(cols[j][i] for j in range(len(cols)))
                   for i in range(hb_b.rank))
    return InducedMap(q, matrix, tuple(hb_a.orders), tuple(hb_b.orders))


def is_zero_on_homology(A: SimplicialComplex, B: SimplicialComplex,
                        ring: CoefficientRing,
                        vertex_map: Mapping[int, int] | None = None,
                        degrees: Iterable[int] | None = None) -> bool:
    """True iff the induced map vanishes in every (given) degree."""
    if degrees is None:
        degrees = range(-1, A.dim + 1)
    src = reduced_homology(A, ring)
    for q in degrees:
        if src.betti(q) == 0 and not src.torsion_at(q):
            continue
        if not induced_map_on_homology(A, B, ring, q, vertex_map).is_zero:
            return False
    return True
