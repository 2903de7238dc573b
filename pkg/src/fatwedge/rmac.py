"""The real moment-angle complex of K as an explicit cubical complex.

A face of the cube (D^1)^m is a pair sigma <= tau of subsets of [m]:
coordinates in sigma are pinned at -1, coordinates outside tau at +1, and the
|tau| - |sigma| coordinates in between are free.  The real moment-angle
complex consists of the faces with tau - sigma a face of K, and its fat wedge
filtration level i keeps the faces with |sigma| >= m - i.

Cells are stored as (sigma, tau) bitmask pairs; no geometric coordinates are
ever materialized, since homology only needs the cellular chain complex.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .complexes import SimplicialComplex, full_subcomplex, join, subsets_of, verts
from .homology import (ChainComplex, CoefficientRing, HomologyProfile, ZZ,
                       chain_homology, full_subcomplex_homology)

#: 3^m faces add up fast; refuse larger ground sets unless told otherwise.
DEFAULT_MAX_M = 12


@dataclass(frozen=True)
class CubeFace:
    """Cube face C_{sigma <= tau}; free coordinates are tau - sigma."""

    sigma: int
    tau: int

    @property
    def dim(self) -> int:
        return (self.tau & ~self.sigma).bit_count()

    def vertices(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        return verts(self.sigma), verts(self.tau)


@dataclass
class CubicalComplex:
    """Boundary-closed set of cube faces with a provenance tag."""

    m: int
    faces: dict[int, tuple[tuple[int, int], ...]]
    provenance: str
    _chain: ChainComplex | None = field(default=None, repr=False, compare=False)

    def counts(self) -> dict[int, int]:
        return {d: len(cells) for d, cells in sorted(self.faces.items())}

    def total_faces(self) -> int:
        return sum(len(cells) for cells in self.faces.values())

    def __contains__(self, st: tuple[int, int]) -> bool:
        s, t = st
        d = (t & ~s).bit_count()
        return st in self.faces.get(d, ())

    def is_boundary_closed(self) -> bool:
        for d, cells in self.faces.items():
            if d == 0:
                continue
            have = set(self.faces.get(d - 1, ()))
            for s, t in cells:
                for st2 in _cube_facets(s, t):
                    if st2 not in have:
                        return False
        return True


def _cube_facets(s: int, t: int):
    free = t & ~s
    while free:
        b = free & -free
        free ^= b
        yield (s, t ^ b)
        yield (s | b, t)


def build_rmac(K: SimplicialComplex, max_m: int = DEFAULT_MAX_M,
               allow_large: bool = False) -> CubicalComplex:
    """All cube faces C_{sigma <= tau} with tau - sigma a face of K."""
    if K.m > max_m and not allow_large:
        raise ValueError(f"m={K.m} exceeds the guardrail max_m={max_m}; "
                         f"pass allow_large=True to override")
    full = (1 << K.m) - 1
    by_dim: dict[int, list[tuple[int, int]]] = {}
    for mu in K.all_faces():
        d = mu.bit_count()
        rest = full & ~mu
        bucket = by_dim.setdefault(d, [])
        for s in subsets_of(rest):
            bucket.append((s, s | mu))
    faces = {d: tuple(sorted(cells)) for d, cells in by_dim.items()}
    return CubicalComplex(K.m, faces, provenance=f"rmac(m={K.m})")


def rmac_filtration(K: SimplicialComplex, i: int, max_m: int = DEFAULT_MAX_M,
                    allow_large: bool = False) -> CubicalComplex:
    """Fat wedge filtration level i: the faces of RZ_K with |sigma| >= m - i.

    Level 0 is the single vertex (-1, ..., -1); level m is all of RZ_K.
    """
    if not 0 <= i <= K.m:
        raise ValueError(f"filtration level {i} out of range 0..{K.m}")
    ambient = build_rmac(K, max_m=max_m, allow_large=allow_large)
    cut = K.m - i
    faces = {}
    for d, cells in ambient.faces.items():
        kept = tuple(st for st in cells if st[0].bit_count() >= cut)
        if kept:
            faces[d] = kept
    return CubicalComplex(K.m, faces, provenance=f"rmac_filtration(m={K.m}, i={i})")


def cubical_chain_complex(C: CubicalComplex) -> ChainComplex:
    """Augmented cellular chains of a cubical complex.

    The boundary of C_{sigma <= tau} alternates over the free coordinates in
    ascending order: the k-th smallest free coordinate j contributes
    (-1)^(k-1) * (C_{sigma <= tau-j} - C_{sigma+j <= tau}).
    """
    if C._chain is not None:
        return C._chain
    basis: dict[int, tuple] = {-1: (0,)}
    for d, cells in C.faces.items():
        basis[d] = cells
    index = {d: {cell: i for i, cell in enumerate(cells)}
             for d, cells in C.faces.items()}
    boundary: dict[int, list[dict[int, int]]] = {}
    if 0 in C.faces:
        boundary[0] = [{0: 1} for _ in C.faces[0]]
    for d in sorted(C.faces):
        if d == 0 or (d - 1) not in C.faces:
            continue
        low = index[d - 1]
        cols = []
        for s, t in C.faces[d]:
            col: dict[int, int] = {}
            free = t & ~s
            k = 0
            while free:
                b = free & -free
                free ^= b
                sign = 1 if k % 2 == 0 else -1
                i1 = low.get((s, t ^ b))
                i2 = low.get((s | b, t))
                if i1 is None or i2 is None:
                    raise ValueError("cubical complex is not boundary-closed")
                col[i1] = col.get(i1, 0) + sign
                col[i2] = col.get(i2, 0) - sign
                k += 1
            cols.append({i: v for i, v in col.items() if v})
        boundary[d] = cols
    cc = ChainComplex(basis, boundary)
    C._chain = cc
    return cc


def cubical_homology(C: CubicalComplex, ring: CoefficientRing = ZZ) -> HomologyProfile:
    """Reduced homology of the cubical complex (degree -1 materialized)."""
    return chain_homology(cubical_chain_complex(C), ring)


@dataclass(frozen=True)
class HochsterReport:
    """Comparison of H~_*(RZ_K) with the full-subcomplex homology sum."""

    ring: CoefficientRing
    lhs: HomologyProfile
    rhs: HomologyProfile
    equal: bool

    def to_json(self) -> dict:
        return {"ring": repr(self.ring), "equal": self.equal,
                "rmac_homology": self.lhs.to_json(),
                "subcomplex_sum": self.rhs.to_json()}


def hochster_identity_check(K: SimplicialComplex, ring: CoefficientRing = ZZ,
                            max_m: int = DEFAULT_MAX_M,
                            allow_large: bool = False) -> HochsterReport:
    """H~_q(RZ_K) vs the direct sum of H~_{q-1}(K_I) over nonempty I.

    Both sides are computed independently: the left from the cubical cell
    structure, the right from simplicial chains of every full subcomplex.
    """
    lhs = cubical_homology(build_rmac(K, max_m=max_m, allow_large=allow_large), ring)
    parts = []
    for imask in range(1, 1 << K.m):
        parts.append(full_subcomplex_homology(K, imask, ring).shifted(1))
    rhs = HomologyProfile.direct_sum(parts, ring)
    return HochsterReport(ring, lhs, rhs, lhs == rhs)


def rmac_face_counts_of_join(K1: SimplicialComplex, K2: SimplicialComplex) -> bool:
    """Product rule: |faces(RZ_{K1*K2})| = |faces(RZ_K1)| * |faces(RZ_K2)|."""
    a = build_rmac(K1).total_faces()
    b = build_rmac(K2).total_faces()
    c = build_rmac(join(K1, K2), max_m=K1.m + K2.m, allow_large=True).total_faces()
    return a * b == c
