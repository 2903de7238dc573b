"""Abstract simplicial complexes on a ground set [m] = {1, ..., m}.

Vertex sets are encoded as bitmasks: vertex i corresponds to bit i-1, so all
face operations are integer bit algebra.  Python ints double as dynamic
bitsets, so there is no size cliff at m = 64.  Simplices appearing in public
output are sorted tuples of vertices; the empty simplex is ().

A complex is stored by its facet family (inclusion-maximal faces).  The empty
complex {()} is legal (its only face is the empty simplex); the void complex,
with no faces at all, is rejected at construction.  Ghost vertices -- elements
of [m] that are not faces -- are allowed and preserved, because Alexander
duality and full-subcomplex bookkeeping are sensitive to the ambient set.

Complexes are immutable after construction and hashable; face enumeration is
memoized per dimension on first use, which is safe to share between threads
under the GIL (worst case the cache is filled twice with equal values).
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator


def mask_of(vertices: Iterable[int]) -> int:
    """Bitmask of a vertex set (vertices are 1-based)."""
    m = 0
    for v in vertices:
        m |= 1 << (v - 1)
    return m


def verts(mask: int) -> tuple[int, ...]:
    """Sorted vertex tuple of a bitmask."""
    out = []
    v = 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def subsets_of(mask: int) -> Iterator[int]:
    """All subsets of ``mask``, including ``mask`` itself and 0."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def _facet_sort_key(mask: int) -> tuple[int, ...]:
    return verts(mask)


class SimplicialComplex:
    """Immutable simplicial complex on the ground set [m], given by facets."""

    __slots__ = ("m", "facets", "_faces_by_dim", "_minimal_nonfaces",
                 "_full_sub_cache", "_hash", "__weakref__")

    def __init__(self, m: int, facets: Iterable[int], *, _trusted: bool = False):
        if m < 1:
            raise ValueError(f"ground set size must be >= 1, got m={m}")
        fl = list(facets)
        if not fl:
            raise ValueError("void complex rejected: a complex has at least the empty face")
        if not _trusted:
            full = (1 << m) - 1
            for f in fl:
                if f & ~full:
                    raise ValueError(f"facet {verts(f)} not contained in [{m}]")
            fl = _maximal(fl)
        self.m = m
        self.facets = tuple(sorted(set(fl), key=_facet_sort_key))
        self._faces_by_dim: dict[int, tuple[int, ...]] | None = None
        self._minimal_nonfaces: tuple[int, ...] | None = None
        self._full_sub_cache: dict[int, "SimplicialComplex"] = {}
        self._hash = hash((self.m, self.facets))

    # -- basic structure ---------------------------------------------------

    @property
    def dim(self) -> int:
        """Dimension; -1 for the empty complex {()}."""
        return max(f.bit_count() for f in self.facets) - 1

    @property
    def support(self) -> int:
        """Mask of vertices that are actually faces."""
        s = 0
        for f in self.facets:
            s |= f
        return s

    @property
    def vertices(self) -> tuple[int, ...]:
        return verts(self.support)

    @property
    def is_pure(self) -> bool:
        sizes = {f.bit_count() for f in self.facets}
        return len(sizes) == 1

    def has_face(self, mask: int) -> bool:
        return any(mask & ~f == 0 for f in self.facets)

    def _face_table(self) -> dict[int, tuple[int, ...]]:
        if self._faces_by_dim is None:
            seen: set[int] = set()
            for f in self.facets:
                for s in subsets_of(f):
                    seen.add(s)
            table: dict[int, list[int]] = {}
            for s in seen:
                table.setdefault(s.bit_count() - 1, []).append(s)
            self._faces_by_dim = {
                d: tuple(sorted(masks, key=_facet_sort_key))
                for d, masks in table.items()
            }
        return self._faces_by_dim

    def faces(self, dim: int) -> tuple[int, ...]:
        """All faces of the given dimension (-1 yields the empty simplex)."""
        return self._face_table().get(dim, ())

    def all_faces(self) -> Iterator[int]:
        table = self._face_table()
        for d in sorted(table):
            yield from table[d]

    def face_count(self) -> int:
        return sum(len(v) for v in self._face_table().values())

    def f_vector(self) -> tuple[int, ...]:
        """(f_-1, f_0, ..., f_dim) with f_-1 = 1."""
        return tuple(len(self.faces(d)) for d in range(-1, self.dim + 1))

    def components(self) -> tuple[int, ...]:
        """Vertex masks of the connected components (ghosts belong to none)."""
        parent: dict[int, int] = {v: v for v in verts(self.support)}

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for e in self.faces(1):
            a, b = verts(e)
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[ra] = rb
        comps: dict[int, int] = {}
        for v in parent:
            r = find(v)
            comps[r] = comps.get(r, 0) | (1 << (v - 1))
        return tuple(sorted(comps.values(), key=_facet_sort_key))

    def skeleton(self, k: int) -> "SimplicialComplex":
        """Subcomplex of faces of dimension <= k."""
        if k < -1:
            raise ValueError("skeleton dimension must be >= -1")
        if k >= self.dim:
            return self
        gens: set[int] = set()
        for f in self.facets:
            if f.bit_count() - 1 <= k:
                gens.add(f)
            else:
                for c in itertools.combinations(verts(f), k + 1):
                    gens.add(mask_of(c))
        return SimplicialComplex(self.m, _maximal(gens), _trusted=True)

    # -- value semantics ---------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, SimplicialComplex)
                and self.m == other.m and self.facets == other.facets)

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        fac = ",".join("{" + ",".join(map(str, verts(f))) + "}" for f in self.facets)
        return f"SimplicialComplex(m={self.m}, facets=[{fac}])"


def _maximal(masks: Iterable[int]) -> list[int]:
    """Inclusion-maximal elements of a family of masks."""
    ms = sorted(set(masks), key=lambda f: f.bit_count(), reverse=True)
    out: list[int] = []
    for f in ms:
        if not any(f & ~g == 0 for g in out):
            out.append(f)
    return out


# -- constructors ----------------------------------------------------------

def make_complex(m: int, generators: Iterable[Iterable[int]]) -> SimplicialComplex:
    """Complex on [m] generated by the given vertex sets (downward closure)."""
    if m < 1:
        raise ValueError(f"ground set size must be >= 1, got m={m}")
    masks = []
    for g in generators:
        gs = tuple(g)
        for v in gs:
            if not (1 <= v <= m):
                raise ValueError(f"vertex {v} out of range 1..{m}")
        masks.append(mask_of(gs))
    if not masks:
        return SimplicialComplex(m, (0,), _trusted=True)
    return SimplicialComplex(m, _maximal(masks), _trusted=True)


def simplex(m: int) -> SimplicialComplex:
    """The full simplex on [m]."""
    return SimplicialComplex(m, ((1 << m) - 1,), _trusted=True)


def boundary_of_simplex(m: int) -> SimplicialComplex:
    """Boundary of the full simplex on [m]; for m = 1 this is {()}."""
    if m == 1:
        return SimplicialComplex(1, (0,), _trusted=True)
    full = (1 << m) - 1
    return SimplicialComplex(m, tuple(full ^ (1 << i) for i in range(m)), _trusted=True)


def skeleton_of_simplex(m: int, k: int) -> SimplicialComplex:
    return simplex(m).skeleton(k)


def empty_complex(m: int) -> SimplicialComplex:
    return SimplicialComplex(m, (0,), _trusted=True)


# -- subcomplex operations -------------------------------------------------

def relabel_map(I: Iterable[int]) -> dict[int, int]:
    """Order-preserving bijection from a vertex set onto 1..|I|."""
    return {v: i + 1 for i, v in enumerate(sorted(set(I)))}


def full_subcomplex(K: SimplicialComplex, I: Iterable[int]) -> SimplicialComplex:
    """K_I = {faces of K contained in I}, re-indexed onto 1..|I|.

    The re-indexing is the order-preserving bijection given by relabel_map(I).
    I = () is allowed and yields {()} on a 1-element ground set, so that sums
    over all subsets have a uniform degenerate case.
    """
    Iset = sorted(set(I))
    for v in Iset:
        if not (1 <= v <= K.m):
            raise ValueError(f"vertex {v} not in ground set [{K.m}]")
    if not Iset:
        return empty_complex(1)
    imask = mask_of(Iset)
    cached = K._full_sub_cache.get(imask)
    if cached is not None:
        return cached
    restricted = _maximal(f & imask for f in K.facets)
    sub = SimplicialComplex(len(Iset), tuple(_compress(f, imask) for f in restricted),
                            _trusted=True)
    K._full_sub_cache[imask] = sub
    return sub


def _compress(mask: int, imask: int) -> int:
    """Relabel a subset of imask onto the low |imask| bits, order preserved."""
    out = 0
    pos = 0
    while imask:
        low = imask & -imask
        if mask & low:
            out |= 1 << pos
        pos += 1
        imask ^= low
    return out


def deletion(K: SimplicialComplex, sigma: Iterable[int]) -> SimplicialComplex:
    """dl_K(sigma) = K restricted to [m] - sigma (re-indexed onto 1..m-|sigma|)."""
    smask = mask_of(sigma)
    rest = verts(((1 << K.m) - 1) ^ smask)
    if not rest:
        raise ValueError("deletion of the whole ground set")
    return full_subcomplex(K, rest)


def link(K: SimplicialComplex, sigma: Iterable[int]) -> SimplicialComplex:
    """lk_K(sigma), on the ground set [m] - sigma re-indexed onto 1..m-|sigma|."""
    smask = mask_of(sigma)
    if not K.has_face(smask):
        raise ValueError(f"{verts(smask)} is not a face, link undefined")
    if smask == (1 << K.m) - 1:
        raise ValueError("link of the full ground set has an empty ambient set")
    rest = ((1 << K.m) - 1) ^ smask
    gens = _maximal(f & ~smask for f in K.facets if smask & ~f == 0)
    return SimplicialComplex(rest.bit_count(),
                             tuple(_compress(f, rest) for f in gens), _trusted=True)


def star(K: SimplicialComplex, v: int) -> SimplicialComplex:
    """st_K(v) = lk_K(v) * {v}, kept as a subcomplex of K on the same ground set."""
    if not K.has_face(1 << (v - 1)):
        raise ValueError(f"{v} is not a vertex of the complex")
    return SimplicialComplex(K.m, tuple(f for f in K.facets if f & (1 << (v - 1))),
                             _trusted=True)


def join(K1: SimplicialComplex, K2: SimplicialComplex) -> SimplicialComplex:
    """Join K1 * K2 on [m1 + m2]; K2's labels are shifted up by m1."""
    facets = tuple(f1 | (f2 << K1.m) for f1 in K1.facets for f2 in K2.facets)
    return SimplicialComplex(K1.m + K2.m, _maximal(facets), _trusted=True)


def cone(K: SimplicialComplex) -> SimplicialComplex:
    """Cone with apex vertex 1; K's labels are shifted up by 1."""
    return join(simplex(1), K)


def suspension(K: SimplicialComplex) -> SimplicialComplex:
    """Suspension with poles 1, 2; K's labels are shifted up by 2."""
    return join(boundary_of_simplex(2), K)


# -- non-faces and duality -------------------------------------------------

def minimal_nonfaces(K: SimplicialComplex) -> tuple[int, ...]:
    """Inclusion-minimal non-faces, sorted lexicographically by vertex tuple.

    M is a minimal non-face when M is not a face but M - v is one for every
    v in M; adding any returned M to K again yields a simplicial complex.
    """
    if K._minimal_nonfaces is not None:
        return K._minimal_nonfaces
    found: set[int] = set()
    universe = (1 << K.m) - 1
    for s in K.all_faces():
        gaps = universe & ~s
        while gaps:
            low = gaps & -gaps
            gaps ^= low
            cand = s | low
            if cand in found or K.has_face(cand):
                continue
            ok = True
            rem = cand
            while rem:
                b = rem & -rem
                rem ^= b
                if not K.has_face(cand ^ b):
                    ok = False
                    break
            if ok:
                found.add(cand)
    result = tuple(sorted(found, key=_facet_sort_key))
    K._minimal_nonfaces = result
    return result


def alexander_dual(K: SimplicialComplex, ambient: int | None = None) -> SimplicialComplex:
    """Alexander dual over the ambient set [ambient] (default [m]).

    The dual consists of all sigma with [ambient] - sigma not a face of K; its
    facets are the complements of the minimal non-faces of K.  The ambient set
    must contain every vertex of K.  The dual of the full simplex would be the
    void complex, which is not representable, so that case raises.
    """
    s = K.m if ambient is None else ambient
    if s < 1:
        raise ValueError("ambient set too small")
    if K.support & ~((1 << s) - 1):
        raise ValueError(f"ambient set [{s}] does not contain all vertices of K")
    L = K if s == K.m else SimplicialComplex(s, K.facets, _trusted=True)
    mnf = minimal_nonfaces(L)
    if not mnf:
        raise ValueError("Alexander dual of the full simplex is the void complex")
    full = (1 << s) - 1
    return SimplicialComplex(s, tuple(full ^ M for M in mnf), _trusted=True)


def with_ground(K: SimplicialComplex, m: int) -> SimplicialComplex:
    """The same facets viewed on a larger ground set [m] (adds ghost vertices)."""
    if m < K.m and (K.support & ~((1 << m) - 1)):
        raise ValueError("new ground set drops actual vertices")
    return SimplicialComplex(m, K.facets, _trusted=True)


# -- generated subcomplexes ------------------------------------------------

def generated_subcomplex(K: SimplicialComplex, i: int, mode: str = "at_least") -> SimplicialComplex:
    """Downward closure of the faces of dimension >= i (or exactly i)."""
    if i < 0:
        raise ValueError("generating dimension must be >= 0")
    if mode == "at_least":
        gens = [f for f in K.facets if f.bit_count() - 1 >= i]
    elif mode == "exactly":
        gens = list(K.faces(i))
    else:
        raise ValueError(f"unknown mode {mode!r}")
    if not gens:
        return empty_complex(K.m)
    return SimplicialComplex(K.m, _maximal(gens), _trusted=True)


# -- graphs: flagness and chordality ----------------------------------------

def _adjacency(G: SimplicialComplex) -> dict[int, set[int]]:
    adj: dict[int, set[int]] = {v: set() for v in verts(G.support)}
    for e in G.faces(1):
        a, b = verts(e)
        adj[a].add(b)
        adj[b].add(a)
    return adj


def flag_complex(G: SimplicialComplex) -> SimplicialComplex:
    """Flag complex of a graph: faces are the cliques.  Input must have dim <= 1."""
    if G.dim > 1:
        raise ValueError("flag_complex expects a complex of dimension <= 1")
    adj = _adjacency(G)
    if not adj:
        return empty_complex(G.m)
    cliques: list[int] = []

    def extend(r: set[int], p: set[int], x: set[int]) -> None:
        if not p and not x:
            cliques.append(mask_of(r))
            return
        pivot = max(p | x, key=lambda u: len(adj[u] & p))
        for v in list(p - adj[pivot]):
            extend(r | {v}, p & adj[v], x & adj[v])
            p.remove(v)
            x.add(v)

    extend(set(), set(adj), set())
    return SimplicialComplex(G.m, _maximal(cliques), _trusted=True)


def perfect_elimination_order(G: SimplicialComplex) -> tuple[int, ...] | None:
    """A perfect elimination order of the underlying graph, or None.

    Maximum cardinality search: repeatedly visit an unvisited vertex with the
    most visited neighbors; the reverse visit order is a perfect elimination
    order iff the graph is chordal.
    """
    if G.dim > 1:
        raise ValueError("chordality is defined for complexes of dimension <= 1")
    adj = _adjacency(G)
    vs = sorted(adj)
    if not vs:
        return ()
    weight = {v: 0 for v in vs}
    visited: set[int] = set()
    visit_order: list[int] = []
    for _ in vs:
        u = max((v for v in vs if v not in visited), key=lambda v: (weight[v], -v))
        visited.add(u)
        visit_order.append(u)
        for w in adj[u]:
            if w not in visited:
                weight[w] += 1
    elim = tuple(reversed(visit_order))
    pos = {v: i for i, v in enumerate(elim)}
    for v in elim:
        later = [w for w in adj[v] if pos[w] > pos[v]]
        if not later:
            continue
        u = min(later, key=lambda w: pos[w])
        if any(w != u and w not in adj[u] for w in later):
            return None
    return elim


def is_chordal(G: SimplicialComplex) -> bool:
    """True iff every minimal cycle of the graph has length at most 3."""
    return perfect_elimination_order(G) is not None


# -- neighborliness ----------------------------------------------------------

def max_neighborliness(K: SimplicialComplex) -> int:
    """Largest k such that every (k+1)-subset of [m] is a face.

    Equals (minimum cardinality of a minimal non-face) - 2; the full simplex
    has no non-face and returns m - 1, a missing singleton gives -1.
    """
    mnf = minimal_nonfaces(K)
    if not mnf:
        return K.m - 1
    return min(M.bit_count() for M in mnf) - 2


def is_k_neighborly(K: SimplicialComplex, k: int) -> bool:
    if k < 0:
        raise ValueError("neighborliness index must be >= 0")
    return k <= max_neighborliness(K)
