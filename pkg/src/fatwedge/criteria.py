"""Combinatorial and homological criteria searches with checkable certificates.

Every search returns a tri-state SearchResult: found (with a certificate that
can be re-validated independently), none (the search space was exhausted and
no certificate exists), or exhausted (the node budget ran out first).
Contractibility is undecidable, so nothing here ever concludes "not fillable"
from a failed collapse search alone; refutations always come through an
acyclicity obstruction, which is a genuine invariant.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .complexes import (SimplicialComplex, alexander_dual, full_subcomplex,
                        generated_subcomplex, is_chordal, link, mask_of,
                        minimal_nonfaces, verts)
from .homology import (CoefficientRing, GF, ZZ, HomologyProfile, is_i_acyclic,
                       reduced_homology)

DEFAULT_BUDGET = 10 ** 6


@dataclass(frozen=True)
class ShellingOrder:
    facets: tuple[int, ...]

    def facet_tuples(self) -> list[tuple[int, ...]]:
        return [verts(f) for f in self.facets]


@dataclass(frozen=True)
class CollapseSequence:
    steps: tuple[tuple[int, int], ...]   # (free face, its unique coface)

    def step_tuples(self):
        return [(verts(s), verts(t)) for s, t in self.steps]


@dataclass(frozen=True)
class GcdOrder:
    nonfaces: tuple[int, ...]

    def nonface_tuples(self):
        return [verts(M) for M in self.nonfaces]


@dataclass(frozen=True)
class FillingCertificate:
    nonfaces: tuple[int, ...]
    mode: str                      # "contractible_surrogate" | "p_acyclic"
    p: int | None = None
    collapse: CollapseSequence | None = None
    collapse_target: str | None = None   # "filled" | "dual_of_filled"
    profile: HomologyProfile | None = None

    def nonface_tuples(self):
        return [verts(M) for M in self.nonfaces]


@dataclass(frozen=True)
class SearchResult:
    status: str                    # "found" | "none" | "exhausted"
    certificate: object | None = None
    nodes: int = 0

    @property
    def found(self) -> bool:
        return self.status == "found"


class _Budget:
    __slots__ = ("left",)

    def __init__(self, n: int):
        self.left = n

    def spend(self, n: int = 1) -> bool:
        self.left -= n
        return self.left >= 0


# -- shellability -------------------------------------------------------------

def _shelling_ok(f: int, placed: list[int]) -> bool:
    """Is <f> cut down by the placed facets in a pure codimension-one way?"""
    size = f.bit_count()
    caps = [f & g for g in placed]
    walls = [c for c in caps if c.bit_count() == size - 1]
    for c in caps:
        if not any(c & ~w == 0 for w in walls):
            return False
    return True


def shelling_search(K: SimplicialComplex, budget: int = DEFAULT_BUDGET) -> SearchResult:
    """Backtracking search for a shelling order of the facets.

    Candidates are tried in order of decreasing overlap with the union of the
    placed facets, and failed placed-sets are memoized (future feasibility
    only depends on the set, not the order that reached it).
    """
    facets = list(K.facets)
    t = len(facets)
    if t == 1:
        return SearchResult("found", ShellingOrder((facets[0],)), 1)
    b = _Budget(budget)
    failed: set[frozenset[int]] = set()
    order: list[int] = []
    budget_hit = False

    def extend(placed_set: frozenset[int], union: int) -> bool:
        nonlocal budget_hit
        if len(order) == t:
            return True
        if placed_set in failed:
            return False
        cands = [f for f in facets if f not in placed_set]
        cands.sort(key=lambda f: (-(f & union).bit_count(), verts(f)))
        for f in cands:
            if not b.spend():
                budget_hit = True
                return False
            if order and not _shelling_ok(f, order):
                continue
            order.append(f)
            if extend(placed_set | {f}, union | f):
                return True
            order.pop()
            if budget_hit:
                return False
        failed.add(placed_set)
        return False

    if extend(frozenset(), 0):
        return SearchResult("found", ShellingOrder(tuple(order)), budget - b.left)
    status = "exhausted" if budget_hit else "none"
    return SearchResult(status, None, budget - b.left)


def is_shelling(K: SimplicialComplex, order) -> bool:
    """Validate a facet ordering against the shelling condition."""
    facets = list(order)
    if sorted(facets) != sorted(K.facets):
        return False
    for k in range(1, len(facets)):
        if not _shelling_ok(facets[k], facets[:k]):
            return False
    return True


def spanning_facets(K: SimplicialComplex, order) -> tuple[int, ...]:
    """The facets whose arrival glues along their entire boundary.

    F_k is spanning when the intersection with the earlier complex is all of
    the boundary of F_k; the first facet is spanning only in the degenerate
    single-empty-facet complex.
    """
    facets = list(order)
    out = []
    for k, f in enumerate(facets):
        if k == 0:
            if f == 0:
                out.append(f)
            continue
        size = f.bit_count()
        ok = True
        rem = f
        while rem:
            v = rem & -rem
            rem ^= v
            wall = f ^ v
            if not any(wall & ~g == 0 for g in facets[:k]):
                ok = False
                break
        if ok:
            out.append(f)
    return tuple(out)


# -- Cohen-Macaulay conditions -------------------------------------------------

def is_scm(K: SimplicialComplex, ring: CoefficientRing = ZZ) -> bool:
    """Sequentially Cohen-Macaulay over the ring, by the link criterion:
    for every face s and every 0 <= i <= dim lk(s), the subcomplex of the
    link generated by faces of dimension >= i is (i-1)-acyclic."""
    full = (1 << K.m) - 1
    for s in K.all_faces():
        if s == full:
            continue
        lk = link(K, verts(s))
        for i in range(0, lk.dim + 1):
            Li = generated_subcomplex(lk, i, "at_least")
            if not is_i_acyclic(Li, ring, i - 1):
                return False
    return True


def is_cm(K: SimplicialComplex, ring: CoefficientRing = ZZ) -> bool:
    return K.is_pure and is_scm(K, ring)


def _dual_or_none(K: SimplicialComplex):
    try:
        return alexander_dual(K)
    except ValueError:
        return None   # K is the full simplex; its dual is void


def is_dual_scm(K: SimplicialComplex, ring: CoefficientRing = ZZ) -> bool:
    dual = _dual_or_none(K)
    if dual is None:
        return True   # vacuous: the void dual has no faces to test
    return is_scm(dual, ring)


def is_dual_shellable(K: SimplicialComplex, budget: int = DEFAULT_BUDGET) -> SearchResult:
    dual = _dual_or_none(K)
    if dual is None:
        return SearchResult("found", ShellingOrder(()), 0)
    return shelling_search(dual, budget)


# -- collapsibility -------------------------------------------------------------

def _face_set(K: SimplicialComplex) -> frozenset[int]:
    return frozenset(K.all_faces())


def _free_pairs(faces: frozenset[int]) -> list[tuple[int, int]]:
    pairs = []
    for s in faces:
        if s == 0:
            continue
        coface = None
        count = 0
        for t in faces:
            if t != s and s & ~t == 0:
                count += 1
                if count > 1:
                    break
                coface = t
        if count == 1:
            pairs.append((s, coface))
    pairs.sort(key=lambda p: (-p[1].bit_count(), verts(p[1]), verts(p[0])))
    return pairs


def collapse_search(K: SimplicialComplex, budget: int = DEFAULT_BUDGET) -> SearchResult:
    """Depth-first search for a collapse of K down to a single vertex.

    States (face sets) that failed are memoized.  "none" means full
    exhaustion and proves non-collapsibility, not non-contractibility.
    """
    start = _face_set(K)
    if len(start) == 2 and 0 in start:
        return SearchResult("found", CollapseSequence(()), 0)
    b = _Budget(budget)
    failed: set[frozenset[int]] = set()
    steps: list[tuple[int, int]] = []
    budget_hit = False

    def dfs(faces: frozenset[int]) -> bool:
        nonlocal budget_hit
        if len(faces) == 2 and 0 in faces:
            return True
        if faces in failed:
            return False
        for s, t in _free_pairs(faces):
            if not b.spend():
                budget_hit = True
                return False
            steps.append((s, t))
            if dfs(faces - {s, t}):
                return True
            steps.pop()
            if budget_hit:
                return False
        failed.add(faces)
        return False

    if dfs(start):
        return SearchResult("found", CollapseSequence(tuple(steps)), budget - b.left)
    return SearchResult("exhausted" if budget_hit else "none", None, budget - b.left)


def is_collapse_sequence(K: SimplicialComplex, seq: CollapseSequence) -> bool:
    faces = set(_face_set(K))
    for s, t in seq.steps:
        if s not in faces or t not in faces or s & ~t:
            return False
        cofaces = [u for u in faces if u != s and s & ~u == 0]
        if cofaces != [t]:
            return False
        faces.discard(s)
        faces.discard(t)
    return len(faces) == 2 and 0 in faces


# -- fillability ----------------------------------------------------------------

def _filled(K: SimplicialComplex, chosen) -> SimplicialComplex:
    gens = list(K.facets) + list(chosen)
    return SimplicialComplex(K.m, gens)


def fill_search(K: SimplicialComplex, mode: str = "contractible_surrogate",
                p: int | None = None,
                budget: int = DEFAULT_BUDGET) -> SearchResult:
    """Search for minimal non-faces whose addition satisfies the mode.

    Subsets are enumerated in size-lexicographic order, so the first hit is
    the canonical certificate.  For the contractible surrogate a filling must
    pass a collapse search, either of the filled complex itself or of its
    Alexander dual (dual collapsibility also certifies contractibility); a
    Z-acyclicity failure on every subset is the only refutation channel.
    """
    if mode not in ("contractible_surrogate", "p_acyclic"):
        raise ValueError(f"unknown fill mode {mode!r}")
    if mode == "p_acyclic" and p is None:
        raise ValueError("p_acyclic mode needs a prime")
    mnf = minimal_nonfaces(K)
    b = _Budget(budget)
    budget_hit = False
    unresolved = False
    for size in range(0, len(mnf) + 1):
        for combo in itertools.combinations(range(len(mnf)), size):
            if not b.spend():
                budget_hit = True
                break
            chosen = tuple(mnf[i] for i in combo)
            filled = _filled(K, chosen)
            if mode == "p_acyclic":
                prof = reduced_homology(filled, GF(p))
                if prof.is_trivial():
                    return SearchResult("found", FillingCertificate(
                        chosen, "p_acyclic", p=p, profile=prof),
                        budget - b.left)
                continue
            if not reduced_homology(filled, ZZ).is_trivial():
                continue
            res = collapse_search(filled, budget=b.left)
            b.spend(res.nodes)
            if res.found:
                return SearchResult("found", FillingCertificate(
                    chosen, "contractible_surrogate",
                    collapse=res.certificate, collapse_target="filled"),
                    budget - b.left)
            dual = _dual_or_none(filled)
            if dual is not None:
                res2 = collapse_search(dual, budget=b.left)
                b.spend(res2.nodes)
                if res2.found:
                    return SearchResult("found", FillingCertificate(
                        chosen, "contractible_surrogate",
                        collapse=res2.certificate,
                        collapse_target="dual_of_filled"),
                        budget - b.left)
                if res.status == "exhausted" or res2.status == "exhausted":
                    budget_hit = True
            unresolved = True
        if budget_hit:
            break
    if budget_hit or unresolved:
        return SearchResult("exhausted", None, budget - b.left)
    return SearchResult("refuted", None, budget - b.left)


def filling_from_dual_shelling(K: SimplicialComplex, order: ShellingOrder) -> FillingCertificate | None:
    """Filling by the complements of the spanning facets of a dual shelling,
    validated directly: each complement must be a minimal non-face and the
    filled complex must pass a collapse search (itself or its dual)."""
    dual = _dual_or_none(K)
    if dual is None:
        return FillingCertificate((), "contractible_surrogate",
                                  collapse=CollapseSequence(()),
                                  collapse_target="filled")
    if not is_shelling(dual, order.facets):
        return None
    full = (1 << K.m) - 1
    fills = tuple(sorted((full ^ f for f in spanning_facets(dual, order.facets)),
                         key=verts))
    mnf = set(minimal_nonfaces(K))
    if any(f not in mnf for f in fills):
        return None
    filled = _filled(K, fills)
    res = collapse_search(filled)
    if res.found:
        return FillingCertificate(fills, "contractible_surrogate",
                                  collapse=res.certificate,
                                  collapse_target="filled")
    d2 = _dual_or_none(filled)
    if d2 is not None:
        res = collapse_search(d2)
        if res.found:
            return FillingCertificate(fills, "contractible_surrogate",
                                      collapse=res.certificate,
                                      collapse_target="dual_of_filled")
    return None


# -- homology fillability --------------------------------------------------------

@dataclass(frozen=True)
class ComponentFillReport:
    vertices: tuple[int, ...]
    status: str                       # "certified" | "refuted" | "unknown"
    fillings_by_prime: tuple = ()     # ((label, nonface tuples) ...)
    refuted_at: str | None = None
    simply_connected_surrogate: bool | None = None
    chordal_one_skeleton: bool | None = None
    triangles_spanned: bool | None = None


@dataclass(frozen=True)
class HomologyFillableVerdict:
    status: str                       # "certified" | "refuted" | "unknown"
    components: tuple[ComponentFillReport, ...]

    @property
    def certified(self) -> bool:
        return self.status == "certified"


def is_homology_fillable(K: SimplicialComplex,
                         max_subsets: int = 1 << 14) -> HomologyFillableVerdict:
    """Per connected component: some filling must be Z/p-acyclic for every
    prime (decided through the finite torsion-prime set of the fillings, with
    Q as the proxy for all remaining primes), and simple connectivity of the
    completed component is certified by the chordal/flag surrogate.

    The surrogate checks the component completed by its minimal non-faces of
    dimension >= 2: its one-skeleton must be chordal and every 3-clique of
    that skeleton must span a 2-face, which makes the 2-skeleton agree with
    the contractible flag complex of a chordal graph.  A failed surrogate
    yields "unknown", never "refuted"; refutation only comes from homology.
    """
    comps = K.components()
    if not comps:
        # no vertices at all: the geometric realization is empty and there is
        # nothing to fill component-wise
        return HomologyFillableVerdict("certified", ())
    reports = []
    for cmask in comps:
        reports.append(_component_fill_report(full_subcomplex(K, verts(cmask)),
                                              verts(cmask), max_subsets))
    if any(r.status == "refuted" for r in reports):
        status = "refuted"
    elif any(r.status == "unknown" for r in reports):
        status = "unknown"
    else:
        status = "certified"
    return HomologyFillableVerdict(status, tuple(reports))


def _component_fill_report(L: SimplicialComplex, vertices, max_subsets) -> ComponentFillReport:
    mnf = minimal_nonfaces(L)
    r = len(mnf)
    if 1 << r > max_subsets:
        return ComponentFillReport(vertices, "unknown",
                                   refuted_at=None,
                                   simply_connected_surrogate=None)
    rank_zero: list[tuple[tuple[int, ...], HomologyProfile]] = []
    for size in range(0, r + 1):
        for combo in itertools.combinations(range(r), size):
            chosen = tuple(mnf[i] for i in combo)
            prof = reduced_homology(_filled(L, chosen), ZZ)
            if not prof.free:
                rank_zero.append((chosen, prof))
    if not rank_zero:
        return ComponentFillReport(vertices, "refuted", refuted_at="Q")
    primes = sorted({p for _, prof in rank_zero for p in prof.torsion_primes()})
    fillings = [("Q", [verts(M) for M in rank_zero[0][0]])]
    for p in primes:
        pick = next((chosen for chosen, prof in rank_zero
                     if p not in prof.torsion_primes()), None)
        if pick is None:
            return ComponentFillReport(vertices, "refuted", refuted_at=f"p={p}")
        fillings.append((f"p={p}", [verts(M) for M in pick]))
    chordal, spanned = _simply_connected_surrogate(L, mnf)
    ok = chordal and spanned
    return ComponentFillReport(vertices, "certified" if ok else "unknown",
                               fillings_by_prime=tuple(fillings),
                               simply_connected_surrogate=ok,
                               chordal_one_skeleton=chordal,
                               triangles_spanned=spanned)


def _simply_connected_surrogate(L: SimplicialComplex, mnf) -> tuple[bool, bool]:
    hat = _filled(L, [M for M in mnf if M.bit_count() >= 3])
    sk1 = hat.skeleton(1)
    chordal = is_chordal(sk1)
    spanned = True
    edges = set(sk1.faces(1))
    for trio in itertools.combinations(verts(hat.support), 3):
        a, b, c = trio
        e1, e2, e3 = mask_of((a, b)), mask_of((a, c)), mask_of((b, c))
        if e1 in edges and e2 in edges and e3 in edges:
            if not hat.has_face(mask_of(trio)):
                spanned = False
                break
    return chordal, spanned


# -- strong gcd-condition and weak shellability -----------------------------------

def is_strong_gcd_order(K: SimplicialComplex, order) -> bool:
    """Validate a strong gcd-order: every disjoint pair of minimal non-faces
    must have a third minimal non-face inside its union.  The witness may sit
    anywhere else in the order."""
    ms = list(order)
    if sorted(ms) != sorted(minimal_nonfaces(K)):
        return False
    r = len(ms)
    for i in range(r):
        for j in range(i + 1, r):
            if ms[i] & ms[j]:
                continue
            union = ms[i] | ms[j]
            if not any(k != i and k != j and ms[k] & ~union == 0
                       for k in range(r)):
                return False
    return True


def strong_gcd_search(K: SimplicialComplex) -> SearchResult:
    """Strong gcd-order of the minimal non-faces, or none.

    Since the witness constraint is position-free the condition depends only
    on the family: check all disjoint pairs and report the canonical order.
    A complex with at most one minimal non-face passes vacuously.
    """
    mnf = list(minimal_nonfaces(K))
    r = len(mnf)
    nodes = 0
    for i in range(r):
        for j in range(i + 1, r):
            if mnf[i] & mnf[j]:
                continue
            nodes += 1
            union = mnf[i] | mnf[j]
            if not any(k != i and k != j and mnf[k] & ~union == 0
                       for k in range(r)):
                return SearchResult("none", None, nodes)
    return SearchResult("found", GcdOrder(tuple(mnf)), nodes)


def is_weak_shelling(K: SimplicialComplex, order) -> bool:
    """Validate a weak shelling: whenever two facets cover the whole ground
    set, a third facet must contain their intersection (position-free; this
    is the Alexander-dual mirror of the strong gcd witness condition)."""
    ms = list(order)
    if sorted(ms) != sorted(K.facets):
        return False
    full = (1 << K.m) - 1
    r = len(ms)
    for j in range(r):
        for i in range(j):
            if ms[i] | ms[j] == full:
                cap = ms[i] & ms[j]
                if not any(k != i and k != j and cap & ~ms[k] == 0
                           for k in range(r)):
                    return False
    return True


def weak_shelling_search(K: SimplicialComplex) -> SearchResult:
    """Weak shelling of the facets, or none; implemented directly on the
    facet family for cross-validation against the dual gcd search."""
    facets = list(K.facets)
    full = (1 << K.m) - 1
    r = len(facets)
    nodes = 0
    for i in range(r):
        for j in range(i + 1, r):
            if facets[i] | facets[j] != full:
                continue
            nodes += 1
            cap = facets[i] & facets[j]
            if not any(k != i and k != j and cap & ~facets[k] == 0
                       for k in range(r)):
                return SearchResult("none", None, nodes)
    return SearchResult("found", ShellingOrder(tuple(facets)), nodes)
