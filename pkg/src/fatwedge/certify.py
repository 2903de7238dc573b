"""Certificate pipeline for triviality of the fat wedge filtration, plus
wedge-decomposition reports of the associated polyhedral products.

The certifier tries sufficient conditions cheapest-first; each fired rule
carries machine-checkable evidence.  "nontrivial" is only ever concluded from
a Golodness obstruction (the decomposition forces all Tor products to vanish,
so a nonzero product is a genuine obstruction); failed searches alone yield
"unknown", because every implemented condition is sufficient, not necessary.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .complexes import (SimplicialComplex, flag_complex, full_subcomplex,
                        max_neighborliness, minimal_nonfaces,
                        perfect_elimination_order, verts)
from .criteria import (DEFAULT_BUDGET, FillingCertificate, ShellingOrder,
                       fill_search, is_dual_scm, is_dual_shellable,
                       is_homology_fillable)
from .homology import (CoefficientRing, GF, QQ, ZZ, HomologyProfile, dK,
                       full_subcomplex_homology)
from .tor import GolodVerdict, golod_via_join, golod_via_tor, torsion_primes

RULE_DIM = "DIM_GE_M_MINUS_2"
RULE_FLAG = "FLAG_CHORDAL"
RULE_LOW_DUAL = "LOW_DUAL_DIM"
RULE_NEIGHBORLY = "NEIGHBORLY_DK"
RULE_DUAL_SHELLABLE = "DUAL_SHELLABLE"
RULE_DUAL_SCM = "DUAL_SCM_Z"
RULE_FILLABLE = "ALL_FULLSUB_FILLABLE"
RULE_HOMOLOGY_FILLABLE = "ALL_FULLSUB_HOMOLOGY_FILLABLE"
RULE_NON_GOLOD = "NON_GOLOD_OBSTRUCTION"

#: evaluation order, cheapest first
RULE_ORDER = (RULE_DIM, RULE_FLAG, RULE_LOW_DUAL, RULE_NEIGHBORLY,
              RULE_DUAL_SHELLABLE, RULE_DUAL_SCM, RULE_FILLABLE,
              RULE_HOMOLOGY_FILLABLE)


@dataclass(frozen=True)
class GolodReport:
    """Aggregate Golodness verdict: the join oracle over Z plus the Tor
    oracle over Q and every relevant prime field."""

    golod: bool
    join_over_Z: GolodVerdict
    tor_over_Q: GolodVerdict
    tor_mod_p: tuple[tuple[int, GolodVerdict], ...]
    primes: tuple[int, ...]
    oracles_agree: bool
    witness_text: str | None

    def to_json(self) -> dict:
        return {
            "golod_over_Z": self.golod,
            "join_oracle_Z": self.join_over_Z.to_json(),
            "tor_oracle_Q": self.tor_over_Q.to_json(),
            "tor_oracle_mod_p": {str(p): v.to_json() for p, v in self.tor_mod_p},
            "primes_checked": list(self.primes),
            "oracles_agree": self.oracles_agree,
            "witness": self.witness_text,
        }


def golod_report(K: SimplicialComplex) -> GolodReport:
    """Golodness over Z in the decidable sense: over Q and over Z/p for every
    prime p dividing torsion of some full-subcomplex homology (2 and 3 are
    always included as a floor), plus the chain-level join oracle over Z."""
    primes = tuple(sorted(set(torsion_primes(K)) | {2, 3}))
    join_z = golod_via_join(K, ZZ)
    tor_q = golod_via_tor(K, QQ)
    tor_p = tuple((p, golod_via_tor(K, GF(p))) for p in primes)
    golod = join_z.golod and tor_q.golod and all(v.golod for _, v in tor_p)
    field_verdict = tor_q.golod and all(v.golod for _, v in tor_p)
    witness = None
    for v in (join_z, tor_q, *(v for _, v in tor_p)):
        if not v.golod:
            witness = v.witness_text
            break
    return GolodReport(golod, join_z, tor_q, tor_p, primes,
                       oracles_agree=(join_z.golod == field_verdict),
                       witness_text=witness)


@dataclass(frozen=True)
class TrivialityCertificate:
    verdict: str                  # "trivial" | "nontrivial" | "unknown"
    rule: str | None
    evidence: dict
    golod: GolodReport | None = None
    rules_run: tuple[tuple[str, str], ...] = ()

    def to_json(self) -> dict:
        out = {"verdict": self.verdict, "rule": self.rule,
               "evidence": self.evidence}
        if self.golod is not None:
            out["golod_report"] = self.golod.to_json()
        if self.rules_run:
            out["rules_run"] = {r: s for r, s in self.rules_run}
        return out


def _try_dim(K: SimplicialComplex, budget: int):
    if K.dim >= K.m - 2:
        return {"dim": K.dim, "m": K.m}
    return None


def _try_flag_chordal(K: SimplicialComplex, budget: int):
    if K.dim > 1:
        one = K.skeleton(1)
    else:
        one = K
    peo = perfect_elimination_order(one)
    if peo is None:
        return None
    if flag_complex(one) != K:
        return None
    return {"chordal": True, "elimination_order": list(peo)}


def _try_low_dual_dim(K: SimplicialComplex, budget: int):
    mnf = minimal_nonfaces(K)
    if not mnf:
        return None   # full simplex; the dimension rule has already fired
    dual_dim = K.m - min(M.bit_count() for M in mnf) - 1
    if 2 * dual_dim + 2 < K.m:
        return {"dual_dim": dual_dim, "m": K.m}
    return None


def _try_neighborly(K: SimplicialComplex, budget: int):
    d = dK(K)
    required = 0 if d is None else -(-d // 2)
    nb = max_neighborliness(K)
    if required <= 0 or nb >= required:
        return {"dK": d, "required_neighborliness": max(required, 0),
                "max_neighborliness": nb}
    return None


def _try_dual_shellable(K: SimplicialComplex, budget: int):
    res = is_dual_shellable(K, budget)
    if res.found:
        order: ShellingOrder = res.certificate
        return {"dual_shelling": [list(f) for f in order.facet_tuples()]}
    return None


def _try_dual_scm(K: SimplicialComplex, budget: int):
    if is_dual_scm(K, ZZ):
        return {"dual_scm_over_Z": True}
    return None


def _try_all_fillable(K: SimplicialComplex, budget: int):
    fillings = {}
    for imask in range(1, 1 << K.m):
        sub = full_subcomplex(K, verts(imask))
        res = fill_search(sub, "contractible_surrogate", budget=budget)
        if not res.found:
            return None
        cert: FillingCertificate = res.certificate
        if cert.nonfaces:
            fillings[str(list(verts(imask)))] = [list(t) for t in
                                                 cert.nonface_tuples()]
    return {"nontrivial_fillings": fillings}


def _try_all_homology_fillable(K: SimplicialComplex, budget: int):
    details = {}
    for imask in range(1, 1 << K.m):
        sub = full_subcomplex(K, verts(imask))
        verdict = is_homology_fillable(sub)
        if not verdict.certified:
            return None
        details[str(list(verts(imask)))] = verdict.status
    return {"full_subcomplexes": len(details)}


_RULES = {
    RULE_DIM: _try_dim,
    RULE_FLAG: _try_flag_chordal,
    RULE_LOW_DUAL: _try_low_dual_dim,
    RULE_NEIGHBORLY: _try_neighborly,
    RULE_DUAL_SHELLABLE: _try_dual_shellable,
    RULE_DUAL_SCM: _try_dual_scm,
    RULE_FILLABLE: _try_all_fillable,
    RULE_HOMOLOGY_FILLABLE: _try_all_homology_fillable,
}


def certify_fwf_trivial(K: SimplicialComplex, budget: int = DEFAULT_BUDGET,
                        all_rules: bool = False,
                        check_soundness: bool = True) -> TrivialityCertificate:
    """Run the sufficient conditions cheapest-first; fall back to a Golodness
    obstruction.  With all_rules=True every rule is force-run and its outcome
    recorded for cross-validation.

    A "trivial" verdict is sanity-checked against the Golod report (the
    decomposition implies Golodness), unless check_soundness is disabled.
    """
    fired_rule = None
    fired_evidence = None
    rules_run = []
    for name in RULE_ORDER:
        if fired_rule is not None and not all_rules:
            break
        ev = _RULES[name](K, budget)
        rules_run.append((name, "fired" if ev is not None else "not_fired"))
        if ev is not None and fired_rule is None:
            fired_rule = name
            fired_evidence = ev
    if fired_rule is not None:
        # triviality implies Golodness only when every element of [m] is a
        # vertex; ghost elements carry degree -1 classes invisible to the
        # (vacuously null) attaching maps
        ghost_free = K.support == (1 << K.m) - 1
        report = golod_report(K) if check_soundness and ghost_free else None
        if report is not None and not report.golod:
            raise AssertionError(
                f"soundness violation: rule {fired_rule} fired on a "
                f"non-Golod complex ({report.witness_text})")
        return TrivialityCertificate("trivial", fired_rule, fired_evidence,
                                     golod=report,
                                     rules_run=tuple(rules_run) if all_rules else ())
    report = golod_report(K)
    if not report.golod:
        return TrivialityCertificate(
            "nontrivial", RULE_NON_GOLOD,
            {"witness": report.witness_text}, golod=report,
            rules_run=tuple(rules_run) if all_rules else ())
    return TrivialityCertificate("unknown", None, {}, golod=report,
                                 rules_run=tuple(rules_run) if all_rules else ())


# -- wedge decomposition reports ------------------------------------------------

@dataclass(frozen=True)
class SpacePoincare:
    """Reduced Betti polynomial of one factor space (free homology only)."""

    betti: tuple[int, ...]

    def __post_init__(self):
        if any(b < 0 for b in self.betti):
            raise ValueError("Betti coefficients must be nonnegative")

    @staticmethod
    def sphere(n: int) -> "SpacePoincare":
        """S^n: a single reduced class in degree n (n = 0 is two points)."""
        return SpacePoincare((0,) * n + (1,))

    @staticmethod
    def from_string(s: str) -> "SpacePoincare":
        """Parse polynomials like "t^2", "1 + 2t^3", "2*t"."""
        coeffs: dict[int, int] = {}
        s = s.replace(" ", "")
        if not s:
            raise ValueError("empty Betti polynomial")
        for term in s.split("+"):
            mt = re.fullmatch(r"(\d+)?\*?(t(\^(\d+))?)?", term)
            if not mt or not term:
                raise ValueError(f"cannot parse Betti term {term!r}")
            coeff = int(mt.group(1)) if mt.group(1) else 1
            if mt.group(2) is None:
                deg = 0
            elif mt.group(4) is None:
                deg = 1
            else:
                deg = int(mt.group(4))
            coeffs[deg] = coeffs.get(deg, 0) + coeff
        top = max(coeffs)
        return SpacePoincare(tuple(coeffs.get(i, 0) for i in range(top + 1)))

    def poly_string(self) -> str:
        terms = []
        for i, c in enumerate(self.betti):
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                base = "t" if i == 1 else f"t^{i}"
                terms.append(base if c == 1 else f"{c}{base}")
        return " + ".join(terms) if terms else "0"


def _poly_mul(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return tuple(out)


@dataclass(frozen=True)
class WedgeSummand:
    subset: tuple[int, ...]
    profile: HomologyProfile

    def to_json(self) -> dict:
        return {"I": list(self.subset), "homology": self.profile.to_json()}


@dataclass(frozen=True)
class WedgeReport:
    """Per-subset homology of the wedge summands (suspension of the full
    subcomplex smashed with the factor spaces), their aggregate, the sphere
    list when everything is free, and whether the wedge decomposition is
    certified to hold before suspension."""

    ring: CoefficientRing
    summands: tuple[WedgeSummand, ...]
    aggregate: HomologyProfile
    sphere_list: tuple[int, ...] | None
    desuspended: bool
    certificate: TrivialityCertificate | None

    def poincare_polynomial(self) -> str:
        terms = []
        for q in self.aggregate.nonzero_degrees():
            b = self.aggregate.betti(q)
            if b:
                terms.append(f"{b}t^{q}" if b > 1 else f"t^{q}")
        return " + ".join(terms) if terms else "0"

    def wedge_string(self) -> str | None:
        if self.sphere_list is None:
            return None
        return " v ".join(f"S^{q}" for q in self.sphere_list) if self.sphere_list else "point"

    def to_json(self) -> dict:
        return {
            "ring": repr(self.ring),
            "summands": [s.to_json() for s in self.summands],
            "aggregate": self.aggregate.to_json(),
            "poincare_polynomial": self.poincare_polynomial(),
            "spheres": list(self.sphere_list) if self.sphere_list is not None else None,
            "wedge": self.wedge_string(),
            "desuspended": self.desuspended,
        }


def bbcg_summands(K: SimplicialComplex, spaces, ring: CoefficientRing = ZZ,
                  certificate: TrivialityCertificate | None = None) -> WedgeReport:
    """Homology of the wedge summands Sigma|K_I| smash X^I, one per nonempty
    subset I, with torsion of the subcomplex homology carried through the
    degree shifts.  Only nonzero summands are listed; the aggregate always
    sums all of them.

    spaces is one SpacePoincare per vertex.  The desuspended flag is true
    exactly when a triviality certificate with verdict "trivial" accompanies
    the report (one is computed if not supplied).
    """
    spaces = list(spaces)
    if len(spaces) != K.m:
        raise ValueError(f"need {K.m} factor spaces, got {len(spaces)}")
    summands = []
    torsion_free = True
    parts = []
    for imask in range(1, 1 << K.m):
        poly: tuple[int, ...] = (1,)
        rem = imask
        while rem:
            low = rem & -rem
            rem ^= low
            poly = _poly_mul(poly, tuple(spaces[low.bit_length() - 1].betti))
        if not any(poly):
            continue
        base = full_subcomplex_homology(K, imask, ring)
        if base.is_trivial():
            continue
        free: dict[int, int] = {}
        tors: dict[int, list[int]] = {}
        for s, c in enumerate(poly):
            if not c:
                continue
            for q, r in base.free.items():
                deg = q + 1 + s
                free[deg] = free.get(deg, 0) + c * r
            for q, ds in base.torsion.items():
                deg = q + 1 + s
                tors.setdefault(deg, []).extend(list(ds) * c)
        prof = HomologyProfile(ring, free, tors)
        if prof.is_trivial():
            continue
        if prof.torsion:
            torsion_free = False
        summand = WedgeSummand(verts(imask), prof)
        summands.append(summand)
        parts.append(prof)
    aggregate = HomologyProfile.direct_sum(parts, ring)
    spheres = None
    if torsion_free:
        out = []
        for q in aggregate.nonzero_degrees():
            out.extend([q] * aggregate.betti(q))
        spheres = tuple(out)
    if certificate is None:
        certificate = certify_fwf_trivial(K)
    return WedgeReport(ring, tuple(summands), aggregate, spheres,
                       desuspended=(certificate.verdict == "trivial"),
                       certificate=certificate)
