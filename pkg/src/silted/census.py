"""Classification pipeline: enumerate, present, classify, deduplicate.

For a family (linear A, linear D, reversed-source D, reversed-source A
line) at a given rank, every basic 2-term silting complex is enumerated,
its endomorphism algebra presented, split into connected components, and
classified by global dimension:

    0 semisimple-point, 1 hereditary-tilted, 2 tilted, 3 strictly-shod.

Records are deduplicated by isomorphism of presentations (up to arrow
rescaling); the summary carries the class counts a_s / a_t / a_ss that
the reference tables pin down.
"""

import json
import os
from dataclasses import dataclass, field

from .arcatalog import knit_catalog
from .endo import TwoTermHomCalc, end_algebra
from .formulas import a_s_mu  # noqa: F401  (re-exported for the CLI)
from .quivers import (
    Path,
    QuiverWithRelations,
    are_isomorphic,
    b_reversed_quiver,
    connected_components,
    d_linear_quiver,
    d_reversed_quiver,
    global_dimension,
    is_gentle,
    is_gradable,
    is_string_algebra,
    iso_fingerprint,
    line_quiver,
    monomial_relation,
    qwr_to_json,
)
from .silting import (
    enumerate_tilting_modules,
    enumerate_two_term_silting,
    is_silting,
    is_two_term_tilting,
    silting_to_json,
    two_term,
)

FAMILIES = ("a", "d-linear", "d-reversed", "b")

COMPONENT_LABELS = {
    0: "semisimple-point",
    1: "hereditary-tilted",
    2: "tilted",
    3: "strictly-shod",
}


@dataclass(frozen=True)
class AlgebraSpec:
    family: str
    n: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.family in ("d-linear", "d-reversed") and self.n < 4:
            raise ValueError("D families need n >= 4")
        if self.family == "b" and self.n < 2:
            raise ValueError("the reversed line needs n >= 2")
        if self.n < 1:
            raise ValueError("n must be >= 1")


def family_quiver(spec):
    if spec.family == "a":
        return line_quiver(spec.n)
    if spec.family == "d-linear":
        return d_linear_quiver(spec.n)
    if spec.family == "d-reversed":
        return d_reversed_quiver(spec.n)
    return b_reversed_quiver(spec.n)


_catalog_memo = {}


def get_catalog(spec):
    key = (spec.family, spec.n)
    if key not in _catalog_memo:
        _catalog_memo[key] = knit_catalog(family_quiver(spec))
    return _catalog_memo[key]


# ---- per-record classification --------------------------------------------


@dataclass
class ComponentInfo:
    qwr: QuiverWithRelations
    gldim: int
    label: str
    is_string: bool
    is_gentle: bool


@dataclass
class ClassificationRecord:
    silting: object
    end: object
    components: list
    gldim: int
    family_label: str
    is_tilting_module: bool
    is_tilting_complex: bool
    iso_class: int = -1

    def to_json(self, cat):
        return {
            "silting": {
                "modules": [list(cat.dim_vector(x)) for x in self.silting.modules],
                "shifted": list(self.silting.shifted),
            },
            "end": self.end.to_json(),
            "components": [
                {
                    "quiver": qwr_to_json(c.qwr),
                    "gldim": c.gldim,
                    "label": c.label,
                    "isString": c.is_string,
                    "isGentle": c.is_gentle,
                }
                for c in self.components
            ],
            "gldim": self.gldim,
            "familyLabel": self.family_label,
            "isTiltingModule": self.is_tilting_module,
            "isTiltingComplex": self.is_tilting_complex,
            "isoClass": self.iso_class,
        }


@dataclass
class CensusSummary:
    family: str
    n: int
    n_silting: int
    n_tilting: int
    a_s: int
    a_t: int
    a_ss: int
    a_ht: int
    a_nht: int
    label_class_counts: dict
    overlaps: list = field(default_factory=list)

    def to_json(self):
        return {
            "family": self.family,
            "n": self.n,
            "siltingObjects": self.n_silting,
            "tiltingModules": self.n_tilting,
            "a_s": self.a_s,
            "a_t": self.a_t,
            "a_ss": self.a_ss,
            "a_ht": self.a_ht,
            "a_nht": self.a_nht,
            "labelClassCounts": dict(sorted(self.label_class_counts.items())),
            "labelOverlaps": self.overlaps,
        }


def lambda_family_label(cat, s):
    """Structural B-family assignment for the linear D census."""
    n = len(cat.q.vertices)
    sh = set(s.shifted)
    has_proj = any(cat.is_projective(x) for x in s.modules)
    if not sh or not has_proj:
        return "B1"
    mx = max(sh)
    if mx == 3:
        return "B6"
    if mx >= 4:
        return "B3"
    if sh == {1, 2}:
        return "B5"
    c = next(iter(sh))
    o = 2 if c == 1 else 1
    po = cat.proj(o)
    if po not in s.modules:
        return "unassigned"
    rest = [x for x in s.modules if x != po]
    tail = all(cat.indecs[x].dims[1] == 0 and cat.indecs[x].dims[2] == 0 for x in rest)
    right = all(cat.indecs[x].dims[n] == 0 for x in rest)
    if tail and not right:
        return "B4"
    if right and not tail:
        return "B2"
    if not tail and not right:
        return "B7"
    return "unassigned"


def gamma_case_label(cat, s):
    """Coarse case tag for the reversed-source D census."""
    n = len(cat.q.vertices)
    if n not in s.shifted:
        return "case-I"
    simple_n = cat.by_dim.get(tuple(1 if v == n else 0 for v in cat.q.vertices))
    if set(s.shifted) == {n} and simple_n not in s.modules:
        return "case-II"
    return "case-III"


def classify_record(cat, calc, s, spec):
    ep = end_algebra(s, cat, calc)
    comps = []
    for cq in connected_components(ep.qwr):
        g = global_dimension(cq)
        if g > 3:
            raise AssertionError("component with global dimension > 3 in a silted census")
        comps.append(
            ComponentInfo(cq, g, COMPONENT_LABELS[g], is_string_algebra(cq), is_gentle(cq))
        )
    gd = max((c.gldim for c in comps), default=0)
    if spec.family == "d-linear":
        label = lambda_family_label(cat, s)
        if gd == 3 and label != "B7":
            raise AssertionError("strictly shod record outside the B7 shape")
    elif spec.family == "d-reversed":
        label = "C14" if gd == 3 else gamma_case_label(cat, s)
    else:
        label = "unassigned"
    is_tilt_complex = is_two_term_tilting(s, cat)
    rec = ClassificationRecord(
        silting=s,
        end=ep,
        components=comps,
        gldim=gd,
        family_label=label,
        is_tilting_module=not s.shifted,
        is_tilting_complex=is_tilt_complex,
    )
    if is_tilt_complex and gd > 2:
        raise AssertionError("2-term tilting complex with gldim > 2")
    return rec


class _Dedup:
    """Isomorphism classes of presentations, bucketed by fingerprint."""

    def __init__(self):
        self.buckets = {}
        self.reps = []

    def locate(self, qwr):
        fp = iso_fingerprint(qwr)
        for idx in self.buckets.get(fp, []):
            if are_isomorphic(qwr, self.reps[idx]):
                return idx, False
        idx = len(self.reps)
        self.reps.append(qwr)
        self.buckets.setdefault(fp, []).append(idx)
        return idx, True


def classify_family(spec, n_cap=9):
    """Full census: classification records plus aggregate summary."""
    if spec.n > n_cap:
        raise ValueError(f"n={spec.n} exceeds the enumeration cap {n_cap}")
    cat = get_catalog(spec)
    calc = TwoTermHomCalc(cat)
    silts = enumerate_two_term_silting(cat)
    records = [classify_record(cat, calc, s, spec) for s in silts]
    dedup = _Dedup()
    for rec in records:
        rec.iso_class, _ = dedup.locate(rec.end.qwr)
    n_classes = len(dedup.reps)
    class_records = {}
    for rec in records:
        class_records.setdefault(rec.iso_class, []).append(rec)
    tilt_classes = {rec.iso_class for rec in records if rec.is_tilting_module}
    ss_classes = {c for c, recs in class_records.items() if recs[0].gldim == 3}
    for c, recs in class_records.items():
        if len({r.gldim for r in recs}) != 1:
            raise AssertionError("records in one isomorphism class disagree on gldim")
    ht_classes = {
        rec.iso_class
        for rec in records
        if rec.is_tilting_module and not rec.end.qwr.relations
    }
    label_counts = {}
    overlaps = []
    for c, recs in class_records.items():
        labels = sorted({r.family_label for r in recs})
        for lab in labels:
            label_counts[lab] = label_counts.get(lab, 0) + 1
        if len(labels) > 1:
            overlaps.append({"isoClass": c, "labels": labels})
    summary = CensusSummary(
        family=spec.family,
        n=spec.n,
        n_silting=len(silts),
        n_tilting=sum(1 for r in records if r.is_tilting_module),
        a_s=n_classes,
        a_t=len(tilt_classes),
        a_ss=len(ss_classes),
        a_ht=len(ht_classes),
        a_nht=len(tilt_classes) - len(ht_classes),
        label_class_counts=label_counts,
        overlaps=sorted(overlaps, key=lambda d: d["isoClass"]),
    )
    return records, summary


def _staggered_overlap(qwr):
    """Two monomial relations whose arrow words overlap with a proper stagger."""
    mono = [r.terms[0][1].arrows for r in qwr.relations if r.is_monomial()]
    for i, p in enumerate(mono):
        for q in mono:
            if p == q:
                continue
            for t in range(1, len(p)):
                if p[t:] == q[: len(p) - t]:
                    return True
    return False


def strictly_shod_census(spec, shape_check=None):
    """Records whose End has a gldim-3 component, deduplicated.

    For the linear D family every flagged record is checked against the
    construction shape (one shifted fork vertex, the other fork projective
    present, both wings occupied, an overlapping pair of zero relations)
    and the string property; for the reversed family the shape check is
    reported, not asserted.
    """
    if spec.family not in ("d-linear", "d-reversed"):
        raise ValueError("strictly shod census applies to the D families")
    if shape_check is None:
        shape_check = spec.family == "d-linear"
    cat = get_catalog(spec)
    calc = TwoTermHomCalc(cat)
    flagged = []
    for s in enumerate_two_term_silting(cat):
        ep = end_algebra(s, cat, calc)
        comps = connected_components(ep.qwr)
        gds = [global_dimension(c) for c in comps]
        g = max(gds)
        if g > 3:
            raise AssertionError("component with global dimension > 3")
        if g != 3:
            continue
        for cq, cg in zip(comps, gds):
            if cg == 3 and not is_string_algebra(cq):
                raise AssertionError("strictly shod component is not a string algebra")
        if shape_check:
            if lambda_family_label(cat, s) != "B7":
                raise AssertionError("strictly shod record outside the expected shape")
            if not _staggered_overlap(ep.qwr):
                raise AssertionError("strictly shod record lacks overlapping zero relations")
        flagged.append((s, ep))
    dedup = _Dedup()
    out = []
    for s, ep in flagged:
        idx, new = dedup.locate(ep.qwr)
        out.append((s, ep, idx))
    return out, len(dedup.reps)


# ---- survival counts up to the fork symmetry -------------------------------


def fork_orbit_count(cat, objs):
    """Module-set count identifying the two fork vertices of a D quiver."""
    verts = list(cat.q.vertices)
    if verts[:2] != [1, 2]:
        raise ValueError("fork orbit counting expects vertices 1, 2 up front")
    seen = set()
    orbits = 0
    for t in objs:
        key = tuple(sorted(cat.dim_vector(x) for x in t.modules)) + (tuple(t.shifted),)
        if key in seen:
            continue
        dims = [list(cat.dim_vector(x)) for x in t.modules]
        twin_mods = tuple(sorted(tuple([d[1], d[0]] + d[2:]) for d in dims))
        twin_sh = tuple(sorted({1: 2, 2: 1}.get(v, v) for v in t.shifted))
        seen.add(key)
        seen.add(twin_mods + (twin_sh,))
        orbits += 1
    return orbits


def tm_lambda_enumerated(spec, m):
    """Fork-orbit count of tilting modules surviving m inverse translates."""
    cat = get_catalog(spec)
    tilts = enumerate_tilting_modules(cat)
    surviving = [
        t for t in tilts if all(cat.tau_inv_iterated(x, m) is not None for x in t.modules)
    ]
    return fork_orbit_count(cat, surviving)


def delta_enumerated(spec):
    """Tilting modules of the linear A family grouped by rightmost slice."""
    cat = get_catalog(spec)
    out = [0] * len(cat.q.vertices)
    for t in enumerate_tilting_modules(cat):
        out[max(cat.indecs[x].slice for x in t.modules)] += 1
    return out


# ---- star operator ----------------------------------------------------------


def star_map(n):
    """The summand-level bijection between the reversed and linear windows.

    Returns (gamma catalog, lambda catalog, star) where star sends a
    silting object over the reversed quiver to one over the linear quiver:
    reflection on modules, the simple at the reversed vertex trades places
    with the shifted projective there.
    """
    gcat = get_catalog(AlgebraSpec("d-reversed", n))
    lcat = get_catalog(AlgebraSpec("d-linear", n))
    simple_n = gcat.by_dim[tuple(1 if v == n else 0 for v in gcat.q.vertices)]

    def reflect(x):
        d = list(gcat.dim_vector(x))
        nd = tuple(d[: n - 1] + [d[n - 2] - d[n - 1]])
        return lcat.by_dim[nd]

    def star(s):
        mods, shifts = [], []
        for x in s.modules:
            if x == simple_n:
                shifts.append(n)
            else:
                mods.append(reflect(x))
        for v in s.shifted:
            if v == n:
                mods.append(lcat.proj(n))
            else:
                shifts.append(v)
        return two_term(mods, shifts)

    return gcat, lcat, star


def star_crosscheck(n):
    """Verify the star bijection between the two D-family silting sets."""
    gcat, lcat, star = star_map(n)
    gs = enumerate_two_term_silting(gcat)
    ls = set(enumerate_two_term_silting(lcat))
    images = set()
    for s in gs:
        t = star(s)
        if not is_silting(t, lcat):
            return {"ok": False, "reason": f"image of {s} is not silting"}
        images.add(t)
    ok = len(images) == len(gs) and images == ls
    return {"ok": ok, "gammaCount": len(gs), "lambdaCount": len(ls), "matched": len(images)}


# ---- realization complexes --------------------------------------------------


def expected_realization_end(n):
    """The D_n line-with-fork quiver with the single cubic zero relation."""
    q = d_linear_quiver(n)
    return QuiverWithRelations(q, [monomial_relation(Path(5, 1, (4, 3, 1)))])


def realization_complex(orientation, n):
    """The explicit 2-term tilting complex whose heart detects the
    realization-functor failure, with its verification report.

    orientation 'linear': tau^{-1}P(1) + sum_{i>=5} tau^{-1}P(i) + I(2)
    + I(n-1) + the shifted projective P(n)[1].  orientation 'reversed':
    tau^{-2}P(1) + sum_{5<=i<n} tau^{-2}P(i) + tau^{-1}P(n) + P(2)[1]
    + P(n-1)[1] + P(n)[1].
    """
    if n < 5:
        raise ValueError("the realization construction needs n >= 5")
    if orientation == "linear":
        spec = AlgebraSpec("d-linear", n)
        cat = get_catalog(spec)
        mods = [cat.tau_inv(cat.proj(1))]
        mods += [cat.tau_inv(cat.proj(i)) for i in range(5, n + 1)]
        mods += [cat.inj(2), cat.inj(n - 1)]
        s = two_term(mods, [n])
    elif orientation == "reversed":
        spec = AlgebraSpec("d-reversed", n)
        cat = get_catalog(spec)
        t2 = lambda x: cat.tau_inv(cat.tau_inv(x))
        mods = [t2(cat.proj(1))]
        mods += [t2(cat.proj(i)) for i in range(5, n)]
        mods.append(cat.tau_inv(cat.proj(n)))
        s = two_term(mods, [2, n - 1, n])
    else:
        raise ValueError("orientation must be 'linear' or 'reversed'")
    ep = end_algebra(s, cat)
    expected = expected_realization_end(n)
    report = {
        "orientation": orientation,
        "n": n,
        "isSilting": is_silting(s, cat),
        "isTiltingComplex": is_two_term_tilting(s, cat),
        "endMatchesExpected": are_isomorphic(ep.qwr, expected),
        "gradable": is_gradable(ep.qwr.quiver),
        "relationCount": len(ep.qwr.relations),
        "relationLengths": sorted(
            {p.length for r in ep.qwr.relations for _c, p in r.terms}
        ),
        "idealNonzero": bool(ep.qwr.relations),
    }
    report["hypothesesVerified"] = (
        report["isSilting"]
        and report["isTiltingComplex"]
        and report["endMatchesExpected"]
        and report["gradable"]
        and report["idealNonzero"]
        and all(l >= 3 for l in report["relationLengths"])
    )
    return s, ep, report


# ---- catalog disk cache ------------------------------------------------------


class CacheMismatch(RuntimeError):
    pass


def cache_file(cache_dir, spec):
    return os.path.join(cache_dir, f"catalog-{spec.family}-{spec.n}.json")


def build_catalog_cache(spec, cache_dir):
    """Write dimension vectors, tau pairs and the hom-dimension table."""
    cat = get_catalog(spec)
    ncat = len(cat)
    doc = {
        "family": spec.family,
        "n": spec.n,
        "dims": [list(cat.dim_vector(i)) for i in range(ncat)],
        "tau": {str(k): v for k, v in sorted(cat.tau_of.items())},
        "proj": {str(v): cat.proj(v) for v in cat.q.vertices},
        "inj": {str(v): cat.inj(v) for v in cat.q.vertices},
        "hom": [[cat.hom_dim(i, j) for j in range(ncat)] for i in range(ncat)],
    }
    os.makedirs(cache_dir, exist_ok=True)
    path = cache_file(cache_dir, spec)
    with open(path, "w") as fh:
        json.dump(doc, fh, sort_keys=True)
    return path


def load_catalog_verified(spec, cache_dir):
    """Re-knit the catalog and verify it against a stored cache file."""
    cat = get_catalog(spec)
    path = cache_file(cache_dir, spec)
    if not os.path.exists(path):
        return cat, False
    with open(path) as fh:
        doc = json.load(fh)
    if doc["n"] != spec.n or doc["family"] != spec.family:
        raise CacheMismatch("cache file does not match the requested family")
    if [list(cat.dim_vector(i)) for i in range(len(cat))] != doc["dims"]:
        raise CacheMismatch("cached dimension vectors disagree with the knitted catalog")
    if {str(k): v for k, v in sorted(cat.tau_of.items())} != doc["tau"]:
        raise CacheMismatch("cached tau pairs disagree with the knitted catalog")
    for i in range(len(cat)):
        for j in range(len(cat)):
            if cat.hom_dim(i, j) != doc["hom"][i][j]:
                raise CacheMismatch("cached hom dimensions disagree")
    return cat, True


def records_to_json(spec, records, summary):
    cat = get_catalog(spec)
    return {
        "summary": summary.to_json(),
        "records": [rec.to_json(cat) for rec in records],
    }


def silting_json(spec):
    cat = get_catalog(spec)
    return silting_to_json(cat, enumerate_two_term_silting(cat))
