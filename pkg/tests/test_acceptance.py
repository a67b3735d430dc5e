"""Acceptance suite: one test per criterion, one pass/fail line each.

Every expected value here is pinned to the reference tables; tolerances
are exact (integer equality) throughout.
"""

import io
import random
import time
from contextlib import redirect_stdout

import pytest

from silted import formulas as F
from silted.arcatalog import knit_catalog
from silted.census import (
    AlgebraSpec,
    classify_family,
    get_catalog,
    realization_complex,
    star_crosscheck,
    strictly_shod_census,
)
from silted.cli import run
from silted.endo import MOD, SHIFT, TwoTermHomCalc, hom_two_term
from silted.quivers import (
    QuiverWithRelations,
    d_linear_quiver,
    d_reversed_quiver,
    effective_intersection_count,
    global_dimension,
    line_quiver,
    monomial_relation,
)
from silted.silting import enumerate_tilting_modules, enumerate_two_term_silting


def report(criterion, ok, detail=""):
    print(f"{'PASS' if ok else 'FAIL'} criterion {criterion}: {detail}")
    assert ok, f"criterion {criterion} failed: {detail}"


def test_criterion_1_tilting_counts_catalan():
    t0 = time.time()
    got = []
    for n in range(1, 9):
        cat = knit_catalog(line_quiver(n))
        got.append(len(enumerate_tilting_modules(cat)))
    elapsed = time.time() - t0
    want = [1, 2, 5, 14, 42, 132, 429, 1430]
    report(
        1,
        got == want and elapsed < 60,
        f"t(A_1..A_8) = {got} in {elapsed:.1f}s",
    )


def test_criterion_2_silted_census_linear_d():
    t0 = time.time()
    got_s, got_t = {}, {}
    for n in (4, 5, 6):
        _, summary = classify_family(AlgebraSpec("d-linear", n))
        got_s[n], got_t[n] = summary.a_s, summary.a_t
    elapsed = time.time() - t0
    ok = (
        got_s == {4: 13, 5: 62, 6: 228}
        and got_t == {4: 7, 5: 35, 6: 126}
        and elapsed < 300
    )
    report(2, ok, f"a_s = {got_s}, a_t = {got_t} in {elapsed:.1f}s")


def test_criterion_3_silted_census_reversed_d():
    got = {}
    for n in (4, 5, 6):
        _, summary = classify_family(AlgebraSpec("d-reversed", n))
        got[n] = summary.a_s
    report(3, got == {4: 11, 5: 65, 6: 234}, f"a_s(Gamma) = {got}")


def test_criterion_4_strictly_shod():
    got = {}
    for n in (4, 5, 6, 7):
        flagged, count = strictly_shod_census(AlgebraSpec("d-linear", n))
        got[n] = count
        cat = get_catalog(AlgebraSpec("d-linear", n))
        # every flagged record: gldim exactly 3 and all gldim-3 components string
        # (asserted inside strictly_shod_census; re-assert the totals here)
    enum_ok = got == {4: 1, 5: 4, 6: 14, 7: 48}
    formula = [F.a_ss_lambda(n) for n in range(4, 10)]
    formula_ok = formula == [1, 4, 14, 48, 165, 572]
    report(
        4,
        enum_ok and formula_ok,
        f"enumerated a_ss = {got}, formula row = {formula}",
    )


def test_criterion_5_formula_suite():
    checks = {
        "delta3": F.delta_row(3) == [1, 2, 2],
        "delta4": F.delta_row(4) == [1, 3, 5, 5],
        "delta5": F.delta_row(5) == [1, 4, 9, 14, 14],
        "delta6": F.delta_row(6) == [1, 5, 14, 28, 42, 42],
        "tm_a": [F.tm_a(n, m) for m in (1, 2) for n in (3, 4, 5)]
        == [4, 14, 48, 1, 5, 20],
        "tm_lambda": [F.tm_lambda(n, m) for m in (1, 2) for n in (4, 5, 6)]
        == [5, 21, 83, 1, 6, 28],
        "a_nht_a": [F.a_nht_a(n) for n in range(1, 10)]
        == [0, 0, 1, 6, 26, 100, 365, 1302, 4606],
        "a_ht_lambda": all(F.a_ht_lambda(n) == 3 * 2 ** (n - 3) for n in range(5, 10)),
        "a_nht_lambda5": F.a_nht_lambda(5) == 23,
        "a_nht_lambda6": F.a_nht_lambda(6) == 102,
        "a_s_mu5": F.a_s_mu(5) == 2,
    }
    bad = [k for k, v in checks.items() if not v]
    report(5, not bad, "all formula-table rows exact" if not bad else f"failed: {bad}")


def test_criterion_6_property_suites():
    details = []
    # AR duality for all pairs, catalogs up to rank-6 D (both orientations)
    ok_ar = True
    for q in (line_quiver(5), d_linear_quiver(5), d_linear_quiver(6), d_reversed_quiver(6)):
        cat = knit_catalog(q)
        for m in range(len(cat)):
            for n in range(len(cat)):
                e = cat.ext1_dim(m, n)
                want = 0 if cat.is_projective(m) else cat.hom_dim(n, cat.tau(m))
                if e != want:
                    ok_ar = False
    details.append(f"AR-duality={ok_ar}")
    # brick property catalog-wide
    ok_brick = all(
        knit_catalog(q).hom_dim(x, x) == 1
        for q in (d_linear_quiver(6), d_reversed_quiver(6))
        for x in range(len(knit_catalog(q)))
    )
    details.append(f"bricks={ok_brick}")
    # gldim bounds over every enumerated End algebra of the rank-5 censuses
    ok_gd = True
    for fam in ("d-linear", "d-reversed"):
        records, _ = classify_family(AlgebraSpec(fam, 5))
        for rec in records:
            if rec.gldim > 3 or (rec.is_tilting_complex and rec.gldim > 2):
                ok_gd = False
    details.append(f"gldim-bounds={ok_gd}")
    # effective intersections vs resolutions on 500 random monomial lines
    rng = random.Random(2024)
    ok_eff = True
    trials = 0
    while trials < 500:
        arrows = rng.randint(2, 8)
        intervals = []
        i = 1
        while i < arrows:
            if rng.random() < 0.5:
                j = rng.randint(i + 2, arrows + 1)
                if intervals and j <= intervals[-1][1]:
                    i += 1
                    continue
                intervals.append((i, j))
            i += 1
        if not intervals:
            continue
        trials += 1
        q = line_quiver(arrows + 1)
        rels = []
        for (i0, j0) in intervals:
            ids = tuple(arrows + 1 - k for k in range(i0, j0))
            from silted.quivers import Path

            first = q.arrow_by_id[ids[0]]
            p = Path(first.src, first.tgt, (first.id,))
            for aid in ids[1:]:
                a = q.arrow_by_id[aid]
                p = p.then(Path(a.src, a.tgt, (a.id,)))
            rels.append(monomial_relation(p))
        qwr = QuiverWithRelations(q, rels)
        if global_dimension(qwr) != effective_intersection_count(qwr) + 1:
            ok_eff = False
            break
    details.append(f"effective-intersections(500)={ok_eff}")
    # star bijection, cardinality and pairwise matching
    ok_star = all(star_crosscheck(n)["ok"] for n in (4, 5))
    details.append(f"star-bijection={ok_star}")
    ok = ok_ar and ok_brick and ok_gd and ok_eff and ok_star
    report(6, ok, ", ".join(details))


def test_criterion_7_realization_constructor():
    t0 = time.time()
    results = {}
    for n in (5, 6, 7):
        for orientation in ("linear", "reversed"):
            _, _, rep = realization_complex(orientation, n)
            results[(orientation, n)] = rep["hypothesesVerified"] and rep[
                "relationLengths"
            ] == [3]
    elapsed = time.time() - t0
    ok = all(results.values()) and elapsed < 10
    report(7, ok, f"verified {sorted(results)} in {elapsed:.1f}s")


def test_criterion_8_determinism():
    args = ["classify", "--family", "d-linear", "--n", "5", "--format", "json"]
    outs = []
    for _ in range(2):
        buf = io.StringIO()
        with redirect_stdout(buf):
            code = run(args)
        assert code == 0
        outs.append(buf.getvalue())
    report(8, outs[0] == outs[1], f"{len(outs[0])} bytes, identical across runs")
