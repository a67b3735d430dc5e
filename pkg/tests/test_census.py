import json

import pytest

from silted.census import (
    AlgebraSpec,
    CacheMismatch,
    build_catalog_cache,
    classify_family,
    delta_enumerated,
    expected_realization_end,
    get_catalog,
    lambda_family_label,
    load_catalog_verified,
    realization_complex,
    records_to_json,
    star_crosscheck,
    star_map,
    strictly_shod_census,
    tm_lambda_enumerated,
)
from silted.quivers import are_isomorphic, is_gradable
from silted.silting import enumerate_two_term_silting, is_silting


def test_spec_validation():
    with pytest.raises(ValueError):
        AlgebraSpec("d-linear", 3)
    with pytest.raises(ValueError):
        AlgebraSpec("x", 5)
    with pytest.raises(ValueError):
        AlgebraSpec("a", 0)


def test_classify_lambda4():
    records, summary = classify_family(AlgebraSpec("d-linear", 4))
    assert summary.n_silting == 50
    assert summary.a_s == 13
    assert summary.a_t == 7
    assert summary.a_ss == 1
    assert summary.a_ht == 4
    assert summary.a_nht == 3
    # the documented rank-4 identifications show up as label overlaps
    overlap_labels = {tuple(o["labels"]) for o in summary.overlaps}
    assert ("B1", "B2") in overlap_labels
    assert ("B4", "B6") in overlap_labels


def test_classify_lambda5_family_split():
    records, summary = classify_family(AlgebraSpec("d-linear", 5))
    assert summary.a_s == 62 and summary.a_t == 35 and summary.a_ss == 4
    counts = summary.label_class_counts
    assert counts["B1"] == 35
    assert counts["B2"] + counts["B4"] + counts["B7"] == 13
    assert counts["B3"] == 7
    assert counts["B5"] == 4
    assert counts["B6"] == 3
    assert not summary.overlaps


def test_classify_gamma():
    _, s4 = classify_family(AlgebraSpec("d-reversed", 4))
    assert s4.a_s == 11 and s4.a_ss == 0
    _, s5 = classify_family(AlgebraSpec("d-reversed", 5))
    assert s5.a_s == 65 and s5.a_ss == 2


def test_classify_b3_line():
    _, summary = classify_family(AlgebraSpec("b", 3))
    assert summary.a_t == 3


def test_records_structure_and_dichotomy():
    records, summary = classify_family(AlgebraSpec("d-linear", 4))
    for rec in records:
        assert rec.gldim <= 3
        for comp in rec.components:
            assert comp.gldim <= 3
            assert (comp.label == "strictly-shod") == (comp.gldim == 3)
            if comp.gldim == 3:
                assert comp.is_string
        if rec.is_tilting_complex:
            assert rec.gldim <= 2
        if rec.gldim == 3:
            assert rec.family_label == "B7"
        # component decomposition preserves vertex and arrow counts
        assert sum(len(c.qwr.quiver.vertices) for c in rec.components) == 4
        assert sum(len(c.qwr.quiver.arrows) for c in rec.components) == len(
            rec.end.qwr.quiver.arrows
        )


def test_case_ia_end_splits_into_blocks():
    """A shifted fork vertex next to a tail tilting module gives a product."""
    cat = get_catalog(AlgebraSpec("d-linear", 5))
    records, _ = classify_family(AlgebraSpec("d-linear", 5))
    found = 0
    for rec in records:
        if rec.family_label == "B4":
            assert len(rec.components) >= 2
            found += 1
    assert found > 0


def test_classes_agree_on_gldim():
    records, _ = classify_family(AlgebraSpec("d-linear", 5))
    byclass = {}
    for rec in records:
        byclass.setdefault(rec.iso_class, set()).add(rec.gldim)
    assert all(len(v) == 1 for v in byclass.values())


def test_strictly_shod_census_lambda():
    flagged, count = strictly_shod_census(AlgebraSpec("d-linear", 5))
    assert count == 4
    for s, ep, cls in flagged:
        cat = get_catalog(AlgebraSpec("d-linear", 5))
        assert lambda_family_label(cat, s) == "B7"


def test_strictly_shod_census_gamma():
    flagged, count = strictly_shod_census(AlgebraSpec("d-reversed", 5))
    assert count == 2


def test_tilted_of_linear_family_embeds_into_reversed_census():
    """Every tilted class of the linear family appears in the reversed census."""
    for n in (4, 5):
        lrec, _ = classify_family(AlgebraSpec("d-linear", n))
        grec, _ = classify_family(AlgebraSpec("d-reversed", n))
        l_tilted = {}
        for rec in lrec:
            if rec.is_tilting_module and rec.iso_class not in l_tilted:
                l_tilted[rec.iso_class] = rec.end.qwr
        g_classes = {}
        for rec in grec:
            if rec.iso_class not in g_classes:
                g_classes[rec.iso_class] = rec.end.qwr
        for qwr in l_tilted.values():
            assert any(are_isomorphic(qwr, g) for g in g_classes.values())


def test_tm_lambda_enumerated_matches_reference():
    assert tm_lambda_enumerated(AlgebraSpec("d-linear", 4), 1) == 5
    assert tm_lambda_enumerated(AlgebraSpec("d-linear", 4), 2) == 1
    assert tm_lambda_enumerated(AlgebraSpec("d-linear", 5), 1) == 21
    assert tm_lambda_enumerated(AlgebraSpec("d-linear", 5), 2) == 6


def test_delta_enumerated():
    assert delta_enumerated(AlgebraSpec("a", 4)) == [1, 3, 5, 5]
    assert delta_enumerated(AlgebraSpec("a", 5)) == [1, 4, 9, 14, 14]


def test_star_bijection():
    for n in (4, 5):
        chk = star_crosscheck(n)
        assert chk["ok"]
        assert chk["gammaCount"] == chk["lambdaCount"] == chk["matched"]


def test_star_images_are_silting():
    gcat, lcat, star = star_map(4)
    for s in enumerate_two_term_silting(gcat):
        assert is_silting(star(s), lcat)


def test_realization_linear():
    s, ep, report = realization_complex("linear", 5)
    assert report["hypothesesVerified"]
    assert report["relationCount"] == 1
    assert report["relationLengths"] == [3]
    assert is_gradable(ep.qwr.quiver)
    assert are_isomorphic(ep.qwr, expected_realization_end(5))


def test_realization_reversed():
    s, ep, report = realization_complex("reversed", 5)
    assert report["hypothesesVerified"]
    assert report["relationLengths"] == [3]


def test_realization_rejects_small_n():
    with pytest.raises(ValueError):
        realization_complex("linear", 4)
    with pytest.raises(ValueError):
        realization_complex("sideways", 5)


def test_records_json_roundtrip():
    spec = AlgebraSpec("d-linear", 4)
    records, summary = classify_family(spec)
    doc = records_to_json(spec, records, summary)
    blob = json.dumps(doc)
    parsed = json.loads(blob)
    assert parsed["summary"]["a_s"] == 13
    assert len(parsed["records"]) == 50
    assert parsed["records"][0]["gldim"] in (0, 1, 2, 3)


def test_catalog_cache_roundtrip(tmp_path):
    spec = AlgebraSpec("d-linear", 4)
    path = build_catalog_cache(spec, str(tmp_path))
    cat, verified = load_catalog_verified(spec, str(tmp_path))
    assert verified
    # corrupt the cache and expect a mismatch
    doc = json.load(open(path))
    doc["hom"][0][1] += 1
    json.dump(doc, open(path, "w"))
    with pytest.raises(CacheMismatch):
        load_catalog_verified(spec, str(tmp_path))


def test_n_cap():
    with pytest.raises(ValueError):
        classify_family(AlgebraSpec("d-linear", 6), n_cap=5)
