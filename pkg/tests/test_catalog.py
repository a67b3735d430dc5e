import pytest

from silted.arcatalog import DynkinTypeError, TauUndefinedError, knit_catalog
from silted.quivers import (
    Arrow,
    Quiver,
    b_reversed_quiver,
    d_linear_quiver,
    d_reversed_quiver,
    line_quiver,
)


def dimvec(cat, x):
    return cat.dim_vector(x)


def find(cat, dims):
    return cat.by_dim[tuple(dims)]


# ---- knitting: counts and flags ---------------------------------------------


@pytest.mark.parametrize(
    "quiver,expected",
    [
        (line_quiver(1), 1),
        (line_quiver(2), 3),
        (line_quiver(3), 6),
        (line_quiver(6), 21),
        (d_linear_quiver(4), 12),
        (d_linear_quiver(5), 20),
        (d_reversed_quiver(5), 20),
        (b_reversed_quiver(4), 10),
    ],
)
def test_root_counts(quiver, expected):
    assert len(knit_catalog(quiver)) == expected


def test_projective_injective_flags_lambda5():
    cat = knit_catalog(d_linear_quiver(5))
    projs = [x for x in range(len(cat)) if cat.is_projective(x)]
    injs = [x for x in range(len(cat)) if cat.is_injective(x)]
    assert len(projs) == 5 and len(injs) == 5


def test_rejects_non_dynkin():
    e6 = Quiver(
        [1, 2, 3, 4, 5, 6],
        [Arrow(1, 2, 1), Arrow(2, 3, 2), Arrow(3, 4, 3), Arrow(4, 5, 4), Arrow(5, 6, 3)],
    )
    with pytest.raises(DynkinTypeError):
        knit_catalog(e6)
    cycle = Quiver([1, 2, 3], [Arrow(1, 1, 2), Arrow(2, 2, 3), Arrow(3, 3, 1)])
    with pytest.raises(DynkinTypeError):
        knit_catalog(cycle)


# ---- the right-module convention on A_2 -------------------------------------


def test_a2_convention():
    # arrows 2 -> 1: P(1) is the full interval, P(2) = S(2), I(2) = P(1)
    cat = knit_catalog(line_quiver(2))
    assert dimvec(cat, cat.proj(1)) == (1, 1)
    assert dimvec(cat, cat.proj(2)) == (0, 1)
    assert dimvec(cat, cat.inj(1)) == (1, 0)
    assert dimvec(cat, cat.inj(2)) == (1, 1)
    s1, s2 = find(cat, (1, 0)), find(cat, (0, 1))
    # the almost split sequence is 0 -> S(2) -> P(1) -> S(1) -> 0
    assert cat.tau(s1) == s2
    assert cat.tau_inv(s2) == s1
    with pytest.raises(TauUndefinedError):
        cat.tau(cat.proj(2))
    with pytest.raises(TauUndefinedError):
        cat.tau_inv(cat.inj(1))


def test_a2_presentation_and_ext():
    cat = knit_catalog(line_quiver(2))
    s1 = find(cat, (1, 0))
    pres = cat.min_projective_presentation(s1)
    assert list(pres.p0.slots) == [1]
    assert list(pres.p1.slots) == [2]
    s2 = find(cat, (0, 1))
    assert cat.ext1_dim(s1, s2) == 1
    assert cat.ext1_dim(s2, s1) == 0


def test_presentation_trivial_for_projectives():
    cat = knit_catalog(d_linear_quiver(4))
    for v in cat.q.vertices:
        pres = cat.min_projective_presentation(cat.proj(v))
        assert list(pres.p0.slots) == [v]
        assert list(pres.p1.slots) == []


def test_presentation_dimension_exactness():
    cat = knit_catalog(d_linear_quiver(4))
    for x in range(len(cat)):
        pres = cat.min_projective_presentation(x)
        for u in cat.q.vertices:
            assert pres.p1.dims[u] + cat.indecs[x].dims[u] == pres.p0.dims[u]


# ---- hom spaces --------------------------------------------------------------


def test_hom_projective_property():
    cat = knit_catalog(d_linear_quiver(4))
    for v in cat.q.vertices:
        for m in range(len(cat)):
            assert cat.hom_dim(cat.proj(v), m) == cat.indecs[m].dims[v]


def test_hom_p4_p1_lambda4():
    cat = knit_catalog(d_linear_quiver(4))
    assert cat.hom_dim(cat.proj(4), cat.proj(1)) == 1


def test_bricks():
    for q in (line_quiver(4), d_linear_quiver(4), d_reversed_quiver(5)):
        cat = knit_catalog(q)
        for x in range(len(cat)):
            assert cat.hom_dim(x, x) == 1


def test_hom_intertwiner_commutes():
    cat = knit_catalog(d_linear_quiver(4))
    x, y = 0, find(cat, (1, 1, 2, 1))
    for phi in cat.hom_basis(x, y):
        for a in cat.rq.arrows:
            lhs = phi[a.tgt].mul(cat.indecs[x].mats[a.id])
            rhs = cat.indecs[y].mats[a.id].mul(phi[a.src])
            assert lhs == rhs


# ---- tau structure ------------------------------------------------------------


def test_tau_inverse_pairs():
    cat = knit_catalog(d_linear_quiver(5))
    for x in range(len(cat)):
        if not cat.is_projective(x):
            assert cat.tau_inv(cat.tau(x)) == x
        if not cat.is_injective(x):
            assert cat.tau(cat.tau_inv(x)) == x


def test_tau_orbits_cover_catalog():
    cat = knit_catalog(d_linear_quiver(5))
    seen = set()
    for v in cat.q.vertices:
        x = cat.proj(v)
        while True:
            assert x not in seen
            seen.add(x)
            if cat.is_injective(x):
                break
            x = cat.tau_inv(x)
    assert len(seen) == len(cat)


def test_slices():
    cat = knit_catalog(line_quiver(3))
    by_slice = {}
    for x in range(len(cat)):
        by_slice.setdefault(cat.indecs[x].slice, []).append(x)
    assert sorted(len(v) for v in by_slice.values()) == [1, 2, 3]


def test_mesh_exactness():
    cat = knit_catalog(d_linear_quiver(4))
    for z, x in cat.tau_of.items():
        middles = [t for (t, _) in cat.arrows_out[x]]
        for u in cat.q.vertices:
            total = sum(cat.indecs[t].dims[u] for t in middles)
            assert cat.indecs[x].dims[u] + cat.indecs[z].dims[u] == total


# ---- ext --------------------------------------------------------------------


def test_ext_vanishes_on_projectives():
    cat = knit_catalog(d_linear_quiver(4))
    for v in cat.q.vertices:
        for m in range(len(cat)):
            assert cat.ext1_dim(cat.proj(v), m) == 0


def test_ext_rigidity_catalogwide():
    cat = knit_catalog(d_linear_quiver(5))
    for x in range(len(cat)):
        assert cat.ext1_dim(x, x) == 0


def test_ar_duality_small():
    for q in (line_quiver(4), d_linear_quiver(4)):
        cat = knit_catalog(q)
        for m in range(len(cat)):
            for n in range(len(cat)):
                e = cat.ext1_dim(m, n)
                if cat.is_projective(m):
                    assert e == 0
                else:
                    assert e == cat.hom_dim(n, cat.tau(m))
