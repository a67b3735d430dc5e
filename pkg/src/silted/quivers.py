"""Quivers, paths, admissible relations and bound quiver algebras.

A quiver with relations is the presentation format for every algebra in
this package: the Dynkin path algebras we enumerate over and the
endomorphism algebras the census produces.  Paths compose left to right
(`p.then(q)` walks p first).  All linear algebra on path spaces is exact.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations

from .linalg import F0, F1, Mat, Subspace, nullspace


@dataclass(frozen=True)
class Arrow:
    id: int
    src: int
    tgt: int


class Quiver:
    """A finite directed multigraph without loops."""

    def __init__(self, vertices, arrows):
        self.vertices = tuple(vertices)
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("duplicate vertex ids")
        arrs = []
        for a in arrows:
            if isinstance(a, Arrow):
                arrs.append(a)
            else:
                arrs.append(Arrow(*a))
        self.arrows = tuple(arrs)
        ids = [a.id for a in self.arrows]
        if len(set(ids)) != len(ids):
            raise ValueError("duplicate arrow ids")
        vset = set(self.vertices)
        for a in self.arrows:
            if a.src not in vset or a.tgt not in vset:
                raise ValueError(f"arrow {a.id} touches unknown vertex")
            if a.src == a.tgt:
                raise ValueError(f"arrow {a.id} is a loop")
        self.arrow_by_id = {a.id: a for a in self.arrows}
        self.out_arrows = {v: [] for v in self.vertices}
        self.in_arrows = {v: [] for v in self.vertices}
        for a in self.arrows:
            self.out_arrows[a.src].append(a)
            self.in_arrows[a.tgt].append(a)
        for v in self.vertices:
            self.out_arrows[v].sort(key=lambda a: a.id)
            self.in_arrows[v].sort(key=lambda a: a.id)

    def opposite(self):
        return Quiver(self.vertices, [Arrow(a.id, a.tgt, a.src) for a in self.arrows])

    def is_acyclic(self):
        indeg = {v: len(self.in_arrows[v]) for v in self.vertices}
        queue = [v for v in self.vertices if indeg[v] == 0]
        seen = 0
        while queue:
            v = queue.pop()
            seen += 1
            for a in self.out_arrows[v]:
                indeg[a.tgt] -= 1
                if indeg[a.tgt] == 0:
                    queue.append(a.tgt)
        return seen == len(self.vertices)

    def __repr__(self):
        return f"Quiver({list(self.vertices)}, {[(a.id, a.src, a.tgt) for a in self.arrows]})"


@dataclass(frozen=True)
class Path:
    """A composable arrow sequence; length 0 is the trivial path at a vertex."""

    source: int
    target: int
    arrows: tuple  # arrow ids in traversal order

    @property
    def length(self):
        return len(self.arrows)

    def then(self, other):
        if self.target != other.source:
            raise ValueError("paths do not compose")
        return Path(self.source, other.target, self.arrows + other.arrows)


def trivial_path(v):
    return Path(v, v, ())


def arrow_path(a: Arrow):
    return Path(a.src, a.tgt, (a.id,))


@dataclass(frozen=True)
class Relation:
    """An exact-rational combination of parallel paths of length >= 2."""

    terms: tuple  # of (Fraction, Path)

    def __post_init__(self):
        if not self.terms:
            raise ValueError("empty relation")
        src = self.terms[0][1].source
        tgt = self.terms[0][1].target
        for c, p in self.terms:
            if c == 0:
                raise ValueError("zero coefficient in relation")
            if p.source != src or p.target != tgt:
                raise ValueError("relation terms are not parallel")
            if p.length < 2:
                raise ValueError("relation contains a path of length < 2")

    @property
    def source(self):
        return self.terms[0][1].source

    @property
    def target(self):
        return self.terms[0][1].target

    def is_monomial(self):
        return len(self.terms) == 1


def monomial_relation(path):
    return Relation(((F1, path),))


class QuiverWithRelations:
    """A quiver plus admissible relations; the bound algebra is kQ/I.

    Only acyclic quivers are supported for algebra-level computations
    (path spaces are then finite and the quotient is automatic to bound).
    """

    def __init__(self, quiver, relations=()):
        self.quiver = quiver
        self.relations = tuple(relations)
        self._paths = None
        self._ideal = None
        self._pathindex = None

    # ---- path space bookkeeping -------------------------------------

    def paths(self, u, v):
        """All paths u -> v, sorted by (length, arrow id sequence)."""
        if self._paths is None:
            self._build_paths()
        return self._paths.get((u, v), [])

    def _build_paths(self):
        if not self.quiver.is_acyclic():
            raise ValueError("path-space computations need an acyclic quiver")
        table = {}
        for v in self.quiver.vertices:
            table[(v, v)] = [trivial_path(v)]
        # lengthwise extension
        frontier = {(v, v): [trivial_path(v)] for v in self.quiver.vertices}
        while frontier:
            nxt = {}
            for (u, v), plist in frontier.items():
                for a in self.quiver.out_arrows[v]:
                    q = [p.then(arrow_path(a)) for p in plist]
                    nxt.setdefault((u, a.tgt), []).extend(q)
            for key, plist in nxt.items():
                table.setdefault(key, []).extend(plist)
            frontier = nxt
        for key in table:
            table[key].sort(key=lambda p: (p.length, p.arrows))
        self._paths = table
        self._pathindex = {
            key: {p: i for i, p in enumerate(plist)} for key, plist in table.items()
        }

    def path_index(self, u, v):
        if self._pathindex is None:
            self._build_paths()
        return self._pathindex.get((u, v), {})

    def relation_vector(self, rel):
        """Coefficient vector of a relation in the (source,target) path basis."""
        u, v = rel.source, rel.target
        idx = self.path_index(u, v)
        vec = [F0] * len(self.paths(u, v))
        for c, p in rel.terms:
            if p not in idx:
                raise ValueError("relation path not in quiver")
            vec[idx[p]] += c
        return vec

    def ideal_spans(self):
        """Per (u,v) pair, the subspace of the path space spanned by the ideal."""
        if self._ideal is not None:
            return self._ideal
        spans = {}
        verts = self.quiver.vertices
        for u in verts:
            for v in verts:
                if self.paths(u, v):
                    spans[(u, v)] = Subspace(len(self.paths(u, v)))
        todo = []
        for rel in self.relations:
            vec = self.relation_vector(rel)
            if spans[(rel.source, rel.target)].add(vec):
                todo.append((rel.source, rel.target))
        # close under multiplication by arrows on both sides
        while todo:
            (u, v) = todo.pop()
            base = spans[(u, v)].basis()
            plist = self.paths(u, v)
            for a in self.quiver.in_arrows[u]:
                w = a.src
                tgt_idx = self.path_index(w, v)
                for row in base:
                    vec = [F0] * len(self.paths(w, v))
                    for x, p in zip(row, plist):
                        if x != 0:
                            vec[tgt_idx[arrow_path(a).then(p)]] += x
                    if spans[(w, v)].add(vec):
                        todo.append((w, v))
            for a in self.quiver.out_arrows[v]:
                w = a.tgt
                tgt_idx = self.path_index(u, w)
                for row in base:
                    vec = [F0] * len(self.paths(u, w))
                    for x, p in zip(row, plist):
                        if x != 0:
                            vec[tgt_idx[p.then(arrow_path(a))]] += x
                    if spans[(u, w)].add(vec):
                        todo.append((u, w))
        self._ideal = spans
        return spans

    def in_ideal(self, rel):
        return self.ideal_spans()[(rel.source, rel.target)].contains(self.relation_vector(rel))

    def algebra_dimension(self):
        """Dimension of kQ/I = total path count minus ideal dimension."""
        spans = self.ideal_spans()
        total = 0
        for u in self.quiver.vertices:
            for v in self.quiver.vertices:
                plist = self.paths(u, v)
                if plist:
                    total += len(plist) - spans[(u, v)].dim
        return total

    def admissible(self):
        """Relations live in the arrow-ideal square (guaranteed by Relation),
        and the quotient is finite dimensional (automatic when acyclic)."""
        return self.quiver.is_acyclic()


# ---- spec operations ----------------------------------------------------


def paths_between(qwr, u, v):
    """Basis of the path space from u to v in kQ/I, as representative paths.

    Representatives are the canonical complement of the ideal span in the
    (length, arrow-id) ordered path basis.
    """
    if u not in qwr.quiver.vertices or v not in qwr.quiver.vertices:
        raise KeyError(f"unknown vertex in ({u}, {v})")
    plist = qwr.paths(u, v)
    if not plist:
        return []
    span = qwr.ideal_spans()[(u, v)]
    return [plist[j] for j in span.complement_indices()]


def _monomial_paths_in_ideal(qwr, u, v):
    plist = qwr.paths(u, v)
    span = qwr.ideal_spans().get((u, v))
    if span is None:
        return []
    out = []
    for i, p in enumerate(plist):
        vec = [F0] * len(plist)
        vec[i] = F1
        if span.contains(vec):
            out.append(p)
    return out


def _ideal_is_monomial(qwr):
    for u in qwr.quiver.vertices:
        for v in qwr.quiver.vertices:
            span = qwr.ideal_spans().get((u, v))
            if span is None or span.dim == 0:
                continue
            if len(_monomial_paths_in_ideal(qwr, u, v)) != span.dim:
                return False
    return True


def _path_in_ideal(qwr, path):
    idx = qwr.path_index(path.source, path.target)
    vec = [F0] * len(qwr.paths(path.source, path.target))
    vec[idx[path]] = F1
    return qwr.ideal_spans()[(path.source, path.target)].contains(vec)


def is_string_algebra(qwr):
    """Conditions (S1)-(S3): at most two arrows in/out per vertex, unique
    continuations outside the ideal, and a monomial ideal."""
    q = qwr.quiver
    for v in q.vertices:
        if len(q.out_arrows[v]) > 2 or len(q.in_arrows[v]) > 2:
            return False
    if not _ideal_is_monomial(qwr):
        return False
    for a in q.arrows:
        cont = [b for b in q.out_arrows[a.tgt] if not _path_in_ideal(qwr, arrow_path(a).then(arrow_path(b)))]
        if len(cont) > 1:
            return False
        pre = [c for c in q.in_arrows[a.src] if not _path_in_ideal(qwr, arrow_path(c).then(arrow_path(a)))]
        if len(pre) > 1:
            return False
    return True


def is_gentle(qwr):
    """String algebra whose ideal is generated by length-2 paths, with at
    most one killed continuation per arrow on each side (S2'),(S3')."""
    if not is_string_algebra(qwr):
        return False
    q = qwr.quiver
    for a in q.arrows:
        killed_after = [b for b in q.out_arrows[a.tgt] if _path_in_ideal(qwr, arrow_path(a).then(arrow_path(b)))]
        if len(killed_after) > 1:
            return False
        killed_before = [c for c in q.in_arrows[a.src] if _path_in_ideal(qwr, arrow_path(c).then(arrow_path(a)))]
        if len(killed_before) > 1:
            return False
    # (S3'): length-2 members must generate the whole ideal
    quad = []
    for u in q.vertices:
        for v in q.vertices:
            for p in _monomial_paths_in_ideal(qwr, u, v):
                if p.length == 2:
                    quad.append(monomial_relation(p))
    regen = QuiverWithRelations(q, quad)
    spans = qwr.ideal_spans()
    respans = regen.ideal_spans()
    for key, span in spans.items():
        if span.dim != respans[key].dim:
            return False
    return True


def connected_components(qwr):
    """Split along underlying undirected connectivity; relations follow
    the component containing their support."""
    q = qwr.quiver
    parent = {v: v for v in q.vertices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a in q.arrows:
        ra, rb = find(a.src), find(a.tgt)
        if ra != rb:
            parent[ra] = rb
    groups = {}
    for v in q.vertices:
        groups.setdefault(find(v), []).append(v)
    comps = []
    for root in sorted(groups, key=lambda r: min(groups[r])):
        verts = sorted(groups[root])
        vset = set(verts)
        arrows = [a for a in q.arrows if a.src in vset]
        rels = [r for r in qwr.relations if r.source in vset]
        comps.append(QuiverWithRelations(Quiver(verts, arrows), rels))
    return comps


def is_gradable(q):
    """True iff a vertex grading exists raising degree by 1 along every arrow
    (equivalently every undirected closed walk has signed degree zero)."""
    deg = {}
    for start in q.vertices:
        if start in deg:
            continue
        deg[start] = 0
        stack = [start]
        while stack:
            v = stack.pop()
            for a in q.out_arrows[v]:
                want = deg[v] + 1
                if a.tgt in deg:
                    if deg[a.tgt] != want:
                        return False
                else:
                    deg[a.tgt] = want
                    stack.append(a.tgt)
            for a in q.in_arrows[v]:
                want = deg[v] - 1
                if a.src in deg:
                    if deg[a.src] != want:
                        return False
                else:
                    deg[a.src] = want
                    stack.append(a.src)
    return True


# ---- bound quiver algebra modules and global dimension -------------------


class BoundAlgebra:
    """kQ/I with a canonical path basis, enough structure to resolve simples.

    Modules are kept as representations of Q (a space per vertex, a matrix
    per arrow) that satisfy the relations.
    """

    def __init__(self, qwr):
        if not qwr.quiver.is_acyclic():
            raise ValueError("global dimension machinery requires an acyclic quiver")
        self.qwr = qwr
        self.q = qwr.quiver
        spans = qwr.ideal_spans()
        self.basis = {}       # (u,v) -> list of representative paths
        self.basis_index = {}
        for u in self.q.vertices:
            for v in self.q.vertices:
                plist = qwr.paths(u, v)
                if not plist:
                    continue
                reps = [plist[j] for j in spans[(u, v)].complement_indices()]
                self.basis[(u, v)] = reps
                self.basis_index[(u, v)] = {p: i for i, p in enumerate(reps)}

    def reduce_path(self, path):
        """Coordinates of a path in the canonical basis of its path space."""
        u, v = path.source, path.target
        plist = self.qwr.paths(u, v)
        idx = self.qwr.path_index(u, v)
        vec = [F0] * len(plist)
        vec[idx[path]] = F1
        span = self.qwr.ideal_spans()[(u, v)]
        return span.quotient_coords(vec)

    def projective(self, i):
        """P(i) as a representation: basis of P(i)_u is the reduced paths i->u."""
        dims = {u: len(self.basis.get((i, u), [])) for u in self.q.vertices}
        mats = {}
        for a in self.q.arrows:
            src_basis = self.basis.get((i, a.src), [])
            m = Mat(dims[a.tgt], dims[a.src])
            for col, p in enumerate(src_basis):
                coords = self.reduce_path(p.then(arrow_path(a)))
                for row, x in enumerate(coords):
                    m.a[row][col] = x
            mats[a.id] = m
        return RepModule(self.q, dims, mats)


class RepModule:
    """A finite-dimensional representation of a quiver (module over kQ/I)."""

    def __init__(self, q, dims, mats):
        self.q = q
        self.dims = dict(dims)
        self.mats = mats

    def is_zero(self):
        return all(d == 0 for d in self.dims.values())

    def total_dim(self):
        return sum(self.dims.values())

    def radical_subspaces(self):
        rad = {v: Subspace(self.dims[v]) for v in self.q.vertices}
        for a in self.q.arrows:
            m = self.mats[a.id]
            for j in range(m.cols):
                rad[a.tgt].add(m.column(j))
        return rad


def simple_module(q, v):
    dims = {u: (1 if u == v else 0) for u in q.vertices}
    mats = {a.id: Mat(dims[a.tgt], dims[a.src]) for a in q.arrows}
    return RepModule(q, dims, mats)


def _projective_cover_and_kernel(alg, mod):
    """Return (cover multiplicities, kernel RepModule) for a module."""
    q = alg.q
    rad = mod.radical_subspaces()
    gen_vectors = {}   # vertex -> list of top representatives
    for v in q.vertices:
        comp = rad[v].complement_indices()
        gens = []
        for j in comp:
            e = [F0] * mod.dims[v]
            e[j] = F1
            gens.append(e)
        gen_vectors[v] = gens
    # Cover P = direct sum over v of P(v)^{#gens}; expand the cover map per vertex.
    projs = {v: alg.projective(v) for v in q.vertices if gen_vectors[v]}
    slots = []  # (vertex, generator vector)
    for v in q.vertices:
        for g in gen_vectors[v]:
            slots.append((v, g))
    # basis of P at vertex u: for each slot (v,g), the reduced paths v->u
    cover_cols = {u: [] for u in q.vertices}
    slot_offsets = []
    for (v, g) in slots:
        offs = {}
        for u in q.vertices:
            offs[u] = len(cover_cols[u])
            for p in alg.basis.get((v, u), []):
                cover_cols[u].append(_act_along_path(mod, g, p))
        slot_offsets.append(offs)
    P_dims = {u: len(cover_cols[u]) for u in q.vertices}
    cover = {u: Mat.from_columns(cover_cols[u], mod.dims[u]) if P_dims[u] else Mat(mod.dims[u], 0) for u in q.vertices}
    # P's arrow matrices
    P_mats = {}
    for a in q.arrows:
        m = Mat(P_dims[a.tgt], P_dims[a.src])
        col = 0
        for k, (v, g) in enumerate(slots):
            src_basis = alg.basis.get((v, a.src), [])
            tgt_index = alg.basis_index.get((v, a.tgt), {})
            base = slot_offsets[k][a.tgt]
            for p in src_basis:
                coords = alg.reduce_path(p.then(arrow_path(a)))
                for row, x in enumerate(coords):
                    m.a[base + row][col] = x
                col += 1
        P_mats[a.id] = m
    P = RepModule(q, P_dims, P_mats)
    # kernel per vertex, then induced arrow maps
    kbasis = {u: nullspace(cover[u]) for u in q.vertices}
    K_dims = {u: len(kbasis[u]) for u in q.vertices}
    incl = {u: Mat.from_columns(kbasis[u], P_dims[u]) if K_dims[u] else Mat(P_dims[u], 0) for u in q.vertices}
    K_mats = {}
    from .linalg import Solver
    solvers = {u: Solver(incl[u]) for u in q.vertices}
    for a in q.arrows:
        m = Mat(K_dims[a.tgt], K_dims[a.src])
        for j in range(K_dims[a.src]):
            img = P_mats[a.id].apply(kbasis[a.src][j])
            coords = solvers[a.tgt].solve(img)
            if coords is None:
                raise AssertionError("kernel not arrow-stable; relation bookkeeping broken")
            for i in range(K_dims[a.tgt]):
                m.a[i][j] = coords[i]
        K_mats[a.id] = m
    K = RepModule(q, K_dims, K_mats)
    return P, K


def _act_along_path(mod, vec, path):
    out = list(vec)
    for aid in path.arrows:
        out = mod.mats[aid].apply(out)
    return out


def global_dimension(qwr):
    """Max over simples of the minimal projective resolution length."""
    if not qwr.quiver.is_acyclic():
        raise ValueError("global_dimension requires an acyclic quiver")
    alg = BoundAlgebra(qwr)
    best = 0
    cap = len(qwr.quiver.vertices) + 1
    for v in qwr.quiver.vertices:
        mod = simple_module(qwr.quiver, v)
        pd = 0
        while True:
            _, K = _projective_cover_and_kernel(alg, mod)
            if K.is_zero():
                break
            pd += 1
            mod = K
            if pd > cap:
                raise AssertionError("projective resolution did not terminate")
        best = max(best, pd)
    return best


# ---- effective intersections on a line -----------------------------------


def _line_vertex_order(q):
    """Vertex order along a linearly oriented A-type quiver, or None."""
    if len(q.arrows) != len(q.vertices) - 1:
        return None
    starts = [v for v in q.vertices if not q.in_arrows[v]]
    if len(starts) != 1:
        return None
    order = [starts[0]]
    while q.out_arrows[order[-1]]:
        outs = q.out_arrows[order[-1]]
        if len(outs) != 1:
            return None
        order.append(outs[0].tgt)
    return order if len(order) == len(q.vertices) else None


def effective_intersection_count(qwr):
    """Maximum size N of an effective chain of interval relations.

    Relations on a linearly oriented line are intervals [i, j] in the
    position order.  An effective chain is a subset which, ordered by
    start, has consecutive members intersecting (i < r < j < s) and no
    other intersections among its members.  The caller may then assert
    gldim = N + 1 (checked against resolution-based global dimension in
    the test suite, including chains that skip intermediate relations).
    """
    order = _line_vertex_order(qwr.quiver)
    if order is None:
        raise ValueError("effective_intersection_count needs a linearly oriented line")
    pos = {v: k for k, v in enumerate(order)}
    intervals = []
    for rel in qwr.relations:
        if not rel.is_monomial():
            raise ValueError("effective_intersection_count needs monomial relations")
        p = rel.terms[0][1]
        intervals.append((pos[p.source], pos[p.target]))
    # drop intervals containing another (non-minimal generators)
    intervals = sorted(set(intervals))
    minimal = []
    for (i, j) in intervals:
        if not any((r, s) != (i, j) and i <= r and s <= j for (r, s) in intervals):
            minimal.append((i, j))
    minimal.sort()
    if not minimal:
        return 0

    def intersects(p, q):
        (i, j), (r, s) = sorted([p, q])
        if (i, j) == (r, s):
            return False
        return i < r < j < s

    best = 0
    m = len(minimal)

    def extend(chain, start):
        nonlocal best
        best = max(best, len(chain))
        for k in range(start, m):
            q = minimal[k]
            if chain:
                if not intersects(chain[-1], q):
                    continue
                if any(intersects(p, q) for p in chain[:-1]):
                    continue
            extend(chain + [q], k + 1)

    extend([], 0)
    return best


# ---- isomorphism ----------------------------------------------------------


def _degree_profile(qwr):
    q = qwr.quiver
    prof = {}
    for v in q.vertices:
        prof[v] = (len(q.in_arrows[v]), len(q.out_arrows[v]))
    return prof


def _pair_dims(qwr):
    """(path count, ideal dim) per ordered vertex pair; an iso invariant."""
    spans = qwr.ideal_spans()
    out = {}
    for u in qwr.quiver.vertices:
        for v in qwr.quiver.vertices:
            plist = qwr.paths(u, v)
            if plist and u != v:
                out[(u, v)] = (len(plist), spans[(u, v)].dim)
    return out


def iso_fingerprint(qwr):
    """Cheap invariant used to bucket presentations before exact matching."""
    q = qwr.quiver
    prof = _degree_profile(qwr)
    pd = _pair_dims(qwr)
    per_vertex = []
    for v in q.vertices:
        outs = sorted(val for (u, w), val in pd.items() if u == v)
        ins = sorted(val for (u, w), val in pd.items() if w == v)
        per_vertex.append((prof[v], tuple(outs), tuple(ins)))
    return (
        len(q.vertices),
        len(q.arrows),
        tuple(sorted(per_vertex)),
        qwr.algebra_dimension(),
    )


def _arrow_map_candidates(qa, qb, vmap):
    """All arrow bijections compatible with a vertex bijection."""
    groups = {}
    for a in qa.arrows:
        groups.setdefault((a.src, a.tgt), []).append(a)
    bgroups = {}
    for b in qb.arrows:
        bgroups.setdefault((b.src, b.tgt), []).append(b)
    keys = sorted(groups, key=lambda k: (k[0], k[1]))
    choices = []
    for key in keys:
        mapped = (vmap[key[0]], vmap[key[1]])
        tgt = bgroups.get(mapped, [])
        if len(tgt) != len(groups[key]):
            return
        choices.append((groups[key], list(permutations(tgt))))

    def rec(i, acc):
        if i == len(choices):
            yield dict(acc)
            return
        src_arrows, perms = choices[i]
        for perm in perms:
            step = list(acc)
            for a, b in zip(src_arrows, perm):
                step.append((a.id, b.id))
            yield from rec(i + 1, step)

    yield from rec(0, [])


def are_isomorphic(a, b):
    """Vertex/arrow bijection matching quivers and carrying the relation
    ideal of one presentation onto the other, up to rescaling of arrows.

    The torus of arrow rescalings acts on relation coefficients; a
    presentation with a commutativity relation p - q and one with p + q
    present the same algebra.  Feasibility of a rescaling is decided
    exactly (per prime, plus signs) and then verified against every pair
    of vertices.
    """
    if iso_fingerprint(a) != iso_fingerprint(b):
        return False
    qa, qb = a.quiver, b.quiver
    prof_a, prof_b = _degree_profile(a), _degree_profile(b)
    pda, pdb = _pair_dims(a), _pair_dims(b)
    if len(pda) != len(pdb):
        return False
    spans_a, spans_b = a.ideal_spans(), b.ideal_spans()

    verts_a = list(qa.vertices)
    cands = {
        v: [w for w in qb.vertices if prof_b[w] == prof_a[v]]
        for v in verts_a
    }

    def extend(i, vmap, used):
        if i == len(verts_a):
            yield dict(vmap)
            return
        v = verts_a[i]
        for w in cands[v]:
            if w in used:
                continue
            ok = True
            for (u, x), val in pda.items():
                if u == v and x in vmap and pdb.get((w, vmap[x])) != val:
                    ok = False
                    break
                if x == v and u in vmap and pdb.get((vmap[u], w)) != val:
                    ok = False
                    break
            if not ok:
                continue
            vmap[v] = w
            used.add(w)
            yield from extend(i + 1, vmap, used)
            del vmap[v]
            used.discard(w)

    for vmap in extend(0, {}, set()):
        for amap in _arrow_map_candidates(qa, qb, vmap):
            if _ideal_matches_up_to_rescaling(a, b, vmap, amap, spans_a, spans_b):
                return True
    return False


def _sigma_path(b, vmap, amap, p):
    return Path(vmap[p.source], vmap[p.target], tuple(amap[i] for i in p.arrows))


def _ideal_matches_up_to_rescaling(a, b, vmap, amap, spans_a, spans_b):
    arrow_ids = [ar.id for ar in a.quiver.arrows]
    arrow_pos = {aid: i for i, aid in enumerate(arrow_ids)}
    constraints = []  # (integer exponent vector over a-arrows, ratio in Q*)
    pair_data = []
    for u in a.quiver.vertices:
        for v in a.quiver.vertices:
            plist = a.paths(u, v)
            if not plist or u == v:
                continue
            span_a = spans_a[(u, v)]
            key_b = (vmap[u], vmap[v])
            span_b = spans_b[key_b]
            if span_a.dim != span_b.dim:
                return False
            if span_a.dim == 0:
                continue
            idx_b = b.path_index(*key_b)
            nb = len(b.paths(*key_b))
            pair_data.append((u, v, plist, key_b, idx_b, nb, span_a, span_b))
            for row in span_a.basis():
                supp = [(p, c) for c, p in zip(row, plist) if c != 0]
                # solution space of sum_t y_t e_{sigma p_t} in span_b
                rems = []
                for p, _c in supp:
                    e = [F0] * nb
                    e[idx_b[_sigma_path(b, vmap, amap, p)]] = F1
                    rems.append(span_b.reduce(e))
                cond = Mat(nb, len(supp))
                for t, rem in enumerate(rems):
                    for i in range(nb):
                        cond.a[i][t] = rem[i]
                sols = nullspace(cond)
                if not sols:
                    return False
                if len(sols) == 1:
                    kappa = sols[0]
                    if any(k == 0 for k in kappa):
                        return False
                    p0, c0 = supp[0]
                    sp0 = set(_sigma_path(b, vmap, amap, p0).arrows)
                    for t in range(1, len(supp)):
                        pt, ct = supp[t]
                        spt = set(_sigma_path(b, vmap, amap, pt).arrows)
                        exps = [0] * len(arrow_ids)
                        for aid, i in arrow_pos.items():
                            bid = amap[aid]
                            exps[i] = (1 if bid in spt else 0) - (1 if bid in sp0 else 0)
                        ratio = (kappa[t] * c0) / (kappa[0] * ct)
                        constraints.append((exps, ratio))
                # solution spaces of dimension >= 2 impose no chain constraint;
                # the final verification below covers them
    weights = _solve_rescaling(arrow_ids, constraints)
    if weights is None:
        return False
    for (u, v, plist, key_b, idx_b, nb, span_a, span_b) in pair_data:
        for row in span_a.basis():
            vec = [F0] * nb
            for c, p in zip(row, plist):
                if c != 0:
                    w = F1
                    for aid in p.arrows:
                        w *= weights[aid]
                    vec[idx_b[_sigma_path(b, vmap, amap, p)]] += c * w
            if not span_b.contains(vec):
                return False
    return True


def _factor_small(n):
    """Prime factorization by trial division (relation coefficients are small)."""
    n = abs(n)
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def _solve_rescaling(arrow_ids, constraints):
    """Weights w_alpha in Q* with prod w^e = ratio per constraint, or None."""
    from .linalg import integer_solve

    if not constraints:
        return {aid: F1 for aid in arrow_ids}
    emat = [c[0] for c in constraints]
    # sign part over F_2
    signs = [0 if c[1] > 0 else 1 for c in constraints]
    sign_sol = _f2_solve([[e % 2 for e in row] for row in emat], signs)
    if sign_sol is None:
        return None
    # one integer system per prime
    primes = set()
    for _, ratio in constraints:
        primes.update(_factor_small(ratio.numerator))
        primes.update(_factor_small(ratio.denominator))
    exps_by_prime = {}
    for p in sorted(primes):
        target = []
        for _, ratio in constraints:
            target.append(
                _factor_small(ratio.numerator).get(p, 0)
                - _factor_small(ratio.denominator).get(p, 0)
            )
        sol = integer_solve(emat, target)
        if sol is None:
            return None
        exps_by_prime[p] = sol
    weights = {}
    for i, aid in enumerate(arrow_ids):
        w = Fraction(-1 if sign_sol[i] else 1)
        for p, sol in exps_by_prime.items():
            w *= Fraction(p) ** sol[i]
        weights[aid] = w
    return weights


def _f2_solve(rows, b):
    """One solution of rows * x = b over F_2, or None."""
    m = len(rows)
    n = len(rows[0]) if rows else 0
    aug = [list(r) + [bb] for r, bb in zip(rows, b)]
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if aug[i][c]), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        for i in range(m):
            if i != r and aug[i][c]:
                aug[i] = [(x + y) % 2 for x, y in zip(aug[i], aug[r])]
        pivots.append((r, c))
        r += 1
    x = [0] * n
    for (i, c) in pivots:
        x[c] = aug[i][n]
    for i in range(m):
        if sum(rows[i][j] * x[j] for j in range(n)) % 2 != b[i] % 2:
            return None
    return x


# ---- serialization --------------------------------------------------------


def qwr_to_json(qwr):
    return {
        "vertices": list(qwr.quiver.vertices),
        "arrows": [{"id": a.id, "src": a.src, "tgt": a.tgt} for a in qwr.quiver.arrows],
        "relations": [
            [{"coef": f"{c.numerator}/{c.denominator}", "path": list(p.arrows)} for c, p in rel.terms]
            for rel in qwr.relations
        ],
    }


def qwr_from_json(doc):
    q = Quiver(doc["vertices"], [Arrow(a["id"], a["src"], a["tgt"]) for a in doc["arrows"]])
    rels = []
    for terms in doc["relations"]:
        parsed = []
        for t in terms:
            num, den = t["coef"].split("/")
            arrows = [q.arrow_by_id[i] for i in t["path"]]
            p = arrow_path(arrows[0])
            for a in arrows[1:]:
                p = p.then(arrow_path(a))
            parsed.append((Fraction(int(num), int(den)), p))
        rels.append(Relation(tuple(parsed)))
    return QuiverWithRelations(q, rels)


# ---- standard quiver builders --------------------------------------------


@lru_cache(maxsize=None)
def line_quiver(n):
    """Linearly oriented A_n with arrows (i+1) -> i, vertices 1..n."""
    return Quiver(range(1, n + 1), [Arrow(i, i + 1, i) for i in range(1, n)])


@lru_cache(maxsize=None)
def d_linear_quiver(n):
    """D_n with linear orientation: 3 -> 1, 3 -> 2, and (i+1) -> i down the tail."""
    if n < 3:
        raise ValueError("D-type quivers need n >= 3")
    arrows = [Arrow(1, 3, 1), Arrow(2, 3, 2)]
    arrows += [Arrow(i, i + 1, i) for i in range(3, n)]
    return Quiver(range(1, n + 1), arrows)


@lru_cache(maxsize=None)
def d_reversed_quiver(n):
    """D_n with the arrow at the unique source of the linear orientation reversed."""
    if n < 4:
        raise ValueError("the reversed-source D quiver needs n >= 4")
    arrows = [Arrow(1, 3, 1), Arrow(2, 3, 2)]
    arrows += [Arrow(i, i + 1, i) for i in range(3, n - 1)]
    arrows.append(Arrow(n - 1, n - 1, n))
    return Quiver(range(1, n + 1), arrows)


@lru_cache(maxsize=None)
def b_reversed_quiver(n):
    """A_n line with the arrow at its unique source reversed."""
    if n < 2:
        raise ValueError("needs n >= 2")
    arrows = [Arrow(i, i + 1, i) for i in range(1, n - 1)]
    arrows.append(Arrow(n - 1, n - 1, n))
    return Quiver(range(1, n + 1), arrows)
