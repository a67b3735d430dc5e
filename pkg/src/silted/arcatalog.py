"""Knitted Auslander-Reiten catalogs for Dynkin path algebras.

Modules are the paper's right modules: P(i) = e_i * kQ is spanned by the
paths of Q ending at i.  Internally everything is stored as a covariant
representation of the opposite quiver R = Q^op, where P(i) becomes the
"paths from i" projective.  Dimension vectors are indexed by the original
vertex ids, so no translation is ever needed outside this module.

The catalog is knitted mesh by mesh from the projective slice: whenever
all irreducible maps out of a non-injective X are known, tau^{-1}(X) is
the cokernel of X -> (sum of middle terms), with explicit matrices.
"""

from .linalg import F0, F1, Mat, Solver, Subspace, nullspace, rank, stack_rows
from .quivers import QuiverWithRelations, arrow_path


class DynkinTypeError(ValueError):
    pass


class TauUndefinedError(ValueError):
    """Raised for tau of a projective or tau^{-1} of an injective."""


def _dynkin_root_count(q):
    """Positive-root count for a tree quiver of type A or D; raises otherwise."""
    n = len(q.vertices)
    und = {v: set() for v in q.vertices}
    for a in q.arrows:
        und[a.src].add(a.tgt)
        und[a.tgt].add(a.src)
    if len(q.arrows) != n - 1:
        raise DynkinTypeError("quiver is not a tree")
    seen = set()
    stack = [q.vertices[0]]
    while stack:
        v = stack.pop()
        if v in seen:
            continue
        seen.add(v)
        stack.extend(und[v] - seen)
    if len(seen) != n:
        raise DynkinTypeError("quiver is not connected")
    degs = sorted(len(und[v]) for v in q.vertices)
    if degs and degs[-1] <= 2:
        return n * (n + 1) // 2  # type A
    branch = [v for v in q.vertices if len(und[v]) == 3]
    if len(branch) != 1 or degs[-1] > 3:
        raise DynkinTypeError("not a quiver of type A or D")
    b = branch[0]
    leg_lengths = []
    for start in und[b]:
        length, prev, cur = 1, b, start
        while True:
            nbrs = [w for w in und[cur] if w != prev]
            if not nbrs:
                break
            if len(nbrs) > 1:
                raise DynkinTypeError("not a quiver of type A or D")
            prev, cur = cur, nbrs[0]
            length += 1
        leg_lengths.append(length)
    leg_lengths.sort()
    if n >= 4 and leg_lengths[0] == 1 and leg_lengths[1] == 1:
        return n * (n - 1)  # type D
    raise DynkinTypeError("not a quiver of type A or D")


class Indec:
    """One indecomposable: explicit representation plus AR bookkeeping."""

    __slots__ = ("id", "dims", "mats", "slice", "proj_vertex", "inj_vertex")

    def __init__(self, idx, dims, mats, slice_, proj_vertex=None, inj_vertex=None):
        self.id = idx
        self.dims = dims          # dict vertex -> int
        self.mats = mats          # dict R-arrow id -> Mat
        self.slice = slice_       # tau^{-1} distance from the projective slice
        self.proj_vertex = proj_vertex
        self.inj_vertex = inj_vertex

    def total_dim(self):
        return sum(self.dims.values())


class ARCatalog:
    """All indecomposables over a Dynkin path algebra, with tau and hom data."""

    def __init__(self, algebra_quiver):
        self.q = algebra_quiver
        self.rq = algebra_quiver.opposite()
        self.expected = _dynkin_root_count(algebra_quiver)
        self._rpaths = QuiverWithRelations(self.rq)  # path tables of R, no relations
        self.indecs = []
        self.tau_of = {}
        self.tau_inv_of = {}
        self.arrows_out = {}      # id -> list of (target id, map dict v->Mat)
        self.by_dim = {}
        self._proj_id = {}
        self._inj_id = {}
        self._inj_dims = {}
        self._hom_cache = {}
        self._pres_cache = {}
        self._knit()

    # ---- basic access ------------------------------------------------

    def __len__(self):
        return len(self.indecs)

    def dim_vector(self, x):
        ind = self.indecs[x]
        return tuple(ind.dims[v] for v in self.q.vertices)

    def proj(self, v):
        return self._proj_id[v]

    def inj(self, v):
        return self._inj_id[v]

    def module_by_dim(self, dims):
        return self.by_dim[tuple(dims)]

    def is_projective(self, x):
        return self.indecs[x].proj_vertex is not None

    def is_injective(self, x):
        return self.indecs[x].inj_vertex is not None

    def tau(self, x):
        if self.is_projective(x):
            raise TauUndefinedError(f"indecomposable {x} is projective; tau undefined")
        return self.tau_of[x]

    def tau_inv(self, x):
        if self.is_injective(x):
            raise TauUndefinedError(f"indecomposable {x} is injective; tau^-1 undefined")
        return self.tau_inv_of[x]

    def tau_inv_iterated(self, x, m):
        """tau^{-m}(x), or None when some step hits an injective."""
        for _ in range(m):
            if self.is_injective(x):
                return None
            x = self.tau_inv_of[x]
        return x

    # ---- knitting ------------------------------------------------------

    def _proj_rep(self, i):
        """P(i): basis of P(i)_u is the set of R-paths i -> u."""
        dims = {u: len(self._rpaths.paths(i, u)) for u in self.q.vertices}
        mats = {}
        for a in self.rq.arrows:
            src_paths = self._rpaths.paths(i, a.src)
            tgt_index = self._rpaths.path_index(i, a.tgt)
            m = Mat(dims[a.tgt], dims[a.src])
            for col, p in enumerate(src_paths):
                m.a[tgt_index[p.then(arrow_path(a))]][col] = F1
            mats[a.id] = m
        return dims, mats

    def _knit(self):
        for i in self.q.vertices:
            vec = tuple(len(self._rpaths.paths(u, i)) for u in self.q.vertices)
            self._inj_dims[vec] = i

        in_neighbors = {}
        for i in self.q.vertices:
            dims, mats = self._proj_rep(i)
            idx = len(self.indecs)
            self.indecs.append(Indec(idx, dims, mats, 0, proj_vertex=i))
            self._proj_id[i] = idx
            self.arrows_out[idx] = []
            key = self.dim_vector(idx)
            self.by_dim[key] = idx
            if key in self._inj_dims:
                self.indecs[idx].inj_vertex = self._inj_dims[key]
                self._inj_id[self._inj_dims[key]] = idx
        # irreducible maps among projectives: P(j) includes into P(i) for each
        # R-arrow a: i -> j (P(j) is the corresponding radical summand of P(i))
        for a in self.rq.arrows:
            self.arrows_out[self._proj_id[a.tgt]].append(
                (self._proj_id[a.src], self._rad_inclusion(a))
            )
        for i in self.q.vertices:
            idx = self._proj_id[i]
            in_neighbors[idx] = [self._proj_id[a.tgt] for a in self.rq.out_arrows[i]]

        resolved = set()
        while len(resolved) < len(self.indecs):
            cand = None
            for idx in range(len(self.indecs)):
                if idx not in resolved and all(w in resolved for w in in_neighbors[idx]):
                    cand = idx
                    break
            if cand is None:
                raise AssertionError("knitting deadlocked")
            if self.indecs[cand].inj_vertex is not None:
                resolved.add(cand)
                continue
            z = self._mesh(cand)
            in_neighbors[z] = [t for (t, _) in self.arrows_out[cand]]
            resolved.add(cand)
            if len(self.indecs) > self.expected:
                raise AssertionError("knitting produced too many indecomposables")
        if len(self.indecs) != self.expected:
            raise AssertionError(
                f"knitted {len(self.indecs)} indecomposables, expected {self.expected}"
            )
        if len(self._inj_id) != len(self.q.vertices):
            raise AssertionError("knitting did not reach every injective")

    def _rad_inclusion(self, a):
        """The inclusion P(a.tgt) -> P(a.src) prepending the R-arrow a."""
        i, j = a.src, a.tgt
        maps = {}
        for u in self.q.vertices:
            src_paths = self._rpaths.paths(j, u)
            tgt_index = self._rpaths.path_index(i, u)
            m = Mat(len(self._rpaths.paths(i, u)), len(src_paths))
            for col, p in enumerate(src_paths):
                m.a[tgt_index[arrow_path(a).then(p)]][col] = F1
            maps[u] = m
        return maps

    def _mesh(self, x):
        """Knit tau^{-1}(x) as the cokernel of x -> (sum of mesh middles)."""
        ind = self.indecs[x]
        outs = self.arrows_out[x]
        if not outs:
            raise AssertionError("mesh attempted on a module with no successors")
        targets = [self.indecs[t] for (t, _) in outs]
        proj = {}
        section_cols = {}
        z_dims = {}
        amb = {u: sum(t.dims[u] for t in targets) for u in self.q.vertices}
        for u in self.q.vertices:
            stacked = stack_rows([m[u] for (_, m) in outs], ind.dims[u])
            # stacked: columns = x-basis at u, rows = ambient middle space at u
            sp = Subspace(amb[u])
            for j in range(stacked.cols):
                sp.add(stacked.column(j))
            if sp.dim != ind.dims[u]:
                raise AssertionError("mesh map is not injective; knitting is broken")
            comp = sp.complement_indices()
            z_dims[u] = len(comp)
            pm = Mat(len(comp), amb[u])
            for i in range(amb[u]):
                e = [F0] * amb[u]
                e[i] = F1
                red = sp.reduce(e)
                for r, j in enumerate(comp):
                    pm.a[r][i] = red[j]
            proj[u] = pm
            section_cols[u] = comp
        z_mats = {}
        for a in self.rq.arrows:
            big = self._block_diag_arrow(targets, a)
            sec = Mat(big.cols, z_dims[a.src])
            for c, pos in enumerate(section_cols[a.src]):
                sec.a[pos][c] = F1
            z_mats[a.id] = proj[a.tgt].mul(big).mul(sec)
        z = len(self.indecs)
        self.indecs.append(Indec(z, z_dims, z_mats, ind.slice + 1))
        self.arrows_out[z] = []
        key = self.dim_vector(z)
        if key in self.by_dim:
            raise AssertionError("duplicate dimension vector knitted")
        self.by_dim[key] = z
        if key in self._inj_dims:
            v = self._inj_dims[key]
            self.indecs[z].inj_vertex = v
            self._inj_id[v] = z
        self.tau_of[z] = x
        self.tau_inv_of[x] = z
        # new irreducible maps: each middle term maps onto the cokernel
        col_offsets = []
        run = {u: 0 for u in self.q.vertices}
        for t in targets:
            col_offsets.append(dict(run))
            for u in self.q.vertices:
                run[u] += t.dims[u]
        for (tid, _), tind, offs in zip(outs, targets, col_offsets):
            maps = {}
            for u in self.q.vertices:
                m = Mat(z_dims[u], tind.dims[u])
                for c in range(tind.dims[u]):
                    col = proj[u].column(offs[u] + c)
                    for r in range(z_dims[u]):
                        m.a[r][c] = col[r]
                maps[u] = m
            self.arrows_out[tid].append((z, maps))
        return z

    def _block_diag_arrow(self, targets, a):
        rows = sum(t.dims[a.tgt] for t in targets)
        cols = sum(t.dims[a.src] for t in targets)
        m = Mat(rows, cols)
        r0 = c0 = 0
        for t in targets:
            blk = t.mats[a.id]
            for i in range(blk.rows):
                for j in range(blk.cols):
                    m.a[r0 + i][c0 + j] = blk.a[i][j]
            r0 += blk.rows
            c0 += blk.cols
        return m

    # ---- hom spaces -----------------------------------------------------

    def hom_basis(self, x, y):
        """Canonical basis of Hom(X, Y): per-vertex matrix families phi with
        phi_v X_a = Y_a phi_u for every arrow a: u -> v of R."""
        key = (x, y)
        if key in self._hom_cache:
            return self._hom_cache[key]
        X, Y = self.indecs[x], self.indecs[y]
        layout = {}
        off = 0
        for u in self.q.vertices:
            layout[u] = (off, Y.dims[u], X.dims[u])
            off += Y.dims[u] * X.dims[u]
        total = off
        rows = []
        for a in self.rq.arrows:
            u, v = a.src, a.tgt
            Xa, Ya = X.mats[a.id], Y.mats[a.id]
            off_u, _, cols_u = layout[u]
            off_v, _, cols_v = layout[v]
            for i in range(Y.dims[v]):
                for j in range(X.dims[u]):
                    row = [F0] * total
                    for k in range(X.dims[v]):
                        row[off_v + i * cols_v + k] += Xa.a[k][j]
                    for k in range(Y.dims[u]):
                        row[off_u + k * cols_u + j] -= Ya.a[i][k]
                    rows.append(row)
        sysmat = Mat(len(rows), total, rows) if rows else Mat(0, total)
        basis = []
        for vec in nullspace(sysmat):
            phi = {}
            for u in self.q.vertices:
                off_u, r, c = layout[u]
                m = Mat(r, c)
                for i in range(r):
                    for j in range(c):
                        m.a[i][j] = vec[off_u + i * c + j]
                phi[u] = m
            basis.append(phi)
        self._hom_cache[key] = basis
        return basis

    def hom_dim(self, x, y):
        return len(self.hom_basis(x, y))

    # ---- presentations and Ext ------------------------------------------

    def min_projective_presentation(self, x):
        """Minimal 0 -> P1 -> P0 -> X -> 0 with explicit data.

        Maps out of the projective sums are handled through generator
        images: a map ProjSum -> N is determined by the images of the slot
        generators.
        """
        if x in self._pres_cache:
            return self._pres_cache[x]
        ind = self.indecs[x]
        rad = {u: Subspace(ind.dims[u]) for u in self.q.vertices}
        for a in self.rq.arrows:
            m = ind.mats[a.id]
            for j in range(m.cols):
                rad[a.tgt].add(m.column(j))
        p0_slots = []
        cover_gens = []
        for u in self.q.vertices:
            for j in rad[u].complement_indices():
                e = [F0] * ind.dims[u]
                e[j] = F1
                p0_slots.append(u)
                cover_gens.append(e)
        P0 = ProjSum(self, p0_slots)
        cover = P0.expand(cover_gens, ind)
        for u in self.q.vertices:
            if rank(cover[u]) != ind.dims[u]:
                raise AssertionError("projective cover is not surjective")
        kbasis = {u: nullspace(cover[u]) for u in self.q.vertices}
        ker_dims = {u: len(kbasis[u]) for u in self.q.vertices}
        ker_incl = {u: Mat.from_columns(kbasis[u], P0.dims[u]) for u in self.q.vertices}
        solvers = {u: Solver(ker_incl[u]) for u in self.q.vertices}
        ker_mats = {}
        for a in self.rq.arrows:
            m = Mat(ker_dims[a.tgt], ker_dims[a.src])
            for j in range(ker_dims[a.src]):
                img = P0.mats[a.id].apply(kbasis[a.src][j])
                coords = solvers[a.tgt].solve(img)
                if coords is None:
                    raise AssertionError("presentation kernel not arrow-stable")
                for i in range(ker_dims[a.tgt]):
                    m.a[i][j] = coords[i]
            ker_mats[a.id] = m
        ker = Indec(-1, ker_dims, ker_mats, -1)
        # the kernel is projective over a hereditary base: split off its top
        krad = {u: Subspace(ker_dims[u]) for u in self.q.vertices}
        for a in self.rq.arrows:
            m = ker_mats[a.id]
            for j in range(m.cols):
                krad[a.tgt].add(m.column(j))
        p1_slots = []
        p1_gens = []
        for u in self.q.vertices:
            for j in krad[u].complement_indices():
                e = [F0] * ker_dims[u]
                e[j] = F1
                p1_slots.append(u)
                p1_gens.append(e)
        P1 = ProjSum(self, p1_slots)
        phi = P1.expand(p1_gens, ker)   # cover of the kernel; iso when ker is projective
        iota = {}
        for u in self.q.vertices:
            if P1.dims[u] != ker_dims[u] or rank(phi[u]) != ker_dims[u]:
                raise AssertionError("kernel of a cover is not projective; base not hereditary?")
            iota[u] = ker_incl[u].mul(phi[u])
        pres = Presentation(x, P0, cover_gens, P1, iota)
        for u in self.q.vertices:
            if P1.dims[u] + ind.dims[u] != P0.dims[u]:
                raise AssertionError("presentation dimension audit failed")
        self._pres_cache[x] = pres
        return pres

    def ext1_dim(self, x, y):
        """dim Ext^1(X, Y) = dim coker(Hom(P0,Y) -> Hom(P1,Y))."""
        if self.is_projective(x):
            return 0
        pres = self.min_projective_presentation(x)
        Y = self.indecs[y]
        total = pres.hom_p1_dim(Y)
        img = Subspace(total)
        for col in pres.restriction_columns(Y):
            img.add(col)
        return total - img.dim


class ProjSum:
    """An ordered direct sum of indecomposable projectives P(v).

    The basis at vertex u concatenates, slot by slot, the R-paths v -> u.
    A homomorphism out of the sum is stored as the list of generator
    images (one vector per slot).
    """

    def __init__(self, catalog, slots):
        self.catalog = catalog
        self.slots = tuple(slots)
        rp = catalog._rpaths
        self.dims = {u: 0 for u in catalog.q.vertices}
        self.offsets = []
        for v in self.slots:
            self.offsets.append(dict(self.dims))
            for u in catalog.q.vertices:
                self.dims[u] += len(rp.paths(v, u))
        self.mats = {}
        for a in catalog.rq.arrows:
            m = Mat(self.dims[a.tgt], self.dims[a.src])
            for k, v in enumerate(self.slots):
                src_paths = rp.paths(v, a.src)
                tgt_index = rp.path_index(v, a.tgt)
                for col, p in enumerate(src_paths):
                    m.a[self.offsets[k][a.tgt] + tgt_index[p.then(arrow_path(a))]][
                        self.offsets[k][a.src] + col
                    ] = F1
            self.mats[a.id] = m
        # the slot generator (trivial path) sits first in its slot's block
        self.gen_positions = [self.offsets[k][v] for k, v in enumerate(self.slots)]

    def expand(self, gen_images, target):
        """Per-vertex matrices of the map sending slot generators to gen_images.

        `target` has .dims and .mats over the catalog's opposite quiver."""
        rp = self.catalog._rpaths
        cols = {u: [] for u in self.catalog.q.vertices}
        for k, v in enumerate(self.slots):
            g = gen_images[k]
            for u in self.catalog.q.vertices:
                for p in rp.paths(v, u):
                    vec = list(g)
                    for aid in p.arrows:
                        vec = target.mats[aid].apply(vec)
                    cols[u].append(vec)
        return {u: Mat.from_columns(cols[u], target.dims[u]) for u in self.catalog.q.vertices}

    def gen_image_of(self, mats):
        """Inverse of expand: read off generator images from per-vertex maps."""
        return [mats[v].column(self.gen_positions[k]) for k, v in enumerate(self.slots)]


class Presentation:
    """Minimal projective presentation 0 -> P1 --iota--> P0 -> X -> 0."""

    def __init__(self, x, p0, cover_gens, p1, iota):
        self.x = x
        self.p0 = p0
        self.cover_gens = cover_gens
        self.p1 = p1
        self.iota = iota  # per-vertex Mat: P0.dims[u] x P1.dims[u]

    def hom_p1_dim(self, Y):
        return sum(Y.dims[u] for u in self.p1.slots)

    def hom_p0_basis_gens(self):
        """Generator-image bases of Hom(P0, Y) are produced lazily per Y."""
        return self.p0.slots

    def restriction_columns(self, Y):
        """Images in Hom(P1, Y)-coordinates of the Hom(P0, Y) basis vectors."""
        cols = []
        for k in range(len(self.p0.slots)):
            w = self.p0.slots[k]
            for t in range(Y.dims[w]):
                gens = []
                for kk, ww in enumerate(self.p0.slots):
                    vec = [F0] * Y.dims[ww]
                    if kk == k:
                        vec[t] = F1
                    gens.append(vec)
                mats = self.p0.expand(gens, Y)
                restricted = {u: mats[u].mul(self.iota[u]) for u in mats}
                col = []
                for kk, u in enumerate(self.p1.slots):
                    col.extend(restricted[u].column(self.p1.gen_positions[kk]))
                cols.append(col)
        return cols

    def restrict_hom(self, Y, p0_gen_images):
        """Restriction along iota of a map P0 -> Y given by generator images."""
        mats = self.p0.expand(p0_gen_images, Y)
        restricted = {u: mats[u].mul(self.iota[u]) for u in mats}
        col = []
        for kk, u in enumerate(self.p1.slots):
            col.extend(restricted[u].column(self.p1.gen_positions[kk]))
        return col


def knit_catalog(q):
    """Public constructor; raises DynkinTypeError off the A/D tree families."""
    return ARCatalog(q)
