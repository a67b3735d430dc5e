"""Endomorphism presentations of 2-term objects.

A 2-term object is a set of module summands plus shifted projectives
P(v)[1].  Hom spaces in the homotopy category reduce to module data over a
hereditary base:

  Hom(M, N)        = module homomorphisms,
  Hom(M, P(v)[1])  = coker( Hom(P0, P(v)) -> Hom(P1, P(v)) )  (= Ext^1(M, P(v))),
  Hom(P(v)[1], M)  = 0,
  Hom(P(v)[1], P(w)[1]) = Hom(P(v), P(w)).

Compositions through the shifted part are chain-level: module maps are
lifted to presentations and composed on the P1 component.  The output is
a quiver with relations (the Gabriel quiver with a minimal generating set
of the kernel ideal), audited against the total hom dimension.
"""

from .linalg import F0, F1, Mat, Solver, Subspace, nullspace
from .quivers import Arrow, Path, Quiver, QuiverWithRelations, Relation


MOD = "m"
SHIFT = "s"


class HomSpace:
    """One Hom(X, Y) with a fixed canonical basis and coordinatization."""

    def __init__(self, kind, dim, data):
        self.kind = kind  # "mm" | "ms" | "ss" | "sm"
        self.dim = dim
        self.data = data

    def basis(self):
        return self.data["basis"] if self.data else []


class TwoTermHomCalc:
    """Hom/compose engine for 2-term objects over a fixed catalog."""

    def __init__(self, catalog):
        self.cat = catalog
        self._ext_cache = {}
        self._cover_solver_cache = {}
        self._iota_solver_cache = {}
        self._mm_solver_cache = {}
        self._space_cache = {}

    # ---- space constructors -------------------------------------------

    def space(self, src, tgt):
        key = (src, tgt)
        if key in self._space_cache:
            return self._space_cache[key]
        if src[0] == MOD and tgt[0] == MOD:
            sp = self._mm_space(src[1], tgt[1])
        elif src[0] == MOD and tgt[0] == SHIFT:
            sp = self._ms_space(src[1], tgt[1])
        elif src[0] == SHIFT and tgt[0] == SHIFT:
            sp = self._mm_space(self.cat.proj(src[1]), self.cat.proj(tgt[1]), kind="ss")
        else:
            sp = HomSpace("sm", 0, None)
        self._space_cache[key] = sp
        return sp

    def _mm_space(self, x, y, kind="mm"):
        basis = self.cat.hom_basis(x, y)
        return HomSpace(kind, len(basis), {"x": x, "y": y, "basis": basis})

    def _ms_space(self, x, v):
        dim, sub, pres = self._ext_data(x, v)
        reps = []
        total = sub.ambient
        for j in sub.complement_indices():
            e = [F0] * total
            e[j] = F1
            reps.append(e)
        return HomSpace("ms", dim, {"x": x, "v": v, "sub": sub, "pres": pres, "basis": reps})

    def _ext_data(self, x, v):
        key = (x, v)
        if key in self._ext_cache:
            return self._ext_cache[key]
        pres = self.cat.min_projective_presentation(x)
        P = self.cat.indecs[self.cat.proj(v)]
        total = pres.hom_p1_dim(P)
        sub = Subspace(total)
        if not self.cat.is_projective(x):
            for col in pres.restriction_columns(P):
                sub.add(col)
        else:
            # Ext^1 out of a projective vanishes (P1 = 0 there anyway)
            pass
        out = (total - sub.dim, sub, pres)
        self._ext_cache[key] = out
        return out

    # ---- coordinates ----------------------------------------------------

    def coords(self, space, concrete):
        if space.kind == "sm":
            return []
        if space.kind == "ms":
            return space.data["sub"].quotient_coords(concrete)
        # module-style spaces
        if space.dim == 0:
            if concrete is not None and any(
                x != 0 for u in self.cat.q.vertices for x in concrete[u].flatten()
            ):
                raise AssertionError("nonzero map in a zero hom space")
            return []
        key = (space.data["x"], space.data["y"])
        solver = self._mm_solver_cache.get(key)
        if solver is None:
            cols = [self._flatten_mm(b) for b in space.data["basis"]]
            solver = Solver(Mat.from_columns(cols, len(cols[0])))
            self._mm_solver_cache[key] = solver
        out = solver.solve(self._flatten_mm(concrete))
        if out is None:
            raise AssertionError("map does not lie in its hom space")
        return out

    def _flatten_mm(self, mats):
        out = []
        for u in self.cat.q.vertices:
            out.extend(mats[u].flatten())
        return out

    def element(self, space, coords):
        """Concrete representative of a coordinate vector."""
        if space.kind in ("mm", "ss"):
            X = self.cat.indecs[space.data["x"]]
            Y = self.cat.indecs[space.data["y"]]
            mats = {u: Mat(Y.dims[u], X.dims[u]) for u in self.cat.q.vertices}
            for c, b in zip(coords, space.data["basis"]):
                if c == 0:
                    continue
                for u in self.cat.q.vertices:
                    mats[u] = mats[u].add(b[u].scale(c))
            return mats
        if space.kind == "ms":
            total = space.data["sub"].ambient
            vec = [F0] * total
            for c, rep in zip(coords, space.data["basis"]):
                if c == 0:
                    continue
                for i in range(total):
                    vec[i] += c * rep[i]
            return vec
        return None

    # ---- composition -----------------------------------------------------

    def compose(self, src, mid, tgt, f, g):
        """Concrete composite g . f for f: src -> mid, g: mid -> tgt."""
        sig = (src[0], mid[0], tgt[0])
        if sig == (MOD, MOD, MOD) or sig == (SHIFT, SHIFT, SHIFT):
            return {u: g[u].mul(f[u]) for u in self.cat.q.vertices}
        if sig == (MOD, MOD, SHIFT):
            lift = self._lift_p1(src[1], mid[1], f)
            return self._postcompose_p1(tgt[1], g, lift)
        if sig == (MOD, SHIFT, SHIFT):
            pres = self.cat.min_projective_presentation(src[1])
            P_mid = self.cat.indecs[self.cat.proj(mid[1])]
            out = []
            off = 0
            for u in pres.p1.slots:
                chunk = f[off:off + P_mid.dims[u]]
                off += P_mid.dims[u]
                out.extend(g[u].apply(chunk))
            return out
        raise AssertionError(f"unsupported composition signature {sig}")

    def _cover_solvers(self, y):
        if y in self._cover_solver_cache:
            return self._cover_solver_cache[y]
        pres = self.cat.min_projective_presentation(y)
        Y = self.cat.indecs[y]
        cover = pres.p0.expand(pres.cover_gens, Y)
        solvers = {u: Solver(cover[u]) for u in self.cat.q.vertices}
        self._cover_solver_cache[y] = (pres, solvers)
        return pres, solvers

    def _iota_solvers(self, y):
        if y in self._iota_solver_cache:
            return self._iota_solver_cache[y]
        pres = self.cat.min_projective_presentation(y)
        solvers = {u: Solver(pres.iota[u]) for u in self.cat.q.vertices}
        self._iota_solver_cache[y] = solvers
        return solvers

    def _lift_p1(self, x, y, f):
        """P1-component of a chain lift of the module map f: X -> Y."""
        pres_x = self.cat.min_projective_presentation(x)
        pres_y, cover_solvers = self._cover_solvers(y)
        gens0 = []
        for k, w in enumerate(pres_x.p0.slots):
            target_vec = f[w].apply(pres_x.cover_gens[k])
            y0 = cover_solvers[w].solve(target_vec)
            if y0 is None:
                raise AssertionError("projective cover factorization failed")
            gens0.append(y0)
        f0 = pres_x.p0.expand(gens0, _ProjView(pres_y.p0))
        iota_solvers = self._iota_solvers(y)
        f1 = {}
        for u in self.cat.q.vertices:
            m = f0[u].mul(pres_x.iota[u])
            out = Mat(pres_y.p1.dims[u], pres_x.p1.dims[u])
            for j in range(m.cols):
                sol = iota_solvers[u].solve(m.column(j))
                if sol is None:
                    raise AssertionError("chain lift does not preserve syzygies")
                for i in range(out.rows):
                    out.a[i][j] = sol[i]
            f1[u] = out
        return (pres_x, pres_y, f1)

    def _postcompose_p1(self, v, eta, lift):
        """(eta: Y -> P(v)[1]) composed with a chain lift of f: X -> Y."""
        pres_x, pres_y, f1 = lift
        P = self.cat.indecs[self.cat.proj(v)]
        gens = []
        off = 0
        for u in pres_y.p1.slots:
            gens.append(eta[off:off + P.dims[u]])
            off += P.dims[u]
        eta_mats = pres_y.p1.expand(gens, P)
        comp = {u: eta_mats[u].mul(f1[u]) for u in self.cat.q.vertices}
        out = []
        for k, u in enumerate(pres_x.p1.slots):
            out.extend(comp[u].column(pres_x.p1.gen_positions[k]))
        return out


class _ProjView:
    """Adapter giving a ProjSum the .dims/.mats interface of a representation."""

    def __init__(self, projsum):
        self.dims = projsum.dims
        self.mats = projsum.mats


class EndPresentation:
    """Gabriel quiver + minimal relations of End(S), with provenance."""

    def __init__(self, qwr, summands, provenance, hom_dims, total_dim):
        self.qwr = qwr
        self.summands = summands
        self.provenance = provenance   # vertex id -> descriptor dict
        self.hom_dims = hom_dims
        self.total_dim = total_dim

    def to_json(self):
        from .quivers import qwr_to_json

        doc = qwr_to_json(self.qwr)
        doc["vertexSummands"] = {str(v): self.provenance[v] for v in self.qwr.quiver.vertices}
        doc["totalDim"] = self.total_dim
        return doc


def hom_two_term(calc, src, tgt):
    """Hom space between two summand descriptors ('m', id) / ('s', vertex)."""
    return calc.space(src, tgt)


def end_algebra(silt, cat, calc=None, audit=True):
    """Quiver-with-relations presentation of End(S) for a 2-term silting S.

    Vertices are numbered 1..n in summand order (modules ascending, then
    shifted vertices ascending); arrows are canonical rad/rad^2 witnesses;
    relations are a minimal generating set of the kernel of the path
    evaluation map onto the hom algebra.  With audit=True the dimension of
    the presented algebra is checked against the total hom dimension.
    """
    if calc is None:
        calc = TwoTermHomCalc(cat)
    summands = [(MOD, x) for x in sorted(silt.modules)] + [
        (SHIFT, v) for v in sorted(silt.shifted)
    ]
    n = len(summands)
    spaces = {}
    for i in range(n):
        for j in range(n):
            spaces[(i, j)] = calc.space(summands[i], summands[j])
    h = [[spaces[(i, j)].dim for j in range(n)] for i in range(n)]
    for i in range(n):
        if h[i][i] != 1:
            raise AssertionError("summand is not a brick; End extraction invalid")
        for j in range(n):
            if i != j and h[i][j] and h[j][i]:
                raise AssertionError("hom spaces both ways; End is not directed")

    rad2 = {}
    for i in range(n):
        for j in range(n):
            if i == j or h[i][j] == 0:
                continue
            span = Subspace(h[i][j])
            for k in range(n):
                if k == i or k == j or h[i][k] == 0 or h[k][j] == 0:
                    continue
                for f in spaces[(i, k)].basis():
                    for g in spaces[(k, j)].basis():
                        comp = calc.compose(summands[i], summands[k], summands[j], f, g)
                        span.add(calc.coords(spaces[(i, j)], comp))
            rad2[(i, j)] = span

    arrows = []
    witnesses = {}
    arrow_id = 1
    for i in range(n):
        for j in range(n):
            if i == j or h[i][j] == 0:
                continue
            span = Subspace(h[i][j])
            for row in rad2[(i, j)].basis():
                span.add(row)
            for t in range(h[i][j]):
                e = [F0] * h[i][j]
                e[t] = F1
                if span.add(e):
                    arrows.append(Arrow(arrow_id, i + 1, j + 1))
                    witnesses[arrow_id] = spaces[(i, j)].data["basis"][t]
                    arrow_id += 1

    gq = Quiver(range(1, n + 1), arrows)
    if not gq.is_acyclic():
        raise AssertionError("Gabriel quiver of End is not acyclic")

    out_by_vertex = {v: sorted((a for a in arrows if a.src == v), key=lambda a: a.id) for v in gq.vertices}
    paths_by_pair = {}
    eval_by_path = {}

    def dfs(path_arrows, src, cur, concrete):
        for a in out_by_vertex[cur]:
            wit = witnesses[a.id]
            if path_arrows:
                comp = calc.compose(
                    summands[src - 1], summands[cur - 1], summands[a.tgt - 1], concrete, wit
                )
            else:
                comp = wit
            new_path = path_arrows + (a.id,)
            paths_by_pair.setdefault((src, a.tgt), []).append(new_path)
            eval_by_path[new_path] = comp
            dfs(new_path, src, a.tgt, comp)

    for v in gq.vertices:
        dfs((), v, v, None)

    # kernels of the evaluation, per ordered vertex pair
    kernels = {}
    for (u, v), plist in paths_by_pair.items():
        plist.sort(key=lambda p: (len(p), p))
        space = spaces[(u - 1, v - 1)]
        cols = [calc.coords(space, eval_by_path[p]) for p in plist]
        emat = Mat.from_columns(cols, space.dim)
        kvecs = nullspace(emat)
        for kv in kvecs:
            for c, p in zip(kv, plist):
                if c != 0 and len(p) == 1:
                    raise AssertionError("kernel meets the arrow span")
        kernels[(u, v)] = kvecs

    relations = []
    for (u, v) in sorted(paths_by_pair):
        kvecs = kernels[(u, v)]
        if not kvecs:
            continue
        plist = paths_by_pair[(u, v)]
        pindex = {p: t for t, p in enumerate(plist)}
        boundary = Subspace(len(plist))
        for a in out_by_vertex[u]:
            w = a.tgt
            for kv in kernels.get((w, v), []):
                vec = [F0] * len(plist)
                for c, p in zip(kv, paths_by_pair[(w, v)]):
                    if c != 0:
                        vec[pindex[(a.id,) + p]] += c
                boundary.add(vec)
        for (w, x), qlist in paths_by_pair.items():
            if w != u or x == v:
                continue
            for kv in kernels.get((u, x), []):
                for a in out_by_vertex[x]:
                    if a.tgt != v:
                        continue
                    vec = [F0] * len(plist)
                    for c, p in zip(kv, qlist):
                        if c != 0:
                            vec[pindex[p + (a.id,)]] += c
                    boundary.add(vec)
        for kv in kvecs:
            if boundary.add(kv):
                terms = tuple(
                    (c, _arrow_tuple_to_path(gq, p)) for c, p in zip(kv, plist) if c != 0
                )
                relations.append(Relation(terms))

    qwr = QuiverWithRelations(gq, relations)
    total = sum(sum(row) for row in h)
    if audit and qwr.algebra_dimension() != total:
        raise AssertionError("presentation audit failed: ideal does not match kernels")
    provenance = {}
    for idx, s in enumerate(summands):
        if s[0] == MOD:
            provenance[idx + 1] = {"dim": list(cat.dim_vector(s[1]))}
        else:
            provenance[idx + 1] = {"shifted": s[1]}
    return EndPresentation(qwr, summands, provenance, h, total)


def _arrow_tuple_to_path(q, arrow_ids):
    first = q.arrow_by_id[arrow_ids[0]]
    tgt = q.arrow_by_id[arrow_ids[-1]].tgt
    return Path(first.src, tgt, tuple(arrow_ids))
