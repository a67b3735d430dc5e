"""Enumeration of basic 2-term presilting/silting/tilting complexes.

The support-tau-tilting criterion turns 2-term compatibility into module
checks: two modules are compatible when Hom(X, tau Y) = Hom(Y, tau X) = 0
(tau of a projective read as 0), a module is compatible with P(v)[1] when
it vanishes at v, and shifted projectives are mutually compatible.  Basic
2-term silting complexes are exactly the n-element compatible families.
"""

from dataclasses import dataclass


@dataclass(frozen=True)
class TwoTermObject:
    """A multiset-free 2-term complex: module ids plus shifted vertices."""

    modules: tuple
    shifted: tuple

    def __post_init__(self):
        object.__setattr__(self, "modules", tuple(sorted(self.modules)))
        object.__setattr__(self, "shifted", tuple(sorted(self.shifted)))
        if len(set(self.modules)) != len(self.modules):
            raise ValueError("repeated module summand")
        if len(set(self.shifted)) != len(self.shifted):
            raise ValueError("repeated shifted summand")

    @property
    def size(self):
        return len(self.modules) + len(self.shifted)

    def summands(self):
        return [("m", x) for x in self.modules] + [("s", v) for v in self.shifted]


def two_term(modules=(), shifted=()):
    return TwoTermObject(tuple(modules), tuple(shifted))


def _hom_to_tau(cat, x, y):
    """dim Hom(X, tau Y), with tau(projective) = 0."""
    if cat.is_projective(y):
        return 0
    return cat.hom_dim(x, cat.tau(y))


def modules_compatible(cat, x, y):
    return _hom_to_tau(cat, x, y) == 0 and _hom_to_tau(cat, y, x) == 0


def module_shift_compatible(cat, x, v):
    """P(v)[1] and X coexist iff Hom(P(v), X) = X_v vanishes."""
    return cat.indecs[x].dims[v] == 0


def is_presilting(s, cat):
    """Pairwise vanishing of positive-shift homs, via the tau-rigidity test."""
    mods = list(s.modules)
    for i, x in enumerate(mods):
        for y in mods[i:]:
            if x == y:
                if _hom_to_tau(cat, x, x) != 0:
                    return False
            elif not modules_compatible(cat, x, y):
                return False
    for v in s.shifted:
        if cat.proj(v) in s.modules:
            return False
        for x in mods:
            if not module_shift_compatible(cat, x, v):
                return False
    return True


def is_silting(s, cat):
    return s.size == len(cat.q.vertices) and is_presilting(s, cat)


def is_two_term_tilting(s, cat):
    """Silting + vanishing of the degree -1 homs Hom(X, P(v))."""
    if not is_silting(s, cat):
        raise ValueError("is_two_term_tilting expects a silting object")
    for v in s.shifted:
        p = cat.proj(v)
        for x in s.modules:
            if cat.hom_dim(x, p) != 0:
                return False
    return True


class CompatibilityGraph:
    """Pairwise presilting compatibility over catalog modules and shifts.

    Nodes are 0..N-1 for the catalog modules followed by one node per
    shifted vertex; adjacency is kept in bitsets.
    """

    def __init__(self, cat, include_shifts=True):
        self.cat = cat
        self.nmod = len(cat)
        self.shift_vertices = list(cat.q.vertices) if include_shifts else []
        self.size = self.nmod + len(self.shift_vertices)
        self.adj = [0] * self.size
        for x in range(self.nmod):
            for y in range(x + 1, self.nmod):
                if modules_compatible(cat, x, y):
                    self.adj[x] |= 1 << y
                    self.adj[y] |= 1 << x
        for k, v in enumerate(self.shift_vertices):
            node = self.nmod + k
            pv = cat.proj(v)
            for x in range(self.nmod):
                if x != pv and module_shift_compatible(cat, x, v):
                    self.adj[x] |= 1 << node
                    self.adj[node] |= 1 << x
            for kk in range(len(self.shift_vertices)):
                other = self.nmod + kk
                if other != node:
                    self.adj[node] |= 1 << other
                    self.adj[other] |= 1 << node

    def node_object(self, bits):
        mods = []
        shifts = []
        for i in range(self.size):
            if bits >> i & 1:
                if i < self.nmod:
                    mods.append(i)
                else:
                    shifts.append(self.shift_vertices[i - self.nmod])
        return two_term(mods, shifts)

    def cliques_of_size(self, k, restrict=None):
        """All k-cliques (as bitsets), extended in ascending node order."""
        full = (1 << self.size) - 1 if restrict is None else restrict
        out = []

        def extend(clique, count, candidates):
            if count == k:
                out.append(clique)
                return
            if count + bin(candidates).count("1") < k:
                return
            cand = candidates
            while cand:
                low = cand & -cand
                i = low.bit_length() - 1
                cand ^= low
                extend(clique | low, count + 1, cand & self.adj[i])

        extend(0, 0, full)
        return out


def enumerate_two_term_silting(cat, graph=None):
    """All basic 2-term silting complexes, in canonical order."""
    n = len(cat.q.vertices)
    graph = graph or CompatibilityGraph(cat)
    objs = [graph.node_object(bits) for bits in graph.cliques_of_size(n)]
    for s in objs:
        if not is_silting(s, cat):
            raise AssertionError("clique enumeration produced a non-silting object")
    objs.sort(key=lambda s: (s.modules, s.shifted))
    return objs


def enumerate_tilting_modules(cat, graph=None):
    """Basic tilting modules = silting objects with empty shifted part."""
    n = len(cat.q.vertices)
    graph = graph or CompatibilityGraph(cat, include_shifts=False)
    restrict = (1 << graph.nmod) - 1
    objs = [graph.node_object(bits) for bits in graph.cliques_of_size(n, restrict)]
    objs.sort(key=lambda s: s.modules)
    return objs


def count_tm_lambda(cat, m):
    """Tilting modules all of whose summands survive m steps of tau^{-1}."""
    if m < 1:
        raise ValueError("m must be >= 1")
    count = 0
    for t in enumerate_tilting_modules(cat):
        if all(cat.tau_inv_iterated(x, m) is not None for x in t.modules):
            count += 1
    return count


def completions(cat, graph, s, removed):
    """Silting completions of s minus one summand; used as a mutation check."""
    rest = [x for x in s.summands() if x != removed]
    keep_mods = [x for (k, x) in rest if k == "m"]
    keep_shifts = [v for (k, v) in rest if k == "s"]
    found = []
    for x in range(len(cat)):
        if x in keep_mods:
            continue
        cand = two_term(keep_mods + [x], keep_shifts)
        if is_silting(cand, cat):
            found.append(cand)
    for v in cat.q.vertices:
        if v in keep_shifts:
            continue
        cand = two_term(keep_mods, keep_shifts + [v])
        if is_silting(cand, cat):
            found.append(cand)
    return found


def silting_to_json(cat, objs):
    return [
        {
            "modules": [list(cat.dim_vector(x)) for x in s.modules],
            "shifted": list(s.shifted),
        }
        for s in objs
    ]
