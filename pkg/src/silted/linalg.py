"""Dense exact linear algebra over the rationals.

Everything downstream (intertwiner solving, knitting, presentation
extraction, global dimension) runs on Fraction-valued matrices; there is
no floating point anywhere in the package.
"""

from fractions import Fraction

F0 = Fraction(0)
F1 = Fraction(1)


class Mat:
    """A rows x cols matrix of Fractions with explicit shape.

    Shapes are carried explicitly so zero-dimensional spaces (empty
    matrices) behave correctly in products, stacks and rank computations.
    """

    __slots__ = ("rows", "cols", "a")

    def __init__(self, rows, cols, entries=None):
        self.rows = rows
        self.cols = cols
        if entries is None:
            self.a = [[F0] * cols for _ in range(rows)]
        else:
            if len(entries) != rows or any(len(r) != cols for r in entries):
                raise ValueError("entry grid does not match shape")
            self.a = [[Fraction(x) for x in r] for r in entries]

    @staticmethod
    def identity(n):
        m = Mat(n, n)
        for i in range(n):
            m.a[i][i] = F1
        return m

    @staticmethod
    def zero(rows, cols):
        return Mat(rows, cols)

    @staticmethod
    def from_columns(cols_list, rows):
        m = Mat(rows, len(cols_list))
        for j, col in enumerate(cols_list):
            for i in range(rows):
                m.a[i][j] = col[i]
        return m

    def copy(self):
        return Mat(self.rows, self.cols, self.a)

    def column(self, j):
        return [self.a[i][j] for i in range(self.rows)]

    def __eq__(self, other):
        return (
            isinstance(other, Mat)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.a == other.a
        )

    def __repr__(self):
        return f"Mat({self.rows}x{self.cols}, {self.a})"

    def is_zero(self):
        return all(x == 0 for row in self.a for x in row)

    def mul(self, other):
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} * {other.rows}x{other.cols}")
        out = Mat(self.rows, other.cols)
        for i in range(self.rows):
            arow = self.a[i]
            orow = out.a[i]
            for k in range(self.cols):
                x = arow[k]
                if x == 0:
                    continue
                brow = other.a[k]
                for j in range(other.cols):
                    if brow[j] != 0:
                        orow[j] += x * brow[j]
        return out

    def add(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch in add")
        return Mat(self.rows, self.cols, [[self.a[i][j] + other.a[i][j] for j in range(self.cols)] for i in range(self.rows)])

    def scale(self, c):
        c = Fraction(c)
        return Mat(self.rows, self.cols, [[c * x for x in row] for row in self.a])

    def apply(self, vec):
        if len(vec) != self.cols:
            raise ValueError("vector length mismatch")
        return [sum((self.a[i][j] * vec[j] for j in range(self.cols)), F0) for i in range(self.rows)]

    def flatten(self):
        return [x for row in self.a for x in row]

    def transpose(self):
        return Mat(self.cols, self.rows, [[self.a[i][j] for i in range(self.rows)] for j in range(self.cols)])


def stack_rows(mats, cols):
    """Vertically stack matrices that all have `cols` columns."""
    rows = sum(m.rows for m in mats)
    out = Mat(rows, cols)
    r = 0
    for m in mats:
        for i in range(m.rows):
            out.a[r] = list(m.a[i])
            r += 1
    return out


class Subspace:
    """A subspace of Q^n kept in reduced row echelon form.

    Supports membership tests, canonical reduction of vectors modulo the
    subspace, and canonical quotient coordinates (the non-pivot columns).
    """

    __slots__ = ("ambient", "rows", "pivots")

    def __init__(self, ambient):
        self.ambient = ambient
        self.rows = []
        self.pivots = []

    @property
    def dim(self):
        return len(self.rows)

    def reduce(self, vec):
        v = list(vec)
        for row, p in zip(self.rows, self.pivots):
            c = v[p]
            if c != 0:
                for j in range(p, self.ambient):
                    v[j] -= c * row[j]
        return v

    def contains(self, vec):
        return all(x == 0 for x in self.reduce(vec))

    def add(self, vec):
        """Insert a vector; returns True if the dimension grew."""
        v = self.reduce(vec)
        piv = next((j for j in range(self.ambient) if v[j] != 0), None)
        if piv is None:
            return False
        inv = F1 / v[piv]
        v = [x * inv for x in v]
        # keep earlier rows fully reduced
        for row in self.rows:
            c = row[piv]
            if c != 0:
                for j in range(self.ambient):
                    row[j] -= c * v[j]
        k = next((i for i, p in enumerate(self.pivots) if p > piv), len(self.pivots))
        self.rows.insert(k, v)
        self.pivots.insert(k, piv)
        return True

    def add_all(self, vecs):
        grew = False
        for v in vecs:
            grew = self.add(v) or grew
        return grew

    def complement_indices(self):
        pivset = set(self.pivots)
        return [j for j in range(self.ambient) if j not in pivset]

    def quotient_coords(self, vec):
        """Coordinates of vec + self in the canonical complement basis."""
        v = self.reduce(vec)
        return [v[j] for j in self.complement_indices()]

    def basis(self):
        return [list(r) for r in self.rows]

    def key(self):
        """Hashable canonical form (rref rows), usable for subspace equality."""
        return tuple(tuple(r) for r in self.rows)


def rref(mat):
    """Reduced row echelon form; returns (rows, pivot_columns)."""
    sp = Subspace(mat.cols)
    for i in range(mat.rows):
        sp.add(mat.a[i])
    return sp.basis(), list(sp.pivots)


def rank(mat):
    sp = Subspace(mat.cols)
    for i in range(mat.rows):
        sp.add(mat.a[i])
    return sp.dim


def column_space(mat):
    """Subspace of Q^rows spanned by the columns."""
    sp = Subspace(mat.rows)
    for j in range(mat.cols):
        sp.add(mat.column(j))
    return sp


def nullspace(mat):
    """Canonical basis of the right kernel, ordered by free column index."""
    rows, pivots = rref(mat)
    pivset = set(pivots)
    free = [j for j in range(mat.cols) if j not in pivset]
    basis = []
    for f in free:
        v = [F0] * mat.cols
        v[f] = F1
        for row, p in zip(rows, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


def solve(mat, rhs):
    """One solution of mat * x = rhs (free variables set to 0), or None."""
    aug = Mat(mat.rows, mat.cols + 1)
    for i in range(mat.rows):
        aug.a[i] = list(mat.a[i]) + [Fraction(rhs[i])]
    rows, pivots = rref(aug)
    x = [F0] * mat.cols
    for row, p in zip(rows, pivots):
        if p == mat.cols:
            return None
        x[p] = row[mat.cols]
    return x


def integer_solve(emat, b):
    """One integer solution x of E x = b (E an integer matrix), or None.

    Column Hermite reduction E * U = H with H in column echelon form; the
    non-pivot columns of H vanish, so forward substitution with zero free
    variables is complete.  Sized for the small exponent systems that
    arise when matching relation ideals up to arrow rescaling.
    """
    m = len(emat)
    n = len(emat[0]) if emat else 0
    if n == 0:
        return [] if all(x == 0 for x in b) else None
    E = [list(r) for r in emat]
    U = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def colop_swap(a_, b_):
        for i in range(m):
            E[i][a_], E[i][b_] = E[i][b_], E[i][a_]
        for i in range(n):
            U[i][a_], U[i][b_] = U[i][b_], U[i][a_]

    def colop_addmul(dst, src, q):
        for i in range(m):
            E[i][dst] -= q * E[i][src]
        for i in range(n):
            U[i][dst] -= q * U[i][src]

    col = 0
    pivots = []  # (row, col) of H
    for row in range(m):
        if col >= n:
            break
        while True:
            nz = [j for j in range(col, n) if E[row][j] != 0]
            if not nz:
                break
            j0 = min(nz, key=lambda j: abs(E[row][j]))
            if j0 != col:
                colop_swap(col, j0)
            finished = True
            for j in range(col + 1, n):
                if E[row][j] != 0:
                    q = E[row][j] // E[row][col]
                    if q:
                        colop_addmul(j, col, q)
                    if E[row][j] != 0:
                        finished = False
            if finished:
                break
        if col < n and E[row][col] != 0:
            pivots.append((row, col))
            col += 1
    # solve H y = b; non-pivot columns of H are zero, so set their y to 0
    y = [0] * n
    piv_by_row = {r: c for (r, c) in pivots}
    for row in range(m):
        acc = b[row] - sum(E[row][c] * y[c] for (_, c) in pivots)
        if row in piv_by_row:
            c = piv_by_row[row]
            acc += E[row][c] * y[c]
            if acc % E[row][c] != 0:
                return None
            y[c] = acc // E[row][c]
        elif acc != 0:
            return None
    x = [sum(U[i][j] * y[j] for j in range(n)) for i in range(n)]
    for erow, bb in zip(emat, b):
        if sum(e * xx for e, xx in zip(erow, x)) != bb:
            raise AssertionError("integer_solve produced an invalid solution")
    return x


class Solver:
    """Reusable solver for many right-hand sides against a fixed matrix."""

    def __init__(self, mat):
        self.mat = mat
        n = mat.cols
        # carry an identity block to record the row operations
        aug = Mat(mat.rows, n + mat.rows)
        for i in range(mat.rows):
            aug.a[i] = list(mat.a[i]) + [F1 if j == i else F0 for j in range(mat.rows)]
        sp = Subspace(n + mat.rows)
        for i in range(mat.rows):
            sp.add(aug.a[i])
        self.rows = [r for r in sp.rows]
        self.pivots = list(sp.pivots)

    def solve(self, rhs):
        """Return x with mat*x = rhs (free vars 0), or None if inconsistent."""
        n = self.mat.cols
        x = [F0] * n
        for row, p in zip(self.rows, self.pivots):
            if p >= n:
                # pure row-operation row: consistency constraint
                val = sum((row[n + i] * rhs[i] for i in range(self.mat.rows)), F0)
                if val != 0:
                    return None
                continue
            val = sum((row[n + i] * rhs[i] for i in range(self.mat.rows)), F0)
            x[p] = val
        # verify (guards against free-variable interaction)
        chk = self.mat.apply(x)
        if chk != list(map(Fraction, rhs)):
            # fall back to a full solve; inconsistent systems return None
            return solve(self.mat, rhs)
        return x
