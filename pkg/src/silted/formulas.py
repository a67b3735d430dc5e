"""Closed-form counting suite for the silting/tilted/strictly-shod census.

Everything returns exact integers.  The evaluators mirror the recurrences
the census is checked against: the slice-count triangle delta(n)_i, the
survival counts t^m, the tilted-algebra counts for the linear A and
D families, and the per-family census splits b_i (D linear) and c_i
(D with the source arrow reversed).

Convention notes baked into the numbers:
  * t(A_0) = 1 and t(A_{-1}) = 0 extend the tilting counts to the empty
    cases the sums touch.
  * counts over the D families identify the two fork vertices (the unique
    nontrivial diagram automorphism); t^m position factors are clamped at
    0 since they count available translate slots.
"""

from fractions import Fraction
from functools import lru_cache
from math import comb


@lru_cache(maxsize=None)
def t_a(n):
    """Number of basic tilting modules over linear A_n (Catalan)."""
    if n <= -1:
        return 0
    if n == 0:
        return 1
    return comb(2 * n, n) // (n + 1)


@lru_cache(maxsize=None)
def delta(n, i):
    """Tilting modules over A_n whose rightmost occupied slice is the i-th."""
    if n < 1 or i < 1 or i > n:
        return 0
    if i == 1:
        return 1
    return delta(n, i - 1) + delta(n - 1, i)


def delta_row(n):
    return [delta(n, i) for i in range(1, n + 1)]


@lru_cache(maxsize=None)
def tm_a(n, m):
    """Survival count over A_n: tilting translates staying full rank."""
    if m < 1:
        raise ValueError("m must be >= 1")
    return sum(delta(n, i) * max(n - m - i + 1, 0) for i in range(1, n + 1))


@lru_cache(maxsize=None)
def tm_lambda_parts(n, m):
    if n < 4 or m < 1:
        raise ValueError("tm_lambda needs n >= 4, m >= 1")
    p1 = sum(delta(n - 1, i) * max(n - m - i, 0) for i in range(1, n - 1))
    p2 = sum(delta(n - 1, i) * max(n - m - 1 - i, 0) for i in range(1, n - 2))
    p3 = sum(t_a(n - j) * tm_lambda(j, m + 1) for j in range(4, n))
    p4 = sum(t_a(n - j - 1) * tm_a(j, m + 1) for j in range(3, n - 1))
    return (p1, p2, p3, p4)


@lru_cache(maxsize=None)
def tm_lambda(n, m):
    """Survival count over the linear D_n algebra (fork vertices identified)."""
    if m >= n - 1:
        return 1 if m == n - 2 else 0
    return sum(tm_lambda_parts(n, m))


@lru_cache(maxsize=None)
def a_nht_a(n):
    """Non-hereditary tilted algebras of type A_n."""
    if n < 1:
        return 0
    return t_a(n) - 2 ** (n - 1)


@lru_cache(maxsize=None)
def a_t_a(n):
    """Tilted algebras of type A_n."""
    if n < 1:
        raise ValueError("a_t_a needs n >= 1")
    val = (
        Fraction(t_a(n))
        + (1 - (-1) ** n) * Fraction(2) ** (n // 2 - 2)
        - Fraction(2) ** (n - 2)
    )
    if val.denominator != 1:
        raise AssertionError("a_t_a did not evaluate to an integer")
    return int(val)


@lru_cache(maxsize=None)
def a_ht_lambda(n):
    """Hereditary tilted algebras of the linear D_n family."""
    if n < 4:
        raise ValueError("a_ht_lambda needs n >= 4")
    if n == 4:
        return 4
    return 3 * 2 ** (n - 3)


@lru_cache(maxsize=None)
def a_nht_lambda(n):
    """Non-hereditary tilted algebras of the linear D_n family."""
    if n < 4:
        raise ValueError("a_nht_lambda needs n >= 4")
    total = a_nht_a(n - 2) + a_nht_a(n - 1) + t_a(n - 2)
    total += sum(t_a(i) * (t_a(n - i - 2) - t_a(n - i - 3)) for i in range(1, n - 3))
    total += sum(tm_lambda(j - 1, 1) * t_a(n + 1 - j) for j in range(5, n + 1))
    total += sum(t_a(n + 1 - k) * (t_a(k - 2) - t_a(k - 3)) for k in range(4, n + 1))
    return total


@lru_cache(maxsize=None)
def a_t_lambda(n):
    """Tilted algebras of the linear D_n family."""
    if n == 4:
        return 7  # one extra identification collapses 4 + 4
    return a_ht_lambda(n) + a_nht_lambda(n)


@lru_cache(maxsize=None)
def a_ss_lambda(n):
    """Strictly shod algebras of the linear D_n family."""
    if n < 4:
        raise ValueError("a_ss_lambda needs n >= 4")
    return a_nht_a(n - 1) - 2 * a_nht_a(n - 2)


@lru_cache(maxsize=None)
def t_lambda(m):
    """Number of basic tilting modules over the linear D_m algebra.

    No closed form is used: degenerate small cases are fixed by the
    diagram (D_1 = A_1, D_2 = A_1 x A_1, D_3 = A_3) and m >= 4 is
    enumerated over the knitted catalog.
    """
    if m <= 1:
        return 1
    if m == 2:
        return 1
    if m == 3:
        return t_a(3)
    from .arcatalog import knit_catalog
    from .quivers import d_linear_quiver
    from .silting import enumerate_tilting_modules

    cat = knit_catalog(d_linear_quiver(m))
    return len(enumerate_tilting_modules(cat))


@lru_cache(maxsize=None)
def a_t1_lambda(n):
    """Tilted algebras from tilting modules having P(n) as a summand."""
    if n == 4:
        # below the formula's range; fixed by the reversed-family census
        # (c_3 at n = 5) and confirmed by enumeration
        return 4
    if n < 4:
        raise ValueError("a_t1_lambda needs n >= 4")
    total = t_lambda(n - 2) + t_lambda(n - 4)
    total += sum(tm_lambda(i - 1, 1) * t_a(n - i) for i in range(5, n + 1))
    total += sum(t_a(n - j) * (t_a(j - 2) - t_a(j - 3)) for j in range(4, n + 1))
    return total


def a_t2_lambda(n):
    """Tilted algebras from tilting modules avoiding P(n)."""
    return a_t_lambda(n) - a_t1_lambda(n)


def a_t2_a(n):
    """Tilted algebras of type A_n from tilting modules avoiding P(n)."""
    if n < 2:
        raise ValueError("a_t2_a needs n >= 2")
    return a_t_a(n) - t_a(n - 1) + 1


def a_t3_a(n):
    """Tilted algebras of type A_n from tilting modules containing P(2)."""
    return a_t_a(n - 1)


@lru_cache(maxsize=None)
def a_t4_a(n):
    if n in (1, 2):
        return 1
    return a_t_a(n) - t_a(n - 1) + 2


@lru_cache(maxsize=None)
def a_s_mu(n):
    """Mixed-orientation A_n silted classes entering the reversed-D census."""
    if n <= 4:
        return 0
    if n == 5:
        return 2
    base = t_a(n - 1) - t_a(n - 2) - 2 ** (n - 2) - 2 ** (n - 4)
    if n % 2 == 0:
        return base + (n - 2) // 2
    return base + 2 ** ((n - 3) // 2 - 1) + (n - 3) // 2


A_T_B3 = 3  # tilted algebras of the 3-vertex reversed-source line


# ---- per-family splits, linear D ------------------------------------------


def b_part(n, key):
    if n < 4:
        raise ValueError("b parts need n >= 4")
    if key == "b1":
        return a_t_lambda(n)
    if key == "b247":
        return t_a(3) if n == 4 else t_a(n - 1) - 1
    if key == "b3":
        return sum(a_t_lambda(i) * a_t_a(n - i) for i in range(4, n))
    if key == "b5":
        return a_t_a(n - 2)
    if key == "b6":
        return 3 * a_t_a(n - 3) - (3 if n == 6 else 0)
    if key == "b7":
        return a_ss_lambda(n)
    raise KeyError(key)


def a_s_lambda(n):
    """Silted algebras of the linear D_n family (census total)."""
    total = sum(b_part(n, k) for k in ("b1", "b247", "b3", "b5", "b6"))
    if n == 4:
        total -= 3  # documented identifications across the n = 4 families
    return total


# ---- per-family splits, reversed D ----------------------------------------


def c_part(n, i):
    if n < 4:
        raise ValueError("c parts need n >= 4")
    if i == 1:
        return a_t_lambda(n)
    if i == 2:
        if n == 4:
            return 1
        total = sum(
            (t_a(n - k - 1) - t_a(n - k - 2)) * (tm_lambda(k, 1) + t_a(k - 2))
            for k in range(4, n - 2)
        )
        return total + 2 * t_a(n - 2) + 2 * t_a(n - 3) + 2 * t_a(n - 4) - 3 * t_a(n - 5)
    if i == 3:
        if n == 4:
            return 0
        total = a_t1_lambda(n - 1)
        for m in range(2, n - 3):
            if m == 2:
                total += a_t_lambda(n - 2)
            else:
                total += a_t4_a(m) * a_t_lambda(n - m)
        return total
    if i == 4:
        return sum(a_s_mu(m) * a_t_lambda(n - m) for m in range(2, n - 3))
    if i == 5:
        return 1 if n == 4 else t_a(n - 2) - t_a(n - 4) - n + 4
    if i == 6:
        return a_s_mu(n - 2)
    if i == 7:
        if n == 4:
            return 0
        if n == 5:
            return 3
        if n == 6:
            return 9
        return 3 * a_t4_a(n - 3)
    if i == 8:
        return A_T_B3 * a_s_mu(n - 3)
    if i == 9:
        if n == 4:
            return 1
        if n == 5:
            return 4
        return a_t_a(n - 2) - t_a(n - 3) + t_a(n - 4)
    if i == 10:
        return a_s_mu(n - 2)
    if i == 11:
        return t_a(n - 4)
    if i == 12:
        return 3 * t_a(n - 5)
    if i == 13:
        return sum(t_a(n - m - 2) * a_t_lambda(m) for m in range(4, n))
    if i == 14:
        return a_nht_a(n - 1) - 2 * a_nht_a(n - 2) - t_a(n - 3)
    raise KeyError(i)


def a_ss_gamma(n):
    """Strictly shod algebras of the reversed-source D_n family."""
    return c_part(n, 14)


def a_s_gamma(n):
    """Silted algebras of the reversed-source D_n family (census total)."""
    total = sum(c_part(n, i) for i in range(1, 15))
    if n == 5:
        total -= c_part(n, 12)  # the c_12 family sits inside c_9 at n = 5
    return total


# ---- symmetric products ----------------------------------------------------


def sym_product_size(x_size, y_size=None, relation="disjoint"):
    """Cardinality of the unordered-pair set X x_s Y.

    relation: 'disjoint' (or y_size omitted with relation='self' for
    X x_s X), 'self', or 'subset' (x_size = |X'| <= y_size = |X|).
    """
    if x_size < 0 or (y_size is not None and y_size < 0):
        raise ValueError("sizes must be nonnegative")
    if relation == "self":
        return x_size * (x_size + 1) // 2
    if y_size is None:
        raise ValueError("y_size required unless relation='self'")
    if relation == "disjoint":
        return x_size * y_size
    if relation == "subset":
        if x_size > y_size:
            raise ValueError("subset size exceeds superset size")
        return x_size * y_size - x_size * (x_size - 1) // 2
    raise ValueError(f"unknown relation {relation!r}")
