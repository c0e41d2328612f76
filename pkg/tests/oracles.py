"""Independent reference implementations the tests check the package against.

Everything here is deliberately naive and self-contained: plain Fraction
arithmetic, textbook row reduction, permutation-expansion determinants,
brute-force enumeration.  None of it imports cagekit.  These were written
and frozen before the corresponding package code was tested against them.
"""

from fractions import Fraction
from itertools import combinations, combinations_with_replacement, permutations


def rref(rows):
    """Reduced row echelon form of a list of Fraction lists, plus pivots."""
    m = [[Fraction(x) for x in row] for row in rows]
    nrows = len(m)
    ncols = len(m[0]) if nrows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = 1 / m[r][c]
        m[r] = [inv * x for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m, pivots


def rank(rows):
    return len(rref(rows)[1])


def kernel(rows):
    """Right-kernel basis, one vector per free column, pivot entries solved."""
    if not rows:
        return []
    m, pivots = rref(rows)
    ncols = len(rows[0])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -m[r][fc]
        basis.append(v)
    return basis


def det(rows):
    """Permutation expansion; only for the tiny matrices tests use."""
    n = len(rows)
    total = Fraction(0)
    for perm in permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n)
                         if perm[i] > perm[j])
        term = Fraction(1)
        for i, j in enumerate(perm):
            term *= Fraction(rows[i][j])
        total += term if inversions % 2 == 0 else -term
    return total


def poly_mod_mul(a, b, modulus):
    """(a*b) mod a monic modulus; all inputs low-to-high Fraction lists."""
    a = [Fraction(x) for x in a]
    b = [Fraction(x) for x in b]
    modulus = [Fraction(x) for x in modulus]
    prod = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            prod[i + j] += x * y
    deg_m = len(modulus) - 1
    while len(prod) > deg_m:
        lead = prod.pop()
        if lead:
            shift = len(prod) - deg_m
            for k in range(deg_m):
                prod[shift + k] -= lead * modulus[k]
    prod += [Fraction(0)] * (deg_m - len(prod))
    return prod


def monomial_exponents(degree, nvars):
    """All exponent tuples of the given total degree, as a set."""
    out = set()
    for combo in combinations_with_replacement(range(nvars), degree):
        exp = [0] * nvars
        for v in combo:
            exp[v] += 1
        out.add(tuple(exp))
    return out


def eval_matrix(points, degree):
    """Monomial evaluation rows over plain Fractions.

    Columns follow descending lexicographic exponent order, which is the
    order the tests also pin monomial_basis to.
    """
    nv = len(points[0])
    cols = sorted(monomial_exponents(degree, nv), reverse=True)
    rows = []
    for p in points:
        row = []
        for exp in cols:
            v = Fraction(1)
            for x, e in zip(p, exp):
                v *= Fraction(x) ** e
            row.append(v)
        rows.append(row)
    return rows


def hilbert(points, k):
    """Rank of the plain-Fraction evaluation matrix; points are tuples."""
    return rank(eval_matrix(points, k))


def elementary_symmetric(values, k):
    """Brute force e_k over all size-k subsets; generic in the value type."""
    total = 0
    for combo in combinations(values, k):
        term = 1
        for v in combo:
            term = term * v
        total = total + term
    return total
