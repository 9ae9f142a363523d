"""Exact linear algebra over the rationals for small dense systems."""

from fractions import Fraction


def identity_matrix(n):
    return [[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]


def mat_mul(a, b):
    n, m, p = len(a), len(b), len(b[0])
    return [[sum((a[i][k] * b[k][j] for k in range(m)), Fraction(0)) for j in range(p)]
            for i in range(n)]


def mat_vec(a, v):
    return [sum((row[j] * v[j] for j in range(len(v))), Fraction(0)) for row in a]


def invert(a):
    """Gauss-Jordan inverse; raises ValueError on a singular matrix."""
    n = len(a)
    aug = [[Fraction(x) for x in row] + [Fraction(1) if i == j else Fraction(0) for j in range(n)]
           for i, row in enumerate(a)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise ValueError("singular matrix")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv_p = Fraction(1) / aug[col][col]
        aug[col] = [x * inv_p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [x - factor * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def solve(a, b):
    """Solve a x = b exactly for square invertible a."""
    return mat_vec(invert(a), b)


def nullspace_line(a):
    """Return a basis vector of the nullspace if it is one-dimensional, else None.

    The vector is scaled to primitive integer entries with positive sum.
    """
    n = len(a)
    m = [[Fraction(x) for x in row] for row in a]
    pivots = []
    row = 0
    for col in range(n):
        pivot = next((r for r in range(row, n) if m[r][col] != 0), None)
        if pivot is None:
            continue
        m[row], m[pivot] = m[pivot], m[row]
        inv_p = Fraction(1) / m[row][col]
        m[row] = [x * inv_p for x in m[row]]
        for r in range(n):
            if r != row and m[r][col] != 0:
                factor = m[r][col]
                m[r] = [x - factor * y for x, y in zip(m[r], m[row])]
        pivots.append(col)
        row += 1
    free = [c for c in range(n) if c not in pivots]
    if len(free) != 1:
        return None
    fc = free[0]
    vec = [Fraction(0)] * n
    vec[fc] = Fraction(1)
    for r, pc in enumerate(pivots):
        vec[pc] = -m[r][fc]
    denom = 1
    for x in vec:
        denom = denom * x.denominator // _gcd(denom, x.denominator)
    ints = [int(x * denom) for x in vec]
    g = 0
    for x in ints:
        g = _gcd(g, abs(x))
    ints = [x // g for x in ints]
    if sum(ints) < 0:
        ints = [-x for x in ints]
    return ints


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a
