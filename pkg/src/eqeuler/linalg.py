"""Exact linear algebra: rational elimination, arithmetic mod p, and the
Smith normal form of integer matrices with unimodular transforms."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


# --- rational matrices -------------------------------------------------------


def rref(matrix):
    """Row-reduced echelon form over Q. Returns (rows, pivot columns)."""
    rows = [[Fraction(x) for x in row] for row in matrix]
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def rank(matrix):
    return len(rref(matrix)[1])


def solve_rational(matrix, rhs):
    """One solution x of matrix @ x = rhs over Q, or None."""
    if not matrix:
        return [] if not any(rhs) else None
    n = len(matrix[0])
    aug = [list(row) + [b] for row, b in zip(matrix, rhs)]
    rows, pivots = rref(aug)
    if pivots and pivots[-1] == n:
        return None
    x = [Fraction(0)] * n
    for row, p in zip(rows, pivots):
        x[p] = row[n]
    return x


def inverse(matrix):
    """Inverse over Q; None when singular."""
    n = len(matrix)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(matrix)]
    rows, pivots = rref(aug)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        return None
    return [row[n:] for row in rows]


def matmul(a, b):
    if not a:
        return []
    bt = list(zip(*b)) if b else []
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def matvec(a, v):
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def vecmat(v, a):
    if not a:
        return []
    return [sum(v[i] * a[i][j] for i in range(len(v))) for j in range(len(a[0]))]


def identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def transpose(a):
    return [list(r) for r in zip(*a)]


# --- arithmetic mod p --------------------------------------------------------


def rref_mod(rows, p):
    rows = [[x % p for x in row] for row in rows]
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][c], -1, p)
        rows[r] = [x * inv % p for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [(a - f * b) % p for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def nullspace_mod(matrix, p):
    """Basis (as rows) of {x : matrix @ x = 0} over F_p."""
    n = len(matrix[0]) if matrix else 0
    rows, pivots = rref_mod(matrix, p)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = [0] * n
        v[f] = 1
        for row, pc in zip(rows, pivots):
            v[pc] = -row[f] % p
        basis.append(v)
    return basis


def charpoly_mod(matrix, p):
    """Characteristic polynomial det(xI - A) over F_p, lowest degree first.

    Hessenberg reduction followed by the usual recurrence.
    """
    n = len(matrix)
    a = [[x % p for x in row] for row in matrix]
    for m in range(1, n - 1):
        piv = next((i for i in range(m, n) if a[i][m - 1]), None)
        if piv is None:
            continue
        if piv != m:
            a[piv], a[m] = a[m], a[piv]
            for row in a:
                row[piv], row[m] = row[m], row[piv]
        inv = pow(a[m][m - 1], -1, p)
        for i in range(m + 1, n):
            f = a[i][m - 1] * inv % p
            if f:
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[m])]
                for row in a:
                    row[m] = (row[m] + f * row[i]) % p
    # p_k(x): char poly of leading k x k block
    polys = [[1]]
    for k in range(1, n + 1):
        # p_k = (x - a[k-1][k-1]) p_{k-1} - sum_{i} ...
        prev = polys[k - 1]
        cur = [0] + prev[:]
        for i, c in enumerate(prev):
            cur[i] = (cur[i] - a[k - 1][k - 1] * c) % p
        t = 1
        for i in range(1, k):
            t = t * a[k - i][k - i - 1] % p
            coef = t * a[k - i - 1][k - 1] % p
            if coef:
                for j, c in enumerate(polys[k - i - 1]):
                    cur[j] = (cur[j] - coef * c) % p
        polys.append(cur)
    return polys[n]


def poly_roots_mod(poly, p):
    roots = []
    for x in range(p):
        v = 0
        for c in reversed(poly):
            v = (v * x + c) % p
        if v == 0:
            roots.append(x)
    return roots


# --- integer matrices: Smith normal form ------------------------------------


@dataclass(frozen=True)
class SmithForm:
    """U @ A @ V = D with U, V unimodular and D diagonal (d_1 | d_2 | ...)."""

    factors: tuple  # nonzero diagonal entries, each dividing the next
    U: tuple
    V: tuple
    nrows: int
    ncols: int

    @property
    def rank(self):
        return len(self.factors)

    @property
    def free_rank(self):
        """Rank of the cokernel's free part (columns minus rank)."""
        return self.ncols - self.rank

    @property
    def torsion(self):
        return tuple(d for d in self.factors if d > 1)


def _xgcd(a, b):
    """(g, s, t) with s a + t b = g = gcd(a, b) >= 0."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        a, s0, t0 = -a, -s0, -t0
    return a, s0, t0


def smith_normal_form(matrix, nrows=None, ncols=None):
    """Smith normal form with transforms; see ``SmithForm``."""
    a = [list(map(int, row)) for row in matrix]
    m = len(a) if nrows is None else nrows
    n = (len(a[0]) if a else 0) if ncols is None else ncols
    U = identity(m)
    V = identity(n)

    def row_op(i, j, s, t, u, v):
        # rows (i, j) <- (s*ri + t*rj, u*ri + v*rj), det = sv - tu = +-1
        for M in (a, U):
            ri, rj = M[i], M[j]
            M[i] = [s * x + t * y for x, y in zip(ri, rj)]
            M[j] = [u * x + v * y for x, y in zip(ri, rj)]

    def col_op(i, j, s, t, u, v):
        for M in (a, V):
            for row in M:
                x, y = row[i], row[j]
                row[i] = s * x + t * y
                row[j] = u * x + v * y

    k = 0
    folded = False
    while k < min(m, n):
        # choose pivot: smallest nonzero absolute value in the trailing block
        best = (k, k) if folded else None
        for i in range(k, m):
            for j in range(k, n):
                if folded:
                    break
                if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        i, j = best
        if i != k:
            a[i], a[k] = a[k], a[i]
            U[i], U[k] = U[k], U[i]
        if j != k:
            for M in (a, V):
                for row in M:
                    row[j], row[k] = row[k], row[j]
        while True:
            changed = False
            for i in range(k + 1, m):
                if a[i][k]:
                    p, q = a[k][k], a[i][k]
                    if q % p == 0:
                        row_op(k, i, 1, 0, -(q // p), 1)
                    else:
                        g, s, t = _xgcd(p, q)
                        row_op(k, i, s, t, -q // g, p // g)
                    changed = True
            for j in range(k + 1, n):
                if a[k][j]:
                    p, q = a[k][k], a[k][j]
                    if q % p == 0:
                        col_op(k, j, 1, 0, -(q // p), 1)
                    else:
                        g, s, t = _xgcd(p, q)
                        col_op(k, j, s, t, -q // g, p // g)
                    changed = True
            if not changed:
                break
        # divisibility: if some entry is not divisible by the pivot, fold its row in
        d = a[k][k]
        bad = next(
            ((i, j) for i in range(k + 1, m) for j in range(k + 1, n) if a[i][j] % d),
            None,
        )
        if bad is not None:
            i = bad[0]
            row_op(k, i, 1, 1, 0, 1)
            folded = True
            continue
        folded = False
        if d < 0:
            a[k] = [-x for x in a[k]]
            U[k] = [-x for x in U[k]]
        k += 1
    factors = tuple(a[i][i] for i in range(min(m, n)) if a[i][i])
    return SmithForm(factors, tuple(map(tuple, U)), tuple(map(tuple, V)), m, n)


def is_unimodular(matrix):
    n = len(matrix)
    return n == 0 or abs(det_int(matrix)) == 1


def det_int(matrix):
    """Integer determinant by fraction-free (Bareiss) elimination."""
    a = [list(map(int, row)) for row in matrix]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            sw = next((i for i in range(k + 1, n) if a[i][k]), None)
            if sw is None:
                return 0
            a[k], a[sw] = a[sw], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


class LatticeBasis:
    """Echelon basis of the row lattice spanned by integer vectors, kept
    reduced as vectors are inserted (Hermite-style, extended-gcd steps)."""

    def __init__(self, n):
        self.n = n
        self.rows = {}  # pivot column -> row with positive pivot

    def add(self, vec):
        v = list(map(int, vec))
        for c in range(self.n):
            if not v[c]:
                continue
            row = self.rows.get(c)
            if row is None:
                if v[c] < 0:
                    v = [-x for x in v]
                self.rows[c] = v
                return True
            if v[c] % row[c] == 0:
                f = v[c] // row[c]
                v = [x - f * y for x, y in zip(v, row)]
                continue
            g, s, t = _xgcd(row[c], v[c])
            new_row = [s * x + t * y for x, y in zip(row, v)]
            p, q = row[c] // g, v[c] // g
            v = [p * y - q * x for x, y in zip(row, v)]
            self.rows[c] = new_row
            # v now has zero at c; continue reducing
        return False

    def matrix(self):
        return [self.rows[c] for c in sorted(self.rows)]


def rank_field(matrix):
    """Rank over any exact field whose elements support + - * / and == 0
    (used for cyclotomic entries)."""
    rows = [list(r) for r in matrix]
    if not rows:
        return 0
    ncols = len(rows[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if not rows[i][c] == 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(r + 1, len(rows)):
            if not rows[i][c] == 0:
                f = rows[i][c] / rows[r][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        r += 1
        if r == len(rows):
            break
    return r
