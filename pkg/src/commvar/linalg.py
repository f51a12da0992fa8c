"""Exact matrix arithmetic over the rationals.

Matrices are immutable tuples of row tuples holding :class:`fractions.Fraction`
entries.  Nothing in here touches floating point.
"""

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import InputError

Matrix = tuple  # tuple[tuple[Fraction, ...], ...]


def as_matrix(rows: Iterable[Iterable]) -> Matrix:
    m = tuple(tuple(Fraction(x) for x in row) for row in rows)
    if m and any(len(row) != len(m) for row in m):
        raise InputError("matrix must be square")
    return m


def zeros(n: int) -> Matrix:
    return tuple((Fraction(0),) * n for _ in range(n))


def identity(n: int) -> Matrix:
    return tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))


def elementary(n: int, i: int, j: int, value=1) -> Matrix:
    """E_ij with 0-based indices."""
    rows = [[Fraction(0)] * n for _ in range(n)]
    rows[i][j] = Fraction(value)
    return tuple(tuple(r) for r in rows)


def size(m: Matrix) -> int:
    return len(m)


def add(a: Matrix, b: Matrix) -> Matrix:
    _check_same(a, b)
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def sub(a: Matrix, b: Matrix) -> Matrix:
    _check_same(a, b)
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def scale(c, a: Matrix) -> Matrix:
    c = Fraction(c)
    return tuple(tuple(c * x for x in row) for row in a)


def linear_combination(coeffs: Sequence, mats: Sequence[Matrix]) -> Matrix:
    n = len(mats[0])
    rows = [[Fraction(0)] * n for _ in range(n)]
    for c, m in zip(coeffs, mats):
        if c == 0:
            continue
        for i, row in enumerate(m):
            for j, x in enumerate(row):
                if x:
                    rows[i][j] += c * x
    return tuple(tuple(r) for r in rows)


def matmul(a: Matrix, b: Matrix) -> Matrix:
    _check_same(a, b)
    n = len(a)
    cols = list(zip(*b))
    out = []
    for i in range(n):
        row = a[i]
        nz = [(k, x) for k, x in enumerate(row) if x]
        out.append(tuple(sum((x * cols[j][k] for k, x in nz), Fraction(0)) for j in range(n)))
    return tuple(out)


def power(a: Matrix, k: int) -> Matrix:
    result = identity(len(a))
    for _ in range(k):
        result = matmul(result, a)
    return result


def transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a)) if a else a


def trace(a: Matrix) -> Fraction:
    return sum((a[i][i] for i in range(len(a))), Fraction(0))


def is_zero(a: Matrix) -> bool:
    return all(x == 0 for row in a for x in row)


def support(a: Matrix) -> list:
    """Positions (i, j) of nonzero entries, row-major."""
    return [(i, j) for i, row in enumerate(a) for j, x in enumerate(row) if x]


def flatten(a: Matrix) -> list:
    return [x for row in a for x in row]


def _check_same(a, b):
    if len(a) != len(b):
        raise InputError(f"dimension mismatch: {len(a)} vs {len(b)}")


# -- Gaussian elimination ---------------------------------------------------

def row_echelon(rows: Sequence[Sequence]) -> tuple:
    """Reduced row echelon form of a list of rows.

    Returns ``(rref_rows, pivot_columns)``.  Input is not modified.
    """
    m = [[Fraction(x) for x in row] for row in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(row_echelon(rows)[1])


def nullspace(rows: Sequence[Sequence], ncols: int = None) -> list:
    """Basis of {v : A v = 0}, one vector per free column (in column order)."""
    if ncols is None:
        ncols = len(rows[0])
    rref, pivots = row_echelon(rows) if rows else ([], [])
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, pc in zip(rref, pivots):
            v[pc] = -row[f]
        basis.append(v)
    return basis


def solve(columns: Sequence[Sequence], target: Sequence):
    """Coefficients c with sum_k c_k columns[k] == target, or None."""
    ncols = len(columns)
    rows = [[col[i] for col in columns] + [target[i]] for i in range(len(target))]
    rref, pivots = row_echelon(rows)
    if ncols in pivots:
        return None
    sol = [Fraction(0)] * ncols
    for row, pc in zip(rref, pivots):
        sol[pc] = row[ncols]
    return sol


def matrix_rank(a: Matrix) -> int:
    return rank([list(row) for row in a])


def jordan_type(a: Matrix) -> list:
    """Jordan block sizes of a nilpotent matrix, weakly decreasing.

    Uses the ranks of successive powers: the number of blocks of size >= k is
    rank(a^(k-1)) - rank(a^k).
    """
    n = len(a)
    ranks = [n]
    p = identity(n)
    while ranks[-1] > 0:
        p = matmul(p, a)
        rk = matrix_rank(p)
        if rk == ranks[-1]:
            raise InputError("matrix is not nilpotent")
        ranks.append(rk)
    at_least = [ranks[k - 1] - ranks[k] for k in range(1, len(ranks))]
    sizes = []
    for k in range(len(at_least), 0, -1):
        exact = at_least[k - 1] - (at_least[k] if k < len(at_least) else 0)
        sizes.extend([k] * exact)
    return sizes
