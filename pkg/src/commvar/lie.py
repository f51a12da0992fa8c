"""Classical Lie algebras as explicit subalgebras of gl_n.

Types B, C and D are the algebras preserving the forms

    C:  [[0, J], [-J, 0]]      D:  [[0, J], [J, 0]]      B:  [[0, 0, J], [0, 1, 0], [J, 0, 0]]

with ``J`` the anti-identity, i.e. ``x^t F + F x = 0``.  Type A is the traceless
matrices.  Every basis element is attached to a *leader* position: it has entry
1 there and every other basis element vanishes there, so coordinates are read
off directly.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
import re

from . import linalg
from .errors import InputError

FAMILIES = ("A", "B", "C", "D")
MIN_RANK = {"A": 1, "B": 2, "C": 1, "D": 3}


@dataclass(frozen=True)
class LieType:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise InputError(f"unknown family {self.family!r}")
        if not isinstance(self.rank, int) or self.rank < MIN_RANK[self.family]:
            raise InputError(
                f"type {self.family} needs rank >= {MIN_RANK[self.family]}, got {self.rank}")

    @classmethod
    def parse(cls, label: str) -> "LieType":
        """Parse labels like ``"C2"``, ``"A3"``, ``"sl4"``, ``"sp4"``, ``"so7"``."""
        s = label.strip()
        m = re.fullmatch(r"([ABCDabcd])(\d+)", s)
        if m:
            return cls(m.group(1).upper(), int(m.group(2)))
        m = re.fullmatch(r"(sl|sp|so)_?(\d+)", s.lower())
        if not m:
            raise InputError(f"cannot parse Lie type {label!r}")
        kind, n = m.group(1), int(m.group(2))
        if kind == "sl":
            return cls("A", n - 1)
        if n % 2 and kind == "sp":
            raise InputError("sp_n needs even n")
        if kind == "sp":
            return cls("C", n // 2)
        return cls("B", n // 2) if n % 2 else cls("D", n // 2)

    @property
    def n(self) -> int:
        """Size of the defining matrices."""
        return {"A": self.rank + 1, "B": 2 * self.rank + 1}.get(self.family, 2 * self.rank)

    @property
    def coxeter_number(self) -> int:
        l = self.rank
        return {"A": l + 1, "B": 2 * l, "C": 2 * l, "D": 2 * l - 2}[self.family]

    @property
    def dim(self) -> int:
        l = self.rank
        return {"A": l * l + 2 * l, "B": 2 * l * l + l, "C": 2 * l * l + l,
                "D": 2 * l * l - l}[self.family]

    @property
    def label(self) -> str:
        return f"{self.family}{self.rank}"

    @property
    def matrix_name(self) -> str:
        n = self.n
        return {"A": f"sl{n}", "C": f"sp{n}"}.get(self.family, f"so{n}")

    def __str__(self):
        return self.label


@dataclass(frozen=True)
class LieAlgebraBasis:
    lie_type: LieType
    basis: tuple
    form: tuple = None          # None for type A
    leaders: tuple = ()         # leader position of each basis element

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def n(self) -> int:
        return self.lie_type.n

    def contains(self, x) -> bool:
        return in_algebra(self, x)

    def coordinates(self, x) -> list:
        """Coordinates of ``x`` in ``basis``; raises if ``x`` is not in the span."""
        coeffs = [x[i][j] for i, j in self.leaders]
        residual = linalg.sub(x, linalg.linear_combination(coeffs, self.basis))
        if not linalg.is_zero(residual):
            raise InputError("matrix is not in the span of the basis")
        return coeffs


@dataclass(frozen=True)
class SubalgebraSelector:
    tag: str
    parent: LieAlgebraBasis = field(repr=False)
    basis: tuple
    indices: tuple              # positions of ``basis`` inside ``parent.basis``

    @property
    def dim(self) -> int:
        return len(self.basis)


SUBALGEBRA_TAGS = ("b", "u", "t", "w")


def anti_transpose(m):
    """Reflect a square matrix over its anti-diagonal: (i, j) -> (n-1-j, n-1-i)."""
    n = len(m)
    return tuple(tuple(m[n - 1 - j][n - 1 - i] for j in range(n)) for i in range(n))


def bracket(x, y):
    if len(x) != len(y):
        raise InputError(f"dimension mismatch: {len(x)} vs {len(y)}")
    return linalg.sub(linalg.matmul(x, y), linalg.matmul(y, x))


def defining_form(lie_type: LieType):
    """The bilinear form ``F``; ``None`` for type A."""
    if lie_type.family == "A":
        return None
    n, l = lie_type.n, lie_type.rank
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        rows[i][n - 1 - i] = 1
    if lie_type.family == "C":
        for i in range(l, n):
            rows[i][n - 1 - i] = -1
    return linalg.as_matrix(rows)


def adjoint(m, form):
    """Adjoint of ``m`` for the form: the matrix ``m*`` with B(mu, v) = B(u, m* v)."""
    # forms here are signed permutation matrices, so F^-1 = F^t
    return linalg.matmul(linalg.matmul(linalg.transpose(form), linalg.transpose(m)), form)


def form_defect(x, form):
    return linalg.add(linalg.matmul(linalg.transpose(x), form), linalg.matmul(form, x))


def in_algebra(g: LieAlgebraBasis, x) -> bool:
    if len(x) != g.n:
        return False
    if g.form is None:
        return linalg.trace(x) == 0
    return linalg.is_zero(form_defect(x, g.form))


def partner(n: int, i: int, j: int) -> tuple:
    """Position tied to (i, j) by the form: its anti-transpose image."""
    return (n - 1 - j, n - 1 - i)


def root_vector(lie_type: LieType, i: int, j: int):
    """Element of g with entry 1 at (i, j), supported on (i, j) and its partner.

    Returns ``None`` when no such element exists (a forbidden anti-diagonal entry
    in types B and D, or a diagonal entry of type A).
    """
    n = lie_type.n
    if lie_type.family == "A":
        return None if i == j else linalg.elementary(n, i, j)
    form = defining_form(lie_type)
    e = linalg.elementary(n, i, j)
    x = linalg.sub(e, adjoint(e, form))
    if x[i][j] == 0:
        return None
    x = linalg.scale(1 / x[i][j], x)
    assert linalg.is_zero(form_defect(x, form)), (lie_type, i, j)
    return x


@lru_cache(maxsize=None)
def construct_algebra(lie_type: LieType) -> LieAlgebraBasis:
    """Basis of g, ordered row-major by leader position."""
    n = lie_type.n
    basis, leaders = [], []
    if lie_type.family == "A":
        for i in range(n):
            for j in range(n):
                if i != j:
                    basis.append(linalg.elementary(n, i, j))
                elif i < n - 1:
                    basis.append(linalg.sub(linalg.elementary(n, i, i),
                                            linalg.elementary(n, n - 1, n - 1)))
                else:
                    continue
                leaders.append((i, j))
        return LieAlgebraBasis(lie_type, tuple(basis), None, tuple(leaders))

    form = defining_form(lie_type)
    for i in range(n):
        for j in range(n):
            if partner(n, i, j) < (i, j):
                continue
            x = root_vector(lie_type, i, j)
            if x is not None:
                basis.append(x)
                leaders.append((i, j))
    g = LieAlgebraBasis(lie_type, tuple(basis), form, tuple(leaders))
    if g.dim != lie_type.dim:
        raise AssertionError(f"{lie_type}: built {g.dim} basis elements, expected {lie_type.dim}")
    return g


def algebra(label) -> LieAlgebraBasis:
    """Convenience: ``algebra("C2")`` or ``algebra(LieType("C", 2))``."""
    return construct_algebra(label if isinstance(label, LieType) else LieType.parse(label))


def w_block(lie_type: LieType) -> tuple:
    """(rows, cols) of the upper-right block holding the square-zero subalgebra."""
    n = lie_type.n
    if lie_type.family == "A":
        s = n // 2
        return range(0, s), range(s, n)
    l = lie_type.rank
    return range(0, l), range(n - l, n)


def select_subalgebra(g: LieAlgebraBasis, tag: str) -> SubalgebraSelector:
    """Basis of the Borel ``b``, nilradical ``u``, Cartan ``t`` or square-zero ``w``."""
    if tag == "b":
        keep = lambda i, j: i <= j
    elif tag == "u":
        keep = lambda i, j: i < j
    elif tag == "t":
        keep = lambda i, j: i == j
    elif tag == "w":
        rows, cols = w_block(g.lie_type)
        keep = lambda i, j: i in rows and j in cols
    else:
        raise InputError(f"unknown subalgebra tag {tag!r}")
    idx = tuple(k for k, x in enumerate(g.basis)
                if all(keep(i, j) for i, j in linalg.support(x)))
    return SubalgebraSelector(tag, g, tuple(g.basis[k] for k in idx), idx)


def _sum_root_vectors(lie_type: LieType, positions):
    n = lie_type.n
    seen, total = set(), linalg.zeros(n)
    for i, j in positions:
        key = min((i, j), partner(n, i, j))
        if lie_type.family != "A" and key in seen:
            continue
        x = root_vector(lie_type, i, j)
        if x is None:
            continue
        seen.add(key)
        total = linalg.add(total, x)
    return total


def regular_nilpotent(g: LieAlgebraBasis):
    """Sum of the simple root vectors of the fixed realization."""
    t = g.lie_type
    n = t.n
    positions = [(i, i + 1) for i in range(n - 1)]
    if t.family == "D":
        # the last simple root e_{l-1} + e_l sits at (l-2, l)
        positions.append((t.rank - 2, t.rank))
    return _sum_root_vectors(t, positions)


def w_representative(g: LieAlgebraBasis):
    """Element of ``w`` whose block is the identity-like diagonal (entries +-1).

    For types B and D the block condition forces a zero in the middle when the
    rank is odd, so the Jordan type there is [2^s, 1^t] with s even.
    """
    rows, cols = w_block(g.lie_type)
    return _sum_root_vectors(g.lie_type, [(i, cols[0] + i) for i in rows])


def _sparse(x) -> dict:
    return {(i, j): c for i, row in enumerate(x) for j, c in enumerate(row) if c}


def _sparse_bracket(a: dict, b: dict) -> dict:
    out = {}
    for (i, k), c in a.items():
        for (k2, j), d in b.items():
            if k == k2:
                out[(i, j)] = out.get((i, j), 0) + c * d
    for (i, k), c in b.items():
        for (k2, j), d in a.items():
            if k == k2:
                out[(i, j)] = out.get((i, j), 0) - c * d
    return {pos: c for pos, c in out.items() if c}


def structure_check(g: LieAlgebraBasis) -> tuple:
    """``(closed, invariant)``: brackets of basis elements stay in the span, and
    every basis element satisfies the defining condition (form or trace)."""
    invariant = all(g.contains(b) for b in g.basis)
    sparse = [_sparse(b) for b in g.basis]
    index = {pos: k for k, pos in enumerate(g.leaders)}
    closed = True
    for a in range(len(sparse)):
        for b in range(a + 1, len(sparse)):
            z = _sparse_bracket(sparse[a], sparse[b])
            # subtract the combination read off at the leader positions
            residual = dict(z)
            for pos, c in z.items():
                k = index.get(pos)
                if k is None:
                    continue
                for q, d in sparse[k].items():
                    residual[q] = residual.get(q, 0) - c * d
            if any(residual.values()):
                closed = False
                break
        if not closed:
            break
    return closed, invariant
