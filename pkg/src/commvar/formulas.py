"""Closed-form dimension statements, thresholds and cohomological bounds.

Each entry of :data:`CATALOG` is keyed by a statement id; a suite row that
fails names the id so it is clear which claim the numbers contradict.  The
characteristic regime is passed as ``p``; ``p=None`` means a large good prime.

Thresholds are kept as exact :class:`~fractions.Fraction` values and compared
strictly (``r > threshold``).
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .errors import DomainError, InputError
from .lie import LieType

A2 = LieType("A", 2)
B2 = LieType("B", 2)
C2 = LieType("C", 2)


# -- basic dimensions ---------------------------------------------------------

def dim_u(t: LieType) -> int:
    """Number of positive roots."""
    l = t.rank
    return {"A": l * (l + 1) // 2, "B": l * l, "C": l * l, "D": l * l - l}[t.family]


def dim_nilcone(t: LieType) -> int:
    return t.dim - t.rank


def matrix_case(t: LieType) -> tuple:
    """``(case, m)`` with the matrix algebra written as sl_2m, sl_2m+1, sp_2m, so_2m, so_2m+1."""
    if t.family == "A":
        n = t.n
        return ("sl_2l", n // 2) if n % 2 == 0 else ("sl_2l+1", n // 2)
    return {"B": "so_2l+1", "C": "sp_2l", "D": "so_2l"}[t.family], t.rank


def dim_w(t: LieType) -> int:
    case, m = matrix_case(t)
    if case == "sl_2l":
        return m * m
    if case == "sl_2l+1":
        return m * (m + 1)
    if case == "sp_2l":
        return (m * m + m) // 2
    return (m * m - m) // 2


def _need(cond, msg):
    if not cond:
        raise DomainError(msg)


def _need_rank2(t, allowed):
    _need(t in allowed, f"stated only for {', '.join(map(str, allowed))}, not {t}")


def _need_r(r):
    if not isinstance(r, int) or r < 1:
        raise InputError(f"r must be a positive integer, got {r!r}")


# -- the catalog ----------------------------------------------------------------

@dataclass(frozen=True)
class Formula:
    id: str
    summary: str
    fn: Callable

    def __call__(self, t: LieType, r: int = None, p: int = None):
        return self.fn(t, r, p)


def _v_reg(t, r, p):
    _need_r(r)
    return dim_nilcone(t) + (r - 1) * t.rank


def _b_reg(t, r, p):
    _need_r(r)
    return dim_u(t) + (r - 1) * t.rank


def _w_r(t, r, p):
    _need_r(r)
    return r * dim_w(t)


def _v_r(t, r, p):
    _need_r(r)
    return (r + 1) * dim_w(t)


def _o2_orbit(t, r, p):
    _need(t.family in ("A", "C"), f"square-zero orbit formula is stated for types A and C, not {t}")
    if t.family == "A":
        n = t.n
        s = n % 2
        return (n * n - s * s) // 2
    return t.rank ** 2 + t.rank


def _commuting_o2_cap_u(t, r, p):
    _need_r(r)
    _need(t.family in ("A", "C"), f"stated for types A and C, not {t}")
    return r * dim_w(t)


def _commuting_o2(t, r, p):
    _need_r(r)
    _need(t.family in ("A", "C"), f"stated for types A and C, not {t}")
    if t.family == "A":
        return (r + 1) * (t.n ** 2 // 4)
    return (r + 1) * (t.rank ** 2 + t.rank) // 2


def _sl_p2(t, r, p):
    _need_r(r)
    _need(t.family == "A" and p == 2, "stated for type A with p = 2")
    return (r + 1) * (t.n ** 2 // 4)


def _a2_u1(t, r, p):
    _need_r(r)
    _need_rank2(t, (A2,))
    return 2 * r if p == 2 else 2 * r + 1


def _a2_n1(t, r, p):
    _need_r(r)
    _need_rank2(t, (A2,))
    return 2 * r + 2 if p == 2 else 2 * r + 4


def _c2_u1(t, r, p):
    _need_r(r)
    _need_rank2(t, (C2,))
    _need(p is None or p >= 3, "stated for p >= 3")
    return 2 * r + 2 if r == 1 and p != 3 else 3 * r


def _c2_n1(t, r, p):
    _need_r(r)
    _need_rank2(t, (C2,))
    _need(p is None or p >= 3, "stated for p >= 3")
    return 3 * r + 3 if p == 3 else max(2 * r + 6, 3 * r + 3)


def c2_n1_as_printed(r: int, p: int = None) -> int:
    """The C2 restricted-nullcone case split exactly as displayed (r <= 2 and p != 3)."""
    return 2 * r + 6 if r <= 2 and p != 3 else 3 * r + 3


def _c2_minors(t, r, p):
    _need_r(r)
    _need_rank2(t, (C2,))
    return 3 * r + 1


def _display(t):
    """The three-case display shared by the cohomology bounds."""
    if t.family == "A":
        return t.n ** 2 // 4
    l = t.rank
    return (l * l + l) // 2 if t.family == "C" else (l * l - l) // 2


def _h_b_lower(t, r, p):
    _need_r(r)
    return r * _display(t)


def _c_g_lower(t, r, p):
    _need_r(r)
    return (r + 1) * _display(t)


def constant_c(t: LieType) -> Fraction:
    l = t.rank
    return {"A": Fraction(l + 1, 2) ** 2, "B": Fraction(l * (l + 1), 2),
            "C": Fraction(l * l, 2), "D": Fraction(l * (l - 1), 2)}[t.family]


def simple_module_threshold(t: LieType) -> Fraction:
    """h * c: the L(lambda) bound needs p above this."""
    return t.coxeter_number * constant_c(t)


def _l_lower(t, r, p):
    _need_r(r)
    _need(p is not None and p > simple_module_threshold(t),
          f"needs p > hc = {simple_module_threshold(t)}")
    return r * _display(t)


def _c_b_ceiling(t, r, p):
    _need_r(r)
    _need_rank2(t, (A2, C2))
    if t == A2:
        return 2 * r if p == 2 else 2 * r + 1
    _need(p is None or p >= 3, "stated for p = 3 or p > 3")
    return 3 * r if p == 3 else max(2 * r + 2, 3 * r)


def _c_g_ceiling(t, r, p):
    _need_r(r)
    _need_rank2(t, (A2, B2, C2))
    return 2 * r + 4 if t == A2 else max(2 * r + 6, 3 * r + 3)


CATALOG = {f.id: f for f in [
    Formula("V_reg", "dim of the regular component of C_r(N): dim N + (r-1) rank", _v_reg),
    Formula("B_reg", "dim of the regular component of C_r(u): dim u + (r-1) rank", _b_reg),
    Formula("dim_w", "dim w, four cases", lambda t, r, p: dim_w(t)),
    Formula("dim_V_r", "dim V_r = (r+1) dim w", _v_r),
    Formula("u1_lower", "dim C_r(u_1) >= r dim w", _w_r),
    Formula("N1_lower", "dim C_r(N_1) >= dim V_r", _v_r),
    Formula("dim_O2", "dim of the square-zero locus, types A and C", _o2_orbit),
    Formula("O2_cap_u", "dim C_r(O2 cap u) = r dim w", _commuting_o2_cap_u),
    Formula("O2", "dim C_r(O2) = (r+1) dim w", _commuting_o2),
    Formula("sl_p2_N1", "sl_n, p = 2: dim C_r(N_1) = (r+1) floor(n^2/4)", _sl_p2),
    Formula("A2_u1", "A2: dim C_r(u_1)", _a2_u1),
    Formula("A2_N1", "A2: dim C_r(N_1)", _a2_n1),
    Formula("C2_u1", "C2: dim C_r(u_1)", _c2_u1),
    Formula("C2_N1", "C2: dim C_r(N_1)", _c2_n1),
    Formula("C2_minors", "C2: dim of the 2x2-minors superset of C_r(u)", _c2_minors),
    Formula("H_B_lower", "Krull dim of H(B_r, k) lower bound", _h_b_lower),
    Formula("c_G_lower", "c_{G_r}(k) lower bound", _c_g_lower),
    Formula("L_lower", "c_{G_r}(L(lambda)) lower bound when p > hc", _l_lower),
    Formula("c_B_ceiling", "rank 2: upper bound for c_{B_r}", _c_b_ceiling),
    Formula("c_G_ceiling", "rank 2: upper bound for c_{G_r}", _c_g_ceiling),
]}


class FormulaCatalog:
    """Lookup ``(statement id, lie type, r, p) -> value``."""

    def __init__(self, formulas=None):
        self.formulas = dict(formulas or CATALOG)

    def __contains__(self, sid):
        return sid in self.formulas

    def ids(self) -> list:
        return sorted(self.formulas)

    def evaluate(self, sid: str, t: LieType, r: int = None, p: int = None):
        if sid not in self.formulas:
            raise InputError(f"unknown statement id {sid!r}")
        return self.formulas[sid](t, r, p)

    def summary(self, sid: str) -> str:
        return self.formulas[sid].summary


def complexity_relation_holds(t: LieType, c_g: int, c_b: int) -> bool:
    """c_{G_r}(M) <= c_{B_r}(M) + dim u."""
    return c_g <= c_b + dim_u(t)


# -- expected dimension of a compiled locus --------------------------------------

def expected_dimension(locus, r: int, p: int = None, relaxation: str = None):
    """``(statement id, value)`` predicted for C_r(locus), or ``(None, None)``.

    ``p`` is the characteristic the engine runs in; ``None`` means generic.
    """
    t = locus.lie_type
    tag = locus.tag
    if p == 2 and t.family != "A":
        return None, None       # statements assume a good prime
    if relaxation == "determinantal":
        return "C2_minors", _c2_minors(t, r, p)
    if relaxation:
        return None, None
    if tag == "w":
        return "u1_lower", r * dim_w(t)
    if tag == "O2_cap_u":
        return "O2_cap_u", _commuting_o2_cap_u(t, r, p)
    if tag == "O2":
        return "O2", _commuting_o2(t, r, p)
    if tag == "u":
        # u itself: its dimension does not depend on p
        if t == A2:
            return "A2_u1", _a2_u1(t, r, None)
        if t == C2:
            return "C2_u1", _c2_u1(t, r, None)
        if t.family == "A" and t.rank == 1:
            return "B_reg", _b_reg(t, r, None)
        return None, None
    if tag == "N1":
        q = locus.p
        if t.family == "A" and q == 2:
            return "sl_p2_N1", _sl_p2(t, r, 2)
        if t == A2:
            return "A2_N1", _a2_n1(t, r, q)
        if t == C2 and q >= 3:
            return "C2_N1", _c2_n1(t, r, q)
        if q >= t.coxeter_number and t.family == "A" and t.rank == 1:
            return "V_reg", _v_reg(t, r, None)
        return None, None
    if tag == "N":
        if p is not None and p < 5:
            return None, None
        if t == A2:
            return "A2_N1", _a2_n1(t, r, None)
        if t == C2:
            return "C2_N1", _c2_n1(t, r, None)
        if t.family == "A" and t.rank == 1:
            return "V_reg", _v_reg(t, r, None)
    return None, None


# -- non-equidimensionality thresholds ---------------------------------------------

# printed thresholds as functions of the matrix parameter m
U_THRESHOLDS = {
    "sl_2l": lambda m: 2 + Fraction(1, m - 1),
    "sl_2l+1": lambda m: 2 + Fraction(1, m - 1),
    "sp_2l": lambda m: Fraction(2),
    "so_2l": lambda m: 2 + Fraction(2, m - 3),
    "so_2l+1": lambda m: 2 + Fraction(4, m - 3),
}
N_THRESHOLDS = {
    "sl_2l+1": lambda m: Fraction(3),
    "sl_2l": lambda m: 3 + Fraction(2, m - 1),
    "sp_2l": lambda m: 3 + Fraction(4, m - 1),
    "so_2l": lambda m: 3 + Fraction(4, m - 3),
    "so_2l+1": lambda m: 3 + Fraction(8, m - 3),
}
# smallest m for which each printed threshold is stated
U_DOMAIN = {"sl_2l": 2, "sl_2l+1": 2, "sp_2l": 2, "so_2l": 4, "so_2l+1": 4}
N_DOMAIN = {"sl_2l": 2, "sl_2l+1": 1, "sp_2l": 2, "so_2l": 4, "so_2l+1": 4}


def lie_type_of_case(case: str, m: int) -> LieType:
    """Inverse of :func:`matrix_case`."""
    if case == "sl_2l":
        return LieType("A", 2 * m - 1)
    if case == "sl_2l+1":
        return LieType("A", 2 * m)
    return LieType({"sp_2l": "C", "so_2l": "D", "so_2l+1": "B"}[case], m)


@dataclass(frozen=True)
class StatementCheck:
    threshold: Fraction
    printed: bool           # r > threshold
    derived: bool           # the raw dimension inequality
    lhs: int                # dim of the w-family (w^r or V_r)
    rhs: int                # dim of the regular component

    @property
    def agree(self) -> bool:
        return self.printed == self.derived


@dataclass(frozen=True)
class ThresholdCheck:
    lie_type: LieType
    r: int
    case: str
    m: int
    u: StatementCheck = None    # None when outside the statement's domain
    N: StatementCheck = None

    @property
    def agree(self) -> bool:
        return all(s.agree for s in (self.u, self.N) if s is not None)

    @property
    def expects_non_equidimensional_u(self):
        return None if self.u is None else self.u.printed

    @property
    def expects_non_equidimensional_N(self):
        return None if self.N is None else self.N.printed


def threshold_check(t: LieType, r: int) -> ThresholdCheck:
    """Evaluate the printed thresholds at r and recompute the inequalities behind them.

    The C_r(u) statement compares r dim w with dim u + (r-1) rank, the C_r(N)
    one (r+1) dim w with dim N + (r-1) rank.  Parts outside their stated domain
    come back as ``None``; if both are outside, DomainError.
    """
    _need_r(r)
    case, m = matrix_case(t)
    u = n = None
    if m >= U_DOMAIN[case]:
        lhs, rhs = r * dim_w(t), _b_reg(t, r, None)
        th = U_THRESHOLDS[case](m)
        u = StatementCheck(th, r > th, lhs > rhs, lhs, rhs)
    if m >= N_DOMAIN[case]:
        lhs, rhs = (r + 1) * dim_w(t), _v_reg(t, r, None)
        th = N_THRESHOLDS[case](m)
        n = StatementCheck(th, r > th, lhs > rhs, lhs, rhs)
    if u is None and n is None:
        raise DomainError(f"{t.matrix_name} (m = {m}) is outside the threshold statements' domain")
    return ThresholdCheck(t, r, case, m, u, n)


# -- bound tables --------------------------------------------------------------------

@dataclass(frozen=True)
class BoundRow:
    lie_type: LieType
    r: int
    dim_w: int
    h_b_lower: int              # dim H(B_r, k) = dim H(U_r, k) >= this
    c_g_lower: int              # c_{G_r}(k) >= this
    equality_p2: bool           # type A, p = 2: both bounds are equalities
    c: Fraction                 # constant for the L(lambda) bound
    hc: Fraction                # that bound needs p > hc
    c_b_ceiling: int = None     # rank 2 only
    c_g_ceiling: int = None
    note: str = ""

    def as_dict(self) -> dict:
        return {
            "type": self.lie_type.label, "algebra": self.lie_type.matrix_name, "rank": self.lie_type.rank,
            "r": self.r, "dim_w": self.dim_w, "H_B_lower": self.h_b_lower,
            "c_G_lower": self.c_g_lower, "equality_p2": self.equality_p2,
            "c": str(self.c), "hc": str(self.hc),
            "c_B_ceiling": self.c_b_ceiling, "c_G_ceiling": self.c_g_ceiling, "note": self.note,
        }


def bound_table(family: str, max_rank: int, max_r: int) -> list:
    """Lower-bound rows for every rank up to ``max_rank`` (from the family's minimum) and r <= max_r."""
    from .lie import MIN_RANK
    if family not in MIN_RANK:
        raise InputError(f"unknown family {family!r}")
    if max_rank < 1 or max_r < 1:
        raise InputError("max_rank and max_r must be >= 1")
    rows = []
    for l in range(MIN_RANK[family], max_rank + 1):
        t = LieType(family, l)
        for r in range(1, max_r + 1):
            ceil_b = ceil_g = None
            note = ""
            if t in (A2, C2):
                ceil_b, ceil_g = _c_b_ceiling(t, r, None), _c_g_ceiling(t, r, None)
            elif t == B2:
                # B2 and C2 have isomorphic Lie algebras in good characteristic
                ceil_b, ceil_g = _c_b_ceiling(C2, r, None), _c_g_ceiling(B2, r, None)
                note = "ceilings are the C2 values (isogenous types)"
            rows.append(BoundRow(t, r, dim_w(t), _h_b_lower(t, r, None), _c_g_lower(t, r, None),
                                 t.family == "A", constant_c(t), simple_module_threshold(t),
                                 ceil_b, ceil_g, note))
    return rows


def render_bound_table(rows) -> str:
    header = ["type", "algebra", "r", "dim_w", "H_B>=", "c_G>=", "p=2 eq", "c", "hc",
              "c_B<=", "c_G<=", "note"]
    body = []
    for row in rows:
        d = row.as_dict()
        body.append([d["type"], d["algebra"], str(d["r"]), str(d["dim_w"]), str(d["H_B_lower"]),
                     str(d["c_G_lower"]), "yes" if d["equality_p2"] else "", d["c"], d["hc"],
                     "" if d["c_B_ceiling"] is None else str(d["c_B_ceiling"]),
                     "" if d["c_G_ceiling"] is None else str(d["c_G_ceiling"]), d["note"]])
    return _align([header] + body)


def _align(table) -> str:
    widths = [max(len(row[k]) for row in table) for k in range(len(table[0]))]
    return "\n".join("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip()
                     for row in table) + "\n"
