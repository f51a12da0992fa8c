"""Suites that run the formula catalog against constructions and computed dimensions."""

import json
from dataclasses import asdict, dataclass, field
from functools import lru_cache

from . import formulas as fm
from .counting import count_points, slope_fit
from .engine import groebner_dimension
from .errors import CommvarError, InputError
from .formulas import A2, B2, C2, CATALOG
from .lie import (MIN_RANK, LieType, construct_algebra, regular_nilpotent, select_subalgebra,
                  structure_check, w_representative)
from .linalg import jordan_type
from .orbits import (centralizer_dim, orbit_dim, partition_representative,
                     square_zero_max_orbit, valid_partitions)
from .variety import Locus, compile_instance, determinantal_relaxation

SUITES = ("constructions", "orbits", "rank2", "thresholds", "bounds", "crosschecks")
DEFAULTS = {  # (max_rank, max_r)
    "constructions": (6, 1),
    "orbits": (4, 1),
    "rank2": (2, 3),
    "thresholds": (20, 20),
    "bounds": (8, 4),
    "crosschecks": (2, 2),
}
GOOD_CHAR = 32003


@dataclass
class Row:
    id: str
    statement: str              # catalog id, or a short tag for structural checks
    expected: object
    computed: object
    verdict: str = ""
    note: str = ""
    error: str = ""

    def __post_init__(self):
        if not self.verdict:
            self.verdict = "match" if self.expected == self.computed else "mismatch"


@dataclass
class SuiteReport:
    suite: str
    rows: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.verdict == "match" for r in self.rows)

    @property
    def failures(self) -> list:
        return [r for r in self.rows if r.verdict != "match"]

    def to_json(self) -> str:
        return json.dumps({"suite": self.suite, "passed": self.passed,
                           "rows": [asdict(r) for r in self.rows]},
                          sort_keys=True, indent=1, default=str)

    def to_table(self) -> str:
        table = [["id", "statement", "expected", "computed", "verdict", "note"]]
        for r in self.rows:
            note = r.note if not r.error else f"error: {r.error}"
            table.append([r.id, r.statement, str(r.expected), str(r.computed), r.verdict, note])
        return fm._align(table)


def _guard(row_id, statement, thunk, note=""):
    """Run one row; an engine error fails this row only."""
    try:
        expected, computed = thunk()
    except CommvarError as exc:
        return Row(row_id, statement, None, None, "error", note, f"{type(exc).__name__}: {exc}")
    return Row(row_id, statement, expected, computed, note=note)


@lru_cache(maxsize=None)
def computed_dimension(label: str, locus: str, r: int, p: int, relaxation: str = None) -> int:
    """Groebner dimension of C_r(locus) for the algebra ``label`` over GF(p) (memoised)."""
    t = LieType.parse(label)
    inst = compile_instance(Locus.parse(locus, t), r)
    if relaxation == "determinantal":
        inst = determinantal_relaxation(inst)
    return groebner_dimension(inst, p)[0]


def _types(max_rank, families="ABCD"):
    for f in families:
        for l in range(MIN_RANK[f], max_rank + 1):
            yield LieType(f, l)


# -- constructions --------------------------------------------------------------

def _constructions(max_rank, max_r):
    rows = []
    for t in _types(max_rank):
        g = construct_algebra(t)
        key = f"constructions/{t.label}"
        rows.append(Row(f"{key}/dim_g", "dim_g", t.dim, g.dim))
        rows.append(Row(f"{key}/dim_u", "dim_u", fm.dim_u(t), select_subalgebra(g, "u").dim))
        rows.append(Row(f"{key}/dim_w", "dim_w", fm.dim_w(t), select_subalgebra(g, "w").dim))
        closed, invariant = structure_check(g)
        rows.append(Row(f"{key}/closure", "bracket closure", True, closed))
        rows.append(Row(f"{key}/form", "form invariance", True, invariant))
        if t.rank <= 4:
            rows.append(_guard(f"{key}/x_reg", "regular centralizer",
                               lambda: (t.rank, centralizer_dim(g, regular_nilpotent(g)))))
            rows.append(_guard(f"{key}/x_w", "dim O(x_w) >= 2 dim w",
                               lambda: (True, _orbit_of_xw(g) >= 2 * fm.dim_w(t))))
    return rows


def _orbit_of_xw(g):
    return g.dim - centralizer_dim(g, w_representative(g))


# -- orbits -----------------------------------------------------------------------

def _orbits(max_rank, max_r):
    rows = []
    for t in _types(max_rank):
        g = construct_algebra(t)
        for part in valid_partitions(t):
            rows.append(_guard(
                f"orbits/{t.label}/{part}", "orbit_dim",
                lambda part=part: (orbit_dim(t, part),
                                   g.dim - centralizer_dim(g, partition_representative(t, part)))))
    # square-zero orbit: sl_n for n <= 8, sp_2l for l <= 4
    for t in [LieType("A", n - 1) for n in range(2, 9)] + [LieType("C", l) for l in range(1, 5)]:
        rows.append(_guard(f"orbits/O2/{t.label}", "dim_O2",
                           lambda t=t: (CATALOG["dim_O2"](t), _square_zero_oracle(t))))
        rows.append(Row(f"orbits/O2w/{t.label}", "dim_O2 = 2 dim_w",
                        CATALOG["dim_O2"](t), 2 * fm.dim_w(t)))
    return rows


def _square_zero_oracle(t):
    g = construct_algebra(t)
    desc = square_zero_max_orbit(t)
    x = partition_representative(t, desc.partition)
    if tuple(jordan_type(x)) != desc.partition.parts:
        raise AssertionError(f"representative of {desc.partition} has the wrong Jordan type")
    return g.dim - centralizer_dim(g, x)


# -- rank 2 --------------------------------------------------------------------------

def _rank2(max_rank, max_r):
    """Groebner reproductions; nonlinear loci of 16+ variables are capped at r = 2."""
    rows = []
    rs = range(1, max_r + 1)
    rs2 = range(1, min(max_r, 2) + 1)

    def add(label, locus, r, p, sid, expected, relaxation=None, note=""):
        rid = f"rank2/{label}/{locus}{'/' + relaxation if relaxation else ''}/r{r}/p{p}"
        rows.append(_guard(rid, sid,
                           lambda: (expected, computed_dimension(label, locus, r, p, relaxation)),
                           note))

    for r in rs:
        add("A2", "u", r, GOOD_CHAR, "A2_u1", CATALOG["A2_u1"](A2, r, None))
        add("C2", "u", r, GOOD_CHAR, "C2_u1", CATALOG["C2_u1"](C2, r, None))
        # p = 2 model of u_1 for A2, p = 3 model for C2
        add("A2", "O2_cap_u", r, 2, "A2_u1", CATALOG["A2_u1"](A2, r, 2))
        add("C2", "O2_cap_u", r, 3, "C2_u1", CATALOG["C2_u1"](C2, r, 3),
            note="as-printed: 3r branch at r = 1, p = 3" if r == 1 else "")
        if r >= 2:
            add("C2", "u", r, GOOD_CHAR, "C2_minors", CATALOG["C2_minors"](C2, r), "determinantal")
    for r in rs2:
        add("A2", "O2", r, GOOD_CHAR, "O2", CATALOG["O2"](A2, r))
        add("C2", "O2", r, GOOD_CHAR, "O2", CATALOG["O2"](C2, r))
        add("A2", "N1(2)", r, 2, "A2_N1", CATALOG["A2_N1"](A2, r, 2))
        add("A1", "N", r, GOOD_CHAR, "V_reg", CATALOG["V_reg"](LieType("A", 1), r))
    add("A2", "N", 1, GOOD_CHAR, "A2_N1", CATALOG["A2_N1"](A2, 1))
    add("C2", "N", 1, GOOD_CHAR, "C2_N1", CATALOG["C2_N1"](C2, 1))
    add("C2", "N1(3)", 1, 3, "C2_N1", CATALOG["C2_N1"](C2, 1, 3))
    return rows


# -- thresholds -------------------------------------------------------------------------

def _thresholds(max_rank, max_r):
    """One row per (statement, matrix case, m): do printed and derived booleans agree for all r?"""
    rows = []
    for stmt, domain in (("u", fm.U_DOMAIN), ("N", fm.N_DOMAIN)):
        for case, m0 in domain.items():
            for m in range(m0, max_rank + 1):
                t = fm.lie_type_of_case(case, m)
                bad = []
                for r in range(1, max_r + 1):
                    check = getattr(fm.threshold_check(t, r), stmt)
                    if not check.agree:
                        bad.append(r)
                note = f"disagree at r = {bad}" if bad else ""
                rows.append(Row(f"thresholds/{stmt}/{case}/m{m:02d}", f"{stmt}_threshold",
                                [], bad, note=note))
    return rows


# -- bounds -------------------------------------------------------------------------------

def _bounds(max_rank, max_r):
    rows = []
    for t in _types(max_rank):
        w = select_subalgebra(construct_algebra(t), "w").dim
        for r in range(1, max_r + 1):
            key = f"bounds/{t.label}/r{r}"
            rows.append(Row(f"{key}/H_B", "H_B_lower", CATALOG["H_B_lower"](t, r), r * w))
            rows.append(Row(f"{key}/c_G", "c_G_lower", CATALOG["c_G_lower"](t, r), (r + 1) * w))
            if t.family == "A":
                rows.append(Row(f"{key}/c_G_p2", "sl_p2_N1", CATALOG["sl_p2_N1"](t, r, 2),
                                CATALOG["c_G_lower"](t, r), note="equality"))
    for r in range(1, max(max_r, 5) + 1):
        key = f"bounds/ceiling/r{r}"
        rows.append(Row(f"{key}/A2", "c_G_ceiling", CATALOG["A2_N1"](A2, r),
                        CATALOG["c_G_ceiling"](A2, r)))
        rows.append(Row(f"{key}/C2", "c_G_ceiling", CATALOG["C2_N1"](C2, r),
                        CATALOG["c_G_ceiling"](C2, r)))
        rows.append(Row(f"{key}/B2", "c_G_ceiling", CATALOG["C2_N1"](C2, r),
                        CATALOG["c_G_ceiling"](B2, r), note="B2 uses the C2 values (isogeny)"))
        for label, t, p in (("A2p2", A2, 2), ("A2", A2, None), ("C2p3", C2, 3), ("C2", C2, None)):
            u1 = CATALOG["A2_u1" if t == A2 else "C2_u1"](t, r, p)
            n1 = CATALOG["A2_N1" if t == A2 else "C2_N1"](t, r, p)
            rows.append(Row(f"{key}/{label}/c_B", "c_B_ceiling", u1, CATALOG["c_B_ceiling"](t, r, p)))
            rows.append(Row(f"{key}/{label}/relation", "c_G <= c_B + dim u", True,
                            fm.complexity_relation_holds(t, n1, u1)))
    return rows


# -- crosschecks --------------------------------------------------------------------------

def _count_fit(inst, qs):
    counts = [count_points(inst, q).count for q in qs]
    return slope_fit(qs, counts)


def _crosschecks(max_rank, max_r):
    rows = []
    # Groebner vs point counting
    small = [("A1", "N", r) for r in range(1, max_r + 2)] + \
            [("A2", "u", r) for r in range(1, max_r + 2)] + \
            [("A2", "O2_cap_u", r) for r in range(1, max_r + 2)] + \
            [("C2", "u", r) for r in range(1, max_r + 1)] + \
            [("C2", "w", r) for r in range(1, max_r + 1)] + \
            [("A2", "N", 1), ("A2", "O2", 1)]
    for label, locus, r in small:
        t = LieType.parse(label)
        inst = compile_instance(Locus.parse(locus, t), r)
        base = (2, 3, 5, 7) if t.family == "A" else (3, 5, 7)
        qs = tuple(q for q in base if q ** inst.nvars <= 3_000_000)
        if len(qs) < 3:
            continue

        def thunk(inst=inst, qs=qs, label=label, locus=locus, r=r):
            fit = _count_fit(inst, qs)
            d = computed_dimension(label, locus, r, GOOD_CHAR)
            return True, fit.contains(d)
        rows.append(_guard(f"crosschecks/count/{label}/{locus}/r{r}", "groebner in slope interval",
                           thunk, note=f"q in {list(qs)}"))

    # characteristic independence of the linear and square-zero loci
    for label in ("A1", "A2", "C2", "B2"):
        t = LieType.parse(label)
        loci = ["u", "w"] + (["O2", "O2_cap_u"] if t.family in "AC" else [])
        for locus in loci:
            for r in range(1, max_r + 1):
                if label == "C2" and locus == "O2" and r > 1:
                    continue    # 20-variable ideal, about 40 s per prime
                rows.append(_char_row(label, locus, r))

    # containment and monotonicity
    for label in ("A2", "C2"):
        for r in range(1, max_r + 1):
            rows.append(_guard(
                f"crosschecks/contain/{label}/O2_cap_u/r{r}", "O2 cap u <= u",
                lambda label=label, r=r: (True, computed_dimension(label, "O2_cap_u", r, GOOD_CHAR)
                                          <= computed_dimension(label, "u", r, GOOD_CHAR))))
        for locus in ("u", "O2_cap_u"):
            for r in range(1, max_r + 1):
                rows.append(_guard(
                    f"crosschecks/monotone/{label}/{locus}/r{r}", "dim C_r+1 >= dim C_r",
                    lambda label=label, locus=locus, r=r: (
                        True, computed_dimension(label, locus, r + 1, GOOD_CHAR)
                        >= computed_dimension(label, locus, r, GOOD_CHAR))))
    rows.append(_guard("crosschecks/contain/A2/O2/r1", "O2 <= N",
                       lambda: (True, computed_dimension("A2", "O2", 1, GOOD_CHAR)
                                <= computed_dimension("A2", "N", 1, GOOD_CHAR))))
    rows.append(_guard("crosschecks/contain/A1/O2/r2", "O2 <= N",
                       lambda: (True, computed_dimension("A1", "O2", 2, GOOD_CHAR)
                                <= computed_dimension("A1", "N", 2, GOOD_CHAR))))
    return rows


def _char_row(label, locus, r):
    primes = (2, 3, GOOD_CHAR)
    rid = f"crosschecks/char/{label}/{locus}/r{r}"
    try:
        dims = [computed_dimension(label, locus, r, p) for p in primes]
    except CommvarError as exc:
        return Row(rid, "characteristic-free", None, None, "error", error=str(exc))
    odd = [p for p, d in zip(primes, dims) if d != dims[-1]]
    note = f"differs at p = {odd}" if odd else ""
    if 2 in odd and label[0] in "BCD":
        note += " (2 is not a good prime here)"
    return Row(rid, "characteristic-free", [dims[-1]] * len(primes), dims, note=note)


_BUILDERS = {
    "constructions": _constructions,
    "orbits": _orbits,
    "rank2": _rank2,
    "thresholds": _thresholds,
    "bounds": _bounds,
    "crosschecks": _crosschecks,
}


def run_suite(name: str, max_rank: int = None, max_r: int = None) -> SuiteReport:
    if name not in _BUILDERS:
        raise InputError(f"unknown suite {name!r}; expected one of {SUITES}")
    d_rank, d_r = DEFAULTS[name]
    max_rank = d_rank if max_rank is None else max_rank
    max_r = d_r if max_r is None else max_r
    if max_rank < 1 or max_r < 1:
        raise InputError("max_rank and max_r must be >= 1")
    rows = _BUILDERS[name](max_rank, max_r)
    return SuiteReport(name, sorted(rows, key=lambda r: r.id))
