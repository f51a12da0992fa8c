"""Buchberger's algorithm over a prime field, degrevlex order.

Internally a monomial is a single int (see :class:`MonomialCodec`) and a
polynomial is a list of ``(monomial, coeff)`` pairs in decreasing order with
coefficients in ``range(p)``.
"""

import heapq
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from .errors import InputError, ResourceError
from .poly import Polynomial


@dataclass
class GroebnerConfig:
    max_pairs: int = 200_000     # S-polynomials reduced before giving up
    max_degree: int = 40         # largest S-pair degree allowed
    verify: bool = True          # re-check Buchberger's criterion on the output


@dataclass(frozen=True)
class GroebnerBasis:
    p: int
    nvars: int
    polys: tuple = field(repr=False)    # internal representation, sorted by leading key
    pairs_reduced: int = 0

    @property
    def codec(self):
        return MonomialCodec(self.nvars)

    @property
    def leading_monomials(self) -> list:
        codec = self.codec
        return [codec.exps(f[0][0]) for f in self.polys]

    def polynomials(self) -> list:
        """The basis as :class:`Polynomial` objects with coefficients in [0, p)."""
        codec = self.codec
        return [Polynomial({codec.exps(k): c for k, c in f}, self.nvars) for f in self.polys]

    def is_unit_ideal(self) -> bool:
        return any(f[0][0] == 0 for f in self.polys)

    def reduce(self, f: Polynomial) -> Polynomial:
        codec = self.codec
        r = _Reducer(codec, self.p, self.polys).reduce(from_polynomial(f, self.p, codec))
        return Polynomial({codec.exps(k): c for k, c in r}, self.nvars)

    def contains(self, f: Polynomial) -> bool:
        return self.reduce(f).is_zero()


class MonomialCodec:
    """Packs exponent vectors into single ints ordered by degrevlex.

    With ``P = sum e_i 256^i`` (the *packed* form) and ``S = 8 * nvars`` the
    monomial code is ``key = deg * 2^S - P``.  Keys add under multiplication and
    compare like the monomials they encode.  Exponents must stay below 128 so
    each byte of ``P`` keeps a free guard bit for the divisibility test.
    """

    def __init__(self, nvars: int):
        self.nvars = nvars
        self.S = 8 * nvars
        self.M = (1 << self.S) - 1
        self.guard = sum(0x80 << (8 * i) for i in range(nvars))
        self.low = sum(0x7F << (8 * i) for i in range(nvars))

    def key(self, exps) -> int:
        if any(e > 127 for e in exps):
            raise ResourceError("exponent above 127", limit="max_degree")
        packed = sum(e << (8 * i) for i, e in enumerate(exps))
        return (sum(exps) << self.S) - packed

    def degree(self, key: int) -> int:
        return (key + self.M) >> self.S

    def packed(self, key: int) -> int:
        return (((key + self.M) >> self.S) << self.S) - key

    def from_packed(self, P: int) -> int:
        return (sum(P.to_bytes(self.nvars, "little")) << self.S) - P

    def exps(self, key: int) -> tuple:
        return tuple(self.packed(key).to_bytes(self.nvars, "little"))

    def divides(self, a: int, b: int) -> bool:
        d = self.packed(b) - self.packed(a)
        return d >= 0 and not d & self.guard

    def support(self, P: int) -> int:
        return (P + self.low) & self.guard

    def lcm_packed(self, Pa: int, Pb: int) -> int:
        ge = (((Pa | self.guard) - Pb) & self.guard) >> 7
        mask = ge * 0xFF
        return (Pa & mask) | (Pb & ~mask & self.M)


def from_polynomial(f: Polynomial, p: int, codec: MonomialCodec) -> list:
    terms = [(codec.key(m), c % p) for m, c in f.terms.items() if c % p]
    terms.sort(reverse=True)
    return terms


def _monic(f: list, p: int) -> list:
    c = f[0][1]
    if c == 1:
        return f
    inv = pow(c, p - 2, p)
    return [(k, v * inv % p) for k, v in f]


class _Reducer:
    """Division by a growing list of monic polynomials.

    Divisor lookups are memoised per monomial: a hit stores the index of the
    divisor, a miss stores how many reducers were scanned, so later lookups only
    look at reducers added since.
    """

    def __init__(self, codec: MonomialCodec, p: int, basis=()):
        self.codec = codec
        self.p = p
        self.entries = []
        self.cache = {}
        for g in basis:
            self.add(g)

    def add(self, g: list):
        self.entries.append((g[0][0], self.codec.packed(g[0][0]), g))

    def reduce(self, f: list) -> list:
        """Full remainder of f."""
        if not f:
            return []
        p = self.p
        S, M, guard = self.codec.S, self.codec.M, self.codec.guard
        entries, cache = self.entries, self.cache
        n_entries = len(entries)
        work = dict(f)
        heap = [-k for k in work]
        heapq.heapify(heap)
        out = []
        while heap:
            m = -heapq.heappop(heap)
            c = work.pop(m, 0)
            if not c:
                continue
            hit = cache.get(m)
            if hit is None or hit < 0:
                start = 0 if hit is None else -hit - 1
                hit = -n_entries - 1
                pm = (((m + M) >> S) << S) - m
                for idx in range(start, n_entries):
                    d = pm - entries[idx][1]
                    if d >= 0 and not d & guard:
                        hit = idx
                        break
                cache[m] = hit
                if hit < 0:
                    out.append((m, c))
                    continue
            lk, _, g = entries[hit]
            q = m - lk
            for k, cg in g[1:]:
                mm = q + k
                old = work.get(mm)
                if old is None:
                    work[mm] = (-c * cg) % p
                    heapq.heappush(heap, -mm)
                else:
                    new = (old - c * cg) % p
                    if new:
                        work[mm] = new
                    else:
                        del work[mm]
        return out


def _spoly(f: list, g: list, p: int, codec: MonomialCodec) -> list:
    l = codec.from_packed(codec.lcm_packed(codec.packed(f[0][0]), codec.packed(g[0][0])))
    qf, qg = l - f[0][0], l - g[0][0]
    acc = {}
    for k, c in f[1:]:
        acc[qf + k] = (acc.get(qf + k, 0) + c) % p
    for k, c in g[1:]:
        acc[qg + k] = (acc.get(qg + k, 0) - c) % p
    terms = [(k, c) for k, c in acc.items() if c]
    terms.sort(reverse=True)
    return terms


class _Buchberger:
    def __init__(self, p, config, codec):
        self.p = p
        self.config = config
        self.codec = codec
        self.polys = []          # every polynomial ever added; index = id
        self.lmp = []            # packed leading monomial of each id
        self.active = []         # ids currently in G
        self.pairs = []          # heap of (lcm degree, -lcm key, i, j, packed lcm)
        self.reduced = 0
        self.reducer = _Reducer(codec, p)

    def update(self, h: list):
        """Gebauer-Moller update: add h and prune the pair set."""
        codec = self.codec
        guard = codec.guard
        hid = len(self.polys)
        ph = codec.packed(h[0][0])
        self.polys.append(h)
        self.lmp.append(ph)
        self.reducer.add(h)
        sh = codec.support(ph)

        # pairs (g, h): keep those whose lcm is minimal under divisibility
        cand = []
        for g in self.active:
            pg = self.lmp[g]
            pl = codec.lcm_packed(pg, ph)
            cand.append((sum(pl.to_bytes(codec.nvars, "little")), not (codec.support(pg) & sh),
                         pl, g))
        cand.sort(key=lambda c: (c[0], not c[1], c[3]))
        minimal, fresh = [], []
        for deg, coprime, pl, g in cand:
            if any(not (pl - q) & guard and pl >= q for q in minimal):
                continue
            minimal.append(pl)
            if not coprime:
                fresh.append((deg, pl - (deg << codec.S), g, hid, pl))

        # old pairs (i, j) whose lcm is a multiple of lm(h) distinct from both
        # lcm(lm i, lm h) and lcm(lm j, lm h) are redundant
        kept = fresh
        for entry in self.pairs:
            _, _, i, j, pl = entry
            d = pl - ph
            if d >= 0 and not d & guard:
                if (codec.lcm_packed(self.lmp[i], ph) != pl
                        and codec.lcm_packed(self.lmp[j], ph) != pl):
                    continue
            kept.append(entry)
        heapq.heapify(kept)
        self.pairs = kept
        self.active = [g for g in self.active
                       if not ((self.lmp[g] - ph) >= 0 and not (self.lmp[g] - ph) & guard)]
        self.active.append(hid)

    def basis(self):
        return sorted((self.polys[i] for i in self.active), key=lambda f: f[0][0])

    def run(self, gens: list) -> list:
        p, codec = self.p, self.codec
        for f in sorted(gens, key=lambda f: f[0][0]):
            r = self.reducer.reduce(f)
            if r:
                self.update(_monic(r, p))
        while self.pairs:
            deg, _, i, j, _ = heapq.heappop(self.pairs)
            if deg > self.config.max_degree:
                raise ResourceError(
                    f"S-pair of degree {deg} exceeds max_degree={self.config.max_degree}",
                    limit="max_degree")
            self.reduced += 1
            if self.reduced > self.config.max_pairs:
                raise ResourceError(
                    f"more than max_pairs={self.config.max_pairs} S-pairs reduced",
                    limit="max_pairs")
            r = self.reducer.reduce(_spoly(self.polys[i], self.polys[j], p, codec))
            if r:
                self.update(_monic(r, p))
        return self.basis()


def _interreduce(basis: list, p: int, codec: MonomialCodec) -> list:
    basis = sorted(basis, key=lambda f: f[0][0])
    minimal = [f for k, f in enumerate(basis)
               if not any(codec.divides(g[0][0], f[0][0]) for m, g in enumerate(basis)
                          if m != k and (g[0][0] != f[0][0] or m < k))]
    # a tail term is smaller than the head, so no polynomial can reduce its own tail
    reducer = _Reducer(codec, p, minimal)
    return [[f[0]] + reducer.reduce(f[1:]) for f in minimal]


def buchberger_criterion_holds(basis: list, p: int, codec: MonomialCodec,
                               exhaustive: bool = False) -> bool:
    """Check that S-polynomials of ``basis`` reduce to zero.

    By default only the pairs surviving Buchberger's product criterion and the
    Gebauer-Moller chain criterion are reduced; that is enough to certify a
    Groebner basis.  ``exhaustive=True`` reduces every pair.
    """
    reducer = _Reducer(codec, p, basis)
    if exhaustive:
        pairs = [(a, b) for a in range(len(basis)) for b in range(a + 1, len(basis))]
    else:
        checker = _Buchberger(p, GroebnerConfig(), codec)
        for f in basis:
            checker.update(f)
        pairs = [(i, j) for _, _, i, j, _ in checker.pairs]
    return all(not reducer.reduce(_spoly(basis[a], basis[b], p, codec)) for a, b in pairs)


def groebner(ideal: Sequence[Polynomial], p: int, config: GroebnerConfig = None,
             nvars: int = None) -> GroebnerBasis:
    """Reduced Groebner basis of ``ideal`` over GF(p) in degrevlex order."""
    from .variety import is_prime
    if not is_prime(p):
        raise InputError(f"characteristic must be prime, got {p}")
    config = config or GroebnerConfig()
    if nvars is None:
        nvars = ideal[0].nvars if ideal else 0
    codec = MonomialCodec(nvars)
    one = [[(0, 1)]]
    gens = [_monic(g, p) for g in (from_polynomial(f, p, codec) for f in ideal) if g]
    if any(g[0][0] == 0 for g in gens):
        return GroebnerBasis(p, nvars, tuple(one), 0)
    engine = _Buchberger(p, config, codec)
    basis = _interreduce(engine.run(gens), p, codec)
    if any(f[0][0] == 0 for f in basis):
        basis = one
    if config.verify and not buchberger_criterion_holds(basis, p, codec):
        raise AssertionError("Buchberger criterion fails on computed basis")
    return GroebnerBasis(p, nvars, tuple(basis), engine.reduced)


# -- dimension from leading monomials ----------------------------------------

def _min_hitting_set(sets: frozenset) -> int:
    @lru_cache(maxsize=None)
    def solve(remaining: frozenset) -> int:
        if not remaining:
            return 0
        pick = min(remaining, key=lambda s: (bin(s).count("1"), s))
        best = None
        bits = pick
        while bits:
            v = bits & -bits
            bits ^= v
            rest = frozenset(s for s in remaining if not s & v)
            cost = 1 + solve(rest)
            if best is None or cost < best:
                best = cost
        return best
    return solve(sets)


def dimension_from_leading_monomials(lms: Sequence[tuple], nvars: int) -> int:
    """Largest size of a variable set containing the support of no leading monomial.

    Equals the Krull dimension of k[x]/I.  The unit ideal gives -1.
    """
    supports = set()
    for m in lms:
        mask = 0
        for k, e in enumerate(m):
            if e:
                mask |= 1 << k
        if mask == 0:
            return -1
        supports.add(mask)
    minimal = frozenset(s for s in supports if not any(t != s and t & s == t for t in supports))
    return nvars - _min_hitting_set(minimal)


def ideal_dimension(gb: GroebnerBasis, num_vars: int = None) -> int:
    return dimension_from_leading_monomials(gb.leading_monomials,
                                            gb.nvars if num_vars is None else num_vars)
