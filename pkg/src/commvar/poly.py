"""Sparse multivariate polynomials with integer coefficients.

A polynomial is a mapping from exponent tuples to nonzero ints.  These are the
generators produced by :mod:`commvar.variety`; reduction modulo a prime happens
in :mod:`commvar.groebner`.
"""

from math import gcd
from typing import Sequence


def degrevlex_key(exps: tuple) -> tuple:
    """Sort key for degree-reverse-lexicographic order (larger key = larger monomial)."""
    return (sum(exps),) + tuple(-e for e in reversed(exps))


class Polynomial:
    __slots__ = ("nvars", "terms")

    def __init__(self, terms=None, nvars: int = 0):
        self.nvars = nvars
        self.terms = {m: c for m, c in (terms or {}).items() if c}

    @classmethod
    def constant(cls, c, nvars):
        return cls({(0,) * nvars: c}, nvars)

    @classmethod
    def variable(cls, k, nvars, coeff=1):
        exps = [0] * nvars
        exps[k] = 1
        return cls({tuple(exps): coeff}, nvars)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, Polynomial) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return Polynomial(out, self.nvars)

    def __neg__(self):
        return Polynomial({m: -c for m, c in self.terms.items()}, self.nvars)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return Polynomial({m: c * other for m, c in self.terms.items()}, self.nvars)
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        return Polynomial(out, self.nvars)

    __rmul__ = __mul__

    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.terms}) <= 1

    def sorted_terms(self) -> list:
        """Terms in decreasing degrevlex order."""
        return sorted(self.terms.items(), key=lambda mc: degrevlex_key(mc[0]), reverse=True)

    def leading_monomial(self) -> tuple:
        return max(self.terms, key=degrevlex_key)

    def content(self) -> int:
        g = 0
        for c in self.terms.values():
            g = gcd(g, c)
        return g

    def normalized(self) -> tuple:
        """``(content, primitive)``: divide by the gcd, leading coefficient positive."""
        g = self.content()
        if self.leading_coefficient() < 0:
            g = -g
        return abs(g), Polynomial({m: c // g for m, c in self.terms.items()}, self.nvars)

    def leading_coefficient(self) -> int:
        return self.terms[self.leading_monomial()]

    def variables(self) -> set:
        return {k for m in self.terms for k, e in enumerate(m) if e}

    def rename(self, perm: Sequence[int]) -> "Polynomial":
        """Send variable k to variable perm[k]."""
        out = {}
        for m, c in self.terms.items():
            exps = [0] * self.nvars
            for k, e in enumerate(m):
                exps[perm[k]] += e
            out[tuple(exps)] = c
        return Polynomial(out, self.nvars)

    def evaluate(self, point, modulus=None):
        total = 0
        for m, c in self.terms.items():
            t = c
            for x, e in zip(point, m):
                if e:
                    t *= x ** e
            total += t
        return total % modulus if modulus else total

    def to_text(self, names: Sequence[str]) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for m, c in self.sorted_terms():
            factors = [names[k] if e == 1 else f"{names[k]}^{e}" for k, e in enumerate(m) if e]
            mag = abs(c)
            body = "*".join(factors)
            if not body:
                body = str(mag)
            elif mag != 1:
                body = f"{mag}*{body}"
            sign = "-" if c < 0 else "+"
            pieces.append((sign, body))
        first_sign, first = pieces[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def to_json(self) -> list:
        return [{"exponents": list(m), "coefficient": c} for m, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, data, nvars):
        return cls({tuple(t["exponents"]): int(t["coefficient"]) for t in data}, nvars)

    def __repr__(self):
        return f"Polynomial({self.to_text([f'v{k}' for k in range(self.nvars)])})"


def matmul(a, b, nvars):
    """Product of square matrices whose entries are Polynomials."""
    n = len(a)
    zero = Polynomial({}, nvars)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = zero
            for k in range(n):
                if a[i][k] and b[k][j]:
                    acc = acc + a[i][k] * b[k][j]
            row.append(acc)
        out.append(row)
    return out
