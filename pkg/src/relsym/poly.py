"""Univariate polynomials in t, rational functions, truncated series.

IntPoly is a dense integer-coefficient polynomial.  RatFun is a quotient of
two IntPoly values kept in a unique canonical form so that equality is plain
structural equality.  PolyMatrix supplies exact determinants via fraction-free
elimination (with a cofactor path for cross-checking) and the Cramer-style
column replacement used by the series engines.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .errors import DivByZero, LabelError, PoleAtZero


class IntPoly:
    """Dense integer polynomial; coeffs[k] is the coefficient of t^k."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        for c in cs:
            if not isinstance(c, int):
                raise TypeError(f"integer coefficient expected, got {c!r}")
        self.coeffs = tuple(cs)

    @classmethod
    def term(cls, c: int, k: int) -> "IntPoly":
        return cls([0] * k + [c])

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial reported as -1."""
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __add__(self, other) -> "IntPoly":
        if isinstance(other, int):
            other = IntPoly([other])
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPoly([self[k] + other[k] for k in range(n)])

    __radd__ = __add__

    def __neg__(self) -> "IntPoly":
        return IntPoly([-c for c in self.coeffs])

    def __sub__(self, other) -> "IntPoly":
        if isinstance(other, int):
            other = IntPoly([other])
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPoly([self[k] - other[k] for k in range(n)])

    def __rsub__(self, other) -> "IntPoly":
        return IntPoly([other]) - self

    def __mul__(self, other) -> "IntPoly":
        if isinstance(other, int):
            return IntPoly([c * other for c in self.coeffs])
        if self.is_zero or other.is_zero:
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, ci in enumerate(self.coeffs):
            if ci:
                for j, cj in enumerate(other.coeffs):
                    out[i + j] += ci * cj
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "IntPoly":
        out = ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def exact_div(self, other: "IntPoly") -> "IntPoly":
        """Exact quotient; raises if the division leaves a remainder."""
        if other.is_zero:
            raise DivByZero("polynomial division by zero")
        q, r = _qdivmod(_to_q(self), _to_q(other))
        if any(r):
            raise ValueError(f"{self} is not divisible by {other}")
        return _from_q_int(q)

    def divides(self, other: "IntPoly") -> bool:
        if self.is_zero:
            return other.is_zero
        _, r = _qdivmod(_to_q(other), _to_q(self))
        return not any(r)

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = gcd(g, abs(c))
        return g

    def __call__(self, x):
        out = 0
        for c in reversed(self.coeffs):
            out = out * x + c
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = IntPoly([other])
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                parts.append(str(c))
                continue
            mag = "" if abs(c) == 1 else f"{abs(c)}*"
            var = "t" if k == 1 else f"t^{k}"
            if not parts:
                sign = "-" if c < 0 else ""
                parts.append(f"{sign}{mag}{var}")
            else:
                parts.append(("- " if c < 0 else "+ ") + f"{mag}{var}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)})"


ZERO = IntPoly()
ONE = IntPoly([1])
T = IntPoly([0, 1])


def one_minus_tk(k: int) -> IntPoly:
    return IntPoly([1] + [0] * (k - 1) + [-1])


# -- rational-coefficient helpers (internal) -------------------------------

def _to_q(p: IntPoly) -> list[Fraction]:
    return [Fraction(c) for c in p.coeffs]


def _from_q_int(q: list[Fraction]) -> IntPoly:
    out = []
    for c in q:
        if c.denominator != 1:
            raise ValueError(f"non-integer coefficient {c}")
        out.append(c.numerator)
    return IntPoly(out)


def _qdivmod(num: list[Fraction], den: list[Fraction]):
    num = num[:]
    while den and den[-1] == 0:
        den.pop()
    dd = len(den) - 1
    lead = den[dd]
    q = [Fraction(0)] * max(len(num) - dd, 0)
    for k in range(len(num) - 1, dd - 1, -1):
        c = num[k]
        if c == 0:
            continue
        f = c / lead
        q[k - dd] = f
        for j in range(dd + 1):
            num[k - dd + j] -= f * den[j]
    return q, num[:dd]


def poly_gcd(a: IntPoly, b: IntPoly) -> IntPoly:
    """Monic-free gcd over Q, returned primitive with positive leading term."""
    ra, rb = _to_q(a), _to_q(b)
    while any(rb):
        _, r = _qdivmod(ra, rb)
        ra, rb = rb, r
        while ra and ra[-1] == 0:
            ra.pop()
        while rb and rb[-1] == 0:
            rb.pop()
    if not any(ra):
        return ZERO
    # Clear denominators and strip content.
    den_lcm = 1
    for c in ra:
        den_lcm = den_lcm * c.denominator // gcd(den_lcm, c.denominator)
    ints = [int(c * den_lcm) for c in ra]
    g = 0
    for c in ints:
        g = gcd(g, abs(c))
    ints = [c // g for c in ints]
    if ints[-1] < 0:
        ints = [-c for c in ints]
    return IntPoly(ints)


class RatFun:
    """Rational function num/den in canonical form.

    Canonical means: num and den are coprime over Q, their integer contents
    are coprime, and the lowest nonzero coefficient of den is positive.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=ONE):
        if isinstance(num, int):
            num = IntPoly([num])
        if isinstance(den, int):
            den = IntPoly([den])
        if den.is_zero:
            raise DivByZero("rational function with zero denominator")
        if num.is_zero:
            self.num, self.den = ZERO, ONE
            return
        g = poly_gcd(num, den)
        if g.degree > 0:
            num = num.exact_div(g)
            den = den.exact_div(g)
        cn, cd = num.content(), den.content()
        c = gcd(cn, cd)
        if c > 1:
            num = IntPoly([x // c for x in num.coeffs])
            den = IntPoly([x // c for x in den.coeffs])
        low = next(c for c in den.coeffs if c != 0)
        if low < 0:
            num, den = -num, -den
        self.num, self.den = num, den

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def __add__(self, other) -> "RatFun":
        other = _as_ratfun(other)
        return RatFun(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "RatFun":
        return RatFun(-self.num, self.den)

    def __sub__(self, other) -> "RatFun":
        return self + (-_as_ratfun(other))

    def __rsub__(self, other) -> "RatFun":
        return _as_ratfun(other) - self

    def __mul__(self, other) -> "RatFun":
        other = _as_ratfun(other)
        return RatFun(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RatFun":
        other = _as_ratfun(other)
        if other.is_zero:
            raise DivByZero("division by the zero rational function")
        return RatFun(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other) -> "RatFun":
        return _as_ratfun(other) / self

    def __eq__(self, other) -> bool:
        other = _as_ratfun(other)
        if not isinstance(other, RatFun):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num.coeffs, self.den.coeffs))

    def expand(self, order: int = 64) -> "Series":
        return series_expand(self, order)

    def __str__(self) -> str:
        if self.den == ONE:
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    def __repr__(self) -> str:
        return f"RatFun({self.num!r}, {self.den!r})"


def _as_ratfun(x) -> "RatFun":
    if isinstance(x, RatFun):
        return x
    if isinstance(x, IntPoly):
        return RatFun(x)
    if isinstance(x, int):
        return RatFun(IntPoly([x]))
    return x


class Series:
    """Truncated power series with exact Fraction coefficients."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs, order=None):
        cs = [Fraction(c) for c in coeffs]
        if order is not None:
            cs = cs[:order] + [Fraction(0)] * (order - len(cs))
        self.coeffs = tuple(cs)
        self.order = len(self.coeffs)

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k]

    def __eq__(self, other) -> bool:
        if isinstance(other, Series):
            return self.coeffs == other.coeffs
        if isinstance(other, (list, tuple)):
            return list(self.coeffs) == [Fraction(c) for c in other]
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def is_nonneg_integral(self) -> bool:
        return all(c.denominator == 1 and c >= 0 for c in self.coeffs)

    def __repr__(self) -> str:
        ints = [int(c) if c.denominator == 1 else c for c in self.coeffs]
        return f"Series({ints})"


def series_expand(f: RatFun, order: int) -> Series:
    """Power-series expansion of f to `order` coefficients by long division."""
    if order < 1:
        raise ValueError("order must be positive")
    d0 = f.den[0]
    if d0 == 0:
        raise PoleAtZero(f"denominator {f.den} vanishes at t = 0")
    out = []
    rem = list(f.num.coeffs) + [0] * max(0, order - len(f.num.coeffs))
    d0 = Fraction(d0)
    rem = [Fraction(c) for c in rem]
    for k in range(order):
        c = rem[k] / d0
        out.append(c)
        if c:
            for j in range(1, len(f.den.coeffs)):
                if k + j < len(rem):
                    rem[k + j] -= c * f.den[j]
    return Series(out)


class PolyMatrix:
    """Square matrix of IntPoly entries with module labels on rows/columns."""

    __slots__ = ("entries", "labels")

    def __init__(self, entries, labels=None):
        rows = [[e if isinstance(e, IntPoly) else IntPoly([e]) for e in row] for row in entries]
        n = len(rows)
        if any(len(row) != n for row in rows):
            raise ValueError("matrix must be square")
        self.entries = rows
        self.labels = list(labels) if labels is not None else list(range(n))
        if len(self.labels) != n or len(set(map(str, self.labels))) != n:
            raise ValueError("labels must be unique and match the size")

    @property
    def size(self) -> int:
        return len(self.entries)

    def label_index(self, label) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise LabelError(f"unknown label {label!r}; have {self.labels}") from None

    def det(self) -> IntPoly:
        if self.size <= 4:
            return self._det_cofactor([row[:] for row in self.entries])
        return self._det_bareiss()

    def det_cofactor(self) -> IntPoly:
        return self._det_cofactor([row[:] for row in self.entries])

    def det_bareiss(self) -> IntPoly:
        return self._det_bareiss()

    @staticmethod
    def _det_cofactor(m: list[list[IntPoly]]) -> IntPoly:
        n = len(m)
        if n == 0:
            return ONE
        if n == 1:
            return m[0][0]
        total = ZERO
        sign = 1
        for j in range(n):
            if not m[0][j].is_zero:
                minor = [[m[i][k] for k in range(n) if k != j] for i in range(1, n)]
                total = total + sign * m[0][j] * PolyMatrix._det_cofactor(minor)
            sign = -sign
        return total

    def _det_bareiss(self) -> IntPoly:
        """Fraction-free elimination; every division is exact in Z[t]."""
        n = self.size
        if n == 0:
            return ONE
        m = [row[:] for row in self.entries]
        sign = 1
        prev = ONE
        for k in range(n - 1):
            if m[k][k].is_zero:
                for i in range(k + 1, n):
                    if not m[i][k].is_zero:
                        m[k], m[i] = m[i], m[k]
                        sign = -sign
                        break
                else:
                    return ZERO
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]).exact_div(prev)
                m[i][k] = ZERO
            prev = m[k][k]
        return sign * m[n - 1][n - 1]

    def replace_column_det(self, label) -> IntPoly:
        """det with the labelled column replaced by the unit vector e_0.

        The 1 sits in row 0, which by convention carries the trivial module.
        """
        j = self.label_index(label)
        n = self.size
        replaced = [
            [ONE if (i == 0 and k == j) else (ZERO if k == j else self.entries[i][k])
             for k in range(n)]
            for i in range(n)
        ]
        return PolyMatrix(replaced, self.labels).det()

    def __repr__(self) -> str:
        rows = "; ".join("[" + ", ".join(str(e) for e in row) + "]" for row in self.entries)
        return f"PolyMatrix({rows})"


def factored_display(f: RatFun) -> str | None:
    """Factored form peeling (1-t^k) and (1+t^k) binomials, largest degree
    first.  Canonical reduction may have cancelled a binomial shared by the
    classic closed forms, so a small binomial multiplier is also tried on
    both sides.  Returns None when no such presentation exists."""
    if f.den == ONE:
        return _factor_side(f.num)
    candidates = [(f.num, f.den)]
    bound = f.num.degree + f.den.degree + 2
    for k in range(1, bound + 1):
        for sign in (1, -1):
            m = IntPoly([1] + [0] * (k - 1) + [sign])
            candidates.append((f.num * m, f.den * m))
    for num, den in candidates:
        num_s, den_s = _factor_side(num), _factor_side(den)
        if num_s is not None and den_s is not None:
            return f"{num_s}/{den_s}"
    return None


def _factor_side(p: IntPoly) -> str | None:
    if p.is_zero:
        return "0"
    counts: dict[str, int] = {}
    order: list[str] = []
    cur = p
    changed = True
    while cur.degree > 0 and changed:
        changed = False
        for k in range(cur.degree, 0, -1):
            for sign, tag in ((-1, f"(1-t^{k})"), (1, f"(1+t^{k})")):
                cand = IntPoly([1] + [0] * (k - 1) + [sign])
                if cand.divides(cur):
                    cur = cur.exact_div(cand)
                    if tag not in counts:
                        counts[tag] = 0
                        order.append(tag)
                    counts[tag] += 1
                    changed = True
                    break
            if changed:
                break
    if cur.degree > 0:
        return None
    order.sort(key=lambda tag: (int(tag[5:-1]), tag[2]))
    pieces = [f"{tag}^{counts[tag]}" if counts[tag] > 1 else tag for tag in order]
    c = cur[0]
    if c != 1 or not pieces:
        pieces.insert(0, str(c))
    if len(pieces) > 1:
        return "(" + "".join(pieces) + ")"
    return pieces[0]
