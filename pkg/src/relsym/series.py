"""Poincare-series engines.

Four independent routes to the same series:
  * the determinant/Cramer engine over the tensor matrices,
  * the Molien sum over group elements (the convention-free oracle),
  * the character product formula for the denominator,
  * closed forms from the stored type data (uniform (a, b, h) form, quantum
    Cartan determinant, exponent products, Tchebychev and binomial forms).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .cyclotomic import Cyclo
from .dynkin import AffineType
from .errors import NoMatching, NonIntegral, SizeMismatch
from .groups import (
    CharTable,
    ClassFunction,
    MatrixGroup,
    character_table,
    exterior_power_character,
    natural_character,
)
from .poly import IntPoly, PolyMatrix, RatFun, one_minus_tk, ONE, ZERO
from .tensor import TensorMatrix


@dataclass(frozen=True)
class SeriesBundle:
    labels: tuple[str, ...]
    series: tuple[RatFun, ...]
    method: str

    def __getitem__(self, label) -> RatFun:
        if isinstance(label, int):
            return self.series[label]
        return self.series[self.labels.index(label)]


# -- determinant / Cramer engine ------------------------------------------

def cramer_matrix(n: int, mats: list[TensorMatrix]) -> PolyMatrix:
    """P = (1 + (-1)^n t^n) I + sum_{r=1}^{n-1} (-1)^r X_{n-r} t^r, with the
    matrices used exactly as stored (row = tensored module)."""
    if len(mats) != n - 1:
        raise SizeMismatch(f"need {n - 1} tensor matrices, got {len(mats)}")
    size = mats[0].size
    if any(m.size != size for m in mats):
        raise SizeMismatch("tensor matrices of unequal size")
    diag = IntPoly([1] + [0] * (n - 1) + [(-1) ** n])
    rows = [[diag if i == j else ZERO for j in range(size)] for i in range(size)]
    for r in range(1, n):
        x = mats[n - r - 1]  # X_{n-r}
        sign = (-1) ** r
        for i in range(size):
            for j in range(size):
                if x.entries[i][j]:
                    rows[i][j] = rows[i][j] + IntPoly.term(sign * x.entries[i][j], r)
    return PolyMatrix(rows, list(mats[0].labels))


def series_by_determinant(n: int, mats: list[TensorMatrix]) -> SeriesBundle:
    P = cramer_matrix(n, mats)
    den = P.det()
    series = tuple(RatFun(P.replace_column_det(lab), den) for lab in P.labels)
    return SeriesBundle(tuple(str(lab) for lab in P.labels), series, "determinant")


# -- Molien oracle ---------------------------------------------------------

def _det_one_minus_tg(H: MatrixGroup, class_index: int) -> list[Cyclo]:
    """Coefficients (ascending) of det(I - t g) for the class representative,
    from exterior-power character values: sum_r (-1)^r chi_{wedge^r V}(g) t^r."""
    chi_v = natural_character(H)
    coeffs = []
    for r in range(H.n + 1):
        val = exterior_power_character(chi_v, r).values[class_index]
        coeffs.append(val * ((-1) ** r))
    return coeffs


def _cpoly_mul(a: list[Cyclo], b: list[Cyclo]) -> list[Cyclo]:
    out = [Cyclo.rational(0)] * (len(a) + len(b) - 1)
    for i, ci in enumerate(a):
        if not ci.is_zero:
            for j, cj in enumerate(b):
                if not cj.is_zero:
                    out[i + j] = out[i + j] + ci * cj
    return out


def molien_ratfun(H: MatrixGroup, target: ClassFunction,
                  table: CharTable | None = None) -> RatFun:
    """Exact Molien series (1/|H|) sum_g conj(target(g)) / det(I - t g),
    assembled over the common denominator prod_c det(I - t g_c)^, then
    cancelled.  The result must be a rational function with integer
    coefficients; anything else is an error."""
    if table is None:
        table = character_table(H)
    table.assert_character(target)
    dets = [_det_one_minus_tg(H, c) for c in range(H.num_classes)]
    # Prefix/suffix products so each class's complementary product is O(1) muls.
    k = len(dets)
    prefix = [[Cyclo.rational(1)]]
    for d in dets:
        prefix.append(_cpoly_mul(prefix[-1], d))
    suffix = [[Cyclo.rational(1)]] * (k + 1)
    suffix = [None] * (k + 1)
    suffix[k] = [Cyclo.rational(1)]
    for i in range(k - 1, -1, -1):
        suffix[i] = _cpoly_mul(dets[i], suffix[i + 1])
    num = None
    for c in range(k):
        weight = target.values[c].conj() * len(H.classes[c])
        term = _cpoly_mul(prefix[c], suffix[c + 1])
        term = [weight * x for x in term]
        if num is None:
            num = term
        else:
            m = max(len(num), len(term))
            num = [
                (num[i] if i < len(num) else Cyclo.rational(0))
                + (term[i] if i < len(term) else Cyclo.rational(0))
                for i in range(m)
            ]
    den_poly = prefix[k]
    num_int = _to_int_poly([x * Fraction(1, H.order) for x in num])
    den_int = _to_int_poly(den_poly)
    return RatFun(num_int, den_int)


def _to_int_poly(coeffs: list[Cyclo]) -> IntPoly:
    out = []
    den_lcm = 1
    for x in coeffs:
        if not x.is_rational:
            raise NonIntegral(f"non-rational coefficient {x!r} in assembled series")
        q = x.as_rational()
        den_lcm = den_lcm * q.denominator // math.gcd(den_lcm, q.denominator)
        out.append(q)
    if den_lcm != 1:
        # Scale to integers; RatFun canonicalization removes the common factor.
        out = [q * den_lcm for q in out]
    return IntPoly([int(q) for q in out])


# -- character-product denominator ----------------------------------------

def denominator_by_characters(H: MatrixGroup, class_indices: list[int],
                              chars_by_r: dict[int, ClassFunction], n: int) -> IntPoly:
    """prod over the listed classes of
    (1 + sum_{r=1}^{n-1} (-1)^r chi_{wedge^{n-r} V}(g) t^r + (-1)^n t^n),
    which must reduce to an integer polynomial."""
    acc = [Cyclo.rational(1)]
    for c in class_indices:
        factor = [Cyclo.rational(1)]
        for r in range(1, n):
            factor.append(chars_by_r[n - r].values[c] * ((-1) ** r))
        factor.append(Cyclo.rational((-1) ** n))
        acc = _cpoly_mul(acc, factor)
    return _to_int_poly(acc)


# -- closed forms ----------------------------------------------------------

def closed_form_invariants(ty: AffineType) -> RatFun:
    """(1 + t^h) / ((1 - t^a)(1 - t^b)) from the stored table row."""
    if not ty.uniform:
        raise ValueError(f"uniform closed form does not apply to {ty.tag}")
    num = IntPoly([1] + [0] * (ty.h - 1) + [1])
    return RatFun(num, one_minus_tk(ty.a) * one_minus_tk(ty.b))


def closed_form_cartan_det(ty: AffineType) -> RatFun:
    """(1 - t^2p)(1 - t^2q)(1 - t^2r) / (1 - t^2) from the stored row."""
    num = one_minus_tk(ty.dp) * one_minus_tk(ty.dq) * one_minus_tk(ty.dr)
    return RatFun(num, one_minus_tk(2))


def exponent_product(exponents: tuple[int, ...], h: int) -> IntPoly:
    """prod over exponents m of (1 + t^2 - 2 cos(m pi / h) t), evaluated
    exactly in Q(zeta_2h); the result must have integer coefficients."""
    acc = [Cyclo.rational(1)]
    for m in exponents:
        c = Cyclo.two_cos(m, h) if h else Cyclo.rational(2)
        acc = _cpoly_mul(acc, [Cyclo.rational(1), -c, Cyclo.rational(1)])
    return _to_int_poly(acc)


def exponent_series(ty: AffineType) -> RatFun:
    """Finite-exponent product over affine-exponent product."""
    num = exponent_product(ty.finite_exponents, ty.finite_h)
    den = exponent_product(ty.affine_exponents, ty.affine_h)
    return RatFun(num, den)


# -- group/pair bundles ----------------------------------------------------

def restriction_data(pair):
    from .groups import restrict_characters
    from .tensor import tensor_matrix
    table = character_table(pair.G)
    rest, rest_origins = restrict_characters(pair.G, pair.N, table)
    mats = []
    chi_v = natural_character(pair.N)
    for r in range(1, pair.N.n):
        mult = exterior_power_character(chi_v, r)
        mats.append(tensor_matrix(rest, mult, side="restriction", r=r))
    return rest, mats, rest_origins


def induction_data(pair):
    from .groups import induce_characters
    from .tensor import tensor_matrix
    table = character_table(pair.N)
    ind, ind_origins = induce_characters(pair.N, pair.G, table)
    mats = []
    chi_v = natural_character(pair.G)
    for r in range(1, pair.G.n):
        mult = exterior_power_character(chi_v, r)
        mats.append(tensor_matrix(ind, mult, side="induction", r=r))
    return ind, mats, ind_origins


def pair_series(pair, side: str) -> SeriesBundle:
    if side == "rest":
        _, mats, _ = restriction_data(pair)
        return series_by_determinant(pair.N.n, mats)
    if side == "ind":
        _, mats, _ = induction_data(pair)
        return series_by_determinant(pair.G.n, mats)
    raise ValueError(f"side must be 'rest' or 'ind', got {side!r}")


def group_series(G: MatrixGroup) -> SeriesBundle:
    from .tensor import group_tensor_matrices
    mats = group_tensor_matrices(G)
    return series_by_determinant(G.n, mats)


# -- proportionality -------------------------------------------------------

def proportionality_check(pair, rest_bundle: SeriesBundle,
                          ind_bundle: SeriesBundle) -> list[tuple[int, int, int]]:
    """Match each restriction-side series with an induction-side series that
    equals it up to a factor of 1 or the index [G:N].  Returns the matching
    as (restriction index, induction index, factor) triples, with the
    trivial labels paired at factor 1.  Raises NoMatching when no complete
    matching exists."""
    index = pair.G.order // pair.N.order
    n = len(rest_bundle.series)
    if n != len(ind_bundle.series):
        raise NoMatching("bundles of different sizes")
    factors = sorted({1, index, 2})
    candidates = []
    for i in range(n):
        opts = []
        for j in range(n):
            for f in factors:
                if rest_bundle.series[i] == f * ind_bundle.series[j]:
                    opts.append((j, f))
        candidates.append(opts)
    if not any(f == 1 and j == 0 for j, f in candidates[0]):
        raise NoMatching("trivial series differ between the two sides")

    match: list[tuple[int, int, int]] = []
    used = [False] * n

    def rec(i):
        if i == n:
            return True
        for j, f in candidates[i]:
            if not used[j] and not (i == 0 and (j != 0 or f != 1)):
                used[j] = True
                match.append((i, j, f))
                if rec(i + 1):
                    return True
                match.pop()
                used[j] = False
        return False

    if not rec(0):
        raise NoMatching(f"no proportional matching for {pair.name}")
    return match
