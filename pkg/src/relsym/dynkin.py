"""Affine Dynkin types as data: Cartan-matrix templates, exponent multisets,
Coxeter numbers, and closed-form parameters.

Each affine type carries
  * a generalized Cartan matrix template (classification matches a computed
    matrix against these up to simultaneous row/column permutation),
  * the closed-form parameters (a, b, h) of (1+t^h)/((1-t^a)(1-t^b)) and
    the doubled parameters (dp, dq, dr) = (2p, 2q, 2r) of the quantum
    Cartan determinant (1-t^dp)(1-t^dq)(1-t^dr)/(1-t^2) -- doubling keeps
    them integral even where p is a half-integer,
  * the affine exponent multiset with its Coxeter number and the finite
    exponent multiset with its Coxeter number, in the conventions the
    product formulas require (some affine Coxeter numbers here are smaller
    than the usual dual-Coxeter conventions; they are exactly the values
    the exponent products below need).

`uniform` is False exactly for the odd cyclic groups (type A_l^(1), l even),
which the uniform closed form does not cover.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import Unclassified


@dataclass(frozen=True)
class AffineType:
    tag: str
    rank: int
    cartan: tuple[tuple[int, ...], ...]
    a: int
    b: int
    h: int
    dp: int
    dq: int
    dr: int
    affine_exponents: tuple[int, ...]
    affine_h: int
    finite_exponents: tuple[int, ...]
    finite_h: int
    uniform: bool = True

    @property
    def dual_tag(self) -> str:
        """The partner tag on the other side of a restriction/induction pair."""
        return _DUALS.get(self.tag, self.tag)


# -- Cartan matrix builders ------------------------------------------------

def _zeros(n):
    return [[2 if i == j else 0 for j in range(n)] for i in range(n)]


def _join(m, i, j, down=1, up=1):
    m[i][j] = -down
    m[j][i] = -up


def _chain(n):
    m = _zeros(n)
    for i in range(n - 1):
        _join(m, i, i + 1)
    return m


def _cycle(n):
    m = _chain(n)
    _join(m, 0, n - 1)
    return m


def _affine_d(l):
    # D_l^(1): vertices 0..l, forks at both ends of a chain.
    m = _zeros(l + 1)
    _join(m, 0, 2)
    _join(m, 1, 2)
    for i in range(2, l - 2):
        _join(m, i, i + 1)
    _join(m, l - 2, l - 1)
    _join(m, l - 2, l)
    return m


def _affine_e(arms):
    # Star: center vertex 0, arms of the given lengths.
    n = 1 + sum(arms)
    m = _zeros(n)
    idx = 1
    for arm in arms:
        prev = 0
        for _ in range(arm):
            _join(m, prev, idx)
            prev = idx
            idx += 1
    return m


def _twisted_a_even(l):
    # A_{2l}^(2), l >= 2: chain 0..l with double bonds at both ends.
    m = _chain(l + 1)
    _join(m, 0, 1, down=2, up=1)
    _join(m, l - 1, l, down=2, up=1)
    return m


def _d_l1_2(l):
    # D_{l+1}^(2): chain 0..l, double bonds pointing outward at both ends.
    m = _chain(l + 1)
    _join(m, 0, 1, down=2, up=1)
    _join(m, l - 1, l, down=1, up=2)
    return m


def _twisted_a_odd(l):
    # A_{2l-1}^(2), l >= 3: fork (0, 1 both joined to 2), chain, then a
    # double bond at the far end.
    m = _zeros(l + 1)
    _join(m, 0, 2)
    _join(m, 1, 2)
    for i in range(2, l):
        _join(m, i, i + 1)
    m[l - 1][l] = -2
    m[l][l - 1] = -1
    return m


def _g2_1():
    return [[2, -1, 0], [-1, 2, -1], [0, -3, 2]]


def _f4_1():
    m = _chain(5)
    m[3][2] = -2
    return m


def _transpose(m):
    n = len(m)
    return [[m[j][i] for j in range(n)] for i in range(n)]


_DUALS = {
    "A2^(2)": "A1^(1)", "A1^(1)": "A2^(2)",
    "E6^(2)": "F4^(1)", "F4^(1)": "E6^(2)",
    "D4^(3)": "G2^(1)", "G2^(1)": "D4^(3)",
}
for _l in range(2, 11):
    _DUALS[f"A{2*_l}^(2)"] = f"C{_l}^(1)"
    _DUALS[f"D{_l+1}^(2)"] = f"C{_l}^(1)"
for _l in range(3, 11):
    _DUALS[f"A{2*_l-1}^(2)"] = f"B{_l}^(1)"
    _DUALS[f"B{_l}^(1)"] = f"A{2*_l-1}^(2)"


def _odds(h):
    return tuple(range(1, h, 2))


def _affine_a_exp(l):
    """Affine exponents of A_l^(1) for odd l = 2k+1: 0, 1,1, ..., k,k, k+1
    with Coxeter number k+1.  Undefined (None) for even l."""
    if l % 2 == 0:
        return None, 0
    k = (l - 1) // 2
    exps = (0,) + tuple(j for i in range(1, k + 1) for j in (i, i)) + (k + 1,)
    return exps, k + 1


def _affine_d_exp(l):
    """Affine exponents of D_l^(1), split by parity of l."""
    if l % 2 == 0:
        half = l // 2
        # 0..l-2 with the middle value l/2 - 1 appearing three times.
        exps = tuple(range(0, l - 1)) + (half - 1, half - 1)
        return exps, l - 2
    ll = (l - 1) // 2
    h = 2 * (2 * ll - 1)
    exps = tuple(range(0, h + 1, 2)) + (2 * ll - 1, 2 * ll - 1)
    return exps, h


def _affine_b_exp(l):
    """Affine exponents of B_l^(1) and A_{2l-1}^(2), split by parity of l."""
    if l % 2 == 1:
        ll = (l - 1) // 2
        exps = tuple(range(0, 2 * ll + 1)) + (ll,)
        return exps, 2 * ll
    ll = l // 2
    h = 2 * (2 * ll - 1)
    exps = tuple(range(0, h + 1, 2)) + (2 * ll - 1,)
    return exps, h


def _finite_d_exp(l):
    return _odds(2 * l - 2) + (l - 1,), 2 * l - 2


_E_DATA = {
    6: ((0, 2, 2, 3, 4, 4, 6), 6, (1, 4, 5, 7, 8, 11), 12, (6, 8, 12), (6, 6, 4)),
    7: ((0, 3, 4, 6, 6, 8, 9, 12), 12, (1, 5, 7, 9, 11, 13, 17), 18, (8, 12, 18), (8, 6, 4)),
    8: ((0, 6, 10, 12, 15, 18, 20, 24, 30), 30, (1, 7, 11, 13, 17, 19, 23, 29), 30,
        (12, 20, 30), (10, 6, 4)),
}


def _make_types() -> list[AffineType]:
    out = []

    def add(tag, cartan, abh, d3, aff, aff_h, fin, fin_h, uniform=True):
        a, b, h = abh
        dp, dq, dr = d3
        out.append(AffineType(
            tag, len(cartan), tuple(tuple(r) for r in cartan), a, b, h, dp, dq, dr,
            tuple(sorted(aff)) if aff is not None else None, aff_h,
            tuple(sorted(fin)) if fin is not None else None, fin_h, uniform))

    add("A1^(1)", [[2, -2], [-2, 2]], (2, 2, 2), (2, 2, 2), (0, 1), 1, (1,), 2)
    for l in range(2, 17):
        n = l + 1
        aff, aff_h = _affine_a_exp(l)
        add(f"A{l}^(1)", _cycle(n), (2, n, n), (n, n, 2),
            aff, aff_h, tuple(range(1, n)), n, uniform=(n % 2 == 0))
    for l in range(4, 13):
        aff, aff_h = _affine_d_exp(l)
        fin, fin_h = _finite_d_exp(l)
        add(f"D{l}^(1)", _affine_d(l), (4, 2 * l - 4, 2 * l - 2), (2 * l - 4, 4, 4),
            aff, aff_h, fin, fin_h)
    for k, (aff, aff_h, fin, fin_h, abh, d3) in _E_DATA.items():
        add(f"E{k}^(1)", _affine_e({6: (2, 2, 2), 7: (3, 3, 1), 8: (5, 2, 1)}[k]),
            abh, d3, aff, aff_h, fin, fin_h)

    add("A2^(2)", [[2, -4], [-1, 2]], (2, 2, 2), (2, 2, 2), (0, 2), 2, (1,), 2)
    for l in range(2, 11):
        shared = dict(abh=(2, 2 * l, 2 * l), d3=(2 * l, 2, 2),
                      aff=tuple(range(0, l + 1)), aff_h=l,
                      fin=_odds(2 * l), fin_h=2 * l)
        add(f"A{2*l}^(2)", _twisted_a_even(l), shared["abh"], shared["d3"],
            shared["aff"], shared["aff_h"], shared["fin"], shared["fin_h"])
        add(f"C{l}^(1)", _transpose(_d_l1_2(l)), shared["abh"], shared["d3"],
            shared["aff"], shared["aff_h"], shared["fin"], shared["fin_h"])
        add(f"D{l+1}^(2)", _d_l1_2(l), shared["abh"], shared["d3"],
            shared["aff"], shared["aff_h"], shared["fin"], shared["fin_h"])
    for l in range(3, 11):
        aff, aff_h = _affine_b_exp(l)
        add(f"A{2*l-1}^(2)", _twisted_a_odd(l), (4, 2 * l - 2, 2 * l),
            (2 * l - 2, 4, 2), aff, aff_h, _odds(2 * l), 2 * l)
        add(f"B{l}^(1)", _transpose(_twisted_a_odd(l)), (4, 2 * l - 2, 2 * l),
            (2 * l - 2, 4, 2), aff, aff_h, _odds(2 * l), 2 * l)
    add("G2^(1)", _g2_1(), (4, 4, 6), (4, 2, 2), (0, 1, 2), 2, (1, 5), 6)
    add("D4^(3)", _transpose(_g2_1()), (4, 4, 6), (4, 2, 2), (0, 1, 2), 2, (1, 5), 6)
    add("F4^(1)", _f4_1(), (6, 8, 12), (6, 4, 2), (0, 2, 3, 4, 6), 6, (1, 5, 7, 11), 12)
    add("E6^(2)", _transpose(_f4_1()), (6, 8, 12), (6, 4, 2),
        (0, 2, 3, 4, 6), 6, (1, 5, 7, 11), 12)
    return out


AFFINE_TYPES: dict[str, AffineType] = {ty.tag: ty for ty in _make_types()}


# -- classification --------------------------------------------------------

def classify_cartan(cartan) -> AffineType:
    """Match a generalized Cartan matrix against the stored templates up to
    simultaneous row/column permutation."""
    n = len(cartan)
    target = [list(row) for row in cartan]
    for ty in AFFINE_TYPES.values():
        if ty.rank == n and _find_permutation(target, ty.cartan) is not None:
            return ty
    raise Unclassified(f"no affine template of rank {n} matches {cartan}")


def _row_profile(m, i):
    return (tuple(sorted(m[i])), tuple(sorted(r[i] for r in m)))


def _find_permutation(a, b):
    """Permutation p with a[p[i]][p[j]] == b[i][j] for all i, j, or None."""
    n = len(a)
    prof_a = [_row_profile(a, i) for i in range(n)]
    prof_b = [_row_profile(b, i) for i in range(n)]
    if sorted(prof_a) != sorted(prof_b):
        return None
    perm = [-1] * n
    used = [False] * n

    def fits(i, cand):
        return all(a[cand][perm[j]] == b[i][j] and a[perm[j]][cand] == b[j][i]
                   for j in range(i))

    def rec(i):
        if i == n:
            return True
        for cand in range(n):
            if not used[cand] and prof_a[cand] == prof_b[i] and fits(i, cand):
                used[cand] = True
                perm[i] = cand
                if rec(i + 1):
                    return True
                used[cand] = False
        return False

    return perm if rec(0) else None
