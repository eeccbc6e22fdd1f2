"""The built-in catalog: cyclic and binary dihedral groups, the binary
polyhedral groups, selected diagonal subgroups of SL3, and the distinguished
normal pairs realized so that the subgroup's matrices literally belong to the
ambient group's element list.
"""

from __future__ import annotations

from functools import lru_cache

from .cyclotomic import Cyclo
from .errors import RelsymError
from .groups import MatrixGroup


def _c(x) -> Cyclo:
    return x if isinstance(x, Cyclo) else Cyclo.rational(x)


def _mat(rows):
    return tuple(tuple(_c(x) for x in row) for row in rows)


@lru_cache(maxsize=None)
def cyclic(n: int) -> MatrixGroup:
    """C_n in SL2 as diag(zeta_n^-1, zeta_n)."""
    if n < 1:
        raise ValueError("cyclic order must be >= 1")
    x = _mat([[Cyclo.zeta(n, n - 1), 0], [0, Cyclo.zeta(n, 1)]])
    return MatrixGroup([x], name=f"C{n}", expected_order=n)


@lru_cache(maxsize=None)
def binary_dihedral(k: int) -> MatrixGroup:
    """The binary dihedral group D_k of order 4k:
    x = diag(zeta_2k^-1, zeta_2k), y = [[0, i], [i, 0]]."""
    if k < 1:
        raise ValueError("binary dihedral parameter must be >= 1")
    m = 2 * k
    x = _mat([[Cyclo.zeta(m, m - 1), 0], [0, Cyclo.zeta(m, 1)]])
    i = Cyclo.zeta(4, 1)
    y = _mat([[0, i], [i, 0]])
    return MatrixGroup([x, y], name=f"D{k}", expected_order=4 * k)


def _quat(a, b, c, d):
    """Quaternion a + bi + cj + dk as an SU(2)-style matrix over Q(zeta_4)."""
    i = Cyclo.zeta(4, 1)
    a, b, c, d = _c(a), _c(b), _c(c), _c(d)
    return (
        (a + b * i, c + d * i),
        ((-1) * c + d * i, a - b * i),
    )


@lru_cache(maxsize=None)
def binary_tetrahedral() -> MatrixGroup:
    """2T of order 24, generated by the quaternion units i, j and
    w = (-1 + i + j + k)/2."""
    from fractions import Fraction
    h = Fraction(1, 2)
    qi = _quat(0, 1, 0, 0)
    qj = _quat(0, 0, 1, 0)
    w = _quat(-h, h, h, h)
    return MatrixGroup([qi, qj, w], name="T", expected_order=24)


@lru_cache(maxsize=None)
def binary_octahedral() -> MatrixGroup:
    """2O of order 48: 2T plus the order-8 element diag(zeta_8, zeta_8^-1)."""
    from fractions import Fraction
    h = Fraction(1, 2)
    qi = _quat(0, 1, 0, 0)
    qj = _quat(0, 0, 1, 0)
    w = _quat(-h, h, h, h)
    s = _mat([[Cyclo.zeta(8, 1), 0], [0, Cyclo.zeta(8, 7)]])
    return MatrixGroup([qi, qj, w, s], name="O", expected_order=48)


@lru_cache(maxsize=None)
def binary_icosahedral() -> MatrixGroup:
    """2I of order 120 over Q(zeta_5), generated by
    S = diag(e^3, e^2) and U = (1/sqrt5) [[e^4 - e, e^2 - e^3],
    [e^2 - e^3, e - e^4]] with e = zeta_5 (sqrt5 = e - e^2 - e^3 + e^4)."""
    from fractions import Fraction
    e = [Cyclo.zeta(5, k) for k in range(5)]
    s = _mat([[e[3], 0], [0, e[2]]])
    inv_sqrt5 = (e[1] - e[2] - e[3] + e[4]) * Fraction(1, 5)
    u = _mat([
        [(e[4] - e[1]) * inv_sqrt5, (e[2] - e[3]) * inv_sqrt5],
        [(e[2] - e[3]) * inv_sqrt5, (e[1] - e[4]) * inv_sqrt5],
    ])
    return MatrixGroup([s, u], name="I", expected_order=120)


@lru_cache(maxsize=None)
def sl3_cyclic(m: int, weights: tuple[int, int, int]) -> MatrixGroup:
    """Diagonal cyclic subgroup of SL3: diag(zeta_m^a, zeta_m^b, zeta_m^c)."""
    a, b, c = weights
    if (a + b + c) % m != 0:
        raise ValueError("weights must sum to 0 mod m")
    g = _mat([
        [Cyclo.zeta(m, a % m), 0, 0],
        [0, Cyclo.zeta(m, b % m), 0],
        [0, 0, Cyclo.zeta(m, c % m)],
    ])
    return MatrixGroup([g], name=f"S{m}_{a}{b}{c}", expected_order=m)


# -- subgroup realizations (elements literally inside the ambient group) ---

def _subgroup_from_generators(G: MatrixGroup, gens, name: str, expected_order: int) -> MatrixGroup:
    return MatrixGroup(list(gens), name=name, expected_order=expected_order)


class Pair:
    """A normal pair N inside G with display name `name`."""

    def __init__(self, name: str, N: MatrixGroup, G: MatrixGroup, family: str, index: int):
        self.name = name
        self.N = N
        self.G = G
        self.family = family
        self.index = index


def _pair_cyclic_in_dihedral_full(n: int) -> Pair:
    """C_{2n} inside D_n, both of the same order-4n ambient family:
    N = <x> where x generates the rotation part."""
    G = binary_dihedral(n)
    m = 2 * n
    x = _mat([[Cyclo.zeta(m, m - 1), 0], [0, Cyclo.zeta(m, 1)]])
    N = _subgroup_from_generators(G, [x], f"C{2*n}", 2 * n)
    return Pair(f"C{2*n}<D{n}", N, G, "C2n<Dn", n)


def _pair_cyclic_in_dihedral_half(n: int) -> Pair:
    """C_{2n} = <x^2> inside D_{2n} (covers C2 < D2 at n = 1)."""
    G = binary_dihedral(2 * n)
    m = 4 * n
    x2 = _mat([[Cyclo.zeta(m, m - 2), 0], [0, Cyclo.zeta(m, 2)]])
    N = _subgroup_from_generators(G, [x2], f"C{2*n}", 2 * n)
    return Pair(f"C{2*n}<D{2*n}", N, G, "C2n<D2n", n)


def _pair_dihedral_in_dihedral(j: int) -> Pair:
    """D_j = <x^2, y> inside D_{2j}."""
    G = binary_dihedral(2 * j)
    m = 4 * j
    x2 = _mat([[Cyclo.zeta(m, m - 2), 0], [0, Cyclo.zeta(m, 2)]])
    i = Cyclo.zeta(4, 1)
    y = _mat([[0, i], [i, 0]])
    N = _subgroup_from_generators(G, [x2, y], f"D{j}", 4 * j)
    return Pair(f"D{j}<D{2*j}", N, G, "Dj<D2j", j)


def _pair_t_in_o() -> Pair:
    from fractions import Fraction
    h = Fraction(1, 2)
    G = binary_octahedral()
    gens = [_quat(0, 1, 0, 0), _quat(0, 0, 1, 0), _quat(-h, h, h, h)]
    N = _subgroup_from_generators(G, gens, "T", 24)
    return Pair("T<O", N, G, "T<O", 0)


def _pair_d2_in_t() -> Pair:
    G = binary_tetrahedral()
    gens = [_quat(0, 1, 0, 0), _quat(0, 0, 1, 0)]
    N = _subgroup_from_generators(G, gens, "D2", 8)
    return Pair("D2<T", N, G, "D2<T", 0)


GROUP_NAMES = (
    ["C1"]
    + [f"C{n}" for n in range(2, 9)]
    + [f"D{k}" for k in range(1, 7)]
    + ["T", "O", "I", "S3_111", "S7_124"]
)

PAIR_NAMES = (
    [f"D{j}<D{2*j}" for j in range(1, 6)]
    + [f"C{2*n}<D{n}" for n in range(2, 7)]
    + [f"C{2*n}<D{2*n}" for n in range(1, 6)]
    + ["T<O", "D2<T"]
)


def get_group(name: str) -> MatrixGroup:
    if name.startswith("C") and name[1:].isdigit():
        return cyclic(int(name[1:]))
    if name.startswith("D") and name[1:].isdigit():
        return binary_dihedral(int(name[1:]))
    if name == "T":
        return binary_tetrahedral()
    if name == "O":
        return binary_octahedral()
    if name == "I":
        return binary_icosahedral()
    if name.startswith("S") and "_" in name:
        head, tail = name[1:].split("_", 1)
        weights = tuple(int(ch) for ch in tail)
        if len(weights) != 3:
            raise RelsymError(f"bad SL3 weight string in {name!r}")
        return sl3_cyclic(int(head), weights)
    raise RelsymError(f"unknown group {name!r}; known: {', '.join(GROUP_NAMES)}")


@lru_cache(maxsize=None)
def get_pair(name: str) -> Pair:
    try:
        n_name, g_name = name.split("<", 1)
    except ValueError:
        raise RelsymError(f"pair name must look like N<G, got {name!r}") from None
    if n_name == "T" and g_name == "O":
        return _pair_t_in_o()
    if n_name == "D2" and g_name == "T":
        return _pair_d2_in_t()
    if n_name.startswith("D") and g_name.startswith("D"):
        j, m = int(n_name[1:]), int(g_name[1:])
        if m == 2 * j:
            return _pair_dihedral_in_dihedral(j)
        raise RelsymError(f"dihedral pair requires D_j inside D_2j, got {name!r}")
    if n_name.startswith("C") and g_name.startswith("D"):
        k, m = int(n_name[1:]), int(g_name[1:])
        if k == 2 * m:
            return _pair_cyclic_in_dihedral_full(m)
        if k == m and m % 2 == 0:
            return _pair_cyclic_in_dihedral_half(m // 2)
        raise RelsymError(
            f"cyclic-in-dihedral pair requires C_2m inside D_m, or C_m inside D_m "
            f"with m even, got {name!r}")
    raise RelsymError(f"unknown pair {name!r}; known: {', '.join(PAIR_NAMES)}")
