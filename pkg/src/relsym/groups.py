"""Finite matrix groups over cyclotomic fields and their character theory.

Groups are built by closing a generator list under multiplication.  Elements
are exact cyclotomic matrices, so conjugacy classes, character tables,
restriction to a normal subgroup, and Frobenius induction are all computed
without any floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .cyclotomic import Cyclo
from .errors import (
    BadGenerators,
    IncompleteTable,
    NonCharacter,
    NotASubgroup,
    NotNormal,
)

Matrix = tuple[tuple[Cyclo, ...], ...]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    return tuple(
        tuple(sum((a[i][k] * b[k][j] for k in range(n)), Cyclo.rational(0)) for j in range(n))
        for i in range(n)
    )


def mat_trace(a: Matrix) -> Cyclo:
    return sum((a[i][i] for i in range(len(a))), Cyclo.rational(0))


def mat_det(a: Matrix) -> Cyclo:
    n = len(a)
    if n == 1:
        return a[0][0]
    if n == 2:
        return a[0][0] * a[1][1] - a[0][1] * a[1][0]
    if n == 3:
        return (
            a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
            - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
            + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0])
        )
    raise ValueError("determinant implemented for sizes up to 3")


def mat_identity(n: int) -> Matrix:
    one, zero = Cyclo.rational(1), Cyclo.rational(0)
    return tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n))


def _mat_key(a: Matrix, conductor: int):
    return tuple(tuple(x.key(conductor) for x in row) for row in a)


class MatrixGroup:
    """A finite subgroup of SL_n given by explicit matrices.

    `elements` is the full element list with the identity at index 0;
    `classes` lists conjugacy classes as sorted index tuples, identity class
    first, then by increasing element order, then by minimal member index.
    """

    def __init__(self, generators: list[Matrix], name: str = "", expected_order: int | None = None):
        if not generators:
            raise BadGenerators("no generators given")
        self.n = len(generators[0])
        self.name = name
        conductor = 1
        for g in generators:
            for row in g:
                for x in row:
                    conductor = math.lcm(conductor, x.m)
        self.conductor = conductor
        self.generators = [tuple(tuple(x.promote(conductor) for x in row) for row in g)
                           for g in generators]
        self._close(expected_order)
        self._classify()

    # -- construction ------------------------------------------------------

    def _close(self, expected_order: int | None):
        ident = mat_identity(self.n)
        ident = tuple(tuple(x.promote(self.conductor) for x in row) for row in ident)
        elements: list[Matrix] = [ident]
        index: dict = {_mat_key(ident, self.conductor): 0}
        frontier = [ident]
        cap = 10 * expected_order if expected_order else 10_000
        while frontier:
            nxt = []
            for a in frontier:
                for g in self.generators:
                    b = mat_mul(a, g)
                    k = _mat_key(b, self.conductor)
                    if k not in index:
                        if len(elements) >= cap:
                            raise BadGenerators(
                                f"group {self.name or '?'} did not close within {cap} elements")
                        index[k] = len(elements)
                        elements.append(b)
                        nxt.append(b)
            frontier = nxt
        self.elements = elements
        self._index = index
        self.order = len(elements)
        for g in self.generators:
            if mat_det(g) != 1:
                raise BadGenerators("generator with determinant != 1")

    def lookup(self, a: Matrix) -> int:
        m = math.lcm(self.conductor, max(x.m for row in a for x in row))
        if m != self.conductor:
            try:
                a = tuple(tuple(x.promote(self.conductor) for x in row) for row in a)
            except ValueError:
                # An entry not expressible in this group's field cannot
                # belong to the group.
                raise KeyError("entry outside the group's cyclotomic field") from None
        return self._index[_mat_key(a, self.conductor)]

    def mul(self, i: int, j: int) -> int:
        return self.lookup(mat_mul(self.elements[i], self.elements[j]))

    def inv(self, i: int) -> int:
        j = i
        while True:
            k = self.mul(j, i)
            if k == 0:
                return j
            j = k

    def element_order(self, i: int) -> int:
        j, n = i, 1
        while j != 0:
            j = self.mul(j, i)
            n += 1
        return n

    def power(self, i: int, k: int) -> int:
        out, base = 0, i
        k %= self.element_order(i)
        while k:
            if k & 1:
                out = self.mul(out, base)
            base = self.mul(base, base)
            k >>= 1
        return out

    def _classify(self):
        gen_idx = [self.lookup(g) for g in self.generators]
        gen_inv = [self.inv(i) for i in gen_idx]
        seen = [False] * self.order
        classes = []
        for i in range(self.order):
            if seen[i]:
                continue
            orbit = {i}
            frontier = [i]
            seen[i] = True
            while frontier:
                nxt = []
                for e in frontier:
                    for g, gi in zip(gen_idx, gen_inv):
                        c = self.mul(self.mul(g, e), gi)
                        if c not in orbit:
                            orbit.add(c)
                            seen[c] = True
                            nxt.append(c)
                frontier = nxt
            classes.append(tuple(sorted(orbit)))
        classes.sort(key=lambda cls: (cls[0] != 0, self.element_order(cls[0]), cls[0]))
        self.classes = classes
        self.class_of = [0] * self.order
        for ci, cls in enumerate(classes):
            for e in cls:
                self.class_of[e] = ci
        self.reps = [cls[0] for cls in classes]

    @property
    def num_classes(self) -> int:
        return len(self.classes)

    def class_power_map(self, k: int) -> list[int]:
        """Class index of rep^k for each class."""
        return [self.class_of[self.power(r, k)] for r in self.reps]

    def __repr__(self) -> str:
        return f"MatrixGroup({self.name or 'unnamed'}, order={self.order}, classes={self.num_classes})"


@dataclass(frozen=True)
class ClassFunction:
    """Exact class function: one cyclotomic value per conjugacy class."""

    group: MatrixGroup = field(compare=False)
    values: tuple[Cyclo, ...]
    label: str = field(default="", compare=False)

    def __post_init__(self):
        if len(self.values) != self.group.num_classes:
            raise ValueError("one value per conjugacy class required")

    def __call__(self, class_index: int) -> Cyclo:
        return self.values[class_index]

    @property
    def degree(self) -> Cyclo:
        return self.values[0]

    def degree_int(self) -> int:
        return int(self.values[0].as_rational())

    def __mul__(self, other: "ClassFunction") -> "ClassFunction":
        return ClassFunction(self.group, tuple(a * b for a, b in zip(self.values, other.values)))

    def __add__(self, other: "ClassFunction") -> "ClassFunction":
        return ClassFunction(self.group, tuple(a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other: "ClassFunction") -> "ClassFunction":
        return ClassFunction(self.group, tuple(a - b for a, b in zip(self.values, other.values)))

    def scale(self, k) -> "ClassFunction":
        return ClassFunction(self.group, tuple(v * k for v in self.values))

    def inner(self, other: "ClassFunction") -> Fraction:
        """Standard character pairing (1/|G|) sum |c| a(c) conj(b(c))."""
        G = self.group
        conj = _conj_values(other)
        total = Cyclo.rational(0)
        for ci, cls in enumerate(G.classes):
            total = total + len(cls) * self.values[ci] * conj[ci]
        total = total / G.order
        if not total.is_rational:
            raise ValueError(f"non-rational inner product {total!r}")
        return total.as_rational()

    def norm(self) -> Fraction:
        return self.inner(self)

    def is_zero(self) -> bool:
        return all(v.is_zero for v in self.values)

    def power_compose(self, k: int) -> "ClassFunction":
        """The class function g -> self(g^k)."""
        pm = self.group.class_power_map(k)
        return ClassFunction(self.group, tuple(self.values[pm[ci]] for ci in range(self.group.num_classes)))


_CONJ_CACHE: dict[int, tuple["ClassFunction", tuple[Cyclo, ...]]] = {}


def _conj_values(cf: "ClassFunction") -> tuple[Cyclo, ...]:
    """Per-object cache of conjugated value tuples; the pairing conjugates
    its right argument, which in the table algorithms is drawn from a small
    stable set."""
    hit = _CONJ_CACHE.get(id(cf))
    if hit is not None and hit[0] is cf:
        return hit[1]
    vals = tuple(v.conj() for v in cf.values)
    _CONJ_CACHE[id(cf)] = (cf, vals)
    return vals


def trivial_character(G: MatrixGroup) -> ClassFunction:
    one = Cyclo.rational(1)
    return ClassFunction(G, tuple(one for _ in range(G.num_classes)), label="0")


def natural_character(G: MatrixGroup) -> ClassFunction:
    return ClassFunction(G, tuple(mat_trace(G.elements[r]) for r in G.reps), label="V")


def exterior_power_character(chi: ClassFunction, r: int) -> ClassFunction:
    """Character of the r-th exterior power via the Girard recurrence
    e_r = (1/r) sum_{k=1}^{r} (-1)^{k-1} e_{r-k} p_k with p_k(g) = chi(g^k)."""
    G = chi.group
    if r < 0:
        raise ValueError("negative exterior power")
    es = [trivial_character(G)]
    ps = {k: chi.power_compose(k) for k in range(1, r + 1)}
    for j in range(1, r + 1):
        acc = ClassFunction(G, tuple(Cyclo.rational(0) for _ in range(G.num_classes)))
        sign = 1
        for k in range(1, j + 1):
            term = es[j - k] * ps[k]
            acc = acc + (term if sign > 0 else term.scale(-1))
            sign = -sign
        es.append(acc.scale(Fraction(1, j)))
    return es[r]


@dataclass
class CharTable:
    group: MatrixGroup
    irreducibles: list[ClassFunction]

    @property
    def degrees(self) -> list[int]:
        return [chi.degree_int() for chi in self.irreducibles]

    def decompose(self, chi: ClassFunction) -> list[Fraction]:
        return [chi.inner(irr) for irr in self.irreducibles]

    def assert_character(self, chi: ClassFunction):
        for m in self.decompose(chi):
            if m.denominator != 1 or m < 0:
                raise NonCharacter(f"multiplicity {m} is not a nonnegative integer")


def _linear_characters_of_cyclic(G: MatrixGroup, gen: int) -> list[ClassFunction]:
    """All irreducible characters of an abelian group generated by `gen`."""
    n = G.element_order(gen)
    out = []
    elt_pow = {}
    e, k = 0, 0
    for k in range(n):
        elt_pow[e] = k
        e = G.mul(e, gen)
    for j in range(n):
        vals = tuple(Cyclo.zeta(n, (j * elt_pow[r]) % n) for r in G.reps)
        out.append(ClassFunction(G, vals))
    return out


def _induced_linear_pool(G: MatrixGroup) -> list[ClassFunction]:
    """Inductions to G of the linear characters of each cyclic subgroup <g>,
    one g per conjugacy class.  These span the class functions, so peeling
    against this pool always completes the table."""
    pool = []
    for rep in G.reps:
        n = G.element_order(rep)
        powers = []
        e = 0
        for _ in range(n):
            powers.append(e)
            e = G.mul(e, rep)
        # (Ind xi_j)(g) = (|G| / (n * |class(g)|)) * sum over h in class(g)
        # meeting <rep> of xi_j(h).
        in_cyclic = {h: k for k, h in enumerate(powers)}
        for j in range(n):
            vals = []
            for ci, cls in enumerate(G.classes):
                acc = Cyclo.rational(0)
                hits = 0
                for h in cls:
                    if h in in_cyclic:
                        acc = acc + Cyclo.zeta(n, (j * in_cyclic[h]) % n)
                        hits += 1
                if hits:
                    acc = acc * Fraction(G.order, n * len(cls))
                vals.append(acc)
            pool.append(ClassFunction(G, tuple(vals)))
    return pool


_TABLE_CACHE: dict[int, CharTable] = {}


def character_table(G: MatrixGroup) -> CharTable:
    """Exact character table.

    Cyclic groups take a direct route.  Otherwise irreducibles are peeled
    from a pool of known characters (natural-module tensor products plus
    inductions of linear characters from cyclic subgroups) by subtracting
    known components and keeping norm-one remainders.
    """
    cached = _TABLE_CACHE.get(id(G))
    if cached is not None:
        return cached

    for rep in G.reps:
        if G.element_order(rep) == G.order:
            n = G.order
            irrs = _linear_characters_of_cyclic(G, rep)
            irrs = _order_irreducibles(G, irrs)
            table = CharTable(G, irrs)
            _TABLE_CACHE[id(G)] = table
            return table

    found: list[ClassFunction] = [trivial_character(G)]
    chi_v = natural_character(G)
    pool: list[ClassFunction] = [chi_v] + _induced_linear_pool(G)

    def peel(chi: ClassFunction):
        rem = chi
        for irr in found:
            m = rem.inner(irr)
            assert m.denominator == 1 and m >= 0, m
            if m:
                rem = rem - irr.scale(m)
        return rem

    progress = True
    while sum(d * d for d in (irr.degree_int() for irr in found)) < G.order and progress:
        progress = False
        work = list(pool) + [chi_v * irr for irr in found]
        for chi in work:
            rem = peel(chi)
            if rem.is_zero():
                continue
            if rem.norm() == 1:
                if rem.degree.as_rational() < 0:
                    rem = rem.scale(-1)
                found.append(rem)
                progress = True
    if sum(d * d for d in (irr.degree_int() for irr in found)) != G.order:
        raise IncompleteTable(f"peeling stalled for {G.name} with {len(found)} irreducibles")
    table = CharTable(G, _order_irreducibles(G, found))
    _TABLE_CACHE[id(G)] = table
    return table


def _cyclo_sort_key(v: Cyclo, conductor: int):
    return v.key(conductor)


def _order_irreducibles(G: MatrixGroup, irrs: list[ClassFunction]) -> list[ClassFunction]:
    """Trivial first, then ascending degree, ties by class-value tuples."""
    m = 1
    for chi in irrs:
        for v in chi.values:
            m = math.lcm(m, v.m)

    def key(chi: ClassFunction):
        triv = all(v == 1 for v in chi.values)
        return (not triv, chi.degree_int(), tuple(v.key(m) for v in chi.values))

    ordered = sorted(irrs, key=key)
    return [ClassFunction(G, chi.values, label=str(i)) for i, chi in enumerate(ordered)]


# -- subgroup machinery ----------------------------------------------------

def subgroup_indices(G: MatrixGroup, N: MatrixGroup) -> list[int]:
    """Indices in G of N's elements; checks containment and normality."""
    try:
        idx = [G.lookup(e) for e in N.elements]
    except KeyError as exc:
        raise NotASubgroup(f"{N.name} is not contained in {G.name}") from exc
    in_n = set(idx)
    for gi in [G.lookup(g) for g in G.generators]:
        ginv = G.inv(gi)
        for e in idx:
            if G.mul(G.mul(gi, e), ginv) not in in_n:
                raise NotNormal(f"{N.name} is not normal in {G.name}")
    return idx


def classes_meeting(G: MatrixGroup, n_indices: set[int]) -> list[int]:
    """Class indices of G whose classes intersect the subgroup."""
    return [ci for ci, cls in enumerate(G.classes) if any(e in n_indices for e in cls)]


def restrict_characters(G: MatrixGroup, N: MatrixGroup, table: CharTable | None = None):
    """Deduplicated restrictions of G-irreducibles to N, trivial bundle first.

    Returns (list of ClassFunction on N, list of lists of G-irreducible
    labels that restrict to each).
    """
    sub = subgroup_indices(G, N)
    if table is None:
        table = character_table(G)
    g_of_n = {ni: gi for ni, gi in enumerate(sub)}
    out: list[ClassFunction] = []
    origins: list[list[str]] = []
    for irr in table.irreducibles:
        vals = tuple(irr.values[G.class_of[g_of_n[N.reps[ci]]]] for ci in range(N.num_classes))
        cf = ClassFunction(N, vals)
        for k, prev in enumerate(out):
            if prev.values == cf.values:
                origins[k].append(irr.label)
                break
        else:
            out.append(cf)
            origins.append([irr.label])
    # Trivial-containing bundle is first already (trivial G-character is
    # listed first and restricts to the trivial N-character).
    out = [ClassFunction(N, cf.values, label=str(i)) for i, cf in enumerate(out)]
    return out, origins


def induce_characters(N: MatrixGroup, G: MatrixGroup, table: CharTable | None = None):
    """Deduplicated Frobenius inductions of N-irreducibles to G, with the
    induction of the trivial character first."""
    sub = subgroup_indices(G, N)
    if table is None:
        table = character_table(N)
    n_class_of_g: dict[int, int] = {}
    for ni, gi in enumerate(sub):
        n_class_of_g[gi] = N.class_of[ni]
    out: list[ClassFunction] = []
    origins: list[list[str]] = []
    for irr in table.irreducibles:
        vals = []
        for cls in G.classes:
            acc = Cyclo.rational(0)
            hits = 0
            for e in cls:
                nc = n_class_of_g.get(e)
                if nc is not None:
                    acc = acc + irr.values[nc]
                    hits += 1
            if hits:
                acc = acc * Fraction(G.order, N.order * len(cls))
            vals.append(acc)
        cf = ClassFunction(G, tuple(vals))
        for k, prev in enumerate(out):
            if prev.values == cf.values:
                origins[k].append(irr.label)
                break
        else:
            out.append(cf)
            origins.append([irr.label])
    out = [ClassFunction(G, cf.values, label=str(i)) for i, cf in enumerate(out)]
    return out, origins
