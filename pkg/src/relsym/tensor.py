"""Tensor-decomposition matrices and their structural verifications.

The entry in row j, column i of a tensor matrix is the multiplicity of
module i in (exterior-power character) * (module j), computed with the
normalized character pairing so that restriction bundles (which may be
reducible) still yield the integer decomposition coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cyclotomic import Cyclo
from .dynkin import AffineType, classify_cartan
from .errors import NonIntegralMultiplicity
from .groups import (
    CharTable,
    ClassFunction,
    MatrixGroup,
    character_table,
    exterior_power_character,
    natural_character,
)


@dataclass(frozen=True)
class TensorMatrix:
    entries: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...]
    side: str  # "plain", "restriction", or "induction"
    r: int

    @property
    def size(self) -> int:
        return len(self.entries)

    def transpose(self) -> "TensorMatrix":
        n = self.size
        return TensorMatrix(
            tuple(tuple(self.entries[j][i] for j in range(n)) for i in range(n)),
            self.labels, self.side, self.r)

    def cartan(self) -> list[list[int]]:
        """The generalized Cartan matrix 2I - (entries)^T."""
        n = self.size
        return [[(2 if i == j else 0) - self.entries[j][i] for j in range(n)]
                for i in range(n)]

    def classify(self) -> AffineType:
        return classify_cartan(self.cartan())

    def to_json(self) -> dict:
        return {
            "labels": list(self.labels),
            "side": self.side,
            "r": self.r,
            "entries": [list(row) for row in self.entries],
        }


def tensor_matrix(modules: list[ClassFunction], multiplier: ClassFunction,
                  side: str = "plain", r: int = 1) -> TensorMatrix:
    """Decomposition matrix of multiplier * modules[j] over the module list."""
    norms = [m.inner(m) for m in modules]
    rows = []
    for j, mj in enumerate(modules):
        prod = multiplier * mj
        row = []
        for i, mi in enumerate(modules):
            m = prod.inner(mi) / norms[i]
            if m.denominator != 1 or m < 0:
                raise NonIntegralMultiplicity(
                    f"entry ({j}, {i}) = {m} is not a nonnegative integer")
            row.append(int(m))
        rows.append(tuple(row))
    labels = tuple(m.label or str(k) for k, m in enumerate(modules))
    return TensorMatrix(tuple(rows), labels, side, r)


def group_tensor_matrices(G: MatrixGroup, table: CharTable | None = None) -> list[TensorMatrix]:
    """A_r for r = 1..n-1 over the full character table of G."""
    if table is None:
        table = character_table(G)
    chi_v = natural_character(G)
    out = []
    for r in range(1, G.n):
        mult = exterior_power_character(chi_v, r)
        out.append(tensor_matrix(table.irreducibles, mult, side="plain", r=r))
    return out


def verify_transpose_symmetry(G: MatrixGroup) -> list[tuple[int, bool]]:
    """Check A_r = A_{n-r}^T for r = 1..n-1; returns (r, ok) per r."""
    mats = group_tensor_matrices(G)
    n = G.n
    report = []
    for r in range(1, n):
        a_r = mats[r - 1]
        a_nr = mats[n - r - 1]
        report.append((r, a_r.entries == a_nr.transpose().entries))
    return report


def verify_eigen_structure(modules: list[ClassFunction], mult: ClassFunction,
                           M: TensorMatrix, class_indices: list[int]) -> list[tuple[int, bool]]:
    """For each listed class c of the underlying group, check that the value
    vector v = (module_i(c))_i is an eigenvector of the tensor matrix with
    eigenvalue mult(c), exactly: sum_i entries[j][i] v_i = mult(c) v_j.
    At the identity class this is the degree vector with eigenvalue
    mult(identity) = dim of the multiplier module."""
    n = M.size
    report = []
    for c in class_indices:
        v = [m.values[c] for m in modules]
        lam = mult.values[c]
        ok = True
        for j in range(n):
            lhs = sum((Cyclo.rational(M.entries[j][i]) * v[i] for i in range(n)),
                      Cyclo.rational(0))
            if lhs != lam * v[j]:
                ok = False
                break
        report.append((c, ok))
    return report


def quiver_dot(M: TensorMatrix, degrees: list[int] | None = None) -> str:
    """DOT digraph: i and j joined by max(b_ij, b_ji) edges, with an arrow
    pointing to i whenever b_ij > 1 (plain lines rendered as dir=none)."""
    lines = ["digraph quiver {"]
    for k, lab in enumerate(M.labels):
        deg = f" ({degrees[k]})" if degrees is not None else ""
        lines.append(f'  v{k} [label="{lab}{deg}"];')
    n = M.size
    for i in range(n):
        for j in range(i + 1, n):
            b_ij = M.entries[i][j]
            b_ji = M.entries[j][i]
            edges = max(b_ij, b_ji)
            for _ in range(edges):
                if b_ij > 1 and b_ji > 1:
                    lines.append(f"  v{i} -> v{j} [dir=both];")
                elif b_ij > 1:
                    # arrow points to i per the multiplicity rule
                    lines.append(f"  v{j} -> v{i};")
                elif b_ji > 1:
                    lines.append(f"  v{i} -> v{j};")
                else:
                    lines.append(f"  v{i} -> v{j} [dir=none];")
    # Loops (diagonal entries) drawn once per unit.
    for i in range(n):
        for _ in range(M.entries[i][i]):
            lines.append(f"  v{i} -> v{i} [dir=none];")
    lines.append("}")
    return "\n".join(lines) + "\n"
