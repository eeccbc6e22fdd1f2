"""Matrix groups, conjugacy classes, exact character tables, restriction
and induction."""

import pytest

from relsym.catalog import (
    binary_dihedral,
    binary_icosahedral,
    binary_octahedral,
    binary_tetrahedral,
    cyclic,
    get_pair,
    sl3_cyclic,
)
from relsym.cyclotomic import Cyclo
from relsym.errors import NotASubgroup, NotNormal
from relsym.groups import (
    MatrixGroup,
    character_table,
    classes_meeting,
    exterior_power_character,
    induce_characters,
    natural_character,
    restrict_characters,
    subgroup_indices,
    trivial_character,
)


def test_orders_and_class_counts():
    expected = {
        cyclic(6): (6, 6),
        binary_dihedral(2): (8, 5),
        binary_dihedral(3): (12, 6),
        binary_tetrahedral(): (24, 7),
        binary_octahedral(): (48, 8),
        binary_icosahedral(): (120, 9),
        sl3_cyclic(3, (1, 1, 1)): (3, 3),
        sl3_cyclic(7, (1, 2, 4)): (7, 7),
    }
    for G, (order, classes) in expected.items():
        assert (G.order, G.num_classes) == (order, classes), G.name


def test_character_degrees():
    assert character_table(binary_tetrahedral()).degrees == [1, 1, 1, 2, 2, 2, 3]
    assert character_table(binary_octahedral()).degrees == [1, 1, 2, 2, 2, 3, 3, 4]
    assert character_table(binary_icosahedral()).degrees == [1, 2, 2, 3, 3, 4, 4, 5, 6]
    assert character_table(binary_dihedral(4)).degrees == [1, 1, 1, 1, 2, 2, 2]


def test_orthogonality_small():
    for G in (binary_dihedral(3), binary_tetrahedral()):
        irrs = character_table(G).irreducibles
        for i, a in enumerate(irrs):
            for j, b in enumerate(irrs):
                assert a.inner(b) == (1 if i == j else 0)


def test_natural_character_is_faithful_trace():
    G = binary_dihedral(2)
    chi = natural_character(G)
    assert chi.degree_int() == 2
    assert chi.values[1] == -2  # the central -I class


def test_exterior_powers():
    # In SL_n the top exterior power of the natural module is trivial.
    chi2 = natural_character(binary_octahedral())
    assert exterior_power_character(chi2, 2) == trivial_character(binary_octahedral())
    G3 = sl3_cyclic(7, (1, 2, 4))
    chi3 = natural_character(G3)
    assert exterior_power_character(chi3, 3) == trivial_character(G3)
    assert exterior_power_character(chi3, 0) == trivial_character(G3)


def test_subgroup_errors():
    with pytest.raises(NotASubgroup):
        subgroup_indices(binary_dihedral(2), cyclic(3))
    # The order-8 cyclic subgroup generated by diag(zeta_8, zeta_8^-1) is
    # not normal in the binary octahedral group.
    s = ((Cyclo.zeta(8, 1), Cyclo.rational(0)),
         (Cyclo.rational(0), Cyclo.zeta(8, 7)))
    C8 = MatrixGroup([s], name="C8-in-O", expected_order=8)
    with pytest.raises(NotNormal):
        subgroup_indices(binary_octahedral(), C8)


def test_frobenius_reciprocity():
    from relsym.groups import CharTable, ClassFunction
    pair = get_pair("C6<D3")
    tg = character_table(pair.G)
    tn = character_table(pair.N)
    sub = subgroup_indices(pair.G, pair.N)
    for phi in tn.irreducibles:
        # Induce the single character phi by passing a one-row table.
        (phi_up,), _ = induce_characters(pair.N, pair.G, CharTable(pair.N, [phi]))
        for chi in tg.irreducibles:
            down = ClassFunction(
                pair.N,
                tuple(chi.values[pair.G.class_of[sub[r]]] for r in pair.N.reps))
            assert phi_up.inner(chi) == phi.inner(down)


def test_bundle_counts_match_meeting_classes():
    for name in ("C4<D2", "D3<D6", "T<O", "D2<T"):
        pair = get_pair(name)
        rest, _ = restrict_characters(pair.G, pair.N)
        ind, _ = induce_characters(pair.N, pair.G)
        meeting = classes_meeting(pair.G, set(subgroup_indices(pair.G, pair.N)))
        assert len(rest) == len(ind) == len(meeting), name


def test_class_ordering_identity_first():
    G = binary_octahedral()
    assert G.classes[0] == (0,)
    orders = [G.element_order(r) for r in G.reps]
    assert orders[0] == 1 and sorted(orders) == orders[:1] + sorted(orders[1:])
