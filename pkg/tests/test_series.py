"""Series engines: determinant/Cramer, Molien, character-product denominator,
closed forms."""

import pytest

from relsym.catalog import get_group, get_pair, sl3_cyclic
from relsym.errors import NonCharacter, SizeMismatch
from relsym.groups import ClassFunction, character_table, natural_character
from relsym.cyclotomic import Cyclo
from relsym.poly import IntPoly, RatFun, one_minus_tk, series_expand
from relsym.series import (
    cramer_matrix,
    group_series,
    molien_ratfun,
    pair_series,
    proportionality_check,
    series_by_determinant,
)
from relsym.tensor import group_tensor_matrices


def test_golden_ratfuns():
    assert pair_series(get_pair("T<O"), "rest")[0] == RatFun(
        IntPoly([1] + [0] * 11 + [1]), one_minus_tk(6) * one_minus_tk(8))
    assert pair_series(get_pair("D2<T"), "rest")[0] == RatFun(
        IntPoly([1, 0, 0, 0, 0, 0, 1]), one_minus_tk(4) ** 2)
    assert pair_series(get_pair("C2<D2"), "rest")[0] == RatFun(
        IntPoly([1, 0, 1]), one_minus_tk(2) ** 2)


def test_molien_matches_determinant():
    for name in ("C4<D2", "C6<D3", "D2<T"):
        pair = get_pair(name)
        for side, host in (("rest", pair.N), ("ind", pair.G)):
            bundle = pair_series(pair, side)
            from relsym.series import induction_data, restriction_data
            mods = (restriction_data(pair) if side == "rest"
                    else induction_data(pair))[0]
            for i, cf in enumerate(mods):
                assert molien_ratfun(host, cf) == bundle[i], (name, side, i)


def test_group_series_is_molien():
    G = get_group("T")
    bundle = group_series(G)
    for i, chi in enumerate(character_table(G).irreducibles):
        assert molien_ratfun(G, chi) == bundle[i]


def test_sl3_trivial_series():
    G = sl3_cyclic(3, (1, 1, 1))
    bundle = group_series(G)
    assert bundle[0] == RatFun(IntPoly([1, 0, 0, 7, 0, 0, 1]),
                               one_minus_tk(3) ** 3)


def test_cramer_matrix_validation():
    G = get_group("D3")
    mats = group_tensor_matrices(G)
    with pytest.raises(SizeMismatch):
        cramer_matrix(3, mats)  # SL2 group supplies n - 1 = 1 matrix


def test_molien_rejects_non_characters():
    G = get_group("C4")
    vals = tuple(Cyclo.rational(x) for x in (1, 0, 0, 0))
    with pytest.raises(NonCharacter):
        molien_ratfun(G, ClassFunction(G, vals))


def test_series_labels():
    bundle = group_series(get_group("D2"))
    assert bundle.labels == ("0", "1", "2", "3", "4")
    assert bundle["2"] == bundle[2]


def test_proportionality_t_in_o():
    pair = get_pair("T<O")
    match = proportionality_check(pair, pair_series(pair, "rest"),
                                  pair_series(pair, "ind"))
    assert match[0] == (0, 0, 1)
    assert all(f in (1, 2) for _, _, f in match)


def test_expansions_are_nonnegative_integers():
    for name in ("C3", "D4", "O"):
        for f in group_series(get_group(name)).series:
            assert series_expand(f, 64).is_nonneg_integral(), name
