"""Classification of tensor matrices into affine Dynkin types, and the
restriction/induction duality between twisted and multiply-laced tags."""

import random

import pytest

from relsym.catalog import GROUP_NAMES, PAIR_NAMES, get_group, get_pair
from relsym.dynkin import AFFINE_TYPES, classify_cartan
from relsym.errors import Unclassified
from relsym.series import induction_data, restriction_data
from relsym.tensor import group_tensor_matrices

GROUP_TAGS = {
    "C2": "A1^(1)", "C3": "A2^(1)", "C4": "A3^(1)", "C5": "A4^(1)",
    "C6": "A5^(1)", "C7": "A6^(1)", "C8": "A7^(1)",
    "D2": "D4^(1)", "D3": "D5^(1)", "D4": "D6^(1)", "D5": "D7^(1)",
    "D6": "D8^(1)",
    "T": "E6^(1)", "O": "E7^(1)", "I": "E8^(1)",
}

PAIR_TAGS = {
    "D1<D2": ("D3^(2)", "C2^(1)"),
    "D2<D4": ("A5^(2)", "B3^(1)"),
    "D3<D6": ("A7^(2)", "B4^(1)"),
    "D4<D8": ("A9^(2)", "B5^(1)"),
    "D5<D10": ("A11^(2)", "B6^(1)"),
    "C4<D2": ("D3^(2)", "C2^(1)"),
    "C6<D3": ("D4^(2)", "C3^(1)"),
    "C8<D4": ("D5^(2)", "C4^(1)"),
    "C10<D5": ("D6^(2)", "C5^(1)"),
    "C12<D6": ("D7^(2)", "C6^(1)"),
    "C2<D2": ("A2^(2)", "A1^(1)"),
    "C4<D4": ("A4^(2)", "C2^(1)"),
    "C6<D6": ("A6^(2)", "C3^(1)"),
    "C8<D8": ("A8^(2)", "C4^(1)"),
    "C10<D10": ("A10^(2)", "C5^(1)"),
    "T<O": ("E6^(2)", "F4^(1)"),
    "D2<T": ("D4^(3)", "G2^(1)"),
}


def test_group_classification():
    for name, tag in GROUP_TAGS.items():
        mats = group_tensor_matrices(get_group(name))
        assert mats[0].classify().tag == tag, name


def test_pair_classification_and_duality():
    assert set(PAIR_TAGS) == set(PAIR_NAMES)
    for name, (rest_tag, ind_tag) in PAIR_TAGS.items():
        pair = get_pair(name)
        _, rmats, _ = restriction_data(pair)
        _, imats, _ = induction_data(pair)
        rty, ity = rmats[0].classify(), imats[0].classify()
        assert (rty.tag, ity.tag) == (rest_tag, ind_tag), name
        assert rty.dual_tag == ity.tag, name


def test_closed_form_parameters_shared_across_duals():
    for name in PAIR_NAMES:
        pair = get_pair(name)
        _, rmats, _ = restriction_data(pair)
        _, imats, _ = induction_data(pair)
        rty, ity = rmats[0].classify(), imats[0].classify()
        assert (rty.a, rty.b, rty.h) == (ity.a, ity.b, ity.h), name
        assert (rty.dp, rty.dq, rty.dr) == (ity.dp, ity.dq, ity.dr), name


def test_uniform_parameter_consistency():
    for ty in AFFINE_TYPES.values():
        assert ty.a + ty.b == ty.h + 2, ty.tag
        if ty.affine_exponents is not None:
            assert len(ty.affine_exponents) == ty.rank, ty.tag
        assert len(ty.finite_exponents) == ty.rank - 1, ty.tag


def test_classification_is_permutation_invariant():
    rng = random.Random(7)
    for tag in ("A5^(2)", "D5^(2)", "B4^(1)", "F4^(1)", "G2^(1)", "E7^(1)"):
        ty = AFFINE_TYPES[tag]
        n = ty.rank
        for _ in range(5):
            perm = list(range(n))
            rng.shuffle(perm)
            shuffled = [[ty.cartan[perm[i]][perm[j]] for j in range(n)]
                        for i in range(n)]
            assert classify_cartan(shuffled).tag == tag


def test_unclassifiable_matrix_raises():
    with pytest.raises(Unclassified):
        classify_cartan([[2, -5], [-5, 2]])


def test_sl3_groups_have_no_rank2_tag():
    mats = group_tensor_matrices(get_group("S3_111"))
    with pytest.raises(Unclassified):
        mats[0].classify()


def test_transpose_symmetry_all_groups():
    from relsym.tensor import verify_transpose_symmetry
    for name in GROUP_NAMES:
        for r, ok in verify_transpose_symmetry(get_group(name)):
            assert ok, (name, r)
