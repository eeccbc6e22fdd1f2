"""Command-line interface.

Targets are named `group:<name>` or `pair:<N><<G>` (for example `group:O`
or `pair:T<O`).  Exit codes: 0 success, 1 verification failures, 2 usage
errors.  Output is deterministic for fixed inputs.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import catalog
from .dynkin import AFFINE_TYPES
from .errors import RelsymError, Unclassified
from .groups import (
    character_table,
    classes_meeting,
    exterior_power_character,
    natural_character,
    subgroup_indices,
)
from .poly import RatFun, factored_display, series_expand
from .series import (
    closed_form_cartan_det,
    closed_form_invariants,
    cramer_matrix,
    denominator_by_characters,
    exponent_product,
    exponent_series,
    group_series,
    induction_data,
    molien_ratfun,
    proportionality_check,
    restriction_data,
    series_by_determinant,
)
from .tcheb import (
    cyclic_group_closed_form,
    cyclic_pair_closed_form,
    dihedral_group_closed_form,
    dihedral_pair_closed_form,
    tcheb_identity_suite,
)
from .tensor import group_tensor_matrices, quiver_dot, verify_eigen_structure, verify_transpose_symmetry

DEFAULT_ORDER = 64


class UsageError(Exception):
    pass


def _parse_target(name: str):
    """Returns ('group', MatrixGroup) or ('pair', Pair)."""
    if name.startswith("group:"):
        return "group", catalog.get_group(name[len("group:"):])
    if name.startswith("pair:"):
        return "pair", catalog.get_pair(name[len("pair:"):])
    raise UsageError(f"target must start with 'group:' or 'pair:', got {name!r}")


def _cyclo_json(v) -> dict:
    return {"m": v.m, "coeffs": [[e, str(c)] for e, c in enumerate(v.coeffs) if c]}


def _table_json(G) -> dict:
    table = character_table(G)
    return {
        "group": G.name,
        "order": G.order,
        "class_sizes": [len(c) for c in G.classes],
        "class_element_orders": [G.element_order(r) for r in G.reps],
        "labels": [chi.label for chi in table.irreducibles],
        "degrees": table.degrees,
        "characters": [[_cyclo_json(v) for v in chi.values] for chi in table.irreducibles],
    }


def _pair_json(pair) -> dict:
    rest, rmats, rorig = restriction_data(pair)
    ind, imats, iorig = induction_data(pair)
    return {
        "pair": pair.name,
        "ambient": _table_json(pair.G),
        "subgroup": _table_json(pair.N),
        "restriction": {
            "matrix": rmats[0].to_json(),
            "type": rmats[0].classify().tag,
            "bundles": rorig,
        },
        "induction": {
            "matrix": imats[0].to_json(),
            "type": imats[0].classify().tag,
            "bundles": iorig,
        },
    }


def cmd_list_groups(_args) -> int:
    for name in catalog.GROUP_NAMES:
        G = catalog.get_group(name)
        mats = group_tensor_matrices(G)
        try:
            tag = mats[0].classify().tag
        except Unclassified:
            tag = "-"
        print(f"group:{name}  order={G.order}  classes={G.num_classes}  type={tag}")
    return 0


def cmd_list_pairs(_args) -> int:
    for name in catalog.PAIR_NAMES:
        pair = catalog.get_pair(name)
        _, rmats, _ = restriction_data(pair)
        _, imats, _ = induction_data(pair)
        print(f"pair:{name}  |G|={pair.G.order}  |N|={pair.N.order}  "
              f"rest={rmats[0].classify().tag}  ind={imats[0].classify().tag}")
    return 0


def cmd_char_table(args) -> int:
    kind, obj = _parse_target(args.target)
    if kind != "group":
        raise UsageError("char-table expects a group target")
    data = _table_json(obj)
    print(f"group {obj.name}: order {obj.order}, {obj.num_classes} classes")
    print("class sizes:", " ".join(str(s) for s in data["class_sizes"]))
    print("element orders:", " ".join(str(s) for s in data["class_element_orders"]))
    table = character_table(obj)
    for chi in table.irreducibles:
        vals = " ".join(_fmt_cyclo(v) for v in chi.values)
        print(f"chi_{chi.label} (deg {chi.degree_int()}): {vals}")
    return 0


def _fmt_cyclo(v) -> str:
    if v.is_rational:
        return str(v.as_rational())
    terms = []
    for e, c in enumerate(v.coeffs):
        if c:
            prefix = "" if c == 1 else ("-" if c == -1 else f"{c}*")
            terms.append(f"{prefix}z{v.m}^{e}" if e else str(c))
    return "+".join(terms).replace("+-", "-")


def cmd_quiver(args) -> int:
    kind, obj = _parse_target(args.target)
    if kind == "group":
        mat = group_tensor_matrices(obj)[0]
        degrees = character_table(obj).degrees
    else:
        if args.side == "ind":
            mods, mats, _ = induction_data(obj)
        else:
            mods, mats, _ = restriction_data(obj)
        mat = mats[0]
        degrees = [m.degree_int() for m in mods]
    if args.format == "json":
        print(json.dumps(mat.to_json(), sort_keys=True, indent=2))
    else:
        sys.stdout.write(quiver_dot(mat, degrees))
    return 0


def _closed_form_for(kind, obj, tag_matrix) -> RatFun:
    try:
        ty = tag_matrix.classify()
    except Unclassified:
        ty = None
    if ty is not None and ty.uniform:
        return closed_form_invariants(ty)
    # Cyclic group of any order: the binomial formula always applies.
    if kind == "group" and obj.name.startswith("C") and obj.n == 2:
        return cyclic_group_closed_form(obj.order)
    raise UsageError("no closed form stored for this target")


def cmd_series(args) -> int:
    kind, obj = _parse_target(args.target)
    order = args.order
    if kind == "group":
        mats = group_tensor_matrices(obj)
        bundle = series_by_determinant(obj.n, mats)
        molien_host, molien_mods = obj, character_table(obj).irreducibles
        tag_matrix = mats[0]
    else:
        side = args.side
        if side == "ind":
            mods, mats, _ = induction_data(obj)
            host = obj.G
        else:
            mods, mats, _ = restriction_data(obj)
            host = obj.N
        bundle = series_by_determinant(host.n, mats)
        molien_host, molien_mods = host, mods
        tag_matrix = mats[0]
    try:
        label_idx = bundle.labels.index(args.label)
    except ValueError:
        raise UsageError(
            f"unknown label {args.label!r}; have {', '.join(bundle.labels)}")

    results: list[tuple[str, RatFun]] = []
    methods = ["det", "molien", "closed"] if args.method == "all" else [args.method]
    for method in methods:
        if method == "det":
            results.append(("det", bundle[label_idx]))
        elif method == "molien":
            results.append(("molien", molien_ratfun(molien_host, molien_mods[label_idx])))
        elif method == "closed":
            if label_idx != 0:
                if args.method == "all":
                    continue
                raise UsageError("closed forms cover the trivial label only")
            results.append(("closed", _closed_form_for(kind, obj, tag_matrix)))
    for method, f in results:
        s = series_expand(f, order)
        coeffs = " ".join(str(int(c)) if c.denominator == 1 else str(c) for c in s.coeffs)
        print(f"{method}: {coeffs}")
    f = results[0][1]
    print(f"ratfun: {f}")
    disp = factored_display(f)
    if disp is not None:
        print(f"factored: {disp}")
    return 0


# -- verification suites ---------------------------------------------------

def _suite_orthogonality() -> list[str]:
    fails = []
    for name in catalog.GROUP_NAMES:
        G = catalog.get_group(name)
        table = character_table(G)
        n = len(table.irreducibles)
        if sum(d * d for d in table.degrees) != G.order:
            fails.append(f"orthogonality {name}: degree squares do not sum to |G|")
        for i in range(n):
            for j in range(n):
                got = table.irreducibles[i].inner(table.irreducibles[j])
                if got != (1 if i == j else 0):
                    fails.append(f"orthogonality {name}: <chi_{i}, chi_{j}> = {got}")
    return fails


def _suite_counts() -> list[str]:
    fails = []
    for name in catalog.PAIR_NAMES:
        pair = catalog.get_pair(name)
        rest, _, _ = restriction_data(pair)
        ind, _, _ = induction_data(pair)
        sub = set(subgroup_indices(pair.G, pair.N))
        ups = classes_meeting(pair.G, sub)
        if not (len(rest) == len(ind) == len(ups)):
            fails.append(f"counts {name}: {len(rest)} restrictions, {len(ind)} "
                         f"inductions, {len(ups)} classes meeting the subgroup")
    return fails


def _suite_transpose() -> list[str]:
    fails = []
    for name in catalog.GROUP_NAMES:
        G = catalog.get_group(name)
        for r, ok in verify_transpose_symmetry(G):
            if not ok:
                fails.append(f"transpose {name}: A_{r} != A_{G.n - r}^T")
    return fails


def _suite_eigen() -> list[str]:
    fails = []
    for name in catalog.GROUP_NAMES:
        G = catalog.get_group(name)
        table = character_table(G)
        mats = group_tensor_matrices(G)
        chi_v = natural_character(G)
        for r, mat in enumerate(mats, start=1):
            mult = exterior_power_character(chi_v, r)
            for c, ok in verify_eigen_structure(table.irreducibles, mult, mat,
                                                list(range(G.num_classes))):
                if not ok:
                    fails.append(f"eigen group {name} r={r} class={c}")
    for name in catalog.PAIR_NAMES:
        pair = catalog.get_pair(name)
        rest, rmats, _ = restriction_data(pair)
        sub = set(subgroup_indices(pair.G, pair.N))
        n_of_g = {gi: ni for ni, gi in enumerate(subgroup_indices(pair.G, pair.N))}
        cls = sorted({pair.N.class_of[n_of_g[e]]
                      for gc in classes_meeting(pair.G, sub)
                      for e in pair.G.classes[gc] if e in n_of_g})
        chi_v = natural_character(pair.N)
        for r, mat in enumerate(rmats, start=1):
            mult = exterior_power_character(chi_v, r)
            for c, ok in verify_eigen_structure(rest, mult, mat, cls):
                if not ok:
                    fails.append(f"eigen pair {name} r={r} class={c}")
    return fails


def _upsilon_class_indices(pair) -> list[int]:
    sub = subgroup_indices(pair.G, pair.N)
    n_of_g = {gi: ni for ni, gi in enumerate(sub)}
    out = []
    for gc in classes_meeting(pair.G, set(sub)):
        e = next(e for e in pair.G.classes[gc] if e in n_of_g)
        out.append(pair.N.class_of[n_of_g[e]])
    return out


def _suite_fourway() -> list[str]:
    fails = []

    def check(label, host, mods, mats, cls_idx):
        bundle = series_by_determinant(host.n, mats)
        P = cramer_matrix(host.n, mats)
        det_p = P.det()
        chi_v = natural_character(host)
        chars = {r: exterior_power_character(chi_v, r) for r in range(1, host.n)}
        den = denominator_by_characters(host, cls_idx, chars, host.n)
        if den != det_p:
            fails.append(f"fourway {label}: character denominator != det")
        table = character_table(host)
        for i, cf in enumerate(mods):
            mf = molien_ratfun(host, cf, table)
            if mf != bundle.series[i]:
                fails.append(f"fourway {label}: molien disagrees at label {i}")
        try:
            ty = mats[0].classify()
        except Unclassified:
            ty = None
        if ty is not None:
            if ty.uniform and bundle.series[0] != closed_form_invariants(ty):
                fails.append(f"fourway {label}: uniform closed form disagrees")
            if RatFun(det_p) != closed_form_cartan_det(ty):
                fails.append(f"fourway {label}: cartan det closed form disagrees")
            if ty.affine_exponents is not None:
                if RatFun(exponent_product(ty.affine_exponents, ty.affine_h)) != RatFun(det_p):
                    fails.append(f"fourway {label}: affine exponent product disagrees")
                if exponent_series(ty) != bundle.series[0]:
                    fails.append(f"fourway {label}: exponent series disagrees")
        for i, f in enumerate(bundle.series):
            if not series_expand(f, DEFAULT_ORDER).is_nonneg_integral():
                fails.append(f"fourway {label}: negative coefficients at label {i}")

    for name in catalog.GROUP_NAMES:
        G = catalog.get_group(name)
        table = character_table(G)
        check(f"group:{name}", G, table.irreducibles, group_tensor_matrices(G),
              list(range(G.num_classes)))
    for name in catalog.PAIR_NAMES:
        pair = catalog.get_pair(name)
        rest, rmats, _ = restriction_data(pair)
        check(f"pair:{name}:rest", pair.N, rest, rmats, _upsilon_class_indices(pair))
        ind, imats, _ = induction_data(pair)
        meeting = classes_meeting(pair.G, set(subgroup_indices(pair.G, pair.N)))
        check(f"pair:{name}:ind", pair.G, ind, imats, meeting)
    return fails


def _suite_proportionality() -> list[str]:
    fails = []
    for name in catalog.PAIR_NAMES:
        pair = catalog.get_pair(name)
        _, rmats, _ = restriction_data(pair)
        _, imats, _ = induction_data(pair)
        rb = series_by_determinant(pair.N.n, rmats)
        ib = series_by_determinant(pair.G.n, imats)
        try:
            proportionality_check(pair, rb, ib)
        except RelsymError as exc:
            fails.append(f"proportionality {name}: {exc}")
    return fails


def _suite_tcheb() -> list[str]:
    fails = [f"tcheb {name} n={n}" for name, n, ok in tcheb_identity_suite() if not ok]
    for n in range(3, 9):
        pair = catalog.get_pair(f"D{n-1}<D{2*(n-1)}")
        _, mats, _ = restriction_data(pair)
        if dihedral_pair_closed_form(n) != series_by_determinant(2, mats)[0]:
            fails.append(f"tcheb dihedral pair n={n}")
    for n in range(2, 9):
        pair = catalog.get_pair(f"C{2*n}<D{n}")
        _, mats, _ = restriction_data(pair)
        if cyclic_pair_closed_form(n) != series_by_determinant(2, mats)[0]:
            fails.append(f"tcheb cyclic pair n={n}")
    for n in range(2, 9):
        if cyclic_group_closed_form(n) != group_series(catalog.cyclic(n))[0]:
            fails.append(f"tcheb cyclic group n={n}")
        if dihedral_group_closed_form(n) != group_series(catalog.binary_dihedral(n))[0]:
            fails.append(f"tcheb dihedral group n={n}")
    return fails


def _suite_tables() -> list[str]:
    from .poly import IntPoly, PolyMatrix, one_minus_tk
    fails = []
    for tag, ty in AFFINE_TYPES.items():
        if ty.a + ty.b != ty.h + 2:
            fails.append(f"tables {tag}: a + b != h + 2")
        # Quantum Cartan determinant of the stored template matches the
        # (p, q, r) closed form.
        rows = []
        for i in range(ty.rank):
            row = []
            for j in range(ty.rank):
                x = (2 if i == j else 0) - ty.cartan[i][j]
                row.append(IntPoly([1, 0, 1]) if i == j else IntPoly.term(-x, 1))
            rows.append(row)
        det = PolyMatrix(rows).det()
        expect = closed_form_cartan_det(ty)
        if RatFun(det) != expect:
            fails.append(f"tables {tag}: template determinant != (p,q,r) form")
        if ty.affine_exponents is not None:
            if RatFun(exponent_product(ty.affine_exponents, ty.affine_h)) != expect:
                fails.append(f"tables {tag}: affine exponent product != determinant")
    return fails


SUITES = {
    "orthogonality": _suite_orthogonality,
    "counts": _suite_counts,
    "transpose": _suite_transpose,
    "eigen": _suite_eigen,
    "fourway": _suite_fourway,
    "proportionality": _suite_proportionality,
    "tcheb": _suite_tcheb,
    "tables": _suite_tables,
}


def cmd_verify(args) -> int:
    fails = SUITES[args.suite]()
    for line in fails:
        print(line)
    print(f"{args.suite}: {'FAIL' if fails else 'PASS'} ({len(fails)} failures)")
    return 1 if fails else 0


def cmd_dump(args) -> int:
    kind, obj = _parse_target(args.target)
    data = _table_json(obj) if kind == "group" else _pair_json(obj)
    print(json.dumps(data, sort_keys=True, indent=2))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="relsym",
        description="Poincare series of relative symmetric invariants for "
                    "normal pairs of finite SL2/SL3 subgroups.")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("list-groups").set_defaults(func=cmd_list_groups)
    sub.add_parser("list-pairs").set_defaults(func=cmd_list_pairs)

    p = sub.add_parser("char-table")
    p.add_argument("target")
    p.set_defaults(func=cmd_char_table)

    p = sub.add_parser("quiver")
    p.add_argument("target")
    p.add_argument("--side", choices=["rest", "ind"], default="rest")
    p.add_argument("--format", choices=["dot", "json"], default="dot")
    p.set_defaults(func=cmd_quiver)

    p = sub.add_parser("series")
    p.add_argument("target")
    p.add_argument("--label", default="0")
    p.add_argument("--order", type=int, default=DEFAULT_ORDER)
    p.add_argument("--side", choices=["rest", "ind"], default="rest")
    p.add_argument("--method", choices=["det", "molien", "closed", "all"], default="det")
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("verify")
    p.add_argument("suite", choices=sorted(SUITES))
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("dump")
    p.add_argument("target")
    p.add_argument("--format", choices=["json"], default="json")
    p.set_defaults(func=cmd_dump)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except (UsageError, RelsymError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
