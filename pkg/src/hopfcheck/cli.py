"""Command line interface: run named verifications, list them, export models.

Every check is registered with the verdict it is expected to produce; two
are negative controls that must fail.  Exit code 0 means every executed
check matched its expected verdict, 1 means some check surprised us, 2 is a
usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from . import models
from .category_checks import modcat, ty
from .cyclotomic import Cyc, HALF, ONE
from .group_twist import twist_from_model_dict
from .hopf_core import commutativity_flags, hopf_to_dict, verify_hopf_axioms


@dataclass
class Context:
    model_path: str | None
    tau: Cyc


@dataclass
class CheckSpec:
    id: str
    anchor: str
    description: str
    expected: str
    runner: Callable[[Context], tuple[bool, str]]
    needs_model: bool = False


def _failing(d: dict[str, bool]) -> str:
    return ", ".join(k for k, v in d.items() if not v)


def _run_kp_axioms(ctx: Context) -> tuple[bool, str]:
    kp = models.build_kp()
    rep = kp.axiom_report
    if rep.passed:
        return True, "all Hopf *-algebra axioms hold on the direct model (dim 8)"
    return False, f"failing axioms: {_failing(rep.checks)}"


def _run_kp_one_dim(ctx: Context) -> tuple[bool, str]:
    ts = models.kp_tensor_square()
    keys = ("printed_group_like", "unit_is_first", "klein_squares",
            "klein_product", "matches_search")
    sub = {k: ts.checks[k] for k in keys}
    if all(sub.values()):
        return True, ("exactly four group-like unitaries, forming the Klein "
                      "group, matching the entered list")
    return False, f"failing: {_failing(sub)}"


def _run_kp_tensor_square(ctx: Context) -> tuple[bool, str]:
    ts = models.kp_tensor_square()
    if ts.passed:
        return True, ("entered projections are an orthogonal rank-one "
                      "resolution and the fundamental's square splits "
                      "through them into the four lines")
    return False, f"failing: {_failing(ts.checks)}"


def _run_kp_fusion_graph(ctx: Context) -> tuple[bool, str]:
    sc = models.star_shape_checks(models.kp_fusion_graph())
    if all(sc.values()):
        return True, ("fusion with the fundamental is the four-leaf star, "
                      "weights 2 inward and 1/2 outward")
    return False, f"failing: {_failing(sc)}"


def _run_vtilde_group(ctx: Context) -> tuple[bool, str]:
    vt = models.build_vtilde()
    if vt.passed:
        return True, ("order-8 unitary matrix group with central grading "
                      "and order-2 conjugation action verified")
    return False, f"failing: {_failing(vt.checks)}"


def _run_vtilde_fa(ctx: Context) -> tuple[bool, str]:
    vt = models.build_vtilde()
    rep = verify_hopf_axioms(vt.fa.hopf)
    comm, cocomm, _ = commutativity_flags(vt.fa.hopf)
    if rep.passed and comm and not cocomm:
        return True, ("function algebra is a commutative, noncocommutative "
                      "Hopf *-algebra of dimension 8")
    return False, (f"axioms: {_failing(rep.checks) or 'ok'}; "
                   f"commutative={comm}, cocommutative={cocomm}")


def _run_smash_axioms(ctx: Context) -> tuple[bool, str]:
    sm = models.build_smash()
    blocks = sm.hopf.algebra.block_sizes
    ok = sm.axiom_report.passed and sorted(blocks) == [1, 1, 1, 1, 2, 2, 2]
    if ok:
        return True, f"crossed product verified; blocks {blocks}"
    return False, (f"axioms: {_failing(sm.axiom_report.checks) or 'ok'}; "
                   f"blocks {blocks}")


def _run_twist_axioms(ctx: Context) -> tuple[bool, str]:
    tw = models.build_vtilde_twist()
    keys = ("coproduct_matches_table", "matches_coset_presentation",
            "even_part_commutative")
    sub = {k: tw.checks[k] for k in keys}
    if tw.axiom_report.passed and all(sub.values()):
        return True, ("twist verified on the dictionary basis; transported "
                      "coproduct reproduces the entered table exactly")
    return False, (f"axioms: {_failing(tw.axiom_report.checks) or 'ok'}; "
                   f"failing: {_failing(sub)}")


def _run_twist_noncomm(ctx: Context) -> tuple[bool, str]:
    tw = models.build_vtilde_twist()
    h = tw.handles
    zero = tw.hopf.algebra.zero()
    one_way = h["e11"] * h["e21"] == zero
    other_way = h["e21"] * h["e11"] == h["e21"]
    keys = ("noncommutative", "noncocommutative", "odd_coproduct_display")
    sub = {k: tw.checks[k] for k in keys}
    if all(sub.values()) and one_way and other_way:
        return True, ("e11 e21 == 0 while e21 e11 == e21; the coproduct "
                      "differs from its flip and matches the corrected "
                      "odd-part expansion")
    return False, f"failing: {_failing(sub)}; witness products " \
                  f"{one_way}/{other_way}"


def _run_twist_iso(ctx: Context) -> tuple[bool, str]:
    phi = models.build_phi_and_verify()
    if phi.passed:
        return True, ("base change is a Hopf *-isomorphism onto the direct "
                      "model and aligns the three coproduct conjugators")
    return False, (f"morphism: {_failing(phi.report.checks) or 'ok'}; "
                   f"unitaries: {_failing(phi.unitary_identities) or 'ok'}")


def _run_su2m1(ctx: Context) -> tuple[bool, str]:
    f = models.build_fundamental()
    if f.passed:
        return True, ("entries satisfy the q == -1 special unitary "
                      f"relations and generate: word ranks {f.word_ranks}")
    return False, (f"corep: {_failing(f.uprime_report.checks) or 'ok'}; "
                   f"relations: {_failing(f.relations) or 'ok'}; "
                   f"surjective={f.surjective}")


def _run_ty_bichar(ctx: Context) -> tuple[bool, str]:
    d = ty.bicharacter_checks()
    if all(d.values()):
        return True, "bicharacter is symmetric, bimultiplicative, nondegenerate"
    return False, f"failing: {_failing(d)}"


def _run_ty_pentagon(ctx: Context) -> tuple[bool, str]:
    rep = ty.pentagon_report(ctx.tau)
    uni, bad = ty.associator_unitarity(ctx.tau)
    if rep.holds and uni:
        return True, (f"pentagon holds over {rep.quadruples} quadruples at "
                      f"scale {ctx.tau}; all associators unitary")
    parts = []
    if not rep.holds:
        parts.append(f"pentagon fails first at {rep.failures[0]}")
    if not uni:
        parts.append(f"non-unitary associator at {bad}")
    return False, f"scale {ctx.tau}: " + "; ".join(parts)


def _run_ty_pentagon_negative(ctx: Context) -> tuple[bool, str]:
    wrong_scale = ty.pentagon_report(ONE)
    literal = ty.pentagon_report(HALF, literal_middle=True)
    if wrong_scale.holds and literal.holds:
        return True, "negative controls unexpectedly satisfied the pentagon"
    parts = []
    if not wrong_scale.holds:
        parts.append(f"scale 1 fails first at {wrong_scale.failures[0]}")
    if not literal.holds:
        parts.append("dropping the middle bicharacter twist fails first at "
                     f"{literal.failures[0]}")
    return False, "; ".join(parts)


def _run_ty_fusion_match(ctx: Context) -> tuple[bool, str]:
    m = ty.fusion_ring_match(models.kp_fusion_rules())
    if m["matches"] and m["bijections"] == 6:
        return True, ("fusion rules match; all 6 relabelings of the "
                      "nontrivial invertibles work")
    return False, f"bijections={m['bijections']}; facts: {_failing(m['facts'])}"


def _run_modcat_unitarity(ctx: Context) -> tuple[bool, str]:
    rep = modcat.module_report("verbatim")
    if rep.unitary:
        return True, "printed 4x4 matrix is unexpectedly unitary"
    rows_equal = modcat.PSI_RHO_PRINTED[0] == modcat.PSI_RHO_PRINTED[3]
    extra = "; first and last rows coincide" if rows_equal else ""
    return False, f"printed 4x4 matrix is not unitary{extra}"


def _run_modcat_diagrams(ctx: Context) -> tuple[bool, str]:
    rep = modcat.module_report("repaired")
    if rep.passed:
        return True, ("repaired matrix is unitary and satisfies every hook "
                      "equation and the group equation")
    return False, (f"unitary={rep.unitary}; hooks failing: "
                   f"{_failing(rep.hooks) or 'none'}; group={rep.group_part}")


def _run_modcat_repair(ctx: Context) -> tuple[bool, str]:
    dist = modcat.repair_distance()
    search = modcat.column_phase_search()
    family = modcat.global_phase_family()
    ok = (dist == 5 and search["solutions"] == 0
          and family["passing"] == family["assignments"])
    if ok:
        return True, (f"forced repair changes {dist} entries; the "
                      f"{search['space']} phase-only adjustments admit no "
                      f"solution; all {family['assignments']} gauge choices "
                      "of the repair pass")
    return False, (f"distance={dist}, phase solutions={search['solutions']}, "
                   f"gauge passing={family['passing']}")


def _run_model_twist(ctx: Context) -> tuple[bool, str]:
    with open(ctx.model_path, encoding="utf-8") as fh:
        data = json.load(fh)
    tw = twist_from_model_dict(data)
    rep = verify_hopf_axioms(tw.hopf)
    if rep.passed:
        return True, (f"user model verified; twist blocks "
                      f"{tw.hopf.algebra.block_sizes}")
    return False, f"failing axioms: {_failing(rep.checks)}"


REGISTRY: list[CheckSpec] = [
    CheckSpec("kp.axioms", "direct-model-hopf-axioms",
              "Hopf *-algebra axioms of the direct eight-dimensional model",
              "pass", _run_kp_axioms),
    CheckSpec("kp.one-dim", "group-like-lines",
              "group of one-dimensional corepresentations is the Klein group",
              "pass", _run_kp_one_dim),
    CheckSpec("kp.tensor-square", "fundamental-square-projections",
              "tensor square of the fundamental splits through the entered "
              "projections", "pass", _run_kp_tensor_square),
    CheckSpec("kp.fusion-graph", "fusion-star",
              "fusion with the fundamental is the four-leaf star graph",
              "pass", _run_kp_fusion_graph),
    CheckSpec("vtilde.group", "matrix-group-order-8",
              "the order-8 matrix group, its grading and its action",
              "pass", _run_vtilde_group),
    CheckSpec("vtilde.function-algebra", "function-algebra-axioms",
              "function algebra of the group is a Hopf *-algebra",
              "pass", _run_vtilde_fa),
    CheckSpec("smash.axioms", "crossed-product-axioms",
              "crossed product by the order-2 action is a Hopf *-algebra",
              "pass", _run_smash_axioms),
    CheckSpec("twist.axioms", "twist-axioms",
              "graded twist on the dictionary basis matches its entered "
              "coproduct table", "pass", _run_twist_axioms),
    CheckSpec("twist.noncommutative", "twist-noncommutativity",
              "twist is neither commutative nor cocommutative, with witnesses",
              "pass", _run_twist_noncomm),
    CheckSpec("twist.iso-phi", "base-change-isomorphism",
              "explicit isomorphism from the twist onto the direct model",
              "pass", _run_twist_iso),
    CheckSpec("su2m1.quotient", "minus-one-special-unitary-relations",
              "fundamental entries satisfy the q == -1 relations and generate",
              "pass", _run_su2m1),
    CheckSpec("ty.bicharacter", "bicharacter",
              "bicharacter on the Klein group is symmetric and nondegenerate",
              "pass", _run_ty_bichar),
    CheckSpec("ty.pentagon", "pentagon",
              "pentagon identity over all quadruples of simples",
              "pass", _run_ty_pentagon),
    CheckSpec("ty.pentagon-negative", "pentagon-negative-control",
              "negative controls: wrong scale and dropped middle twist",
              "fail", _run_ty_pentagon_negative),
    CheckSpec("ty.fusion-match", "fusion-ring-match",
              "fusion rules of the direct model match the category's ring",
              "pass", _run_ty_fusion_match),
    CheckSpec("modcat.unitarity", "printed-action-matrix",
              "negative control: the printed 4x4 action matrix is not unitary",
              "fail", _run_modcat_unitarity),
    CheckSpec("modcat.diagrams", "module-consistency",
              "repaired action matrix satisfies hook and group equations",
              "pass", _run_modcat_diagrams),
    CheckSpec("modcat.repair", "module-repair",
              "repair is forced: five entries, no phase-only alternative",
              "pass", _run_modcat_repair),
    CheckSpec("model.twist-axioms", "user-model-twist",
              "graded twist built from a user model file (requires --model)",
              "pass", _run_model_twist, needs_model=True),
]

_BY_ID = {spec.id: spec for spec in REGISTRY}

_EXPORTS: dict[str, Callable[[], object]] = {
    "kp": lambda: models.build_kp().hopf,
    "vtilde": lambda: models.build_vtilde().fa.hopf,
    "vtilde-twist": lambda: models.build_vtilde_twist().hopf,
    "smash": lambda: models.build_smash().hopf,
}


def _execute(spec: CheckSpec, ctx: Context) -> dict:
    if spec.needs_model and ctx.model_path is None:
        return {"id": spec.id, "verdict": "skip", "expected": spec.expected,
                "elapsed_ms": 0, "anchor": spec.anchor,
                "witness": "requires --model with a model description file"}
    start = time.perf_counter()
    try:
        passed, witness = spec.runner(ctx)
        verdict = "pass" if passed else "fail"
    except Exception as exc:
        verdict = "fail"
        witness = f"exception: {exc}"
    elapsed = int((time.perf_counter() - start) * 1000)
    return {"id": spec.id, "verdict": verdict, "expected": spec.expected,
            "elapsed_ms": elapsed, "anchor": spec.anchor, "witness": witness}


def _matched(result: dict) -> bool:
    return result["verdict"] == "skip" or result["verdict"] == result["expected"]


def _format_line(r: dict) -> str:
    tag = r["verdict"].upper()
    if r["verdict"] == "skip":
        note = ""
    elif r["verdict"] == r["expected"]:
        note = " (as designed)" if r["verdict"] == "fail" else ""
    else:
        note = " (UNEXPECTED)"
    return (f"{r['id']:<24} {tag + note:<22} {r['elapsed_ms']:>6} ms  "
            f"{r['witness']}")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hopfcheck",
        description="exact verification of the eight-dimensional Hopf "
                    "*-algebra models and their categorical data")
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run one check or all of them")
    group = verify.add_mutually_exclusive_group(required=True)
    group.add_argument("--check", metavar="ID", help="run a single check")
    group.add_argument("--all", action="store_true", help="run every check")
    verify.add_argument("--json", action="store_true",
                        help="emit reports as JSON")
    verify.add_argument("--model", metavar="PATH",
                        help="JSON model description for model.twist-axioms")
    verify.add_argument("--tau", metavar="P/Q",
                        help="scale for ty.pentagon (default 1/2; write "
                             "--tau=-1/2 for negative values)")

    lst = sub.add_parser("list", help="list registered checks")
    lst.add_argument("filter", nargs="?", default="",
                     help="substring filter on check ids")

    exp = sub.add_parser("export", help="write a model as JSON")
    exp.add_argument("model_id", choices=sorted(_EXPORTS))
    exp.add_argument("path")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0

    if args.command == "list":
        shown = [s for s in REGISTRY if args.filter in s.id]
        for spec in shown:
            print(f"{spec.id:<24} expected {spec.expected:<5} "
                  f"{spec.description}")
        if not shown:
            print(f"no checks match {args.filter!r}", file=sys.stderr)
            return 2
        return 0

    if args.command == "export":
        data = hopf_to_dict(_EXPORTS[args.model_id]())
        text = json.dumps(data, indent=2, sort_keys=True) + "\n"
        with open(args.path, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(f"wrote {args.model_id} to {args.path}")
        return 0

    # verify
    tau = HALF
    if args.tau is not None:
        try:
            tau = Cyc.from_rational(Fraction(args.tau))
        except (ValueError, ZeroDivisionError):
            print(f"--tau expects a rational like 1/2, got {args.tau!r}",
                  file=sys.stderr)
            return 2
    ctx = Context(model_path=args.model, tau=tau)

    if args.check is not None:
        spec = _BY_ID.get(args.check)
        if spec is None:
            print(f"unknown check {args.check!r}; see 'hopfcheck list'",
                  file=sys.stderr)
            return 2
        if spec.needs_model and ctx.model_path is None:
            print(f"{spec.id} requires --model PATH", file=sys.stderr)
            return 2
        result = _execute(spec, ctx)
        if args.json:
            print(json.dumps(result, indent=2))
        else:
            print(_format_line(result))
        return 0 if _matched(result) else 1

    results = [_execute(spec, ctx) for spec in REGISTRY]
    if args.json:
        print(json.dumps(results, indent=2))
    else:
        for r in results:
            print(_format_line(r))
        matched = sum(_matched(r) for r in results)
        skipped = sum(r["verdict"] == "skip" for r in results)
        print(f"\n{matched}/{len(results)} checks matched their expected "
              f"verdict ({skipped} skipped)")
    return 0 if all(_matched(r) for r in results) else 1


if __name__ == "__main__":
    sys.exit(main())
