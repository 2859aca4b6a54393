"""Command-line interface.

Exit codes: 0 = holds / sound / closed / success, 1 = fails / open / witness /
unknown, 2 = usage or I/O error.  ``--json`` switches any report to its
structured document form.
"""

from __future__ import annotations

import argparse
import json
import sys

from .algebra import (
    AlgebraError,
    BUILTIN_ALGEBRAS,
    FiniteAlgebra,
    check_axiom_class,
    check_equation,
    derive_nabla,
    derive_perfection,
    expand_with_nabla,
    expand_with_perfection,
    load_algebra,
    parse_equation,
    reduct,
    translate_to_is,
    translate_to_pp,
)
from .calculus import (
    CalculusError,
    countermodel_from_open,
    lift,
    load_calculus,
    prove_analytic,
    render_tree,
    rule_soundness,
    sfmla_prove,
    tree_to_doc,
)
from .matrices import (
    MatrixError,
    check_logic_properties,
    check_monadicity,
    dat_check,
    expand_matrix,
    lattice_filters,
    leibniz_congruence,
    load_matrix,
    reduce_matrix,
    sset_consequence,
)
from .syntax import (
    CIRC,
    SIG_IS,
    SIG_PP,
    SIGNATURES,
    FormulaError,
    Signature,
    parse_formula,
    parse_formula_set,
    render_formula,
)

_FULL_SIGNATURE = SIG_IS.extended({CIRC: 1}, "full")


def _emit(args, text_lines, doc) -> None:
    if args.json:
        print(json.dumps(doc, indent=2))
    else:
        for line in text_lines:
            print(line)


def _calculus_signature(calculus) -> Signature:
    from .syntax import connectives_of

    used: set[str] = set()
    for rule in calculus.rules:
        for phi in rule.antecedent + rule.succedent:
            used |= set(connectives_of(phi))
    for sig in (SIGNATURES["DM"], SIG_IS, SIG_PP):
        if all(c in sig for c in used):
            return sig
    return _FULL_SIGNATURE


def _algebra_text(algebra: FiniteAlgebra) -> list[str]:
    lines = [
        f"algebra {algebra.name or '(unnamed)'}",
        f"elements: {' '.join(algebra.elements)}",
    ]
    width = max(len(e) for e in algebra.elements) + 1
    for conn in sorted(algebra.signature.connectives):
        arity = algebra.signature.arity(conn)
        if arity == 0:
            lines.append(f"{conn} = {algebra.elements[algebra.op(conn)]}")
        elif arity == 1:
            row = " ".join(
                algebra.elements[algebra.op(conn, i)].ljust(width)
                for i in range(len(algebra))
            )
            lines.append(f"{conn}: {row}")
        elif arity == 2:
            lines.append(f"table {conn}:")
            header = " ".join(e.ljust(width) for e in algebra.elements)
            lines.append("  " + " " * width + header)
            for i, e in enumerate(algebra.elements):
                row = " ".join(
                    algebra.elements[algebra.op(conn, i, j)].ljust(width)
                    for j in range(len(algebra))
                )
                lines.append(f"  {e.ljust(width)}{row}")
        else:
            lines.append(f"table {conn}: (arity {arity}, not rendered)")
    return lines


# ---------------------------------------------------------------------------
# algebra subcommands

def _cmd_algebra_list(args) -> int:
    names = sorted(BUILTIN_ALGEBRAS)
    _emit(args, names, {"algebras": names})
    return 0


def _cmd_algebra_show(args) -> int:
    algebra = load_algebra(args.algebra)
    _emit(args, _algebra_text(algebra), algebra.to_doc())
    return 0


def _cmd_algebra_check_eq(args) -> int:
    algebra = load_algebra(args.algebra)
    eq = parse_equation(args.equation, algebra.signature)
    result = check_equation(algebra, eq)
    if result.holds:
        _emit(args, ["HOLDS"], {"verdict": "HOLDS", "equation": str(eq)})
        return 0
    witness = ", ".join(f"{v}={e}" for v, e in sorted(result.witness.items()))
    _emit(
        args,
        [f"FAILS  witness: {witness}"],
        {"verdict": "FAILS", "equation": str(eq), "witness": result.witness},
    )
    return 1


def _cmd_algebra_check_class(args) -> int:
    algebra = load_algebra(args.algebra)
    report = check_axiom_class(algebra, args.axiom_class)
    if report.holds:
        _emit(args, ["HOLDS"], {"verdict": "HOLDS", "class": args.axiom_class})
        return 0
    lines = ["FAILS"]
    failures = []
    for name, eq, witness in report.failures:
        shown = ", ".join(f"{v}={e}" for v, e in sorted(witness.items()))
        lines.append(f"  {name}: {eq}  witness: {shown}")
        failures.append({"axiom": name, "equation": str(eq), "witness": witness})
    _emit(args, lines, {"verdict": "FAILS", "class": args.axiom_class, "failures": failures})
    return 1


def _emit_algebra_doc(args, algebra: FiniteAlgebra) -> int:
    text = json.dumps(algebra.to_doc(), indent=2)
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text + "\n")
        print(f"wrote {args.out}")
    else:
        print(text)
    return 0


def _cmd_algebra_expand(args) -> int:
    algebra = load_algebra(args.algebra)
    expanded = (
        expand_with_perfection(algebra) if args.mode == "pp" else expand_with_nabla(algebra)
    )
    return _emit_algebra_doc(args, expanded)


def _cmd_algebra_derive(args) -> int:
    algebra = load_algebra(args.algebra)
    derived = derive_perfection(algebra) if args.mode == "pp" else derive_nabla(algebra)
    return _emit_algebra_doc(args, derived)


def _cmd_algebra_reduct(args) -> int:
    algebra = load_algebra(args.algebra)
    return _emit_algebra_doc(args, reduct(algebra, SIGNATURES[args.sig]))


def _cmd_algebra_translate(args) -> int:
    if args.to == "is":
        phi = parse_formula(args.formula, SIG_PP)
        out = translate_to_is(phi)
    else:
        phi = parse_formula(args.formula, SIG_IS)
        out = translate_to_pp(phi)
    _emit(args, [render_formula(out)], {"formula": render_formula(out)})
    return 0


# ---------------------------------------------------------------------------
# matrix subcommands

def _consequence_doc(result, premises, conclusions) -> dict:
    doc = {
        "verdict": "HOLDS" if result.holds else "FAILS",
        "premises": [render_formula(f) for f in premises],
        "conclusions": [render_formula(f) for f in conclusions],
    }
    if result.countermodel is not None:
        cm = result.countermodel
        doc["countermodel"] = {
            "matrix": cm.matrix.name,
            "assignment": dict(sorted(cm.assignment.items())),
            "values": {
                render_formula(f): {
                    "value": cm.value(f),
                    "designated": cm.matrix.designates(cm.value(f)),
                }
                for f in list(premises) + list(conclusions)
            },
        }
    return doc


def _cmd_matrix_consequence(args) -> int:
    matrices = [load_matrix(spec) for spec in args.matrices]
    sig = matrices[0].algebra.signature
    premises = parse_formula_set(args.prem, sig)
    conclusions = parse_formula_set(args.conc, sig)
    result = sset_consequence(matrices, premises, conclusions)
    if result.holds:
        _emit(args, ["HOLDS"], _consequence_doc(result, premises, conclusions))
        return 0
    lines = ["FAILS", result.countermodel.describe(premises, conclusions)]
    _emit(args, lines, _consequence_doc(result, premises, conclusions))
    return 1


def _cmd_matrix_filters(args) -> int:
    algebra = load_algebra(args.algebra)
    filters = lattice_filters(algebra, prime_only=args.prime)
    lines = [f"{len(filters)} filter(s):"] + ["  {" + ", ".join(f) + "}" for f in filters]
    _emit(args, lines, {"filters": [list(f) for f in filters]})
    return 0


def _cmd_matrix_leibniz(args) -> int:
    matrix = load_matrix(args.matrix)
    partition = leibniz_congruence(matrix)
    lines = ["Leibniz congruence blocks:"] + [
        "  {" + ", ".join(block) + "}" for block in partition.blocks
    ]
    lines.append("identity partition" if partition.is_identity else "non-trivial partition")
    _emit(
        args,
        lines,
        {"blocks": [list(b) for b in partition.blocks], "identity": partition.is_identity},
    )
    return 0


def _cmd_matrix_reduce(args) -> int:
    matrix = load_matrix(args.matrix)
    reduced = reduce_matrix(matrix)
    doc = reduced.to_doc(inline=True)
    _emit(args, [json.dumps(doc, indent=2)], doc)
    return 0


def _cmd_matrix_expand(args) -> int:
    matrix = load_matrix(args.matrix)
    expanded = expand_matrix(matrix)
    doc = expanded.to_doc(inline=True)
    _emit(args, [json.dumps(doc, indent=2)], doc)
    return 0


def _cmd_matrix_props(args) -> int:
    matrix = load_matrix(args.matrix)
    props = check_logic_properties(matrix)

    def show(value) -> str:
        return "unavailable" if value is None else str(value).lower()

    lines = [
        f"paraconsistent:   {show(props.paraconsistent)}",
        f"paracomplete:     {show(props.paracomplete)}",
        f"paradefinite:     {show(props.paradefinite)}",
        f"gently explosive: {show(props.gently_explosive)}",
        f"gently implosive: {show(props.gently_implosive)}",
        f"LFI:              {show(props.lfi)}",
        f"LFU:              {show(props.lfu)}",
    ]
    doc = {
        "paraconsistent": props.paraconsistent,
        "paracomplete": props.paracomplete,
        "paradefinite": props.paradefinite,
        "gently_explosive": props.gently_explosive,
        "gently_implosive": props.gently_implosive,
        "lfi": props.lfi,
        "lfu": props.lfu,
    }
    _emit(args, lines, doc)
    return 0


def _cmd_matrix_monadic(args) -> int:
    matrix = load_matrix(args.matrix)
    separators = parse_formula_set(args.separators, matrix.algebra.signature)
    result = check_monadicity(matrix, separators)
    if result.holds:
        _emit(args, ["HOLDS"], {"verdict": "HOLDS"})
        return 0
    pair = result.undiscriminated
    _emit(
        args,
        [f"FAILS  undiscriminated pair: {pair[0]}, {pair[1]}"],
        {"verdict": "FAILS", "undiscriminated": list(pair)},
    )
    return 1


def _cmd_matrix_dat(args) -> int:
    matrix = load_matrix(args.matrix) if args.matrix else None
    sig = SIGNATURES["DM"]
    premises = parse_formula_set(args.prem, sig)
    conclusions = parse_formula_set(args.conc, sig)
    report = dat_check(premises, conclusions, matrix)
    verdicts = (
        "HOLDS" if report.classical.holds else "FAILS",
        "HOLDS" if report.enriched.holds else "FAILS",
    )
    head = "AGREE" if report.agree else "DISAGREE"
    lines = [
        f"{head} (classical {verdicts[0]}, enriched {verdicts[1]})",
        "perfection premises: "
        + ", ".join(render_formula(f) for f in report.perfection_premises),
    ]
    doc = {
        "agree": report.agree,
        "classical": verdicts[0],
        "enriched": verdicts[1],
        "perfection_premises": [render_formula(f) for f in report.perfection_premises],
    }
    _emit(args, lines, doc)
    return 0 if report.agree else 1


# ---------------------------------------------------------------------------
# calculus subcommands

def _cmd_calculus_show(args) -> int:
    calculus = load_calculus(args.calculus)
    lines = [f"calculus {calculus.name} ({len(calculus.rules)} rules)"]
    lines += [f"  {rule}" for rule in calculus.rules]
    if calculus.analytic_over:
        lines.append(
            "analytic over: "
            + ", ".join(render_formula(f) for f in calculus.analytic_over)
        )
    _emit(args, lines, calculus.to_doc())
    return 0


_DEFAULT_PROVE_MATRIX = {
    "RB": "DM4:up_b",
    "Rcirc": "PP6:up_b",
    "RB+Rcirc": "PP6:up_b",
}


def _cmd_calculus_prove(args) -> int:
    calculus = load_calculus(args.calculus)
    sig = _calculus_signature(calculus)
    premises = parse_formula_set(args.prem, sig)
    conclusions = parse_formula_set(args.conc, sig)
    xi = parse_formula_set(args.xi, sig) if args.xi is not None else list(calculus.analytic_over)
    result = prove_analytic(calculus, xi, premises, conclusions)
    doc = tree_to_doc(result)
    if result.closed:
        _emit(args, ["CLOSED", render_tree(result)], doc)
        return 0
    lines = ["OPEN", render_tree(result)]
    matrix_spec = args.matrix or _DEFAULT_PROVE_MATRIX.get(args.calculus)
    if matrix_spec:
        matrix = load_matrix(matrix_spec)
        countermodel = countermodel_from_open(result, matrix)
        if countermodel is None:
            lines.append(f"no countermodel over {matrix.name}")
            doc["countermodel"] = None
        else:
            lines.append(countermodel.describe(premises, conclusions))
            doc["countermodel"] = {
                "matrix": matrix.name,
                "assignment": dict(sorted(countermodel.assignment.items())),
            }
    _emit(args, lines, doc)
    return 1


def _cmd_calculus_soundness(args) -> int:
    calculus = load_calculus(args.calculus)
    matrix = load_matrix(args.matrix)
    lines = []
    rules = []
    all_sound = True
    for rule, result in (
        (rule, rule_soundness(rule, matrix)) for rule in calculus.rules
    ):
        if result.holds:
            lines.append(f"  {rule.name}: Sound")
            rules.append({"rule": rule.name, "sound": True})
        else:
            all_sound = False
            assignment = ", ".join(
                f"{v}={e}" for v, e in sorted(result.countermodel.assignment.items())
            )
            lines.append(f"  {rule.name}: NOT sound  countermodel: {assignment}")
            rules.append(
                {
                    "rule": rule.name,
                    "sound": False,
                    "countermodel": result.countermodel.assignment,
                }
            )
    head = (
        f"{len(calculus.rules)}/{len(calculus.rules)} rules sound on {matrix.name}"
        if all_sound
        else f"unsound rules found on {matrix.name}"
    )
    _emit(args, [head] + lines, {"matrix": matrix.name, "all_sound": all_sound, "rules": rules})
    return 0 if all_sound else 1


def _cmd_calculus_lift(args) -> int:
    calculus = load_calculus(args.calculus)
    lifted = lift(calculus)
    text = json.dumps(lifted.to_doc(), indent=2)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(text + "\n")
        print(f"wrote {args.out}")
    else:
        print(text)
    return 0


def _cmd_calculus_sfmla_prove(args) -> int:
    calculus = load_calculus(args.calculus)
    sig = _calculus_signature(calculus)
    premises = parse_formula_set(args.prem, sig)
    goal = parse_formula(args.conc, sig)
    result = sfmla_prove(calculus, premises, goal, depth_bound=args.depth)
    if not result.proved:
        _emit(args, ["UNKNOWN (bound exhausted)"], {"verdict": "UNKNOWN"})
        return 1
    lines = ["PROVED"]
    steps = []
    for step in result.steps:
        sigma = ", ".join(f"{v}:={render_formula(f)}" for v, f in step.substitution)
        used = f" from {list(step.premises)}" if step.premises else ""
        lines.append(f"  {step.index}. {render_formula(step.formula)}   [{step.rule}" +
                     (f" {sigma}" if sigma else "") + f"]{used}")
        steps.append(
            {
                "index": step.index,
                "formula": render_formula(step.formula),
                "rule": step.rule,
                "substitution": {v: render_formula(f) for v, f in step.substitution},
                "premises": list(step.premises),
            }
        )
    _emit(args, lines, {"verdict": "PROVED", "steps": steps})
    return 0


# ---------------------------------------------------------------------------
# Parser

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ppalg",
        description="De Morgan algebras with a perfection operator: "
        "finite matrices, consequence, and analytic proof search.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    def add(sub, name, handler, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.add_argument("--json", action="store_true", help="structured output")
        p.set_defaults(handler=handler)
        return p

    algebra = parser_algebra = subparsers.add_parser("algebra", help="algebra operations")
    algebra_sub = parser_algebra.add_subparsers(dest="subcommand", required=True)
    add(algebra_sub, "list", _cmd_algebra_list, help="list built-in algebras")
    p = add(algebra_sub, "show", _cmd_algebra_show, help="print tables")
    p.add_argument("algebra")
    p = add(algebra_sub, "check-eq", _cmd_algebra_check_eq, help="check one equation")
    p.add_argument("algebra")
    p.add_argument("equation", help='e.g. "x | ~x = 1"')
    p = add(algebra_sub, "check-class", _cmd_algebra_check_class, help="check DM/IS/PP axioms")
    p.add_argument("algebra")
    p.add_argument("axiom_class", choices=["DM", "IS", "PP"])
    p = add(algebra_sub, "expand-pp", _cmd_algebra_expand, help="perfection expansion A°")
    p.add_argument("algebra")
    p.add_argument("--out")
    p.set_defaults(mode="pp")
    p = add(algebra_sub, "expand-is", _cmd_algebra_expand, help="nabla expansion")
    p.add_argument("algebra")
    p.add_argument("--out")
    p.set_defaults(mode="is")
    p = add(algebra_sub, "derive-pp", _cmd_algebra_derive, help="perfection from an IS-algebra")
    p.add_argument("algebra")
    p.add_argument("--out")
    p.set_defaults(mode="pp")
    p = add(algebra_sub, "derive-is", _cmd_algebra_derive, help="nabla from a PP-algebra")
    p.add_argument("algebra")
    p.add_argument("--out")
    p.set_defaults(mode="is")
    p = add(algebra_sub, "reduct", _cmd_algebra_reduct, help="signature reduct")
    p.add_argument("algebra")
    p.add_argument("--sig", choices=sorted(SIGNATURES), required=True)
    p.add_argument("--out")
    p = add(algebra_sub, "translate", _cmd_algebra_translate, help="IS <-> PP translation")
    p.add_argument("--to", choices=["is", "pp"], required=True)
    p.add_argument("formula")

    matrix = subparsers.add_parser("matrix", help="matrix operations")
    matrix_sub = matrix.add_subparsers(dest="subcommand", required=True)
    p = add(matrix_sub, "consequence", _cmd_matrix_consequence, help="Set-Set consequence")
    p.add_argument("matrices", nargs="+", help="NAME:up_X, NAME:only_X, or a file")
    p.add_argument("--prem", default="", help="comma-separated premises")
    p.add_argument("--conc", default="", help="comma-separated conclusions")
    p = add(matrix_sub, "filters", _cmd_matrix_filters, help="lattice filters")
    p.add_argument("algebra")
    p.add_argument("--prime", action="store_true")
    p = add(matrix_sub, "leibniz", _cmd_matrix_leibniz, help="Leibniz congruence")
    p.add_argument("matrix")
    p = add(matrix_sub, "reduce", _cmd_matrix_reduce, help="reduced matrix")
    p.add_argument("matrix")
    p = add(matrix_sub, "expand", _cmd_matrix_expand, help="perfection expansion M°")
    p.add_argument("matrix")
    p = add(matrix_sub, "props", _cmd_matrix_props, help="logic properties")
    p.add_argument("matrix")
    p = add(matrix_sub, "monadic", _cmd_matrix_monadic, help="separator expressiveness")
    p.add_argument("matrix")
    p.add_argument("--separators", required=True)
    p = add(matrix_sub, "dat", _cmd_matrix_dat, help="classical-recovery check")
    p.add_argument("--prem", default="")
    p.add_argument("--conc", default="")
    p.add_argument("--matrix", help="PP-matrix (default PP6:up_b)")

    calculus = subparsers.add_parser("calculus", help="calculus operations")
    calculus_sub = calculus.add_subparsers(dest="subcommand", required=True)
    p = add(calculus_sub, "show", _cmd_calculus_show, help="print rules")
    p.add_argument("calculus")
    p = add(calculus_sub, "prove", _cmd_calculus_prove, help="analytic proof search")
    p.add_argument("calculus")
    p.add_argument("--prem", default="")
    p.add_argument("--conc", default="")
    p.add_argument("--xi", help="override the analyticity certificate")
    p.add_argument("--matrix", help="matrix for countermodel extraction")
    p = add(calculus_sub, "soundness", _cmd_calculus_soundness, help="per-rule soundness")
    p.add_argument("calculus")
    p.add_argument("matrix")
    p = add(calculus_sub, "lift", _cmd_calculus_lift, help="Set-Fmla disjunction lifting")
    p.add_argument("calculus")
    p.add_argument("--out")
    p = add(calculus_sub, "sfmla-prove", _cmd_calculus_sfmla_prove, help="bounded forward chaining")
    p.add_argument("calculus")
    p.add_argument("--prem", default="")
    p.add_argument("--conc", required=True)
    p.add_argument("--depth", type=int)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except (FormulaError, AlgebraError, MatrixError, CalculusError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
