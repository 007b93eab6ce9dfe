"""Command-line front end.

Exit status: 0 when the computation or verification succeeds, 1 when a
counterexample is found (the witness is printed in replayable form), 2 for
usage or input errors.
"""
from __future__ import annotations

import argparse
import json
import random
import shlex
import sys
from pathlib import Path
from typing import Optional

from . import catalog
from .core import DEFAULT_SEED, certify_structure, interchange_sides, hom_exists, product_pairs
from .diagrams import parse_diagram, render_ascii
from .freecat import failing_pair, parse as parse_expr, to_text
from .operads import (
    Collection,
    canonical_construction_check,
    closed_form_nat,
    closed_form_single_box,
    fibrewise_product,
    gamma_exists,
    gamma_source,
    generate_minimal,
    generate_minimal_nat,
    read_collection,
    tensor_operads,
    verify_algebra,
    verify_operad,
    write_collection,
)
from .registry import CERTIFIED, NAMES, get_structure

EXIT_OK, EXIT_COUNTEREXAMPLE, EXIT_USAGE = 0, 1, 2


class Report:
    """Collects output lines and the JSON payload; printed once at the end."""

    def __init__(self, command: str, seed: Optional[int] = None):
        self.command = command
        self.seed = seed
        self.lines: list[str] = []
        self.witnesses: list[str] = []
        self.verdict = "ok"
        self.data: dict = {}

    def fail(self, witness: str) -> None:
        self.verdict = "counterexample"
        self.witnesses.append(witness)

    def emit(self, as_json: bool, out=None) -> int:
        out = out or sys.stdout
        if as_json:
            payload = {"command": self.command, "verdict": self.verdict, "witnesses": self.witnesses,
                       "seed": self.seed}
            payload.update(self.data)
            out.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
        else:
            for line in self.lines:
                out.write(line + "\n")
        return EXIT_OK if self.verdict == "ok" else EXIT_COUNTEREXAMPLE


def _pair(text: str) -> tuple[int, int]:
    try:
        p, q = (int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected 'p,q', got {text!r}") from None
    return p, q


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _q(text: str) -> str:
    return shlex.quote(text)


# --- commands ------------------------------------------------------------------

def cmd_describe(args) -> Report:
    r = Report("describe")
    names = [args.structure] if getattr(args, "structure", None) else list(CERTIFIED)
    for name in names:
        r.lines.append(get_structure(name).describe())
    r.data["structures"] = names
    return r


def cmd_product(args) -> Report:
    s = get_structure(args.structure)
    a, b = s.parse_obj(args.a), s.parse_obj(args.b)
    out = s.format_obj(s.product(args.op, a, b))
    r = Report("product")
    r.lines.append(out)
    r.data["result"] = out
    return r


def cmd_compare(args) -> Report:
    s = get_structure(args.structure)
    c = s.cmp(s.parse_obj(args.a), s.parse_obj(args.b))
    word = {-1: "LT", 0: "EQ", 1: "GT"}[c]
    r = Report("compare")
    r.lines.append(word)
    r.data["ordering"] = word
    return r


def _interchange_line(s, i, j, objs) -> str:
    return (f"interchange --structure {s.name} --i {i} --j {j} "
            + " ".join(_q(s.format_obj(x)) for x in objs))


def cmd_interchange(args) -> Report:
    s = get_structure(args.structure)
    r = Report("interchange", seed=args.seed)
    pairs = [(args.i, args.j)] if args.i is not None else product_pairs(s.dims)
    if args.objects:
        if len(args.objects) != 4:
            raise ValueError("interchange takes exactly four objects A B C D")
        if args.i is None:
            raise ValueError("--i and --j are required with explicit objects")
        objs = [s.parse_obj(x) for x in args.objects]
        lhs, rhs = interchange_sides(s, args.i, args.j, *objs)
        ok = hom_exists(s, lhs, rhs)
        r.lines.append(f"source {s.format_obj(lhs)}")
        r.lines.append(f"target {s.format_obj(rhs)}")
        r.lines.append("holds" if ok else "VIOLATED")
        r.data.update(source=s.format_obj(lhs), target=s.format_obj(rhs), holds=ok)
        if not ok:
            r.fail(_interchange_line(s, args.i, args.j, objs))
        return r
    rng = random.Random(args.seed)
    counts = {}
    for i, j in pairs:
        violations = 0
        for _ in range(args.trials):
            objs = [s.sample(rng) for _ in range(4)]
            lhs, rhs = interchange_sides(s, i, j, *objs)
            if not hom_exists(s, lhs, rhs):
                violations += 1
                if violations == 1:
                    r.fail(_interchange_line(s, i, j, objs))
        counts[f"{i},{j}"] = violations
        r.lines.append(f"({i},{j}): {args.trials} quadruples, {violations} violations")
    r.lines.extend("witness: " + w for w in r.witnesses)
    r.data["violations"] = counts
    return r


def cmd_certify(args) -> Report:
    names = list(CERTIFIED) if args.structure == "all" else [args.structure]
    r = Report("certify", seed=args.seed)
    r.data["structures"] = {}
    for name in names:
        s = get_structure(name)
        rep = certify_structure(s, trials=args.trials, seed=args.seed, exhaustive_bound=args.exhaustive)
        r.lines.extend(rep.lines(s))
        r.data["structures"][name] = {k: {"passed": t.passed, "failed": t.failed} for k, t in rep.tallies.items()}
        cx = rep.counterexample
        if cx is not None:
            r.fail(f"{name}: " + cx.render(s))
            if cx.check == "interchange":
                r.lines.append("  replay: nfold " + _interchange_line(s, *cx.indices, cx.objects))
    return r


def cmd_free_hom(args) -> Report:
    a, b = parse_expr(args.source, args.n), parse_expr(args.target, args.n)
    bad = failing_pair(a, b, args.strict_rule)
    r = Report("free-hom")
    r.data["hom_count"] = int(bad is None)
    r.lines.append(f"{to_text(a)} -> {to_text(b)}: {int(bad is None)}")
    if bad is not None:
        x, y, i, j = bad
        r.lines.append(f"blocking pair: {x} *{i} {y} in source, joined by *{j} in target")
        r.fail(f"free-hom --n {args.n} {_q(to_text(a))} {_q(to_text(b))}"
               + (" --strict-rule" if args.strict_rule else ""))
    return r


def cmd_gen_nat(args) -> Report:
    terms = generate_minimal_nat(args.starts, args.terms)
    r = Report("gen-nat")
    r.lines.append(" ".join(map(str, terms)))
    r.data["terms"] = terms
    if args.closed_form:
        closed = [closed_form_nat(args.starts, n) for n in range(1, args.terms + 1)]
        r.lines.append("closed form: " + " ".join(map(str, closed)))
        r.data["closed_form"] = closed
        for n, (x, y) in enumerate(zip(terms, closed), 1):
            if x != y:
                r.fail(f"n={n}: generated {x}, closed form {y}")
                break
        r.lines.append("closed form agrees" if r.verdict == "ok" else "closed form DISAGREES: " + r.witnesses[0])
    return r


def cmd_gen_diagram(args) -> Report:
    s = get_structure(args.structure)
    B = s.parse_obj(args.seed_diagram)
    p, q = args.pairs
    terms = generate_minimal(s, p, q, [s.unit, B], args.terms)
    C = Collection.from_terms(s, terms)
    r = Report("gen-diagram")
    r.data["terms"] = [s.format_obj(x) for x in terms]
    if args.output:
        Path(args.output).write_text(write_collection(C), encoding="utf-8")
    for n, x in enumerate(terms, 1):
        r.lines.append(f"{n}: {s.format_obj(x)}")
    if args.closed_form_box:
        if B != closed_form_single_box(2):
            raise ValueError("--closed-form-box applies to the single-box seed [1]")
        for n, x in enumerate(terms, 1):
            cf = closed_form_single_box(n)
            if x != cf:
                r.fail(f"n={n}: generated {s.format_obj(x)}, closed form {s.format_obj(cf)}")
            if n >= 2 and not canonical_construction_check(n):
                r.fail(f"n={n}: canonical construction differs")
        r.lines.append("closed form agrees" if r.verdict == "ok" else "closed form DISAGREES")
    return r


def _load_collection(path: str, structure: Optional[str]) -> Collection:
    if path in catalog.NAMED and not Path(path).exists():
        return catalog.NAMED[path]()
    text = Path(path).read_text(encoding="utf-8")
    return read_collection(text, get_structure(structure) if structure else None)


def _parse_composition(text: str) -> tuple[int, tuple[int, ...]]:
    head, sep, tail = text.strip().strip("()").partition(";")
    if not sep:
        raise ValueError(f"composition must look like 'k; j1,...,jk', got {text!r}")
    return int(head), tuple(int(x) for x in tail.split(",") if x.strip())


def cmd_verify_operad(args) -> Report:
    C = _load_collection(args.file, args.structure)
    s = C.structure
    r = Report("verify-operad", seed=args.seed)
    r.data["pairs"] = {}
    for p, q in args.pairs:
        if args.composition:
            k, js = _parse_composition(args.composition)
            src = gamma_source(C, p, q, k, js)
            ok = gamma_exists(C, p, q, k, js)
            label = f"({k}; {','.join(map(str, js))})"
            r.lines.append(f"pair ({p},{q}) composition {label}: "
                           f"{s.format_obj(src)} -> {s.format_obj(C[sum(js)])}: {'exists' if ok else 'MISSING'}")
            r.data["pairs"][f"{p},{q}"] = {"composition": label, "exists": ok}
            if not ok:
                r.fail(label)
            continue
        N = args.max_arity if args.max_arity is not None else C.max_arity
        rep = verify_operad(C, p, q, N, audit=args.audit, seed=args.seed)
        r.lines.extend(rep.lines(s, limit=args.max_witnesses))
        r.data["pairs"][f"{p},{q}"] = {"verdict": rep.verdict, "compositions_checked": rep.compositions_checked,
                                       "witness_count": len(rep.witnesses)}
        for w in rep.witnesses:
            r.fail(w.label() if w.kind == "composition" else w.render(s))
        first = next((w for w in rep.witnesses if w.kind == "composition"), None)
        if first is not None:
            comp = f"{first.k};{','.join(map(str, first.js))}"
            r.lines.append(f"  replay: nfold verify-operad --file {_q(args.file)} --pairs {p},{q} --composition '{comp}'")
        if not rep.unit_ok:
            r.fail(f"unit laws fail for pair ({p},{q})")
    return r


def cmd_tensor(args) -> Report:
    C = _load_collection(args.left, args.structure)
    D = _load_collection(args.right, args.structure)
    if args.product_index is not None:
        T = fibrewise_product(C, D, args.product_index)
    else:
        T = tensor_operads(C, D, args.index, args.m)
    text = write_collection(T)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    r = Report("tensor")
    r.lines.extend(text.rstrip("\n").splitlines())
    r.data["collection"] = [T.structure.format_obj(x) for x in T.objects]
    return r


def cmd_algebra(args) -> Report:
    C = _load_collection(args.operad, args.structure)
    s = C.structure
    A = s.parse_obj(args.object)
    r = Report("algebra", seed=args.seed)
    r.data["pairs"] = {}
    for p, q in args.pairs:
        N = args.max_arity if args.max_arity is not None else C.max_arity
        rep = verify_algebra(C, A, p, q, N, audit=args.audit, seed=args.seed)
        r.lines.extend(rep.lines(s, limit=args.max_witnesses))
        r.data["pairs"][f"{p},{q}"] = {"verdict": rep.verdict, "failures": len(rep.failures)}
        for kind, idx, src, tgt in rep.failures:
            r.fail(f"{kind} ({';'.join(map(str, idx))}): {s.format_obj(src)} !-> {s.format_obj(tgt)}")
        if not rep.unit_ok:
            r.fail(f"unit law fails for pair ({p},{q})")
    return r


def cmd_render(args) -> Report:
    d = parse_diagram(args.diagram)
    r = Report("render")
    text = render_ascii(d)
    if text:
        r.lines.append(text)
    r.data["ascii"] = text
    return r


# --- parser ------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=DEFAULT_SEED, help="seed for sampled checks")
    common.add_argument("--json", action="store_true", help="machine-readable report")

    parser = argparse.ArgumentParser(prog="nfold", description=__doc__.splitlines()[0])
    parser.add_argument("--describe", action="store_true", help="print the product table of every structure")
    sub = parser.add_subparsers(dest="command")
    structure_help = f"one of {', '.join(NAMES)}"

    p = sub.add_parser("describe", parents=[common], help="product tables of registered structures")
    p.add_argument("--structure", help=structure_help)
    p.set_defaults(func=cmd_describe)

    p = sub.add_parser("product", parents=[common], help="evaluate one product")
    p.add_argument("--structure", required=True, help=structure_help)
    p.add_argument("--op", type=int, required=True, help="product index")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("compare", parents=[common], help="compare two objects")
    p.add_argument("--structure", required=True, help=structure_help)
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("interchange", parents=[common], help="check interchange inequalities")
    p.add_argument("--structure", required=True, help=structure_help)
    p.add_argument("--i", type=int)
    p.add_argument("--j", type=int)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("objects", nargs="*", help="A B C D (omit to sweep random quadruples)")
    p.set_defaults(func=cmd_interchange)

    p = sub.add_parser("certify", parents=[common], help="sample-check all structure axioms")
    p.add_argument("--structure", default="all", help=structure_help + ", or all")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--exhaustive", type=int, metavar="BOUND", help="enumerate all small objects instead of sampling")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("free-hom", parents=[common], help="decide a morphism in the free n-fold category")
    p.add_argument("--n", type=int, default=9, help="largest product index")
    p.add_argument("--strict-rule", action="store_true",
                   help="require a strictly larger index even when orientation is kept")
    p.add_argument("source")
    p.add_argument("target")
    p.set_defaults(func=cmd_free_hom)

    p = sub.add_parser("gen-nat", parents=[common], help="minimal 2-fold operad in (N, max, +)")
    p.add_argument("--starts", type=_int_list, required=True)
    p.add_argument("--terms", type=int, required=True)
    p.add_argument("--closed-form", action="store_true")
    p.set_defaults(func=cmd_gen_nat)

    p = sub.add_parser("gen-diagram", parents=[common], help="minimal operad generated by a Young diagram")
    p.add_argument("--seed-diagram", required=True)
    p.add_argument("--terms", type=int, required=True)
    p.add_argument("--structure", default="yd-max:1")
    p.add_argument("--pairs", type=_pair, default=(2, 3))
    p.add_argument("--closed-form-box", action="store_true")
    p.add_argument("--output", help="write the collection file here")
    p.set_defaults(func=cmd_gen_diagram)

    p = sub.add_parser("verify-operad", parents=[common], help="verify operad compositions")
    p.add_argument("--file", required=True, help="collection file, or a catalog name: " + ", ".join(catalog.NAMED))
    p.add_argument("--pairs", type=_pair, action="append", required=True)
    p.add_argument("--max-arity", type=int)
    p.add_argument("--structure", help="override the file's structure")
    p.add_argument("--composition", help="check a single composition 'k;j1,...,jk'")
    p.add_argument("--audit", type=int, default=200, help="sampled associativity squares")
    p.add_argument("--max-witnesses", type=int, help="print at most this many witnesses")
    p.set_defaults(func=cmd_verify_operad)

    p = sub.add_parser("tensor", parents=[common], help="tensor product of two operads")
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    p.add_argument("--index", type=int, default=1)
    p.add_argument("--m", type=int, default=2, help="the operads are m-fold")
    p.add_argument("--product-index", type=int, help="use this fibrewise product directly, unchecked")
    p.add_argument("--structure")
    p.add_argument("--output")
    p.set_defaults(func=cmd_tensor)

    p = sub.add_parser("algebra", parents=[common], help="verify an operad algebra")
    p.add_argument("--operad", required=True)
    p.add_argument("--object", required=True)
    p.add_argument("--pairs", type=_pair, action="append", required=True)
    p.add_argument("--max-arity", type=int)
    p.add_argument("--structure")
    p.add_argument("--audit", type=int, default=200)
    p.add_argument("--max-witnesses", type=int)
    p.set_defaults(func=cmd_algebra)

    p = sub.add_parser("render", parents=[common], help="draw a diagram with d <= 2")
    p.add_argument("diagram")
    p.set_defaults(func=cmd_render)
    return parser


def main(argv: Optional[list[str]] = None, out=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.describe and args.command is None:
        args = parser.parse_args(["describe"])
    if args.command is None:
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    try:
        report = args.func(args)
    except (ValueError, KeyError, IndexError, OSError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"error: {msg}", file=sys.stderr)
        return EXIT_USAGE
    return report.emit(args.json, out)


if __name__ == "__main__":
    sys.exit(main())
