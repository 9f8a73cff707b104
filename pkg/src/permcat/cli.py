"""Command-line entry point.

Reports go to stdout as newline-delimited JSON (one record per law, plus one
line per emitted document); a human summary goes to stderr.  Exit status is
0 when every law passes, 1 on any failure and 2 on bad input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import documents as docs
from .category import CategoryError, validate
from .gabriel import gabriel_factorize, verify_factorization
from .generator import GeneratorConfig, InstanceGenerator
from .modelcat import (
    CofibrationError, build_retract, free_cofibration, is_free_cofibration, properness_check,
    pushout_free, recognize_cofibration, universal_lift, verify_lift, verify_retract,
)
from .monoid import FiniteMonoid, MonoidError, MonoidHom
from .report import CheckReport
from .smfunctor import (
    NO, YES, FunctorError, find_section, is_strict, validate_functor, validate_nat_trans,
    validate_section,
)

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


class Output:
    def __init__(self, as_json: bool):
        self.as_json = as_json
        self.documents: list = []
        self.report = CheckReport()

    def document(self, name: str, kind: str, body):
        self.documents.append({"name": name, "document": docs.envelope(kind, body)})

    def emit(self, out, err) -> int:
        records = [e.record() for e in self.report.entries]
        if self.as_json:
            out.write(json.dumps({"ok": self.report.ok, "documents": self.documents,
                                  "report": records}, sort_keys=True, ensure_ascii=False) + "\n")
        else:
            for d in self.documents:
                out.write(json.dumps(d, sort_keys=True, ensure_ascii=False) + "\n")
            for r in records:
                out.write(json.dumps(r, sort_keys=True, ensure_ascii=False) + "\n")
        if self.report.entries:
            err.write(self.report.summary() + "\n")
        n_fail = len(self.report.failed())
        err.write(f"{len(records) - n_fail} passed, {n_fail} failed\n")
        return EXIT_OK if self.report.ok else EXIT_FAIL


def _load(args, path: str, kinds=None) -> dict:
    if args.fixtures_dir and not os.path.isabs(path) and not os.path.exists(path):
        path = os.path.join(args.fixtures_dir, path)
    try:
        doc = docs.load(path)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except docs.DocumentError as exc:
        raise InputError(f"{path}: {exc}") from None
    if kinds and doc["kind"] not in kinds:
        raise InputError(f"{path}: expected a {' or '.join(kinds)} document, got {doc['kind']}")
    return doc


# ------------------------------------------------------------ commands


def cmd_validate(args, out: Output):
    doc = _load(args, args.document)
    _validate_doc(doc, args.depth, out.report, "")


def _validate_doc(doc, depth, report: CheckReport, prefix: str):
    kind, value = doc["kind"], doc["value"]
    if kind == "monoid":
        bad = value.law_violation() if isinstance(value, FiniteMonoid) else None
        report.add(prefix + "monoid_laws", bad is None, depth, 1, bad)
    elif kind == "category":
        report.extend(validate(value, depth), prefix)
    elif kind == "functor":
        report.extend(validate_functor(value, depth), prefix)
    elif kind == "nat_trans":
        report.extend(validate_nat_trans(value, depth), prefix)
    elif kind == "square":
        report.extend(validate_functor(value["fibration"], depth), prefix + "fibration.")
        report.extend(validate_functor(value["cofibration"], depth), prefix + "cofibration.")
    else:
        for name, item in value["items"].items():
            _validate_doc(item, depth, report, f"{prefix}{name}.")


def cmd_factor(args, out: Output):
    F = _load(args, args.document, ["functor"])["value"]
    pre = validate_functor(F, args.depth)
    if not pre.ok:
        out.report.extend(pre, "input.")
        return
    fac = gabriel_factorize(F)
    out.document("G(F)", "category", docs.category_body(fac.category, args.depth))
    out.document("Gamma", "functor", docs.functor_body(fac.gamma, args.depth))
    out.document("Delta", "functor", docs.functor_body(fac.delta, args.depth))
    out.report.extend(verify_factorization(F, fac, args.depth))


def _require_strict(F, depth, out: Output, label="input") -> bool:
    ok = isinstance(F.obj, MonoidHom) and is_strict(F, depth)
    out.report.add(f"{label}_strict", ok, depth, 1, None if ok else "functor is not strict")
    return ok


def cmd_retract(args, out: Output):
    F = _load(args, args.document, ["functor"])["value"]
    if not _require_strict(F, args.depth, out):
        return
    L_obj = recognize_cofibration(F, args.depth)
    out.report.add("cofibration_certified", L_obj is not None, args.depth, 1,
                   None if L_obj is not None else f"no lift within depth {args.depth}")
    if L_obj is None:
        return
    w = build_retract(F, L_obj)
    d = min(args.depth, 2)
    out.document("E", "category", docs.category_body(w.E, d))
    out.document("I", "functor", docs.functor_body(w.I, d))
    out.document("P", "functor", docs.functor_body(w.P, d))
    out.document("L", "functor", docs.functor_body(w.L, d))
    out.report.extend(verify_retract(w, args.depth))


def _pushout(args, out: Output, square):
    G, i = square["fibration"], square["cofibration"]
    if not (_require_strict(G, args.depth, out, "fibration")
            and _require_strict(i, args.depth, out, "cofibration")):
        return None
    free = is_free_cofibration(i, depth=min(args.depth, 2))
    out.report.add("cofibration_free", free == YES, args.depth, 1,
                   None if free == YES else "not a free cofibration")
    if free != YES:
        return None
    cof = free_cofibration(i.domain, i.codomain, i)
    res = pushout_free(G, cof, args.depth)
    return res, cof


def cmd_pushout(args, out: Output):
    square = _load(args, args.document, ["square"])["value"]
    built = _pushout(args, out, square)
    if built is None:
        return
    res, cof = built
    d = min(args.depth, 2)
    out.document("G(S^F)", "category", docs.category_body(res.category, d))
    out.document("P", "functor", docs.functor_body(res.P, d))
    out.document("Gamma", "functor", docs.functor_body(res.gamma, d))
    out.report.extend(properness_check(square["fibration"], cof, args.depth, res))
    out.report.extend(validate(res.category, args.depth), "pushout.")


def cmd_lift(args, out: Output):
    square = _load(args, args.document, ["square"])["value"]
    if "R" not in square:
        raise InputError("square document has no cocone")
    built = _pushout(args, out, square)
    if built is None:
        return
    res, _ = built
    R, T = square["R"], square["T"]
    try:
        L = universal_lift(res, R, T, args.depth)
    except (CofibrationError, FunctorError) as exc:
        out.report.add("lift_exists", False, args.depth, 1, str(exc))
        return
    out.report.add("lift_exists", True, args.depth, 1)
    out.document("L", "functor", docs.functor_body(L, min(args.depth, 2)))
    out.report.extend(verify_lift(res, L, R, T, args.depth))


def cmd_properness(args, out: Output):
    gen = InstanceGenerator(GeneratorConfig(seed=args.seed, depth=args.depth))
    for k in range(args.count):
        G, cof = gen.pushout_square()
        out.report.extend(properness_check(G, cof, args.depth), f"instance[{k}].")


def cmd_gen(args, out: Output):
    gen = InstanceGenerator(GeneratorConfig(seed=args.seed, depth=args.depth))
    d = min(args.depth, 2)
    for k in range(args.count):
        if args.kind == "category":
            C = gen.category()
            out.document(f"{k}", "category", docs.category_body(C, d))
            out.report.extend(validate(C, args.depth), f"instance[{k}].")
        elif args.kind == "functor":
            F = gen.unital_functor()
            out.document(f"{k}", "functor", docs.functor_body(F, d))
            out.report.extend(validate_functor(F, args.depth), f"instance[{k}].")
        elif args.kind == "fibration":
            G = gen.acyclic_fibration()
            datum = find_section(G, args.depth)
            out.document(f"{k}", "functor", docs.functor_body(G, d))
            out.document(f"{k}.section", "functor", docs.functor_body(datum.section, d))
            out.report.extend(validate_section(datum, args.depth), f"instance[{k}].")
        elif args.kind == "cofibration":
            F = gen.certified_cofibration()
            out.document(f"{k}", "functor", docs.functor_body(F, d))
        else:
            G, cof = gen.pushout_square()
            body = {"fibration": docs.functor_body(G, d),
                    "cofibration": docs.functor_body(cof.inclusion, d)}
            out.document(f"{k}", "square", body)


COMMANDS = {
    "validate": (cmd_validate, "check every law of a document"),
    "factor": (cmd_factor, "factor a functor as strict bijective-on-objects then fully faithful"),
    "retract": (cmd_retract, "certify a cofibration and build its retract witness"),
    "pushout": (cmd_pushout, "push an acyclic fibration out along a free cofibration"),
    "lift": (cmd_lift, "build and check the universal lift out of a pushout"),
    "properness": (cmd_properness, "run the cobase-change harness on generated instances"),
    "gen": (cmd_gen, "emit seeded instances"),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--depth", type=int, default=argparse.SUPPRESS,
                        help="word-length bound for enumeration (default 3)")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="generator seed")
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="emit one JSON object instead of NDJSON lines")
    common.add_argument("--fixtures-dir", default=argparse.SUPPRESS,
                        help="directory for resolving relative document paths")

    parser = argparse.ArgumentParser(prog="permcat", parents=[common],
                                     description="Permutative categories at desk scale.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, parents=[common], help=help_text)
        if name in ("validate", "factor", "retract", "pushout", "lift"):
            p.add_argument("document")
        if name in ("properness", "gen"):
            p.add_argument("--count", type=int, default=50 if name == "properness" else 1)
        if name == "gen":
            p.add_argument("--kind", default="category",
                           choices=["category", "functor", "fibration", "cofibration", "square"])
    return parser


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if isinstance(exc.code, int) else EXIT_INPUT
    args.depth = getattr(args, "depth", 3)
    args.seed = getattr(args, "seed", 0)
    args.json = getattr(args, "json", False)
    args.fixtures_dir = getattr(args, "fixtures_dir", None)
    if args.depth < 0:
        err.write("permcat: --depth must be non-negative\n")
        return EXIT_INPUT
    output = Output(args.json)
    handler = COMMANDS[args.command][0]
    try:
        handler(args, output)
    except (InputError, docs.DocumentError) as exc:
        err.write(f"permcat: {exc}\n")
        return EXIT_INPUT
    except (CategoryError, MonoidError, FunctorError, CofibrationError) as exc:
        output.report.add("construction", False, args.depth, 1, str(exc))
    return output.emit(out, err)


if __name__ == "__main__":
    sys.exit(main())
