"""Command line interface: ``qhg verify|chain|hecke|discrete|dump|catalog``.

Exit codes: 0 success, 1 at least one failing check, 2 bad input, 3 engine error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .compact import build_compact_hypergroup, hecke_structure
from .discrete import build_C1, build_discrete_hypergroup, build_expectations
from .duality import dualize
from .group import catalog_names
from .projection import canonical_projection
from .report import EngineError, VerificationReport
from .serialize import dump_algebra, dump_discrete, dump_hecke
from .suite import SpecError, _build, parse_spec, run_suite

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_ENGINE = 0, 1, 2, 3


def _read_spec(path: str):
    try:
        if path == "-":
            raw = json.load(sys.stdin)
        else:
            with open(path, encoding="utf-8") as fh:
                raw = json.load(fh)
    except OSError as exc:
        raise SpecError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise SpecError(f"{path} is not valid JSON: {exc}") from exc
    return parse_spec(raw)


def _emit(obj, dest: str | None = None) -> None:
    text = json.dumps(obj, indent=2, ensure_ascii=False) + "\n"
    if dest is None or dest == "-":
        sys.stdout.write(text)
    else:
        with open(dest, "w", encoding="utf-8") as fh:
            fh.write(text)


def _report(rep: VerificationReport, dest: str | None) -> int:
    if dest is not None:
        _emit(rep.to_json(), dest)
    if dest != "-":
        for line in rep.summary_lines():
            if line.startswith("FAIL"):
                print(line)
        c = rep.counts()
        print(f"{rep.instance}: {'OK' if rep.ok else 'FAIL'} "
              f"(pass {c['pass']}, fail {c['fail']}, finding {c['finding']}, skipped {c['skipped']})")
    return EXIT_OK if rep.ok else EXIT_FAIL


def cmd_verify(args) -> int:
    spec = _read_spec(args.spec)
    rep = run_suite(spec, jobs=args.jobs, timing=args.timing)
    return _report(rep, args.json)


def cmd_chain(args) -> int:
    spec = _read_spec(args.spec)
    rep = run_suite(spec, jobs=args.jobs, full=False, chain=True, timing=args.timing)
    return _report(rep, args.json)


def cmd_hecke(args) -> int:
    spec = _read_spec(args.spec)
    a = _build(spec.group, spec.subgroup, "group")
    glp = canonical_projection(a, spec.subgroup)
    hb = hecke_structure(a, glp, build_compact_hypergroup(a, glp))
    out = dump_hecke(a, hb)
    out["report_ok"] = hb.report.ok
    _emit(out)
    return EXIT_OK if hb.report.ok else EXIT_FAIL


def cmd_discrete(args) -> int:
    spec = _read_spec(args.spec)
    a = _build(spec.group, spec.subgroup, args.model)
    glp = canonical_projection(a, spec.subgroup)
    ex = build_expectations(a, glp)
    c1 = build_C1(a, glp, ex)
    disc = build_discrete_hypergroup(a, glp, ex, c1)
    out = dump_discrete(ex, c1, disc)
    ok = ex.report.ok and c1.report.ok and disc.report.ok
    out["report_ok"] = ok
    _emit(out)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_dump(args) -> int:
    spec = _read_spec(args.spec)
    a = _build(spec.group, spec.subgroup, args.model)
    if args.dual:
        a = dualize(a).b_side
    _emit(dump_algebra(a))
    return EXIT_OK


def cmd_catalog(args) -> int:
    for name in catalog_names():
        print(name)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qhg", description="Exact verification of group-like projections "
                                "on finite group function algebras and group algebras.")
    sub = p.add_subparsers(dest="command", required=True)

    def suite_cmd(name, fn, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("spec", help="group spec JSON file, or - for stdin")
        sp.add_argument("--json", metavar="OUT", help="write the JSON report to OUT (- for stdout)")
        sp.add_argument("--jobs", type=int, default=1, help="worker processes (default 1)")
        sp.add_argument("--timing", action="store_true", help="include per-unit timings in the report")
        sp.set_defaults(func=fn)

    suite_cmd("verify", cmd_verify, "run the full verification suite")
    suite_cmd("chain", cmd_chain, "run the ordered-pair suite for K ≤ K'")

    sp = sub.add_parser("hecke", help="Hecke basis structure constants (group model)")
    sp.add_argument("spec")
    sp.set_defaults(func=cmd_hecke)

    sp = sub.add_parser("discrete", help="C, C₁ and Δ₁ structure constants")
    sp.add_argument("spec")
    sp.add_argument("--model", choices=("function", "group"), default="function")
    sp.set_defaults(func=cmd_discrete)

    sp = sub.add_parser("dump", help="Hopf ∗-algebra structure constants")
    sp.add_argument("spec")
    sp.add_argument("--model", choices=("function", "group"), required=True)
    sp.add_argument("--dual", action="store_true", help="dump the dual algebra instead")
    sp.set_defaults(func=cmd_dump)

    sp = sub.add_parser("catalog", help="list the built-in groups")
    sp.set_defaults(func=cmd_catalog)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "jobs", 1) < 1:
        print("qhg: --jobs must be at least 1", file=sys.stderr)
        return EXIT_INPUT
    try:
        return args.func(args)
    except SpecError as exc:
        print(f"qhg: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except EngineError as exc:
        print(f"qhg: engine error: {exc}", file=sys.stderr)
        return EXIT_ENGINE


if __name__ == "__main__":
    sys.exit(main())
