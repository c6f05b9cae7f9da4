"""Command line front end: ``metric-lie build|analyze|classify|reduce|verify``.

Exit codes: 0 success, 2 bad usage or input, 3 internal invariant violation
(including a failed verification suite).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from metric_lie.catalog import CATALOG
from metric_lie.errors import InvariantViolation, UsageError
from metric_lie.forms import (
    MetricLieAlgebra,
    complete_reduction,
    index_and_relative_index,
    is_effective,
    is_invariant,
    metric_radical,
    nil_invariance_check,
)
from metric_lie.io import dumps, loads, subspace_json, to_document
from metric_lie.lie import DEFAULT_SEED, fitting_decomposition, levi_decomposition, nilradical
from metric_lie.linalg import fmt
from metric_lie.structure import classify_low_index
from metric_lie.suites import SUITES, run_suite

EXIT_OK, EXIT_USAGE, EXIT_INVARIANT = 0, 2, 3


def _seed() -> int:
    raw = os.environ.get("METRIC_LIE_SEED")
    if raw is None:
        return DEFAULT_SEED
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"METRIC_LIE_SEED must be an integer, got {raw!r}") from None


def _parse_params(entry, tokens: list[str]) -> dict:
    params = {}
    it = iter(tokens)
    for tok in it:
        if not tok.startswith("--"):
            raise UsageError(f"unexpected argument {tok!r}; parameters look like --name value")
        key = tok[2:].replace("-", "_")
        if "=" in key:
            key, value = key.split("=", 1)
        else:
            value = next(it, None)
            if value is None:
                raise UsageError(f"parameter --{key} needs a value")
        if key not in entry.parameters:
            allowed = ", ".join(f"--{k}" for k in entry.parameters) or "none"
            raise UsageError(f"unknown parameter --{key} for {entry.name}; allowed: {allowed}")
        conv = entry.parameters[key]
        try:
            params[key] = conv(value)
        except ValueError:
            raise UsageError(f"cannot parse --{key} {value!r}") from None
    return params


def _read(path: str) -> MetricLieAlgebra:
    try:
        text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    return loads(text)


def _emit(report: dict, as_json: bool, out) -> None:
    if as_json:
        out.write(json.dumps(report, indent=2, ensure_ascii=False) + "\n")
        return
    for key, value in report.items():
        if isinstance(value, dict):
            out.write(f"{key}:\n")
            for k, v in value.items():
                out.write(f"  {k}: {_text(v)}\n")
        else:
            out.write(f"{key}: {_text(value)}\n")


def _text(value) -> str:
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, list):
        return "[" + ", ".join(_text(v) for v in value) + "]"
    return str(value)


def analysis_report(m: MetricLieAlgebra) -> dict:
    g = m.algebra
    levi = levi_decomposition(g)
    nil = nilradical(g)
    sig = m.form.signature()
    mu, ell = index_and_relative_index(m)
    cert = nil_invariance_check(m)
    fit = fitting_decomposition(g, seed=_seed())
    effective = is_effective(m)
    report = {
        "name": m.name,
        "dim": m.dim,
        "radical": {"dim": levi.radical.dim, "basis": subspace_json(levi.radical)},
        "nilradical": {"dim": nil.dim, "basis": subspace_json(nil)},
        "levi": {
            "compact_dim": levi.compact_part.dim,
            "noncompact_dim": levi.noncompact_part.dim,
            "compact_basis": subspace_json(levi.compact_part),
            "noncompact_basis": subspace_json(levi.noncompact_part),
        },
        "signature": list(sig.as_tuple()),
        "mu": mu,
        "ell": ell,
        "metric_radical": subspace_json(metric_radical(m)),
        "effective": effective,
        "invariant": is_invariant(m),
        "nil_invariant": {
            "verdict": cert.verdict,
            "tested_operators": len(cert.tested_operators),
            "witness": None if cert.witness is None else {
                "x": [fmt(a) for a in cert.witness.x],
                "y": [fmt(a) for a in cert.witness.y],
                "defect": fmt(cert.witness.defect),
            },
        },
        "fitting": {
            "regular_element": [fmt(a) for a in fit.regular_element],
            "zero_dim": fit.fitting_zero.dim,
            "one_dim": fit.fitting_one.dim,
        },
    }
    if ell <= 2 and effective and cert.passed:
        report["classification"] = classify_low_index(m).case_label
    else:
        report["classification"] = None
    return report


def cmd_build(args, out) -> int:
    entry = CATALOG.get(args.name)
    if entry is None:
        raise UsageError(f"unknown catalog name {args.name!r}; choose from {', '.join(CATALOG)}")
    params = _parse_params(entry, args.params)
    m = entry.builder(**params)
    meta = {"name": m.name, "builder": entry.name,
            "params": {k: str(v) if not isinstance(v, (int, str)) else v for k, v in params.items()}}
    out.write(dumps(to_document(m, meta)) + "\n")
    return EXIT_OK


def cmd_analyze(args, out) -> int:
    _emit(analysis_report(_read(args.input)), args.json, out)
    return EXIT_OK


def cmd_classify(args, out) -> int:
    m = _read(args.input)
    r = classify_low_index(m)
    report = {
        "case": r.case_label,
        "ell": r.ell,
        "witnesses": {k: subspace_json(v) for k, v in r.witnesses.items()},
        "checks": r.checks,
    }
    if args.json:
        _emit(report, True, out)
    else:
        out.write(f"{r.case_label}\n")
        out.write(f"relative index: {r.ell}\n")
        for k, v in r.checks.items():
            out.write(f"  {k}: {_text(v)}\n")
    return EXIT_OK


def cmd_reduce(args, out) -> int:
    m = _read(args.input)
    trace = complete_reduction(m)
    steps = []
    for step in trace.steps:
        q = step.quotient
        steps.append({
            "ideal": subspace_json(step.isotropic_ideal),
            "quotient_dim": q.dim,
            "quotient_index": index_and_relative_index(q)[0],
            "quotient": to_document(q),
        })
    report = {
        "initial_index": index_and_relative_index(m)[0],
        "steps": len(steps),
        "final_dim": trace.final.dim,
        "trace": steps,
    }
    if args.json:
        _emit(report, True, out)
    else:
        out.write(f"initial index: {report['initial_index']}\n")
        for t, s in enumerate(steps, 1):
            out.write(
                f"step {t}: ideal of dim {len(s['ideal'])} -> quotient dim {s['quotient_dim']}, "
                f"index {s['quotient_index']}\n"
            )
        out.write(f"abelian after {len(steps)} step(s), dim {trace.final.dim}\n")
    return EXIT_OK


def cmd_verify(args, out) -> int:
    names = args.suites or list(SUITES)
    for n in names:
        if n not in SUITES:
            raise UsageError(f"unknown suite {n!r}; choose from {', '.join(SUITES)}")
    if args.jobs > 1:
        with ThreadPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(run_suite, names))
    else:
        results = [run_suite(n) for n in names]
    failed = [r for r in results if not r.passed]
    if args.json:
        _emit({
            "suites": [
                {"name": r.name, "passed": r.passed, "lines": r.lines, "counterexample": r.counterexample}
                for r in results
            ],
            "passed": not failed,
        }, True, out)
    else:
        for r in results:
            out.write(f"== {r.name}: {'PASS' if r.passed else 'FAIL'}\n")
            for line in r.lines:
                out.write(f"  {line}\n")
        if failed:
            out.write(f"first counterexample: {failed[0].counterexample}\n")
    return EXIT_INVARIANT if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="metric-lie", description="Exact computations with metric Lie algebras.")
    sub = p.add_subparsers(dest="command", required=True)
    b = sub.add_parser("build", help="emit a catalog algebra as a JSON document")
    b.add_argument("name", help=f"one of: {', '.join(CATALOG)}")
    b.add_argument("params", nargs=argparse.REMAINDER, help="builder parameters, e.g. --n 1")
    for name, help_text in (
        ("analyze", "structural report for a document"),
        ("classify", "low relative index case label"),
        ("reduce", "reduce a solvable metric algebra to an abelian one"),
    ):
        c = sub.add_parser(name, help=help_text)
        c.add_argument("input", help="document path, or - for standard input")
        c.add_argument("--json", action="store_true", help="machine-readable output")
    v = sub.add_parser("verify", help="run property suites over the catalog")
    v.add_argument("suites", nargs="*", help=f"suite names: {', '.join(SUITES)}")
    v.add_argument("--json", action="store_true")
    v.add_argument("--jobs", type=int, default=1, help="worker threads")
    return p


COMMANDS = {
    "build": cmd_build,
    "analyze": cmd_analyze,
    "classify": cmd_classify,
    "reduce": cmd_reduce,
    "verify": cmd_verify,
}


def main(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_USAGE
    except InvariantViolation as exc:
        err.write(f"invariant violation: {exc}\n")
        return EXIT_INVARIANT


if __name__ == "__main__":
    sys.exit(main())
