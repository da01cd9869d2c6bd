"""Command line front end.

Subcommands: homology (distance table at one scale), graph (edge list),
closure (neighborhood document plus a cover), sweep (scale range as
TSV), verify (seeded axiom suites). Machine-readable output is a JSON
result document on stdout; sweeps emit TSV. Exit codes: 0 success,
1 a verification failed, 2 bad input.

Reported betti numbers stop below the enumeration cap: with a cap of
max_dim, dimensions 0 through max_dim - 1 are exact no matter what got
truncated at the cap, so that is what the reports contain.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from .closure import ii_relation, vietoris_relation
from .documents import (
    ParseError,
    document_cover,
    document_to_closure,
    document_to_complex,
    document_to_metric,
    document_to_relation,
    guess_format,
    parse_document,
    result_document,
    serialize_result,
)
from .complexes import pair_complex, vr_complex
from .homology import INTEGERS, RATIONALS, Coefficients, homology, prime_field
from .relations import SemiUniformBase, is_symmetric, scale_base
from .semiuniform import limit_homology
from .suites import SUITE_NAMES, SuiteConfig, run_suite

OK, FAILED, BAD_INPUT = 0, 1, 2


def _parse_coeffs(text: str) -> Coefficients:
    if text == "Z":
        return INTEGERS
    if text == "Q":
        return RATIONALS
    if text.startswith("F") and text[1:].isdigit():
        return prime_field(int(text[1:]))
    raise ValueError(f"unknown coefficients {text!r}: use Z, Q, or F<prime>")


def _parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not an exact number: {text!r}") from exc


def _read(path: str) -> str:
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _load_document(path: str, fmt: str | None):
    return parse_document(_read(path), fmt or guess_format(path))


def _auto_deltas(d, q) -> list[Fraction]:
    """One offset making the strict relation at q + delta equal to the
    closed relation at q: half the gap up to the next larger distance."""
    above = [v for v in d.values() if v > q]
    delta = Fraction(min(above) - q) / 2 if above else Fraction(1)
    return [delta]


def _betti_payload(result, max_dim: int) -> dict:
    return {
        "betti": list(result.betti[:max_dim]),
        "torsion": [list(t) for t in result.torsion[:max_dim]],
    }


def _emit(out, command: str, parameters: dict, results: dict):
    print(serialize_result(result_document(command, parameters, results)), end="", file=out)


def _cmd_homology(args, out) -> int:
    doc = _load_document(args.input, args.format)
    coeffs = _parse_coeffs(args.coeffs)
    params = {
        "input": args.input,
        "max_dim": args.max_dim,
        "coefficients": args.coeffs,
        "reduced": args.reduced,
    }
    subset = sorted(args.subset) if args.subset else None
    if subset is not None:
        params["subset"] = subset

    if doc.kind == "distance":
        d = document_to_metric(doc)
        if args.scale is None:
            raise ValueError("a distance table needs --scale")
        q = _parse_fraction(args.scale)
        deltas = [_parse_fraction(t) for t in args.delta.split(",")] if args.delta else _auto_deltas(d, q)
        params["scale"] = q
        params["deltas"] = deltas
        base = scale_base(d, q, deltas)
        report = limit_homology(base, subset=subset, coeffs=coeffs,
                                max_dim=args.max_dim, reduced=args.reduced)
        results = _betti_payload(report.result, args.max_dim)
        results["members"] = report.member_count
        results["stabilized"] = all(m.agrees for m in report.stabilization)
        if report.cohomology_result is not None:
            results["cohomology_betti"] = list(report.cohomology_result.betti[: args.max_dim])
    elif doc.kind == "complex":
        k = document_to_complex(doc, max_dim=args.max_dim)
        result = homology(k, coeffs, reduced=args.reduced)
        results = _betti_payload(result, args.max_dim)
    else:
        raise ValueError("homology reads a distance table or a complex document; "
                         "use the graph or closure command instead")
    _emit(out, "homology", params, results)
    return OK


def _cmd_graph(args, out) -> int:
    doc = _load_document(args.input, args.format)
    if doc.kind != "graph":
        raise ValueError("the graph command needs an edge list or graph document")
    rel = document_to_relation(doc)
    coeffs = _parse_coeffs(args.coeffs)
    params = {
        "input": args.input,
        "max_dim": args.max_dim,
        "coefficients": args.coeffs,
        "reduced": args.reduced,
        "directed": doc.directed,
    }
    subset = sorted(args.subset) if args.subset else None
    if subset is not None:
        params["subset"] = subset
    if is_symmetric(rel):
        base = SemiUniformBase.from_members([rel])
        report = limit_homology(base, subset=subset, coeffs=coeffs,
                                max_dim=args.max_dim, reduced=args.reduced)
        result = report.result
    else:
        # A lone non-symmetric relation is not a base (its inverse
        # contains no member), so the order-aware complex is used directly.
        if subset is not None:
            obj = pair_complex(rel, subset, args.max_dim)
        else:
            obj = vr_complex(rel, args.max_dim)
        result = homology(obj, coeffs, reduced=args.reduced)
    _emit(out, "graph", params, _betti_payload(result, args.max_dim))
    return OK


def _cmd_closure(args, out) -> int:
    doc = _load_document(args.input, args.format)
    if doc.kind != "closure":
        raise ValueError("the closure command needs a closure document")
    c = document_to_closure(doc)
    cover = document_cover(doc)
    coeffs = _parse_coeffs(args.coeffs)
    if args.relation == "interior":
        rel = ii_relation(c, cover)
    else:
        rel = vietoris_relation(cover)
    base = SemiUniformBase.from_members([rel])
    report = limit_homology(base, coeffs=coeffs, max_dim=args.max_dim,
                            reduced=args.reduced)
    params = {
        "input": args.input,
        "max_dim": args.max_dim,
        "coefficients": args.coeffs,
        "reduced": args.reduced,
        "relation": args.relation,
    }
    _emit(out, "closure", params, _betti_payload(report.result, args.max_dim))
    return OK


def _cmd_sweep(args, out) -> int:
    doc = _load_document(args.input, args.format)
    if doc.kind != "distance":
        raise ValueError("sweep needs a distance table")
    d = document_to_metric(doc)
    coeffs = _parse_coeffs(args.coeffs)
    parts = args.scales.split(":")
    if len(parts) != 3:
        raise ValueError("scales must be LO:HI:STEP")
    lo, hi, step = (_parse_fraction(p) for p in parts)
    if step <= 0 or hi < lo:
        raise ValueError("scales must satisfy LO <= HI with a positive STEP")
    print("scale\t" + "\t".join(f"betti{k}" for k in range(args.max_dim)), file=out)
    q = lo
    while q <= hi:
        base = scale_base(d, q, _auto_deltas(d, q))
        report = limit_homology(base, coeffs=coeffs, max_dim=args.max_dim)
        row = [str(q)] + [str(b) for b in report.result.betti[: args.max_dim]]
        print("\t".join(row), file=out)
        q += step
    return OK


def _cmd_verify(args, out) -> int:
    config = SuiteConfig(seed=args.seed, trials=args.trials, max_dim=args.max_dim)
    verdicts = run_suite(args.suite, config)
    for v in verdicts:
        mark = "PASS" if v.passed else "FAIL"
        line = f"{mark} {v.axiom}: {v.instance}"
        if not v.passed:
            line += f" | {v.witness}"
        print(line, file=out)
    passed = sum(1 for v in verdicts if v.passed)
    print(f"{passed}/{len(verdicts)} checks passed (suite={args.suite}, seed={args.seed})",
          file=out)
    return OK if passed == len(verdicts) else FAILED


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vrips",
        description="Vietoris-Rips homology over finite semi-uniform structures",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_subset=True):
        p.add_argument("input", help="input file (csv distance table, edge list, or json)")
        p.add_argument("--format", choices=["csv", "edges", "json"],
                       help="override format sniffing by extension")
        p.add_argument("--max-dim", type=int, default=2, dest="max_dim",
                       help="enumeration cap; betti numbers are reported below it")
        p.add_argument("--coeffs", default="Z",
                       help="coefficients: Z, Q, or F<prime> (default Z)")
        p.add_argument("--reduced", action="store_true",
                       help="reduce the degree-zero rank by one")
        if with_subset:
            p.add_argument("--subset", type=int, nargs="+", metavar="POINT",
                           help="compute relative to this vertex subset")

    p_h = sub.add_parser("homology", help="homology of a distance table at one scale")
    common(p_h)
    p_h.add_argument("--scale", help="scale q (exact: 3/5 or 0.6)")
    p_h.add_argument("--delta", help="comma-separated base offsets (default: auto)")
    p_h.set_defaults(fn=_cmd_homology)

    p_g = sub.add_parser("graph", help="homology of an edge-list graph")
    common(p_g)
    p_g.set_defaults(fn=_cmd_graph)

    p_c = sub.add_parser("closure", help="homology from a closure document's cover")
    common(p_c, with_subset=False)
    p_c.add_argument("--relation", choices=["interior", "vietoris"], default="interior",
                     help="relation extracted from the cover (default interior)")
    p_c.set_defaults(fn=_cmd_closure)

    p_s = sub.add_parser("sweep", help="betti numbers across a scale range, as TSV")
    common(p_s, with_subset=False)
    p_s.add_argument("--scales", required=True, help="inclusive range LO:HI:STEP, exact")
    p_s.set_defaults(fn=_cmd_sweep)

    p_v = sub.add_parser("verify", help="run seeded axiom verification suites")
    p_v.add_argument("--suite", default="all", choices=list(SUITE_NAMES) + ["all"])
    p_v.add_argument("--seed", type=int, default=0)
    p_v.add_argument("--trials", type=int, default=20)
    p_v.add_argument("--max-dim", type=int, default=2, dest="max_dim")
    p_v.set_defaults(fn=_cmd_verify)
    return parser


def run_command(argv, out=None, err=None) -> int:
    """Parse and run one command; returns the exit code instead of exiting."""
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return BAD_INPUT if exc.code not in (0, None) else OK
    try:
        return args.fn(args, out)
    except (ParseError, ValueError, OSError, IndexError) as exc:
        print(f"error: {exc}", file=err)
        return BAD_INPUT


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
