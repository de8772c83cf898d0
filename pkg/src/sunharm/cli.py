"""Command-line front end.

Subcommands:
  verify   exact kernel computation + classification for one (n, m) case
  lemmas   the structure-check battery for one (n, m)
  sweep    verify + lemmas over a grid, primal and dual, optionally parallel

Exit codes: 0 all executed checks passed, 1 some check failed (or a sweep
was interrupted), 2 invalid configuration, 3 internal error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .verify import (
    VERSION,
    exit_code_for,
    lemmas_case,
    make_document,
    run_sweep,
    verify_case,
)

EXIT_CHECK_FAILURE = 1
EXIT_INVALID_CONFIG = 2
EXIT_INTERNAL_ERROR = 3


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sunharm",
        description=(
            "Exact verification of the joint kernel of the harmonicity"
            " constraints on su(n,1) symmetric-power cocycles."
        ),
    )
    parser.add_argument("--version", action="version", version=f"sunharm {VERSION}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="verify one (n, m) case")
    p_verify.add_argument("--n", type=int, required=True)
    p_verify.add_argument("--m", type=int, required=True)
    p_verify.add_argument("--dual", action="store_true", help="use the dual representation")
    p_verify.add_argument("--json", metavar="PATH", help="write the report document here")
    p_verify.add_argument(
        "--all-lemmas",
        action="store_true",
        help="also run the full structure-check battery for this case",
    )

    p_lemmas = sub.add_parser("lemmas", help="run the structure-check battery")
    p_lemmas.add_argument("--n", type=int, required=True)
    p_lemmas.add_argument("--m", type=int, required=True)
    p_lemmas.add_argument("--json", metavar="PATH")

    p_sweep = sub.add_parser("sweep", help="verify + lemmas over a grid")
    p_sweep.add_argument("--n-max", type=int, default=None)
    p_sweep.add_argument("--m-max", type=int, default=None)
    p_sweep.add_argument("--jobs", type=int, default=1, help="parallel case workers")
    p_sweep.add_argument("--json", metavar="PATH")
    return parser


def _validate_case(n: int, m: int) -> str | None:
    if n < 1:
        return "n must be >= 1"
    if m < 1:
        return "m must be >= 1"
    return None


def _render_case(case: dict, out) -> None:
    c = case["case"]
    side = "dual" if c["dual"] else "primal"
    mode = case.get("mode", "")
    header = f"case n={c['n']} m={c['m']} {side} [{mode}]"
    if case.get("status") == "incomplete":
        print(f"{header}: INCOMPLETE", file=out)
        return
    print(header, file=out)
    if "kernel" in case:
        k = case["kernel"]
        exp = k["expected_dimension"]
        exp_text = "n/a" if exp is None else str(exp)
        print(
            f"  kernel dimension {k['dimension']} (expected {exp_text});"
            f" system {case['system']['rows']}x{case['system']['columns']}",
            file=out,
        )
    if "riemann" in case:
        r = case["riemann"]
        print(
            f"  split: complex-linear {r['complex_linear_dim']},"
            f" conjugate-linear {r['conjugate_linear_dim']}",
            file=out,
        )
    for chk in case.get("checks", []):
        print(f"  [{chk['status'].upper():7s}] {chk['name']}: {chk['details']}", file=out)
    for chk in case.get("lemmas", []):
        j = chk.get("j")
        jtext = "" if j is None else f" (j={j})"
        print(
            f"  [{chk['status'].upper():7s}] {chk['name']}{jtext}: {chk['details']}",
            file=out,
        )


def _finish(doc: dict, json_path: str | None, out) -> int:
    for case in doc["cases"]:
        _render_case(case, out)
    s = doc["summary"]
    print(
        f"summary: {s['cases']} case(s), {s['checks_passed']} passed,"
        f" {s['checks_failed']} failed, {s['checks_vacuous']} vacuous",
        file=out,
    )
    if json_path:
        with open(json_path, "w", encoding="utf-8") as fh:
            json.dump(doc, fh, indent=2, sort_keys=False)
            fh.write("\n")
        print(f"report written to {json_path}", file=out)
    return exit_code_for(doc)


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    out = sys.stdout
    try:
        if args.command == "verify":
            msg = _validate_case(args.n, args.m)
            if msg:
                print(f"invalid configuration: {msg}", file=sys.stderr)
                return EXIT_INVALID_CONFIG
            case = verify_case(args.n, args.m, dual=args.dual, with_lemmas=args.all_lemmas)
            doc = make_document(
                "verify",
                {"n": args.n, "m": args.m, "dual": args.dual, "all_lemmas": args.all_lemmas},
                [case],
            )
            return _finish(doc, args.json, out)
        if args.command == "lemmas":
            msg = _validate_case(args.n, args.m)
            if msg:
                print(f"invalid configuration: {msg}", file=sys.stderr)
                return EXIT_INVALID_CONFIG
            case = lemmas_case(args.n, args.m)
            doc = make_document("lemmas", {"n": args.n, "m": args.m}, [case])
            return _finish(doc, args.json, out)
        if args.command == "sweep":
            if args.jobs < 1:
                print("invalid configuration: --jobs must be >= 1", file=sys.stderr)
                return EXIT_INVALID_CONFIG
            try:
                doc = run_sweep(args.n_max, args.m_max, jobs=args.jobs)
            except ValueError as exc:
                print(f"invalid configuration: {exc}", file=sys.stderr)
                return EXIT_INVALID_CONFIG
            return _finish(doc, args.json, out)
        raise RuntimeError("unreachable")
    except (ValueError,) as exc:
        print(f"invalid configuration: {exc}", file=sys.stderr)
        return EXIT_INVALID_CONFIG
    except Exception as exc:  # pragma: no cover - defensive
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL_ERROR


if __name__ == "__main__":
    raise SystemExit(main())
