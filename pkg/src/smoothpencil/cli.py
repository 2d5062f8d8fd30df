"""Command line entry point.  Every command prints one JSON document.

Exit codes: 0 pass, 1 fail, 2 usage error, 3 inconclusive.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import __version__
from .bounds import bound_report
from .constructions import construct_report
from .gf import field_from_spec
from .incidence import check_bounds, find_avoiding_line, profile
from .linsys import DEFAULT_SEARCH_CAP, LinearSystem, search_all_smooth, verify_all_smooth
from .mpoly import parse_form
from .repro import TARGETS
from .smoothness import DEFAULT_WORK_CAP, INCONCLUSIVE, brute_is_smooth, is_smooth

EXIT_PASS, EXIT_FAIL, EXIT_USAGE, EXIT_INCONCLUSIVE = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _field(args):
    try:
        return field_from_spec(args.field)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _form(text, ctx, nvars=None):
    try:
        return parse_form(text, ctx, nvars=nvars)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def cmd_smooth_check(args):
    ctx = _field(args)
    F = _form(args.form, ctx, args.nvars)
    if args.bound is not None and args.oracle in ("auto", "brute"):
        v = brute_is_smooth(F, args.bound, work_cap=args.work_cap, threads=args.threads)
    elif args.oracle == "brute":
        v = brute_is_smooth(F, work_cap=args.work_cap, threads=args.threads)
    else:
        v = is_smooth(F, args.oracle)
    code = EXIT_INCONCLUSIVE if v.status == INCONCLUSIVE else EXIT_PASS
    return {"form": F.to_text(), "verdict": v.to_dict()}, code


def cmd_pencil_verify(args):
    ctx = _field(args)
    with open(args.forms) as fh:
        texts = json.load(fh)
    if not isinstance(texts, list) or not texts:
        raise UsageError("forms file must hold a nonempty JSON array of strings")
    forms = [_form(t, ctx, args.nvars) for t in texts]
    nv = max(f.nvars for f in forms)
    forms = [_form(t, ctx, nv) for t in texts]
    try:
        S = LinearSystem.of(forms)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    rep = verify_all_smooth(S, args.oracle, exhaustive=args.exhaustive, threads=args.threads)
    code = {"all_smooth": EXIT_PASS, "singular_member": EXIT_FAIL}.get(rep.status, EXIT_INCONCLUSIVE)
    return {"generators": [g.to_text() for g in S.generators], "report": rep.to_dict()}, code


def cmd_pencil_search(args):
    ctx = _field(args)
    strategy = "exhaustive" if args.exhaustive else "random"
    try:
        res = search_all_smooth(ctx, args.n, args.d, args.r, strategy, seed=args.seed,
                                max_trials=args.trials, cap=args.cap, threads=args.threads)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    return res.to_dict(), EXIT_PASS if res.systems else EXIT_FAIL


def cmd_incidence(args):
    ctx = _field(args)
    C = _form(args.form, ctx, 3)
    prof = profile(C, threads=args.threads)
    bc = check_bounds(prof)
    out = prof.to_dict()
    out.update(hasse_weil_ok=bc.hasse_weil_ok, t0_bound=str(bc.lower_t0), t0_bound_ok=bc.t0_bound_ok)
    return out, EXIT_PASS if prof.identities_ok else EXIT_FAIL


def cmd_avoid_line(args):
    ctx = _field(args)
    C = _form(args.form, ctx, 3)
    L = find_avoiding_line(C, threads=args.threads)
    return {"line": str(L) if L is not None else None}, EXIT_PASS if L is not None else EXIT_FAIL


def cmd_construct(args):
    ctx = _field(args)
    out = construct_report(ctx)
    return out, EXIT_PASS if out["all_smooth"] and out["det_factorization_ok"] else EXIT_FAIL


def cmd_bound(args):
    try:
        out = bound_report(args.n, args.d, args.q)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    return out, EXIT_PASS if out.get("q_passes", True) else EXIT_FAIL


def cmd_repro(args):
    kwargs = {"threads": args.threads}
    if args.target == "incidence-53":
        kwargs["seed"] = args.seed
    out = TARGETS[args.target](**kwargs)
    return out, EXIT_PASS if out["pass"] else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--threads", type=int, default=1,
                        help="worker threads; never changes the output")
    common.add_argument("--timing", action="store_true",
                        help="add wall time to the manifest (breaks byte-identical output)")

    def with_field(p):
        p.add_argument("--field", required=True, help='field size "q" or "p^r"')

    parser = argparse.ArgumentParser(prog="smoothpencil", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("smooth-check", parents=[common], help="smoothness verdict for one form")
    with_field(p)
    p.add_argument("--form", required=True)
    p.add_argument("--nvars", type=int)
    p.add_argument("--bound", type=int, help="extension bound B for the search oracle")
    p.add_argument("--oracle", choices=["auto", "quadric", "brute", "macaulay"], default="auto")
    p.add_argument("--work-cap", type=int, default=DEFAULT_WORK_CAP)
    p.set_defaults(func=cmd_smooth_check)

    p = sub.add_parser("pencil-verify", parents=[common], help="check every F_q-member of a system")
    with_field(p)
    p.add_argument("--forms", required=True, help="JSON file with an array of form strings")
    p.add_argument("--nvars", type=int)
    p.add_argument("--oracle", choices=["auto", "quadric", "brute", "macaulay"], default="auto")
    p.add_argument("--exhaustive", action="store_true", help="check all members instead of stopping early")
    p.set_defaults(func=cmd_pencil_verify)

    p = sub.add_parser("pencil-search", parents=[common], help="search for all-smooth systems")
    with_field(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--exhaustive", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=10_000)
    p.add_argument("--cap", type=int, default=DEFAULT_SEARCH_CAP)
    p.set_defaults(func=cmd_pencil_search)

    p = sub.add_parser("incidence", parents=[common], help="line incidence profile of a plane curve")
    with_field(p)
    p.add_argument("--form", required=True)
    p.set_defaults(func=cmd_incidence)

    p = sub.add_parser("avoid-line", parents=[common], help="first line missing every F_q-point")
    with_field(p)
    p.add_argument("--form", required=True)
    p.set_defaults(func=cmd_avoid_line)

    p = sub.add_parser("construct", parents=[common], help="explicit all-smooth quadric pencil")
    with_field(p)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("bound", parents=[common], help="threshold on q for given (n, d)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--q", type=int)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("repro", parents=[common], help="rerun a reference computation")
    p.add_argument("target", choices=sorted(TARGETS))
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_repro)
    return parser


def _manifest(args):
    params = {k: v for k, v in sorted(vars(args).items())
              if k not in ("func", "command", "field", "seed", "work_cap", "cap", "timing", "threads")}
    return {"command": args.command, "field": getattr(args, "field", None), "parameters": params,
            "seed": getattr(args, "seed", None),
            "work_cap": getattr(args, "work_cap", getattr(args, "cap", None)),
            "version": __version__}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_PASS
    start = time.perf_counter()
    try:
        result, code = args.func(args)
    except (UsageError, FileNotFoundError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    manifest = _manifest(args)
    if args.timing:
        manifest["wall_time"] = round(time.perf_counter() - start, 3)
    print(json.dumps({"manifest": manifest, "result": result}, indent=2))
    return code


if __name__ == "__main__":
    sys.exit(main())
