"""Command-line front end.

Exit codes: 0 success (a negative mathematical verdict is still success),
1 a `paper-examples` claim failed, 2 invalid input, 3 internal invariant breach.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from .artinian import IdealGenerators, NotArtinianError, hilbert_function
from .concordance import FuzzSpec, concord, fuzz
from .golden import run_claims
from .lefschetz import wlp_check
from .pencil import CommonZeroError, SplittingError, splitting_type
from .qpoly import NotHomogeneousError, PolynomialSyntaxError, parse_polynomial
from .report import Report
from .stability import monomial_semistable

EXIT_OK, EXIT_CLAIM_FAILED, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2, 3


class InputError(Exception):
    pass


class InvariantBreach(Exception):
    pass


def read_generator_file(path: str) -> list[str]:
    out = []
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            out.append(line)
    return out


def parse_range(text: str, single=lambda v: (v, v)):
    """``"2-5"`` -> (2, 5); a bare ``"5"`` goes through ``single``."""
    try:
        if "-" in text:
            lo, hi = text.split("-", 1)
            return int(lo), int(hi)
        return single(int(text))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or A-B, got {text!r}")


def _global_flags() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--seed", type=int, default=0, help="RNG seed (default 0)")
    p.add_argument("--bound", type=int, default=1000, help="coefficient bound for random lines/forms")
    p.add_argument("--samples", type=int, default=3, help="lines sampled for splitting types")
    p.add_argument("--json", action="store_true", help="print the JSON report")
    return p


def _generator_flags() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("-f", dest="polys", action="append", default=[], metavar="POLY", help="generator (repeatable)")
    p.add_argument("--file", help="file with one generator per line, '#' comments")
    p.add_argument("--trials", type=int, default=3, help="random linear forms for the WLP test")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="syzlef", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    common, gens = _global_flags(), _generator_flags()
    sub.add_parser("hilbert", parents=[common, gens], help="Hilbert function of R/I")
    sub.add_parser("wlp", parents=[common, gens], help="Weak Lefschetz property of R/I")
    sub.add_parser("split", parents=[common, gens], help="generic splitting type of Syz(f_1..f_n)")
    stable = sub.add_parser("stable", parents=[common, gens], help="semistability of a monomial syzygy bundle")
    stable.add_argument("--strict", action="store_true", help="test stability instead of semistability")
    stable.add_argument("--audit", action="store_true", help="include every subset slope")
    sub.add_parser("concord", parents=[common, gens], help="cross-check WLP, splitting type and stability")
    fz = sub.add_parser("fuzz", parents=[common], help="random concordance checks")
    fz.add_argument("--kind", choices=("monomial", "dense", "mixed"), default="monomial")
    fz.add_argument("--n", type=parse_range, default=(4, 4), help="generator count, N or A-B")
    fz.add_argument(
        "--deg",
        type=lambda t: parse_range(t, single=int),
        default=5,
        help="degree range A-B; a bare N means degrees <= N (monomial, mixed) or exactly N (dense)",
    )
    fz.add_argument("--trials", type=int, default=100, help="number of random ideals")
    fz.add_argument("--wlp-trials", type=int, default=3, help="random linear forms per WLP test")
    sub.add_parser("paper-examples", parents=[common], help="replay the worked examples")
    return parser


def load_ideal(args) -> tuple[IdealGenerators, list[str]]:
    texts = list(args.polys)
    if args.file:
        try:
            texts += read_generator_file(args.file)
        except OSError as exc:
            raise InputError(f"cannot read {args.file}: {exc}")
    if not texts:
        raise InputError("no generators given (use -f POLY or --file)")
    try:
        polys = tuple(parse_polynomial(t) for t in texts)
        return IdealGenerators(polys), [str(p) for p in polys]
    except (PolynomialSyntaxError, NotHomogeneousError, ValueError) as exc:
        raise InputError(str(exc))


# ----------------------------------------------------------------------------
# text rendering


def table(headers: Sequence[str], rows: Sequence[Sequence]) -> str:
    cells = [[str(h) for h in headers]] + [[str(c) for c in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(headers))]
    lines = ["  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines)


def render_text(report: Report) -> str:
    r = report.result_dict()
    head = f"ideal: ({', '.join(report.input)})" if report.input else ""
    kind = report.kind
    if kind == "hilbert":
        body = table(["m", "dim A_m"], list(enumerate(r["values"])))
        body += f"\nsocle degree: {r['socle_degree']}   status: {r['status']}"
    elif kind == "wlp":
        body = table(
            ["m", "dim A_m", "dim A_m+1", "rank", "maximal"],
            [(x["degree"], x["dim_source"], x["dim_target"], x["rank"], "yes" if x["maximal"] else "NO") for x in r["records"]],
        )
        body += f"\nWLP: {'yes' if r['verdict'] else 'no'}"
        if r["failing_degrees"]:
            body += f"   failing degrees: {', '.join(map(str, r['failing_degrees']))}"
        forms = ", ".join("(" + ", ".join(s["form"]) + ")" for s in r["sampled_forms"])
        body += f"\nsampled forms (u, v, w): {forms}"
    elif kind == "split":
        body = table(["line (u, v)", "twists"], [(tuple(l), tuple(t)) for l, t in zip(r["lines_sampled"], r["per_line"])])
        body += f"\ngeneric splitting: {' + '.join(f'O({a})' for a in r['twists'])}"
        body += f"\ngap a_1 - a_(n-1): {r['gap']}   largest step: {r['max_step']}"
    elif kind == "stable":
        body = f"degree {r['total_degree']}, slope {r['slope']}\nstatus: {r['status']}"
        if r["witness"]:
            w = r["witness"]
            body += f"\nwitness: generators {w['indices']}, gcd degree {w['gcd_degree']}, degree {w['degree']}, slope {w['slope']}"
        if r["all_subset_slopes"]:
            body += "\n" + table(
                ["subset", "gcd deg", "degree", "slope"],
                [(s["indices"], s["gcd_degree"], s["degree"], s["slope"]) for s in r["all_subset_slopes"]],
            )
    elif kind == "concord":
        body = (
            f"Hilbert function: {r['hilbert']}\nWLP: {r['wlp']}   failing degrees: {r['failing_degrees']}\n"
            f"splitting: {r['twists']}   gap {r['gap']}   largest step {r['max_step']}\nstability: {r['stability']}\n"
        )
        body += table(
            ["rule", "applicable", "satisfied"],
            [(c["rule"], c["applicable"], c["satisfied"] if c["applicable"] else "-") for c in r["checks"]],
        )
    elif kind == "fuzz":
        body = (
            f"kind {r['kind']}, n {r['n_range']}, degrees {r['degree_range']}, trials {r['trials']}, seed {r['seed']}\n"
            f"tested {r['tested']}, skipped non-Artinian {r['skipped_non_artinian']}, WLP {r['wlp_true']}, gap <= 1 {r['gap_le_1']}\n"
        )
        body += table(
            ["rule", "applicable", "satisfied", "skipped"],
            [(k, v["applicable"], v["satisfied"], v["skipped"]) for k, v in r["rules"].items()],
        )
        for line in r["violations"]:
            body += f"\nVIOLATION: {line}"
    else:
        body = "\n".join(c["line"] for c in r["claims"])
        body += f"\n{r['passed']}/{r['total']} claims passed"
    return (head + "\n" if head else "") + body + "\n"


# ----------------------------------------------------------------------------


def execute(args, argv: Sequence[str]) -> tuple[Report, int]:
    cmd = args.command
    inputs: list[str] = []
    code = EXIT_OK
    if cmd in ("hilbert", "wlp", "split", "stable", "concord"):
        ideal, inputs = load_ideal(args)
    try:
        if cmd == "hilbert":
            result = hilbert_function(ideal, strict=True)
        elif cmd == "wlp":
            result = wlp_check(ideal, trials=args.trials, bound=args.bound, seed=args.seed)
        elif cmd == "split":
            result = splitting_type(ideal, samples=args.samples, bound=args.bound, seed=args.seed)
            if sum(result.twists) != -sum(ideal.degrees):
                raise InvariantBreach(f"twists {result.twists} do not sum to {-sum(ideal.degrees)}")
        elif cmd == "stable":
            if not ideal.is_monomial:
                raise InputError("semistability is only decided for monomial ideals")
            result = monomial_semistable(ideal, strict=args.strict, audit=args.audit)
        elif cmd == "concord":
            result = concord(ideal, trials=args.trials, bound=args.bound, samples=args.samples, seed=args.seed)
            if result.violations:
                code = EXIT_INTERNAL
        elif cmd == "fuzz":
            deg = args.deg
            if isinstance(deg, int):
                deg = (deg, deg) if args.kind == "dense" else (1, deg)
            spec = FuzzSpec(args.kind, args.n, deg, args.trials, args.seed, args.wlp_trials, args.bound, args.samples)
            summary = fuzz(spec)
            result = summary.to_dict()
            if not summary.ok:
                code = EXIT_INTERNAL
        else:
            claims = run_claims(seed=args.seed)
            result = {
                "claims": [
                    {"number": c.number, "name": c.name, "passed": c.passed, "detail": c.detail, "line": c.line()}
                    for c in claims
                ],
                "passed": sum(c.passed for c in claims),
                "total": len(claims),
            }
            if result["passed"] != result["total"]:
                code = EXIT_CLAIM_FAILED
    except NotArtinianError as exc:
        raise InputError(str(exc))
    except CommonZeroError as exc:
        raise InputError(str(exc))
    except SplittingError as exc:
        raise InvariantBreach(str(exc))
    except ValueError as exc:
        raise InputError(str(exc))
    return Report(tuple(argv), tuple(inputs), cmd, result, args.seed), code


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        report, code = execute(args, argv)
    except InputError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_INPUT
    except InvariantBreach as exc:
        print(f"internal invariant breach: {exc}", file=err)
        return EXIT_INTERNAL
    out.write(report.to_json() if args.json else render_text(report))
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
