"""Command-line front end.

Exit codes: 0 success or verified, 1 computed and false, 2 usage error,
3 budget exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys

from . import acceptance, codes, designs, search, weights
from .acceptance import field_key
from .field import FieldCtx, FieldError, build_field, extension, parse_field, prime_power, tower_chain
from .poly import PolyError

EXIT_OK, EXIT_FALSE, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3

_BCH = re.compile(r"^bch:(?P<params>[^:]+)$")


class SpecError(ValueError):
    pass


def _field_from_order(text: str) -> FieldCtx:
    try:
        return parse_field(text)
    except (FieldError, ValueError) as exc:
        raise SpecError(f"bad field {text!r}: {exc}") from exc


def _subfield_of(F: FieldCtx, order: int) -> FieldCtx:
    for G in tower_chain(F):
        if G.order == order:
            return G
    p, m = prime_power(order)
    if p != F.p or F.abs_degree % m:
        raise SpecError(f"GF({order}) is not a subfield of GF({F.order})")
    return build_field(p, m)


def parse_code_spec(spec: str) -> codes.LinearCode:
    """Build a code from strings such as ``subfield:2:bch:q=2^4,n=17,delta=3,h=1``."""
    spec = spec.strip()
    if spec.startswith("dual:"):
        return codes.dual(parse_code_spec(spec[5:]))
    if spec.startswith("extend:"):
        return codes.extend(parse_code_spec(spec[7:]))
    if spec.startswith("subfield:") or spec.startswith("lift:"):
        head, _, rest = spec.partition(":")
        arg, sep, inner = rest.partition(":")
        if not sep:
            raise SpecError(f"missing inner code in {spec!r}")
        code = parse_code_spec(inner)
        target = _field_from_order(arg)
        if head == "subfield":
            return codes.subfield_subcode(code, _subfield_of(code.field, target.order))
        p, m = prime_power(target.order)
        if p != code.field.p or m % code.field.abs_degree:
            raise SpecError(f"GF({target.order}) does not extend GF({code.q})")
        return codes.lift(code, extension(code.field, m // code.field.abs_degree))
    match = _BCH.match(spec)
    if not match:
        raise SpecError(f"unrecognised code spec {spec!r}")
    params = {}
    for item in match["params"].split(","):
        key, eq, value = item.partition("=")
        if not eq:
            raise SpecError(f"expected key=value, got {item!r}")
        params[key.strip()] = value.strip()
    unknown = set(params) - {"q", "n", "delta", "h"}
    missing = {"q", "n", "delta"} - set(params)
    if unknown or missing:
        raise SpecError(f"bch spec: unknown keys {sorted(unknown)}, missing {sorted(missing)}")
    F = _field_from_order(params["q"])
    try:
        n, delta, h = int(params["n"]), int(params["delta"]), int(params.get("h", 1))
    except ValueError as exc:
        raise SpecError(str(exc)) from exc
    return codes.bch(F, n, delta, h)


# ---------------------------------------------------------------------------
# output

def _emit(obj: dict, fmt: str, rows: list[list] | None = None, text: str | None = None) -> None:
    if fmt == "json":
        out = {"schema": 1, **obj}
        print(json.dumps(out, sort_keys=True, indent=2))
    elif fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        for row in rows if rows is not None else sorted((k, json.dumps(v, sort_keys=True)) for k, v in obj.items()):
            w.writerow(row)
        sys.stdout.write(buf.getvalue())
    else:
        print(text if text is not None else "\n".join(f"{k}: {v}" for k, v in sorted(obj.items())))


def _fields(*fs: FieldCtx) -> dict:
    return {field_key(F): F.describe() for F in fs}


# ---------------------------------------------------------------------------
# commands

def cmd_code(args) -> int:
    code = parse_code_spec(args.code)
    d = search.min_distance(code, budget=args.budget)
    obj = {"code": args.code, "n": code.n, "k": code.k, "q": code.q, "d": d,
           "label": code.label, "fields": _fields(code.field)}
    if code.gen_poly is not None:
        obj["generator_polynomial"] = code.gen_poly.to_json()
    _emit(obj, args.format, text=f"{args.code}: [{code.n}, {code.k}, {d}] over GF({code.q})")
    return EXIT_OK


def cmd_weights(args) -> int:
    code = parse_code_spec(args.code)
    wd, method = weights.weight_distribution(code, args.budget, args.workers)
    obj = {"code": args.code, "n": code.n, "k": code.k, "q": code.q, "method": method,
           "distribution": wd.to_json(), "fields": _fields(code.field)}
    rows = [["weight", "count"]] + [[i, c] for i, c in enumerate(wd.counts)]
    text = " + ".join(f"{c}z^{i}" if i else str(c) for i, c in wd.as_dict().items())
    _emit(obj, args.format, rows, f"{args.code} ({method}): {text}")
    return EXIT_OK


def cmd_design(args) -> int:
    if args.weight is None or args.t is None:
        raise SpecError("design needs --weight and --t")
    code = parse_code_spec(args.code)
    D = designs.support_design(code, args.weight, args.budget, args.workers)
    if D.b == 0:
        chk = designs.DesignCheck(args.t, False, None)
    else:
        chk = designs.verify_t_design(D, args.t, args.budget, args.workers)
    obj = {"code": args.code, "weight": args.weight, "check": chk.to_json(),
           "design": D.to_json(), "b": D.b, "fields": _fields(code.field)}
    if chk.is_t_design:
        verdict = f"{args.t}-({D.v},{D.k},{chk.lam}) design with {D.b} blocks"
    else:
        verdict = f"not a {args.t}-design ({D.b} blocks)"
    rows = [["key", "value"], ["v", D.v], ["k", D.k], ["b", D.b], ["t", args.t],
            ["is_t_design", chk.is_t_design], ["lambda", chk.lam]]
    _emit(obj, args.format, rows, verdict)
    return EXIT_OK if chk.is_t_design else EXIT_FALSE


def cmd_paper_report(args) -> int:
    results = []
    for num, *_ in acceptance.CRITERIA:
        r = acceptance.run_criterion(num, args.workers, args.long_tests)
        print(r.line(), file=sys.stderr)
        results.append(r)
    rep = acceptance.report(results)
    rows = [["criterion", "title", "skipped", "passed"]] + [
        [r.number, r.title, r.skipped, r.passed] for r in results]
    text = "\n".join(f"{'SKIP' if r.skipped else 'PASS' if r.passed else 'FAIL'} {r.number}. {r.title}"
                     for r in results)
    _emit(rep, args.format, rows, text)
    return EXIT_OK if rep["all_passed"] else EXIT_FALSE


COMMANDS = {"code": cmd_code, "weights": cmd_weights, "design": cmd_design, "paper-report": cmd_paper_report}


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="nmds", description="NMDS codes, weight distributions and their designs.")
    parser.add_argument("command", choices=sorted(COMMANDS))
    parser.add_argument("--code", help="code spec, e.g. bch:q=3^2,n=10,delta=3,h=1")
    parser.add_argument("--weight", type=int, help="codeword weight for design extraction")
    parser.add_argument("--t", type=int, help="design strength to verify")
    parser.add_argument("--budget", type=_positive, default=None,
                        help="cap on enumerated messages or subsets (default: $NMDS_BUDGET or 2^26)")
    parser.add_argument("--workers", type=_positive, default=1)
    parser.add_argument("--format", choices=["json", "csv", "text"], default="json")
    parser.add_argument("--long-tests", action="store_true", help="include the q=81 and q=64 items in paper-report")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if args.budget is None:
        args.budget = weights.default_budget()
    if args.command != "paper-report" and not args.code:
        print(f"nmds {args.command}: --code is required", file=sys.stderr)
        return EXIT_USAGE
    try:
        return COMMANDS[args.command](args)
    except weights.BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (SpecError, codes.CodeError, FieldError, PolyError, designs.DesignError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
