"""Command-line front end.

Field elements are written as canonical integers (base-p digits of the
z-polynomial, digit i is the coefficient of z^i).  Positions and witness
indices are 0-based: position j is the j-th entry of ``alpha`` counting
from zero.

Exit status is 0 on success and on a decode failure (the reason is
printed), 2 on a usage, I/O or validation error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Sequence

from .channel import TrialConfig, run_trials, scaling_csv, scaling_run
from .code import CodeKind, TGRSCode
from .decoder import DecodeSuccess, Variant, decode, params_for
from .gf import GF

INDEXING_NOTE = (
    "Elements are canonical integers (base-p digits, digit i = coefficient "
    "of z^i). All positions and witness indices are 0-based."
)


class UsageError(ValueError):
    pass


def _parse_csv_ints(text: str, what: str) -> list[int]:
    try:
        return [int(tok) for tok in text.replace(" ", "").split(",") if tok != ""]
    except ValueError:
        raise UsageError(f"{what}: expected comma-separated integers, got {text!r}") from None


def _parse_field(text: str) -> GF:
    """``p`` or ``p^m``, e.g. ``2^9``."""
    try:
        p, _, m = text.partition("^")
        return GF(int(p), int(m) if m else 1)
    except ValueError as exc:
        raise UsageError(f"--field: {exc}") from None


def _load_code(path: str) -> TGRSCode:
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read spec {path!r}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise UsageError(f"spec {path!r} is not valid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise UsageError(f"spec {path!r} must be a JSON object")
    for key in ("field", "k", "hook", "eta", "alpha"):
        if key not in doc:
            raise UsageError(f"spec {path!r} is missing {key!r}")
    if "n" in doc and doc["n"] != len(doc["alpha"]):
        raise UsageError(f"spec {path!r}: n = {doc['n']} but alpha has {len(doc['alpha'])} entries")
    try:
        return TGRSCode.from_dict(doc)
    except (KeyError, TypeError) as exc:
        raise UsageError(f"spec {path!r} is malformed: {exc}") from None


def _emit_json(obj: dict) -> None:
    print(json.dumps(obj))


def _fmt(values, pretty: bool) -> str:
    if pretty:
        return "(" + ", ".join(v.pretty() for v in values) + ")"
    return ",".join(str(int(v)) for v in values)


def cmd_classify(args) -> int:
    code = _load_code(args.spec)
    cls = code.classify()
    if args.json:
        _emit_json({"class": cls.kind.value, "witness": list(cls.witness) if cls.witness else None,
                    "indexing": "0-based"})
    elif cls.kind is CodeKind.MDS:
        print("MDS")
    else:
        print("NMDS witness=[" + ",".join(map(str, cls.witness)) + "]")
    return 0


def cmd_encode(args) -> int:
    code = _load_code(args.spec)
    if args.message is None:
        raise UsageError("encode needs --message")
    msg = _parse_csv_ints(args.message, "--message")
    if len(msg) != code.k:
        raise UsageError(f"--message has {len(msg)} symbols, k = {code.k}")
    word = code.encode(msg)
    if args.json:
        _emit_json({"message": msg, "codeword": [int(v) for v in word]})
    else:
        print(_fmt(word, args.pretty))
    return 0


def cmd_decode(args) -> int:
    code = _load_code(args.spec)
    if args.received is None:
        raise UsageError("decode needs --received")
    y = _parse_csv_ints(args.received, "--received")
    if len(y) != code.n:
        raise UsageError(f"--received has {len(y)} symbols, n = {code.n}")
    params = params_for(code, args.variant)
    out = decode(code, y, params)
    if args.json:
        doc = {"variant": params.variant.value, "radius": params.radius}
        if isinstance(out, DecodeSuccess):
            doc.update(
                status="success",
                codeword=[int(v) for v in out.codeword],
                message=[int(v) for v in out.message],
                error_positions=list(out.error_positions),
                error_values=[int(v) for v in out.error_values],
            )
        else:
            doc.update(status="failure", reason=out.reason.value)
        doc["indexing"] = "0-based"
        _emit_json(doc)
    elif isinstance(out, DecodeSuccess):
        print("status=success")
        print(f"codeword={_fmt(out.codeword, args.pretty)}")
        print(f"message={_fmt(out.message, args.pretty)}")
        print("errors=[" + ",".join(map(str, out.error_positions)) + "]")
        print(f"error_values={_fmt(out.error_values, args.pretty)}")
    else:
        print("status=failure")
        print(f"reason={out.reason.value}")
    return 0


def cmd_simulate(args) -> int:
    code = _load_code(args.spec)
    cfg = TrialConfig(code, args.trials, args.weight, args.seed)
    report = run_trials(cfg)
    if args.json:
        _emit_json(report.to_dict())
    else:
        print(report.to_text())
    return 0


def cmd_scaling(args) -> int:
    try:
        rate = Fraction(args.rate)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"--rate: cannot parse {args.rate!r}") from None
    if not 0 < rate < 1:
        raise UsageError("--rate must lie strictly between 0 and 1")
    sizes = _parse_csv_ints(args.sizes, "--sizes")
    rows = scaling_run(rate, sizes, _parse_field(args.field), args.seed, trials=args.trials)
    sys.stdout.write(scaling_csv(rows))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tgrs",
        description="Twisted Reed-Solomon codes with one twist: classify, encode, decode, simulate.",
        epilog=INDEXING_NOTE,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, spec=True):
        if spec:
            p.add_argument("--spec", required=True, metavar="PATH", help="JSON code spec")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.add_argument("--pretty", action="store_true", help="show elements as polynomials in z")

    p = sub.add_parser("classify", help="MDS or NMDS (with a 0-based witness subset)", epilog=INDEXING_NOTE)
    common(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("encode", help="encode a message", epilog=INDEXING_NOTE)
    common(p)
    p.add_argument("--message", metavar="CSV", help="k canonical integers")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", help="decode a received word", epilog=INDEXING_NOTE)
    common(p)
    p.add_argument("--received", metavar="CSV", help="n canonical integers")
    p.add_argument(
        "--variant",
        choices=[v.value for v in Variant],
        help="decoder parameters (default: from the code's class and the parity of n-k)",
    )
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("simulate", help="seeded exact-weight error trials", epilog=INDEXING_NOTE)
    common(p)
    p.add_argument("--trials", type=int, default=100, metavar="N")
    p.add_argument("--weight", type=int, default=None, metavar="W", help="error weight (default: radius)")
    p.add_argument("--seed", type=int, default=0, metavar="S")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("scaling", help="decode time versus n, as CSV")
    common(p, spec=False)
    p.add_argument("--rate", default="1/2", metavar="R", help="k/n, e.g. 1/2 or 0.5")
    p.add_argument("--sizes", default="32,64,128,256", metavar="CSV")
    p.add_argument("--seed", type=int, default=0, metavar="S")
    p.add_argument("--trials", type=int, default=20, metavar="N")
    p.add_argument("--field", default="2^9", metavar="P^M", help="field for the random codes")
    p.set_defaults(func=cmd_scaling)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "simulate" and args.weight is None:
            args.weight = params_for(_load_code(args.spec)).radius
        return args.func(args)
    except (ValueError, ArithmeticError) as exc:
        print(f"tgrs {args.command}: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
