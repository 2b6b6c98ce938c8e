"""
Command-line front end.

Exit codes: 0 on success, 1 when a verification suite fails, 2 on a usage
or input error.

>>> main(["pkl", "--weight", "1,1", "--u", "-1", "--tau", "1,2", "--sigma", "2,1"])
P = 1
0
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .combinatorics import format_sequence, parabolic_context, parse_permutation, parse_sequence
from .errors import KLError
from .grassmann import coefficient_c, h_exponent, is_controlled, normalize_pair
from .hecke import UParam, classical_kl, parabolic_kl
from .sl2 import to_word
from .tensor import canonical_basis, dual_canonical_basis
from .verify import SUITES, run_suite

EXIT_OK, EXIT_FAILED, EXIT_INPUT = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_INPUT)


def _weight(text: str) -> tuple[int, ...]:
    try:
        parts = tuple(int(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed weight {text!r}; expected e.g. 2,2") from None
    if not parts or any(p < 0 for p in parts):
        raise argparse.ArgumentTypeError(f"weight entries must be nonnegative: {text!r}")
    return parts


def _u(text: str) -> UParam:
    try:
        return UParam.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="klcanon", description="Kazhdan-Lusztig polynomials and canonical bases of tensor powers.")
    parser.add_argument("--format", choices=("text", "json"), default="text", help="output format")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    kl = sub.add_parser("kl", help="ordinary KL polynomial P_{y,w} of S_n")
    kl.add_argument("--n", type=int, required=True)
    kl.add_argument("--y", required=True, help="permutation in one-line notation, e.g. 1,3,2,4")
    kl.add_argument("--w", required=True)

    pkl = sub.add_parser("pkl", help="parabolic KL polynomial P^J_{tau,sigma}")
    pkl.add_argument("--weight", type=_weight, required=True, help="multiplicities m1,...,mk")
    pkl.add_argument("--u", type=_u, required=True, help="-1 or q (= v^-2)")
    pkl.add_argument("--tau", required=True)
    pkl.add_argument("--sigma", required=True)

    for name, help_ in (("canonical", "canonical basis vector b_I"),
                        ("dual-canonical", "dual canonical basis vector b^I")):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--k", type=int, required=True)
        p.add_argument("--word", required=True, help="+- word for k=2, else comma-separated entries")

    g = sub.add_parser("grassmann", help="coefficient c(I,J) by the local recursion")
    g.add_argument("--I", dest="I", required=True, help="+- word")
    g.add_argument("--J", dest="J", required=True, help="+- word of the same weight")

    v = sub.add_parser("verify", help="run cross-verification suites")
    v.add_argument("--suite", choices=(*SUITES, "all"), default="all")
    v.add_argument("--max-n", type=int, default=6)
    return parser


def _emit(args, payload: dict, text: str):
    if args.format == "json":
        print(json.dumps(payload, sort_keys=False))
    else:
        print(text)


def _cmd_kl(args) -> int:
    y, w = parse_permutation(args.y), parse_permutation(args.w)
    for flag, p in (("--y", y), ("--w", w)):
        if p.n != args.n:
            raise KLError(f"{flag} {p} is not a permutation of 1..{args.n}")
    P = classical_kl(y, w)
    _emit(args, {"n": args.n, "y": str(y), "w": str(w), "P": P.to_json()}, f"P = {P}")
    return EXIT_OK


def _cmd_pkl(args) -> int:
    ctx = parabolic_context(args.weight)
    tau, sigma = parse_permutation(args.tau), parse_permutation(args.sigma)
    P = parabolic_kl(args.u, ctx, tau, sigma)
    payload = {"tau": str(tau), "sigma": str(sigma), "u": args.u.value, "P": P.to_json()}
    _emit(args, payload, f"P = {P}")
    return EXIT_OK


def _cmd_basis(args) -> int:
    if args.k < 1:
        raise KLError(f"--k must be positive, got {args.k}")
    seq = parse_sequence(args.word, args.k)
    dual = args.command == "dual-canonical"
    b = (dual_canonical_basis if dual else canonical_basis)(args.k, seq)
    label = format_sequence(seq, args.k)
    payload = {"basis": "dual-canonical" if dual else "canonical", "k": args.k, "I": label,
               "terms": b.to_json()}
    _emit(args, payload, f"{'b^' if dual else 'b_'}[{label}] = {b}")
    return EXIT_OK


def _cmd_grassmann(args) -> int:
    I, J = to_word(args.I), to_word(args.J)
    c = coefficient_c(I, J)
    c0 = h = None
    if is_controlled(I, J):
        pair = normalize_pair(I, J)
        h = h_exponent(*pair) if pair is not None else 0
        c0 = c.shift(h)
    payload = {"I": format_sequence(I), "J": format_sequence(J), "c": c.to_json(),
               "c0": c0.to_json() if c0 is not None else None, "h": h}
    lines = [f"c = {c}"]
    if c0 is not None:
        lines += [f"h = {h}", f"c0 = {c0}"]
    else:
        lines.append("c0, h: J is not controlled by I")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def _cmd_verify(args) -> int:
    if args.max_n < 1:
        raise KLError(f"--max-n must be positive, got {args.max_n}")
    names = list(SUITES) if args.suite == "all" else [args.suite]
    reports = [run_suite(name, args.max_n) for name in names]
    ok = all(r.ok for r in reports)
    if args.format == "json":
        print(json.dumps({"ok": ok, "suites": [r.to_json() for r in reports]}))
    else:
        for r in reports:
            print("\n".join(r.lines()))
    return EXIT_OK if ok else EXIT_FAILED


_COMMANDS = {
    "kl": _cmd_kl, "pkl": _cmd_pkl, "canonical": _cmd_basis, "dual-canonical": _cmd_basis,
    "grassmann": _cmd_grassmann, "verify": _cmd_verify,
}


_WORD_FLAGS = ("--I", "--J", "--word", "--u")


def _attach_values(argv: list[str]) -> list[str]:
    """Join word flags with their value so words like ``--++`` are not read as options."""
    out = []
    it = iter(argv)
    for tok in it:
        if tok in _WORD_FLAGS:
            nxt = next(it, None)
            out.append(tok if nxt is None else f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    argv = _attach_values(list(sys.argv[1:] if argv is None else argv))
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except (KLError, ValueError, IndexError) as exc:
        print(f"klcanon {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def run() -> None:
    sys.exit(main())
