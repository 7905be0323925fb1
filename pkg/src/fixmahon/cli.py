"""Command-line front end.

Every subcommand is a thin wrapper over a single library call; payloads are
passed with --word or --perm in the plain space-separated text formats.
Exit codes: 0 success / verification pass, 1 verification failure, 2 usage
or domain error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Callable

from . import enumeration, permutations, qseries, transform_f3, transform_phi, words
from .errors import FixmahonError, NeutralLetterError

DEFAULT_VERIFY_N = 7

WORD_OPS: dict[str, Callable[[words.Word], words.Word]] = {
    "phi": transform_phi.phi,
    "psi": transform_phi.psi,
    "f3": transform_f3.f3,
    "f3-inv": transform_f3.f3_inv,
}

PERM_OPS: dict[str, Callable] = {
    "phi": permutations.phi_perm,
    "psi": permutations.phi_inv_perm,
    "f3": permutations.f3_perm,
    "f3-inv": permutations.f3_inv_perm,
}


def _word_stats_dict(w: words.Word) -> dict:
    try:
        bullet = sorted(words.rise_bullet_set(w))
    except NeutralLetterError:
        bullet = None
    return {
        "n": len(w),
        "zero": words.zero_count(w),
        "maj": words.maj(w),
        "mafz": words.mafz(w),
        "Zero": sorted(words.zero_set(w)),
        "Pos": words.format_word(words.pos_subword(w)),
        "DES": sorted(words.des_set(w)),
        "RISE": sorted(words.rise_set(w)),
        "RISE_bullet": bullet,
    }


def _perm_stats_dict(sigma) -> dict:
    vec = permutations.perm_stats(sigma)
    return {
        "n": vec.n,
        "fix": vec.fix,
        "des": vec.des,
        "exc": vec.exc,
        "maj": vec.maj,
        "dez": vec.dez,
        "maz": vec.maz,
        "maf": vec.maf,
        "FIX": sorted(vec.fix_set),
        "DES": sorted(vec.des_set),
        "DEZ": sorted(vec.dez_set),
        "RISE": sorted(vec.rise_set),
        "RIZE": sorted(vec.rize_set),
        "zder": words.format_word(permutations.zder(sigma)),
        "der": words.format_word(permutations.der(sigma)),
    }


def _stats_text(stats: dict) -> str:
    lines = []
    for key, value in stats.items():
        if isinstance(value, list):
            lines.append(f"{key}={words.format_index_set(value)}")
        elif value is None:
            lines.append(f"{key}=n/a")
        else:
            lines.append(f"{key}={value}")
    return "\n".join(lines)


def _emit(args, payload_text: str, operation: str, result_text: str, stats: dict) -> str:
    if args.format == "json":
        return json.dumps(
            {
                "input": payload_text,
                "operation": operation,
                "result": result_text,
                "stats": stats,
            }
        )
    return result_text


def _cap_from_env() -> int:
    raw = os.environ.get("FIXMAHON_MAX_N")
    if raw is None:
        return enumeration.DEFAULT_ENUM_CAP
    try:
        return int(raw)
    except ValueError:
        raise FixmahonError(f"FIXMAHON_MAX_N must be an integer, got {raw!r}") from None


def _cmd_stats(args) -> tuple[int, str]:
    if args.word is not None:
        w = words.parse_word(args.word)
        stats = _word_stats_dict(w)
        text = args.word
    else:
        sigma = permutations.parse_permutation(args.perm)
        stats = _perm_stats_dict(sigma)
        text = args.perm
    if args.format == "json":
        return 0, json.dumps(
            {"input": text, "operation": "stats", "result": text, "stats": stats}
        )
    return 0, _stats_text(stats)


def _cmd_transform(args) -> tuple[int, str]:
    if args.word is not None:
        w = words.parse_word(args.word)
        out = WORD_OPS[args.command](w)
        result = words.format_word(out)
        stats = _word_stats_dict(out)
        return 0, _emit(args, args.word, args.command, result, stats)
    sigma = permutations.parse_permutation(args.perm)
    out = PERM_OPS[args.command](sigma)
    result = permutations.format_permutation(out)
    stats = _perm_stats_dict(out)
    return 0, _emit(args, args.perm, args.command, result, stats)


def _cmd_zder(args) -> tuple[int, str]:
    sigma = permutations.parse_permutation(args.perm)
    out = permutations.zder(sigma)
    result = words.format_word(out)
    return 0, _emit(args, args.perm, "zder", result, _word_stats_dict(out))


def _cmd_zder_inv(args) -> tuple[int, str]:
    w = words.parse_word(args.word)
    out = permutations.zder_inv(w)
    result = permutations.format_permutation(out)
    return 0, _emit(args, args.word, "zder-inv", result, _perm_stats_dict(out))


def _cmd_table(args) -> tuple[int, str]:
    cap = _cap_from_env()
    names = tuple(name.strip() for name in args.stats.split(",") if name.strip())
    table = enumeration.joint_distribution(args.n, names, cap)
    if args.format == "json":
        return 0, json.dumps(table.to_json_dict())
    if args.format == "csv":
        return 0, table.to_csv().rstrip("\n")
    return 0, table.to_text()


def _cmd_verify(args) -> tuple[int, str]:
    cap = _cap_from_env()
    claim = args.claim
    if claim == "id-1.27":
        report = qseries.verify_identity_127(
            max_n=args.max_n if args.max_n is not None else 8
        )
    elif claim == "id-1.26":
        report = qseries.verify_identity_126(u_cap=args.u, t_cap=args.t)
    elif claim == "prop-4.1":
        report = enumeration.verify_claim(
            claim,
            max_len=args.n if args.n is not None else args.max_len,
            max_letter=args.max_letter,
        )
    else:
        size = args.n if args.n is not None else min(DEFAULT_VERIFY_N, cap)
        extra = {}
        if claim in ("thm-1.2", "roundtrips"):
            extra = {"max_v_len": args.max_len, "max_letter": args.max_letter}
        report = enumeration.verify_claim(claim, max_n=size, cap=cap, **extra)
    if args.format == "json":
        return (0 if report.passed else 1), json.dumps(report.to_json_dict())
    return (0 if report.passed else 1), report.to_text()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fixmahon",
        description=(
            "Statistics and class-preserving bijections on zero-padded words "
            "and permutations, with exhaustive and algebraic verifiers."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_payload(sp, word: bool = True, perm: bool = True):
        group = sp.add_mutually_exclusive_group(required=True)
        if word:
            group.add_argument("--word", help="word payload, e.g. '5 0 1 2 0 0 3 6 4'")
        if perm:
            group.add_argument("--perm", help="permutation payload, e.g. '8 2 1 3 5 6 4 9 7'")

    def add_format(sp, choices=("text", "json")):
        sp.add_argument("--format", choices=choices, default="text")

    sp = sub.add_parser("stats", help="print the statistics of a word or permutation")
    add_payload(sp)
    add_format(sp)
    sp.set_defaults(handler=_cmd_stats)

    for name, blurb in (
        ("phi", "apply the rise-preserving zero-moving bijection"),
        ("psi", "apply its inverse"),
        ("f3", "apply the major-index-transporting bijection"),
        ("f3-inv", "apply its inverse"),
    ):
        sp = sub.add_parser(name, help=blurb)
        add_payload(sp)
        add_format(sp)
        sp.set_defaults(handler=_cmd_transform)

    sp = sub.add_parser("zder", help="encode a permutation as a zero-padded word")
    add_payload(sp, word=False)
    add_format(sp)
    sp.set_defaults(handler=_cmd_zder)

    sp = sub.add_parser("zder-inv", help="decode a zero-padded word to a permutation")
    add_payload(sp, perm=False)
    add_format(sp)
    sp.set_defaults(handler=_cmd_zder_inv)

    sp = sub.add_parser("table", help="joint distribution table of statistics")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--stats", default="fix,des,maj", help="comma-separated names")
    add_format(sp, choices=("text", "json", "csv"))
    sp.set_defaults(handler=_cmd_table)

    sp = sub.add_parser("verify", help="run an exhaustive or algebraic verifier")
    sp.add_argument(
        "--claim",
        required=True,
        choices=sorted(enumeration.CLAIMS) + ["id-1.26", "id-1.27"],
    )
    sp.add_argument("--n", type=int, help="size bound for the sweep")
    sp.add_argument("--max-n", type=int, dest="max_n", help="bound for id-1.27")
    sp.add_argument("--u", type=int, default=6, help="u-degree cap for id-1.26")
    sp.add_argument("--t", type=int, default=6, help="t-degree cap for id-1.26")
    sp.add_argument("--max-len", type=int, dest="max_len", default=None)
    sp.add_argument("--max-letter", type=int, dest="max_letter", default=None)
    sp.add_argument(
        "--jobs",
        type=int,
        default=1,
        help="accepted for compatibility; verification is sequential and the "
        "output does not depend on this value",
    )
    add_format(sp)
    sp.set_defaults(handler=_cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    if getattr(args, "command", None) == "verify":
        if args.max_len is None:
            args.max_len = (
                enumeration.PAIR_SWEEP_MAX_LEN
                if args.claim == "prop-4.1"
                else enumeration.V_SLICE_MAX_LEN
            )
        if args.max_letter is None:
            args.max_letter = (
                enumeration.PAIR_SWEEP_MAX_LETTER
                if args.claim == "prop-4.1"
                else enumeration.V_SLICE_MAX_LETTER
            )
    try:
        code, output = args.handler(args)
    except FixmahonError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(output)
    return code


if __name__ == "__main__":
    sys.exit(main())
