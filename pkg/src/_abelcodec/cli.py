"""Command line front end.

Examples
--------
    abelcodec ac 5 --sub "0->01;1->02;2->0" --method both
    abelcodec frep 5
    abelcodec stabilize --block 1,0,0,0 --tail 0 --max-i 20
    abelcodec scan 1..100 --format csv

"""
from __future__ import annotations

import argparse
import contextlib
import io
import json
import sys
import warnings
from pathlib import Path

import pandas as pd

from _abelcodec import config
from _abelcodec.codecomp import detect_stabilization, render_zset, z_set_from_digits
from _abelcodec.config import (
    DEFAULT_SUBSTITUTION,
    EXIT_CODES,
    SUPPORTED_METHODS,
    SUPPORTED_OUTPUT_FORMATS,
)
from _abelcodec.interface import compute_abelian_complexity, scan, verify
from _abelcodec.numeration import (
    parse_frep,
    prefix_from_frep,
    render_frep,
    to_normal_frep,
)
from _abelcodec.oracle import balance_profile
from _abelcodec.parry import render_substitution
from _abelcodec.shared import (
    InvalidRepresentationError,
    InvalidSubstitutionError,
    MethodMismatchError,
    OracleFallbackWarning,
    WordLengthLimitExceededError,
)
from _abelcodec.substitution_environment import (
    available_substitutions,
    describe_substitution,
    set_up_substitution,
)
from _abelcodec.words import render_word


def main(argv: list[str] | None = None) -> int:
    exit_code, stdout, stderr = run(sys.argv[1:] if argv is None else argv)
    if stdout:
        sys.stdout.write(stdout if stdout.endswith("\n") else stdout + "\n")
    if stderr:
        sys.stderr.write(stderr if stderr.endswith("\n") else stderr + "\n")
    return exit_code


def run(argv: list[str]) -> tuple[int, str, str]:
    """Execute one command.

    Returns
    -------
    exit_code : int
    stdout : str
        The rendered output.
    stderr : str
        Error messages and notes.

    """
    parser = _build_parser()
    parser_messages = io.StringIO()
    try:
        with contextlib.redirect_stderr(parser_messages), contextlib.redirect_stdout(
            parser_messages
        ):
            args = parser.parse_args(argv)
    except SystemExit as e:
        code = EXIT_CODES["ok"] if e.code in (0, None) else EXIT_CODES["usage"]
        text = parser_messages.getvalue()
        return (code, text, "") if code == EXIT_CODES["ok"] else (code, "", text)

    if args.max_length is not None and args.max_length < config.MIN_MAX_WORD_LENGTH:
        return (
            EXIT_CODES["usage"],
            "",
            f"error: --max-length must be at least {config.MIN_MAX_WORD_LENGTH}.",
        )

    previous_max_length = config.MAX_WORD_LENGTH
    notes: list[str] = []
    try:
        if args.max_length is not None:
            config.set_max_word_length(args.max_length)
        phi = _substitution_from_args(args)
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            exit_code, output = args.handler(args, phi)
        notes = _notes_from_warnings(caught)
    except InvalidSubstitutionError as e:
        return EXIT_CODES["invalid_substitution"], "", f"error: {e}"
    except WordLengthLimitExceededError as e:
        return EXIT_CODES["resource_cap"], "", f"error: {e}"
    except MethodMismatchError as e:
        return EXIT_CODES["mismatch"], "", f"error: {e}"
    except (InvalidRepresentationError, ValueError) as e:
        return EXIT_CODES["usage"], "", f"error: {e}"
    finally:
        config.MAX_WORD_LENGTH = previous_max_length

    return exit_code, output, "\n".join(notes)


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    source = common.add_mutually_exclusive_group()
    source.add_argument(
        "--sub",
        default=None,
        help=(
            "Substitution: a registered name, 'simple m=3 alpha=1,1,1', "
            "'nonsimple m=1 p=2 alpha=2,0,1' or rules '0->01;1->02;2->0'. "
            f"Default: {DEFAULT_SUBSTITUTION}."
        ),
    )
    source.add_argument(
        "--sub-file", type=Path, default=None, help="YAML file with the substitution."
    )
    common.add_argument(
        "--format", choices=SUPPORTED_OUTPUT_FORMATS, default="text", dest="fmt"
    )
    common.add_argument(
        "--max-length",
        type=int,
        default=None,
        help="Cap on the number of letters of materialized words.",
    )

    method = argparse.ArgumentParser(add_help=False)
    method.add_argument("--method", choices=SUPPORTED_METHODS, default="codec")

    parser = argparse.ArgumentParser(
        prog="abelcodec",
        description="Abelian complexity of fixed points of Parry substitutions.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    ac = commands.add_parser("ac", parents=[common, method], help="Compute AC(n).")
    ac.add_argument("n", nargs="?", type=int)
    ac.add_argument("--digits", default=None, help="n as digits, e.g. 1,0,1.")
    ac.set_defaults(handler=_run_ac)

    frep = commands.add_parser(
        "frep", parents=[common], help="Normal F-representation of n."
    )
    frep.add_argument("n", type=int)
    frep.set_defaults(handler=_run_frep)

    prefix = commands.add_parser(
        "prefix", parents=[common], help="Prefix of length n from its digits."
    )
    prefix.add_argument("n", type=int)
    prefix.set_defaults(handler=_run_prefix)

    zset = commands.add_parser("zset", parents=[common], help="Z-set of n.")
    zset.add_argument("n", nargs="?", type=int)
    zset.add_argument("--digits", default=None, help="n as digits, e.g. 1,0,1.")
    zset.set_defaults(handler=_run_zset)

    scan_ = commands.add_parser(
        "scan", parents=[common, method], help="AC(n) for n in a..b."
    )
    scan_.add_argument("range", help="Inclusive range a..b.")
    scan_.set_defaults(handler=_run_scan)

    stabilize = commands.add_parser(
        "stabilize",
        parents=[common],
        help="Detect stabilization along the digits (block^i, tail).",
    )
    stabilize.add_argument("--block", required=True)
    stabilize.add_argument("--tail", default="")
    stabilize.add_argument("--max-i", type=int, default=20)
    stabilize.set_defaults(handler=_run_stabilize)

    verify_ = commands.add_parser(
        "verify", parents=[common], help="Compare codec and oracle for n <= N."
    )
    verify_.add_argument("--max-n", type=int, required=True)
    verify_.add_argument("--min-n", type=int, default=1)
    verify_.set_defaults(handler=_run_verify)

    balance = commands.add_parser(
        "balance", parents=[common], help="Maximal imbalance per letter for n <= N."
    )
    balance.add_argument("--max-n", type=int, required=True)
    balance.set_defaults(handler=_run_balance)

    list_ = commands.add_parser(
        "list", parents=[common], help="List the registered substitutions."
    )
    list_.set_defaults(handler=_run_list)

    return parser


def _substitution_from_args(args):
    if args.sub_file is not None:
        return set_up_substitution(args.sub_file)
    return set_up_substitution(DEFAULT_SUBSTITUTION if args.sub is None else args.sub)


def _n_and_digits_from_args(args, phi):
    if args.digits is not None:
        digits = parse_frep(args.digits, phi)
        if args.n is not None:
            raise InvalidRepresentationError("Give either n or --digits, not both.")
        return None, digits
    if args.n is None:
        raise ValueError("n or --digits is required.")
    return args.n, None


def _run_ac(args, phi):
    n, digits = _n_and_digits_from_args(args, phi)
    result = compute_abelian_complexity(n, phi, method=args.method, digits=digits)

    if args.fmt == "json":
        output = json.dumps(result.to_dict())
    elif args.fmt == "csv":
        output = _to_csv([{"n": result.n, "ac": result.ac, "method": result.method}])
    else:
        lines = [f"AC({result.n}) = {result.ac}"]
        if result.agree:
            lines.append("codec and oracle agree")
        if result.fallback:
            lines.append("the codec was inapplicable, the oracle answered")
        output = "\n".join(lines)
    return EXIT_CODES["ok"], output


def _run_frep(args, phi):
    digits = to_normal_frep(args.n, phi)
    if args.fmt == "json":
        output = json.dumps({"n": args.n, "digits": list(digits)})
    elif args.fmt == "csv":
        output = _to_csv([{"n": args.n, "digits": render_frep(digits)}])
    else:
        output = render_frep(digits)
    return EXIT_CODES["ok"], output


def _run_prefix(args, phi):
    word = render_word(
        prefix_from_frep(to_normal_frep(args.n, phi), phi), phi.alphabet_size
    )
    if args.fmt == "json":
        output = json.dumps({"n": args.n, "prefix": word})
    elif args.fmt == "csv":
        output = _to_csv([{"n": args.n, "prefix": word}])
    else:
        output = word
    return EXIT_CODES["ok"], output


def _run_zset(args, phi):
    n, digits = _n_and_digits_from_args(args, phi)
    if digits is None:
        digits = to_normal_frep(n, phi)
    z = z_set_from_digits(digits, phi)

    if args.fmt == "json":
        output = json.dumps(z.to_dict())
    elif args.fmt == "csv":
        pairs = z.to_dict()["pairs"]
        rows = [{"z": z_, "z_tilde": zt} for z_, zt in pairs]
        output = _to_csv(rows, columns=["z", "z_tilde"])
    else:
        output = render_zset(z)
    return EXIT_CODES["ok"], output


def _run_scan(args, phi):
    a, b = _parse_range(args.range)
    df = scan(a, b, phi, method=args.method)

    if args.fmt == "json":
        output = df.to_json(orient="records")
    elif args.fmt == "csv":
        output = df[["n", "ac", "method"]].to_csv(index=False, lineterminator="\n")
    else:
        output = "\n".join(f"AC({n}) = {ac}" for n, ac in zip(df["n"], df["ac"]))
    return EXIT_CODES["ok"], output.rstrip("\n")


def _run_stabilize(args, phi):
    block = parse_frep(args.block, phi)
    tail = parse_frep(args.tail, phi)
    report = detect_stabilization(block, tail, args.max_i, phi)
    data = report.to_dict()

    if args.fmt == "json":
        output = json.dumps(data)
    elif args.fmt == "csv":
        output = _to_csv(
            [{"key": key, "value": json.dumps(value)} for key, value in data.items()]
        )
    else:
        if report.stabilized:
            headline = (
                f"stabilized at i = {report.stabilized_at}, "
                f"stable AC = {report.stable_ac}"
            )
        elif report.oracle_only:
            headline = "the recursion was inapplicable, no conclusion (oracle only)"
        else:
            headline = f"not stabilized within i <= {report.i_max}"
        vectors = ", ".join(render_frep(v) for v in report.stable_rel_set)
        output = "\n".join(
            [
                headline,
                f"pattern: {render_frep(block)}^i {render_frep(tail)}",
                f"stable_rel_set: {{{vectors}}}",
                "ac_by_repetition: "
                + ", ".join(f"{i}:{ac}" for i, ac in report.ac_by_repetition),
            ]
        )
    return EXIT_CODES["ok"], output


def _run_verify(args, phi):
    df = verify(args.max_n, phi, min_n=args.min_n)
    mismatches = int((~df["agree"]).sum())
    fallbacks = int(df["fallback"].sum())

    if args.fmt == "json":
        output = df.to_json(orient="records")
    elif args.fmt == "csv":
        output = df.to_csv(index=False, lineterminator="\n").rstrip("\n")
    else:
        lines = [
            f"verified n = {args.min_n}..{args.max_n} for {render_substitution(phi)}",
            f"agree: {int(df['agree'].sum()) - fallbacks}",
            f"fallbacks: {fallbacks}",
            f"mismatches: {mismatches}",
        ]
        lines += [
            f"mismatch at n = {n}: codec {codec}, oracle {oracle}"
            for n, codec, oracle in df.loc[
                ~df["agree"], ["n", "codec", "oracle"]
            ].itertuples(index=False)
        ]
        output = "\n".join(lines)

    exit_code = EXIT_CODES["mismatch"] if mismatches else EXIT_CODES["ok"]
    return exit_code, output


def _run_balance(args, phi):
    profile = balance_profile(phi, args.max_n)
    if args.fmt == "json":
        output = json.dumps(
            {
                "n_max": profile.n_max,
                "max_imbalance": list(profile.max_imbalance),
                "c": profile.c,
            }
        )
    elif args.fmt == "csv":
        output = _to_csv(
            [
                {"letter": letter, "max_imbalance": v}
                for letter, v in enumerate(profile.max_imbalance)
            ]
        )
    else:
        output = (
            f"max imbalance per letter for n <= {profile.n_max}: "
            f"{render_frep(profile.max_imbalance)}, c = {profile.c}"
        )
    return EXIT_CODES["ok"], output


def _run_list(args, phi):  # noqa: ARG001
    names = available_substitutions()
    entries = [(name, set_up_substitution(name)) for name in names]
    if args.fmt == "json":
        output = json.dumps(
            [
                {
                    "name": name,
                    "spec": sub.to_spec(),
                    "rules": render_substitution(sub),
                    "description": describe_substitution(name),
                }
                for name, sub in entries
            ]
        )
    elif args.fmt == "csv":
        output = _to_csv(
            [
                {"name": name, "spec": sub.to_spec(), "rules": render_substitution(sub)}
                for name, sub in entries
            ]
        )
    else:
        output = "\n".join(
            f"{name}: {sub.to_spec()} ({render_substitution(sub)})"
            for name, sub in entries
        )
    return EXIT_CODES["ok"], output


def _to_csv(rows: list[dict], columns: list[str] | None = None) -> str:
    out = pd.DataFrame(rows, columns=columns)
    return out.to_csv(index=False, lineterminator="\n").rstrip("\n")


def _parse_range(text: str) -> tuple[int, int]:
    try:
        raw_a, raw_b = text.split("..")
        return int(raw_a), int(raw_b)
    except ValueError as e:
        raise ValueError(f"The range {text!r} is not of the form a..b.") from e


def _notes_from_warnings(caught) -> list[str]:
    notes = []
    fallbacks = sum(issubclass(w.category, OracleFallbackWarning) for w in caught)
    if fallbacks:
        notes.append(f"note: the oracle answered {fallbacks} time(s) for the codec.")
    for message in dict.fromkeys(
        str(w.message)
        for w in caught
        if not issubclass(w.category, OracleFallbackWarning)
    ):
        notes.append(f"note: {message}")
    return notes
