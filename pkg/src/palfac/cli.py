"""Command-line front end.

Exit codes: 0 success, 2 invalid configuration, 3 generation failure,
4 stall under ``--strict``, 5 a verification check failed, 6 the two
engines disagreed during ``bench``.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
import time
import traceback
from typing import Optional, Sequence

from . import mbonacci as mb
from .errors import BudgetExceeded, GenerationFailed, NotProlongable, PalfacError
from .factorize import Factor, Factorization, Mode, certify_by_agreement, factorize_indexed, factorize_naive
from .families import FamilyHandle, make_family
from .words import Word, parse_morphism, render

EXIT_OK, EXIT_CONFIG, EXIT_GENERATION, EXIT_STALL, EXIT_VERIFY, EXIT_DISAGREE = 0, 2, 3, 4, 5, 6


class ConfigError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise ConfigError(message)


def _int(text: str) -> int:
    """Integers, also written as 10^5, 2**17 or 1e6."""
    t = text.strip().replace("**", "^")
    try:
        if "^" in t:
            base, exp = t.split("^", 1)
            return int(base) ** int(exp)
        if re.fullmatch(r"\d+[eE]\d+", t):
            mant, exp = re.split("[eE]", t)
            return int(mant) * 10 ** int(exp)
        return int(t)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None


def _add_family(p: argparse.ArgumentParser, required: bool = True) -> None:
    p.add_argument("--family", choices=["fibonacci", "mbonacci", "thue-morse", "custom", "blocks"],
                   required=required, help="word family")
    p.add_argument("-m", "--m", type=int, dest="m", help="m for the m-bonacci family")
    p.add_argument("--morphism", help="file with 'LETTER -> IMAGE' lines (family custom)")
    p.add_argument("--blocks", help="block template such as '0^k 1^k' (family blocks)")


def _add_format(p: argparse.ArgumentParser, choices=("plain", "json", "csv")) -> None:
    p.add_argument("--format", choices=choices, default="plain")
    p.add_argument("-o", "--output", help="write to this file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="palfac", description="Morphic words and their (palindromic) z- and c-factorizations.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("gen", help="print a prefix of an infinite word")
    _add_family(g)
    g.add_argument("-n", type=_int, required=True, help="prefix length (>= 1)")
    _add_format(g)

    f = sub.add_parser("factorize", help="factorize a prefix or an input word")
    _add_family(f, required=False)
    f.add_argument("--input", help="word file, or - for stdin")
    f.add_argument("-n", type=_int, help="prefix length when --family is used")
    f.add_argument("--mode", choices=[x.value for x in Mode], required=True)
    f.add_argument("--engine", choices=["indexed", "naive"], default="indexed")
    f.add_argument("--certify", action="store_true", help="keep the factors on which the n and 2n prefixes agree")
    f.add_argument("--strict", action="store_true", help="exit 4 when the z or pz rule stalls")
    _add_format(f)

    s = sub.add_parser("singular", help="table of p-singular words")
    s.add_argument("-m", "--m", type=int, dest="m", default=2)
    s.add_argument("--upto", type=int, default=8)
    s.add_argument("--from", type=int, dest="start", default=-1)
    _add_format(s)

    v = sub.add_parser("verify", help="run the structural checks")
    v.add_argument("--m-max", type=int, default=5)
    v.add_argument("--depth", type=int, default=12)
    v.add_argument("--window", type=_int, default=100_000)
    v.add_argument("--only", action="append", help="run only this check (repeatable, or comma-separated)")
    v.add_argument("--workers", type=int, default=1)
    _add_format(v, choices=("plain", "json"))

    b = sub.add_parser("bench", help="time the naive and indexed engines")
    _add_family(b, required=False)
    b.add_argument("--windows", default="2^10..2^16", help="comma list or a range of powers like 2^10..2^20")
    b.add_argument("--mode", action="append", choices=[x.value for x in Mode])
    b.add_argument("--naive-max", type=_int, default=2 ** 14,
                   help="largest window on which the naive engine is also run")
    b.add_argument("--inject-disagreement", action="store_true", help=argparse.SUPPRESS)
    _add_format(b, choices=("csv", "json"))
    return parser


# --- helpers ------------------------------------------------------------------------

def _family(args) -> FamilyHandle:
    kind = args.family
    if kind == "mbonacci" and args.m is None:
        raise ConfigError("--family mbonacci needs -m")
    if kind == "mbonacci" and args.m < 2:
        raise ConfigError("m must be >= 2")
    morphism = None
    if kind == "custom":
        if not args.morphism:
            raise ConfigError("--family custom needs --morphism FILE")
        try:
            with open(args.morphism, encoding="utf-8") as fh:
                morphism = parse_morphism(fh.read())
        except OSError as exc:
            raise ConfigError(f"cannot read {args.morphism}: {exc}") from exc
    return make_family(kind, m=args.m, morphism=morphism, blocks=args.blocks)


def _render_word(w: Word) -> str:
    text = render(w)
    if w.alphabet_size > 10:
        return f"alphabet={w.alphabet_size}\n{text}"
    return text


def read_word(text: str) -> Word:
    """Parse the word text format; an optional first line ``alphabet=k`` fixes the alphabet."""
    lines = text.strip().splitlines()
    alphabet = None
    if lines and lines[0].strip().startswith("alphabet="):
        alphabet = int(lines[0].split("=", 1)[1])
        lines = lines[1:]
    body = "".join(line.strip() for line in lines)
    if alphabet is not None and alphabet > 10 and body and "," not in body:
        # comma rendering of a one-letter word
        try:
            return Word([int(body)], alphabet)
        except ValueError as exc:
            raise ConfigError(f"bad word: {exc}") from exc
    return Word.parse(body, alphabet)


def _emit(args, text: str) -> None:
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def factorization_json(f: Factorization, certificate: Optional[str] = None) -> dict:
    w = f.source
    out = {
        "mode": f.mode.value,
        "source_length": f.source_length,
        "alphabet": w.alphabet_size,
        "factors": [{"start": x.start, "len": x.length, "text": render(w[x.start:x.end]), "certified": x.certified}
                    for x in f.factors],
        "residue": render(f.residue),
        "stalled_at": f.stalled_at,
    }
    if certificate:
        out["certificate"] = certificate
    return out


def factorization_plain(f: Factorization) -> str:
    lines = []
    if f.source.alphabet_size > 10:
        lines.append(f"alphabet={f.source.alphabet_size}")
    lines.append(" | ".join(f.strings()))
    if len(f.residue):
        label = "stalled" if f.stalled else "uncertified"
        lines.append(f"{label} at {f.residue_start}: {render(f.residue)}")
    return "\n".join(lines) + "\n"


def factorization_csv(f: Factorization) -> str:
    buf = io.StringIO()
    wr = csv.writer(buf, lineterminator="\n")
    wr.writerow(["index", "start", "len", "text", "certified"])
    for i, x in enumerate(f.factors):
        wr.writerow([i, x.start, x.length, render(f.source[x.start:x.end]), str(x.certified).lower()])
    return buf.getvalue()


# --- subcommands --------------------------------------------------------------------

def cmd_gen(args) -> int:
    if args.n < 1:
        raise ConfigError("-n must be >= 1")
    fam = _family(args)
    w = fam.prefix(args.n)
    if args.format == "json":
        text = json.dumps({"family": fam.describe(), "length": len(w), "alphabet": w.alphabet_size,
                           "word": render(w)}) + "\n"
    elif args.format == "csv":
        text = "length,alphabet,word\n" + f'{len(w)},{w.alphabet_size},"{render(w)}"\n'
    else:
        text = _render_word(w) + "\n"
    _emit(args, text)
    return EXIT_OK


def cmd_factorize(args) -> int:
    if (args.family is None) == (args.input is None):
        raise ConfigError("give exactly one of --family or --input")
    certificate = None
    if args.input is not None:
        if args.certify:
            raise ConfigError("--certify needs --family (it reads a 2n-letter prefix)")
        try:
            text = sys.stdin.read() if args.input == "-" else open(args.input, encoding="utf-8").read()
        except OSError as exc:
            raise ConfigError(f"cannot read {args.input}: {exc}") from exc
        w = read_word(text)
        if args.n is not None:
            w = w[:args.n]
        if not len(w):
            raise ConfigError("the input word is empty")
    else:
        if args.n is None or args.n < 1:
            raise ConfigError("-n >= 1 is required with --family")
        fam = _family(args)
        if args.certify:
            f = certify_by_agreement(fam, args.mode, args.n)
            certificate = f"agreement of the {args.n}- and {2 * args.n}-letter prefixes"
        w = fam.prefix(args.n)
    if certificate is None:
        engine = factorize_naive if args.engine == "naive" else factorize_indexed
        f = engine(w, args.mode)
    if args.format == "json":
        text = json.dumps(factorization_json(f, certificate)) + "\n"
    elif args.format == "csv":
        text = factorization_csv(f)
    else:
        text = factorization_plain(f)
    _emit(args, text)
    if args.strict and f.stalled:
        print(f"stalled at {f.stalled_at}", file=sys.stderr)
        return EXIT_STALL
    return EXIT_OK


def cmd_singular(args) -> int:
    if args.m < 2:
        raise ConfigError("m must be >= 2")
    if args.start < -1 or args.upto < args.start:
        raise ConfigError("need -1 <= --from <= --upto")
    rows = [(n, mb.z_singular(args.m, n)) for n in range(args.start, args.upto + 1)]
    if args.format == "csv":
        buf = io.StringIO()
        wr = csv.writer(buf, lineterminator="\n")
        wr.writerow(["n", "length", "word"])
        for n, z in rows:
            wr.writerow([n, len(z), render(z)])
        text = buf.getvalue()
    elif args.format == "json":
        text = "".join(json.dumps({"m": args.m, "n": n, "length": len(z), "word": render(z)}) + "\n" for n, z in rows)
    else:
        text = "".join(f"{n:>3} {len(z):>8}  {render(z) or 'ε'}\n" for n, z in rows)
    _emit(args, text)
    return EXIT_OK


def cmd_verify(args) -> int:
    from .verify import CHECK_NAMES, run_all

    only = None
    if args.only:
        only = [name.strip() for item in args.only for name in item.split(",") if name.strip()]
        unknown = sorted(set(only) - set(CHECK_NAMES))
        if unknown:
            raise ConfigError(f"unknown checks: {', '.join(unknown)}")
    if args.m_max < 2 or args.depth < 1 or args.window < 1:
        raise ConfigError("need --m-max >= 2, --depth >= 1, --window >= 1")
    reports = run_all(args.m_max, args.depth, args.window, only=only, workers=args.workers)
    if args.format == "json":
        text = "".join(json.dumps(r.to_dict(), default=str) + "\n" for r in reports)
    else:
        lines = []
        for r in reports:
            params = " ".join(f"{k}={v}" for k, v in r.parameters.items() if v is not None)
            lines.append(f"{'PASS' if r.passed else 'FAIL'}  {r.name:<28} {params}  ({r.elapsed:.2f}s)")
            if not r.passed:
                cx = r.counterexample
                lines.append(f"      at {cx['location']}: expected {cx['expected']!r}, got {cx['actual']!r}")
        passed = sum(r.passed for r in reports)
        lines.append(f"{passed}/{len(reports)} checks passed")
        text = "\n".join(lines) + "\n"
    _emit(args, text)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_VERIFY


def _windows(spec: str) -> list[int]:
    spec = spec.strip()
    m = re.fullmatch(r"(\d+)\^(\d+)\.\.(\d+)\^(\d+)", spec)
    if m:
        base, lo, base2, hi = map(int, m.groups())
        if base != base2 or lo > hi:
            raise ConfigError(f"bad window range {spec!r}")
        return [base ** e for e in range(lo, hi + 1)]
    try:
        out = [_int(x) for x in spec.split(",") if x.strip()]
    except argparse.ArgumentTypeError as exc:
        raise ConfigError(str(exc)) from exc
    if not out or min(out) < 1:
        raise ConfigError("windows must be positive")
    return out


def cmd_bench(args) -> int:
    fam = _family(args) if args.family else make_family("mbonacci", m=args.m or 3)
    windows = _windows(args.windows)
    modes = [Mode(x) for x in (args.mode or ["z", "c", "pz", "pc"])]
    rows = []
    disagreement = None
    word = fam.prefix(max(windows))
    for n in windows:
        w = word[:n]
        for mode in modes:
            t0 = time.perf_counter()
            fast = factorize_indexed(w, mode)
            t_fast = time.perf_counter() - t0
            if args.inject_disagreement and fast.factors:
                last = fast.factors[-1]
                fast = Factorization(fast.mode, fast.source,
                                     fast.factors[:-1] + (Factor(last.start, last.length, not last.certified),),
                                     fast.residue_start, fast.stalled)
            if n <= args.naive_max:
                t0 = time.perf_counter()
                slow = factorize_naive(w, mode)
                t_slow = time.perf_counter() - t0
                if slow.key() != fast.key():
                    disagreement = (n, mode.value)
                    break
                rows.append((n, mode.value, "naive", t_slow))
            rows.append((n, mode.value, "indexed", t_fast))
        if disagreement:
            break
    if disagreement:
        print(f"engines disagree on window {disagreement[0]}, mode {disagreement[1]}", file=sys.stderr)
        return EXIT_DISAGREE
    if args.format == "json":
        text = "".join(json.dumps({"window": n, "mode": m, "engine": e, "seconds": round(s, 6)}) + "\n"
                       for n, m, e, s in rows)
    else:
        text = "window,mode,engine,seconds\n" + "".join(f"{n},{m},{e},{s:.6f}\n" for n, m, e, s in rows)
    _emit(args, text)
    return EXIT_OK


COMMANDS = {"gen": cmd_gen, "factorize": cmd_factorize, "singular": cmd_singular,
            "verify": cmd_verify, "bench": cmd_bench}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return COMMANDS[args.command](args)
    except ConfigError as exc:
        print(f"palfac: error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except SystemExit as exc:  # --help
        return EXIT_OK if exc.code in (0, None) else EXIT_CONFIG
    except (GenerationFailed, BudgetExceeded, NotProlongable, MemoryError) as exc:
        print(f"palfac: generation failed: {exc}", file=sys.stderr)
        return EXIT_GENERATION
    except (PalfacError, ValueError) as exc:
        print(f"palfac: error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except Exception as exc:  # keep the documented exit codes even on bugs
        traceback.print_exc()
        print(f"palfac: internal failure: {exc}", file=sys.stderr)
        return EXIT_GENERATION


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
