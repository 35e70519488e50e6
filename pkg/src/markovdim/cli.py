"""Command line front end: certified spectra computations as JSON, JSON lines or CSV.

Exit codes: 0 success, 1 usage, 2 domain error, 3 resource or precision cap.
Output on stdout depends only on the arguments, never on timing or worker
count, so reruns are byte-identical; elapsed time goes to stderr.
"""

from __future__ import annotations

import argparse
import re
import sys
import time
from dataclasses import dataclass
from fractions import Fraction

from .admissible import count_table, enumerate_admissible
from .dimension import cantor_bracket, spectrum_dimension
from .errors import ComparisonUnresolved, DomainError, ResourceCapError
from .facts import (exact_order_verify, exact_order_word, freiman_constant,
                    hall_coverage, hall_decompose, jarnik_lower,
                    markov_spectrum_below_3, markov_triples)
from .serialize import (DECIMAL_PLACES, bracket_obj, csv_text, decimal_text,
                        dumps, dumps_lines, exact_obj, fraction_text,
                        number_obj, word_obj)
from .surds import QuadraticSurd


class _UsageError(Exception):
    """Argument combination the command cannot serve."""


@dataclass(frozen=True)
class RunConfig:
    """Immutable snapshot of one invocation: command, format and options."""

    command: str
    fmt: str
    places: int
    options: tuple

    @classmethod
    def from_args(cls, ns) -> "RunConfig":
        d = dict(vars(ns))
        command = d.pop("command")
        fmt = d.pop("format")
        places = d.pop("places")
        return cls(command=command, fmt=fmt, places=places,
                   options=tuple(sorted(d.items())))

    def get(self, key, default=None):
        for k, v in self.options:
            if k == key:
                return v
        return default


_SURD_RE = re.compile(
    r"^(?:(?P<coef>\d+(?:/\d+)?)\*)?sqrt\((?P<rad>\d+)\)$")


def parse_value(text: str):
    """Parse a value literal: 3, 13/4, 3.25, sqrt(12) or 2*sqrt(2)."""
    s = text.replace(" ", "")
    m = _SURD_RE.match(s)
    if m:
        coef = Fraction(m.group("coef")) if m.group("coef") else Fraction(1)
        return QuadraticSurd(0, coef.numerator, coef.denominator, int(m.group("rad")))
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError):
        raise DomainError(f"cannot parse value literal {text!r}")


def parse_blocks(text: str):
    """Parse block lists like 1;2 or 1,2;2,1 into digit tuples."""
    blocks = []
    for part in text.split(";"):
        digits = tuple(int(x) for x in part.replace(" ", "").split(",") if x)
        if not digits or any(d < 1 for d in digits):
            raise DomainError(f"bad block {part!r}; digits must be positive integers")
        blocks.append(digits)
    return tuple(blocks)


def _value_arg(text: str):
    try:
        return parse_value(text)
    except DomainError as e:
        raise argparse.ArgumentTypeError(str(e))


def _blocks_arg(text: str):
    try:
        return parse_blocks(text)
    except (DomainError, ValueError) as e:
        raise argparse.ArgumentTypeError(str(e))


def _fraction_arg(text: str):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"cannot parse rational {text!r}")


def _positive_int(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if n < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return n


def cmd_dim(cfg: RunConfig) -> str:
    if cfg.fmt != "json":
        raise _UsageError("dim supports only --format json")
    bracket = spectrum_dimension(cfg.get("t"), cfg.get("effort"))
    return dumps(bracket_obj(bracket, cfg.places))


def cmd_sweep(cfg: RunConfig) -> str:
    start, stop, steps = cfg.get("start"), cfg.get("stop"), cfg.get("steps")
    if stop <= start:
        raise _UsageError("sweep needs --stop greater than --start")
    grid = [start + (stop - start) * i / steps for i in range(steps + 1)]
    brackets = [spectrum_dimension(t, cfg.get("effort")) for t in grid]
    if cfg.fmt == "csv":
        rows = [(fraction_text(t),
                 decimal_text(b.lo, "lower", cfg.places),
                 decimal_text(b.hi, "upper", cfg.places))
                for t, b in zip(grid, brackets)]
        return csv_text(("t", "lo", "hi"), rows)
    if cfg.fmt == "json":
        return dumps([bracket_obj(b, cfg.places) for b in brackets])
    if cfg.fmt == "jsonl":
        return dumps_lines(bracket_obj(b, cfg.places) for b in brackets)
    raise _UsageError("sweep supports csv, json or jsonl")


def cmd_enum(cfg: RunConfig) -> str:
    t, r, side = cfg.get("t"), cfg.get("r"), cfg.get("side")
    workers = cfg.get("workers")
    if cfg.get("table"):
        over = count_table(t, r, "over", workers=workers)
        under = count_table(t, r, "under", workers=workers)
        rows = [(ro, n_over, n_under)
                for (ro, n_over), (_, n_under) in zip(over, under)]
        if cfg.fmt == "csv":
            return csv_text(("r", "N_over", "N_under"), rows)
        objs = [{"r": ro, "N_over": a, "N_under": b} for ro, a, b in rows]
        if cfg.fmt == "json":
            return dumps(objs)
        if cfg.fmt == "jsonl":
            return dumps_lines(objs)
        raise _UsageError("enum --table supports csv, json or jsonl")
    family = enumerate_admissible(t, r, side, workers=workers)
    if cfg.fmt == "jsonl":
        return dumps_lines(word_obj(w) for w in family.words)
    if cfg.fmt == "json":
        return dumps({"t": exact_obj(t), "r": r, "side": side,
                      "count": family.count,
                      "words": [word_obj(w) for w in family.words]})
    raise _UsageError("enum word listings support jsonl or json")


def cmd_cantor(cfg: RunConfig) -> str:
    if cfg.fmt != "json":
        raise _UsageError("cantor supports only --format json")
    bracket = cantor_bracket(cfg.get("blocks"), cfg.get("depth"))
    return dumps(bracket_obj(bracket, cfg.places))


def cmd_markov_tree(cfg: RunConfig) -> str:
    triples = markov_triples(cfg.get("count"))
    if cfg.fmt == "csv":
        rows = [(tr.x, tr.y, tr.z,
                 decimal_text(tr.spectrum_point, "lower", cfg.places))
                for tr in triples]
        return csv_text(("x", "y", "z", "k_decimal"), rows)
    objs = [{"x": tr.x, "y": tr.y, "z": tr.z,
             "k": number_obj(tr.spectrum_point, "exact", cfg.places)}
            for tr in triples]
    if cfg.fmt == "json":
        return dumps(objs)
    if cfg.fmt == "jsonl":
        return dumps_lines(objs)
    raise _UsageError("markov-tree supports csv, json or jsonl")


def cmd_hall(cfg: RunConfig) -> str:
    if cfg.fmt != "json":
        raise _UsageError("hall supports only --format json")
    target = cfg.get("decompose")
    if target is not None:
        depth = cfg.get("depth") or 8
        alpha, beta = hall_decompose(target, depth)
        return dumps({"s": exact_obj(target), "depth": depth,
                      "alpha": word_obj(alpha), "beta": word_obj(beta)})
    cov = hall_coverage(cfg.get("depth") or 4)
    return dumps({"depth": cov.depth, "words": cov.words, "pairs": cov.pairs,
                  "covered": cov.covered,
                  "target_lo": number_obj(cov.target_lo, "exact", cfg.places),
                  "target_hi": number_obj(cov.target_hi, "exact", cfg.places),
                  "reached": number_obj(cov.reached, "lower", cfg.places)})


def cmd_exact_order(cfg: RunConfig) -> str:
    if cfg.fmt != "json":
        raise _UsageError("exact-order supports only --format json")
    plan = exact_order_word(cfg.get("t"), cfg.get("insertions"))
    report = exact_order_verify(plan, cfg.get("tol"))
    return dumps({
        "t": exact_obj(plan.t), "m": plan.m, "n": plan.n, "s": exact_obj(plan.s),
        "alpha": word_obj(plan.alpha), "beta": word_obj(plan.beta),
        "insertions": plan.insertions, "word": word_obj(plan.word),
        "block_positions": list(plan.block_positions),
        "verify": {
            "ok": report.ok,
            "block_errors": [number_obj(e, "upper", cfg.places)
                             for e in report.block_errors],
            "off_block_margin": number_obj(report.off_block_margin, "lower", cfg.places),
            "tol": fraction_text(report.tol),
        },
    })


def cmd_facts(cfg: RunConfig) -> str:
    if cfg.fmt != "json":
        raise _UsageError("facts supports only --format json")
    out = {
        "freiman": number_obj(freiman_constant(), "exact", cfg.places),
        "spectrum_below_3": [number_obj(p, "exact", cfg.places)
                             for p in markov_spectrum_below_3(cfg.get("count"))],
    }
    m = cfg.get("jarnik")
    if m is not None:
        out["jarnik"] = {"m": m, "lower": number_obj(jarnik_lower(m), "lower", cfg.places)}
    return dumps(out)


_HANDLERS = {
    "dim": cmd_dim,
    "sweep": cmd_sweep,
    "enum": cmd_enum,
    "cantor": cmd_cantor,
    "markov-tree": cmd_markov_tree,
    "hall": cmd_hall,
    "exact-order": cmd_exact_order,
    "facts": cmd_facts,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="markovdim",
        description="Certified dimension brackets and exact landmarks of the "
                    "Markov and Lagrange spectra.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, fmt_default):
        p.add_argument("--format", choices=("json", "jsonl", "csv"), default=fmt_default)
        p.add_argument("--places", type=_positive_int, default=DECIMAL_PLACES,
                       help="decimal places in rendered bounds")

    p = sub.add_parser("dim", help="dimension bracket of the spectra below a cutoff")
    p.add_argument("--t", type=_value_arg, required=True,
                   help="cutoff, e.g. sqrt(12), 2*sqrt(2), 13/4 or 3.25")
    p.add_argument("--effort", type=_positive_int, default=12)
    common(p, "json")

    p = sub.add_parser("sweep", help="brackets over a rational grid of cutoffs")
    p.add_argument("--start", type=_fraction_arg, required=True)
    p.add_argument("--stop", type=_fraction_arg, required=True)
    p.add_argument("--steps", type=_positive_int, required=True)
    p.add_argument("--effort", type=_positive_int, default=8)
    common(p, "csv")

    p = sub.add_parser("enum", help="admissible word layers and count tables")
    p.add_argument("--t", type=_value_arg, required=True)
    p.add_argument("--r", type=_positive_int, required=True,
                   help="layer level, or the maximum level with --table")
    p.add_argument("--side", choices=("over", "under"), default="over")
    p.add_argument("--workers", type=_positive_int, default=1)
    p.add_argument("--table", action="store_true",
                   help="emit counts for every level up to --r")
    common(p, "jsonl")

    p = sub.add_parser("cantor", help="dimension bracket of a free-concatenation set")
    p.add_argument("--blocks", type=_blocks_arg, required=True,
                   help="digit blocks, e.g. 1;2 or 1,2;2,1")
    p.add_argument("--depth", type=_positive_int, required=True)
    common(p, "json")

    p = sub.add_parser("markov-tree", help="integer triples and their spectra points")
    p.add_argument("--count", type=_positive_int, required=True)
    common(p, "csv")

    p = sub.add_parser("hall", help="sum covering of the digit-<=4 set, or a decomposition")
    p.add_argument("--depth", type=_positive_int, default=None)
    p.add_argument("--decompose", type=_value_arg, default=None,
                   help="target value to split into two continued fractions")
    common(p, "json")

    p = sub.add_parser("exact-order", help="insertion word approaching a cutoff at sparse positions")
    p.add_argument("--t", type=_value_arg, required=True)
    p.add_argument("--insertions", type=_positive_int, required=True)
    p.add_argument("--tol", type=_fraction_arg, default=Fraction(1, 10**4))
    common(p, "json")

    p = sub.add_parser("facts", help="exact landmark constants of the spectra")
    p.add_argument("--count", type=_positive_int, default=3,
                   help="how many discrete spectra points to list")
    p.add_argument("--jarnik", type=_positive_int, default=None,
                   help="digit cap for the large-alphabet dimension lower bound")
    common(p, "json")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code in (0, None) else 1
    cfg = RunConfig.from_args(ns)
    t0 = time.monotonic()
    try:
        out = _HANDLERS[cfg.command](cfg)
    except _UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return 1
    except DomainError as e:
        print(f"domain error: {e}", file=sys.stderr)
        return 2
    except (ResourceCapError, ComparisonUnresolved) as e:
        print(f"resource error: {e}", file=sys.stderr)
        return 3
    sys.stdout.write(out)
    print(f"elapsed: {time.monotonic() - t0:.3f}s", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
