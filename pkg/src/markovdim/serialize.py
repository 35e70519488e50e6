"""Deterministic text encodings for words, surds, brackets and tables.

Every decimal string is certified: one tagged lower never exceeds the true
value, one tagged upper is never below it, and an exact value carries both
bounds.  Encoding depends only on the values, so identical inputs give
byte-identical output.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .errors import DomainError
from .surds import as_surd, decimal_bounds

DECIMAL_PLACES = 12


def fraction_text(x) -> str:
    """Render a rational as num/den in lowest terms, denominator always shown."""
    f = Fraction(x)
    return f"{f.numerator}/{f.denominator}"


def scaled_text(n: int, places: int) -> str:
    """Decimal string for the integer n * 10**-places."""
    if places < 0:
        raise DomainError("places must be nonnegative")
    sign = "-" if n < 0 else ""
    digits = str(abs(n)).rjust(places + 1, "0")
    if places == 0:
        return sign + digits
    return f"{sign}{digits[:-places]}.{digits[-places:]}"


def decimal_text(x, rounding: str, places: int = DECIMAL_PLACES) -> str:
    """Certified decimal rounded toward the stated side."""
    lo, hi = decimal_bounds(as_surd(x), places)
    if rounding == "lower":
        return scaled_text(lo, places)
    if rounding == "upper":
        return scaled_text(hi, places)
    raise DomainError(f"unknown rounding direction {rounding!r}")


def exact_obj(x):
    """Exact JSON form: num/den string for rationals, field dict for surds."""
    s = as_surd(x)
    if s.is_rational:
        return fraction_text(Fraction(s.a, s.c))
    return {"a": s.a, "b": s.b, "c": s.c, "d": s.d}


def number_obj(x, rounding: str, places: int = DECIMAL_PLACES) -> dict:
    """Tagged numeric payload.

    lower and upper mark one-sided bounds and render one decimal rounded the
    same way; exact keeps the exact form authoritative and renders both
    decimal bounds.
    """
    if rounding in ("lower", "upper"):
        return {"exact": exact_obj(x),
                "decimal": decimal_text(x, rounding, places),
                "rounding": rounding}
    if rounding == "exact":
        lo, hi = decimal_bounds(as_surd(x), places)
        return {"exact": exact_obj(x),
                "decimal_lo": scaled_text(lo, places),
                "decimal_hi": scaled_text(hi, places),
                "rounding": "exact"}
    raise DomainError(f"unknown rounding direction {rounding!r}")


def word_obj(word) -> list:
    """Words encode as plain JSON integer arrays."""
    return [int(d) for d in word]


def bracket_obj(bracket, places: int = DECIMAL_PLACES) -> dict:
    """Dimension brackets encode as t, lo, hi, method and depth."""
    t = None if bracket.t is None else number_obj(bracket.t, "exact", places)
    return {"t": t,
            "lo": number_obj(bracket.lo, "lower", places),
            "hi": number_obj(bracket.hi, "upper", places),
            "method": bracket.method,
            "depth": bracket.depth}


def dumps(obj) -> str:
    """Canonical one-line JSON: sorted keys, compact separators, newline."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def dumps_lines(objs) -> str:
    """Canonical JSON lines, one object per line."""
    return "".join(json.dumps(o, sort_keys=True, separators=(",", ":")) + "\n" for o in objs)


def csv_text(header, rows) -> str:
    """Comma-joined table with a header line and a trailing newline."""
    lines = [",".join(header)]
    lines.extend(",".join(str(c) for c in row) for row in rows)
    return "\n".join(lines) + "\n"
