"""Reading and writing the plain-text matrix format.

One matrix row per line; entries separated by whitespace, commas, or both.
An entry is a decimal literal or a rational written p/q with positive
integers, so judgment scales like 1/3 survive a round trip at full float
precision. '#' starts a comment; blank lines are skipped. Example::

    # weights 4 2 1
    1     2    4
    1/2   1    2
    1/4, 1/2, 1

Parsing reports 1-based line and column positions. Matrix validation
(positivity, reciprocity, minimum order) is the same as constructing a
``Pcm`` directly and reports 1-based entry coordinates.
"""

from __future__ import annotations

import math
import re
from pathlib import Path

from .errors import MatrixParseError
from .pcm import Pcm

_TOKEN = re.compile(r"[^,\s]+")
_INTEGER = re.compile(r"\d+\Z")


def _parse_entry(tok: str, line: int, col: int) -> float:
    if "/" in tok:
        num, _, den = tok.partition("/")
        if not (_INTEGER.match(num) and _INTEGER.match(den)):
            raise MatrixParseError(f"rational entry {tok!r} must be p/q with "
                                   f"positive integers", line, col)
        p, q = int(num), int(den)
        if p == 0 or q == 0:
            raise MatrixParseError(f"rational entry {tok!r} must have "
                                   f"positive numerator and denominator",
                                   line, col)
        return p / q
    try:
        v = float(tok)
    except ValueError:
        raise MatrixParseError(f"unreadable entry {tok!r}", line, col) from None
    if not math.isfinite(v):
        raise MatrixParseError(f"entry {tok!r} is not finite", line, col)
    return v


def parse_matrix(text: str) -> Pcm:
    """Parse matrix text; raises MatrixParseError with line/column on bad
    input and the usual validation errors on a malformed matrix."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        row = [_parse_entry(m.group(), lineno, m.start() + 1)
               for m in _TOKEN.finditer(line)]
        rows.append((lineno, row))
    if not rows:
        raise MatrixParseError("no matrix rows found")
    n = len(rows[0][1])
    for lineno, row in rows:
        if len(row) != n:
            raise MatrixParseError(f"row has {len(row)} entries, expected {n}",
                                   lineno)
    if len(rows) != n:
        raise MatrixParseError(f"{len(rows)} rows of {n} entries do not form "
                               f"a square matrix", rows[-1][0])
    return Pcm([row for _, row in rows])


def render_matrix(m: Pcm) -> str:
    """Matrix as parseable text, one row per line, 17 significant digits."""
    return "\n".join(" ".join(f"{x:.17g}" for x in row)
                     for row in m.entries) + "\n"


def load_matrix(path) -> Pcm:
    return parse_matrix(Path(path).read_text(encoding="utf-8"))


def save_matrix(m: Pcm, path) -> None:
    Path(path).write_text(render_matrix(m), encoding="utf-8")
