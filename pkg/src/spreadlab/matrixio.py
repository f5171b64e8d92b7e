"""Matrix file format.

Plain text: an optional run of '#' comment lines, a line holding the
order n, then n lines of n whitespace-separated decimal values.  Values
are emitted with 17 significant digits, so write/parse round-trips are
bit-identical for 64-bit floats.
"""

import math

import numpy as np

from .errors import ParseError


def parse_matrix(text: str) -> np.ndarray:
    lines = [ln for ln in (raw.strip() for raw in text.splitlines())
             if ln and not ln.startswith("#")]
    if not lines:
        raise ParseError("empty matrix file")
    head = lines[0].split()
    if len(head) != 1:
        raise ParseError(f"first line must hold the order alone: {lines[0]!r}")
    try:
        n = int(head[0])
    except ValueError:
        raise ParseError(f"order is not an integer: {head[0]!r}") from None
    if n <= 0:
        raise ParseError(f"order must be positive, got {n}")
    if len(lines) - 1 != n:
        raise ParseError(f"expected {n} rows, found {len(lines) - 1}")
    out = np.empty((n, n))
    for i, line in enumerate(lines[1:]):
        parts = line.split()
        if len(parts) != n:
            raise ParseError(f"row {i + 1} has {len(parts)} values, "
                             f"expected {n}")
        for j, tok in enumerate(parts):
            try:
                v = float(tok)
            except ValueError:
                raise ParseError(f"bad value {tok!r} at row {i + 1}") from None
            if not math.isfinite(v):
                raise ParseError(f"non-finite value at row {i + 1}")
            out[i, j] = v
    return out


def format_matrix(a, comment: str | None = None) -> str:
    arr = np.asarray(a, dtype=np.float64)
    lines = []
    if comment:
        for ln in comment.splitlines():
            lines.append(f"# {ln}")
    lines.append(str(arr.shape[0]))
    for row in arr:
        lines.append(" ".join(f"{v:.17g}" for v in row))
    return "\n".join(lines) + "\n"


def read_matrix(path) -> np.ndarray:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_matrix(fh.read())


def write_matrix(path, a, comment: str | None = None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_matrix(a, comment))
