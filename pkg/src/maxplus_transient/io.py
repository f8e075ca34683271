"""Text formats for instances and Full Reversal graphs, and JSON-safe reports.

Instance file::

    # comment lines start with '#'
    2
    0 -1
    0 -1

    0 0        <- optional vector after a blank line

Tokens are integers, rationals ``p/q`` or ``-inf``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .algebra import NEG_INF, MaxPlusMatrix, MaxPlusVector, format_weight, weight
from .errors import InputError
from .full_reversal import FRGraph


@dataclass(frozen=True)
class Instance:
    matrix: MaxPlusMatrix
    vector: Optional[MaxPlusVector] = None


def _strip_comment(line: str) -> str:
    return line.split("#", 1)[0].strip()


def _blocks(text: str) -> list:
    """Non-comment lines grouped by blank-line separators (comment-only lines are invisible)."""
    blocks, current = [], []
    for raw in text.splitlines():
        if raw.lstrip().startswith("#"):
            continue
        line = _strip_comment(raw)
        if line:
            current.append(line)
        elif current:
            blocks.append(current)
            current = []
    if current:
        blocks.append(current)
    return blocks


def _parse_row(line: str, n: int, what: str) -> tuple:
    tokens = line.split()
    if len(tokens) != n:
        raise InputError(f"{what} has {len(tokens)} entries, expected {n}")
    return tuple(weight(t) for t in tokens)


def parse_instance(text: str) -> Instance:
    lines = [line for block in _blocks(text) for line in block]
    blocks = _blocks(text)
    if not lines:
        raise InputError("empty instance")
    try:
        n = int(lines[0])
    except ValueError as exc:
        raise InputError(f"header must be the dimension N, got {lines[0]!r}") from exc
    if n < 1:
        raise InputError("dimension must be positive")
    body = lines[1:]
    if len(body) < n:
        raise InputError(f"expected {n} matrix rows, found {len(body)}")
    rows = tuple(_parse_row(body[k], n, f"row {k + 1}") for k in range(n))
    rest = body[n:]
    vec = None
    if rest:
        if len(rest) != 1 or len(blocks) < 2:
            raise InputError("trailing content must be a single vector line after a blank line")
        vec = MaxPlusVector(_parse_row(rest[0], n, "vector"))
    return Instance(MaxPlusMatrix(rows), vec)


def format_row(entries) -> str:
    return " ".join(format_weight(x) for x in entries)


def serialize_instance(inst: Instance) -> str:
    out = [str(inst.matrix.n_rows)]
    out.extend(format_row(row) for row in inst.matrix.rows)
    if inst.vector is not None:
        out.append("")
        out.append(format_row(inst.vector.entries))
    return "\n".join(out) + "\n"


def parse_vector(text: str, n: int | None = None) -> MaxPlusVector:
    lines = [line for block in _blocks(text) for line in block]
    if len(lines) != 1:
        raise InputError("a vector file holds exactly one line of entries")
    tokens = lines[0].split()
    if n is not None and len(tokens) != n:
        raise InputError(f"vector has {len(tokens)} entries, expected {n}")
    return MaxPlusVector(tuple(weight(t) for t in tokens))


def parse_fr_graph(text: str, mode: str) -> FRGraph:
    """First line: node count.  Then one ``u v`` edge per line (0-based); ``u u`` marks a destination."""
    lines = [line for block in _blocks(text) for line in block]
    if not lines:
        raise InputError("empty graph file")
    try:
        n = int(lines[0])
        edges = []
        for line in lines[1:]:
            u, v = line.split()
            edges.append((int(u), int(v)))
    except ValueError as exc:
        raise InputError(f"malformed graph file: {exc}") from exc
    if len(set(edges)) != len(edges):
        raise InputError("duplicate edge in graph file")
    return FRGraph(n, frozenset(edges), mode)


def serialize_fr_graph(g: FRGraph) -> str:
    return "\n".join([str(g.n_nodes)] + [f"{u} {v}" for u, v in sorted(g.edges)]) + "\n"


# JSON: rationals as "p/q" strings, bottom as "-inf", not applicable as null.

def to_jsonable(x):
    if x is None or isinstance(x, (bool, str)):
        return x
    if x is NEG_INF:
        return "-inf"
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, int):
        return x
    if isinstance(x, dict):
        return {str(k): to_jsonable(v) for k, v in x.items()}
    if isinstance(x, (frozenset, set)):
        return [to_jsonable(v) for v in sorted(x)]
    if isinstance(x, (list, tuple)):
        return [to_jsonable(v) for v in x]
    raise TypeError(f"cannot serialize {type(x).__name__}")


def from_jsonable(x):
    """Inverse of :func:`to_jsonable` up to container types (strings become weights)."""
    if isinstance(x, str):
        try:
            return weight(x)
        except InputError:
            return x
    if isinstance(x, dict):
        return {k: from_jsonable(v) for k, v in x.items()}
    if isinstance(x, list):
        return [from_jsonable(v) for v in x]
    return x


def dumps(doc: dict) -> str:
    return json.dumps(to_jsonable(doc), indent=2, sort_keys=True)


def loads(text: str) -> dict:
    return from_jsonable(json.loads(text))
