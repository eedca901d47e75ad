"""Line-oriented instance file parsers.

Every format shares the same conventions: '#' starts a comment that
runs to the end of the line, blank lines are ignored, fields are
whitespace-separated.  Parse errors raise InstanceFormatError with a
message naming the offending line.
"""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path
from typing import Union

from .bitstring import BitString
from .instances import Graph, Poset
from .lp import LinearSystem
from .oracles.matroids import GraphicMatroid, MatroidOracle, UniformMatroid


class InstanceFormatError(ValueError):
    pass


def content_lines(text: str) -> list[str]:
    out = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append(line)
    return out


def _ints(line: str, count: int, what: str) -> list[int]:
    fields = line.split()
    if len(fields) != count:
        raise InstanceFormatError(f"{what}: expected {count} fields, got {line!r}")
    try:
        return [int(f) for f in fields]
    except ValueError:
        raise InstanceFormatError(f"{what}: not integers: {line!r}") from None


def parse_graph(text: str) -> Graph:
    lines = content_lines(text)
    if not lines:
        raise InstanceFormatError("graph file is empty")
    n, m = _ints(lines[0], 2, "graph header")
    if len(lines) - 1 != m:
        raise InstanceFormatError(
            f"graph header promises {m} edges, file has {len(lines) - 1}"
        )
    edges = [tuple(_ints(line, 2, "graph edge")) for line in lines[1:]]
    try:
        return Graph(n, edges)
    except ValueError as exc:
        raise InstanceFormatError(f"bad graph: {exc}") from None


def parse_poset(text: str) -> Poset:
    lines = content_lines(text)
    if not lines:
        raise InstanceFormatError("poset file is empty")
    n, k = _ints(lines[0], 2, "poset header")
    if len(lines) - 1 != k:
        raise InstanceFormatError(
            f"poset header promises {k} relations, file has {len(lines) - 1}"
        )
    relations = [tuple(_ints(line, 2, "poset relation")) for line in lines[1:]]
    try:
        return Poset(n, relations)
    except ValueError as exc:
        raise InstanceFormatError(f"bad poset: {exc}") from None


def parse_polytope(text: str) -> LinearSystem:
    lines = content_lines(text)
    if not lines:
        raise InstanceFormatError("polytope file is empty")
    m, n = _ints(lines[0], 2, "polytope header")
    if m < 0 or n < 0:
        raise InstanceFormatError("polytope dimensions must be non-negative")
    if len(lines) - 1 != m:
        raise InstanceFormatError(
            f"polytope header promises {m} rows, file has {len(lines) - 1}"
        )
    rows, rhs = [], []
    for line in lines[1:]:
        fields = line.split()
        if len(fields) != n + 1:
            raise InstanceFormatError(
                f"polytope row: expected {n + 1} rationals, got {line!r}"
            )
        try:
            values = [Fraction(f) for f in fields]
        except (ValueError, ZeroDivisionError):
            raise InstanceFormatError(
                f"polytope row: not rationals: {line!r}"
            ) from None
        rows.append(values[:n])
        rhs.append(values[n])
    if not rows:
        return LinearSystem.unit_cube(n)
    return LinearSystem(rows, rhs)


def parse_explicit(text: str) -> list[BitString]:
    lines = content_lines(text)
    if not lines:
        raise InstanceFormatError("explicit set file contains no bitstrings")
    members = []
    for line in lines:
        try:
            members.append(BitString.from_text(line))
        except ValueError:
            raise InstanceFormatError(f"not a bitstring: {line!r}") from None
    lengths = {len(x) for x in members}
    if len(lengths) != 1:
        raise InstanceFormatError("bitstrings must share one length")
    return members


def parse_matroid(text: str, directory: Union[Path, str, None] = None) -> MatroidOracle:
    lines = content_lines(text)
    if len(lines) != 1:
        raise InstanceFormatError("matroid file must hold exactly one declaration")
    fields = lines[0].split()
    if fields[0] == "uniform" and len(fields) == 3:
        n, k = _ints(" ".join(fields[1:]), 2, "uniform matroid")
        try:
            return UniformMatroid(n, k)
        except ValueError as exc:
            raise InstanceFormatError(f"bad matroid: {exc}") from None
    if fields[0] == "graphic" and len(fields) == 2:
        target = Path(fields[1])
        if not target.is_absolute():
            if directory is None:
                raise InstanceFormatError(
                    "graphic matroid references a relative path; directory unknown"
                )
            target = Path(directory) / target
        try:
            graph_text = target.read_text()
        except OSError as exc:
            raise InstanceFormatError(f"cannot read graph file: {exc}") from None
        return GraphicMatroid(parse_graph(graph_text))
    raise InstanceFormatError(
        f"matroid must be 'uniform n k' or 'graphic <graph-file>', got {lines[0]!r}"
    )


def load_matroid(path: Union[Path, str]) -> MatroidOracle:
    path = Path(path)
    return parse_matroid(path.read_text(), path.parent)
