"""Text formats: edge lists, minor models, list assignments, decompositions.

Edge-list format: a header line ``p <n> <m>``, then one ``u v`` pair per
line, 0-indexed and whitespace separated.  Anything from ``#`` to the end of
a line is a comment.  The writer emits edges sorted with u < v, so a
write/read/write round trip is bit-exact.
"""

from __future__ import annotations

from .coloring import Coloring, ListAssignment
from .decompose import Decomposition
from .errors import InputError
from .graphs import Graph, from_edge_list
from .minor import MinorModel, validate_model


def edge_list_to_str(G: Graph) -> str:
    lines = [f"p {G.n} {G.m}"]
    lines.extend(f"{u} {v}" for u, v in G.edges())
    return "\n".join(lines) + "\n"


def _content_lines(text: str) -> list[tuple[int, str]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            out.append((lineno, body))
    return out


def parse_edge_list(text: str) -> Graph:
    lines = _content_lines(text)
    if not lines:
        raise InputError("line 1: missing 'p <n> <m>' header")
    lineno, header = lines[0]
    fields = header.split()
    if len(fields) != 3 or fields[0] != "p":
        raise InputError(f"line {lineno}: expected 'p <n> <m>', got {header!r}")
    try:
        n, m = int(fields[1]), int(fields[2])
    except ValueError:
        raise InputError(f"line {lineno}: non-integer counts in {header!r}") from None
    edges = []
    for lineno, body in lines[1:]:
        fields = body.split()
        if len(fields) != 2:
            raise InputError(f"line {lineno}: expected 'u v', got {body!r}")
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError:
            raise InputError(f"line {lineno}: non-integer vertex id in {body!r}") from None
        if u == v:
            raise InputError(f"line {lineno}: loop edge {u} {v}")
        if not (0 <= u < n and 0 <= v < n):
            raise InputError(f"line {lineno}: vertex id out of range in {body!r}")
        edges.append((u, v))
    G = from_edge_list(n, edges)
    if G.m != m:
        raise InputError(
            f"header claims {m} edges but the body de-duplicates to {G.m}"
        )
    return G


def write_edge_list(G: Graph, path) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(edge_list_to_str(G))


def read_edge_list(path) -> Graph:
    with open(path, "r", encoding="ascii") as fh:
        return parse_edge_list(fh.read())


# -- minor models ----------------------------------------------------------


def model_to_str(G: Graph, model: MinorModel) -> str:
    valid = "true" if validate_model(G, model) else "false"
    lines = [f"# t={model.t} valid={valid}"]
    for s in model.branch_sets:
        lines.append(" ".join(str(v) for v in sorted(s)))
    return "\n".join(lines) + "\n"


def parse_model(text: str) -> MinorModel:
    sets = []
    for lineno, body in _content_lines(text):
        try:
            sets.append(frozenset(int(x) for x in body.split()))
        except ValueError:
            raise InputError(f"line {lineno}: non-integer vertex id") from None
    return MinorModel(tuple(sets))


# -- list assignments and colorings ----------------------------------------


def lists_to_str(lists: ListAssignment) -> str:
    lines = []
    for v, L in enumerate(lists):
        lines.append(f"{v}: " + " ".join(str(c) for c in sorted(L)))
    return "\n".join(lines) + "\n" if lines else ""


def parse_lists(text: str, n: int | None = None) -> list[frozenset[int]]:
    entries: dict[int, frozenset[int]] = {}
    for lineno, body in _content_lines(text):
        if ":" not in body:
            raise InputError(f"line {lineno}: expected 'v: c1 c2 ...', got {body!r}")
        head, tail = body.split(":", 1)
        try:
            v = int(head)
            colors = frozenset(int(c) for c in tail.split())
        except ValueError:
            raise InputError(f"line {lineno}: non-integer entry in {body!r}") from None
        if v in entries:
            raise InputError(f"line {lineno}: duplicate list for vertex {v}")
        entries[v] = colors
    count = n if n is not None else (max(entries) + 1 if entries else 0)
    missing = [v for v in range(count) if v not in entries]
    if missing:
        raise InputError(f"missing color list for vertex {missing[0]}")
    return [entries[v] for v in range(count)]


def coloring_to_str(coloring: Coloring) -> str:
    lines = [f"{v} {coloring[v]}" for v in sorted(coloring)]
    return "\n".join(lines) + "\n" if lines else ""


def parse_coloring(text: str) -> dict[int, int]:
    out: dict[int, int] = {}
    for lineno, body in _content_lines(text):
        fields = body.split()
        if len(fields) != 2:
            raise InputError(f"line {lineno}: expected 'v c', got {body!r}")
        try:
            v, c = int(fields[0]), int(fields[1])
        except ValueError:
            raise InputError(f"line {lineno}: non-integer entry in {body!r}") from None
        if v in out:
            raise InputError(f"line {lineno}: duplicate color for vertex {v}")
        out[v] = c
    return out


# -- decompositions ---------------------------------------------------------


def decomposition_to_str(D: Decomposition) -> str:
    lines = [f"# decomposition k={D.k}"]
    lines.append("X " + " ".join(str(v) for v in sorted(D.X)))
    lines.append("Y " + " ".join(str(v) for v in sorted(D.Y)))
    for y, x in sorted(D.matching):
        lines.append(f"M {y} {x}")
    return "\n".join(lines) + "\n"


def parse_decomposition(text: str) -> Decomposition:
    k = None
    X: frozenset[int] | None = None
    Y: frozenset[int] | None = None
    matching: list[tuple[int, int]] = []
    for raw in text.splitlines():
        stripped = raw.strip()
        if stripped.startswith("# decomposition"):
            for token in stripped.split():
                if token.startswith("k="):
                    k = int(token[2:])
    for lineno, body in _content_lines(text):
        fields = body.split()
        tag = fields[0]
        try:
            ids = [int(x) for x in fields[1:]]
        except ValueError:
            raise InputError(f"line {lineno}: non-integer vertex id in {body!r}") from None
        if tag == "X":
            X = frozenset(ids)
        elif tag == "Y":
            Y = frozenset(ids)
        elif tag == "M":
            if len(ids) != 2:
                raise InputError(f"line {lineno}: expected 'M y x'")
            matching.append((ids[0], ids[1]))
        else:
            raise InputError(f"line {lineno}: unknown section {tag!r}")
    if k is None or X is None or Y is None:
        raise InputError("decomposition needs a k= header plus X and Y sections")
    return Decomposition(X, Y, tuple(sorted(matching)), k)
