"""Graph file parsing and emission: plain edge lists and DIMACS.

Edge list: first non-comment line "n m", then m lines "u v" with 0-based
ids; '#' starts a comment. DIMACS: "p edge n m" header, "e u v" lines with
1-based ids, 'c' comment lines. Duplicate edges collapse in both formats.
"""

from __future__ import annotations

from .graph import Graph, GraphError, build_graph


class ParseError(ValueError):
    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


def _meaningful_lines(text: str, comment_starts: tuple[str, ...]):
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or any(line.startswith(c) for c in comment_starts):
            continue
        yield line_no, line


def _pair(line_no: int, parts: list[str], what: str) -> tuple[int, int]:
    if len(parts) != 2:
        raise ParseError(line_no, f"expected two integers for {what}, got {parts!r}")
    try:
        return int(parts[0]), int(parts[1])
    except ValueError:
        raise ParseError(line_no, f"non-integer {what}: {parts!r}") from None


def parse_edge_list(text: str) -> Graph:
    lines = list(_meaningful_lines(text, ("#",)))
    if not lines:
        raise ParseError(0, "empty edge-list file")
    line_no, header = lines[0]
    n, m = _pair(line_no, header.split(), "header 'n m'")
    body = lines[1:]
    if len(body) != m:
        raise ParseError(line_no, f"header promises {m} edges, file has {len(body)}")
    edges = []
    for line_no, line in body:
        u, v = _pair(line_no, line.split(), "edge")
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(line_no, f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise ParseError(line_no, f"self-loop at vertex {u}")
        edges.append((u, v))
    return build_graph(n, edges)


def parse_dimacs(text: str) -> Graph:
    n = None
    edges = []
    for line_no, line in _meaningful_lines(text, ("c",)):
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise ParseError(line_no, "duplicate problem line")
            if len(parts) != 4 or parts[1] != "edge":
                raise ParseError(line_no, f"expected 'p edge n m', got {line!r}")
            n, _m = _pair(line_no, parts[2:], "problem size")
        elif parts[0] == "e":
            if n is None:
                raise ParseError(line_no, "edge before the problem line")
            u, v = _pair(line_no, parts[1:], "edge")
            if not (1 <= u <= n and 1 <= v <= n):
                raise ParseError(line_no, f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ParseError(line_no, f"self-loop at vertex {u}")
            edges.append((u - 1, v - 1))
        else:
            raise ParseError(line_no, f"unrecognized line {line!r}")
    if n is None:
        raise ParseError(0, "missing 'p edge n m' line")
    return build_graph(n, edges)


def parse_graph(text: str) -> Graph:
    """Parse either format, auto-detected from the first meaningful line."""
    for _line_no, line in _meaningful_lines(text, ("#",)):
        if line.startswith(("p ", "c ", "e ")) or line in ("p", "c", "e"):
            return parse_dimacs(text)
        return parse_edge_list(text)
    raise ParseError(0, "empty graph file")


def emit_edge_list(g: Graph, comments: list[str] | None = None) -> str:
    lines = [f"# {c}" for c in comments or []]
    edges = list(g.edges())
    lines.append(f"{max(g.vertices, default=-1) + 1} {len(edges)}")
    lines += [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def emit_dimacs(g: Graph, comments: list[str] | None = None) -> str:
    lines = [f"c {c}" for c in comments or []]
    edges = list(g.edges())
    lines.append(f"p edge {max(g.vertices, default=-1) + 1} {len(edges)}")
    lines += [f"e {u + 1} {v + 1}" for u, v in edges]
    return "\n".join(lines) + "\n"
