"""Line-based text format for voltage embeddings.

Canonical layout, one declaration per line::

    group cyclic 6
    vertices 2
    edge a 0 1 sign=+ voltage=2
    rotation 0: a+ b+
    rotation 1: b- a-
    circle z: a b
    faces top: 0 1

Blank lines and ``#`` comments are allowed.  Parsing is strict: every
diagnostic carries its line number, and printing a parsed file reproduces the
canonical text exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .groups import FiniteGroup, GroupError, direct_product, make_cyclic, make_table
from .surface import EmbeddedGraph, SurfaceError
from .voltage import VoltageEmbedding, VoltageError


class ParseError(ValueError):
    pass


@dataclass
class InstanceFile:
    """A parsed instance: the embedding plus named circles and face chains."""

    group_tokens: tuple[str, ...]
    ve: VoltageEmbedding
    edge_names: tuple[str, ...]
    circles: dict[str, tuple[int, ...]] = field(default_factory=dict)
    face_chains: dict[str, tuple[int, ...]] = field(default_factory=dict)


def _parse_group_tokens(tokens: list[str], lineno: int) -> FiniteGroup:
    if not tokens:
        raise ParseError(f"line {lineno}: missing group spec")
    kind = tokens.pop(0)
    if kind == "cyclic":
        if not tokens or not tokens[0].isdigit():
            raise ParseError(f"line {lineno}: 'cyclic' needs an order")
        return make_cyclic(int(tokens.pop(0)))
    if kind == "product":
        g1 = _parse_group_tokens(tokens, lineno)
        g2 = _parse_group_tokens(tokens, lineno)
        return direct_product(g1, g2)
    raise ParseError(f"line {lineno}: unknown group kind {kind!r}")


class _Lines:
    def __init__(self, text: str):
        self.items = []  # (lineno, content)
        for i, raw in enumerate(text.splitlines(), start=1):
            line = raw.split("#", 1)[0].strip()
            if line:
                self.items.append((i, line))
        self.pos = 0
        self.last = self.items[-1][0] if self.items else 1

    def peek(self):
        return self.items[self.pos] if self.pos < len(self.items) else (None, None)

    def take(self):
        item = self.peek()
        if item[0] is not None:
            self.pos += 1
        return item


def parse(text: str) -> InstanceFile:
    lines = _Lines(text)

    lineno, line = lines.take()
    if line is None or not line.startswith("group "):
        raise ParseError(f"line {lineno or 1}: file must start with a group declaration")
    tokens = line.split()[1:]
    group_tokens = tuple(tokens)
    if tokens and tokens[0] == "table":
        if len(tokens) != 2 or not tokens[1].isdigit():
            raise ParseError(f"line {lineno}: 'group table' needs an order")
        n = int(tokens[1])
        rows = []
        for _ in range(n):
            rlineno, rline = lines.take()
            if rline is None:
                raise ParseError(f"line {lineno}: table row missing")
            cells = rline.split()
            if len(cells) != n or not all(c.isdigit() for c in cells):
                raise ParseError(f"line {rlineno}: expected {n} numeric table entries")
            rows.append([int(c) for c in cells])
        try:
            group = make_table(rows)
        except GroupError as exc:
            raise ParseError(f"line {lineno}: {exc}") from None
    else:
        work = list(tokens)
        try:
            group = _parse_group_tokens(work, lineno)
        except GroupError as exc:
            raise ParseError(f"line {lineno}: {exc}") from None
        if work:
            raise ParseError(f"line {lineno}: trailing tokens after group spec")

    lineno, line = lines.take()
    parts = line.split() if line else []
    if len(parts) != 2 or parts[0] != "vertices" or not parts[1].isdigit():
        raise ParseError(f"line {lineno or lines.last}: expected 'vertices <n>'")
    vertex_count = int(parts[1])

    edge_names: list[str] = []
    edges: list[tuple[int, int]] = []
    signature: list[int] = []
    alpha: list[int] = []
    while True:
        lineno, line = lines.peek()
        if line is None or not line.startswith("edge "):
            break
        lines.take()
        parts = line.split()
        if len(parts) != 6:
            raise ParseError(f"line {lineno}: expected "
                             "'edge <name> <tail> <head> sign=<+|-> voltage=<element>'")
        name = parts[1]
        if name in edge_names:
            raise ParseError(f"line {lineno}: duplicate edge name {name!r}")
        if not (parts[2].isdigit() and parts[3].isdigit()):
            raise ParseError(f"line {lineno}: endpoints must be vertex indices")
        t, h = int(parts[2]), int(parts[3])
        if t >= vertex_count or h >= vertex_count:
            raise ParseError(f"line {lineno}: endpoint out of range")
        if parts[4] not in ("sign=+", "sign=-"):
            raise ParseError(f"line {lineno}: expected sign=+ or sign=-")
        if not parts[5].startswith("voltage="):
            raise ParseError(f"line {lineno}: expected voltage=<element>")
        try:
            volt = group.parse_element(parts[5][len("voltage="):])
        except GroupError as exc:
            raise ParseError(f"line {lineno}: {exc}") from None
        edge_names.append(name)
        edges.append((t, h))
        signature.append(1 if parts[4] == "sign=+" else -1)
        alpha.extend([volt, group.inv(volt)])
    if not edges:
        raise ParseError(f"line {lineno or lines.last}: at least one edge is required")

    def parse_dart(token: str, lno: int) -> int:
        if len(token) < 2 or token[-1] not in "+-":
            raise ParseError(f"line {lno}: dart {token!r} must end with + or -")
        name = token[:-1]
        if name not in edge_names:
            raise ParseError(f"line {lno}: unknown edge name {name!r}")
        e = edge_names.index(name)
        return 2 * e if token[-1] == "+" else 2 * e + 1

    rotation: dict[int, list[int]] = {}
    last_lineno = lines.items[-1][0] if lines.items else 1
    while True:
        lineno, line = lines.peek()
        if line is None or not line.startswith("rotation "):
            break
        lines.take()
        head_part, _, tail_part = line.partition(":")
        parts = head_part.split()
        if len(parts) != 2 or not parts[1].isdigit() or not _:
            raise ParseError(f"line {lineno}: expected 'rotation <v>: <darts>'")
        v = int(parts[1])
        if v >= vertex_count:
            raise ParseError(f"line {lineno}: vertex {v} out of range")
        if v in rotation:
            raise ParseError(f"line {lineno}: duplicate rotation for vertex {v}")
        rotation[v] = [parse_dart(tok, lineno) for tok in tail_part.split()]
        last_lineno = lineno
    missing = [v for v in range(vertex_count) if v not in rotation]
    if missing:
        raise ParseError(f"line {last_lineno}: missing rotation for vertex {missing[0]}")

    try:
        graph = EmbeddedGraph(vertex_count, edges,
                              [rotation[v] for v in range(vertex_count)], signature)
        ve = VoltageEmbedding(graph, group, alpha)
    except (SurfaceError, VoltageError) as exc:
        raise ParseError(f"line {last_lineno}: {exc}") from None

    inst = InstanceFile(group_tokens, ve, tuple(edge_names))
    while True:
        lineno, line = lines.take()
        if line is None:
            break
        head_part, _, tail_part = line.partition(":")
        parts = head_part.split()
        if len(parts) == 2 and parts[0] == "circle" and _:
            name = parts[1]
            if name in inst.circles:
                raise ParseError(f"line {lineno}: duplicate circle name {name!r}")
            es = []
            for tok in tail_part.split():
                if tok not in edge_names:
                    raise ParseError(f"line {lineno}: unknown edge name {tok!r}")
                es.append(edge_names.index(tok))
            inst.circles[name] = tuple(es)
        elif len(parts) == 2 and parts[0] == "faces" and _:
            name = parts[1]
            if name in inst.face_chains:
                raise ParseError(f"line {lineno}: duplicate face chain name {name!r}")
            nfaces = graph.face_count()
            fs = []
            for tok in tail_part.split():
                if not tok.isdigit() or int(tok) >= nfaces:
                    raise ParseError(f"line {lineno}: face index {tok!r} out of range")
                fs.append(int(tok))
            inst.face_chains[name] = tuple(fs)
        else:
            raise ParseError(f"line {lineno}: unrecognized declaration {line!r}")
    return inst


def print_instance(inst: InstanceFile) -> str:
    ve = inst.ve
    base, g = ve.base, ve.group
    out = ["group " + " ".join(inst.group_tokens)]
    if inst.group_tokens and inst.group_tokens[0] == "table":
        for row in g.table:
            out.append(" ".join(str(x) for x in row))
    out.append(f"vertices {base.vertex_count}")
    for e, name in enumerate(inst.edge_names):
        sign = "+" if base.signature[e] == 1 else "-"
        out.append(f"edge {name} {base.edge_tails[e]} {base.edge_heads[e]} "
                   f"sign={sign} voltage={g.name(ve.alpha[2 * e])}")
    for v in range(base.vertex_count):
        darts = " ".join(
            inst.edge_names[d >> 1] + ("+" if d & 1 == 0 else "-")
            for d in base.rotation[v])
        out.append(f"rotation {v}: {darts}")
    for name, es in inst.circles.items():
        out.append(f"circle {name}: " + " ".join(inst.edge_names[e] for e in es))
    for name, fs in inst.face_chains.items():
        out.append(f"faces {name}: " + " ".join(str(f) for f in fs))
    return "\n".join(out) + "\n"


def default_edge_names(count: int) -> tuple[str, ...]:
    return tuple(f"e{i}" for i in range(count))


def instance_for(ve: VoltageEmbedding, group_tokens=None,
                 edge_names=None) -> InstanceFile:
    """Wrap a voltage embedding for printing, with generated names if needed."""
    if group_tokens is None:
        group_tokens = ("table", str(ve.group.order))
    if edge_names is None:
        edge_names = default_edge_names(ve.base.edge_count)
    return InstanceFile(tuple(group_tokens), ve, tuple(edge_names))
