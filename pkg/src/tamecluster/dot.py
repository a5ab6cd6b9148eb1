"""DOT rendering of tubes, transjective components and the Gabriel quiver of B."""

from __future__ import annotations

from .ar import Catalog, Regular, Transjective
from .tilting import ConeDecomposition, TiltingModule, TorsionClass


class DotError(ValueError):
    pass


def _q(s: str) -> str:
    return '"' + str(s).replace("\\", "\\\\").replace('"', '\\"') + '"'


def _attrs(d: dict) -> str:
    return "[" + ", ".join(f"{k}={_q(v)}" for k, v in d.items()) + "]"


class _Graph:
    def __init__(self, name: str):
        self.name = name
        self.nodes: dict[str, dict] = {}
        self.edges: list[tuple[str, str, dict]] = []

    def node(self, key: str, **attrs):
        self.nodes.setdefault(key, {}).update(attrs)

    def edge(self, a: str, b: str, **attrs):
        self.edges.append((a, b, attrs))

    def render(self) -> str:
        out = [f"digraph {_q(self.name)} {{", "  rankdir=LR;"]
        for key, attrs in self.nodes.items():
            out.append(f"  {_q(key)} {_attrs(attrs)};" if attrs else f"  {_q(key)};")
        for a, b, attrs in self.edges:
            if a not in self.nodes or b not in self.nodes:
                raise DotError(f"edge {a} -> {b} references an undeclared node")
            out.append(f"  {_q(a)} -> {_q(b)}" + (f" {_attrs(attrs)}" if attrs else "") + ";")
        out.append("}")
        return "\n".join(out) + "\n"


def _marks(label, T: TiltingModule | None, torsion: TorsionClass | None, cones: ConeDecomposition | None) -> dict:
    attrs = {}
    if T is not None and label in T.labels:
        attrs["tilting"] = "true"
        attrs["shape"] = "box"
    if torsion is not None and label in torsion.members:
        attrs["torsion"] = "true"
        attrs["style"] = "filled"
        attrs["fillcolor"] = "lightgrey"
    if cones is not None:
        for k, c in enumerate(cones.cones, 1):
            if label in c.members:
                attrs["cone"] = f"W{k}"
    return attrs


def tube_dot(cat: Catalog, tube_id: str, T=None, torsion=None, cones=None, levels: int | None = None) -> str:
    t = cat.tube(tube_id)
    r = t.rank
    L = levels or cat.levels_for(t)
    g = _Graph(f"tube {tube_id}")
    for l in range(1, L + 1):
        for j in range(1, r + 1):
            lab = Regular(tube_id, j, l)
            g.node(str(lab), level=str(l), ray=str(j), dims=",".join(map(str, t.ray_dims(j, l))),
                   **_marks(lab, T, torsion, cones))
    for l in range(1, L + 1):
        for j in range(1, r + 1):
            if l < L:
                # irreducible mono along the ray, irreducible epi along the coray
                g.edge(str(Regular(tube_id, j, l)), str(Regular(tube_id, j, l + 1)), kind="mono")
                g.edge(str(Regular(tube_id, j, l + 1)), str(Regular(tube_id, j % r + 1, l)), kind="epi")
    return g.render()


def transjective_dot(cat: Catalog, side: str, T=None, torsion=None, power: int | None = None) -> str:
    K = cat.window.power if power is None else power
    Q = cat.Q
    g = _Graph(side)
    for k in range(K + 1):
        for i in range(Q.n):
            lab = Transjective(side, i + 1, k)
            g.node(str(lab), power=str(k), dims=",".join(map(str, cat.dims(lab))), **_marks(lab, T, torsion, None))
    for k in range(K + 1):
        for s, t in Q.arrows:
            if side == "preprojective":
                # P_t -> P_s and P_s -> tau^-1 P_t
                g.edge(str(Transjective(side, t + 1, k)), str(Transjective(side, s + 1, k)))
                if k < K:
                    g.edge(str(Transjective(side, s + 1, k)), str(Transjective(side, t + 1, k + 1)))
            else:
                # I_t -> I_s and tau I_s -> I_t
                g.edge(str(Transjective(side, t + 1, k)), str(Transjective(side, s + 1, k)))
                if k < K:
                    g.edge(str(Transjective(side, s + 1, k + 1)), str(Transjective(side, t + 1, k)))
    return g.render()


def quiver_dot(name: str, vertices: list[str], arrows: list[tuple[int, int]]) -> str:
    """Arrows are 0-based index pairs into ``vertices``."""
    g = _Graph(name)
    for v in vertices:
        g.node(v)
    for i, j in arrows:
        g.edge(vertices[i], vertices[j])
    return g.render()


def parse_dot_edges(text: str) -> tuple[set[str], list[tuple[str, str]]]:
    """Declared node ids and edges of a DOT text produced by this module."""
    import re
    tok = r'"((?:[^"\\]|\\.)*)"'
    nodes, edges = set(), []
    for line in text.splitlines():
        line = line.strip()
        m = re.match(tok + r"\s*->\s*" + tok, line)
        if m:
            edges.append((m.group(1), m.group(2)))
            continue
        m = re.match(tok + r"\s*(\[.*\])?;$", line)
        if m:
            nodes.add(m.group(1))
    return nodes, edges
