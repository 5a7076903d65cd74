"""Graphviz DOT text for maps, trees, binary trees and partitions.

Output depends only on the input object, so repeated runs are byte-identical.
"""

from __future__ import annotations

from .catalan import BinaryTree, Leaf, NonCrossingPartition, PlaneTree
from .orientation import delta
from .planar_map import OrientedMap, RootedMap, TreeRootedMap


def _lines(kind: str, name: str, body: list[str], attrs: list[str] = ()) -> str:
    return "\n".join([f"{kind} {name} {{", *[f"  {a};" for a in attrs], *[f"  {b};" for b in body], "}"]) + "\n"


def map_to_dot(obj, name: str = "map") -> str:
    """Vertices are rotation cycles; tree edges are bold, oriented edges get
    arrowheads, and the root is an arrow from a point node."""
    tree: frozenset = frozenset()
    heads = None
    if isinstance(obj, TreeRootedMap):
        tree = obj.tree
        heads = delta(obj).heads
        m = obj.map
    elif isinstance(obj, OrientedMap):
        heads = obj.heads
        m = obj.map
    elif isinstance(obj, RootedMap):
        m = obj
    else:
        raise TypeError(f"cannot render {type(obj).__name__} as a map")
    vid = m.vertex_of()
    body = [f'v{k} [label="{k}"]' for k in range(len(m.vertices()))]
    body.append('root [shape=point]')
    body.append(f"root -> v{vid[m.root]} [penwidth=2]")
    for x, y in m.edges():
        if heads is not None and x in heads:
            x, y = y, x
        opts = [f'taillabel="{x}"', f'headlabel="{y}"']
        if x in tree:
            opts.append("penwidth=3")
        if heads is None:
            opts.append("dir=none")
        body.append(f"v{vid[x]} -> v{vid[y]} [{', '.join(opts)}]")
    return _lines("digraph", name, body, ["node [shape=circle]"])


def tree_to_dot(t: PlaneTree, name: str = "tree") -> str:
    par = t.parents()
    body = [f'n{i} [label="{i}"]' for i in range(len(par))]
    body += [f"n{p} -> n{i}" for i, p in enumerate(par) if p >= 0]
    return _lines("digraph", name, body, ["node [shape=circle]", "ordering=out"])


def binary_to_dot(b: BinaryTree, name: str = "binary") -> str:
    """Internal nodes are points; active leaves circles, inactive leaves squares."""
    body: list[str] = []
    counter = 0

    def rec(x) -> str:
        nonlocal counter
        me = f"n{counter}"
        counter += 1
        if isinstance(x, Leaf):
            shape = "circle" if x.active else "square"
            body.append(f'{me} [shape={shape}, label=""]')
            return me
        body.append(f'{me} [shape=point]')
        for child, side in ((x.left, "L"), (x.right, "R")):
            c = rec(child)
            body.append(f'{me} -> {c} [label="{side}"]')
        return me

    rec(b)
    return _lines("digraph", name, body, ["ordering=out"])


def ncp_to_dot(p: NonCrossingPartition, name: str = "ncp") -> str:
    """Arc diagram: elements on a line, consecutive members of a part joined by arcs."""
    body = [f'e{i} [label="{i}"]' for i in range(1, p.n + 1)]
    if p.n:
        body.append("{ rank=same; " + " ".join(f"e{i}" for i in range(1, p.n + 1)) + " }")
        body += [f"e{i} -> e{i + 1} [style=invis]" for i in range(1, p.n)]
    for part in p.parts:
        body += [f"e{x} -> e{y} [dir=none, constraint=false, headport=n, tailport=n]" for x, y in zip(part, part[1:])]
    return _lines("digraph", name, body, ["node [shape=circle]", "rankdir=LR"])
