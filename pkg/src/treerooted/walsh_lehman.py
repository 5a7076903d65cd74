"""Encoding of tree-rooted maps by parenthesis-shuffles, both directions."""

from __future__ import annotations

from .planar_map import FOLLOW, RootedMap, TreeRootedMap, tour
from .words import InvalidShuffle, require_paren_shuffle


def xi(mt: TreeRootedMap) -> str:
    """Tour the spanning tree writing a/A on tree edges and b/B on crossed edges
    (lower case the first time an edge is met)."""
    seen = set()
    out = []
    alpha = mt.map.alpha
    for kind, h in tour(mt):
        first = alpha[h] not in seen
        seen.add(h)
        if kind == FOLLOW:
            out.append("a" if first else "A")
        else:
            out.append("b" if first else "B")
    return "".join(out)


def xi_inv(w: str) -> TreeRootedMap:
    """Rebuild the tree-rooted map of a parenthesis-shuffle.

    The word is replayed as a synthetic tour.  ``cur`` names the corner we
    stand in (the gap after half-edge ``cur``); every new half-edge is
    inserted there.  ``b``/``B`` half-edges are matched last-open-first-closed.
    """
    require_paren_shuffle(w)
    h = 1 + len(w)
    sigma = [0] * h
    alpha = [0] * h
    tree = set()
    nxt = 1
    cur = 0
    a_stack: list[int] = []
    b_stack: list[int] = []
    for c in w:
        if c == "a":
            x, y = nxt, nxt + 1
            nxt += 2
            sigma[x] = sigma[cur]
            sigma[cur] = x
            sigma[y] = y
            alpha[x], alpha[y] = y, x
            tree.update((x, y))
            a_stack.append(x)
            cur = y
        elif c == "A":
            x = a_stack.pop()
            if sigma[cur] != alpha[x]:
                raise InvalidShuffle(f"internal: tour desynchronised in {w!r}")
            cur = x
        else:
            z = nxt
            nxt += 1
            sigma[z] = sigma[cur]
            sigma[cur] = z
            if c == "b":
                alpha[z] = z
                b_stack.append(z)
            else:
                o = b_stack.pop()
                alpha[z], alpha[o] = o, z
            cur = z
    return TreeRootedMap(RootedMap(tuple(sigma), tuple(alpha), 0), frozenset(tree))
