"""Command line: gen, convert, verify, render."""

from __future__ import annotations

import argparse
import json
import sys

from . import catalan, cdv, explosion, render, verify, walsh_lehman, words
from .planar_map import TreeRootedMap, dumps, enumerate_maps


def _read_map(s: str) -> TreeRootedMap:
    return TreeRootedMap.from_json(json.loads(s))


def _write_map(mt: TreeRootedMap) -> str:
    return dumps(mt.canonical().to_json())


def _read_pair(s: str):
    d = json.loads(s)
    t = catalan.PlaneTree(d["tree"])
    parts = d["partition"]
    return t, catalan.NonCrossingPartition(t.size + 1, tuple(tuple(p) for p in parts))


def _write_pair(t, p) -> str:
    return dumps({"tree": t.word, "partition": p.to_json()})


def _read_cdv(s: str):
    d = json.loads(s)
    return catalan.PlaneTree(d["tree"]), catalan.word_to_binary(d["binary"])


def _write_cdv(t, b) -> str:
    return dumps({"tree": t.word, "binary": catalan.binary_to_word(b)})


def _shuffle(s: str) -> str:
    return words.require_paren_shuffle(s)


ROUTES = {
    ("shuffle", "map"): lambda s: _write_map(walsh_lehman.xi_inv(_shuffle(s))),
    ("map", "shuffle"): lambda s: walsh_lehman.xi(_read_map(s).canonical()),
    ("map", "pair"): lambda s: _write_pair(*explosion.big_phi(_read_map(s))),
    ("pair", "map"): lambda s: _write_map(explosion.big_phi_inv(*_read_pair(s))),
    ("shuffle", "pair"): lambda s: _write_pair(*explosion.big_phi(walsh_lehman.xi_inv(_shuffle(s)))),
    ("pair", "shuffle"): lambda s: walsh_lehman.xi(explosion.big_phi_inv(*_read_pair(s)).canonical()),
    ("shuffle", "pair-cdv"): lambda s: _write_cdv(*cdv.lambda_(_shuffle(s))),
    ("pair-cdv", "shuffle"): lambda s: cdv.lambda_inv(*_read_cdv(s)),
    ("pair-cdv", "pair"): lambda s: (lambda t, b: _write_pair(t, catalan.big_theta(b)))(*_read_cdv(s)),
    ("shuffle", "walk"): lambda s: words.to_walk(s),
    ("walk", "shuffle"): lambda s: words.from_walk(s),
    ("binarytree", "ncp"): lambda s: dumps(catalan.big_theta(catalan.word_to_binary(s)).to_json()),
    ("shuffle", "sequence"): lambda s: str(cdv.lambda0(words.require_prefix_shuffle(s))),
}

# formats whose blank lines are meaningful (the empty word)
WORD_FORMATS = {"shuffle", "walk"}


def _inputs(args, fmt: str):
    if args.input:
        return list(args.input)
    lines = [ln.rstrip("\n") for ln in sys.stdin]
    if fmt in WORD_FORMATS:
        return list(words.read_words(lines))
    return [ln for ln in lines if ln.strip()]


def cmd_gen(args) -> int:
    n = args.n
    if args.kind == "shuffles":
        out = words.enumerate_paren_shuffles(n)
    elif args.kind == "maps":
        out = (dumps(m.to_json()) for m in enumerate_maps(n))
    elif args.kind == "trees":
        out = (t.word for t in catalan.enumerate_trees(n))
    elif args.kind == "ncps":
        out = (dumps(p.to_json()) for p in catalan.enumerate_ncps(n))
    else:
        out = (catalan.binary_to_word(b) for b in catalan.enumerate_binary_trees(n))
    for line in out:
        print(line)
    return 0


def cmd_convert(args) -> int:
    route = ROUTES.get((args.src, args.dst))
    if route is None:
        known = ", ".join(f"{a}->{b}" for a, b in ROUTES)
        print(f"no route {args.src}->{args.dst}; known routes: {known}", file=sys.stderr)
        return 2
    status = 0
    for item in _inputs(args, args.src):
        try:
            print(route(item))
        except (ValueError, KeyError, json.JSONDecodeError) as e:
            print(f"error: {item!r}: {e}", file=sys.stderr)
            status = 1
    return status


def cmd_verify(args) -> int:
    ok = True
    for res in verify.run(args.suite, args.n):
        print(res.report())
        ok &= res.ok
    return 0 if ok else 1


def _render_one(kind: str, s: str) -> str:
    if kind == "map":
        return render.map_to_dot(_read_map(s))
    if kind == "tree":
        return render.tree_to_dot(catalan.PlaneTree(s))
    if kind == "binarytree":
        return render.binary_to_dot(catalan.word_to_binary(s))
    if kind == "ncp":
        parts = json.loads(s)
        n = sum(len(p) for p in parts)
        return render.ncp_to_dot(catalan.NonCrossingPartition(n, tuple(tuple(p) for p in parts)))
    if kind == "pair":
        t, p = _read_pair(s)
        return render.tree_to_dot(t) + render.ncp_to_dot(p)
    # a shuffle: the whole pipeline, map, tree, partition and binary tree
    w = _shuffle(s)
    mt = walsh_lehman.xi_inv(w).canonical()
    t, p = explosion.big_phi(mt)
    return (render.map_to_dot(mt) + render.tree_to_dot(t) + render.ncp_to_dot(p)
            + render.binary_to_dot(cdv.lambda1_prime(w)))


def cmd_render(args) -> int:
    for item in _inputs(args, "shuffle" if args.kind == "shuffle" else "json"):
        sys.stdout.write(_render_one(args.kind, item))
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="treerooted", description="Tree-rooted maps, shuffles and their bijections.")
    sub = ap.add_subparsers(dest="cmd", required=True)

    g = sub.add_parser("gen", help="enumerate objects of a given size")
    g.add_argument("kind", choices=["shuffles", "maps", "trees", "ncps", "binary-trees"])
    g.add_argument("-n", type=int, required=True)
    g.set_defaults(func=cmd_gen)

    fmts = sorted({x for pair in ROUTES for x in pair})
    c = sub.add_parser("convert", help="convert between encodings (one item per line on stdin)")
    c.add_argument("--from", dest="src", required=True, choices=fmts)
    c.add_argument("--to", dest="dst", required=True, choices=fmts)
    c.add_argument("input", nargs="*", help="items to convert instead of reading stdin")
    c.set_defaults(func=cmd_convert)

    v = sub.add_parser("verify", help="run exhaustive checks up to size n")
    v.add_argument("-n", type=int, default=4)
    v.add_argument("--suite", default="all", choices=[*verify.SUITES, "all"])
    v.set_defaults(func=cmd_verify)

    r = sub.add_parser("render", help="emit Graphviz DOT")
    r.add_argument("kind", choices=["map", "tree", "binarytree", "ncp", "pair", "shuffle"])
    r.add_argument("--format", default="dot", choices=["dot"])
    r.add_argument("input", nargs="*")
    r.set_defaults(func=cmd_render)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args, extra = ap.parse_known_args(argv)
    # argparse fills a trailing nargs="*" before later options; keep the leftovers as inputs
    if extra and hasattr(args, "input") and not any(x.startswith("-") for x in extra):
        args.input = [*args.input, *extra]
    elif extra:
        ap.error(f"unrecognized arguments: {' '.join(extra)}")
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
