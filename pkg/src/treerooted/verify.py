"""Exhaustive verification suites.

Every suite walks all objects up to a size bound and stops at the first
failing object, which it reports as a counterexample.  Modules are reached
through their attributes at call time so a patched function is the one
checked.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import catalan, cdv, explosion, orientation, planar_map, prefix_verify, walsh_lehman, words


@dataclass
class SuiteResult:
    suite: str
    ok: bool
    counterexample: str | None = None
    info: list[str] = field(default_factory=list)

    def report(self) -> str:
        head = f"{'PASS' if self.ok else 'FAIL'} {self.suite}"
        lines = [head] + [f"  {x}" for x in self.info]
        if not self.ok:
            lines.append(f"  counterexample: {self.counterexample}")
        return "\n".join(lines)


class _Fail(Exception):
    def __init__(self, what: str):
        super().__init__(what)
        self.what = what


def _expect(cond: bool, what: str) -> None:
    if not cond:
        raise _Fail(what)


def _run(name: str, body, n: int) -> SuiteResult:
    res = SuiteResult(name, True)
    try:
        body(n, res.info)
    except _Fail as f:
        res.ok = False
        res.counterexample = f.what
    except Exception as e:  # a crash is a failure of the property under test
        res.ok = False
        res.counterexample = f"{type(e).__name__}: {e}"
    return res


def suite_counts(n: int, info: list[str]) -> None:
    for k in range(n + 1):
        target = words.catalan(k) * words.catalan(k + 1)
        _expect(words.count_by_binomial_sum(k) == target, f"binomial sum at n={k}")
        _expect(words.count_by_product(k) == target, f"product formula at n={k}")
        distinct = {walsh_lehman.xi_inv(w).canonical_form() for w in words.enumerate_paren_shuffles(k)}
        _expect(len(distinct) == target, f"n={k}: {len(distinct)} tree-rooted maps, expected {target}")
        info.append(f"n={k}: {len(distinct)}")


def suite_xi(n: int, info: list[str]) -> None:
    for k in range(n + 1):
        for w in words.enumerate_paren_shuffles(k):
            _expect(walsh_lehman.xi(walsh_lehman.xi_inv(w)) == w, f"xi(xi_inv({w!r})) != {w!r}")
        total = 0
        for mt in planar_map.enumerate_tree_rooted_maps(k):
            w = walsh_lehman.xi(mt)
            _expect(walsh_lehman.xi_inv(w).canonical_form() == mt.canonical_form(),
                    f"xi_inv(xi(M)) != M for word {w!r}")
            total += 1
        info.append(f"n={k}: {total} tree-rooted maps round-trip")


def suite_orientation(n: int, info: list[str]) -> None:
    for k in range(n + 1):
        total = 0
        for m in planar_map.enumerate_maps(k):
            trees = list(planar_map.spanning_trees(m))
            for t in trees:
                mt = planar_map.TreeRootedMap(m, t)
                om = orientation.delta(mt)
                _expect(orientation.is_tree_orientation(om), f"delta not a tree-orientation: {walsh_lehman.xi(mt)!r}")
                _expect(orientation.gamma(om).canonical_form() == mt.canonical_form(),
                        f"gamma(delta(M)) != M for {walsh_lehman.xi(mt)!r}")
            good = 0
            for om in planar_map.all_orientations(m):
                fast = orientation.is_tree_orientation(om)
                if k <= 3:
                    _expect(fast == orientation.is_tree_orientation_oracle(om),
                            f"oracle disagrees on {planar_map.dumps(om.to_json())}")
                if fast:
                    good += 1
                    _expect(orientation.delta(orientation.gamma(om)).heads == om.heads,
                            f"delta(gamma(O)) != O on {planar_map.dumps(om.to_json())}")
            _expect(good == len(trees), f"{good} tree-orientations vs {len(trees)} spanning trees")
            total += good
        info.append(f"n={k}: {total} tree-orientations")


def suite_explosion(n: int, info: list[str]) -> None:
    for k in range(n + 1):
        for m in planar_map.enumerate_maps(k):
            for om in orientation.tree_orientations(m):
                t, p = explosion.phi(om)
                _expect(explosion.psi(t, p).canonical_form() == om.canonical_form(),
                        f"psi(phi(O)) != O on {planar_map.dumps(om.to_json())}")
        image = set()
        for w in words.enumerate_paren_shuffles(k):
            mt = walsh_lehman.xi_inv(w)
            t, p = explosion.big_phi(mt)
            _expect(explosion.big_phi_inv(t, p).canonical_form() == mt.canonical_form(),
                    f"big_phi_inv(big_phi(M)) != M for {w!r}")
            image.add((t, p))
        for t in catalan.enumerate_trees(k):
            for p in catalan.enumerate_ncps(k + 1):
                _expect(explosion.phi(explosion.psi(t, p)) == (t, p), f"phi(psi) != id on ({t.word!r}, {p})")
        target = words.catalan(k) * words.catalan(k + 1)
        _expect(len(image) == target, f"n={k}: image has {len(image)} pairs, expected {target}")
        info.append(f"n={k}: {len(image)} pairs hit")


def suite_cdv(n: int, info: list[str]) -> None:
    for k in range(n + 1):
        image = set()
        for w in words.enumerate_paren_shuffles(k):
            t, b = cdv.lambda_(w)
            _expect(t.size == k and catalan.num_nodes(b) == k + 1, f"sizes of lambda({w!r})")
            _expect(cdv.lambda_inv(t, b) == w, f"lambda_inv(lambda({w!r})) != {w!r}")
            image.add((t, catalan.binary_to_word(b)))
        target = words.catalan(k) * words.catalan(k + 1)
        _expect(len(image) == target, f"n={k}: lambda image has {len(image)} pairs, expected {target}")
        info.append(f"n={k}: {len(image)} distinct pairs")
    for length in range(2 * n + 1):
        for w in words.enumerate_prefix_shuffles(length):
            s, b = cdv.lambda0(w), cdv.lambda1(w)
            _expect(s.num_v == w.count("a") - w.count("A") + 1 and s.num_u == w.count("b") - w.count("B") + 1,
                    f"letter counts of lambda0({w!r})")
            _expect(s.total_edges() == w.count("A") + w.count("B"), f"edge count of lambda0({w!r})")
            _expect(catalan.num_nodes(b) == w.count("a") + w.count("b") + 1, f"node count of lambda1({w!r})")
            _expect(not cdv.pair_violations(s, b), f"lambda0/lambda1 of {w!r} disagree")


def suite_isomorphism(n: int, info: list[str]) -> None:
    for k in range(n + 1):
        count = 0
        for w in words.enumerate_paren_shuffles(k):
            om = orientation.delta(walsh_lehman.xi_inv(w))
            t, p = explosion.phi(om, check=False)
            _expect(t == cdv.lambda0_prime(w), f"phi0 != lambda0' for {w!r}")
            _expect(p == catalan.big_theta(cdv.lambda1_prime(w)), f"phi1 != Theta(lambda1') for {w!r}")
            count += 1
        info.append(f"n={k}: {count} words agree")


def suite_prefix(n: int, info: list[str]) -> None:
    for k in range(n + 1):
        for w in words.enumerate_paren_shuffles(k):
            pm = prefix_verify.build_prefix_map(w)
            om = orientation.delta(walsh_lehman.xi_inv(w))
            _expect(pm.oriented_map().canonical_form() == om.canonical_form(), f"prefix-map of {w!r} != delta(xi_inv)")
            pt = prefix_verify.partition_tree(w)
            _expect(pt.tree == catalan.upsilon(explosion.phi1(om)), f"partition-tree of {w!r} != Upsilon(phi1)")
            _expect(len(pt.white_order) == 1 and len(pt.black_order) == 1,
                    f"complete {w!r} should keep one active white and one active black")
    checked = 0
    for length in range(2 * n + 1):
        for w in words.enumerate_prefix_shuffles(length):
            _expect(prefix_verify.check_prop_lambda0(w), f"prefix-forest vs lambda0 at {w!r}")
            _expect(prefix_verify.check_prop_lambda1(w), f"partition-tree vs theta(lambda1) at {w!r}")
            _expect(prefix_verify.root_face_dangling_order(w) == prefix_verify.tour_dangling_order(w),
                    f"dangling-head orders differ at {w!r}")
            if length < 2 * n:
                for c in prefix_verify.extensions(w):
                    _expect(prefix_verify.evolution_check(w, c), f"prefix-map evolution at {w + c!r}")
                    _expect(prefix_verify.partition_tree_evolution_check(w, c), f"partition-tree evolution at {w + c!r}")
                    _expect(prefix_verify.theta_lambda1_evolution_check(w, c), f"theta-lambda1 evolution at {w + c!r}")
            checked += 1
    info.append(f"{checked} prefix-shuffles of length <= {2 * n}")


SUITES = {
    "counts": suite_counts,
    "xi": suite_xi,
    "orientation": suite_orientation,
    "explosion": suite_explosion,
    "cdv": suite_cdv,
    "isomorphism": suite_isomorphism,
    "prefix": suite_prefix,
}


def run(suite: str, n: int) -> list[SuiteResult]:
    names = list(SUITES) if suite == "all" else [suite]
    return [_run(name, SUITES[name], n) for name in names]
