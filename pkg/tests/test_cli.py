import json
import random

import pytest

from treerooted import cdv, cli
from treerooted.words import enumerate_paren_shuffles


def run(capsys, argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        import io

        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = cli.main(argv)
    out = capsys.readouterr().out
    return code, out


def test_gen(capsys):
    assert run(capsys, ["gen", "shuffles", "-n", "1"]) == (0, "aA\nbB\n")
    code, out = run(capsys, ["gen", "maps", "-n", "0"])
    assert len(out.splitlines()) == 1 and json.loads(out)["h"] == 1
    assert len(run(capsys, ["gen", "ncps", "-n", "3"])[1].splitlines()) == 5
    assert len(run(capsys, ["gen", "trees", "-n", "3"])[1].splitlines()) == 5
    assert len(run(capsys, ["gen", "binary-trees", "-n", "4"])[1].splitlines()) == 14


def test_convert_pipeline_agrees_with_cdv_route(capsys):
    _, m = run(capsys, ["convert", "--from", "shuffle", "--to", "map", "baAaBA"])
    _, pair = run(capsys, ["convert", "--from", "map", "--to", "pair", m.strip()])
    _, cdv_pair = run(capsys, ["convert", "--from", "shuffle", "--to", "pair-cdv", "baAaBA"])
    _, theta_pair = run(capsys, ["convert", "--from", "pair-cdv", "--to", "pair", cdv_pair.strip()])
    assert pair == theta_pair
    assert json.loads(pair)["tree"] == "aAaaAA"


def test_walk_route(capsys):
    _, walk = run(capsys, ["convert", "--from", "shuffle", "--to", "walk", "abbAbaaBBAAB"])
    assert walk == "NEESENNWWSSW\n"
    assert run(capsys, ["convert", "--from", "walk", "--to", "shuffle", walk.strip()])[1] == "abbAbaaBBAAB\n"


def test_stdin_and_empty_word(capsys, monkeypatch):
    code, out = run(capsys, ["convert", "--from", "shuffle", "--to", "walk"], "aA\n\nbB\n", monkeypatch)
    assert code == 0 and out == "NS\n\nEW\n"


def test_round_trips_are_byte_exact(capsys):
    words = list(enumerate_paren_shuffles(5))
    sample = random.Random(2024).sample(words, 100)
    for there, back in [("map", "shuffle"), ("pair-cdv", "shuffle")]:
        _, mid = run(capsys, ["convert", "--from", "shuffle", "--to", there, *sample])
        _, out = run(capsys, ["convert", "--from", there, "--to", back, *mid.splitlines()])
        assert out.splitlines() == sample
    _, maps = run(capsys, ["convert", "--from", "shuffle", "--to", "map", *sample[:20]])
    _, pairs = run(capsys, ["convert", "--from", "map", "--to", "pair", *maps.splitlines()])
    _, again = run(capsys, ["convert", "--from", "pair", "--to", "map", *pairs.splitlines()])
    assert again == maps


def test_binarytree_to_ncp(capsys):
    assert run(capsys, ["convert", "--from", "binarytree", "--to", "ncp", "NNLiRiRi"])[1] == "[[1],[2]]\n"


def test_bad_input_reports_error(capsys):
    assert cli.main(["convert", "--from", "shuffle", "--to", "map", "aB"]) == 1
    assert "error" in capsys.readouterr().err
    assert cli.main(["convert", "--from", "ncp", "--to", "map"]) == 2


def test_verify_counts(capsys):
    code, out = run(capsys, ["verify", "-n", "2", "--suite", "counts"])
    assert code == 0
    assert "PASS counts" in out and "n=2: 10" in out


def test_verify_all_small(capsys):
    code, out = run(capsys, ["verify", "-n", "2", "--suite", "all"])
    assert code == 0 and "FAIL" not in out


def test_injected_bug_is_caught(capsys, monkeypatch):
    # graft on the wrong side: only words with a closing merge can notice
    monkeypatch.setattr(cdv, "sigma", lambda t1, t2: cdv.PlaneTree(t1.word + "a" + t2.word + "A"))
    code, out = run(capsys, ["verify", "-n", "3", "--suite", "isomorphism"])
    assert code == 1
    assert "FAIL isomorphism" in out and "counterexample: phi0 != lambda0'" in out


def test_injected_decoder_bug_is_caught(capsys, monkeypatch):
    from treerooted import walsh_lehman

    real = walsh_lehman.xi

    def broken(mt):
        w = real(mt)
        return w.swapcase() if w.startswith("aa") else w

    monkeypatch.setattr(walsh_lehman, "xi", broken)
    code, out = run(capsys, ["verify", "-n", "2", "--suite", "xi"])
    assert code == 1 and "counterexample" in out


def test_render(capsys):
    _, dot = run(capsys, ["render", "shuffle", "--format", "dot", "baAaBA"])
    assert dot.count("digraph") == 4
    assert run(capsys, ["render", "shuffle", "baAaBA"])[1] == dot
    _, m = run(capsys, ["convert", "--from", "shuffle", "--to", "map", "bB"])
    _, loop = run(capsys, ["render", "map", m.strip()])
    assert "root -> v0" in loop
