"""Words over the four-letter alphabet a, A (a-bar), b, B (b-bar).

A *parenthesis-shuffle* interleaves two balanced parenthesis systems, one
on ``a/A`` and one on ``b/B``.  Its prefixes are *prefix-shuffles*.  All
words are plain ``str`` values; validity is a property checked on demand.
"""

from __future__ import annotations

import enum
from math import comb
from typing import Iterator

A_OPEN, A_CLOSE, B_OPEN, B_CLOSE = "a", "A", "b", "B"
ALPHABET = (A_OPEN, A_CLOSE, B_OPEN, B_CLOSE)  # enumeration order a < A < b < B

_STEP_OF = {A_OPEN: "N", A_CLOSE: "S", B_OPEN: "E", B_CLOSE: "W"}
_LETTER_OF = {step: letter for letter, step in _STEP_OF.items()}


class InvalidAlphabet(ValueError):
    pass


class InvalidShuffle(ValueError):
    pass


class InvalidWalk(ValueError):
    pass


class WordClass(enum.Enum):
    NOT_PREFIX = "NotPrefix"
    PREFIX = "Prefix"
    COMPLETE = "Complete"


def catalan(n: int) -> int:
    if n < 0:
        raise ValueError("catalan: n must be >= 0")
    return comb(2 * n, n) // (n + 1)


def _check_letters(w: str, allowed: str) -> None:
    for i, c in enumerate(w):
        if c not in allowed:
            raise InvalidAlphabet(f"letter {c!r} at position {i} not in {{{', '.join(allowed)}}}")


def is_paren_system(w: str) -> bool:
    """True iff ``w`` over {a, A} is balanced with no negative prefix."""
    _check_letters(w, "aA")
    depth = 0
    for c in w:
        depth += 1 if c == A_OPEN else -1
        if depth < 0:
            return False
    return depth == 0


def classify(w: str) -> WordClass:
    _check_letters(w, "aAbB")
    da = db = 0
    for c in w:
        if c == A_OPEN:
            da += 1
        elif c == A_CLOSE:
            da -= 1
        elif c == B_OPEN:
            db += 1
        else:
            db -= 1
        if da < 0 or db < 0:
            return WordClass.NOT_PREFIX
    return WordClass.COMPLETE if da == db == 0 else WordClass.PREFIX


def is_prefix_shuffle(w: str) -> bool:
    return classify(w) is not WordClass.NOT_PREFIX


def is_paren_shuffle(w: str) -> bool:
    return classify(w) is WordClass.COMPLETE


def require_paren_shuffle(w: str) -> str:
    if classify(w) is not WordClass.COMPLETE:
        raise InvalidShuffle(f"not a parenthesis-shuffle: {w!r}")
    return w


def require_prefix_shuffle(w: str) -> str:
    if classify(w) is WordClass.NOT_PREFIX:
        raise InvalidShuffle(f"not a prefix-shuffle: {w!r}")
    return w


def size(w: str) -> int:
    return len(w) // 2


def subword_a(w: str) -> str:
    return "".join(c for c in w if c in "aA")


def subword_b(w: str) -> str:
    return "".join(c for c in w if c in "bB")


def plus_completion(w: str) -> str:
    """The a-subword closed by appending one ``A`` per unmatched ``a``."""
    wa = subword_a(w)
    return wa + A_CLOSE * (wa.count(A_OPEN) - wa.count(A_CLOSE))


def to_walk(w: str) -> str:
    """Map letters to quadrant steps: a->N, A->S, b->E, B->W."""
    require_paren_shuffle(w)
    return "".join(_STEP_OF[c] for c in w)


def from_walk(walk: str) -> str:
    for i, s in enumerate(walk):
        if s not in _LETTER_OF:
            raise InvalidWalk(f"step {s!r} at position {i} is not one of N, S, E, W")
    x = y = 0
    for i, s in enumerate(walk):
        if s == "N":
            y += 1
        elif s == "S":
            y -= 1
        elif s == "E":
            x += 1
        else:
            x -= 1
        if x < 0 or y < 0:
            raise InvalidWalk(f"walk leaves the quadrant at step {i}")
    if x or y:
        raise InvalidWalk("walk does not return to the origin")
    return "".join(_LETTER_OF[s] for s in walk)


def _extend(prefix: list[str], da: int, db: int, remaining: int, closed: bool) -> Iterator[str]:
    if remaining == 0:
        if not closed or (da == 0 and db == 0):
            yield "".join(prefix)
        return
    for c in ALPHABET:
        na, nb = da, db
        if c == A_OPEN:
            na += 1
        elif c == A_CLOSE:
            na -= 1
        elif c == B_OPEN:
            nb += 1
        else:
            nb -= 1
        if na < 0 or nb < 0:
            continue
        if closed and na + nb > remaining - 1:
            continue
        prefix.append(c)
        yield from _extend(prefix, na, nb, remaining - 1, closed)
        prefix.pop()


def enumerate_paren_shuffles(n: int) -> Iterator[str]:
    """All parenthesis-shuffles of size ``n`` in lexicographic order a < A < b < B."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return _extend([], 0, 0, 2 * n, True)


def enumerate_prefix_shuffles(length: int) -> Iterator[str]:
    """All prefix-shuffles with exactly ``length`` letters, same order."""
    if length < 0:
        raise ValueError("length must be >= 0")
    return _extend([], 0, 0, length, False)


def count_by_binomial_sum(n: int) -> int:
    return sum(comb(2 * n, 2 * k) * catalan(k) * catalan(n - k) for k in range(n + 1))


def count_by_product(n: int) -> int:
    return catalan(n) * catalan(n + 1)


def count_paren_shuffles(n: int) -> int:
    """Number of parenthesis-shuffles of size n.

    Both closed forms are evaluated with Python's arbitrary-precision ints
    and must agree; a disagreement raises ``ArithmeticError``.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    s, p = count_by_binomial_sum(n), count_by_product(n)
    if s != p:
        raise ArithmeticError(f"binomial sum {s} != Cat(n)Cat(n+1) {p} at n={n}")
    return p


def read_words(lines) -> Iterator[str]:
    """One word per line; surrounding whitespace is dropped, an empty line is the empty word."""
    for line in lines:
        yield line.strip()
