"""Words in free groups.

A word is a tuple of ``(generator, exponent)`` syllables with exponent in
``{+1, -1}``.  Everything here is a plain function over tuples so words can be
hashed, compared and used as dictionary keys.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

Letter = tuple[str, int]
Word = tuple[Letter, ...]

EMPTY: Word = ()


def letter(name: str, exp: int = 1) -> Word:
    return ((name, exp),)


def word(*tokens: str) -> Word:
    """Build a word from tokens such as ``"a"`` or ``"a^-1"``."""
    return tuple(parse_token(tok) for tok in tokens)


def parse_token(tok: str) -> Letter:
    if tok.endswith("^-1"):
        name, exp = tok[:-3], -1
    elif tok.endswith("^1"):
        name, exp = tok[:-2], 1
    else:
        name, exp = tok, 1
    if not name or "^" in name:
        raise ValueError(f"bad word token {tok!r}")
    return (name, exp)


def parse_word(text: str) -> Word:
    return tuple(parse_token(tok) for tok in text.split())


def format_word(w: Word) -> str:
    return " ".join(g if e == 1 else f"{g}^-1" for g, e in w)


def inverse(w: Sequence[Letter]) -> Word:
    return tuple((g, -e) for g, e in reversed(w))


def free_reduce(w: Iterable[Letter]) -> Word:
    out: list[Letter] = []
    for g, e in w:
        if out and out[-1][0] == g and out[-1][1] == -e:
            out.pop()
        else:
            out.append((g, e))
    return tuple(out)


def concat(*words: Sequence[Letter]) -> Word:
    return free_reduce(x for w in words for x in w)


def power(w: Word, n: int) -> Word:
    if n < 0:
        return power(inverse(w), -n)
    return free_reduce(w * n)


def commutator(x: Word, y: Word) -> Word:
    """``x y x^-1 y^-1``."""
    return concat(x, y, inverse(x), inverse(y))


def cyclic_reduce(w: Sequence[Letter]) -> Word:
    w = free_reduce(w)
    i, j = 0, len(w)
    while j - i >= 2 and w[i][0] == w[j - 1][0] and w[i][1] == -w[j - 1][1]:
        i += 1
        j -= 1
    return w[i:j]


def cyclic_key(w: Sequence[Letter]) -> Word:
    """Canonical representative of the class of ``w`` under cyclic
    permutation and inversion, after cyclic reduction.

    Two relators with equal keys define the same normal closure.
    """
    w = cyclic_reduce(w)
    if not w:
        return EMPTY
    candidates = []
    for v in (w, inverse(w)):
        for i in range(len(v)):
            candidates.append(v[i:] + v[:i])
    return min(candidates)


def exponent_sum(w: Iterable[Letter], gen: str) -> int:
    return sum(e for g, e in w if g == gen)


def abelianize(w: Iterable[Letter]) -> dict[str, int]:
    vec: dict[str, int] = {}
    for g, e in w:
        vec[g] = vec.get(g, 0) + e
    return {g: n for g, n in vec.items() if n}


def support(w: Iterable[Letter]) -> frozenset[str]:
    return frozenset(g for g, _ in w)


def substitute(w: Iterable[Letter], images: Mapping[str, Word]) -> Word:
    """Apply a generator -> word map, leaving unmapped generators alone."""
    out: list[Letter] = []
    for g, e in w:
        img = images.get(g)
        if img is None:
            out.append((g, e))
        else:
            out.extend(img if e == 1 else inverse(img))
    return free_reduce(out)


def alternating(s: str, t: str, n: int) -> Word:
    """``s t s t ...`` with ``n`` letters."""
    return tuple((s if i % 2 == 0 else t, 1) for i in range(n))
